#pragma once

// Shared search for rooted open subsets, used by full steps and by the
// on-demand cone computations.

#include <vector>

#include "esakia/vietoris.hpp"

namespace esakia::detail {

// Candidate members 0..n-1 with what the openness test needs. `up[s]` is the
// up-set of s inside the universe; `need[w][s]` is the set of w-values over
// the true up-set of s (which may be larger if the universe is truncated).
struct OpenUniverse {
  std::vector<Mask> up;
  std::vector<std::vector<std::size_t>> value;
  std::vector<std::vector<Mask>> need;
  std::vector<std::size_t> range;

  std::size_t size() const { return up.size(); }
};

OpenUniverse universe_of(const GContext& ctx);

// y's condition against the members of s above it, counting y as a member.
bool obligation_met(const OpenUniverse& u, const Mask& s, std::size_t y);

class OpenSearch {
 public:
  OpenSearch(const OpenUniverse& u, const StepFilter& filter, const Limits& lim, std::size_t& nodes)
      : u_(u), filter_(filter), lim_(lim), nodes_(nodes) {}

  // Appends every open subset of `allowed` with least element r, stopping
  // once `out` holds `stop_at` sets.
  void run(std::size_t r, const Mask& allowed, std::vector<Mask>& out,
           std::size_t stop_at = static_cast<std::size_t>(-1));

 private:
  void descend(std::size_t k);

  const OpenUniverse& u_;
  const StepFilter& filter_;
  const Limits& lim_;
  std::size_t& nodes_;
  std::vector<std::size_t> cone_;
  std::vector<std::size_t> chosen_;
  std::size_t root_ = 0;
  std::size_t stop_at_ = 0;
  // Per witness and value: cone members not yet excluded.
  std::vector<std::vector<std::size_t>> alive_;
  Mask set_;
  std::vector<Mask>* out_ = nullptr;
};

}  // namespace esakia::detail
