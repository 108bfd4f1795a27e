#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esakia/birkhoff.hpp"
#include "esakia/formula.hpp"

namespace esakia {

using NamedUpset = std::pair<std::string, Mask>;

struct GeneratedAlgebra {
  Poset base;
  std::vector<NamedUpset> generators;
  // Sorted by (cardinality, member list).
  std::vector<Mask> members;
  // Parallel to members: the stage at which each was first reached and a
  // witness term (least rank, then size, then printed form among the terms
  // built from the witnesses of its parts).
  std::vector<std::size_t> stage;
  std::vector<Formula> witness;
  // False when the rank cap stopped the closure before a fixpoint.
  bool saturated = true;

  std::optional<std::size_t> index_of(const Mask& u) const;
};

// Stage 0 is the lattice closure of the generators and the bounds; stage k+1
// adds all implications between stage-k members and closes under meet and
// join again. Stops at a fixpoint or after stage rank_cap.
GeneratedAlgebra generate_subalgebra(const Poset& base, const std::vector<NamedUpset>& gens,
                                     std::optional<std::size_t> rank_cap = std::nullopt,
                                     const Limits& lim = Limits::defaults());

struct GodelOracle {
  std::size_t count = 0;
  // (chain size, valuation) for every coordinate.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> components;
  // Every element as its coordinate tuple, sorted.
  std::vector<std::vector<std::uint8_t>> elements;
};

// The free Goedel algebra on n_vars generators, computed inside the product
// of all chains of size <= max_chain_size under all valuations.
GodelOracle godel_chain_oracle(std::size_t n_vars, std::size_t max_chain_size,
                               const Limits& lim = Limits::defaults());

// eval agrees on every valuation of the shared variables (at most three).
bool equivalent_on_frame(const Formula& a, const Formula& b, const Poset& p,
                         const Limits& lim = Limits::defaults());

}  // namespace esakia
