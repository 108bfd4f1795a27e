#include "open_search.hpp"

#include <algorithm>

namespace esakia::detail {

OpenUniverse universe_of(const GContext& ctx) {
  const Poset& p = ctx.base();
  OpenUniverse u;
  u.up.reserve(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) u.up.push_back(p.up(s));
  for (const auto& g : ctx.witnesses()) {
    u.value.push_back(g.assignment());
    std::vector<Mask> need;
    need.reserve(p.size());
    for (std::size_t s = 0; s < p.size(); ++s) need.push_back(g.image(p.up(s)));
    u.need.push_back(std::move(need));
    u.range.push_back(g.codomain().size());
  }
  return u;
}

bool obligation_met(const OpenUniverse& u, const Mask& s, std::size_t y) {
  for (std::size_t w = 0; w < u.value.size(); ++w) {
    const auto& val = u.value[w];
    Mask covered(u.range[w]);
    covered.set(val[y]);
    const Mask& up = u.up[y];
    for (auto t = up.find_first(); t != Mask::npos; t = up.find_next(t)) {
      if (s.test(t)) covered.set(val[t]);
    }
    if (covered != u.need[w][y]) return false;
  }
  return true;
}

void OpenSearch::run(std::size_t r, const Mask& allowed, std::vector<Mask>& out, std::size_t stop_at) {
  // Decide the cone top-down so an element's obligation only involves
  // members already fixed.
  cone_ = members(u_.up[r] & allowed);
  cone_.erase(std::find(cone_.begin(), cone_.end(), r));
  std::stable_sort(cone_.begin(), cone_.end(),
                   [&](std::size_t a, std::size_t b) { return u_.up[a].count() < u_.up[b].count(); });
  root_ = r;
  chosen_ = {r};
  set_ = Mask(u_.size());
  set_.set(r);
  out_ = &out;
  stop_at_ = stop_at;
  alive_.assign(u_.value.size(), {});
  for (std::size_t w = 0; w < u_.value.size(); ++w) {
    alive_[w].assign(u_.range[w], 0);
    ++alive_[w][u_.value[w][r]];
    for (auto t : cone_) ++alive_[w][u_.value[w][t]];
  }
  if (out.size() < stop_at_) descend(0);
}

void OpenSearch::descend(std::size_t k) {
  if (++nodes_ > lim_.enumeration)
    throw SizeLimitExceeded("step enumeration passed " + std::to_string(lim_.enumeration) + " search nodes");
  if (k == cone_.size()) {
    if (!obligation_met(u_, set_, root_)) return;
    if (filter_.accept && !filter_.accept(set_)) return;
    if (out_->size() >= lim_.layer_elements)
      throw SizeLimitExceeded("layer passed " + std::to_string(lim_.layer_elements) + " elements");
    out_->push_back(set_);
    return;
  }
  std::size_t y = cone_[k];
  // Leaving y out is hopeless once the root can no longer reach some value.
  bool viable = true;
  for (std::size_t w = 0; w < u_.value.size(); ++w) {
    std::size_t v = u_.value[w][y];
    if (--alive_[w][v] == 0 && u_.need[w][root_].test(v)) viable = false;
  }
  if (viable) descend(k + 1);
  for (std::size_t w = 0; w < u_.value.size(); ++w) ++alive_[w][u_.value[w][y]];
  if (out_->size() >= stop_at_) return;
  if (filter_.compatible) {
    for (auto t : chosen_) {
      if (!filter_.compatible(t, y)) return;
    }
  }
  if (!obligation_met(u_, set_, y)) return;
  if (filter_.admit) {
    Mask above = set_ & u_.up[y];
    above.set(y);
    if (!filter_.admit(y, above)) return;
  }
  set_.set(y);
  chosen_.push_back(y);
  descend(k + 1);
  chosen_.pop_back();
  set_.reset(y);
}

}  // namespace esakia::detail
