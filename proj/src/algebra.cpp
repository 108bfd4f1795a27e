#include "esakia/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace esakia {

std::optional<std::size_t> GeneratedAlgebra::index_of(const Mask& u) const {
  auto it = std::lower_bound(members.begin(), members.end(), u, canonical_less);
  if (it == members.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

struct Candidate {
  std::size_t size;
  std::string text;
  Mask mask;
  Formula formula;
};

struct LaterFirst {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.size != b.size) return a.size > b.size;
    return a.text > b.text;
  }
};

class Closure {
 public:
  Closure(const Poset& base, const Limits& lim) : base_(base), lim_(lim) {}

  void offer(const Mask& m, const Formula& f) {
    if (index_.count(m)) return;
    queue_.push({formula_size(f), print(f), m, f});
  }

  // Settles queued candidates in (size, text) order, closing under meet and
  // join with everything settled so far.
  std::size_t settle(std::size_t stage) {
    std::size_t added = 0;
    while (!queue_.empty()) {
      Candidate c = queue_.top();
      queue_.pop();
      if (index_.count(c.mask)) continue;
      if (masks_.size() >= lim_.algebra_members)
        throw SizeLimitExceeded("generated algebra passed " + std::to_string(lim_.algebra_members) + " members");
      index_.emplace(c.mask, masks_.size());
      masks_.push_back(c.mask);
      formulas_.push_back(c.formula);
      stages_.push_back(stage);
      ++added;
      std::size_t self = masks_.size() - 1;
      for (std::size_t j = 0; j <= self; ++j) {
        const Mask& a = masks_[self];
        const Mask& b = masks_[j];
        Mask meet = a & b, join = a | b;
        offer(meet, Formula::conj(formulas_[self], formulas_[j]));
        offer(meet, Formula::conj(formulas_[j], formulas_[self]));
        offer(join, Formula::disj(formulas_[self], formulas_[j]));
        offer(join, Formula::disj(formulas_[j], formulas_[self]));
      }
    }
    return added;
  }

  // Queues every implication between currently settled members; returns
  // whether any of them is new.
  bool offer_implications() {
    std::size_t n = masks_.size();
    bool fresh = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Mask m = ~base_.down_closure(masks_[i] - masks_[j]);
        if (index_.count(m)) continue;
        fresh = true;
        offer(m, Formula::implies(formulas_[i], formulas_[j]));
      }
    }
    return fresh;
  }

  GeneratedAlgebra finish(std::vector<NamedUpset> gens, bool saturated) {
    std::vector<std::size_t> order(masks_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(masks_[a], masks_[b]); });
    GeneratedAlgebra out{base_, std::move(gens), {}, {}, {}, saturated};
    for (auto i : order) {
      out.members.push_back(masks_[i]);
      out.stage.push_back(stages_[i]);
      out.witness.push_back(formulas_[i]);
    }
    return out;
  }

 private:
  const Poset& base_;
  const Limits& lim_;
  std::priority_queue<Candidate, std::vector<Candidate>, LaterFirst> queue_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<Mask> masks_;
  std::vector<Formula> formulas_;
  std::vector<std::size_t> stages_;
};

}  // namespace

GeneratedAlgebra generate_subalgebra(const Poset& base, const std::vector<NamedUpset>& gens,
                                     std::optional<std::size_t> rank_cap, const Limits& lim) {
  for (const auto& [name, m] : gens) {
    if (m.size() != base.size() || !base.is_upset(m))
      throw NotAnUpset("generator '" + name + "' is not an upset");
  }
  Closure c(base, lim);
  c.offer(base.none(), Formula::bottom());
  c.offer(base.all(), Formula::top());
  for (const auto& [name, m] : gens) c.offer(m, Formula::var(name));
  c.settle(0);
  std::size_t stage = 0;
  bool saturated = true;
  for (;;) {
    if (rank_cap && stage >= *rank_cap) {
      saturated = !c.offer_implications();
      break;
    }
    if (!c.offer_implications()) break;
    ++stage;
    c.settle(stage);
  }
  return c.finish(gens, saturated);
}

GodelOracle godel_chain_oracle(std::size_t n_vars, std::size_t max_chain_size, const Limits& lim) {
  GodelOracle out;
  for (std::size_t k = 1; k <= max_chain_size; ++k) {
    std::vector<std::size_t> v(n_vars, 0);
    for (;;) {
      out.components.emplace_back(k, v);
      std::size_t i = 0;
      while (i < n_vars && ++v[i] == k) v[i++] = 0;
      if (i == n_vars) break;
    }
  }
  std::size_t m = out.components.size();
  if (m > 255 * 255) throw SizeLimitExceeded("too many chain components");
  auto top_of = [&](std::size_t c) { return static_cast<char>(out.components[c].first - 1); };

  // Tuples are stored as byte strings so they hash directly.
  std::vector<std::string> items;
  std::unordered_set<std::string> seen;
  auto add = [&](std::string t) {
    if (seen.insert(t).second) {
      if (items.size() >= lim.algebra_members)
        throw SizeLimitExceeded("oracle algebra passed " + std::to_string(lim.algebra_members) + " elements");
      items.push_back(std::move(t));
    }
  };
  add(std::string(m, '\0'));
  {
    std::string top(m, '\0');
    for (std::size_t c = 0; c < m; ++c) top[c] = top_of(c);
    add(top);
  }
  for (std::size_t i = 0; i < n_vars; ++i) {
    std::string g(m, '\0');
    for (std::size_t c = 0; c < m; ++c) g[c] = static_cast<char>(out.components[c].second[i]);
    add(g);
  }
  std::size_t done = 0;
  while (done < items.size()) {
    std::size_t end = items.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = std::max(done, i); j < end; ++j) {
        const std::string a = items[i], b = items[j];
        std::string lo(m, '\0'), hi(m, '\0'), ab(m, '\0'), ba(m, '\0');
        for (std::size_t c = 0; c < m; ++c) {
          lo[c] = std::min(a[c], b[c]);
          hi[c] = std::max(a[c], b[c]);
          ab[c] = a[c] <= b[c] ? top_of(c) : b[c];
          ba[c] = b[c] <= a[c] ? top_of(c) : a[c];
        }
        add(std::move(lo));
        add(std::move(hi));
        add(std::move(ab));
        add(std::move(ba));
      }
    }
    done = end;
  }
  std::sort(items.begin(), items.end());
  out.count = items.size();
  for (const auto& t : items) out.elements.emplace_back(t.begin(), t.end());
  return out;
}

bool equivalent_on_frame(const Formula& a, const Formula& b, const Poset& p, const Limits& lim) {
  auto va = variables(a);
  auto vb = variables(b);
  va.insert(vb.begin(), vb.end());
  if (va.size() > 3) throw SizeLimitExceeded("equivalence checks are limited to three variables");
  UpsetLattice l = upsets(p, lim);
  double count = 1;
  for (std::size_t i = 0; i < va.size(); ++i) count *= static_cast<double>(l.size());
  if (count > static_cast<double>(lim.valuations)) throw SizeLimitExceeded("too many valuations");
  std::vector<std::string> names(va.begin(), va.end());
  return for_each_valuation(l, names, [&](const Valuation& v) { return eval(a, v) == eval(b, v); });
}

}  // namespace esakia
