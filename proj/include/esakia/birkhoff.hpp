#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esakia/formula.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// All upsets of a finite poset, sorted by (cardinality, member list).
class UpsetLattice {
 public:
  UpsetLattice(Poset base, std::vector<Mask> sorted_members);

  const Poset& base() const { return base_; }
  const std::vector<Mask>& members() const& { return members_; }
  // By value on a temporary, so `for (auto& u : upsets(p).members())` is safe.
  std::vector<Mask> members() && { return std::move(members_); }
  std::size_t size() const { return members_.size(); }
  std::optional<std::size_t> index_of(const Mask& u) const;
  bool contains(const Mask& u) const { return index_of(u).has_value(); }

 private:
  Poset base_;
  std::vector<Mask> members_;
};

// Throws SizeLimitExceeded once the count passes lim.upsets.
UpsetLattice upsets(const Poset& p, const Limits& lim = Limits::defaults());

// P - down(U - V). Throws NotAnUpset.
Mask heyting_implication(const Poset& p, const Mask& u, const Mask& v);
Mask negation(const Poset& p, const Mask& u);
// X - down(X - S), for an arbitrary subset S.
Mask box(const Poset& p, const Mask& s);

// Closure of `seeds` together with the bounds under meet, join and
// implication. Throws SizeLimitExceeded past lim.algebra_members.
std::vector<Mask> heyting_closure(const Poset& p, const std::vector<Mask>& seeds,
                                  const Limits& lim = Limits::defaults());

// Join-irreducible members ordered by reverse inclusion; each is named after
// its least base element, so join_irreducibles(upsets(P)) == P up to order of
// listing.
Poset join_irreducibles(const UpsetLattice& l);

class Valuation {
 public:
  // Throws NotAnUpset.
  Valuation(Poset frame, std::map<std::string, Mask> assign);
  const Poset& frame() const { return frame_; }
  const std::map<std::string, Mask>& assign() const { return assign_; }

 private:
  Poset frame_;
  std::map<std::string, Mask> assign_;
};

// Throws UnboundVariable.
Mask eval(const Formula& f, const Valuation& v);
// Throws SizeLimitExceeded when |upsets|^vars passes lim.valuations or the
// formula has more than three variables.
bool validates(const Poset& p, const Formula& f, const Limits& lim = Limits::defaults());

// Calls `visit` with every valuation of `vars` on `p`, stopping early when it
// returns false. Returns false iff stopped early.
template <class Visit>
bool for_each_valuation(const UpsetLattice& l, const std::vector<std::string>& vars, Visit&& visit);

}  // namespace esakia

#include "esakia/detail/valuations.hpp"
