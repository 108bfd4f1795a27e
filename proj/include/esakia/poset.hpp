#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esakia/errors.hpp"
#include "esakia/limits.hpp"

namespace esakia {

using Mask = boost::dynamic_bitset<std::uint64_t>;

Mask make_mask(std::size_t n, const std::vector<std::size_t>& members);
std::vector<std::size_t> members(const Mask& m);
// Compares the ascending member lists of two masks of equal cardinality first
// by size, then lexicographically.
bool canonical_less(const Mask& a, const Mask& b);
// Hex rendering, most significant nibble first, no leading zeros ("0" if empty).
std::string mask_hex(const Mask& m);

// A finite partial order. Values are immutable and share their storage, so
// copies are cheap.
class Poset {
 public:
  Poset();

  // Builds the reflexive-transitive closure of `leq` (pairs a <= b). Throws
  // InvalidPoset on duplicate names or an antisymmetry violation.
  static Poset from_relation(std::vector<std::string> names,
                             const std::vector<std::pair<std::size_t, std::size_t>>& leq);
  // `up[i]` must already be the full principal upset of element i.
  static Poset from_up_sets(std::vector<std::string> names, std::vector<Mask> up);
  // Same without the O(n^3) order verification; for constructions that are
  // orders by definition (inclusion orders, products).
  static Poset from_up_sets_unchecked(std::vector<std::string> names, std::vector<Mask> up);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::string& name(std::size_t i) const;
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownElement.
  std::size_t index_of(std::string_view name) const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const Mask& m) const;

  bool leq(std::size_t a, std::size_t b) const;
  const Mask& up(std::size_t i) const;
  const Mask& down(std::size_t i) const;

  Mask none() const;
  Mask all() const;
  Mask up_closure(const Mask& s) const;
  Mask down_closure(const Mask& s) const;
  bool is_upset(const Mask& s) const;
  bool is_downset(const Mask& s) const;
  // Least element of `s`, if it has one.
  std::optional<std::size_t> root_of(const Mask& s) const;

  friend bool operator==(const Poset& a, const Poset& b);

 private:
  struct Data;
  explicit Poset(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

Poset chain(std::size_t n);
Poset antichain(std::size_t n);
Poset singleton();
Poset induced(const Poset& p, const Mask& s);
// All posets on n points up to isomorphism, elements named "0".."n-1" along a
// linear extension.
std::vector<Poset> all_posets(std::size_t n);

class MonotoneMap {
 public:
  // Throws NotMonotone.
  MonotoneMap(Poset domain, Poset codomain, std::vector<std::size_t> assignment);

  const Poset& domain() const { return dom_; }
  const Poset& codomain() const { return cod_; }
  const std::vector<std::size_t>& assignment() const { return a_; }
  std::size_t operator()(std::size_t i) const { return a_[i]; }

  Mask image(const Mask& s) const;
  Mask preimage(const Mask& s) const;
  bool is_surjective() const;
  bool is_injective() const;

 private:
  Poset dom_;
  Poset cod_;
  std::vector<std::size_t> a_;
};

MonotoneMap identity(const Poset& p);
MonotoneMap terminal_map(const Poset& p);
// g after f. Throws IncompatibleMaps.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
// Every monotone map between two small posets, in lexicographic order of
// assignments.
std::vector<MonotoneMap> all_monotone_maps(const Poset& dom, const Poset& cod);

bool is_p_morphism(const MonotoneMap& f);
bool is_order_embedding(const MonotoneMap& f);

struct ProductResult {
  Poset poset;
  MonotoneMap first;
  MonotoneMap second;
};

// Element (p,q) sits at index p*|Q|+q.
ProductResult product(const Poset& p, const Poset& q, const Limits& lim = Limits::defaults());
// Elements of P come first, tagged "inl(..)", then those of Q tagged "inr(..)".
Poset disjoint_union(const Poset& p, const Poset& q);
// {(x,y) : f(x)=g(y)}, in the index order inherited from the product.
ProductResult pullback(const MonotoneMap& f, const MonotoneMap& g,
                       const Limits& lim = Limits::defaults());

struct FreeDl {
  Poset poset;
  std::vector<Mask> generators;
};
// 2^n; element names are bit strings whose i-th character is v(i).
FreeDl free_dl_dual(std::size_t n, const Limits& lim = Limits::defaults());

bool is_prelinear(const Poset& p);
bool is_directed(const Poset& p);
bool is_antichain(const Poset& p);
Mask max_elements(const Poset& p);
Mask min_elements(const Poset& p);

struct IsoWitness {
  MonotoneMap forward;
  MonotoneMap backward;
};

// Lexicographically least isomorphism P -> Q, if any. Throws SizeLimitExceeded
// above lim.iso_elements.
std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q,
                                        const Limits& lim = Limits::defaults());
// Checks a candidate bijection; returns the witness when it is an isomorphism.
std::optional<IsoWitness> check_isomorphism(const Poset& p, const Poset& q,
                                            const std::vector<std::size_t>& forward);

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& p);
// Length of the longest chain below each element (minimal elements are 0).
std::vector<std::size_t> levels(const Poset& p);

}  // namespace esakia
