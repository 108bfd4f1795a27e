#pragma once

// Brute-force reference implementations. They use nothing from the library
// beyond Poset::leq and MonotoneMap application, so they can check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "esakia/poset.hpp"

namespace oracle {

using esakia::MonotoneMap;
using esakia::Poset;
using Set = std::set<std::size_t>;

inline std::vector<Set> all_subsets(std::size_t n) {
  std::vector<Set> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Set s;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> i & 1) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

inline bool is_upset(const Poset& p, const Set& s) {
  for (auto a : s) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && !s.count(b)) return false;
    }
  }
  return true;
}

inline std::vector<Set> upsets(const Poset& p) {
  std::vector<Set> out;
  for (auto& s : all_subsets(p.size())) {
    if (is_upset(p, s)) out.push_back(s);
  }
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  for (auto x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

// Largest upset W with W & U inside V.
inline Set implication(const Poset& p, const Set& u, const Set& v) {
  Set out;
  for (auto& w : oracle::upsets(p)) {
    if (subset(meet(w, u), v)) out.insert(w.begin(), w.end());
  }
  return out;
}

inline Set to_set(const esakia::Mask& m) {
  Set s;
  for (auto i = m.find_first(); i != esakia::Mask::npos; i = m.find_next(i)) s.insert(i);
  return s;
}

inline esakia::Mask to_mask(std::size_t n, const Set& s) {
  esakia::Mask m(n);
  for (auto i : s) m.set(i);
  return m;
}

inline bool is_p_morphism(const MonotoneMap& f) {
  const Poset& x = f.domain();
  const Poset& y = f.codomain();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (!y.leq(f(a), b)) continue;
      bool found = false;
      for (std::size_t a2 = 0; a2 < x.size() && !found; ++a2) found = x.leq(a, a2) && f(a2) == b;
      if (!found) return false;
    }
  }
  return true;
}

// f(a) <= b implies g(f(a')) = g(b) for some a' >= a.
inline bool is_g_open_map(const MonotoneMap& f, const MonotoneMap& g) {
  const Poset& x = f.domain();
  const Poset& y = f.codomain();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (!y.leq(f(a), b)) continue;
      bool found = false;
      for (std::size_t a2 = 0; a2 < x.size() && !found; ++a2) found = x.leq(a, a2) && g(f(a2)) == g(b);
      if (!found) return false;
    }
  }
  return true;
}

inline bool rooted(const Poset& p, const Set& s) {
  for (auto r : s) {
    if (std::all_of(s.begin(), s.end(), [&](std::size_t t) { return p.leq(r, t); })) return true;
  }
  return false;
}

// Every s in S and b >= s have some s' in S above s with g(s') = g(b).
inline bool g_open(const Poset& p, const std::vector<MonotoneMap>& gs, const Set& s) {
  for (const auto& g : gs) {
    for (auto a : s) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (!p.leq(a, b)) continue;
        bool found = false;
        for (auto a2 : s) found = found || (p.leq(a, a2) && g(a2) == g(b));
        if (!found) return false;
      }
    }
  }
  return true;
}

// All nonempty rooted g-open subsets.
inline std::vector<Set> step(const Poset& p, const std::vector<MonotoneMap>& gs) {
  std::vector<Set> out;
  for (auto& s : all_subsets(p.size())) {
    if (!s.empty() && rooted(p, s) && g_open(p, gs, s)) out.push_back(s);
  }
  return out;
}

// Number of non-isomorphic posets on n points.
inline std::size_t poset_count(std::size_t n) {
  static const std::size_t counts[] = {1, 1, 2, 5, 16, 63};
  return counts[n];
}

}  // namespace oracle
