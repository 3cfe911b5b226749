#pragma once

// Divisibility posets on the simples, brute-force meet/join oracles, the
// recursive meet formula through the strata, the odd Fibonacci order ideal,
// and the complement maps.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/simples.hpp"

namespace fiblat {

enum class Side { left, right };

struct FinitePoset {
  std::vector<Simple> elements;           // index-aligned with the source SimplesSet
  std::vector<detail::Bitset> below;      // below[x] = { z : z <= x }
  std::vector<detail::Bitset> above;      // above[x] = { z : x <= z }
  std::vector<std::pair<int, int>> hasse;  // cover pairs (a, b) with a covered by b, sorted

  int size() const { return static_cast<int>(elements.size()); }

  bool less_eq(int x, int y) const { return below[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x)); }

  long long lambda_of(int e) const {
    long long s = 0;
    for (Letter x : elements[static_cast<std::size_t>(e)].repr) s += x;
    return s;
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> transitive_reduction(std::vector<Bitset> const& below,
                                                             std::vector<Bitset> const& above) {
  std::size_t const count = below.size();
  std::vector<std::pair<int, int>> hasse;
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (x == y || !below[y].test(x)) continue;
      // x < y covers iff the interval [x, y] is exactly {x, y}.
      if ((above[x] & below[y]).count() == 2) hasse.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  std::sort(hasse.begin(), hasse.end());
  return hasse;
}

}  // namespace detail

inline FinitePoset build_poset(SimplesSet const& s, Side side) {
  FinitePoset p;
  p.elements = s.elements;
  std::size_t const count = s.elements.size();
  p.below = (side == Side::left) ? s.left_div : s.right_div;
  p.above.assign(count, detail::Bitset(count));
  for (std::size_t y = 0; y < count; ++y) {
    p.below[y].for_each([&](std::size_t x) { p.above[x].set(y); });
  }
  p.hasse = detail::transitive_reduction(p.below, p.above);
  return p;
}

namespace detail {

// Unique maximum of a set of poset elements, located as the unique
// lambda-maximal member that dominates the whole set. The length function
// grades the order (divisibility strictly increases lambda), so a maximum, if
// one exists, is the unique lambda-heaviest member.
inline int unique_maximum(FinitePoset const& p, Bitset const& set, char const* what) {
  int best = -1, ties = 0;
  long long best_lam = -1;
  set.for_each([&](std::size_t z) {
    long long const lam = p.lambda_of(static_cast<int>(z));
    if (lam > best_lam) {
      best_lam = lam;
      best = static_cast<int>(z);
      ties = 1;
    } else if (lam == best_lam) {
      ++ties;
    }
  });
  if (best < 0 || ties != 1 || !set.is_subset_of(p.below[static_cast<std::size_t>(best)])) {
    throw LatticeViolationError(std::string(what) + ": no unique maximum among the candidates");
  }
  return best;
}

inline int unique_minimum(FinitePoset const& p, Bitset const& set, char const* what) {
  int best = -1, ties = 0;
  long long best_lam = -1;
  set.for_each([&](std::size_t z) {
    long long const lam = p.lambda_of(static_cast<int>(z));
    if (best < 0 || lam < best_lam) {
      best_lam = lam;
      best = static_cast<int>(z);
      ties = 1;
    } else if (lam == best_lam) {
      ++ties;
    }
  });
  if (best < 0 || ties != 1 || !set.is_subset_of(p.above[static_cast<std::size_t>(best)])) {
    throw LatticeViolationError(std::string(what) + ": no unique minimum among the candidates");
  }
  return best;
}

}  // namespace detail

// Unique maximum of the common lower bounds. Raising LatticeViolationError on
// Div(Delta_n) would falsify the lattice theorem.
inline int meet_oracle(FinitePoset const& p, int x, int y) {
  detail::Bitset lower = p.below[static_cast<std::size_t>(x)];
  lower &= p.below[static_cast<std::size_t>(y)];
  return detail::unique_maximum(p, lower, "meet");
}

inline int join_oracle(FinitePoset const& p, int x, int y) {
  detail::Bitset upper = p.above[static_cast<std::size_t>(x)];
  upper &= p.above[static_cast<std::size_t>(y)];
  return detail::unique_minimum(p, upper, "join");
}

// The recursive meet formula: with i = d(x) <= j = d(y),
//   x /\ y = x /\_i ( \/_i { z in D_n^i : z <= y } ),
// where /\_i, \/_i are taken in the induced subposet on the stratum D_n^i.
// Must agree with meet_oracle on every pair; `left` is a left-divisibility
// poset.
inline int meet_formula(FinitePoset const& left, int x, int y) {
  if (x < 0 || y < 0 || x >= left.size() || y >= left.size()) {
    throw DomainError("meet operands out of range");
  }
  int i = left.elements[static_cast<std::size_t>(x)].dvalue;
  int const j = left.elements[static_cast<std::size_t>(y)].dvalue;
  if (i > j) {
    std::swap(x, y);
    i = j;
  }
  std::size_t const count = left.elements.size();
  detail::Bitset stratum(count);
  for (std::size_t e = 0; e < count; ++e) {
    if (left.elements[e].dvalue == i) stratum.set(e);
  }

  // Z = { z in D_n^i : z <= y }, never empty: rho_n^i (identity when i = 0)
  // lies in it.
  detail::Bitset z_set = stratum;
  z_set &= left.below[static_cast<std::size_t>(y)];

  // g = \/_i Z: unique minimum of the common upper bounds within the stratum.
  detail::Bitset upper = stratum;
  z_set.for_each([&](std::size_t z) { upper &= left.above[z]; });
  int const g = detail::unique_minimum(left, upper, "stratum join");

  // x /\_i g: unique maximum of the common lower bounds within the stratum.
  detail::Bitset lower = stratum;
  lower &= left.below[static_cast<std::size_t>(x)];
  lower &= left.below[static_cast<std::size_t>(g)];
  return detail::unique_maximum(left, lower, "stratum meet");
}

// Induced subposet on a sorted index subset (indices refer to p; the result
// is reindexed in the same order).
inline FinitePoset induced_subposet(FinitePoset const& p, std::vector<int> const& keep) {
  FinitePoset q;
  std::size_t const count = keep.size();
  q.elements.reserve(count);
  for (int e : keep) q.elements.push_back(p.elements[static_cast<std::size_t>(e)]);
  q.below.assign(count, detail::Bitset(count));
  q.above.assign(count, detail::Bitset(count));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (p.less_eq(keep[a], keep[b])) {
        q.below[b].set(a);
        q.above[a].set(b);
      }
    }
  }
  q.hasse = detail::transitive_reduction(q.below, q.above);
  return q;
}

// Indices of the odd Fibonacci ideal { x : x <=_L rho_n^n }, cross-checked
// against the equivalent characterization { x : rho_n x is simple }.
inline std::vector<int> odd_ideal_indices(SimplesSet const& s, FinitePoset const& left) {
  int const n = s.context.n;
  int const top = n == 0 ? s.index_of(Word{}) : s.rho_power_index(n);
  std::vector<int> by_divisibility;
  for (int e = 0; e < s.size(); ++e) {
    if (left.less_eq(e, top)) by_divisibility.push_back(e);
  }
  if (n > 0) {
    std::vector<int> by_multiplication;
    for (int e = 0; e < s.size(); ++e) {
      Word w{n};
      Word const& r = s.elements[static_cast<std::size_t>(e)].repr;
      w.insert(w.end(), r.begin(), r.end());
      if (s.find(w) >= 0) by_multiplication.push_back(e);
    }
    if (by_multiplication != by_divisibility) {
      throw Error("internal: the two characterizations of the odd ideal disagree");
    }
  }
  return by_divisibility;
}

inline FinitePoset odd_ideal(SimplesSet const& s, FinitePoset const& left) {
  return induced_subposet(left, odd_ideal_indices(s, left));
}

// The unique simple y with x y = Delta_n, found as the tail of a Delta-word
// that literally extends the canonical word of x.
inline int complement_delta(SimplesSet const& s, int x) {
  Word const& cx = s.elements[static_cast<std::size_t>(x)].repr;
  for (Word const& w : s.words_of(s.delta_index())) {
    if (w.size() >= cx.size() && std::equal(cx.begin(), cx.end(), w.begin())) {
      Word suffix(w.begin() + static_cast<std::ptrdiff_t>(cx.size()), w.end());
      return s.index_of(suffix);
    }
  }
  throw Error("internal: no Delta-word extends a word for a simple");
}

// The unique xbar with xbar x = rho_n^n, defined for right divisors x of
// rho_n^n; x |-> xbar anti-isomorphically maps them onto the odd ideal.
inline int complement_odd(SimplesSet const& s, int x) {
  int const n = s.context.n;
  Word const& cx = s.elements[static_cast<std::size_t>(x)].repr;
  int const top = n == 0 ? s.index_of(Word{}) : s.rho_power_index(n);
  for (Word const& w : s.words_of(top)) {
    if (w.size() >= cx.size() && std::equal(cx.rbegin(), cx.rend(), w.rbegin())) {
      Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() - cx.size()));
      return s.index_of(prefix);
    }
  }
  throw DomainError("\"" + to_string(cx) + "\" does not right-divide rho_n^n");
}

}  // namespace fiblat
