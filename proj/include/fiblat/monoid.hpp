#pragma once

// Words over the generators rho_1..rho_n of the monoid M_n presented by
//
//   rho_1 rho_n rho_i = rho_{i+1} rho_n   (1 <= i <= n-1),
//
// with the additive length function lambda(rho_i) = i and Garside element
// Delta_n = rho_n^{n+1}. Both sides of the relation have equal lambda, so
// every equivalence class of words is finite and the word problem is solved
// by breadth-first closure under the relation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "fiblat/errors.hpp"

namespace fiblat {

using Letter = int;
using Word = std::vector<Letter>;  // 1-based generator indices; empty = identity

inline constexpr std::size_t kDefaultClassCap = 1'000'000;
inline constexpr int kDefaultRankCap = 8;

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Letter x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Order used for canonical representatives: letter count, then lexicographic.
inline bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct MonoidContext {
  int n;  // rank; n = 0 is the trivial monoid

  explicit MonoidContext(int rank) : n(rank) {
    if (rank < 0) {
      throw DomainError("monoid rank must be nonnegative, got " + std::to_string(rank));
    }
  }

  // Delta_n = rho_n^{n+1}; the empty word for the trivial monoid.
  Word delta_word() const {
    return n == 0 ? Word{} : Word(static_cast<std::size_t>(n) + 1, n);
  }

  // rho_n^k as a literal word.
  Word rho_power(int k) const {
    if (k < 0 || (n == 0 && k > 0)) {
      throw DomainError("no power rho_n^" + std::to_string(k) + " in M_" + std::to_string(n));
    }
    return Word(static_cast<std::size_t>(k), n);
  }
};

inline void validate_word(MonoidContext const& ctx, Word const& w) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] < 1 || w[p] > ctx.n) {
      throw InvalidWordError("letter " + std::to_string(w[p]) + " at position " +
                             std::to_string(p) + " is outside {1.." + std::to_string(ctx.n) +
                             "}");
    }
  }
}

// Sum of letters. Invariant under the defining relation.
inline long long lambda_weight(MonoidContext const& ctx, Word const& w) {
  validate_word(ctx, w);
  long long s = 0;
  for (Letter x : w) s += x;
  return s;
}

enum class MoveKind { contract, expand };

// One applicable instance of the defining relation inside a word. A contract
// at p rewrites letters[p..p+2] = (1, n, i) to (i+1, n); an expand at p
// rewrites letters[p..p+1] = (i+1, n) back to (1, n, i).
struct RelationSite {
  std::size_t position = 0;
  MoveKind direction = MoveKind::contract;
  int parameter = 0;  // the i of the relation, 1 <= i <= n-1

  friend bool operator==(RelationSite const&, RelationSite const&) = default;
};

// Every applicable site, ordered by position (contract before expand; the two
// cannot share a position since they need letters[p] = 1 and >= 2).
inline std::vector<RelationSite> relation_sites(MonoidContext const& ctx, Word const& w) {
  validate_word(ctx, w);
  std::vector<RelationSite> sites;
  int const n = ctx.n;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p + 2 < w.size() && w[p] == 1 && w[p + 1] == n && w[p + 2] <= n - 1) {
      sites.push_back({p, MoveKind::contract, w[p + 2]});
    }
    if (p + 1 < w.size() && w[p + 1] == n && w[p] >= 2) {
      sites.push_back({p, MoveKind::expand, w[p] - 1});
    }
  }
  return sites;
}

inline Word apply_site(MonoidContext const& ctx, Word const& w, RelationSite const& s) {
  validate_word(ctx, w);
  int const n = ctx.n;
  std::size_t const p = s.position;
  if (s.parameter < 1 || s.parameter > n - 1) {
    throw InvalidSiteError("relation parameter " + std::to_string(s.parameter) +
                           " is outside {1.." + std::to_string(n - 1) + "}");
  }
  Word out;
  out.reserve(w.size() + 1);
  if (s.direction == MoveKind::contract) {
    if (!(p + 2 < w.size() && w[p] == 1 && w[p + 1] == n && w[p + 2] == s.parameter)) {
      throw InvalidSiteError("no contractible pattern (1," + std::to_string(n) + "," +
                             std::to_string(s.parameter) + ") at position " + std::to_string(p));
    }
    out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    out.push_back(s.parameter + 1);
    out.push_back(n);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 3, w.end());
  } else {
    if (!(p + 1 < w.size() && w[p] == s.parameter + 1 && w[p + 1] == n)) {
      throw InvalidSiteError("no expandable pattern (" + std::to_string(s.parameter + 1) + "," +
                             std::to_string(n) + ") at position " + std::to_string(p));
    }
    out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    out.push_back(1);
    out.push_back(n);
    out.push_back(s.parameter);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
  }
  return out;
}

// All words reachable from w by relation steps in either direction, sorted
// shortlex. Finite because lambda is preserved and bounds the letter count.
inline std::vector<Word> equivalence_class(MonoidContext const& ctx, Word const& w,
                                           std::size_t cap = kDefaultClassCap) {
  validate_word(ctx, w);
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (RelationSite const& s : relation_sites(ctx, u)) {
      Word v = apply_site(ctx, u, s);
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          throw ResourceLimitError("equivalence class exceeds the cap of " + std::to_string(cap) +
                                   " words");
        }
        queue.push_back(std::move(v));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// Decides u = v in M_n by closure from u with early exit.
inline bool equal_words(MonoidContext const& ctx, Word const& u, Word const& v,
                        std::size_t cap = kDefaultClassCap) {
  if (lambda_weight(ctx, u) != lambda_weight(ctx, v)) return false;
  if (u == v) return true;
  std::unordered_set<Word, WordHash> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word x = std::move(queue.front());
    queue.pop_front();
    for (RelationSite const& s : relation_sites(ctx, x)) {
      Word y = apply_site(ctx, x, s);
      if (y == v) return true;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw ResourceLimitError("equivalence class exceeds the cap of " + std::to_string(cap) +
                                   " words");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return false;
}

// Shortlex-least word of the class; canonical(u) = canonical(v) iff u = v in M_n.
inline Word canonical(MonoidContext const& ctx, Word const& w,
                      std::size_t cap = kDefaultClassCap) {
  validate_word(ctx, w);
  Word best = w;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (RelationSite const& s : relation_sites(ctx, u)) {
      Word v = apply_site(ctx, u, s);
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          throw ResourceLimitError("equivalence class exceeds the cap of " + std::to_string(cap) +
                                   " words");
        }
        if (shortlex_less(v, best)) best = v;
        queue.push_back(std::move(v));
      }
    }
  }
  return best;
}

// "1,3,2"; the empty string is the identity.
inline std::string to_string(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline Word word_from_string(std::string const& text) {
  Word out;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_spaces();
  if (pos == text.size()) return out;
  for (;;) {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::size_t end = pos;
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    std::string token = text.substr(start, end - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidWordError("bad word token '" + token + "' in \"" + text + "\"");
    }
    long long value = 0;
    for (char c : token) {
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw InvalidWordError("word token '" + token + "' is out of range");
    }
    out.push_back(static_cast<Letter>(value));
    if (pos == text.size()) break;
    ++pos;  // skip ','
  }
  return out;
}

}  // namespace fiblat
