#pragma once

// Enumeration of the simples Div(Delta_n) with left/right divisibility, the
// d statistic and its strata, the maximal power-of-rho_n decomposition, the
// atom-divisor sets, and the stratum projection onto a smaller monoid.
//
// The enumeration collects every prefix of every word in the closure class of
// Delta_n: these are exactly the words for the left divisors, and the set is
// closed under the defining relation, so connected components under single
// relation steps are the simples themselves.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"

namespace fiblat {

namespace detail {

// Dense bitset sized for a few thousand poset elements.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t b : blocks_) c += static_cast<std::size_t>(__builtin_popcountll(b));
    return c;
  }

  bool any() const {
    for (std::uint64_t b : blocks_) {
      if (b) return true;
    }
    return false;
  }

  Bitset& operator&=(Bitset const& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }

  Bitset& operator|=(Bitset const& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, Bitset const& b) { return a &= b; }

  bool is_subset_of(Bitset const& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i] & ~o.blocks_[i]) return false;
    }
    return true;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      std::uint64_t b = blocks_[bi];
      while (b) {
        int const bit = __builtin_ctzll(b);
        fn((bi << 6) + static_cast<std::size_t>(bit));
        b &= b - 1;
      }
    }
  }

  friend bool operator==(Bitset const&, Bitset const&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace detail

struct Simple {
  Word repr;       // canonical word: shortest, then lexicographically least
  int dvalue = 0;  // d(x) = max{ k >= 0 : rho_n^k <= x }

  friend bool operator==(Simple const&, Simple const&) = default;
};

struct SimplesSet {
  MonoidContext context;
  std::vector<Simple> elements;          // ordered by (lambda, shortlex) of repr
  std::vector<std::vector<int>> strata;  // strata[i] = indices of D_n^i, 0 <= i <= n+1

  // Word-level data from the enumeration: every word of every simple.
  std::vector<std::vector<Word>> words;                  // words[e], shortlex sorted
  std::unordered_map<Word, int, WordHash> word_index;    // any word for a simple -> index
  std::vector<detail::Bitset> left_div;                  // left_div[y] = { x : x <=_L y }
  std::vector<detail::Bitset> right_div;                 // right_div[y] = { x : x <=_R y }

  int size() const { return static_cast<int>(elements.size()); }

  // Index of the simple a word represents, or -1. Membership needs no
  // closure: the word universe contains every word of every simple.
  int find(Word const& w) const {
    validate_word(context, w);
    auto it = word_index.find(w);
    return it == word_index.end() ? -1 : it->second;
  }

  int index_of(Word const& w) const {
    int const e = find(w);
    if (e < 0) {
      throw DomainError("\"" + to_string(w) + "\" does not represent a simple of M_" +
                        std::to_string(context.n));
    }
    return e;
  }

  long long lambda_of(int e) const { return lambda_weight(context, elements[e].repr); }
  bool left_divides_idx(int x, int y) const { return left_div[y].test(static_cast<std::size_t>(x)); }
  bool right_divides_idx(int x, int y) const { return right_div[y].test(static_cast<std::size_t>(x)); }
  std::vector<Word> const& words_of(int e) const { return words[e]; }

  long long total_word_count() const {
    long long c = 0;
    for (auto const& ws : words) c += static_cast<long long>(ws.size());
    return c;
  }

  int delta_index() const { return index_of(context.delta_word()); }
  int rho_power_index(int k) const { return index_of(context.rho_power(k)); }
};

inline SimplesSet enumerate_simples(MonoidContext const& ctx, int rank_cap = kDefaultRankCap,
                                    std::size_t class_cap = kDefaultClassCap) {
  if (ctx.n > rank_cap) {
    throw ResourceLimitError("simples enumeration is capped at rank " + std::to_string(rank_cap) +
                             ", got n=" + std::to_string(ctx.n));
  }
  SimplesSet s{ctx, {}, {}, {}, {}, {}, {}};
  if (ctx.n == 0) {
    s.elements = {Simple{Word{}, 1}};
    s.strata = {{}, {0}};
    s.words = {{Word{}}};
    s.word_index.emplace(Word{}, 0);
    s.left_div = {detail::Bitset(1)};
    s.right_div = {detail::Bitset(1)};
    s.left_div[0].set(0);
    s.right_div[0].set(0);
    return s;
  }

  // Word universe: all prefixes of all words for Delta_n.
  std::vector<Word> universe;
  std::unordered_map<Word, int, WordHash> uid;
  for (Word const& w : equivalence_class(ctx, ctx.delta_word(), class_cap)) {
    for (std::size_t k = 0; k <= w.size(); ++k) {
      Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      if (uid.emplace(p, static_cast<int>(universe.size())).second) {
        universe.push_back(std::move(p));
      }
    }
  }

  // Connected components under single relation steps = monoid elements.
  std::vector<int> comp(universe.size(), -1);
  int comp_count = 0;
  for (std::size_t seed = 0; seed < universe.size(); ++seed) {
    if (comp[seed] >= 0) continue;
    int const c = comp_count++;
    comp[seed] = c;
    std::deque<int> queue{static_cast<int>(seed)};
    while (!queue.empty()) {
      int const u = queue.front();
      queue.pop_front();
      for (RelationSite const& site : relation_sites(ctx, universe[static_cast<std::size_t>(u)])) {
        Word v = apply_site(ctx, universe[static_cast<std::size_t>(u)], site);
        auto it = uid.find(v);
        if (it == uid.end()) {
          throw Error("internal: the prefix universe is not closed under the relation");
        }
        if (comp[static_cast<std::size_t>(it->second)] < 0) {
          comp[static_cast<std::size_t>(it->second)] = c;
          queue.push_back(it->second);
        }
      }
    }
  }

  std::vector<std::vector<Word>> comp_words(static_cast<std::size_t>(comp_count));
  for (std::size_t i = 0; i < universe.size(); ++i) {
    comp_words[static_cast<std::size_t>(comp[i])].push_back(universe[i]);
  }
  for (auto& ws : comp_words) std::sort(ws.begin(), ws.end(), shortlex_less);

  // d(x) = longest literal run of the top letter opening some word for x:
  // x = rho_n^d x' always has the word (n,...,n) + word(x'), and a word
  // opening with k top letters witnesses rho_n^k <= x.
  auto d_of = [&](std::vector<Word> const& ws) {
    int best = 0;
    for (Word const& w : ws) {
      int k = 0;
      while (k < static_cast<int>(w.size()) && w[static_cast<std::size_t>(k)] == ctx.n) ++k;
      best = std::max(best, k);
    }
    return best;
  };

  // Deterministic element order: by (lambda, shortlex) of the canonical word.
  std::vector<int> order(static_cast<std::size_t>(comp_count));
  for (int c = 0; c < comp_count; ++c) order[static_cast<std::size_t>(c)] = c;
  auto lam_of = [&](int c) {
    long long s2 = 0;
    for (Letter x : comp_words[static_cast<std::size_t>(c)].front()) s2 += x;
    return s2;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long long const la = lam_of(a), lb = lam_of(b);
    if (la != lb) return la < lb;
    return shortlex_less(comp_words[static_cast<std::size_t>(a)].front(),
                         comp_words[static_cast<std::size_t>(b)].front());
  });

  std::size_t const count = static_cast<std::size_t>(comp_count);
  std::vector<int> comp_to_elem(count);
  for (std::size_t e = 0; e < count; ++e) comp_to_elem[static_cast<std::size_t>(order[e])] = static_cast<int>(e);

  s.elements.resize(count);
  s.words.resize(count);
  for (int c = 0; c < comp_count; ++c) {
    int const e = comp_to_elem[static_cast<std::size_t>(c)];
    auto& ws = comp_words[static_cast<std::size_t>(c)];
    s.elements[static_cast<std::size_t>(e)] = Simple{ws.front(), d_of(ws)};
    s.words[static_cast<std::size_t>(e)] = std::move(ws);
  }
  for (std::size_t e = 0; e < count; ++e) {
    for (Word const& w : s.words[e]) s.word_index.emplace(w, static_cast<int>(e));
  }

  s.strata.assign(static_cast<std::size_t>(ctx.n) + 2, {});
  for (std::size_t e = 0; e < count; ++e) {
    s.strata[static_cast<std::size_t>(s.elements[e].dvalue)].push_back(static_cast<int>(e));
  }

  // x <=_L y iff some word for y has a prefix representing x (and the prefix
  // is itself a word in the universe); mirrored with suffixes on the right.
  s.left_div.assign(count, detail::Bitset(count));
  s.right_div.assign(count, detail::Bitset(count));
  for (std::size_t e = 0; e < count; ++e) {
    for (Word const& w : s.words[e]) {
      for (std::size_t k = 0; k <= w.size(); ++k) {
        Word const pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        s.left_div[e].set(static_cast<std::size_t>(s.word_index.at(pre)));
        Word const suf(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        s.right_div[e].set(static_cast<std::size_t>(s.word_index.at(suf)));
      }
    }
  }
  return s;
}

// ---- standalone word-level divisibility (closure-based) ----

// x <=_L y: some word in the closure class of y has a prefix equal to x as a
// monoid element.
inline bool left_divides(MonoidContext const& ctx, Word const& x, Word const& y,
                         std::size_t cap = kDefaultClassCap) {
  long long const lx = lambda_weight(ctx, x);
  long long const ly = lambda_weight(ctx, y);
  if (lx > ly) return false;
  Word const cx = canonical(ctx, x, cap);
  std::unordered_set<Word, WordHash> tried;
  for (Word const& w : equivalence_class(ctx, y, cap)) {
    long long acc = 0;
    std::size_t k = 0;
    while (k < w.size() && acc < lx) acc += w[k++];
    if (acc != lx) continue;
    Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (tried.insert(pre).second && canonical(ctx, pre, cap) == cx) return true;
  }
  return false;
}

inline bool right_divides(MonoidContext const& ctx, Word const& x, Word const& y,
                          std::size_t cap = kDefaultClassCap) {
  long long const lx = lambda_weight(ctx, x);
  long long const ly = lambda_weight(ctx, y);
  if (lx > ly) return false;
  Word const cx = canonical(ctx, x, cap);
  std::unordered_set<Word, WordHash> tried;
  for (Word const& w : equivalence_class(ctx, y, cap)) {
    long long acc = 0;
    std::size_t k = w.size();
    while (k > 0 && acc < lx) acc += w[--k];
    if (acc != lx) continue;
    Word suf(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (tried.insert(suf).second && canonical(ctx, suf, cap) == cx) return true;
  }
  return false;
}

// d(x) for a simple x; throws DomainError when x is not a divisor of Delta_n.
inline int d_value(MonoidContext const& ctx, Word const& x, std::size_t cap = kDefaultClassCap) {
  if (ctx.n == 0) {
    if (!x.empty()) validate_word(ctx, x);
    return 1;
  }
  if (!left_divides(ctx, x, ctx.delta_word(), cap)) {
    throw DomainError("\"" + to_string(x) + "\" does not represent a simple of M_" +
                      std::to_string(ctx.n));
  }
  int best = 0;
  for (Word const& w : equivalence_class(ctx, x, cap)) {
    int k = 0;
    while (k < static_cast<int>(w.size()) && w[static_cast<std::size_t>(k)] == ctx.n) ++k;
    best = std::max(best, k);
  }
  return best;
}

// ---- maximal decomposition into powers of rho_n ----

struct PowerDecomposition {
  std::vector<Word> factors;   // concatenation equals the input word
  std::vector<int> exponents;  // factor j represents rho_n^{exponents[j]}
};

// Greedy left scan: repeatedly split off the shortest nonempty prefix that
// represents a power of rho_n. The result is the unique maximal splitting.
inline PowerDecomposition maximal_decomposition(MonoidContext const& ctx, Word const& w,
                                                std::size_t cap = kDefaultClassCap) {
  if (ctx.n == 0) throw DomainError("no powers of a top generator in the trivial monoid");
  long long const lam = lambda_weight(ctx, w);
  if (lam % ctx.n != 0) {
    throw DomainError("lambda(w) = " + std::to_string(lam) + " is not a multiple of n = " +
                      std::to_string(ctx.n));
  }
  int const power = static_cast<int>(lam / ctx.n);
  if (!equal_words(ctx, w, ctx.rho_power(power), cap)) {
    throw DomainError("\"" + to_string(w) + "\" does not represent a power of rho_" +
                      std::to_string(ctx.n));
  }
  PowerDecomposition out;
  std::size_t start = 0;
  while (start < w.size()) {
    long long acc = 0;
    std::size_t p = start;
    bool found = false;
    for (; p < w.size(); ++p) {
      acc += w[p];
      if (acc % ctx.n != 0) continue;
      Word factor(w.begin() + static_cast<std::ptrdiff_t>(start),
                  w.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      if (equal_words(ctx, factor, ctx.rho_power(static_cast<int>(acc / ctx.n)), cap)) {
        out.factors.push_back(std::move(factor));
        out.exponents.push_back(static_cast<int>(acc / ctx.n));
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: a suffix of a power of rho_n is not a power of rho_n");
    start = p + 1;
  }
  return out;
}

// ---- atom divisors (brute force over closures; single letters have
// singleton classes, so literal first/last letters decide) ----

// { i : rho_i <=_L rho_k rho_n^k }; equals {1..k} by the left-atoms lemma.
inline std::vector<int> atom_left_divisors(MonoidContext const& ctx, int k,
                                           std::size_t cap = kDefaultClassCap) {
  if (k < 1 || k > ctx.n) {
    throw DomainError("atom divisors need 1 <= k <= n, got k=" + std::to_string(k));
  }
  Word y{k};
  Word const power = ctx.rho_power(k);
  y.insert(y.end(), power.begin(), power.end());
  std::vector<bool> hit(static_cast<std::size_t>(ctx.n) + 1, false);
  for (Word const& w : equivalence_class(ctx, y, cap)) {
    if (!w.empty()) hit[static_cast<std::size_t>(w.front())] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= ctx.n; ++i) {
    if (hit[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

// { i : rho_i <=_R rho_n^k }; equals {n-k+1..n} by the right-atoms lemma.
inline std::vector<int> atom_right_divisors(MonoidContext const& ctx, int k,
                                            std::size_t cap = kDefaultClassCap) {
  if (k < 1 || k > ctx.n) {
    throw DomainError("atom divisors need 1 <= k <= n, got k=" + std::to_string(k));
  }
  std::vector<bool> hit(static_cast<std::size_t>(ctx.n) + 1, false);
  for (Word const& w : equivalence_class(ctx, ctx.rho_power(k), cap)) {
    if (!w.empty()) hit[static_cast<std::size_t>(w.back())] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= ctx.n; ++i) {
    if (hit[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

// ---- stratum projection ----

// Rank of the target monoid of the projection of D_n^i.
inline int stratum_target_rank(int n, int i) { return i == 0 ? n - 1 : n - i; }

// Projects a simple x with d(x) = i <= n to a word for a simple of
// M_{n-i} (M_{n-1} when i = 0): strip a prefix for rho_n^i, then keep letters
// labelling leftmost children of a witnessing Delta-tree and shift the rest
// down by the rank difference. Witness-independent by the leftmost-child
// lemma.
inline Word stratum_project(SimplesSet const& s, Word const& x) {
  int const n = s.context.n;
  int const e = s.index_of(x);
  int const i = s.elements[static_cast<std::size_t>(e)].dvalue;
  if (i == n + 1) {
    throw DomainError("Delta_n has no stratum projection; its stratum is the one-point poset");
  }
  int const target = stratum_target_rank(n, i);
  Word const& w = s.elements[static_cast<std::size_t>(e)].repr;

  // Split w = w1 w2 with lambda(w1) = i*n; w1 represents rho_n^i.
  long long const want = static_cast<long long>(i) * n;
  long long acc = 0;
  std::size_t split = 0;
  while (split < w.size() && acc < want) acc += w[split++];
  if (acc != want) throw Error("internal: no prefix of weight i*n in a word for a D_n^i element");
  if (i > 0) {
    Word const w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    if (s.find(w1) != s.rho_power_index(i)) {
      throw Error("internal: the weight-i*n prefix does not represent rho_n^i");
    }
  }
  if (split == w.size()) return {};

  // Witnessing tree: any Delta-word with w as a literal prefix.
  Word const* witness = nullptr;
  for (Word const& dw : s.words_of(s.delta_index())) {
    if (dw.size() >= w.size() && std::equal(w.begin(), w.end(), dw.begin())) {
      witness = &dw;
      break;
    }
  }
  if (witness == nullptr) throw Error("internal: no Delta-word extends a word for a simple");
  LabelledTree const lt = parse_word(*witness, n, n + 1);
  std::vector<bool> const flags = leftmost_child_flags(lt.tree);

  Word out;
  out.reserve(w.size() - split);
  for (std::size_t j = split; j < w.size(); ++j) {
    int const letter = w[j];
    int const mapped = flags[j] ? letter : letter - (n - target);
    if (mapped < 1 || mapped > target) {
      throw Error("internal: stratum projection produced letter " + std::to_string(mapped));
    }
    out.push_back(mapped);
  }
  return out;
}

}  // namespace fiblat
