#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "fiblat/lattice.hpp"
#include "fiblat/sequences.hpp"
#include "fiblat/simples.hpp"

using namespace fiblat;

namespace {

// All splittings of w into factors representing powers of rho_n, none of
// which splits further; used as the independent check of the greedy scan.
void maximal_splittings(MonoidContext const& ctx, Word const& w, std::size_t from,
                        std::vector<std::vector<Word>>& out, std::vector<Word>& acc) {
  if (from == w.size()) {
    out.push_back(acc);
    return;
  }
  for (std::size_t to = from + 1; to <= w.size(); ++to) {
    Word factor(w.begin() + static_cast<std::ptrdiff_t>(from),
                w.begin() + static_cast<std::ptrdiff_t>(to));
    long long lam = 0;
    for (int x : factor) lam += x;
    if (lam % ctx.n != 0) continue;
    if (!equal_words(ctx, factor, ctx.rho_power(static_cast<int>(lam / ctx.n)))) continue;
    // maximality: the factor must not split into two nonempty power words
    bool splits = false;
    for (std::size_t cut = 1; cut + 1 <= factor.size() && !splits; ++cut) {
      Word const a(factor.begin(), factor.begin() + static_cast<std::ptrdiff_t>(cut));
      Word const b(factor.begin() + static_cast<std::ptrdiff_t>(cut), factor.end());
      long long la = 0, lb = 0;
      for (int x : a) la += x;
      for (int x : b) lb += x;
      if (la % ctx.n || lb % ctx.n) continue;
      if (equal_words(ctx, a, ctx.rho_power(static_cast<int>(la / ctx.n))) &&
          equal_words(ctx, b, ctx.rho_power(static_cast<int>(lb / ctx.n)))) {
        splits = true;
      }
    }
    if (splits) continue;
    acc.push_back(std::move(factor));
    maximal_splittings(ctx, w, to, out, acc);
    acc.pop_back();
  }
}

}  // namespace

TEST_CASE("simples enumeration", "[simples]") {
  auto const s1 = enumerate_simples(MonoidContext(1));
  REQUIRE(s1.size() == 3);
  CHECK(s1.elements[0].repr == Word{});
  CHECK(s1.elements[1].repr == Word{1});
  CHECK(s1.elements[2].repr == Word{1, 1});
  CHECK(s1.elements[0].dvalue == 0);
  CHECK(s1.elements[1].dvalue == 1);
  CHECK(s1.elements[2].dvalue == 2);

  CHECK(enumerate_simples(MonoidContext(2)).size() == 8);
  auto const s3 = enumerate_simples(MonoidContext(3));
  CHECK(s3.size() == 21);
  CHECK(s3.total_word_count() == 45);

  CHECK_THROWS_AS(enumerate_simples(MonoidContext(9)), ResourceLimitError);
}

TEST_CASE("simples counts and stratum sizes follow the Fibonacci pattern", "[simples]") {
  for (int n = 1; n <= 4; ++n) {
    auto const s = enumerate_simples(MonoidContext(n));
    CHECK(s.size() == fibonacci(2 * n));
    REQUIRE(static_cast<int>(s.strata.size()) == n + 2);
    CHECK(static_cast<long long>(s.strata[0].size()) == fibonacci(2 * (n - 1)));
    for (int i = 1; i <= n; ++i) {
      CHECK(static_cast<long long>(s.strata[static_cast<std::size_t>(i)].size()) ==
            fibonacci(2 * (n - i)));
    }
    CHECK(s.strata[static_cast<std::size_t>(n) + 1].size() == 1);
    long long total = 0;
    for (auto const& stratum : s.strata) total += static_cast<long long>(stratum.size());
    CHECK(total == s.size());
  }
}

TEST_CASE("left and right divisibility", "[simples]") {
  MonoidContext const ctx(3);
  CHECK(left_divides(ctx, {1}, {3, 3}));
  CHECK(left_divides(ctx, {3}, {3, 1}));
  CHECK_FALSE(left_divides(ctx, {2}, {3, 3}));
  CHECK(right_divides(ctx, {2}, {3, 3}));
  CHECK(right_divides(ctx, {3, 3}, {3, 3}));
  CHECK_FALSE(right_divides(ctx, {1}, {3, 3}));
  CHECK_FALSE(left_divides(ctx, {3, 3, 3}, {3, 3}));  // heavier can't divide
}

TEST_CASE("divisor bitsets agree with the closure-based scan", "[simples][property]") {
  for (int n = 1; n <= 3; ++n) {
    MonoidContext const ctx(n);
    auto const s = enumerate_simples(ctx);
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) {
        Word const& wx = s.elements[static_cast<std::size_t>(x)].repr;
        Word const& wy = s.elements[static_cast<std::size_t>(y)].repr;
        CHECK(s.left_divides_idx(x, y) == left_divides(ctx, wx, wy));
        CHECK(s.right_divides_idx(x, y) == right_divides(ctx, wx, wy));
      }
    }
  }
}

TEST_CASE("d statistic", "[simples]") {
  MonoidContext const ctx(3);
  CHECK(d_value(ctx, {3, 3, 3, 3}) == 4);
  CHECK(d_value(MonoidContext(2), {2, 2, 2}) == 3);
  CHECK(d_value(ctx, {1}) == 0);
  CHECK(d_value(ctx, {3, 2}) == 1);
  CHECK(d_value(ctx, {1, 3, 2}) == 2);  // represents rho_3^2
  CHECK_THROWS_AS(d_value(ctx, {2, 2}), DomainError);
  CHECK_THROWS_AS(d_value(MonoidContext(1), {1, 1, 1}), DomainError);
}

TEST_CASE("every word for a simple has a power prefix", "[simples][property]") {
  // any word for x in D_n^i begins with a word for rho_n^i
  for (int n = 1; n <= 3; ++n) {
    auto const s = enumerate_simples(MonoidContext(n));
    for (int e = 0; e < s.size(); ++e) {
      int const i = s.elements[static_cast<std::size_t>(e)].dvalue;
      if (i > n) continue;  // Delta itself
      for (Word const& w : s.words_of(e)) {
        long long acc = 0;
        std::size_t k = 0;
        while (k < w.size() && acc < static_cast<long long>(i) * n) acc += w[k++];
        REQUIRE(acc == static_cast<long long>(i) * n);
        Word const prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(s.find(prefix) == s.rho_power_index(i));
      }
    }
  }
}

TEST_CASE("maximal decomposition", "[simples]") {
  MonoidContext const m7(7);
  auto const pd = maximal_decomposition(m7, {3, 1, 7, 1, 7, 5, 4, 7, 7, 1, 7, 6});
  CHECK(pd.factors == std::vector<Word>{{3, 1, 7, 1, 7, 5, 4}, {7}, {7}, {1, 7, 6}});
  CHECK(pd.exponents == std::vector<int>{4, 1, 1, 2});

  MonoidContext const m3(3);
  auto const u = maximal_decomposition(m3, {3, 3, 3, 3});
  CHECK(u.factors == std::vector<Word>{{3}, {3}, {3}, {3}});
  CHECK(u.exponents == std::vector<int>{1, 1, 1, 1});

  auto const v = maximal_decomposition(m3, {1, 3, 2});
  CHECK(v.factors == std::vector<Word>{{1, 3, 2}});
  CHECK(v.exponents == std::vector<int>{2});

  CHECK_THROWS_AS(maximal_decomposition(m3, {1}), DomainError);      // weight not divisible
  CHECK_THROWS_AS(maximal_decomposition(m3, {1, 2}), DomainError);   // not a power
}

TEST_CASE("greedy decomposition equals the unique maximal splitting", "[simples][property]") {
  for (int n = 2; n <= 3; ++n) {
    MonoidContext const ctx(n);
    for (int k = 1; k <= n + 1; ++k) {
      for (Word const& w : equivalence_class(ctx, ctx.rho_power(k))) {
        std::vector<std::vector<Word>> all;
        std::vector<Word> acc;
        maximal_splittings(ctx, w, 0, all, acc);
        REQUIRE(all.size() == 1);
        CHECK(maximal_decomposition(ctx, w).factors == all.front());
      }
    }
  }
}

TEST_CASE("atom divisors", "[simples]") {
  CHECK(atom_left_divisors(MonoidContext(3), 1) == std::vector<int>{1});
  CHECK(atom_left_divisors(MonoidContext(3), 3) == std::vector<int>{1, 2, 3});
  CHECK(atom_left_divisors(MonoidContext(4), 2) == std::vector<int>{1, 2});
  CHECK(atom_right_divisors(MonoidContext(3), 1) == std::vector<int>{3});
  CHECK(atom_right_divisors(MonoidContext(3), 2) == std::vector<int>{2, 3});
  CHECK(atom_right_divisors(MonoidContext(4), 4) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(atom_left_divisors(MonoidContext(3), 0), DomainError);
  CHECK_THROWS_AS(atom_right_divisors(MonoidContext(3), 4), DomainError);
}

TEST_CASE("stratum projection examples", "[simples]") {
  auto const s = enumerate_simples(MonoidContext(3));
  CHECK(stratum_project(s, {3, 3}) == Word{});      // rho_3^2 in D^2 -> identity of M_1
  CHECK(stratum_project(s, {3, 1}) == Word{1});     // D^1 -> rho_1 in M_2
  CHECK_THROWS_AS(stratum_project(s, {3, 3, 3, 3}), DomainError);
  CHECK_THROWS_AS(stratum_project(s, {2, 2}), DomainError);
}

TEST_CASE("stratum projection is an order isomorphism", "[simples][property]") {
  for (int n = 1; n <= 4; ++n) {
    auto const s = enumerate_simples(MonoidContext(n));
    auto const left = build_poset(s, Side::left);
    for (int i = 0; i <= n; ++i) {
      int const target_rank = stratum_target_rank(n, i);
      auto const target = enumerate_simples(MonoidContext(target_rank));
      auto const target_left = build_poset(target, Side::left);
      auto const& stratum = s.strata[static_cast<std::size_t>(i)];
      REQUIRE(static_cast<int>(stratum.size()) == target.size());
      std::vector<int> image;
      std::set<int> seen;
      for (int e : stratum) {
        int const idx =
            target.find(stratum_project(s, s.elements[static_cast<std::size_t>(e)].repr));
        REQUIRE(idx >= 0);
        CHECK(seen.insert(idx).second);
        image.push_back(idx);
      }
      for (std::size_t a = 0; a < stratum.size(); ++a) {
        for (std::size_t b = 0; b < stratum.size(); ++b) {
          CHECK(left.less_eq(stratum[a], stratum[b]) ==
                target_left.less_eq(image[a], image[b]));
        }
      }
    }
  }
}

TEST_CASE("Delta is central on its factorizations", "[simples][property]") {
  // for all simples a, b with ab = Delta, also ba = Delta
  for (int n = 1; n <= 4; ++n) {
    MonoidContext const ctx(n);
    auto const s = enumerate_simples(ctx);
    Word const delta = ctx.delta_word();
    for (int a = 0; a < s.size(); ++a) {
      int const b = complement_delta(s, a);
      Word ba = s.elements[static_cast<std::size_t>(b)].repr;
      Word const& wa = s.elements[static_cast<std::size_t>(a)].repr;
      ba.insert(ba.end(), wa.begin(), wa.end());
      CHECK(equal_words(ctx, ba, delta));
    }
  }
}

TEST_CASE("standalone d agrees with the enumerated statistic", "[simples][property]") {
  for (int n = 1; n <= 3; ++n) {
    MonoidContext const ctx(n);
    auto const s = enumerate_simples(ctx);
    for (int e = 0; e < s.size(); ++e) {
      CHECK(d_value(ctx, s.elements[static_cast<std::size_t>(e)].repr) ==
            s.elements[static_cast<std::size_t>(e)].dvalue);
    }
  }
}
