#pragma once

// The acceptance checks behind `fiblat verify`: every enumerative identity of
// the artifact at desk scale, each as one pass/fail result. All expected
// values are pinned here.

#include <algorithm>
#include <string>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/graphs.hpp"
#include "fiblat/lattice.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"
#include "fiblat/sequences.hpp"
#include "fiblat/simples.hpp"

namespace fiblat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

template <typename Fn>
CriterionResult run_criterion(int id, std::string name, Fn&& body) {
  CriterionResult r{id, std::move(name), false, {}};
  try {
    std::string detail;
    r.pass = body(detail);
    r.detail = detail.empty() ? (r.pass ? "ok" : "mismatch") : detail;
  } catch (std::exception const& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

// The tree of the size-12 worked labelling example, whose labels at m = 11
// read 1,11,5,1,11,10,2,11,11,9,5,11,1,11,2,1,11,10,8 in post-order.
inline SchroederTree worked_example_tree() {
  return node({node({node({leaf(), leaf()}), node({leaf(), leaf()}),
                     node({leaf(), leaf(), leaf()})}),
               leaf(), node({node({leaf(), leaf()}), node({leaf(), leaf()})})});
}

}  // namespace detail

// Runs every acceptance criterion; sweep bounds are the pinned desk-scale
// ranges, clamped by n_max. Criteria hold exactly (no tolerances).
inline std::vector<CriterionResult> run_acceptance_criteria(int n_max = 6) {
  std::vector<CriterionResult> results;

  results.push_back(detail::run_criterion(1, "simples counts |Div(Delta_n)| = F_2n", [&](std::string& detail) {
    std::vector<long long> const expected{3, 8, 21, 55, 144, 377};
    int const hi = std::min(6, n_max);
    for (int n = 1; n <= hi; ++n) {
      long long const got = enumerate_simples(MonoidContext(n)).size();
      if (got != expected[static_cast<std::size_t>(n) - 1]) {
        detail = "n=" + std::to_string(n) + ": got " + std::to_string(got) + ", expected " +
                 std::to_string(expected[static_cast<std::size_t>(n) - 1]);
        return false;
      }
    }
    detail = "n=1.." + std::to_string(hi);
    return true;
  }));

  results.push_back(detail::run_criterion(2, "odd ideal counts |Div_L(rho_n^n)| = F_2n-1", [&](std::string& detail) {
    std::vector<long long> const expected{2, 5, 13, 34, 89, 233};
    int const hi = std::min(6, n_max);
    for (int n = 1; n <= hi; ++n) {
      SimplesSet const s = enumerate_simples(MonoidContext(n));
      FinitePoset const left = build_poset(s, Side::left);
      long long const got = static_cast<long long>(odd_ideal_indices(s, left).size());
      if (got != expected[static_cast<std::size_t>(n) - 1]) {
        detail = "n=" + std::to_string(n) + ": got " + std::to_string(got) + ", expected " +
                 std::to_string(expected[static_cast<std::size_t>(n) - 1]);
        return false;
      }
    }
    detail = "n=1.." + std::to_string(hi);
    return true;
  }));

  results.push_back(detail::run_criterion(3, "word counts for Delta_n = little Schroeder", [&](std::string& detail) {
    std::vector<long long> const expected{1, 3, 11, 45, 197, 903};
    int const hi = std::min(6, n_max);
    for (int n = 1; n <= hi; ++n) {
      MonoidContext const ctx(n);
      long long const got =
          static_cast<long long>(equivalence_class(ctx, ctx.delta_word()).size());
      if (got != expected[static_cast<std::size_t>(n) - 1]) {
        detail = "n=" + std::to_string(n) + ": got " + std::to_string(got) + ", expected " +
                 std::to_string(expected[static_cast<std::size_t>(n) - 1]);
        return false;
      }
    }
    detail = "n=1.." + std::to_string(hi);
    return true;
  }));

  results.push_back(detail::run_criterion(4, "word counts over all divisors + stratum identities", [&](std::string& detail) {
    int const hi = std::min(5, n_max);
    SequenceTable const s_table = little_schroeder_recurrence(hi + 1);
    std::vector<long long> d(static_cast<std::size_t>(hi) + 1);
    d[0] = 1;
    for (int n = 1; n <= hi; ++n) {
      std::vector<long long> const by_stratum = count_words_by_stratum(n);
      long long total = 0;
      for (long long v : by_stratum) total += v;
      d[static_cast<std::size_t>(n)] = total;
      if (total != s_table.values[static_cast<std::size_t>(n) + 1]) {
        detail = "n=" + std::to_string(n) + ": total " + std::to_string(total) + " != s_" +
                 std::to_string(n + 1);
        return false;
      }
      for (int i = 0; i <= n + 1; ++i) {
        long long expected = 0;
        if (i == 0 || i == 1) {
          expected = d[static_cast<std::size_t>(n) - 1];
        } else if (i == n + 1) {
          expected = s_table.values[static_cast<std::size_t>(n)];
        } else {
          expected = 2 * s_table.values[static_cast<std::size_t>(i) - 1] *
                     d[static_cast<std::size_t>(n - i)];
        }
        if (by_stratum[static_cast<std::size_t>(i)] != expected) {
          detail = "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": got " +
                   std::to_string(by_stratum[static_cast<std::size_t>(i)]) + ", expected " +
                   std::to_string(expected);
          return false;
        }
      }
    }
    detail = "n=1.." + std::to_string(hi) + " with all stratum identities";
    return true;
  }));

  results.push_back(detail::run_criterion(5, "lattice law + meet formula = meet oracle", [&](std::string& detail) {
    int const hi = std::min(5, n_max);
    for (int n = 1; n <= hi; ++n) {
      SimplesSet const s = enumerate_simples(MonoidContext(n));
      FinitePoset const left = build_poset(s, Side::left);
      for (int x = 0; x < s.size(); ++x) {
        for (int y = 0; y < s.size(); ++y) {
          int const m = meet_oracle(left, x, y);  // throws on violation
          join_oracle(left, x, y);
          if (meet_formula(left, x, y) != m) {
            detail = "n=" + std::to_string(n) + ": formula != oracle at (" +
                     to_string(s.elements[static_cast<std::size_t>(x)].repr) + ", " +
                     to_string(s.elements[static_cast<std::size_t>(y)].repr) + ")";
            return false;
          }
        }
      }
    }
    detail = "all pairs, n=1.." + std::to_string(hi);
    return true;
  }));

  results.push_back(detail::run_criterion(6, "tree-word bijection round trip + weights", [&](std::string& detail) {
    int const max_leaves = std::min(8, n_max + 2);
    for (int leaves = 1; leaves <= max_leaves; ++leaves) {
      bool ok = true;
      std::string local;
      for_each_tree(leaves, [&](SchroederTree const& t) {
        if (!ok) return;
        for (int m : {leaves - 1, leaves, leaves + 1}) {
          if (m < 0) continue;
          LabelledTree const lt = label(t, m);
          if (label_weight(lt) != static_cast<long long>(leaves) * m) {
            local = "weight mismatch at " + tree_to_compact_string(t) + ", m=" + std::to_string(m);
            ok = false;
            return;
          }
          if (parse_word(phi(t, m), m, leaves).tree != t) {
            local = "round trip failed at " + tree_to_compact_string(t) + ", m=" + std::to_string(m);
            ok = false;
            return;
          }
        }
      });
      if (!ok) {
        detail = local;
        return false;
      }
    }
    detail = "all trees with <= " + std::to_string(max_leaves) + " leaves, m in {n-1,n,n+1}";
    return true;
  }));

  results.push_back(detail::run_criterion(7, "graph isomorphism + connectivity", [&](std::string& detail) {
    int const hi = std::min(6, n_max);
    for (int n = 1; n <= hi; ++n) {
      if (!verify_isomorphism(n)) {
        detail = "isomorphism failed at n=" + std::to_string(n);
        return false;
      }
      if (!is_connected(word_graph(MonoidContext(n))) || !is_connected(tree_graph(n + 1))) {
        detail = "connectivity failed at n=" + std::to_string(n);
        return false;
      }
    }
    detail = "n=1.." + std::to_string(hi);
    return true;
  }));

  results.push_back(detail::run_criterion(8, "stratum projections are order isomorphisms", [&](std::string& detail) {
    int const hi = std::min(5, n_max);
    for (int n = 1; n <= hi; ++n) {
      SimplesSet const s = enumerate_simples(MonoidContext(n));
      FinitePoset const left = build_poset(s, Side::left);
      if (s.strata[static_cast<std::size_t>(n) + 1].size() != 1) {
        detail = "n=" + std::to_string(n) + ": the top stratum is not the one-point poset";
        return false;
      }
      for (int i = 0; i <= n; ++i) {
        int const target_rank = stratum_target_rank(n, i);
        SimplesSet const target = enumerate_simples(MonoidContext(target_rank));
        FinitePoset const target_left = build_poset(target, Side::left);
        std::vector<int> const& stratum = s.strata[static_cast<std::size_t>(i)];
        if (static_cast<int>(stratum.size()) != target.size()) {
          detail = "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": stratum size " +
                   std::to_string(stratum.size()) + " != |Div(Delta_" +
                   std::to_string(target_rank) + ")| = " + std::to_string(target.size());
          return false;
        }
        std::vector<int> image;
        std::vector<bool> hit(static_cast<std::size_t>(target.size()), false);
        for (int e : stratum) {
          Word const projected = stratum_project(s, s.elements[static_cast<std::size_t>(e)].repr);
          int const idx = target.find(projected);
          if (idx < 0 || hit[static_cast<std::size_t>(idx)]) {
            detail = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                     ": projection is not a bijection";
            return false;
          }
          hit[static_cast<std::size_t>(idx)] = true;
          image.push_back(idx);
        }
        for (std::size_t a = 0; a < stratum.size(); ++a) {
          for (std::size_t b = 0; b < stratum.size(); ++b) {
            if (left.less_eq(stratum[a], stratum[b]) !=
                target_left.less_eq(image[a], image[b])) {
              detail = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                       ": order not preserved";
              return false;
            }
          }
        }
      }
    }
    detail = "n=1.." + std::to_string(hi) + ", all strata";
    return true;
  }));

  results.push_back(detail::run_criterion(9, "worked examples reproduce exactly", [&](std::string& detail) {
    MonoidContext const m7(7);
    Word const w7{3, 1, 7, 1, 7, 5, 4, 7, 7, 1, 7, 6};
    if (!equal_words(m7, w7, m7.delta_word())) {
      detail = "the M_7 example word is not Delta_7";
      return false;
    }
    PowerDecomposition const pd = maximal_decomposition(m7, w7);
    if (pd.exponents != std::vector<int>{4, 1, 1, 2} ||
        pd.factors != std::vector<Word>{{3, 1, 7, 1, 7, 5, 4}, {7}, {7}, {1, 7, 6}}) {
      detail = "the M_7 decomposition differs from the worked example";
      return false;
    }
    Word const expected{1, 11, 5, 1, 11, 10, 2, 11, 11, 9, 5, 11, 1, 11, 2, 1, 11, 10, 8};
    if (phi(detail::worked_example_tree(), 11) != expected) {
      detail = "the size-12 labelling example does not reproduce its word";
      return false;
    }
    detail = "M_7 decomposition and size-12 labelling";
    return true;
  }));

  results.push_back(detail::run_criterion(10, "atom divisor sets match the lemmas", [&](std::string& detail) {
    int const hi = std::min(6, n_max);
    for (int n = 1; n <= hi; ++n) {
      MonoidContext const ctx(n);
      for (int k = 1; k <= n; ++k) {
        std::vector<int> expected_left, expected_right;
        for (int i = 1; i <= k; ++i) expected_left.push_back(i);
        for (int i = n - k + 1; i <= n; ++i) expected_right.push_back(i);
        if (atom_left_divisors(ctx, k) != expected_left) {
          detail = "left atoms differ at n=" + std::to_string(n) + ", k=" + std::to_string(k);
          return false;
        }
        if (atom_right_divisors(ctx, k) != expected_right) {
          detail = "right atoms differ at n=" + std::to_string(n) + ", k=" + std::to_string(k);
          return false;
        }
      }
    }
    detail = "1 <= k <= n <= " + std::to_string(hi);
    return true;
  }));

  return results;
}

}  // namespace fiblat
