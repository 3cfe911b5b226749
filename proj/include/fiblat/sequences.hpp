#pragma once

// The enumerative side: the paper-convention Fibonacci numbers, the simple
// and odd-ideal counting sequences, little Schroeder numbers by generation
// and by convolution, and exhaustive word counts over the divisors.

#include <string>
#include <vector>

#include "fiblat/errors.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"
#include "fiblat/simples.hpp"

namespace fiblat {

// F_0 = 1, F_1 = 2, F_i = F_{i-1} + F_{i-2}.
inline long long fibonacci(int i) {
  if (i < 0) throw DomainError("Fibonacci index must be nonnegative");
  long long a = 1, b = 2;
  if (i == 0) return a;
  for (int k = 1; k < i; ++k) {
    long long const c = a + b;
    a = b;
    b = c;
  }
  return b;
}

struct SequenceTable {
  std::string name;
  int start_index = 0;
  std::vector<long long> values;
  std::string provenance;  // "recurrence", "generated" or "closure"
};

// A_n = |Div(Delta_n)|: A_0 = 1, A_1 = 3, then
// A_n = 2 A_0 + 2 A_{n-1} + sum_{i=1}^{n-2} A_i. Equals F_{2n}.
inline SequenceTable a_sequence(int n_max) {
  if (n_max < 0) throw DomainError("sequence length must be nonnegative");
  SequenceTable t{"A", 0, {}, "recurrence"};
  t.values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      t.values.push_back(1);
    } else if (n == 1) {
      t.values.push_back(3);
    } else {
      long long v = 2 * t.values[0] + 2 * t.values[static_cast<std::size_t>(n) - 1];
      for (int i = 1; i <= n - 2; ++i) v += t.values[static_cast<std::size_t>(i)];
      t.values.push_back(v);
    }
  }
  return t;
}

// B_n = |Div_L(rho_n^n)| = A_n - A_{n-1} = F_{2n-1}, indexed from 1.
inline SequenceTable b_sequence(int n_max) {
  if (n_max < 1) throw DomainError("the B sequence starts at n = 1");
  SequenceTable a = a_sequence(n_max);
  SequenceTable t{"B", 1, {}, "recurrence"};
  for (int n = 1; n <= n_max; ++n) {
    t.values.push_back(a.values[static_cast<std::size_t>(n)] - a.values[static_cast<std::size_t>(n) - 1]);
  }
  return t;
}

// s_{k+1} = 3 s_k + 2 sum_{i=1}^{k-1} s_i s_{k-i}, s_0 = s_1 = 1.
inline SequenceTable little_schroeder_recurrence(int k_max) {
  if (k_max < 0) throw DomainError("sequence length must be nonnegative");
  SequenceTable t{"s", 0, {}, "recurrence"};
  for (int k = 0; k <= k_max; ++k) {
    if (k <= 1) {
      t.values.push_back(1);
    } else {
      int const n = k - 1;
      long long v = 3 * t.values[static_cast<std::size_t>(n)];
      for (int i = 1; i <= n - 1; ++i) {
        v += 2 * t.values[static_cast<std::size_t>(i)] * t.values[static_cast<std::size_t>(n - i)];
      }
      t.values.push_back(v);
    }
  }
  return t;
}

// Number of Schroeder trees with the given leaf count, by streaming
// generation.
inline long long schroeder_tree_count(int leaves, int cap = kDefaultLeafCap) {
  long long count = 0;
  for_each_tree(leaves, [&](SchroederTree const&) { ++count; }, cap);
  return count;
}

// s_k = number of Schroeder trees with k+1 leaves, computed by the
// convolution recurrence and cross-checked against generation.
inline SequenceTable little_schroeder(int k_max, int generation_cap = kDefaultLeafCap) {
  if (k_max + 1 > generation_cap) {
    throw ResourceLimitError("little Schroeder table is capped at k = " +
                             std::to_string(generation_cap - 1) + ", got " + std::to_string(k_max));
  }
  SequenceTable t = little_schroeder_recurrence(k_max);
  for (int k = 0; k <= k_max; ++k) {
    if (schroeder_tree_count(k + 1, generation_cap) != t.values[static_cast<std::size_t>(k)]) {
      throw Error("internal: tree generation disagrees with the convolution recurrence at k=" +
                  std::to_string(k));
    }
  }
  return t;
}

// Number of distinct letter sequences representing some left divisor of
// Delta_n; equals s_{n+1}.
inline long long count_words_all_divisors(int n, int rank_cap = kDefaultRankCap,
                                          std::size_t class_cap = kDefaultClassCap) {
  if (n < 0) throw DomainError("rank must be nonnegative");
  if (n == 0) return 1;  // the empty word only
  return enumerate_simples(MonoidContext(n), rank_cap, class_cap).total_word_count();
}

// Word counts per stratum: result[i] = number of words for the elements of
// D_n^i, 0 <= i <= n+1.
inline std::vector<long long> count_words_by_stratum(int n, int rank_cap = kDefaultRankCap,
                                                     std::size_t class_cap = kDefaultClassCap) {
  if (n < 1) throw DomainError("stratum word counts need n >= 1");
  SimplesSet const s = enumerate_simples(MonoidContext(n), rank_cap, class_cap);
  std::vector<long long> out(static_cast<std::size_t>(n) + 2, 0);
  for (int e = 0; e < s.size(); ++e) {
    out[static_cast<std::size_t>(s.elements[static_cast<std::size_t>(e)].dvalue)] +=
        static_cast<long long>(s.words_of(e).size());
  }
  return out;
}

}  // namespace fiblat
