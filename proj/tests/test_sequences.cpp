#include <catch2/catch_amalgamated.hpp>

#include "fiblat/sequences.hpp"

using namespace fiblat;

TEST_CASE("Fibonacci in the paper convention", "[sequences]") {
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(1) == 2);
  CHECK(fibonacci(2) == 3);
  CHECK(fibonacci(6) == 21);
  CHECK(fibonacci(12) == 377);
  CHECK_THROWS_AS(fibonacci(-1), DomainError);
}

TEST_CASE("A sequence", "[sequences]") {
  auto const a = a_sequence(8);
  CHECK(a.values[1] == 3);
  CHECK(a.values[3] == 21);
  CHECK(a.values[6] == 377);
  for (int n = 0; n <= 8; ++n) {
    CHECK(a.values[static_cast<std::size_t>(n)] == fibonacci(2 * n));
  }
}

TEST_CASE("B sequence", "[sequences]") {
  auto const b = b_sequence(6);
  CHECK(b.start_index == 1);
  CHECK(b.values[0] == 2);    // B_1
  CHECK(b.values[2] == 13);   // B_3
  CHECK(b.values[4] == 89);   // B_5
  for (int n = 1; n <= 6; ++n) {
    CHECK(b.values[static_cast<std::size_t>(n) - 1] == fibonacci(2 * n - 1));
  }
}

TEST_CASE("little Schroeder numbers", "[sequences]") {
  auto const s = little_schroeder(8);
  std::vector<long long> const printed{1, 1, 3, 11, 45, 197, 903, 4279, 20793};
  CHECK(s.values == printed);
  CHECK_THROWS_AS(little_schroeder(12), ResourceLimitError);
}

TEST_CASE("generation matches the convolution recurrence", "[sequences][property]") {
  auto const s = little_schroeder_recurrence(10);
  for (int k = 0; k <= 10; ++k) {
    CHECK(schroeder_tree_count(k + 1) == s.values[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("word counts over all divisors", "[sequences]") {
  CHECK(count_words_all_divisors(0) == 1);
  CHECK(count_words_all_divisors(1) == 3);
  CHECK(count_words_all_divisors(3) == 45);
  CHECK(count_words_all_divisors(5) == 903);
  auto const s = little_schroeder_recurrence(5);
  for (int n = 1; n <= 4; ++n) {
    CHECK(count_words_all_divisors(n) == s.values[static_cast<std::size_t>(n) + 1]);
  }
}

TEST_CASE("word counts by stratum", "[sequences]") {
  CHECK(count_words_by_stratum(3) == std::vector<long long>{11, 11, 6, 6, 11});
  CHECK(count_words_by_stratum(4) == std::vector<long long>{45, 45, 22, 18, 22, 45});
}

TEST_CASE("stratum word counts satisfy the counting identities", "[sequences][property]") {
  auto const s = little_schroeder_recurrence(5);
  std::vector<long long> d{1};  // d_0 = 1: the empty word
  for (int n = 1; n <= 4; ++n) {
    auto const by_stratum = count_words_by_stratum(n);
    long long total = 0;
    for (long long v : by_stratum) total += v;
    d.push_back(total);
    CHECK(by_stratum[0] == d[static_cast<std::size_t>(n) - 1]);
    CHECK(by_stratum[1] == d[static_cast<std::size_t>(n) - 1]);
    for (int i = 2; i <= n; ++i) {
      CHECK(by_stratum[static_cast<std::size_t>(i)] ==
            2 * s.values[static_cast<std::size_t>(i) - 1] * d[static_cast<std::size_t>(n - i)]);
    }
    CHECK(by_stratum[static_cast<std::size_t>(n) + 1] == s.values[static_cast<std::size_t>(n)]);
    CHECK(total == s.values[static_cast<std::size_t>(n) + 1]);
  }
}
