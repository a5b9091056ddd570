#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "common.hpp"
#include "ucsat/families.hpp"
#include "ucsat/saturation.hpp"

using ucsat::certify;
using ucsat::is_nontrivial;
using ucsat::is_uniquely_saturated;
using ucsat::Verdict;

TEST_CASE("C5 is uniquely C3-saturated") {
  auto cert = certify(ucsat::cycle_graph(5), 3);
  CHECK(cert.verdict == Verdict::kUniquelySaturated);
  CHECK_FALSE(cert.contains_target);
  CHECK_FALSE(cert.trivial);
  REQUIRE(cert.non_edge_counts.size() == 5);
  for (const auto& nec : cert.non_edge_counts) CHECK(nec.count == 1);
}

TEST_CASE("stars are uniquely C3-saturated") {
  for (int k = 2; k <= 6; ++k) {
    auto cert = certify(ucsat::star_graph(k), 3);
    CHECK(cert.verdict == Verdict::kUniquelySaturated);
    CHECK_FALSE(cert.trivial);
  }
}

TEST_CASE("friendship graphs are uniquely C5-saturated") {
  for (int k = 2; k <= 4; ++k) {
    auto cert = certify(ucsat::friendship_graph(k), 5);
    CHECK(cert.verdict == Verdict::kUniquelySaturated);
    CHECK_FALSE(cert.trivial);
    for (const auto& nec : cert.non_edge_counts) CHECK(nec.count == 1);
  }
}

TEST_CASE("complete graphs below t are trivial") {
  for (int t = 3; t <= 8; ++t) {
    for (int n = 1; n < t; ++n) {
      auto cert = certify(ucsat::complete_graph(n), t);
      CHECK(cert.verdict == Verdict::kUniquelySaturated);
      CHECK(cert.trivial);
      CHECK(cert.non_edge_counts.empty());
    }
    auto at_t = certify(ucsat::complete_graph(t), t);
    CHECK(at_t.verdict == Verdict::kNotSaturated);
    CHECK(at_t.contains_target);
    CHECK_FALSE(at_t.trivial);
  }
}

TEST_CASE("containing the target cycle blocks saturation") {
  auto cert = certify(ucsat::cycle_graph(6), 6);
  CHECK(cert.contains_target);
  CHECK(cert.verdict == Verdict::kNotSaturated);
}

TEST_CASE("saturated but not uniquely") {
  // K4 at t=3: contains C3 -> not saturated at all
  CHECK(certify(ucsat::complete_graph(4), 3).verdict ==
        Verdict::kNotSaturated);
  // C6 at t=3 is triangle-free; the non-edge at distance 3 creates no C3
  CHECK(certify(ucsat::cycle_graph(6), 3).verdict == Verdict::kNotSaturated);
  // K_{2,3} at t=3: triangle-free, every non-edge creates 2 or 3 triangles?
  ucsat::Graph k23(5);
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
  auto cert = certify(k23, 3);
  CHECK(cert.verdict == Verdict::kSaturated);
}

TEST_CASE("t beyond n leaves nothing saturated except complete graphs") {
  CHECK(certify(ucsat::path_graph(3), 9).verdict == Verdict::kNotSaturated);
  CHECK(certify(ucsat::complete_graph(3), 9).trivial);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(certify(ucsat::path_graph(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(certify(ucsat::path_graph(3), 65), std::invalid_argument);
  CHECK(is_nontrivial(ucsat::cycle_graph(5), 5));
  CHECK_FALSE(is_nontrivial(ucsat::complete_graph(4), 5));
}

TEST_CASE("non-edge counts match the cycle-through-edge oracle, n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    std::uint64_t top = std::uint64_t{1} << oracle::pair_count(n);
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      oracle::OGraph og = oracle::from_mask(n, mask);
      ucsat::Graph g = testutil::from_oracle(og);
      for (int t = 3; t <= n; ++t) {
        auto cert = certify(g, t);
        auto ref = oracle::certify_counts(og, t);
        REQUIRE(cert.non_edge_counts.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
          CHECK(cert.non_edge_counts[i].u == ref[i].u);
          CHECK(cert.non_edge_counts[i].v == ref[i].v);
          REQUIRE(cert.non_edge_counts[i].count == ref[i].count);
        }
      }
    }
  }
}

TEST_CASE("certify agrees with the oracle on random graphs, t <= 7") {
  std::mt19937 rng(123);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 6 + static_cast<int>(rng() % 2);
    ucsat::Graph g = testutil::random_graph(rng, n, 0.4);
    oracle::OGraph og = testutil::to_oracle(g);
    int t = 3 + static_cast<int>(rng() % 5);
    if (t > n) t = n;
    auto cert = certify(g, t);
    auto ref = oracle::certify_counts(og, t);
    REQUIRE(cert.non_edge_counts.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      REQUIRE(cert.non_edge_counts[i].count == ref[i].count);
    bool oracle_unique = !oracle::has_cycle(og, t);
    for (const auto& r : ref) oracle_unique = oracle_unique && r.count == 1;
    CHECK(is_uniquely_saturated(g, t) == oracle_unique);
  }
}
