#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "scd/oracle.hpp"

using namespace scd;

namespace {

std::vector<std::uint64_t> sorted_sizes(const GroupTable& g) {
  auto s = g.class_sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

// Class sizes frozen from a separate brute force: U^D as the unitriangular
// isometries of the antidiagonal form, classes as two-sided orbits of x - I.
TEST_CASE("superclass sizes match the frozen census") {
  GroupTable g3 = enumerate_group(2, Field::prime(3));
  superclass_partition(g3);
  CHECK(g3.order() == 9);
  CHECK(sorted_sizes(g3) == std::vector<std::uint64_t>{1, 1, 1, 3, 3});

  GroupTable g5 = enumerate_group(2, Field::prime(5));
  superclass_partition(g5);
  CHECK(g5.order() == 25);
  CHECK(sorted_sizes(g5) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 5, 5, 5, 5});
}

TEST_CASE("labels are exactly the enumerated partitions") {
  for (auto [n, q] : {std::pair{1, 3u}, {2, 3u}, {2, 5u}, {3, 3u}}) {
    const auto f = Field::prime(q);
    GroupTable g = enumerate_group(n, f);
    superclass_partition(g);
    CHECK(g.labels == enumerate_partitions(Family::D, n, f));
    std::uint64_t total = 0;
    for (auto s : g.class_sizes) total += s;
    CHECK(total == g.order());
    for (std::size_t k = 0; k < g.labels.size(); ++k) {
      CHECK(g.class_of[g.representatives[k]] == k);
      CHECK(g.label_index(g.labels[k]) == k);
    }
  }
}

TEST_CASE("x_lambda is classified as lambda") {
  const auto f = Field::prime(3);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate_partitions(Family::D, n, f)) CHECK(classify(x_of_partition(lambda), n) == lambda);
}

TEST_CASE("indicators are orthogonal with norm |K|/|G|") {
  const auto f = Field::prime(3);
  GroupTable g = enumerate_group(3, f);
  superclass_partition(g);
  for (std::size_t a = 0; a < g.labels.size(); a += 3)
    for (std::size_t b = 0; b < g.labels.size(); b += 2) {
      const CycValue ip = inner_product(indicator(g, g.labels[a]), indicator(g, g.labels[b]), g);
      mpq_class expected = a == b ? mpq_class(g.class_sizes[a], g.order()) : mpq_class(0);
      expected.canonicalize();
      CHECK(ip == CycValue::rational(3, expected));
    }
}

TEST_CASE("restriction of an indicator is the indicator of its split") {
  const auto f = Field::prime(3);
  GroupTable g = enumerate_group(3, f), left = enumerate_group(2, f), right = enumerate_group(1, f);
  superclass_partition(g);
  superclass_partition(left);
  superclass_partition(right);
  const Subset a = 0b011;
  const RestrictionMap map = restriction_map(a, 3, left, right);
  CHECK(map.images.size() == left.order() * right.order());
  for (const auto& lambda : g.labels) {
    const PairClassFunction r = restrict_eval(indicator(g, lambda), map);
    CHECK(r.constant_on_classes);
    const Restriction split = restrict_standardize(lambda, a);
    for (const auto& [key, v] : r.values) {
      const bool hit = split.splits_cleanly && key.first == split.first && key.second == split.second;
      CHECK(v == CycValue::rational(3, hit ? 1 : 0));
    }
  }
}

TEST_CASE("budgets are enforced") {
  const auto f = Field::prime(5);
  try {
    enumerate_group(4, f, 1000);
    FAIL("expected budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
  CHECK_THROWS_AS(OrbitCensus(f, 8, 1000), Error);

  setenv("SCD_BUDGET", "1234", 1);
  CHECK(budget_from_env() == 1234);
  setenv("SCD_BUDGET", "lots", 1);
  CHECK_THROWS_AS(budget_from_env(), Error);
  unsetenv("SCD_BUDGET");
  CHECK(budget_from_env() == default_budget);
}

TEST_CASE("BFS orbit census of u_3(q)") {
  // Two-sided orbits of strictly upper 3x3 matrices: one per rook placement
  // weighted by (q-1)^arcs, i.e. 1 + 3(q-1) + (q-1)^2.
  for (unsigned q : {3u, 5u}) {
    OrbitCensus c(Field::prime(q), 3, 1 << 20);
    c.explore_all();
    CHECK(c.orbit_count() == 1 + 3 * (q - 1) + (q - 1) * (q - 1));
  }
}
