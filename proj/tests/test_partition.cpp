#include <algorithm>
#include <set>

#include "doctest.h"
#include "scd/partition.hpp"

using namespace scd;

namespace {

using FullSet = std::vector<std::tuple<int, int, int>>;  // (pos i, pos j, label)

// Independent enumerator: every assignment of a label (or nothing) to each
// candidate plus arc, kept when the full mirror-closed set has at most one arc
// leaving and one arc entering every point.
std::set<FullSet> brute_force(Family family, int n, unsigned q) {
  const SignedOrder ord(family, n);
  const int N = ord.size();
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (i + j > N + 1) continue;
      if (i + j == N + 1 && family != Family::C) continue;
      slots.emplace_back(i, j);
    }
  std::set<FullSet> out;
  std::vector<unsigned> choice(slots.size(), 0);
  const auto neg = [q](unsigned a) { return (q - a) % q; };  // prime q only
  while (true) {
    FullSet full;
    std::vector<int> left(N + 1, 0), right(N + 1, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!choice[s]) continue;
      const auto [i, j] = slots[s];
      full.emplace_back(i, j, choice[s]);
      if (i + j != N + 1) full.emplace_back(N + 1 - j, N + 1 - i, neg(choice[s]));
    }
    bool ok = true;
    for (const auto& [i, j, a] : full) ok = ok && ++left[i] == 1 && ++right[j] == 1;
    if (ok) {
      std::sort(full.begin(), full.end());
      out.insert(full);
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == q) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

FullSet full_of(const LabelledPartition& l) {
  const SignedOrder ord = l.order();
  FullSet f;
  for (const Arc& a : l.arcs()) f.emplace_back(ord.pos(a.i), ord.pos(a.j), a.label);
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("signed order positions") {
  const SignedOrder d(Family::D, 3);
  CHECK(d.size() == 6);
  CHECK(d.pos(1) == 1);
  CHECK(d.pos(3) == 3);
  CHECK(d.pos(-3) == 4);
  CHECK(d.pos(-1) == 6);
  for (int p = 1; p <= 6; ++p) CHECK(d.pos(d.value_at(p)) == p);
  const SignedOrder b(Family::B, 2);
  CHECK(b.size() == 5);
  CHECK(b.pos(0) == 3);
  CHECK(b.value_at(4) == -2);
}

TEST_CASE("enumeration agrees with an independent brute force") {
  const auto f3 = Field::prime(3), f5 = Field::prime(5);
  for (Family fam : {Family::D, Family::C, Family::B})
    for (int n = 0; n <= 3; ++n)
      for (const auto& f : {f3, f5}) {
        if (f->q() == 5 && n == 3) continue;
        CAPTURE(to_string(fam));
        CAPTURE(n);
        CAPTURE(f->q());
        const auto expected = brute_force(fam, n, f->q());
        std::set<FullSet> got;
        std::size_t visits = 0;
        LabelledPartition prev(fam, n, f);
        enumerate_partitions(fam, n, f, [&](const LabelledPartition& l) {
          if (visits) CHECK(prev < l);
          prev = l;
          ++visits;
          got.insert(full_of(l));
        });
        CHECK(visits == got.size());
        CHECK(got == expected);
        CHECK(count_partitions(fam, n, f) == expected.size());
      }
}

TEST_CASE("|D_4(q)| = 2q - 1") {
  for (unsigned q : {3u, 5u, 7u, 11u}) CHECK(count_partitions(Family::D, 2, Field::prime(q)) == 2 * q - 1);
  CHECK(count_partitions(Family::D, 2, Field::of_order(9, {1, 0, 1})) == 17);
}

TEST_CASE("validation names the violated condition") {
  const auto f = Field::prime(3);
  using K = Violation::Kind;
  auto first_kind = [&](Family fam, int n, std::vector<Arc> arcs) {
    const auto v = LabelledPartition::validate(fam, n, f, arcs);
    REQUIRE_FALSE(v.ok());
    return v.violations.front().kind;
  };
  auto has_kind = [&](Family fam, int n, std::vector<Arc> arcs, K kind) {
    const auto v = LabelledPartition::validate(fam, n, f, arcs);
    return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation& x) { return x.kind == kind; });
  };
  CHECK(first_kind(Family::D, 2, {{1, 2, 1}}) == K::mirror);
  CHECK(first_kind(Family::D, 2, {{1, 2, 0}, {-2, -1, 0}}) == K::zero_label);
  CHECK(first_kind(Family::D, 2, {{2, 1, 1}, {-1, -2, 2}}) == K::bad_order);
  CHECK(first_kind(Family::D, 2, {{1, 3, 1}, {-3, -1, 2}}) == K::out_of_range);
  CHECK(first_kind(Family::D, 2, {{1, -1, 1}}) == K::forbidden_arc);
  // Two arcs leaving 1 means their mirrors both enter -1.
  CHECK(has_kind(Family::D, 3, {{1, 2, 1}, {1, 3, 1}, {-2, -1, 2}, {-3, -1, 2}}, K::shared_left));
  CHECK(has_kind(Family::D, 3, {{1, 2, 1}, {1, 3, 1}, {-2, -1, 2}, {-3, -1, 2}}, K::shared_right));
  CHECK(has_kind(Family::C, 2, {{1, -2, 1}, {2, -1, 2}, {2, -2, 1}}, K::shared_left));
  CHECK(LabelledPartition::validate(Family::C, 1, f, {{1, -1, 1}}).ok());
  CHECK_THROWS_AS(LabelledPartition::from_plus(Family::D, 2, f, {{1, -1, 1}}), Error);
}

TEST_CASE("plus halves determine the partition") {
  const auto f = Field::prime(3);
  const auto l = LabelledPartition::from_plus(Family::D, 4, f, {{3, -4, 1}, {2, 3, 2}, {1, 2, 1}});
  CHECK(l.to_string() == "D4{(1,2,1),(2,3,2),(3,-4,1)}");
  CHECK(l.arc_count() == 6);
  CHECK(l.mirror(Arc{3, -4, 1}) == Arc{4, -3, 2});
  CHECK(l.is_plus(Arc{3, -4, 1}));
  CHECK_FALSE(l.is_plus(Arc{4, -3, 2}));
  CHECK(component_count(l) == 1);
  CHECK(component_count(LabelledPartition(Family::D, 4, f)) == 4);
}

TEST_CASE("standardization of a two-block restriction") {
  const auto f = Field::prime(5);
  const Code a = 1, b = 2, c = 3;
  // lambda over [+-5]: 1-a-3, 2-b-5, 3-c-(-4) and mirrors; A = {1, 3, 4}.
  const auto lambda = LabelledPartition::from_plus(Family::D, 5, f, {{1, 3, a}, {2, 5, b}, {3, -4, c}});
  const Restriction r = restrict_standardize(lambda, 0b01101);
  CHECK(r.splits_cleanly);
  CHECK(r.first == LabelledPartition::from_plus(Family::D, 3, f, {{1, 2, a}, {2, -3, c}}));
  CHECK(r.second == LabelledPartition::from_plus(Family::D, 2, f, {{1, 2, b}}));
  CHECK_FALSE(restrict_standardize(lambda, 0b00001).splits_cleanly);
}

TEST_CASE("shift_up and concat place mu in the middle block") {
  const auto f = Field::prime(3);
  const auto mu = LabelledPartition::from_plus(Family::D, 2, f, {{1, -2, 1}});
  const auto up = shift_up(mu, 2);
  CHECK(up == LabelledPartition::from_plus(Family::D, 4, f, {{3, -4, 1}}));
  const auto lambda = LabelledPartition::from_plus(Family::D, 2, f, {{1, 2, 1}});
  CHECK(concat(lambda, mu) == LabelledPartition::from_plus(Family::D, 4, f, {{1, 2, 1}, {3, -4, 1}}));
  CHECK(concat(LabelledPartition(Family::D, 0, f), mu) == mu);
}

TEST_CASE("superset closure lists exactly the partitions containing lambda") {
  const auto f = Field::prime(3);
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate_partitions(Family::D, n, f);
    for (const auto& lambda : all) {
      std::vector<LabelledPartition> expected;
      for (const auto& mu : all)
        if (lambda.arcs_subset_of(mu)) expected.push_back(mu);
      auto got = superset_closure(lambda);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}
