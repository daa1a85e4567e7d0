// Acceptance suite: one PASS/FAIL line per criterion, each with its wall time
// and the pinned limit it must beat. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "scd/hopf.hpp"
#include "scd/matrix.hpp"
#include "scd/oracle.hpp"
#include "scd/verify.hpp"

using namespace scd;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Folds the non-informational checks of a report into one outcome.
Outcome from_report(const Report& r) {
  Outcome o;
  std::size_t checks = 0;
  std::uint64_t cases = 0;
  std::ostringstream bad;
  for (const auto& c : r.checks) {
    if (c.informational) continue;
    ++checks;
    cases += c.cases;
    if (!c.passed) {
      o.passed = false;
      bad << "; failed: " << c.name;
      if (!c.failures.empty()) bad << " e.g. " << c.failures.front();
    }
  }
  o.detail = std::to_string(checks) + " checks, " + std::to_string(cases) + " cases" + bad.str();
  return o;
}

void merge(Outcome& into, const Outcome& part, const std::string& tag) {
  into.passed = into.passed && part.passed;
  into.detail += (into.detail.empty() ? "" : " | ") + tag + ": " + part.detail;
}

LabelledPartition D(int n, const FieldPtr& f, std::vector<Arc> plus) {
  return LabelledPartition::from_plus(Family::D, n, f, std::move(plus));
}

// The printed 8x8 matrices of the worked example, entries at signed (row, column).
struct Entry {
  int i, j;
  Code v;
};

UTMatrix printed(const FieldPtr& f, bool unipotent, const std::vector<Entry>& entries) {
  const SignedOrder ord(Family::D, 4);
  UTMatrix m = unipotent ? UTMatrix::identity(f, 8) : UTMatrix(f, 8);
  for (const Entry& e : entries) m.set(ord, e.i, e.j, e.v);
  return m;
}

std::string mismatches(const UTMatrix& got, const UTMatrix& want) {
  const SignedOrder ord(Family::D, 4);
  std::string out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (got(r, c) != want(r, c))
        out += " (" + std::to_string(ord.value_at(r + 1)) + "," + std::to_string(ord.value_at(c + 1)) +
               "): computed " + std::to_string(got(r, c)) + " printed " + std::to_string(want(r, c)) + ";";
  return out;
}

Outcome worked_example() {
  const auto f = Field::prime(3);
  Outcome o;
  for (auto [a, b, c] : {std::tuple<Code, Code, Code>{1, 1, 1}, {1, 2, 1}}) {
    const LabelledPartition lambda = D(4, f, {{1, 2, a}, {2, 3, b}, {3, -4, c}});
    const Code na = f->neg(a), nb = f->neg(b), nc = f->neg(c), bc = f->mul(b, c);
    const UTMatrix y = printed(f, false, {{1, 2, a}, {2, 3, b}, {3, -4, c}, {4, -3, nc}, {-3, -2, nb}, {-2, -1, na}});
    const UTMatrix x =
        printed(f, true, {{1, 2, a}, {2, 3, b}, {3, -4, c}, {3, -3, bc}, {4, -3, nc}, {-3, -2, nb}, {-2, -1, na}});
    const std::string at = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    const std::string dy = mismatches(y_of_partition(lambda), y);
    const std::string dx = mismatches(x_of_partition(lambda), x);
    Outcome part;
    part.passed = dy.empty() && dx.empty();
    part.detail = std::string("y ") + (dy.empty() ? "matches" : "differs:" + dy) + ", x " +
                  (dx.empty() ? "matches" : "differs:" + dx) +
                  " printed x in U^D: " + (membership(x, MatrixSet::group_D) ? "yes" : "no") +
                  ", computed x in U^D: " + (membership(x_of_partition(lambda), MatrixSet::group_D) ? "yes" : "no");
    merge(o, part, at);
  }
  return o;
}

Outcome indexing() {
  Outcome o;
  const std::pair<int, unsigned> cases[] = {{2, 3}, {2, 5}, {3, 3}};
  const std::uint64_t expected_order[] = {9, 25, 729};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [n, q] = cases[k];
    const auto f = Field::prime(q);
    GroupTable g = enumerate_group(n, f);
    superclass_partition(g);
    std::uint64_t total = 0;
    for (auto s : g.class_sizes) total += s;
    Outcome part;
    part.passed = g.labels == enumerate_partitions(Family::D, n, f) && total == expected_order[k];
    part.detail = std::to_string(g.labels.size()) + " classes, sizes sum to " + std::to_string(total);
    merge(o, part, "(n,q)=(" + std::to_string(n) + "," + std::to_string(q) + ")");
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  merge(o, from_report(axioms_suite(2, Field::prime(3))), "(2,3)");
  merge(o, from_report(axioms_suite(3, Field::prime(3))), "(3,3)");
  return o;
}

Outcome canonical_form() {
  CanonicalFormOptions opts;
  opts.seed = 1;
  opts.exhaustive_size = 4;
  opts.random_size = 6;
  opts.random_count = 1000;
  opts.translates = 10;
  return from_report(canonical_form_suite(Field::prime(3), opts));
}

Outcome coproduct_restriction() { return from_report(coproduct_restriction_suite(3, Field::prime(3))); }

Outcome hopf_axioms() { return from_report(verify_bialgebra(Family::D, 3, Field::prime(3))); }

Outcome kappa_product_example() {
  const auto f = Field::prime(3);
  Outcome o;
  for (Code a = 1; a < 3; ++a)
    for (Code b = 1; b < 3; ++b) {
      SCElement expected(Family::D, f, Basis::kappa);
      expected.add(D(4, f, {{1, 2, a}, {3, -4, b}}), 1);
      for (Code c = 1; c < 3; ++c) {
        expected.add(D(4, f, {{1, 2, a}, {2, 3, c}, {3, -4, b}}), 1);
        expected.add(D(4, f, {{1, 2, a}, {2, 4, c}, {3, -4, b}}), 1);
      }
      const SCElement got = product(SCElement::symbol(Basis::kappa, D(2, f, {{1, 2, a}})),
                                    SCElement::symbol(Basis::kappa, D(2, f, {{1, -2, b}})));
      Outcome part;
      part.passed = got == expected && got.terms().size() == 5;
      part.detail = std::to_string(got.terms().size()) + " terms" + (got == expected ? "" : ", mismatch");
      merge(o, part, "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return o;
}

Outcome coproduct_example() {
  const auto f = Field::prime(5);
  const Code a = 1, b = 2, c = 3;
  const LabelledPartition lambda = D(6, f, {{1, 4, a}, {4, -6, b}, {3, 5, c}});
  const auto empty = [&](int n) { return LabelledPartition(Family::D, n, f); };
  // Components {1,4,6}, {3,5} and {2}; each side of every split, standardized.
  const auto big = D(3, f, {{1, 2, a}, {2, -3, b}});
  const auto small = D(2, f, {{1, 2, c}});
  const auto with_gap = D(3, f, {{2, 3, c}});
  const auto four = D(4, f, {{1, 3, a}, {3, -4, b}});
  const auto five = D(5, f, {{1, 3, a}, {2, 4, c}, {3, -5, b}});
  TensorElement expected(Family::D, f, Basis::kappa);
  for (const auto& [l, r] : std::vector<std::pair<LabelledPartition, LabelledPartition>>{
           {lambda, empty(0)}, {empty(0), lambda}, {big, with_gap}, {with_gap, big},
           {small, four}, {four, small}, {empty(1), five}, {five, empty(1)}})
    expected.add(l, r, 1);
  const TensorElement got = coproduct(SCElement::symbol(Basis::kappa, lambda));
  Outcome o;
  o.passed = got == expected && got.terms().size() == 8;
  o.detail = std::to_string(got.terms().size()) + " tensor terms" + (got == expected ? "" : ", mismatch");
  return o;
}

Outcome degree_identities() { return from_report(degree_suite(3, Field::prime(3))); }

Outcome family_c() { return from_report(family_c_suite(2, Field::prime(3))); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: y_lambda and x_lambda against the printed matrices", 1, worked_example},
      {2, "indexing: oracle labels equal the enumeration, sizes sum to q^(n(n-1))", 60, indexing},
      {3, "supercharacter orthogonality, norms and regularity at (2,3) and (3,3)", 300, axioms},
      {4, "canonical form vs BFS orbits on u_4(3) and 1000 samples of u_6(3)", 300, canonical_form},
      {5, "coproduct components equal group restriction on D_6(3)", 300, coproduct_restriction},
      {6, "Hopf axioms in both bases up to grade 3 at q=3", 600, hopf_axioms},
      {7, "kappa product example has 1 + 2 + 2 terms", 1, kappa_product_example},
      {8, "coproduct example has 8 tensor terms", 1, coproduct_example},
      {9, "degree product identity and degree-one characterization, grade <= 3", 60, degree_identities},
      {10, "family C enumeration, product, coproduct and bialgebra up to grade 2", 60, family_c},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_seconds;
    const bool ok = o.passed && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / limit %.0f s", s, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << timing
              << (in_time ? "" : ", over time") << ")  " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(criteria.size()) + " criteria failed"
                       : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
