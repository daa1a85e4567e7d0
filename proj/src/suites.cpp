#include <chrono>
#include <random>
#include <set>

#include "scd/hopf.hpp"
#include "scd/matrix.hpp"
#include "scd/verify.hpp"

namespace scd {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string ctx(int n, const FieldPtr& field) {
  return " [n=" + std::to_string(n) + ", q=" + std::to_string(field->q()) + "]";
}

mpz_class ipow(unsigned q, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

bool fits_budget(int n, const FieldPtr& field, std::uint64_t budget) {
  return ipow(field->q(), static_cast<unsigned>(n * (n - 1))) <= mpz_class(std::to_string(budget));
}

GroupTable classified_group(int n, const FieldPtr& field, std::uint64_t budget) {
  GroupTable g = enumerate_group(n, field, budget);
  superclass_partition(g);
  return g;
}

CheckResult skipped(const std::string& name, const std::string& why) {
  CheckResult r{name};
  r.informational = true;
  r.note = "skipped: " + why;
  return r;
}

// Uniformly random strictly upper triangular matrix.
UTMatrix random_nilpotent(const FieldPtr& field, int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> entry(0, field->q() - 1);
  UTMatrix m(field, size);
  for (int r = 0; r < size; ++r)
    for (int c = r + 1; c < size; ++c) m.set(r, c, static_cast<Code>(entry(rng)));
  return m;
}

// Product of between 1 and max_factors elementary matrices I + t e_{i,j}, t != 0.
UTMatrix random_unitriangular(const FieldPtr& field, int size, int max_factors, std::mt19937_64& rng) {
  UTMatrix g = UTMatrix::identity(field, size);
  if (size < 2) return g;
  std::uniform_int_distribution<int> count(1, max_factors), row(0, size - 2);
  std::uniform_int_distribution<unsigned> label(1, field->q() - 1);
  const int k = count(rng);
  for (int s = 0; s < k; ++s) {
    const int i = row(rng);
    std::uniform_int_distribution<int> col(i + 1, size - 1);
    g = g * elementary(field, size, i, col(rng), static_cast<Code>(label(rng)));
  }
  return g;
}

// Number of summands counted with multiplicity (distinct splits may coincide).
mpq_class summands(const TensorElement& t) {
  mpq_class total = 0;
  for (const auto& [key, c] : t.terms()) total += c;
  return total;
}

}  // namespace

Report indexing_suite(int n, const FieldPtr& field, std::uint64_t budget) {
  Report report;
  const std::string tag = ctx(n, field);
  GroupTable group = classified_group(n, field, budget);
  const std::vector<LabelledPartition> labels = enumerate_partitions(Family::D, n, field);

  {
    CheckResult r{"superclass labels equal the enumerated partitions" + tag};
    r.expect(group.labels == labels, std::to_string(group.labels.size()) + " superclasses vs " +
                                         std::to_string(labels.size()) + " partitions");
    report.checks.push_back(r);
  }
  {
    CheckResult r{"class sizes sum to q^(n(n-1))" + tag};
    mpz_class sum = 0;
    for (auto s : group.class_sizes) sum += mpz_class(std::to_string(s));
    r.expect(sum == ipow(field->q(), n * (n - 1)), "sum " + sum.get_str());
    report.checks.push_back(r);
  }
  {
    CheckResult r{"identity forms the class of the empty partition" + tag};
    const LabelledPartition empty(Family::D, n, field);
    const UTMatrix id = UTMatrix::identity(field, 2 * n);
    r.expect(classify(id, n) == empty, "identity classified as " + classify(id, n).to_string());
    r.expect(group.class_sizes[group.label_index(empty)] == 1, "class of the empty partition has size " +
                                                                    std::to_string(group.class_sizes[group.label_index(empty)]));
    report.checks.push_back(r);
  }
  {
    CheckResult r{"x -> y -> x round trip on every group element" + tag};
    for (const UTMatrix& x : group.elements) r.expect(y_to_x(x_to_y(x)) == x, x.to_string());
    report.checks.push_back(r);
  }
  {
    CheckResult r{"x_lambda lies in U^D and in the superclass of lambda" + tag};
    for (const LabelledPartition& lambda : labels) {
      const UTMatrix x = x_of_partition(lambda);
      r.expect(membership(x, MatrixSet::group_D) && classify(x, n) == lambda, lambda.to_string());
    }
    report.checks.push_back(r);
  }
  {
    // K_lambda = U^D intersected with (orbit of y_lambda) + I, read on x - I directly.
    CheckResult r{"x - I reduces to the same arc form as its partner y" + tag};
    const UTMatrix id = UTMatrix::identity(field, 2 * n);
    for (const UTMatrix& x : group.elements) r.expect(verge_reduce(x - id) == verge_reduce(x_to_y(x)), x.to_string());
    report.checks.push_back(r);
  }
  return report;
}

Report axioms_suite(int n, const FieldPtr& field, std::uint64_t budget, NestingCount mode) {
  Report report;
  const std::string tag = ctx(n, field);
  const GroupTable group = classified_group(n, field, budget);
  CharTable table = char_table(Family::D, n, field, budget, mode);
  {
    CheckResult r{"character labels match the superclass labels" + tag};
    r.expect(table.labels == group.labels, "label sets differ");
    report.checks.push_back(r);
    if (!r.passed) return report;
  }
  attach_class_sizes(table, group);
  const std::size_t N = table.size();
  const unsigned p = field->p();
  const std::size_t empty = group.label_index(LabelledPartition(Family::D, n, field));
  const mpq_class order(mpz_class(std::to_string(group.order())));

  // Precompute sizes / |G| and conjugated rows.
  std::vector<mpq_class> weight(N);
  for (std::size_t k = 0; k < N; ++k) weight[k] = mpq_class(mpz_class(std::to_string(table.class_sizes[k]))) / order;
  std::vector<std::vector<CycValue>> conj(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) conj[i].push_back(table.values[i][k].conj());
  auto inner = [&](std::size_t i, std::size_t j) {
    CycValue s(p);
    for (std::size_t k = 0; k < N; ++k) s += (table.values[i][k] * conj[j][k]).scaled(weight[k]);
    return s;
  };

  {
    CheckResult r{"trivial character is identically 1 and the identity column holds the degrees" + tag};
    for (std::size_t k = 0; k < N; ++k) r.expect(table.values[empty][k] == CycValue::rational(p, 1), "row 0 at " + table.labels[k].to_string());
    for (std::size_t i = 0; i < N; ++i)
      r.expect(table.values[i][empty] == CycValue::rational(p, mpq_class(degree(table.labels[i]))), table.labels[i].to_string());
    report.checks.push_back(r);
  }
  {
    CheckResult r{"orthogonality of distinct supercharacters" + tag};
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        const CycValue v = inner(i, j);
        r.expect(v.is_zero(), "<" + table.labels[i].to_string() + ", " + table.labels[j].to_string() + "> = " + v.to_string());
      }
    r.seconds = since(t0);
    report.checks.push_back(r);
  }
  {
    CheckResult norms{"norms are positive with chi(1)^2/norm a positive integer" + tag};
    CheckResult regular{"sum of chi(1)^2/norm equals |G|" + tag};
    mpq_class total = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const CycValue v = inner(i, i);
      const bool positive = v.is_rational() && v.rational_part() > 0;
      mpq_class ratio = 0;
      if (positive) {
        const mpz_class d = degree(table.labels[i]);
        ratio = mpq_class(d * d) / v.rational_part();
        total += ratio;
      }
      norms.expect(positive && ratio.get_den() == 1 && ratio > 0,
                   table.labels[i].to_string() + " norm " + v.to_string() + " ratio " + ratio.get_str());
    }
    regular.expect(total == order, "sum " + total.get_str() + " vs |G| " + order.get_str());
    report.checks.push_back(norms);
    report.checks.push_back(regular);
  }
  {
    CheckResult r{"vanishing condition agrees over lambda and lambda+" + tag};
    for (const auto& l : table.labels)
      for (const auto& m : table.labels) r.expect(chi_vanishes(l, m) == chi_vanishes_full(l, m), l.to_string() + " at " + m.to_string());
    report.checks.push_back(r);
  }
  {
    CheckResult r{"supercharacters factor over arc pairs" + tag};
    for (std::size_t i = 0; i < N; ++i) {
      const auto pieces = arc_pairs(table.labels[i]);
      for (std::size_t k = 0; k < N; ++k) {
        CycValue prod = CycValue::rational(p, 1);
        for (const auto& piece : pieces) prod *= chi_value(piece, table.labels[k], mode);
        r.expect(prod == table.values[i][k], table.labels[i].to_string() + " at " + table.labels[k].to_string());
      }
    }
    report.checks.push_back(r);
  }
  {
    CheckResult r{"values lie in q^-k Z[zeta_p] with k at most the arc count of mu+" + tag};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const CycValue& v = table.values[i][k];
        bool ok = true;
        for (const mpq_class& c : v.coeffs()) {
          mpz_class den = c.get_den();
          unsigned e = 0;
          while (den % field->q() == 0 && den != 1) {
            den /= field->q();
            ++e;
          }
          ok = ok && den == 1 && e <= table.labels[k].pair_count();
        }
        r.expect(ok, table.labels[i].to_string() + " at " + table.labels[k].to_string());
      }
    report.checks.push_back(r);
  }
  {
    CheckResult r{"both nesting-count readings give the same table" + tag};
    r.informational = true;
    const NestingCount other = mode == NestingCount::distinct_arcs ? NestingCount::pairs : NestingCount::distinct_arcs;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k)
        r.expect(chi_value(table.labels[i], table.labels[k], other) == table.values[i][k],
                 table.labels[i].to_string() + " at " + table.labels[k].to_string());
    report.checks.push_back(r);
  }
  return report;
}

Report canonical_form_suite(const FieldPtr& field, const CanonicalFormOptions& opts) {
  Report report;
  const std::string q = std::to_string(field->q());
  {
    const int s = opts.exhaustive_size;
    CheckResult r{"verge_reduce matches BFS orbit closure on all of u_" + std::to_string(s) + "(" + q + ")"};
    CheckResult idem{"verge_reduce is idempotent on all of u_" + std::to_string(s) + "(" + q + ")"};
    const auto t0 = Clock::now();
    OrbitCensus census(field, s, opts.state_budget);
    const std::uint64_t total = ipow(field->q(), s * (s - 1) / 2).get_ui();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const UTMatrix m = census.decode(idx);
      const UTMatrix v = verge_reduce(m);
      const auto& orbit = census.orbit_of(m);
      r.expect(orbit.arc_forms.size() == 1 && orbit.arc_forms.front() == v, m.to_string());
      idem.expect(verge_reduce(v) == v, m.to_string());
    }
    r.note = std::to_string(census.orbit_count()) + " orbits";
    r.seconds = since(t0);
    report.checks.push_back(r);
    report.checks.push_back(idem);
  }
  {
    const int s = opts.random_size;
    const std::string where = "u_" + std::to_string(s) + "(" + q + ")";
    CheckResult r{"verge_reduce matches BFS orbit closure on " + std::to_string(opts.random_count) + " random matrices of " + where};
    CheckResult idem{"verge_reduce is idempotent on random matrices of " + where};
    CheckResult inv{"verge_reduce is invariant under random two-sided translates in " + where};
    const auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed);
    OrbitCensus census(field, s, opts.state_budget);
    for (int k = 0; k < opts.random_count; ++k) {
      const UTMatrix m = random_nilpotent(field, s, rng);
      const UTMatrix v = verge_reduce(m);
      const auto& orbit = census.orbit_of(m);
      r.expect(orbit.arc_forms.size() == 1 && orbit.arc_forms.front() == v, m.to_string());
      idem.expect(verge_reduce(v) == v, m.to_string());
      for (int t2 = 0; t2 < opts.translates; ++t2) {
        const UTMatrix g = random_unitriangular(field, s, opts.max_generators, rng);
        const UTMatrix h = random_unitriangular(field, s, opts.max_generators, rng);
        inv.expect(verge_reduce(g * m * h) == v, m.to_string());
      }
    }
    r.note = std::to_string(census.states_visited()) + " states explored";
    r.seconds = since(t0);
    report.checks.push_back(r);
    report.checks.push_back(idem);
    report.checks.push_back(inv);
  }
  {
    const int n = opts.random_size / 2;
    CheckResult r{"y_lambda is fixed by verge_reduce" + ctx(n, field)};
    enumerate_partitions(Family::D, n, field, [&](const LabelledPartition& lambda) {
      const UTMatrix y = y_of_partition(lambda);
      r.expect(verge_reduce(y) == y && membership(y, MatrixSet::algebra_D), lambda.to_string());
    });
    report.checks.push_back(r);
  }
  return report;
}

Report coproduct_restriction_suite(int n, const FieldPtr& field, std::uint64_t budget) {
  Report report;
  const std::string tag = ctx(n, field);
  std::vector<GroupTable> groups;
  for (int k = 0; k <= n; ++k) groups.push_back(classified_group(k, field, budget));
  const GroupTable& big = groups[n];
  HopfAlgebra H(Family::D, field);
  const CharTable table = char_table(Family::D, n, field, budget);
  const unsigned p = field->p();

  CheckResult comp{"Delta(kappa_lambda) components equal the group restriction" + tag};
  CheckResult kconst{"restricted superclass indicators are constant on product superclasses" + tag};
  CheckResult cconst{"restricted supercharacters are constant on product superclasses" + tag};
  CheckResult count{"Delta(kappa_lambda) has 2^(components) terms" + tag};
  const auto t0 = Clock::now();
  std::vector<RestrictionMap> maps;
  for (Subset a = 0; a < (Subset{1} << n); ++a) {
    const int na = static_cast<int>(subset_elements(a, n).size());
    maps.push_back(restriction_map(a, n, groups[na], groups[n - na]));
  }
  for (const LabelledPartition& lambda : big.labels) {
    const ClassFunction f = indicator(big, lambda);
    const SCElement x = SCElement::symbol(Basis::kappa, lambda);
    count.expect(summands(H.coproduct(x)) == (1 << component_count(lambda)), lambda.to_string());
    for (const RestrictionMap& map : maps) {
      const PairClassFunction res = restrict_eval(f, map);
      kconst.expect(res.constant_on_classes, lambda.to_string() + " A=" + std::to_string(map.a));
      const TensorElement part = H.coproduct_component(x, map.a);
      bool ok = true;
      for (const auto& [key, value] : res.values) {
        auto it = part.terms().find(key);
        const mpq_class expected = it == part.terms().end() ? mpq_class(0) : it->second;
        ok = ok && value == CycValue::rational(p, expected);
      }
      for (const auto& [key, c] : part.terms()) ok = ok && res.values.count(key) == 1;
      comp.expect(ok, lambda.to_string() + " A=" + std::to_string(map.a));
    }
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const ClassFunction chi = row_function(table, i);
    for (const RestrictionMap& map : maps)
      cconst.expect(restrict_eval(chi, map).constant_on_classes, table.labels[i].to_string() + " A=" + std::to_string(map.a));
  }
  comp.seconds = since(t0);
  report.checks.push_back(comp);
  report.checks.push_back(kconst);
  report.checks.push_back(cconst);
  report.checks.push_back(count);
  return report;
}

Report degree_suite(int n_max, const FieldPtr& field) {
  Report report;
  const std::string tag = " [total grade <= " + std::to_string(n_max) + ", q=" + std::to_string(field->q()) + "]";
  std::vector<LabelledPartition> all;
  for (int g = 0; g <= n_max; ++g) {
    auto part = enumerate_partitions(Family::D, g, field);
    all.insert(all.end(), part.begin(), part.end());
  }
  CheckResult printed{"chi^lambda(1) chi^mu(1) = q^(2 m alpha) chi^(lambda mu-shifted)(1)" + tag};
  CheckResult reversed{"chi^(lambda mu-shifted)(1) = q^(2 m alpha) chi^lambda(1) chi^mu(1)" + tag};
  reversed.informational = true;
  for (const auto& l : all)
    for (const auto& m : all) {
      if (l.n() + m.n() > n_max) continue;
      const DegreeProduct d = degree_product_check(l, m);
      const std::string what = l.to_string() + " , " + m.to_string() + ": lhs " + d.lhs.get_str() + " rhs " +
                               d.rhs.get_str() + " alpha " + std::to_string(d.alpha);
      printed.expect(d.holds(), what);
      reversed.expect(d.reversed_holds(field->q(), m.n()), what);
    }
  report.checks.push_back(printed);
  report.checks.push_back(reversed);

  CheckResult unit{"chi^lambda(1) = 1 iff every arc pair joins i to i+1" + tag};
  for (const auto& l : all) {
    bool adjacent = true;
    for (const Arc& a : l.plus()) adjacent = adjacent && a.j == a.i + 1;
    unit.expect((degree(l) == 1) == adjacent, l.to_string());
  }
  report.checks.push_back(unit);
  return report;
}

Report family_c_suite(int n_max, const FieldPtr& field) {
  Report report;
  const std::string tag = " [C, n<=" + std::to_string(n_max) + ", q=" + std::to_string(field->q()) + "]";
  {
    CheckResult r{"family C enumeration is valid, duplicate-free and counted consistently" + tag};
    bool saw_self_mirror = false;
    for (int n = 0; n <= n_max; ++n) {
      std::set<LabelledPartition> seen;
      std::uint64_t emitted = 0;
      enumerate_partitions(Family::C, n, field, [&](const LabelledPartition& l) {
        ++emitted;
        const std::vector<Arc> plus(l.plus().begin(), l.plus().end());
        r.expect(LabelledPartition::from_plus(Family::C, n, field, plus) == l, l.to_string());
        r.expect(seen.insert(l).second, "duplicate " + l.to_string());
        for (const Arc& a : plus) saw_self_mirror = saw_self_mirror || a.j == -a.i;
      });
      r.expect(emitted == count_partitions(Family::C, n, field), "count mismatch at n=" + std::to_string(n));
    }
    if (n_max >= 1) r.expect(saw_self_mirror, "no arc (i,-i,a) was produced");
    report.checks.push_back(r);
  }
  {
    CheckResult r{"family C products and coproducts involving self-mirrored arcs" + tag};
    HopfAlgebra H(Family::C, field);
    if (n_max >= 2) {
      const LabelledPartition self = LabelledPartition::from_plus(Family::C, 1, field, {Arc{1, -1, 1}});
      const SCElement x = SCElement::symbol(Basis::kappa, self);
      const SCElement prod = H.product(x, x);
      // Both halves keep their self-mirrored arc; crossings may only join the blocks.
      bool ok = !prod.is_zero();
      for (const auto& [nu, c] : prod.terms()) {
        const Restriction split = restrict_standardize(nu, 0b01);
        ok = ok && split.first == self && split.second == self;
      }
      r.expect(ok, "kappa(1,-1) * kappa(1,-1) = " + prod.to_string());
      const SCElement joined = H.product(SCElement::symbol(Basis::P, self), SCElement::symbol(Basis::P, self));
      const LabelledPartition both = LabelledPartition::from_plus(Family::C, 2, field, {Arc{1, -1, 1}, Arc{2, -2, 1}});
      r.expect(joined == SCElement::symbol(Basis::P, both), "P product " + joined.to_string());
      r.expect(summands(H.coproduct(SCElement::symbol(Basis::kappa, both))) == 4, "Delta of two self-mirrored arcs");
    }
    report.checks.push_back(r);
  }
  report.append(verify_bialgebra(Family::C, n_max, field));
  return report;
}

Report verify_bundle(int n_max, const FieldPtr& field, std::uint64_t seed, std::uint64_t budget) {
  Report report;
  for (int n = 1; n <= n_max; ++n) {
    if (!fits_budget(n, field, budget)) {
      report.checks.push_back(skipped("group-level suites" + ctx(n, field), "q^(n(n-1)) exceeds the budget"));
      continue;
    }
    report.append(indexing_suite(n, field, budget));
    report.append(axioms_suite(n, field, budget));
    report.append(coproduct_restriction_suite(n, field, budget));
  }
  CanonicalFormOptions opts;
  opts.seed = seed;
  opts.random_size = 2 * std::max(n_max, 2);
  while (opts.random_size > opts.exhaustive_size &&
         ipow(field->q(), opts.random_size * (opts.random_size - 1) / 2) > mpz_class(std::to_string(opts.state_budget)))
    opts.random_size -= 2;
  if (ipow(field->q(), opts.exhaustive_size * (opts.exhaustive_size - 1) / 2) > mpz_class(std::to_string(opts.state_budget)))
    report.checks.push_back(skipped("canonical form", "u_4(q) exceeds the orbit budget"));
  else
    report.append(canonical_form_suite(field, opts));
  report.append(verify_bialgebra(Family::D, n_max, field));
  report.append(degree_suite(n_max, field));
  report.append(family_c_suite(n_max, field));
  return report;
}

}  // namespace scd
