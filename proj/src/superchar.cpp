#include "scd/superchar.hpp"

#include <algorithm>
#include <string>

namespace scd {

namespace {

void require_family_d(const LabelledPartition& lambda) {
  if (lambda.family() != Family::D)
    throw Error(ErrorKind::unsupported_family, "supercharacters are implemented for family D only");
}

void require_same_context(const LabelledPartition& lambda, const LabelledPartition& mu) {
  require_family_d(lambda);
  require_family_d(mu);
  if (lambda.n() != mu.n()) throw Error(ErrorKind::context_mismatch, "partitions over different n");
  if (!lambda.field()->same_as(*mu.field())) throw Error(ErrorKind::field_mismatch, "partitions over different fields");
}

mpz_class q_power(unsigned q, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

bool vanishes_over(const std::vector<Arc>& lambda_arcs, const LabelledPartition& mu) {
  const SignedOrder ord = mu.order();
  const std::vector<Arc> mu_arcs = mu.arcs();
  for (const Arc& la : lambda_arcs) {
    const int pi = ord.pos(la.i), pk = ord.pos(la.j);
    for (const Arc& ma : mu_arcs) {
      if (ma.i == la.i) {
        const int pl = ord.pos(ma.j);
        if (pi < pl && pl < pk) return true;
      }
      if (ma.j == la.j) {
        const int pl = ord.pos(ma.i);
        if (pi < pl && pl < pk) return true;
      }
    }
  }
  return false;
}

}  // namespace

unsigned degree_exponent(const LabelledPartition& lambda) {
  require_family_d(lambda);
  const SignedOrder ord = lambda.order();
  unsigned e = 0;
  for (const Arc& a : lambda.plus()) e += ord.pos(a.j) - ord.pos(a.i) - 1;
  return e;
}

mpz_class degree(const LabelledPartition& lambda) { return q_power(lambda.field()->q(), degree_exponent(lambda)); }

bool chi_vanishes(const LabelledPartition& lambda, const LabelledPartition& mu) {
  require_same_context(lambda, mu);
  return vanishes_over({lambda.plus().begin(), lambda.plus().end()}, mu);
}

bool chi_vanishes_full(const LabelledPartition& lambda, const LabelledPartition& mu) {
  require_same_context(lambda, mu);
  return vanishes_over(lambda.arcs(), mu);
}

unsigned nesting_count(const LabelledPartition& lambda, const LabelledPartition& mu, NestingCount mode) {
  require_same_context(lambda, mu);
  const SignedOrder ord = lambda.order();
  unsigned count = 0;
  for (const Arc& m : mu.plus()) {
    const int pk = ord.pos(m.i), pl = ord.pos(m.j);
    unsigned covering = 0;
    for (const Arc& l : lambda.plus())
      if (ord.pos(l.i) < pk && pl < ord.pos(l.j)) ++covering;
    count += mode == NestingCount::pairs ? covering : (covering > 0 ? 1u : 0u);
  }
  return count;
}

CycValue chi_value(const LabelledPartition& lambda, const LabelledPartition& mu, NestingCount mode) {
  require_same_context(lambda, mu);
  const Field& f = *lambda.field();
  const unsigned p = f.p();
  if (vanishes_over({lambda.plus().begin(), lambda.plus().end()}, mu)) return CycValue(p);

  long trace_sum = 0;
  for (const Arc& l : lambda.plus())
    for (const Arc& m : mu.plus())
      if (l.i == m.i && l.j == m.j) trace_sum += f.trace(f.mul(l.label, m.label));

  const unsigned e = degree_exponent(lambda);
  const unsigned nest = nesting_count(lambda, mu, mode);
  const mpq_class scale = e >= nest ? mpq_class(q_power(f.q(), e - nest)) : mpq_class(1, 1) / mpq_class(q_power(f.q(), nest - e));
  return CycValue::zeta_power(p, trace_sum).scaled(scale);
}

std::vector<LabelledPartition> arc_pairs(const LabelledPartition& lambda) {
  std::vector<LabelledPartition> out;
  for (const Arc& a : lambda.plus())
    out.push_back(LabelledPartition::from_plus(lambda.family(), lambda.n(), lambda.field(), {a}));
  return out;
}

CharTable char_table(Family family, int n, const FieldPtr& field, std::uint64_t budget, NestingCount mode) {
  if (family != Family::D) throw Error(ErrorKind::unsupported_family, "supercharacters are implemented for family D only");
  const std::uint64_t count = count_partitions(family, n, field);
  if (count > budget / std::max<std::uint64_t>(count, 1))
    throw Error(ErrorKind::budget_exceeded, "character table with " + std::to_string(count) +
                                                " rows exceeds the budget of " + std::to_string(budget) + " cells");
  CharTable table;
  table.family = family;
  table.n = n;
  table.field = field;
  table.labels = enumerate_partitions(family, n, field);
  table.values.reserve(table.labels.size());
  for (const auto& lambda : table.labels) {
    std::vector<CycValue> row;
    row.reserve(table.labels.size());
    for (const auto& mu : table.labels) row.push_back(chi_value(lambda, mu, mode));
    table.values.push_back(std::move(row));
  }
  return table;
}

void attach_class_sizes(CharTable& table, const GroupTable& group) {
  if (!group.classified()) throw Error(ErrorKind::context_mismatch, "group table is not classified");
  if (group.n != table.n || !group.field->same_as(*table.field))
    throw Error(ErrorKind::context_mismatch, "group table and character table disagree on (n, q)");
  if (group.labels != table.labels)
    throw Error(ErrorKind::context_mismatch, "superclass labels differ from the character labels");
  table.class_sizes = group.class_sizes;
}

ClassFunction row_function(const CharTable& table, std::size_t row) {
  ClassFunction f{table.family, table.n, table.field, {}};
  for (std::size_t c = 0; c < table.size(); ++c) f.values.emplace(table.labels[c], table.values[row][c]);
  return f;
}

DegreeProduct degree_product_check(const LabelledPartition& lambda, const LabelledPartition& mu) {
  require_family_d(lambda);
  require_family_d(mu);
  DegreeProduct out;
  for (const Arc& a : lambda.plus())
    if (a.j < 0) ++out.alpha;
  const unsigned q = lambda.field()->q();
  out.concatenated = degree(concat(lambda, mu));
  out.lhs = degree(lambda) * degree(mu);
  out.rhs = q_power(q, 2 * static_cast<unsigned>(mu.n()) * out.alpha) * out.concatenated;
  return out;
}

bool DegreeProduct::reversed_holds(unsigned q, int m) const {
  return concatenated == q_power(q, 2 * static_cast<unsigned>(m) * alpha) * lhs;
}

}  // namespace scd
