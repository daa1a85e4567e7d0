#include "scd/oracle.hpp"

#include <cstdlib>
#include <string>

namespace scd {

std::uint64_t budget_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("SCD_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error(ErrorKind::malformed_input, "SCD_BUDGET must be a positive integer");
  }
  return fallback;
}

std::size_t GroupTable::label_index(const LabelledPartition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw Error(ErrorKind::malformed_input, "no superclass labelled " + lambda.to_string());
  return it->second;
}

namespace {

// Free entries of P (strictly upper) and of Q (one per antidiagonal-mirror pair).
struct Parametrization {
  std::vector<std::pair<int, int>> p_cells;
  std::vector<std::pair<int, int>> q_cells;  // a + b < n - 1 (0-based); mirror is (n-1-b, n-1-a)
};

Parametrization parametrize(int n) {
  Parametrization par;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) par.p_cells.emplace_back(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n - 1; ++b) par.q_cells.emplace_back(a, b);
  return par;
}

}  // namespace

GroupTable enumerate_group(int n, const FieldPtr& field, std::uint64_t budget) {
  if (n < 0) throw Error(ErrorKind::malformed_input, "n must be nonnegative");
  const Parametrization par = parametrize(n);
  const std::size_t free = par.p_cells.size() + par.q_cells.size();
  std::uint64_t required = 1;
  bool overflow = false;
  for (std::size_t k = 0; k < free; ++k) {
    if (required > budget) overflow = true;
    if (!overflow) required *= field->q();
  }
  if (overflow || required > budget)
    throw Error(ErrorKind::budget_exceeded,
                "U^D_" + std::to_string(2 * n) + "(" + std::to_string(field->q()) + ") has q^" +
                    std::to_string(free) + (overflow ? " (overflowing)" : " = " + std::to_string(required)) +
                    " elements, above the budget of " + std::to_string(budget));

  GroupTable table;
  table.n = n;
  table.field = field;
  table.elements.reserve(required);
  const Field& f = *field;
  std::vector<Code> digits(free, 0);
  for (std::uint64_t idx = 0; idx < required; ++idx) {
    UTMatrix p = UTMatrix::identity(field, n);
    UTMatrix q(field, n);
    std::size_t d = 0;
    for (auto [a, b] : par.p_cells) p.set(a, b, digits[d++]);
    for (auto [a, b] : par.q_cells) {
      q.set(a, b, digits[d]);
      q.set(n - 1 - b, n - 1 - a, f.neg(digits[d]));
      ++d;
    }
    UTMatrix x(field, 2 * n);
    x.put_block(0, 0, p);
    x.put_block(0, n, p * q);
    x.put_block(n, n, p.unitriangular_inverse().transposed().flipped());
    table.elements.push_back(std::move(x));
    for (std::size_t k = 0; k < free; ++k) {
      if (++digits[k] < f.q()) break;
      digits[k] = 0;
    }
  }
  return table;
}

LabelledPartition classify(const UTMatrix& x, int n) {
  const UTMatrix reduced = verge_reduce(x_to_y(x));
  if (!reduced.is_arc_form() || !membership(reduced, MatrixSet::algebra_D))
    throw Error(ErrorKind::invalid_partition, "reduced form is not an arc-form element of u^D:\n" + reduced.to_string());
  return partition_of(reduced, Family::D, n);
}

void superclass_partition(GroupTable& table) {
  std::map<LabelledPartition, std::vector<std::size_t>> members;
  std::vector<LabelledPartition> per_element;
  per_element.reserve(table.elements.size());
  for (std::size_t k = 0; k < table.elements.size(); ++k) {
    per_element.push_back(classify(table.elements[k], table.n));
    members[per_element.back()].push_back(k);
  }
  table.labels.clear();
  table.class_sizes.clear();
  table.representatives.clear();
  table.index_.clear();
  for (const auto& [label, elems] : members) {
    table.index_.emplace(label, table.labels.size());
    table.labels.push_back(label);
    table.class_sizes.push_back(elems.size());
    table.representatives.push_back(elems.front());
  }
  table.class_of.resize(table.elements.size());
  for (std::size_t k = 0; k < per_element.size(); ++k) table.class_of[k] = table.index_.at(per_element[k]);
}

const CycValue& ClassFunction::at(const LabelledPartition& lambda) const {
  auto it = values.find(lambda);
  if (it == values.end()) throw Error(ErrorKind::context_mismatch, "class function undefined at " + lambda.to_string());
  return it->second;
}

ClassFunction indicator(const GroupTable& table, const LabelledPartition& lambda) {
  ClassFunction f{table.family, table.n, table.field, {}};
  const unsigned p = table.field->p();
  for (const auto& label : table.labels) f.values.emplace(label, CycValue::rational(p, label == lambda ? 1 : 0));
  return f;
}

CycValue inner_product(const ClassFunction& f, const ClassFunction& g, const GroupTable& table) {
  if (f.n != table.n || g.n != table.n || !f.field->same_as(*table.field) || !g.field->same_as(*table.field))
    throw Error(ErrorKind::context_mismatch, "class functions and group table disagree on (n, q)");
  CycValue sum(table.field->p());
  for (std::size_t k = 0; k < table.labels.size(); ++k) {
    const CycValue term = f.at(table.labels[k]) * g.at(table.labels[k]).conj();
    sum += term.scaled(mpq_class(mpz_class(std::to_string(table.class_sizes[k]))));
  }
  return sum.scaled(mpq_class(1, 1) / mpq_class(mpz_class(std::to_string(table.order()))));
}

UTMatrix embed_block_pair(const UTMatrix& u1, const UTMatrix& u2, Subset a, int n) {
  const std::vector<int> in_a = subset_elements(a, n);
  std::vector<int> in_c;
  for (int k = 1; k <= n; ++k)
    if (!((a >> (k - 1)) & 1u)) in_c.push_back(k);
  const int k1 = static_cast<int>(in_a.size());
  const int k2 = static_cast<int>(in_c.size());
  if (u1.size() != 2 * k1 || u2.size() != 2 * k2)
    throw Error(ErrorKind::context_mismatch, "block sizes do not match the split");

  const SignedOrder big(Family::D, n);
  UTMatrix x = UTMatrix::identity(u1.field(), 2 * n);
  auto place = [&](const UTMatrix& u, const std::vector<int>& elems) {
    const SignedOrder small(Family::D, static_cast<int>(elems.size()));
    auto lift = [&](int pos) {
      const int v = small.value_at(pos);
      return big.pos(v > 0 ? elems[v - 1] : -elems[-v - 1]) - 1;
    };
    for (int r = 0; r < u.size(); ++r)
      for (int c = 0; c < u.size(); ++c) x.set(lift(r + 1), lift(c + 1), u(r, c));
  };
  place(u1, in_a);
  place(u2, in_c);
  return x;
}

RestrictionMap restriction_map(Subset a, int n, const GroupTable& left, const GroupTable& right) {
  if (!left.classified() || !right.classified())
    throw Error(ErrorKind::context_mismatch, "factor tables must be classified first");
  if (n < 32 && (a >> n) != 0) throw Error(ErrorKind::malformed_input, "subset is not contained in [n]");
  const int na = static_cast<int>(subset_elements(a, n).size());
  if (left.n != na || right.n != n - na) throw Error(ErrorKind::context_mismatch, "factor tables do not match the split");

  RestrictionMap map{n, a, {}};
  map.images.reserve(left.elements.size() * right.elements.size());
  for (std::size_t i1 = 0; i1 < left.elements.size(); ++i1)
    for (std::size_t i2 = 0; i2 < right.elements.size(); ++i2) {
      const UTMatrix x = embed_block_pair(left.elements[i1], right.elements[i2], a, n);
      map.images.emplace_back(std::make_pair(left.labels[left.class_of[i1]], right.labels[right.class_of[i2]]),
                              classify(x, n));
    }
  return map;
}

PairClassFunction restrict_eval(const ClassFunction& f, const RestrictionMap& map) {
  if (f.n != map.n) throw Error(ErrorKind::context_mismatch, "class function and restriction map disagree on n");
  PairClassFunction out;
  for (const auto& [key, label] : map.images) {
    const CycValue& v = f.at(label);
    auto [it, inserted] = out.values.emplace(key, v);
    if (!inserted && !(it->second == v)) out.constant_on_classes = false;
  }
  return out;
}

PairClassFunction restrict_eval(const ClassFunction& f, Subset a, const GroupTable& left, const GroupTable& right) {
  return restrict_eval(f, restriction_map(a, f.n, left, right));
}

}  // namespace scd
