#include "scd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace scd {

const char* to_string(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::C: return "C";
    case Family::B: return "B";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "D" || s == "d") return Family::D;
  if (s == "C" || s == "c") return Family::C;
  if (s == "B" || s == "b") return Family::B;
  throw Error(ErrorKind::malformed_input, "unknown family '" + s + "' (expected D, C or B)");
}

SignedOrder::SignedOrder(Family family, int n)
    : family_(family), n_(n), size_(family == Family::B ? 2 * n + 1 : 2 * n) {
  if (n < 0) throw Error(ErrorKind::malformed_input, "n must be nonnegative");
}

bool SignedOrder::contains(int v) const {
  if (v == 0) return family_ == Family::B;
  return v >= -n_ && v <= n_;
}

int SignedOrder::pos(int v) const {
  if (v > 0) return v;
  if (v == 0) return n_ + 1;
  return size_ + 1 + v;
}

int SignedOrder::value_at(int p) const {
  if (p <= n_) return p;
  if (family_ == Family::B && p == n_ + 1) return 0;
  return p - size_ - 1;
}

namespace {

using ArcKey = std::tuple<int, int, int>;

ArcKey key(const SignedOrder& ord, const Arc& a) { return {ord.pos(a.i), ord.pos(a.j), a.label}; }

bool is_self_mirror(const Arc& a) { return a.i != 0 && a.j == -a.i; }

}  // namespace

LabelledPartition::LabelledPartition(Family family, int n, FieldPtr field)
    : family_(family), n_(n), field_(std::move(field)) {
  if (n < 0) throw Error(ErrorKind::malformed_input, "n must be nonnegative");
}

LabelledPartition::LabelledPartition(Family family, int n, FieldPtr field, std::vector<Arc> plus, bool)
    : family_(family), n_(n), field_(std::move(field)), plus_(std::move(plus)) {
  canonicalize();
}

void LabelledPartition::canonicalize() {
  const SignedOrder ord = order();
  std::sort(plus_.begin(), plus_.end(),
            [&](const Arc& a, const Arc& b) { return key(ord, a) < key(ord, b); });
}

Arc LabelledPartition::mirror(const Arc& a) const {
  if (is_self_mirror(a)) return a;
  return Arc{-a.j, -a.i, field_->neg(a.label)};
}

bool LabelledPartition::is_plus(const Arc& a) const {
  const SignedOrder ord = order();
  return ord.pos(a.i) + ord.pos(a.j) <= ord.size() + 1;
}

std::vector<Arc> LabelledPartition::arcs() const {
  std::vector<Arc> all;
  all.reserve(2 * plus_.size());
  for (const Arc& a : plus_) {
    all.push_back(a);
    if (!is_self_mirror(a)) all.push_back(mirror(a));
  }
  const SignedOrder ord = order();
  std::sort(all.begin(), all.end(), [&](const Arc& a, const Arc& b) { return key(ord, a) < key(ord, b); });
  return all;
}

std::size_t LabelledPartition::arc_count() const {
  std::size_t c = 0;
  for (const Arc& a : plus_) c += is_self_mirror(a) ? 1 : 2;
  return c;
}

const LabelledPartition& LabelledPartition::Validation::value() const {
  if (!ok()) {
    std::string msg = "invalid partition:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    throw Error(ErrorKind::invalid_partition, msg);
  }
  return partition.front();
}

namespace {

std::string arc_str(const Arc& a) {
  std::ostringstream out;
  out << "(" << a.i << "," << a.j << "," << int(a.label) << ")";
  return out.str();
}

}  // namespace

LabelledPartition::Validation LabelledPartition::validate(Family family, int n, FieldPtr field,
                                                          std::vector<Arc> arcs) {
  Validation result;
  const SignedOrder ord(family, n);
  auto report = [&](Violation::Kind kind, const Arc& a, const Arc& b, std::string msg) {
    result.violations.push_back(Violation{kind, a, b, std::move(msg)});
  };

  // Treat the input as a set.
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.i, a.j, a.label) < std::tie(b.i, b.j, b.label);
  });
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<Arc> well_formed;
  for (const Arc& a : arcs) {
    if (!ord.contains(a.i) || !ord.contains(a.j)) {
      report(Violation::Kind::out_of_range, a, a, "arc " + arc_str(a) + " has an endpoint outside the ground set");
      continue;
    }
    if (ord.pos(a.i) >= ord.pos(a.j)) {
      report(Violation::Kind::bad_order, a, a, "arc " + arc_str(a) + " does not go left to right");
      continue;
    }
    if (a.label == 0 || a.label >= field->q()) {
      report(Violation::Kind::zero_label, a, a, "arc " + arc_str(a) + " has a label outside F_q^*");
      continue;
    }
    if (is_self_mirror(a) && family != Family::C) {
      report(Violation::Kind::forbidden_arc, a, a,
             "arc " + arc_str(a) + " joins i and -i, allowed only in family C");
      continue;
    }
    well_formed.push_back(a);
  }

  LabelledPartition probe(family, n, field);
  for (const Arc& a : well_formed) {
    if (is_self_mirror(a)) continue;
    const Arc m = probe.mirror(a);
    if (std::find(well_formed.begin(), well_formed.end(), m) == well_formed.end())
      report(Violation::Kind::mirror, a, m, "arc " + arc_str(a) + " lacks its mirror " + arc_str(m));
  }
  for (std::size_t x = 0; x < well_formed.size(); ++x)
    for (std::size_t y = x + 1; y < well_formed.size(); ++y) {
      const Arc& a = well_formed[x];
      const Arc& b = well_formed[y];
      if (a.i == b.i)
        report(Violation::Kind::shared_left, a, b,
               "arcs " + arc_str(a) + " and " + arc_str(b) + " share the left endpoint " + std::to_string(a.i));
      if (a.j == b.j)
        report(Violation::Kind::shared_right, a, b,
               "arcs " + arc_str(a) + " and " + arc_str(b) + " share the right endpoint " + std::to_string(a.j));
    }

  if (result.violations.empty()) {
    std::vector<Arc> plus;
    for (const Arc& a : well_formed)
      if (probe.is_plus(a)) plus.push_back(a);
    result.partition.push_back(LabelledPartition(family, n, std::move(field), std::move(plus), true));
  }
  return result;
}

LabelledPartition LabelledPartition::from_plus(Family family, int n, FieldPtr field, std::vector<Arc> plus) {
  LabelledPartition probe(family, n, field);
  std::vector<Arc> full;
  for (const Arc& a : plus) {
    full.push_back(a);
    const SignedOrder ord(family, n);
    if (ord.contains(a.i) && ord.contains(a.j) && a.label < field->q() && !probe.is_plus(a))
      throw Error(ErrorKind::invalid_partition, "arc " + arc_str(a) + " is not a positive representative");
    if (!is_self_mirror(a) && a.label < field->q()) full.push_back(probe.mirror(a));
  }
  return validate(family, n, std::move(field), std::move(full)).value();
}

LabelledPartition LabelledPartition::widened(int n_new) const {
  if (n_new < n_) throw Error(ErrorKind::malformed_input, "cannot narrow a partition");
  if (family_ == Family::B) throw Error(ErrorKind::unsupported_family, "family B partitions cannot be widened");
  return LabelledPartition(family_, n_new, field_, plus_, true);
}

bool LabelledPartition::arcs_subset_of(const LabelledPartition& other) const {
  for (const Arc& a : plus_)
    if (std::find(other.plus_.begin(), other.plus_.end(), a) == other.plus_.end()) return false;
  return true;
}

std::string LabelledPartition::to_string() const {
  std::ostringstream out;
  out << scd::to_string(family_) << n_ << "{";
  for (std::size_t k = 0; k < plus_.size(); ++k) {
    if (k) out << ",";
    out << arc_str(plus_[k]);
  }
  out << "}";
  return out.str();
}

std::strong_ordering operator<=>(const LabelledPartition& a, const LabelledPartition& b) {
  if (auto c = a.family_ <=> b.family_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const SignedOrder ord = a.order();
  const std::size_t len = std::min(a.plus_.size(), b.plus_.size());
  for (std::size_t k = 0; k < len; ++k)
    if (auto c = key(ord, a.plus_[k]) <=> key(ord, b.plus_[k]); c != 0) return c;
  return a.plus_.size() <=> b.plus_.size();
}

namespace {

struct Candidate {
  int x, y;    // positions of the plus arc
  int mx, my;  // positions of its mirror (equal to x, y when self-mirrored)
  int i, j;
};

struct Extender {
  const LabelledPartition& base;
  SignedOrder ord;
  std::vector<Candidate> cands;
  std::vector<char> row_used, col_used;
  std::vector<Arc> chosen;
  unsigned q;

  Extender(const LabelledPartition& b, const std::function<bool(int, int)>* allow)
      : base(b), ord(b.order()), q(b.field()->q()) {
    const int size = ord.size();
    row_used.assign(size + 2, 0);
    col_used.assign(size + 2, 0);
    for (const Arc& a : base.arcs()) {
      row_used[ord.pos(a.i)] = 1;
      col_used[ord.pos(a.j)] = 1;
    }
    for (int x = 1; x <= size; ++x)
      for (int y = x + 1; y <= size; ++y) {
        if (x + y > size + 1) continue;
        const bool self = x + y == size + 1;
        if (self && ord.family() != Family::C) continue;
        if (allow && !(*allow)(x, y)) continue;
        const int mx = size + 1 - y, my = size + 1 - x;
        if (row_used[x] || col_used[y] || row_used[mx] || col_used[my]) continue;
        cands.push_back({x, y, mx, my, ord.value_at(x), ord.value_at(y)});
      }
  }

  bool fits(const Candidate& c) const {
    return !row_used[c.x] && !col_used[c.y] && !row_used[c.mx] && !col_used[c.my];
  }

  void mark(const Candidate& c, char v) {
    row_used[c.x] = col_used[c.y] = row_used[c.mx] = col_used[c.my] = v;
  }

  void run(std::size_t start, const std::function<void(const LabelledPartition&)>& visit) {
    std::vector<Arc> plus(base.plus().begin(), base.plus().end());
    plus.insert(plus.end(), chosen.begin(), chosen.end());
    visit(LabelledPartition::from_plus(base.family(), base.n(), base.field(), std::move(plus)));
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      const Candidate& c = cands[idx];
      if (!fits(c)) continue;
      mark(c, 1);
      for (unsigned label = 1; label < q; ++label) {
        chosen.push_back(Arc{c.i, c.j, static_cast<Code>(label)});
        run(idx + 1, visit);
        chosen.pop_back();
      }
      mark(c, 0);
    }
  }

  std::uint64_t count(std::size_t start) {
    std::uint64_t total = 1;
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      const Candidate& c = cands[idx];
      if (!fits(c)) continue;
      mark(c, 1);
      total += (q - 1) * count(idx + 1);
      mark(c, 0);
    }
    return total;
  }
};

}  // namespace

void extend_partition(const LabelledPartition& base, const std::function<bool(int, int)>& allow,
                      const std::function<void(const LabelledPartition&)>& visit) {
  Extender ext(base, allow ? &allow : nullptr);
  ext.run(0, visit);
}

void enumerate_partitions(Family family, int n, const FieldPtr& field,
                          const std::function<void(const LabelledPartition&)>& visit) {
  extend_partition(LabelledPartition(family, n, field), {}, visit);
}

std::vector<LabelledPartition> enumerate_partitions(Family family, int n, const FieldPtr& field) {
  std::vector<LabelledPartition> out;
  enumerate_partitions(family, n, field, [&](const LabelledPartition& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_partitions(Family family, int n, const FieldPtr& field) {
  LabelledPartition empty(family, n, field);
  Extender ext(empty, nullptr);
  return ext.count(0);
}

std::vector<LabelledPartition> superset_closure(const LabelledPartition& lambda) {
  std::vector<LabelledPartition> out;
  extend_partition(lambda, {}, [&](const LabelledPartition& p) { out.push_back(p); });
  return out;
}

std::vector<int> subset_elements(Subset a, int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (a & (Subset{1} << (k - 1))) out.push_back(k);
  return out;
}

namespace {

void require_signed_family(const LabelledPartition& p, const char* what) {
  if (p.family() == Family::B)
    throw Error(ErrorKind::unsupported_family, std::string(what) + " is implemented for families D and C only");
}

}  // namespace

Restriction restrict_standardize(const LabelledPartition& lambda, Subset a) {
  require_signed_family(lambda, "restriction");
  const int n = lambda.n();
  if (n < 32 && (a >> n) != 0) throw Error(ErrorKind::malformed_input, "subset is not contained in [n]");
  auto in_a = [&](int v) { return (a >> (std::abs(v) - 1)) & 1u; };
  std::vector<int> rank(n + 1, 0);
  int na = 0, nc = 0;
  for (int k = 1; k <= n; ++k) rank[k] = in_a(k) ? ++na : ++nc;
  auto relabel = [&](int v) { return v > 0 ? rank[v] : -rank[-v]; };

  std::vector<Arc> first, second;
  bool clean = true;
  for (const Arc& arc : lambda.plus()) {
    const bool li = in_a(arc.i), lj = in_a(arc.j);
    const Arc moved{relabel(arc.i), relabel(arc.j), arc.label};
    if (li && lj)
      first.push_back(moved);
    else if (!li && !lj)
      second.push_back(moved);
    else
      clean = false;
  }
  return Restriction{LabelledPartition::from_plus(lambda.family(), na, lambda.field(), std::move(first)),
                     LabelledPartition::from_plus(lambda.family(), nc, lambda.field(), std::move(second)), clean};
}

LabelledPartition restrict_unstandardized(const LabelledPartition& lambda, Subset a) {
  require_signed_family(lambda, "restriction");
  auto in_a = [&](int v) { return (a >> (std::abs(v) - 1)) & 1u; };
  std::vector<Arc> kept;
  for (const Arc& arc : lambda.plus())
    if (in_a(arc.i) && in_a(arc.j)) kept.push_back(arc);
  return LabelledPartition::from_plus(lambda.family(), lambda.n(), lambda.field(), std::move(kept));
}

LabelledPartition shift_up(const LabelledPartition& mu, int k) {
  require_signed_family(mu, "shifting");
  if (k < 0) throw Error(ErrorKind::malformed_input, "shift must be nonnegative");
  auto shift = [k](int v) { return v > 0 ? v + k : v - k; };
  std::vector<Arc> moved;
  for (const Arc& arc : mu.plus()) moved.push_back(Arc{shift(arc.i), shift(arc.j), arc.label});
  return LabelledPartition::from_plus(mu.family(), mu.n() + k, mu.field(), std::move(moved));
}

LabelledPartition concat(const LabelledPartition& lambda, const LabelledPartition& mu) {
  if (lambda.family() != mu.family())
    throw Error(ErrorKind::context_mismatch, "cannot join partitions of different families");
  if (!lambda.field()->same_as(*mu.field()))
    throw Error(ErrorKind::field_mismatch, "cannot join partitions over different fields");
  const LabelledPartition shifted = shift_up(mu, lambda.n());
  std::vector<Arc> plus(lambda.plus().begin(), lambda.plus().end());
  plus.insert(plus.end(), shifted.plus().begin(), shifted.plus().end());
  return LabelledPartition::from_plus(lambda.family(), shifted.n(), lambda.field(), std::move(plus));
}

int component_count(const LabelledPartition& lambda) {
  const int n = lambda.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arc& arc : lambda.plus()) {
    if (arc.i == 0 || arc.j == 0) continue;
    parent[find(std::abs(arc.i))] = find(std::abs(arc.j));
  }
  int count = 0;
  for (int v = 1; v <= n; ++v)
    if (find(v) == v) ++count;
  return count;
}

}  // namespace scd
