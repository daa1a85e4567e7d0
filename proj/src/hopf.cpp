#include "scd/hopf.hpp"

#include <cstdlib>
#include <sstream>

namespace scd {

const char* to_string(Basis b) { return b == Basis::kappa ? "kappa" : "P"; }

Basis basis_from_string(const std::string& s) {
  if (s == "kappa") return Basis::kappa;
  if (s == "P") return Basis::P;
  throw Error(ErrorKind::malformed_input, "unknown basis '" + s + "' (expected kappa or P)");
}

SCElement::SCElement(Family family, FieldPtr field, Basis basis)
    : family_(family), field_(std::move(field)), basis_(basis) {}

SCElement SCElement::symbol(Basis basis, const LabelledPartition& lambda, const mpq_class& coef) {
  SCElement x(lambda.family(), lambda.field(), basis);
  x.add(lambda, coef);
  return x;
}

SCElement SCElement::unit(Family family, FieldPtr field, Basis basis) {
  LabelledPartition empty(family, 0, field);
  return symbol(basis, empty);
}

void SCElement::check_label(const LabelledPartition& lambda) const {
  if (lambda.family() != family_) throw Error(ErrorKind::context_mismatch, "symbol from another family");
  if (!lambda.field()->same_as(*field_)) throw Error(ErrorKind::field_mismatch, "symbol over another field");
}

void SCElement::add(const LabelledPartition& lambda, const mpq_class& coef) {
  check_label(lambda);
  mpq_class c = coef;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class SCElement::coefficient(const LabelledPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SCElement::require_compatible(const SCElement& o) const {
  if (basis_ != o.basis_) throw Error(ErrorKind::mixed_basis, "operands are expressed in different bases");
  if (family_ != o.family_) throw Error(ErrorKind::context_mismatch, "operands belong to different families");
  if (!field_->same_as(*o.field_)) throw Error(ErrorKind::field_mismatch, "operands live over different fields");
}

SCElement& SCElement::operator+=(const SCElement& o) {
  require_compatible(o);
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

SCElement SCElement::operator+(const SCElement& o) const {
  SCElement r = *this;
  r += o;
  return r;
}

SCElement SCElement::operator-(const SCElement& o) const {
  SCElement r = *this;
  r += o.scaled(-1);
  return r;
}

SCElement SCElement::scaled(const mpq_class& s) const {
  SCElement r(family_, field_, basis_);
  if (s == 0) return r;
  for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, c * s);
  return r;
}

std::string SCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    out << (first ? "" : " + ") << c.get_str() << "*" << scd::to_string(basis_) << lambda.to_string();
    first = false;
  }
  return out.str();
}

TensorElement::TensorElement(Family family, FieldPtr field, Basis basis)
    : family_(family), field_(std::move(field)), basis_(basis) {}

void TensorElement::add(const LabelledPartition& left, const LabelledPartition& right, const mpq_class& coef) {
  if (left.family() != family_ || right.family() != family_)
    throw Error(ErrorKind::context_mismatch, "symbol from another family");
  if (!left.field()->same_as(*field_) || !right.field()->same_as(*field_))
    throw Error(ErrorKind::field_mismatch, "symbol over another field");
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(Key{left, right}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (basis_ != o.basis_) throw Error(ErrorKind::mixed_basis, "tensors expressed in different bases");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const char* b = scd::to_string(basis_);
  for (const auto& [key, c] : terms_) {
    out << (first ? "" : " + ") << c.get_str() << "*" << b << key.first.to_string() << " (x) " << b
        << key.second.to_string();
    first = false;
  }
  return out.str();
}

HopfAlgebra::HopfAlgebra(Family family, FieldPtr field) : family_(family), field_(std::move(field)) {
  if (family_ == Family::B)
    throw Error(ErrorKind::unsupported_family, "family B carries no product (odd-size matrices)");
}

void HopfAlgebra::require_context(const SCElement& x) const {
  if (x.family() != family_) throw Error(ErrorKind::context_mismatch, "element from another family");
  if (!x.field()->same_as(*field_)) throw Error(ErrorKind::field_mismatch, "element over another field");
}

SCElement HopfAlgebra::kappa_product(const LabelledPartition& lambda, const LabelledPartition& mu) {
  const LabelledPartition base = concat(lambda, mu);
  const int k = lambda.n();
  const SignedOrder ord = base.order();
  SCElement out(family_, field_, Basis::kappa);
  auto crossing = [&](int x, int y) { return (std::abs(ord.value_at(x)) <= k) != (std::abs(ord.value_at(y)) <= k); };
  extend_partition(base, crossing, [&](const LabelledPartition& nu) { out.add(nu, 1); });
  return out;
}

SCElement HopfAlgebra::product(const SCElement& x, const SCElement& y) {
  x.require_compatible(y);
  require_context(x);
  SCElement out(family_, field_, x.basis());
  for (const auto& [lambda, a] : x.terms())
    for (const auto& [mu, b] : y.terms()) {
      if (x.basis() == Basis::P) {
        out.add(concat(lambda, mu), a * b);
      } else {
        for (const auto prod = kappa_product(lambda, mu); const auto& [nu, c] : prod.terms()) out.add(nu, a * b * c);
      }
    }
  return out;
}

TensorElement HopfAlgebra::coproduct(const SCElement& x) {
  require_context(x);
  TensorElement out(family_, field_, x.basis());
  for (const auto& [lambda, c] : x.terms()) {
    const int n = lambda.n();
    if (n > 30) throw Error(ErrorKind::budget_exceeded, "coproduct over more than 2^30 subsets");
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
      const Restriction r = restrict_standardize(lambda, a);
      if (r.splits_cleanly) out.add(r.first, r.second, c);
    }
  }
  return out;
}

TensorElement HopfAlgebra::coproduct_component(const SCElement& x, Subset a) {
  require_context(x);
  TensorElement out(family_, field_, x.basis());
  for (const auto& [lambda, c] : x.terms()) {
    const Restriction r = restrict_standardize(lambda, a);
    if (r.splits_cleanly) out.add(r.first, r.second, c);
  }
  return out;
}

mpq_class HopfAlgebra::counit(const SCElement& x) const {
  require_context(x);
  return x.coefficient(LabelledPartition(family_, 0, field_));
}

const SCElement& HopfAlgebra::kappa_in_P(const LabelledPartition& lambda) {
  if (auto it = kappa_in_P_.find(lambda); it != kappa_in_P_.end()) return it->second;
  SCElement r = SCElement::symbol(Basis::P, lambda);
  for (const LabelledPartition& mu : superset_closure(lambda))
    if (!(mu == lambda)) r = r - kappa_in_P(mu);
  return kappa_in_P_.emplace(lambda, std::move(r)).first->second;
}

SCElement HopfAlgebra::to_P(const SCElement& x) {
  require_context(x);
  if (x.basis() == Basis::P) throw Error(ErrorKind::mixed_basis, "element is already in the P basis");
  SCElement out(family_, field_, Basis::P);
  for (const auto& [lambda, c] : x.terms()) out += kappa_in_P(lambda).scaled(c);
  return out;
}

SCElement HopfAlgebra::to_kappa(const SCElement& x) {
  require_context(x);
  if (x.basis() == Basis::kappa) throw Error(ErrorKind::mixed_basis, "element is already in the kappa basis");
  SCElement out(family_, field_, Basis::kappa);
  for (const auto& [lambda, c] : x.terms())
    for (const LabelledPartition& mu : superset_closure(lambda)) out.add(mu, c);
  return out;
}

SCElement HopfAlgebra::in_basis(const SCElement& x, Basis b) {
  if (x.basis() == b) return x;
  return b == Basis::P ? to_P(x) : to_kappa(x);
}

TensorElement HopfAlgebra::in_basis(const TensorElement& t, Basis b) {
  if (t.basis() == b) return t;
  TensorElement out(family_, field_, b);
  for (const auto& [key, c] : t.terms()) {
    const SCElement left = in_basis(SCElement::symbol(t.basis(), key.first), b);
    const SCElement right = in_basis(SCElement::symbol(t.basis(), key.second), b);
    for (const auto& [l, cl] : left.terms())
      for (const auto& [r, cr] : right.terms()) out.add(l, r, c * cl * cr);
  }
  return out;
}

TensorElement HopfAlgebra::multiply(const TensorElement& a, const TensorElement& b) {
  if (a.basis() != b.basis()) throw Error(ErrorKind::mixed_basis, "tensors expressed in different bases");
  TensorElement out(family_, field_, a.basis());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const SCElement left = product(SCElement::symbol(a.basis(), ka.first), SCElement::symbol(a.basis(), kb.first));
      const SCElement right = product(SCElement::symbol(a.basis(), ka.second), SCElement::symbol(a.basis(), kb.second));
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) out.add(l, r, ca * cb * cl * cr);
    }
  return out;
}

const SCElement& HopfAlgebra::antipode_of(Basis basis, const LabelledPartition& lambda) {
  const auto key = std::make_pair(basis, lambda);
  if (auto it = antipode_.find(key); it != antipode_.end()) return it->second;
  const SCElement x = SCElement::symbol(basis, lambda);
  SCElement s(family_, field_, basis);
  if (lambda.n() == 0) {
    s = x;
  } else {
    // S(x) = -x - sum S(x') x'' over the reduced coproduct.
    s = x.scaled(-1);
    for (const auto delta = coproduct(x); const auto& [k, c] : delta.terms()) {
      if (k.first.n() == 0 || k.first.n() == lambda.n()) continue;
      const SCElement left = antipode_of(basis, k.first);
      s = s - product(left, SCElement::symbol(basis, k.second)).scaled(c);
    }
  }
  return antipode_.emplace(key, std::move(s)).first->second;
}

SCElement HopfAlgebra::antipode(const SCElement& x) {
  require_context(x);
  SCElement out(family_, field_, x.basis());
  for (const auto& [lambda, c] : x.terms()) out += antipode_of(x.basis(), lambda).scaled(c);
  return out;
}

SCElement product(const SCElement& x, const SCElement& y) { return HopfAlgebra(x.family(), x.field()).product(x, y); }
TensorElement coproduct(const SCElement& x) { return HopfAlgebra(x.family(), x.field()).coproduct(x); }
mpq_class counit(const SCElement& x) { return HopfAlgebra(x.family(), x.field()).counit(x); }
SCElement antipode(const SCElement& x) { return HopfAlgebra(x.family(), x.field()).antipode(x); }
SCElement to_P(const SCElement& x) { return HopfAlgebra(x.family(), x.field()).to_P(x); }
SCElement to_kappa(const SCElement& x) { return HopfAlgebra(x.family(), x.field()).to_kappa(x); }

}  // namespace scd
