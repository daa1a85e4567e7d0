#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "scd/partition.hpp"

namespace scd {

enum class Basis { kappa, P };

const char* to_string(Basis b);
Basis basis_from_string(const std::string& s);

/// A finite linear combination of kappa_lambda or P_lambda symbols (one basis,
/// one family, one field) with rational coefficients. Grades may be mixed.
class SCElement {
 public:
  using Terms = std::map<LabelledPartition, mpq_class>;

  SCElement(Family family, FieldPtr field, Basis basis);

  static SCElement symbol(Basis basis, const LabelledPartition& lambda, const mpq_class& coef = 1);
  /// The grade-0 symbol, which is the unit in both bases.
  static SCElement unit(Family family, FieldPtr field, Basis basis);

  Family family() const { return family_; }
  const FieldPtr& field() const { return field_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coef * symbol(lambda); zero results are pruned.
  void add(const LabelledPartition& lambda, const mpq_class& coef);
  mpq_class coefficient(const LabelledPartition& lambda) const;

  SCElement operator+(const SCElement& o) const;
  SCElement operator-(const SCElement& o) const;
  SCElement scaled(const mpq_class& s) const;
  SCElement& operator+=(const SCElement& o);

  /// Throws mixed_basis / context_mismatch / field_mismatch.
  void require_compatible(const SCElement& o) const;

  std::string to_string() const;

  friend bool operator==(const SCElement& a, const SCElement& b) {
    return a.family_ == b.family_ && a.basis_ == b.basis_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
  }

 private:
  void check_label(const LabelledPartition& lambda) const;

  Family family_;
  FieldPtr field_;
  Basis basis_;
  Terms terms_;
};

/// Element of SC (x) SC in a single basis.
class TensorElement {
 public:
  using Key = std::pair<LabelledPartition, LabelledPartition>;
  using Terms = std::map<Key, mpq_class>;

  TensorElement(Family family, FieldPtr field, Basis basis);

  Family family() const { return family_; }
  const FieldPtr& field() const { return field_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LabelledPartition& left, const LabelledPartition& right, const mpq_class& coef);
  TensorElement& operator+=(const TensorElement& o);
  std::string to_string() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.family_ == b.family_ && a.basis_ == b.basis_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
  }

 private:
  Family family_;
  FieldPtr field_;
  Basis basis_;
  Terms terms_;
};

/// Product, coproduct, basis change and antipode, with per-symbol memo tables.
/// One instance serves one (family, field); family B is rejected.
class HopfAlgebra {
 public:
  HopfAlgebra(Family family, FieldPtr field);

  Family family() const { return family_; }
  const FieldPtr& field() const { return field_; }

  SCElement product(const SCElement& x, const SCElement& y);
  TensorElement coproduct(const SCElement& x);
  /// The (A | A^c) part of the coproduct: only the terms coming from this split.
  TensorElement coproduct_component(const SCElement& x, Subset a);
  mpq_class counit(const SCElement& x) const;
  SCElement antipode(const SCElement& x);

  /// kappa -> P by the recursion kappa_lambda = P_lambda - sum_{mu > lambda} kappa_mu.
  SCElement to_P(const SCElement& x);
  /// P -> kappa by superset closure.
  SCElement to_kappa(const SCElement& x);
  SCElement in_basis(const SCElement& x, Basis b);
  TensorElement in_basis(const TensorElement& t, Basis b);

  /// Componentwise product in SC (x) SC.
  TensorElement multiply(const TensorElement& a, const TensorElement& b);

  /// kappa_lambda * kappa_mu straight from the crossing-arc enumeration.
  SCElement kappa_product(const LabelledPartition& lambda, const LabelledPartition& mu);

 private:
  void require_context(const SCElement& x) const;
  const SCElement& kappa_in_P(const LabelledPartition& lambda);
  const SCElement& antipode_of(Basis basis, const LabelledPartition& lambda);

  Family family_;
  FieldPtr field_;
  std::map<LabelledPartition, SCElement> kappa_in_P_;
  std::map<std::pair<Basis, LabelledPartition>, SCElement> antipode_;
};

/// Free-function conveniences over a temporary HopfAlgebra.
SCElement product(const SCElement& x, const SCElement& y);
TensorElement coproduct(const SCElement& x);
mpq_class counit(const SCElement& x);
SCElement antipode(const SCElement& x);
SCElement to_P(const SCElement& x);
SCElement to_kappa(const SCElement& x);

}  // namespace scd
