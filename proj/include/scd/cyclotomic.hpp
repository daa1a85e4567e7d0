#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "scd/ffield.hpp"

namespace scd {

/// Exact element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^{p-2}.
/// Values are kept reduced modulo the p-th cyclotomic polynomial, so equality
/// is coefficientwise.
class CycValue {
 public:
  explicit CycValue(unsigned p);
  CycValue(unsigned p, std::vector<mpq_class> coeffs);

  static CycValue rational(unsigned p, const mpq_class& value);
  static CycValue zeta_power(unsigned p, long exponent);

  unsigned p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const mpq_class& rational_part() const { return c_[0]; }

  CycValue operator+(const CycValue& o) const;
  CycValue operator-(const CycValue& o) const;
  CycValue operator*(const CycValue& o) const;
  CycValue operator-() const;
  CycValue& operator+=(const CycValue& o);
  CycValue& operator*=(const CycValue& o);

  CycValue scaled(const mpq_class& s) const;
  /// Complex conjugation, zeta -> zeta^{p-1}.
  CycValue conj() const;

  /// Smallest positive rational s with coeffs / s integral (0 for zero), plus
  /// the resulting primitive integer vector.
  std::pair<mpq_class, std::vector<mpz_class>> content() const;

  std::string to_string() const;

  friend bool operator==(const CycValue& a, const CycValue& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  // Reduces a length-p vector (basis 1..zeta^{p-1}) into the power basis.
  static std::vector<mpq_class> reduce(std::vector<mpq_class> full);
  void require_same(const CycValue& o) const;

  unsigned p_;
  std::vector<mpq_class> c_;
};

/// The additive character theta(a) = zeta_p^{Tr(a)}.
CycValue theta(const FieldElement& a);
CycValue theta(const Field& field, Code a);

}  // namespace scd
