#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "scd/error.hpp"

namespace scd {

/// Configuration of F_q, q = p^r. For r > 1 the modulus lists the coefficients
/// of an irreducible degree-r polynomial over F_p, lowest degree first.
struct FieldSpec {
  unsigned p = 3;
  unsigned r = 1;
  std::vector<unsigned> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Elements of F_q are addressed by a code in [0, q): the base-p digits of the
/// code are the coefficients of the polynomial representative.
using Code = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_q with precomputed operation tables. q is capped at 255 so that codes fit
/// in a byte; this covers every size the brute-force machinery can reach.
class Field {
 public:
  static constexpr unsigned max_order = 255;

  /// Validates the spec (odd prime p, irreducible modulus when r > 1).
  static FieldPtr make(FieldSpec spec);
  static FieldPtr prime(unsigned p) { return make(FieldSpec{p, 1, {}}); }
  /// Splits q into p^r; r > 1 requires a modulus.
  static FieldPtr of_order(unsigned q, std::vector<unsigned> modulus = {});

  const FieldSpec& spec() const { return spec_; }
  unsigned p() const { return spec_.p; }
  unsigned r() const { return spec_.r; }
  unsigned q() const { return q_; }

  Code add(Code a, Code b) const { return add_[a * q_ + b]; }
  Code sub(Code a, Code b) const { return add_[a * q_ + neg_[b]]; }
  Code mul(Code a, Code b) const { return mul_[a * q_ + b]; }
  Code neg(Code a) const { return neg_[a]; }
  /// Throws division_by_zero on 0.
  Code inv(Code a) const;
  /// Absolute trace F_q -> F_p, returned as an integer in [0, p).
  unsigned trace(Code a) const { return trace_[a]; }

  std::vector<unsigned> digits(Code a) const;
  Code from_digits(const std::vector<unsigned>& digits) const;
  /// Codes of the F_p-basis 1, t, ..., t^{r-1}.
  std::vector<Code> prime_basis() const;

  bool same_as(const Field& other) const { return spec_ == other.spec_; }

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  unsigned q_ = 0;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;
  std::vector<unsigned> trace_;
};

bool is_prime(unsigned n);

/// Value type for a single element of F_q.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<unsigned> coords() const { return field_->digits(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_->same_as(*b.field_);
  }

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Code code_;
};

}  // namespace scd
