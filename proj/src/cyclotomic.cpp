#include "scd/cyclotomic.hpp"

#include <sstream>

namespace scd {

CycValue::CycValue(unsigned p) : p_(p), c_(p - 1) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::invalid_field, "cyclotomic order must be an odd prime");
}

CycValue::CycValue(unsigned p, std::vector<mpq_class> coeffs) : CycValue(p) {
  for (auto& x : coeffs) x.canonicalize();
  if (coeffs.size() == p) {
    c_ = reduce(std::move(coeffs));
  } else if (coeffs.size() == p - 1) {
    c_ = std::move(coeffs);
  } else {
    throw Error(ErrorKind::malformed_input, "cyclotomic coefficient vector has wrong length");
  }
}

CycValue CycValue::rational(unsigned p, const mpq_class& value) {
  CycValue v(p);
  v.c_[0] = value;
  v.c_[0].canonicalize();
  return v;
}

CycValue CycValue::zeta_power(unsigned p, long exponent) {
  std::vector<mpq_class> full(p);
  long e = exponent % static_cast<long>(p);
  if (e < 0) e += p;
  full[e] = 1;
  return CycValue(p, std::move(full));
}

std::vector<mpq_class> CycValue::reduce(std::vector<mpq_class> full) {
  const std::size_t p = full.size();
  const mpq_class top = full[p - 1];
  full.pop_back();
  if (sgn(top) != 0)
    for (auto& x : full) x -= top;
  return full;
}

void CycValue::require_same(const CycValue& o) const {
  if (p_ != o.p_) throw Error(ErrorKind::field_mismatch, "cyclotomic values of different orders");
}

bool CycValue::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycValue::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

CycValue CycValue::operator+(const CycValue& o) const {
  CycValue r = *this;
  r += o;
  return r;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  require_same(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycValue CycValue::operator-(const CycValue& o) const {
  require_same(o);
  CycValue r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

CycValue CycValue::operator-() const {
  CycValue r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycValue CycValue::operator*(const CycValue& o) const {
  require_same(o);
  std::vector<mpq_class> full(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      full[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  return CycValue(p_, std::move(full));
}

CycValue& CycValue::operator*=(const CycValue& o) {
  *this = *this * o;
  return *this;
}

CycValue CycValue::scaled(const mpq_class& s) const {
  CycValue r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycValue CycValue::conj() const {
  std::vector<mpq_class> full(p_);
  for (std::size_t k = 0; k < c_.size(); ++k) full[(p_ - k) % p_] += c_[k];
  return CycValue(p_, std::move(full));
}

std::pair<mpq_class, std::vector<mpz_class>> CycValue::content() const {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : c_) {
    if (sgn(x) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(c_.size(), 0);
  if (num_gcd == 0) return {mpq_class(0), ints};
  mpq_class scale(num_gcd, den_lcm);
  scale.canonicalize();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    mpq_class v = c_[k] / scale;
    ints[k] = v.get_num();
  }
  return {scale, ints};
}

std::string CycValue::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[k].get_str();
    if (k == 1) out << "*z";
    if (k > 1) out << "*z^" << k;
  }
  if (first) out << "0";
  return out.str();
}

CycValue theta(const Field& field, Code a) {
  return CycValue::zeta_power(field.p(), static_cast<long>(field.trace(a)));
}

CycValue theta(const FieldElement& a) { return theta(*a.field(), a.code()); }

}  // namespace scd
