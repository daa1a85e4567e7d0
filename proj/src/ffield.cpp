#include "scd/ffield.hpp"

#include <string>

namespace scd {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Remainder of a modulo the nonzero polynomial m.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const unsigned c = a.back() * lead_inv % p;
    for (std::size_t k = 0; k <= dm; ++k)
      a[shift + k] = (a[shift + k] + p - c * m[k] % p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& m, unsigned p) {
  const unsigned deg = static_cast<unsigned>(m.size() - 1);
  // Any factorization has a monic factor of degree <= deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned k = 0; k < d; ++k) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      Poly f(d + 1, 0);
      unsigned t = idx;
      for (unsigned k = 0; k < d; ++k) {
        f[k] = t % p;
        t /= p;
      }
      f[d] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const unsigned p = spec_.p;
  const unsigned r = spec_.r;
  q_ = 1;
  for (unsigned k = 0; k < r; ++k) q_ *= p;

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  trace_.resize(q_);

  auto to_poly = [&](unsigned code) {
    Poly a(r);
    for (unsigned k = 0; k < r; ++k) {
      a[k] = code % p;
      code /= p;
    }
    return a;
  };
  auto to_code = [&](const Poly& a) {
    unsigned code = 0;
    for (unsigned k = a.size(); k-- > 0;) code = code * p + a[k];
    return static_cast<Code>(code);
  };

  for (unsigned a = 0; a < q_; ++a) {
    const Poly pa = to_poly(a);
    Poly na(r);
    for (unsigned k = 0; k < r; ++k) na[k] = (p - pa[k]) % p;
    neg_[a] = to_code(na);
    for (unsigned b = 0; b < q_; ++b) {
      const Poly pb = to_poly(b);
      Poly s(r);
      for (unsigned k = 0; k < r; ++k) s[k] = (pa[k] + pb[k]) % p;
      add_[a * q_ + b] = to_code(s);
      Poly prod(2 * r, 0);
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly red = r == 1 ? Poly{prod[0]} : poly_mod(prod, spec_.modulus, p);
      red.resize(r, 0);
      mul_[a * q_ + b] = to_code(red);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Code>(b);
        break;
      }
  for (unsigned a = 0; a < q_; ++a) {
    // Tr(a) = a + a^p + ... + a^{p^{r-1}}
    unsigned frob = a;
    unsigned sum = 0;
    for (unsigned k = 0; k < r; ++k) {
      sum = add_[sum * q_ + frob];
      unsigned pow = 1;
      for (unsigned e = 0; e < p; ++e) pow = mul_[pow * q_ + frob];
      frob = pow;
    }
    // The trace lies in the prime subfield, whose codes are 0..p-1.
    trace_[a] = sum;
  }
}

FieldPtr Field::make(FieldSpec spec) {
  if (spec.p == 2)
    throw Error(ErrorKind::invalid_field, "characteristic 2 is not supported; p must be an odd prime");
  if (!is_prime(spec.p))
    throw Error(ErrorKind::invalid_field, "p = " + std::to_string(spec.p) + " is not prime");
  if (spec.r == 0) throw Error(ErrorKind::invalid_field, "exponent r must be positive");
  unsigned long q = 1;
  for (unsigned k = 0; k < spec.r; ++k) {
    q *= spec.p;
    if (q > max_order)
      throw Error(ErrorKind::invalid_field, "field order exceeds the supported maximum of 255");
  }
  if (spec.r == 1) {
    if (!spec.modulus.empty() && spec.modulus.size() != 2)
      throw Error(ErrorKind::invalid_field, "a prime field takes no modulus of degree > 1");
    spec.modulus.clear();
  } else {
    if (spec.modulus.size() != spec.r + 1)
      throw Error(ErrorKind::invalid_field,
                  "q = p^" + std::to_string(spec.r) + " needs a modulus with " +
                      std::to_string(spec.r + 1) + " coefficients");
    for (auto& c : spec.modulus) c %= spec.p;
    if (spec.modulus.back() == 0)
      throw Error(ErrorKind::invalid_field, "modulus leading coefficient is zero");
    const unsigned lead_inv = inv_mod(spec.modulus.back(), spec.p);
    for (auto& c : spec.modulus) c = c * lead_inv % spec.p;
    if (!irreducible(spec.modulus, spec.p))
      throw Error(ErrorKind::invalid_field, "modulus is reducible over F_" + std::to_string(spec.p));
  }
  return FieldPtr(new Field(std::move(spec)));
}

FieldPtr Field::of_order(unsigned q, std::vector<unsigned> modulus) {
  if (q < 2) throw Error(ErrorKind::invalid_field, "q must be a prime power >= 3");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned r = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw Error(ErrorKind::invalid_field, "q = " + std::to_string(q) + " is not a prime power");
  if (p == 2) throw Error(ErrorKind::invalid_field, "q = " + std::to_string(q) + " is even; characteristic 2 is not supported");
  return make(FieldSpec{p, r, std::move(modulus)});
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(ErrorKind::division_by_zero, "inverse of zero in F_q");
  return inv_[a];
}

std::vector<unsigned> Field::digits(Code a) const {
  std::vector<unsigned> d(spec_.r);
  unsigned c = a;
  for (unsigned k = 0; k < spec_.r; ++k) {
    d[k] = c % spec_.p;
    c /= spec_.p;
  }
  return d;
}

Code Field::from_digits(const std::vector<unsigned>& digits) const {
  if (digits.size() != spec_.r) throw Error(ErrorKind::malformed_input, "coordinate vector has wrong length");
  unsigned code = 0;
  for (unsigned k = spec_.r; k-- > 0;) {
    if (digits[k] >= spec_.p) throw Error(ErrorKind::malformed_input, "coordinate not reduced mod p");
    code = code * spec_.p + digits[k];
  }
  return static_cast<Code>(code);
}

std::vector<Code> Field::prime_basis() const {
  std::vector<Code> basis;
  unsigned c = 1;
  for (unsigned k = 0; k < spec_.r; ++k) {
    basis.push_back(static_cast<Code>(c));
    c *= spec_.p;
  }
  return basis;
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->q()) throw Error(ErrorKind::malformed_input, "field element code out of range");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_))
    throw Error(ErrorKind::field_mismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

}  // namespace scd
