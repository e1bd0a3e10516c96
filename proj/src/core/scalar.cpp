#include "bvkit/core/scalar.hpp"

#include <stdexcept>

namespace bvkit {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(unsigned long p, bool allow_two) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  if (p == 2 && !allow_two) {
    throw std::invalid_argument("Z/2 erases all signs and is only available as a diagnostic mode");
  }
  return Field{p};
}

Field Field::parse(std::string_view text, bool allow_two) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    }
    return prime(std::stoul(digits), allow_two);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar Scalar::in(const Field& field, long value) {
  Scalar s(value);
  s.adopt(field.characteristic());
  return s;
}

Scalar Scalar::in(const Field& field, const mpq_class& value) {
  Scalar s(value);
  s.adopt(field.characteristic());
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty scalar");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed scalar '" + t + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  return Scalar(q);
}

void Scalar::adopt(unsigned long modulus) {
  if (modulus == 0 || modulus == modulus_) return;
  if (modulus_ != 0) {
    throw std::logic_error("mixing scalars of Fp:" + std::to_string(modulus_) + " and Fp:" +
                           std::to_string(modulus));
  }
  modulus_ = modulus;
  reduce();
}

void Scalar::reduce() {
  if (modulus_ == 0) {
    value_.canonicalize();
    return;
  }
  mpz_class p(modulus_);
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) throw std::domain_error("denominator not invertible modulo " + std::to_string(modulus_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  value_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  Scalar b = rhs;
  adopt(b.modulus_);
  b.adopt(modulus_);
  value_ += b.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Scalar b = rhs;
  adopt(b.modulus_);
  b.adopt(modulus_);
  value_ *= b.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  Scalar b = rhs;
  adopt(b.modulus_);
  b.adopt(modulus_);
  if (b.is_zero()) throw std::domain_error("division by zero");
  value_ /= b.value_;
  reduce();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::string Scalar::to_string() const { return value_.get_str(); }

std::string Scalar::to_display_string() const {
  if (modulus_ == 0) return value_.get_str();
  mpz_class r = value_.get_num();
  if (2 * r > mpz_class(modulus_)) r -= modulus_;
  return r.get_str();
}

}  // namespace bvkit
