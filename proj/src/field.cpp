#include "radhom/field.hpp"

#include <charconv>

namespace radhom {

namespace {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw ContractViolation("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(FieldKind::Prime, p);
}

std::string Field::name() const {
  return is_prime() ? "F_" + std::to_string(p_) : std::string("Q");
}

std::string Field::token() const {
  return is_prime() ? std::to_string(p_) : std::string("Q");
}

Field Field::parse(const std::string& token) {
  if (token == "Q" || token == "q") return rationals();
  std::string digits = token;
  if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ContractViolation("unknown field '" + token + "'");
  return prime(p);
}

namespace detail {

std::uint32_t FpArith::inv(std::uint32_t a) const {
  if (a == 0) throw ContractViolation("division by zero in F_p");
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_prime())
    fp_ = detail::reduce_mod(v, f.characteristic());
  else
    q_ = v;
}

Scalar::Scalar(Field f, mpq_class v) : field_(f) {
  v.canonicalize();
  if (f.is_prime()) {
    std::uint32_t p = f.characteristic();
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw ContractViolation("denominator vanishes in " + f.name());
    detail::FpArith ar{p};
    fp_ = ar.mul(static_cast<std::uint32_t>(num.get_ui()), ar.inv(static_cast<std::uint32_t>(den.get_ui())));
  } else {
    q_ = std::move(v);
  }
}

Scalar Scalar::from_residue(Field f, std::uint32_t r) {
  Scalar s;
  s.field_ = f;
  s.fp_ = r % f.characteristic();
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? fp_ == 0 : sgn(q_) == 0; }

bool Scalar::is_one() const { return field_.is_prime() ? fp_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  if (field_.is_prime())
    r.fp_ = detail::FpArith{field_.characteristic()}.add(fp_, o.fp_);
  else
    r.q_ = q_ + o.q_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  if (field_.is_prime())
    r.fp_ = detail::FpArith{field_.characteristic()}.sub(fp_, o.fp_);
  else
    r.q_ = q_ - o.q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  if (field_.is_prime())
    r.fp_ = detail::FpArith{field_.characteristic()}.mul(fp_, o.fp_);
  else
    r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ContractViolation("inverse of zero");
  Scalar r = *this;
  if (field_.is_prime())
    r.fp_ = detail::FpArith{field_.characteristic()}.inv(fp_);
  else
    r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, 0) - *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime() ? fp_ == o.fp_ : q_ == o.q_;
}

std::string Scalar::str() const { return field_.is_prime() ? std::to_string(fp_) : q_.get_str(); }

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw ContractViolation("malformed coefficient '" + text + "'");
  if (v.get_den() == 0) throw ContractViolation("zero denominator in '" + text + "'");
  return Scalar(f, v);
}

}  // namespace radhom
