#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace radhom {

/// Raised when a precondition of an operation is not met by its caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FieldKind { Prime, Rational };

/// The ground field k: a prime field F_p (p < 2^31) or the rationals.
class Field {
 public:
  Field() = default;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(FieldKind::Rational, 0); }

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::Prime; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  /// "F_1009" or "Q".
  std::string name() const;
  /// The token used by the algebra file format: "1009" or "Q".
  std::string token() const;
  static Field parse(const std::string& token);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

  FieldKind kind_ = FieldKind::Prime;
  std::uint32_t p_ = 1009;
};

inline constexpr std::uint32_t kDefaultPrime = 1009;

/// An element of a Field. F_p values are kept reduced; rationals are kept
/// canonical (lowest terms, positive denominator).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, mpq_class v);
  static Scalar from_residue(Field f, std::uint32_t r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t residue() const { return fp_; }
  const mpq_class& rational() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: residue in [0, p) or "a" / "a/b".
  std::string str() const;
  /// Parses "3", "-2", "2/3" into the given field.
  static Scalar parse(Field f, const std::string& text);

 private:
  Field field_;
  std::uint32_t fp_ = 0;
  mpq_class q_;
};

namespace detail {

// Arithmetic policies used by the dense kernels. p < 2^31 so sums fit in uint32.
struct FpArith {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a ? p - a : 0; }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t(a) * b % p); }
  T inv(T a) const;
};

struct QArith {
  using T = mpq_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

std::uint32_t reduce_mod(long v, std::uint32_t p);

}  // namespace detail

}  // namespace radhom
