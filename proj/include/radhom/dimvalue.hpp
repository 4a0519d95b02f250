#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace radhom {

/// Why a dimension is only known from below.
enum class BoundReason {
  Truncated,          // the resolution bound was reached
  SizeCap,            // the resolution grew past the configured size cap
  Periodic,           // a syzygy repeated verbatim: infinite
  InfiniteSummand,    // a syzygy has a simple summand of infinite dimension: infinite
  ProjInjTerminated,  // coresolution ended with every term projective: infinite
};

const char* reason_name(BoundReason r);
/// Reasons that prove the true value is infinite.
bool proves_infinite(BoundReason r);

enum class Ordering { Less, Equal, Greater, Incomparable };
const char* ordering_name(Ordering o);

/// A homological dimension: an exact value, a strict lower bound, or the
/// marker used for the zero module.
///
/// AtLeast(k) means the true value exceeds k (no vanishing was seen through
/// degree k). When the reason proves infiniteness the value is infinite.
class DimValue {
 public:
  enum class Kind { Exact, AtLeast, ZeroModule };

  static DimValue exact(int n);
  static DimValue at_least(int k, BoundReason why);
  static DimValue zero_module() { return DimValue(Kind::ZeroModule, 0, BoundReason::Truncated); }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_at_least() const { return kind_ == Kind::AtLeast; }
  bool is_zero_module() const { return kind_ == Kind::ZeroModule; }
  /// Exact value, or the bound k for AtLeast.
  int value() const { return value_; }
  BoundReason reason() const { return reason_; }
  bool certified_infinite() const { return kind_ == Kind::AtLeast && proves_infinite(reason_); }
  /// Finite and known: Exact, or ZeroModule (read as 0).
  bool is_finite_known() const { return kind_ != Kind::AtLeast; }

  /// ZeroModule read as Exact(0), per the convention for J = 0.
  DimValue zero_as_exact() const { return is_zero_module() ? exact(0) : *this; }

  /// "3", ">20 (periodic)", "zero".
  std::string str() const;
  nlohmann::json to_json() const;
  static DimValue from_json(const nlohmann::json& j);

  friend bool operator==(const DimValue&, const DimValue&) = default;

 private:
  DimValue(Kind k, int v, BoundReason r) : kind_(k), value_(v), reason_(r) {}

  Kind kind_;
  int value_;
  BoundReason reason_;
};

/// Total where decidable: ZeroModule sits below every value; AtLeast(k) is
/// above Exact(n) when n <= k or when infinite; two AtLeast values are
/// always Incomparable.
Ordering compare(const DimValue& a, const DimValue& b);

/// a <= b, decided; nullopt when Incomparable.
std::optional<bool> decided_le(const DimValue& a, const DimValue& b);

}  // namespace radhom
