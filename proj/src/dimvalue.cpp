#include "radhom/dimvalue.hpp"

#include "radhom/field.hpp"

namespace radhom {

const char* reason_name(BoundReason r) {
  switch (r) {
    case BoundReason::Truncated: return "truncated";
    case BoundReason::SizeCap: return "size-cap";
    case BoundReason::Periodic: return "periodic";
    case BoundReason::InfiniteSummand: return "infinite-summand";
    case BoundReason::ProjInjTerminated: return "projinj-terminated";
  }
  return "?";
}

bool proves_infinite(BoundReason r) {
  return r == BoundReason::Periodic || r == BoundReason::InfiniteSummand || r == BoundReason::ProjInjTerminated;
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

DimValue DimValue::exact(int n) {
  if (n < 0) throw ContractViolation("exact dimension must be nonnegative");
  return DimValue(Kind::Exact, n, BoundReason::Truncated);
}

DimValue DimValue::at_least(int k, BoundReason why) {
  if (k < -1) throw ContractViolation("lower bound out of range");
  return DimValue(Kind::AtLeast, k, why);
}

std::string DimValue::str() const {
  switch (kind_) {
    case Kind::Exact: return std::to_string(value_);
    case Kind::ZeroModule: return "zero";
    case Kind::AtLeast: return ">" + std::to_string(value_) + " (" + reason_name(reason_) + ")";
  }
  return "?";
}

nlohmann::json DimValue::to_json() const {
  switch (kind_) {
    case Kind::Exact: return {{"kind", "exact"}, {"value", value_}};
    case Kind::ZeroModule: return {{"kind", "zero_module"}};
    case Kind::AtLeast:
      return {{"kind", "at_least"}, {"bound", value_}, {"reason", reason_name(reason_)}, {"infinite", certified_infinite()}};
  }
  return nullptr;
}

DimValue DimValue::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact") return exact(j.at("value").get<int>());
  if (kind == "zero_module") return zero_module();
  if (kind == "at_least") {
    const std::string r = j.at("reason").get<std::string>();
    for (BoundReason br : {BoundReason::Truncated, BoundReason::SizeCap, BoundReason::Periodic,
                           BoundReason::InfiniteSummand, BoundReason::ProjInjTerminated})
      if (r == reason_name(br)) return at_least(j.at("bound").get<int>(), br);
    throw ContractViolation("unknown bound reason '" + r + "'");
  }
  throw ContractViolation("unknown DimValue kind '" + kind + "'");
}

Ordering compare(const DimValue& a, const DimValue& b) {
  using K = DimValue::Kind;
  if (a.kind() == K::ZeroModule || b.kind() == K::ZeroModule) {
    if (a.kind() == b.kind()) return Ordering::Equal;
    return a.kind() == K::ZeroModule ? Ordering::Less : Ordering::Greater;
  }
  if (a.is_exact() && b.is_exact())
    return a.value() < b.value() ? Ordering::Less : a.value() > b.value() ? Ordering::Greater : Ordering::Equal;
  if (a.is_at_least() && b.is_at_least()) return Ordering::Incomparable;
  if (a.is_at_least()) {
    Ordering o = compare(b, a);
    return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o;
  }
  // a exact, b at least
  if (b.certified_infinite() || a.value() <= b.value()) return Ordering::Less;
  return Ordering::Incomparable;
}

std::optional<bool> decided_le(const DimValue& a, const DimValue& b) {
  switch (compare(a, b)) {
    case Ordering::Less:
    case Ordering::Equal: return true;
    case Ordering::Greater: return false;
    case Ordering::Incomparable: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace radhom
