#include "lagsurf/immersion.hpp"

namespace lagsurf {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::CenteredType1: return "CenteredType1";
    case Family::GeneralType1: return "GeneralType1";
    case Family::CenteredType2: return "CenteredType2";
    case Family::GeneralType2: return "GeneralType2";
    case Family::CenteredType3: return "CenteredType3";
    case Family::GeneralType3: return "GeneralType3";
    case Family::Ruled: return "Ruled";
    case Family::ProductCircleCurve: return "ProductCircleCurve";
    case Family::ProductLineCurve: return "ProductLineCurve";
    case Family::CcProduct: return "CcProduct";
  }
  return "?";
}

bool is_cyclic(Family f) {
  return f != Family::Ruled && f != Family::ProductLineCurve && f != Family::CcProduct;
}

ImmersionSpec::ImmersionSpec(FamilyPayload payload, Interval s_domain, Interval t_domain, bool periodic_t)
    : payload_(std::move(payload)), s_domain_(s_domain), t_domain_(t_domain), periodic_t_(periodic_t) {
  if (!(s_domain.hi > s_domain.lo) || !(t_domain.hi > t_domain.lo))
    throw DomainError("immersion parameter domain is empty");
}

Family ImmersionSpec::family() const { return static_cast<Family>(payload_.index()); }

GridSpec ImmersionSpec::default_grid(int n_s, int n_t) const {
  GridSpec g;
  g.n_s = n_s;
  g.n_t = n_t;
  g.s_range = s_domain_;
  g.t_range = t_domain_;
  g.periodic_t = periodic_t_;
  return g;
}

}  // namespace lagsurf
