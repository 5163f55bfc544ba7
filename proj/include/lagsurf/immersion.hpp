#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lagsurf/core_types.hpp"
#include "lagsurf/numerics.hpp"

namespace lagsurf {

enum class Family {
  CenteredType1,
  GeneralType1,
  CenteredType2,
  GeneralType2,
  CenteredType3,
  GeneralType3,
  Ruled,
  ProductCircleCurve,
  ProductLineCurve,
  CcProduct,
};

std::string_view family_name(Family f);
bool is_cyclic(Family f);

using Translation = std::shared_ptr<const numerics::CumulativeIntegral<PointC2>>;
using RealPrimitive = std::shared_ptr<const numerics::CumulativeIntegral<double>>;

/// Direction field carrying the type II translation density W.
enum class Type2Form {
  /// V' = W (conj g2, -conj g1): Riemannian orthogonal of the complex line.
  Orthogonal,
  /// V' = W g': the alternative basis for regular unit-speed g.
  Tangent,
};

namespace family {

/// X = gamma(s) (cos t, sin t), gamma = r e^{i phi}.
struct CenteredType1 {
  CurvePlanar gamma;
};

/// X = gamma (cos t, sin t) + int_{s0}^s e^{i phi} (W1, W2) du.
struct GeneralType1 {
  CurvePlanar gamma;
  RealFunction w1, w2;
  double s0;
  Translation translation;
};

/// X = c e^{it} (g1, g2).
struct CenteredType2 {
  CurveS3Legendrian gamma;
  double c;
};

struct GeneralType2 {
  CurveS3Legendrian gamma;
  double c;
  ComplexFunction w;
  double s0;
  Type2Form form;
  Translation translation;
};

/// X = c (a1 e^{it}, a2 e^{-it}).
struct CenteredType3 {
  CurveAdSLegendrian alpha;
  double c;
};

/// Translation density (W |a2|^2, conj(W) a1 a2).
struct GeneralType3 {
  CurveAdSLegendrian alpha;
  double c;
  ComplexFunction w;
  double s0;
  Translation translation;
};

/// X = gamma(s) (t + T(s)) + V(s), with V' = alpha gamma' + drift gamma and
/// T' = shift_rate. The directrix construction has zero drift and shift.
struct Ruled {
  CurveS3Legendrian gamma;
  CurvePlanar alpha;
  RealFunction drift;
  RealFunction shift_rate;
  double s0;
  Translation translation;
  RealPrimitive shift;
};

/// X = (r e^{it}, Gamma(s)), or (Gamma(s), r e^{it}) when curve_first.
struct ProductCircleCurve {
  double r;
  CurvePlanar curve;
  bool curve_first;
};

/// X = (t, Gamma(s)).
struct ProductLineCurve {
  CurvePlanar curve;
};

/// X = (a1(s) g1(t), a2(s) g2(t)).
struct CcProduct {
  CurveAdSLegendrian alpha;
  CurveS3Legendrian gamma;
};

}  // namespace family

using FamilyPayload =
    std::variant<family::CenteredType1, family::GeneralType1, family::CenteredType2, family::GeneralType2,
                 family::CenteredType3, family::GeneralType3, family::Ruled, family::ProductCircleCurve,
                 family::ProductLineCurve, family::CcProduct>;

/// A surface family together with its generating data. Immutable; copies
/// share the tabulated translation integrals.
class ImmersionSpec {
 public:
  /// Wraps a payload without validation; the make_* constructors validate.
  ImmersionSpec(FamilyPayload payload, Interval s_domain, Interval t_domain, bool periodic_t);

  Family family() const;
  const FamilyPayload& payload() const { return payload_; }
  const Interval& s_domain() const { return s_domain_; }
  const Interval& t_domain() const { return t_domain_; }
  bool periodic_t() const { return periodic_t_; }

  /// Uniform grid over the parameter domain.
  GridSpec default_grid(int n_s, int n_t) const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&payload_);
  }

 private:
  FamilyPayload payload_;
  Interval s_domain_;
  Interval t_domain_;
  bool periodic_t_;
};

}  // namespace lagsurf
