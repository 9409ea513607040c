// riverlink: geometry of root geodesics in the upper half-plane — exact
// quadratic-number roots, crossing predicate/sign/point/angle, trace-zero
// matrix cross-checks, hyperbolic distances, and arc positions along a
// closed geodesic.
#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "riverlink/forms.hpp"

namespace riverlink {

/// The real quadratic number (p + q*sqrt(d)) / r in normalized storage:
/// square part of d extracted into q, d = 0 exactly for rationals (q = 0),
/// r > 0, gcd(p, q, r) = 1. Comparisons are exact (no floating point).
struct QuadraticNumber {
  Integer p;
  Integer q;
  Integer r;
  Integer d;
};

/// Normalizing constructor. Requires r != 0 and d >= 0 (square d is folded
/// into the rational part); throws std::invalid_argument otherwise.
QuadraticNumber quadratic_number(Integer p, Integer q, Integer r, Integer d);

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y);

/// Exact sign: -1, 0, or +1.
int sign_of(const QuadraticNumber& x);

/// Exact three-way comparison (sign of x - y). The radicands must match
/// unless one side is rational; throws std::invalid_argument otherwise.
int compare(const QuadraticNumber& x, const QuadraticNumber& y);

/// Exact three-way comparison against a rational.
int compare(const QuadraticNumber& x, const Rational& y);

double to_double(const QuadraticNumber& x);

/// Exact sign of f(x, 1) at a quadratic number x.
int sign_at(const Pibqf& f, const QuadraticNumber& x);

/// The first and second roots ((-B + sqrt(D)) / 2A, (-B - sqrt(D)) / 2A).
std::pair<QuadraticNumber, QuadraticNumber> roots(const Pibqf& q);

/// A plain integer form [A, B, C] with no primitivity or sign constraints;
/// carries the (negative-discriminant) crossing-point forms.
struct IntegerForm {
  Integer a;
  Integer b;
  Integer c;
};

bool operator==(const IntegerForm& x, const IntegerForm& y);
bool operator!=(const IntegerForm& x, const IntegerForm& y);

Integer discriminant(const IntegerForm& f);

/// The upper-half-plane root of a definite form (discriminant < 0, A != 0):
/// -B/(2A) + i*sqrt(-disc)/(2|A|). Throws std::invalid_argument otherwise.
std::complex<double> upper_root(const IntegerForm& f);

/// One transverse crossing of two root geodesics. arc_distance is filled
/// only by the locus machinery (crossing_point leaves it at 0).
struct IntersectionRecord {
  Integer bdelta;               // pairing value x; x^2 < D1*D2
  int sign = 0;                 // +1 or -1
  IntegerForm point_form;       // definite form whose upper root is point
  std::complex<double> point;   // crossing point in the upper half-plane
  double angle = 0.0;           // in (0, pi)
  double arc_distance = 0.0;    // along a closed geodesic, when applicable
};

/// True iff the root geodesics meet transversally in the upper half-plane:
/// b_delta(q1, q2)^2 < D1 * D2, tested exactly. Overlapping geodesics
/// (q2 = +-q1 up to equivalence of the pairing, |b_delta| = sqrt(D1 D2))
/// do not cross.
bool geodesics_cross(const Pibqf& q1, const Pibqf& q2);

/// Sign of the crossing, +1 or -1: sign(B1*A2 - B2*A1), which also equals
/// sign(B2*C1 - B1*C2) and the sign of q1 at the first root of q2.
/// Throws std::domain_error if the geodesics do not cross.
int crossing_sign(const Pibqf& q1, const Pibqf& q2);

/// The crossing data: pairing value, sign, the definite point form
/// [-A1*B2 + A2*B1, -2*A1*C2 + 2*A2*C1, -B1*C2 + B2*C1] (left unreduced),
/// its upper root, and the angle. arc_distance is 0.
/// Throws std::domain_error if the geodesics do not cross.
IntersectionRecord crossing_point(const Pibqf& q1, const Pibqf& q2);

/// The angle at the crossing, measured counterclockwise from the tangent of
/// q1's geodesic to that of q2's: atan2(sqrt(D1*D2 - x^2), x) in (0, pi).
/// Throws std::domain_error if the geodesics do not cross.
double crossing_angle(const Pibqf& q1, const Pibqf& q2);

/// A 2x2 matrix with exact rational entries.
struct RatMat2 {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

bool operator==(const RatMat2& x, const RatMat2& y);
bool operator!=(const RatMat2& x, const RatMat2& y);

/// The trace-zero part m - (tr(m)/2) * Id.
RatMat2 trace_zero(const UniModularMatrix& m);

/// True iff det(m1*m2 - m2*m1) > 0 (exact), which holds exactly when the
/// axes of the two hyperbolic matrices cross uniquely in the upper
/// half-plane. Requires |trace| > 2 for both; throws std::invalid_argument
/// otherwise.
bool commutator_det_positive(const UniModularMatrix& m1,
                             const UniModularMatrix& m2);

/// Hyperbolic distance arccosh(1 + |z1 - z2|^2 / (2 * Im z1 * Im z2)).
/// Requires positive imaginary parts; throws std::invalid_argument.
double hyperbolic_distance(const std::complex<double>& z1,
                           const std::complex<double>& z2);

/// Length of the closed geodesic of q's class: 2 * log((T + U*sqrt(D)) / 2)
/// with (T, U) the minimal automorph trace pair. Equals the hyperbolic
/// distance from any point z on the geodesic to automorph(q) . z.
double geodesic_length(const Pibqf& q);

/// The apex of q's root semicircle: center + i * radius, the default base
/// point for arc positions.
std::complex<double> geodesic_apex(const Pibqf& q);

/// Position of z along q's oriented root geodesic, measured from `base`
/// (default: the apex) in flow direction and reduced into
/// [0, geodesic_length(q)). Both z and base must lie on the geodesic within
/// a small relative tolerance; throws std::invalid_argument otherwise.
double arc_distance(const Pibqf& q, const std::complex<double>& z,
                    const std::optional<std::complex<double>>& base =
                        std::nullopt);

}  // namespace riverlink
