// riverlink: implementation of root-geodesic geometry.

#include "riverlink/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace riverlink {

namespace {

int sign_int(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// boost::rational over an unbounded integer type rejects a negative
// denominator outright instead of normalizing its sign, so flip here.
Rational ratio(const Integer& num, const Integer& den) {
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

double angle_from(const Integer& bd, const Integer& d1d2) {
  double y = std::sqrt(integer_to_double(d1d2 - bd * bd));
  return std::atan2(y, integer_to_double(bd));
}

void require_cross(const Pibqf& q1, const Pibqf& q2) {
  if (!geodesics_cross(q1, q2)) {
    throw std::domain_error(
        "crossing operations require transversally crossing geodesics");
  }
}

}  // namespace

QuadraticNumber quadratic_number(Integer p, Integer q, Integer r, Integer d) {
  if (r == 0) {
    throw std::invalid_argument("quadratic number requires r != 0");
  }
  if (d < 0) {
    throw std::invalid_argument("quadratic number requires d >= 0");
  }
  if (q == 0) d = 0;
  if (d != 0) {
    Integer root = isqrt(d);
    if (root * root == d) {
      p += q * root;
      q = 0;
      d = 0;
    } else {
      Integer sq = 1;
      for (const auto& [pr, e] : factorize(d)) {
        if (e >= 2) sq *= boost::multiprecision::pow(pr, e / 2);
      }
      if (sq > 1) {
        q *= sq;
        d /= sq * sq;
      }
    }
  }
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  Integer g = gcd(gcd(abs(p), abs(q)), r);
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  return QuadraticNumber{std::move(p), std::move(q), std::move(r),
                         std::move(d)};
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x.p == y.p && x.q == y.q && x.r == y.r && x.d == y.d;
}

bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) {
  return !(x == y);
}

int sign_of(const QuadraticNumber& x) {
  int sp = sign_int(x.p);
  int sq = sign_int(x.q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  Integer t = x.p * x.p - x.q * x.q * x.d;
  int st = sign_int(t);
  return sp > 0 ? st : -st;
}

int compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d == y.d) {
    QuadraticNumber diff{x.p * y.r - y.p * x.r, x.q * y.r - y.q * x.r,
                         x.r * y.r, x.d};
    return sign_of(diff);
  }
  if (y.q == 0) return compare(x, Rational(y.p, y.r));
  if (x.q == 0) return -compare(y, Rational(x.p, x.r));
  throw std::invalid_argument(
      "quadratic comparison requires matching radicands");
}

int compare(const QuadraticNumber& x, const Rational& y) {
  Integer u = numerator(y);
  Integer v = denominator(y);
  QuadraticNumber diff{x.p * v - u * x.r, x.q * v, 1, x.d};
  return sign_of(diff);
}

double to_double(const QuadraticNumber& x) {
  double num = integer_to_double(x.p) +
               integer_to_double(x.q) * std::sqrt(integer_to_double(x.d));
  return num / integer_to_double(x.r);
}

int sign_at(const Pibqf& f, const QuadraticNumber& x) {
  QuadraticNumber val{
      f.a * (x.p * x.p + x.q * x.q * x.d) + f.b * x.p * x.r +
          f.c * x.r * x.r,
      2 * f.a * x.p * x.q + f.b * x.q * x.r, 1, x.d};
  return sign_of(val);
}

std::pair<QuadraticNumber, QuadraticNumber> roots(const Pibqf& q) {
  validate(q);
  Integer d = discriminant(q);
  return {quadratic_number(-q.b, 1, 2 * q.a, d),
          quadratic_number(-q.b, -1, 2 * q.a, d)};
}

bool operator==(const IntegerForm& x, const IntegerForm& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c;
}

bool operator!=(const IntegerForm& x, const IntegerForm& y) {
  return !(x == y);
}

Integer discriminant(const IntegerForm& f) {
  return f.b * f.b - 4 * f.a * f.c;
}

std::complex<double> upper_root(const IntegerForm& f) {
  Integer d = discriminant(f);
  if (f.a == 0 || d >= 0) {
    throw std::invalid_argument(
        "upper_root requires a definite form (A != 0, discriminant < 0)");
  }
  double re = rational_to_double(ratio(-f.b, 2 * f.a));
  double im = std::sqrt(integer_to_double(-d)) /
              integer_to_double(2 * abs(f.a));
  return {re, im};
}

bool geodesics_cross(const Pibqf& q1, const Pibqf& q2) {
  validate(q1);
  validate(q2);
  Integer bd = b_delta(q1, q2);
  return bd * bd < discriminant(q1) * discriminant(q2);
}

int crossing_sign(const Pibqf& q1, const Pibqf& q2) {
  require_cross(q1, q2);
  int s = sign_int(q1.b * q2.a - q2.b * q1.a);
  if (s == 0) {
    throw std::logic_error("crossing_sign: degenerate crossing");
  }
  return s;
}

IntersectionRecord crossing_point(const Pibqf& q1, const Pibqf& q2) {
  require_cross(q1, q2);
  IntersectionRecord rec;
  rec.bdelta = b_delta(q1, q2);
  rec.sign = crossing_sign(q1, q2);
  rec.point_form =
      IntegerForm{q2.a * q1.b - q1.a * q2.b, 2 * (q2.a * q1.c - q1.a * q2.c),
                  q2.b * q1.c - q1.b * q2.c};
  Integer d1d2 = discriminant(q1) * discriminant(q2);
  if (discriminant(rec.point_form) != rec.bdelta * rec.bdelta - d1d2) {
    throw std::logic_error("crossing_point: point form discriminant mismatch");
  }
  rec.point = upper_root(rec.point_form);
  rec.angle = angle_from(rec.bdelta, d1d2);
  return rec;
}

double crossing_angle(const Pibqf& q1, const Pibqf& q2) {
  require_cross(q1, q2);
  return angle_from(b_delta(q1, q2), discriminant(q1) * discriminant(q2));
}

bool operator==(const RatMat2& x, const RatMat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool operator!=(const RatMat2& x, const RatMat2& y) { return !(x == y); }

RatMat2 trace_zero(const UniModularMatrix& m) {
  return RatMat2{Rational(m.a - m.d, 2), Rational(m.b), Rational(m.c),
                 Rational(m.d - m.a, 2)};
}

bool commutator_det_positive(const UniModularMatrix& m1,
                             const UniModularMatrix& m2) {
  if (abs(trace(m1)) <= 2 || abs(trace(m2)) <= 2) {
    throw std::invalid_argument(
        "commutator_det_positive requires hyperbolic matrices (|trace| > 2)");
  }
  // Products computed raw: the PSL sign normalization must not be applied to
  // the two products independently, or the difference below loses meaning.
  Integer pa = m1.a * m2.a + m1.b * m2.c, pb = m1.a * m2.b + m1.b * m2.d;
  Integer pc = m1.c * m2.a + m1.d * m2.c, pd = m1.c * m2.b + m1.d * m2.d;
  Integer qa = m2.a * m1.a + m2.b * m1.c, qb = m2.a * m1.b + m2.b * m1.d;
  Integer qc = m2.c * m1.a + m2.d * m1.c, qd = m2.c * m1.b + m2.d * m1.d;
  Integer xa = pa - qa, xb = pb - qb, xc = pc - qc, xd = pd - qd;
  return xa * xd - xb * xc > 0;
}

double hyperbolic_distance(const std::complex<double>& z1,
                           const std::complex<double>& z2) {
  if (!(z1.imag() > 0) || !(z2.imag() > 0)) {
    throw std::invalid_argument(
        "hyperbolic_distance requires points with positive imaginary part");
  }
  double val = 1.0 + std::norm(z1 - z2) / (2.0 * z1.imag() * z2.imag());
  return std::acosh(std::max(1.0, val));
}

double geodesic_length(const Pibqf& q) {
  validate(q);
  return 2.0 * (pell_log(discriminant(q)) - std::log(2.0));
}

std::complex<double> geodesic_apex(const Pibqf& q) {
  validate(q);
  double c = rational_to_double(ratio(-q.b, 2 * q.a));
  double radius = std::sqrt(integer_to_double(discriminant(q))) /
                  integer_to_double(2 * abs(q.a));
  return {c, radius};
}

double arc_distance(const Pibqf& q, const std::complex<double>& z,
                    const std::optional<std::complex<double>>& base) {
  validate(q);
  double c = rational_to_double(ratio(-q.b, 2 * q.a));
  double radius = std::sqrt(integer_to_double(discriminant(q))) /
                  integer_to_double(2 * abs(q.a));
  auto check_on = [&](const std::complex<double>& w) {
    if (!(w.imag() > 0) ||
        std::abs(std::abs(w - std::complex<double>(c, 0.0)) - radius) >
            1e-6 * radius) {
      throw std::invalid_argument(
          "arc_distance requires points on the root geodesic");
    }
  };
  check_on(z);
  std::complex<double> b = base ? *base : std::complex<double>(c, radius);
  if (base) check_on(b);
  // Arc-length parameter along the semicircle, increasing in flow
  // direction (from the second root towards the first).
  auto spos = [&](const std::complex<double>& w) {
    double phi = std::atan2(w.imag(), w.real() - c);
    double s = std::log(std::tan(phi / 2.0));
    return q.a < 0 ? s : -s;
  };
  double len = geodesic_length(q);
  double dv = std::fmod(spos(z) - spos(b), len);
  if (dv < 0) dv += len;
  if (dv >= len) dv -= len;
  return dv;
}

}  // namespace riverlink
