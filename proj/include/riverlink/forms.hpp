// riverlink: primitive indefinite binary quadratic forms — the GL2 action,
// reduction theory, reduced cycles, narrow class groups, equivalence tests,
// and automorphs.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "riverlink/arith.hpp"

namespace riverlink {

/// A binary quadratic form A x^2 + B x y + C y^2 with integer coefficients.
/// Library entry points require the form to be primitive (gcd(A,B,C) = 1)
/// and indefinite with nonsquare positive discriminant B^2 - 4AC; call
/// validate() to enforce both.
struct Pibqf {
  Integer a;
  Integer b;
  Integer c;
};

bool operator==(const Pibqf& x, const Pibqf& y);
bool operator!=(const Pibqf& x, const Pibqf& y);

/// The negated form [-A, -B, -C] (same discriminant, reversed orientation).
Pibqf operator-(const Pibqf& q);

/// Throws std::invalid_argument unless q is primitive with positive
/// nonsquare discriminant.
void validate(const Pibqf& q);

/// B^2 - 4AC.
Integer discriminant(const Pibqf& q);

/// The principal form of discriminant D: [1, r, (r^2 - D)/4] with r = D mod 2.
Pibqf principal_form(const Integer& d);

/// An element of PSL(2, Z): determinant +1, stored with the first nonzero
/// entry in reading order (a, b, c, d) positive, so M and -M compare equal.
struct UniModularMatrix {
  Integer a = 1;
  Integer b = 0;
  Integer c = 0;
  Integer d = 1;
};

bool operator==(const UniModularMatrix& x, const UniModularMatrix& y);
bool operator!=(const UniModularMatrix& x, const UniModularMatrix& y);

/// Matrix product, canonicalized to the PSL(2, Z) representative.
UniModularMatrix operator*(const UniModularMatrix& x,
                           const UniModularMatrix& y);

/// PSL(2, Z) canonical representative of m (negates if the first nonzero
/// entry is negative). Throws std::invalid_argument if det != 1.
UniModularMatrix canonical(const UniModularMatrix& m);

UniModularMatrix identity_matrix();

/// Inverse in PSL(2, Z).
UniModularMatrix inverse(const UniModularMatrix& m);

Integer trace(const UniModularMatrix& m);
Integer determinant(const UniModularMatrix& m);

/// Generators: L = (1 1; 0 1), R = (1 0; 1 1), S = (0 1; -1 0).
/// T is an alias of L (translation).
UniModularMatrix mat_L();
UniModularMatrix mat_R();
UniModularMatrix mat_S();
UniModularMatrix mat_T();

/// Product of generator letters 'L', 'R', 'S', 'T' in application order:
/// the leftmost letter acts first, so path_to_matrix("SR") = S * R.
/// Throws std::invalid_argument on any other character.
UniModularMatrix path_to_matrix(std::string_view path);

/// The right action (m . q)(x, y) = q(a x + b y, c x + d y). Composition
/// follows application order: act(m1 * m2, q) = act(m2, act(m1, q)).
Pibqf act(const UniModularMatrix& m, const Pibqf& q);

/// The pairing B1*B2 - 2*A1*C2 - 2*A2*C1. Invariant under the simultaneous
/// action on both forms; b_delta(q, q) equals the discriminant.
Integer b_delta(const Pibqf& q1, const Pibqf& q2);

/// The invariant automorph of q: with (T, U) the minimal solution of
/// t^2 - D u^2 = 4, the matrix ((T - BU)/2, -CU; AU, (T + BU)/2), taken as
/// a PSL(2, Z) representative. Generates the stabilizer of q up to sign.
UniModularMatrix automorph(const Pibqf& q);

/// The primitive form fixed by m (for |trace| > 2): with the trace-positive
/// lift (a, b; c, d) and g = gcd(c, d - a, -b) > 0, returns
/// [c/g, (d - a)/g, -b/g]. Throws std::invalid_argument if |trace| <= 2.
Pibqf form_from_matrix(const UniModularMatrix& m);

/// True iff A*C < 0 and B > |A + C|.
bool is_reduced(const Pibqf& q);

/// A reduced form together with a matrix carrying the input to it.
struct ReductionResult {
  Pibqf form;
  UniModularMatrix witness;  // act(witness, input) == form
};

/// Gauss reduction: returns a reduced form equivalent to q and the witness
/// matrix. Deterministic: repeated calls return the same representative.
ReductionResult reduce(const Pibqf& q);

/// The cyclic sequence of all reduced forms equivalent to q, starting at q,
/// in river order. Requires is_reduced(q); throws std::invalid_argument
/// otherwise.
std::vector<Pibqf> reduced_cycle(const Pibqf& q);

/// One representative per equivalence class of primitive forms of
/// discriminant D (the narrow class group; size h+(D)). Each representative
/// is the element of its reduced cycle minimal under (|A|, A, B)
/// lexicographic order, and the list is sorted under the same key.
std::vector<Pibqf> narrow_class_group(const Integer& d);

/// If q1 and q2 are equivalent, a matrix m with act(m, q1) == q2; otherwise
/// std::nullopt (always nullopt when discriminants differ).
std::optional<UniModularMatrix> is_equivalent(const Pibqf& q1,
                                              const Pibqf& q2);

/// True iff q is equivalent to its own negation -q.
bool is_reciprocal_class(const Pibqf& q);

/// True iff q2 is equivalent to neither q1 nor -q1. Forms of different
/// discriminants are always strongly inequivalent.
bool strongly_inequivalent(const Pibqf& q1, const Pibqf& q2);

}  // namespace riverlink
