#ifndef DUVAL_LOCAL_MODELS_HPP
#define DUVAL_LOCAL_MODELS_HPP

/*
 * Exact verification of the local models of a generic covering near a cusp
 * of the branch curve.
 *
 * The degree-3 model f3 is the projection of the surface x^3 = y^2 along
 * the Viete family z |-> (z, y(x, z)); the degree-6 model f6 is its Galois
 * closure, parameterized by the roots (z1, z2, z3) of a reduced cubic.
 * Both are certified here by exact polynomial identities.  The pleat
 * normal form y = z^3 + x^k z is certified by computing the Fitting
 * determinant of the projection's direct-image module, which must recover
 * the discriminant curve 4x^{3k} + 27y^2 = 0.
 */

#include <string>
#include <vector>

#include "duval/errors.hpp"
#include "duval/poly.hpp"
#include "duval/rational.hpp"

namespace duval {

/* Outcome of one identity verification: returning at all means every
 * assertion passed; the facts list the statements that were checked. */
struct ProofRecord {
    std::string statement;
    std::vector<std::string> facts;
};

/* ------------------------------------------------------------------ */
/* The degree-3 model                                                 */
/* ------------------------------------------------------------------ */

/* Substituting y = -(z^3 - 3xz)/2 into x^3 - y^2 must give exactly
 * (x - z^2)^2 (x - z^2/4): the preimage of the branch curve is the
 * ramification curve R = {x = z^2} doubled plus the residual curve
 * C = {x = z^2/4}.  The intersection multiplicity (C.R) at the origin is
 * certified to be 2 via the order of vanishing of the resultant. */
inline ProofRecord verify_f3_identity() {
    const int nv = 2; /* variables x, z */
    Poly x = Poly::variable(nv, 0), z = Poly::variable(nv, 1);
    Poly y = (z.pow(3) - Poly::constant(nv, BigRational(3)) * x * z)
                 .scale(big_rat(-1, 2));
    Poly lhs = x.pow(3) - y * y;
    Poly r_curve = x - z * z;
    Poly c_curve = x - (z * z).scale(big_rat(1, 4));
    Poly rhs = r_curve * r_curve * c_curve;
    if (lhs != rhs)
        throw identity_failed("pullback of x^3 - y^2 under the degree-3 "
                              "model does not factor as R^2 C");
    Poly res = resultant(r_curve, c_curve, 0);
    check(!res.is_zero(), "R and C must not share a component");
    int tangency = res.order_in(1);
    if (tangency != 2)
        throw identity_failed("intersection multiplicity (C.R) is " +
                              std::to_string(tangency) + ", expected 2");
    return ProofRecord{
        "degree-3 local model",
        {"x^3 - y^2 = (x - z^2)^2 (x - z^2/4) after y = -(z^3 - 3xz)/2",
         "(C.R) = 2 at the origin"}};
}

/* ------------------------------------------------------------------ */
/* The degree-6 model                                                 */
/* ------------------------------------------------------------------ */

/* For a reduced cubic with roots z1, z2, z3 (so z1 + z2 + z3 = 0) and
 * coefficients x = -(z1 z2 + z2 z3 + z3 z1)/3, y = -z1 z2 z3 / 2, the
 * difference x^3 - y^2 - (1/108) (z1-z2)^2 (z2-z3)^2 (z3-z1)^2 lies in
 * the ideal generated by z1 + z2 + z3: eliminating z3 = -z1 - z2 kills
 * it identically. */
inline ProofRecord verify_f6_identity() {
    const int nv = 3; /* variables z1, z2, z3 */
    Poly z1 = Poly::variable(nv, 0), z2 = Poly::variable(nv, 1),
         z3 = Poly::variable(nv, 2);
    Poly x = (z1 * z2 + z2 * z3 + z3 * z1).scale(big_rat(-1, 3));
    Poly y = (z1 * z2 * z3).scale(big_rat(-1, 2));
    Poly vander = (z1 - z2) * (z2 - z3) * (z3 - z1);
    Poly diff =
        x.pow(3) - y * y - (vander * vander).scale(big_rat(1, 108));
    if (!diff.substitute(2, -z1 - z2).is_zero())
        throw identity_failed("x^3 - y^2 does not reduce to the root "
                              "discriminant on the plane z1 + z2 + z3 = 0");
    return ProofRecord{
        "degree-6 local model",
        {"x^3 - y^2 = (1/108) (z1-z2)^2 (z2-z3)^2 (z3-z1)^2 "
         "whenever z1 + z2 + z3 = 0"}};
}

/* ------------------------------------------------------------------ */
/* The pleat normal form                                              */
/* ------------------------------------------------------------------ */

namespace detail {

/* Rewrites z^3 -> y - x^k z until the z-degree drops below 3; this is
 * reduction modulo the relation z^3 + x^k z - y = 0.  Variables are
 * (x, y, z) = (0, 1, 2). */
inline Poly reduce_pleat_relation(Poly p, int k) {
    Poly rep = Poly::variable(3, 1) -
               Poly::variable(3, 0).pow(k) * Poly::variable(3, 2);
    while (p.degree_in(2) >= 3) {
        Poly next(3);
        for (const auto& [e, c] : p.terms()) {
            if (e[2] >= 3) {
                Monomial stem = e;
                stem[2] -= 3;
                next += Poly::monomial(3, stem, c) * rep;
            } else {
                next += Poly::monomial(3, e, c);
            }
        }
        p = next;
    }
    return p;
}

/* Coefficient of z^j as a polynomial in (x, y); requires deg_z(p) < 3. */
inline Poly z_coordinate(const Poly& p, int j) {
    Poly out(2);
    for (const auto& [e, c] : p.terms()) {
        if (e[2] != j) continue;
        Monomial m{e[0], e[1]};
        out += Poly::monomial(2, m, c);
    }
    return out;
}

} // namespace detail

/* For the projection (x, z) -> (x, y = z^3 + x^k z), the direct image of
 * the structure sheaf is free with basis {1, z, z^2} over C[x, y].  The
 * discriminant curve is cut out by the determinant of multiplication by
 * the z-derivative 3z^2 + x^k on that basis, computed by reduction modulo
 * z^3 + x^k z - y.  The result must be 4x^{3k} + 27y^2 up to sign. */
inline ProofRecord pleat_normal_form_check(int k) {
    if (k < 1) throw input_error("pleat exponent must be at least 1");
    const int nv = 3; /* variables x, y, z */
    Poly x = Poly::variable(nv, 0), z = Poly::variable(nv, 2);
    Poly jac = Poly::constant(nv, BigRational(3)) * z * z + x.pow(k);
    /* Rows: J * z^i reduced, expressed in the basis {1, z, z^2}. */
    std::vector<std::vector<Poly>> mat;
    for (int i = 0; i < 3; ++i) {
        Poly reduced = detail::reduce_pleat_relation(jac * z.pow(i), k);
        check(reduced.degree_in(2) <= 2, "pleat reduction left z-degree >= 3");
        mat.push_back({detail::z_coordinate(reduced, 0),
                       detail::z_coordinate(reduced, 1),
                       detail::z_coordinate(reduced, 2)});
    }
    std::vector<int> cols{0, 1, 2};
    Poly det = detail::poly_det(mat, cols, 0, 2);
    Poly xx = Poly::variable(2, 0), yy = Poly::variable(2, 1);
    Poly target = Poly::constant(2, BigRational(4)) * xx.pow(3 * k) +
                  Poly::constant(2, BigRational(27)) * yy * yy;
    bool plus = det == target, minus = det == -target;
    if (!plus && !minus)
        throw identity_failed("Fitting determinant of the pleat projection "
                              "is not 4x^" + std::to_string(3 * k) +
                              " + 27y^2 up to sign");
    return ProofRecord{
        "pleat normal form, k = " + std::to_string(k),
        {"det of multiplication by 3z^2 + x^k on {1, z, z^2} modulo "
         "z^3 + x^k z - y equals " + std::string(plus ? "" : "-") + "(4x^" +
         std::to_string(3 * k) + " + 27y^2)"}};
}

} // namespace duval

#endif
