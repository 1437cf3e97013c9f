#ifndef DUVAL_GERM_HPP
#define DUVAL_GERM_HPP

/*
 * Plane curve germs at the origin of C^2 and the standard equations whose
 * double covers realize each rational double point:
 *
 *   A_n : y^2 - x^{n+1}        (n >= 1)
 *   D_n : x (y^2 + x^{n-2})    (n >= 4)
 *   E_6 : x^3 + y^4
 *   E_7 : x (x^2 + y^3)
 *   E_8 : x^3 + y^5
 */

#include <string>
#include <utility>

#include "duval/ade.hpp"
#include "duval/poly.hpp"

namespace duval {

struct CurveGerm {
    Poly equation;   /* two variables: x = 0, y = 1 */
    std::string name;
};

/* A germ must be a nonzero square-free bivariate polynomial vanishing at 0. */
inline void validate_germ(const CurveGerm& g) {
    if (g.equation.nvars() != 2)
        throw unsupported_germ("germ must be a polynomial in two variables");
    if (g.equation.is_zero())
        throw unsupported_germ("germ equation is identically zero");
    if (!g.equation.vanishes_at_origin())
        throw unsupported_germ("germ does not pass through the origin");
    if (!is_squarefree_bivariate(g.equation))
        throw non_reduced("germ equation has a repeated factor");
}

inline CurveGerm standard_germ(const AdeType& t) {
    validate_ade(t);
    const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly eq(2);
    switch (t.series) {
    case AdeSeries::A:
        eq = y.pow(2) - x.pow(t.index + 1);
        break;
    case AdeSeries::D:
        eq = x * (y.pow(2) + x.pow(t.index - 2));
        break;
    case AdeSeries::E:
        if (t.index == 6) eq = x.pow(3) + y.pow(4);
        else if (t.index == 7) eq = x * (x.pow(2) + y.pow(3));
        else eq = x.pow(3) + y.pow(5);
        break;
    }
    CurveGerm g{std::move(eq), ade_name(t)};
    validate_germ(g);
    return g;
}

/* Smooth-point germ (used only in tests as a degenerate control case). */
inline CurveGerm smooth_germ() {
    return CurveGerm{Poly::variable(2, 1), "smooth"};
}

} // namespace duval

#endif
