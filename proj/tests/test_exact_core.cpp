#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "duval/matrix.hpp"
#include "duval/poly.hpp"
#include "duval/rational.hpp"

using namespace duval;

TEST_CASE("rational construction normalizes sign and gcd") {
    CHECK(big_rat(6, -4) == big_rat(-3, 2));
    CHECK(num(big_rat(6, -4)) == -3);
    CHECK(den(big_rat(6, -4)) == 2);
    CHECK(big_rat(0, 7) == BigRational(0));
    CHECK_THROWS_AS(big_rat(1, 0), input_error);
}

TEST_CASE("rational predicates and conversion") {
    CHECK(is_integer(big_rat(8, 2)));
    CHECK_FALSE(is_integer(big_rat(8, 3)));
    CHECK(to_integer(big_rat(-12, 4)) == -3);
    CHECK_THROWS_AS(to_integer(big_rat(1, 2)), internal_error);
}

TEST_CASE("floor division rounds toward minus infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(floor_div(6, 3) == 2);
    CHECK(floor_div(-6, 3) == -2);
}

TEST_CASE("rational formatting is always p/q") {
    CHECK(format_rational(big_rat(3, 1)) == "3/1");
    CHECK(format_rational(big_rat(-5, 2)) == "-5/2");
    CHECK(format_rational_human(big_rat(3, 1)) == "3");
    CHECK(format_rational_human(big_rat(-5, 2)) == "-5/2");
}

TEST_CASE("rational parsing round-trips") {
    for (const char* s : {"3/1", "-5/2", "0/1", "123456789123456788/7"}) {
        BigRational q = parse_rational(s);
        CHECK(format_rational(q) == s);
    }
    CHECK(parse_rational("4/6") == big_rat(2, 3));
    CHECK(parse_rational("-7") == BigRational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), schema_error);
    CHECK_THROWS_AS(parse_rational("x"), schema_error);
    CHECK_THROWS_AS(parse_rational(""), schema_error);
    CHECK_THROWS_AS(parse_integer("1/2"), schema_error);
    CHECK(parse_integer("-42") == -42);
}

TEST_CASE("checked narrowing") {
    CHECK(to_long_checked(BigInt(1) << 40) == (1LL << 40));
    CHECK_THROWS_AS(to_long_checked(BigInt(1) << 80), internal_error);
}

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)];
    return m;
}

/* Naive cofactor expansion, used only as an independent cross-check. */
BigInt naive_det(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int k = 0, c = 0; k < n; ++k)
                if (k != j) minor.at(i - 1, c++) = m.at(i, k);
        BigInt term = m.at(0, j) * naive_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

IntMatrix negated_cartan_a(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = -2;
        if (i + 1 < n) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

} // namespace

TEST_CASE("fraction-free determinant on fixed matrices") {
    CHECK(determinant(from_rows({{2}})) == 2);
    CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
    CHECK(determinant(negated_cartan_a(4)) == 5);
    CHECK(determinant(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 0);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        CHECK(determinant(m) == naive_det(m));
    }
}

TEST_CASE("leading minors and definiteness") {
    IntMatrix m = negated_cartan_a(5);
    CHECK(leading_minor_determinant(m, 1) == -2);
    CHECK(leading_minor_determinant(m, 2) == 3);
    CHECK(leading_minor_determinant(m, 3) == -4);
    CHECK(is_negative_definite(m));
    IntMatrix bad = from_rows({{-2, 3}, {3, -2}});
    CHECK_FALSE(is_negative_definite(bad));
    CHECK_FALSE(is_negative_definite(from_rows({{0}})));
}

TEST_CASE("exact linear solve verifies by substitution") {
    IntMatrix a = from_rows({{2, 1}, {1, 3}});
    std::vector<BigInt> b = {5, 10};
    auto x = solve_linear_exact(a, b);
    CHECK(x[0] == BigRational(1));
    CHECK(x[1] == BigRational(3));
    CHECK_THROWS_AS(
        solve_linear_exact(from_rows({{1, 2}, {2, 4}}), b), singular_matrix);
}

TEST_CASE("random nonsingular systems solve exactly") {
    std::mt19937 rng(77031);
    std::uniform_int_distribution<int> entry(-5, 5);
    int solved = 0;
    while (solved < 60) {
        int n = 2 + static_cast<int>(rng() % 3);
        IntMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        if (determinant(a) == 0) continue;
        std::vector<BigInt> b(static_cast<std::size_t>(n));
        for (auto& v : b) v = entry(rng);
        auto x = solve_linear_exact(a, b);
        for (int i = 0; i < n; ++i) {
            BigRational acc(0);
            for (int j = 0; j < n; ++j)
                acc += BigRational(a.at(i, j)) *
                       x[static_cast<std::size_t>(j)];
            CHECK(acc == BigRational(b[static_cast<std::size_t>(i)]));
        }
        ++solved;
    }
}

namespace {

Poly xvar() { return Poly::variable(2, 0); }
Poly yvar() { return Poly::variable(2, 1); }
Poly konst(long long c) { return Poly::constant(2, BigRational(c)); }

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly f = xvar() * xvar() - yvar() * konst(2) + konst(1);
    CHECK(f.str({"x", "y"}) == "x^2 - 2*y + 1");
    CHECK(f.eval({BigRational(3), BigRational(5)}) == BigRational(0));
    CHECK((f - f).is_zero());
    CHECK(f.derivative(0) == konst(2) * xvar());
    CHECK(f.derivative(1) == konst(-2));
}

TEST_CASE("substitution translation and restriction") {
    Poly f = yvar() * yvar() - xvar() * xvar() * xvar();
    Poly g = f.substitute(1, xvar() * yvar()); /* y -> x y */
    CHECK(g == xvar() * xvar() * (yvar() * yvar() - xvar()));
    Poly t = (xvar() - konst(1)).translate(0, BigRational(1));
    CHECK(t == xvar());
    CHECK(f.restrict_zero(1) == konst(-1) * xvar() * xvar() * xvar());
    CHECK(f.multiplicity_at_origin() == 2);
    CHECK(f.leading_form() == yvar() * yvar());
    CHECK(f.order_in(0) == 0);
    CHECK(f.degree_in(0) == 3);
    CHECK((xvar() * xvar() * yvar()).order_in(0) == 2);
}

TEST_CASE("exact division and divisibility") {
    Poly f = (xvar() + yvar()) * (xvar() - yvar());
    CHECK(divide_exact(f, xvar() + yvar()) == xvar() - yvar());
    CHECK(divides(xvar() - yvar(), f));
    CHECK_FALSE(divides(xvar() + konst(1), f));
    CHECK_THROWS_AS(divide_exact(f, xvar() + konst(1)), inexact_division);
}

TEST_CASE("univariate and bivariate gcd") {
    Poly p = (xvar() - konst(1)) * (xvar() - konst(2));
    Poly q = (xvar() - konst(1)) * (xvar() + konst(3));
    Poly g = univariate_gcd(p, q, 0);
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    CHECK(g.degree_in(0) == 1);

    Poly f2 = (yvar() - xvar()) * (yvar() + xvar());
    Poly g2 = (yvar() - xvar()) * yvar();
    Poly h = bivariate_gcd(f2, g2);
    CHECK(h.degree_in(1) == 1);
    CHECK(divides(h, f2));
    CHECK(divides(h, g2));
}

TEST_CASE("square-free detection for plane curves") {
    CHECK(is_squarefree_bivariate(yvar() * yvar() -
                                  xvar() * xvar() * xvar()));
    CHECK_FALSE(is_squarefree_bivariate((xvar() + yvar()) *
                                        (xvar() + yvar())));
    CHECK(is_squarefree_bivariate(xvar() * yvar()));
}

TEST_CASE("rational root splitting") {
    /* (x - 1)^2 (x + 2) (x^2 + 1) */
    Poly f = (xvar() - konst(1)) * (xvar() - konst(1)) *
             (xvar() + konst(2)) *
             (xvar() * xvar() + konst(1));
    RootSplit rs = rational_roots(f, 0);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].root == BigRational(-2));
    CHECK(rs.roots[0].multiplicity == 1);
    CHECK(rs.roots[1].root == BigRational(1));
    CHECK(rs.roots[1].multiplicity == 2);
    CHECK(rs.residual == xvar() * xvar() + konst(1));
}

TEST_CASE("resultant detects common factors") {
    Poly f = (xvar() - yvar()) * (xvar() + konst(1));
    Poly g = (xvar() - yvar()) * (xvar() - konst(3));
    CHECK(resultant(f, g, 0).is_zero());
    Poly r = resultant(xvar() - yvar(), xvar() + yvar(), 0);
    CHECK(r == konst(2) * yvar());
}

TEST_CASE("cubic discriminant closed form") {
    Poly a2 = xvar();
    Poly a3 = yvar();
    Poly disc = cubic_discriminant(a2, a3);
    Poly expect = konst(4) * xvar() * xvar() * xvar() +
                  konst(27) * yvar() * yvar();
    CHECK(disc == expect);
}
