#ifndef DUVAL_POLY_HPP
#define DUVAL_POLY_HPP

/*
 * Sparse multivariate polynomials over the exact rationals.
 *
 * A Poly is a map from exponent vectors to nonzero BigRational coefficients,
 * ordered by descending graded lexicographic order (so begin() is the leading
 * term).  Variables are positional; names are supplied only when printing.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/* Descending graded lex: higher total degree first, then lex on exponents. */
struct MonomialOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, BigRational, MonomialOrderDesc>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {
        check(nvars >= 0, "negative variable count");
    }

    static Poly constant(int nvars, const BigRational& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Poly variable(int nvars, int i) {
        check(i >= 0 && i < nvars, "variable index out of range");
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[i] = 1;
        p.terms_[m] = BigRational(1);
        return p;
    }
    /* c * prod x_i^{e_i} */
    static Poly monomial(int nvars, const Monomial& e, const BigRational& c) {
        check(static_cast<int>(e.size()) == nvars, "monomial arity mismatch");
        for (int v : e) check(v >= 0, "negative exponent");
        Poly p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    BigRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRational(0) : it->second;
    }
    BigRational constant_term() const { return coeff(Monomial(nvars_, 0)); }

    int total_degree() const {
        check(!is_zero(), "degree of zero polynomial");
        return monomial_degree(terms_.begin()->first);
    }
    /* Lowest total degree among terms = multiplicity of the curve at the origin. */
    int multiplicity_at_origin() const {
        check(!is_zero(), "multiplicity of zero polynomial");
        int m = monomial_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) m = std::min(m, monomial_degree(e));
        return m;
    }
    bool vanishes_at_origin() const { return constant_term() == 0; }

    /* Homogeneous part of lowest total degree. */
    Poly leading_form() const {
        check(!is_zero(), "leading form of zero polynomial");
        int m = multiplicity_at_origin();
        Poly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (monomial_degree(e) == m) r.terms_[e] = c;
        return r;
    }

    int degree_in(int i) const {
        check(i >= 0 && i < nvars_, "variable index out of range");
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }
    bool depends_on(int i) const { return degree_in(i) > 0; }

    /* Order of vanishing in variable i (largest k with x_i^k dividing). */
    int order_in(int i) const {
        check(!is_zero(), "order of zero polynomial");
        check(i >= 0 && i < nvars_, "variable index out of range");
        int o = -1;
        for (const auto& [e, c] : terms_) o = (o < 0) ? e[i] : std::min(o, e[i]);
        return o;
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        arity_match(o);
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.arity_match(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Monomial e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    BigRational c = ca * cb;
                    if (c != 0) r.terms_[e] = c;
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& scale(const BigRational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(const BigRational& c, Poly p) { return p.scale(c); }

    Poly pow(int k) const {
        check(k >= 0, "negative power");
        Poly r = constant(nvars_, BigRational(1));
        Poly b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /* Replace variable i by p (same arity); Horner evaluation in x_i. */
    Poly substitute(int i, const Poly& p) const {
        check(i >= 0 && i < nvars_, "variable index out of range");
        arity_match(p);
        int d = degree_in(i);
        /* coefficient extraction: c_k = sum of terms with e[i] == k, exponent zeroed */
        std::vector<Poly> ck(static_cast<std::size_t>(d) + 1, Poly(nvars_));
        for (const auto& [e, c] : terms_) {
            Monomial e2 = e;
            int k = e2[i];
            e2[i] = 0;
            ck[k].terms_[e2] = c;
        }
        Poly r(nvars_);
        for (int k = d; k >= 0; --k) r = r * p + ck[k];
        return r;
    }

    /* x_i -> x_i + c */
    Poly translate(int i, const BigRational& c) const {
        if (c == 0) return *this;
        return substitute(i, variable(nvars_, i) + constant(nvars_, c));
    }

    /* Set x_i = 0. */
    Poly restrict_zero(int i) const {
        check(i >= 0 && i < nvars_, "variable index out of range");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (e[i] == 0) r.terms_[e] = c;
        return r;
    }

    Poly derivative(int i) const {
        check(i >= 0 && i < nvars_, "variable index out of range");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                Monomial e2 = e;
                e2[i] -= 1;
                r.terms_[e2] = c * BigRational(e[i]);
            }
        return r;
    }

    BigRational eval(const std::vector<BigRational>& point) const {
        check(static_cast<int>(point.size()) == nvars_, "evaluation arity mismatch");
        BigRational s(0);
        for (const auto& [e, c] : terms_) {
            BigRational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            s += t;
        }
        return s;
    }

    /* Append fresh variables on the right (exponent 0 everywhere). */
    Poly extended(int new_nvars) const {
        check(new_nvars >= nvars_, "extended() cannot drop variables");
        Poly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Monomial e2 = e;
            e2.resize(new_nvars, 0);
            r.terms_[e2] = c;
        }
        return r;
    }
    /* Drop trailing variables, which must not occur. */
    Poly contracted(int new_nvars) const {
        check(new_nvars <= nvars_, "contracted() cannot add variables");
        Poly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            for (int i = new_nvars; i < nvars_; ++i)
                check(e[i] == 0, "contracted() would drop a used variable");
            Monomial e2(e.begin(), e.begin() + new_nvars);
            r.terms_[e2] = c;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        check(static_cast<int>(names.size()) == nvars_, "name list arity mismatch");
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigRational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = monomial_degree(e) > 0;
            if (!has_var || a != 1) os << format_rational_human(a);
            bool star = !has_var || a != 1;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                star = true;
                os << names[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void arity_match(const Poly& o) const {
        check(nvars_ == o.nvars_, "polynomial arity mismatch");
    }
    friend Poly divide_exact(const Poly&, const Poly&);
    int nvars_;
    TermMap terms_;
};

/* Exact division: returns f/g, throws inexact_division when g does not divide f. */
inline Poly divide_exact(const Poly& f, const Poly& g) {
    check(f.nvars() == g.nvars(), "polynomial arity mismatch");
    if (g.is_zero()) throw inexact_division("division by zero polynomial");
    Poly r = f, q(f.nvars());
    const Monomial& lg = g.terms().begin()->first;
    const BigRational cg = g.terms().begin()->second;
    while (!r.is_zero()) {
        const Monomial& lr = r.terms().begin()->first;
        Monomial d(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) {
            d[i] = lr[i] - lg[i];
            if (d[i] < 0)
                throw inexact_division("polynomial division leaves a remainder");
        }
        Poly t = Poly::monomial(f.nvars(), d, r.terms().begin()->second / cg);
        q += t;
        r -= t * g;
    }
    return q;
}

inline bool divides(const Poly& g, const Poly& f) {
    try {
        divide_exact(f, g);
        return true;
    } catch (const inexact_division&) {
        return false;
    }
}

/* ------------------------------------------------------------------ */
/* Univariate helpers (polynomials that involve at most variable i).   */
/* ------------------------------------------------------------------ */

inline bool univariate_in(const Poly& f, int i) {
    for (int v = 0; v < f.nvars(); ++v)
        if (v != i && f.depends_on(v)) return false;
    return true;
}

/* Coefficients c_0..c_d of f viewed in variable i; f must be univariate in i. */
inline std::vector<BigRational> univariate_coeffs(const Poly& f, int i) {
    check(univariate_in(f, i), "univariate_coeffs on multivariate polynomial");
    std::vector<BigRational> c(static_cast<std::size_t>(f.is_zero() ? 0 : f.degree_in(i)) + 1,
                               BigRational(0));
    for (const auto& [e, v] : f.terms()) c[e[i]] = v;
    return c;
}

/* Monic gcd by Euclid over the rationals; gcd(0,0) = 0. */
inline Poly univariate_gcd(Poly a, Poly b, int i) {
    check(univariate_in(a, i) && univariate_in(b, i), "univariate_gcd arity");
    while (!b.is_zero()) {
        /* remainder of a by b */
        Poly r = a;
        const int db = b.degree_in(i);
        Monomial mb(b.nvars(), 0);
        mb[i] = db;
        const BigRational lb = b.coeff(mb);
        while (!r.is_zero() && r.degree_in(i) >= db) {
            const int dr = r.degree_in(i);
            Monomial m(r.nvars(), 0);
            m[i] = dr;
            Monomial sh(r.nvars(), 0);
            sh[i] = dr - db;
            r -= Poly::monomial(r.nvars(), sh, r.coeff(m) / lb) * b;
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    /* normalize monic */
    Monomial m(a.nvars(), 0);
    m[i] = a.degree_in(i);
    return divide_exact(a, Poly::constant(a.nvars(), a.coeff(m)));
}

/* ------------------------------------------------------------------ */
/* Bivariate gcd (variables x = 0, y = 1), used for square-freeness.   */
/* ------------------------------------------------------------------ */

namespace detail {

/* f as polynomial in y with coefficients in Q[x]. */
inline std::vector<Poly> y_coefficients(const Poly& f) {
    check(f.nvars() == 2, "y_coefficients expects two variables");
    std::vector<Poly> c(static_cast<std::size_t>(f.is_zero() ? 0 : f.degree_in(1)) + 1,
                        Poly(2));
    for (const auto& [e, v] : f.terms()) {
        Monomial ex = e;
        ex[1] = 0;
        c[e[1]] += Poly::monomial(2, ex, v);
    }
    return c;
}

inline Poly content_in_y(const Poly& f) {
    Poly g(2);
    for (const Poly& c : y_coefficients(f)) g = univariate_gcd(g, c, 0);
    return g;
}

} // namespace detail

/* gcd of bivariate polynomials in (x, y), up to a nonzero rational factor;
 * gcd(0,0) = 0. */
inline Poly bivariate_gcd(Poly f, Poly g) {
    check(f.nvars() == 2 && g.nvars() == 2, "bivariate_gcd expects two variables");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (!f.depends_on(1) && !g.depends_on(1)) return univariate_gcd(f, g, 0);
    if (!f.depends_on(1)) return univariate_gcd(detail::content_in_y(g), f, 0);
    if (!g.depends_on(1)) return univariate_gcd(detail::content_in_y(f), g, 0);

    Poly cf = detail::content_in_y(f), cg = detail::content_in_y(g);
    Poly cont = univariate_gcd(cf, cg, 0);
    Poly a = divide_exact(f, cf), b = divide_exact(g, cg);
    if (a.degree_in(1) < b.degree_in(1)) std::swap(a, b);
    /* primitive pseudo-remainder sequence in y */
    while (!b.is_zero() && b.depends_on(1)) {
        /* pseudo remainder prem(a, b) in y */
        Poly r = a;
        int db = b.degree_in(1);
        Poly lb = detail::y_coefficients(b)[db];
        while (!r.is_zero() && r.depends_on(1) && r.degree_in(1) >= db) {
            int dr = r.degree_in(1);
            Poly lr = detail::y_coefficients(r)[dr];
            Monomial sh(2, 0);
            sh[1] = dr - db;
            r = lb * r - Poly::monomial(2, sh, BigRational(1)) * lr * b;
        }
        if (!r.is_zero() && !r.depends_on(1) && r.is_constant()) {
            a = b;
            b = r;
            break;
        }
        if (!r.is_zero()) {
            Poly cr = r.depends_on(1) ? detail::content_in_y(r) : r;
            r = divide_exact(r, cr);
        }
        a = b;
        b = r;
    }
    Poly pp_gcd = b.is_zero() ? a : Poly::constant(2, BigRational(1));
    return cont * pp_gcd;
}

inline bool is_squarefree_bivariate(const Poly& f) {
    check(f.nvars() == 2, "is_squarefree_bivariate expects two variables");
    check(!f.is_zero(), "square-freeness of zero polynomial");
    if (f.is_constant()) return true;
    Poly d1 = bivariate_gcd(f, f.derivative(0));
    Poly d2 = bivariate_gcd(d1, f.derivative(1));
    return d2.is_constant();
}

/* ------------------------------------------------------------------ */
/* Rational roots of a univariate polynomial.                          */
/* ------------------------------------------------------------------ */

struct RationalRoot {
    BigRational root;
    int multiplicity;
};

struct RootSplit {
    std::vector<RationalRoot> roots; /* ascending by root */
    Poly residual;                   /* rational-root-free cofactor */
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt v) {
    if (v < 0) v = -v;
    check(v != 0, "divisors of zero");
    long long n = to_long_checked(v);
    std::vector<BigInt> d;
    for (long long i = 1; static_cast<long long>(i) * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(BigInt(i));
            if (i != n / i) d.push_back(BigInt(n / i));
        }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

/* All rational roots (with multiplicities) of a nonzero polynomial univariate
 * in variable i, plus the exact cofactor with no rational roots. */
inline RootSplit rational_roots(const Poly& f, int i) {
    check(!f.is_zero(), "rational_roots of zero polynomial");
    check(univariate_in(f, i), "rational_roots on multivariate polynomial");
    RootSplit out{{}, f};
    Poly cur = f;
    const Poly xi = Poly::variable(f.nvars(), i);

    /* root at zero */
    int t = cur.order_in(i);
    if (t > 0) {
        out.roots.push_back({BigRational(0), t});
        cur = divide_exact(cur, xi.pow(t));
    }
    if (!cur.is_constant()) {
        auto coeffs = univariate_coeffs(cur, i);
        BigInt lcm(1);
        for (const auto& c : coeffs)
            lcm = boost::multiprecision::lcm(lcm, den(c));
        BigInt trailing = num(coeffs.front() * BigRational(lcm));
        BigInt leading = num(coeffs.back() * BigRational(lcm));
        check(trailing != 0 && leading != 0, "rational_roots normalization");
        for (const BigInt& p : detail::positive_divisors(trailing)) {
            for (const BigInt& q : detail::positive_divisors(leading)) {
                if (boost::multiprecision::gcd(p, q) != 1) continue;
                for (int sign = 1; sign >= -1; sign -= 2) {
                    BigRational c = big_rat(sign * p, q);
                    int mult = 0;
                    std::vector<BigRational> pt(f.nvars(), BigRational(0));
                    pt[i] = c;
                    while (!cur.is_constant() && cur.eval(pt) == 0) {
                        cur = divide_exact(cur, xi - Poly::constant(f.nvars(), c));
                        ++mult;
                    }
                    if (mult > 0) out.roots.push_back({c, mult});
                }
            }
        }
    }
    out.residual = cur;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

/* ------------------------------------------------------------------ */
/* Resultants (Sylvester determinant) and the cubic discriminant.      */
/* ------------------------------------------------------------------ */

namespace detail {

/* cofactor-expansion determinant over the polynomial ring */
inline Poly poly_det(std::vector<std::vector<Poly>>& m, std::vector<int>& cols,
                     int row, int nvars) {
    if (row == static_cast<int>(m.size())) return Poly::constant(nvars, BigRational(1));
    Poly acc(nvars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (m[row][c].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Poly sub = poly_det(m, rest, row + 1, nvars);
        Poly term = m[row][c] * sub;
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace detail

/* Sylvester resultant of f and g with respect to variable i; the result does
 * not involve variable i. */
inline Poly resultant(const Poly& f, const Poly& g, int i) {
    check(f.nvars() == g.nvars(), "polynomial arity mismatch");
    check(!f.is_zero() && !g.is_zero(), "resultant of zero polynomial");
    int df = f.degree_in(i), dg = g.degree_in(i);
    check(df > 0 || dg > 0, "resultant needs positive degree in the variable");
    const int n = f.nvars();
    /* coefficient lists in x_i with Poly coefficients */
    auto coeffs_of = [&](const Poly& p, int d) {
        std::vector<Poly> c(static_cast<std::size_t>(d) + 1, Poly(n));
        for (const auto& [e, v] : p.terms()) {
            Monomial e2 = e;
            int k = e2[i];
            e2[i] = 0;
            c[k] += Poly::monomial(n, e2, v);
        }
        return c;
    };
    std::vector<Poly> fc = coeffs_of(f, df), gc = coeffs_of(g, dg);
    int size = df + dg;
    std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly(n)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[r][r + (df - k)] = fc[k];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m[dg + r][r + (dg - k)] = gc[k];
    std::vector<int> cols(size);
    for (int j = 0; j < size; ++j) cols[j] = j;
    return detail::poly_det(m, cols, 0, n);
}

/*
 * Discriminant of the depressed cubic z^3 + a2 z + a3 via the Sylvester
 * resultant with the derivative; sign convention fixed so that the result is
 * exactly 4*a2^3 + 27*a3^2.
 */
inline Poly cubic_discriminant(const Poly& a2, const Poly& a3) {
    check(a2.nvars() == a3.nvars(), "polynomial arity mismatch");
    const int n = a2.nvars();
    const int z = n; /* fresh variable appended on the right */
    Poly zz = Poly::variable(n + 1, z);
    Poly f = zz.pow(3) + a2.extended(n + 1) * zz + a3.extended(n + 1);
    Poly fp = Poly::constant(n + 1, BigRational(3)) * zz.pow(2) + a2.extended(n + 1);
    Poly res = resultant(f, fp, z);
    return res.contracted(n);
}

} // namespace duval

#endif
