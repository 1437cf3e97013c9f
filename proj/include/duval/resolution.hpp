#ifndef DUVAL_RESOLUTION_HPP
#define DUVAL_RESOLUTION_HPP

/*
 * Embedded resolution of a plane branch germ by iterated point blow-ups.
 *
 * Phase 1 (resolve): blow up until the total transform of the germ has only
 * normal crossings.  The state tracks, for every exceptional curve E_i, the
 * multiplicity alpha_i of the total transform of the germ along E_i, the
 * self-intersection of E_i, the pairwise intersection counts between
 * exceptional curves, and the intersection count of each E_i with the strict
 * transform of the germ.  Intersection points themselves are not retained:
 * after normal crossings are reached, every crossing is transversal and the
 * counts determine the rest of the computation.
 *
 * Phase 2 (make_branch_disjoint): additionally blow up every remaining
 * crossing between two components of the branch divisor (the strict transform
 * of the germ together with the odd-multiplicity exceptional curves) so that
 * the branch divisor of the double cover becomes smooth and disjoint.  Each
 * such blow-up inserts a curve of even multiplicity, so this phase is purely
 * combinatorial and terminates.
 */

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "duval/germ.hpp"
#include "duval/poly.hpp"

namespace duval {

/* Pseudo-id used for the strict transform of the branch germ itself. */
constexpr int kBranchId = 0;

struct ExcCurve {
    int id;           /* 1-based, creation order */
    BigInt alpha;     /* multiplicity of the total transform along the curve */
    BigInt self_int;
};

struct Arrangement {
    std::vector<ExcCurve> curves;
    std::map<std::pair<int, int>, BigInt> edges; /* key (a<b): E_a . E_b */
    std::map<int, BigInt> bbar;                  /* id -> E_id . strict germ */
    BigInt branch_nodes{0};                      /* transversal self-crossings of the strict germ */
    int phase1_blowups = 0;
    int phase2_blowups = 0;
    int phase1_curves = 0;

    ExcCurve& curve(int id) {
        check(id >= 1 && id <= static_cast<int>(curves.size()), "bad curve id");
        return curves[static_cast<std::size_t>(id) - 1];
    }
    const ExcCurve& curve(int id) const {
        check(id >= 1 && id <= static_cast<int>(curves.size()), "bad curve id");
        return curves[static_cast<std::size_t>(id) - 1];
    }
    BigInt edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = edges.find({a, b});
        return it == edges.end() ? BigInt(0) : it->second;
    }
    void add_edge(int a, int b, const BigInt& d) {
        check(a != b, "add_edge on a single curve");
        if (a > b) std::swap(a, b);
        BigInt& v = edges[{a, b}];
        v += d;
        check(v >= 0, "negative intersection count");
        if (v == 0) edges.erase({a, b});
    }
    BigInt bbar_of(int id) const {
        auto it = bbar.find(id);
        return it == bbar.end() ? BigInt(0) : it->second;
    }
    void add_bbar(int id, const BigInt& d) {
        BigInt& v = bbar[id];
        v += d;
        check(v >= 0, "negative branch intersection count");
        if (v == 0) bbar.erase(id);
    }
    bool is_odd(int id) const { return curve(id).alpha % 2 != 0; }
};

namespace detail {

struct SiteComponent {
    int id;  /* kBranchId for the germ strict transform, else exceptional id */
    Poly eq; /* local equation vanishing at the origin of the site */
};

struct Site {
    std::vector<SiteComponent> comps;
};

/* Chart A: (x, y) -> (x, x y), exceptional curve {x = 0}.
 * Chart B: (x, y) -> (x y, y), exceptional curve {y = 0}.
 * Returns the strict transform together with the division exponent. */
inline std::pair<Poly, int> strict_transform(const Poly& p, bool chart_a) {
    const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly q = chart_a ? p.substitute(1, x * y) : p.substitute(0, x * y);
    int axis = chart_a ? 0 : 1;
    int ord = q.order_in(axis);
    return {divide_exact(q, Poly::variable(2, axis).pow(ord)), ord};
}

/* Status of a configuration of local components at the origin. */
enum class SiteStatus { normal_crossing, branch_node, needs_blowup };

inline SiteStatus classify_site(const Site& s) {
    check(!s.comps.empty(), "empty site");
    Poly g = Poly::constant(2, BigRational(1));
    for (const auto& c : s.comps) {
        check(c.eq.vanishes_at_origin(), "site component misses the origin");
        g *= c.eq;
    }
    int m = g.multiplicity_at_origin();
    if (m <= 1) return SiteStatus::normal_crossing;
    if (m == 2) {
        Poly q = g.leading_form();
        BigRational a = q.coeff({2, 0}), b = q.coeff({1, 1}), c = q.coeff({0, 2});
        if (b * b - 4 * a * c != 0) {
            /* transversal double point */
            if (s.comps.size() == 1 && s.comps[0].id == kBranchId)
                return SiteStatus::branch_node;
            return SiteStatus::normal_crossing;
        }
    }
    return SiteStatus::needs_blowup;
}

class Resolver {
public:
    Resolver(Arrangement& arr, int cap) : arr_(arr), cap_(cap) {}

    void run(const Poly& germ) {
        Site s;
        s.comps.push_back({kBranchId, germ});
        process(s);
    }

private:
    Arrangement& arr_;
    int cap_;

    void process(const Site& s) {
        switch (classify_site(s)) {
        case SiteStatus::normal_crossing:
            return;
        case SiteStatus::branch_node:
            arr_.branch_nodes += 1;
            return;
        case SiteStatus::needs_blowup:
            blow_up(s);
            return;
        }
    }

    void blow_up(const Site& s) {
        if (arr_.phase1_blowups >= cap_)
            throw internal_error("resolution exceeded the blow-up budget");
        ++arr_.phase1_blowups;

        /* --- multiplicities at the center --- */
        const Poly* f = nullptr;
        std::vector<int> exc_ids;
        for (const auto& c : s.comps) {
            if (c.id == kBranchId) {
                f = &c.eq;
            } else {
                check(c.eq.multiplicity_at_origin() == 1,
                      "exceptional curve is singular at a center");
                exc_ids.push_back(c.id);
            }
        }
        const BigInt m_f = f ? BigInt(f->multiplicity_at_origin()) : BigInt(0);

        /* --- new curve and intersection bookkeeping --- */
        const int nid = static_cast<int>(arr_.curves.size()) + 1;
        BigInt alpha = m_f;
        for (int e : exc_ids) alpha += arr_.curve(e).alpha;
        arr_.curves.push_back({nid, alpha, BigInt(-1)});

        for (int e : exc_ids) arr_.curve(e).self_int -= 1;
        for (std::size_t i = 0; i < exc_ids.size(); ++i)
            for (std::size_t j = i + 1; j < exc_ids.size(); ++j)
                arr_.add_edge(exc_ids[i], exc_ids[j], BigInt(-1));
        if (f) {
            for (int e : exc_ids) arr_.add_bbar(e, -m_f);
            arr_.add_bbar(nid, m_f);
        }
        for (int e : exc_ids) arr_.add_edge(nid, e, BigInt(1));

        /* --- chart A: finite points of the new exceptional curve --- */
        struct Transformed {
            int id;
            Poly eq;
        };
        std::vector<Transformed> vis_a;
        for (const auto& c : s.comps) {
            auto [st, ord] = strict_transform(c.eq, true);
            check(ord == (c.id == kBranchId ? static_cast<int>(m_f) : 1),
                  "strict transform division exponent mismatch");
            if (!st.is_constant()) vis_a.push_back({c.id, st});
        }
        std::set<BigRational> candidates;
        for (const auto& t : vis_a) {
            Poly rest = t.eq.restrict_zero(0);
            if (rest.is_constant()) continue; /* meets the new curve only at infinity */
            RootSplit rs = rational_roots(rest, 1);
            for (const auto& r : rs.roots) candidates.insert(r.root);
            if (!rs.residual.is_constant()) {
                if (t.id != kBranchId)
                    throw internal_error(
                        "exceptional curve meets the new curve at an irrational point");
                Poly d = univariate_gcd(rs.residual, rs.residual.derivative(1), 1);
                if (!d.is_constant())
                    throw irrational_center(
                        "the configuration has a non-transversal point with "
                        "irrational coordinates; this input is outside the "
                        "supported class");
            }
        }
        for (const BigRational& c : candidates) {
            Site child;
            child.comps.push_back({nid, Poly::variable(2, 0)});
            for (const auto& t : vis_a) {
                Poly sh = t.eq.translate(1, c);
                if (sh.vanishes_at_origin()) child.comps.push_back({t.id, sh});
            }
            process(child);
        }

        /* --- chart B: the remaining point of the new exceptional curve --- */
        Site child_b;
        child_b.comps.push_back({nid, Poly::variable(2, 1)});
        for (const auto& c : s.comps) {
            auto [st, ord] = strict_transform(c.eq, false);
            check(ord == (c.id == kBranchId ? static_cast<int>(m_f) : 1),
                  "strict transform division exponent mismatch");
            if (!st.is_constant() && st.vanishes_at_origin())
                child_b.comps.push_back({c.id, st});
        }
        if (child_b.comps.size() > 1) process(child_b);
    }
};

} // namespace detail

/* Phase 1: blow up until the total transform of the germ has only normal
 * crossings.  The default budget is ample for every supported germ. */
inline Arrangement resolve(const CurveGerm& germ, int cap = 60) {
    validate_germ(germ);
    Arrangement arr;
    detail::Resolver(arr, cap).run(germ.equation);
    arr.phase1_curves = static_cast<int>(arr.curves.size());
    return arr;
}

/* Phase 2: blow up every crossing between two branch-divisor components
 * (the strict transform of the germ and the odd-multiplicity exceptional
 * curves).  Purely combinatorial: after phase 1 all crossings are transversal
 * and only their counts matter. */
inline void make_branch_disjoint(Arrangement& arr) {
    const int cap = 500;
    for (;;) {
        if (arr.phase2_blowups >= cap)
            throw internal_error("branch separation exceeded the blow-up budget");

        /* pick the smallest pending branch-with-branch crossing */
        int a = -1, b = -1;
        if (arr.branch_nodes > 0) {
            a = kBranchId;
            b = kBranchId;
        }
        if (a < 0) {
            for (const auto& c : arr.curves)
                if (arr.is_odd(c.id) && arr.bbar_of(c.id) > 0) {
                    a = kBranchId;
                    b = c.id;
                    break;
                }
        }
        if (a < 0) {
            for (const auto& [key, v] : arr.edges) {
                if (v > 0 && arr.is_odd(key.first) && arr.is_odd(key.second)) {
                    a = key.first;
                    b = key.second;
                    break;
                }
            }
        }
        if (a < 0) break;

        ++arr.phase2_blowups;
        const int nid = static_cast<int>(arr.curves.size()) + 1;
        BigInt alpha(0);
        alpha += (a == kBranchId) ? BigInt(1) : arr.curve(a).alpha;
        alpha += (b == kBranchId) ? BigInt(1) : arr.curve(b).alpha;
        check(alpha % 2 == 0, "separating blow-up must have even multiplicity");
        arr.curves.push_back({nid, alpha, BigInt(-1)});

        if (a == kBranchId && b == kBranchId) {
            arr.branch_nodes -= 1;
            arr.add_bbar(nid, BigInt(2));
        } else if (a == kBranchId) {
            arr.add_bbar(b, BigInt(-1));
            arr.curve(b).self_int -= 1;
            arr.add_bbar(nid, BigInt(1));
            arr.add_edge(nid, b, BigInt(1));
        } else {
            arr.add_edge(a, b, BigInt(-1));
            arr.curve(a).self_int -= 1;
            arr.curve(b).self_int -= 1;
            arr.add_edge(nid, a, BigInt(1));
            arr.add_edge(nid, b, BigInt(1));
        }
    }

    /* the branch divisor is now smooth and disjoint */
    check(arr.branch_nodes == 0, "branch separation left a node");
    for (const auto& c : arr.curves) {
        if (!arr.is_odd(c.id)) continue;
        check(arr.bbar_of(c.id) == 0, "branch separation left a germ crossing");
        for (const auto& d : arr.curves)
            if (d.id != c.id && arr.is_odd(d.id))
                check(arr.edge(c.id, d.id) == 0,
                      "branch separation left an odd-odd crossing");
    }
}

} // namespace duval

#endif
