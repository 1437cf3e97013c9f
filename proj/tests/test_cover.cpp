#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "duval/cover.hpp"

using namespace duval;

namespace {

std::vector<AdeType> table_types() {
    std::vector<AdeType> types;
    for (int n = 1; n <= 10; ++n) types.push_back({AdeSeries::A, n});
    for (int n = 4; n <= 10; ++n) types.push_back({AdeSeries::D, n});
    for (int n = 6; n <= 8; ++n) types.push_back({AdeSeries::E, n});
    return types;
}

std::vector<BigInt> sorted_grouped(const GermAnalysis& ga) {
    std::vector<BigInt> v;
    for (const auto& g : ga.grouped) v.push_back(g.value);
    std::sort(v.begin(), v.end());
    return v;
}

IntMatrix path_graph(int n) {
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

/* Star with three legs of the given lengths, center vertex last. */
IntMatrix star_graph(int l1, int l2, int l3) {
    int n = l1 + l2 + l3 + 1;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = -2;
    int center = n - 1, v = 0;
    for (int len : {l1, l2, l3}) {
        int prev = center;
        for (int s = 0; s < len; ++s, ++v) {
            m.at(prev, v) = 1;
            m.at(v, prev) = 1;
            prev = v;
        }
    }
    return m;
}

} // namespace

TEST_CASE("dynkin classification of abstract graphs") {
    CHECK(classify_dynkin(path_graph(1)) == AdeType{AdeSeries::A, 1});
    CHECK(classify_dynkin(path_graph(7)) == AdeType{AdeSeries::A, 7});
    CHECK(classify_dynkin(star_graph(1, 1, 1)) == AdeType{AdeSeries::D, 4});
    CHECK(classify_dynkin(star_graph(1, 1, 4)) == AdeType{AdeSeries::D, 7});
    CHECK(classify_dynkin(star_graph(1, 2, 2)) == AdeType{AdeSeries::E, 6});
    CHECK(classify_dynkin(star_graph(1, 2, 3)) == AdeType{AdeSeries::E, 7});
    CHECK(classify_dynkin(star_graph(1, 2, 4)) == AdeType{AdeSeries::E, 8});
    CHECK_THROWS_AS(classify_dynkin(star_graph(2, 2, 2)), not_dynkin);
    CHECK_THROWS_AS(classify_dynkin(star_graph(1, 2, 5)), not_dynkin);
    IntMatrix cyc(3, 3);
    for (int i = 0; i < 3; ++i) {
        cyc.at(i, i) = -2;
        cyc.at(i, (i + 1) % 3) = 1;
        cyc.at((i + 1) % 3, i) = 1;
    }
    CHECK_THROWS_AS(classify_dynkin(cyc), not_dynkin);
}

TEST_CASE("double cover requires a disjoint branch") {
    Arrangement a = resolve(standard_germ({AdeSeries::D, 4}));
    CHECK_THROWS_AS(build_double_cover(a), branch_not_disjoint);
    make_branch_disjoint(a);
    CHECK_NOTHROW(build_double_cover(a));
}

TEST_CASE("node cover is a single branch vertex") {
    GermAnalysis ga = analyze_germ({AdeSeries::A, 1});
    CHECK(ga.dynkin == AdeType{AdeSeries::A, 1});
    CHECK(ga.delta == 1);
    REQUIRE(ga.cover.verts.size() == 1);
    CHECK(ga.cover.verts[0].type == SheetType::even_single);
    CHECK(ga.cover.m.at(0, 0) == -2); /* self 2s = -2 upstairs, s = -1 */
    CHECK(ga.cover.r == std::vector<BigInt>({2}));
    CHECK(ga.cover.z == std::vector<BigInt>({1}));
    CHECK(ga.minimal.contractions == 0);
}

TEST_CASE("cusp cover contracts to the A2 configuration") {
    GermAnalysis ga = analyze_germ({AdeSeries::A, 2});
    /* Upstairs: E1 splits into a pair, E2 lifts to a branch curve, E6 is
     * a single even curve -- four vertices before contraction. */
    CHECK(ga.cover.verts.size() == 4);
    CHECK(ga.minimal.verts.size() == 2);
    CHECK(ga.minimal.contractions == 2);
    CHECK(ga.dynkin == AdeType{AdeSeries::A, 2});
    CHECK(ga.delta == 1);
    CHECK(sorted_grouped(ga) == std::vector<BigInt>({1}));
    REQUIRE(ga.grouped.size() == 1);
    CHECK(ga.grouped[0].from_pair);
}

TEST_CASE("triple point cover needs no contraction") {
    GermAnalysis ga = analyze_germ({AdeSeries::D, 4});
    CHECK(ga.minimal.verts.size() == 4);
    CHECK(ga.minimal.contractions == 0);
    CHECK(sorted_grouped(ga) == std::vector<BigInt>({2, 2, 2, 3}));
}

TEST_CASE("minimal models are negative definite with self-intersection -2") {
    for (const AdeType& t : table_types()) {
        INFO(ade_name(t));
        GermAnalysis ga = analyze_germ(t);
        const IntMatrix& m = ga.minimal.m;
        CHECK(m.rows() == t.index);
        for (int i = 0; i < m.rows(); ++i) CHECK(m.at(i, i) == -2);
        CHECK(is_negative_definite(m));
        CHECK(classify_dynkin(m) == t);
    }
}

TEST_CASE("canonical cycle solves the adjunction system exactly") {
    for (const AdeType& t : table_types()) {
        INFO(ade_name(t));
        GermAnalysis ga = analyze_germ(t);
        const MinimalModel& mm = ga.minimal;
        int n = mm.m.rows();
        /* M z = -r, re-verified outside the library. */
        for (int i = 0; i < n; ++i) {
            BigInt acc = 0;
            for (int j = 0; j < n; ++j)
                acc += mm.m.at(i, j) * mm.z[static_cast<std::size_t>(j)];
            CHECK(acc == -mm.r[static_cast<std::size_t>(i)]);
        }
        /* -Z^2 = z . r = 2 delta. */
        BigInt zr = 0;
        for (int i = 0; i < n; ++i)
            zr += mm.z[static_cast<std::size_t>(i)] *
                  mm.r[static_cast<std::size_t>(i)];
        CHECK(zr == 2 * ga.delta);
        CHECK(ga.delta == defect_closed_form(t));
        /* Solving with the generic exact solver gives the same cycle. */
        std::vector<BigInt> rhs;
        for (const BigInt& v : mm.r) rhs.push_back(-v);
        auto zq = solve_linear_exact(mm.m, rhs);
        for (int i = 0; i < n; ++i)
            CHECK(zq[static_cast<std::size_t>(i)] ==
                  BigRational(mm.z[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("grouped cycles match the expected tables outside E7") {
    for (const AdeType& t : table_types()) {
        if (t == AdeType{AdeSeries::E, 7}) continue;
        INFO(ade_name(t));
        GermAnalysis ga = analyze_germ(t);
        std::vector<BigInt> want = expected_cycle_multiset(t);
        std::sort(want.begin(), want.end());
        CHECK(sorted_grouped(ga) == want);
    }
}

TEST_CASE("E7 computed cycle differs from its printed table in one entry") {
    GermAnalysis ga = analyze_germ({AdeSeries::E, 7});
    /* The E7 adjunction system has the unique exact solution below; the
     * printed reference table instead lists an 8 where the solver (and
     * the closed formula, and -Z^2 = 2 delta) force a 7. */
    CHECK(sorted_grouped(ga) ==
          std::vector<BigInt>({3, 3, 5, 5, 6, 7, 9}));
    std::vector<BigInt> table = expected_cycle_multiset({AdeSeries::E, 7});
    std::sort(table.begin(), table.end());
    CHECK(table == std::vector<BigInt>({3, 3, 5, 5, 6, 8, 9}));
    /* The printed value is inconsistent with -Z^2 = 2 delta: swapping the
     * computed 7 for an 8 changes z . r, so no valid cycle realizes it. */
    CHECK(sorted_grouped(ga) != table);
}

TEST_CASE("even A germs produce split pairs with swap symmetry") {
    GermAnalysis ga = analyze_germ({AdeSeries::A, 6});
    int pairs = 0;
    for (const auto& g : ga.grouped)
        if (g.from_pair) ++pairs;
    CHECK(pairs == 3); /* A6: three split even curves */
    CHECK(sorted_grouped(ga) == std::vector<BigInt>({1, 2, 3}));
}

TEST_CASE("odd A germs end in a single unsplit vertex") {
    GermAnalysis ga = analyze_germ({AdeSeries::A, 9});
    CHECK(sorted_grouped(ga) == std::vector<BigInt>({1, 2, 3, 4, 5}));
    int singles = 0;
    for (const auto& g : ga.grouped)
        if (!g.from_pair) {
            ++singles;
            CHECK(g.value == 5);
        }
    CHECK(singles == 1);
}

TEST_CASE("expected defect values for the whole table") {
    CHECK(defect_closed_form({AdeSeries::A, 1}) == 1);
    CHECK(defect_closed_form({AdeSeries::A, 2}) == 1);
    CHECK(defect_closed_form({AdeSeries::A, 10}) == 5);
    CHECK(defect_closed_form({AdeSeries::D, 4}) == 3);
    CHECK(defect_closed_form({AdeSeries::D, 10}) == 6);
    CHECK(defect_closed_form({AdeSeries::E, 6}) == 3);
    CHECK(defect_closed_form({AdeSeries::E, 7}) == 4);
    CHECK(defect_closed_form({AdeSeries::E, 8}) == 4);
}
