/*
 * duval — exact computation of resolution graphs, canonical cycles,
 * defects, covering invariants, and uniqueness criteria for generic
 * coverings of the plane branched along curves with A-D-E singularities.
 *
 * Subcommands: resolve, cycle, invariants, chisini, mcanonical,
 * monodromy, selftest.  Output is human-readable by default; --format
 * machine emits deterministic JSON with bare integers and "p/q"
 * rationals.  Exit codes: 0 success, 1 negative mathematical verdict,
 * 2 invalid input, 3 internal error.
 */

#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duval/chisini.hpp"
#include "duval/cover.hpp"
#include "duval/germ.hpp"
#include "duval/invariants.hpp"
#include "duval/io.hpp"
#include "duval/local_models.hpp"
#include "duval/monodromy.hpp"
#include "duval/resolution.hpp"

namespace {

using namespace duval;

constexpr int kExitOk = 0;
constexpr int kExitVerdictNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

/* ---------------------------------------------------------------- */
/* Input gathering: file, then --set overrides, then direct flags.  */
/* ---------------------------------------------------------------- */

InputDoc gather_input(const std::string& input_path,
                      const std::vector<std::string>& sets,
                      const std::vector<std::pair<std::string, std::string>>&
                          direct) {
    InputDoc doc;
    if (!input_path.empty()) doc = read_input_file(input_path);
    for (const std::string& s : sets) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
            throw schema_error("--set expects KEY=VALUE, got '" + s + "'");
        doc[s.substr(0, eq)] = s.substr(eq + 1);
    }
    for (const auto& [key, value] : direct) doc[key] = value;
    return doc;
}

bool machine_format(const std::string& format) {
    if (format == "machine") return true;
    if (format == "human") return false;
    throw schema_error("--format must be 'human' or 'machine'");
}

void emit(const MachineDoc& doc, bool machine) {
    if (machine) std::cout << dump_machine(doc);
}

/* ---------------------------------------------------------------- */
/* resolve                                                          */
/* ---------------------------------------------------------------- */

MachineDoc arrangement_json(const Arrangement& arr) {
    MachineDoc out;
    out["blowups"] = arr.phase1_blowups + arr.phase2_blowups;
    MachineDoc curves = MachineDoc::array();
    for (const auto& c : arr.curves) {
        MachineDoc e;
        e["id"] = c.id;
        e["alpha"] = machine_int(c.alpha);
        e["self"] = machine_int(c.self_int);
        curves.push_back(e);
    }
    out["curves"] = curves;
    MachineDoc edges = MachineDoc::array();
    for (const auto& [key, mult] : arr.edges) {
        MachineDoc e;
        e["a"] = key.first;
        e["b"] = key.second;
        e["mult"] = machine_int(mult);
        edges.push_back(e);
    }
    out["edges"] = edges;
    MachineDoc bbar = MachineDoc::array();
    for (const auto& [id, mult] : arr.bbar) {
        MachineDoc e;
        e["id"] = id;
        e["mult"] = machine_int(mult);
        bbar.push_back(e);
    }
    out["bbar"] = bbar;
    out["branch_nodes"] = machine_int(arr.branch_nodes);
    return out;
}

void print_arrangement_human(const Arrangement& arr) {
    std::cout << "blow-ups: " << arr.phase1_blowups + arr.phase2_blowups
              << "\n";
    std::cout << "exceptional curves:\n";
    for (const auto& c : arr.curves)
        std::cout << "  E" << c.id << ": alpha = " << c.alpha.str()
                  << ", self = " << c.self_int.str() << "\n";
    std::cout << "crossings:\n";
    for (const auto& [key, mult] : arr.edges)
        std::cout << "  E" << key.first << ".E" << key.second << " = "
                  << mult.str() << "\n";
    for (const auto& [id, mult] : arr.bbar)
        std::cout << "  B.E" << id << " = " << mult.str() << "\n";
    if (arr.branch_nodes != 0)
        std::cout << "  B self-crossings: " << arr.branch_nodes.str() << "\n";
    std::cout << "normal crossings: yes\n";
}

int run_resolve(const InputDoc& doc, bool extra_blowups, bool machine) {
    GermRequest req = germ_request_from_doc(doc);
    CurveGerm germ = standard_germ(req.type);
    Arrangement arr = resolve(germ);
    /* The optional extra-blow-up mode for cusp pipelines coincides with
     * the default on every supported germ: full normal crossings already
     * includes those steps.  The flag is honored and echoed. */
    if (machine) {
        MachineDoc out;
        out["command"] = "resolve";
        MachineDoc input;
        input["family"] = req.type.series == AdeSeries::A   ? "A"
                          : req.type.series == AdeSeries::D ? "D"
                                                            : "E";
        input["index"] = req.type.index;
        input["extra_blowups"] = extra_blowups;
        out["input"] = input;
        out["germ"] = germ.equation.str({"x", "y"});
        MachineDoc record = arrangement_json(arr);
        for (auto it = record.begin(); it != record.end(); ++it)
            out[it.key()] = it.value();
        out["normal_crossings"] = true;
        emit(out, machine);
    } else {
        std::cout << "resolution of " << germ.name << " ("
                  << germ.equation.str({"x", "y"}) << ")\n";
        if (extra_blowups)
            std::cout << "extra blow-up mode: enabled (coincides with the "
                         "full resolution)\n";
        print_arrangement_human(arr);
    }
    return kExitOk;
}

/* ---------------------------------------------------------------- */
/* cycle                                                            */
/* ---------------------------------------------------------------- */

int run_cycle(const InputDoc& doc, bool machine) {
    GermRequest req = germ_request_from_doc(doc);
    GermAnalysis ga = analyze_germ(req.type);
    const int n = ga.minimal.m.rows();
    if (machine) {
        MachineDoc out;
        out["command"] = "cycle";
        MachineDoc input;
        input["family"] = req.type.series == AdeSeries::A   ? "A"
                          : req.type.series == AdeSeries::D ? "D"
                                                            : "E";
        input["index"] = req.type.index;
        out["input"] = input;
        out["dynkin"] = ade_name(ga.dynkin);
        out["delta"] = machine_int(ga.delta);
        MachineDoc verts = MachineDoc::array();
        for (int i = 0; i < n; ++i) {
            const auto& v = ga.minimal.verts[static_cast<std::size_t>(i)];
            MachineDoc e;
            e["label"] = v.label;
            e["down"] = v.down_id;
            e["self"] = machine_int(
                ga.minimal.m.at(i, i));
            e["r"] = machine_int(ga.minimal.r[static_cast<std::size_t>(i)]);
            e["z"] = machine_int(ga.minimal.z[static_cast<std::size_t>(i)]);
            verts.push_back(e);
        }
        out["vertices"] = verts;
        MachineDoc edges = MachineDoc::array();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (ga.minimal.m.at(i, j) != 0) {
                    MachineDoc e;
                    e["a"] = i;
                    e["b"] = j;
                    edges.push_back(e);
                }
        out["edges"] = edges;
        MachineDoc grouped = MachineDoc::array();
        for (const auto& g : ga.grouped) {
            MachineDoc e;
            e["curve"] = g.down_id;
            e["coeff"] = machine_int(g.value);
            e["pair"] = g.from_pair;
            grouped.push_back(e);
        }
        out["grouped_cycle"] = grouped;
        out["formula_matches_solver"] = true;
        out["contractions"] = ga.minimal.contractions;
        emit(out, machine);
    } else {
        std::cout << "germ " << ade_name(req.type)
                  << ": minimal resolution graph " << ade_name(ga.dynkin)
                  << "\n";
        std::cout << "vertices (all self-intersection -2):\n";
        for (int i = 0; i < n; ++i) {
            const auto& v = ga.minimal.verts[static_cast<std::size_t>(i)];
            std::cout << "  " << i << ": " << v.label << "  R.L = "
                      << ga.minimal.r[static_cast<std::size_t>(i)].str()
                      << "  z = "
                      << ga.minimal.z[static_cast<std::size_t>(i)].str()
                      << "\n";
        }
        std::cout << "edges:";
        bool any = false;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (ga.minimal.m.at(i, j) != 0) {
                    std::cout << " " << i << "-" << j;
                    any = true;
                }
        std::cout << (any ? "\n" : " none\n");
        std::cout << "canonical cycle (grouped): Z =";
        for (std::size_t i = 0; i < ga.grouped.size(); ++i) {
            const auto& g = ga.grouped[i];
            std::cout << (i ? " + " : " ") << g.value.str() << "*L"
                      << g.down_id;
            if (g.from_pair) std::cout << " (split pair)";
        }
        std::cout << "\n";
        std::cout << "defect delta = " << ga.delta.str() << "\n";
        std::cout << "formula vs solver: agree\n";
        std::cout << "contractions to minimal: " << ga.minimal.contractions
                  << "\n";
    }
    return kExitOk;
}

/* ---------------------------------------------------------------- */
/* invariants                                                       */
/* ---------------------------------------------------------------- */

MachineDoc profile_echo(const CoveringProfile& cp) {
    MachineDoc input;
    input["N"] = machine_int(cp.N);
    input["d"] = machine_int(cp.d);
    input["n_s"] = machine_int(cp.n_s);
    input["n_p"] = machine_int(cp.n_p);
    input["c_s"] = machine_int(cp.c_s);
    input["c_p"] = machine_int(cp.c_p);
    MachineDoc sings = MachineDoc::array();
    for (const auto& [t, count] : cp.sing.entries()) {
        if (t.series == AdeSeries::A && t.index <= 2) continue;
        MachineDoc e;
        e["type"] = ade_name(t);
        e["count"] = machine_int(count);
        sings.push_back(e);
    }
    input["singularities"] = sings;
    return input;
}

int run_invariants(const InputDoc& doc, bool machine) {
    CoveringProfile cp = covering_profile_from_doc(doc);
    InvariantReport rep = analyze_covering(cp);
    if (machine) {
        MachineDoc out;
        out["command"] = "invariants";
        out["input"] = profile_echo(cp);
        out["dbar"] = machine_int(rep.d_bar);
        out["delta"] = machine_int(rep.delta_B);
        out["delta0"] = machine_int(rep.delta_0);
        out["deltaX"] = machine_int(rep.delta_X);
        out["genus"] = machine_int(rep.genus);
        out["pa_R"] = machine_int(rep.p_a_R);
        out["rbar_sq"] = machine_int(rep.self_ints.r_bar_sq);
        out["rbar_plus_z_sq"] = machine_int(rep.self_ints.r_bar_plus_z_sq);
        out["K_sq"] = machine_int(rep.chern.k_sq);
        out["euler"] = machine_int(rep.chern.euler);
        out["chi"] = machine_int(rep.chern.chi);
        out["noether_ok"] = true;
        out["nu"] = machine_int(rep.nu.nu);
        out["nu_prime"] = machine_int(rep.nu.nu_prime);
        out["dual_degree"] = machine_int(rep.dual_degree);
        MachineDoc bounds;
        bounds["linear"] = machine_int(rep.bounds.linear_bound);
        bounds["canonical"] = machine_rat(rep.bounds.canonical_bound);
        bounds["linear_equality"] = rep.bounds.linear_equality;
        bounds["canonical_equality"] = rep.bounds.canonical_equality;
        out["bounds"] = bounds;
        emit(out, machine);
    } else {
        std::cout << "covering of degree N = " << cp.N.str()
                  << ", branch curve degree d = " << cp.d.str() << "\n";
        std::cout << "  delta (total)        = " << rep.delta_B.str() << "\n";
        std::cout << "  delta_0 (higher)     = " << rep.delta_0.str() << "\n";
        std::cout << "  delta_X (surface)    = " << rep.delta_X.str() << "\n";
        std::cout << "  genus of B           = " << rep.genus.str() << "\n";
        std::cout << "  p_a(R)               = " << rep.p_a_R.str() << "\n";
        std::cout << "  (Rbar)^2             = "
                  << rep.self_ints.r_bar_sq.str() << "\n";
        std::cout << "  (Rbar + Z)^2         = "
                  << rep.self_ints.r_bar_plus_z_sq.str() << "\n";
        std::cout << "  K^2                  = " << rep.chern.k_sq.str()
                  << "\n";
        std::cout << "  e (topological)      = " << rep.chern.euler.str()
                  << "\n";
        std::cout << "  chi(O)               = " << rep.chern.chi.str()
                  << "\n";
        std::cout << "  Noether K^2 + e      = 12 chi: verified\n";
        std::cout << "  nu / nu'             = " << rep.nu.nu.str() << " / "
                  << rep.nu.nu_prime.str() << "\n";
        std::cout << "  dual curve degree    = " << rep.dual_degree.str()
                  << "\n";
        std::cout << "  degree bounds        : N <= "
                  << rep.bounds.linear_bound.str() << " and N <= "
                  << format_rational_human(rep.bounds.canonical_bound);
        if (rep.bounds.canonical_equality || rep.bounds.linear_equality)
            std::cout << " (equality attained: consistent with the "
                         "ramification class being a multiple of K)";
        std::cout << "\n";
    }
    return kExitOk;
}

/* ---------------------------------------------------------------- */
/* chisini                                                          */
/* ---------------------------------------------------------------- */

MachineDoc fiber_report_json(const FiberProductReport& rep, const BigInt& N2) {
    MachineDoc out;
    out["N2"] = machine_int(N2);
    out["iota1"] = machine_int(rep.iota1);
    MachineDoc inters;
    inters["rz_sq"] = machine_int(rep.inters.rz_sq);
    inters["cz_sq"] = machine_int(rep.inters.cz_sq);
    inters["cross"] = machine_int(rep.inters.cross);
    out["intersections"] = inters;
    out["delta_R"] = machine_int(rep.delta_R);
    out["delta_C"] = machine_int(rep.delta_C);
    MachineDoc pos;
    pos["value"] = machine_int(rep.positivity.value);
    pos["positive"] = rep.positivity.positive;
    out["positivity"] = pos;
    out["unbounded"] = rep.bound.unbounded;
    if (!rep.bound.unbounded) out["bound"] = machine_rat(rep.bound.value);
    out["verdict"] = verdict_name(rep.verdict);
    return out;
}

void print_fiber_report_human(const FiberProductReport& rep,
                              const BigInt& N2, const char* heading) {
    std::cout << heading << " (N2 = " << N2.str() << "):\n";
    std::cout << "  iota_1                  = " << rep.iota1.str() << "\n";
    std::cout << "  (R~ + Z_R)^2            = " << rep.inters.rz_sq.str()
              << "\n";
    std::cout << "  (C~ + Z_C)^2            = " << rep.inters.cz_sq.str()
              << "\n";
    std::cout << "  (R~ + Z_R).(C~ + Z_C)   = " << rep.inters.cross.str()
              << "\n";
    std::cout << "  delta_R / delta_C       = " << rep.delta_R.str() << " / "
              << rep.delta_C.str() << "\n";
    std::cout << "  positivity value        = " << rep.positivity.value.str()
              << (rep.positivity.positive ? " (> 0)" : " (NOT positive)")
              << "\n";
    if (rep.bound.unbounded)
        std::cout << "  degree bound            : vacuous (denominator <= 0)\n";
    else
        std::cout << "  degree bound            = "
                  << format_rational_human(rep.bound.value) << "\n";
    std::cout << "  verdict                 : " << verdict_name(rep.verdict)
              << "\n";
}

int run_chisini(const InputDoc& doc, bool machine) {
    PairInput in = pair_input_from_doc(doc);
    FiberProductReport forward =
        analyze_pair(in.cls, in.nu_prime, in.shared_invariants);
    std::optional<FiberProductReport> reversed;
    if (in.N1) {
        PairClassification rev =
            reversed_classification(in.cls, *in.N1, *in.g2);
        reversed = analyze_pair(rev, in.nu_prime, in.shared_invariants);
    }
    Verdict overall = forward.verdict;
    std::string ordering = "forward";
    if (reversed && reversed->verdict == Verdict::Unique &&
        forward.verdict != Verdict::Unique) {
        overall = Verdict::Unique;
        ordering = "reversed";
    }
    if (machine) {
        MachineDoc out;
        out["command"] = "chisini";
        MachineDoc input;
        input["n_ss"] = machine_int(in.cls.n_ss);
        input["n_sp"] = machine_int(in.cls.n_sp);
        input["n_ps"] = machine_int(in.cls.n_ps);
        input["n_pp"] = machine_int(in.cls.n_pp);
        input["c_ss"] = machine_int(in.cls.c_ss);
        input["c_sp"] = machine_int(in.cls.c_sp);
        input["c_ps"] = machine_int(in.cls.c_ps);
        input["c_pp"] = machine_int(in.cls.c_pp);
        input["delta0"] = machine_int(in.cls.delta_0);
        input["N2"] = machine_int(in.cls.N2);
        input["dbar"] = machine_int(in.cls.d_bar);
        input["g1"] = machine_int(in.cls.g1);
        input["nu_prime"] = machine_int(in.nu_prime);
        input["shared_invariants"] = in.shared_invariants;
        if (in.N1) {
            input["N1"] = machine_int(*in.N1);
            input["g2"] = machine_int(*in.g2);
        }
        out["input"] = input;
        out["forward"] = fiber_report_json(forward, in.cls.N2);
        if (reversed)
            out["reversed"] = fiber_report_json(*reversed, *in.N1);
        out["verdict"] = verdict_name(overall);
        out["ordering_used"] = ordering;
        emit(out, machine);
    } else {
        print_fiber_report_human(forward, in.cls.N2, "forward ordering");
        if (reversed)
            print_fiber_report_human(*reversed, *in.N1, "reversed ordering");
        std::cout << "overall verdict: " << verdict_name(overall)
                  << " (via " << ordering << " ordering)\n";
    }
    return overall == Verdict::Unique ? kExitOk : kExitVerdictNegative;
}

/* ---------------------------------------------------------------- */
/* mcanonical                                                       */
/* ---------------------------------------------------------------- */

MachineDoc criterion_json(const CriterionVerdict& v) {
    MachineDoc out;
    out["holds"] = v.holds;
    out["lhs"] = machine_rat(v.lhs);
    out["rhs"] = machine_rat(v.rhs);
    out["margin"] = machine_rat(v.margin);
    return out;
}

int run_mcanonical(const InputDoc& doc, bool machine) {
    MCanonicalRequest req = mcanonical_from_doc(doc);
    MCanonicalInvariants inv = mcanonical_invariants(req.m, req.k);
    BigRational iota_bound = iota_estimate(req.m, req.k, req.e);
    ChisiniCriterionReport crit = chisini_criterion(req.m, req.k, req.e);
    bool holds =
        crit.general.holds || (crit.sharper && crit.sharper->holds);
    if (machine) {
        MachineDoc out;
        out["command"] = "mcanonical";
        MachineDoc input;
        input["m"] = machine_int(req.m);
        input["k"] = machine_int(req.k);
        if (req.e) input["e"] = machine_int(*req.e);
        out["input"] = input;
        MachineDoc invariants;
        invariants["N"] = machine_int(inv.N);
        invariants["d"] = machine_int(inv.d);
        invariants["dbar"] = machine_int(inv.d_bar);
        invariants["pa_minus_1"] = machine_int(inv.p_a_minus_1);
        invariants["T"] = machine_int(inv.T);
        invariants["degenerate"] = inv.degenerate;
        out["invariants"] = invariants;
        out["iota_estimate"] = machine_rat(iota_bound);
        out["criterion"] = criterion_json(crit.general);
        if (crit.sharper) out["sharper"] = criterion_json(*crit.sharper);
        out["verdict"] = holds ? "holds" : "fails";
        emit(out, machine);
    } else {
        std::cout << "m-canonical covering, m = " << req.m.str()
                  << ", K^2 = " << req.k.str();
        if (req.e) std::cout << ", e = " << req.e->str();
        std::cout << "\n";
        std::cout << "  N = " << inv.N.str() << ", d = " << inv.d.str()
                  << ", p_a(R) - 1 = " << inv.p_a_minus_1.str()
                  << ", T = " << inv.T.str() << "\n";
        if (inv.degenerate)
            std::cout << "  note: N = 1 is degenerate (no genuine covering)\n";
        std::cout << "  iota estimate <= "
                  << format_rational_human(iota_bound) << "\n";
        std::cout << "  criterion: "
                  << format_rational_human(crit.general.lhs)
                  << (crit.general.holds ? " > " : " <= ")
                  << format_rational_human(crit.general.rhs) << " : "
                  << (crit.general.holds ? "holds" : "fails")
                  << " (margin " << format_rational_human(crit.general.margin)
                  << ")\n";
        if (crit.sharper)
            std::cout << "  sharper (with e): "
                      << format_rational_human(crit.sharper->lhs)
                      << (crit.sharper->holds ? " > " : " <= ")
                      << format_rational_human(crit.sharper->rhs) << " : "
                      << (crit.sharper->holds ? "holds" : "fails")
                      << " (margin "
                      << format_rational_human(crit.sharper->margin) << ")\n";
        std::cout << "verdict: uniqueness criterion "
                  << (holds ? "holds" : "fails") << "\n";
    }
    return holds ? kExitOk : kExitVerdictNegative;
}

/* ---------------------------------------------------------------- */
/* monodromy                                                        */
/* ---------------------------------------------------------------- */

int run_monodromy(const InputDoc& doc, bool machine) {
    MonodromyRequest req = monodromy_from_doc(doc);
    auto classes = enumerate_cusp_monodromies(req.degree, req.cap);
    if (machine) {
        MachineDoc out;
        out["command"] = "monodromy";
        MachineDoc input;
        input["N"] = req.degree;
        input["cap"] = req.cap;
        out["input"] = input;
        MachineDoc list = MachineDoc::array();
        for (const auto& c : classes) {
            MachineDoc e;
            e["label"] = c.label;
            e["size"] = static_cast<long long>(c.size);
            e["rep_a"] = cycle_notation(c.rep_a);
            e["rep_b"] = cycle_notation(c.rep_b);
            e["cycle_type_a"] = cycle_type(c.rep_a);
            e["cycle_type_b"] = cycle_type(c.rep_b);
            list.push_back(e);
        }
        out["classes"] = list;
        out["count"] = static_cast<long long>(classes.size());
        emit(out, machine);
    } else {
        std::cout << "degree " << req.degree
                  << ": admissible meridian pairs modulo conjugation\n";
        if (classes.empty()) {
            std::cout << "  none (no local covering model in this degree)\n";
        } else {
            for (const auto& c : classes)
                std::cout << "  " << c.label << " [" << c.size
                          << " pairs]: a = " << cycle_notation(c.rep_a)
                          << ", b = " << cycle_notation(c.rep_b) << "\n";
        }
    }
    return kExitOk;
}

/* ---------------------------------------------------------------- */
/* selftest                                                         */
/* ---------------------------------------------------------------- */

struct SelfCheck {
    std::string name;
    bool ok;
    std::string detail;
};

void run_check(std::vector<SelfCheck>& list, const std::string& name,
               const std::function<void()>& body) {
    try {
        body();
        list.push_back(SelfCheck{name, true, ""});
    } catch (const std::exception& e) {
        list.push_back(SelfCheck{name, false, e.what()});
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

int run_selftest(bool machine) {
    std::vector<SelfCheck> checks;

    run_check(checks, "resolve_cusp_figure", [] {
        Arrangement arr = resolve(standard_germ(AdeType{AdeSeries::A, 2}));
        expect(arr.curves.size() == 3, "cusp needs three blow-ups");
        std::vector<BigInt> alphas, selfs;
        for (const auto& c : arr.curves) {
            alphas.push_back(c.alpha);
            selfs.push_back(c.self_int);
        }
        expect(alphas == std::vector<BigInt>({2, 3, 6}), "cusp alphas");
        expect(selfs == std::vector<BigInt>({-3, -2, -1}),
               "cusp self-intersections");
    });

    std::vector<AdeType> table_types;
    for (int n = 1; n <= 10; ++n)
        table_types.push_back(AdeType{AdeSeries::A, n});
    for (int n = 4; n <= 10; ++n)
        table_types.push_back(AdeType{AdeSeries::D, n});
    for (int n = 6; n <= 8; ++n)
        table_types.push_back(AdeType{AdeSeries::E, n});
    for (const AdeType& t : table_types) {
        run_check(checks, "cycle_table_" + ade_name(t), [t] {
            GermAnalysis ga = analyze_germ(t);
            expect(ga.delta == defect_closed_form(t),
                   "defect disagrees with the closed form");
            std::vector<BigInt> got;
            for (const auto& g : ga.grouped) got.push_back(g.value);
            std::sort(got.begin(), got.end());
            std::vector<BigInt> want = expected_cycle_multiset(t);
            std::sort(want.begin(), want.end());
            expect(got == want,
                   "grouped cycle multiset differs from the printed table");
        });
    }

    run_check(checks, "invariants_cubic_surface", [] {
        SingularityProfile sp;
        sp.a[2] = 6;
        auto rep = analyze_covering(
            make_covering_profile(3, 6, 0, 0, 0, 6, sp));
        expect(rep.chern.k_sq == 3 && rep.chern.euler == 9 &&
                   rep.chern.chi == 1 && rep.genus == 4,
               "cubic surface oracle");
        expect(rep.bounds.canonical_bound == BigRational(3) &&
                   rep.bounds.canonical_equality,
               "cubic surface degree bound");
    });

    run_check(checks, "invariants_double_plane_conic", [] {
        auto rep = analyze_covering(make_covering_profile(2, 2, 0, 0, 0, 0, {}));
        expect(rep.chern.k_sq == 8 && rep.chern.euler == 4 &&
                   rep.chern.chi == 1,
               "double plane oracle");
    });

    run_check(checks, "plucker_dual_degrees", [] {
        expect(plucker_dual_degree(3, 0, 0) == 4, "nodal cubic dual");
        expect(plucker_dual_degree(3, 0, 1) == 3, "cuspidal cubic dual");
        expect(plucker_dual_degree(2, 0, 0) == 2, "conic dual");
    });

    run_check(checks, "fiber_product_fixture", [] {
        auto fi = fiber_intersections(40, 137, 9, 25);
        expect(fi.rz_sq == 503 && fi.cz_sq == 5879 && fi.cross == 9,
               "fiber intersection triple");
        expect(3 * BigInt(40) + 137 - 1 == 256, "T = 256");
        expect(mcanonical_invariants(5, 1).T == 256, "T = (3m+1)^2 k");
    });

    run_check(checks, "mcanonical_boundaries", [] {
        auto r31 = chisini_criterion(3, 1);
        expect(r31.general.holds && r31.general.rhs == big_rat(173, 3),
               "m=3, k=1 evaluation");
        expect(!chisini_criterion(2, 2).general.holds, "m=2, k=2 fails");
        expect(chisini_criterion(2, 3).general.holds, "m=2, k=3 holds");
        expect(!chisini_criterion(1, 9).general.holds, "m=1, k=9 fails");
        expect(chisini_criterion(1, 10).general.holds, "m=1, k=10 holds");
    });

    run_check(checks, "monodromy_classification", [] {
        expect(enumerate_cusp_monodromies(2).size() == 1 &&
                   enumerate_cusp_monodromies(3).size() == 1 &&
                   enumerate_cusp_monodromies(6).size() == 1,
               "one class each in degrees 2, 3, 6");
        expect(enumerate_cusp_monodromies(4).empty() &&
                   enumerate_cusp_monodromies(5).empty(),
               "no classes in degrees 4, 5");
        expect(enumerate_cusp_monodromies(2)[0].label == "F2" &&
                   enumerate_cusp_monodromies(3)[0].label == "F3" &&
                   enumerate_cusp_monodromies(6)[0].label == "F6",
               "class labels");
    });

    run_check(checks, "local_model_identities", [] {
        verify_f3_identity();
        verify_f6_identity();
        for (int k = 1; k <= 3; ++k) pleat_normal_form_check(k);
    });

    int failed = 0;
    for (const auto& c : checks)
        if (!c.ok) ++failed;

    if (machine) {
        MachineDoc out;
        out["command"] = "selftest";
        MachineDoc list = MachineDoc::array();
        for (const auto& c : checks) {
            MachineDoc e;
            e["name"] = c.name;
            e["ok"] = c.ok;
            if (!c.ok) e["detail"] = c.detail;
            list.push_back(e);
        }
        out["checks"] = list;
        out["passed"] = static_cast<long long>(checks.size()) - failed;
        out["failed"] = failed;
        emit(out, machine);
    } else {
        for (const auto& c : checks) {
            std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name << "\n";
            if (!c.ok) std::cout << "      " << c.detail << "\n";
        }
        std::cout << checks.size() - static_cast<std::size_t>(failed) << "/"
                  << checks.size() << " checks passed\n";
    }
    return failed == 0 ? kExitOk : kExitInternal;
}

/* ---------------------------------------------------------------- */
/* Entry point                                                      */
/* ---------------------------------------------------------------- */

int dispatch(const std::function<int()>& body) {
    try {
        return body();
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const bound_violated& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const negative_genus& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const invalid_dual& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const non_integral_chi& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const negative_delta& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const invalid_context& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const invalid_invariants& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of generic coverings of the plane"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format: human or machine")
        ->capture_default_str();

    /* Shared per-subcommand state. */
    struct Common {
        std::string input_path;
        std::vector<std::string> sets;
    };

    auto add_common = [&](CLI::App* sub) {
        auto state = std::make_shared<Common>();
        sub->add_option("--input", state->input_path,
                        "key = value input file");
        sub->add_option("--set", state->sets,
                        "override a single key (KEY=VALUE, repeatable)");
        return state;
    };

    /* resolve / cycle */
    std::string res_family, cyc_family;
    int res_index = -1, cyc_index = -1;
    bool extra_blowups = false;

    CLI::App* resolve_cmd =
        app.add_subcommand("resolve", "embedded resolution of an A-D-E germ");
    auto resolve_state = add_common(resolve_cmd);
    resolve_cmd->add_option("family", res_family, "singularity family A|D|E");
    resolve_cmd->add_option("index", res_index, "singularity index");
    resolve_cmd->add_flag("--with-extra-blowups", extra_blowups,
                          "also perform the cusp pipeline's extra blow-ups "
                          "(coincides with the default on supported germs)");

    CLI::App* cycle_cmd = app.add_subcommand(
        "cycle", "canonical cycle and defect of the double cover");
    auto cycle_state = add_common(cycle_cmd);
    cycle_cmd->add_option("family", cyc_family, "singularity family A|D|E");
    cycle_cmd->add_option("index", cyc_index, "singularity index");

    CLI::App* inv_cmd = app.add_subcommand(
        "invariants", "numerical invariants of a covering profile");
    auto inv_state = add_common(inv_cmd);

    CLI::App* chi_cmd = app.add_subcommand(
        "chisini", "uniqueness verdict for a pair classification");
    auto chi_state = add_common(chi_cmd);

    CLI::App* mc_cmd = app.add_subcommand(
        "mcanonical", "m-canonical uniqueness criterion");
    auto mc_state = add_common(mc_cmd);
    std::string mc_m, mc_k, mc_e;
    mc_cmd->add_option("m", mc_m, "pluricanonical level");
    mc_cmd->add_option("k", mc_k, "canonical self-intersection K^2");
    mc_cmd->add_option("--e", mc_e, "topological Euler number (optional)");

    CLI::App* mono_cmd = app.add_subcommand(
        "monodromy", "enumerate cusp meridian monodromies in S_N");
    auto mono_state = add_common(mono_cmd);
    int mono_n = -1, mono_cap = -1;
    mono_cmd->add_option("N", mono_n, "covering degree");
    mono_cmd->add_option("--cap", mono_cap, "enumeration degree cap");

    CLI::App* self_cmd =
        app.add_subcommand("selftest", "run the built-in fixture suite");

    /* Let --format (a top-level option) appear after the subcommand. */
    for (CLI::App* sub : {resolve_cmd, cycle_cmd, inv_cmd, chi_cmd, mc_cmd,
                          mono_cmd, self_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    return dispatch([&]() -> int {
        bool machine = machine_format(format);
        if (resolve_cmd->parsed()) {
            std::vector<std::pair<std::string, std::string>> direct;
            if (!res_family.empty()) direct.push_back({"family", res_family});
            if (res_index >= 0)
                direct.push_back({"index", std::to_string(res_index)});
            return run_resolve(gather_input(resolve_state->input_path,
                                            resolve_state->sets, direct),
                               extra_blowups, machine);
        }
        if (cycle_cmd->parsed()) {
            std::vector<std::pair<std::string, std::string>> direct;
            if (!cyc_family.empty()) direct.push_back({"family", cyc_family});
            if (cyc_index >= 0)
                direct.push_back({"index", std::to_string(cyc_index)});
            return run_cycle(gather_input(cycle_state->input_path,
                                          cycle_state->sets, direct),
                             machine);
        }
        if (inv_cmd->parsed())
            return run_invariants(
                gather_input(inv_state->input_path, inv_state->sets, {}),
                machine);
        if (chi_cmd->parsed())
            return run_chisini(
                gather_input(chi_state->input_path, chi_state->sets, {}),
                machine);
        if (mc_cmd->parsed()) {
            std::vector<std::pair<std::string, std::string>> direct;
            if (!mc_m.empty()) direct.push_back({"m", mc_m});
            if (!mc_k.empty()) direct.push_back({"k", mc_k});
            if (!mc_e.empty()) direct.push_back({"e", mc_e});
            return run_mcanonical(
                gather_input(mc_state->input_path, mc_state->sets, direct),
                machine);
        }
        if (mono_cmd->parsed()) {
            std::vector<std::pair<std::string, std::string>> direct;
            if (mono_n >= 0) direct.push_back({"N", std::to_string(mono_n)});
            if (mono_cap >= 0)
                direct.push_back({"cap", std::to_string(mono_cap)});
            return run_monodromy(
                gather_input(mono_state->input_path, mono_state->sets, direct),
                machine);
        }
        if (self_cmd->parsed()) return run_selftest(machine);
        throw internal_error("no subcommand dispatched");
    });
}
