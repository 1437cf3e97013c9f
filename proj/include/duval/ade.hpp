#ifndef DUVAL_ADE_HPP
#define DUVAL_ADE_HPP

/*
 * The A-D-E classification of rational double points: type tags, closed-form
 * defects, and the count of vanishing cycles fixed by the covering involution.
 */

#include <string>

#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

enum class AdeSeries { A, D, E };

struct AdeType {
    AdeSeries series;
    int index; /* the subscript n */

    bool operator==(const AdeType& o) const {
        return series == o.series && index == o.index;
    }
    bool operator<(const AdeType& o) const {
        if (series != o.series) return series < o.series;
        return index < o.index;
    }
};

inline void validate_ade(const AdeType& t) {
    switch (t.series) {
    case AdeSeries::A:
        check(t.index >= 1, "A-series index must be at least 1");
        return;
    case AdeSeries::D:
        check(t.index >= 4, "D-series index must be at least 4");
        return;
    case AdeSeries::E:
        check(t.index >= 6 && t.index <= 8, "E-series index must be 6, 7 or 8");
        return;
    }
    throw internal_error("unknown singularity series");
}

inline std::string ade_name(const AdeType& t) {
    const char* s = t.series == AdeSeries::A ? "A"
                  : t.series == AdeSeries::D ? "D" : "E";
    return s + std::to_string(t.index);
}

inline AdeType parse_ade(const std::string& name) {
    if (name.size() < 2) throw schema_error("bad singularity name: " + name);
    AdeSeries s;
    switch (name[0]) {
    case 'A': s = AdeSeries::A; break;
    case 'D': s = AdeSeries::D; break;
    case 'E': s = AdeSeries::E; break;
    default: throw schema_error("bad singularity name: " + name);
    }
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw schema_error("bad singularity name: " + name);
        idx = idx * 10 + (name[i] - '0');
        if (idx > 1000) throw schema_error("singularity index out of range: " + name);
    }
    AdeType t{s, idx};
    try {
        validate_ade(t);
    } catch (const internal_error& e) {
        throw schema_error(e.what());
    }
    return t;
}

/* Number of exceptional curves in the minimal resolution. */
inline int milnor_number(const AdeType& t) {
    validate_ade(t);
    return t.index;
}

/* Local defect: A_n -> floor((n+1)/2), D_n -> floor(n/2) + 1,
 * E_n -> floor((n+1)/2). */
inline int defect_closed_form(const AdeType& t) {
    validate_ade(t);
    switch (t.series) {
    case AdeSeries::A: return (t.index + 1) / 2;
    case AdeSeries::D: return t.index / 2 + 1;
    case AdeSeries::E: return (t.index + 1) / 2;
    }
    throw internal_error("unknown singularity series");
}

/*
 * Count of branch-fixed vanishing cycles:
 *   A_{2k-1} and D_{2k+2} -> 0;  A_{2k}, D_{2k+3}, E_7 -> 1;  E_6, E_8 -> 2.
 */
inline int nu_invariant(const AdeType& t) {
    validate_ade(t);
    switch (t.series) {
    case AdeSeries::A: return t.index % 2 == 0 ? 1 : 0;
    case AdeSeries::D: return t.index % 2 == 1 ? 1 : 0;
    case AdeSeries::E: return t.index == 7 ? 1 : 2;
    }
    throw internal_error("unknown singularity series");
}

/* Whether the branch curve germ is locally irreducible (one analytic branch). */
inline bool is_irreducible_germ(const AdeType& t) {
    validate_ade(t);
    switch (t.series) {
    case AdeSeries::A: return t.index % 2 == 0; /* A_{2k}: cusp-like, one branch */
    case AdeSeries::D: return false;            /* line plus A-germ: reducible  */
    case AdeSeries::E: return t.index != 7;     /* E6, E8: one branch            */
    }
    throw internal_error("unknown singularity series");
}

} // namespace duval

#endif
