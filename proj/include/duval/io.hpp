#ifndef DUVAL_IO_HPP
#define DUVAL_IO_HPP

/*
 * Input documents and machine-readable report plumbing.
 *
 * Inputs are UTF-8 text files of `key = value` lines ('#' starts a
 * comment).  Every subcommand has a fixed schema; unknown keys are
 * rejected.  Machine reports are JSON documents with deterministic key
 * order, integers emitted bare and rationals always as "p/q" strings, so
 * identical inputs produce byte-identical output.
 */

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "duval/ade.hpp"
#include "duval/chisini.hpp"
#include "duval/errors.hpp"
#include "duval/invariants.hpp"
#include "duval/rational.hpp"

namespace duval {

using MachineDoc = nlohmann::ordered_json;

/* ------------------------------------------------------------------ */
/* key = value documents                                              */
/* ------------------------------------------------------------------ */

using InputDoc = std::map<std::string, std::string>;

namespace detail {

inline std::string trim_ws(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline InputDoc parse_input_text(const std::string& text) {
    InputDoc doc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim_ws(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw schema_error("line " + std::to_string(line_no) +
                               ": expected 'key = value'");
        std::string key = detail::trim_ws(line.substr(0, eq));
        std::string value = detail::trim_ws(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw schema_error("line " + std::to_string(line_no) +
                               ": empty key or value");
        if (doc.count(key))
            throw schema_error("duplicate key '" + key + "'");
        doc[key] = value;
    }
    return doc;
}

inline InputDoc read_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

/* Rejects keys outside the fixed schema; when singularity-count keys are
 * allowed, anything shaped like A3/D5/E8 must name a valid type. */
inline void require_known_keys(const InputDoc& doc,
                               const std::set<std::string>& fixed,
                               bool allow_ade_counts = false) {
    for (const auto& [key, value] : doc) {
        (void)value;
        if (fixed.count(key)) continue;
        if (allow_ade_counts &&
            (key[0] == 'A' || key[0] == 'D' || key[0] == 'E')) {
            parse_ade(key); /* throws schema_error when malformed */
            continue;
        }
        throw schema_error("unknown key '" + key + "'");
    }
}

inline bool has_key(const InputDoc& doc, const std::string& key) {
    return doc.count(key) != 0;
}

inline BigInt get_integer(const InputDoc& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw schema_error("missing required key '" + key + "'");
    return parse_integer(it->second);
}

inline BigInt get_integer_or(const InputDoc& doc, const std::string& key,
                             const BigInt& fallback) {
    return has_key(doc, key) ? get_integer(doc, key) : fallback;
}

inline int get_small_int(const InputDoc& doc, const std::string& key) {
    BigInt raw = get_integer(doc, key);
    if (raw < -1000000 || raw > 1000000)
        throw schema_error("value of '" + key + "' out of range");
    return static_cast<int>(to_long_checked(raw));
}

inline bool get_bool_or(const InputDoc& doc, const std::string& key,
                        bool fallback) {
    auto it = doc.find(key);
    if (it == doc.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw schema_error("key '" + key + "' must be true or false");
}

/* ------------------------------------------------------------------ */
/* Subcommand input builders                                          */
/* ------------------------------------------------------------------ */

struct GermRequest {
    AdeType type;
};

inline GermRequest germ_request_from_doc(const InputDoc& doc) {
    require_known_keys(doc, {"family", "index"});
    auto it = doc.find("family");
    if (it == doc.end()) throw schema_error("missing required key 'family'");
    if (!has_key(doc, "index")) throw schema_error("missing required key 'index'");
    return GermRequest{parse_ade(it->second + doc.at("index"))};
}

inline CoveringProfile covering_profile_from_doc(const InputDoc& doc) {
    require_known_keys(doc, {"N", "d", "n_s", "n_p", "c_s", "c_p"}, true);
    BigInt N = get_integer(doc, "N");
    BigInt d = get_integer(doc, "d");
    BigInt n_s = get_integer_or(doc, "n_s", 0);
    BigInt n_p = get_integer_or(doc, "n_p", 0);
    BigInt c_s = get_integer_or(doc, "c_s", 0);
    BigInt c_p = get_integer_or(doc, "c_p", 0);
    SingularityProfile sing;
    sing.a[1] = n_s + n_p;
    sing.a[2] = c_s + c_p;
    for (const auto& [key, value] : doc) {
        if (key == "N" || key == "d" || key == "n_s" || key == "n_p" ||
            key == "c_s" || key == "c_p")
            continue;
        AdeType t = parse_ade(key);
        BigInt count = parse_integer(value);
        if (t.series == AdeSeries::A && t.index == 1) {
            if (count != sing.a[1])
                throw profile_error("A1 = " + count.str() +
                                    " does not match n_s + n_p");
        } else if (t.series == AdeSeries::A && t.index == 2) {
            if (count != sing.a[2])
                throw profile_error("A2 = " + count.str() +
                                    " does not match c_s + c_p");
        } else {
            switch (t.series) {
            case AdeSeries::A: sing.a[t.index] = count; break;
            case AdeSeries::D: sing.d[t.index] = count; break;
            case AdeSeries::E: sing.e[t.index] = count; break;
            }
        }
    }
    return make_covering_profile(N, d, n_s, n_p, c_s, c_p, sing);
}

struct PairInput {
    PairClassification cls;
    BigInt nu_prime;
    bool shared_invariants;
    std::optional<BigInt> N1; /* with g2: also evaluate the reversed order */
    std::optional<BigInt> g2;
};

inline PairInput pair_input_from_doc(const InputDoc& doc) {
    require_known_keys(doc, {"n_ss", "n_sp", "n_ps", "n_pp", "c_ss", "c_sp",
                             "c_ps", "c_pp", "delta0", "N2", "dbar", "g1",
                             "nu_prime", "shared_invariants", "N1", "g2"});
    PairInput in;
    in.cls.n_ss = get_integer_or(doc, "n_ss", 0);
    in.cls.n_sp = get_integer_or(doc, "n_sp", 0);
    in.cls.n_ps = get_integer_or(doc, "n_ps", 0);
    in.cls.n_pp = get_integer_or(doc, "n_pp", 0);
    in.cls.c_ss = get_integer_or(doc, "c_ss", 0);
    in.cls.c_sp = get_integer_or(doc, "c_sp", 0);
    in.cls.c_ps = get_integer_or(doc, "c_ps", 0);
    in.cls.c_pp = get_integer_or(doc, "c_pp", 0);
    in.cls.delta_0 = get_integer_or(doc, "delta0", 0);
    in.cls.N2 = get_integer(doc, "N2");
    in.cls.d_bar = get_integer(doc, "dbar");
    in.cls.g1 = get_integer(doc, "g1");
    in.nu_prime = get_integer_or(doc, "nu_prime", 0);
    in.shared_invariants = get_bool_or(doc, "shared_invariants", false);
    if (has_key(doc, "N1") != has_key(doc, "g2"))
        throw schema_error("keys N1 and g2 must be given together");
    if (has_key(doc, "N1")) {
        in.N1 = get_integer(doc, "N1");
        in.g2 = get_integer(doc, "g2");
    }
    return in;
}

struct MCanonicalRequest {
    BigInt m, k;
    std::optional<BigInt> e;
};

inline MCanonicalRequest mcanonical_from_doc(const InputDoc& doc) {
    require_known_keys(doc, {"m", "k", "e"});
    MCanonicalRequest req;
    req.m = get_integer(doc, "m");
    req.k = get_integer(doc, "k");
    if (has_key(doc, "e")) req.e = get_integer(doc, "e");
    return req;
}

struct MonodromyRequest {
    int degree;
    int cap = 8;
};

inline MonodromyRequest monodromy_from_doc(const InputDoc& doc) {
    require_known_keys(doc, {"N", "cap"});
    MonodromyRequest req;
    req.degree = get_small_int(doc, "N");
    if (has_key(doc, "cap")) req.cap = get_small_int(doc, "cap");
    return req;
}

/* ------------------------------------------------------------------ */
/* Machine emission                                                   */
/* ------------------------------------------------------------------ */

/* Integers are bare JSON numbers while they fit 64 bits, strings beyond. */
inline MachineDoc machine_int(const BigInt& v) {
    if (v >= BigInt(-9223372036854775807LL - 1) &&
        v <= BigInt(9223372036854775807LL))
        return MachineDoc(static_cast<long long>(v));
    return MachineDoc(v.str());
}

/* Rationals are always "p/q" strings, lowest terms, q >= 1. */
inline MachineDoc machine_rat(const BigRational& q) {
    return MachineDoc(format_rational(q));
}

inline std::string dump_machine(const MachineDoc& doc) {
    return doc.dump(2) + "\n";
}

} // namespace duval

#endif
