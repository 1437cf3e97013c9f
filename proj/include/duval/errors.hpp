#ifndef DUVAL_ERRORS_HPP
#define DUVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duval {

/* Base class of every library error. */
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed user-facing input: schema violations, bad profiles, bad germ
 * requests.  The CLI maps these to exit code 2. */
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

/* A violated internal invariant: something the library guarantees failed to
 * hold.  The CLI maps these to exit code 3. */
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

/* exact-core */
struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& msg) : error(msg) {}
};
struct singular_matrix : error {
    explicit singular_matrix(const std::string& msg) : error(msg) {}
};
struct inexact_division : error {
    explicit inexact_division(const std::string& msg) : error(msg) {}
};

/* curve-resolution */
struct unsupported_germ : input_error {
    explicit unsupported_germ(const std::string& msg) : input_error(msg) {}
};
struct non_reduced : input_error {
    explicit non_reduced(const std::string& msg) : input_error(msg) {}
};
struct irrational_center : error {
    explicit irrational_center(const std::string& msg) : error(msg) {}
};
struct not_singular : error {
    explicit not_singular(const std::string& msg) : error(msg) {}
};

/* double-cover */
struct branch_not_disjoint : error {
    explicit branch_not_disjoint(const std::string& msg) : error(msg) {}
};
struct odd_self_intersection : error {
    explicit odd_self_intersection(const std::string& msg) : error(msg) {}
};
struct not_dynkin : error {
    explicit not_dynkin(const std::string& msg) : error(msg) {}
};
struct non_integral_solution : error {
    explicit non_integral_solution(const std::string& msg) : error(msg) {}
};
struct non_integral_defect : error {
    explicit non_integral_defect(const std::string& msg) : error(msg) {}
};

/* covering-invariants */
struct profile_error : input_error {
    explicit profile_error(const std::string& msg) : input_error(msg) {}
};
struct non_integral_chi : error {
    explicit non_integral_chi(const std::string& msg) : error(msg) {}
};
struct negative_genus : error {
    explicit negative_genus(const std::string& msg) : error(msg) {}
};
struct bound_violated : error {
    explicit bound_violated(const std::string& msg) : error(msg) {}
};
struct invalid_dual : error {
    explicit invalid_dual(const std::string& msg) : error(msg) {}
};

/* chisini-check */
struct negative_delta : error {
    explicit negative_delta(const std::string& msg) : error(msg) {}
};
struct invalid_context : error {
    explicit invalid_context(const std::string& msg) : error(msg) {}
};
struct invalid_invariants : error {
    explicit invalid_invariants(const std::string& msg) : error(msg) {}
};

/* local-models */
struct identity_failed : error {
    explicit identity_failed(const std::string& msg) : error(msg) {}
};
struct degree_too_large : input_error {
    explicit degree_too_large(const std::string& msg) : input_error(msg) {}
};

/* cli / io */
struct schema_error : input_error {
    explicit schema_error(const std::string& msg) : input_error(msg) {}
};

/* Always-on invariant check (kept active in release builds: all contract
 * violations must surface as exceptions, never as silent wrong output). */
inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error("invariant violated: " + msg);
}

} // namespace duval

#endif
