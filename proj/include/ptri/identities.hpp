#ifndef PTRI_IDENTITIES_HPP_
#define PTRI_IDENTITIES_HPP_

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptri/mpoly.hpp"

namespace ptri {

/// The lengthy constants F_4..F_0, h_1, h_2, d_1, d_2 in a_1, b, k, keyed by
/// name ("F4", ..., "h1", "d2"), parsed from their printed form.
const std::map<std::string, MPoly>& appendix_constants();
/// Printed source text of each appendix constant.
const std::map<std::string, std::string>& appendix_sources();

/// Printed coefficient polynomials of one section: C_0..C_3 (in Y and the
/// parameters), E_0..E_2 and F_0..F_4. All are verified by the suites below.
struct PrintedCoefficients {
    std::array<MPoly, 4> C;
    std::array<MPoly, 3> E;
    std::array<MPoly, 5> F;
};

/// a = a_1 z case, in a_1, b, k, Y.
const PrintedCoefficients& section3_coefficients();
/// a in F_q case, in a, b, k, Y.
const PrintedCoefficients& section4_coefficients();

enum class Suite { section3, section4, appendix, as_printed };

std::string_view suite_name(Suite s);

/// One machine-checked polynomial equation lhs = rhs over F_2.
struct IdentityRecord {
    std::string name;
    std::string anchor;
    Suite suite = Suite::section3;
    std::function<MPoly()> lhs;
    std::function<MPoly()> rhs;
};

struct IdentityResult {
    std::string name;
    std::string anchor;
    Suite suite = Suite::section3;
    bool pass = false;
    /// Monomials in lhs + rhs.
    std::size_t diff_monomial_count = 0;
    MPoly lhs;
    MPoly rhs;
    /// Failure inside the construction itself (e.g. an inexact division).
    std::string error;
};

IdentityResult check(const IdentityRecord& record);

/// The identity suites as data. Records in the as_printed suite encode
/// equations exactly as typeset where they disagree with the derivation;
/// those are expected to fail.
std::vector<IdentityRecord> section3_records();
std::vector<IdentityRecord> section4_records();
std::vector<IdentityRecord> appendix_records();
std::vector<IdentityRecord> as_printed_records();
std::vector<IdentityRecord> all_records();

std::vector<IdentityResult> verify_section3();
std::vector<IdentityResult> verify_section4();
std::vector<IdentityResult> verify_all();

/// True iff every record outside the as_printed suite passes.
bool suite_passes(const std::vector<IdentityResult>& results);

/// Factorization of the left side of the second elimination equation in the
/// base-field case: lhs = (1+b)^e0 (1+a+b)^e1 (a^2+b+b^2)^e2 * cofactor.
struct EliminationFactorization {
    MPoly full;
    int power_one_plus_b = 0;
    int power_one_plus_a_plus_b = 0;
    int power_a2_plus_b_plus_b2 = 0;
    MPoly cofactor;
};

EliminationFactorization factor_section4_elimination();

}  // namespace ptri

#endif  // PTRI_IDENTITIES_HPP_
