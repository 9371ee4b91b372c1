#ifndef PTRI_CUBIC_HPP_
#define PTRI_CUBIC_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "ptri/gf2n.hpp"

namespace ptri {

/// Number of distinct roots of X^3 + alpha X + beta in F_q (0, 1 or 3).
/// beta = 0 is a domain error.
int cubic_root_count(const GF2n& field, Elem alpha, Elem beta);

/// Tr(1 + alpha^3 / beta^2). Williams: the cubic has exactly one root iff this is 1.
int williams_predicate(const GF2n& field, Elem alpha, Elem beta);

/// Roots in F_q of c3 x^3 + c2 x^2 + c1 x + c0, with multiplicity, sorted by
/// encoding. Solved through the shift x = x' + c2/c3. c3 = 0 is a domain error.
std::vector<Elem> depressed_cubic_solve(const GF2n& field, Elem c3, Elem c2, Elem c1, Elem c0);

struct WilliamsScan {
    int n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    /// root_count_histogram[c] = pairs whose cubic has c distinct roots.
    std::array<std::uint64_t, 4> root_count_histogram{};
};

/// All (alpha, beta) with beta != 0.
WilliamsScan williams_scan(const GF2n& field);

}  // namespace ptri

#endif  // PTRI_CUBIC_HPP_
