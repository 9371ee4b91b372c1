#ifndef PTRI_TRINOMIAL_HPP_
#define PTRI_TRINOMIAL_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "ptri/tower.hpp"

namespace ptri {

/// Coefficients of f(X) = X + a X^(q(q-1)+1) + b X^(2(q-1)+1) over the
/// tower F_{q^2}. Both must be nonzero.
struct TrinomialParams {
    TowerElem a;
    TowerElem b;

    friend bool operator==(const TrinomialParams&, const TrinomialParams&) = default;
};

/// Throws std::invalid_argument when a or b is zero.
TrinomialParams make_params(TowerElem a, TowerElem b);

/// f(x) = x (1 + a x^(q(q-1)) + b x^(2(q-1))), using the x^(q-1) table.
TowerElem eval_f(const Tower& tower, const TrinomialParams& p, TowerElem x);
/// Same value computed with plain exponentiation.
TowerElem eval_f_by_powers(const Tower& tower, const TrinomialParams& p, TowerElem x);

/// Evaluates f on all q^2 elements and stops at the first repeated value.
bool is_pp_bruteforce(const Tower& tower, const TrinomialParams& p);

enum class Verdict { not_pp, pp_branch_i, pp_branch_ii };

std::string_view verdict_name(Verdict v);

struct TraceValue {
    std::string label;
    int value = 0;
};

struct Classification {
    Verdict verdict = Verdict::not_pp;
    bool b_in_base_field = false;
    std::vector<TraceValue> traces;
    /// Empty for PP verdicts.
    std::string failed_condition;

    bool is_pp() const { return verdict != Verdict::not_pp; }
};

/// The base-field classifier: PP iff (i) b = 1, a in F_q^*, Tr(1 + 1/a) = 0
/// or (ii) b != 1, Tr(b/(b+1)) = 0, a^2 = b(b+1).
/// Requires b in F_q; throws std::invalid_argument otherwise (see normalize_b).
Classification criterion_thm11(const Tower& tower, const TrinomialParams& p);

struct TzlhResult {
    bool pass = false;
    /// b(1 + a^(q+1) + b^(q+1)) + a^(2q) = 0
    bool norm_equation = false;
    bool b_norm_is_one = false;
    /// Tr(1 + 1/a^(q+1)) when b^(q+1) = 1, else Tr(b^(q+1)/a^(q+1)).
    int trace_value = 0;
};

/// The two-condition criterion valid for any b in F_{q^2}^*.
TzlhResult criterion_tzlh(const Tower& tower, const TrinomialParams& p);

/// Moves b into F_q^* via X -> beta X with beta^4 = b:
/// a' = a beta^(1-q), b' = beta^(2(q+1)). PP-ness is unchanged.
TrinomialParams normalize_b(const Tower& tower, const TrinomialParams& p);

/// normalize_b followed by criterion_thm11.
Classification classify(const Tower& tower, const TrinomialParams& p);

/// True iff b x^3 + x + a has no root in mu_{q+1}.
bool cubic_no_root_in_mu(const Tower& tower, const TrinomialParams& p);

/// h(x) = x (1 + a x^q + b x^2)^(q-1) evaluated on mu_{q+1}; true iff it
/// permutes the subgroup.
bool h_permutes_mu(const Tower& tower, const TrinomialParams& p);

/// g(x) = (a^q x^3 + x^2 + b) / (b x^3 + x + a); the denominator must be nonzero.
TowerElem g_map(const Tower& tower, const TrinomialParams& p, TowerElem x);

struct Prop21Result {
    bool pp = false;
    bool no_root_in_mu = false;
    /// counts[y] = #{x in F_q : g(phi(x)) = (1+a+b)^(q-1) phi(y)}; empty when
    /// the cubic has a root in mu_{q+1}.
    std::vector<int> counts;
};

/// The reduction to F_q: cubic condition plus unique solvability of
/// g(phi(x)) = (1+a+b)^(q-1) phi(y) for every y, by enumeration.
/// Requires b in F_q (g(1) = (1+a+b)^(q-1) only then); throws
/// std::invalid_argument otherwise.
Prop21Result prop21_check(const Tower& tower, const TrinomialParams& p);

/// Tr(b(a^2+b^2)/a^2) for a, b in F_q, a != 0.
int claim1_trace(const GF2n& field, Elem a, Elem b);

}  // namespace ptri

#endif  // PTRI_TRINOMIAL_HPP_
