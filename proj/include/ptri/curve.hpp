#ifndef PTRI_CURVE_HPP_
#define PTRI_CURVE_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>

#include "ptri/gf2n.hpp"
#include "ptri/poly1.hpp"

namespace ptri {

/// F(X,Y) = Q(Y)(X^2 + X + k + 1) + P(Y) for the case a = a_1 z, where
/// P/Q = (C_1^2+C_0C_2)(C_2^2+C_1C_3) / (C_1C_2+C_0C_3)^2 in lowest terms
/// with Q monic.
struct CurveInstance {
    GF2n field;
    Elem a1, b, k;
    Elem c3;
    /// C_0(Y), C_1(Y), C_2(Y).
    std::array<Poly1<Elem>, 3> C;
    Poly1<Elem> P;
    Poly1<Elem> Q;

    Elem eval(Elem x, Elem y) const;
};

/// Requires Tr(k) = 1 (std::invalid_argument otherwise). Throws
/// std::domain_error if C_3 = 0 or C_1C_2 + C_0C_3 vanishes identically.
CurveInstance build_curve(const GF2n& field, Elem a1, Elem b, Elem k);

/// Affine points of F over F_q by double loop. Throws std::logic_error if a
/// counted point has Q(y) = 0.
std::uint64_t curve_point_count(const CurveInstance& curve);

/// D_1 has no solution: Tr((F_3^2+E_1E_2F_3+E_1^2F_4)/(E_1^2E_2^2)) = 1.
class TraceObstruction : public std::domain_error {
public:
    explicit TraceObstruction(Elem value);
    /// The Artin-Schreier right-hand side that has trace 1.
    Elem value() const { return value_; }

private:
    Elem value_;
};

struct DConstruction {
    std::array<Elem, 3> E;
    std::array<Elem, 5> F;
    Elem D2, D1, D0;
    /// Tr(F_4/E_2^2).
    int trace_f4 = 0;
    /// equation_holds[i]: the Y^i coefficient equation of D(D + E) = sum F_i Y^i.
    std::array<bool, 5> equation_holds{};
    /// D(y)(D(y) + C_1C_2+C_0C_3) = (k+1)(C_1C_2+C_0C_3)^2 + (C_1^2+C_0C_2)(C_2^2+C_1C_3)
    /// at every y in F_q, with the C's evaluated directly.
    bool factorization_holds = false;

    bool verified() const;
};

/// D = D_2 Y^2 + D_1 Y + D_0 for a, b in F_q. D_1 = E_1 t where t is the
/// smaller root of t^2 + t = (F_3^2+E_1E_2F_3+E_1^2F_4)/(E_1^2E_2^2),
/// D_2 = (E_2D_1+F_3)/E_1, D_0 = (E_0D_1+F_1)/E_1. Throws TraceObstruction
/// when no D_1 exists and std::domain_error when E_1 = 0.
DConstruction construct_D(const GF2n& field, Elem a, Elem b, Elem k);

struct Claim21Result {
    /// Roots of C_1C_2+C_0C_3 in F_q.
    int cross_roots = 0;
    /// Every such root is a root of C_2^2+C_1C_3.
    bool roots_shared = true;
};

/// The C's of the a in F_q case, evaluated over F_q.
Claim21Result claim21_check(const GF2n& field, Elem a, Elem b, Elem k);

}  // namespace ptri

#endif  // PTRI_CURVE_HPP_
