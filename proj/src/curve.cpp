#include "ptri/curve.hpp"

#include "ptri/identities.hpp"
#include "ptri/mpoly.hpp"

namespace ptri {

namespace {

using Values = std::array<Elem, kNumVars>;

Values assignment(Var first, Elem x, Elem b, Elem k) {
    Values v{};
    v[static_cast<std::size_t>(first)] = x;
    v[static_cast<std::size_t>(Var::b)] = b;
    v[static_cast<std::size_t>(Var::k)] = k;
    return v;
}

// Coefficients in Y of p after substituting the parameters.
Poly1<Elem> in_y(const PolyRing<GF2n>& ring, const MPoly& p, const Values& values) {
    std::vector<Elem> coeffs;
    for (int i = 0; i <= p.degree(Var::Y); ++i) {
        coeffs.push_back(evaluate(p.coefficient(Var::Y, i), ring.field(), values));
    }
    return ring.make(std::move(coeffs));
}

}  // namespace

Elem CurveInstance::eval(Elem x, Elem y) const {
    const PolyRing<GF2n> ring(field, 'Y');
    const Elem qy = ring.eval(Q, y);
    return field.mul(qy, field.square(x) + x + k + field.one()) + ring.eval(P, y);
}

CurveInstance build_curve(const GF2n& field, Elem a1, Elem b, Elem k) {
    if (field.trace(k) != 1) throw std::invalid_argument("build_curve needs Tr(k) = 1");
    const PolyRing<GF2n> ring(field, 'Y');
    const auto& printed = section3_coefficients();
    const Values values = assignment(Var::a1, a1, b, k);

    CurveInstance c{field, a1, b, k, evaluate(printed.C[3], field, values), {}, {}, {}};
    if (c.c3.is_zero()) throw std::domain_error("C_3 = 0");
    for (int i = 0; i < 3; ++i) c.C[i] = in_y(ring, printed.C[i], values);

    const auto c3 = ring.constant(c.c3);
    const auto& [c0, c1, c2] = c.C;
    const auto cross = ring.add(ring.mul(c1, c2), ring.mul(c0, c3));
    if (cross.is_zero()) throw std::domain_error("C_1C_2 + C_0C_3 vanishes identically");
    const auto num = ring.mul(ring.add(ring.mul(c1, c1), ring.mul(c0, c2)),
                              ring.add(ring.mul(c2, c2), ring.mul(c1, c3)));
    const auto den = ring.mul(cross, cross);
    const auto g = ring.gcd(num, den);
    c.P = ring.quotient(num, g);
    c.Q = ring.quotient(den, g);
    const Elem lead_inv = field.inv(c.Q.coeffs.back());
    c.P = ring.scale(lead_inv, c.P);
    c.Q = ring.scale(lead_inv, c.Q);
    return c;
}

std::uint64_t curve_point_count(const CurveInstance& curve) {
    const PolyRing<GF2n> ring(curve.field, 'Y');
    const GF2n& f = curve.field;
    const Elem k1 = curve.k + f.one();
    std::uint64_t count = 0;
    for (std::uint32_t yi = 0; yi < f.order(); ++yi) {
        const Elem qy = ring.eval(curve.Q, Elem{yi});
        const Elem py = ring.eval(curve.P, Elem{yi});
        for (std::uint32_t xi = 0; xi < f.order(); ++xi) {
            const Elem x{xi};
            if (!(f.mul(qy, f.square(x) + x + k1) + py).is_zero()) continue;
            if (qy.is_zero()) throw std::logic_error("curve point with Q(y) = 0");
            ++count;
        }
    }
    return count;
}

TraceObstruction::TraceObstruction(Elem value)
    : std::domain_error("trace obstruction: t^2 + t = " + to_hex(value.bits) +
                        " has trace 1, no D_1 exists"),
      value_(value) {}

bool DConstruction::verified() const {
    for (bool ok : equation_holds) {
        if (!ok) return false;
    }
    return factorization_holds;
}

DConstruction construct_D(const GF2n& f, Elem a, Elem b, Elem k) {
    const auto& printed = section4_coefficients();
    const Values values = assignment(Var::a, a, b, k);
    DConstruction d{};
    for (int i = 0; i < 3; ++i) d.E[i] = evaluate(printed.E[i], f, values);
    for (int i = 0; i < 5; ++i) d.F[i] = evaluate(printed.F[i], f, values);
    const auto& E = d.E;
    const auto& F = d.F;
    if (E[1].is_zero() || E[2].is_zero()) throw std::domain_error("construct_D: E_1 = 0 (1+a+b = 0)");
    d.trace_f4 = f.trace(f.div(F[4], f.square(E[2])));

    const Elem e1e2 = f.mul(E[1], E[2]);
    const Elem rhs = f.div(f.square(F[3]) + f.mul(e1e2, F[3]) + f.mul(f.square(E[1]), F[4]),
                           f.square(e1e2));
    const auto t = f.solve_artin_schreier(rhs);
    if (!t) throw TraceObstruction(rhs);
    d.D1 = f.mul(E[1], t->first);
    d.D2 = f.div(f.mul(E[2], d.D1) + F[3], E[1]);
    d.D0 = f.div(f.mul(E[0], d.D1) + F[1], E[1]);

    const Elem D2 = d.D2, D1 = d.D1, D0 = d.D0;
    d.equation_holds[4] = f.square(D2) + f.mul(E[2], D2) == F[4];
    d.equation_holds[3] = f.mul(E[1], D2) + f.mul(E[2], D1) == F[3];
    d.equation_holds[2] =
        f.mul(E[0], D2) + f.square(D1) + f.mul(E[1], D1) + f.mul(E[2], D0) == F[2];
    d.equation_holds[1] = f.mul(E[0], D1) + f.mul(E[1], D0) == F[1];
    d.equation_holds[0] = f.square(D0) + f.mul(E[0], D0) == F[0];

    Values at = values;
    d.factorization_holds = true;
    for (std::uint32_t yi = 0; yi < f.order(); ++yi) {
        const Elem y{yi};
        at[static_cast<std::size_t>(Var::Y)] = y;
        std::array<Elem, 4> C;
        for (int i = 0; i < 4; ++i) C[i] = evaluate(printed.C[i], f, at);
        const Elem cross = f.mul(C[1], C[2]) + f.mul(C[0], C[3]);
        const Elem disc = f.square(C[2]) + f.mul(C[1], C[3]);
        const Elem other = f.square(C[1]) + f.mul(C[0], C[2]);
        const Elem Dy = f.mul(D2, f.square(y)) + f.mul(D1, y) + D0;
        const Elem lhs = f.mul(Dy, Dy + cross);
        const Elem rhs_y = f.mul(k + f.one(), f.square(cross)) + f.mul(other, disc);
        if (lhs != rhs_y) {
            d.factorization_holds = false;
            break;
        }
    }
    return d;
}

Claim21Result claim21_check(const GF2n& f, Elem a, Elem b, Elem k) {
    const auto& printed = section4_coefficients();
    Values at = assignment(Var::a, a, b, k);
    Claim21Result r;
    for (std::uint32_t yi = 0; yi < f.order(); ++yi) {
        at[static_cast<std::size_t>(Var::Y)] = Elem{yi};
        std::array<Elem, 4> C;
        for (int i = 0; i < 4; ++i) C[i] = evaluate(printed.C[i], f, at);
        const Elem cross = f.mul(C[1], C[2]) + f.mul(C[0], C[3]);
        if (!cross.is_zero()) continue;
        ++r.cross_roots;
        if (!(f.square(C[2]) + f.mul(C[1], C[3])).is_zero()) r.roots_shared = false;
    }
    return r;
}

}  // namespace ptri
