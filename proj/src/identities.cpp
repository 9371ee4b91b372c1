#include "ptri/identities.hpp"

#include <array>
#include <utility>

namespace ptri {

namespace {

MPoly P(std::string_view text) { return MPoly::parse(text); }

const MPoly& Y() {
    static const MPoly y = MPoly::var(Var::Y);
    return y;
}

MPoly quadratic_in_y(const MPoly& c2, const MPoly& c1, const MPoly& c0) {
    return c2 * Y().square() + c1 * Y() + c0;
}

// Cubic C_3 X^3 + C_2 X^2 + C_1 X + C_0 and the quantities built from its
// coefficients in the factorization argument.
struct CubicData {
    MPoly c3, c2, c1, c0;
    MPoly cubic;
    MPoly cross;           // C_1C_2 + C_0C_3
    MPoly disc;            // C_2^2 + C_1C_3
    MPoly other;           // C_1^2 + C_0C_2
    MPoly quartic;         // (k+1) cross^2 + other * disc
    std::array<MPoly, 3> E;  // printed E_0, E_1, E_2
    std::array<MPoly, 5> F;  // printed F_0..F_4

    CubicData(MPoly c3_, MPoly c2_, MPoly c1_, MPoly c0_) : c3(std::move(c3_)), c2(std::move(c2_)), c1(std::move(c1_)), c0(std::move(c0_)) {
        const MPoly x = MPoly::var(Var::X);
        cubic = c3 * x.pow(3) + c2 * x.square() + c1 * x + c0;
        cross = c1 * c2 + c0 * c3;
        disc = c2.square() + c1 * c3;
        other = c1.square() + c0 * c2;
        quartic = (P("k+1")) * cross.square() + other * disc;
    }

    MPoly E_poly() const { return quadratic_in_y(E[2], E[1], E[0]); }
    MPoly F_poly() const {
        MPoly out;
        for (int i = 4; i >= 0; --i) out += F[i] * MPoly::var(Var::Y, i);
        return out;
    }

    // D = D_2 Y^2 + D_1 Y + D_0 with symbolic D_i.
    static MPoly D() { return quadratic_in_y(MPoly::var(Var::D2), MPoly::var(Var::D1), MPoly::var(Var::D0)); }

    // Coefficient comparison of D(D + C_1C_2 + C_0C_3) = quartic, degree i,
    // written as "left + right" (zero iff the equation holds).
    MPoly coefficient_equation(int i) const {
        const MPoly lhs = D() * (D() + E_poly());
        return lhs.coefficient(Var::Y, i) + F[i];
    }

    // The five equations for D_i as printed-correct forms.
    MPoly eq_y4() const { return P("D_2^2") + E[2] * P("D_2") + F[4]; }
    MPoly eq_y3() const { return E[1] * P("D_2") + E[2] * P("D_1") + F[3]; }
    MPoly eq_y2() const { return E[0] * P("D_2") + P("D_1^2") + E[1] * P("D_1") + E[2] * P("D_0") + F[2]; }
    MPoly eq_y1() const { return E[0] * P("D_1") + E[1] * P("D_0") + F[1]; }
    MPoly eq_y0() const { return P("D_0^2") + E[0] * P("D_0") + F[0]; }

    // D_2 = (E_2 D_1 + F_3)/E_1 and D_0 = (E_0 D_1 + F_1)/E_1, cleared.
    MPoly eliminate(const MPoly& eq) const {
        const std::pair<Var, MPoly> subs[] = {{Var::D2, E[2] * P("D_1") + F[3]},
                                              {Var::D0, E[0] * P("D_1") + F[1]}};
        return substitute_cleared(eq, subs, E[1]);
    }

    MPoly eq34() const {
        return E[2].square() * P("D_1^2") + E[1] * E[2].square() * P("D_1") + F[3].square() +
               E[1] * E[2] * F[3] + E[1].square() * F[4];
    }
    MPoly eq35() const {
        return E[1] * P("D_1^2") + E[1].square() * P("D_1") + E[0] * F[3] + E[2] * F[1] + E[1] * F[2];
    }
    MPoly eq36() const {
        return E[0].square() * P("D_1^2") + E[0].square() * E[1] * P("D_1") + F[1].square() +
               E[0] * E[1] * F[1] + E[1].square() * F[0];
    }
    MPoly lhs37() const {
        return E[1] * (F[3].square() + E[1] * E[2] * F[3] + E[1].square() * F[4]) +
               E[2].square() * (E[0] * F[3] + E[2] * F[1] + E[1] * F[2]);
    }
    MPoly lhs38() const {
        return E[1] * (F[1].square() + E[0] * E[1] * F[1] + E[1].square() * F[0]) +
               E[0].square() * (E[0] * F[3] + E[2] * F[1] + E[1] * F[2]);
    }
};

const CubicData& section3_data() {
    static const CubicData d = [] {
        CubicData c(P("1+a_1+a_1 b+b^2+a_1^2 k"),
                    P("1+a_1+a_1 b+b^2+(1+b^2+a_1^2 k )Y"),
                    P("b+a_1 b+b^2+k+a_1 k+a_1 b k+b^2 k+a_1^2 k^2+(1+a_1+b^2+a_1^2 k)Y"),
                    P("b+a_1 b+b^2+a_1 k+a_1^2 k^2+(a_1+b+b^2+k +a_1^2 k +b^2 k +a_1^2 k^2 )Y"));
        c.E = {P("k+a_1 k+a_1^3 b k+a_1 b^2 k+b^4 k+a_1^3 k^2+a_1^4 k^3"),
               P("1+a_1+a_1 b+a_1 b^2+a_1 b^3+b^4+a_1^3 k+a_1^3 b k+a_1^4 k^2"),
               P("1+a_1+a_1 b^2+b^4+a_1^3 k+a_1^4 k^2")};
        const auto& ap = appendix_constants();
        c.F = {ap.at("F0"), ap.at("F1"), ap.at("F2"), ap.at("F3"), ap.at("F4")};
        return c;
    }();
    return d;
}

const CubicData& section4_data() {
    static const CubicData d = [] {
        CubicData c(P("1+a+b"), P("1+b+(1+a+b)Y"), P("b+(1+a+b)k+(1+a+b)Y"),
                    P("b+a k+(a+b+k+a k+b k)Y"));
        c.E = {P("a b+k+a^2k+b^2k"), P("1+a^2+b^2"), P("1+a^2+b^2")};
        c.F = {P("b+b^2+a b^2+a^2 b^2+a k+b k+a b^2 k+b^3 k+a k^2+a^2 k^2"
                 "+a^3 k^2+a^4 k^2+b k^2+a^2 b k^2+b^2 k^2+a b^2 k^2+b^3 k^2+b^4 k^2"),
               P("a+b+a b+b^3+k+a^2 k+b k+a^2 b k+b^2 k+b^3 k"),
               P("a^3+a^4+b+b^2+b^3+b^4"),
               P("1+a^2+b+a^2 b+b^2+b^3"),
               P("a+a^2+a^3+a^4+b+a^2 b+b^2+a b^2+b^3+b^4")};
        return c;
    }();
    return d;
}

// g((X+z+1)/(X+z)) with (X+z)^3 cleared, for g = (a'X^3 + X^2 + b)/(bX^3 + X + a).
std::pair<MPoly, MPoly> g_of_phi(const MPoly& a, const MPoly& a_conj) {
    const MPoly up = P("X+z+1");
    const MPoly down = P("X+z");
    const MPoly b = P("b");
    return {reduce_z(a_conj * up.pow(3) + up.square() * down + b * down.pow(3)),
            reduce_z(b * up.pow(3) + up * down.square() + a * down.pow(3))};
}

// Cross-multiplied A(x)/B(x) = ratio * (Y+z+1)/(Y+z), split by powers of z.
std::pair<MPoly, MPoly> cross_multiplied(const MPoly& A, const MPoly& B, const MPoly& ratio_num,
                                         const MPoly& ratio_den) {
    const MPoly w = reduce_z(A * ratio_den * P("Y+z") + B * ratio_num * P("Y+z+1"));
    return {w.coefficient(Var::z, 0), w.coefficient(Var::z, 1)};
}

const MPoly& section3_A() {
    static const MPoly p = P(
        "X^3 (1+a_1+b+a_1 z)+X^2 (a_1+a_1 k+z+a_1z+b z)+X (1+a_1+k+b k+z+a_1 z+b z+a_1 k z)"
        "+a_1+k+a_1 k+b k+a_1 k^2+a_1 z+b z+k z+b k z");
    return p;
}
const MPoly& section3_B() {
    static const MPoly p = P(
        "X^3 (1+b+a_1 z)+X^2 (1+b+a_1 k+z+a_1 z+b z)+X (b+k+a_1 k+b k+z+a_1 z+b z+a_1 k z)"
        "+b+a_1 k+a_1 k^2+a_1 z+b z+k z+b k z");
    return p;
}
const MPoly& section4_A() {
    static const MPoly p = P(
        "(1+a+b) X^3+(a+z+a z+b z)X^2 +(1+a+k+a k+b k+z+a z+b z)X"
        "+a+k+b k+a z+b z+k z+a k z+b k z");
    return p;
}
const MPoly& section4_B() {
    static const MPoly p = P(
        "(1+a+b) X^3+ (1+b+z+a z+b z)X^2+ (b+k+a k+b k+z+a z+b z)X"
        "+b+a k+a z+b z+k z+a k z+b k z");
    return p;
}

// Generic cubic with symbolic coefficients c_3..c_0 in X.
const CubicData& symbolic_cubic() {
    static const CubicData d(P("c_3"), P("c_2"), P("c_1"), P("c_0"));
    return d;
}

IdentityRecord rec(std::string name, std::string anchor, Suite suite, std::function<MPoly()> lhs,
                   std::function<MPoly()> rhs) {
    return {std::move(name), std::move(anchor), suite, std::move(lhs), std::move(rhs)};
}

}  // namespace

namespace {
PrintedCoefficients printed(const CubicData& d) {
    return {{d.c0, d.c1, d.c2, d.c3}, d.E, d.F};
}
}  // namespace

const PrintedCoefficients& section3_coefficients() {
    static const PrintedCoefficients p = printed(section3_data());
    return p;
}

const PrintedCoefficients& section4_coefficients() {
    static const PrintedCoefficients p = printed(section4_data());
    return p;
}

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::section3: return "3";
        case Suite::section4: return "4";
        case Suite::appendix: return "appendix";
        case Suite::as_printed: return "paper-as-printed";
    }
    return "?";
}

IdentityResult check(const IdentityRecord& record) {
    IdentityResult r;
    r.name = record.name;
    r.anchor = record.anchor;
    r.suite = record.suite;
    try {
        r.lhs = record.lhs();
        r.rhs = record.rhs();
        const MPoly diff = r.lhs + r.rhs;
        r.diff_monomial_count = diff.size();
        r.pass = diff.is_zero();
    } catch (const InexactDivision& e) {
        r.error = e.what();
        r.diff_monomial_count = e.remainder().size();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<IdentityRecord> section3_records() {
    const auto S = Suite::section3;
    std::vector<IdentityRecord> out;
    const MPoly a = P("a_1 z");
    const MPoly a_conj = P("a_1 (z+1)");

    out.push_back(rec("g(phi(X)) numerator = A(X)", "(3.1)-(3.2) X^3(1+a_1+b+a_1 z)", S,
                      [=] { return g_of_phi(a, a_conj).first; }, [] { return section3_A(); }));
    out.push_back(rec("g(phi(X)) denominator = B(X)", "(3.1),(3.3)", S,
                      [=] { return g_of_phi(a, a_conj).second; }, [] { return section3_B(); }));
    out.push_back(rec("g(phi(X)) = A/B cross-multiplied", "(3.1)", S,
                      [=] {
                          auto [num, den] = g_of_phi(a, a_conj);
                          return reduce_z(num * section3_B());
                      },
                      [=] {
                          auto [num, den] = g_of_phi(a, a_conj);
                          return reduce_z(den * section3_A());
                      }));
    out.push_back(rec("(3.4) cross-multiplied, z^0 part = cubic (3.5)", "(3.4)-(3.9)", S,
                      [] {
                          return cross_multiplied(section3_A(), section3_B(), P("1+a_1+b+a_1 z"),
                                                  P("1+b+a_1 z")).first;
                      },
                      [] { return section3_data().cubic; }));
    out.push_back(rec("(3.4) cross-multiplied, z^1 part vanishes", "(3.4)-(3.9)", S,
                      [] {
                          return cross_multiplied(section3_A(), section3_B(), P("1+a_1+b+a_1 z"),
                                                  P("1+b+a_1 z")).second;
                      },
                      [] { return MPoly{}; }));
    out.push_back(rec("C_3 = 0 forces k = ((1+b)/a_1)^2 + (1+b)/a_1, cleared", "(3.6) C_3 != 0", S,
                      [] { return P("a_1^2") * section3_data().c3; },
                      [] { return P("a_1^2 (1+b)^2 + a_1^3 (1+b) + a_1^4 k"); }));
    out.push_back(rec("depressed cubic, c_3^3 G(X + c_2/c_3)", "(3.10) x'=x+c_2/c_3", S,
                      [] {
                          const std::pair<Var, MPoly> sub[] = {{Var::X, P("c_3 X + c_2")}};
                          return substitute_cleared(symbolic_cubic().cubic, sub, P("c_3"));
                      },
                      [] {
                          return P("c_3^4 X^3 + c_3^2 (c_2^2+c_1c_3) X + c_3^2 (c_1c_2+c_0c_3)");
                      }));
    out.push_back(rec("trace chain: cube expansion", "2°, (c_2^2+c_1c_3)^3", S,
                      [] { return P("(c_2^2+c_1c_3)^3"); },
                      [] { return P("c_2^6+c_2^2c_1^2c_3^2+c_2^4c_1c_3+c_1^3c_3^3"); }));
    out.push_back(rec("trace chain: square split", "2°", S,
                      [] { return P("c_2^6+c_2^2c_1^2c_3^2+c_2^4c_1c_3+c_1^3c_3^3"); },
                      [] { return P("(c_2^3+c_1c_2c_3)^2 + c_3(c_1c_2^4+c_1^3c_3^2)"); }));
    out.push_back(rec("trace chain: numerator", "2°, (c_1^2+c_0c_2)(c_2^2+c_1c_3)", S,
                      [] { return P("(c_2^3+c_1c_2c_3)(c_1c_2+c_0c_3)+c_1c_2^4+c_1^3c_3^2"); },
                      [] { return P("c_3 (c_1^2+c_0c_2)(c_2^2+c_1c_3)"); }));
    out.push_back(rec("trace reduction, cleared", "(3.11)->(3.12)", S,
                      [] { return P("(c_2^2+c_1c_3)^3 + (c_1^2+c_0c_2)(c_2^2+c_1c_3)c_3^2"); },
                      [] {
                          return P("(c_2^3+c_1c_2c_3)^2 + (c_2^3+c_1c_2c_3)c_3(c_1c_2+c_0c_3)");
                      }));
    out.push_back(rec("C_1C_2+C_0C_3 = E_2Y^2+E_1Y+E_0", "(3.19),(3.21)-(3.23)", S,
                      [] { return section3_data().cross; }, [] { return section3_data().E_poly(); }));
    out.push_back(rec("(k+1)(C_1C_2+C_0C_3)^2+(C_1^2+C_0C_2)(C_2^2+C_1C_3) = sum F_iY^i",
                      "(3.20),(A1)-(A5)", S, [] { return section3_data().quartic; },
                      [] { return section3_data().F_poly(); }));
    out.push_back(rec("D(D+C_1C_2+C_0C_3) - RHS, Y^4 coefficient", "(3.29) D_2^2+E_2D_2=F_4", S,
                      [] { return section3_data().coefficient_equation(4); },
                      [] { return section3_data().eq_y4(); }));
    out.push_back(rec("Y^3 coefficient (corrected right side F_3)", "(3.30)", S,
                      [] { return section3_data().coefficient_equation(3); },
                      [] { return section3_data().eq_y3(); }));
    out.push_back(rec("Y^2 coefficient", "(3.31)", S,
                      [] { return section3_data().coefficient_equation(2); },
                      [] { return section3_data().eq_y2(); }));
    out.push_back(rec("Y^1 coefficient", "(3.32)", S,
                      [] { return section3_data().coefficient_equation(1); },
                      [] { return section3_data().eq_y1(); }));
    out.push_back(rec("Y^0 coefficient", "(3.33)", S,
                      [] { return section3_data().coefficient_equation(0); },
                      [] { return section3_data().eq_y0(); }));
    out.push_back(rec("E_1^2 (3.29) after eliminating D_2", "(3.34) E_2^2D_1^2+E_1E_2^2D_1", S,
                      [] { return section3_data().eliminate(section3_data().eq_y4()); },
                      [] { return section3_data().eq34(); }));
    out.push_back(rec("E_1 (3.31) after eliminating D_2, D_0 (corrected: E_1^2 D_1)", "(3.35)", S,
                      [] { return section3_data().eliminate(section3_data().eq_y2()); },
                      [] { return section3_data().eq35(); }));
    out.push_back(rec("E_1^2 (3.33) after eliminating D_0", "(3.36)", S,
                      [] { return section3_data().eliminate(section3_data().eq_y0()); },
                      [] { return section3_data().eq36(); }));
    out.push_back(rec("E_1 (3.34) + E_2^2 (3.35) eliminates D_1", "(3.37) E_1(F_3^2+E_1E_2F_3+E_1^2F_4)", S,
                      [] {
                          const auto& d = section3_data();
                          return d.E[1] * d.eq34() + d.E[2].square() * d.eq35();
                      },
                      [] { return section3_data().lhs37(); }));
    out.push_back(rec("E_1 (3.36) + E_0^2 (3.35) eliminates D_1", "(3.38)", S,
                      [] {
                          const auto& d = section3_data();
                          return d.E[1] * d.eq36() + d.E[0].square() * d.eq35();
                      },
                      [] { return section3_data().lhs38(); }));
    out.push_back(rec("left side of (3.37) = a_1^2 C_3^3 h_1", "(3.39) a_1^2(1+a_1+a_1b+b^2+a_1^2k)^3h_1", S,
                      [] { return section3_data().lhs37(); },
                      [] { return P("a_1^2") * section3_data().c3.pow(3) * appendix_constants().at("h1"); }));
    out.push_back(rec("left side of (3.38) = C_3^3 h_2", "(3.40)", S,
                      [] { return section3_data().lhs38(); },
                      [] { return section3_data().c3.pow(3) * appendix_constants().at("h2"); }));
    out.push_back(rec("(a_1^2k^2+a_1^2bk+b+b^3)h_1+h_2", "(3.43)", S,
                      [] {
                          const auto& ap = appendix_constants();
                          return P("a_1^2k^2+a_1^2bk+b+b^3") * ap.at("h1") + ap.at("h2");
                      },
                      [] {
                          return P("a_1^4(1+a_1^2+b+b^2+b^3)^2k+a_1^2(1+a_1^4+a_1^4b^2+a_1^2b^3+a_1^2b^7+b^8)");
                      }));
    out.push_back(rec("(3.43) at b = 1 leaves a_1^8 k", "(3.43), b != 1", S,
                      [] {
                          return substitute(P("a_1^4(1+a_1^2+b+b^2+b^3)^2k+a_1^2(1+a_1^4+a_1^4b^2+a_1^2b^3+a_1^2b^7+b^8)"),
                                            Var::b, MPoly::constant(true));
                      },
                      [] { return P("a_1^8 k"); }));
    out.push_back(rec("d_1h_1+d_2h_2", "(3.44) d_1h_1+d_2h_2=0", S,
                      [] {
                          const auto& ap = appendix_constants();
                          return ap.at("d1") * ap.at("h1") + ap.at("d2") * ap.at("h2");
                      },
                      [] { return P("a_1^8b^3(1+b)^4(1+a_1^2+a_1b+a_1b^2+b^4)^4"); }));
    out.push_back(rec("(3.47) and 1+a_1^2+b+b^2+b^3 differ by b(1+b)(1+b^2+a_1)", "(3.47)", S,
                      [] { return P("(1+a_1^2+a_1b+a_1b^2+b^4) + (1+a_1^2+b+b^2+b^3)"); },
                      [] { return P("b(1+b)(1+b^2+a_1)"); }));
    out.push_back(rec("1+a_1^2+b+b^2+b^3 at a_1 = 1+b^2", "(3.47)", S,
                      [] { return substitute(P("1+a_1^2+b+b^2+b^3"), Var::a1, P("1+b^2")); },
                      [] { return P("b(1+b)^3"); }));
    out.push_back(rec("trace numerator rewrite", "proof of Prop. 3.1, Tr(k)", S,
                      [] { return P("1+a_1^4+a_1^4b^2+a_1^2b^3+a_1^2b^7+b^8"); },
                      [] { return P("(1+b)^8+a_1^4(1+b)^2+a_1^2b^3(1+b)^4"); }));
    out.push_back(rec("trace denominator rewrite", "proof of Prop. 3.1, Tr(k)", S,
                      [] { return P("1+a_1^2+b+b^2+b^3"); }, [] { return P("a_1^2+(1+b)^3"); }));
    out.push_back(rec("(1+b)^8+a_1^4(1+b)^2 = (1+b)^2(a_1^2+(1+b)^3)^2", "proof of Prop. 3.1, Tr(k)", S,
                      [] { return P("(1+b)^8+a_1^4(1+b)^2"); },
                      [] { return P("(1+b)^2(a_1^4+(1+b)^6)"); }));
    out.push_back(rec("a_1^2+(1+b)^3+b(1+b)(1+b^2+a_1) = (3.47)", "(3.47) 1+a_1^2+a_1b+a_1b^2+b^4=0", S,
                      [] { return P("a_1^2+(1+b)^3+b(1+b)(1+b^2+a_1)"); },
                      [] { return P("1+a_1^2+a_1b+a_1b^2+b^4"); }));
    out.push_back(rec("(1+b^2+a_1)^2+a_1b(1+b) is a multiple of (3.47)", "(3.47)", S,
                      [] { return P("(1+b^2+a_1)^2+a_1b(1+b)"); },
                      [] {
                          const MPoly r = P("1+a_1^2+a_1b+a_1b^2+b^4");
                          return r * exact_divide(P("(1+b^2+a_1)^2+a_1b(1+b)"), r);
                      }));
    return out;
}

std::vector<IdentityRecord> section4_records() {
    const auto S = Suite::section4;
    std::vector<IdentityRecord> out;
    const MPoly a = P("a");

    out.push_back(rec("g(phi(X)) numerator, a in F_q", "(4.1) (1+a+b)X^3", S,
                      [=] { return g_of_phi(a, a).first; }, [] { return section4_A(); }));
    out.push_back(rec("g(phi(X)) denominator, a in F_q", "(4.2)", S,
                      [=] { return g_of_phi(a, a).second; }, [] { return section4_B(); }));
    out.push_back(rec("cross-multiplied, z^0 part = cubic", "(4.3)-(4.6)", S,
                      [] {
                          return cross_multiplied(section4_A(), section4_B(), P("1"), P("1")).first;
                      },
                      [] { return section4_data().cubic; }));
    out.push_back(rec("cross-multiplied, z^1 part vanishes", "(4.3)-(4.6)", S,
                      [] {
                          return cross_multiplied(section4_A(), section4_B(), P("1"), P("1")).second;
                      },
                      [] { return MPoly{}; }));
    out.push_back(rec("C_1C_2+C_0C_3 = E_2Y^2+E_1Y+E_0", "(4.7)-(4.9)", S,
                      [] { return section4_data().cross; }, [] { return section4_data().E_poly(); }));
    out.push_back(rec("E_2 = (1+a+b)^2", "(4.7)", S, [] { return section4_data().E[2]; },
                      [] { return P("(1+a+b)^2"); }));
    out.push_back(rec("(k+1)(C_1C_2+C_0C_3)^2+(C_1^2+C_0C_2)(C_2^2+C_1C_3) = sum F_iY^i",
                      "(4.10)-(4.14)", S, [] { return section4_data().quartic; },
                      [] { return section4_data().F_poly(); }));
    out.push_back(rec("left side of (3.37) vanishes", "(3.37) becomes 0=0", S,
                      [] { return section4_data().lhs37(); }, [] { return MPoly{}; }));
    out.push_back(rec("E_1 (3.34) + E_2^2 (3.35) eliminates D_1", "(3.37)", S,
                      [] {
                          const auto& d = section4_data();
                          return d.E[1] * d.eliminate(d.eq_y4()) + d.E[2].square() * d.eliminate(d.eq_y2());
                      },
                      [] { return section4_data().lhs37(); }));
    out.push_back(rec("E_1 (3.36) + E_0^2 (3.35) eliminates D_1", "(3.38)", S,
                      [] {
                          const auto& d = section4_data();
                          return d.E[1] * d.eliminate(d.eq_y0()) + d.E[0].square() * d.eliminate(d.eq_y2());
                      },
                      [] { return section4_data().lhs38(); }));
    out.push_back(rec("left side of (3.38) is a multiple of (1+b)(1+a+b)(a^2+b+b^2)",
                      "(4.15) (1+b)^3(1+a+b)(a^2+b+b^2)=0", S,
                      [] { return section4_data().lhs38(); },
                      [] {
                          const MPoly f = P("(1+b)(1+a+b)(a^2+b+b^2)");
                          return f * exact_divide(section4_data().lhs38(), f);
                      }));
    out.push_back(rec("F_4(1+a+b) = E_2^2(a+b)", "(4.17) F_4/E_2^2 = 1 + 1/(1+a+b)", S,
                      [] { return section4_data().F[4] * P("1+a+b"); },
                      [] { return section4_data().E[2].square() * P("a+b"); }));
    out.push_back(rec("C_1C_2+C_0C_3 = ab+(1+a^2+b^2)(Y^2+Y+k)", "Claim 2.1", S,
                      [] { return section4_data().cross; },
                      [] { return P("ab+(1+a^2+b^2)(Y^2+Y+k)"); }));
    out.push_back(rec("C_2^2+C_1C_3 = 1+b+ab+(1+a^2+b^2)(Y^2+Y+k)", "Claim 2.1", S,
                      [] { return section4_data().disc; },
                      [] { return P("1+b+ab+(1+a^2+b^2)(Y^2+Y+k)"); }));
    out.push_back(rec("b = 1: C_1C_2+C_0C_3 = C_2^2+C_1C_3", "Claim 2.1", S,
                      [] { return substitute(section4_data().cross, Var::b, MPoly::constant(true)); },
                      [] { return substitute(section4_data().disc, Var::b, MPoly::constant(true)); }));
    out.push_back(rec("eliminating x^3 from (4.18),(4.19)", "Claim 1, bx^2+ax+a^2+b^2=0", S,
                      [] { return P("b(aX^3+X^2+b) + a(bX^3+X+a)"); },
                      [] { return P("bX^2+aX+a^2+b^2"); }));
    out.push_back(rec("(4.20) cleared by a^2/b", "(4.20) b(a^2+b^2)/a^2", S,
                      [] { return P("b(bX^2+aX+a^2+b^2)"); },
                      [] { return P("(bX)^2+a(bX)+b(a^2+b^2)"); }));
    return out;
}

std::vector<IdentityRecord> appendix_records() {
    const auto S = Suite::appendix;
    std::vector<IdentityRecord> out;
    const char* anchors[] = {"(A5)", "(A4)", "(A3)", "(A2)", "(A1) a_1+b+b^2+a_1 b^2"};
    for (int i = 4; i >= 0; --i) {
        out.push_back(rec("F_" + std::to_string(i) + " = Y^" + std::to_string(i) + " coefficient of (3.20)",
                          anchors[i], S,
                          [i] { return section3_data().quartic.coefficient(Var::Y, i); },
                          [i] { return section3_data().F[i]; }));
    }
    out.push_back(rec("h_1 = (3.37) / (a_1^2 C_3^3)", "(A6)", S,
                      [] {
                          const auto& d = section3_data();
                          return exact_divide(d.lhs37(), P("a_1^2") * d.c3.pow(3));
                      },
                      [] { return appendix_constants().at("h1"); }));
    out.push_back(rec("h_2 = (3.38) / C_3^3", "(A7)", S,
                      [] {
                          const auto& d = section3_data();
                          return exact_divide(d.lhs38(), d.c3.pow(3));
                      },
                      [] { return appendix_constants().at("h2"); }));
    out.push_back(rec("d_1, d_2 combine h_1, h_2 into a_1^8b^3(1+b)^4(3.47)^4", "(A8)-(A9)", S,
                      [] {
                          const auto& ap = appendix_constants();
                          return ap.at("d1") * ap.at("h1") + ap.at("d2") * ap.at("h2");
                      },
                      [] { return P("a_1^8b^3(1+b)^4(1+a_1^2+a_1b+a_1b^2+b^4)^4"); }));
    return out;
}

std::vector<IdentityRecord> as_printed_records() {
    const auto S = Suite::as_printed;
    std::vector<IdentityRecord> out;
    out.push_back(rec("Y^3 coefficient with printed right side F_2", "(3.30) E_1D_2+E_2D_1=F_2", S,
                      [] { return section3_data().coefficient_equation(3); },
                      [] {
                          const auto& d = section3_data();
                          return d.E[1] * P("D_2") + d.E[2] * P("D_1") + d.F[2];
                      }));
    out.push_back(rec("E_1 (3.31) after elimination vs printed E_1^2D_1^2", "(3.35) E_1D_1^2+E_1^2D_1^2", S,
                      [] { return section3_data().eliminate(section3_data().eq_y2()); },
                      [] {
                          const auto& d = section3_data();
                          return d.E[1] * P("D_1^2") + d.E[1].square() * P("D_1^2") + d.E[0] * d.F[3] +
                                 d.E[2] * d.F[1] + d.E[1] * d.F[2];
                      }));
    return out;
}

std::vector<IdentityRecord> all_records() {
    std::vector<IdentityRecord> out;
    for (auto&& group : {appendix_records(), section3_records(), section4_records(), as_printed_records()}) {
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

namespace {
std::vector<IdentityResult> run(const std::vector<IdentityRecord>& records) {
    std::vector<IdentityResult> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(check(r));
    return out;
}
}  // namespace

std::vector<IdentityResult> verify_section3() { return run(section3_records()); }
std::vector<IdentityResult> verify_section4() { return run(section4_records()); }
std::vector<IdentityResult> verify_all() { return run(all_records()); }

bool suite_passes(const std::vector<IdentityResult>& results) {
    for (const auto& r : results) {
        if (r.suite != Suite::as_printed && !r.pass) return false;
    }
    return true;
}

EliminationFactorization factor_section4_elimination() {
    EliminationFactorization f;
    f.full = section4_data().lhs38();
    MPoly rest = f.full;
    std::tie(f.power_one_plus_b, rest) = strip_factor(rest, P("1+b"));
    std::tie(f.power_one_plus_a_plus_b, rest) = strip_factor(rest, P("1+a+b"));
    std::tie(f.power_a2_plus_b_plus_b2, rest) = strip_factor(rest, P("a^2+b+b^2"));
    f.cofactor = std::move(rest);
    return f;
}

}  // namespace ptri
