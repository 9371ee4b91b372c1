#include <doctest.h>

#include <random>

#include "ptri/gf2n.hpp"
#include "ptri/mpoly.hpp"

using namespace ptri;

namespace {

MPoly P(std::string_view s) { return MPoly::parse(s); }

// Random polynomial in a1, b, k, z, Y with small exponents.
MPoly random_poly(std::mt19937& rng, int terms) {
    const Var vars[] = {Var::a1, Var::b, Var::k, Var::z, Var::Y};
    std::uniform_int_distribution<int> e(0, 3);
    std::vector<Monomial> ms;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (Var v : vars) m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e(rng));
        ms.push_back(m);
    }
    return MPoly::from_monomials(std::move(ms));
}

}  // namespace

TEST_CASE("parser follows the printed notation") {
    CHECK(P("a_1b") == MPoly::var(Var::a1) * MPoly::var(Var::b));
    CHECK(P("a_1^{10}") == MPoly::var(Var::a1, 10));
    CHECK(P("a_1^2 b") == P("a_1 a_1 b"));
    CHECK(P("2 + 3a") == MPoly::var(Var::a));
    CHECK(P("(1+b)^2") == P("1+b^2"));
    CHECK(P("c_0c_3 + D_1") == MPoly::var(Var::c0) * MPoly::var(Var::c3) + MPoly::var(Var::D1));
    CHECK(P("a - b") == P("a + b"));
    CHECK_THROWS_AS(P("a_1 + q"), std::invalid_argument);
    CHECK_THROWS_AS(P("(a"), std::invalid_argument);
}

TEST_CASE("characteristic-2 laws and basic examples") {
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        const MPoly p = random_poly(rng, 6), q = random_poly(rng, 6);
        CHECK((p + p).is_zero());
        CHECK((p + q).square() == p.square() + q.square());
        CHECK(p.square() == p * p);
        CHECK(p.pow(3) == p * p * p);
    }
    CHECK(reduce_z(P("z^2")) == P("z+k"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        const MPoly p = random_poly(rng, 5), q = random_poly(rng, 4), r = random_poly(rng, 3);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p * q == q * p);
        REQUIRE(p * MPoly::constant(true) == p);
        REQUIRE((p * MPoly{}).is_zero());
    }
}

TEST_CASE("reduce_z is an idempotent homomorphism onto z-degree <= 1") {
    std::mt19937 rng(9);
    for (int i = 0; i < 60; ++i) {
        const MPoly p = random_poly(rng, 5), q = random_poly(rng, 5);
        const MPoly rp = reduce_z(p);
        REQUIRE(rp.degree(Var::z) <= 1);
        REQUIRE(reduce_z(rp) == rp);
        REQUIRE(reduce_z(p + q) == rp + reduce_z(q));
        REQUIRE(reduce_z(p * q) == reduce_z(rp * reduce_z(q)));
    }
    // z^3 = z(z + k) = z + k + kz
    CHECK(reduce_z(P("z^3")) == P("z+k+k z"));
}

TEST_CASE("exact division") {
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        const MPoly p = random_poly(rng, 5);
        MPoly d = random_poly(rng, 3);
        if (d.is_zero()) d = MPoly::constant(true);
        REQUIRE(exact_divide(p * d, d) == p);
        const auto r = divide(p, d);
        REQUIRE(r.quotient * d + r.remainder == p);
    }
    CHECK_THROWS_AS(exact_divide(P("a+b"), MPoly{}), std::domain_error);
    try {
        exact_divide(P("a^2+b"), P("a"));
        FAIL("expected InexactDivision");
    } catch (const InexactDivision& e) {
        CHECK(e.remainder() == P("b"));
    }
    const auto [e, rest] = strip_factor(P("(1+b)^3 (a+b)"), P("1+b"));
    CHECK(e == 3);
    CHECK(rest == P("a+b"));
    CHECK_THROWS(strip_factor(P("a"), MPoly::constant(true)));
}

TEST_CASE("substitution") {
    CHECK(substitute(P("a^2 + a b"), Var::a, P("b+1")) == P("1 + b"));
    // b^2 * (x/b)^2 + b^2 * (x/b) * y  for x -> a, with p = X^2 + X Y
    const std::pair<Var, MPoly> sub[] = {{Var::X, P("a")}};
    CHECK(substitute_cleared(P("X^2 + X Y"), sub, P("b")) == P("a^2 + a b Y"));
}

TEST_CASE("coefficients, degrees and the degree cap") {
    const MPoly p = P("Y^2 k + Y (a+1) + b");
    CHECK(p.degree(Var::Y) == 2);
    CHECK(MPoly{}.degree(Var::Y) == -1);
    CHECK(p.coefficient(Var::Y, 1) == P("a+1"));
    CHECK(p.coefficient(Var::Y, 0) == P("b"));
    CHECK(p.mentions(Var::k));
    CHECK_FALSE(p.mentions(Var::z));
    CHECK_THROWS_AS(MPoly::var(Var::a, 40) * MPoly::var(Var::a, 30), std::overflow_error);
}

TEST_CASE("evaluation in a field") {
    const GF2n f = GF2n::make(4);
    std::array<Elem, kNumVars> v{};
    v[static_cast<std::size_t>(Var::a)] = Elem{3};
    v[static_cast<std::size_t>(Var::b)] = Elem{6};
    const Elem got = evaluate(P("a^2 b + b + 1"), f, v);
    CHECK(got == f.mul(f.square(Elem{3}), Elem{6}) + Elem{6} + f.one());
}
