#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "oracle.hpp"
#include "ptri/cubic.hpp"
#include "ptri/curve.hpp"
#include "ptri/sweep.hpp"
#include "ptri/trinomial.hpp"

using namespace ptri;

namespace {

oracle::Tower::E to_pair(TowerElem x) { return {x.u.bits, x.v.bits}; }

oracle::Tower oracle_of(const Tower& t) { return {t.base().modulus(), t.k().bits}; }

std::vector<TowerElem> nonzero(const Tower& t) {
    std::vector<TowerElem> out;
    for (std::uint32_t i = 1; i < t.order(); ++i) out.push_back(t.from_index(i));
    return out;
}

Tower tower(int n) { return Tower::make(GF2n::make(n)); }

// Theorem conditions checked with oracle arithmetic, for a, b in F_q.
bool theorem_holds(std::uint32_t mod, std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return false;
    const std::uint64_t q = std::uint64_t{1} << oracle::deg(mod);
    const auto inv = [&](std::uint32_t x) { return oracle::pow(x, q - 2, mod); };
    if (b == 1) return oracle::trace(1 ^ inv(a), mod) == 0;
    return oracle::trace(oracle::mul(b, inv(b ^ 1), mod), mod) == 0 &&
           oracle::mul(a, a, mod) == oracle::mul(b, b ^ 1, mod);
}

}  // namespace

TEST_CASE("eval_f examples") {
    const Tower t = tower(2);
    const auto o = oracle_of(t);
    const auto p = make_params(t.one(), t.one());
    CHECK(eval_f(t, p, t.zero()) == t.zero());
    const auto p2 = make_params(t.embed(Elem{2}), t.from_index(7));
    CHECK(eval_f(t, p2, t.one()) == t.one() + p2.a + p2.b);
    const TowerElem g = t.generator();
    const auto want = oracle::Tower::add(to_pair(g), oracle::Tower::add(o.pow(to_pair(g), 13), o.pow(to_pair(g), 7)));
    CHECK(to_pair(eval_f(t, p, g)) == want);
    CHECK_THROWS_AS(make_params(t.zero(), t.one()), std::invalid_argument);
}

TEST_CASE("table evaluation matches exponentiation") {
    for (int n : {2, 3, 4}) {
        const Tower t = tower(n);
        std::mt19937 rng(n);
        const auto all = nonzero(t);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int i = 0; i < 20; ++i) {
            const auto p = make_params(all[pick(rng)], all[pick(rng)]);
            for (std::uint32_t x = 0; x < t.order(); ++x) {
                REQUIRE(eval_f(t, p, t.from_index(x)) == eval_f_by_powers(t, p, t.from_index(x)));
            }
        }
    }
}

TEST_CASE("brute force agrees with the set-based oracle") {
    SUBCASE("q = 4, every pair") {
        const Tower t = tower(2);
        const auto o = oracle_of(t);
        for (auto a : nonzero(t)) {
            for (auto b : nonzero(t)) {
                REQUIRE(is_pp_bruteforce(t, make_params(a, b)) == oracle::is_pp(o, to_pair(a), to_pair(b)));
            }
        }
    }
    SUBCASE("q = 8, sampled with PP pairs included") {
        const Tower t = tower(3);
        const auto o = oracle_of(t);
        std::mt19937 rng(8);
        const auto all = nonzero(t);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        int pp = 0;
        for (int i = 0; i < 300; ++i) {
            const auto p = make_params(all[pick(rng)], all[pick(rng)]);
            const bool want = oracle::is_pp(o, to_pair(p.a), to_pair(p.b));
            pp += want;
            REQUIRE(is_pp_bruteforce(t, p) == want);
        }
        // base-field theorem pairs are PPs by the oracle as well
        for (std::uint32_t a = 1; a < 8; ++a) {
            for (std::uint32_t b = 1; b < 8; ++b) {
                if (!theorem_holds(t.base().modulus(), a, b)) continue;
                const auto p = make_params(t.embed(Elem{a}), t.embed(Elem{b}));
                CHECK(oracle::is_pp(o, to_pair(p.a), to_pair(p.b)));
                CHECK(is_pp_bruteforce(t, p));
                ++pp;
            }
        }
        CHECK(pp > 0);
    }
    const Tower t = tower(2);
    CHECK(is_pp_bruteforce(t, make_params(t.one(), t.one())));
    CHECK_FALSE(is_pp_bruteforce(t, make_params(t.embed(Elem{2}), t.one())));
    // 1 + a + b = 0 collapses f(1) onto f(0)
    const auto a = t.from_index(6);
    CHECK_FALSE(is_pp_bruteforce(t, make_params(a, a + t.one())));
}

TEST_CASE("base-field classifier examples") {
    for (int n = 1; n <= 8; ++n) {
        const Tower t = tower(n);
        CHECK(criterion_thm11(t, make_params(t.one(), t.one())).verdict == Verdict::pp_branch_i);
    }
    const Tower t4 = tower(2);
    const auto c = criterion_thm11(t4, make_params(t4.embed(Elem{2}), t4.one()));
    CHECK(c.verdict == Verdict::not_pp);
    CHECK(c.failed_condition == "Tr(1+1/a) = 1");
    CHECK(criterion_thm11(t4, make_params(t4.z(), t4.one())).verdict == Verdict::not_pp);
    CHECK_THROWS_AS(criterion_thm11(t4, make_params(t4.one(), t4.z())), std::invalid_argument);

    const Tower t8 = tower(3);
    const GF2n& f = t8.base();
    int branch_ii = 0;
    for (std::uint32_t b = 2; b < 8; ++b) {
        const Elem eb{b};
        if (f.trace(f.div(eb, eb + f.one())) != 0) continue;
        const Elem a = f.sqrt(f.mul(eb, eb + f.one()));
        const auto p = make_params(t8.embed(a), t8.embed(eb));
        CHECK(criterion_thm11(t8, p).verdict == Verdict::pp_branch_ii);
        CHECK(is_pp_bruteforce(t8, p));
        CHECK(theorem_holds(f.modulus(), a.bits, b));
        ++branch_ii;
    }
    CHECK(branch_ii > 0);
    CHECK(verdict_name(Verdict::pp_branch_ii) == "PP_branch_ii");
}

TEST_CASE("norm criterion") {
    const Tower t4 = tower(2);
    const auto r = criterion_tzlh(t4, make_params(t4.one(), t4.one()));
    CHECK(r.pass);
    CHECK(r.norm_equation);
    CHECK(r.b_norm_is_one);
    const auto w = criterion_tzlh(t4, make_params(t4.embed(Elem{2}), t4.one()));
    CHECK_FALSE(w.pass);
    CHECK(w.trace_value == 1);
    for (auto a : nonzero(t4)) {
        for (auto b : nonzero(t4)) {
            const auto p = make_params(a, b);
            REQUIRE(criterion_tzlh(t4, p).pass == is_pp_bruteforce(t4, p));
        }
    }
}

TEST_CASE("normalization") {
    SUBCASE("q = 4 uses beta = b^4") {
        const Tower t = tower(2);
        const auto o = oracle_of(t);
        for (auto a : nonzero(t)) {
            for (auto b : nonzero(t)) {
                const auto n = normalize_b(t, make_params(a, b));
                const auto beta = o.pow(to_pair(b), 4);
                REQUIRE(to_pair(n.b) == o.pow(beta, 10));
                REQUIRE(to_pair(n.a) == o.mul(to_pair(a), o.pow(beta, 12)));
            }
        }
    }
    for (int deg : {2, 3}) {
        const Tower t = tower(deg);
        for (auto a : nonzero(t)) {
            for (auto b : nonzero(t)) {
                const auto p = make_params(a, b);
                const auto n = normalize_b(t, p);
                REQUIRE(n.b.in_base());
                REQUIRE(normalize_b(t, n) == n);
                REQUIRE(is_pp_bruteforce(t, n) == is_pp_bruteforce(t, p));
                if (b.in_base()) REQUIRE(n == p);
                REQUIRE(classify(t, p).is_pp() == is_pp_bruteforce(t, p));
            }
        }
    }
}

TEST_CASE("cubic on mu, h on mu and the reduction to F_q") {
    const Tower t4 = tower(2);
    const auto one = make_params(t4.one(), t4.one());
    CHECK(cubic_no_root_in_mu(t4, one));
    CHECK(h_permutes_mu(t4, one));
    const auto r = prop21_check(t4, one);
    CHECK(r.pp);
    CHECK(r.counts == std::vector<int>(4, 1));
    CHECK_FALSE(prop21_check(t4, make_params(t4.embed(Elem{2}), t4.one())).pp);
    CHECK_THROWS_AS(prop21_check(t4, make_params(t4.one(), t4.z())), std::invalid_argument);
    const auto a = t4.from_index(9);
    CHECK_FALSE(cubic_no_root_in_mu(t4, make_params(a, a + t4.one())));

    for (int n : {2, 3}) {
        const Tower t = tower(n);
        for (auto a : nonzero(t)) {
            for (auto b : nonzero(t)) {
                const auto p = make_params(a, b);
                const bool pp = is_pp_bruteforce(t, p);
                REQUIRE(h_permutes_mu(t, p) == pp);
                REQUIRE(prop21_check(t, normalize_b(t, p)).pp == pp);
                if (!cubic_no_root_in_mu(t, p)) REQUIRE_FALSE(pp);
            }
        }
    }
    const Tower t8 = tower(3);
    for (std::uint32_t a = 1; a < 8; ++a) {
        for (std::uint32_t b = 1; b < 8; ++b) {
            if (theorem_holds(t8.base().modulus(), a, b)) {
                CHECK(cubic_no_root_in_mu(t8, make_params(t8.embed(Elem{a}), t8.embed(Elem{b}))));
            }
        }
    }
}

TEST_CASE("cubic root counts and the Williams predicate") {
    const GF2n f2 = GF2n::make(1), f4 = GF2n::make(2), f8 = GF2n::make(3);
    CHECK(cubic_root_count(f2, Elem{1}, Elem{1}) == 0);
    CHECK(williams_predicate(f2, Elem{1}, Elem{1}) == 0);
    CHECK(cubic_root_count(f4, Elem{1}, Elem{2}) == 1);
    CHECK(williams_predicate(f4, Elem{1}, Elem{2}) == 1);
    CHECK(depressed_cubic_solve(f4, Elem{1}, Elem{0}, Elem{1}, Elem{2}) == std::vector<Elem>{Elem{3}});
    CHECK(cubic_root_count(f8, Elem{1}, Elem{1}) == 3);
    CHECK(williams_predicate(f8, Elem{1}, Elem{1}) == 0);
    CHECK_THROWS_AS(cubic_root_count(f8, Elem{1}, Elem{0}), std::domain_error);

    const auto s1 = williams_scan(f2);
    CHECK(s1.pairs == 2);
    CHECK(s1.violations == 0);
    const auto s2 = williams_scan(f4);
    CHECK(s2.pairs == 12);
    CHECK(s2.violations == 0);
    CHECK(s2.root_count_histogram == std::array<std::uint64_t, 4>{5, 6, 0, 1});
    const auto s3 = williams_scan(f8);
    CHECK(s3.pairs == 56);
    CHECK(s3.violations == 0);
}

TEST_CASE("depressed cubic solver against enumeration") {
    const auto check_tuple = [](const GF2n& f, Elem c3, Elem c2, Elem c1, Elem c0) {
        const auto roots = depressed_cubic_solve(f, c3, c2, c1, c0);
        std::set<Elem> enumerated;
        for (std::uint32_t x = 0; x < f.order(); ++x) {
            const Elem e{x};
            const Elem e2 = f.square(e);
            if ((f.mul(c3, f.mul(e2, e)) + f.mul(c2, e2) + f.mul(c1, e) + c0).is_zero()) enumerated.insert(e);
        }
        REQUIRE(std::set<Elem>(roots.begin(), roots.end()) == enumerated);
        REQUIRE(std::is_sorted(roots.begin(), roots.end()));
        REQUIRE(roots.size() <= 3);
        if (roots.size() == 3) {
            // c3 (x + r0)(x + r1)(x + r2) reproduces the coefficients
            const Elem s1 = roots[0] + roots[1] + roots[2];
            const Elem s2 = f.mul(roots[0], roots[1]) + f.mul(roots[0], roots[2]) + f.mul(roots[1], roots[2]);
            const Elem s3 = f.mul(roots[0], f.mul(roots[1], roots[2]));
            REQUIRE(f.mul(c3, s1) == c2);
            REQUIRE(f.mul(c3, s2) == c1);
            REQUIRE(f.mul(c3, s3) == c0);
        }
    };
    const GF2n f64 = GF2n::make(6);
    std::mt19937 rng(64);
    std::uniform_int_distribution<std::uint32_t> d(0, 63);
    for (int i = 0; i < 1000; ++i) {
        const Elem c3{d(rng) | 1};
        check_tuple(f64, c3, Elem{d(rng)}, Elem{d(rng)}, Elem{d(rng)});
    }
    const GF2n f4 = GF2n::make(2);
    for (std::uint32_t c3 = 1; c3 < 4; ++c3)
        for (std::uint32_t c2 = 0; c2 < 4; ++c2)
            for (std::uint32_t c1 = 0; c1 < 4; ++c1)
                for (std::uint32_t c0 = 0; c0 < 4; ++c0) check_tuple(f4, Elem{c3}, Elem{c2}, Elem{c1}, Elem{c0});
    // (x + s)^3
    const Elem s{37};
    const auto triple = depressed_cubic_solve(f64, Elem{1}, s, f64.square(s), f64.pow(s, 3));
    CHECK(triple == std::vector<Elem>{s, s, s});
    CHECK_THROWS_AS(depressed_cubic_solve(f64, Elem{0}, s, s, s), std::domain_error);
}

TEST_CASE("curve examples") {
    const GF2n f8 = GF2n::make(3);
    const auto c = build_curve(f8, Elem{1}, Elem{1}, Elem{1});
    CHECK(c.c3 == Elem{1});
    CHECK(c.P.degree() <= 4);
    CHECK(c.Q.degree() <= 4);
    CHECK(c.Q.coeffs.back() == Elem{1});
    const auto count = curve_point_count(c);
    CHECK(count == 8);
    CHECK(count % 2 == 0);
    // Tr(1) = 0 in F_16
    CHECK_THROWS_AS(build_curve(GF2n::make(4), Elem{1}, Elem{1}, Elem{1}), std::invalid_argument);
}

TEST_CASE("random curves: coprime P, Q and counts below 2(q-2)") {
    for (int n : {4, 5}) {
        const GF2n f = GF2n::make(n);
        const PolyRing<GF2n> ring(f, 'Y');
        std::mt19937 rng(n * 31);
        std::uniform_int_distribution<std::uint32_t> d(1, f.order() - 1);
        int built = 0;
        while (built < 100) {
            const Elem a1{d(rng)}, b{d(rng)}, k{d(rng)};
            if (f.trace(k) != 1) continue;
            std::optional<CurveInstance> built_curve;
            try {
                built_curve = build_curve(f, a1, b, k);
            } catch (const std::domain_error&) {
                continue;
            }
            const CurveInstance& c = *built_curve;
            ++built;
            REQUIRE(ring.gcd(c.P, c.Q).degree() == 0);
            if (built <= 25) {
                const auto count = curve_point_count(c);
                REQUIRE(count % 2 == 0);
                REQUIRE(count < 2 * (f.order() - 2));
            }
        }
    }
}

TEST_CASE("construction of D") {
    const GF2n f4 = GF2n::make(2);
    const auto d = construct_D(f4, Elem{1}, Elem{1}, Elem{2});
    CHECK(d.D2 == Elem{0});
    CHECK(d.D1 == Elem{0});
    CHECK(d.D0 == Elem{0});
    CHECK(d.E[2] == Elem{1});
    CHECK(d.E[1] == Elem{1});
    for (Elem fi : d.F) CHECK(fi == Elem{0});
    CHECK(d.verified());

    for (int n : {3, 4, 5}) {
        const GF2n f = GF2n::make(n);
        const Tower t = Tower::make(f);
        int theorem = 0, obstructed = 0;
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            for (std::uint32_t b = 1; b < f.order(); ++b) {
                const bool holds = theorem_holds(f.modulus(), a, b);
                if (holds) {
                    REQUIRE(construct_D(f, Elem{a}, Elem{b}, t.k()).verified());
                    REQUIRE(claim1_trace(f, Elem{a}, Elem{b}) == 0);
                    ++theorem;
                } else if (b == 1) {
                    REQUIRE_THROWS_AS(construct_D(f, Elem{a}, Elem{b}, t.k()), TraceObstruction);
                    ++obstructed;
                }
            }
        }
        CHECK(theorem > 0);
        CHECK(obstructed > 0);
    }
}

TEST_CASE("Tr(b(a^2+b^2)/a^2) vanishes on theorem pairs up to q = 64") {
    for (int n = 1; n <= 6; ++n) {
        const GF2n f = GF2n::make(n);
        for (std::uint32_t a = 1; a < f.order(); ++a)
            for (std::uint32_t b = 1; b < f.order(); ++b)
                if (theorem_holds(f.modulus(), a, b)) REQUIRE(claim1_trace(f, Elem{a}, Elem{b}) == 0);
    }
}

TEST_CASE("on theorem pairs, roots of C1C2+C0C3 are roots of C2^2+C1C3") {
    for (int n : {3, 4, 5}) {
        const GF2n f = GF2n::make(n);
        const Tower t = Tower::make(f);
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            for (std::uint32_t b = 1; b < f.order(); ++b) {
                if (!theorem_holds(f.modulus(), a, b)) continue;
                const auto r = claim21_check(f, Elem{a}, Elem{b}, t.k());
                REQUIRE(r.roots_shared);
                // branch (ii) pairs have no root at all
                if (b != 1) REQUIRE(r.cross_roots == 0);
            }
        }
    }
}

TEST_CASE("classification does not depend on k or on the modulus") {
    const auto base_pp_set = [](const SweepReport& r) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& p : r.pairs) {
            if (p.pp && p.a.in_base() && p.b.in_base()) out.insert({p.a.u.bits, p.b.u.bits});
        }
        return out;
    };
    SweepConfig cfg;
    cfg.n = 3;
    cfg.b_range = BRange::full;
    cfg.oracles = {Oracle::brute, Oracle::thm11};
    const auto ref = run_sweep(cfg);

    SUBCASE("alternative k") {
        const GF2n f = GF2n::make(3);
        std::uint32_t alt = 0;
        for (std::uint32_t k = ref.k + 1; k < 8 && alt == 0; ++k) {
            if (f.trace(Elem{k}) == 1) alt = k;
        }
        REQUIRE(alt != 0);
        SweepConfig c2 = cfg;
        c2.k = alt;
        const auto r2 = run_sweep(c2);
        CHECK(r2.k == alt);
        CHECK(r2.summary.pp_count == ref.summary.pp_count);
        CHECK(r2.summary.disagreements == 0);
        CHECK(base_pp_set(r2) == base_pp_set(ref));
    }
    SUBCASE("alternative modulus t^3+t^2+1") {
        SweepConfig c2 = cfg;
        c2.modulus = 0xd;
        const auto r2 = run_sweep(c2);
        CHECK(r2.modulus == 0xd);
        CHECK(r2.summary.pp_count == ref.summary.pp_count);
        CHECK(r2.summary.disagreements == 0);
        // t -> r with r a root of t^3+t+1 in the new field
        const GF2n to = GF2n::make(3, 0xd);
        Elem r{};
        for (std::uint32_t x = 2; x < 8; ++x) {
            const Elem e{x};
            if ((to.pow(e, 3) + e + to.one()).is_zero()) {
                r = e;
                break;
            }
        }
        REQUIRE(!r.is_zero());
        const auto iso = [&](std::uint32_t x) {
            Elem acc{};
            for (int i = 0; i < 3; ++i) {
                if (x >> i & 1) acc += to.pow(r, static_cast<std::uint64_t>(i));
            }
            return acc.bits;
        };
        std::set<std::pair<std::uint32_t, std::uint32_t>> mapped;
        for (const auto& [a, b] : base_pp_set(ref)) mapped.insert({iso(a), iso(b)});
        CHECK(mapped == base_pp_set(r2));
    }
}
