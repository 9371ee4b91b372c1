#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <set>

#include "oracle.hpp"
#include "ptri/sweep.hpp"

using namespace ptri;

namespace {

const std::vector<Oracle> kAll{Oracle::brute, Oracle::h_mu, Oracle::prop21, Oracle::tzlh, Oracle::thm11};

SweepReport sweep(int n, BRange range, std::vector<Oracle> oracles, int workers = 1) {
    SweepConfig c;
    c.n = n;
    c.b_range = range;
    c.oracles = std::move(oracles);
    c.workers = workers;
    return run_sweep(c);
}

}  // namespace

TEST_CASE("q = 4 census") {
    const auto full = sweep(2, BRange::full, kAll);
    CHECK(full.summary.total_pairs == 225);
    CHECK(full.summary.disagreements == 0);
    CHECK(full.summary.pp_count == 5);
    CHECK(full.summary.branch_i == 5);
    CHECK(full.summary.branch_ii == 0);

    // The five pairs are (1,1) moved by X -> gamma X, gamma in mu_5:
    // (gamma^(q(q-1)), gamma^(2(q-1))) = (gamma^12, gamma^6).
    const Tower t = Tower::make(GF2n::make(2));
    const oracle::Tower o{t.base().modulus(), t.k().bits};
    std::set<oracle::Tower::E> expected_a;
    std::set<std::pair<oracle::Tower::E, oracle::Tower::E>> expected;
    for (std::uint32_t i = 1; i < 16; ++i) {
        const oracle::Tower::E g{i & 3, i >> 2};
        if (o.pow(g, 5) != oracle::Tower::E{1, 0}) continue;
        expected.insert({o.pow(g, 12), o.pow(g, 6)});
    }
    CHECK(expected.size() == 5);
    std::set<std::pair<oracle::Tower::E, oracle::Tower::E>> got;
    for (const auto& p : full.pairs) {
        if (p.pp) got.insert({{p.a.u.bits, p.a.v.bits}, {p.b.u.bits, p.b.v.bits}});
    }
    CHECK(got == expected);

    const auto base = sweep(2, BRange::base, kAll);
    CHECK(base.summary.total_pairs == 45);
    CHECK(base.summary.pp_count == 1);
    REQUIRE(base.pairs.size() == 1);
    CHECK(base.pairs[0].a == t.one());
    CHECK(base.pairs[0].b == t.one());
}

TEST_CASE("q = 8 census, every oracle") {
    const auto full = sweep(3, BRange::full, kAll, 2);
    CHECK(full.summary.disagreements == 0);
    CHECK(full.summary.pp_count == 63);
    CHECK(full.summary.branch_i == 36);
    CHECK(full.summary.branch_ii == 27);
    const auto base = sweep(3, BRange::base, kAll);
    CHECK(base.summary.disagreements == 0);
    CHECK(base.summary.pp_with_a_outside_base == 0);
}

TEST_CASE("reports do not depend on the worker count") {
    const auto r1 = sweep(3, BRange::full, {Oracle::brute, Oracle::tzlh}, 1);
    const auto r4 = sweep(3, BRange::full, {Oracle::brute, Oracle::tzlh}, 4);
    const auto r8 = sweep(3, BRange::full, {Oracle::brute, Oracle::tzlh}, 8);
    CHECK(to_json(r1, false) == to_json(r4, false));
    CHECK(to_json(r1, false) == to_json(r8, false));
    CHECK(to_csv(r1) == to_csv(r8));
}

TEST_CASE("report formats") {
    const auto r = sweep(2, BRange::full, {Oracle::brute, Oracle::thm11}, 3);
    const auto doc = nlohmann::json::parse(to_json(r));
    CHECK(doc["config"]["n"] == 2);
    CHECK(doc["summary"]["pp_count"] == 5);
    CHECK(doc["runtime"]["workers"] == 3);
    CHECK(doc["pairs"].size() == 5);
    CHECK_FALSE(nlohmann::json::parse(to_json(r, false)).contains("runtime"));
    const std::string csv = to_csv(r);
    CHECK(csv.substr(0, csv.find('\n')) == "n,a_hex_u,a_hex_v,b_hex_u,b_hex_v,verdict,branch,oracle_disagreement");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("guards") {
    SweepConfig c;
    c.n = 9;
    CHECK_THROWS_AS(check_guards(c), std::invalid_argument);
    c.n = 8;
    c.b_range = BRange::full;
    CHECK_NOTHROW(check_guards(c));
    c.b_range = BRange::base;
    CHECK_THROWS_AS(check_guards(c), GuardError);
    c.force = true;
    CHECK_NOTHROW(check_guards(c));
    c.oracles = {Oracle::thm11};
    c.force = false;
    CHECK_NOTHROW(check_guards(c));
    c.workers = 0;
    CHECK_THROWS_AS(check_guards(c), std::invalid_argument);
    c.workers = 1;
    c.oracles.clear();
    CHECK_THROWS_AS(check_guards(c), std::invalid_argument);
}

TEST_CASE("oracle names round-trip") {
    for (Oracle o : kAll) CHECK(parse_oracle(oracle_name(o)) == o);
    CHECK_FALSE(parse_oracle("nope").has_value());
}
