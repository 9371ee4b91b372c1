#include "ptri/sweep.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ptri {

namespace {

constexpr std::string_view kToolVersion = "ptri 1.0.0";

bool run_oracle(Oracle o, const Tower& tower, const TrinomialParams& p) {
    switch (o) {
        case Oracle::brute: return is_pp_bruteforce(tower, p);
        case Oracle::thm11: return classify(tower, p).is_pp();
        case Oracle::tzlh: return criterion_tzlh(tower, p).pass;
        case Oracle::prop21: return prop21_check(tower, normalize_b(tower, p)).pp;
        case Oracle::h_mu: return h_permutes_mu(tower, p);
    }
    return false;
}

struct SliceResult {
    SweepSummary summary;
    std::vector<PairRecord> pairs;
};

SliceResult sweep_one_a(const Tower& tower, const SweepConfig& cfg, std::uint32_t a_index) {
    SliceResult out;
    const TowerElem a = tower.from_index(a_index);
    const std::uint32_t b_end =
        cfg.b_range == BRange::full ? static_cast<std::uint32_t>(tower.order()) : tower.base_order();
    for (std::uint32_t bi = 1; bi < b_end; ++bi) {
        const TrinomialParams p{a, tower.from_index(bi)};
        PairRecord rec;
        rec.a = a;
        rec.b = p.b;
        for (Oracle o : cfg.oracles) rec.oracle_pp.push_back(run_oracle(o, tower, p));
        rec.pp = rec.oracle_pp.front();
        for (bool v : rec.oracle_pp) rec.disagreement |= v != rec.pp;
        if (rec.pp || rec.disagreement || cfg.list == ListMode::all) rec.branch = classify(tower, p).verdict;

        SweepSummary& s = out.summary;
        ++s.total_pairs;
        if (rec.disagreement) ++s.disagreements;
        if (rec.pp) {
            ++s.pp_count;
            if (rec.branch == Verdict::pp_branch_i) ++s.branch_i;
            if (rec.branch == Verdict::pp_branch_ii) ++s.branch_ii;
            if (!a.in_base()) ++s.pp_with_a_outside_base;
        }
        const bool listed = rec.disagreement || cfg.list == ListMode::all ||
                            (cfg.list == ListMode::pp && rec.pp);
        if (listed) out.pairs.push_back(std::move(rec));
    }
    return out;
}

void accumulate(SweepSummary& into, const SweepSummary& s) {
    into.total_pairs += s.total_pairs;
    into.pp_count += s.pp_count;
    into.branch_i += s.branch_i;
    into.branch_ii += s.branch_ii;
    into.disagreements += s.disagreements;
    into.pp_with_a_outside_base += s.pp_with_a_outside_base;
}

std::string branch_label(const PairRecord& r) {
    switch (r.branch) {
        case Verdict::pp_branch_i: return "i";
        case Verdict::pp_branch_ii: return "ii";
        case Verdict::not_pp: return "";
    }
    return "";
}

}  // namespace

std::string_view oracle_name(Oracle o) {
    switch (o) {
        case Oracle::brute: return "brute";
        case Oracle::thm11: return "thm11";
        case Oracle::tzlh: return "tzlh";
        case Oracle::prop21: return "prop21";
        case Oracle::h_mu: return "h-mu";
    }
    return "?";
}

std::optional<Oracle> parse_oracle(std::string_view name) {
    for (Oracle o : {Oracle::brute, Oracle::thm11, Oracle::tzlh, Oracle::prop21, Oracle::h_mu}) {
        if (oracle_name(o) == name) return o;
    }
    return std::nullopt;
}

std::string_view b_range_name(BRange r) { return r == BRange::full ? "full" : "base"; }

std::string_view list_mode_name(ListMode m) {
    switch (m) {
        case ListMode::pp: return "pp";
        case ListMode::disagreements: return "disagreements";
        case ListMode::all: return "all";
    }
    return "?";
}

void check_guards(const SweepConfig& cfg) {
    if (cfg.oracles.empty()) throw std::invalid_argument("no oracle selected");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (cfg.n < 1 || cfg.n > Tower::kMaxBaseDegree) {
        throw std::invalid_argument("sweeps need 1 <= n <= " + std::to_string(Tower::kMaxBaseDegree));
    }
    if (cfg.force) return;
    if (cfg.b_range == BRange::full && cfg.n > 8) {
        throw GuardError("full-b sweeps are limited to n <= 8 (use --force)");
    }
    bool brute = false;
    for (Oracle o : cfg.oracles) brute |= o == Oracle::brute;
    if (cfg.b_range == BRange::base && brute && cfg.n > 7) {
        throw GuardError("base-field brute-force sweeps are limited to n <= 7 (use --force)");
    }
}

SweepReport run_sweep(const SweepConfig& cfg) {
    check_guards(cfg);
    const auto start = std::chrono::steady_clock::now();
    const GF2n base = GF2n::make(cfg.n, cfg.modulus);
    const Tower tower =
        Tower::make(base, cfg.k ? std::optional<Elem>(base.element(*cfg.k)) : std::nullopt);

    const auto a_count = static_cast<std::uint32_t>(tower.order() - 1);
    std::vector<SliceResult> slices(a_count);
    std::atomic<std::uint32_t> next{0};
    auto work = [&] {
        for (std::uint32_t i = next++; i < a_count; i = next++) slices[i] = sweep_one_a(tower, cfg, i + 1);
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < cfg.workers; ++w) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();

    SweepReport report;
    report.config = cfg;
    report.modulus = base.modulus();
    report.k = tower.k().bits;
    for (auto& s : slices) {
        accumulate(report.summary, s.summary);
        for (auto& r : s.pairs) report.pairs.push_back(std::move(r));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const SweepReport& r, bool include_runtime) {
    using nlohmann::ordered_json;
    ordered_json oracles = ordered_json::array();
    for (Oracle o : r.config.oracles) oracles.push_back(oracle_name(o));
    ordered_json doc;
    doc["tool"] = kToolVersion;
    doc["config"] = {{"n", r.config.n},
                     {"modulus", to_hex(r.modulus)},
                     {"k", to_hex(r.k)},
                     {"b_range", b_range_name(r.config.b_range)},
                     {"oracles", oracles},
                     {"list", list_mode_name(r.config.list)},
                     {"force", r.config.force}};
    const auto& s = r.summary;
    doc["summary"] = {{"total_pairs", s.total_pairs},
                      {"pp_count", s.pp_count},
                      {"pp_branch_i", s.branch_i},
                      {"pp_branch_ii", s.branch_ii},
                      {"pp_with_a_outside_base", s.pp_with_a_outside_base},
                      {"disagreements", s.disagreements}};
    ordered_json pairs = ordered_json::array();
    for (const auto& p : r.pairs) {
        ordered_json votes;
        for (std::size_t i = 0; i < p.oracle_pp.size(); ++i) {
            votes[std::string(oracle_name(r.config.oracles[i]))] = p.oracle_pp[i];
        }
        pairs.push_back({{"a", format_tower_elem(p.a)},
                         {"b", format_tower_elem(p.b)},
                         {"verdict", p.pp ? "PP" : "NotPP"},
                         {"branch", branch_label(p)},
                         {"oracle_disagreement", p.disagreement},
                         {"oracles", votes}});
    }
    doc["pairs"] = std::move(pairs);
    if (include_runtime) doc["runtime"] = {{"workers", r.config.workers}, {"seconds", r.seconds}};
    return doc.dump(2) + "\n";
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "n,a_hex_u,a_hex_v,b_hex_u,b_hex_v,verdict,branch,oracle_disagreement\n";
    for (const auto& p : r.pairs) {
        out << r.config.n << ',' << to_hex(p.a.u.bits) << ',' << to_hex(p.a.v.bits) << ','
            << to_hex(p.b.u.bits) << ',' << to_hex(p.b.v.bits) << ',' << (p.pp ? "PP" : "NotPP") << ','
            << branch_label(p) << ',' << (p.disagreement ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace ptri
