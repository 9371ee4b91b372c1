#ifndef PTRI_SWEEP_HPP_
#define PTRI_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptri/trinomial.hpp"

namespace ptri {

enum class Oracle { brute, thm11, tzlh, prop21, h_mu };
enum class BRange { base, full };
/// Which pairs a report lists. Disagreements are always listed.
enum class ListMode { pp, disagreements, all };

std::string_view oracle_name(Oracle o);
std::optional<Oracle> parse_oracle(std::string_view name);
std::string_view b_range_name(BRange r);
std::string_view list_mode_name(ListMode m);

struct SweepConfig {
    int n = 2;
    std::optional<std::uint32_t> modulus;
    std::optional<std::uint32_t> k;
    BRange b_range = BRange::full;
    std::vector<Oracle> oracles{Oracle::brute, Oracle::thm11};
    int workers = 1;
    ListMode list = ListMode::pp;
    bool force = false;
};

class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws GuardError for n > 8 with full b, n > 7 for brute force over base
/// b (unless force), and std::invalid_argument for a malformed config.
void check_guards(const SweepConfig& config);

struct PairRecord {
    TowerElem a, b;
    /// Verdict of the first oracle; the branch comes from normalize + thm11.
    bool pp = false;
    Verdict branch = Verdict::not_pp;
    bool disagreement = false;
    /// One entry per configured oracle.
    std::vector<bool> oracle_pp;
};

struct SweepSummary {
    std::uint64_t total_pairs = 0;
    std::uint64_t pp_count = 0;
    std::uint64_t branch_i = 0;
    std::uint64_t branch_ii = 0;
    std::uint64_t disagreements = 0;
    /// PP pairs (by the first oracle) whose a lies outside F_q.
    std::uint64_t pp_with_a_outside_base = 0;
};

struct SweepReport {
    SweepConfig config;
    std::uint32_t modulus = 0;
    std::uint32_t k = 0;
    SweepSummary summary;
    std::vector<PairRecord> pairs;
    double seconds = 0.0;
};

/// Enumerates a over F_{q^2}^* and b over F_{q^2}^* or F_q^* (work unit =
/// one a). Workers pull a-values from a shared counter; results are merged
/// in a order, so the report does not depend on the worker count.
SweepReport run_sweep(const SweepConfig& config);

/// JSON report; the runtime section (workers, seconds) is left out when
/// include_runtime is false.
std::string to_json(const SweepReport& report, bool include_runtime = true);
/// n,a_hex_u,a_hex_v,b_hex_u,b_hex_v,verdict,branch,oracle_disagreement
std::string to_csv(const SweepReport& report);

}  // namespace ptri

#endif  // PTRI_SWEEP_HPP_
