#include "ptri/shadow.hpp"

#include <random>

namespace ptri {

ShadowResult numeric_shadow(const IdentityResult& result, const Tower& tower, std::uint64_t seed,
                            int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, tower.base_order() - 1);
    const bool uses_z = result.lhs.mentions(Var::z) || result.rhs.mentions(Var::z);
    ShadowResult r;
    for (int s = 0; s < samples; ++s) {
        std::array<TowerElem, kNumVars> values;
        for (auto& v : values) v = tower.embed(Elem{pick(rng)});
        if (uses_z) {
            values[static_cast<std::size_t>(Var::z)] = tower.z();
            values[static_cast<std::size_t>(Var::k)] = tower.embed(tower.k());
        }
        ++r.samples;
        if (evaluate(result.lhs, tower, values) != evaluate(result.rhs, tower, values)) ++r.mismatches;
    }
    return r;
}

}  // namespace ptri
