#ifndef PTRI_SHADOW_HPP_
#define PTRI_SHADOW_HPP_

#include <cstdint>

#include "ptri/identities.hpp"
#include "ptri/tower.hpp"

namespace ptri {

struct ShadowResult {
    int samples = 0;
    int mismatches = 0;

    bool pass() const { return samples > 0 && mismatches == 0; }
};

/// Evaluates both sides of a checked identity at random base-field points
/// in the tower. When z occurs, z and k take the tower's values so that
/// z^2 = z + k holds; otherwise every variable is drawn independently.
ShadowResult numeric_shadow(const IdentityResult& result, const Tower& tower, std::uint64_t seed,
                            int samples = 100);

}  // namespace ptri

#endif  // PTRI_SHADOW_HPP_
