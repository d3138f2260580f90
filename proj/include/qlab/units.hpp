#pragma once

#include <cmath>
#include <stdexcept>

namespace qlab {

// Natural-unit knobs shared by every module. Defaults hbar = m = e = 1;
// all three are overridable so results can be rescaled to physical units.
struct UnitsConfig {
    double hbar   = 1.0;
    double mass   = 1.0;  // particle mass
    double charge = 1.0;  // coupling e in the minimal-coupling phase e/hbar * integral(A.dl)

    void validate() const {
        if (!(hbar > 0.0) || !std::isfinite(hbar))
            throw std::invalid_argument("UnitsConfig: hbar must be a positive finite real");
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw std::invalid_argument("UnitsConfig: mass must be a positive finite real");
        if (!(charge > 0.0) || !std::isfinite(charge))
            throw std::invalid_argument("UnitsConfig: charge must be a positive finite real");
    }
};

} // namespace qlab
