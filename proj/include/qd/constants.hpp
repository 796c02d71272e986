#ifndef QD_CONSTANTS_HPP
#define QD_CONSTANTS_HPP

#include <stdexcept>

namespace qd {

// Unit system used throughout: energies in meV, times in ps, lengths in nm,
// magnetic fields in tesla, masses in units of the free-electron mass m0.

struct PhysicalConstants {
    double mu_B = 0.05788382;    // Bohr magneton, meV/T
    double hbar = 0.65821196;    // reduced Planck constant, meV ps
    double g0   = 2.0;           // free-electron Lande factor

    void validate() const {
        if (!(mu_B > 0.0) || !(hbar > 0.0) || !(g0 > 0.0))
            throw std::invalid_argument("PhysicalConstants: all entries must be > 0");
    }
};

inline const PhysicalConstants& constants() {
    static const PhysicalConstants c{};
    return c;
}

// hbar*c in meV nm and m0*c^2 in meV (CODATA); together they give
// hbar^2/(2 m0) = 38.0998 meV nm^2, the conversion behind k = sqrt(2mE)/hbar.
inline constexpr double kHbarC = 0.65821196 * 299792.458;  // meV nm
inline constexpr double kM0C2  = 5.1099895e8;              // meV
inline constexpr double kHbar2Over2M0 = kHbarC * kHbarC / (2.0 * kM0C2);  // meV nm^2

}  // namespace qd

#endif
