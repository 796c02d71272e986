#ifndef QD_DOT_PHYSICS_HPP
#define QD_DOT_PHYSICS_HPP

#include "qd/constants.hpp"
#include "qd/materials.hpp"

namespace qd {

/// One flat dot: square well of full width 2*half_width_d along z and a
/// Gaussian lateral envelope exp(-w_lt r^2) with w_lt = pi/(8 d_lt^2).
struct DotGeometry {
    double half_width_d = 0.0;  // nm, half of the z well width
    double lateral_d_lt = 0.0;  // nm, lateral extension
    MaterialParams well;
    MaterialParams barrier;

    void validate() const;
};

/// Even-parity ground state of the finite z well.
struct WellSolution {
    double E_z = 0.0;    // bound-state energy above the well band edge, meV
    double k = 0.0;      // interior wavenumber, 1/nm
    double kappa = 0.0;  // barrier decay constant, 1/nm
    double w_A = 0.0;    // envelope probability inside the well
    double w_B = 0.0;    // envelope probability in the barrier
    bool barely_bound = false;  // E_z within tolerance of the well depth
};

/// Three-band Roth bulk g-factor at energy E above the material's band edge:
/// g(E) = g0 + g_remote - (2 E_P/3) [1/(E_g+E) - 1/(E_g+E+Delta_so)].
/// Strictly increasing in E.
double bulk_g(const MaterialParams& mat, double E,
              const PhysicalConstants& pc = constants());

/// Kane nonparabolic effective mass, rescaled so m(0) = m_band_edge.
/// Non-decreasing in E.
double eff_mass(const MaterialParams& mat, double E);

/// Ground state of the finite square well with energy-dependent masses and
/// BenDaniel-Duke matching (k/m_A) tan(k d) = kappa/m_B.  Bisection on a
/// bracketed interval, 200-iteration cap, 1e-12 meV tolerance.
WellSolution solve_well(const DotGeometry& geo);

/// Residual of the matching equation at energy E; the root of this function
/// is WellSolution::E_z.
double well_matching_residual(const DotGeometry& geo, double E);

/// Total confinement energy E_k = E_z + 2 hbar^2 w_lt / m_A(E_z).
double dot_ground_energy(const DotGeometry& geo);
double dot_ground_energy(const DotGeometry& geo, const WellSolution& ws);

/// Envelope-weighted dot g-factor
/// g_zz = g0 + w_A (g_A(E_z) - g0) + w_B (g_B(E_z) - g0).
double dot_g(const DotGeometry& geo, const PhysicalConstants& pc = constants());
double dot_g(const DotGeometry& geo, const WellSolution& ws,
             const PhysicalConstants& pc = constants());

/// E_k, g_zz and the underlying well solution in one pass.
struct DotLevels {
    double E_k = 0.0;   // meV
    double g_zz = 0.0;  // dimensionless
    WellSolution well;
};
DotLevels solve_dot(const DotGeometry& geo, const PhysicalConstants& pc = constants());

/// g-factor of a sphere of well material embedded in barrier material,
/// decomposed term by term:
/// g = g0 + (g_A-g0) w_A + (g_B-g0) w_B + (g_B-g_A) V(R) f^2(R).
struct SphereGFactor {
    double total = 0.0;
    double g0 = 0.0;
    double term_well = 0.0;      // (g_A(E)-g0) w_A
    double term_barrier = 0.0;   // (g_B(E)-g0) w_B
    double term_boundary = 0.0;  // (g_B(E)-g_A(E)) V(R) f^2(R)
    double E = 0.0;              // bound s-state energy, meV
    double w_A = 0.0;
    double w_B = 0.0;
};

/// Ground s-state of the finite spherical well; throws std::runtime_error
/// ("unbound") when the well is too shallow to bind a state.
SphereGFactor sphere_g(double radius_nm, const MaterialParams& well,
                       const MaterialParams& barrier,
                       const PhysicalConstants& pc = constants());

}  // namespace qd

#endif
