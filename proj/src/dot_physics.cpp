#include "qd/dot_physics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qd {

namespace {

constexpr int kBisectIters = 200;
constexpr double kEnergyTol = 1e-12;  // meV

double sq(double x) { return x * x; }

// Interior wavenumber k(E) = sqrt(2 m_A(E) E)/hbar in 1/nm.
double wavenumber(const MaterialParams& mat, double E) {
    return std::sqrt(eff_mass(mat, E) * E / kHbar2Over2M0);
}

// Barrier decay constant kappa(E) = sqrt(2 m_B(E)(dEc - E))/hbar.
double decay_constant(const MaterialParams& mat, double E, double dEc) {
    return std::sqrt(eff_mass(mat, E) * (dEc - E) / kHbar2Over2M0);
}

// Largest E in (0, E_cap) with phase(E) < target, where phase(E) = k(E)*L is
// increasing in E.  Used to cut brackets just below tan/cot poles.
double phase_ceiling(const MaterialParams& mat, double L, double target, double E_cap) {
    if (wavenumber(mat, E_cap) * L <= target) return E_cap;
    double lo = 0.0, hi = E_cap;
    for (int i = 0; i < kBisectIters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (wavenumber(mat, mid) * L < target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

void DotGeometry::validate() const {
    if (!(half_width_d > 0.0))
        throw std::invalid_argument("DotGeometry: half_width_d must be > 0");
    if (!(lateral_d_lt > 0.0))
        throw std::invalid_argument("DotGeometry: lateral_d_lt must be > 0");
    well.validate();
    barrier.validate();
    if (!(well.DeltaE_c > 0.0))
        throw std::invalid_argument("DotGeometry: well material has no confining offset");
}

double bulk_g(const MaterialParams& mat, double E, const PhysicalConstants& pc) {
    if (mat.E_g + E <= 0.0)
        throw std::invalid_argument("bulk_g: E_g + E must be > 0");
    double g = pc.g0 + mat.g_remote -
               (2.0 * mat.E_P / 3.0) *
                   (1.0 / (mat.E_g + E) - 1.0 / (mat.E_g + E + mat.Delta_so));
    if (!std::isfinite(g))
        throw std::invalid_argument("bulk_g: degenerate band parameters");
    return g;
}

double eff_mass(const MaterialParams& mat, double E) {
    // m(E)/m0 = 1/[1 + (E_P/3)(2/(E_g+E) + 1/(E_g+E+Dso))], rescaled to the
    // band-edge mass.
    auto kane = [&](double e) {
        return 1.0 / (1.0 + (mat.E_P / 3.0) *
                                (2.0 / (mat.E_g + e) + 1.0 / (mat.E_g + e + mat.Delta_so)));
    };
    return mat.m_band_edge * kane(E) / kane(0.0);
}

double well_matching_residual(const DotGeometry& geo, double E) {
    const double dEc = geo.well.DeltaE_c;
    const double mA = eff_mass(geo.well, E);
    const double mB = eff_mass(geo.barrier, E);
    const double k = wavenumber(geo.well, E);
    const double kap = decay_constant(geo.barrier, E, dEc);
    return (k / mA) * std::tan(k * geo.half_width_d) - kap / mB;
}

WellSolution solve_well(const DotGeometry& geo) {
    geo.validate();
    const double d = geo.half_width_d;
    const double dEc = geo.well.DeltaE_c;

    // The ground even state has k*d in (0, pi/2); within that window the
    // matching function is negative at E -> 0 and positive toward the upper
    // edge (tan pole or kappa -> 0), so bisection is safe.
    double hi = phase_ceiling(geo.well, d, 0.5 * M_PI * (1.0 - 1e-14), dEc * (1.0 - 1e-14));
    double lo = 0.0;
    double f_lo = well_matching_residual(geo, lo);
    double f_hi = well_matching_residual(geo, hi);
    if (!(f_lo < 0.0) || !(f_hi > 0.0)) {
        std::ostringstream oss;
        oss << "solve_well: bracketing failed on [" << lo << ", " << hi
            << "] meV, residuals (" << f_lo << ", " << f_hi << ")";
        throw std::runtime_error(oss.str());
    }
    for (int i = 0; i < kBisectIters && (hi - lo) > kEnergyTol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (well_matching_residual(geo, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }

    WellSolution ws;
    ws.E_z = 0.5 * (lo + hi);
    ws.k = wavenumber(geo.well, ws.E_z);
    ws.kappa = decay_constant(geo.barrier, ws.E_z, dEc);
    // |f_z|^2 integrals of the cos / decaying-exp envelope, closed form.
    const double inside = d + std::sin(2.0 * ws.k * d) / (2.0 * ws.k);
    const double outside = sq(std::cos(ws.k * d)) / ws.kappa;
    ws.w_A = inside / (inside + outside);
    ws.w_B = outside / (inside + outside);
    ws.barely_bound = (dEc - ws.E_z) < 1e-6 * dEc;
    return ws;
}

double dot_ground_energy(const DotGeometry& geo, const WellSolution& ws) {
    // Lateral zero-point energy of exp(-w_lt r^2): hbar w with
    // w = 2 hbar w_lt / m, i.e. 4 (hbar^2/2m0) w_lt / m_A.
    const double w_lt = M_PI / (8.0 * sq(geo.lateral_d_lt));
    return ws.E_z + 4.0 * kHbar2Over2M0 * w_lt / eff_mass(geo.well, ws.E_z);
}

double dot_ground_energy(const DotGeometry& geo) {
    return dot_ground_energy(geo, solve_well(geo));
}

double dot_g(const DotGeometry& geo, const WellSolution& ws, const PhysicalConstants& pc) {
    const double gA = bulk_g(geo.well, ws.E_z, pc);
    const double gB = bulk_g(geo.barrier, ws.E_z, pc);
    return pc.g0 + ws.w_A * (gA - pc.g0) + ws.w_B * (gB - pc.g0);
}

double dot_g(const DotGeometry& geo, const PhysicalConstants& pc) {
    return dot_g(geo, solve_well(geo), pc);
}

DotLevels solve_dot(const DotGeometry& geo, const PhysicalConstants& pc) {
    DotLevels out;
    out.well = solve_well(geo);
    out.E_k = dot_ground_energy(geo, out.well);
    out.g_zz = dot_g(geo, out.well, pc);
    return out;
}

SphereGFactor sphere_g(double radius_nm, const MaterialParams& well,
                       const MaterialParams& barrier, const PhysicalConstants& pc) {
    if (!(radius_nm > 0.0))
        throw std::invalid_argument("sphere_g: radius must be > 0");
    well.validate();
    barrier.validate();
    const double R = radius_nm;
    const double dEc = well.DeltaE_c;
    if (!(dEc > 0.0))
        throw std::invalid_argument("sphere_g: well material has no confining offset");

    // Bound s-state requires q(dEc) R > pi/2.
    if (wavenumber(well, dEc) * R <= 0.5 * M_PI)
        throw std::runtime_error("sphere_g: unbound (well too shallow for R)");

    // Ground state has q R in (pi/2, pi).  The matching function
    // G(E) = qR cot(qR) + (m_A/m_B) kappa R decreases from >0 to <0 there.
    auto match = [&](double E) {
        const double mA = eff_mass(well, E);
        const double mB = eff_mass(barrier, E);
        const double x = wavenumber(well, E) * R;
        return x / std::tan(x) + (mA / mB) * decay_constant(barrier, E, dEc) * R;
    };
    double lo = phase_ceiling(well, R, 0.5 * M_PI, dEc);
    double hi = phase_ceiling(well, R, M_PI * (1.0 - 1e-14), dEc * (1.0 - 1e-14));
    lo += 1e-12 * (hi - lo);
    if (!(match(lo) > 0.0) || !(match(hi) < 0.0)) {
        std::ostringstream oss;
        oss << "sphere_g: bracketing failed on [" << lo << ", " << hi << "] meV";
        throw std::runtime_error(oss.str());
    }
    for (int i = 0; i < kBisectIters && (hi - lo) > kEnergyTol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (match(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double E = 0.5 * (lo + hi);

    // u(r) = r f(r) is A sin(qr) inside, A sin(qR) e^{-kappa(r-R)} outside;
    // normalization 4*pi Int u^2 dr = 1.
    const double q = wavenumber(well, E);
    const double kap = decay_constant(barrier, E, dEc);
    const double x = q * R;
    const double I_in = 4.0 * M_PI * (0.5 * R - std::sin(2.0 * x) / (4.0 * q));
    const double I_out = 4.0 * M_PI * sq(std::sin(x)) / (2.0 * kap);
    const double A2 = 1.0 / (I_in + I_out);

    SphereGFactor out;
    out.E = E;
    out.g0 = pc.g0;
    out.w_A = I_in * A2;
    out.w_B = I_out * A2;
    const double gA = bulk_g(well, E, pc);
    const double gB = bulk_g(barrier, E, pc);
    const double vol_f2 = (4.0 * M_PI / 3.0) * R * A2 * sq(std::sin(x));  // V(R) f^2(R)
    out.term_well = (gA - pc.g0) * out.w_A;
    out.term_barrier = (gB - pc.g0) * out.w_B;
    out.term_boundary = (gB - gA) * vol_f2;
    out.total = pc.g0 + out.term_well + out.term_barrier + out.term_boundary;
    return out;
}

}  // namespace qd
