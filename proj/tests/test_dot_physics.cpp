#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qd/dot_physics.hpp"

using namespace qd;

namespace {

// Materials with constant (parabolic) bands: E_P = 0 switches off both the
// Kane g term and mass nonparabolicity.
MaterialParams flat_material(const char* name, double m, double dEc, double g_remote = 0.0) {
    return MaterialParams{name, 1000.0, 0.0, 0.0, g_remote, dEc, m};
}

// Independent evaluation of the Roth formula, written out literally.
double roth_oracle(double E_g, double Delta_so, double E_P, double g_remote, double E) {
    return 2.0 + g_remote -
           (2.0 * E_P / 3.0) * (1.0 / (E_g + E) - 1.0 / (E_g + E + Delta_so));
}

// Bisection oracle for the well matching function, independent of the
// production bracket construction: scans for a sign change on a fine grid
// below the first tan pole, then bisects.
double well_oracle(const DotGeometry& geo) {
    auto f = [&](double E) { return well_matching_residual(geo, E); };
    const double dEc = geo.well.DeltaE_c;
    double prev = f(1e-9), lo = 1e-9, hi = dEc;
    bool bracketed = false;
    const int grid = 200000;
    for (int i = 1; i <= grid; ++i) {
        const double E = dEc * double(i) / double(grid + 1);
        const double k = std::sqrt(eff_mass(geo.well, E) * E / kHbar2Over2M0);
        if (k * geo.half_width_d >= 0.5 * M_PI) break;
        const double cur = f(E);
        if (prev < 0.0 && cur > 0.0) {
            lo = dEc * double(i - 1) / double(grid + 1);
            hi = E;
            bracketed = true;
            break;
        }
        prev = cur;
    }
    REQUIRE(bracketed);
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("dot-physics") {

TEST_CASE("bulk_g vanishes to g0+g_remote without Kane coupling") {
    MaterialParams m = flat_material("m", 0.1, 100.0, -0.3);
    CHECK(bulk_g(m, 0.0) == doctest::Approx(2.0 - 0.3).epsilon(1e-14));
    CHECK(bulk_g(m, 137.0) == doctest::Approx(2.0 - 0.3).epsilon(1e-14));
}

TEST_CASE("bulk_g calibration targets") {
    const MaterialParams& inas = material("InAs");
    const MaterialParams& gaas = material("GaAs");
    const MaterialParams& algaas = material("AlGaAs35");
    CHECK(bulk_g(inas, 0.0) == doctest::Approx(-14.9).epsilon(0.3 / 14.9));
    CHECK(bulk_g(gaas, 0.0) == doctest::Approx(-0.44).epsilon(0.01 / 0.44));
    CHECK(bulk_g(algaas, 0.0) == doctest::Approx(0.5).epsilon(0.02));
    // oracle: literal hand evaluation with the registry's own parameters
    for (const auto* m : {&inas, &gaas, &algaas}) {
        CHECK(bulk_g(*m, 123.0) ==
              doctest::Approx(roth_oracle(m->E_g, m->Delta_so, m->E_P, m->g_remote, 123.0))
                  .epsilon(1e-14));
    }
}

TEST_CASE("bulk_g strictly increasing and eff_mass non-decreasing in E") {
    for (const char* name : {"InAs", "GaAs", "AlGaAs35"}) {
        const MaterialParams& m = material(name);
        double prev_g = bulk_g(m, 0.0), prev_m = eff_mass(m, 0.0);
        for (double E = 5.0; E <= 500.0; E += 5.0) {
            const double g = bulk_g(m, E), mm = eff_mass(m, E);
            CHECK(g > prev_g);
            CHECK(mm >= prev_m);
            prev_g = g;
            prev_m = mm;
        }
    }
}

TEST_CASE("eff_mass calibration") {
    MaterialParams flat = flat_material("flat", 0.2, 100.0);
    CHECK(eff_mass(flat, 0.0) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(eff_mass(flat, 321.0) == doctest::Approx(0.2).epsilon(1e-14));
    const MaterialParams& inas = material("InAs");
    CHECK(eff_mass(inas, 0.0) == doctest::Approx(0.023).epsilon(0.002 / 0.023));
    CHECK(eff_mass(inas, 200.0) > eff_mass(inas, 0.0));
}

TEST_CASE("solve_well reaches the infinite-well limit") {
    const double m = 0.067, d = 5.0;
    DotGeometry geo{d, 10.0, flat_material("well", m, 1e6), flat_material("bar", m, 0.0)};
    WellSolution ws = solve_well(geo);
    const double E_inf = kHbar2Over2M0 * M_PI * M_PI / (m * (2.0 * d) * (2.0 * d));
    CHECK(ws.E_z == doctest::Approx(E_inf).epsilon(0.01));
    CHECK(ws.w_A == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("solve_well wide-well limit is weakly confined") {
    DotGeometry geo{50.0, 10.0, material("InAs"), material("GaAs")};
    CHECK(solve_well(geo).E_z < 5.0);
}

TEST_CASE("solve_well agrees with an independent bisection oracle") {
    DotGeometry geo{2.0, 10.0, flat_material("A", 0.023, 450.0),
                    flat_material("B", 0.067, 0.0)};
    WellSolution ws = solve_well(geo);
    CHECK(std::abs(ws.E_z - well_oracle(geo)) < 1e-8);
}

TEST_CASE("solve_well residual and weight normalization") {
    for (double d : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        DotGeometry geo{d, 10.0, material("InAs"), material("GaAs")};
        WellSolution ws = solve_well(geo);
        CHECK(std::abs(well_matching_residual(geo, ws.E_z)) < 1e-10);
        CHECK(std::abs(ws.w_A + ws.w_B - 1.0) < 1e-10);
        CHECK(ws.w_A > 0.0);
        CHECK(ws.w_A <= 1.0);
        CHECK(ws.E_z > 0.0);
        CHECK(ws.E_z < geo.well.DeltaE_c);
    }
}

TEST_CASE("wider wells bind deeper and hold more of the envelope") {
    double prev_E = 1e9, prev_wA = 0.0;
    for (double d : {1.0, 2.0, 3.0, 5.0, 8.0}) {
        DotGeometry geo{d, 10.0, material("InAs"), material("GaAs")};
        WellSolution ws = solve_well(geo);
        CHECK(ws.E_z < prev_E);
        CHECK(ws.w_A > prev_wA);
        prev_E = ws.E_z;
        prev_wA = ws.w_A;
    }
}

TEST_CASE("a vanishingly narrow well is flagged barely bound") {
    DotGeometry geo{1e-3, 10.0, flat_material("A", 0.067, 50.0),
                    flat_material("B", 0.067, 0.0)};
    WellSolution ws = solve_well(geo);
    CHECK(ws.barely_bound);
    CHECK(ws.E_z < geo.well.DeltaE_c);
}

TEST_CASE("dot_ground_energy adds the closed-form lateral term") {
    DotGeometry geo{2.0, 10.0, material("InAs"), material("GaAs")};
    WellSolution ws = solve_well(geo);
    // oracle: 2 hbar^2 w_lt / m with w_lt = pi/(8 d_lt^2), by hand
    const double w_lt = M_PI / (8.0 * 10.0 * 10.0);
    const double lateral = 2.0 * (2.0 * kHbar2Over2M0) * w_lt / eff_mass(geo.well, ws.E_z);
    CHECK(dot_ground_energy(geo) == doctest::Approx(ws.E_z + lateral).epsilon(1e-12));

    SUBCASE("lateral confinement vanishes for wide lateral extension") {
        DotGeometry wide = geo;
        wide.lateral_d_lt = 1e6;
        CHECK(dot_ground_energy(wide) == doctest::Approx(ws.E_z).epsilon(1e-9));
    }
    SUBCASE("narrower z wells raise the total energy") {
        DotGeometry narrow = geo;
        narrow.half_width_d = 1.0;
        CHECK(dot_ground_energy(narrow) > dot_ground_energy(geo));
    }
}

TEST_CASE("dot_g is the envelope-weighted average of the bulk values") {
    DotGeometry geo{2.0, 10.0, material("InAs"), material("GaAs")};
    WellSolution ws = solve_well(geo);
    const double gA = bulk_g(geo.well, ws.E_z);
    const double gB = bulk_g(geo.barrier, ws.E_z);
    const double oracle = 2.0 + ws.w_A * (gA - 2.0) + ws.w_B * (gB - 2.0);
    CHECK(dot_g(geo) == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(dot_g(geo) > std::min(gA, gB));
    CHECK(dot_g(geo) < std::max(gA, gB));

    SUBCASE("weight limits") {
        WellSolution confined = ws;
        confined.w_A = 1.0;
        confined.w_B = 0.0;
        CHECK(dot_g(geo, confined) == doctest::Approx(gA).epsilon(1e-14));
        WellSolution leaked = ws;
        leaked.w_A = 0.0;
        leaked.w_B = 1.0;
        CHECK(dot_g(geo, leaked) == doctest::Approx(gB).epsilon(1e-14));
    }
}

TEST_CASE("sphere_g approaches the bulk g for large radii") {
    SphereGFactor r = sphere_g(100.0, material("GaAs"), material("AlGaAs35"));
    CHECK(std::abs(r.total - bulk_g(material("GaAs"), 0.0)) < 0.05);
    CHECK(r.w_A > 0.999);
}

TEST_CASE("sphere_g sweep spans both signs over 5..15 nm") {
    // Confinement raises g toward the barrier value, so the sweep runs from
    // positive g at small R down through zero toward bulk GaAs.
    double prev = 1e9;
    double g5 = 0.0, g15 = 0.0;
    bool crossed = false;
    for (int i = 0; i <= 20; ++i) {
        const double R = 5.0 + 10.0 * double(i) / 20.0;
        const double g = sphere_g(R, material("GaAs"), material("AlGaAs35")).total;
        if (i == 0) g5 = g;
        if (i == 20) g15 = g;
        CHECK(g < prev);
        if (prev < 1e8 && prev > 0.0 && g <= 0.0) crossed = true;
        prev = g;
    }
    CHECK(crossed);
    CHECK(g5 > 0.05);
    CHECK(g5 < 0.5);
    CHECK(g15 < -0.05);
    CHECK(g15 > -0.45);
}

TEST_CASE("sphere_g terms sum to the total exactly") {
    for (double R : {5.0, 8.0, 12.0, 20.0}) {
        SphereGFactor r = sphere_g(R, material("GaAs"), material("AlGaAs35"));
        CHECK(std::abs(r.g0 + r.term_well + r.term_barrier + r.term_boundary - r.total) <
              1e-12);
        CHECK(std::abs(r.w_A + r.w_B - 1.0) < 1e-10);
    }
}

TEST_CASE("sphere_g matches an independent term-by-term oracle") {
    const MaterialParams well = flat_material("A", 0.067, 300.0, -2.44);
    const MaterialParams bar = flat_material("B", 0.0961, 0.0, -1.5);
    const double R = 10.0;
    // oracle: bisect x cot x = -(mA/mB) kappa R with constant masses
    const double rho2 = well.m_band_edge * well.DeltaE_c / kHbar2Over2M0 * R * R;
    auto match = [&](double x) {
        const double y = std::sqrt((rho2 - x * x) * bar.m_band_edge / well.m_band_edge);
        return x / std::tan(x) + (well.m_band_edge / bar.m_band_edge) * y;
    };
    double lo = 0.5 * M_PI + 1e-9, hi = std::min(M_PI - 1e-9, std::sqrt(rho2));
    REQUIRE(match(lo) > 0.0);
    REQUIRE(match(hi) < 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (match(mid) > 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    const double E = x * x * kHbar2Over2M0 / (well.m_band_edge * R * R);
    const double q = x / R;
    const double kap = std::sqrt(bar.m_band_edge * (well.DeltaE_c - E) / kHbar2Over2M0);
    const double I_in = 4.0 * M_PI * (0.5 * R - std::sin(2.0 * x) / (4.0 * q));
    const double I_out = 4.0 * M_PI * std::sin(x) * std::sin(x) / (2.0 * kap);
    const double A2 = 1.0 / (I_in + I_out);
    const double gA = 2.0 + well.g_remote, gB = 2.0 + bar.g_remote;
    const double expected = 2.0 + (gA - 2.0) * I_in * A2 + (gB - 2.0) * I_out * A2 +
                            (gB - gA) * (4.0 * M_PI / 3.0) * R * A2 * std::sin(x) * std::sin(x);

    SphereGFactor r = sphere_g(R, well, bar);
    CHECK(r.E == doctest::Approx(E).epsilon(1e-9));
    CHECK(r.total == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("sphere_g reports unbound wells") {
    CHECK_THROWS_WITH_AS(sphere_g(1.0, material("GaAs"), material("AlGaAs35")),
                         doctest::Contains("unbound"), std::runtime_error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(material("Unobtainium"), std::invalid_argument);
    MaterialParams bad = material("InAs");
    bad.E_g = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    DotGeometry geo{-1.0, 10.0, material("InAs"), material("GaAs")};
    CHECK_THROWS_AS(geo.validate(), std::invalid_argument);
    CHECK_THROWS_AS(sphere_g(-2.0, material("GaAs"), material("AlGaAs35")),
                    std::invalid_argument);
}

}  // TEST_SUITE
