#include "qd/materials.hpp"

#include <map>
#include <stdexcept>

#include "qd/constants.hpp"

namespace qd {

void MaterialParams::validate() const {
    if (!(E_g > 0.0))
        throw std::invalid_argument("MaterialParams '" + name + "': E_g must be > 0");
    if (Delta_so < 0.0)
        throw std::invalid_argument("MaterialParams '" + name + "': Delta_so must be >= 0");
    if (E_P < 0.0)
        throw std::invalid_argument("MaterialParams '" + name + "': E_P must be >= 0");
    if (!(m_band_edge > 0.0))
        throw std::invalid_argument("MaterialParams '" + name + "': m_band_edge must be > 0");
}

namespace {

// Kane interband term of the Roth g formula at the band edge.
double roth_band_edge(double E_g, double Delta_so, double E_P) {
    return (2.0 * E_P / 3.0) * (1.0 / E_g - 1.0 / (E_g + Delta_so));
}

// g_remote such that g(0) = g_target for the given band parameters.
double calibrate_g_remote(double E_g, double Delta_so, double E_P, double g_target) {
    return g_target - constants().g0 + roth_band_edge(E_g, Delta_so, E_P);
}

std::map<std::string, MaterialParams> make_defaults() {
    // Low-temperature band parameters; band-edge g calibration targets are
    // InAs -14.9, GaAs -0.44, Al0.35Ga0.65As +0.5.
    std::map<std::string, MaterialParams> m;
    m["InAs"] = MaterialParams{
        "InAs", 418.0, 380.0, 21500.0,
        calibrate_g_remote(418.0, 380.0, 21500.0, -14.9),
        450.0,  // well depth in GaAs, meV
        0.023};
    m["GaAs"] = MaterialParams{
        "GaAs", 1519.0, 341.0, 28900.0,
        calibrate_g_remote(1519.0, 341.0, 28900.0, -0.44),
        300.0,  // well depth in Al0.35Ga0.65As, meV
        0.067};
    m["AlGaAs35"] = MaterialParams{
        "AlGaAs35", 2025.0, 318.0, 26170.0,
        calibrate_g_remote(2025.0, 318.0, 26170.0, 0.5),
        0.0,  // reference barrier
        0.0961};
    return m;
}

const std::map<std::string, MaterialParams>& defaults() {
    static const std::map<std::string, MaterialParams> m = make_defaults();
    return m;
}

}  // namespace

const MaterialParams& material(const std::string& name) {
    auto it = defaults().find(name);
    if (it == defaults().end())
        throw std::invalid_argument("unknown material '" + name + "'");
    return it->second;
}

std::vector<std::string> material_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : defaults()) out.push_back(k);
    return out;
}

}  // namespace qd
