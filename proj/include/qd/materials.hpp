#ifndef QD_MATERIALS_HPP
#define QD_MATERIALS_HPP

#include <string>
#include <vector>

namespace qd {

/// Band parameters of one semiconductor, all energies in meV.
/// g_remote is the additive remote-band correction of the three-band Roth
/// g-factor model, calibrated so that bulk_g(material, 0) reproduces the
/// measured band-edge g.  DeltaE_c is the conduction-band offset this
/// material has as a well inside its reference barrier (InAs vs GaAs,
/// GaAs vs Al0.35Ga0.65As).
struct MaterialParams {
    std::string name;
    double E_g = 0.0;          // band gap, meV
    double Delta_so = 0.0;     // spin-orbit splitting, meV
    double E_P = 0.0;          // Kane energy, meV
    double g_remote = 0.0;     // remote-band g correction, dimensionless
    double DeltaE_c = 0.0;     // conduction-band offset vs reference barrier, meV
    double m_band_edge = 1.0;  // band-edge effective mass, m0 units

    void validate() const;
};

/// Built-in low-temperature defaults: "InAs", "GaAs", "AlGaAs35".
const MaterialParams& material(const std::string& name);
std::vector<std::string> material_names();

}  // namespace qd

#endif
