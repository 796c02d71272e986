#ifndef QD_SPECTRUM_HPP
#define QD_SPECTRUM_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "qd/constants.hpp"
#include "qd/dot_physics.hpp"

namespace qd {

/// An ordered stack of dots plus the static field, the rotational-field
/// amplitude and the optical switching time.
struct StackDesign {
    std::vector<DotGeometry> dots;
    double B = 0.0;     // static field along z, tesla
    double B1 = 0.0;    // rotational-field amplitude, tesla
    double T_sw = 0.0;  // optical switching time, ps

    void validate() const;
};

/// The 2N Zeeman-split single-electron levels
/// E_{i,k} = E_k + (-1)^i mu_B g_k B / 2, spin i = 0 (up), 1 (down).
struct SpinLevelTable {
    Eigen::MatrixX2d levels;             // row k, col i
    Eigen::VectorXd g_values;            // g_k
    Eigen::VectorXd quantization_energies;  // E_k
    double B = 0.0;                      // tesla

    int n_dots() const { return static_cast<int>(levels.rows()); }
    double level(int i, int k) const { return levels(k, i); }
};

SpinLevelTable level_table(const StackDesign& stack,
                           const PhysicalConstants& pc = constants());

/// Build a level table directly from quantization energies and g-factors,
/// bypassing dot physics.
SpinLevelTable level_table_from_values(const Eigen::VectorXd& E_k,
                                       const Eigen::VectorXd& g_k, double B,
                                       const PhysicalConstants& pc = constants());

/// dE_{ijkl} = E_{i,k} - E_{j,l}; antisymmetric under (ij,kl) <-> (ji,lk).
double transition_energy(const SpinLevelTable& table, int i, int j, int k, int l);

/// Photon-assisted-tunneling energies of one adjacent dot pair,
/// for both conserved spins.
struct PairTransitions {
    int k = 0, l = 0;    // dot indices, adjacent (spec labels are 1-based)
    double dE00 = 0.0;   // dE_{00kl}, meV
    double dE11 = 0.0;   // dE_{11kl}, meV
};

std::vector<PairTransitions> adjacent_transitions(const SpinLevelTable& table);

struct Violation {
    std::string constraint;  // "rotation", "spin-pair", "dot-pair", "strict-gap"
    std::string subject;     // which dots / transitions
    double actual = 0.0;     // meV
    double threshold = 0.0;  // meV
};

struct SelectivityReport {
    bool pass = false;
    double margin_meV = 0.0;  // worst-case (actual - threshold)
    std::vector<Violation> violations;
};

/// Rotation selectivity: |g_i - g_j| mu_B B >= sqrt(3) |g_i| mu_B B1 for
/// every ordered pair i != j.
SelectivityReport check_rotation_selectivity(const StackDesign& stack,
                                             const PhysicalConstants& pc = constants());
SelectivityReport check_rotation_selectivity(const SpinLevelTable& table, double B,
                                             double B1,
                                             const PhysicalConstants& pc = constants());

enum class OpticalMode {
    Strict,     // all driven transition energies mutually separated by 2*sqrt(3) hbar W_op
    SharedDot,  // only same-spin transition pairs sharing a dot
};

/// Optical selectivity with hbar W_op = pi hbar / T_sw:
///  - per driven pair: ||dE00| - |dE11|| >= sqrt(3) hbar W_op;
///  - same-spin transitions sharing a dot: separation >= 2 sqrt(3) hbar W_op;
///  - Strict mode additionally requires every pairwise gap among all driven
///    transition energies to clear 2 sqrt(3) hbar W_op.
SelectivityReport check_optical_selectivity(const SpinLevelTable& table, double T_sw,
                                            const std::vector<std::pair<int, int>>& driven_pairs,
                                            OpticalMode mode = OpticalMode::Strict,
                                            const PhysicalConstants& pc = constants());

/// Same check on raw transition energies (published tables and fixtures).
SelectivityReport check_optical_selectivity(const std::vector<PairTransitions>& rows,
                                            double T_sw,
                                            OpticalMode mode = OpticalMode::Strict,
                                            const PhysicalConstants& pc = constants());

/// All adjacent pairs of an N-dot stack: (0,1), (1,2), ...
std::vector<std::pair<int, int>> all_adjacent_pairs(int n_dots);

}  // namespace qd

#endif
