#ifndef QD_GATE_SIM_HPP
#define QD_GATE_SIM_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qd/pulse_dynamics.hpp"
#include "qd/spectrum.hpp"

namespace qd {

/// One single-particle orbital: dot index and spin (0 = up, 1 = down).
struct Orbital {
    int dot = 0;
    int spin = 0;

    friend auto operator<=>(const Orbital&, const Orbital&) = default;
};

/// One two-electron occupancy configuration, canonically ordered a <= b.
struct Config {
    Orbital a, b;

    bool holds(Orbital o) const { return a == o || b == o; }
    bool dot_occupied(int dot) const { return a.dot == dot || b.dot == dot; }
    bool doubly_occupied() const { return a.dot == b.dot; }

    friend auto operator<=>(const Config&, const Config&) = default;
};

enum class BasisMode {
    Strict,    // no double occupancy at all
    Extended,  // opposite-spin double occupancy allowed (on-site energy U)
};

/// Enumerated two-electron basis in lexicographic (dot, spin) order.
struct TwoElectronBasis {
    int n_dots = 0;
    BasisMode mode = BasisMode::Strict;
    std::vector<Config> states;

    int size() const { return static_cast<int>(states.size()); }
    /// Index of a configuration, or -1 when it is not in the basis.
    int find(Config c) const;
    int index_of(Config c) const;  // throws when absent
};

TwoElectronBasis enumerate_basis(int n_dots, BasisMode mode);

/// Complex amplitudes over a TwoElectronBasis.
struct TwoElectronState {
    Eigen::VectorXcd amplitudes;

    double norm2() const { return amplitudes.squaredNorm(); }
    void require_normalized(double tol = 1e-10) const;
};

/// State (alpha|0>_C + beta|1>_C)(gamma|0>_T + delta|1>_T) with the swap dot
/// empty; control/target default to the outer dots of a 3-dot stack.
TwoElectronState product_state(const TwoElectronBasis& basis,
                               std::complex<double> alpha, std::complex<double> beta,
                               std::complex<double> gamma, std::complex<double> delta,
                               int control_dot = 0, int target_dot = 2);

/// One gate: a spin-conserving optical hop C_{ii,kl} or a magnetic spin
/// rotation R at one dot.  `phase` is the drive phase of the realizing pulse
/// (radians); the ideal layer ignores it.
struct GateOp {
    enum class Kind { Hop, Rotation };
    Kind kind = Kind::Hop;
    int spin = 0;   // hop: conserved spin
    int dot_k = 0;  // hop: first dot
    int dot_l = 0;  // hop: second dot (adjacent to dot_k)
    int dot = 0;    // rotation: target dot
    double phase = 0.0;

    static GateOp hop(int spin, int k, int l, double phase = 0.0);
    static GateOp rotation(int dot, double phase = 0.0);
    std::string label() const;
};

/// Parse "C1", "C2", "C3", "RT", "C:<spin>:<k>-<l>" or "R:<dot>"
/// (dots 1-based in the general tokens).
GateOp parse_gate_token(const std::string& token, int n_dots);

/// The controlled-NOT pulse train C1 C2 C3 RT C3 C2 C1 on dots C=0, S=1,
/// T=2, with drive phases calibrated so the pulsed sequence reproduces the
/// real-swap ideal gate in the infinite-selectivity limit.
std::vector<GateOp> cnot_sequence();

/// Ideal layer: each op is a real permutation of configurations.  A hop
/// moves a spin-i electron between dots k and l when exactly one end holds
/// one and the destination dot is empty; blocked moves are the identity.
/// A rotation swaps the spin of a singly-occupied target dot.
TwoElectronState apply_ideal(const TwoElectronBasis& basis, const GateOp& op,
                             const TwoElectronState& state);

/// CN = C1 C2 C3 RT C3 C2 C1 applied in temporal order (C1 first) on dots
/// C=0, S=1, T=2.  Requires one electron in C, one in T, swap dot empty.
TwoElectronState cnot_ideal(const TwoElectronBasis& basis, const TwoElectronState& state);

/// The 8 states of the CN sequence: initial plus one per op.
std::vector<TwoElectronState> cnot_ideal_trace(const TwoElectronBasis& basis,
                                               const TwoElectronState& state);

/// Spin rotation by `angle` on the electron of one dot (identity when the
/// dot is empty or doubly occupied).  The drive-phase convention makes the
/// pi pulse the exact real swap of Eq-7 form: U = e^{i angle/2} e^{-i angle sx/2}.
TwoElectronState one_bit_rotation(const TwoElectronBasis& basis,
                                  const TwoElectronState& state, int dot, double angle);

/// Single-qubit variant on a bare spinor (|0>, |1>).
Eigen::Vector2cd rotate_qubit(const Eigen::Vector2cd& spinor, double angle);

/// |<a|b>|^2; global-phase invariant.
double fidelity(const TwoElectronState& a, const TwoElectronState& b);

struct PulsedOptions {
    double max_phase_per_step = 0.1;   // rad of the fastest kept oscillation per RK4 step
    long min_steps_per_pulse = 2000;
    double secular_cutoff = 2.5e-4;    // drop links with |coupling| < cutoff * hbar*|detuning|;
                                       // population error < cutoff^2 per dropped link
    int trace_samples_per_pulse = 200;
};

struct PulsedResult {
    TwoElectronState final_state;  // extended basis, interaction picture
    EvolutionTrace trace;
    double leakage = 0.0;          // final population on doubly-occupied configs
};

/// Pulse-level evolution of a gate sequence on the extended basis.  Each
/// optical pulse drives every same-spin adjacent-dot hop with RWA coupling
/// hbar*W_op/2 at the addressed transition frequency (everything else
/// detuned by its spectral distance); each magnetic pulse drives every
/// dot's spin flip with coupling g_k mu_B B1/2.  Pulse durations are pi at
/// the addressed transition.
PulsedResult evolve_pulsed(const SpinLevelTable& table, double B1, double T_sw,
                           const std::vector<GateOp>& sequence,
                           const TwoElectronState& initial, double U,
                           const PulsedOptions& opts = {},
                           const PhysicalConstants& pc = constants());

PulsedResult evolve_pulsed(const StackDesign& stack, const std::vector<GateOp>& sequence,
                           const TwoElectronState& initial, double U,
                           const PulsedOptions& opts = {},
                           const PhysicalConstants& pc = constants());

}  // namespace qd

#endif
