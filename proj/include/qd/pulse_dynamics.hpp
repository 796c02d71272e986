#ifndef QD_PULSE_DYNAMICS_HPP
#define QD_PULSE_DYNAMICS_HPP

#include <Eigen/Dense>
#include <ostream>
#include <vector>

#include "qd/constants.hpp"

namespace qd {

/// One resonant or detuned rectangular pulse on a two-level transition.
/// All entries are energies (hbar * frequency) in meV.
struct TwoLevelPulse {
    double rabi_energy = 0.0;      // hbar Omega
    double detuning_energy = 0.0;  // hbar (w0 - w)
    double duration = 0.0;         // ps

    void validate() const;
};

/// hbar * generalized Rabi frequency, sqrt(Omega^2 + detuning^2) in energy units.
double generalized_rabi(double rabi_energy, double detuning_energy);

/// Excited-state probability of the rectangular pulse at time t:
/// P(t) = (Omega/W)^2 sin^2(W t / 2), W the generalized Rabi frequency.
double two_level_population(const TwoLevelPulse& pulse, double t,
                            const PhysicalConstants& pc = constants());

/// Detuning energy hbar*Delta that makes a pi pulse on the addressed
/// transition a full 2*n*pi cycle on the detuned one:
/// hbar*Delta = (pi hbar / T_sw) sqrt(4 n^2 - 1); n = 1 gives sqrt(3) pi hbar / T_sw.
double cancellation_detuning(double T_sw, int n,
                             const PhysicalConstants& pc = constants());

/// Three-level "Vee" drive: one ground level coupled to two upper levels.
/// Energies in meV; detuning_12 extends the spec with an optional detuning on
/// the addressed transition (0 = resonant).
struct VeeSpec {
    double rabi_12 = 0.0;      // hbar Omega_12
    double rabi_13 = 0.0;      // hbar Omega_13
    double detuning_13 = 0.0;  // hbar Delta_13
    double duration = 0.0;     // ps
    double dt = 0.0;           // integrator step, ps
    double detuning_12 = 0.0;  // hbar Delta_12

    void validate() const;
};

/// Population time series; rows are sample times, columns are levels.
struct EvolutionTrace {
    std::vector<double> times;     // ps
    Eigen::MatrixXd populations;   // times.size() x n_levels
};

/// Fixed-step 4th-order integration of the rotating-wave Vee Hamiltonian
/// H = [[0, r12/2, r13/2], [r12/2, d12, 0], [r13/2, 0, d13]] from state |1>.
/// Throws std::runtime_error if the trace drifts from 1 by more than 1e-6.
EvolutionTrace evolve_vee(const VeeSpec& spec, const PhysicalConstants& pc = constants());

/// CSV export: header t_ps,p1,p2,...,pN; 9 significant digits.
void write_trace_csv(std::ostream& os, const EvolutionTrace& trace);

/// One classical RK4 step of y' = f(t, y).
template <class State, class Deriv>
State rk4_step(const State& y, double t, double dt, Deriv&& f) {
    State k1 = f(t, y);
    State k2 = f(t + 0.5 * dt, State(y + 0.5 * dt * k1));
    State k3 = f(t + 0.5 * dt, State(y + 0.5 * dt * k2));
    State k4 = f(t + dt, State(y + dt * k3));
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace qd

#endif
