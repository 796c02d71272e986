#include "qd/pulse_dynamics.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

namespace qd {

void TwoLevelPulse::validate() const {
    if (!(rabi_energy > 0.0))
        throw std::invalid_argument("TwoLevelPulse: rabi_energy must be > 0");
    if (duration < 0.0)
        throw std::invalid_argument("TwoLevelPulse: duration must be >= 0");
}

double generalized_rabi(double rabi_energy, double detuning_energy) {
    if (rabi_energy < 0.0)
        throw std::invalid_argument("generalized_rabi: rabi_energy must be >= 0");
    return std::hypot(rabi_energy, detuning_energy);
}

double two_level_population(const TwoLevelPulse& pulse, double t,
                            const PhysicalConstants& pc) {
    pulse.validate();
    if (t < 0.0) throw std::invalid_argument("two_level_population: t must be >= 0");
    const double w_eff = generalized_rabi(pulse.rabi_energy, pulse.detuning_energy);
    const double ratio = pulse.rabi_energy / w_eff;
    const double s = std::sin(0.5 * w_eff * t / pc.hbar);
    return ratio * ratio * s * s;
}

double cancellation_detuning(double T_sw, int n, const PhysicalConstants& pc) {
    if (!(T_sw > 0.0))
        throw std::invalid_argument("cancellation_detuning: T_sw must be > 0");
    if (n < 1)
        throw std::invalid_argument("cancellation_detuning: n must be >= 1");
    const double hbar_omega = M_PI * pc.hbar / T_sw;
    return hbar_omega * std::sqrt(4.0 * double(n) * double(n) - 1.0);
}

void VeeSpec::validate() const {
    if (!(rabi_12 > 0.0)) throw std::invalid_argument("VeeSpec: rabi_12 must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("VeeSpec: dt must be > 0");
    if (dt > duration / 100.0)
        throw std::invalid_argument("VeeSpec: dt must be <= duration/100");
}

EvolutionTrace evolve_vee(const VeeSpec& spec, const PhysicalConstants& pc) {
    spec.validate();
    using Eigen::Matrix3cd;
    using Eigen::Vector3cd;
    const std::complex<double> minus_i_over_hbar{0.0, -1.0 / pc.hbar};

    Matrix3cd H = Matrix3cd::Zero();
    H(0, 1) = H(1, 0) = 0.5 * spec.rabi_12;
    H(0, 2) = H(2, 0) = 0.5 * spec.rabi_13;
    H(1, 1) = spec.detuning_12;
    H(2, 2) = spec.detuning_13;

    auto deriv = [&](double, const Vector3cd& psi) -> Vector3cd {
        return minus_i_over_hbar * (H * psi);
    };

    const auto n_steps = static_cast<long>(std::ceil(spec.duration / spec.dt - 1e-9));
    const double dt = spec.duration / double(n_steps);

    EvolutionTrace trace;
    trace.times.reserve(static_cast<size_t>(n_steps) + 1);
    trace.populations.resize(n_steps + 1, 3);

    Vector3cd psi = Vector3cd::Zero();
    psi[0] = 1.0;
    double t = 0.0;
    for (long step = 0;; ++step) {
        trace.times.push_back(t);
        trace.populations.row(step) = psi.cwiseAbs2().transpose();
        const double drift = std::abs(psi.squaredNorm() - 1.0);
        if (drift > 1e-6)
            throw std::runtime_error("evolve_vee: trace drift exceeds 1e-6; reduce dt");
        if (step == n_steps) break;
        psi = rk4_step(psi, t, dt, deriv);
        t += dt;
    }
    return trace;
}

void write_trace_csv(std::ostream& os, const EvolutionTrace& trace) {
    os << "t_ps";
    for (Eigen::Index c = 0; c < trace.populations.cols(); ++c) os << ",p" << c + 1;
    os << "\n";
    char buf[32];
    for (size_t r = 0; r < trace.times.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.9g", trace.times[r]);
        os << buf;
        for (Eigen::Index c = 0; c < trace.populations.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.9g", trace.populations(static_cast<Eigen::Index>(r), c));
            os << ',' << buf;
        }
        os << "\n";
    }
}

}  // namespace qd
