#include "qd/gate_sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace qd {

using std::complex;

int TwoElectronBasis::find(Config c) const {
    if (c.b < c.a) std::swap(c.a, c.b);
    auto it = std::lower_bound(states.begin(), states.end(), c);
    if (it == states.end() || !(*it == c)) return -1;
    return static_cast<int>(it - states.begin());
}

int TwoElectronBasis::index_of(Config c) const {
    int i = find(c);
    if (i < 0) throw std::out_of_range("TwoElectronBasis: configuration not in basis");
    return i;
}

TwoElectronBasis enumerate_basis(int n_dots, BasisMode mode) {
    if (n_dots < 1) throw std::invalid_argument("enumerate_basis: n_dots must be >= 1");
    TwoElectronBasis basis;
    basis.n_dots = n_dots;
    basis.mode = mode;
    std::vector<Orbital> orbs;
    for (int k = 0; k < n_dots; ++k)
        for (int s = 0; s < 2; ++s) orbs.push_back({k, s});
    for (size_t i = 0; i < orbs.size(); ++i) {
        for (size_t j = i + 1; j < orbs.size(); ++j) {
            if (orbs[i].dot == orbs[j].dot && mode == BasisMode::Strict) continue;
            basis.states.push_back({orbs[i], orbs[j]});
        }
    }
    return basis;
}

void TwoElectronState::require_normalized(double tol) const {
    if (std::abs(norm2() - 1.0) > tol)
        throw std::invalid_argument("TwoElectronState: not normalized");
}

TwoElectronState product_state(const TwoElectronBasis& basis, complex<double> alpha,
                               complex<double> beta, complex<double> gamma,
                               complex<double> delta, int control_dot, int target_dot) {
    TwoElectronState st;
    st.amplitudes = Eigen::VectorXcd::Zero(basis.size());
    auto put = [&](int sc, int stgt, complex<double> amp) {
        st.amplitudes[basis.index_of({{control_dot, sc}, {target_dot, stgt}})] += amp;
    };
    put(0, 0, alpha * gamma);
    put(0, 1, alpha * delta);
    put(1, 0, beta * gamma);
    put(1, 1, beta * delta);
    return st;
}

GateOp GateOp::hop(int spin, int k, int l, double phase) {
    GateOp op;
    op.kind = Kind::Hop;
    op.spin = spin;
    op.dot_k = k;
    op.dot_l = l;
    op.phase = phase;
    return op;
}

GateOp GateOp::rotation(int dot, double phase) {
    GateOp op;
    op.kind = Kind::Rotation;
    op.dot = dot;
    op.phase = phase;
    return op;
}

std::string GateOp::label() const {
    std::ostringstream oss;
    if (kind == Kind::Hop)
        oss << "C" << spin << spin << "(" << dot_k + 1 << "-" << dot_l + 1 << ")";
    else
        oss << "R(" << dot + 1 << ")";
    return oss.str();
}

GateOp parse_gate_token(const std::string& token, int n_dots) {
    auto check_dot = [&](int d) {
        if (d < 0 || d >= n_dots)
            throw std::invalid_argument("gate token '" + token + "': dot out of range");
        return d;
    };
    if (token == "C1") return GateOp::hop(1, 0, 1);
    if (token == "C2") return GateOp::hop(1, 1, 2);
    if (token == "C3") return GateOp::hop(0, 1, 2);
    if (token == "RT") return GateOp::rotation(2);
    if (token.rfind("C:", 0) == 0) {
        int spin, k, l;
        char dash;
        std::istringstream iss(token.substr(2));
        char colon;
        if ((iss >> spin >> colon >> k >> dash >> l) && colon == ':' && dash == '-' &&
            (spin == 0 || spin == 1)) {
            k = check_dot(k - 1);
            l = check_dot(l - 1);
            if (std::abs(k - l) != 1)
                throw std::invalid_argument("gate token '" + token + "': dots not adjacent");
            return GateOp::hop(spin, k, l);
        }
    } else if (token.rfind("R:", 0) == 0) {
        int d;
        std::istringstream iss(token.substr(2));
        if (iss >> d) return GateOp::rotation(check_dot(d - 1));
    }
    throw std::invalid_argument("unrecognized gate token '" + token + "'");
}

std::vector<GateOp> cnot_sequence() {
    // Drive phases calibrated against the ideal real-swap CN: all pulses at
    // phase 0 except the closing C1 at pi/2.  With these phases the pulsed
    // sequence has unit fidelity on every product input in the
    // infinite-selectivity limit.
    return {
        GateOp::hop(1, 0, 1), GateOp::hop(1, 1, 2), GateOp::hop(0, 1, 2),
        GateOp::rotation(2),
        GateOp::hop(0, 1, 2), GateOp::hop(1, 1, 2), GateOp::hop(1, 0, 1, M_PI / 2.0),
    };
}

namespace {

// Image of one configuration under the ideal op, or -1 for identity.
int ideal_image(const TwoElectronBasis& basis, const GateOp& op, const Config& c) {
    if (op.kind == GateOp::Kind::Hop) {
        const Orbital at_k{op.dot_k, op.spin};
        const Orbital at_l{op.dot_l, op.spin};
        const bool k_occ = c.holds(at_k), l_occ = c.holds(at_l);
        if (k_occ == l_occ) return -1;  // nothing to move, or Pauli blocked
        const Orbital src = k_occ ? at_k : at_l;
        const Orbital dst = k_occ ? at_l : at_k;
        const Orbital other = (c.a == src) ? c.b : c.a;
        if (other.dot == dst.dot) return -1;  // destination dot occupied
        Config moved{dst, other};
        return basis.index_of(moved);
    }
    // Rotation: flip the spin of a singly-occupied dot.
    const bool a_here = c.a.dot == op.dot, b_here = c.b.dot == op.dot;
    if (a_here == b_here) return -1;  // empty or doubly occupied
    const Orbital src = a_here ? c.a : c.b;
    const Orbital other = a_here ? c.b : c.a;
    Config flipped{{src.dot, 1 - src.spin}, other};
    return basis.index_of(flipped);
}

}  // namespace

TwoElectronState apply_ideal(const TwoElectronBasis& basis, const GateOp& op,
                             const TwoElectronState& state) {
    state.require_normalized();
    TwoElectronState out;
    out.amplitudes = Eigen::VectorXcd::Zero(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        int j = ideal_image(basis, op, basis.states[static_cast<size_t>(i)]);
        out.amplitudes[j < 0 ? i : j] += state.amplitudes[i];
    }
    return out;
}

std::vector<TwoElectronState> cnot_ideal_trace(const TwoElectronBasis& basis,
                                               const TwoElectronState& state) {
    std::vector<TwoElectronState> steps;
    steps.push_back(state);
    for (const GateOp& op : cnot_sequence())
        steps.push_back(apply_ideal(basis, op, steps.back()));
    return steps;
}

TwoElectronState cnot_ideal(const TwoElectronBasis& basis, const TwoElectronState& state) {
    constexpr int control_dot = 0, swap_dot = 1, target_dot = 2;
    state.require_normalized();
    for (int i = 0; i < basis.size(); ++i) {
        if (std::abs(state.amplitudes[i]) == 0.0) continue;
        const Config& c = basis.states[static_cast<size_t>(i)];
        if (c.dot_occupied(swap_dot))
            throw std::invalid_argument("cnot_ideal: swap dot must start empty");
        if (!c.dot_occupied(control_dot) || !c.dot_occupied(target_dot))
            throw std::invalid_argument(
                "cnot_ideal: need one electron in the control dot and one in the target dot");
    }
    TwoElectronState out = state;
    for (const GateOp& op : cnot_sequence()) out = apply_ideal(basis, op, out);
    return out;
}

Eigen::Vector2cd rotate_qubit(const Eigen::Vector2cd& spinor, double angle) {
    // e^{i angle/2} exp(-i angle sx / 2): pi gives the exact real 0<->1 swap,
    // 2*pi the exact identity.
    const complex<double> ph = std::exp(complex<double>(0.0, 0.5 * angle));
    const complex<double> diag = ph * std::cos(0.5 * angle);
    const complex<double> off = ph * complex<double>(0.0, -std::sin(0.5 * angle));
    Eigen::Vector2cd out;
    out[0] = diag * spinor[0] + off * spinor[1];
    out[1] = off * spinor[0] + diag * spinor[1];
    return out;
}

TwoElectronState one_bit_rotation(const TwoElectronBasis& basis,
                                  const TwoElectronState& state, int dot, double angle) {
    state.require_normalized();
    const complex<double> ph = std::exp(complex<double>(0.0, 0.5 * angle));
    const complex<double> diag = ph * std::cos(0.5 * angle);
    const complex<double> off = ph * complex<double>(0.0, -std::sin(0.5 * angle));
    TwoElectronState out;
    out.amplitudes = Eigen::VectorXcd::Zero(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const complex<double> amp = state.amplitudes[i];
        if (amp == 0.0) continue;
        const Config& c = basis.states[static_cast<size_t>(i)];
        const bool a_here = c.a.dot == dot, b_here = c.b.dot == dot;
        if (a_here == b_here) {  // empty or doubly occupied: identity
            out.amplitudes[i] += amp;
            continue;
        }
        const Orbital src = a_here ? c.a : c.b;
        const Orbital other = a_here ? c.b : c.a;
        const int flipped = basis.index_of({{dot, 1 - src.spin}, other});
        out.amplitudes[i] += diag * amp;
        out.amplitudes[flipped] += off * amp;
    }
    return out;
}

double fidelity(const TwoElectronState& a, const TwoElectronState& b) {
    a.require_normalized();
    b.require_normalized();
    return std::norm(a.amplitudes.dot(b.amplitudes));
}

// ---------------------------------------------------------------------------
// Pulsed evolution
// ---------------------------------------------------------------------------

namespace {

struct Link {
    int a = 0, b = 0;           // basis indices, a < b
    complex<double> coupling;   // meV, includes the drive phase
    double delta_omega = 0.0;   // rad/ps, detuning of the slow RWA term
};

double config_energy(const SpinLevelTable& table, const Config& c, double U) {
    double e = table.level(c.a.spin, c.a.dot) + table.level(c.b.spin, c.b.dot);
    if (c.doubly_occupied()) e += U;
    return e;
}

// All single-electron moves of one kind, as unordered basis index pairs.
template <class MoveTargets>
std::vector<std::pair<int, int>> collect_links(const TwoElectronBasis& basis,
                                               MoveTargets&& targets_of) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < basis.size(); ++i) {
        const Config& c = basis.states[static_cast<size_t>(i)];
        for (int e = 0; e < 2; ++e) {
            const Orbital src = e == 0 ? c.a : c.b;
            const Orbital other = e == 0 ? c.b : c.a;
            for (Orbital dst : targets_of(src)) {
                if (dst == other) continue;  // Pauli
                int j = basis.find({dst, other});
                if (j < 0 || j == i) continue;
                out.emplace_back(std::min(i, j), std::max(i, j));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

PulsedResult evolve_pulsed(const SpinLevelTable& table, double B1, double T_sw,
                           const std::vector<GateOp>& sequence,
                           const TwoElectronState& initial, double U,
                           const PulsedOptions& opts, const PhysicalConstants& pc) {
    if (!(U > 0.0)) throw std::invalid_argument("evolve_pulsed: U must be > 0");
    if (!(T_sw > 0.0)) throw std::invalid_argument("evolve_pulsed: T_sw must be > 0");
    initial.require_normalized();
    const int n = table.n_dots();
    const TwoElectronBasis basis = enumerate_basis(n, BasisMode::Extended);
    if (initial.amplitudes.size() != basis.size())
        throw std::invalid_argument("evolve_pulsed: state must live on the extended basis");

    std::vector<double> E_cfg(static_cast<size_t>(basis.size()));
    for (int i = 0; i < basis.size(); ++i)
        E_cfg[static_cast<size_t>(i)] =
            config_energy(table, basis.states[static_cast<size_t>(i)], U);

    // The optical field couples every same-spin adjacent-dot hop; the
    // rotational field couples every single-occupied dot's spin flip.
    const auto hop_links = collect_links(basis, [&](Orbital src) {
        std::vector<Orbital> t;
        if (src.dot > 0) t.push_back({src.dot - 1, src.spin});
        if (src.dot + 1 < n) t.push_back({src.dot + 1, src.spin});
        return t;
    });
    const auto flip_links = collect_links(basis, [&](Orbital src) {
        return std::vector<Orbital>{{src.dot, 1 - src.spin}};
    });

    // The flip coupling depends on which dot flips; recover it per link.
    auto flip_dot = [&](int ia, int ib) {
        const Config& ca = basis.states[static_cast<size_t>(ia)];
        const Config& cb = basis.states[static_cast<size_t>(ib)];
        for (int d = 0; d < n; ++d) {
            const bool a0 = ca.holds({d, 0}), a1 = ca.holds({d, 1});
            const bool b0 = cb.holds({d, 0}), b1 = cb.holds({d, 1});
            if (a0 != b0 && a1 != b1) return d;
        }
        throw std::logic_error("evolve_pulsed: no flipped dot on magnetic link");
    };

    const double hbar_W_op = M_PI * pc.hbar / T_sw;

    TwoElectronState psi = initial;
    PulsedResult result;
    double t_global = 0.0;

    for (const GateOp& op : sequence) {
        double omega_drive = 0.0, duration = 0.0;
        std::vector<Link> links;
        if (op.kind == GateOp::Kind::Hop) {
            omega_drive =
                std::abs(transition_energy(table, op.spin, op.spin, op.dot_k, op.dot_l)) /
                pc.hbar;
            duration = T_sw;  // pi / W_op
            links.reserve(hop_links.size());
            for (auto [ia, ib] : hop_links)
                links.push_back({ia, ib, 0.5 * hbar_W_op, 0.0});
        } else {
            const double g_t = table.g_values[op.dot];
            const double rabi = std::abs(g_t) * pc.mu_B * B1;
            if (!(rabi > 0.0))
                throw std::invalid_argument("evolve_pulsed: zero magnetic Rabi energy");
            omega_drive = std::abs(transition_energy(table, 0, 1, op.dot, op.dot)) / pc.hbar;
            duration = M_PI * pc.hbar / rabi;
            links.reserve(flip_links.size());
            for (auto [ia, ib] : flip_links)
                links.push_back({ia, ib, 0.5 * table.g_values[flip_dot(ia, ib)] * pc.mu_B * B1, 0.0});
        }

        // RWA in the interaction picture: H_ab(t) = c e^{i(w_ab - s w)t} e^{-i s phi}
        // with s = sign(w_ab); the counter-rotating term is dropped.
        for (Link& lk : links) {
            const double w_ab =
                (E_cfg[static_cast<size_t>(lk.a)] - E_cfg[static_cast<size_t>(lk.b)]) / pc.hbar;
            const double s = w_ab >= 0.0 ? 1.0 : -1.0;
            lk.delta_omega = w_ab - s * omega_drive;
            lk.coupling *= std::exp(complex<double>(0.0, -s * op.phase));
        }
        // Far-detuned couplings are dropped; their population and phase
        // contributions are below secular_cutoff and cutoff^2.
        std::erase_if(links, [&](const Link& lk) {
            return std::abs(lk.coupling) <
                   opts.secular_cutoff * pc.hbar * std::abs(lk.delta_omega);
        });

        double max_w = 0.0;
        for (const Link& lk : links) max_w = std::max(max_w, std::abs(lk.delta_omega));
        long n_steps = std::max<long>(
            opts.min_steps_per_pulse,
            static_cast<long>(std::ceil(max_w * duration / opts.max_phase_per_step)));
        const double dt = duration / double(n_steps);

        auto deriv = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
            Eigen::VectorXcd d = Eigen::VectorXcd::Zero(y.size());
            const complex<double> minus_i_over_hbar{0.0, -1.0 / pc.hbar};
            for (const Link& lk : links) {
                const complex<double> h =
                    lk.coupling * std::exp(complex<double>(0.0, lk.delta_omega * t));
                d[lk.a] += minus_i_over_hbar * h * y[lk.b];
                d[lk.b] += minus_i_over_hbar * std::conj(h) * y[lk.a];
            }
            return d;
        };

        const long sample_every = std::max<long>(1, n_steps / opts.trace_samples_per_pulse);
        for (long step = 0; step < n_steps; ++step) {
            if (step % sample_every == 0) {
                result.trace.times.push_back(t_global);
                const auto row = result.trace.populations.rows();
                result.trace.populations.conservativeResize(row + 1, basis.size());
                result.trace.populations.row(row) = psi.amplitudes.cwiseAbs2().transpose();
            }
            psi.amplitudes = rk4_step(psi.amplitudes, t_global, dt, deriv);
            t_global += dt;
        }
        if (std::abs(psi.norm2() - 1.0) > 1e-6)
            throw std::runtime_error("evolve_pulsed: trace drift exceeds 1e-6; reduce step size");
    }

    result.trace.times.push_back(t_global);
    const auto row = result.trace.populations.rows();
    result.trace.populations.conservativeResize(row + 1, basis.size());
    result.trace.populations.row(row) = psi.amplitudes.cwiseAbs2().transpose();

    result.leakage = 0.0;
    for (int i = 0; i < basis.size(); ++i)
        if (basis.states[static_cast<size_t>(i)].doubly_occupied())
            result.leakage += std::norm(psi.amplitudes[i]);
    result.final_state = std::move(psi);
    return result;
}

PulsedResult evolve_pulsed(const StackDesign& stack, const std::vector<GateOp>& sequence,
                           const TwoElectronState& initial, double U,
                           const PulsedOptions& opts, const PhysicalConstants& pc) {
    return evolve_pulsed(level_table(stack, pc), stack.B1, stack.T_sw, sequence, initial, U,
                         opts, pc);
}

}  // namespace qd
