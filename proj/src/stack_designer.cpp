#include "qd/stack_designer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qd {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Uniform double in [lo, hi) from explicit mantissa bits; stable across
// platforms, unlike std::uniform_real_distribution.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Worst constraint margin normalized by its threshold; >= 0 iff feasible.
// Mirrors check_rotation_selectivity / check_optical_selectivity (Strict).
double normalized_margin(const SpinLevelTable& t, double B, double B1, double T_sw,
                         const PhysicalConstants& pc) {
    double worst = std::numeric_limits<double>::infinity();
    auto add = [&](double actual, double thr) {
        if (thr <= 0.0) return;  // vanishing Rabi energy: constraint is void
        worst = std::min(worst, (actual - thr) / thr);
    };
    const int n = t.n_dots();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                add(std::abs(t.g_values[i] - t.g_values[j]) * pc.mu_B * B,
                    kSqrt3 * std::abs(t.g_values[i]) * pc.mu_B * B1);
    const double hbar_W_op = M_PI * pc.hbar / T_sw;
    std::vector<double> trans;
    for (int k = 0; k + 1 < n; ++k) {
        const double e00 = std::abs(t.level(0, k) - t.level(0, k + 1));
        const double e11 = std::abs(t.level(1, k) - t.level(1, k + 1));
        add(std::abs(e00 - e11), kSqrt3 * hbar_W_op);
        trans.push_back(e00);
        trans.push_back(e11);
    }
    std::sort(trans.begin(), trans.end());
    for (size_t a = 0; a + 1 < trans.size(); ++a)
        add(trans[a + 1] - trans[a], 2.0 * kSqrt3 * hbar_W_op);
    return worst;
}

StackDesign make_stack(const DesignProblem& p, const std::vector<double>& d) {
    StackDesign s;
    s.B = p.B;
    s.B1 = p.B1;
    s.T_sw = p.T_sw;
    for (double hw : d) s.dots.push_back({hw, p.d_lt, p.well, p.barrier});
    return s;
}

}  // namespace

void DesignProblem::validate() const {
    if (n_dots < 2) throw std::invalid_argument("DesignProblem: n_dots must be >= 2");
    if (!(d_min > 0.0) || !(d_min < d_max))
        throw std::invalid_argument("DesignProblem: need 0 < d_min < d_max");
    if (!(T_sw > 0.0)) throw std::invalid_argument("DesignProblem: T_sw must be > 0");
    if (B < 0.0 || B1 < 0.0) throw std::invalid_argument("DesignProblem: fields must be >= 0");
    if (!(d_lt > 0.0)) throw std::invalid_argument("DesignProblem: d_lt must be > 0");
    if (starts < 1 || iters < 1)
        throw std::invalid_argument("DesignProblem: starts and iters must be >= 1");
    well.validate();
    barrier.validate();
}

DesignReport validate_stack(const StackDesign& stack, double T_sw,
                            const PhysicalConstants& pc) {
    DesignReport rep;
    rep.stack = stack;
    const SpinLevelTable table = level_table(stack, pc);
    rep.table = adjacent_transitions(table);
    rep.rotation = check_rotation_selectivity(table, stack.B, stack.B1, pc);
    rep.optical = check_optical_selectivity(table, T_sw, all_adjacent_pairs(table.n_dots()),
                                            OpticalMode::Strict, pc);
    rep.worst_margin = std::min(rep.rotation->margin_meV, rep.optical.margin_meV);
    rep.feasible = rep.rotation->pass && rep.optical.pass;
    return rep;
}

DesignReport validate_table(const std::vector<PairTransitions>& rows, double T_sw,
                            const PhysicalConstants& pc) {
    DesignReport rep;
    rep.table = rows;
    rep.optical = check_optical_selectivity(rows, T_sw, OpticalMode::Strict, pc);
    rep.worst_margin = rep.optical.margin_meV;
    rep.feasible = rep.optical.pass;
    return rep;
}

DesignReport design_stack(const DesignProblem& p, const PhysicalConstants& pc) {
    p.validate();

    auto margin_of = [&](const std::vector<double>& d) {
        return normalized_margin(level_table(make_stack(p, d), pc), p.B, p.B1, p.T_sw, pc);
    };

    std::vector<double> best_d;
    double best_margin = -std::numeric_limits<double>::infinity();

    for (int start = 0; start < p.starts; ++start) {
        std::mt19937_64 rng(p.seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(start + 1));
        std::vector<double> d(static_cast<size_t>(p.n_dots));
        for (double& x : d) x = uniform(rng, p.d_min, p.d_max);
        double m = margin_of(d);
        int evals = 1;
        double step = (p.d_max - p.d_min) / 8.0;
        while (m < 0.0 && evals < p.iters && step > 1e-4) {
            bool improved = false;
            for (size_t k = 0; k < d.size() && evals < p.iters; ++k) {
                for (double sgn : {+1.0, -1.0}) {
                    if (evals >= p.iters || m >= 0.0) break;
                    std::vector<double> cand = d;
                    cand[k] = std::clamp(cand[k] + sgn * step, p.d_min, p.d_max);
                    if (cand[k] == d[k]) continue;
                    const double mc = margin_of(cand);
                    ++evals;
                    if (mc > m) {
                        d = std::move(cand);
                        m = mc;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (m > best_margin) {
            best_margin = m;
            best_d = d;
        }
        if (m >= 0.0) break;  // first feasible start wins
    }

    DesignReport rep = validate_stack(make_stack(p, best_d), p.T_sw, pc);
    return rep;
}

}  // namespace qd
