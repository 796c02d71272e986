#include "qd/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qd {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void note(SelectivityReport& rep, double actual, double threshold,
          const std::string& constraint, const std::string& subject) {
    rep.margin_meV = std::min(rep.margin_meV, actual - threshold);
    if (actual < threshold)
        rep.violations.push_back({constraint, subject, actual, threshold});
}

void finish(SelectivityReport& rep) { rep.pass = rep.violations.empty(); }

}  // namespace

void StackDesign::validate() const {
    if (dots.empty()) throw std::invalid_argument("StackDesign: at least one dot");
    if (B < 0.0) throw std::invalid_argument("StackDesign: B must be >= 0");
    if (!(T_sw > 0.0)) throw std::invalid_argument("StackDesign: T_sw must be > 0");
    for (const auto& d : dots) d.validate();
}

SpinLevelTable level_table_from_values(const Eigen::VectorXd& E_k,
                                       const Eigen::VectorXd& g_k, double B,
                                       const PhysicalConstants& pc) {
    if (E_k.size() != g_k.size())
        throw std::invalid_argument("level_table_from_values: size mismatch");
    SpinLevelTable t;
    const auto n = E_k.size();
    t.quantization_energies = E_k;
    t.g_values = g_k;
    t.B = B;
    t.levels.resize(n, 2);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double zeeman = pc.mu_B * g_k[k] * B / 2.0;
        t.levels(k, 0) = E_k[k] + zeeman;  // (-1)^0, spin up
        t.levels(k, 1) = E_k[k] - zeeman;  // (-1)^1, spin down
    }
    return t;
}

SpinLevelTable level_table(const StackDesign& stack, const PhysicalConstants& pc) {
    stack.validate();
    const auto n = static_cast<Eigen::Index>(stack.dots.size());
    Eigen::VectorXd E_k(n), g_k(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        DotLevels dl = solve_dot(stack.dots[static_cast<size_t>(k)], pc);
        E_k[k] = dl.E_k;
        g_k[k] = dl.g_zz;
    }
    return level_table_from_values(E_k, g_k, stack.B, pc);
}

double transition_energy(const SpinLevelTable& table, int i, int j, int k, int l) {
    const int n = table.n_dots();
    if (i < 0 || i > 1 || j < 0 || j > 1 || k < 0 || k >= n || l < 0 || l >= n)
        throw std::out_of_range("transition_energy: index out of range");
    return table.level(i, k) - table.level(j, l);
}

std::vector<std::pair<int, int>> all_adjacent_pairs(int n_dots) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k + 1 < n_dots; ++k) out.emplace_back(k, k + 1);
    return out;
}

std::vector<PairTransitions> adjacent_transitions(const SpinLevelTable& table) {
    std::vector<PairTransitions> rows;
    for (auto [k, l] : all_adjacent_pairs(table.n_dots())) {
        rows.push_back({k, l, transition_energy(table, 0, 0, k, l),
                        transition_energy(table, 1, 1, k, l)});
    }
    return rows;
}

SelectivityReport check_rotation_selectivity(const SpinLevelTable& table, double B,
                                             double B1, const PhysicalConstants& pc) {
    SelectivityReport rep;
    rep.margin_meV = std::numeric_limits<double>::infinity();
    const int n = table.n_dots();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double sep = std::abs(table.g_values[i] - table.g_values[j]) * pc.mu_B * B;
            const double thr = kSqrt3 * std::abs(table.g_values[i]) * pc.mu_B * B1;
            std::ostringstream subject;
            subject << "dots " << i + 1 << "," << j + 1;
            note(rep, sep, thr, "rotation", subject.str());
        }
    }
    finish(rep);
    return rep;
}

SelectivityReport check_rotation_selectivity(const StackDesign& stack,
                                             const PhysicalConstants& pc) {
    if (stack.dots.size() < 2)
        throw std::invalid_argument("check_rotation_selectivity: need at least 2 dots");
    return check_rotation_selectivity(level_table(stack, pc), stack.B, stack.B1, pc);
}

SelectivityReport check_optical_selectivity(const std::vector<PairTransitions>& rows,
                                            double T_sw, OpticalMode mode,
                                            const PhysicalConstants& pc) {
    if (rows.empty())
        throw std::invalid_argument("check_optical_selectivity: no driven pairs");
    if (!(T_sw > 0.0))
        throw std::invalid_argument("check_optical_selectivity: T_sw must be > 0");
    SelectivityReport rep;
    rep.margin_meV = std::numeric_limits<double>::infinity();
    const double hbar_W_op = M_PI * pc.hbar / T_sw;

    auto pair_name = [](const PairTransitions& r, int spin) {
        std::ostringstream oss;
        oss << (spin == 0 ? "00" : "11") << "(" << r.k + 1 << "-" << r.l + 1 << ")";
        return oss.str();
    };

    // Same dot pair, opposite spins: two-level detuning condition.
    for (const auto& r : rows) {
        const double sep = std::abs(std::abs(r.dE00) - std::abs(r.dE11));
        note(rep, sep, kSqrt3 * hbar_W_op, "spin-pair",
             pair_name(r, 0) + " vs " + pair_name(r, 1));
    }

    // Same spin, transitions sharing a dot: Vee-system condition.
    for (size_t a = 0; a < rows.size(); ++a) {
        for (size_t b = a + 1; b < rows.size(); ++b) {
            const bool share = rows[a].k == rows[b].k || rows[a].k == rows[b].l ||
                               rows[a].l == rows[b].k || rows[a].l == rows[b].l;
            if (!share) continue;
            for (int spin = 0; spin < 2; ++spin) {
                const double ea = spin == 0 ? rows[a].dE00 : rows[a].dE11;
                const double eb = spin == 0 ? rows[b].dE00 : rows[b].dE11;
                const double sep = std::abs(std::abs(ea) - std::abs(eb));
                note(rep, sep, 2.0 * kSqrt3 * hbar_W_op, "dot-pair",
                     pair_name(rows[a], spin) + " vs " + pair_name(rows[b], spin));
            }
        }
    }

    if (mode == OpticalMode::Strict) {
        // Every driven transition pairwise separated from every other.
        struct Entry {
            double e;
            std::string name;
        };
        std::vector<Entry> all;
        for (const auto& r : rows) {
            all.push_back({std::abs(r.dE00), pair_name(r, 0)});
            all.push_back({std::abs(r.dE11), pair_name(r, 1)});
        }
        std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.e < b.e; });
        for (size_t a = 0; a + 1 < all.size(); ++a) {
            note(rep, all[a + 1].e - all[a].e, 2.0 * kSqrt3 * hbar_W_op, "strict-gap",
                 all[a].name + " vs " + all[a + 1].name);
        }
    }
    finish(rep);
    return rep;
}

SelectivityReport check_optical_selectivity(const SpinLevelTable& table, double T_sw,
                                            const std::vector<std::pair<int, int>>& driven_pairs,
                                            OpticalMode mode, const PhysicalConstants& pc) {
    std::vector<PairTransitions> rows;
    for (auto [k, l] : driven_pairs) {
        rows.push_back({k, l, transition_energy(table, 0, 0, k, l),
                        transition_energy(table, 1, 1, k, l)});
    }
    return check_optical_selectivity(rows, T_sw, mode, pc);
}

}  // namespace qd
