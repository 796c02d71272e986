#ifndef QD_STACK_DESIGNER_HPP
#define QD_STACK_DESIGNER_HPP

#include <cstdint>
#include <optional>

#include "qd/spectrum.hpp"

namespace qd {

/// Search problem: find N half-widths inside [d_min, d_max] whose spectrum
/// satisfies the rotation and optical selectivity requirements at the given
/// field and pulse budget.
struct DesignProblem {
    int n_dots = 0;
    double B = 0.0;       // tesla
    double B1 = 0.0;      // tesla
    double T_sw = 0.0;    // ps
    MaterialParams well;
    MaterialParams barrier;
    double d_lt = 0.0;    // nm, shared lateral extension
    double d_min = 0.0;   // nm
    double d_max = 0.0;   // nm
    std::uint64_t seed = 0;
    int starts = 64;      // multi-start budget
    int iters = 500;      // objective evaluations per start

    void validate() const;
};

struct DesignReport {
    StackDesign stack;
    std::optional<SelectivityReport> rotation;  // absent in raw-table validation
    SelectivityReport optical;
    std::vector<PairTransitions> table;  // adjacent-pair transition energies
    double worst_margin = 0.0;           // meV, min(actual - threshold)
    bool feasible = false;               // all present reports pass
};

/// Multi-start randomized coordinate descent on the half-width vector,
/// maximizing the worst threshold-normalized constraint margin; the first
/// start reaching feasibility wins (starts examined in index order).
/// Deterministic for a fixed problem, including the seed.  When no start is
/// feasible, returns feasible = false with the best stack found.
DesignReport design_stack(const DesignProblem& problem,
                          const PhysicalConstants& pc = constants());

/// Evaluate one stack against the requirements at switching time T_sw.
DesignReport validate_stack(const StackDesign& stack, double T_sw,
                            const PhysicalConstants& pc = constants());

/// Validate a raw transition-energy table (published data); only the optical
/// requirements apply.
DesignReport validate_table(const std::vector<PairTransitions>& rows, double T_sw,
                            const PhysicalConstants& pc = constants());

}  // namespace qd

#endif
