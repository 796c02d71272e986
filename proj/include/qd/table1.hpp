#ifndef QD_TABLE1_HPP
#define QD_TABLE1_HPP

#include <array>
#include <vector>

#include "qd/spectrum.hpp"

namespace qd {

/// Published resonant optical transition energies of the 9-dot reference
/// design (adjacent pairs, both conserved spins), in meV.
struct Table1Row {
    int k, l;       // 1-based dot labels
    double dE00;
    double dE11;
};

inline constexpr std::array<Table1Row, 8> kTable1{{
    {1, 2, 13.2029, 12.4829},
    {2, 3, 8.9224, 8.2024},
    {3, 4, 16.5682, 15.8482},
    {4, 5, 14.9201, 14.2001},
    {5, 6, 19.2130, 18.4930},
    {6, 7, 22.1300, 21.4100},
    {7, 8, 24.4699, 23.7499},
    {8, 9, 37.3454, 36.6254},
}};

inline std::vector<PairTransitions> table1_transitions() {
    std::vector<PairTransitions> rows;
    rows.reserve(kTable1.size());
    for (const auto& r : kTable1) rows.push_back({r.k - 1, r.l - 1, r.dE00, r.dE11});
    return rows;
}

}  // namespace qd

#endif
