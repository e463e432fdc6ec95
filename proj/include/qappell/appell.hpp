#pragma once

#include "qappell/exactnum.hpp"
#include "qappell/family.hpp"
#include "qappell/qpoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qappell {

struct AppellDefect {
    std::size_t n;
    QPoly residual;  ///< D_q P_n - [n]_q P_{n-1}, nonzero
};

struct AppellReport {
    /// Largest n such that D_q P_k = [k]_q P_{k-1} for every k <= n.
    std::size_t holds_up_to = 0;
    std::optional<AppellDefect> defect;

    bool holds() const noexcept { return !defect.has_value(); }
};

/// Checks D_q P_n = [n]_q P_{n-1} for n = 1..N and stops at the first defect.
/// n = 0 is vacuous: any constant P_0 is annihilated by D_q.
AppellReport check_appell(const PolyFamily& family, const QParam& q);

/// Every defect, in increasing n.
std::vector<AppellDefect> appell_defects(const PolyFamily& family, const QParam& q);

}  // namespace qappell
