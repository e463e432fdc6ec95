#include "qappell/appell.hpp"

namespace qappell {

namespace {

QPoly appell_residual(const PolyFamily& family, const QParam& q, std::size_t n) {
    return family[n].hahn_derivative(q) - family[n - 1] * qnum(n, q);
}

}  // namespace

AppellReport check_appell(const PolyFamily& family, const QParam& q) {
    AppellReport report;
    for (std::size_t n = 1; n < family.size(); ++n) {
        QPoly residual = appell_residual(family, q, n);
        if (!residual.is_zero()) {
            report.defect = AppellDefect{n, std::move(residual)};
            return report;
        }
        report.holds_up_to = n;
    }
    return report;
}

std::vector<AppellDefect> appell_defects(const PolyFamily& family, const QParam& q) {
    std::vector<AppellDefect> out;
    for (std::size_t n = 1; n < family.size(); ++n) {
        QPoly residual = appell_residual(family, q, n);
        if (!residual.is_zero()) out.push_back(AppellDefect{n, std::move(residual)});
    }
    return out;
}

}  // namespace qappell
