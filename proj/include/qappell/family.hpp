#pragma once

#include "qappell/exactnum.hpp"
#include "qappell/qpoly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qappell {

/// How a family was produced. Verification reports name the route and use
/// the recorded parameters to rebuild the related orthogonal family.
enum class FamilyKind {
    AscRecurrence,  ///< U_n^{(a)} by the three-term recurrence
    AscHypergeom,   ///< U_n^{(a)} by the terminating 2phi1 expansion
    Scaled,         ///< beta^n U_n^{(alpha/beta)}(x/beta)
    Quasi,          ///< P_n - ([n]_q/lambda) P_{n-1}
    Reconstructed,  ///< partial connection sums of a quasi family
    External,       ///< read from a file, no construction record
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

struct Provenance {
    FamilyKind kind = FamilyKind::External;
    std::optional<Rational> a{};
    std::optional<Rational> alpha{};
    std::optional<Rational> beta{};
    std::optional<Rational> lambda{};
    std::optional<Rational> q{};

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Finite sequence P_0..P_N with deg P_n = n.
class PolyFamily {
public:
    /// Throws MalformedFamily if some member n does not have degree n.
    PolyFamily(std::vector<QPoly> members, Provenance provenance);

    std::size_t size() const noexcept { return members_.size(); }
    /// Index of the last member.
    std::size_t max_index() const noexcept { return members_.size() - 1; }
    const QPoly& operator[](std::size_t n) const { return members_[n]; }
    const QPoly& at(std::size_t n) const { return members_.at(n); }
    std::span<const QPoly> members() const noexcept { return members_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    /// Same members, different provenance record.
    PolyFamily with_provenance(Provenance provenance) const;

    /// Members are equal; provenance is ignored.
    bool same_members(const PolyFamily& other) const { return members_ == other.members_; }

private:
    std::vector<QPoly> members_;
    Provenance provenance_;
};

/// Coordinates of f in the basis formed by a family: f = sum_k coords[k] P_k.
/// Requires deg f <= family.max_index().
std::vector<Rational> basis_coordinates(const QPoly& f, const PolyFamily& family);

}  // namespace qappell
