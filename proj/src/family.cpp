#include "qappell/family.hpp"

#include "qappell/error.hpp"

#include <utility>

namespace qappell {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::AscRecurrence: return "asc";
        case FamilyKind::AscHypergeom: return "asc-hypergeom";
        case FamilyKind::Scaled: return "scaled";
        case FamilyKind::Quasi: return "quasi";
        case FamilyKind::Reconstructed: return "reconstructed";
        case FamilyKind::External: return "external";
    }
    return "external";
}

FamilyKind family_kind_from_string(const std::string& name) {
    for (auto kind : {FamilyKind::AscRecurrence, FamilyKind::AscHypergeom, FamilyKind::Scaled,
                      FamilyKind::Quasi, FamilyKind::Reconstructed, FamilyKind::External}) {
        if (to_string(kind) == name) return kind;
    }
    throw ParseError("unknown family kind '" + name + "'");
}

PolyFamily::PolyFamily(std::vector<QPoly> members, Provenance provenance)
    : members_(std::move(members)), provenance_(std::move(provenance)) {
    if (members_.empty()) throw MalformedFamily("a polynomial family needs at least P_0");
    for (std::size_t n = 0; n < members_.size(); ++n) {
        if (members_[n].degree() != static_cast<long>(n)) {
            throw MalformedFamily("member " + std::to_string(n) + " has degree " +
                                  std::to_string(members_[n].degree()) + ", expected " +
                                  std::to_string(n));
        }
    }
}

PolyFamily PolyFamily::with_provenance(Provenance provenance) const {
    return PolyFamily(members_, std::move(provenance));
}

std::vector<Rational> basis_coordinates(const QPoly& f, const PolyFamily& family) {
    if (f.degree() > static_cast<long>(family.max_index())) {
        throw DegreeOverflow("degree " + std::to_string(f.degree()) +
                             " exceeds the basis size " + std::to_string(family.size()));
    }
    std::vector<Rational> coords(family.size());
    QPoly rest = f;
    while (!rest.is_zero()) {
        const auto k = static_cast<std::size_t>(rest.degree());
        const Rational ck = rest.leading() / family[k].leading();
        coords[k] = ck;
        rest -= family[k] * ck;
    }
    return coords;
}

}  // namespace qappell
