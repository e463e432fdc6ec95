#pragma once

#include "qappell/alsalamcarlitz.hpp"
#include "qappell/family.hpp"
#include "qappell/quasi.hpp"
#include "qappell/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qappell {

/// Verification checks, combinable as a bit mask.
enum class Check : unsigned {
    Appell = 1u,        ///< D_q P_n = [n]_q P_{n-1}
    Quasi = 2u,         ///< moment-functional quasi-orthogonality
    Rec31 = 4u,         ///< extended recurrence and its coefficient laws
    RieszChihara = 8u,  ///< two-term decomposition and connection roundtrip
};

inline constexpr unsigned kAllChecks = 15u;

/// Report tag: "appell", "quasi", "3.1" or "3.2".
std::string theorem_tag(Check check);
/// Parses "appell", "quasi", "rec31", "rieszchihara" or "all" into a mask.
unsigned check_mask_from_string(const std::string& name);

struct CheckReport {
    std::string theorem;
    Json params;
    bool pass = false;
    Json first_failure;  ///< null when pass

    Json to_json() const;
};

/// (alpha, beta) of the orthogonal family a construction record refers to;
/// an Al-Salam--Carlitz record with parameter a maps to (a, 1).
std::pair<Rational, Rational> related_scaling(const Provenance& provenance);
QParam provenance_q(const Provenance& provenance);

PolyFamily related_orthogonal_family(const Provenance& provenance, std::size_t max_degree);
/// mu_0..mu_M of the related orthogonal family.
MomentFunctional related_moments(const Provenance& provenance, std::size_t max_moment);

/// Runs the selected checks in the fixed order appell, quasi, 3.1, 3.2.
/// The seed picks the evaluation points of the Appell spot checks.
std::vector<CheckReport> run_checks(const PolyFamily& family, unsigned mask, std::uint64_t seed);

std::string render_reports(const std::vector<CheckReport>& reports, Format format);

}  // namespace qappell
