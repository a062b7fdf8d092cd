#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpsq {

enum class IdentityId {
    Main,
    LagrangeI,
    LagrangeII,
    ClosedFormGf,
    SubstitutionVEqX,
    PolyInM,
    GfEqualsHlog,
};

// Stable wire name, e.g. "LAGRANGE_I".
std::string_view identity_name(IdentityId id);

// Structured outcome of one verification instance. pass holds exactly when
// lhs and rhs serialize identically.
struct IdentityReport {
    IdentityId id;
    std::optional<int> m;   // nullopt: m is symbolic
    std::optional<int> n;   // exactly one of n / degree is set
    std::optional<int> degree;
    std::string lhs;
    std::string rhs;
    bool pass;
};

IdentityReport make_report(IdentityId id, std::optional<int> m, std::optional<int> n,
                           std::optional<int> degree, std::string lhs, std::string rhs);

// {"identity": ..., "m": int or "symbolic", "n" or "N": int, "lhs": ..., "rhs": ..., "ok": bool}
std::string report_json(const IdentityReport& r);

// Array document, 2-space indent.
std::string reports_json(const std::vector<IdentityReport>& rs);

// JSON array of strings, e.g. for series/polynomial coefficient lists.
std::string json_string_array(const std::vector<std::string>& items);

// Deterministic order: ascending m, then ascending n/N, then the fixed
// identity order (I, II, substitution, closed-form GF).
void sort_reports(std::vector<IdentityReport>& rs);

} // namespace fpsq
