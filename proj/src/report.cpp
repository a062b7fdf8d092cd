#include "fpsq/report.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "json.hpp"

namespace fpsq {

namespace {

int identity_order(IdentityId id)
{
    switch (id) {
    case IdentityId::LagrangeI: return 0;
    case IdentityId::LagrangeII: return 1;
    case IdentityId::SubstitutionVEqX: return 2;
    case IdentityId::ClosedFormGf: return 3;
    case IdentityId::Main: return 4;
    case IdentityId::GfEqualsHlog: return 5;
    case IdentityId::PolyInM: return 6;
    }
    return 7;
}

nlohmann::ordered_json report_object(const IdentityReport& r)
{
    nlohmann::ordered_json j;
    j["identity"] = std::string(identity_name(r.id));
    if (r.m)
        j["m"] = *r.m;
    else
        j["m"] = "symbolic";
    if (r.n)
        j["n"] = *r.n;
    else
        j["N"] = r.degree.value_or(0);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ok"] = r.pass;
    return j;
}

} // namespace

std::string_view identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::Main: return "MAIN";
    case IdentityId::LagrangeI: return "LAGRANGE_I";
    case IdentityId::LagrangeII: return "LAGRANGE_II";
    case IdentityId::ClosedFormGf: return "CLOSED_FORM_GF";
    case IdentityId::SubstitutionVEqX: return "SUBSTITUTION_V_EQ_X";
    case IdentityId::PolyInM: return "POLY_IN_M";
    case IdentityId::GfEqualsHlog: return "GF_EQUALS_HLOG";
    }
    return "UNKNOWN";
}

IdentityReport make_report(IdentityId id, std::optional<int> m, std::optional<int> n,
                           std::optional<int> degree, std::string lhs, std::string rhs)
{
    IdentityReport r;
    r.id = id;
    r.m = m;
    r.n = n;
    r.degree = degree;
    r.pass = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

std::string report_json(const IdentityReport& r) { return report_object(r).dump(); }

std::string reports_json(const std::vector<IdentityReport>& rs)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs)
        arr.push_back(report_object(r));
    return arr.dump(2);
}

std::string json_string_array(const std::vector<std::string>& items)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : items)
        arr.push_back(s);
    return arr.dump();
}

void sort_reports(std::vector<IdentityReport>& rs)
{
    auto key = [](const IdentityReport& r) {
        // Symbolic m sorts first within its (homogeneous) command output.
        const int m = r.m.value_or(0);
        const int param = r.n ? *r.n : r.degree.value_or(0);
        return std::tuple<int, int, int>(m, param, identity_order(r.id));
    };
    std::stable_sort(rs.begin(), rs.end(),
                     [&](const IdentityReport& a, const IdentityReport& b) { return key(a) < key(b); });
}

} // namespace fpsq
