#ifndef CERLAB_REPORT_HPP
#define CERLAB_REPORT_HPP

#include "acyclicity.hpp"
#include "cuts.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "verify.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cerlab {

// Run artifacts are the JSON documents written by `verify` (an array of
// per-fixture verdicts) and `cuts` (one certificate bundle). A report
// re-derives every claim they make from the data they carry.

inline Json verdict_to_json(const std::string &name, const Hypergraph &g, const ExtensionVerdict &v)
{
    Json j{{"fixture", name},
           {"graph", hypergraph_to_json(g)},
           {"alpha_acyclic", is_alpha_acyclic(g)},
           {"verdict", to_string(v.status)},
           {"evidence", v.evidence},
           {"checked", v.checked},
           {"log", v.log}};
    if (v.status == ExtensionVerdict::Status::not_extension) {
        j["inequality"] = v.inequality->to_string();
        j["lp_value"] = to_string(v.lp_value);
        j["ip_value"] = to_string(v.ip_value);
        j["gap"] = to_string(v.gap());
        j["point"] = point_to_json(v.fractional_point);
    }
    return j;
}

struct VerifyRow {
    std::string fixture;
    bool alpha_acyclic = false;
    std::string verdict;
    std::string gap = "-";
    bool revalidated = false;
    std::string note;
};

struct CutRow {
    std::string inequality;
    std::string valid = "-", facet = "-", cg = "-";
    bool revalidated = false;
    std::string note;
};

struct Report {
    std::vector<VerifyRow> verify;
    std::vector<CutRow> cuts;

    bool empty() const { return verify.empty() && cuts.empty(); }

    bool all_revalidated() const
    {
        for (const auto &r : verify)
            if (!r.revalidated)
                return false;
        for (const auto &r : cuts)
            if (!r.revalidated)
                return false;
        return true;
    }

    std::string to_text() const
    {
        std::ostringstream s;
        if (!verify.empty()) {
            s << "fixture\talpha-acyclic\tverdict\tgap\trecheck\n";
            for (const auto &r : verify)
                s << r.fixture << "\t" << (r.alpha_acyclic ? "yes" : "no") << "\t" << r.verdict << "\t" << r.gap << "\t"
                  << (r.revalidated ? "ok" : "FAILED: " + r.note) << "\n";
        }
        if (!cuts.empty()) {
            if (!verify.empty())
                s << "\n";
            s << "inequality\tvalid\tfacet\tcg\trecheck\n";
            for (const auto &r : cuts)
                s << r.inequality << "\t" << r.valid << "\t" << r.facet << "\t" << r.cg << "\t"
                  << (r.revalidated ? "ok" : "FAILED: " + r.note) << "\n";
        }
        return s.str();
    }

    Json to_json() const
    {
        Json v = Json::array(), c = Json::array();
        for (const auto &r : verify)
            v.push_back({{"fixture", r.fixture},
                         {"alpha_acyclic", r.alpha_acyclic},
                         {"verdict", r.verdict},
                         {"gap", r.gap},
                         {"revalidated", r.revalidated},
                         {"note", r.note}});
        for (const auto &r : cuts)
            c.push_back({{"inequality", r.inequality},
                         {"valid", r.valid},
                         {"facet", r.facet},
                         {"cg", r.cg},
                         {"revalidated", r.revalidated},
                         {"note", r.note}});
        return Json{{"verify", v}, {"cuts", c}, {"all_revalidated", all_revalidated()}};
    }
};

namespace detail {

inline const Json &field(const Json &j, const std::string &key)
{
    require(j.is_object() && j.contains(key), "artifact entry misses \"" + key + "\"");
    return j.at(key);
}

inline std::string string_field(const Json &j, const std::string &key)
{
    const Json &x = field(j, key);
    require(x.is_string(), "\"" + key + "\" must be a string");
    return x.get<std::string>();
}

inline bool bool_field(const Json &j, const std::string &key)
{
    const Json &x = field(j, key);
    require(x.is_boolean(), "\"" + key + "\" must be a boolean");
    return x.get<bool>();
}

inline Hypergraph artifact_graph(const Json &entry)
{
    if (entry.contains("graph"))
        return hypergraph_from_json(entry.at("graph"));
    return fixture(string_field(entry, "fixture"));
}

inline VerifyRow recheck_verdict(const Json &entry)
{
    VerifyRow row;
    row.fixture = string_field(entry, "fixture");
    row.verdict = string_field(entry, "verdict");
    if (row.verdict == "skipped") {
        row.revalidated = true;
        row.note = entry.value("reason", "");
        if (entry.contains("graph"))
            row.alpha_acyclic = is_alpha_acyclic(artifact_graph(entry));
        return row;
    }
    const Hypergraph g = artifact_graph(entry);
    row.alpha_acyclic = is_alpha_acyclic(g);
    if (bool_field(entry, "alpha_acyclic") != row.alpha_acyclic) {
        row.note = "acyclicity claim disagrees";
        return row;
    }
    if (row.verdict == "inconclusive") {
        row.revalidated = true;
        return row;
    }
    if (row.verdict == "extension") {
        try {
            ExtensionVerdict again = check_extension(g, VerifyMode::exact);
            row.revalidated = again.status == ExtensionVerdict::Status::extension;
            row.note = row.revalidated ? "" : "exact check finds a gap";
        } catch (const SizeGuard &) {
            row.revalidated = row.alpha_acyclic;
            row.note = row.revalidated ? "" : "graph has an alpha-cycle";
        }
        return row;
    }
    require(row.verdict == "not-extension", "unknown verdict '" + row.verdict + "'");
    ExtensionVerdict v;
    v.inequality = parse_inequality(string_field(entry, "inequality"));
    v.fractional_point = point_from_json(field(entry, "point"));
    v.lp_value = parse_rational(string_field(entry, "lp_value"));
    v.ip_value = parse_rational(string_field(entry, "ip_value"));
    row.gap = to_string(v.gap());
    try {
        recheck_not_extension(g, cer(g), v);
        const LinearInequality le = v.inequality->as_le();
        if (le.lhs().evaluate(v.fractional_point) != v.lp_value)
            throw VerificationFailure("lp value is not attained at the point");
        if (max_over_points(mp_vertices(g), le.lhs()) != v.ip_value)
            throw VerificationFailure("ip value is not the binary maximum");
        row.revalidated = true;
    } catch (const VerificationFailure &e) {
        row.note = e.what();
    }
    return row;
}

inline std::vector<CutRow> recheck_cuts(const Json &bundle)
{
    const Hypergraph support = hypergraph_from_json(field(bundle, "support"));
    const Json &list = field(bundle, "inequalities");
    require(list.is_array(), "\"inequalities\" must be an array");
    std::optional<Polyhedron> relaxation;
    std::vector<CutRow> rows;
    for (const auto &item : list) {
        CutRow row;
        row.inequality = string_field(item, "inequality");
        const LinearInequality c = parse_inequality(row.inequality);
        std::vector<std::string> wrong;
        auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
        if (item.contains("valid")) {
            const bool claim = bool_field(item, "valid");
            row.valid = yes_no(claim);
            if (validity_certificate(support, c).valid != claim)
                wrong.push_back("validity");
        }
        if (item.contains("facet")) {
            const bool claim = bool_field(field(item, "facet"), "facet");
            row.facet = yes_no(claim);
            if (facet_certificate(support, c).facet != claim)
                wrong.push_back("facet");
        }
        if (item.contains("cg")) {
            const bool claim = bool_field(field(item, "cg"), "cg");
            row.cg = yes_no(claim);
            if (!relaxation)
                relaxation = cer(support);
            if (check_cg_cut(*relaxation, c).is_cg != claim)
                wrong.push_back("cg");
        }
        row.revalidated = wrong.empty();
        for (const auto &w : wrong)
            row.note += (row.note.empty() ? "" : ",") + w;
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail

/// Re-validates a bundle of run artifacts. Malformed documents throw
/// InvalidArgument; claims that fail to re-derive are marked in the rows.
inline Report build_report(const std::vector<Json> &artifacts)
{
    Report report;
    try {
        for (const Json &a : artifacts) {
            if (a.is_array()) {
                for (const Json &entry : a)
                    report.verify.push_back(detail::recheck_verdict(entry));
            } else if (a.is_object() && a.contains("inequalities")) {
                auto rows = detail::recheck_cuts(a);
                report.cuts.insert(report.cuts.end(), rows.begin(), rows.end());
            } else {
                throw InvalidArgument("neither a verify nor a cuts artifact");
            }
        }
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(std::string("corrupt bundle: ") + e.what());
    } catch (const Json::exception &e) {
        throw InvalidArgument(std::string("corrupt bundle: ") + e.what());
    }
    return report;
}

} // namespace cerlab

#endif
