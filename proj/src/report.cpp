#include "g2abv/report.hpp"

#include <sstream>

namespace g2abv {

namespace {

const std::vector<std::pair<Cond, const char*>>& cond_names() {
    static const std::vector<std::pair<Cond, const char*>> v = {
        {Cond::Always, "always"},       {Cond::Never, "never"},           {Cond::ExponentsZero, "exponents_zero"},
        {Cond::AHalf, "a_is_half"},     {Cond::ChiUnitary, "chi_unitary"}, {Cond::Unknown, "unknown"},
    };
    return v;
}

std::string cond_name(Cond c) {
    for (const auto& [k, n] : cond_names())
        if (k == c) return n;
    return "unknown";
}

Cond parse_cond(const std::string& s) {
    for (const auto& [k, n] : cond_names())
        if (s == n) return k;
    throw Error(Errc::Parse, "unknown condition '" + s + "'");
}

}  // namespace

Json to_json(const Cyclo& c) { return c.to_string(); }

Json to_json(const VirtualChar& v) {
    Json terms = Json::array();
    for (const auto& [pi, c] : v.coeffs) terms.push_back({{"repn", pi.name}, {"coefficient", c.to_string()}});
    return {{"group", group_name(v.group)}, {"terms", terms}, {"text", v.to_string()}};
}

Json to_json(const InfCase& ic) {
    Json roots = Json::array();
    for (const Root& r : ic.r_lambda) roots.push_back(r.to_string());
    return {{"case", case_name(ic.case_id)},
            {"normalizer", ic.normalizer.to_string()},
            {"normalized", ic.normalized.to_string()},
            {"r_lambda", roots},
            {"h", ic.h_group.to_string()},
            {"phv", ic.phv.to_string()}};
}

Json to_json(const LParam& phi) {
    Json j = {{"label", phi.label()},
              {"spec", phi.to_string()},
              {"orbit", phi.orbit},
              {"dim", phi.dim},
              {"a_phi", phi.a_phi.name()},
              {"a_abv", phi.a_abv.name()},
              {"open", phi.is_open},
              {"closed", phi.is_closed},
              {"elliptic", phi.is_elliptic},
              {"arthur", phi.arthur.has_value()}};
    if (phi.arthur) j["s_psi"] = phi.arthur->s_psi;
    return j;
}

Json to_json(const FamilyTable& t) {
    Json rows = Json::array();
    for (const TableRow& r : t.rows)
        rows.push_back({{"group", group_name(r.repn.group)},
                        {"name", r.repn.name},
                        {"sheaf", {{"orbit", r.sheaf.orbit}, {"character", r.sheaf.character}}},
                        {"llc", r.llc},
                        {"abv", r.abv},
                        {"unitary", cond_name(r.unitary)},
                        {"aubert", r.aubert}});
    Json arthur = Json::array();
    for (Cond c : t.arthur) arthur.push_back(cond_name(c));
    return {{"group", group_name(t.group)}, {"family", t.family}, {"phv", t.phv.to_string()},
            {"subs", t.subs},               {"arthur", arthur},   {"rows", rows}};
}

Json to_json(const SuiteReport& r) {
    Json items = Json::array();
    for (const CheckItem& i : r.items)
        items.push_back({{"name", i.name}, {"status", status_name(i.status)}, {"detail", i.detail}});
    return {{"suite", r.suite},
            {"passed", r.passed()},
            {"counts", {{"pass", r.count(Status::Pass)}, {"warn", r.count(Status::Warn)}, {"fail", r.count(Status::Fail)}}},
            {"items", items}};
}

Json to_json(const LiftRecord& r) {
    return {{"triple", triple_family_name(r.triple.family)},
            {"s", r.triple.s.to_string()},
            {"source", r.source.to_string()},
            {"target", r.target.to_string()},
            {"conormal_kind", conormal_kind_name(r.kind)},
            {"column", lift_column_name(r.column)},
            {"xi_conormal", r.xi_conormal},
            {"relative_dim", r.relative_dim}};
}

Json to_json(const EcResult& r) {
    Json terms = Json::array();
    for (const EcTerm& t : r.terms)
        terms.push_back({{"triple", triple_family_name(t.triple.family)},
                         {"source", t.source},
                         {"s", t.s_class},
                         {"s_power", t.s_power},
                         {"coefficient", t.coefficient.to_string()},
                         {"lifted", t.lifted.to_string()}});
    return {{"repn", r.pi.name}, {"terms", terms}, {"round_trip", r.round_trip}};
}

Json envelope(const std::string& command, const Json& result, const std::vector<std::string>& warnings, int status) {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"status", status},
            {"warnings", warnings},
            {"result", result}};
}

Json tables_to_json(const std::vector<FamilyTable>& tables) {
    Json arr = Json::array();
    for (const FamilyTable& t : tables) arr.push_back(to_json(t));
    return {{"schema_version", kSchemaVersion}, {"tables", arr}};
}

Json dump_tables() {
    std::vector<FamilyTable> all = g2_tables();
    for (GroupId g : {GroupId::T, GroupId::GL2_short, GroupId::GL2_long, GroupId::SO4, GroupId::PGL3})
        for (const FamilyTable& t : endoscopic_tables(g)) all.push_back(t);
    return tables_to_json(all);
}

std::vector<FamilyTable> tables_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw Error(Errc::Parse, "unsupported schema version");
    std::vector<FamilyTable> out;
    for (const Json& tj : j.at("tables")) {
        FamilyTable t;
        t.group = parse_group(tj.at("group").get<std::string>());
        t.family = tj.at("family").get<std::string>();
        t.phv = family_phv(t.group, t.family);
        if (t.phv.to_string() != tj.at("phv").get<std::string>())
            throw Error(Errc::Parse, "PHV mismatch for " + group_name(t.group) + ":" + t.family);
        t.subs = tj.at("subs").get<std::vector<std::string>>();
        for (const Json& c : tj.at("arthur")) t.arthur.push_back(parse_cond(c.get<std::string>()));
        for (const Json& rj : tj.at("rows")) {
            TableRow r;
            r.repn = {parse_group(rj.at("group").get<std::string>()), t.family, rj.at("name").get<std::string>()};
            r.sheaf = {rj.at("sheaf").at("orbit").get<std::string>(), rj.at("sheaf").at("character").get<std::string>()};
            r.llc = rj.at("llc").get<std::vector<std::string>>();
            r.abv = rj.at("abv").get<std::vector<std::string>>();
            r.unitary = parse_cond(rj.at("unitary").get<std::string>());
            r.aubert = rj.at("aubert").get<std::string>();
            t.rows.push_back(r);
        }
        out.push_back(t);
    }
    return out;
}

std::string render_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(Status::Pass) << " pass, "
       << r.count(Status::Warn) << " warn, " << r.count(Status::Fail) << " fail)\n";
    for (const CheckItem& i : r.items) {
        os << "  [" << status_name(i.status) << "] " << i.name;
        if (!i.detail.empty()) os << ": " << i.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace g2abv
