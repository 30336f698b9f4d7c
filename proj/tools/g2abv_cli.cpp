#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "g2abv/report.hpp"

using namespace g2abv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    Json result = Json::object();
    std::vector<std::string> warnings;
    std::string text;
    int status = kExitPass;
};

std::string coeff_cell(const Cyclo& c) { return c.to_string(); }

Output cmd_classify(const std::string& x, const std::string& y) {
    const TorusElement t{QValue::parse(x), QValue::parse(y)};
    const InfCase c = classify(t);
    Output o;
    o.result = to_json(c);
    o.result["input"] = t.to_string();
    std::ostringstream os;
    os << "lambda(Fr) = " << t.to_string() << "\n"
       << "case " << case_name(c.case_id) << ", H = " << c.h_group.to_string() << ", PHV " << c.phv.to_string() << "\n"
       << "normal form " << c.normalized.to_string() << " via w = " << c.normalizer.to_string() << "\n";
    o.text = os.str();
    return o;
}

Output cmd_packet(const std::string& spec) {
    const LParam phi = parse_param_spec(spec);
    const Properties p = properties(phi);
    Output o;
    o.result = to_json(phi);
    Json lp = Json::array(), ap = Json::array(), cor = Json::array(), minimal = Json::array();
    std::ostringstream os;
    os << phi.to_string() << ": orbit " << phi.orbit << ", dim " << phi.dim << ", A_phi " << phi.a_phi.name()
       << ", A^ABV " << phi.a_abv.name() << "\n";
    os << "flags:" << (p.open ? " open" : "") << (p.closed ? " closed" : "") << (p.elliptic ? " elliptic" : "")
       << (p.arthur ? " arthur" : "") << (p.tempered_bounded ? " tempered" : "") << "\n";
    os << "L-packet:\n";
    for (const auto& [pi, chr] : l_packet(phi)) {
        lp.push_back({{"repn", pi.name}, {"character", chr}});
        os << "  " << pi.name << " -> " << chr << "\n";
    }
    os << "ABV-packet:\n";
    for (const auto& [pi, chr] : abv_packet(phi)) {
        ap.push_back({{"repn", pi.name}, {"character", chr}});
        os << "  " << pi.name << " -> " << chr << "\n";
    }
    for (const RepnLabel& pi : coronal(phi)) cor.push_back(pi.name);
    for (GroupId g : p.minimal_endoscopic_groups) minimal.push_back(group_name(g));
    if (!p.minimal_endoscopic_groups.empty()) {
        os << "minimal endoscopic groups:";
        for (GroupId g : p.minimal_endoscopic_groups) os << " " << group_name(g);
        os << "\n";
    }
    o.result["l_packet"] = lp;
    o.result["abv_packet"] = ap;
    o.result["coronal"] = cor;
    o.result["minimal_endoscopic_groups"] = minimal;
    o.text = os.str();
    return o;
}

Output cmd_coeffs(const std::string& spec) {
    const LParam phi = parse_param_spec(spec);
    Output o;
    Json rows = Json::array();
    std::ostringstream os;
    os << phi.to_string() << " over " << phi.a_abv.name() << "\nrepn";
    for (const std::string& s : phi.a_abv.classes) os << "\t" << s;
    os << "\n";
    for (const auto& [pi, chr] : abv_packet(phi)) {
        Json vals = Json::object();
        os << pi.name;
        for (const std::string& s : phi.a_abv.classes) {
            const Cyclo c = coefficient(phi, s, pi);
            vals[s] = coeff_cell(c);
            os << "\t" << coeff_cell(c);
        }
        os << "\n";
        rows.push_back({{"repn", pi.name}, {"character", chr}, {"values", vals}});
    }
    o.result = {{"param", phi.to_string()}, {"group", phi.a_abv.name()}, {"classes", phi.a_abv.classes}, {"rows", rows}};
    o.text = os.str();
    return o;
}

Output cmd_theta(const std::string& spec, const std::string& s) {
    const LParam phi = parse_param_spec(spec);
    const VirtualChar v = theta(phi, s);
    Output o;
    o.result = {{"param", phi.to_string()}, {"s", s}, {"theta", to_json(v)}};
    o.text = "Theta[" + phi.label() + ", " + s + "] = " + v.to_string() + "\n";
    if (phi.arthur) {
        const ArthurCheck a = theta_arthur_check(phi, s);
        o.result["arthur_identity"] = a.holds;
        o.text += std::string("Arthur identity (s_psi = ") + a.s_psi + "): " + (a.holds ? "holds" : "FAILS") + "\n";
        if (!a.holds) o.status = kExitFail;
    }
    for (const ThetaClaim& c : printed_theta_claims())
        if (c.param == phi.label() && c.s == s && !c.agrees)
            o.warnings.push_back("displayed expansion differs: " + c.printed.to_string());
    return o;
}

Output cmd_lift(const std::string& triple, const std::string& spec, int power) {
    const EndoTriple t = endo_triple(parse_triple_family(triple));
    const LParam phi = parse_param_spec(spec);
    const LiftRecord rec = lift_record(t, phi);
    Output o;
    o.result = to_json(rec);
    std::ostringstream os;
    os << "triple " << t.to_string() << "\n"
       << phi.to_string() << " -> " << rec.target.label() << " (" << conormal_kind_name(rec.kind) << ", "
       << lift_column_name(rec.column) << ")\n"
       << "xi-conormal: " << (rec.xi_conormal ? "yes" : "no") << "\n";
    if (rec.xi_conormal) {
        const LiftedDistribution d = lift_distribution(t, phi, power);
        o.result["distribution"] = {{"s_ambient", d.s_ambient},
                                    {"lifted", to_json(d.lifted)},
                                    {"expected", to_json(d.expected)},
                                    {"equal", d.equal}};
        os << "lift = " << d.lifted.to_string() << "\n"
           << "theta(" << d.target.label() << ", " << d.s_ambient << ") = " << d.expected.to_string() << "\n"
           << "identity " << (d.equal ? "holds" : "FAILS") << "\n";
        if (!d.equal) o.status = kExitFail;
    }
    o.text = os.str();
    return o;
}

Output cmd_ec(const std::string& name) {
    const EcResult r = ec_decompose(find_repn(GroupId::G2, name));
    Output o;
    o.result = to_json(r);
    std::ostringstream os;
    os << "Theta[" << name << "] =\n";
    for (const EcTerm& t : r.terms)
        os << "  " << t.coefficient.to_string() << " * lift from " << triple_family_name(t.triple.family) << " of "
           << t.source << " at s = " << t.s_class << (t.s_power == 2 ? "^2" : "") << "\n";
    os << "round trip: " << (r.round_trip ? "ok" : "FAILS") << "\n";
    if (!r.round_trip) o.status = kExitFail;
    o.text = os.str();
    return o;
}

Output cmd_verify(const std::string& suite) {
    std::vector<SuiteReport> reports;
    if (suite == "all") reports = run_all();
    else reports.push_back(run_suite(suite));
    Output o;
    Json arr = Json::array();
    for (const SuiteReport& r : reports) {
        arr.push_back(to_json(r));
        o.text += render_text(r);
        for (const CheckItem& i : r.items)
            if (i.status == Status::Warn) o.warnings.push_back(r.suite + ": " + i.name);
        if (!r.passed()) o.status = kExitFail;
    }
    o.result = {{"suites", arr}};
    return o;
}

Output cmd_dump(const std::string& what) {
    if (what != "tables") throw Error(Errc::UnknownLabel, "unknown dump target '" + what + "'");
    Output o;
    o.result = dump_tables();
    o.text = o.result.dump(2) + "\n";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unipotent representations of p-adic G2: packets, distributions and endoscopic lifting"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit one structured document");

    std::string a1, a2, spec, s = "1", triple, name, suite = "all", what = "tables";
    int power = 1;

    auto* c_classify = app.add_subcommand("classify", "classify lambda(Fr) = m(x, y)");
    c_classify->add_option("x", a1, "QValue, e.g. zeta(3)^2*q^(2/3)")->required();
    c_classify->add_option("y", a2, "QValue")->required();
    auto* c_packet = app.add_subcommand("packet", "L- and ABV-packet of a parameter");
    c_packet->add_option("param", spec, "<group>:<family><sub>[?data]")->required();
    auto* c_coeffs = app.add_subcommand("coeffs", "coefficient table <s, pi> of a parameter");
    c_coeffs->add_option("param", spec)->required();
    auto* c_theta = app.add_subcommand("theta", "the distribution Theta_{phi,s}");
    c_theta->add_option("param", spec)->required();
    c_theta->add_option("s", s, "conjugacy class in A^ABV");
    auto* c_lift = app.add_subcommand("lift", "lift an endoscopic parameter and its distribution");
    c_lift->add_option("triple", triple, "T_reg|A1_short|A1_long|D2|A2|G2_triv")->required();
    c_lift->add_option("param", spec)->required();
    c_lift->add_option("--power", power, "use s^power (A2: 1 or 2)")->check(CLI::Range(1, 2));
    auto* c_ec = app.add_subcommand("ec", "endoscopic decomposition of Theta_pi");
    c_ec->add_option("repn", name, "G2 representation name, e.g. \"pi(1)'\"")->required();
    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("suite", suite)->check(CLI::IsMember({"tables", "fpf", "inversion", "aubert", "lifting", "all"}));
    auto* c_dump = app.add_subcommand("dump", "dump stored tables");
    c_dump->add_option("what", what)->check(CLI::IsMember({"tables"}));

    for (auto* sc : app.get_subcommands({})) sc->add_flag("--json", json, "emit one structured document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    std::string command;
    Output out;
    try {
        if (c_classify->parsed()) {
            command = "classify " + a1 + " " + a2;
            out = cmd_classify(a1, a2);
        } else if (c_packet->parsed()) {
            command = "packet " + spec;
            out = cmd_packet(spec);
        } else if (c_coeffs->parsed()) {
            command = "coeffs " + spec;
            out = cmd_coeffs(spec);
        } else if (c_theta->parsed()) {
            command = "theta " + spec + " " + s;
            out = cmd_theta(spec, s);
        } else if (c_lift->parsed()) {
            command = "lift " + triple + " " + spec;
            out = cmd_lift(triple, spec, power);
        } else if (c_ec->parsed()) {
            command = "ec " + name;
            out = cmd_ec(name);
        } else if (c_verify->parsed()) {
            command = "verify " + suite;
            out = cmd_verify(suite);
        } else if (c_dump->parsed()) {
            command = "dump " + what;
            out = cmd_dump(what);
        }
    } catch (const Error& e) {
        if (json) {
            Json err = {{"code", errc_name(e.code())}, {"message", e.what()}};
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
            std::cout << envelope(command, {{"error", err}}, {}, kExitUsage).dump(2) << "\n";
        } else {
            std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        }
        return kExitUsage;
    }

    if (json) {
        std::cout << envelope(command, out.result, out.warnings, out.status).dump(2) << "\n";
    } else {
        std::cout << out.text;
        for (const std::string& w : out.warnings) std::cout << "warning: " << w << "\n";
    }
    return out.status;
}
