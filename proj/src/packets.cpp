#include "g2abv/packets.hpp"

#include <algorithm>
#include <sstream>

namespace g2abv {

// ---------------------------------------------------------------- groups

namespace {

const std::vector<std::pair<GroupId, const char*>>& group_names() {
    static const std::vector<std::pair<GroupId, const char*>> v = {
        {GroupId::G2, "G2"},         {GroupId::T, "T"},
        {GroupId::GL2_short, "GL2_short"}, {GroupId::GL2_long, "GL2_long"},
        {GroupId::SO4, "SO4"},       {GroupId::SO4_delta, "SO4_delta"},
        {GroupId::PGL3, "PGL3"},     {GroupId::PGL3_delta, "PGL3_delta"},
        {GroupId::PGL3_deltaPrime, "PGL3_deltaPrime"},
    };
    return v;
}

}  // namespace

std::string group_name(GroupId g) {
    for (const auto& [k, n] : group_names())
        if (k == g) return n;
    return "?";
}

GroupId parse_group(const std::string& s) {
    for (const auto& [k, n] : group_names())
        if (s == n) return k;
    throw Error(Errc::UnknownLabel, "unknown group '" + s + "'");
}

GroupId base_group(GroupId g) {
    if (g == GroupId::SO4_delta) return GroupId::SO4;
    if (g == GroupId::PGL3_delta || g == GroupId::PGL3_deltaPrime) return GroupId::PGL3;
    return g;
}

std::vector<Root> group_roots(GroupId g) {
    switch (base_group(g)) {
        case GroupId::G2: return all_roots();
        case GroupId::T: return {};
        case GroupId::GL2_short: return {{0, 1}, {0, -1}};
        case GroupId::GL2_long: return {{1, 0}, {-1, 0}};
        case GroupId::SO4: return {{1, 0}, {1, 2}, {-1, 0}, {-1, -2}};
        case GroupId::PGL3: return {{1, 0}, {1, 3}, {2, 3}, {-1, 0}, {-1, -3}, {-2, -3}};
        default: return {};
    }
}

// ---------------------------------------------------------------- families

bool ParamFamily::operator<(const ParamFamily& o) const {
    if (group != o.group) return group < o.group;
    if (id != o.id) return id < o.id;
    return data < o.data;
}

std::string ParamFamily::to_string() const {
    std::string s = group_name(group) + ":" + id;
    char sep = '?';
    for (const auto& [k, v] : data) {
        s += sep + k + "=" + v;
        sep = '&';
    }
    return s;
}

std::vector<std::string> family_ids(GroupId g) {
    switch (base_group(g)) {
        case GroupId::G2: return {"0", "1", "2", "3", "4", "5", "6", "7", "8"};
        case GroupId::T: return {"0"};
        case GroupId::GL2_short:
        case GroupId::GL2_long: return {"0", "1"};
        case GroupId::SO4: return {"0", "0'", "1", "2", "3"};
        case GroupId::PGL3: return {"0", "1", "2", "3"};
        default: return {};
    }
}

PhvClass family_phv(GroupId g, const std::string& id) {
    g = base_group(g);
    if (g == GroupId::G2) {
        if (id.size() != 1 || id[0] < '0' || id[0] > '8') throw Error(Errc::UnknownLabel, "no G2 family " + id);
        return phv_for_case(case_from_number(id[0] - '0'));
    }
    const auto ids = family_ids(g);
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw Error(Errc::UnknownLabel, "no " + group_name(g) + " family " + id);
    if (id == "0") return PhvClass::p0();
    if (id == "0'") return PhvClass::p0(2);
    if (g == GroupId::PGL3 && id == "2") return PhvClass::p2(1);
    if (id == "3") return PhvClass::p3(g == GroupId::SO4 ? 2 : 3);
    return PhvClass::p1();
}

namespace {

enum class Kind { QVal, Unit, Rat, Int };

struct KeySpec {
    const char* key;
    Kind kind;
    const char* def;
};

std::vector<KeySpec> key_specs(GroupId g, const std::string& id) {
    g = base_group(g);
    if (g == GroupId::G2) {
        if (id == "0") return {{"chi1", Kind::QVal, "1"}, {"chi2", Kind::QVal, "1"}};
        if (id == "1" || id == "2") return {{"a", Kind::Rat, "1/2"}, {"mu", Kind::Unit, "1"}};
        if (id == "3") return {{"n", Kind::Int, "0"}};
        return {};
    }
    if (id == "0") return {{"chi1", Kind::QVal, "1"}, {"chi2", Kind::QVal, "1"}};
    if (id == "0'") return {};
    if ((g == GroupId::PGL3 && (id == "2" || id == "3")) || (g == GroupId::SO4 && id == "3"))
        return {{"chi", Kind::Unit, "1"}};
    return {{"chi", Kind::QVal, "1"}};
}

QValue qdata(const ParamFamily& f, const std::string& k) { return QValue::parse(f.data.at(k)); }

}  // namespace

ParamFamily make_family(GroupId g, const std::string& id, const std::map<std::string, std::string>& data) {
    family_phv(g, id);
    ParamFamily f;
    f.group = base_group(g);
    f.id = id;
    const auto specs = key_specs(g, id);
    for (const auto& [k, v] : data) {
        bool known = false;
        for (const auto& s : specs) known = known || k == s.key;
        if (!known) throw Error(Errc::InvalidParameter, "family " + group_name(g) + ":" + id + " takes no '" + k + "'");
    }
    for (const auto& s : specs) {
        auto it = data.find(s.key);
        const std::string raw = it == data.end() ? s.def : it->second;
        switch (s.kind) {
            case Kind::QVal: f.data[s.key] = QValue::parse(raw).to_string(); break;
            case Kind::Unit: {
                QValue v = QValue::parse(raw);
                if (v.exponent() != 0)
                    throw Error(Errc::InvalidParameter, std::string(s.key) + " must be a root of unity");
                f.data[s.key] = v.to_string();
                break;
            }
            case Kind::Rat: f.data[s.key] = to_string(parse_rational(raw)); break;
            case Kind::Int: {
                Rational r = parse_rational(raw);
                if (r.get_den() != 1) throw Error(Errc::InvalidParameter, std::string(s.key) + " must be an integer");
                f.data[s.key] = to_string(r);
                break;
            }
        }
    }
    // family-specific constraints on units
    if (f.group == GroupId::G2 && id == "3") {
        long n = parse_rational(f.data["n"]).get_num().get_si();
        if (n < 0 || n > 2) throw Error(Errc::InvalidParameter, "n must be 0, 1 or 2");
    }
    if (f.group == GroupId::SO4 && id == "3") {
        QValue c = qdata(f, "chi");
        if (!c.pow(2).is_one()) throw Error(Errc::InvalidParameter, "chi must satisfy chi^2 = 1");
    }
    if (f.group == GroupId::PGL3 && (id == "2" || id == "3")) {
        QValue c = qdata(f, "chi");
        if (!c.pow(3).is_one()) throw Error(Errc::InvalidParameter, "chi must satisfy chi^3 = 1");
    }
    if (id == "0'") return f;
    const TorusElement t = standard_lambda(f);
    if (f.group == GroupId::G2) {
        InfCase ic = classify(t);
        if (case_number(ic.case_id) != id[0] - '0')
            throw Error(Errc::InvalidParameter, "data for " + f.to_string() + " gives case " + case_name(ic.case_id));
    } else if (detect_family(f.group, t) != id) {
        throw Error(Errc::InvalidParameter, "data for " + f.to_string() + " leaves the family");
    }
    return f;
}

TorusElement standard_lambda(const ParamFamily& f) {
    const QValue q = QValue::q_pow(1);
    const QValue half = QValue::q_pow(make_rational(1, 2));
    auto m = [](QValue x, QValue y) { return TorusElement{x, y}; };
    if (f.id == "0") {
        QValue c1 = qdata(f, "chi1"), c2 = qdata(f, "chi2");
        return m(c1 * c2, c1);
    }
    if (f.group == GroupId::G2) {
        const RootOfUnity z3(1, 3);
        switch (f.id[0] - '0') {
            case 1: {
                QValue mu = qdata(f, "mu");
                Rational a = parse_rational(f.data.at("a"));
                return m(q, QValue(mu.unit(), a));
            }
            case 2: {
                QValue mu = qdata(f, "mu");
                Rational a = parse_rational(f.data.at("a"));
                return m(QValue(mu.unit(), a), QValue(mu.unit().inverse(), 1 - a));
            }
            case 3: {
                long n = parse_rational(f.data.at("n")).get_num().get_si();
                return m(QValue(z3.pow(n), make_rational(1, 3)), QValue(z3.pow(2 * n), make_rational(2, 3)));
            }
            case 4: return m(q, QValue(RootOfUnity(1, 2), 1));
            case 5: return m(q.pow(2), q);
            case 6: return m(QValue(z3, 1), QValue(z3.pow(2), 1));
            case 7: return m(q.pow(3), q.pow(2));
            case 8: return m(q, q);
        }
    }
    if (f.id == "0'") return m(QValue(RootOfUnity(1, 2), 0), QValue(RootOfUnity(1, 2), 0));
    const QValue chi = qdata(f, "chi");
    switch (f.group) {
        case GroupId::GL2_short: return m(half * chi, half.inverse() * chi);
        case GroupId::GL2_long: return m(chi.pow(2), chi * half);
        case GroupId::SO4:
            if (f.id == "1") return m(q, chi * half);
            if (f.id == "2") return m(chi.pow(2), chi * half);
            return m(q, chi * q);
        case GroupId::PGL3:
            if (f.id == "1") return m(chi.pow(2), chi * half);
            if (f.id == "2") return m(chi * QValue::q_pow(make_rational(1, 3)), chi.pow(2) * QValue::q_pow(make_rational(2, 3)));
            return m(chi.pow(2) * q, chi * q);
        default: break;
    }
    throw Error(Errc::UnknownLabel, "no standard parameter for " + f.to_string());
}

std::string detect_family(GroupId g, const TorusElement& t) {
    g = base_group(g);
    const QValue q = QValue::q_pow(1);
    std::vector<Root> hits;
    for (const Root& r : group_roots(g))
        if (eval_root(r, t) == q) hits.push_back(r);
    if (hits.empty()) return "0";
    if (g == GroupId::SO4) {
        bool lng = false, sht = false;
        for (const Root& r : hits) (is_long(r) ? lng : sht) = true;
        if (lng && sht) return "3";
        return sht ? "1" : "2";
    }
    if (g == GroupId::PGL3) {
        if (hits.size() == 1) return "1";
        if (hits.size() == 2) {
            if (is_root(hits[0] + hits[1])) return "3";
            if (is_root(hits[0] - hits[1])) return "2";
        }
        throw Error(Errc::NoStandardMatch, "unexpected root pattern for PGL3 at " + t.to_string());
    }
    if (g == GroupId::G2) return std::to_string(case_number(classify(t).case_id));
    return "1";
}

std::vector<std::string> subs_of(const PhvClass& cls) {
    switch (cls.kind) {
        case PhvKind::P0: return {""};
        case PhvKind::P1:
        case PhvKind::P2: return {"a", "b"};
        default: return {"a", "b", "c", "d"};
    }
}

std::string orbit_of_sub(const PhvClass& cls, const std::string& sub) {
    const auto subs = subs_of(cls);
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i] == sub) return "C" + std::to_string(i);
    throw Error(Errc::UnknownLabel, "no sub-label '" + sub + "' on " + cls.to_string());
}

std::string sub_of_orbit(const PhvClass& cls, const std::string& orbit) {
    return subs_of(cls)[orbit_index(cls, orbit)];
}

// ---------------------------------------------------------------- conditions

bool eval_cond(Cond c, const ParamFamily& f) {
    switch (c) {
        case Cond::Always: return true;
        case Cond::Never: return false;
        case Cond::ExponentsZero: return qdata(f, "chi1").exponent() == 0 && qdata(f, "chi2").exponent() == 0;
        case Cond::AHalf: return parse_rational(f.data.at("a")) == make_rational(1, 2);
        case Cond::ChiUnitary: return qdata(f, "chi").exponent() == 0;
        case Cond::Unknown: break;
    }
    throw Error(Errc::InvalidParameter, "condition not recorded for " + f.to_string());
}

// ---------------------------------------------------------------- tables

namespace {

struct RawRow {
    GroupId group;
    const char* name;
    std::vector<std::string> llc;
    std::vector<std::string> abv;
    Cond unitary;
    const char* aubert;
};

FamilyTable build(GroupId g, const std::string& fam, std::vector<Cond> arthur, std::vector<RawRow> raw) {
    FamilyTable t;
    t.group = g;
    t.family = fam;
    t.phv = family_phv(g, fam);
    t.subs = subs_of(t.phv);
    t.arthur = std::move(arthur);
    for (RawRow& r : raw) {
        TableRow row;
        row.repn = {r.group, fam, r.name};
        for (auto& e : r.llc) if (e == "0") e.clear();
        for (auto& e : r.abv) if (e == "0") e.clear();
        row.llc = r.llc;
        row.abv = r.abv;
        row.unitary = r.unitary;
        row.aubert = r.aubert;
        // the Vogan sheaf sits on the L-parameter orbit with the LLC character
        for (std::size_t i = 0; i < row.llc.size(); ++i)
            if (!row.llc[i].empty()) row.sheaf = {orbit_of_sub(t.phv, t.subs[i]), row.llc[i]};
        t.rows.push_back(row);
    }
    return t;
}

using V = std::vector<std::string>;
constexpr Cond A = Cond::Always;
constexpr Cond N = Cond::Never;

std::vector<FamilyTable> make_g2() {
    const GroupId G = GroupId::G2;
    std::vector<FamilyTable> v;
    v.push_back(build(G, "0", {Cond::ExponentsZero},
                      {{G, "I(chi1xchi2)", V{"1"}, V{"1"}, Cond::ExponentsZero, "I(chi1xchi2)"}}));
    v.push_back(build(G, "1", {Cond::AHalf, Cond::AHalf},
                      {{G, "I_g2(a-1/2,mu.det)", V{"1", "0"}, V{"1", "0"}, Cond::AHalf, "I_g2(a-1/2,mu.St)"},
                       {G, "I_g2(a-1/2,mu.St)", V{"0", "1"}, V{"0", "1"}, Cond::AHalf, "I_g2(a-1/2,mu.det)"}}));
    v.push_back(build(G, "2", {Cond::AHalf, Cond::AHalf},
                      {{G, "I_g1(a-1/2,mu.det)", V{"1", "0"}, V{"1", "0"}, Cond::AHalf, "I_g1(a-1/2,mu.St)"},
                       {G, "I_g1(a-1/2,mu.St)", V{"0", "1"}, V{"0", "1"}, Cond::AHalf, "I_g1(a-1/2,mu.det)"}}));
    v.push_back(build(G, "3", {N, N},
                      {{G, "I_g1(1/6,theta3^n.det)", V{"1", "0"}, V{"1", "0"}, N, "I_g1(1/6,theta3^n.St)"},
                       {G, "I_g1(1/6,theta3^n.St)", V{"0", "1"}, V{"0", "1"}, N, "I_g1(1/6,theta3^n.det)"}}));
    v.push_back(build(G, "4", {A, A, A, A},
                      {{G, "J_g2(1,I(1xtheta2))", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, A, "pi(theta2)"},
                       {G, "J_g1(1/2,theta2.St)", V{"0", "1", "0", "0"}, V{"0", "1", "0", "0"}, A, "J_g2(1/2,theta2.St)"},
                       {G, "J_g2(1/2,theta2.St)", V{"0", "0", "1", "0"}, V{"0", "0", "1", "0"}, A, "J_g1(1/2,theta2.St)"},
                       {G, "pi(theta2)", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, A, "J_g2(1,I(1xtheta2))"},
                       {G, "I0(G2[-1])", V{"0", "0", "0", "vartheta"},
                        V{"vartheta", "vartheta", "vartheta", "vartheta"}, A, "I0(G2[-1])"}}));
    v.push_back(build(G, "5", {N, N},
                      {{G, "I_g2(3/2,1_GL2)", V{"1", "0"}, V{"1", "0"}, N, "I_g2(3/2,St)"},
                       {G, "I_g2(3/2,St)", V{"0", "1"}, V{"0", "1"}, N, "I_g2(3/2,1_GL2)"}}));
    v.push_back(build(
        G, "6", {A, N, N, A},
        {{G, "J_g2(1,I(theta3xtheta3^-1))", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, A, "pi(theta3)"},
         {G, "J_g1(1/2,theta3^2.St)", V{"0", "1", "0", "0"}, V{"0", "1", "0", "0"}, N, "J_g1(1/2,theta3.St)"},
         {G, "J_g1(1/2,theta3.St)", V{"0", "0", "1", "0"}, V{"0", "0", "1", "0"}, N, "J_g1(1/2,theta3^2.St)"},
         {G, "pi(theta3)", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, A, "J_g2(1,I(theta3xtheta3^-1))"},
         {G, "I0(G2[theta3])", V{"0", "0", "0", "vartheta"}, V{"vartheta", "vartheta", "vartheta", "vartheta"}, A,
          "I0(G2[theta3])"},
         {G, "I0(G2[theta3^2])", V{"0", "0", "0", "vartheta^2"},
          V{"vartheta^2", "vartheta^2", "vartheta^2", "vartheta^2"}, A, "I0(G2[theta3^2])"}}));
    v.push_back(build(G, "7", {A, N, N, A},
                      {{G, "1_G2", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, A, "St_G2"},
                       {G, "J_g1(3/2,St)", V{"0", "1", "0", "0"}, V{"0", "1", "0", "0"}, N, "J_g2(5/2,St)"},
                       {G, "J_g2(5/2,St)", V{"0", "0", "1", "0"}, V{"0", "0", "1", "0"}, N, "J_g1(3/2,St)"},
                       {G, "St_G2", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, A, "1_G2"}}));
    v.push_back(build(G, "8", {A, A, A, A},
                      {{G, "J_g2(1,I(1x1))", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, A, "pi(1)'"},
                       {G, "J_g1(1/2,St)", V{"0", "1", "0", "0"}, V{"rho", "1", "0", "0"}, A, "pi(1)"},
                       {G, "J_g2(1/2,St)", V{"0", "0", "1", "0"}, V{"0", "vartheta", "1", "0"}, A, "J_g2(1/2,St)"},
                       {G, "pi(1)'", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, A, "J_g2(1,I(1x1))"},
                       {G, "pi(1)", V{"0", "0", "0", "rho"}, V{"0", "0", "vartheta", "rho"}, A, "J_g1(1/2,St)"},
                       {G, "I0(G2[1])", V{"0", "0", "0", "eps"}, V{"eps", "1", "vartheta", "eps"}, A, "I0(G2[1])"}}));
    return v;
}

std::vector<FamilyTable> make_endo(GroupId g) {
    const Cond U = Cond::Unknown;
    const Cond C = Cond::ChiUnitary;
    std::vector<FamilyTable> v;
    switch (g) {
        case GroupId::T:
            v.push_back(build(g, "0", {Cond::ExponentsZero}, {{g, "chi1xchi2", V{"1"}, V{"1"}, U, ""}}));
            break;
        case GroupId::GL2_short:
        case GroupId::GL2_long:
            v.push_back(build(g, "0", {Cond::ExponentsZero}, {{g, "Ind(chi1xchi2)", V{"1"}, V{"1"}, U, ""}}));
            v.push_back(build(g, "1", {C, C},
                              {{g, "chi.1_GL2", V{"1", "0"}, V{"1", "0"}, U, ""},
                               {g, "chi.St_GL2", V{"0", "1"}, V{"0", "1"}, U, ""}}));
            break;
        case GroupId::SO4: {
            const GroupId D = GroupId::SO4_delta;
            v.push_back(build(g, "0", {Cond::ExponentsZero}, {{g, "I^SO4(chi1xchi2)", V{"1"}, V{"1"}, U, ""}}));
            v.push_back(build(g, "0'", {A},
                              {{g, "pi4", V{"1"}, V{"1"}, U, ""}, {g, "pi4'", V{"vartheta"}, V{"vartheta"}, U, ""}}));
            v.push_back(build(g, "1", {C, C},
                              {{g, "I_b1(chi.det)", V{"1", "0"}, V{"1", "0"}, U, ""},
                               {g, "I_b1(chi.St)", V{"0", "1"}, V{"0", "1"}, U, ""}}));
            v.push_back(build(g, "2", {C, C},
                              {{g, "I_b2(chi.det)", V{"1", "0"}, V{"1", "0"}, U, ""},
                               {g, "I_b2(chi.St)", V{"0", "1"}, V{"0", "1"}, U, ""}}));
            v.push_back(build(g, "3", {A, A, A, A},
                              {{g, "chi_SO4", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, U, ""},
                               {g, "J_b1(1/2,chi.St)", V{"0", "1", "0", "0"}, V{"0", "1", "0", "0"}, U, ""},
                               {g, "J_b2(1/2,chi.St)", V{"0", "0", "1", "0"}, V{"0", "0", "1", "0"}, U, ""},
                               {g, "St_SO4(chi)", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, U, ""},
                               {D, "chi_SO4delta", V{"0", "0", "0", "vartheta"},
                                V{"vartheta", "vartheta", "vartheta", "vartheta"}, U, ""}}));
            break;
        }
        case GroupId::PGL3: {
            const GroupId D = GroupId::PGL3_delta, D2 = GroupId::PGL3_deltaPrime;
            v.push_back(build(g, "0", {Cond::ExponentsZero}, {{g, "I^PGL3(chi1xchi2)", V{"1"}, V{"1"}, U, ""}}));
            v.push_back(build(g, "1", {C, C},
                              {{g, "I_a1(chi.det,chi^-2)", V{"1", "0"}, V{"1", "0"}, U, ""},
                               {g, "I_a1(chi.St,chi^-2)", V{"0", "1"}, V{"0", "1"}, U, ""}}));
            v.push_back(build(g, "2", {N, N},
                              {{g, "I_a1(chi.nu^1/6.det,chi.nu^-1/3)", V{"1", "0"}, V{"1", "0"}, U, ""},
                               {g, "I_a1(chi.nu^1/6.St,chi.nu^-1/3)", V{"0", "1"}, V{"0", "1"}, U, ""}}));
            v.push_back(build(g, "3", {A, N, N, A},
                              {{g, "chi_PGL3", V{"1", "0", "0", "0"}, V{"1", "0", "0", "0"}, U, ""},
                               {g, "chi.J_a1(nu,nu^-1/2.St)", V{"0", "1", "0", "0"}, V{"0", "1", "0", "0"}, U, ""},
                               {g, "chi.J_a1(nu^1/2.St,nu^-1)", V{"0", "0", "1", "0"}, V{"0", "0", "1", "0"}, U, ""},
                               {g, "chi.St_PGL3", V{"0", "0", "0", "1"}, V{"0", "0", "0", "1"}, U, ""},
                               {D, "chi_PGL3delta", V{"0", "0", "0", "vartheta"},
                                V{"vartheta", "vartheta", "vartheta", "vartheta"}, U, ""},
                               {D2, "chi_PGL3delta'", V{"0", "0", "0", "vartheta^2"},
                                V{"vartheta^2", "vartheta^2", "vartheta^2", "vartheta^2"}, U, ""}}));
            break;
        }
        default: break;
    }
    return v;
}

}  // namespace

const std::vector<FamilyTable>& g2_tables() {
    static const std::vector<FamilyTable> v = make_g2();
    return v;
}

const std::vector<FamilyTable>& endoscopic_tables(GroupId g) {
    static const std::map<GroupId, std::vector<FamilyTable>> all = {
        {GroupId::T, make_endo(GroupId::T)},
        {GroupId::GL2_short, make_endo(GroupId::GL2_short)},
        {GroupId::GL2_long, make_endo(GroupId::GL2_long)},
        {GroupId::SO4, make_endo(GroupId::SO4)},
        {GroupId::PGL3, make_endo(GroupId::PGL3)},
    };
    if (base_group(g) == GroupId::G2) return g2_tables();
    return all.at(base_group(g));
}

const FamilyTable& family_table(GroupId g, const std::string& family) {
    for (const FamilyTable& t : endoscopic_tables(g))
        if (t.family == family) return t;
    throw Error(Errc::UnknownLabel, "no family " + group_name(g) + ":" + family);
}

bool RepnLabel::operator<(const RepnLabel& o) const {
    if (group != o.group) return group < o.group;
    if (family != o.family) return family < o.family;
    return name < o.name;
}

std::string RepnLabel::to_string() const { return group_name(group) + ":" + name; }

RepnLabel find_repn(GroupId g, const std::string& name) {
    for (const FamilyTable& t : endoscopic_tables(g))
        for (const TableRow& r : t.rows)
            if (r.repn.name == name && (r.repn.group == g || base_group(g) == GroupId::G2 ||
                                        base_group(r.repn.group) == base_group(g)))
                return r.repn;
    throw Error(Errc::UnknownLabel, "no representation '" + name + "' of " + group_name(g));
}

const TableRow& row_of(const RepnLabel& r) {
    for (const TableRow& row : family_table(r.group, r.family).rows)
        if (row.repn == r) return row;
    throw Error(Errc::UnknownLabel, "no row for " + r.to_string());
}

std::vector<RepnLabel> family_repns(GroupId g, const std::string& family) {
    std::vector<RepnLabel> out;
    for (const TableRow& r : family_table(g, family).rows) out.push_back(r.repn);
    return out;
}

// ---------------------------------------------------------------- parameters

namespace {

const std::map<std::string, std::vector<GroupId>>& minimal_groups() {
    using G = GroupId;
    static const std::map<std::string, std::vector<GroupId>> m = {
        {"0", {G::T}},           {"1a", {G::T}},         {"1b", {G::GL2_short}}, {"2a", {G::T}},
        {"2b", {G::GL2_long}},   {"3a", {G::T}},         {"3b", {G::GL2_long}},  {"4a", {G::T}},
        {"4b", {G::GL2_long}},   {"4c", {G::GL2_short}}, {"4d", {G::SO4}},       {"5a", {G::T}},
        {"5b", {G::GL2_short}},  {"6a", {G::T}},         {"6b", {G::GL2_long}},  {"6c", {G::GL2_long}},
        {"6d", {G::PGL3}},       {"7a", {G::T}},         {"7b", {G::GL2_long}},  {"7c", {G::GL2_short}},
        {"7d", {G::G2}},         {"8a", {G::T}},         {"8b", {G::GL2_long}},  {"8c", {G::GL2_short}},
        {"8d", {G::SO4, G::PGL3}},
    };
    return m;
}

}  // namespace

std::string LParam::label() const { return group_name(family.group) + ":" + family.id + sub; }

std::string LParam::to_string() const {
    std::string s = label();
    char sep = '?';
    for (const auto& [k, v] : family.data) {
        s += sep + k + "=" + v;
        sep = '&';
    }
    return s;
}

LParam make_lparam(const ParamFamily& f, const std::string& sub) {
    const FamilyTable& t = family_table(f.group, f.id);
    auto it = std::find(t.subs.begin(), t.subs.end(), sub);
    if (it == t.subs.end()) throw Error(Errc::UnknownLabel, "no parameter " + f.to_string() + " sub '" + sub + "'");
    const std::size_t col = it - t.subs.begin();
    LParam p;
    p.family = f;
    p.sub = sub;
    p.orbit = orbit_of_sub(t.phv, sub);
    const OrbitData o = orbit(t.phv, p.orbit);
    p.dim = o.dim;
    p.a_phi = o.a_c;
    p.a_abv = o.a_abv;
    p.is_open = o.is_open;
    p.is_closed = o.is_closed;
    p.is_elliptic = f.group == GroupId::G2 && sub == "d" && (f.id == "4" || f.id == "6" || f.id == "7" || f.id == "8");
    if (eval_cond(t.arthur[col], f)) {
        ArthurDatum d;
        const bool order2 = f.group == GroupId::G2 && (f.id == "4" || f.id == "8") && (sub == "b" || sub == "c");
        d.s_psi = order2 ? "theta" : p.a_abv.classes[0];
        p.arthur = d;
    }
    return p;
}

std::vector<LParam> params_of(const ParamFamily& f) {
    std::vector<LParam> out;
    for (const std::string& s : family_table(f.group, f.id).subs) out.push_back(make_lparam(f, s));
    return out;
}

std::vector<LParam> all_g2_params() {
    std::vector<LParam> out;
    for (const std::string& id : family_ids(GroupId::G2))
        for (const LParam& p : params_of(make_family(GroupId::G2, id))) out.push_back(p);
    return out;
}

LParam parse_param_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError(spec.size(), "expected '<group>:' in parameter spec");
    const GroupId g = parse_group(spec.substr(0, colon));
    std::size_t i = colon + 1;
    std::size_t j = i;
    while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
    if (j == i) throw ParseError(i, "expected a family number");
    if (j < spec.size() && spec[j] == '\'') ++j;
    const std::string fam = spec.substr(i, j - i);
    std::string sub;
    if (j < spec.size() && spec[j] >= 'a' && spec[j] <= 'd') sub = std::string(1, spec[j++]);
    std::map<std::string, std::string> data;
    if (j < spec.size()) {
        if (spec[j] != '?') throw ParseError(j, "unexpected character in parameter spec");
        ++j;
        while (j <= spec.size()) {
            std::size_t amp = spec.find('&', j);
            if (amp == std::string::npos) amp = spec.size();
            const std::string kv = spec.substr(j, amp - j);
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ParseError(j, "expected key=value");
            data[kv.substr(0, eq)] = kv.substr(eq + 1);
            j = amp + 1;
        }
    }
    return make_lparam(make_family(g, fam, data), sub);
}

// ---------------------------------------------------------------- packets

namespace {

std::size_t column(const LParam& phi) {
    const FamilyTable& t = family_table(phi.family.group, phi.family.id);
    return std::find(t.subs.begin(), t.subs.end(), phi.sub) - t.subs.begin();
}

}  // namespace

std::vector<PacketEntry> l_packet(const LParam& phi) {
    const std::size_t c = column(phi);
    std::vector<PacketEntry> out;
    for (const TableRow& r : family_table(phi.family.group, phi.family.id).rows)
        if (!r.llc[c].empty()) out.push_back({r.repn, r.llc[c]});
    return out;
}

std::vector<PacketEntry> abv_packet(const LParam& phi) {
    const std::size_t c = column(phi);
    std::vector<PacketEntry> out;
    for (const TableRow& r : family_table(phi.family.group, phi.family.id).rows)
        if (!r.abv[c].empty()) out.push_back({r.repn, r.abv[c]});
    return out;
}

std::vector<RepnLabel> coronal(const LParam& phi) {
    std::vector<RepnLabel> out;
    const auto lp = l_packet(phi);
    for (const auto& [r, chr] : abv_packet(phi)) {
        bool in_l = false;
        for (const auto& e : lp) in_l = in_l || e.first == r;
        if (!in_l) out.push_back(r);
    }
    return out;
}

Cyclo coefficient_table(const LParam& phi, const std::string& s, const RepnLabel& pi) {
    for (const auto& [r, chr] : abv_packet(phi))
        if (r == pi) return phi.a_abv.value(chr, s);
    throw Error(Errc::NotInPacket, pi.to_string() + " is not in the ABV-packet of " + phi.label());
}

CharCombo abv_character(const LParam& phi, const RepnLabel& pi) {
    const FamilyTable& t = family_table(phi.family.group, phi.family.id);
    const TableRow& r = row_of(pi);
    if (r.repn.family != phi.family.id || base_group(r.repn.group) != phi.family.group)
        throw Error(Errc::NotInPacket, pi.to_string() + " has another infinitesimal parameter than " + phi.label());
    return nevs(t.phv, r.sheaf).per_orbit[orbit_index(t.phv, phi.orbit)];
}

Cyclo coefficient_geometric(const LParam& phi, const std::string& s, const RepnLabel& pi) {
    const CharCombo v = abv_character(phi, pi);
    if (combo_is_zero(v))
        throw Error(Errc::NotInPacket, pi.to_string() + " is not in the ABV-packet of " + phi.label());
    return character_trace(phi.a_abv, v, s);
}

Cyclo coefficient(const LParam& phi, const std::string& s, const RepnLabel& pi) {
    const Cyclo a = coefficient_table(phi, s, pi);
    const Cyclo b = coefficient_geometric(phi, s, pi);
    if (a != b)
        throw Error(Errc::InvalidParameter, "table and geometric coefficients differ for " + pi.to_string() + " at " +
                                                phi.label() + ": " + a.to_string() + " vs " + b.to_string());
    return a;
}

std::map<RepnLabel, MicroSheaf> vogan_bijection(GroupId g, const std::string& family) {
    std::map<RepnLabel, MicroSheaf> out;
    for (const TableRow& r : family_table(g, family).rows) out[r.repn] = r.sheaf;
    return out;
}

RepnLabel repn_of_sheaf(GroupId g, const std::string& family, const MicroSheaf& p) {
    for (const TableRow& r : family_table(g, family).rows)
        if (r.sheaf == p) return r.repn;
    throw Error(Errc::UnknownLabel, "no representation for " + p.to_string() + " in " + group_name(g) + ":" + family);
}

std::string repn_sub(const RepnLabel& pi) {
    const FamilyTable& t = family_table(pi.group, pi.family);
    return sub_of_orbit(t.phv, row_of(pi).sheaf.orbit);
}

int repn_dim(const RepnLabel& pi) {
    const FamilyTable& t = family_table(pi.group, pi.family);
    return orbit(t.phv, row_of(pi).sheaf.orbit).dim;
}

Properties properties(const LParam& phi) {
    Properties p;
    p.open = phi.is_open;
    p.closed = phi.is_closed;
    p.elliptic = phi.is_elliptic;
    p.arthur = phi.arthur.has_value();
    p.tempered_bounded = phi.is_open && p.arthur;
    p.dim = phi.dim;
    if (phi.family.group == GroupId::G2) p.minimal_endoscopic_groups = minimal_groups().at(phi.family.id + phi.sub);
    return p;
}

LParam aubert_dual(const LParam& phi) {
    if (phi.family.group != GroupId::G2) throw Error(Errc::UnsupportedFamily, "Aubert duality is recorded for G2 only");
    static const std::map<std::string, std::string> four = {{"a", "d"}, {"d", "a"}, {"b", "c"}, {"c", "b"}};
    static const std::map<std::string, std::string> two = {{"a", "b"}, {"b", "a"}};
    const auto subs = family_table(phi.family.group, phi.family.id).subs;
    std::string s = phi.sub;
    if (subs.size() == 4) s = four.at(s);
    else if (subs.size() == 2) s = two.at(s);
    return make_lparam(phi.family, s);
}

RepnLabel aubert_dual_repn(const RepnLabel& pi) {
    const TableRow& r = row_of(pi);
    if (r.aubert.empty()) throw Error(Errc::UnsupportedFamily, "no Aubert data for " + pi.to_string());
    return {pi.group, pi.family, r.aubert};
}

namespace {

// The character attached to pi at its own L-parameter.
std::string own_character(const RepnLabel& pi) { return row_of(pi).sheaf.character; }

}  // namespace

bool is_spherical(const RepnLabel& pi) {
    const FamilyTable& t = family_table(pi.group, pi.family);
    return orbit(t.phv, row_of(pi).sheaf.orbit).is_closed && own_character(pi) == "1";
}

bool is_generic(const RepnLabel& pi) {
    const FamilyTable& t = family_table(pi.group, pi.family);
    return orbit(t.phv, row_of(pi).sheaf.orbit).is_open && own_character(pi) == "1";
}

bool is_unitary(const ParamFamily& f, const RepnLabel& pi) { return eval_cond(row_of(pi).unitary, f); }

bool is_arthur_repn(const ParamFamily& f, const RepnLabel& pi) {
    return make_lparam(f, repn_sub(pi)).arthur.has_value();
}

std::string llc_transfer_class(const LParam& phi, const std::string& a_phi_class) {
    if (!phi.a_phi.has_class(a_phi_class))
        throw Error(Errc::UnknownLabel, "A_phi of " + phi.label() + " has no class " + a_phi_class);
    if (phi.a_phi == phi.a_abv) return a_phi_class;
    return phi.a_abv.classes[0];
}

}  // namespace g2abv
