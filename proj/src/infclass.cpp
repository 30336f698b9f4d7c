#include "g2abv/infclass.hpp"

#include <map>

namespace g2abv {

const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> v = {CaseId::C0,   CaseId::C1short, CaseId::C2long,
                                          CaseId::C3,   CaseId::C4D2,    CaseId::C5,
                                          CaseId::C6A2, CaseId::C7reg,   CaseId::C8sub};
    return v;
}

std::string case_name(CaseId c) {
    static const char* names[] = {"C0", "C1short", "C2long", "C3", "C4D2", "C5", "C6A2", "C7reg", "C8sub"};
    return names[case_number(c)];
}

int case_number(CaseId c) { return static_cast<int>(c); }

CaseId case_from_number(int n) {
    if (n < 0 || n > 8) throw Error(Errc::UnknownLabel, "no case " + std::to_string(n));
    return static_cast<CaseId>(n);
}

const std::set<Root>& standard_subset(CaseId c) {
    static const std::map<CaseId, std::set<Root>> subsets = {
        {CaseId::C0, {}},
        {CaseId::C1short, {{1, 2}}},
        {CaseId::C2long, {{2, 3}}},
        {CaseId::C3, {{1, 0}, {2, 3}}},
        {CaseId::C4D2, {{1, 0}, {1, 2}}},
        {CaseId::C5, {{0, 1}, {1, 1}}},
        {CaseId::C6A2, {{1, 0}, {1, 3}}},
        {CaseId::C7reg, {{1, 0}, {0, 1}}},
        {CaseId::C8sub, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    };
    return subsets.at(c);
}

int case_dim(CaseId c) { return static_cast<int>(standard_subset(c).size()); }

std::string GroupDescriptor::to_string() const {
    switch (kind) {
        case HKind::DualTorus: return "T";
        case HKind::GL2: return "GL2" + (root ? root->to_string() : std::string());
        case HKind::SL3: return "SL3";
        case HKind::SO4sub: return "SO4";
        case HKind::G2dual: return "G2";
        case HKind::SO2xO2: return "SO2xO2";
    }
    return "?";
}

bool PhvClass::operator<(const PhvClass& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (n != o.n) return n < o.n;
    return p0_s3 < o.p0_s3;
}

int PhvClass::dim() const {
    switch (kind) {
        case PhvKind::P0: return 0;
        case PhvKind::P1: return 1;
        case PhvKind::P2: return 2;
        case PhvKind::P3: return 2;
        case PhvKind::P4: return 4;
    }
    return 0;
}

std::string PhvClass::to_string() const {
    switch (kind) {
        case PhvKind::P0:
            if (p0_s3) return "P0(S3)";
            return n <= 1 ? "P0" : "P0(Z" + std::to_string(n) + ")";
        case PhvKind::P1: return "P1";
        case PhvKind::P2: return "P2(" + std::to_string(n) + ")";
        case PhvKind::P3: return "P3(" + std::to_string(n) + ")";
        case PhvKind::P4: return "P4";
    }
    return "?";
}

PhvClass phv_for_case(CaseId c) {
    switch (c) {
        case CaseId::C0: return PhvClass::p0();
        case CaseId::C1short:
        case CaseId::C2long: return PhvClass::p1();
        case CaseId::C3: return PhvClass::p2(1);
        case CaseId::C4D2: return PhvClass::p3(2);
        case CaseId::C5: return PhvClass::p2(0);
        case CaseId::C6A2: return PhvClass::p3(3);
        case CaseId::C7reg: return PhvClass::p3(1);
        case CaseId::C8sub: return PhvClass::p4();
    }
    return PhvClass::p0();
}

std::set<Root> r_lambda(const TorusElement& t) {
    const QValue q = QValue::q_pow(1);
    std::set<Root> out;
    for (const Root& r : all_roots())
        if (eval_root(r, t) == q) out.insert(r);
    return out;
}

std::set<Root> unit_roots(const TorusElement& t) {
    std::set<Root> out;
    for (const Root& r : all_roots())
        if (eval_root(r, t).is_one()) out.insert(r);
    return out;
}

GroupDescriptor h_group_of(const TorusElement& t) {
    std::set<Root> ones = unit_roots(t);
    GroupDescriptor g;
    if (ones.empty()) return g;
    if (ones.size() == 12) {
        g.kind = HKind::G2dual;
        return g;
    }
    if (ones.size() == 2) {
        g.kind = HKind::GL2;
        for (const Root& r : ones)
            if (is_positive(r)) g.root = r;
        return g;
    }
    if (ones.size() == 6) {
        bool all_long = true;
        for (const Root& r : ones) all_long = all_long && is_long(r);
        if (all_long) {
            g.kind = HKind::SL3;
            return g;
        }
    }
    if (ones.size() == 4) {
        Root a = *ones.begin();
        bool perp = ones.count(orthogonal_root(a)) > 0 || ones.count(-orthogonal_root(a)) > 0;
        if (perp) {
            g.kind = HKind::SO4sub;
            return g;
        }
    }
    throw Error(Errc::NoStandardMatch, "unit roots at " + t.to_string() + " form no centralizer type");
}

InfCase classify(const TorusElement& t) {
    for (const WeylElement& w : weyl_elements()) {
        TorusElement u = weyl_act_torus(w, t);
        std::set<Root> rl = r_lambda(u);
        for (CaseId c : all_cases()) {
            if (rl != standard_subset(c)) continue;
            InfCase ic;
            ic.case_id = c;
            ic.normalizer = w;
            ic.normalized = u;
            ic.r_lambda = rl;
            ic.h_group = h_group_of(u);
            ic.phv = phv_for_case(c);
            return ic;
        }
    }
    throw Error(Errc::NoStandardMatch, "no Weyl translate of " + t.to_string() + " matches a standard subset");
}

TorusElement dual_torus_element(const QValue& chi1, const QValue& chi2) { return {chi1 * chi2, chi1}; }

ReducibilityReport reducibility(const QValue& chi1, const QValue& chi2) {
    ReducibilityReport rep;
    rep.inf_case = classify(dual_torus_element(chi1, chi2));
    rep.irreducible = rep.inf_case.phv.dim() == 0;
    rep.two_orbit = rep.inf_case.phv.kind == PhvKind::P1 || rep.inf_case.phv.kind == PhvKind::P2;
    return rep;
}

}  // namespace g2abv
