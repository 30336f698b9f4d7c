#include "g2abv/endoscopy.hpp"

#include <algorithm>

namespace g2abv {

// ---------------------------------------------------------------- triples

namespace {

const std::vector<std::pair<TripleFamily, const char*>>& triple_names() {
    static const std::vector<std::pair<TripleFamily, const char*>> v = {
        {TripleFamily::T_reg, "T_reg"}, {TripleFamily::A1_short, "A1_short"}, {TripleFamily::A1_long, "A1_long"},
        {TripleFamily::D2, "D2"},       {TripleFamily::A2, "A2"},             {TripleFamily::G2_triv, "G2_triv"},
    };
    return v;
}

QValue unit(long k, long n) { return QValue(RootOfUnity(k, n), 0); }

}  // namespace

std::string triple_family_name(TripleFamily f) {
    for (const auto& [k, n] : triple_names())
        if (k == f) return n;
    return "?";
}

TripleFamily parse_triple_family(const std::string& s) {
    for (const auto& [k, n] : triple_names())
        if (s == n) return k;
    throw Error(Errc::UnknownLabel, "unknown endoscopic triple '" + s + "'");
}

bool EndoTriple::elliptic() const {
    return family == TripleFamily::D2 || family == TripleFamily::A2 || family == TripleFamily::G2_triv;
}

std::string EndoTriple::to_string() const {
    return triple_family_name(family) + " (" + group_name(endo_group) + ", s = " + s.to_string() + ")";
}

EndoTriple endo_triple(TripleFamily f) {
    // x = zeta(5) satisfies every inequation for the A1 families; the regular
    // torus element uses seventh roots of unity.
    switch (f) {
        case TripleFamily::T_reg: return {f, {unit(1, 7), unit(3, 7)}, GroupId::T};
        case TripleFamily::A1_short: return {f, {unit(1, 5), unit(1, 5)}, GroupId::GL2_short};
        case TripleFamily::A1_long: return {f, {unit(2, 5), unit(1, 5)}, GroupId::GL2_long};
        case TripleFamily::D2: return {f, {unit(0, 1), unit(1, 2)}, GroupId::SO4};
        case TripleFamily::A2: return {f, {unit(2, 3), unit(1, 3)}, GroupId::PGL3};
        case TripleFamily::G2_triv: return {f, {QValue::one(), QValue::one()}, GroupId::G2};
    }
    throw Error(Errc::UnknownLabel, "unknown triple");
}

std::vector<EndoTriple> endo_triples() {
    std::vector<EndoTriple> v;
    for (const auto& [k, n] : triple_names()) v.push_back(endo_triple(k));
    return v;
}

EndoTriple triple_for_group(GroupId g) {
    switch (base_group(g)) {
        case GroupId::T: return endo_triple(TripleFamily::T_reg);
        case GroupId::GL2_short: return endo_triple(TripleFamily::A1_short);
        case GroupId::GL2_long: return endo_triple(TripleFamily::A1_long);
        case GroupId::SO4: return endo_triple(TripleFamily::D2);
        case GroupId::PGL3: return endo_triple(TripleFamily::A2);
        default: return endo_triple(TripleFamily::G2_triv);
    }
}

bool triple_consistent(const EndoTriple& t) {
    std::set<Root> fixed;
    for (const Root& r : all_roots())
        if (eval_root(r, t.s).is_one()) fixed.insert(r);
    const auto g = group_roots(t.endo_group);
    return fixed == std::set<Root>(g.begin(), g.end());
}

std::vector<GroupId> triples_for(const LParam& phi) { return properties(phi).minimal_endoscopic_groups; }

// ---------------------------------------------------------------- parameter lifting

std::string conormal_kind_name(ConormalKind k) {
    switch (k) {
        case ConormalKind::Isomorphism: return "isomorphism";
        case ConormalKind::P2ii: return "P2ii";
        case ConormalKind::P4iv: return "P4iv";
        case ConormalKind::P4v: return "P4v";
        case ConormalKind::None: return "none";
    }
    return "?";
}

std::string lift_column_name(LiftColumn c) {
    switch (c) {
        case LiftColumn::ArthurType: return "Arthur type";
        case LiftColumn::OtherRegular: return "Other regular";
        case LiftColumn::Irregular: return "Irregular";
    }
    return "?";
}

namespace {

const QValue& q1() {
    static const QValue q = QValue::q_pow(1);
    return q;
}

// Unit of the root of the other length orthogonal to r, normalized to positive exponent.
RootOfUnity iota(const Root& r, const TorusElement& t) {
    QValue v = eval_root(orthogonal_root(r), t);
    if (v.exponent() < 0) v = v.inverse();
    return v.unit();
}

// The b root of a pair for the cube-root rule; the other one is c.
Root iota_b_root(const std::vector<Root>& pair, const TorusElement& t) {
    const RootOfUnity w2(2, 3);
    const RootOfUnity i0 = iota(pair[0], t), i1 = iota(pair[1], t);
    if (i0 == i1) return std::min(pair[0], pair[1]);
    if (i0 == w2) return pair[0];
    if (i1 == w2) return pair[1];
    return std::min(pair[0], pair[1]);
}

std::set<Root> source_support(GroupId g, const std::string& family, const std::string& sub, const TorusElement& t) {
    std::vector<Root> hits;
    for (const Root& r : group_roots(g))
        if (eval_root(r, t) == q1()) hits.push_back(r);
    std::sort(hits.begin(), hits.end());
    if (sub.empty() || sub == "a") return {};
    const PhvClass cls = family_phv(g, family);
    if (cls.kind == PhvKind::P1 || cls.kind == PhvKind::P2) return {hits.begin(), hits.end()};
    if (sub == "d") return {hits.begin(), hits.end()};
    if (hits.size() != 2) throw Error(Errc::AmbiguousOrbit, "unexpected root pattern in " + group_name(g));
    if (base_group(g) == GroupId::SO4) {
        for (const Root& r : hits)
            if (is_long(r) == (sub == "b")) return {r};
    }
    const Root b = iota_b_root(hits, t);
    if (sub == "b") return {b};
    return {hits[0] == b ? hits[1] : hits[0]};
}

std::string target_sub(CaseId c, const std::set<Root>& image, const TorusElement& u) {
    const PhvClass cls = phv_for_case(c);
    switch (cls.kind) {
        case PhvKind::P0: return "";
        case PhvKind::P1:
        case PhvKind::P2: return image.empty() ? "a" : "b";
        default: break;
    }
    if (image.empty()) return "a";
    if (c == CaseId::C8sub) {
        const std::vector<Root> xs = {{1, 0}, {1, 1}, {1, 2}, {1, 3}};
        int lo = 5, hi = 0;
        for (const Root& r : image) {
            auto it = std::find(xs.begin(), xs.end(), r);
            if (it == xs.end()) throw Error(Errc::AmbiguousOrbit, "root " + r.to_string() + " outside the cubic");
            const int i = static_cast<int>(it - xs.begin()) + 1;
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
        const int mult = std::max({lo - 1, 4 - hi, hi > lo ? 1 : 0});
        return mult == 3 ? "b" : mult == 2 ? "c" : "d";
    }
    if (image.size() == 2) return "d";
    const Root r = *image.begin();
    if (c == CaseId::C6A2) {
        const RootOfUnity i = iota(r, u);
        if (i == RootOfUnity(2, 3)) return "b";
        if (i == RootOfUnity(1, 3)) return "c";
        throw Error(Errc::AmbiguousOrbit, "cube-root rule does not apply at " + u.to_string());
    }
    return is_long(r) ? "b" : "c";
}

ConormalKind conormal_kind(const PhvClass& src, CaseId c, const std::string& src_sub) {
    const PhvClass tgt = phv_for_case(c);
    if (src == tgt) return ConormalKind::Isomorphism;
    if (src.kind == PhvKind::P1 && tgt.kind == PhvKind::P2) return ConormalKind::P2ii;
    if (src == PhvClass::p3(2) && tgt.kind == PhvKind::P4) return ConormalKind::P4iv;
    if (src == PhvClass::p3(3) && tgt.kind == PhvKind::P4 && (src_sub == "a" || src_sub == "d"))
        return ConormalKind::P4v;
    return ConormalKind::None;
}

bool arthur_target(CaseId c, const std::string& sub) {
    switch (c) {
        case CaseId::C0:
        case CaseId::C1short:
        case CaseId::C2long:
        case CaseId::C4D2:
        case CaseId::C8sub: return true;
        case CaseId::C6A2:
        case CaseId::C7reg: return sub == "a" || sub == "d";
        default: return false;
    }
}

}  // namespace

LiftOutcome lift_torus(GroupId g, const std::string& family, const std::string& sub, const TorusElement& t) {
    LiftOutcome o;
    const InfCase ic = classify(t);
    o.target_case = ic.case_id;
    o.w = ic.normalizer;
    o.support = source_support(g, family, sub, t);
    for (const Root& r : o.support) {
        const Root img = o.w.apply(r);
        if (eval_root(img, ic.normalized) != q1())
            throw Error(Errc::AmbiguousOrbit, "image root " + img.to_string() + " leaves R_lambda");
        o.image.insert(img);
    }
    o.target_sub = target_sub(ic.case_id, o.image, ic.normalized);
    o.kind = conormal_kind(family_phv(g, family), ic.case_id, sub);
    if (o.kind == ConormalKind::None)
        o.column = LiftColumn::Irregular;
    else
        o.column = arthur_target(ic.case_id, o.target_sub) ? LiftColumn::ArthurType : LiftColumn::OtherRegular;
    return o;
}

ParamFamily g2_family_of(const TorusElement& t) {
    const InfCase ic = classify(t);
    const std::string id = std::to_string(case_number(ic.case_id));
    for (const WeylElement& w : weyl_elements()) {
        const TorusElement u = weyl_act_torus(w, t);
        std::map<std::string, std::string> data;
        switch (ic.case_id) {
            case CaseId::C0:
                data = {{"chi1", u.y.to_string()}, {"chi2", (u.x * u.y.inverse()).to_string()}};
                break;
            case CaseId::C1short:
                data = {{"mu", QValue(u.y.unit(), 0).to_string()}, {"a", to_string(u.y.exponent())}};
                break;
            case CaseId::C2long:
                data = {{"mu", QValue(u.x.unit(), 0).to_string()}, {"a", to_string(u.x.exponent())}};
                break;
            case CaseId::C3: {
                const Rational k = u.x.unit().fraction() * 3;
                if (k.get_den() != 1) continue;
                data = {{"n", to_string(k)}};
                break;
            }
            default: break;
        }
        try {
            ParamFamily f = make_family(GroupId::G2, id, data);
            if (standard_lambda(f) == u) return f;
        } catch (const Error&) {
        }
    }
    throw Error(Errc::NoStandardMatch, "no standard G2 family data for " + t.to_string());
}

LiftRecord lift_record(const EndoTriple& triple, const LParam& phi) {
    if (base_group(phi.family.group) != triple.endo_group)
        throw Error(Errc::InvalidParameter, phi.label() + " is not a parameter of " + group_name(triple.endo_group));
    if (phi.family.id == "0'") throw Error(Errc::UnsupportedFamily, "no lifting data for " + phi.label());
    LiftRecord r;
    r.triple = triple;
    r.source = phi;
    const TorusElement t = standard_lambda(phi.family);
    if (triple.endo_group == GroupId::G2) {
        r.target = phi;
        r.kind = ConormalKind::Isomorphism;
    } else {
        const LiftOutcome o = lift_torus(phi.family.group, phi.family.id, phi.sub, t);
        r.target = make_lparam(g2_family_of(t), o.target_sub);
        r.kind = o.kind;
    }
    r.xi_conormal = r.kind != ConormalKind::None;
    const CaseId c = case_from_number(r.target.family.id[0] - '0');
    r.column = !r.xi_conormal ? LiftColumn::Irregular
               : arthur_target(c, r.target.sub) ? LiftColumn::ArthurType
                                                : LiftColumn::OtherRegular;
    r.arthur = r.column == LiftColumn::ArthurType;
    r.relative_dim = r.target.dim - phi.dim;
    return r;
}

LParam lift_parameter(const EndoTriple& triple, const LParam& phi) { return lift_record(triple, phi).target; }

bool is_xi_conormal(const EndoTriple& triple, const LParam& phi) { return lift_record(triple, phi).xi_conormal; }

// ---------------------------------------------------------------- lifting table

const std::vector<LiftingRow>& printed_lifting_table() {
    using G = GroupId;
    using S = std::set<std::string>;
    static const S all_a = {"1a", "2a", "3a", "4a", "5a", "6a", "7a", "8a"};
    static const std::vector<LiftingRow> rows = {
        {G::T, "0", {"0"}, {}, all_a},
        {G::GL2_short, "0", {"0"}, {}, all_a},
        {G::GL2_short, "1a", {"1a"}, {"5a"}, {"4a", "7a", "8a"}},
        {G::GL2_short, "1b", {"1b"}, {"5b"}, {"4c", "7c", "8c"}},
        {G::GL2_long, "0", {"0"}, {}, all_a},
        {G::GL2_long, "1a", {"2a"}, {"3a"}, {"4a", "6a", "7a", "8a"}},
        {G::GL2_long, "1b", {"2b"}, {"3b"}, {"4b", "6b", "7b", "8b"}},
        {G::SO4, "0", {"0"}, {}, all_a},
        {G::SO4, "1a", {"1a"}, {"5a"}, {"7a"}},
        {G::SO4, "1b", {"1b"}, {"5b"}, {"7c"}},
        {G::SO4, "2a", {"2a"}, {"3a"}, {"6a", "7a"}},
        {G::SO4, "2b", {"2b"}, {"3b"}, {"6b", "7b"}},
        {G::SO4, "3a", {"4a", "8a"}, {}, {}},
        {G::SO4, "3b", {"4b", "8b"}, {}, {}},
        {G::SO4, "3c", {"4c", "8c"}, {}, {}},
        {G::SO4, "3d", {"4d", "8d"}, {}, {}},
        {G::PGL3, "0", {"0"}, {}, {"1a", "5a"}},
        {G::PGL3, "1a", {"2a"}, {}, {"4a", "7a"}},
        {G::PGL3, "1b", {"2b"}, {}, {"4b", "7b"}},
        {G::PGL3, "2a", {}, {"3a"}, {}},
        {G::PGL3, "2b", {}, {"3b"}, {}},
        {G::PGL3, "3a", {"6a", "8a"}, {}, {}},
        {G::PGL3, "3b", {}, {"6b"}, {"8b"}},
        {G::PGL3, "3c", {}, {"6c"}, {"8b"}},
        {G::PGL3, "3d", {"6d", "8d"}, {}, {}},
    };
    return rows;
}

std::vector<LiftingRow> computed_lifting_table() {
    std::vector<LiftingRow> out;
    for (const LiftingRow& pr : printed_lifting_table()) {
        LiftingRow row{pr.group, pr.source, {}, {}, {}};
        const std::string fam = pr.source.substr(0, 1);
        const std::string sub = pr.source.substr(1);
        for (const std::string& id : family_ids(GroupId::G2)) {
            const TorusElement t0 = standard_lambda(make_family(GroupId::G2, id));
            for (const WeylElement& w : weyl_elements()) {
                const TorusElement t = weyl_act_torus(w, t0);
                if (detect_family(pr.group, t) != fam) continue;
                const LiftOutcome o = lift_torus(pr.group, fam, sub, t);
                const std::string lbl = o.target_label();
                switch (o.column) {
                    case LiftColumn::ArthurType: row.arthur.insert(lbl); break;
                    case LiftColumn::OtherRegular: row.other.insert(lbl); break;
                    case LiftColumn::Irregular: row.irregular.insert(lbl); break;
                }
            }
        }
        out.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------- distribution lifting

namespace {

SubCaseId sub_case_for(ConormalKind k) {
    switch (k) {
        case ConormalKind::P2ii: return SubCaseId::P2ii;
        case ConormalKind::P4iv: return SubCaseId::P4iv;
        case ConormalKind::P4v: return SubCaseId::P4v;
        default: break;
    }
    throw Error(Errc::UnsupportedRestriction, "no restriction data for " + conormal_kind_name(k));
}

Cyclo parity(int e) { return Cyclo(e % 2 == 0 ? 1 : -1); }

std::string power_class(const FiniteGroup& g, int power) {
    if (g.kind != GroupKind::Cyclic) throw Error(Errc::UnsupportedRestriction, "no class power in " + g.name());
    return g.classes[power % g.n];
}

}  // namespace

LiftedDistribution lift_distribution(const EndoTriple& triple, const LParam& phi, int s_power) {
    const LiftRecord rec = lift_record(triple, phi);
    if (!rec.xi_conormal)
        throw Error(Errc::NotSConormal, phi.label() + " lifts to " + rec.target.label() + " irregularly");
    if (s_power != 1 && triple.family != TripleFamily::A2)
        throw Error(Errc::InvalidParameter, "powers of s are used only for the A2 triple");
    LiftedDistribution d;
    d.target = rec.target;
    d.lifted.group = GroupId::G2;
    const FamilyTable& tbl = family_table(GroupId::G2, rec.target.family.id);
    const PhvClass& phv = tbl.phv;
    const int tgt_idx = orbit_index(phv, rec.target.orbit);

    if (rec.kind == ConormalKind::Isomorphism) {
        const FiniteGroup& a = rec.target.a_abv;
        if (triple.family == TripleFamily::D2 && a.order() == 2)
            d.s_ambient = "theta";
        else if (triple.family == TripleFamily::A2 && a.order() == 3)
            d.s_ambient = power_class(a, s_power);
        else
            d.s_ambient = a.classes[0];
        for (const TableRow& row : tbl.rows) {
            const CharCombo v = nevs(phv, row.sheaf).per_orbit[tgt_idx];
            if (combo_is_zero(v)) continue;
            d.lifted.add(row.repn, parity(rec.target.dim - repn_dim(row.repn)) * character_trace(a, v, d.s_ambient));
        }
    } else {
        const SubCase c = sub_case(sub_case_for(rec.kind));
        const auto subs = subs_of(c.sub);
        const std::string sub_orbit = "C" + std::to_string(std::find(subs.begin(), subs.end(), phi.sub) - subs.begin());
        const SubOrbitMap& m = c.at(sub_orbit);
        if (m.saturation != rec.target.orbit)
            throw Error(Errc::AmbiguousOrbit, "sub-orbit " + sub_orbit + " saturates to " + m.saturation + ", not " +
                                                  rec.target.orbit);
        const FiniteGroup a_sub = orbit(c.sub, sub_orbit).a_abv;
        const std::string s_sub = s_power == 1 ? m.s_sub_class : power_class(a_sub, s_power);
        d.s_ambient = m.s_ambient_class;
        for (const TableRow& row : tbl.rows) {
            const Cyclo v = trace_chars(a_sub, nevs_restricted(c, row.sheaf, sub_orbit), s_sub);
            if (!v.is_zero()) d.lifted.add(row.repn, parity(repn_dim(row.repn)) * v);
        }
    }
    d.expected = theta(rec.target, d.s_ambient);
    d.equal = d.lifted == d.expected;
    return d;
}

// ---------------------------------------------------------------- inner forms

int kottwitz_sign(GroupId form) {
    // split ranks; e = (-1)^(rank of the split form - rank of the inner form)
    static const std::map<GroupId, int> rank = {
        {GroupId::SO4, 2}, {GroupId::SO4_delta, 0}, {GroupId::PGL3, 2}, {GroupId::PGL3_delta, 0},
        {GroupId::PGL3_deltaPrime, 0},
    };
    auto it = rank.find(form);
    if (it == rank.end()) return 1;
    return (rank.at(base_group(form)) - it->second) % 2 == 0 ? 1 : -1;
}

std::vector<PureInnerForm> pure_inner_forms(GroupId base) {
    base = base_group(base);
    std::vector<PureInnerForm> v = {{base, base, "1", 1}};
    if (base == GroupId::SO4) v.push_back({base, GroupId::SO4_delta, "delta", kottwitz_sign(GroupId::SO4_delta)});
    if (base == GroupId::PGL3) {
        v.push_back({base, GroupId::PGL3_delta, "delta", kottwitz_sign(GroupId::PGL3_delta)});
        v.push_back({base, GroupId::PGL3_deltaPrime, "delta'", kottwitz_sign(GroupId::PGL3_deltaPrime)});
    }
    return v;
}

VirtualChar lift_to_inner_form(GroupId base, const PureInnerForm& delta, const LParam& phi) {
    if (base_group(phi.family.group) != base_group(base) || delta.base != base_group(base))
        throw Error(Errc::InvalidParameter, phi.label() + " and " + group_name(delta.form) + " do not match");
    const std::string& one = phi.a_abv.classes[0];
    if (delta.form == delta.base) return theta(phi, one);
    if (phi.family.id != "3" || phi.sub != "d")
        throw Error(Errc::NotRelevant, phi.label() + " is not relevant to " + group_name(delta.form));
    return theta_on_form(phi, one, delta.form).scaled(Cyclo(delta.kottwitz_sign));
}

// ---------------------------------------------------------------- EC decomposition

namespace {

struct EndoSource {
    EndoTriple triple;
    std::string family_spec;  // "SO4:3" or "PGL3:3"
    std::string data;         // "?chi=..."
    int power = 1;
};

EndoSource source_for(const LParam& phi, const std::string& s) {
    const std::string& fam = phi.family.id;
    if (fam == "4" && s == "theta") return {endo_triple(TripleFamily::D2), "SO4:3", "?chi=-1", 1};
    if (fam == "6" && (s == "theta" || s == "theta^2"))
        return {endo_triple(TripleFamily::A2), "PGL3:3", "?chi=zeta(3)", s == "theta" ? 1 : 2};
    if (fam == "8" && (s == "(12)" || s == "theta")) return {endo_triple(TripleFamily::D2), "SO4:3", "?chi=1", 1};
    if (fam == "8" && s == "(123)") return {endo_triple(TripleFamily::A2), "PGL3:3", "?chi=1", 1};
    throw Error(Errc::NotSConormal, "no endoscopic source for " + phi.label() + " at " + s);
}

}  // namespace

EcResult ec_decompose(const RepnLabel& pi) {
    if (pi.group != GroupId::G2) throw Error(Errc::InvalidParameter, "EC decomposition is for G2 representations");
    EcResult res;
    res.pi = pi;
    const ParamFamily f = make_family(GroupId::G2, pi.family);
    const InversionResult inv = invert(f);
    const InvertedRep* ir = nullptr;
    for (const InvertedRep& r : inv.reps)
        if (r.pi == pi) ir = &r;
    if (!ir || !ir->own_packet_only)
        throw Error(Errc::NotSConormal, pi.to_string() + " is not expressed through its own parameter");

    VirtualChar total;
    for (const auto& [ref, coef] : ir->combination) {
        const LParam phi = make_lparam(f, ref.sub);
        EcTerm term;
        term.s_class = ref.s;
        term.coefficient = coef;
        if (ref.s == phi.a_abv.classes[0]) {
            term.triple = endo_triple(TripleFamily::G2_triv);
            term.source = phi.label();
            term.lifted = theta(phi, ref.s);
        } else {
            const EndoSource src = source_for(phi, ref.s);
            term.triple = src.triple;
            term.s_power = src.power;
            bool found = false;
            for (const char* sub : {"a", "b", "c", "d"}) {
                const LParam e = parse_param_spec(src.family_spec + sub + src.data);
                const LiftRecord rec = lift_record(src.triple, e);
                if (!(rec.target == phi)) continue;
                if (!rec.xi_conormal)
                    throw Error(Errc::NotSConormal, e.label() + " lifts to " + phi.label() + " irregularly");
                const LiftedDistribution d = lift_distribution(src.triple, e, src.power);
                if (d.s_ambient != ref.s || !d.equal)
                    throw Error(Errc::NotSConormal, "lift of " + e.label() + " is not Theta at " + ref.s);
                term.source = e.to_string();
                term.lifted = d.lifted;
                found = true;
                break;
            }
            if (!found) throw Error(Errc::NotSConormal, "no conormal source for " + phi.label() + " at " + ref.s);
        }
        total = total + term.lifted.scaled(coef);
        res.terms.push_back(term);
    }
    VirtualChar unit;
    unit.add(pi, Cyclo(1));
    res.round_trip = total == unit;
    return res;
}

}  // namespace g2abv
