#include "g2abv/subphv.hpp"

#include <algorithm>
#include <sstream>

namespace g2abv {

namespace {

const std::vector<std::pair<SubCaseId, const char*>>& id_names() {
    static const std::vector<std::pair<SubCaseId, const char*>> v = {
        {SubCaseId::P1i, "P1i"},   {SubCaseId::P2i, "P2i"},     {SubCaseId::P2ii, "P2ii"},
        {SubCaseId::P3i, "P3i"},   {SubCaseId::P3ii, "P3ii"},   {SubCaseId::P3iii, "P3iii"},
        {SubCaseId::P4i, "P4i"},   {SubCaseId::P4ii, "P4ii"},   {SubCaseId::P4iii, "P4iii"},
        {SubCaseId::P4iv, "P4iv"}, {SubCaseId::P4v, "P4v"},
    };
    return v;
}

SubOrbitMap omap(const char* sub, const char* sat, bool conormal, const char* s_sub, const char* s_amb) {
    SubOrbitMap m;
    m.sub_orbit = sub;
    m.saturation = sat;
    m.v_conormal = conormal;
    m.s_sub_class = s_sub;
    m.s_ambient_class = s_amb;
    return m;
}

SubCase make(SubCaseId id, PhvClass amb, PhvClass sub, const char* desc, int order, std::vector<SubOrbitMap> om) {
    SubCase c;
    c.id = id;
    c.ambient = amb;
    c.sub = sub;
    c.s_description = desc;
    c.s_order = order;
    c.orbit_map = std::move(om);
    return c;
}

PerTerm sh(const char* orbit, const char* chr, int shift) {
    PerTerm t;
    t.sheaf = {orbit, chr};
    t.shift = shift;
    return t;
}

PerTerm fx(Indecomposable f, int shift) {
    PerTerm t;
    t.is_indecomposable = true;
    t.f = f;
    t.shift = shift;
    return t;
}

MicroValue term_nevs(const SubCase& c, const PerTerm& t) {
    return t.is_indecomposable ? nevs_indecomposable(t.f) : nevs(c.sub, t.sheaf);
}

ShiftedChars parse_cell(const std::string& s) {
    ShiftedChars out;
    if (s == "0") return out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        auto lb = part.find('[');
        out.push_back({part.substr(0, lb), std::stoi(part.substr(lb + 1))});
    }
    return out;
}

}  // namespace

std::string sub_case_name(SubCaseId id) {
    for (const auto& [k, n] : id_names())
        if (k == id) return n;
    return "?";
}

SubCaseId sub_case_from_name(const std::string& s) {
    for (const auto& [k, n] : id_names())
        if (s == n) return k;
    throw Error(Errc::UnknownLabel, "unknown sub-case " + s);
}

const SubOrbitMap& SubCase::at(const std::string& sub_orbit) const {
    for (const auto& m : orbit_map)
        if (m.sub_orbit == sub_orbit) return m;
    throw Error(Errc::UnknownLabel, sub_case_name(id) + " has no sub-orbit " + sub_orbit);
}

SubCase sub_case(SubCaseId id) {
    const PhvClass p0 = PhvClass::p0();
    const PhvClass p1 = PhvClass::p1();
    switch (id) {
        case SubCaseId::P1i:
            return make(id, p1, p0, "-1 in GL1", 2, {omap("C0", "C0", false, "1", "1")});
        case SubCaseId::P2i:
            return make(id, PhvClass::p2(0), p0, "generic torus element of GL2", 1, {omap("C0", "C0", false, "1", "1")});
        case SubCaseId::P2ii: {
            SubCase c = make(id, PhvClass::p2(0), p1, "diag(1,-1) in GL2", 2,
                             {omap("C0", "C0", true, "1", "1"), omap("C1", "C1", true, "1", "1")});
            for (auto& m : c.orbit_map) m.character_transfer = {{"1", "1"}};
            return c;
        }
        case SubCaseId::P3i:
            return make(id, PhvClass::p3(1), p0, "(-1,-1) in GL1^2", 2, {omap("C0", "C0", false, "1", "1")});
        case SubCaseId::P3ii:
            return make(id, PhvClass::p3(1), p1, "(1,-1) in GL1^2", 2,
                        {omap("C0", "C0", false, "1", "1"), omap("C1", "C1", false, "1", "1")});
        case SubCaseId::P3iii:
            return make(id, PhvClass::p3(1), p1, "(-1,t) in GL1^2", 2,
                        {omap("C0", "C0", false, "1", "1"), omap("C1", "C2", false, "1", "1")});
        case SubCaseId::P4i:
            return make(id, PhvClass::p4(), p0, "scalar in GL2", 2, {omap("C0", "C0", false, "1", "e")});
        case SubCaseId::P4ii:
            return make(id, PhvClass::p4(), p1, "diag(t,1) in GL2", 1,
                        {omap("C0", "C0", false, "1", "e"), omap("C1", "C1", false, "1", "1")});
        case SubCaseId::P4iii:
            return make(id, PhvClass::p4(), p1, "diag(t,t^-2) in GL2", 1,
                        {omap("C0", "C0", false, "1", "e"), omap("C1", "C2", false, "1", "1")});
        case SubCaseId::P4iv: {
            SubCase c = make(id, PhvClass::p4(), PhvClass::p3(2), "diag(-1,1) in GL2", 2,
                             {omap("C0", "C0", true, "theta", "(12)"), omap("C1", "C1", true, "theta", "theta"),
                              omap("C2", "C2", true, "theta", "theta"), omap("C3", "C3", true, "theta", "(12)")});
            c.orbit_map[0].character_transfer = {{"1", "e"}, {"theta", "(12)"}};
            c.orbit_map[1].character_transfer = {{"1", "1"}, {"theta", "theta"}};
            c.orbit_map[2].character_transfer = {{"1", "1"}, {"theta", "theta"}};
            c.orbit_map[3].character_transfer = {{"1", "e"}, {"theta", "(12)"}};
            return c;
        }
        case SubCaseId::P4v: {
            SubCase c = make(id, PhvClass::p4(), PhvClass::p3(3), "diag(theta3^2,theta3) in GL2", 3,
                             {omap("C0", "C0", true, "theta", "(123)"), omap("C1", "C1", false, "theta", "1"),
                              omap("C2", "C1", false, "theta", "1"), omap("C3", "C3", true, "theta", "(123)")});
            const std::map<std::string, std::string> tr = {{"1", "e"}, {"theta", "(123)"}, {"theta^2", "(123)"}};
            c.orbit_map[0].character_transfer = tr;
            c.orbit_map[3].character_transfer = tr;
            return c;
        }
    }
    throw Error(Errc::UnknownLabel, "unknown sub-case");
}

std::vector<SubCase> sub_cases(const PhvClass& ambient) {
    std::vector<SubCaseId> ids;
    switch (ambient.kind) {
        case PhvKind::P0: break;
        case PhvKind::P1: ids = {SubCaseId::P1i}; break;
        case PhvKind::P2: ids = {SubCaseId::P2i, SubCaseId::P2ii}; break;
        case PhvKind::P3: ids = {SubCaseId::P3i, SubCaseId::P3ii, SubCaseId::P3iii}; break;
        case PhvKind::P4:
            ids = {SubCaseId::P4i, SubCaseId::P4ii, SubCaseId::P4iii, SubCaseId::P4iv, SubCaseId::P4v};
            break;
    }
    std::vector<SubCase> out;
    for (SubCaseId id : ids) {
        SubCase c = sub_case(id);
        c.ambient = ambient;
        out.push_back(c);
    }
    return out;
}

std::string indecomposable_name(Indecomposable f) {
    static const char* n[] = {"F2", "F3", "F4", "F5"};
    return n[static_cast<int>(f)];
}

PhvClass indecomposable_class(Indecomposable f) {
    return (f == Indecomposable::F2 || f == Indecomposable::F3) ? PhvClass::p3(2) : PhvClass::p3(3);
}

MicroValue nevs_indecomposable(Indecomposable f) {
    const PhvClass cls = indecomposable_class(f);
    auto ic = [&](const char* o) { return nevs(cls, {o, "1"}); };
    switch (f) {
        case Indecomposable::F2:
        case Indecomposable::F4: return micro_add(micro_add(ic("C0"), ic("C1")), ic("C2"));
        case Indecomposable::F3: return micro_add(ic("C1"), ic("C3"));
        case Indecomposable::F5: return micro_add(nevs_indecomposable(Indecomposable::F4), ic("C3"));
    }
    return {};
}

std::string PerTerm::to_string() const {
    std::string s = is_indecomposable ? indecomposable_name(f) : sheaf.to_string();
    if (mult != 1) s = std::to_string(mult) + "*" + s;
    return s + "[" + std::to_string(shift) + "]";
}

std::string PerClass::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += t.to_string();
    }
    return s;
}

PerClass restrict(const SubCase& c, const MicroSheaf& p) {
    if (!is_simple(c.ambient, p))
        throw Error(Errc::UnknownLabel, p.to_string() + " is not simple on " + c.ambient.to_string());
    const auto F2 = Indecomposable::F2, F3 = Indecomposable::F3, F4 = Indecomposable::F4, F5 = Indecomposable::F5;
    PerClass r;
    switch (c.id) {
        case SubCaseId::P2ii:
            if (p.orbit == "C0") r.terms = {sh("C0", "1", 0)};
            else r.terms = {sh("C1", "1", 1)};
            return r;
        case SubCaseId::P4iv:
            if (p == MicroSheaf{"C0", "1"}) r.terms = {sh("C0", "1", 0)};
            else if (p == MicroSheaf{"C1", "1"}) r.terms = {sh("C1", "1", 1)};
            else if (p == MicroSheaf{"C2", "1"}) r.terms = {fx(F2, 2), sh("C0", "1", 1)};
            else if (p == MicroSheaf{"C3", "1"}) r.terms = {sh("C3", "1", 2)};
            else if (p == MicroSheaf{"C3", "rho"}) r.terms = {fx(F3, 2), sh("C0", "1", 2), sh("C3", "vartheta", 2)};
            else r.terms = {sh("C3", "vartheta", 2)};
            return r;
        case SubCaseId::P4v:
            if (p == MicroSheaf{"C0", "1"}) r.terms = {sh("C0", "1", 0)};
            else if (p == MicroSheaf{"C1", "1"}) r.terms = {fx(F4, 1)};
            else if (p == MicroSheaf{"C2", "1"}) r.terms = {fx(F4, 2), sh("C0", "1", 1)};
            else if (p == MicroSheaf{"C3", "1"}) r.terms = {sh("C3", "1", 2)};
            else if (p == MicroSheaf{"C3", "rho"})
                r.terms = {sh("C3", "vartheta", 2), sh("C3", "vartheta^2", 2), sh("C0", "1", 2)};
            else r.terms = {fx(F5, 2)};
            return r;
        default:
            throw Error(Errc::UnsupportedSubCase, "no restriction data for " + sub_case_name(c.id));
    }
}

ShiftedChars nevs_restricted(const SubCase& c, const MicroSheaf& p, const std::string& sub_orbit) {
    const int idx = orbit_index(c.sub, sub_orbit);
    const int dim = orbits(c.sub)[idx].dim;
    ShiftedChars out;
    const PerClass rc = restrict(c, p);
    for (const PerTerm& t : rc.terms) {
        const CharCombo v = term_nevs(c, t).per_orbit[idx];
        for (const auto& [chr, m] : v)
            for (int k = 0; k < m * t.mult; ++k) out.push_back({chr, t.shift + dim});
    }
    return out;
}

ShiftedChars nevs_saturation(const SubCase& c, const MicroSheaf& p, const std::string& sub_orbit) {
    const std::string& sat = c.at(sub_orbit).saturation;
    const int idx = orbit_index(c.ambient, sat);
    const int dim = orbits(c.ambient)[idx].dim;
    ShiftedChars out;
    const CharCombo v = nevs(c.ambient, p).per_orbit[idx];
    for (const auto& [chr, m] : v)
        for (int k = 0; k < m; ++k) out.push_back({chr, dim});
    return out;
}

Cyclo trace_chars(const FiniteGroup& g, const ShiftedChars& v, const std::string& cls) {
    Cyclo t;
    for (const auto& [chr, s] : v) t += trace_shifted(g, single(chr), s, cls);
    return t;
}

std::vector<FpfEntry> fpf_check(const SubCase& c) {
    if (c.id != SubCaseId::P2ii && c.id != SubCaseId::P4iv && c.id != SubCaseId::P4v)
        throw Error(Errc::UnsupportedSubCase, "no fixed-point data for " + sub_case_name(c.id));
    const auto amb = orbits(c.ambient);
    const auto sub = orbits(c.sub);
    std::vector<FpfEntry> out;
    for (const MicroSheaf& p : simple_objects(c.ambient)) {
        for (const SubOrbitMap& m : c.orbit_map) {
            FpfEntry e;
            e.p = p;
            e.sub_orbit = m.sub_orbit;
            e.conormal = m.v_conormal;
            e.padding = c.id == SubCaseId::P2ii && p.orbit != m.saturation;
            const FiniteGroup& ga = amb[orbit_index(c.ambient, m.saturation)].a_abv;
            const FiniteGroup& gs = sub[orbit_index(c.sub, m.sub_orbit)].a_abv;
            e.left = trace_chars(ga, nevs_saturation(c, p, m.sub_orbit), m.s_ambient_class);
            e.right = trace_chars(gs, nevs_restricted(c, p, m.sub_orbit), m.s_sub_class);
            e.equal = e.left == e.right;
            out.push_back(e);
        }
    }
    return out;
}

int fixed_dim(const SubCase& c, const std::string& ambient_orbit) {
    orbit_index(c.ambient, ambient_orbit);
    int best = 0;
    const auto sub = orbits(c.sub);
    for (const SubOrbitMap& m : c.orbit_map)
        if (m.saturation == ambient_orbit) best = std::max(best, sub[orbit_index(c.sub, m.sub_orbit)].dim);
    return best;
}

std::vector<SummaryCell> printed_summary(SubCaseId id) {
    struct Raw {
        const char* orbit;
        const char* chr;
        const char* sub;
        const char* left;
        const char* right;
    };
    std::vector<Raw> raw;
    switch (id) {
        case SubCaseId::P2ii:
            raw = {{"C0", "1", "C0", "1[0]", "1[0]"},
                   {"C0", "1", "C1", "0", "0"},
                   {"C1", "1", "C0", "1[0]", "1[0]"},
                   {"C1", "1", "C1", "1[2]", "1[2]"}};
            break;
        case SubCaseId::P4iv:
            raw = {{"C0", "1", "C0", "1[0]", "1[0]"},
                   {"C0", "1", "C1", "0", "0"},
                   {"C0", "1", "C2", "0", "0"},
                   {"C0", "1", "C3", "0", "0"},
                   {"C1", "1", "C0", "rho[0]", "0"},
                   {"C1", "1", "C1", "1[2]", "1[2]"},
                   {"C1", "1", "C2", "0", "0"},
                   {"C1", "1", "C3", "0", "0"},
                   {"C2", "1", "C0", "0", "1[2]+1[1]"},
                   {"C2", "1", "C1", "vartheta[2]", "1[3]"},
                   {"C2", "1", "C2", "1[3]", "1[3]"},
                   {"C2", "1", "C3", "0", "0"},
                   {"C3", "1", "C0", "0", "0"},
                   {"C3", "1", "C1", "0", "0"},
                   {"C3", "1", "C2", "0", "0"},
                   {"C3", "1", "C3", "1[4]", "1[4]"},
                   {"C3", "rho", "C0", "0", "1[2]+vartheta[2]"},
                   {"C3", "rho", "C1", "0", "1[3]+vartheta[3]"},
                   {"C3", "rho", "C2", "vartheta[3]", "vartheta[3]"},
                   {"C3", "rho", "C3", "rho[4]", "1[4]+vartheta[4]"},
                   {"C3", "eps", "C0", "eps[0]", "vartheta[2]"},
                   {"C3", "eps", "C1", "1[2]", "vartheta[3]"},
                   {"C3", "eps", "C2", "vartheta[3]", "vartheta[3]"},
                   {"C3", "eps", "C3", "eps[4]", "vartheta[4]"}};
            break;
        case SubCaseId::P4v:
            raw = {{"C0", "1", "C0", "1[0]", "1[0]"},
                   {"C0", "1", "C1", "0", "0"},
                   {"C0", "1", "C2", "0", "0"},
                   {"C0", "1", "C3", "0", "0"},
                   {"C1", "1", "C0", "rho[0]", "1[1]"},
                   {"C1", "1", "C1", "1[2]", "1[2]"},
                   {"C1", "1", "C2", "1[2]", "1[2]"},
                   {"C1", "1", "C3", "0", "0"},
                   {"C2", "1", "C0", "0", "1[2]+1[1]"},
                   {"C2", "1", "C1", "vartheta[2]", "1[3]"},
                   {"C2", "1", "C2", "vartheta[2]", "1[3]"},
                   {"C2", "1", "C3", "0", "0"},
                   {"C3", "1", "C0", "0", "0"},
                   {"C3", "1", "C1", "0", "0"},
                   {"C3", "1", "C2", "0", "0"},
                   {"C3", "1", "C3", "1[4]", "1[4]"},
                   {"C3", "rho", "C0", "0", "1[2]+vartheta[2]+vartheta^2[2]"},
                   {"C3", "rho", "C1", "0", "vartheta[3]+vartheta^2[3]"},
                   {"C3", "rho", "C2", "0", "vartheta[3]+vartheta^2[3]"},
                   {"C3", "rho", "C3", "rho[4]", "vartheta[4]+vartheta^2[4]"},
                   {"C3", "eps", "C0", "eps[0]", "1[2]"},
                   {"C3", "eps", "C1", "1[2]", "1[3]"},
                   {"C3", "eps", "C2", "1[2]", "1[3]"},
                   {"C3", "eps", "C3", "eps[4]", "1[4]"}};
            break;
        default:
            throw Error(Errc::UnsupportedSubCase, "no summary table for " + sub_case_name(id));
    }
    std::vector<SummaryCell> out;
    for (const Raw& r : raw) out.push_back({{r.orbit, r.chr}, r.sub, parse_cell(r.left), parse_cell(r.right)});
    return out;
}

bool same_shifted(ShiftedChars a, ShiftedChars b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string shifted_to_string(const ShiftedChars& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [chr, k] : v) {
        if (!s.empty()) s += " + ";
        s += chr + "[" + std::to_string(k) + "]";
    }
    return s;
}

}  // namespace g2abv
