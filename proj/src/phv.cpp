#include "g2abv/phv.hpp"

#include <sstream>

namespace g2abv {

// ---------------------------------------------------------------- groups

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g;
    g.kind = GroupKind::Trivial;
    g.n = 1;
    g.classes = {"1"};
    g.class_sizes = {1};
    g.centralizers = {1};
    g.characters = {"1"};
    g.table = {{Cyclo(1)}};
    return g;
}

namespace {

std::string power_name(const std::string& base, int k) {
    if (k == 0) return "1";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw Error(Errc::InvalidParameter, "cyclic group order must be positive");
    if (n == 1) return trivial();
    FiniteGroup g;
    g.kind = GroupKind::Cyclic;
    g.n = n;
    for (int j = 0; j < n; ++j) {
        g.classes.push_back(power_name("theta", j));
        g.class_sizes.push_back(1);
        g.centralizers.push_back(n);
        g.characters.push_back(power_name("vartheta", j));
    }
    for (int k = 0; k < n; ++k) {
        std::vector<Cyclo> row;
        for (int j = 0; j < n; ++j) row.push_back(Cyclo::embed(RootOfUnity(static_cast<long>(j) * k, n)));
        g.table.push_back(row);
    }
    return g;
}

FiniteGroup FiniteGroup::s3() {
    FiniteGroup g;
    g.kind = GroupKind::S3;
    g.n = 6;
    g.classes = {"e", "(12)", "(123)"};
    g.class_sizes = {1, 3, 2};
    g.centralizers = {6, 2, 3};
    g.characters = {"1", "eps", "rho"};
    g.table = {{Cyclo(1), Cyclo(1), Cyclo(1)}, {Cyclo(1), Cyclo(-1), Cyclo(1)}, {Cyclo(2), Cyclo(0), Cyclo(-1)}};
    return g;
}

std::string FiniteGroup::name() const {
    switch (kind) {
        case GroupKind::Trivial: return "1";
        case GroupKind::Cyclic: return "Z" + std::to_string(n);
        case GroupKind::S3: return "S3";
    }
    return "?";
}

int FiniteGroup::class_index(const std::string& c) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == c) return static_cast<int>(i);
    // the identity has several spellings
    if (c == "1" || c == "e" || c == "id") return 0;
    throw Error(Errc::UnknownLabel, "group " + name() + " has no class '" + c + "'");
}

int FiniteGroup::char_index(const std::string& c) const {
    for (std::size_t i = 0; i < characters.size(); ++i)
        if (characters[i] == c) return static_cast<int>(i);
    throw Error(Errc::UnknownLabel, "group " + name() + " has no character '" + c + "'");
}

bool FiniteGroup::has_class(const std::string& c) const {
    for (const auto& x : classes)
        if (x == c) return true;
    return c == "1" || c == "e" || c == "id";
}

bool FiniteGroup::has_character(const std::string& c) const {
    for (const auto& x : characters)
        if (x == c) return true;
    return false;
}

Cyclo FiniteGroup::value(const std::string& chr, const std::string& cls) const {
    return table[char_index(chr)][class_index(cls)];
}

int FiniteGroup::degree(const std::string& chr) const {
    return static_cast<int>(table[char_index(chr)][0].coeff(0).get_num().get_si());
}

int FiniteGroup::centralizer_order(const std::string& cls) const { return centralizers[class_index(cls)]; }

// ---------------------------------------------------------------- combos

std::string combo_to_string(const CharCombo& c) {
    if (combo_is_zero(c)) return "0";
    std::string s;
    for (const auto& [chr, m] : c) {
        if (m == 0) continue;
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += chr;
    }
    return s;
}

CharCombo combo_add(const CharCombo& a, const CharCombo& b) {
    CharCombo r = a;
    for (const auto& [chr, m] : b) r[chr] += m;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

bool combo_is_zero(const CharCombo& c) {
    for (const auto& [chr, m] : c)
        if (m != 0) return false;
    return true;
}

CharCombo single(const std::string& chr, int mult) {
    CharCombo c;
    if (mult != 0) c[chr] = mult;
    return c;
}

std::string MicroSheaf::to_string() const { return "IC(" + character + "_" + orbit + ")"; }

std::string MicroValue::to_string(const std::vector<OrbitData>& orbs) const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < per_orbit.size(); ++i) {
        if (i) os << ", ";
        os << (i < orbs.size() ? orbs[i].label : "?") << ": " << combo_to_string(per_orbit[i]);
    }
    os << "}";
    return os.str();
}

MicroValue micro_add(const MicroValue& a, const MicroValue& b) {
    if (a.per_orbit.size() != b.per_orbit.size())
        throw Error(Errc::InvalidParameter, "adding micro values on different spaces");
    MicroValue r;
    for (std::size_t i = 0; i < a.per_orbit.size(); ++i) r.per_orbit.push_back(combo_add(a.per_orbit[i], b.per_orbit[i]));
    return r;
}

// ---------------------------------------------------------------- spaces

namespace {

FiniteGroup p0_group(const PhvClass& cls) {
    if (cls.p0_s3) return FiniteGroup::s3();
    return FiniteGroup::cyclic(cls.n <= 1 ? 1 : cls.n);
}

OrbitData make_orbit(const std::string& label, int dim, bool open, bool closed, FiniteGroup ac, FiniteGroup aabv) {
    OrbitData o;
    o.label = label;
    o.dim = dim;
    o.is_open = open;
    o.is_closed = closed;
    o.a_c = std::move(ac);
    o.a_abv = std::move(aabv);
    return o;
}

MicroValue zero_value(const PhvClass& cls) {
    MicroValue v;
    v.per_orbit.assign(orbits(cls).size(), CharCombo{});
    return v;
}

MicroValue row(std::initializer_list<const char*> entries) {
    MicroValue v;
    for (const char* e : entries) v.per_orbit.push_back(std::string(e) == "0" ? CharCombo{} : single(e));
    return v;
}

void require_simple(const PhvClass& cls, const MicroSheaf& p) {
    if (!is_simple(cls, p))
        throw Error(Errc::UnknownLabel, p.to_string() + " is not a simple object of " + cls.to_string());
}

}  // namespace

std::vector<OrbitData> orbits(const PhvClass& cls) {
    const FiniteGroup triv = FiniteGroup::trivial();
    switch (cls.kind) {
        case PhvKind::P0: {
            FiniteGroup g = p0_group(cls);
            return {make_orbit("C0", 0, true, true, g, g)};
        }
        case PhvKind::P1:
            return {make_orbit("C0", 0, false, true, triv, triv), make_orbit("C1", 1, true, false, triv, triv)};
        case PhvKind::P2:
            return {make_orbit("C0", 0, false, true, triv, triv), make_orbit("C1", 2, true, false, triv, triv)};
        case PhvKind::P3: {
            FiniteGroup z = FiniteGroup::cyclic(cls.n);
            return {make_orbit("C0", 0, false, true, triv, z), make_orbit("C1", 1, false, false, triv, z),
                    make_orbit("C2", 1, false, false, triv, z), make_orbit("C3", 2, true, false, z, z)};
        }
        case PhvKind::P4: {
            FiniteGroup s3 = FiniteGroup::s3();
            FiniteGroup z2 = FiniteGroup::cyclic(2);
            return {make_orbit("C0", 0, false, true, triv, s3), make_orbit("C1", 2, false, false, triv, z2),
                    make_orbit("C2", 3, false, false, triv, z2), make_orbit("C3", 4, true, false, s3, s3)};
        }
    }
    return {};
}

int orbit_index(const PhvClass& cls, const std::string& label) {
    auto orbs = orbits(cls);
    for (std::size_t i = 0; i < orbs.size(); ++i)
        if (orbs[i].label == label) return static_cast<int>(i);
    throw Error(Errc::UnknownLabel, cls.to_string() + " has no orbit " + label);
}

OrbitData orbit(const PhvClass& cls, const std::string& label) { return orbits(cls)[orbit_index(cls, label)]; }

std::vector<MicroSheaf> simple_objects(const PhvClass& cls) {
    std::vector<MicroSheaf> out;
    for (const OrbitData& o : orbits(cls)) out.push_back({o.label, "1"});
    for (const OrbitData& o : orbits(cls))
        for (const std::string& chr : o.a_c.characters)
            if (chr != "1") out.push_back({o.label, chr});
    // P4 lists rho before eps
    if (cls.kind == PhvKind::P4) {
        std::vector<MicroSheaf> v(out.begin(), out.begin() + 4);
        v.push_back({"C3", "rho"});
        v.push_back({"C3", "eps"});
        return v;
    }
    return out;
}

bool is_simple(const PhvClass& cls, const MicroSheaf& p) {
    for (const MicroSheaf& s : simple_objects(cls))
        if (s == p) return true;
    return false;
}

MicroValue nevs(const PhvClass& cls, const MicroSheaf& p) {
    require_simple(cls, p);
    switch (cls.kind) {
        case PhvKind::P0: {
            MicroValue v;
            v.per_orbit.push_back(single(p.character));
            return v;
        }
        case PhvKind::P1:
        case PhvKind::P2:
        case PhvKind::P3: {
            MicroValue v = zero_value(cls);
            if (p.character == "1") {
                v.per_orbit[orbit_index(cls, p.orbit)] = single("1");
            } else {
                // IC(vartheta^k_C3) has vartheta^k at every orbit
                for (auto& c : v.per_orbit) c = single(p.character);
            }
            return v;
        }
        case PhvKind::P4: {
            if (p == MicroSheaf{"C0", "1"}) return row({"1", "0", "0", "0"});
            if (p == MicroSheaf{"C1", "1"}) return row({"rho", "1", "0", "0"});
            if (p == MicroSheaf{"C2", "1"}) return row({"0", "vartheta", "1", "0"});
            if (p == MicroSheaf{"C3", "1"}) return row({"0", "0", "0", "1"});
            if (p == MicroSheaf{"C3", "rho"}) return row({"0", "0", "vartheta", "rho"});
            return row({"eps", "1", "vartheta", "eps"});
        }
    }
    return {};
}

MicroSheaf fourier(const PhvClass& cls, const MicroSheaf& p) {
    require_simple(cls, p);
    switch (cls.kind) {
        case PhvKind::P0: return p;
        case PhvKind::P1:
        case PhvKind::P2: return {p.orbit == "C0" ? "C1" : "C0", "1"};
        case PhvKind::P3: {
            if (p.character != "1") return p;
            static const std::map<std::string, std::string> swap = {
                {"C0", "C3"}, {"C3", "C0"}, {"C1", "C2"}, {"C2", "C1"}};
            return {swap.at(p.orbit), "1"};
        }
        case PhvKind::P4: {
            if (p == MicroSheaf{"C0", "1"}) return {"C3", "1"};
            if (p == MicroSheaf{"C3", "1"}) return {"C0", "1"};
            if (p == MicroSheaf{"C1", "1"}) return {"C3", "rho"};
            if (p == MicroSheaf{"C3", "rho"}) return {"C1", "1"};
            return p;
        }
    }
    return p;
}

MicroSheaf fourier_printed(const PhvClass& cls, const MicroSheaf& p) {
    if (cls.kind != PhvKind::P4) return fourier(cls, p);
    require_simple(cls, p);
    if (p == MicroSheaf{"C0", "1"}) return {"C3", "1"};
    if (p == MicroSheaf{"C1", "1"}) return {"C3", "rho"};
    if (p == MicroSheaf{"C3", "1"}) return {"C1", "1"};
    if (p == MicroSheaf{"C3", "rho"}) return {"C0", "1"};
    return p;
}

Cyclo character_trace(const FiniteGroup& g, const CharCombo& rep, const std::string& cls) {
    Cyclo t;
    for (const auto& [chr, m] : rep) t += Cyclo(m) * g.value(chr, cls);
    return t;
}

Cyclo trace_shifted(const FiniteGroup& g, const CharCombo& rep, int shift, const std::string& cls) {
    Cyclo t = character_trace(g, rep, cls);
    return (shift % 2 == 0) ? t : -t;
}

}  // namespace g2abv
