#include "g2abv/distributions.hpp"

#include <algorithm>

#include "g2abv/subphv.hpp"

namespace g2abv {

// ---------------------------------------------------------------- VirtualChar

void VirtualChar::add(const RepnLabel& pi, const Cyclo& c) {
    Cyclo v = at(pi) + c;
    if (v.is_zero())
        coeffs.erase(pi);
    else
        coeffs[pi] = v;
}

Cyclo VirtualChar::at(const RepnLabel& pi) const {
    auto it = coeffs.find(pi);
    return it == coeffs.end() ? Cyclo() : it->second;
}

VirtualChar VirtualChar::operator+(const VirtualChar& o) const {
    VirtualChar r = *this;
    for (const auto& [pi, c] : o.coeffs) r.add(pi, c);
    return r;
}

VirtualChar VirtualChar::operator-(const VirtualChar& o) const { return *this + o.scaled(Cyclo(-1)); }

VirtualChar VirtualChar::scaled(const Cyclo& c) const {
    VirtualChar r;
    r.group = group;
    for (const auto& [pi, v] : coeffs) r.add(pi, v * c);
    return r;
}

std::string VirtualChar::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [pi, c] : coeffs) {
        std::string coef;
        if (c == Cyclo(1))
            coef = "";
        else if (c == Cyclo(-1))
            coef = "-";
        else if (c.is_rational())
            coef = c.to_string() + "*";
        else
            coef = "(" + c.to_string() + ")*";
        if (!out.empty()) out += " + ";
        out += coef + "Theta[" + pi.name + "]";
    }
    return out;
}

// ---------------------------------------------------------------- linear algebra

namespace {

// Row-reduces m in place; returns pivot columns.
std::vector<std::size_t> reduce(CycloMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Cyclo inv = m[row][col].inverse();
        for (auto& e : m[row]) e = e * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Cyclo f = m[r][col];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int matrix_rank(CycloMatrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(reduce(m, m[0].size()).size());
}

std::optional<std::vector<Cyclo>> solve_linear(const CycloMatrix& a, const std::vector<Cyclo>& b) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    CycloMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    const auto pivots = reduce(m, n);
    for (std::size_t r = pivots.size(); r < m.size(); ++r)
        if (!m[r][n].is_zero()) return std::nullopt;
    std::vector<Cyclo> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
    return x;
}

CycloMatrix matrix_inverse(const CycloMatrix& a) {
    const std::size_t n = a.size();
    CycloMatrix m = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(Cyclo(i == j ? 1 : 0));
    if (reduce(m, n).size() != n) throw Error(Errc::SingularSystem, "matrix is singular");
    CycloMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
    return inv;
}

// ---------------------------------------------------------------- theta

namespace {

Cyclo sign(int e) { return Cyclo(e % 2 == 0 ? 1 : -1); }

const std::string& identity_class(const LParam& phi) { return phi.a_abv.classes.at(0); }

std::string class_product(const FiniteGroup& g, const std::string& a, const std::string& b) {
    if (a == g.classes[0]) return b;
    if (b == g.classes[0]) return a;
    if (g.kind != GroupKind::Cyclic) throw Error(Errc::UnsupportedFamily, "class product in " + g.name());
    return g.classes[(g.class_index(a) + g.class_index(b)) % g.n];
}

}  // namespace

VirtualChar theta_on_form(const LParam& phi, const std::string& s, GroupId form) {
    if (!phi.a_abv.has_class(s)) throw Error(Errc::UnknownLabel, "no class '" + s + "' in A^ABV of " + phi.label());
    VirtualChar v;
    v.group = form;
    for (const auto& [pi, chr] : abv_packet(phi)) {
        if (pi.group != form) continue;
        v.add(pi, sign(phi.dim - repn_dim(pi)) * coefficient(phi, s, pi));
    }
    return v;
}

VirtualChar theta(const LParam& phi, const std::string& s) { return theta_on_form(phi, s, phi.family.group); }

ArthurCheck theta_arthur_check(const LParam& phi, const std::string& s) {
    if (!phi.arthur) throw Error(Errc::NotArthurType, phi.label() + " is not of Arthur type");
    ArthurCheck c;
    c.s = s;
    c.s_psi = phi.arthur->s_psi;
    c.definitional = theta(phi, s);
    const std::string t = class_product(phi.a_abv, c.s_psi, s);
    c.arthur_form.group = phi.family.group;
    for (const auto& [pi, chr] : abv_packet(phi))
        if (pi.group == phi.family.group) c.arthur_form.add(pi, phi.a_abv.value(chr, t));
    c.holds = c.definitional == c.arthur_form;
    return c;
}

CounterexampleReport counterexample_remark(const LParam& phi, const RepnLabel& pi) {
    CounterexampleReport r;
    r.param = phi.label();
    r.pi = pi;
    r.value = sign(phi.dim - repn_dim(pi)) * coefficient(phi, identity_class(phi), pi);
    r.no_s_matches = true;
    for (const std::string& s : phi.a_abv.classes) {
        Cyclo v = coefficient(phi, s, pi);
        if (std::find(r.attained.begin(), r.attained.end(), v) == r.attained.end()) r.attained.push_back(v);
        if (v == r.value) r.no_s_matches = false;
    }
    return r;
}

// ---------------------------------------------------------------- span

bool packet_bijective(const LParam& phi) {
    const auto pk = abv_packet(phi);
    if (pk.size() != phi.a_abv.characters.size()) return false;
    std::vector<std::string> seen;
    for (const auto& [pi, chr] : pk) {
        if (!phi.a_abv.has_character(chr)) return false;
        if (std::find(seen.begin(), seen.end(), chr) != seen.end()) return false;
        seen.push_back(chr);
    }
    return true;
}

std::vector<SpanEntry> span_check(const ParamFamily& f) {
    std::vector<SpanEntry> out;
    for (const LParam& phi : params_of(f)) {
        const auto pk = abv_packet(phi);
        CycloMatrix m;
        for (const std::string& s : phi.a_abv.classes) {
            VirtualChar t = theta(phi, s);
            std::vector<Cyclo> row;
            for (const auto& e : pk) row.push_back(t.at(e.first));
            m.push_back(row);
        }
        SpanEntry e;
        e.param = phi.label();
        e.distributions = static_cast<int>(m.size());
        e.rank = matrix_rank(m);
        e.packet_size = static_cast<int>(pk.size());
        e.spans_equal = e.rank == e.packet_size;
        e.bijective = packet_bijective(phi);
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------- inversion

std::string closed_form_status_name(ClosedFormStatus s) {
    switch (s) {
        case ClosedFormStatus::Match: return "match";
        case ClosedFormStatus::Mismatch: return "mismatch";
        case ClosedFormStatus::NoData: return "no data";
    }
    return "?";
}

bool InversionResult::all_ok() const {
    for (const auto& r : reps)
        if (!r.back_substitution_ok) return false;
    return true;
}

std::optional<int> fixed_dim_for(const LParam& phi, const std::string& s) {
    if (s == identity_class(phi)) return phi.dim;
    if (phi.family.group != GroupId::G2 || phi.family.id != "8") return std::nullopt;
    if (s == "(12)" || s == "theta") return fixed_dim(sub_case(SubCaseId::P4iv), phi.orbit);
    if (s == "(123)") return fixed_dim(sub_case(SubCaseId::P4v), phi.orbit);
    return std::nullopt;
}

namespace {

struct Column {
    DistRef ref;
    VirtualChar v;
};

std::optional<std::vector<Cyclo>> express(const std::vector<Column>& cols, const std::vector<RepnLabel>& basis,
                                          const RepnLabel& target) {
    CycloMatrix a(basis.size(), std::vector<Cyclo>(cols.size()));
    std::vector<Cyclo> b(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = cols[j].v.at(basis[i]);
        b[i] = Cyclo(basis[i] == target ? 1 : 0);
    }
    return solve_linear(a, b);
}

}  // namespace

InversionResult invert(const ParamFamily& f) {
    InversionResult res;
    res.family = f;
    const auto params = params_of(f);
    std::vector<RepnLabel> basis;
    for (const RepnLabel& r : family_repns(f.group, f.id))
        if (r.group == f.group) basis.push_back(r);

    auto columns_of = [&](const LParam& phi) {
        std::vector<Column> cols;
        for (const std::string& s : phi.a_abv.classes) cols.push_back({{phi.sub, s}, theta(phi, s)});
        return cols;
    };

    for (const RepnLabel& pi : basis) {
        InvertedRep ir;
        ir.pi = pi;
        const std::string own = repn_sub(pi);
        const LParam own_phi = make_lparam(f, own);
        std::vector<Column> cols = columns_of(own_phi);
        auto x = express(cols, basis, pi);
        ir.own_packet_only = x.has_value();
        if (!x) {
            // own parameter first, then the rest from the most open orbit down
            for (auto it = params.rbegin(); it != params.rend(); ++it) {
                if (it->sub == own) continue;
                for (Column& c : columns_of(*it)) cols.push_back(std::move(c));
            }
            x = express(cols, basis, pi);
        }
        if (!x) throw Error(Errc::SingularSystem, "cannot express Theta of " + pi.to_string() + " in " + f.to_string());

        VirtualChar back;
        back.group = f.group;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((*x)[j].is_zero()) continue;
            ir.combination.push_back({cols[j].ref, (*x)[j]});
            back = back + cols[j].v.scaled((*x)[j]);
        }
        VirtualChar unit;
        unit.add(pi, Cyclo(1));
        ir.back_substitution_ok = back == unit;

        if (ir.own_packet_only && packet_bijective(own_phi)) {
            const std::string chr = row_of(pi).abv[std::find(family_table(f.group, f.id).subs.begin(),
                                                              family_table(f.group, f.id).subs.end(), own) -
                                                    family_table(f.group, f.id).subs.begin()];
            for (std::size_t j = 0; j < cols.size(); ++j) {
                ClosedFormEntry e;
                e.dist = cols[j].ref;
                e.solved = (*x)[j];
                const auto fd = fixed_dim_for(own_phi, e.dist.s);
                if (fd) {
                    e.closed = sign(*fd - repn_dim(pi)) * own_phi.a_abv.value(chr, e.dist.s).conj() /
                               Cyclo(own_phi.a_abv.centralizer_order(e.dist.s));
                    e.status = *e.closed == e.solved ? ClosedFormStatus::Match : ClosedFormStatus::Mismatch;
                }
                ir.closed_form.push_back(e);
            }
        }
        res.reps.push_back(ir);
    }
    return res;
}

CycloMatrix local_inverse(const LParam& phi) {
    if (!packet_bijective(phi)) throw Error(Errc::SingularSystem, phi.label() + " is not bijective");
    const auto pk = abv_packet(phi);
    CycloMatrix m;  // m[s][pi]
    for (const std::string& s : phi.a_abv.classes) {
        VirtualChar t = theta(phi, s);
        std::vector<Cyclo> row;
        for (const auto& e : pk) row.push_back(t.at(e.first));
        m.push_back(row);
    }
    // Theta_s = sum_pi m[s][pi] Theta_pi, so Theta_pi = sum_s inv[pi][s] Theta_s.
    return matrix_inverse(m);
}

// ---------------------------------------------------------------- printed claims

namespace {

VirtualChar claim(const std::string& family, const std::vector<std::pair<const char*, Cyclo>>& terms) {
    VirtualChar v;
    for (const auto& [name, c] : terms) v.add({GroupId::G2, family, name}, c);
    return v;
}

}  // namespace

std::vector<ThetaClaim> printed_theta_claims() {
    const Cyclo w = Cyclo::embed(RootOfUnity(1, 3));
    const Cyclo w2 = w * w;
    const Cyclo one(1), m1(-1), two(2);
    const char* j6 = "J_g2(1,I(theta3xtheta3^-1))";
    const char* i6 = "I0(G2[theta3])";
    const char* i6b = "I0(G2[theta3^2])";
    struct Raw {
        const char* param;
        const char* s;
        VirtualChar v;
    };
    std::vector<Raw> raw = {
        {"6a", "1", claim("6", {{j6, one}, {i6, m1}, {i6b, m1}})},
        {"6a", "theta", claim("6", {{j6, one}, {i6, -w}, {i6b, -w2}})},
        {"6a", "theta^2", claim("6", {{j6, one}, {i6, -w2}, {i6b, -w}})},
        {"8d", "e", claim("8", {{"pi(1)'", one}, {"pi(1)", two}, {"I0(G2[1])", one}})},
        {"8d", "(12)", claim("8", {{"pi(1)'", one}, {"I0(G2[1])", m1}})},
        {"8d", "(123)", claim("8", {{"pi(1)'", one}, {"pi(1)", m1}, {"I0(G2[1])", one}})},
        {"8b", "1", claim("8", {{"J_g1(1/2,St)", one}, {"J_g2(1/2,St)", m1}, {"I0(G2[1])", one}})},
        // theta2 = -1 in the second coefficient
        {"8b", "theta", claim("8", {{"J_g1(1/2,St)", one}, {"J_g2(1/2,St)", one}, {"I0(G2[1])", one}})},
    };
    std::vector<ThetaClaim> out;
    for (Raw& r : raw) {
        const std::string p = r.param;
        const LParam phi = make_lparam(make_family(GroupId::G2, p.substr(0, 1)), p.substr(1));
        ThetaClaim c;
        c.param = phi.label();
        c.s = r.s;
        c.printed = r.v;
        c.computed = theta(phi, r.s);
        c.agrees = c.printed == c.computed;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- standard modules

namespace {

using Vec = std::vector<int>;

// Composition series of the Levi-induced modules in family 4, on the basis
// pi(phi_4a) .. pi(phi_4d).
struct MuicData {
    Vec g1_st = {0, 1, 0, 1};
    Vec g2_st = {0, 0, 1, 1};
    Vec g1_det = {1, 0, 1, 0};
    Vec g2_det = {1, 1, 0, 0};
};

MuicData muic_family4() { return {}; }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

TransitionMatrix standard_module_matrix(const ParamFamily& f) {
    if (f.group != GroupId::G2 || (f.id != "4" && f.id != "6"))
        throw Error(Errc::UnsupportedFamily, "no standard-module data for " + f.to_string());
    TransitionMatrix t;
    t.family = f;
    for (const LParam& phi : params_of(f))
        for (const auto& [pi, chr] : l_packet(phi))
            if (chr == "1") t.cols.push_back(pi);
    if (f.id == "6") {
        t.rows = {"I(nu.theta3xtheta3)", "I_g1(1/2,theta3^-1.St)", "I_g1(1/2,theta3.St)", "pi(theta3)"};
        t.entries = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
        return t;
    }
    const MuicData d = muic_family4();
    t.rows = {"I(theta2.nuxtheta2)", "I_g1(1/2,theta2.St)", "I_g2(1/2,theta2.St)", "pi(theta2)"};
    t.entries = {add(d.g1_st, d.g1_det), d.g1_st, d.g2_st, {0, 0, 0, 1}};
    return t;
}

ScaffoldReport stability_scaffold(const ParamFamily& f) {
    ScaffoldReport r;
    r.transition = standard_module_matrix(f);
    const auto& e = r.transition.entries;
    const std::size_t n = e.size();
    r.unitriangular = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i == j && e[i][j] != 1) || (j < i && e[i][j] != 0)) r.unitriangular = false;
    CycloMatrix m(n, std::vector<Cyclo>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Cyclo(e[i][j]);
    const CycloMatrix inv = matrix_inverse(m);
    r.theta_matrix.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.theta_matrix[i][j] = static_cast<int>(inv[i][j].coeff(0).get_num().get_si());
    r.printed = {{1, -1, -1, 1}, {0, 1, 0, -1}, {0, 0, 1, -1}, {0, 0, 0, 1}};
    r.printed_matches = r.printed == r.theta_matrix;

    if (f.id == "4") {
        const MuicData d = muic_family4();
        r.routes_agree = add(d.g1_st, d.g1_det) == add(d.g2_st, d.g2_det);
    }

    const auto params = params_of(f);
    std::vector<VirtualChar> y;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        VirtualChar v;
        for (std::size_t k = 0; k < n; ++k)
            if (e[j][k] != 0) v.add(r.transition.cols[k], Cyclo(e[j][k]));
        y.push_back(v);
    }
    y.push_back(theta(params.back(), identity_class(params.back())));
    r.identity_holds = true;
    for (std::size_t i = 0; i < n; ++i) {
        VirtualChar rhs;
        for (std::size_t j = 0; j < n; ++j) rhs = rhs + y[j].scaled(Cyclo(r.printed[i][j]));
        if (rhs != theta(params[i], identity_class(params[i]))) r.identity_holds = false;
    }
    return r;
}

}  // namespace g2abv
