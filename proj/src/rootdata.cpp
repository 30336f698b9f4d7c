#include "g2abv/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace g2abv {

std::string Root::to_string() const { return "(" + std::to_string(p) + "," + std::to_string(r) + ")"; }

const std::vector<Root>& positive_roots() {
    static const std::vector<Root> roots = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    return roots;
}

const std::vector<Root>& all_roots() {
    static const std::vector<Root> roots = [] {
        std::vector<Root> v = positive_roots();
        for (const Root& r : positive_roots()) v.push_back(-r);
        return v;
    }();
    return roots;
}

bool is_root(const Root& r) {
    const auto& v = all_roots();
    return std::find(v.begin(), v.end(), r) != v.end();
}

bool is_positive(const Root& r) {
    const auto& v = positive_roots();
    return std::find(v.begin(), v.end(), r) != v.end();
}

bool is_long(const Root& r) {
    if (!is_root(r)) throw Error(Errc::InvalidRoot, "not a root: " + r.to_string());
    Root a = is_positive(r) ? r : -r;
    return a == Root{1, 0} || a == Root{1, 3} || a == Root{2, 3};
}

namespace {

// W-invariant form with (g1,g1) = 6, (g2,g2) = 2, (g1,g2) = -3.
int form(const Root& a, const Root& b) {
    return 6 * a.p * b.p - 3 * (a.p * b.r + a.r * b.p) + 2 * a.r * b.r;
}

}  // namespace

Root orthogonal_root(const Root& r) {
    if (!is_root(r)) throw Error(Errc::InvalidRoot, "not a root: " + r.to_string());
    for (const Root& s : positive_roots())
        if (form(r, s) == 0) return s;
    throw Error(Errc::InvalidRoot, "no orthogonal root");
}

std::string TorusElement::to_string() const { return "m(" + x.to_string() + ", " + y.to_string() + ")"; }

QValue eval_lattice(int p, int r, const TorusElement& t) {
    // g1 -> x^-1 y^2, g2 -> x y^-1
    return t.x.pow(r - p) * t.y.pow(2 * p - r);
}

QValue eval_root(const Root& r, const TorusElement& t) {
    if (!is_root(r)) throw Error(Errc::InvalidRoot, "not a root: " + r.to_string());
    return eval_lattice(r.p, r.r, t);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    w.m = {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
    return w;
}

WeylElement WeylElement::inverse() const {
    int det = m[0] * m[3] - m[1] * m[2];  // +-1
    WeylElement w;
    w.m = {m[3] * det, -m[1] * det, -m[2] * det, m[0] * det};
    return w;
}

std::string WeylElement::to_string() const {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]]";
}

WeylElement simple_reflection(int i) {
    // Cartan integers <g2, g1^v> = -1, <g1, g2^v> = -3.
    const int cartan[2][2] = {{2, -1}, {-3, 2}};
    WeylElement w;
    if (i == 1)
        w.m = {1 - cartan[0][0], -cartan[0][1], 0, 1};
    else if (i == 2)
        w.m = {1, 0, -cartan[1][0], 1 - cartan[1][1]};
    else
        throw Error(Errc::InvalidParameter, "simple reflection index must be 1 or 2");
    return w;
}

const std::vector<WeylElement>& weyl_elements() {
    static const std::vector<WeylElement> elements = [] {
        std::set<WeylElement> seen{WeylElement{}};
        std::deque<WeylElement> todo{WeylElement{}};
        const WeylElement gens[2] = {simple_reflection(1), simple_reflection(2)};
        while (!todo.empty()) {
            WeylElement w = todo.front();
            todo.pop_front();
            for (const auto& s : gens) {
                WeylElement n = s * w;
                if (seen.insert(n).second) todo.push_back(n);
            }
        }
        return std::vector<WeylElement>(seen.begin(), seen.end());
    }();
    return elements;
}

TorusElement weyl_act_torus(const WeylElement& w, const TorusElement& t) {
    // (w t)(b) = t(w^-1 b); coordinates are the values on (1,2) and (1,1).
    WeylElement wi = w.inverse();
    Root bx = wi.apply({1, 2});
    Root by = wi.apply({1, 1});
    return {eval_lattice(bx.p, bx.r, t), eval_lattice(by.p, by.r, t)};
}

}  // namespace g2abv
