#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2abv/exactnum.hpp"

namespace g2abv {

// p*g1 + r*g2 in the simple roots of the dual group; g1 is long.
struct Root {
    int p = 0;
    int r = 0;

    bool operator==(const Root& o) const { return p == o.p && r == o.r; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const { return p != o.p ? p < o.p : r < o.r; }
    Root operator-() const { return {-p, -r}; }
    Root operator+(const Root& o) const { return {p + o.p, r + o.r}; }
    Root operator-(const Root& o) const { return {p - o.p, r - o.r}; }

    std::string to_string() const;
};

bool is_root(const Root& r);
bool is_long(const Root& r);
bool is_positive(const Root& r);
// Six positive roots followed by their negatives.
const std::vector<Root>& all_roots();
const std::vector<Root>& positive_roots();
// The root of the other length orthogonal to r (positive representative).
Root orthogonal_root(const Root& r);

// m(x, y) with x = (g1+2g2)(t), y = (g1+g2)(t).
struct TorusElement {
    QValue x;
    QValue y;

    bool operator==(const TorusElement& o) const { return x == o.x && y == o.y; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }
    bool operator<(const TorusElement& o) const { return x != o.x ? x < o.x : y < o.y; }
    std::string to_string() const;
};

// Evaluates any element of the root lattice.
QValue eval_lattice(int p, int r, const TorusElement& t);
QValue eval_root(const Root& r, const TorusElement& t);

// 2x2 integer matrix acting on (p, r) column vectors, row-major.
struct WeylElement {
    std::array<int, 4> m{1, 0, 0, 1};

    Root apply(const Root& r) const { return {m[0] * r.p + m[1] * r.r, m[2] * r.p + m[3] * r.r}; }
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool is_identity() const { return m == std::array<int, 4>{1, 0, 0, 1}; }
    bool operator==(const WeylElement& o) const { return m == o.m; }
    bool operator<(const WeylElement& o) const { return m < o.m; }
    std::string to_string() const;
};

WeylElement simple_reflection(int i);  // i = 1 or 2
// The 12 elements, lexicographically sorted by matrix entries; memoized.
const std::vector<WeylElement>& weyl_elements();
TorusElement weyl_act_torus(const WeylElement& w, const TorusElement& t);

}  // namespace g2abv
