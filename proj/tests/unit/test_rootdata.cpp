#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "g2abv/rootdata.hpp"

using namespace g2abv;

namespace {

// Gram matrix in the basis (g1, g2), g1 long: (g1,g1) = 6, (g2,g2) = 2, (g1,g2) = -3.
int form(const Root& a, const Root& b) { return 6 * a.p * b.p + 2 * a.r * b.r - 3 * (a.p * b.r + a.r * b.p); }

// Reflection in a root from the bilinear form alone.
Root reflect(const Root& a, const Root& v) {
    const int k = 2 * form(v, a) / form(a, a);
    return {v.p - k * a.p, v.r - k * a.r};
}

QValue q(long num, long den = 1) { return QValue::q_pow(make_rational(num, den)); }
QValue unit(long k, long n) { return QValue(RootOfUnity(k, n), 0); }

}  // namespace

TEST_CASE("root system") {
    CHECK(all_roots().size() == 12);
    CHECK(positive_roots().size() == 6);
    int long_roots = 0;
    for (const Root& r : all_roots()) {
        CHECK(is_root(r));
        CHECK(is_root(-r));
        long_roots += is_long(r);
        CHECK(is_long(r) == (form(r, r) == 6));
    }
    CHECK(long_roots == 6);
    // closed under every reflection
    for (const Root& a : all_roots())
        for (const Root& v : all_roots()) CHECK(is_root(reflect(a, v)));
}

TEST_CASE("orthogonal root has the other length") {
    for (const Root& r : all_roots()) {
        const Root o = orthogonal_root(r);
        CHECK(form(r, o) == 0);
        CHECK(is_long(r) != is_long(o));
        CHECK(is_positive(o));
    }
}

TEST_CASE("evaluation on the torus") {
    const TorusElement t{unit(1, 5) * q(1, 3), unit(2, 7) * q(2)};
    const QValue x = t.x, y = t.y;
    CHECK(eval_root({1, 1}, t) == y);
    CHECK(eval_root({1, 2}, t) == x);
    CHECK(eval_root({0, 1}, t) == x * y.inverse());
    CHECK(eval_root({1, 0}, t) == x.inverse() * y * y);
    CHECK(eval_root({1, 3}, t) == x * x * y.inverse());
    CHECK(eval_root({2, 3}, t) == x * y);
    for (const Root& r : all_roots()) CHECK(eval_root(-r, t) == eval_root(r, t).inverse());
    for (const Root& a : all_roots())
        for (const Root& b : all_roots())
            if (is_root(a + b)) CHECK(eval_root(a + b, t) == eval_root(a, t) * eval_root(b, t));
}

TEST_CASE("anchor evaluations") {
    const TorusElement t5{q(2), q(1)};
    CHECK(eval_root({0, 1}, t5) == q(1));
    CHECK(eval_root({1, 1}, t5) == q(1));
    const TorusElement one{QValue::one(), QValue::one()};
    for (const Root& r : all_roots()) CHECK(eval_root(r, one).is_one());
    const TorusElement t4{q(1), QValue(RootOfUnity(1, 2), 1)};
    std::set<Root> at_q;
    for (const Root& r : all_roots())
        if (eval_root(r, t4) == q(1)) at_q.insert(r);
    CHECK(at_q == std::set<Root>{{1, 0}, {1, 2}});
}

TEST_CASE("Weyl group") {
    const auto& w = weyl_elements();
    REQUIRE(w.size() == 12);
    CHECK(std::is_sorted(w.begin(), w.end()));
    std::set<WeylElement> all(w.begin(), w.end());
    CHECK(all.size() == 12);
    for (const WeylElement& a : w) {
        CHECK(all.count(a.inverse()));
        CHECK((a * a.inverse()).is_identity());
        for (const WeylElement& b : w) CHECK(all.count(a * b));
        std::set<Root> image;
        for (const Root& r : all_roots()) image.insert(a.apply(r));
        CHECK(image == std::set<Root>(all_roots().begin(), all_roots().end()));
    }
}

TEST_CASE("simple reflections match the bilinear form") {
    const WeylElement s1 = simple_reflection(1), s2 = simple_reflection(2);
    CHECK(s1.apply({0, 1}) == Root{1, 1});
    for (const Root& v : all_roots()) {
        CHECK(s1.apply(v) == reflect({1, 0}, v));
        CHECK(s2.apply(v) == reflect({0, 1}, v));
    }
    // s1 s2 has order 6
    WeylElement p;
    int order = 0;
    do {
        p = p * (s1 * s2);
        ++order;
    } while (!p.is_identity());
    CHECK(order == 6);
}

TEST_CASE("Weyl action on the torus is compatible with roots") {
    const TorusElement t{unit(1, 3) * q(5, 6), unit(3, 4) * q(-1, 2)};
    for (const WeylElement& w : weyl_elements()) {
        const TorusElement wt = weyl_act_torus(w, t);
        for (const Root& r : all_roots()) CHECK(eval_root(w.apply(r), wt) == eval_root(r, t));
    }
    CHECK(weyl_act_torus(WeylElement{}, t) == t);
}
