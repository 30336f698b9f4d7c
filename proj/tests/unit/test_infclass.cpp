#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "g2abv/infclass.hpp"

using namespace g2abv;

namespace {

QValue q(long num, long den = 1) { return QValue::q_pow(make_rational(num, den)); }
QValue u(long k, long n) { return QValue(RootOfUnity(k, n), 0); }
TorusElement m(const QValue& x, const QValue& y) { return {x, y}; }

// Brute force: the roots with value q, by evaluating every root.
std::set<Root> roots_at_q(const TorusElement& t) {
    std::set<Root> out;
    for (const Root& r : all_roots())
        if (eval_root(r, t) == q(1)) out.insert(r);
    return out;
}

bool conjugate_subsets(const std::set<Root>& a, const std::set<Root>& b) {
    for (const WeylElement& w : weyl_elements()) {
        std::set<Root> img;
        for (const Root& r : a) img.insert(w.apply(r));
        if (img == b) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("roots with value q") {
    CHECK(r_lambda(m(q(2), q(1))) == std::set<Root>{{0, 1}, {1, 1}});
    CHECK(r_lambda(m(QValue::one(), QValue::one())).empty());
    CHECK(r_lambda(m(q(1), q(1))) == std::set<Root>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("anchor classifications") {
    const InfCase c4 = classify(m(q(1), QValue(RootOfUnity(1, 2), 1)));
    CHECK(c4.case_id == CaseId::C4D2);
    CHECK(c4.h_group.kind == HKind::DualTorus);
    CHECK(c4.phv == PhvClass::p3(2));

    const InfCase c6 = classify(m(QValue(RootOfUnity(1, 3), 1), QValue(RootOfUnity(2, 3), 1)));
    CHECK(c6.case_id == CaseId::C6A2);
    CHECK(c6.h_group.kind == HKind::DualTorus);
    CHECK(c6.phv == PhvClass::p3(3));

    const InfCase c7 = classify(m(q(3), q(2)));
    CHECK(c7.case_id == CaseId::C7reg);
    CHECK(c7.h_group.kind == HKind::DualTorus);
    CHECK(c7.phv == PhvClass::p3(1));

    const InfCase c5 = classify(m(q(2), q(1)));
    CHECK(c5.case_id == CaseId::C5);
    CHECK(c5.h_group.kind == HKind::GL2);
    CHECK(c5.h_group.root == Root{1, 0});
    CHECK(c5.phv == PhvClass::p2(0));

    const InfCase c0 = classify(m(QValue::one(), QValue::one()));
    CHECK(c0.case_id == CaseId::C0);
    CHECK(c0.h_group.kind == HKind::G2dual);
    CHECK(c0.phv == PhvClass::p0());

    CHECK(classify(m(q(1), q(1))).case_id == CaseId::C8sub);
    CHECK(classify(m(q(1, 5), q(1, 7))).case_id == CaseId::C0);
}

TEST_CASE("case table") {
    CHECK(all_cases().size() == 9);
    for (CaseId c : all_cases()) {
        CHECK(case_from_number(case_number(c)) == c);
        CHECK(case_dim(c) == phv_for_case(c).dim());
    }
    CHECK(phv_for_case(CaseId::C1short) == PhvClass::p1());
    CHECK(phv_for_case(CaseId::C3) == PhvClass::p2(1));
    CHECK(phv_for_case(CaseId::C8sub) == PhvClass::p4());
}

TEST_CASE("classification is a Weyl-invariant normal form") {
    std::mt19937 g(3);
    std::uniform_int_distribution<int> ord(1, 12), num(-12, 12), den(1, 6), wi(0, 11);
    auto draw = [&] {
        const int n = ord(g);
        std::uniform_int_distribution<int> k(0, n - 1);
        const int kk = k(g);
        return QValue(RootOfUnity(kk, n), make_rational(num(g), den(g)));
    };
    std::vector<TorusElement> sample;
    for (int i = 0; i < 1500; ++i) sample.push_back({draw(), draw()});
    // every standard infinitesimal parameter and its translates too
    sample.push_back(m(q(2), q(1)));
    sample.push_back(m(q(1), q(1)));
    sample.push_back(m(q(3), q(2)));
    for (const TorusElement& t : sample) {
        const InfCase c = classify(t);
        CHECK(weyl_act_torus(c.normalizer, t) == c.normalized);
        CHECK(r_lambda(c.normalized) == standard_subset(c.case_id));
        CHECK(r_lambda(t) == roots_at_q(t));
        CHECK(conjugate_subsets(roots_at_q(t), standard_subset(c.case_id)));
        const TorusElement wt = weyl_act_torus(weyl_elements()[wi(g)], t);
        CHECK(classify(wt).case_id == c.case_id);
        CHECK(classify(wt).phv == c.phv);
    }
}

TEST_CASE("reducibility of principal series") {
    const ReducibilityReport r4 = reducibility(QValue(RootOfUnity(1, 2), 1), u(1, 2));
    CHECK_FALSE(r4.irreducible);
    CHECK_FALSE(r4.two_orbit);
    CHECK(r4.inf_case.case_id == CaseId::C4D2);

    const ReducibilityReport r0 = reducibility(u(1, 5), u(1, 7));
    CHECK(r0.irreducible);
    CHECK(r0.inf_case.case_id == CaseId::C0);

    const QValue chi1 = u(1, 5) * q(1, 3), chi2 = u(4, 5) * q(2, 3);
    const ReducibilityReport r1 = reducibility(chi1, chi2);
    CHECK(r1.inf_case.case_id == CaseId::C1short);
    CHECK(r1.two_orbit);
    CHECK_FALSE(r1.irreducible);
    CHECK(dual_torus_element(chi1, chi2) == m(chi1 * chi2, chi1));
}
