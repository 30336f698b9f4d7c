#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2abv/phv.hpp"

using namespace g2abv;

namespace {

std::vector<PhvClass> all_classes() {
    return {PhvClass::p0(),   PhvClass::p0(2),  PhvClass::p1(),   PhvClass::p2(0), PhvClass::p2(1),
            PhvClass::p3(1), PhvClass::p3(2), PhvClass::p3(3), PhvClass::p4()};
}

// First orthogonality relation, weighted by class sizes.
Cyclo inner(const FiniteGroup& g, int a, int b) {
    Cyclo s;
    for (std::size_t c = 0; c < g.classes.size(); ++c) s += Cyclo(g.class_sizes[c]) * g.table[a][c] * g.table[b][c].conj();
    return s / Cyclo(g.order());
}

}  // namespace

TEST_CASE("character tables are orthonormal") {
    for (const FiniteGroup& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::s3()}) {
        int total = 0;
        for (std::size_t c = 0; c < g.classes.size(); ++c) {
            total += g.class_sizes[c];
            CHECK(g.centralizers[c] * g.class_sizes[c] == g.order());
        }
        CHECK(total == g.order());
        for (std::size_t a = 0; a < g.characters.size(); ++a)
            for (std::size_t b = 0; b < g.characters.size(); ++b) CHECK(inner(g, a, b) == Cyclo(a == b ? 1 : 0));
    }
}

TEST_CASE("group labels") {
    const FiniteGroup s3 = FiniteGroup::s3();
    CHECK(s3.classes == std::vector<std::string>{"e", "(12)", "(123)"});
    CHECK(s3.characters == std::vector<std::string>{"1", "eps", "rho"});
    CHECK(s3.degree("rho") == 2);
    CHECK(s3.value("eps", "(12)") == Cyclo(-1));
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    CHECK(z3.classes == std::vector<std::string>{"1", "theta", "theta^2"});
    CHECK(z3.characters == std::vector<std::string>{"1", "vartheta", "vartheta^2"});
    CHECK(z3.value("vartheta", "theta") == Cyclo::embed(RootOfUnity(1, 3)));
    CHECK(FiniteGroup::cyclic(1) == FiniteGroup::trivial());
}

TEST_CASE("orbit data") {
    const auto p4 = orbits(PhvClass::p4());
    REQUIRE(p4.size() == 4);
    const std::vector<int> dims{0, 2, 3, 4};
    for (int i = 0; i < 4; ++i) CHECK(p4[i].dim == dims[i]);
    CHECK(p4[0].a_abv == FiniteGroup::s3());
    CHECK(p4[1].a_abv == FiniteGroup::cyclic(2));
    CHECK(p4[2].a_abv == FiniteGroup::cyclic(2));
    CHECK(p4[3].a_abv == FiniteGroup::s3());
    CHECK(p4[3].a_c == FiniteGroup::s3());
    CHECK(p4[0].is_closed);
    CHECK(p4[3].is_open);

    const auto p1 = orbits(PhvClass::p1());
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].dim == 0);
    CHECK(p1[1].dim == 1);
    for (const OrbitData& o : p1) CHECK(o.a_abv == FiniteGroup::trivial());

    const auto p0 = orbits(PhvClass::p0(2));
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].a_c == FiniteGroup::cyclic(2));
    CHECK(p0[0].a_abv == FiniteGroup::cyclic(2));

    for (int n = 1; n <= 3; ++n)
        for (const OrbitData& o : orbits(PhvClass::p3(n))) {
            CHECK(o.a_abv == FiniteGroup::cyclic(n));
            CHECK(o.a_c == (o.label == "C3" ? FiniteGroup::cyclic(n) : FiniteGroup::trivial()));
        }
}

TEST_CASE("NEvs rows") {
    const PhvClass p4 = PhvClass::p4();
    const MicroValue v = nevs(p4, {"C1", "1"});
    CHECK(v.per_orbit[0] == single("rho"));
    CHECK(v.per_orbit[1] == single("1"));
    CHECK(combo_is_zero(v.per_orbit[2]));
    CHECK(combo_is_zero(v.per_orbit[3]));
    for (int n = 2; n <= 3; ++n) {
        const MicroValue t = nevs(PhvClass::p3(n), {"C3", "vartheta"});
        for (const CharCombo& c : t.per_orbit) CHECK(c == single("vartheta"));
    }
    const MicroValue p1 = nevs(PhvClass::p1(), {"C0", "1"});
    CHECK(p1.per_orbit[0] == single("1"));
    CHECK(combo_is_zero(p1.per_orbit[1]));
}

TEST_CASE("NEvs is nonzero at the own orbit") {
    for (const PhvClass& cls : all_classes()) {
        const auto orbs = orbits(cls);
        for (const MicroSheaf& p : simple_objects(cls)) {
            const MicroValue v = nevs(cls, p);
            CHECK(v.per_orbit.size() == orbs.size());
            CHECK_FALSE(combo_is_zero(v.per_orbit[orbit_index(cls, p.orbit)]));
        }
    }
}

TEST_CASE("Fourier transform") {
    const PhvClass p1 = PhvClass::p1();
    CHECK(fourier(p1, {"C0", "1"}) == MicroSheaf{"C1", "1"});
    CHECK(fourier(p1, {"C1", "1"}) == MicroSheaf{"C0", "1"});
    for (int n = 2; n <= 3; ++n) CHECK(fourier(PhvClass::p3(n), {"C3", "vartheta"}) == MicroSheaf{"C3", "vartheta"});
    CHECK(fourier(PhvClass::p4(), {"C3", "eps"}) == MicroSheaf{"C3", "eps"});
    for (const PhvClass& cls : all_classes())
        for (const MicroSheaf& p : simple_objects(cls)) {
            CHECK(fourier(cls, fourier(cls, p)) == p);
            CHECK(is_simple(cls, fourier(cls, p)));
        }
}

TEST_CASE("printed P4 Fourier column is not an involution") {
    const PhvClass p4 = PhvClass::p4();
    int differ = 0;
    bool involutive = true;
    for (const MicroSheaf& p : simple_objects(p4)) {
        differ += fourier(p4, p) != fourier_printed(p4, p);
        involutive = involutive && fourier_printed(p4, fourier_printed(p4, p)) == p;
    }
    CHECK(differ == 2);
    CHECK_FALSE(involutive);
}

TEST_CASE("shifted traces") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2), s3 = FiniteGroup::s3();
    CHECK(trace_shifted(z2, single("vartheta"), 3, "theta") == Cyclo(1));
    CHECK(trace_shifted(s3, single("rho"), 0, "(123)") == Cyclo(-1));
    for (const std::string& chr : s3.characters) CHECK(trace_shifted(s3, single(chr), 0, "e") == Cyclo(s3.degree(chr)));
    CHECK(character_trace(s3, combo_add(single("rho"), single("eps")), "(12)") == Cyclo(-1));
}
