#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2abv/distributions.hpp"

using namespace g2abv;

namespace {

RepnLabel G(const std::string& name) { return find_repn(GroupId::G2, name); }
LParam P(const std::string& spec) { return parse_param_spec(spec); }
Cyclo R(long n, long d = 1) { return Cyclo(make_rational(n, d)); }

VirtualChar vc(std::initializer_list<std::pair<const char*, Cyclo>> terms) {
    VirtualChar v;
    for (const auto& [n, c] : terms) v.add(G(n), c);
    return v;
}

// Definition of Theta_{phi,s} written out directly from packet data.
VirtualChar theta_oracle(const LParam& phi, const std::string& s) {
    VirtualChar v;
    for (const auto& [pi, chr] : abv_packet(phi)) {
        const int e = (phi.dim - repn_dim(pi)) % 2 == 0 ? 1 : -1;
        v.add(pi, Cyclo(e) * phi.a_abv.value(chr, s));
    }
    return v;
}

}  // namespace

TEST_CASE("virtual characters") {
    VirtualChar a = vc({{"pi(1)", R(2)}, {"pi(1)'", R(1)}});
    const VirtualChar b = vc({{"pi(1)", R(-2)}});
    CHECK((a + b) == vc({{"pi(1)'", R(1)}}));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(R(1, 2)).at(G("pi(1)")) == R(1));
    a.add(G("pi(1)'"), R(-1));
    CHECK(a.coeffs.size() == 1);
}

TEST_CASE("linear algebra") {
    const CycloMatrix m{{R(1), R(1)}, {R(1), R(-1)}};
    CHECK(matrix_rank(m) == 2);
    const CycloMatrix inv = matrix_inverse(m);
    CHECK(inv == CycloMatrix{{R(1, 2), R(1, 2)}, {R(1, 2), R(-1, 2)}});
    CHECK(matrix_rank({{R(1), R(2)}, {R(2), R(4)}}) == 1);
    CHECK_THROWS_AS(matrix_inverse({{R(1), R(2)}, {R(2), R(4)}}), Error);
    const auto x = solve_linear(m, {R(3), R(1)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Cyclo>{R(2), R(1)});
    CHECK_FALSE(solve_linear({{R(1)}, {R(1)}}, {R(1), R(2)}).has_value());
}

TEST_CASE("theta examples") {
    CHECK(theta(P("G2:8d"), "(12)") == vc({{"pi(1)'", R(1)}, {"I0(G2[1])", R(-1)}}));
    CHECK(theta(P("G2:8d"), "e") == vc({{"pi(1)'", R(1)}, {"pi(1)", R(2)}, {"I0(G2[1])", R(1)}}));
    CHECK(theta(P("G2:4d"), "1") == vc({{"pi(theta2)", R(1)}, {"I0(G2[-1])", R(1)}}));
}

TEST_CASE("theta matches its definition for every parameter and class") {
    for (const LParam& phi : all_g2_params())
        for (const std::string& s : phi.a_abv.classes) CHECK(theta(phi, s) == theta_oracle(phi, s));
}

TEST_CASE("theta at s = 1 has +1 on same-dimension members") {
    for (const LParam& phi : all_g2_params()) {
        const VirtualChar t = theta(phi, phi.a_abv.classes[0]);
        for (const auto& [pi, chr] : l_packet(phi))
            if (repn_dim(pi) == phi.dim && chr == "1") CHECK(t.at(pi) == R(1));
    }
}

TEST_CASE("Arthur identities") {
    int n = 0;
    for (const LParam& phi : all_g2_params())
        if (phi.arthur)
            for (const std::string& s : phi.a_abv.classes) {
                CHECK(theta_arthur_check(phi, s).holds);
                ++n;
            }
    CHECK(n > 0);
    CHECK(theta_arthur_check(P("G2:8d"), "(12)").s_psi == "e");
    CHECK(theta_arthur_check(P("G2:4a"), "theta").holds);
    CHECK_THROWS_AS(theta_arthur_check(P("G2:3a"), "1"), Error);
}

TEST_CASE("no s realizes the coronal sign") {
    for (const char* spec : {"G2:6b", "G2:6c"}) {
        const CounterexampleReport r = counterexample_remark(P(spec), G("I0(G2[theta3])"));
        CHECK(r.value == R(-1));
        CHECK(r.no_s_matches);
        CHECK(r.attained.size() == 3);
        for (const Cyclo& c : r.attained) CHECK(c * c * c == R(1));
    }
    const CounterexampleReport t = counterexample_remark(P("G2:7a"), G("1_G2"));
    CHECK(t.value == R(1));
    CHECK_FALSE(t.no_s_matches);
}

TEST_CASE("span and bijectivity") {
    int bij = 0;
    for (const std::string& id : family_ids(GroupId::G2))
        for (const SpanEntry& e : span_check(make_family(GroupId::G2, id))) {
            CHECK(e.spans_equal == e.bijective);
            bij += e.bijective;
            if (e.param == "G2:6a") {
                CHECK(e.distributions == 3);
                CHECK(e.rank == 3);
            }
            if (e.param == "G2:8b") {
                CHECK(e.distributions == 2);
                CHECK(e.packet_size == 3);
                CHECK_FALSE(e.spans_equal);
            }
        }
    CHECK(bij == 23);
    CHECK(packet_bijective(P("G2:0")));
}

TEST_CASE("family inversion reproduces every representation") {
    for (const std::string& id : family_ids(GroupId::G2)) {
        const InversionResult inv = invert(make_family(GroupId::G2, id));
        CHECK(inv.all_ok());
        for (const InvertedRep& r : inv.reps) {
            // back-substitute here as well
            VirtualChar sum;
            for (const auto& [d, c] : r.combination)
                sum = sum + theta(make_lparam(inv.family, d.sub), d.s).scaled(c);
            CHECK(sum == vc({{r.pi.name.c_str(), R(1)}}));
        }
    }
}

TEST_CASE("S3 inversion for the 8d packet") {
    const InversionResult inv = invert(make_family(GroupId::G2, "8"));
    for (const InvertedRep& r : inv.reps) {
        if (r.pi.name != "pi(1)'") continue;
        std::map<std::string, Cyclo> byclass;
        for (const auto& [d, c] : r.combination) {
            CHECK(d.sub == "d");
            byclass[d.s] = c;
        }
        CHECK(byclass["e"] == R(1, 6));
        CHECK(byclass["(12)"] == R(1, 2));
        CHECK(byclass["(123)"] == R(1, 3));
    }
}

TEST_CASE("6a local inverse") {
    const CycloMatrix li = local_inverse(P("G2:6a"));
    const Cyclo tb = Cyclo::embed(RootOfUnity(2, 3));  // conjugate of theta3
    const CycloMatrix expect{{R(1, 3), R(1, 3), R(1, 3)},
                             {R(1, 3), tb * R(1, 3), tb * tb * R(1, 3)},
                             {R(1, 3), tb * tb * R(1, 3), tb * R(1, 3)}};
    CHECK(li == expect);
}

TEST_CASE("singleton family") {
    const InversionResult inv = invert(make_family(GroupId::G2, "0"));
    REQUIRE(inv.reps.size() == 1);
    REQUIRE(inv.reps[0].combination.size() == 1);
    CHECK(inv.reps[0].combination[0].second == R(1));
}

TEST_CASE("displayed expansions") {
    int disagree = 0;
    for (const ThetaClaim& c : printed_theta_claims()) {
        CHECK(c.computed == theta(P(c.param), c.s));
        if (!c.agrees) {
            ++disagree;
            CHECK(c.param == "G2:6a");
        }
    }
    CHECK(disagree == 3);
}

TEST_CASE("stability scaffolds") {
    const ScaffoldReport s6 = stability_scaffold(make_family(GroupId::G2, "6"));
    CHECK(s6.theta_matrix[0] == std::vector<int>{1, -1, -1, 1});
    CHECK(s6.unitriangular);
    CHECK(s6.printed_matches);
    CHECK(s6.identity_holds);
    const ScaffoldReport s4 = stability_scaffold(make_family(GroupId::G2, "4"));
    CHECK(s4.unitriangular);
    CHECK(s4.identity_holds);
    CHECK(s4.routes_agree);
    CHECK_THROWS_AS(stability_scaffold(make_family(GroupId::G2, "8")), Error);
}

TEST_CASE("closed form agrees whenever it has data") {
    for (const std::string& id : family_ids(GroupId::G2))
        for (const InvertedRep& r : invert(make_family(GroupId::G2, id)).reps)
            for (const ClosedFormEntry& e : r.closed_form)
                if (e.status != ClosedFormStatus::NoData) CHECK(e.status == ClosedFormStatus::Match);
}
