#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "g2abv/packets.hpp"

using namespace g2abv;

namespace {

RepnLabel G(const std::string& name) { return find_repn(GroupId::G2, name); }
LParam P(const std::string& spec) { return parse_param_spec(spec); }

std::set<std::pair<std::string, std::string>> names(const std::vector<PacketEntry>& v) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [pi, c] : v) out.insert({pi.name, c});
    return out;
}

}  // namespace

TEST_CASE("G2 parameters") {
    const auto all = all_g2_params();
    REQUIRE(all.size() == 25);
    std::map<std::string, int> dims;
    for (const LParam& p : all) dims[p.family.id + p.sub] = p.dim;
    CHECK(dims["8d"] == 4);
    CHECK(dims["8c"] == 3);
    CHECK(dims["6a"] == 0);
    CHECK(dims["6b"] == 1);
    CHECK(dims["4d"] == 2);
    CHECK(P("G2:8d").a_abv == FiniteGroup::s3());
    CHECK(P("G2:8b").a_abv == FiniteGroup::cyclic(2));
    CHECK(P("G2:6c").a_abv == FiniteGroup::cyclic(3));
    CHECK(P("G2:4a").a_phi == FiniteGroup::trivial());
}

TEST_CASE("L-packets") {
    CHECK(names(l_packet(P("G2:4d"))) == std::set<std::pair<std::string, std::string>>{{"pi(theta2)", "1"}, {"I0(G2[-1])", "vartheta"}});
    CHECK(names(l_packet(P("G2:8d"))) ==
          std::set<std::pair<std::string, std::string>>{{"pi(1)'", "1"}, {"pi(1)", "rho"}, {"I0(G2[1])", "eps"}});
    CHECK(names(l_packet(P("G2:7a"))) == std::set<std::pair<std::string, std::string>>{{"1_G2", "1"}});
}

TEST_CASE("ABV-packets") {
    CHECK(names(abv_packet(P("G2:4a"))) ==
          std::set<std::pair<std::string, std::string>>{{"J_g2(1,I(1xtheta2))", "1"}, {"I0(G2[-1])", "vartheta"}});
    REQUIRE(coronal(P("G2:4a")).size() == 1);
    CHECK(coronal(P("G2:4a"))[0].name == "I0(G2[-1])");
    CHECK(names(abv_packet(P("G2:6b"))) == std::set<std::pair<std::string, std::string>>{{"J_g1(1/2,theta3^2.St)", "1"},
                                                                                         {"I0(G2[theta3])", "vartheta"},
                                                                                         {"I0(G2[theta3^2])", "vartheta^2"}});
    CHECK(names(abv_packet(P("G2:8a"))) ==
          std::set<std::pair<std::string, std::string>>{{"J_g2(1,I(1x1))", "1"}, {"J_g1(1/2,St)", "rho"}, {"I0(G2[1])", "eps"}});
}

TEST_CASE("coefficients") {
    CHECK(coefficient(P("G2:4a"), "theta", G("I0(G2[-1])")) == Cyclo(-1));
    CHECK(coefficient(P("G2:8d"), "e", G("pi(1)")) == Cyclo(2));
    CHECK(coefficient(P("G2:8a"), "(123)", G("I0(G2[1])")) == Cyclo(1));
    CHECK_THROWS_AS(coefficient(P("G2:8a"), "e", G("St_G2")), Error);
}

TEST_CASE("table and geometric coefficients agree everywhere") {
    int checked = 0;
    for (GroupId g : {GroupId::G2, GroupId::T, GroupId::GL2_short, GroupId::GL2_long, GroupId::SO4, GroupId::PGL3})
        for (const std::string& id : family_ids(g))
            for (const LParam& phi : params_of(make_family(g, id)))
                for (const auto& [pi, chr] : abv_packet(phi))
                    for (const std::string& s : phi.a_abv.classes) {
                        CHECK(coefficient_table(phi, s, pi) == coefficient_geometric(phi, s, pi));
                        ++checked;
                    }
    CHECK(checked > 100);
}

TEST_CASE("Vogan bijection") {
    CHECK(vogan_bijection(GroupId::G2, "4").at(G("I0(G2[-1])")) == MicroSheaf{"C3", "vartheta"});
    CHECK(vogan_bijection(GroupId::G2, "8").at(G("pi(1)")) == MicroSheaf{"C3", "rho"});
    const auto b0 = vogan_bijection(GroupId::G2, "0");
    REQUIRE(b0.size() == 1);
    CHECK(simple_objects(PhvClass::p0()) == std::vector<MicroSheaf>{b0.begin()->second});
    // a bijection onto the simple objects in every family
    for (const std::string& id : family_ids(GroupId::G2)) {
        std::set<MicroSheaf> img;
        for (const auto& [pi, p] : vogan_bijection(GroupId::G2, id)) {
            img.insert(p);
            CHECK(repn_of_sheaf(GroupId::G2, id, p) == pi);
        }
        const auto simples = simple_objects(family_phv(GroupId::G2, id));
        CHECK(img == std::set<MicroSheaf>(simples.begin(), simples.end()));
    }
}

TEST_CASE("every representation sits in one row") {
    std::set<RepnLabel> seen;
    int rows = 0;
    for (const FamilyTable& t : g2_tables())
        for (const TableRow& r : t.rows) {
            seen.insert(r.repn);
            ++rows;
        }
    CHECK(static_cast<int>(seen.size()) == rows);
    CHECK_THROWS_AS(find_repn(GroupId::G2, "no such"), Error);
}

TEST_CASE("parameter properties") {
    CHECK(P("G2:1b?a=1/2").arthur.has_value());
    CHECK_FALSE(P("G2:3a").arthur.has_value());
    const Properties p = properties(P("G2:8d"));
    CHECK(p.elliptic);
    CHECK(p.arthur);
    CHECK(p.minimal_endoscopic_groups == std::vector<GroupId>{GroupId::SO4, GroupId::PGL3});
    std::set<std::string> elliptic;
    for (const LParam& q : all_g2_params())
        if (q.is_elliptic) elliptic.insert(q.family.id + q.sub);
    CHECK(elliptic == std::set<std::string>{"4d", "6d", "7d", "8d"});
}

TEST_CASE("Aubert duality on parameters") {
    CHECK(aubert_dual(P("G2:8a")) == P("G2:8d"));
    CHECK(aubert_dual(P("G2:0")) == P("G2:0"));
    CHECK(aubert_dual(P("G2:6b")) == P("G2:6c"));
    for (const LParam& q : all_g2_params()) CHECK(aubert_dual(aubert_dual(q)) == q);
}

TEST_CASE("spherical and generic") {
    CHECK(is_spherical(G("J_g2(1,I(1x1))")));
    CHECK(is_generic(G("St_G2")));
    CHECK_FALSE(is_spherical(G("I0(G2[-1])")));
    CHECK_FALSE(is_generic(G("I0(G2[-1])")));
}

TEST_CASE("endoscopic tables") {
    const LParam so4 = P("SO4:3d?chi=1");
    bool found = false;
    for (const TableRow& r : family_table(GroupId::SO4, "3").rows)
        if (r.repn.group == GroupId::SO4_delta) {
            found = true;
            for (const std::string& e : r.abv) CHECK(e == "vartheta");
        }
    CHECK(found);
    CHECK(so4.a_abv == FiniteGroup::cyclic(2));
    for (const LParam& q : params_of(make_family(GroupId::PGL3, "3"))) CHECK(q.a_abv.order() == 3);
    CHECK(params_of(make_family(GroupId::PGL3, "3")).size() == 4);
    CHECK(names(l_packet(P("SO4:0'"))) == std::set<std::pair<std::string, std::string>>{{"pi4", "1"}, {"pi4'", "vartheta"}});
    CHECK(is_spherical(find_repn(GroupId::SO4, "pi4")));
}

TEST_CASE("parameter grammar") {
    CHECK(P("PGL3:3d?chi=zeta(3)").to_string() == "PGL3:3d?chi=zeta(3)");
    CHECK(P("G2:6d").label() == "G2:6d");
    CHECK(P("SO4:0'").family.id == "0'");
    CHECK_THROWS_AS(P("G2:9a"), Error);
    CHECK_THROWS_AS(P("G2:8e"), Error);
    CHECK_THROWS_AS(P("XX:1a"), Error);
    CHECK_THROWS_AS(P("SO4:3d?chi=zeta(3)"), Error);
    CHECK_THROWS_AS(P("PGL3:3d?chi=-1"), Error);
    CHECK_THROWS_AS(P("G2:3a?n=5"), Error);
    try {
        P("G2:6d?chi=");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() != Errc::NotInPacket);
    }
    try {
        P("G2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("LLC characters transport to ABV characters") {
    for (const LParam& phi : all_g2_params())
        for (const auto& [pi, chr] : l_packet(phi))
            for (const std::string& s : phi.a_phi.classes)
                CHECK(phi.a_phi.value(chr, s) == coefficient(phi, llc_transfer_class(phi, s), pi));
}
