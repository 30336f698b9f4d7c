#pragma once

#include <set>
#include <string>
#include <vector>

#include "g2abv/distributions.hpp"
#include "g2abv/subphv.hpp"

namespace g2abv {

enum class TripleFamily { T_reg, A1_short, A1_long, D2, A2, G2_triv };
std::string triple_family_name(TripleFamily f);
TripleFamily parse_triple_family(const std::string& s);

struct EndoTriple {
    TripleFamily family = TripleFamily::G2_triv;
    TorusElement s;  // unit parts only
    GroupId endo_group = GroupId::G2;

    bool elliptic() const;
    std::string to_string() const;
};

// The six families, with sample s for the families that come in continuous families.
std::vector<EndoTriple> endo_triples();
EndoTriple endo_triple(TripleFamily f);
EndoTriple triple_for_group(GroupId g);
// The roots with value 1 at s are exactly the roots of the endoscopic group.
bool triple_consistent(const EndoTriple& t);
// Minimal endoscopic groups of a G2 parameter.
std::vector<GroupId> triples_for(const LParam& phi);

enum class ConormalKind { Isomorphism, P2ii, P4iv, P4v, None };
std::string conormal_kind_name(ConormalKind k);

enum class LiftColumn { ArthurType, OtherRegular, Irregular };
std::string lift_column_name(LiftColumn c);

// Lift of the parameter of (group, family, sub) with lambda(Fr) = t.
struct LiftOutcome {
    CaseId target_case = CaseId::C0;
    std::string target_sub;
    ConormalKind kind = ConormalKind::None;
    LiftColumn column = LiftColumn::Irregular;
    WeylElement w;
    std::set<Root> support;  // in the source
    std::set<Root> image;    // w applied to support
    std::string target_label() const { return std::to_string(case_number(target_case)) + target_sub; }
};
LiftOutcome lift_torus(GroupId g, const std::string& family, const std::string& sub, const TorusElement& t);

struct LiftRecord {
    EndoTriple triple;
    LParam source;
    LParam target;
    ConormalKind kind = ConormalKind::None;
    LiftColumn column = LiftColumn::Irregular;
    bool xi_conormal = false;
    bool arthur = false;  // target column is "Arthur type"
    int relative_dim = 0;  // dim of target orbit minus dim of source orbit
};

// The G2 family whose standard lambda is W-conjugate to t.
ParamFamily g2_family_of(const TorusElement& t);
LiftRecord lift_record(const EndoTriple& triple, const LParam& phi);
LParam lift_parameter(const EndoTriple& triple, const LParam& phi);
bool is_xi_conormal(const EndoTriple& triple, const LParam& phi);

// Printed parameter-lifting table, one row per source parameter label.
struct LiftingRow {
    GroupId group;
    std::string source;  // "1a", "0", ...
    std::set<std::string> arthur;
    std::set<std::string> other;
    std::set<std::string> irregular;
};
const std::vector<LiftingRow>& printed_lifting_table();
// Same shape, from every W-translate of the standard G2 infinitesimal parameters.
std::vector<LiftingRow> computed_lifting_table();

struct LiftedDistribution {
    LParam target;
    std::string s_ambient;
    VirtualChar lifted;    // through restriction and NEvs
    VirtualChar expected;  // theta(target, s_ambient)
    bool equal = false;
};
// s_power = 2 uses the square of s (A2 only).
LiftedDistribution lift_distribution(const EndoTriple& triple, const LParam& phi, int s_power = 1);

struct PureInnerForm {
    GroupId base;
    GroupId form;
    std::string label;
    int kottwitz_sign = 1;
};
std::vector<PureInnerForm> pure_inner_forms(GroupId base);
int kottwitz_sign(GroupId form);
// Only family 3, sub d is relevant to the non-split forms. Throws NotRelevant.
VirtualChar lift_to_inner_form(GroupId base, const PureInnerForm& delta, const LParam& phi);

struct EcTerm {
    EndoTriple triple;
    std::string source;  // endoscopic parameter with data, or the G2 parameter itself
    std::string s_class;
    int s_power = 1;
    Cyclo coefficient;
    VirtualChar lifted;
};
struct EcResult {
    RepnLabel pi;
    std::vector<EcTerm> terms;
    bool round_trip = false;
};
// Throws NotSConormal when some needed distribution is not a conormal lift.
EcResult ec_decompose(const RepnLabel& pi);

}  // namespace g2abv
