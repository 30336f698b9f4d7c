#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2abv/infclass.hpp"
#include "g2abv/phv.hpp"

namespace g2abv {

enum class GroupId { G2, T, GL2_short, GL2_long, SO4, SO4_delta, PGL3, PGL3_delta, PGL3_deltaPrime };

std::string group_name(GroupId g);
GroupId parse_group(const std::string& s);
// SO4_delta -> SO4, PGL3_delta(Prime) -> PGL3, others unchanged.
GroupId base_group(GroupId g);
// Roots of the endoscopic group inside the G2 dual root system.
std::vector<Root> group_roots(GroupId g);

struct ParamFamily {
    GroupId group = GroupId::G2;
    std::string id;                            // "0".."8"; SO4 also "0'"
    std::map<std::string, std::string> data;   // canonical strings

    bool operator==(const ParamFamily& o) const { return group == o.group && id == o.id && data == o.data; }
    bool operator<(const ParamFamily& o) const;
    std::string to_string() const;  // "G2:6" plus "?k=v&..." when data is present
};

// Fills defaults, canonicalizes and validates. Throws InvalidParameter / UnknownLabel.
ParamFamily make_family(GroupId g, const std::string& id, const std::map<std::string, std::string>& data = {});
std::vector<std::string> family_ids(GroupId g);
PhvClass family_phv(GroupId g, const std::string& id);
// lambda(Fr) for the family's data.
TorusElement standard_lambda(const ParamFamily& f);
// Endoscopic family of lambda from the roots of g with value q ("0".."3").
std::string detect_family(GroupId g, const TorusElement& t);

std::string orbit_of_sub(const PhvClass& cls, const std::string& sub);
std::string sub_of_orbit(const PhvClass& cls, const std::string& orbit);
std::vector<std::string> subs_of(const PhvClass& cls);

struct ArthurDatum {
    std::string s_psi;  // class of s_psi in A^ABV
};

struct LParam {
    ParamFamily family;
    std::string sub;  // "a".."d", or "" for one-orbit families
    std::string orbit;
    int dim = 0;
    FiniteGroup a_phi;
    FiniteGroup a_abv;
    bool is_open = false;
    bool is_closed = false;
    bool is_elliptic = false;
    std::optional<ArthurDatum> arthur;

    bool operator==(const LParam& o) const { return family == o.family && sub == o.sub; }
    std::string label() const;      // "G2:8d"
    std::string to_string() const;  // label with data
};

LParam make_lparam(const ParamFamily& f, const std::string& sub);
std::vector<LParam> params_of(const ParamFamily& f);
// The 25 G2 parameters with default data.
std::vector<LParam> all_g2_params();
// "<group>:<family><sub>[?k=v&...]"
LParam parse_param_spec(const std::string& spec);

struct RepnLabel {
    GroupId group = GroupId::G2;
    std::string family;
    std::string name;

    bool operator==(const RepnLabel& o) const { return group == o.group && family == o.family && name == o.name; }
    bool operator!=(const RepnLabel& o) const { return !(*this == o); }
    bool operator<(const RepnLabel& o) const;
    std::string to_string() const;
};

enum class Cond { Always, Never, ExponentsZero, AHalf, ChiUnitary, Unknown };
bool eval_cond(Cond c, const ParamFamily& f);

struct TableRow {
    RepnLabel repn;
    MicroSheaf sheaf;
    std::vector<std::string> llc;  // per column; "" when absent
    std::vector<std::string> abv;
    Cond unitary = Cond::Unknown;
    std::string aubert;  // partner name in the same family
};

struct FamilyTable {
    GroupId group = GroupId::G2;
    std::string family;
    PhvClass phv;
    std::vector<std::string> subs;
    std::vector<Cond> arthur;  // per column
    std::vector<TableRow> rows;
};

// Printed tables. For SO4 and PGL3 the inner-form rows are included.
const FamilyTable& family_table(GroupId g, const std::string& family);
const std::vector<FamilyTable>& endoscopic_tables(GroupId g);
const std::vector<FamilyTable>& g2_tables();

RepnLabel find_repn(GroupId g, const std::string& name);
const TableRow& row_of(const RepnLabel& r);
std::vector<RepnLabel> family_repns(GroupId g, const std::string& family);

using PacketEntry = std::pair<RepnLabel, std::string>;
std::vector<PacketEntry> l_packet(const LParam& phi);
std::vector<PacketEntry> abv_packet(const LParam& phi);
std::vector<RepnLabel> coronal(const LParam& phi);

// <s, pi> read from the table.
Cyclo coefficient_table(const LParam& phi, const std::string& s, const RepnLabel& pi);
// <s, pi> through the Vogan bijection and NEvs.
Cyclo coefficient_geometric(const LParam& phi, const std::string& s, const RepnLabel& pi);
// Both, asserted equal. Throws NotInPacket.
Cyclo coefficient(const LParam& phi, const std::string& s, const RepnLabel& pi);
// NEvs value of P(pi) at phi's orbit.
CharCombo abv_character(const LParam& phi, const RepnLabel& pi);

std::map<RepnLabel, MicroSheaf> vogan_bijection(GroupId g, const std::string& family);
RepnLabel repn_of_sheaf(GroupId g, const std::string& family, const MicroSheaf& p);

// The L-parameter sub-label of pi and dim(pi).
std::string repn_sub(const RepnLabel& pi);
int repn_dim(const RepnLabel& pi);

struct Properties {
    bool open = false;
    bool closed = false;
    bool tempered_bounded = false;
    bool elliptic = false;
    bool arthur = false;
    int dim = 0;
    std::vector<GroupId> minimal_endoscopic_groups;
};
Properties properties(const LParam& phi);

LParam aubert_dual(const LParam& phi);
RepnLabel aubert_dual_repn(const RepnLabel& pi);

bool is_spherical(const RepnLabel& pi);
bool is_generic(const RepnLabel& pi);
bool is_unitary(const ParamFamily& f, const RepnLabel& pi);
bool is_arthur_repn(const ParamFamily& f, const RepnLabel& pi);

// The A_phi -> A^ABV_phi map on class labels.
std::string llc_transfer_class(const LParam& phi, const std::string& a_phi_class);

}  // namespace g2abv
