#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2abv/phv.hpp"

namespace g2abv {

enum class SubCaseId { P1i, P2i, P2ii, P3i, P3ii, P3iii, P4i, P4ii, P4iii, P4iv, P4v };

std::string sub_case_name(SubCaseId id);
SubCaseId sub_case_from_name(const std::string& s);

struct SubOrbitMap {
    std::string sub_orbit;   // C0..C3 of the sub-class
    std::string saturation;  // ambient orbit label
    bool v_conormal = false;
    // class of s in the sub-orbit's A^ABV, and its image at the saturation
    std::string s_sub_class;
    std::string s_ambient_class;
    // A^ABV_{C'} -> A^ABV_C on class labels; empty if not conormal
    std::map<std::string, std::string> character_transfer;
};

struct SubCase {
    PhvClass ambient;
    PhvClass sub;
    SubCaseId id = SubCaseId::P1i;
    std::string s_description;
    int s_order = 1;
    std::vector<SubOrbitMap> orbit_map;

    const SubOrbitMap& at(const std::string& sub_orbit) const;
};

std::vector<SubCase> sub_cases(const PhvClass& ambient);
SubCase sub_case(SubCaseId id);

enum class Indecomposable { F2, F3, F4, F5 };
std::string indecomposable_name(Indecomposable f);
PhvClass indecomposable_class(Indecomposable f);
MicroValue nevs_indecomposable(Indecomposable f);

// One summand of a restriction: either a simple object or an indecomposable, shifted.
struct PerTerm {
    bool is_indecomposable = false;
    Indecomposable f = Indecomposable::F2;
    MicroSheaf sheaf;
    int shift = 0;
    int mult = 1;

    std::string to_string() const;
};

struct PerClass {
    std::vector<PerTerm> terms;
    std::string to_string() const;
};

// Printed restriction data; only P2ii, P4iv, P4v.
PerClass restrict(const SubCase& c, const MicroSheaf& p);

// NEvs of a restriction at a sub-orbit, as (character, total shift) pairs with
// shift = summand shift + dim C'.
using ShiftedChars = std::vector<std::pair<std::string, int>>;
ShiftedChars nevs_restricted(const SubCase& c, const MicroSheaf& p, const std::string& sub_orbit);
// NEvs_C[dim C] P at the saturation of the sub-orbit.
ShiftedChars nevs_saturation(const SubCase& c, const MicroSheaf& p, const std::string& sub_orbit);
Cyclo trace_chars(const FiniteGroup& g, const ShiftedChars& v, const std::string& cls);

struct FpfEntry {
    MicroSheaf p;
    std::string sub_orbit;
    bool conormal = false;
    bool padding = false;  // off-diagonal P2ii cell, not one of the counted identities
    Cyclo left;
    Cyclo right;
    bool equal = false;
};

// Every simple p against every sub-orbit; conormal entries are the identities.
std::vector<FpfEntry> fpf_check(const SubCase& c);

int fixed_dim(const SubCase& c, const std::string& ambient_orbit);

// Printed summary-table cells, for comparison with the computed ones.
struct SummaryCell {
    MicroSheaf p;
    std::string sub_orbit;
    ShiftedChars left;
    ShiftedChars right;
};
std::vector<SummaryCell> printed_summary(SubCaseId id);
// Multiset equality of shifted characters.
bool same_shifted(ShiftedChars a, ShiftedChars b);
std::string shifted_to_string(const ShiftedChars& v);

}  // namespace g2abv
