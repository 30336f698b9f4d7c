#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2abv/packets.hpp"

namespace g2abv {

// Finite combination of Theta_pi. Zero coefficients are never stored.
struct VirtualChar {
    GroupId group = GroupId::G2;
    std::map<RepnLabel, Cyclo> coeffs;

    void add(const RepnLabel& pi, const Cyclo& c);
    Cyclo at(const RepnLabel& pi) const;
    VirtualChar operator+(const VirtualChar& o) const;
    VirtualChar operator-(const VirtualChar& o) const;
    VirtualChar scaled(const Cyclo& c) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const VirtualChar& o) const { return coeffs == o.coeffs; }
    bool operator!=(const VirtualChar& o) const { return !(*this == o); }
    std::string to_string() const;
};

using CycloMatrix = std::vector<std::vector<Cyclo>>;

int matrix_rank(CycloMatrix m);
// Some x with A x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Cyclo>> solve_linear(const CycloMatrix& a, const std::vector<Cyclo>& b);
CycloMatrix matrix_inverse(const CycloMatrix& m);  // throws SingularSystem

// Theta_{phi,s} from the definition, summed over the split form only.
VirtualChar theta(const LParam& phi, const std::string& s);
// Same sum restricted to representations of the given form of phi's group.
VirtualChar theta_on_form(const LParam& phi, const std::string& s, GroupId form);

struct ArthurCheck {
    std::string s;
    std::string s_psi;
    VirtualChar definitional;
    VirtualChar arthur_form;
    bool holds = false;
};
// Compares theta(phi, s) with sum <s_psi s, pi> Theta_pi. Throws NotArthurType.
ArthurCheck theta_arthur_check(const LParam& phi, const std::string& s);

struct CounterexampleReport {
    std::string param;
    RepnLabel pi;
    Cyclo value;                  // (-1)^{dim phi - dim pi} <1, pi>
    std::vector<Cyclo> attained;  // <s, pi> over all s
    bool no_s_matches = false;
};
CounterexampleReport counterexample_remark(const LParam& phi, const RepnLabel& pi);

struct SpanEntry {
    std::string param;
    int distributions = 0;
    int rank = 0;
    int packet_size = 0;
    bool spans_equal = false;
    bool bijective = false;
};
std::vector<SpanEntry> span_check(const ParamFamily& f);
// pi -> <., pi> is a bijection onto the irreducible characters of A^ABV.
bool packet_bijective(const LParam& phi);

struct DistRef {
    std::string sub;
    std::string s;
    bool operator==(const DistRef& o) const { return sub == o.sub && s == o.s; }
    bool operator<(const DistRef& o) const { return sub != o.sub ? sub < o.sub : s < o.s; }
};

enum class ClosedFormStatus { Match, Mismatch, NoData };
std::string closed_form_status_name(ClosedFormStatus s);

struct ClosedFormEntry {
    DistRef dist;
    Cyclo solved;
    std::optional<Cyclo> closed;
    ClosedFormStatus status = ClosedFormStatus::NoData;
};

struct InvertedRep {
    RepnLabel pi;
    std::vector<std::pair<DistRef, Cyclo>> combination;  // nonzero terms only
    bool own_packet_only = false;
    bool back_substitution_ok = false;
    std::vector<ClosedFormEntry> closed_form;
};

struct InversionResult {
    ParamFamily family;
    std::vector<InvertedRep> reps;
    bool all_ok() const;
};
// Throws SingularSystem if the family system does not span.
InversionResult invert(const ParamFamily& f);
// dim C_phi^s where sub-PHV data exists.
std::optional<int> fixed_dim_for(const LParam& phi, const std::string& s);
// Rows: ABV-packet in table order; columns: classes of A^ABV. Requires bijectivity.
CycloMatrix local_inverse(const LParam& phi);

// A displayed expansion of Theta_{phi,s}, compared with the definition.
struct ThetaClaim {
    std::string param;
    std::string s;
    VirtualChar printed;
    VirtualChar computed;
    bool agrees = false;
};
std::vector<ThetaClaim> printed_theta_claims();

struct TransitionMatrix {
    ParamFamily family;
    std::vector<std::string> rows;  // standard modules, by sub a..d
    std::vector<RepnLabel> cols;    // pi(phi) for sub a..d
    std::vector<std::vector<int>> entries;
};
// Families 4 and 6. Throws UnsupportedFamily otherwise.
TransitionMatrix standard_module_matrix(const ParamFamily& f);

struct ScaffoldReport {
    TransitionMatrix transition;
    std::vector<std::vector<int>> theta_matrix;  // inverse of the transition matrix
    std::vector<std::vector<int>> printed;
    bool printed_matches = false;
    bool unitriangular = false;
    bool identity_holds = false;  // Theta_phi = sum P_ij (Theta_M ... , Theta_phi_d)
    bool routes_agree = true;     // two expansions of the principal series (family 4)
};
ScaffoldReport stability_scaffold(const ParamFamily& f);

}  // namespace g2abv
