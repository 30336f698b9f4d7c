#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2abv/exactnum.hpp"
#include "g2abv/infclass.hpp"

namespace g2abv {

enum class GroupKind { Trivial, Cyclic, S3 };

struct FiniteGroup {
    GroupKind kind = GroupKind::Trivial;
    int n = 1;  // cyclic order; 6 for S3
    std::vector<std::string> classes;
    std::vector<int> class_sizes;
    std::vector<int> centralizers;
    std::vector<std::string> characters;
    std::vector<std::vector<Cyclo>> table;  // [character][class]

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);  // cyclic(1) is the trivial group
    static FiniteGroup s3();

    int order() const { return kind == GroupKind::S3 ? 6 : n; }
    std::string name() const;
    int class_index(const std::string& c) const;
    int char_index(const std::string& c) const;
    bool has_class(const std::string& c) const;
    bool has_character(const std::string& c) const;
    Cyclo value(const std::string& chr, const std::string& cls) const;
    int degree(const std::string& chr) const;
    int centralizer_order(const std::string& cls) const;

    bool operator==(const FiniteGroup& o) const { return kind == o.kind && n == o.n; }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }
};

// Non-negative integral combination of irreducible characters, by name.
using CharCombo = std::map<std::string, int>;

std::string combo_to_string(const CharCombo& c);
CharCombo combo_add(const CharCombo& a, const CharCombo& b);
bool combo_is_zero(const CharCombo& c);
CharCombo single(const std::string& chr, int mult = 1);

struct OrbitData {
    std::string label;  // C0..C3
    int dim = 0;
    bool is_open = false;
    bool is_closed = false;
    FiniteGroup a_c;
    FiniteGroup a_abv;
};

// IC(L_C): orbit label and character of that orbit's A_C.
struct MicroSheaf {
    std::string orbit;
    std::string character;

    bool operator==(const MicroSheaf& o) const { return orbit == o.orbit && character == o.character; }
    bool operator!=(const MicroSheaf& o) const { return !(*this == o); }
    bool operator<(const MicroSheaf& o) const {
        return orbit != o.orbit ? orbit < o.orbit : character < o.character;
    }
    std::string to_string() const;
};

// NEvs output: one a_abv-representation per orbit, aligned with orbits().
struct MicroValue {
    std::vector<CharCombo> per_orbit;

    bool operator==(const MicroValue& o) const { return per_orbit == o.per_orbit; }
    std::string to_string(const std::vector<OrbitData>& orbs) const;
};

MicroValue micro_add(const MicroValue& a, const MicroValue& b);

std::vector<OrbitData> orbits(const PhvClass& cls);
int orbit_index(const PhvClass& cls, const std::string& label);
OrbitData orbit(const PhvClass& cls, const std::string& label);
// Simple objects in table order.
std::vector<MicroSheaf> simple_objects(const PhvClass& cls);
bool is_simple(const PhvClass& cls, const MicroSheaf& p);

MicroValue nevs(const PhvClass& cls, const MicroSheaf& p);
MicroSheaf fourier(const PhvClass& cls, const MicroSheaf& p);
MicroSheaf fourier_printed(const PhvClass& cls, const MicroSheaf& p);

Cyclo character_trace(const FiniteGroup& g, const CharCombo& rep, const std::string& cls);
Cyclo trace_shifted(const FiniteGroup& g, const CharCombo& rep, int shift, const std::string& cls);

}  // namespace g2abv
