#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2abv/rootdata.hpp"

namespace g2abv {

enum class CaseId { C0, C1short, C2long, C3, C4D2, C5, C6A2, C7reg, C8sub };

const std::vector<CaseId>& all_cases();
std::string case_name(CaseId c);   // "C0", "C1short", ...
int case_number(CaseId c);          // 0..8
CaseId case_from_number(int n);
// The standard subset of roots for a case.
const std::set<Root>& standard_subset(CaseId c);
int case_dim(CaseId c);

enum class HKind { DualTorus, GL2, SL3, SO4sub, G2dual, SO2xO2 };

struct GroupDescriptor {
    HKind kind = HKind::DualTorus;
    std::optional<Root> root;  // for GL2: the positive root of the Levi

    bool operator==(const GroupDescriptor& o) const { return kind == o.kind && root == o.root; }
    std::string to_string() const;
};

enum class PhvKind { P0, P1, P2, P3, P4 };

struct PhvClass {
    PhvKind kind = PhvKind::P0;
    int n = 0;        // P2: n >= 0; P3: n in 1..3; P0: order of the component group (1 trivial)
    bool p0_s3 = false;  // P0 with component group S3 (unused on the G2 side)

    static PhvClass p0(int order = 1) { return {PhvKind::P0, order, false}; }
    static PhvClass p1() { return {PhvKind::P1, 0, false}; }
    static PhvClass p2(int n) { return {PhvKind::P2, n, false}; }
    static PhvClass p3(int n) { return {PhvKind::P3, n, false}; }
    static PhvClass p4() { return {PhvKind::P4, 0, false}; }

    bool operator==(const PhvClass& o) const { return kind == o.kind && n == o.n && p0_s3 == o.p0_s3; }
    bool operator!=(const PhvClass& o) const { return !(*this == o); }
    bool operator<(const PhvClass& o) const;
    int dim() const;  // dim V
    std::string to_string() const;
};

PhvClass phv_for_case(CaseId c);

struct InfinitesimalParameter {
    TorusElement frobenius;
};

struct InfCase {
    CaseId case_id = CaseId::C0;
    WeylElement normalizer;
    TorusElement normalized;
    std::set<Root> r_lambda;  // in standard position
    GroupDescriptor h_group;
    PhvClass phv;
};

// Roots with value q at t.
std::set<Root> r_lambda(const TorusElement& t);
// Roots with value 1 at t.
std::set<Root> unit_roots(const TorusElement& t);
GroupDescriptor h_group_of(const TorusElement& t);

InfCase classify(const TorusElement& t);
inline InfCase classify(const InfinitesimalParameter& l) { return classify(l.frobenius); }

struct ReducibilityReport {
    bool irreducible = false;
    bool two_orbit = false;
    InfCase inf_case;
};

// chi = chi1 (x) chi2 in q-polar form; lambda(Fr) = m(chi1 chi2, chi1).
TorusElement dual_torus_element(const QValue& chi1, const QValue& chi2);
ReducibilityReport reducibility(const QValue& chi1, const QValue& chi2);

}  // namespace g2abv
