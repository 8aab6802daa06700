#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutspec/algebra.hpp"
#include "cutspec/quasival.hpp"

namespace cutspec {

/// One enumerated prime with its cached contraction.
struct SpecNode {
    Ideal ideal;
    IdealCut contr;
    int over = -1; // index into the base chain
};

/// The finite poset of enumerated primes over the base chain Spec(O_v).
struct ContractionMap {
    int rank = 1;
    std::vector<std::pair<IsolatedSubgroup, IdealCut>> base; // increasing, size rank+1
    std::vector<SpecNode> nodes;
    std::vector<std::vector<bool>> le; // le[a][b]: nodes[a] subset of nodes[b]

    int base_size() const { return static_cast<int>(base.size()); }
    int size() const { return static_cast<int>(nodes.size()); }
    bool strict_lt(int a, int b) const { return a != b && le[a][b]; }
};

/// Enumerates the primes found in the candidate component family
/// { J, J*P_H for every isolated subgroup H } (which includes {0}), checking
/// ideal axioms exactly and primality by the monomial m-system criterion with
/// representative values per boundary region. Throws when the candidate grid
/// exceeds `bound`.
ContractionMap enumerate_spec(const AlgebraVariant& alg, long long bound = 2'000'000);

enum class Verdict { pass, fail, not_applicable };

std::string verdict_str(Verdict v);

struct CheckResult {
    Verdict v = Verdict::not_applicable;
    std::string witness;
    static CheckResult passed() { return {Verdict::pass, ""}; }
    static CheckResult failed(std::string w) { return {Verdict::fail, std::move(w)}; }
    static CheckResult na(std::string w = "") { return {Verdict::not_applicable, std::move(w)}; }
};

CheckResult check_lo(const ContractionMap& m);
CheckResult check_gd(const ContractionMap& m);
CheckResult check_gu(const ContractionMap& m);
CheckResult check_inc(const ContractionMap& m);
CheckResult check_sgb(const ContractionMap& m);
CheckResult check_ggd(const ContractionMap& m);
/// Whether every minimal enumerated prime lies over the minimal base prime
/// (the going-down criterion over a commutative valuation ring).
bool minimal_primes_over_zero(const ContractionMap& m);

struct BoundsReport {
    Verdict v = Verdict::pass;
    bool fibers_ok = true;        // |Q_P| <= dim for every base P
    bool upper_ok = true;         // |Spec(R)| <= dim * (rank+1)
    bool lower_ok = true;         // under (b): rank+1 <= |Spec(R)|
    bool krull_ok = true;         // under (b): longest chain = rank+1
    bool lower_checked = false;
    int max_fiber = 0;
    int spec_size = 0;
    int longest_chain = 0;
    std::string note;
};

BoundsReport check_bounds(const ContractionMap& m, int dim, bool cond_b, bool torsion_free);

/// Every maximal chain maps bijectively and order-preservingly onto the base
/// chain, and the maximal nodes are exactly the fiber over I_v.
CheckResult check_chain_bijection(const ContractionMap& m, bool evidence);
CheckResult check_max_over_iv(const ContractionMap& m);

/// The threshold-separation evidence behind going down: sampled x in P1*R
/// stay strictly above H1+, sampled s1*s2 (s1 outside P1, s2 outside Q2)
/// stay at or below H1+.
CheckResult gd_separation(const AlgebraVariant& alg, const ContractionMap& m, int p1, int p2,
                          int q2_node, long long samples, unsigned long long seed);

/// The going-up step: I0 + P1*R is an ideal lying over P1 and some enumerated
/// prime over P1 contains I0.
CheckResult gu_lift(const AlgebraVariant& alg, const ContractionMap& m, int node_i0, int p1);

/// Finitely generated module route to going up: maximal nodes lie over I_v
/// and the poset satisfies GU.
CheckResult fg_gu_check(const AlgebraVariant& alg, const ContractionMap& m);

} // namespace cutspec
