#pragma once

// Test-only brute-force models for the cut monoid and the supports. These
// compute with explicit set semantics inside a bounded box of lattice points
// and stay independent of the closed-form prefix arithmetic they check.

#include <optional>
#include <vector>

#include "cutspec/algebra.hpp"

namespace cutspec::oracle {

// An initial (downward closed) subset of the lex-ordered box [-B, B]^r.
// Because lex is a total order, such a set is determined by its maximum
// point; sets escaping the box keep their unclipped maximum and the
// canonicalizer detects saturated tail coordinates. Inputs must stay well
// inside the box (coordinate magnitude <= input_limit) so that genuine
// boundary coordinates and saturated ones cannot be confused.
struct BoxCutModel {
    int rank;
    Coord box;         // half-width B
    Coord input_limit; // max magnitude of real boundary coordinates

    BoxCutModel(int r, Coord b = 200, Coord lim = 25) : rank(r), box(b), input_limit(lim) {}

    struct Set {
        bool empty = true;
        std::vector<Coord> maxpt; // meaningful when !empty
    };

    Set from_cut(const Cut& c) const;
    Set from_group(const GroupElem& g) const; // the principal down-set of g
    Cut to_cut(const Set& s) const;

    bool member(const Set& s, const GroupElem& g) const;
    // Minkowski sum: the maximum of a sum of down-sets is the sum of the
    // maxima (adding a fixed element is monotone in a totally ordered group).
    Set sum(const Set& a, const Set& b) const;
    Set nfold(long long n, const Set& a) const;
    // Initial closure of the isolated subgroup H_j inside the box.
    Set isolated_closure(int j) const;
    // Subset comparison of initial sets.
    int cmp(const Set& a, const Set& b) const; // -1, 0, 1
};

// Fully explicit bitmap model over a small window, used at rank <= 2 to
// cross-check the max-point model itself. Sum membership of each window cell
// is decided by scanning for an explicit witness pair over a wider range, so
// no edge truncation occurs.
struct ExplicitCutModel {
    int rank;
    Coord box;

    ExplicitCutModel(int r, Coord b) : rank(r), box(b) {}

    std::vector<char> from_cut(const Cut& c) const;
    std::optional<Cut> to_cut(const std::vector<char>& cells) const;
    std::vector<char> sum_paint(const Cut& a, const Cut& b, Coord search) const;

    long long size() const;
    std::vector<Coord> decode(long long idx) const;
    long long encode(const std::vector<Coord>& p) const;
    bool in_box(const std::vector<Coord>& p) const;
};

// Left-set membership straight from the boundary description.
bool value_in_left_set(const GroupElem& g, const Cut& c);

// Value membership in a value-determined module, straight from the
// definition of the boundary description (no cut comparison involved).
bool value_in_module(const GroupElem& g, const Cut& boundary);

// Divisor-grid support oracle for pattern instances: paints the admissible
// divisor values over a grid and extracts the canonical cut. rank <= 2.
Cut support_oracle_pattern(const ValMatrix& x, const PatternAlgebra& r, Coord grid = 12);

// Module-divisibility support oracle for monomial instances, rank 1.
Cut support_oracle_monomial(const AlgebraElem& x, const MonomialAlgebra& r, Coord grid = 12);

// Brute-force product containment: every sum of window values of J1 and J2
// lands in J3.
bool product_contained_oracle(const IdealCut& j1, const IdealCut& j2, const IdealCut& j3,
                              int rank, Coord window = 10);

// Value-primality of a final value set: alpha + beta inside implies one
// factor inside, over the window.
bool value_prime_oracle(const IdealCut& p, int rank, Coord window = 8);

// Exhaustive rank-1 spectrum oracle: enumerates every value-grid ideal with
// component thresholds in a window and tests primality by the integer
// m-system. Returns the primes found (normalized).
std::vector<Ideal> spec_oracle_rank1(const AlgebraVariant& alg, Coord lo = -4, Coord hi = 6);

} // namespace cutspec::oracle
