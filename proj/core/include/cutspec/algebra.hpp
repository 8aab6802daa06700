#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cutspec/field_model.hpp"

namespace cutspec {

/// A pattern matrix algebra: the subring of M_n(F) whose (i,j) entries range
/// over the value-determined module J_ij. Multiplicative closure
/// (J_im * J_ml inside J_il) is a validation requirement, unitality is
/// reported but not enforced (one shipped instance is a rng).
struct PatternAlgebra {
    int rank = 1;
    int n = 1;
    std::vector<std::vector<IdealCut>> comps;

    const IdealCut& at(int i, int j) const { return comps[i][j]; }
    friend bool operator==(const PatternAlgebra&, const PatternAlgebra&) = default;
};

/// b_i * b_j is either zero or a shifted basis element t^shift * b_k.
struct MonomialEntry {
    bool zero = true;
    GroupElem shift;
    int k = -1;

    static MonomialEntry none() { return MonomialEntry{}; }
    static MonomialEntry of(GroupElem g, int idx) { return MonomialEntry{false, std::move(g), idx}; }
    friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
};

/// A monomial algebra: free-with-torsion module sum (O_v / Ann_i) b_i with
/// b_0 = 1 and single-monomial structure constants. Coefficients are reduced
/// modulo the annihilators, so element equality is structural after
/// normalization.
struct MonomialAlgebra {
    int rank = 1;
    std::vector<std::string> basis;
    std::vector<IdealCut> ann;
    std::vector<std::vector<MonomialEntry>> table;

    int dim() const { return static_cast<int>(basis.size()); }
    friend bool operator==(const MonomialAlgebra&, const MonomialAlgebra&) = default;
};

using AlgebraVariant = std::variant<PatternAlgebra, MonomialAlgebra>;

/// An exact element: a matrix of model elements for pattern instances, a
/// coefficient vector for monomial ones.
struct AlgebraElem {
    std::vector<std::vector<ModelElem>> mat;
    std::vector<ModelElem> coeffs;
    bool pattern = true;

    static AlgebraElem pattern_elem(std::vector<std::vector<ModelElem>> m) {
        return AlgebraElem{std::move(m), {}, true};
    }
    static AlgebraElem monomial_elem(std::vector<ModelElem> c) {
        return AlgebraElem{{}, std::move(c), false};
    }
    friend bool operator==(const AlgebraElem&, const AlgebraElem&) = default;
    std::string str() const;
};

struct SamplingSpec {
    long long count = 1000;
    unsigned long long seed = 1;
};

/// A loaded instance: the algebra plus the CLI-facing metadata.
struct Instance {
    std::string name;
    AlgebraVariant alg;
    SamplingSpec sampling;
    std::optional<std::vector<AlgebraElem>> generators;
    std::string qv_selection = "filter";

    bool is_pattern() const { return std::holds_alternative<PatternAlgebra>(alg); }
    const PatternAlgebra& pat() const { return std::get<PatternAlgebra>(alg); }
    const MonomialAlgebra& mon() const { return std::get<MonomialAlgebra>(alg); }
    int rank() const { return is_pattern() ? pat().rank : mon().rank; }
};

struct ValidationReport {
    bool ok = true;
    std::string violation;
    int dim_tensor_f = 0;   // dim_F(R (x) F): torsion coordinates vanish
    int dim_module = 0;     // number of nonzero module coordinates
    bool torsion_free = true;
    bool faithful = true;
    bool unital = true;
    bool fg_module = true;  // finitely generated as an O_v-module
};

ValidationReport validate(const AlgebraVariant& alg);

AlgebraElem elem_zero(const AlgebraVariant& alg);
AlgebraElem elem_one(const AlgebraVariant& alg); // throws for non-unital pattern shapes is fine; identity matrix / b_0
bool elem_is_zero(const AlgebraElem& x);
/// Drops coefficient terms killed by the annihilators (monomial case).
AlgebraElem elem_normalize(const AlgebraVariant& alg, AlgebraElem x);
AlgebraElem elem_add(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem elem_sub(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem elem_mul(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b);
/// Scalar action of q * t^g in F.
AlgebraElem elem_scalar_mul(const AlgebraVariant& alg, const Rational& q, const GroupElem& g,
                            const AlgebraElem& x);
bool elem_member(const AlgebraVariant& alg, const AlgebraElem& x);

/// Entrywise valuations of a matrix element (nullopt = infinity).
struct ValMatrix {
    std::vector<std::vector<std::optional<GroupElem>>> v;
};

ValMatrix value_grid(const AlgebraElem& x);

/// The support cut of x in a pattern algebra: the left set of admissible
/// divisor values { v(a) : x R (subset) a R }, clipped at zero with the
/// negative tail re-adjoined. Closed form from the constraint reduction
///   x R (subset) a R  <=>  forall k,m,l:  v(x_km) + J_ml (subset) v(a) + J_kl.
Cut support(const ValMatrix& x, const PatternAlgebra& r);
/// The monomial analogue via module divisibility refined by annihilators.
Cut support(const AlgebraElem& x, const MonomialAlgebra& r);

/// The filter quasi-valuation of x in R: infinity at zero, otherwise the
/// support cut. Throws if x is not a member of R.
CutOrInfty filter_value(const AlgebraVariant& alg, const AlgebraElem& x);

/// Reproducible pseudo-random members of R, 1-3 terms per coordinate.
std::vector<AlgebraElem> sample_elements(const AlgebraVariant& alg, long long count,
                                         unsigned long long seed);
/// A perturbation of x that is strictly deeper in value, used to build
/// leading-term cancellation pairs.
AlgebraElem deeper_perturbation(const AlgebraVariant& alg, const AlgebraElem& x,
                                unsigned long long seed);

struct ConditionB {
    bool holds = false;
    bool torsion_free = false;
    bool units_ok = false;
    std::optional<GroupElem> unit_witness; // gamma > 0 with t^gamma * 1 invertible in R
};

/// Property (b): torsion-free and (units of R meeting O_v are units of O_v).
ConditionB check_condition_b(const AlgebraVariant& alg);

/// Two-sided ideals, in the same component encodings as the algebras.
struct PatternIdeal {
    std::vector<std::vector<IdealCut>> comps;
    friend bool operator==(const PatternIdeal&, const PatternIdeal&) = default;
};
struct MonomialIdeal {
    /// Effective per-basis threshold: stores L_i already joined with Ann_i,
    /// so structural equality is subset equality.
    std::vector<IdealCut> comps;
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};
using Ideal = std::variant<PatternIdeal, MonomialIdeal>;

std::string ideal_str(const Ideal& ideal);
Ideal ideal_zero(const AlgebraVariant& alg);
Ideal ideal_whole(const AlgebraVariant& alg);
/// Componentwise normalization against R (intersect with the component
/// modules; join monomial components with the annihilators).
Ideal ideal_normalize(const AlgebraVariant& alg, Ideal ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_subset(const Ideal& a, const Ideal& b);
bool ideal_proper(const AlgebraVariant& alg, const Ideal& ideal);
bool is_two_sided_ideal(const AlgebraVariant& alg, const Ideal& ideal, std::string* why = nullptr);
bool elem_in_ideal(const AlgebraVariant& alg, const Ideal& ideal, const AlgebraElem& x);
/// Componentwise join (boundary minimum).
Ideal ideal_join(const Ideal& a, const Ideal& b);
/// The ideal of scalars lying under I: { a in O_v : a * 1_R in I }.
IdealCut contraction(const AlgebraVariant& alg, const Ideal& ideal);

} // namespace cutspec
