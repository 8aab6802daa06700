#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutspec/algebra.hpp"

namespace cutspec {

/// A quasi-valuation packaged as an evaluator over exact algebra elements.
/// gamma_valued records whether every value is an embedded group element
/// (relevant for cancellativity of the value monoid).
struct QuasiValuation {
    enum class Kind { filter, min_formula, entry_min, corrupted };
    Kind kind = Kind::filter;
    std::string provenance;
    bool gamma_valued = false;
    std::function<CutOrInfty(const AlgebraElem&)> eval;
};

QuasiValuation filter_qv_of(const AlgebraVariant& alg);
/// Entrywise minimum of valuations on a pattern instance (the direct
/// min-of-entries map; a homogeneous quasi-valuation on any valid pattern
/// instance, with group values only).
QuasiValuation entry_min_qv(const AlgebraVariant& alg);

struct NotFinitelyGenerated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A minimal generating set containing 1, together with the exact coordinate
/// decomposition it induces. decompose returns the coordinates of x in the
/// basis, or nullopt when x is outside the O_v-span.
struct MinimalBasis {
    std::vector<AlgebraElem> elems;
    std::function<std::optional<std::vector<ModelElem>>(const AlgebraElem&)> decompose;
};

/// Derives a minimal generating set with 1 from the instance structure
/// (principal pattern components / torsion-free monomial basis). Throws
/// NotFinitelyGenerated when a component is not principal or the instance is
/// torsion or non-unital.
MinimalBasis minimal_generators(const AlgebraVariant& alg);
/// The exchange step on an explicit generator list: rewrites the list into a
/// minimal generating set containing 1. Requires the coordinate matrix to be
/// invertible with single-monomial pivots.
MinimalBasis minimal_generators(const AlgebraVariant& alg,
                                const std::vector<AlgebraElem>& gens);

/// w(sum alpha_i r_i) = min v(alpha_i) over a minimal basis with 1. Group
/// valued, extends v, cancellative image, O_w = R.
QuasiValuation min_formula_qv(const AlgebraVariant& alg, const MinimalBasis& basis);

struct AxiomReport {
    bool b1 = true, b2 = true, b3 = true, nonneg = true;
    long long pairs_checked = 0;
    std::string witness;
    bool pass() const { return b1 && b2 && b3 && nonneg; }
};

/// B1/B2/B3 over sampled pairs including engineered leading-term
/// cancellations. require_nonneg additionally pins w >= 0 on members, which
/// holds for the filter and min-formula maps but not for entry-min on
/// instances reaching below O_v.
AxiomReport check_axioms(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                         unsigned long long seed, bool require_nonneg = true);

struct VqvReport {
    bool homogeneous = true;
    bool extends_v = true;   // w(c * 1_R) = v(c); skipped when not unital
    bool unit_value_zero = true;
    bool unital_checked = true;
    long long pairs_checked = 0;
    std::string witness;
    bool pass() const { return homogeneous && (!unital_checked || (extends_v && unit_value_zero)); }
};

VqvReport check_v_qv(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                     unsigned long long seed);

/// Left stability of c: w(c r) = w(c) + w(r) on all sampled r.
bool check_stability(const QuasiValuation& w, const AlgebraVariant& alg, const AlgebraElem& c,
                     long long samples, unsigned long long seed, std::string* witness = nullptr);

/// r (x) 1/t^denom with denom >= 0 in the value group.
struct ExtendedElem {
    AlgebraElem num;
    GroupElem denom;
};

/// Equality of extended elements through the torsion-free exact layer:
/// r (x) 1/b = r' (x) 1/b'  iff  t^{b'} r = t^{b} r'.
bool extended_equal(const AlgebraVariant& alg, const ExtendedElem& a, const ExtendedElem& b);

/// The natural extension W(r (x) 1/b) = w(r) - v(b).
struct NaturalExtension {
    QuasiValuation base;
};

CutOrInfty natural_eval(const NaturalExtension& w, const ExtendedElem& x);
/// Membership in O_W = { x : W(x) >= 0 }.
bool ow_member(const NaturalExtension& w, const ExtendedElem& x);
/// The coordinate-divisibility criterion for min-formula bases: every basis
/// coordinate of the numerator is divisible by the denominator.
bool coordinate_divisible(const MinimalBasis& basis, const AlgebraVariant& alg,
                          const ExtendedElem& x);

struct ImageScan {
    bool all_cancellative = true;    // nonzero samples valued in the embedded group
    bool infty_on_nonzero = false;
    long long samples_checked = 0;
    std::vector<std::string> coverage;
};

ImageScan image_scan(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                     unsigned long long seed);

/// Negative controls for the checker suites.
QuasiValuation corrupt_homogeneity(const QuasiValuation& w, int rank);
QuasiValuation corrupt_zero_floor(const QuasiValuation& w, int rank);

} // namespace cutspec
