#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutspec/ordered_values.hpp"
#include "cutspec/rational.hpp"

namespace cutspec {

/// An element of the rational group algebra on Z^r: a finite formal sum of
/// monomials q * t^gamma with nonzero rational q. The zero element is the
/// empty sum. Leading (lex-minimal) exponents multiply additively, so the
/// min-support valuation below satisfies the valuation axioms exactly.
struct ModelElem {
    std::map<GroupElem, Rational, GroupLess> terms;

    static ModelElem zero() { return ModelElem{}; }
    static ModelElem monomial(Rational q, GroupElem g);
    static ModelElem one(int rank) { return monomial(Rational(1), group_zero(rank)); }

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ModelElem&, const ModelElem&) = default;
    std::string str() const;
};

ModelElem elem_add(const ModelElem& a, const ModelElem& b);
ModelElem elem_neg(const ModelElem& a);
ModelElem elem_sub(const ModelElem& a, const ModelElem& b);
ModelElem elem_mul(const ModelElem& a, const ModelElem& b);
/// Multiplication by q * t^gamma; exact for any gamma (monomial division is
/// multiplication by the inverse monomial).
ModelElem elem_mul_monomial(const ModelElem& a, const Rational& q, const GroupElem& g);

/// The min-support valuation: nullopt encodes infinity (only for zero).
std::optional<GroupElem> valuation(const ModelElem& x);

/// A value-determined O_v-submodule of F, encoded by its boundary cut:
///   J = {0} + { x : v(x) > boundary }.
/// Covers {0}, F, O_v, I_v, every prime P_H, fractional ideals and the
/// localizations (O_v)_P.
struct IdealCut {
    Cut boundary;

    static IdealCut whole_field() { return IdealCut{Cut::bottom()}; }
    static IdealCut zero_ideal() { return IdealCut{Cut::top()}; }
    static IdealCut ring_of_integers(int rank);      // O_v, boundary embed(-eps)
    static IdealCut valuation_ideal(int rank);       // I_v, boundary embed(0)
    static IdealCut prime_of(const IsolatedSubgroup& h, int rank); // P_H

    bool is_zero_ideal() const { return boundary.kind == Cut::Kind::top; }
    friend bool operator==(const IdealCut&, const IdealCut&) = default;
    std::string str() const { return "J(v>" + boundary.str() + ")"; }
};

/// Membership of a value (infinity allowed) in the module.
bool ideal_member(const std::optional<GroupElem>& v, const IdealCut& j);
/// J1 contains J2 (reverse boundary order).
bool ideal_contains(const IdealCut& j1, const IdealCut& j2);
/// The translate t^gamma * J.
IdealCut ideal_shift(const GroupElem& g, const IdealCut& j);
/// The module generated by pairwise products of J1 and J2 (right sum of
/// boundaries).
IdealCut ideal_product(const IdealCut& j1, const IdealCut& j2);
/// Whether every sum alpha + beta with alpha in J1-values, beta in J2-values
/// lies in J3-values.
bool product_contained(const IdealCut& j1, const IdealCut& j2, const IdealCut& j3);

/// The chain of primes of O_v: {0} = P_{H_rank} < ... < P_{H_0} = I_v,
/// strictly increasing, of length rank + 1.
std::vector<std::pair<IsolatedSubgroup, IdealCut>> spec_base(int rank);

} // namespace cutspec
