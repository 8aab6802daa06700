#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cutspec {

using Coord = long long;

inline constexpr int kMaxRank = 4;

/// Describes the value group Z^r under left-to-right lexicographic order.
struct GroupDescriptor {
    int rank = 1;
    explicit GroupDescriptor(int r);
};

/// An element of Z^r, compared lexicographically coordinate by coordinate.
struct GroupElem {
    std::vector<Coord> c;

    GroupElem() = default;
    explicit GroupElem(std::vector<Coord> coords) : c(std::move(coords)) {}

    int rank() const { return static_cast<int>(c.size()); }
    friend bool operator==(const GroupElem&, const GroupElem&) = default;
    std::string str() const;
};

enum class Ord { less = -1, equal = 0, greater = 1 };

Ord cmp_group(const GroupElem& a, const GroupElem& b);

GroupElem group_zero(int rank);
/// The minimal positive element (0,...,0,1).
GroupElem group_eps(int rank);
GroupElem group_add(const GroupElem& a, const GroupElem& b);
GroupElem group_neg(const GroupElem& a);
GroupElem group_sub(const GroupElem& a, const GroupElem& b);
GroupElem group_scale(long long n, const GroupElem& a);
bool group_lt(const GroupElem& a, const GroupElem& b);
bool group_le(const GroupElem& a, const GroupElem& b);
/// Strict order against zero, i.e. whether a is positive/negative in the group.
bool group_pos(const GroupElem& a);
bool group_neg_sign(const GroupElem& a);

/// Total-order comparator usable as a std::map key ordering. Requires equal
/// ranks, which holds inside any single instance.
struct GroupLess {
    bool operator()(const GroupElem& a, const GroupElem& b) const {
        return cmp_group(a, b) == Ord::less;
    }
};

/// One element of the cut monoid of Z^r (lex). The left set is one of
///   Bottom                    -> {}
///   Top                       -> everything
///   Prefix(p), len(p) = k     -> { x : (x_1,...,x_k) <=_lex p }
/// A full-length prefix is the principal cut of a group element. Distinct
/// stored values denote distinct initial sets, so equality is structural.
struct Cut {
    enum class Kind { bottom, top, prefix };
    Kind kind = Kind::bottom;
    std::vector<Coord> p;

    static Cut bottom() { return Cut{Kind::bottom, {}}; }
    static Cut top() { return Cut{Kind::top, {}}; }
    static Cut prefix(std::vector<Coord> pr);

    bool is_prefix() const { return kind == Kind::prefix; }
    int prefix_len() const { return static_cast<int>(p.size()); }

    friend bool operator==(const Cut&, const Cut&) = default;
    std::string str() const;
};

/// Order-preserving additive embedding of the group into the cut monoid.
Cut embed(const GroupElem& g);
/// Recovers the group element of a full-length prefix, if the cut is one.
std::optional<GroupElem> unembed(const Cut& a, int rank);

Ord cmp_cut(const Cut& a, const Cut& b);
bool cut_lt(const Cut& a, const Cut& b);
bool cut_le(const Cut& a, const Cut& b);
Cut cut_min(const Cut& a, const Cut& b);
Cut cut_max(const Cut& a, const Cut& b);

/// Left sum: the cut whose left set is the Minkowski sum of the left sets.
Cut add_cut(const Cut& a, const Cut& b);
/// Right sum: the cut whose *right* set is the Minkowski sum of the right
/// sets. This is the boundary arithmetic of products of value-determined
/// O_v-submodules and differs from add_cut on full-length prefixes.
Cut right_sum(const Cut& a, const Cut& b);
/// n-fold left sum, n >= 1.
Cut scale_cut(long long n, const Cut& a);
/// Translation by a group element (exact on every variant).
Cut cut_sub_group(const Cut& a, const GroupElem& g);

/// A cut together with the adjoined infinity, which dominates every cut.
struct CutOrInfty {
    bool infty = false;
    Cut cut;

    static CutOrInfty inf() { return CutOrInfty{true, Cut::bottom()}; }
    static CutOrInfty fin(Cut c) { return CutOrInfty{false, std::move(c)}; }

    friend bool operator==(const CutOrInfty&, const CutOrInfty&) = default;
    std::string str() const;
};

Ord cmp_cut_inf(const CutOrInfty& a, const CutOrInfty& b);
CutOrInfty add_cut_inf(const CutOrInfty& a, const CutOrInfty& b);
/// B - alpha, with infty - alpha = infty.
CutOrInfty sub_group(const CutOrInfty& a, const GroupElem& g);

/// The isolated (convex) subgroup H_j = { x : x_1 = ... = x_{r-j} = 0 }.
/// H_0 = {0} and H_rank is the whole group.
struct IsolatedSubgroup {
    int index = 0;
    IsolatedSubgroup() = default;
    IsolatedSubgroup(int j, int rank);
};

/// H+, the smallest cut whose left set contains H.
Cut isolated_plus(const IsolatedSubgroup& h, int rank);

/// True exactly when the cut is an embedded group element; those are the
/// cancellative elements of the cut monoid.
bool is_cancellative(const Cut& a, int rank);
/// For a non-cancellative cut, a pair b != c with a + b = a + c.
std::optional<std::pair<Cut, Cut>> cancellation_witness(const Cut& a, int rank);

} // namespace cutspec
