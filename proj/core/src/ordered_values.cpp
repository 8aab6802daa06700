#include "cutspec/ordered_values.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutspec {

GroupDescriptor::GroupDescriptor(int r) : rank(r) {
    if (r < 1 || r > kMaxRank)
        throw std::invalid_argument("GroupDescriptor: rank out of range [1," +
                                    std::to_string(kMaxRank) + "]");
}

std::string GroupElem::str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

static void require_same_rank(const GroupElem& a, const GroupElem& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("group rank mismatch: " + std::to_string(a.rank()) +
                                    " vs " + std::to_string(b.rank()));
}

Ord cmp_group(const GroupElem& a, const GroupElem& b) {
    require_same_rank(a, b);
    for (int i = 0; i < a.rank(); ++i) {
        if (a.c[i] < b.c[i]) return Ord::less;
        if (a.c[i] > b.c[i]) return Ord::greater;
    }
    return Ord::equal;
}

GroupElem group_zero(int rank) { return GroupElem(std::vector<Coord>(rank, 0)); }

GroupElem group_eps(int rank) {
    std::vector<Coord> v(rank, 0);
    v.back() = 1;
    return GroupElem(std::move(v));
}

GroupElem group_add(const GroupElem& a, const GroupElem& b) {
    require_same_rank(a, b);
    GroupElem r = a;
    for (int i = 0; i < a.rank(); ++i) r.c[i] += b.c[i];
    return r;
}

GroupElem group_neg(const GroupElem& a) {
    GroupElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

GroupElem group_sub(const GroupElem& a, const GroupElem& b) { return group_add(a, group_neg(b)); }

GroupElem group_scale(long long n, const GroupElem& a) {
    GroupElem r = a;
    for (auto& x : r.c) x *= n;
    return r;
}

bool group_lt(const GroupElem& a, const GroupElem& b) { return cmp_group(a, b) == Ord::less; }
bool group_le(const GroupElem& a, const GroupElem& b) { return cmp_group(a, b) != Ord::greater; }

bool group_pos(const GroupElem& a) {
    for (auto x : a.c) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

bool group_neg_sign(const GroupElem& a) {
    for (auto x : a.c) {
        if (x < 0) return true;
        if (x > 0) return false;
    }
    return false;
}

Cut Cut::prefix(std::vector<Coord> pr) {
    if (pr.empty()) throw std::invalid_argument("Cut::prefix: empty prefix");
    return Cut{Kind::prefix, std::move(pr)};
}

std::string Cut::str() const {
    switch (kind) {
        case Kind::bottom: return "bottom";
        case Kind::top: return "top";
        case Kind::prefix: {
            std::string s = "prefix[";
            for (size_t i = 0; i < p.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(p[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

Cut embed(const GroupElem& g) {
    if (g.rank() == 0) throw std::invalid_argument("embed: rank-0 element");
    return Cut::prefix(g.c);
}

std::optional<GroupElem> unembed(const Cut& a, int rank) {
    if (a.is_prefix() && a.prefix_len() == rank) return GroupElem(a.p);
    return std::nullopt;
}

static Ord cmp_vec(const std::vector<Coord>& a, const std::vector<Coord>& b, size_t m) {
    for (size_t i = 0; i < m; ++i) {
        if (a[i] < b[i]) return Ord::less;
        if (a[i] > b[i]) return Ord::greater;
    }
    return Ord::equal;
}

Ord cmp_cut(const Cut& a, const Cut& b) {
    if (a.kind == Cut::Kind::bottom) return b.kind == Cut::Kind::bottom ? Ord::equal : Ord::less;
    if (b.kind == Cut::Kind::bottom) return Ord::greater;
    if (a.kind == Cut::Kind::top) return b.kind == Cut::Kind::top ? Ord::equal : Ord::greater;
    if (b.kind == Cut::Kind::top) return Ord::less;
    // Two prefixes: compare the shared coordinates; on a tie the longer
    // prefix denotes the smaller initial set.
    size_t m = std::min(a.p.size(), b.p.size());
    Ord o = cmp_vec(a.p, b.p, m);
    if (o != Ord::equal) return o;
    if (a.p.size() == b.p.size()) return Ord::equal;
    return a.p.size() > b.p.size() ? Ord::less : Ord::greater;
}

bool cut_lt(const Cut& a, const Cut& b) { return cmp_cut(a, b) == Ord::less; }
bool cut_le(const Cut& a, const Cut& b) { return cmp_cut(a, b) != Ord::greater; }
Cut cut_min(const Cut& a, const Cut& b) { return cut_le(a, b) ? a : b; }
Cut cut_max(const Cut& a, const Cut& b) { return cut_le(a, b) ? b : a; }

Cut add_cut(const Cut& a, const Cut& b) {
    // The empty left set absorbs, then the full one does.
    if (a.kind == Cut::Kind::bottom || b.kind == Cut::Kind::bottom) return Cut::bottom();
    if (a.kind == Cut::Kind::top || b.kind == Cut::Kind::top) return Cut::top();
    size_t m = std::min(a.p.size(), b.p.size());
    std::vector<Coord> s(m);
    for (size_t i = 0; i < m; ++i) s[i] = a.p[i] + b.p[i];
    return Cut::prefix(std::move(s));
}

Cut right_sum(const Cut& a, const Cut& b) {
    // Right sets: bottom -> everything, top -> empty.
    if (a.kind == Cut::Kind::top || b.kind == Cut::Kind::top) return Cut::top();
    if (a.kind == Cut::Kind::bottom || b.kind == Cut::Kind::bottom) return Cut::bottom();
    // The right set of Prefix(p) is { x : x[..k] >= p + e_k }; sums of final
    // sets truncate to the shorter prefix just like left sums do.
    size_t m = std::min(a.p.size(), b.p.size());
    std::vector<Coord> s(m);
    for (size_t i = 0; i < m; ++i) s[i] = a.p[i] + b.p[i];
    if (a.p.size() == m) s[m - 1] += 1;
    if (b.p.size() == m) s[m - 1] += 1;
    s[m - 1] -= 1;
    return Cut::prefix(std::move(s));
}

Cut scale_cut(long long n, const Cut& a) {
    if (n < 1) throw std::invalid_argument("scale_cut: n must be >= 1");
    if (!a.is_prefix()) return a;
    std::vector<Coord> s(a.p.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = n * a.p[i];
    return Cut::prefix(std::move(s));
}

Cut cut_sub_group(const Cut& a, const GroupElem& g) {
    if (!a.is_prefix()) return a;
    std::vector<Coord> s(a.p.size());
    if (static_cast<int>(a.p.size()) > g.rank())
        throw std::invalid_argument("cut_sub_group: rank mismatch");
    for (size_t i = 0; i < s.size(); ++i) s[i] = a.p[i] - g.c[i];
    return Cut::prefix(std::move(s));
}

std::string CutOrInfty::str() const { return infty ? "infty" : cut.str(); }

Ord cmp_cut_inf(const CutOrInfty& a, const CutOrInfty& b) {
    if (a.infty && b.infty) return Ord::equal;
    if (a.infty) return Ord::greater;
    if (b.infty) return Ord::less;
    return cmp_cut(a.cut, b.cut);
}

CutOrInfty add_cut_inf(const CutOrInfty& a, const CutOrInfty& b) {
    if (a.infty || b.infty) return CutOrInfty::inf();
    return CutOrInfty::fin(add_cut(a.cut, b.cut));
}

CutOrInfty sub_group(const CutOrInfty& a, const GroupElem& g) {
    if (a.infty) return a;
    return CutOrInfty::fin(cut_sub_group(a.cut, g));
}

IsolatedSubgroup::IsolatedSubgroup(int j, int rank) : index(j) {
    if (j < 0 || j > rank)
        throw std::invalid_argument("IsolatedSubgroup: index out of [0,rank]");
}

Cut isolated_plus(const IsolatedSubgroup& h, int rank) {
    if (h.index == rank) return Cut::top();
    return Cut::prefix(std::vector<Coord>(rank - h.index, 0));
}

bool is_cancellative(const Cut& a, int rank) {
    return a.is_prefix() && a.prefix_len() == rank;
}

std::optional<std::pair<Cut, Cut>> cancellation_witness(const Cut& a, int rank) {
    if (is_cancellative(a, rank)) return std::nullopt;
    GroupElem z = group_zero(rank);
    if (a.kind == Cut::Kind::bottom || a.kind == Cut::Kind::top)
        return std::make_pair(embed(z), embed(group_eps(rank)));
    // Short prefix: the truncated tail coordinate is invisible to the sum.
    GroupElem z2 = z;
    z2.c[rank - 1] = -1;
    return std::make_pair(embed(z), embed(z2));
}

} // namespace cutspec
