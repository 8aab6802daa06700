#include "cutspec/spectrum.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cutspec {

namespace {

constexpr Coord kRegionReach = 1000; // representative tail magnitude

int alg_rank(const AlgebraVariant& alg) {
    return std::holds_alternative<PatternAlgebra>(alg) ? std::get<PatternAlgebra>(alg).rank
                                                       : std::get<MonomialAlgebra>(alg).rank;
}

// Value membership in the left set of a cut.
bool value_le_cut(const GroupElem& g, const Cut& c) {
    if (c.kind == Cut::Kind::top) return true;
    if (c.kind == Cut::Kind::bottom) return false;
    return cut_le(embed(g), c);
}

// Representative values of the interval (lo, hi] of the value group, with
// tails pushed to the region boundary. Empty when the interval is.
std::vector<GroupElem> interval_reps(const Cut& lo, const Cut& hi, int rank) {
    std::vector<GroupElem> reps;
    if (!cut_lt(lo, hi)) return reps;
    auto push = [&](GroupElem g) {
        if (value_le_cut(g, hi) && !value_le_cut(g, lo)) {
            for (const auto& r : reps)
                if (r == g) return;
            reps.push_back(std::move(g));
        }
    };
    // Near the top of the interval.
    if (hi.kind == Cut::Kind::top) {
        push(GroupElem(std::vector<Coord>(rank, kRegionReach)));
    } else {
        std::vector<Coord> v(rank, kRegionReach);
        for (size_t i = 0; i < hi.p.size(); ++i) v[i] = hi.p[i];
        push(GroupElem(std::move(v)));
        if (hi.prefix_len() == rank) push(GroupElem(hi.p));
    }
    // Near the bottom.
    if (lo.kind == Cut::Kind::bottom) {
        push(GroupElem(std::vector<Coord>(rank, -kRegionReach)));
    } else {
        std::vector<Coord> v(rank, -kRegionReach);
        for (size_t i = 0; i < lo.p.size(); ++i) v[i] = lo.p[i];
        v[lo.p.size() - 1] += 1;
        push(GroupElem(std::move(v)));
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Primality

// Alive monomial slots of the complement R \ Q together with representative
// values.
struct AliveSlot {
    int a, b; // matrix position or (coordinate, coordinate) for monomial
    std::vector<GroupElem> reps;
};

bool pattern_prime(const PatternAlgebra& r, const PatternIdeal& q) {
    std::vector<AliveSlot> alive;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) {
            auto reps = interval_reps(r.at(i, j).boundary, q.comps[i][j].boundary, r.rank);
            if (!reps.empty()) alive.push_back(AliveSlot{i, j, std::move(reps)});
        }
    if (alive.empty()) return false; // Q = R: not proper
    for (const auto& x : alive)
        for (const auto& y : alive) {
            // x = t^alpha e_{x.a,x.b}, y = t^beta e_{y.a,y.b}; the middle
            // slot of r is forced to (x.b, y.a) and its value ranges over
            // J_{x.b,y.a}. A witness r exists iff the admissible region
            //   { gamma : alpha + gamma + beta <= K_{x.a,y.b} }
            // reaches above the boundary of J_{x.b,y.a}.
            const Cut& middle = r.at(x.b, y.a).boundary;
            const Cut& target = q.comps[x.a][y.b].boundary;
            for (const auto& av : x.reps)
                for (const auto& bv : y.reps) {
                    Cut room = add_cut(target, embed(group_neg(group_add(av, bv))));
                    if (!cut_lt(middle, room)) return false;
                }
        }
    return true;
}

bool monomial_prime(const MonomialAlgebra& r, const MonomialIdeal& q) {
    int rank = r.rank;
    Cut floor = embed(group_neg(group_eps(rank)));
    std::vector<AliveSlot> alive;
    for (int i = 0; i < r.dim(); ++i) {
        // Alive coordinate values: nonnegative, at or below the component
        // boundary, outside Ann_i. The component is stored joined with the
        // annihilator, so the interval (floor, Q_i] minus Ann_i is the alive
        // set of the coordinate.
        std::vector<GroupElem> reps;
        for (auto& g : interval_reps(floor, q.comps[i].boundary, rank)) {
            if (!group_neg_sign(g) && !ideal_member(g, r.ann[i])) reps.push_back(g);
        }
        if (!reps.empty()) alive.push_back(AliveSlot{i, i, std::move(reps)});
    }
    if (alive.empty()) return false;
    for (const auto& x : alive)
        for (const auto& y : alive) {
            for (const auto& av : x.reps)
                for (const auto& bv : y.reps) {
                    // Search a middle basis element; gamma = 0 is optimal
                    // since larger scalars only deepen the product value.
                    bool found = false;
                    for (int j = 0; j < r.dim() && !found; ++j) {
                        const MonomialEntry& e1 = r.table[x.a][j];
                        if (e1.zero) continue;
                        const MonomialEntry& e2 = r.table[e1.k][y.a];
                        if (e2.zero) continue;
                        GroupElem val = group_add(group_add(av, bv),
                                                  group_add(e1.shift, e2.shift));
                        int s = e2.k;
                        if (value_le_cut(val, q.comps[s].boundary) &&
                            !ideal_member(val, r.ann[s]))
                            found = true;
                    }
                    if (!found) return false;
                }
        }
    return true;
}

bool ideal_prime(const AlgebraVariant& alg, const Ideal& ideal) {
    if (std::holds_alternative<PatternAlgebra>(alg))
        return pattern_prime(std::get<PatternAlgebra>(alg), std::get<PatternIdeal>(ideal));
    return monomial_prime(std::get<MonomialAlgebra>(alg), std::get<MonomialIdeal>(ideal));
}

} // namespace

// ---------------------------------------------------------------------------
// Enumeration

ContractionMap enumerate_spec(const AlgebraVariant& alg, long long bound) {
    ValidationReport rep = validate(alg);
    if (!rep.ok) throw std::invalid_argument("enumerate_spec: invalid instance: " + rep.violation);
    if (!rep.unital)
        throw std::invalid_argument("enumerate_spec: spectrum requires a unital instance");
    int rank = alg_rank(alg);
    ContractionMap m;
    m.rank = rank;
    m.base = spec_base(rank);

    // Candidate boundaries per component: the component itself and its
    // products with every base prime (the t = rank one is the zero ideal).
    auto candidates_for = [&](const IdealCut& j) {
        std::vector<Cut> cs;
        auto push = [&](Cut c) {
            for (const auto& e : cs)
                if (e == c) return;
            cs.push_back(std::move(c));
        };
        push(j.boundary);
        for (int t = 0; t <= rank; ++t)
            push(ideal_product(j, IdealCut::prime_of(IsolatedSubgroup(t, rank), rank)).boundary);
        return cs;
    };

    std::vector<std::vector<Cut>> slot_cands;
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j) slot_cands.push_back(candidates_for(r.at(i, j)));
    } else {
        const auto& r = std::get<MonomialAlgebra>(alg);
        IdealCut full = IdealCut::ring_of_integers(rank);
        for (int i = 0; i < r.dim(); ++i) {
            auto cs = candidates_for(full);
            // Join candidates with the annihilator so they normalize once.
            for (auto& c : cs) c = cut_min(c, r.ann[i].boundary);
            std::vector<Cut> dedup;
            for (auto& c : cs) {
                bool seen = false;
                for (const auto& e : dedup) seen = seen || e == c;
                if (!seen) dedup.push_back(c);
            }
            slot_cands.push_back(std::move(dedup));
        }
    }

    long long total = 1;
    for (const auto& cs : slot_cands) {
        total *= static_cast<long long>(cs.size());
        if (total > bound) throw std::runtime_error("enumerate_spec: candidate bound exceeded");
    }

    std::vector<size_t> idx(slot_cands.size(), 0);
    std::vector<Ideal> found;
    for (long long it = 0; it < total; ++it) {
        // Decode the multi-index.
        long long rem = it;
        for (size_t s = 0; s < slot_cands.size(); ++s) {
            idx[s] = rem % slot_cands[s].size();
            rem /= slot_cands[s].size();
        }
        Ideal cand = ideal_zero(alg);
        if (std::holds_alternative<PatternAlgebra>(alg)) {
            const auto& r = std::get<PatternAlgebra>(alg);
            auto& p = std::get<PatternIdeal>(cand);
            size_t s = 0;
            for (int i = 0; i < r.n; ++i)
                for (int j = 0; j < r.n; ++j) p.comps[i][j] = IdealCut{slot_cands[s][idx[s]]}, ++s;
        } else {
            auto& mo = std::get<MonomialIdeal>(cand);
            for (size_t s = 0; s < slot_cands.size(); ++s)
                mo.comps[s] = IdealCut{slot_cands[s][idx[s]]};
        }
        cand = ideal_normalize(alg, cand);
        if (!ideal_proper(alg, cand)) continue;
        if (!is_two_sided_ideal(alg, cand)) continue;
        if (!ideal_prime(alg, cand)) continue;
        bool dup = false;
        for (const auto& f : found) dup = dup || ideal_equal(f, cand);
        if (dup) continue;
        found.push_back(std::move(cand));
    }

    for (auto& f : found) {
        SpecNode node;
        node.contr = contraction(alg, f);
        node.over = -1;
        for (int b = 0; b < m.base_size(); ++b)
            if (m.base[b].second == node.contr) node.over = b;
        node.ideal = std::move(f);
        // A passing candidate whose contraction is not a base prime cannot
        // be prime; the representative test missed a witness. Drop it.
        if (node.over >= 0) m.nodes.push_back(std::move(node));
    }

    // Sort nodes by (over, ideal string) for deterministic output.
    std::sort(m.nodes.begin(), m.nodes.end(), [](const SpecNode& a, const SpecNode& b) {
        if (a.over != b.over) return a.over < b.over;
        return ideal_str(a.ideal) < ideal_str(b.ideal);
    });

    m.le.assign(m.size(), std::vector<bool>(m.size(), false));
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            m.le[a][b] = ideal_subset(m.nodes[a].ideal, m.nodes[b].ideal);
    return m;
}

// ---------------------------------------------------------------------------
// Poset properties

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

static std::string base_name(const ContractionMap& m, int b) {
    if (b == 0) return "{0}";
    if (b == m.base_size() - 1) return "Iv";
    return "P" + std::to_string(m.base[b].first.index);
}

CheckResult check_lo(const ContractionMap& m) {
    for (int b = 0; b < m.base_size(); ++b) {
        bool hit = false;
        for (const auto& n : m.nodes) hit = hit || n.over == b;
        if (!hit) return CheckResult::failed("no prime lies over " + base_name(m, b));
    }
    return CheckResult::passed();
}

CheckResult check_gd(const ContractionMap& m) {
    for (int p1 = 0; p1 < m.base_size(); ++p1)
        for (int p2 = p1 + 1; p2 < m.base_size(); ++p2)
            for (int q2 = 0; q2 < m.size(); ++q2) {
                if (m.nodes[q2].over != p2) continue;
                bool ok = false;
                for (int q1 = 0; q1 < m.size() && !ok; ++q1)
                    ok = m.nodes[q1].over == p1 && m.strict_lt(q1, q2);
                if (!ok)
                    return CheckResult::failed("no prime under node " + std::to_string(q2) +
                                               " lies over " + base_name(m, p1));
            }
    return CheckResult::passed();
}

CheckResult check_gu(const ContractionMap& m) {
    for (int p1 = 0; p1 < m.base_size(); ++p1)
        for (int p2 = p1 + 1; p2 < m.base_size(); ++p2)
            for (int q1 = 0; q1 < m.size(); ++q1) {
                if (m.nodes[q1].over != p1) continue;
                bool ok = false;
                for (int q2 = 0; q2 < m.size() && !ok; ++q2)
                    ok = m.nodes[q2].over == p2 && m.strict_lt(q1, q2);
                if (!ok)
                    return CheckResult::failed("no prime above node " + std::to_string(q1) +
                                               " lies over " + base_name(m, p2));
            }
    return CheckResult::passed();
}

CheckResult check_inc(const ContractionMap& m) {
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.strict_lt(a, b) && m.nodes[a].over == m.nodes[b].over)
                return CheckResult::failed("comparable nodes " + std::to_string(a) + " < " +
                                           std::to_string(b) + " share contraction " +
                                           base_name(m, m.nodes[a].over));
    return CheckResult::passed();
}

CheckResult check_sgb(const ContractionMap& m) {
    for (int p1 = 0; p1 < m.base_size(); ++p1)
        for (int p2 = p1 + 1; p2 < m.base_size(); ++p2)
            for (int p3 = p2 + 1; p3 < m.base_size(); ++p3)
                for (int q1 = 0; q1 < m.size(); ++q1)
                    for (int q3 = 0; q3 < m.size(); ++q3) {
                        if (m.nodes[q1].over != p1 || m.nodes[q3].over != p3) continue;
                        if (!m.strict_lt(q1, q3)) continue;
                        bool ok = false;
                        for (int q2 = 0; q2 < m.size() && !ok; ++q2)
                            ok = m.nodes[q2].over == p2 && m.strict_lt(q1, q2) &&
                                 m.strict_lt(q2, q3);
                        if (!ok)
                            return CheckResult::failed(
                                "no intermediate prime over " + base_name(m, p2) + " between " +
                                std::to_string(q1) + " and " + std::to_string(q3));
                    }
    return CheckResult::passed();
}

namespace {

bool cover_chain(const ContractionMap& m, const std::vector<int>& want, size_t pos, int below) {
    if (pos >= want.size()) return true;
    for (int q = 0; q < m.size(); ++q) {
        if (m.nodes[q].over != want[pos]) continue;
        if (below >= 0 && !m.strict_lt(q, below)) continue;
        if (cover_chain(m, want, pos + 1, q)) return true;
    }
    return false;
}

} // namespace

CheckResult check_ggd(const ContractionMap& m) {
    int nb = m.base_size();
    for (int mask = 1; mask < (1 << nb); ++mask) {
        std::vector<int> chain;
        for (int b = nb - 1; b >= 0; --b)
            if (mask & (1 << b)) chain.push_back(b); // descending
        int final_base = chain.front();
        for (int q0 = 0; q0 < m.size(); ++q0) {
            if (m.nodes[q0].over != final_base) continue;
            // Cover the rest strictly below q0.
            std::vector<int> rest(chain.begin() + 1, chain.end());
            if (!cover_chain(m, rest, 0, q0))
                return CheckResult::failed("no chain ending at node " + std::to_string(q0) +
                                           " covers the base chain of size " +
                                           std::to_string(chain.size()));
        }
    }
    return CheckResult::passed();
}

bool minimal_primes_over_zero(const ContractionMap& m) {
    for (int q = 0; q < m.size(); ++q) {
        bool minimal = true;
        for (int p = 0; p < m.size(); ++p) minimal = minimal && !m.strict_lt(p, q);
        if (minimal && m.nodes[q].over != 0) return false;
    }
    return m.size() > 0;
}

BoundsReport check_bounds(const ContractionMap& m, int dim, bool cond_b, bool torsion_free) {
    BoundsReport rep;
    rep.spec_size = m.size();
    for (int b = 0; b < m.base_size(); ++b) {
        int fiber = 0;
        for (const auto& n : m.nodes) fiber += n.over == b;
        rep.max_fiber = std::max(rep.max_fiber, fiber);
    }
    rep.fibers_ok = rep.max_fiber <= dim;
    rep.upper_ok = rep.spec_size <= dim * m.base_size();
    // Longest chain in the node poset.
    std::vector<int> depth(m.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                if (m.strict_lt(a, b) && depth[b] < depth[a] + 1) {
                    depth[b] = depth[a] + 1;
                    changed = true;
                }
    }
    for (int a = 0; a < m.size(); ++a) rep.longest_chain = std::max(rep.longest_chain, depth[a]);
    rep.lower_checked = cond_b;
    if (cond_b) {
        rep.lower_ok = m.base_size() <= rep.spec_size;
        if (torsion_free) rep.krull_ok = rep.longest_chain == m.base_size();
    }
    // Both readings of the base-size factor: the chain length (rank) and the
    // spectrum cardinality (rank+1); the cardinality reading is the checked
    // one, the dimension reading is reported alongside.
    rep.note = "upper bound uses |Spec(O_v)| = " + std::to_string(m.base_size()) +
               "; dimension reading (rank) gives " + std::to_string(dim * (m.base_size() - 1));
    bool ok = rep.fibers_ok && rep.upper_ok && (!cond_b || (rep.lower_ok && rep.krull_ok));
    rep.v = ok ? Verdict::pass : Verdict::fail;
    return rep;
}

namespace {

std::vector<std::vector<int>> maximal_chains(const ContractionMap& m) {
    std::vector<std::vector<int>> chains;
    std::vector<int> minimal, maximal;
    for (int q = 0; q < m.size(); ++q) {
        bool mn = true, mx = true;
        for (int p = 0; p < m.size(); ++p) {
            mn = mn && !m.strict_lt(p, q);
            mx = mx && !m.strict_lt(q, p);
        }
        if (mn) minimal.push_back(q);
        if (mx) maximal.push_back(q);
    }
    // DFS over covers.
    std::vector<std::vector<int>> covers(m.size());
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) {
            if (!m.strict_lt(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < m.size() && cover; ++c)
                cover = !(m.strict_lt(a, c) && m.strict_lt(c, b));
            if (cover) covers[a].push_back(b);
        }
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int q) -> void {
        cur.push_back(q);
        if (covers[q].empty())
            chains.push_back(cur);
        else
            for (int nxt : covers[q]) self(self, nxt);
        cur.pop_back();
    };
    for (int q : minimal) dfs(dfs, q);
    return chains;
}

} // namespace

CheckResult check_chain_bijection(const ContractionMap& m, bool evidence) {
    if (!evidence) return CheckResult::na("no cancellative v-quasi-valuation evidence");
    if (m.size() == 0) return CheckResult::failed("empty spectrum");
    for (const auto& chain : maximal_chains(m)) {
        if (static_cast<int>(chain.size()) != m.base_size())
            return CheckResult::failed("maximal chain of length " +
                                       std::to_string(chain.size()) + " does not match base");
        for (size_t i = 0; i < chain.size(); ++i)
            if (m.nodes[chain[i]].over != static_cast<int>(i))
                return CheckResult::failed("chain contraction is not the identity on the base");
    }
    CheckResult mx = check_max_over_iv(m);
    if (mx.v != Verdict::pass) return mx;
    return CheckResult::passed();
}

CheckResult check_max_over_iv(const ContractionMap& m) {
    int iv = m.base_size() - 1;
    for (int q = 0; q < m.size(); ++q) {
        bool maximal = true;
        for (int p = 0; p < m.size(); ++p) maximal = maximal && !m.strict_lt(q, p);
        if (maximal && m.nodes[q].over != iv)
            return CheckResult::failed("maximal node " + std::to_string(q) +
                                       " lies over " + base_name(m, m.nodes[q].over));
        if (!maximal && m.nodes[q].over == iv)
            return CheckResult::failed("non-maximal node over Iv");
    }
    return CheckResult::passed();
}

// ---------------------------------------------------------------------------
// Separation and lifting evidence

CheckResult gd_separation(const AlgebraVariant& alg, const ContractionMap& m, int p1, int p2,
                          int q2_node, long long samples, unsigned long long seed) {
    if (p1 >= p2 || p1 < 0 || p2 >= m.base_size()) return CheckResult::na("need P1 < P2");
    if (q2_node < 0 || q2_node >= m.size() || m.nodes[q2_node].over != p2)
        return CheckResult::na("Q2 must lie over P2");
    ValidationReport rep = validate(alg);
    if (!rep.torsion_free) return CheckResult::na("separation argument needs torsion-free");
    int rank = alg_rank(alg);
    Cut h1plus = isolated_plus(m.base[p1].first, rank);
    const IdealCut& p1_ideal = m.base[p1].second;
    QuasiValuation w = filter_qv_of(alg);
    std::mt19937_64 g(seed ^ 0x6a09e667ULL);
    auto u = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(g); };

    auto elems = sample_elements(alg, samples, seed + 3);
    long long checked = 0;
    for (const auto& r : elems) {
        // x = p * r with v(p) in P1-values: w(x) must exceed H1+.
        std::vector<Coord> pv(rank);
        const Cut& b = p1_ideal.boundary;
        if (b.kind == Cut::Kind::top) break; // P1 = {0}: nothing to sample
        size_t k = b.p.size();
        for (size_t i = 0; i < k; ++i) pv[i] = b.p[i];
        pv[k - 1] += 1 + u(0, 2);
        for (size_t i = k; i < pv.size(); ++i) pv[i] = u(-3, 3);
        AlgebraElem x = elem_scalar_mul(alg, Rational(1), GroupElem(pv), r);
        if (elem_is_zero(elem_normalize(alg, x))) continue;
        CutOrInfty wx = w.eval(x);
        if (cmp_cut_inf(wx, CutOrInfty::fin(h1plus)) != Ord::greater)
            return CheckResult::failed("w(x) <= H1+ for x in P1*R: x=" + x.str());
        ++checked;
    }

    // s = s1 * s2 with s1 in O_v \ P1 (a monomial with value inside H1) and
    // s2 in R \ Q2: w(s) must stay at or below H1+.
    const Ideal& q2 = m.nodes[q2_node].ideal;
    auto elems2 = sample_elements(alg, samples, seed + 5);
    AlgebraElem one = elem_one(alg);
    for (auto& s2 : elems2) {
        if (elem_in_ideal(alg, q2, s2)) s2 = elem_add(alg, s2, one);
        std::vector<Coord> sv(rank, 0);
        int j = m.base[p1].first.index; // H1 coordinates are the last j
        for (int i = rank - j; i < rank; ++i) sv[i] = u(0, 3);
        if (j > 0 && group_neg_sign(GroupElem(sv))) continue;
        AlgebraElem s = elem_scalar_mul(alg, Rational(1), GroupElem(sv), s2);
        CutOrInfty ws = w.eval(s);
        if (cmp_cut_inf(ws, CutOrInfty::fin(h1plus)) == Ord::greater)
            return CheckResult::failed("w(s) > H1+ for s outside the separating set: s=" +
                                       s.str());
        ++checked;
    }
    if (checked == 0) return CheckResult::na("no usable samples");
    return CheckResult::passed();
}

CheckResult gu_lift(const AlgebraVariant& alg, const ContractionMap& m, int node_i0, int p1) {
    if (node_i0 < 0 || node_i0 >= m.size() || p1 < 0 || p1 >= m.base_size())
        return CheckResult::na("bad indices");
    if (m.nodes[node_i0].over > p1) return CheckResult::na("P1 must contain P0");
    int rank = m.rank;
    const IdealCut& p1_ideal = m.base[p1].second;

    // P1 * R componentwise, then joined with I0.
    Ideal p1r = ideal_whole(alg);
    if (std::holds_alternative<PatternIdeal>(p1r)) {
        auto& p = std::get<PatternIdeal>(p1r);
        for (auto& row : p.comps)
            for (auto& c : row) c = ideal_product(c, p1_ideal);
    } else {
        auto& mo = std::get<MonomialIdeal>(p1r);
        for (auto& c : mo.comps) c = ideal_product(c, p1_ideal);
    }
    p1r = ideal_normalize(alg, p1r);
    Ideal lifted = ideal_normalize(alg, ideal_join(m.nodes[node_i0].ideal, p1r));
    IdealCut contr = contraction(alg, lifted);
    (void)rank;
    if (!(contr == p1_ideal))
        return CheckResult::failed("I0 + P1*R does not lie over P1: contraction boundary " +
                                   contr.boundary.str());
    for (int q = 0; q < m.size(); ++q)
        if (m.nodes[q].over == p1 && ideal_subset(m.nodes[node_i0].ideal, m.nodes[q].ideal))
            return CheckResult::passed();
    return CheckResult::failed("no enumerated prime over P1 contains I0");
}

CheckResult fg_gu_check(const AlgebraVariant& alg, const ContractionMap& m) {
    ValidationReport rep = validate(alg);
    if (!rep.fg_module || !rep.unital)
        return CheckResult::na("instance is not a finitely generated unital module");
    CheckResult mx = check_max_over_iv(m);
    if (mx.v == Verdict::fail)
        return CheckResult::failed("maximal node off the Iv fiber: " + mx.witness);
    CheckResult gu = check_gu(m);
    if (gu.v == Verdict::fail) return gu;
    ConditionB cb = check_condition_b(alg);
    if (!cb.units_ok)
        return CheckResult::failed("units condition fails for a finitely generated module");
    return CheckResult::passed();
}

} // namespace cutspec
