#include "cutspec/quasival.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cutspec {

namespace {

int alg_rank(const AlgebraVariant& alg) {
    return std::holds_alternative<PatternAlgebra>(alg) ? std::get<PatternAlgebra>(alg).rank
                                                       : std::get<MonomialAlgebra>(alg).rank;
}

bool alg_unital(const AlgebraVariant& alg) {
    if (!std::holds_alternative<PatternAlgebra>(alg)) return true;
    const auto& r = std::get<PatternAlgebra>(alg);
    for (int i = 0; i < r.n; ++i)
        if (!ideal_member(group_zero(r.rank), r.at(i, i))) return false;
    return true;
}

// Scalar action of a general O_v element (finite sum of monomials).
AlgebraElem scalar_elem_mul(const AlgebraVariant& alg, const ModelElem& c, const AlgebraElem& x) {
    AlgebraElem acc = elem_zero(alg);
    for (const auto& [g, q] : c.terms)
        acc = elem_add(alg, acc, elem_scalar_mul(alg, q, g, x));
    return acc;
}

ModelElem random_scalar(std::mt19937_64& g, int rank, bool allow_two_terms = true) {
    auto u = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(g);
    };
    std::vector<Coord> v(rank);
    for (auto& x : v) x = u(0, 3);
    Rational q(u(1, 5) * (u(0, 1) ? 1 : -1), u(1, 2));
    ModelElem c = ModelElem::monomial(q, GroupElem(v));
    if (allow_two_terms && u(0, 2) == 0) {
        std::vector<Coord> v2 = v;
        v2[rank - 1] += u(1, 3);
        c = elem_add(c, ModelElem::monomial(Rational(u(1, 3)), GroupElem(v2)));
    }
    return c;
}

} // namespace

QuasiValuation filter_qv_of(const AlgebraVariant& alg) {
    QuasiValuation w;
    w.kind = QuasiValuation::Kind::filter;
    w.provenance = "filter";
    w.gamma_valued = false;
    w.eval = [alg](const AlgebraElem& x) { return filter_value(alg, x); };
    return w;
}

QuasiValuation entry_min_qv(const AlgebraVariant& alg) {
    if (!std::holds_alternative<PatternAlgebra>(alg))
        throw std::invalid_argument("entry_min_qv: pattern instances only");
    QuasiValuation w;
    w.kind = QuasiValuation::Kind::entry_min;
    w.provenance = "entry_min";
    w.gamma_valued = true;
    w.eval = [](const AlgebraElem& x) {
        std::optional<GroupElem> best;
        for (const auto& row : x.mat)
            for (const auto& e : row) {
                auto v = valuation(e);
                if (v && (!best || group_lt(*v, *best))) best = v;
            }
        if (!best) return CutOrInfty::inf();
        return CutOrInfty::fin(embed(*best));
    };
    return w;
}

// ---------------------------------------------------------------------------
// Minimal generating sets

MinimalBasis minimal_generators(const AlgebraVariant& alg) {
    ValidationReport rep = validate(alg);
    if (!rep.ok) throw NotFinitelyGenerated("instance is invalid");
    if (!rep.torsion_free) throw NotFinitelyGenerated("instance is not torsion-free");
    if (!rep.unital) throw NotFinitelyGenerated("instance has no identity");
    if (!rep.fg_module)
        throw NotFinitelyGenerated("a component is not principal: not finitely generated");

    if (std::holds_alternative<MonomialAlgebra>(alg)) {
        const auto& r = std::get<MonomialAlgebra>(alg);
        MinimalBasis b;
        for (int i = 0; i < r.dim(); ++i) {
            AlgebraElem e = elem_zero(alg);
            e.coeffs[i] = ModelElem::one(r.rank);
            b.elems.push_back(std::move(e));
        }
        b.decompose = [](const AlgebraElem& x) -> std::optional<std::vector<ModelElem>> {
            return x.coeffs;
        };
        return b;
    }

    const auto& r = std::get<PatternAlgebra>(alg);
    // Closure plus unitality force every nonzero principal diagonal component
    // to be exactly O_v, so the identity exchange always has a unit pivot.
    int i0 = -1;
    for (int i = 0; i < r.n && i0 < 0; ++i)
        if (r.at(i, i) == IdealCut::ring_of_integers(r.rank)) i0 = i;
    if (i0 < 0) throw NotFinitelyGenerated("no diagonal component equals O_v");

    struct Gen {
        int i, j;
        GroupElem lead; // generator is t^lead e_ij
    };
    std::vector<Gen> gens;
    std::vector<std::pair<int, int>> dead;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) {
            const Cut& b = r.at(i, j).boundary;
            if (b.kind == Cut::Kind::top) {
                dead.emplace_back(i, j);
                continue;
            }
            if (i == i0 && j == i0) continue;
            gens.push_back(Gen{i, j, group_add(GroupElem(b.p), group_eps(r.rank))});
        }

    MinimalBasis basis;
    basis.elems.push_back(elem_one(alg));
    for (const auto& g : gens) {
        AlgebraElem e = elem_zero(alg);
        e.mat[g.i][g.j] = ModelElem::monomial(Rational(1), g.lead);
        basis.elems.push_back(std::move(e));
    }
    int i0c = i0;
    basis.decompose =
        [gens, dead, i0c](const AlgebraElem& x) -> std::optional<std::vector<ModelElem>> {
        for (const auto& [i, j] : dead)
            if (!x.mat[i][j].is_zero()) return std::nullopt;
        std::vector<ModelElem> out;
        out.push_back(x.mat[i0c][i0c]);
        for (const auto& g : gens) {
            ModelElem c = x.mat[g.i][g.j];
            if (g.i == g.j) c = elem_sub(c, x.mat[i0c][i0c]);
            out.push_back(elem_mul_monomial(c, Rational(1), group_neg(g.lead)));
        }
        return out;
    };
    return basis;
}

namespace {

// Coordinates of an element as a flat ModelElem vector.
std::vector<ModelElem> flat_coords(const AlgebraVariant& alg, const AlgebraElem& x) {
    if (std::holds_alternative<MonomialAlgebra>(alg)) return x.coeffs;
    std::vector<ModelElem> out;
    for (const auto& row : x.mat)
        for (const auto& e : row) out.push_back(e);
    return out;
}

std::optional<std::pair<Rational, GroupElem>> as_monomial(const ModelElem& e) {
    if (e.terms.size() != 1) return std::nullopt;
    const auto& [g, q] = *e.terms.begin();
    return std::make_pair(q, g);
}

// Inverts a square ModelElem matrix by Gauss-Jordan elimination with
// single-monomial pivots (monomial division is exact).
std::vector<std::vector<ModelElem>> invert_matrix(std::vector<std::vector<ModelElem>> m,
                                                  int rank) {
    size_t n = m.size();
    std::vector<std::vector<ModelElem>> inv(n, std::vector<ModelElem>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = ModelElem::one(rank);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t row = col; row < n; ++row)
            if (as_monomial(m[row][col])) {
                piv = row;
                break;
            }
        if (piv == n)
            throw NotFinitelyGenerated(
                "generator matrix needs a single-monomial pivot in column " +
                std::to_string(col));
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        auto [q, g] = *as_monomial(m[col][col]);
        Rational qi = Rational(1) / q;
        GroupElem gi = group_neg(g);
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = elem_mul_monomial(m[col][j], qi, gi);
            inv[col][j] = elem_mul_monomial(inv[col][j], qi, gi);
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            ModelElem f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] = elem_sub(m[row][j], elem_mul(f, m[col][j]));
                inv[row][j] = elem_sub(inv[row][j], elem_mul(f, inv[col][j]));
            }
        }
    }
    return inv;
}

std::vector<ModelElem> apply_matrix(const std::vector<std::vector<ModelElem>>& m,
                                    const std::vector<ModelElem>& v) {
    std::vector<ModelElem> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        ModelElem acc;
        for (size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero())
                acc = elem_add(acc, elem_mul(m[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

} // namespace

MinimalBasis minimal_generators(const AlgebraVariant& alg,
                                const std::vector<AlgebraElem>& gens) {
    ValidationReport rep = validate(alg);
    if (!rep.ok || !rep.torsion_free || !rep.unital)
        throw NotFinitelyGenerated("instance is not a torsion-free unital algebra");
    int rank = alg_rank(alg);
    if (gens.empty()) throw NotFinitelyGenerated("empty generator list");

    // Coordinate matrix of the generators, zero columns dropped.
    std::vector<std::vector<ModelElem>> rows;
    for (const auto& g : gens) rows.push_back(flat_coords(alg, g));
    std::vector<size_t> live;
    for (size_t j = 0; j < rows[0].size(); ++j) {
        bool nz = false;
        for (const auto& r : rows) nz = nz || !r[j].is_zero();
        if (nz) live.push_back(j);
    }
    if (live.size() != rows.size())
        throw NotFinitelyGenerated("generator list is not minimal: rank mismatch");
    std::vector<std::vector<ModelElem>> g(rows.size(), std::vector<ModelElem>(live.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < live.size(); ++j) g[i][j] = rows[i][live[j]];

    auto ginv = invert_matrix(g, rank);

    // alpha = coords(1) * G^{-1}; exchange a unit-valued alpha_{i0} for 1.
    std::vector<ModelElem> one_coords = flat_coords(alg, elem_one(alg));
    std::vector<ModelElem> one_live(live.size());
    for (size_t j = 0; j < live.size(); ++j) one_live[j] = one_coords[live[j]];
    // alpha_i = sum_j one_live[j] * ginv[j][i]  (row vector times matrix)
    std::vector<ModelElem> alpha(live.size());
    for (size_t i = 0; i < live.size(); ++i) {
        ModelElem acc;
        for (size_t j = 0; j < live.size(); ++j)
            if (!one_live[j].is_zero()) acc = elem_add(acc, elem_mul(one_live[j], ginv[j][i]));
        alpha[i] = acc;
    }
    int i0 = -1;
    for (size_t i = 0; i < alpha.size(); ++i) {
        auto v = valuation(alpha[i]);
        if (v && *v == group_zero(rank)) {
            i0 = static_cast<int>(i);
            break;
        }
        if (v && group_neg_sign(*v))
            throw NotFinitelyGenerated("1 is outside the O_v-span of the generators");
    }
    if (i0 < 0) throw NotFinitelyGenerated("no exchangeable generator: 1 not reachable");

    std::vector<AlgebraElem> new_gens = gens;
    new_gens[i0] = elem_one(alg);
    std::vector<std::vector<ModelElem>> g2 = g;
    g2[i0] = one_live;
    auto g2inv = invert_matrix(g2, rank);

    MinimalBasis basis;
    basis.elems = std::move(new_gens);
    basis.decompose = [g2inv, live](const AlgebraElem& x)
        -> std::optional<std::vector<ModelElem>> {
        std::vector<ModelElem> all;
        if (x.pattern)
            for (const auto& row : x.mat)
                for (const auto& e : row) all.push_back(e);
        else
            all = x.coeffs;
        // Coordinates outside the generated columns must vanish.
        std::vector<bool> in_live(all.size(), false);
        std::vector<ModelElem> xv(live.size());
        for (size_t j = 0; j < live.size(); ++j) {
            xv[j] = all[live[j]];
            in_live[live[j]] = true;
        }
        for (size_t j = 0; j < all.size(); ++j)
            if (!in_live[j] && !all[j].is_zero()) return std::nullopt;
        // coords = xv * G2^{-1}
        std::vector<ModelElem> out(live.size());
        for (size_t i = 0; i < live.size(); ++i) {
            ModelElem acc;
            for (size_t j = 0; j < live.size(); ++j)
                if (!xv[j].is_zero()) acc = elem_add(acc, elem_mul(xv[j], g2inv[j][i]));
            out[i] = acc;
        }
        return out;
    };
    return basis;
}

QuasiValuation min_formula_qv(const AlgebraVariant& alg, const MinimalBasis& basis) {
    QuasiValuation w;
    w.kind = QuasiValuation::Kind::min_formula;
    w.provenance = "min_formula";
    w.gamma_valued = true;
    auto decompose = basis.decompose;
    AlgebraVariant a = alg;
    w.eval = [a, decompose](const AlgebraElem& x) {
        auto coords = decompose(elem_normalize(a, x));
        if (!coords) throw std::invalid_argument("min_formula: element outside the O_v-span");
        std::optional<GroupElem> best;
        for (const auto& c : *coords) {
            auto v = valuation(c);
            if (v && (!best || group_lt(*v, *best))) best = v;
        }
        if (!best) return CutOrInfty::inf();
        return CutOrInfty::fin(embed(*best));
    };
    return w;
}

// ---------------------------------------------------------------------------
// Checker suites

AxiomReport check_axioms(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                         unsigned long long seed, bool require_nonneg) {
    AxiomReport rep;
    int rank = alg_rank(alg);
    Cut zero = embed(group_zero(rank));
    if (!(w.eval(elem_zero(alg)) == CutOrInfty::inf())) {
        rep.b1 = false;
        rep.witness = "w(0) is finite";
    }
    auto elems = sample_elements(alg, 2 * samples, seed);
    for (long long t = 0; t + 1 < static_cast<long long>(elems.size()); t += 2) {
        AlgebraElem x = elems[t];
        AlgebraElem y = elems[t + 1];
        if (t % 8 == 0) {
            // Engineered cancellation: x + y collapses the leading terms.
            y = elem_add(alg, elem_sub(alg, elem_zero(alg), x),
                         deeper_perturbation(alg, elems[t + 1], seed + t));
        }
        CutOrInfty wx = w.eval(x), wy = w.eval(y);
        CutOrInfty wsum = w.eval(elem_add(alg, x, y));
        CutOrInfty wprod = w.eval(elem_mul(alg, x, y));
        CutOrInfty min_xy = cmp_cut_inf(wx, wy) == Ord::greater ? wy : wx;
        if (rep.b3 && cmp_cut_inf(wsum, min_xy) == Ord::less) {
            rep.b3 = false;
            rep.witness = "B3 fails: w(x+y) < min at x=" + x.str() + " y=" + y.str();
        }
        if (rep.b2 && cmp_cut_inf(wprod, add_cut_inf(wx, wy)) == Ord::less) {
            rep.b2 = false;
            rep.witness = "B2 fails: w(xy) < w(x)+w(y) at x=" + x.str() + " y=" + y.str();
        }
        if (require_nonneg && rep.nonneg) {
            for (const AlgebraElem* e : {&x, &y})
                if (cmp_cut_inf(w.eval(*e), CutOrInfty::fin(zero)) == Ord::less) {
                    rep.nonneg = false;
                    rep.witness = "negative value on a member: " + e->str();
                }
        }
        ++rep.pairs_checked;
    }
    return rep;
}

VqvReport check_v_qv(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                     unsigned long long seed) {
    VqvReport rep;
    int rank = alg_rank(alg);
    rep.unital_checked = alg_unital(alg);
    std::mt19937_64 g(seed ^ 0x5eedULL);
    auto elems = sample_elements(alg, samples, seed + 1);
    for (const auto& x : elems) {
        ModelElem c = random_scalar(g, rank);
        CutOrInfty lhs = w.eval(scalar_elem_mul(alg, c, x));
        CutOrInfty rhs = w.eval(x);
        auto vc = valuation(c);
        CutOrInfty shifted = vc ? sub_group(rhs, group_neg(*vc)) : CutOrInfty::inf();
        if (rep.homogeneous && !(lhs == shifted)) {
            rep.homogeneous = false;
            rep.witness = "w(cx) != v(c)+w(x) at c=" + c.str() + " x=" + x.str();
        }
        ++rep.pairs_checked;
    }
    if (rep.unital_checked) {
        AlgebraElem one = elem_one(alg);
        if (!(w.eval(one) == CutOrInfty::fin(embed(group_zero(rank))))) {
            rep.unit_value_zero = false;
            rep.witness = "w(1) != 0";
        }
        for (int t = 0; t < 64; ++t) {
            ModelElem c = random_scalar(g, rank, false);
            auto vc = valuation(c);
            CutOrInfty want = vc ? CutOrInfty::fin(embed(*vc)) : CutOrInfty::inf();
            if (!(w.eval(scalar_elem_mul(alg, c, one)) == want)) {
                rep.extends_v = false;
                rep.witness = "w(c*1) != v(c) at c=" + c.str();
                break;
            }
        }
    }
    return rep;
}

bool check_stability(const QuasiValuation& w, const AlgebraVariant& alg, const AlgebraElem& c,
                     long long samples, unsigned long long seed, std::string* witness) {
    CutOrInfty wc = w.eval(c);
    auto elems = sample_elements(alg, samples, seed + 7);
    for (const auto& r : elems) {
        CutOrInfty lhs = w.eval(elem_mul(alg, c, r));
        CutOrInfty rhs = add_cut_inf(wc, w.eval(r));
        if (!(lhs == rhs)) {
            if (witness) *witness = "w(cr) != w(c)+w(r) at r=" + r.str();
            return false;
        }
    }
    return true;
}

bool extended_equal(const AlgebraVariant& alg, const ExtendedElem& a, const ExtendedElem& b) {
    AlgebraElem lhs = elem_scalar_mul(alg, Rational(1), b.denom, a.num);
    AlgebraElem rhs = elem_scalar_mul(alg, Rational(1), a.denom, b.num);
    return lhs == rhs;
}

CutOrInfty natural_eval(const NaturalExtension& w, const ExtendedElem& x) {
    return sub_group(w.base.eval(x.num), x.denom);
}

bool ow_member(const NaturalExtension& w, const ExtendedElem& x) {
    CutOrInfty v = natural_eval(w, x);
    int rank = static_cast<int>(x.denom.c.size());
    return cmp_cut_inf(v, CutOrInfty::fin(embed(group_zero(rank)))) != Ord::less;
}

bool coordinate_divisible(const MinimalBasis& basis, const AlgebraVariant& alg,
                          const ExtendedElem& x) {
    (void)alg;
    auto coords = basis.decompose(x.num);
    if (!coords) return false;
    for (const auto& c : *coords) {
        auto v = valuation(c);
        if (v && group_lt(*v, x.denom)) return false;
    }
    return true;
}

ImageScan image_scan(const QuasiValuation& w, const AlgebraVariant& alg, long long samples,
                     unsigned long long seed) {
    ImageScan scan;
    int rank = alg_rank(alg);
    auto elems = sample_elements(alg, samples, seed + 13);
    for (const auto& x : elems) {
        CutOrInfty v = w.eval(x);
        bool zero = elem_is_zero(elem_normalize(alg, x));
        if (v.infty) {
            if (!zero) scan.infty_on_nonzero = true;
        } else if (!is_cancellative(v.cut, rank)) {
            scan.all_cancellative = false;
        }
        if (scan.coverage.size() < 12) {
            std::string s = v.str();
            bool seen = false;
            for (const auto& c : scan.coverage) seen = seen || c == s;
            if (!seen) scan.coverage.push_back(s);
        }
        ++scan.samples_checked;
    }
    return scan;
}

QuasiValuation corrupt_homogeneity(const QuasiValuation& w, int rank) {
    QuasiValuation c = w;
    c.kind = QuasiValuation::Kind::corrupted;
    c.provenance = w.provenance + "+homogeneity-corruption";
    auto base = w.eval;
    GroupElem eps = group_eps(rank);
    c.eval = [base, eps](const AlgebraElem& x) {
        CutOrInfty v = base(x);
        if (v.infty || !v.cut.is_prefix()) return v;
        Coord s = 0;
        for (Coord p : v.cut.p) s += p;
        if (s & 1) return CutOrInfty::fin(add_cut(v.cut, embed(eps)));
        return v;
    };
    return c;
}

QuasiValuation corrupt_zero_floor(const QuasiValuation& w, int rank) {
    QuasiValuation c = w;
    c.kind = QuasiValuation::Kind::corrupted;
    c.provenance = w.provenance + "+floor-corruption";
    auto base = w.eval;
    GroupElem eps = group_eps(rank);
    c.eval = [base, eps](const AlgebraElem& x) { return sub_group(base(x), eps); };
    return c;
}

} // namespace cutspec
