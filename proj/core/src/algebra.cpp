#include "cutspec/algebra.hpp"

#include <random>
#include <stdexcept>

namespace cutspec {

std::string AlgebraElem::str() const {
    std::string s;
    if (pattern) {
        s = "[";
        for (size_t i = 0; i < mat.size(); ++i) {
            if (i) s += "; ";
            for (size_t j = 0; j < mat[i].size(); ++j) {
                if (j) s += ", ";
                s += mat[i][j].str();
            }
        }
        s += "]";
    } else {
        s = "(";
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ", ";
            s += coeffs[i].str();
        }
        s += ")";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Validation

static bool cut_rank_ok(const Cut& c, int rank) {
    return !c.is_prefix() || (c.prefix_len() >= 1 && c.prefix_len() <= rank);
}

static ValidationReport validate_pattern(const PatternAlgebra& r) {
    ValidationReport rep;
    rep.torsion_free = true;
    if (r.rank < 1 || r.rank > kMaxRank) {
        rep.ok = false;
        rep.violation = "rank out of range";
        return rep;
    }
    if (r.n < 1 || static_cast<int>(r.comps.size()) != r.n) {
        rep.ok = false;
        rep.violation = "component grid is not n x n";
        return rep;
    }
    for (const auto& row : r.comps) {
        if (static_cast<int>(row.size()) != r.n) {
            rep.ok = false;
            rep.violation = "component grid is not n x n";
            return rep;
        }
        for (const auto& j : row)
            if (!cut_rank_ok(j.boundary, r.rank)) {
                rep.ok = false;
                rep.violation = "component boundary prefix longer than rank";
                return rep;
            }
    }
    for (int i = 0; i < r.n; ++i)
        if (!ideal_member(group_zero(r.rank), r.at(i, i))) rep.unital = false;
    for (int i = 0; i < r.n && rep.ok; ++i)
        for (int m = 0; m < r.n && rep.ok; ++m)
            for (int l = 0; l < r.n && rep.ok; ++l)
                if (!product_contained(r.at(i, m), r.at(m, l), r.at(i, l))) {
                    rep.ok = false;
                    rep.violation = "closure fails: J(" + std::to_string(i) + "," +
                                    std::to_string(m) + ")*J(" + std::to_string(m) + "," +
                                    std::to_string(l) + ") not inside J(" + std::to_string(i) +
                                    "," + std::to_string(l) + ")";
                }
    int dim = 0;
    bool fg = true;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) {
            const Cut& b = r.at(i, j).boundary;
            if (b.kind != Cut::Kind::top) {
                ++dim;
                if (!is_cancellative(b, r.rank)) fg = false; // principal <=> full prefix
            }
        }
    rep.dim_tensor_f = dim;
    rep.dim_module = dim;
    rep.faithful = dim > 0;
    rep.fg_module = fg;
    return rep;
}

// Composes the product (b_i b_j) as a normalized table entry.
static MonomialEntry table_entry(const MonomialAlgebra& r, int i, int j) {
    MonomialEntry e = r.table[i][j];
    if (e.zero) return e;
    if (ideal_member(e.shift, r.ann[e.k])) return MonomialEntry::none();
    return e;
}

static MonomialEntry entry_compose(const MonomialAlgebra& r, const MonomialEntry& e, int k,
                                   bool right) {
    if (e.zero) return e;
    MonomialEntry f = right ? table_entry(r, e.k, k) : table_entry(r, k, e.k);
    if (f.zero) return f;
    MonomialEntry out = MonomialEntry::of(group_add(e.shift, f.shift), f.k);
    if (ideal_member(out.shift, r.ann[out.k])) return MonomialEntry::none();
    return out;
}

static ValidationReport validate_monomial(const MonomialAlgebra& r) {
    ValidationReport rep;
    int m = r.dim();
    if (r.rank < 1 || r.rank > kMaxRank) {
        rep.ok = false;
        rep.violation = "rank out of range";
        return rep;
    }
    if (m < 1 || static_cast<int>(r.ann.size()) != m ||
        static_cast<int>(r.table.size()) != m) {
        rep.ok = false;
        rep.violation = "basis/ann/table sizes disagree";
        return rep;
    }
    for (const auto& row : r.table)
        if (static_cast<int>(row.size()) != m) {
            rep.ok = false;
            rep.violation = "table is not square";
            return rep;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const MonomialEntry& e = r.table[i][j];
            if (e.zero) continue;
            if (e.k < 0 || e.k >= m || e.shift.rank() != r.rank) {
                rep.ok = false;
                rep.violation = "table entry out of range";
                return rep;
            }
            if (group_neg_sign(e.shift)) {
                rep.ok = false;
                rep.violation = "negative structure shift at (" + std::to_string(i) + "," +
                                std::to_string(j) + "): product leaves the algebra";
                return rep;
            }
        }
    // No coordinate may be annihilated by units.
    for (int i = 0; i < m; ++i)
        if (ideal_member(group_zero(r.rank), r.ann[i])) {
            rep.ok = false;
            rep.violation = "annihilator of basis element " + std::to_string(i) +
                            " contains units";
            return rep;
        }
    // b_0 must act as the identity.
    for (int j = 0; j < m; ++j) {
        MonomialEntry l = table_entry(r, 0, j), rgt = table_entry(r, j, 0);
        MonomialEntry id = MonomialEntry::of(group_zero(r.rank), j);
        if (ideal_member(id.shift, r.ann[j])) id = MonomialEntry::none();
        if (!(l == id) || !(rgt == id)) {
            rep.ok = false;
            rep.violation = "basis element 0 is not the identity";
            return rep;
        }
    }
    // Annihilator compatibility: a b_i = 0 forces a (b_i b_j) = 0 and
    // symmetrically.
    for (int i = 0; i < m && rep.ok; ++i)
        for (int j = 0; j < m && rep.ok; ++j) {
            MonomialEntry e = table_entry(r, i, j);
            if (e.zero) continue;
            IdealCut shifted_i = ideal_shift(e.shift, r.ann[i]);
            IdealCut shifted_j = ideal_shift(e.shift, r.ann[j]);
            if (!ideal_contains(r.ann[e.k], shifted_i) ||
                !ideal_contains(r.ann[e.k], shifted_j)) {
                rep.ok = false;
                rep.violation = "annihilators not compatible with the table at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    // Exhaustive associativity on basis triples.
    for (int i = 0; i < m && rep.ok; ++i)
        for (int j = 0; j < m && rep.ok; ++j)
            for (int k = 0; k < m && rep.ok; ++k) {
                MonomialEntry lhs = entry_compose(r, table_entry(r, i, j), k, true);
                MonomialEntry rhs = entry_compose(r, table_entry(r, j, k), i, false);
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.violation = "associativity fails on basis triple (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")";
                }
            }
    rep.unital = true;
    rep.dim_module = m;
    int dim_f = 0;
    for (int i = 0; i < m; ++i)
        if (r.ann[i].is_zero_ideal()) ++dim_f;
    rep.dim_tensor_f = dim_f;
    rep.torsion_free = dim_f == m;
    rep.faithful = r.ann[0].is_zero_ideal();
    rep.fg_module = true;
    return rep;
}

ValidationReport validate(const AlgebraVariant& alg) {
    if (std::holds_alternative<PatternAlgebra>(alg))
        return validate_pattern(std::get<PatternAlgebra>(alg));
    return validate_monomial(std::get<MonomialAlgebra>(alg));
}

// ---------------------------------------------------------------------------
// Element arithmetic

AlgebraElem elem_zero(const AlgebraVariant& alg) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        return AlgebraElem::pattern_elem(
            std::vector<std::vector<ModelElem>>(r.n, std::vector<ModelElem>(r.n)));
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    return AlgebraElem::monomial_elem(std::vector<ModelElem>(r.dim()));
}

AlgebraElem elem_one(const AlgebraVariant& alg) {
    AlgebraElem e = elem_zero(alg);
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        for (int i = 0; i < r.n; ++i) e.mat[i][i] = ModelElem::one(r.rank);
    } else {
        const auto& r = std::get<MonomialAlgebra>(alg);
        e.coeffs[0] = ModelElem::one(r.rank);
    }
    return e;
}

bool elem_is_zero(const AlgebraElem& x) {
    if (x.pattern) {
        for (const auto& row : x.mat)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }
    for (const auto& e : x.coeffs)
        if (!e.is_zero()) return false;
    return true;
}

static ModelElem drop_ann_terms(const ModelElem& e, const IdealCut& ann) {
    if (ann.is_zero_ideal()) return e;
    ModelElem r;
    for (const auto& [g, q] : e.terms)
        if (!ideal_member(g, ann)) r.terms.emplace(g, q);
    return r;
}

AlgebraElem elem_normalize(const AlgebraVariant& alg, AlgebraElem x) {
    if (!std::holds_alternative<MonomialAlgebra>(alg)) return x;
    const auto& r = std::get<MonomialAlgebra>(alg);
    for (int i = 0; i < r.dim(); ++i) x.coeffs[i] = drop_ann_terms(x.coeffs[i], r.ann[i]);
    return x;
}

static void check_shape(const AlgebraVariant& alg, const AlgebraElem& x) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        if (!x.pattern || static_cast<int>(x.mat.size()) != r.n)
            throw std::invalid_argument("element shape does not match the pattern instance");
    } else {
        const auto& r = std::get<MonomialAlgebra>(alg);
        if (x.pattern || static_cast<int>(x.coeffs.size()) != r.dim())
            throw std::invalid_argument("element shape does not match the monomial instance");
    }
}

AlgebraElem elem_add(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b) {
    check_shape(alg, a);
    check_shape(alg, b);
    AlgebraElem r = a;
    if (a.pattern) {
        for (size_t i = 0; i < r.mat.size(); ++i)
            for (size_t j = 0; j < r.mat.size(); ++j)
                r.mat[i][j] = cutspec::elem_add(a.mat[i][j], b.mat[i][j]);
        return r;
    }
    for (size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = cutspec::elem_add(a.coeffs[i], b.coeffs[i]);
    return elem_normalize(alg, std::move(r));
}

AlgebraElem elem_sub(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b) {
    AlgebraElem nb = b;
    if (b.pattern) {
        for (auto& row : nb.mat)
            for (auto& e : row) e = elem_neg(e);
    } else {
        for (auto& e : nb.coeffs) e = elem_neg(e);
    }
    return elem_add(alg, a, nb);
}

AlgebraElem elem_mul(const AlgebraVariant& alg, const AlgebraElem& a, const AlgebraElem& b) {
    check_shape(alg, a);
    check_shape(alg, b);
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        AlgebraElem out = elem_zero(alg);
        for (int i = 0; i < r.n; ++i)
            for (int l = 0; l < r.n; ++l) {
                ModelElem acc;
                for (int m = 0; m < r.n; ++m)
                    acc = cutspec::elem_add(acc, cutspec::elem_mul(a.mat[i][m], b.mat[m][l]));
                out.mat[i][l] = std::move(acc);
            }
        return out;
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    AlgebraElem out = elem_zero(alg);
    for (int i = 0; i < r.dim(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; j < r.dim(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            MonomialEntry e = table_entry(r, i, j);
            if (e.zero) continue;
            ModelElem prod = cutspec::elem_mul(a.coeffs[i], b.coeffs[j]);
            prod = elem_mul_monomial(prod, Rational(1), e.shift);
            out.coeffs[e.k] = cutspec::elem_add(out.coeffs[e.k], prod);
        }
    }
    return elem_normalize(alg, std::move(out));
}

AlgebraElem elem_scalar_mul(const AlgebraVariant& alg, const Rational& q, const GroupElem& g,
                            const AlgebraElem& x) {
    check_shape(alg, x);
    AlgebraElem r = x;
    if (x.pattern) {
        for (auto& row : r.mat)
            for (auto& e : row) e = elem_mul_monomial(e, q, g);
        return r;
    }
    for (auto& e : r.coeffs) e = elem_mul_monomial(e, q, g);
    return elem_normalize(alg, std::move(r));
}

bool elem_member(const AlgebraVariant& alg, const AlgebraElem& x) {
    check_shape(alg, x);
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                if (!ideal_member(valuation(x.mat[i][j]), r.at(i, j))) return false;
        return true;
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    for (int i = 0; i < r.dim(); ++i) {
        ModelElem c = drop_ann_terms(x.coeffs[i], r.ann[i]);
        auto v = valuation(c);
        if (v && group_neg_sign(*v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Supports and the filter quasi-valuation

ValMatrix value_grid(const AlgebraElem& x) {
    if (!x.pattern) throw std::invalid_argument("value_grid: pattern elements only");
    ValMatrix g;
    g.v.resize(x.mat.size());
    for (size_t i = 0; i < x.mat.size(); ++i)
        for (size_t j = 0; j < x.mat[i].size(); ++j) g.v[i].push_back(valuation(x.mat[i][j]));
    return g;
}

// The set of divisor values delta with C >= add_cut(D, embed(delta)), as a
// cut (the admissible set is always an initial set).
static Cut admissible_cut(const Cut& c, const Cut& d) {
    if (d.kind == Cut::Kind::bottom) return Cut::top();
    if (c.kind == Cut::Kind::top) return Cut::top();
    if (c.kind == Cut::Kind::bottom) return Cut::bottom();
    if (d.kind == Cut::Kind::top) return Cut::bottom();
    size_t kc = c.p.size(), kd = d.p.size();
    if (kc <= kd) {
        std::vector<Coord> diff(kc);
        for (size_t i = 0; i < kc; ++i) diff[i] = c.p[i] - d.p[i];
        return Cut::prefix(std::move(diff));
    }
    std::vector<Coord> diff(kd);
    for (size_t i = 0; i < kd; ++i) diff[i] = c.p[i] - d.p[i];
    diff[kd - 1] -= 1;
    return Cut::prefix(std::move(diff));
}

Cut support(const ValMatrix& x, const PatternAlgebra& r) {
    Cut acc = Cut::top();
    for (int k = 0; k < r.n; ++k)
        for (int m = 0; m < r.n; ++m) {
            if (!x.v[k][m]) continue;
            for (int l = 0; l < r.n; ++l) {
                const Cut& bml = r.at(m, l).boundary;
                if (bml.kind == Cut::Kind::top) continue; // J_ml = {0}: vacuous
                Cut c = add_cut(bml, embed(*x.v[k][m]));
                acc = cut_min(acc, admissible_cut(c, r.at(k, l).boundary));
            }
        }
    return cut_max(acc, embed(group_neg(group_eps(r.rank))));
}

Cut support(const AlgebraElem& x, const MonomialAlgebra& r) {
    AlgebraVariant alg = r;
    Cut acc = Cut::top();
    for (int j = 0; j < r.dim(); ++j) {
        // x * b_j through the table.
        AlgebraElem bj = elem_zero(alg);
        bj.coeffs[j] = ModelElem::one(r.rank);
        AlgebraElem y = elem_mul(alg, x, bj);
        for (int k = 0; k < r.dim(); ++k) {
            auto v = valuation(y.coeffs[k]);
            if (!v) continue;
            acc = cut_min(acc, embed(*v));
        }
    }
    return cut_max(acc, embed(group_neg(group_eps(r.rank))));
}

CutOrInfty filter_value(const AlgebraVariant& alg, const AlgebraElem& x) {
    if (!elem_member(alg, x))
        throw std::invalid_argument("filter_value: element is not a member of the instance");
    AlgebraElem nx = elem_normalize(alg, x);
    if (elem_is_zero(nx)) return CutOrInfty::inf();
    if (std::holds_alternative<PatternAlgebra>(alg))
        return CutOrInfty::fin(support(value_grid(nx), std::get<PatternAlgebra>(alg)));
    return CutOrInfty::fin(support(nx, std::get<MonomialAlgebra>(alg)));
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr Coord kSampleBox = 6;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed) {}
    Coord uniform(Coord lo, Coord hi) {
        return std::uniform_int_distribution<Coord>(lo, hi)(g);
    }
    Rational coeff() {
        Coord n = uniform(1, 5);
        if (uniform(0, 1)) n = -n;
        return Rational(n, uniform(1, 3));
    }
};

// A random group element strictly above the boundary, coordinates bounded.
std::optional<GroupElem> random_value_above(Rng& rng, const Cut& boundary, int rank) {
    std::vector<Coord> v(rank);
    switch (boundary.kind) {
        case Cut::Kind::top: return std::nullopt;
        case Cut::Kind::bottom:
            for (auto& x : v) x = rng.uniform(-kSampleBox, kSampleBox);
            return GroupElem(std::move(v));
        case Cut::Kind::prefix: {
            size_t k = boundary.p.size();
            for (size_t i = 0; i < k; ++i) v[i] = boundary.p[i];
            v[k - 1] += 1 + rng.uniform(0, 2);
            for (size_t i = k; i < v.size(); ++i) v[i] = rng.uniform(-kSampleBox, kSampleBox);
            return GroupElem(std::move(v));
        }
    }
    return std::nullopt;
}

ModelElem random_model_elem(Rng& rng, const GroupElem& lead, int rank) {
    ModelElem e = ModelElem::monomial(rng.coeff(), lead);
    long long extra = rng.uniform(0, 2);
    GroupElem g = lead;
    for (long long t = 0; t < extra; ++t) {
        GroupElem bump = group_zero(rank);
        bump.c[rng.uniform(0, rank - 1)] = rng.uniform(0, 2);
        bump.c[rank - 1] += rng.uniform(1, 3);
        g = group_add(g, bump);
        e = cutspec::elem_add(e, ModelElem::monomial(rng.coeff(), g));
    }
    return e;
}

// A nonnegative value outside the annihilator, if one exists in the box.
std::optional<GroupElem> random_nonneg_value(Rng& rng, const IdealCut& ann, int rank) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Coord> v(rank);
        for (auto& x : v) x = rng.uniform(0, kSampleBox);
        GroupElem g(std::move(v));
        if (!ideal_member(g, ann)) return g;
    }
    return std::nullopt;
}

} // namespace

std::vector<AlgebraElem> sample_elements(const AlgebraVariant& alg, long long count,
                                         unsigned long long seed) {
    Rng rng(seed);
    int rank = std::holds_alternative<PatternAlgebra>(alg)
                   ? std::get<PatternAlgebra>(alg).rank
                   : std::get<MonomialAlgebra>(alg).rank;
    std::vector<AlgebraElem> out;
    out.reserve(count);
    for (long long c = 0; c < count; ++c) {
        // Every eighth element shares the previous one's leading terms, so
        // consecutive pairs exercise exact cancellation under subtraction.
        if (c % 8 == 7 && !out.empty() && !elem_is_zero(out.back())) {
            GroupElem bump = group_zero(rank);
            bump.c[rank - 1] = rng.uniform(1, 3);
            AlgebraElem deeper = elem_scalar_mul(alg, Rational(rng.coeff()), bump, out.back());
            out.push_back(elem_add(alg, out.back(), deeper));
            continue;
        }
        AlgebraElem e = elem_zero(alg);
        if (std::holds_alternative<PatternAlgebra>(alg)) {
            const auto& r = std::get<PatternAlgebra>(alg);
            for (int i = 0; i < r.n; ++i)
                for (int j = 0; j < r.n; ++j) {
                    if (rng.uniform(0, 3) == 0) continue; // keep some entries zero
                    auto v = random_value_above(rng, r.at(i, j).boundary, r.rank);
                    if (v) e.mat[i][j] = random_model_elem(rng, *v, r.rank);
                }
        } else {
            const auto& r = std::get<MonomialAlgebra>(alg);
            for (int i = 0; i < r.dim(); ++i) {
                if (rng.uniform(0, 3) == 0) continue;
                auto v = random_nonneg_value(rng, r.ann[i], r.rank);
                if (v) e.coeffs[i] = random_model_elem(rng, *v, r.rank);
            }
            e = elem_normalize(alg, std::move(e));
        }
        out.push_back(std::move(e));
    }
    return out;
}

AlgebraElem deeper_perturbation(const AlgebraVariant& alg, const AlgebraElem& x,
                                unsigned long long seed) {
    int rank = std::holds_alternative<PatternAlgebra>(alg)
                   ? std::get<PatternAlgebra>(alg).rank
                   : std::get<MonomialAlgebra>(alg).rank;
    Rng rng(seed);
    GroupElem bump = group_zero(rank);
    bump.c[rank - 1] = rng.uniform(1, 3);
    return elem_scalar_mul(alg, Rational(1), bump, x);
}

// ---------------------------------------------------------------------------
// Condition (b)

ConditionB check_condition_b(const AlgebraVariant& alg) {
    ConditionB out;
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        out.torsion_free = true;
        Cut minus_eps = embed(group_neg(group_eps(r.rank)));
        Cut b = Cut::bottom();
        for (int i = 0; i < r.n; ++i) b = cut_max(b, r.at(i, i).boundary);
        // t^gamma * 1 has an inverse in R iff -gamma clears every diagonal
        // boundary; such gamma > 0 exists iff the max boundary sits strictly
        // below embed(-eps).
        out.units_ok = !cut_lt(b, minus_eps);
        if (!out.units_ok) {
            GroupElem x(std::vector<Coord>(r.rank, 0));
            if (b.kind == Cut::Kind::bottom) {
                x = group_neg(group_eps(r.rank));
            } else {
                size_t k = b.p.size();
                for (size_t i = 0; i < k; ++i) x.c[i] = b.p[i];
                x.c[k - 1] += 1;
                if (static_cast<int>(k) < r.rank) x.c[r.rank - 1] = -1;
            }
            out.unit_witness = group_neg(x);
        }
    } else {
        const auto& r = std::get<MonomialAlgebra>(alg);
        bool tf = true;
        for (const auto& a : r.ann)
            if (!a.is_zero_ideal()) tf = false;
        out.torsion_free = tf;
        // Structure shifts are nonnegative, so the coefficient of 1 in any
        // product a*y has value >= v(a); no a with v(a) > 0 is invertible.
        out.units_ok = true;
    }
    out.holds = out.torsion_free && out.units_ok;
    return out;
}

// ---------------------------------------------------------------------------
// Ideals

std::string ideal_str(const Ideal& ideal) {
    std::string s;
    if (std::holds_alternative<PatternIdeal>(ideal)) {
        const auto& p = std::get<PatternIdeal>(ideal);
        s = "[";
        for (size_t i = 0; i < p.comps.size(); ++i) {
            if (i) s += "; ";
            for (size_t j = 0; j < p.comps[i].size(); ++j) {
                if (j) s += ",";
                s += p.comps[i][j].boundary.str();
            }
        }
        s += "]";
    } else {
        const auto& mo = std::get<MonomialIdeal>(ideal);
        s = "(";
        for (size_t i = 0; i < mo.comps.size(); ++i) {
            if (i) s += ",";
            s += mo.comps[i].boundary.str();
        }
        s += ")";
    }
    return s;
}

Ideal ideal_zero(const AlgebraVariant& alg) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        return PatternIdeal{std::vector<std::vector<IdealCut>>(
            r.n, std::vector<IdealCut>(r.n, IdealCut::zero_ideal()))};
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    MonomialIdeal z{std::vector<IdealCut>(r.dim(), IdealCut::zero_ideal())};
    return ideal_normalize(alg, z);
}

Ideal ideal_whole(const AlgebraVariant& alg) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        return PatternIdeal{r.comps};
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    MonomialIdeal w{std::vector<IdealCut>(r.dim(), IdealCut::ring_of_integers(r.rank))};
    return ideal_normalize(alg, w);
}

Ideal ideal_normalize(const AlgebraVariant& alg, Ideal ideal) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        auto& p = std::get<PatternIdeal>(ideal);
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                p.comps[i][j].boundary = cut_max(p.comps[i][j].boundary, r.at(i, j).boundary);
        return ideal;
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    auto& mo = std::get<MonomialIdeal>(ideal);
    Cut floor = embed(group_neg(group_eps(r.rank)));
    for (int i = 0; i < r.dim(); ++i) {
        // Join with the annihilator, clip to the O_v coordinate module.
        Cut b = cut_min(mo.comps[i].boundary, r.ann[i].boundary);
        mo.comps[i].boundary = cut_max(b, floor);
    }
    return ideal;
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return a == b; }

bool ideal_subset(const Ideal& a, const Ideal& b) {
    if (std::holds_alternative<PatternIdeal>(a)) {
        const auto& pa = std::get<PatternIdeal>(a);
        const auto& pb = std::get<PatternIdeal>(b);
        for (size_t i = 0; i < pa.comps.size(); ++i)
            for (size_t j = 0; j < pa.comps.size(); ++j)
                if (!ideal_contains(pb.comps[i][j], pa.comps[i][j])) return false;
        return true;
    }
    const auto& ma = std::get<MonomialIdeal>(a);
    const auto& mb = std::get<MonomialIdeal>(b);
    for (size_t i = 0; i < ma.comps.size(); ++i)
        if (!ideal_contains(mb.comps[i], ma.comps[i])) return false;
    return true;
}

bool ideal_proper(const AlgebraVariant& alg, const Ideal& ideal) {
    return !ideal_equal(ideal, ideal_whole(alg));
}

bool is_two_sided_ideal(const AlgebraVariant& alg, const Ideal& ideal, std::string* why) {
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        const auto& k = std::get<PatternIdeal>(ideal);
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                if (!ideal_contains(r.at(i, j), k.comps[i][j])) {
                    if (why) *why = "not a subset of the instance";
                    return false;
                }
        for (int i = 0; i < r.n; ++i)
            for (int m = 0; m < r.n; ++m)
                for (int l = 0; l < r.n; ++l) {
                    if (!product_contained(r.at(i, m), k.comps[m][l], k.comps[i][l])) {
                        if (why)
                            *why = "left absorption fails at (" + std::to_string(i) + "," +
                                   std::to_string(m) + "," + std::to_string(l) + ")";
                        return false;
                    }
                    if (!product_contained(k.comps[i][m], r.at(m, l), k.comps[i][l])) {
                        if (why)
                            *why = "right absorption fails at (" + std::to_string(i) + "," +
                                   std::to_string(m) + "," + std::to_string(l) + ")";
                        return false;
                    }
                }
        return true;
    }
    const auto& r = std::get<MonomialAlgebra>(alg);
    const auto& mo = std::get<MonomialIdeal>(ideal);
    for (int i = 0; i < r.dim(); ++i) {
        Cut floor = cut_min(embed(group_neg(group_eps(r.rank))), r.ann[i].boundary);
        if (cut_lt(mo.comps[i].boundary, floor)) {
            if (why) *why = "component exceeds the coordinate module";
            return false;
        }
    }
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) {
            MonomialEntry e = table_entry(r, i, j);
            if (e.zero) continue;
            // L_i b_i * b_j and b_i * L_j b_j must land inside component e.k.
            IdealCut li = ideal_shift(e.shift, mo.comps[i]);
            IdealCut lj = ideal_shift(e.shift, mo.comps[j]);
            if (!ideal_contains(mo.comps[e.k], li) || !ideal_contains(mo.comps[e.k], lj)) {
                if (why)
                    *why = "absorption fails through table entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
                return false;
            }
        }
    return true;
}

bool elem_in_ideal(const AlgebraVariant& alg, const Ideal& ideal, const AlgebraElem& x) {
    AlgebraElem nx = elem_normalize(alg, x);
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& k = std::get<PatternIdeal>(ideal);
        for (size_t i = 0; i < nx.mat.size(); ++i)
            for (size_t j = 0; j < nx.mat.size(); ++j)
                if (!ideal_member(valuation(nx.mat[i][j]), k.comps[i][j])) return false;
        return true;
    }
    const auto& mo = std::get<MonomialIdeal>(ideal);
    for (size_t i = 0; i < nx.coeffs.size(); ++i)
        if (!ideal_member(valuation(nx.coeffs[i]), mo.comps[i])) return false;
    return true;
}

Ideal ideal_join(const Ideal& a, const Ideal& b) {
    Ideal out = a;
    if (std::holds_alternative<PatternIdeal>(a)) {
        auto& pa = std::get<PatternIdeal>(out);
        const auto& pb = std::get<PatternIdeal>(b);
        for (size_t i = 0; i < pa.comps.size(); ++i)
            for (size_t j = 0; j < pa.comps.size(); ++j)
                pa.comps[i][j].boundary =
                    cut_min(pa.comps[i][j].boundary, pb.comps[i][j].boundary);
        return out;
    }
    auto& ma = std::get<MonomialIdeal>(out);
    const auto& mb = std::get<MonomialIdeal>(b);
    for (size_t i = 0; i < ma.comps.size(); ++i)
        ma.comps[i].boundary = cut_min(ma.comps[i].boundary, mb.comps[i].boundary);
    return out;
}

IdealCut contraction(const AlgebraVariant& alg, const Ideal& ideal) {
    int rank = std::holds_alternative<PatternAlgebra>(alg)
                   ? std::get<PatternAlgebra>(alg).rank
                   : std::get<MonomialAlgebra>(alg).rank;
    Cut floor = embed(group_neg(group_eps(rank)));
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& k = std::get<PatternIdeal>(ideal);
        Cut b = Cut::bottom();
        for (size_t i = 0; i < k.comps.size(); ++i) b = cut_max(b, k.comps[i][i].boundary);
        return IdealCut{cut_max(b, floor)};
    }
    const auto& mo = std::get<MonomialIdeal>(ideal);
    return IdealCut{cut_max(mo.comps[0].boundary, floor)};
}

} // namespace cutspec
