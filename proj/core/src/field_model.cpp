#include "cutspec/field_model.hpp"

#include <stdexcept>

namespace cutspec {

ModelElem ModelElem::monomial(Rational q, GroupElem g) {
    ModelElem e;
    if (!q.is_zero()) e.terms.emplace(std::move(g), std::move(q));
    return e;
}

std::string ModelElem::str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, q] : terms) {
        if (!first) s += " + ";
        s += q.str() + "*t^" + g.str();
        first = false;
    }
    return s;
}

ModelElem elem_add(const ModelElem& a, const ModelElem& b) {
    ModelElem r = a;
    for (const auto& [g, q] : b.terms) {
        auto it = r.terms.find(g);
        if (it == r.terms.end()) {
            r.terms.emplace(g, q);
        } else {
            Rational s = it->second + q;
            if (s.is_zero())
                r.terms.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

ModelElem elem_neg(const ModelElem& a) {
    ModelElem r = a;
    for (auto& [g, q] : r.terms) q = -q;
    return r;
}

ModelElem elem_sub(const ModelElem& a, const ModelElem& b) { return elem_add(a, elem_neg(b)); }

ModelElem elem_mul(const ModelElem& a, const ModelElem& b) {
    ModelElem r;
    for (const auto& [ga, qa] : a.terms) {
        for (const auto& [gb, qb] : b.terms) {
            GroupElem g = group_add(ga, gb);
            Rational q = qa * qb;
            auto it = r.terms.find(g);
            if (it == r.terms.end()) {
                if (!q.is_zero()) r.terms.emplace(std::move(g), q);
            } else {
                Rational s = it->second + q;
                if (s.is_zero())
                    r.terms.erase(it);
                else
                    it->second = s;
            }
        }
    }
    return r;
}

ModelElem elem_mul_monomial(const ModelElem& a, const Rational& q, const GroupElem& g) {
    ModelElem r;
    if (q.is_zero()) return r;
    for (const auto& [ga, qa] : a.terms) r.terms.emplace(group_add(ga, g), qa * q);
    return r;
}

std::optional<GroupElem> valuation(const ModelElem& x) {
    if (x.terms.empty()) return std::nullopt;
    return x.terms.begin()->first;
}

IdealCut IdealCut::ring_of_integers(int rank) {
    return IdealCut{embed(group_neg(group_eps(rank)))};
}

IdealCut IdealCut::valuation_ideal(int rank) { return IdealCut{embed(group_zero(rank))}; }

IdealCut IdealCut::prime_of(const IsolatedSubgroup& h, int rank) {
    return IdealCut{isolated_plus(h, rank)};
}

bool ideal_member(const std::optional<GroupElem>& v, const IdealCut& j) {
    if (!v) return true;
    return cut_lt(j.boundary, embed(*v));
}

bool ideal_contains(const IdealCut& j1, const IdealCut& j2) {
    return cut_le(j1.boundary, j2.boundary);
}

IdealCut ideal_shift(const GroupElem& g, const IdealCut& j) {
    return IdealCut{add_cut(j.boundary, embed(g))};
}

IdealCut ideal_product(const IdealCut& j1, const IdealCut& j2) {
    return IdealCut{right_sum(j1.boundary, j2.boundary)};
}

bool product_contained(const IdealCut& j1, const IdealCut& j2, const IdealCut& j3) {
    return ideal_contains(j3, ideal_product(j1, j2));
}

std::vector<std::pair<IsolatedSubgroup, IdealCut>> spec_base(int rank) {
    if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("spec_base: bad rank");
    std::vector<std::pair<IsolatedSubgroup, IdealCut>> chain;
    for (int j = rank; j >= 0; --j) {
        IsolatedSubgroup h(j, rank);
        chain.emplace_back(h, IdealCut::prime_of(h, rank));
    }
    return chain;
}

} // namespace cutspec
