#include "cutspec/json_io.hpp"

#include <stdexcept>

namespace cutspec {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
    throw std::invalid_argument(what + " at " + j.dump());
}

std::vector<Coord> coords_from_json(const Json& j, int rank, bool full) {
    if (!j.is_array()) bad("expected an integer array", j);
    std::vector<Coord> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) bad("expected an integer", e);
        v.push_back(e.get<Coord>());
    }
    if (full && static_cast<int>(v.size()) != rank) bad("expected rank-many coordinates", j);
    if (!full && (v.empty() || static_cast<int>(v.size()) > rank))
        bad("prefix length must be in [1, rank]", j);
    return v;
}

} // namespace

Json cut_to_json(const Cut& c) {
    switch (c.kind) {
        case Cut::Kind::bottom: return Json{{"cut", "bottom"}};
        case Cut::Kind::top: return Json{{"cut", "top"}};
        case Cut::Kind::prefix: return Json{{"cut", "prefix"}, {"p", c.p}};
    }
    return {};
}

Json cutinf_to_json(const CutOrInfty& v) {
    if (v.infty) return Json{{"cut", "infty"}};
    return cut_to_json(v.cut);
}

Cut cut_from_json(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("cut")) bad("expected a cut object", j);
    std::string kind = j.at("cut").get<std::string>();
    if (kind == "bottom") return Cut::bottom();
    if (kind == "top") return Cut::top();
    if (kind == "prefix") return Cut::prefix(coords_from_json(j.at("p"), rank, false));
    bad("unknown cut kind '" + kind + "'", j);
}

CutOrInfty cutinf_from_json(const Json& j, int rank) {
    if (j.is_object() && j.contains("cut") && j.at("cut") == "infty") return CutOrInfty::inf();
    return CutOrInfty::fin(cut_from_json(j, rank));
}

Json ideal_cut_to_json(const IdealCut& ic, int rank) {
    if (ic == IdealCut::whole_field()) return Json("F");
    if (ic == IdealCut::zero_ideal()) return Json("zero");
    if (ic == IdealCut::ring_of_integers(rank)) return Json("Ov");
    if (ic == IdealCut::valuation_ideal(rank)) return Json("Iv");
    for (int t = 1; t < rank; ++t)
        if (ic == IdealCut::prime_of(IsolatedSubgroup(t, rank), rank))
            return Json("P" + std::to_string(t));
    return cut_to_json(ic.boundary);
}

IdealCut ideal_cut_from_json(const Json& j, int rank) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "F") return IdealCut::whole_field();
        if (s == "zero") return IdealCut::zero_ideal();
        if (s == "Ov") return IdealCut::ring_of_integers(rank);
        if (s == "Iv") return IdealCut::valuation_ideal(rank);
        if (s.size() >= 2 && s[0] == 'P') {
            int t = std::stoi(s.substr(1));
            if (t < 1 || t > rank) bad("prime index out of range", j);
            return IdealCut::prime_of(IsolatedSubgroup(t, rank), rank);
        }
        bad("unknown ideal shorthand '" + s + "'", j);
    }
    return IdealCut{cut_from_json(j, rank)};
}

Json group_to_json(const GroupElem& g) { return Json(g.c); }

GroupElem group_from_json(const Json& j, int rank) {
    return GroupElem(coords_from_json(j, rank, true));
}

Json model_elem_to_json(const ModelElem& e) {
    Json out = Json::array();
    for (const auto& [g, q] : e.terms) out.push_back(Json::array({q.num, q.den, g.c}));
    return out;
}

ModelElem model_elem_from_json(const Json& j, int rank) {
    if (!j.is_array()) bad("expected a term list", j);
    ModelElem e;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) bad("expected [num, den, [exps]]", t);
        Rational q(t[0].get<long long>(), t[1].get<long long>());
        GroupElem g = group_from_json(t[2], rank);
        e = elem_add(e, ModelElem::monomial(q, g));
    }
    return e;
}

Json algebra_elem_to_json(const AlgebraElem& x) {
    Json out;
    if (x.pattern) {
        Json m = Json::array();
        for (const auto& row : x.mat) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(model_elem_to_json(e));
            m.push_back(std::move(r));
        }
        out["matrix"] = std::move(m);
    } else {
        Json c = Json::array();
        for (const auto& e : x.coeffs) c.push_back(model_elem_to_json(e));
        out["coeffs"] = std::move(c);
    }
    return out;
}

AlgebraElem algebra_elem_from_json(const Json& j, int rank) {
    if (j.is_object() && j.contains("matrix")) {
        std::vector<std::vector<ModelElem>> m;
        for (const auto& row : j.at("matrix")) {
            std::vector<ModelElem> r;
            for (const auto& e : row) r.push_back(model_elem_from_json(e, rank));
            m.push_back(std::move(r));
        }
        return AlgebraElem::pattern_elem(std::move(m));
    }
    if (j.is_object() && j.contains("coeffs")) {
        std::vector<ModelElem> c;
        for (const auto& e : j.at("coeffs")) c.push_back(model_elem_from_json(e, rank));
        return AlgebraElem::monomial_elem(std::move(c));
    }
    bad("expected {\"matrix\":...} or {\"coeffs\":...}", j);
}

Json algebra_to_json(const AlgebraVariant& alg) {
    Json out;
    if (std::holds_alternative<PatternAlgebra>(alg)) {
        const auto& r = std::get<PatternAlgebra>(alg);
        out["kind"] = "pattern";
        out["n"] = r.n;
        Json comps = Json::array();
        for (const auto& row : r.comps) {
            Json jr = Json::array();
            for (const auto& c : row) jr.push_back(ideal_cut_to_json(c, r.rank));
            comps.push_back(std::move(jr));
        }
        out["components"] = std::move(comps);
    } else {
        const auto& r = std::get<MonomialAlgebra>(alg);
        out["kind"] = "monomial";
        out["basis"] = r.basis;
        Json ann = Json::array();
        for (const auto& a : r.ann) ann.push_back(ideal_cut_to_json(a, r.rank));
        out["ann"] = std::move(ann);
        Json table = Json::array();
        for (const auto& row : r.table) {
            Json jr = Json::array();
            for (const auto& e : row) {
                if (e.zero)
                    jr.push_back(0);
                else
                    jr.push_back(Json::array({e.shift.c, e.k}));
            }
            table.push_back(std::move(jr));
        }
        out["table"] = std::move(table);
    }
    return out;
}

AlgebraVariant algebra_from_json(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("kind")) bad("expected an algebra object", j);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "pattern") {
        PatternAlgebra r;
        r.rank = rank;
        r.n = j.at("n").get<int>();
        for (const auto& row : j.at("components")) {
            std::vector<IdealCut> jr;
            for (const auto& c : row) jr.push_back(ideal_cut_from_json(c, rank));
            r.comps.push_back(std::move(jr));
        }
        return r;
    }
    if (kind == "monomial") {
        MonomialAlgebra r;
        r.rank = rank;
        r.basis = j.at("basis").get<std::vector<std::string>>();
        for (const auto& a : j.at("ann")) r.ann.push_back(ideal_cut_from_json(a, rank));
        for (const auto& row : j.at("table")) {
            std::vector<MonomialEntry> jr;
            for (const auto& e : row) {
                if (e.is_number() && e.get<long long>() == 0)
                    jr.push_back(MonomialEntry::none());
                else if (e.is_null())
                    jr.push_back(MonomialEntry::none());
                else if (e.is_array() && e.size() == 2)
                    jr.push_back(
                        MonomialEntry::of(group_from_json(e[0], rank), e[1].get<int>()));
                else
                    bad("expected 0 or [[shift], k]", e);
            }
            r.table.push_back(std::move(jr));
        }
        return r;
    }
    bad("unknown algebra kind '" + kind + "'", j);
}

Json instance_to_json(const Instance& inst) {
    Json out;
    out["schema"] = "cutspec/1";
    out["name"] = inst.name;
    out["rank"] = inst.rank();
    out["algebra"] = algebra_to_json(inst.alg);
    if (inst.generators) {
        Json g = Json::array();
        for (const auto& e : *inst.generators) g.push_back(algebra_elem_to_json(e));
        out["generators"] = std::move(g);
    }
    out["qv"] = inst.qv_selection;
    out["sampling"] = Json{{"count", inst.sampling.count}, {"seed", inst.sampling.seed}};
    return out;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) bad("expected an instance object", j);
    Instance inst;
    inst.name = j.value("name", std::string("instance"));
    int rank = j.at("rank").get<int>();
    if (rank < 1 || rank > kMaxRank) bad("rank out of range", j.at("rank"));
    const Json& alg = j.at("algebra");
    if (alg.is_string())
        bad("fixture references must be resolved before parsing", alg);
    inst.alg = algebra_from_json(alg, rank);
    if (j.contains("generators")) {
        std::vector<AlgebraElem> gens;
        for (const auto& g : j.at("generators")) gens.push_back(algebra_elem_from_json(g, rank));
        inst.generators = std::move(gens);
    }
    inst.qv_selection = j.value("qv", std::string("filter"));
    if (j.contains("sampling")) {
        inst.sampling.count = j.at("sampling").value("count", 1000LL);
        inst.sampling.seed = j.at("sampling").value("seed", 1ULL);
    }
    return inst;
}

Json ideal_to_json(const Ideal& ideal, int rank) {
    Json out;
    if (std::holds_alternative<PatternIdeal>(ideal)) {
        const auto& p = std::get<PatternIdeal>(ideal);
        Json comps = Json::array();
        for (const auto& row : p.comps) {
            Json jr = Json::array();
            for (const auto& c : row) jr.push_back(ideal_cut_to_json(c, rank));
            comps.push_back(std::move(jr));
        }
        out["components"] = std::move(comps);
    } else {
        const auto& mo = std::get<MonomialIdeal>(ideal);
        Json comps = Json::array();
        for (const auto& c : mo.comps) comps.push_back(ideal_cut_to_json(c, rank));
        out["components"] = std::move(comps);
    }
    return out;
}

Json contraction_map_to_json(const ContractionMap& m) {
    Json out;
    Json base = Json::array();
    for (const auto& [h, p] : m.base)
        base.push_back(Json{{"isolated_index", h.index},
                            {"boundary", cut_to_json(p.boundary)}});
    out["base"] = std::move(base);
    out["spec_size"] = m.size();
    Json nodes = Json::array();
    for (const auto& n : m.nodes) {
        Json jn = ideal_to_json(n.ideal, m.rank);
        jn["over"] = n.over;
        nodes.push_back(std::move(jn));
    }
    out["map"] = std::move(nodes);
    Json order = Json::array();
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.strict_lt(a, b)) order.push_back(Json::array({a, b}));
    out["strict_order"] = std::move(order);
    return out;
}

std::string digest(const Json& j) {
    std::string s = j.dump();
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

} // namespace cutspec
