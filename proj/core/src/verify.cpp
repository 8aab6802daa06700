#include "cutspec/verify.hpp"

#include <algorithm>
#include <random>

#include "cutspec/fixtures.hpp"
#include "cutspec/quasival.hpp"
#include "cutspec/version.hpp"

namespace cutspec {

namespace {

Json axiom_json(const AxiomReport& r) {
    Json j;
    j["b1"] = r.b1;
    j["b2"] = r.b2;
    j["b3"] = r.b3;
    j["nonneg"] = r.nonneg;
    j["pairs"] = r.pairs_checked;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json vqv_json(const VqvReport& r) {
    Json j;
    j["homogeneous"] = r.homogeneous;
    if (r.unital_checked) {
        j["extends_v"] = r.extends_v;
        j["unit_value_zero"] = r.unit_value_zero;
    } else {
        j["extends_v"] = "not_applicable";
    }
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json check_json(const CheckResult& r) {
    Json j;
    j["verdict"] = verdict_str(r.v);
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

int alg_rank_of(const AlgebraVariant& alg) {
    return std::holds_alternative<PatternAlgebra>(alg) ? std::get<PatternAlgebra>(alg).rank
                                                       : std::get<MonomialAlgebra>(alg).rank;
}

} // namespace

ExtensionWitnesses search_extension_witnesses(const AlgebraVariant& alg, long long samples,
                                              unsigned long long seed) {
    ExtensionWitnesses out;
    if (!std::holds_alternative<PatternAlgebra>(alg)) return out;
    const auto& r = std::get<PatternAlgebra>(alg);
    NaturalExtension w{entry_min_qv(alg)};
    GroupElem zero = group_zero(r.rank);
    // Monomial scan e_ij * t^gamma over a coarse value window.
    std::vector<GroupElem> window;
    for (Coord c = -2; c <= 2; ++c) {
        GroupElem g = zero;
        g.c[0] = c;
        window.push_back(g);
        if (r.rank > 1) {
            GroupElem g2 = zero;
            g2.c[r.rank - 1] = c;
            window.push_back(g2);
        }
    }
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) {
            // Slots with J_ij = {0} vanish in R (x) F; monomials there are
            // not elements of the ambient algebra.
            if (r.at(i, j).is_zero_ideal()) continue;
            for (const auto& g : window) {
                AlgebraElem x = elem_zero(alg);
                x.mat[i][j] = ModelElem::monomial(Rational(1), g);
                ExtendedElem ext{x, zero};
                bool in_ow = ow_member(w, ext);
                bool in_r = elem_member(alg, x);
                if (in_ow && !in_r && !out.ow_minus_r_found) {
                    out.ow_minus_r_found = true;
                    out.ow_minus_r = "t^" + g.str() + " e_" + std::to_string(i + 1) +
                                     std::to_string(j + 1);
                }
                if (!in_ow && in_r && !out.r_minus_ow_found) {
                    out.r_minus_ow_found = true;
                    out.r_minus_ow = "t^" + g.str() + " e_" + std::to_string(i + 1) +
                                     std::to_string(j + 1);
                }
            }
        }
    for (const auto& x : sample_elements(alg, samples, seed + 23)) {
        if (!ow_member(w, ExtendedElem{x, zero})) {
            out.r_subset_ow = false;
            out.r_minus_ow_found = true;
            out.r_minus_ow = x.str();
        }
    }
    if (out.r_minus_ow_found) out.r_subset_ow = false;
    return out;
}

InstanceReport verify_instance(const Instance& inst, const VerifyOptions& opts) {
    InstanceReport rep;
    rep.name = inst.name;
    const AlgebraVariant& alg = inst.alg;
    long long samples = opts.samples.value_or(inst.sampling.count);
    unsigned long long seed = opts.seed.value_or(inst.sampling.seed);
    int rank = alg_rank_of(alg);

    Json& j = rep.json;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["fixture"] = inst.name;
    j["digest"] = digest(instance_to_json(inst));
    j["rank"] = rank;
    j["samples"] = samples;
    j["seed"] = seed;

    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    // Validation --------------------------------------------------------
    ValidationReport val = validate(alg);
    {
        Json v;
        v["ok"] = val.ok;
        if (!val.violation.empty()) v["violation"] = val.violation;
        v["dim_tensor_f"] = val.dim_tensor_f;
        v["dim_module"] = val.dim_module;
        v["torsion_free"] = val.torsion_free;
        v["faithful"] = val.faithful;
        v["unital"] = val.unital;
        v["fg_module"] = val.fg_module;
        j["validation"] = std::move(v);
    }
    if (!val.ok) {
        fail("invalid instance: " + val.violation);
        j["conformance_failures"] = rep.failures;
        j["ok"] = false;
        return rep;
    }

    // Conditions (a) and (b) ------------------------------------------------
    ConditionB cb = check_condition_b(alg);
    {
        Json c;
        c["holds"] = cb.holds;
        c["torsion_free"] = cb.torsion_free;
        c["units_ok"] = cb.units_ok;
        if (cb.unit_witness) c["unit_witness"] = group_to_json(*cb.unit_witness);
        j["condition_b"] = std::move(c);
    }
    // Condition (a): R sits inside an F-algebra with scalar subring exactly
    // O_v. For our instances that is torsion-freeness plus the scalar
    // subring { a : a*1 in R } collapsing to O_v.
    if (val.unital) {
        bool scalar_ov;
        if (std::holds_alternative<PatternAlgebra>(alg)) {
            const auto& r = std::get<PatternAlgebra>(alg);
            Cut b = Cut::bottom();
            for (int i = 0; i < r.n; ++i) b = cut_max(b, r.at(i, i).boundary);
            scalar_ov = b == embed(group_neg(group_eps(rank)));
        } else {
            scalar_ov = true; // coordinate 0 carries O_v whenever faithful
        }
        bool cond_a = val.torsion_free && scalar_ov && val.faithful;
        j["condition_a"] = cond_a;
        if (cond_a != cb.holds)
            fail("conditions (a) and (b) disagree: a=" + std::to_string(cond_a) +
                 " b=" + std::to_string(cb.holds));
    }

    // Quasi-valuation suites ------------------------------------------------
    Json qvs;
    QuasiValuation filter = filter_qv_of(alg);
    AxiomReport fil_ax = check_axioms(filter, alg, samples, seed);
    VqvReport fil_vqv = check_v_qv(filter, alg, samples, seed);
    {
        Json f;
        f["axioms"] = axiom_json(fil_ax);
        f["vqv"] = vqv_json(fil_vqv);
        qvs["filter"] = std::move(f);
    }
    if (!fil_ax.pass()) fail("filter quasi-valuation axiom failure: " + fil_ax.witness);
    if (val.torsion_free && !fil_vqv.homogeneous)
        fail("filter homogeneity failure on a torsion-free instance: " + fil_vqv.witness);
    // (b) forces w(a*1) = v(a) for the filter map.
    if (cb.holds && val.unital && !(fil_vqv.extends_v && fil_vqv.unit_value_zero))
        fail("condition (b) holds but the filter map does not extend v: " + fil_vqv.witness);

    bool pattern = std::holds_alternative<PatternAlgebra>(alg);
    if (pattern) {
        QuasiValuation em = entry_min_qv(alg);
        AxiomReport em_ax = check_axioms(em, alg, samples, seed + 1, false);
        VqvReport em_vqv = check_v_qv(em, alg, samples, seed + 1);
        Json e;
        e["axioms"] = axiom_json(em_ax);
        e["vqv"] = vqv_json(em_vqv);
        qvs["entry_min"] = std::move(e);
        if (!em_ax.pass()) fail("entry-min quasi-valuation axiom failure: " + em_ax.witness);
        if (!em_vqv.homogeneous) fail("entry-min homogeneity failure: " + em_vqv.witness);
    }

    bool mf_available = false;
    bool mf_evidence = false;
    std::optional<MinimalBasis> basis;
    try {
        if (inst.generators)
            basis = minimal_generators(alg, *inst.generators);
        else
            basis = minimal_generators(alg);
        mf_available = true;
    } catch (const NotFinitelyGenerated& e) {
        Json m;
        m["available"] = false;
        m["reason"] = e.what();
        qvs["min_formula"] = std::move(m);
    }
    if (mf_available) {
        QuasiValuation mf = min_formula_qv(alg, *basis);
        AxiomReport mf_ax = check_axioms(mf, alg, samples, seed + 2);
        VqvReport mf_vqv = check_v_qv(mf, alg, samples, seed + 2);
        ImageScan scan = image_scan(mf, alg, samples, seed + 2);
        mf_evidence = scan.all_cancellative && !scan.infty_on_nonzero;
        Json m;
        m["available"] = true;
        m["basis_size"] = basis->elems.size();
        m["axioms"] = axiom_json(mf_ax);
        m["vqv"] = vqv_json(mf_vqv);
        m["image"] = Json{{"all_cancellative", scan.all_cancellative},
                          {"infty_on_nonzero", scan.infty_on_nonzero},
                          {"coverage", scan.coverage}};
        if (!mf_ax.pass()) fail("min-formula axiom failure: " + mf_ax.witness);
        if (!mf_vqv.pass()) fail("min-formula v-quasi-valuation failure: " + mf_vqv.witness);
        if (!mf_evidence) fail("min-formula image is not cancellative group-valued");

        // O_w membership coincides with R membership on shifted samples.
        bool ow_eq_r = true;
        std::string ow_witness;
        GroupElem eps = group_eps(rank);
        auto elems = sample_elements(alg, std::min<long long>(samples, 200), seed + 3);
        for (const auto& x : elems) {
            for (int k = -2; k <= 1 && ow_eq_r; ++k) {
                AlgebraElem shifted = elem_scalar_mul(alg, Rational(1), group_scale(k, eps), x);
                bool in_r = elem_member(alg, shifted);
                CutOrInfty v = mf.eval(shifted);
                bool in_ow =
                    cmp_cut_inf(v, CutOrInfty::fin(embed(group_zero(rank)))) != Ord::less;
                if (in_r != in_ow) {
                    ow_eq_r = false;
                    ow_witness = shifted.str();
                }
            }
            if (!ow_eq_r) break;
        }
        m["ow_equals_r"] = ow_eq_r;
        if (!ow_eq_r) fail("O_w differs from R under the min formula at " + ow_witness);

        // Natural extension: membership in O_W matches coordinate
        // divisibility on extended elements.
        NaturalExtension W{mf};
        bool div_eq = true;
        std::string div_witness;
        long long ext_checked = 0;
        std::mt19937_64 g(seed + 4);
        auto uni = [&](long long lo, long long hi) {
            return std::uniform_int_distribution<long long>(lo, hi)(g);
        };
        auto pool = sample_elements(alg, std::max<long long>(500, samples), seed + 4);
        for (const auto& x : pool) {
            GroupElem denom = group_zero(rank);
            for (auto& c : denom.c) c = uni(0, 3);
            ExtendedElem ext{x, denom};
            if (ow_member(W, ext) != coordinate_divisible(*basis, alg, ext)) {
                div_eq = false;
                div_witness = x.str() + " / t^" + denom.str();
                break;
            }
            ++ext_checked;
        }
        m["extension_divisibility"] = Json{{"matches", div_eq}, {"checked", ext_checked}};
        if (!div_eq) fail("natural-extension membership mismatch at " + div_witness);
        qvs["min_formula"] = std::move(m);
    }
    j["quasivaluations"] = std::move(qvs);

    // Natural-extension witnesses against the entry-min base ----------------
    if (pattern) {
        ExtensionWitnesses ew = search_extension_witnesses(alg, std::min<long long>(samples, 200),
                                                           seed + 5);
        Json e;
        e["ow_minus_r_found"] = ew.ow_minus_r_found;
        if (ew.ow_minus_r_found) e["ow_minus_r"] = ew.ow_minus_r;
        e["r_minus_ow_found"] = ew.r_minus_ow_found;
        if (ew.r_minus_ow_found) e["r_minus_ow"] = ew.r_minus_ow;
        e["r_subset_ow"] = ew.r_subset_ow;
        j["extension_witnesses"] = std::move(e);
        if (inst.name == "r1_example" && !(ew.ow_minus_r_found && ew.r_minus_ow_found))
            fail("expected witnesses for O_W and R being incomparable were not found");
        if (inst.name == "r2_example" && !(ew.ow_minus_r_found && ew.r_subset_ow))
            fail("expected witnesses for R strictly inside O_W were not found");
    }

    // Spectrum ---------------------------------------------------------------
    if (val.unital) {
        ContractionMap map = enumerate_spec(alg, opts.bound);
        Json sp = contraction_map_to_json(map);
        sp["enumeration"] = "within candidate family";

        CheckResult lo = check_lo(map);
        CheckResult gd = check_gd(map);
        CheckResult gu = check_gu(map);
        CheckResult inc = check_inc(map);
        CheckResult sgb = check_sgb(map);
        CheckResult ggd = check_ggd(map);
        bool min_over_zero = minimal_primes_over_zero(map);
        BoundsReport bounds = check_bounds(map, val.dim_module, cb.holds, val.torsion_free);
        CheckResult chain = check_chain_bijection(map, mf_evidence);
        CheckResult max_iv = (mf_evidence || val.fg_module)
                                 ? check_max_over_iv(map)
                                 : CheckResult::na("no going-up evidence");
        CheckResult fg_gu = fg_gu_check(alg, map);

        CheckResult sep = CheckResult::na("needs rank >= 2, torsion-free, a prime over Iv");
        if (rank >= 2 && val.torsion_free) {
            int q2 = -1;
            for (int q = 0; q < map.size(); ++q)
                if (map.nodes[q].over == map.base_size() - 1) q2 = q;
            if (q2 >= 0)
                sep = gd_separation(alg, map, rank - 1, rank, q2,
                                    std::min<long long>(samples, 200), seed + 6);
        }

        CheckResult lift = CheckResult::na("needs min-formula evidence");
        if (mf_evidence) {
            lift = CheckResult::passed();
            for (int q = 0; q < map.size() && lift.v == Verdict::pass; ++q)
                for (int p1 = map.nodes[q].over; p1 < map.base_size(); ++p1) {
                    CheckResult one = gu_lift(alg, map, q, p1);
                    if (one.v == Verdict::fail) {
                        lift = one;
                        break;
                    }
                }
        }

        Json verdicts;
        verdicts["lo"] = check_json(lo);
        verdicts["gd"] = check_json(gd);
        verdicts["gu"] = check_json(gu);
        verdicts["inc"] = check_json(inc);
        verdicts["sgb"] = check_json(sgb);
        verdicts["ggd"] = check_json(ggd);
        verdicts["chain_bijection"] = check_json(chain);
        verdicts["max_over_iv"] = check_json(max_iv);
        verdicts["gd_separation"] = check_json(sep);
        verdicts["gu_lift"] = check_json(lift);
        verdicts["fg_gu"] = check_json(fg_gu);
        verdicts["bounds"] = Json{{"verdict", verdict_str(bounds.v)},
                                  {"fibers_ok", bounds.fibers_ok},
                                  {"upper_ok", bounds.upper_ok},
                                  {"lower_checked", bounds.lower_checked},
                                  {"lower_ok", bounds.lower_ok},
                                  {"krull_ok", bounds.krull_ok},
                                  {"max_fiber", bounds.max_fiber},
                                  {"spec_size", bounds.spec_size},
                                  {"longest_chain", bounds.longest_chain},
                                  {"note", bounds.note}};
        sp["verdicts"] = std::move(verdicts);
        sp["minimal_primes_over_zero"] = min_over_zero;
        j["spectrum"] = std::move(sp);

        // Theorem conformance on the enumerated poset.
        if (sgb.v != Verdict::pass) fail("SGB failed: " + sgb.witness);
        if (val.torsion_free && gd.v != Verdict::pass)
            fail("GD failed on a torsion-free instance: " + gd.witness);
        if (!val.torsion_free && min_over_zero && gd.v != Verdict::pass)
            fail("GD failed although every minimal prime lies over {0}: " + gd.witness);
        if (val.torsion_free && inc.v != Verdict::pass)
            fail("INC failed on a torsion-free finite-dimensional instance: " + inc.witness);
        if (cb.holds && lo.v != Verdict::pass)
            fail("LO failed although condition (b) holds: " + lo.witness);
        if (val.torsion_free && ggd.v != Verdict::pass)
            fail("GGD failed on a torsion-free instance: " + ggd.witness);
        if (val.fg_module && fg_gu.v == Verdict::fail)
            fail("GU failed on a finitely generated instance: " + fg_gu.witness);
        if (bounds.v != Verdict::pass) fail("spectrum bounds failed: " + bounds.note);
        if (mf_evidence && chain.v != Verdict::pass)
            fail("maximal-chain bijection failed: " + chain.witness);
        if (sep.v == Verdict::fail) fail("going-down separation failed: " + sep.witness);
        if (lift.v == Verdict::fail) fail("going-up lift failed: " + lift.witness);
    } else {
        j["spectrum"] = Json{{"available", false}, {"reason", "instance has no identity"}};
    }

    j["unknown_implications"] = Json::array(
        {"whether GU alone yields a cancellative v-quasi-valuation is open; never asserted"});
    j["conformance_failures"] = rep.failures;
    j["ok"] = rep.failures.empty();
    return rep;
}

RunReport verify_all(const VerifyOptions& opts, const std::vector<std::string>& fixture_dirs) {
    RunReport run;
    run.json["schema"] = kReportSchema;
    run.json["version"] = kVersion;
    Json reports = Json::array();
    std::vector<std::string> names = fixture_names();
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
        Instance inst = load_fixture(name, std::nullopt, fixture_dirs);
        InstanceReport rep = verify_instance(inst, opts);
        run.ok = run.ok && rep.ok();
        reports.push_back(rep.json);
    }
    run.json["reports"] = std::move(reports);
    run.json["ok"] = run.ok;
    return run;
}

} // namespace cutspec
