// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "cutspec/fixtures.hpp"
#include "cutspec/quasival.hpp"
#include "cutspec/verify.hpp"
#include "oracle_box.hpp"
#include "testgen.hpp"

using namespace cutspec;
using testgen::Rng;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
           detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Cut-monoid oracle equivalence, >= 5000 cases, coords in [-8, 8], < 60 s.
void criterion_cut_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001);
    long long cases = 0, bad = 0;
    for (int t = 0; t < 6000; ++t) {
        int rank = 1 + t % 3;
        oracle::BoxCutModel model(rank);
        Cut a = testgen::random_cut(rng, rank, 8), b = testgen::random_cut(rng, rank, 8);
        bool ok = add_cut(a, b) == model.to_cut(model.sum(model.from_cut(a), model.from_cut(b)));
        int c = model.cmp(model.from_cut(a), model.from_cut(b));
        ok = ok && cmp_cut(a, b) == (c < 0 ? Ord::less : c > 0 ? Ord::greater : Ord::equal);
        long long n = rng.u(1, 3);
        ok = ok && scale_cut(n, a) == model.to_cut(model.nfold(n, model.from_cut(a)));
        int j = static_cast<int>(rng.u(0, rank));
        ok = ok && isolated_plus(IsolatedSubgroup(j, rank), rank) ==
                       model.to_cut(model.isolated_closure(j));
        bad += !ok;
        ++cases;
    }
    double secs = seconds_since(t0);
    report(1, "cut-monoid oracle equivalence", cases >= 5000 && bad == 0 && secs < 60.0,
           std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches, " +
               std::to_string(secs) + " s");
}

// 2. Quasi-valuation axioms on generated algebras and the fixtures.
void criterion_axioms() {
    Rng rng(1002);
    long long violations = 0, instances = 0;
    for (int t = 0; t < 20; ++t) {
        int rank = 1 + t % 3;
        int n = 1 + t % 3;
        PatternAlgebra r = testgen::random_pattern_algebra(rng, rank, n);
        AlgebraVariant alg(r);
        AxiomReport fil = check_axioms(filter_qv_of(alg), alg, 1000, 2000 + t);
        VqvReport hv = check_v_qv(filter_qv_of(alg), alg, 1000, 2000 + t);
        if (!fil.pass() || !hv.homogeneous) ++violations;
        if (validate(alg).fg_module) {
            MinimalBasis b = minimal_generators(alg);
            QuasiValuation mf = min_formula_qv(alg, b);
            AxiomReport ma = check_axioms(mf, alg, 1000, 2100 + t);
            VqvReport mv = check_v_qv(mf, alg, 1000, 2100 + t);
            if (!ma.pass() || !mv.pass()) ++violations;
        }
        ++instances;
    }
    for (const auto& name : fixture_names()) {
        Instance inst = load_fixture(name);
        ValidationReport val = validate(inst.alg);
        AxiomReport fil = check_axioms(filter_qv_of(inst.alg), inst.alg, 1000, 3000);
        if (!fil.pass()) ++violations;
        if (val.torsion_free) {
            VqvReport hv = check_v_qv(filter_qv_of(inst.alg), inst.alg, 1000, 3000);
            if (!hv.homogeneous) ++violations;
        }
        if (val.torsion_free && val.unital && val.fg_module) {
            MinimalBasis b = minimal_generators(inst.alg);
            QuasiValuation mf = min_formula_qv(inst.alg, b);
            AxiomReport ma = check_axioms(mf, inst.alg, 1000, 3100);
            VqvReport mv = check_v_qv(mf, inst.alg, 1000, 3100);
            if (!ma.pass() || !mv.pass()) ++violations;
        }
        ++instances;
    }
    report(2, "quasi-valuation axioms and homogeneity", violations == 0 && instances >= 28,
           std::to_string(instances) + " instances, " + std::to_string(violations) +
               " violations");
}

// 3. The natural-extension comparison witnesses.
void criterion_example_witnesses() {
    Instance r1 = load_fixture("r1_example");
    ExtensionWitnesses w1 = search_extension_witnesses(r1.alg, 200, 42);
    Instance r2 = load_fixture("r2_example");
    ExtensionWitnesses w2 = search_extension_witnesses(r2.alg, 200, 42);
    bool ok = w1.ow_minus_r_found && w1.r_minus_ow_found && w2.ow_minus_r_found &&
              w2.r_subset_ow;
    report(3, "extension-ring witnesses on the worked examples", ok,
           "R1: O_W\\R=" + std::string(w1.ow_minus_r_found ? "found" : "missing") +
               ", R\\O_W=" + (w1.r_minus_ow_found ? "found" : "missing") +
               "; R2: strict=" + (w2.ow_minus_r_found ? "found" : "missing") + ", subset=" +
               (w2.r_subset_ow ? "yes" : "no"));
}

struct FixtureData {
    Instance inst;
    ValidationReport val;
    ConditionB cb;
    bool has_map = false;
    ContractionMap map;
};

std::vector<FixtureData> load_all() {
    std::vector<FixtureData> out;
    for (const auto& name : fixture_names()) {
        FixtureData d{load_fixture(name), {}, {}, false, {}};
        d.val = validate(d.inst.alg);
        d.cb = check_condition_b(d.inst.alg);
        if (d.val.ok && d.val.unital) {
            d.map = enumerate_spec(d.inst.alg);
            d.has_map = true;
        }
        out.push_back(std::move(d));
    }
    return out;
}

// 4. Theorem conformance across the fixtures.
void criterion_theorems(const std::vector<FixtureData>& all) {
    std::string detail;
    bool ok = true;
    for (const auto& d : all) {
        auto note = [&](const std::string& s) {
            ok = false;
            detail += d.inst.name + ": " + s + "; ";
        };
        if (!d.has_map) continue;
        if (check_sgb(d.map).v != Verdict::pass) note("SGB");
        if (d.val.torsion_free && check_gd(d.map).v != Verdict::pass) note("GD");
        if (!d.val.torsion_free && minimal_primes_over_zero(d.map) &&
            check_gd(d.map).v != Verdict::pass)
            note("GD(minimal-prime criterion)");
        if (d.val.torsion_free && check_inc(d.map).v != Verdict::pass) note("INC");
        if (d.cb.holds && check_lo(d.map).v != Verdict::pass) note("LO under (b)");
        if (d.val.fg_module && fg_gu_check(d.inst.alg, d.map).v == Verdict::fail) note("GU");
        if (d.val.torsion_free && check_ggd(d.map).v != Verdict::pass) note("GGD");
    }
    report(4, "theorem conformance on fixtures", ok, detail);
}

// 5. Fiber and spectrum-size bounds.
void criterion_bounds(const std::vector<FixtureData>& all) {
    bool ok = true;
    std::string detail;
    for (const auto& d : all) {
        if (!d.has_map) continue;
        BoundsReport b =
            check_bounds(d.map, d.val.dim_module, d.cb.holds, d.val.torsion_free);
        if (b.v != Verdict::pass) {
            ok = false;
            detail += d.inst.name + "; ";
        }
    }
    report(5, "fiber and cardinality bounds", ok, detail);
}

// 6. Counterexample fixtures behave as stated.
void criterion_counterexamples(const std::vector<FixtureData>& all) {
    bool ok = true;
    std::string detail;
    for (const auto& d : all) {
        if (d.inst.name == "localization_subring") {
            CheckResult lo = check_lo(d.map);
            if (lo.v != Verdict::fail || lo.witness.find("Iv") == std::string::npos) {
                ok = false;
                detail += "localization LO; ";
            }
        }
        if (d.inst.name == "torsion_trunc_px") {
            if (check_lo(d.map).v != Verdict::pass || d.cb.holds) {
                ok = false;
                detail += "trunc_px LO/(b); ";
            }
        }
        if (d.inst.name == "dualnum_ax_x2") {
            if (d.val.torsion_free || check_gd(d.map).v != Verdict::pass ||
                !minimal_primes_over_zero(d.map)) {
                ok = false;
                detail += "dualnum GD; ";
            }
        }
    }
    report(6, "counterexample fixtures", ok, detail);
}

// 7. The minimum-formula theorem package.
void criterion_min_formula() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"m2_ov", "r1_example"}) {
        Instance inst = load_fixture(name);
        MinimalBasis basis = minimal_generators(inst.alg);
        QuasiValuation mf = min_formula_qv(inst.alg, basis);
        ImageScan scan = image_scan(mf, inst.alg, 1000, 77);
        if (!scan.all_cancellative || scan.infty_on_nonzero) {
            ok = false;
            detail += std::string(name) + " image; ";
        }
        int rank = inst.rank();
        GroupElem eps = group_eps(rank);
        for (const auto& x : sample_elements(inst.alg, 300, 78)) {
            for (int k = -2; k <= 1; ++k) {
                AlgebraElem shifted =
                    elem_scalar_mul(inst.alg, Rational(1), group_scale(k, eps), x);
                bool in_r = elem_member(inst.alg, shifted);
                bool in_ow = cmp_cut_inf(mf.eval(shifted),
                                         CutOrInfty::fin(embed(group_zero(rank)))) != Ord::less;
                if (in_r != in_ow) {
                    ok = false;
                    detail += std::string(name) + " O_w!=R; ";
                }
            }
        }
        NaturalExtension w{mf};
        Rng rng(79);
        long long checked = 0;
        for (const auto& x : sample_elements(inst.alg, 600, 80)) {
            GroupElem denom = group_zero(rank);
            for (auto& c : denom.c) c = rng.u(0, 3);
            ExtendedElem ext{x, denom};
            if (ow_member(w, ext) != coordinate_divisible(basis, inst.alg, ext)) {
                ok = false;
                detail += std::string(name) + " divisibility; ";
            }
            ++checked;
        }
        if (checked < 500) {
            ok = false;
            detail += "too few extended elements; ";
        }
    }
    report(7, "min-formula value monoid and extension ring", ok, detail);
}

// 8. Chain bijection for M_2(O_v) at ranks 1..3.
void criterion_chain_bijection() {
    bool ok = true;
    std::string detail;
    for (int rank = 1; rank <= 3; ++rank) {
        Instance m2 = load_fixture("m2_ov", rank);
        MinimalBasis basis = minimal_generators(m2.alg);
        ImageScan scan = image_scan(min_formula_qv(m2.alg, basis), m2.alg, 300, 81);
        ContractionMap m = enumerate_spec(m2.alg);
        bool evidence = scan.all_cancellative && !scan.infty_on_nonzero;
        if (check_chain_bijection(m, evidence).v != Verdict::pass ||
            check_max_over_iv(m).v != Verdict::pass) {
            ok = false;
            detail += "rank " + std::to_string(rank) + "; ";
        }
    }
    report(8, "maximal-chain bijection for M_2(O_v)", ok, detail);
}

// 9. Cancellativity classification against brute-force search.
void criterion_cancellativity() {
    Rng rng(1009);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 1500 && ok; ++t) {
        int rank = 1 + t % 3;
        oracle::BoxCutModel model(rank);
        Cut a = testgen::random_cut(rng, rank, 8);
        auto witness = cancellation_witness(a, rank);
        if (is_cancellative(a, rank)) {
            if (witness) {
                ok = false;
                detail = "witness for a cancellative cut";
                break;
            }
            // no sampled pair may collide
            for (int s = 0; s < 40; ++s) {
                Cut b = testgen::random_cut(rng, rank, 8), c = testgen::random_cut(rng, rank, 8);
                if (!(b == c) && add_cut(a, b) == add_cut(a, c)) {
                    ok = false;
                    detail = "collision under a cancellative cut";
                }
            }
        } else {
            if (!witness || witness->first == witness->second) {
                ok = false;
                detail = "missing witness";
                break;
            }
            bool eq_impl = add_cut(a, witness->first) == add_cut(a, witness->second);
            bool eq_oracle =
                model.cmp(model.sum(model.from_cut(a), model.from_cut(witness->first)),
                          model.sum(model.from_cut(a), model.from_cut(witness->second))) == 0;
            if (!eq_impl || !eq_oracle) {
                ok = false;
                detail = "witness does not collide";
            }
        }
    }
    report(9, "cancellativity classification", ok, detail);
}

// 10. Full verification of every fixture, under five minutes, exit zero.
void criterion_verify_all() {
    auto t0 = std::chrono::steady_clock::now();
    RunReport run = verify_all();
    double secs = seconds_since(t0);
    report(10, "verify all fixtures", run.ok && secs < 300.0,
           std::string(run.ok ? "ok" : "conformance failures") + ", " + std::to_string(secs) +
               " s");
}

} // namespace

int main() {
    criterion_cut_oracle();
    criterion_axioms();
    criterion_example_witnesses();
    auto all = load_all();
    criterion_theorems(all);
    criterion_bounds(all);
    criterion_counterexamples(all);
    criterion_min_formula();
    criterion_chain_bijection();
    criterion_cancellativity();
    criterion_verify_all();
    if (failures) {
        printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    printf("all acceptance criteria passed\n");
    return 0;
}
