#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cutspec/fixtures.hpp"
#include "cutspec/verify.hpp"

using namespace cutspec;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "",
                  const std::string& sub = "") {
    std::string cmd = env + std::string(CUTSPEC_CLI_PATH) + " " + (sub.empty() ? "" : sub + " ") +
                      args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("fixtures round-trip through serialization") {
    for (const auto& name : fixture_names()) {
        Instance a = load_fixture(name);
        Json dumped = instance_to_json(a);
        Instance b = instance_from_json(dumped);
        CHECK(a.alg == b.alg);
        CHECK(a.name == b.name);
        CHECK(a.sampling.count == b.sampling.count);
        CHECK(a.sampling.seed == b.sampling.seed);
        CHECK(instance_to_json(b) == dumped);
        CHECK(digest(dumped) == digest(instance_to_json(b)));
    }
}

TEST_CASE("cut serialization round-trips") {
    for (const Cut& c : {Cut::bottom(), Cut::top(), Cut::prefix({3}), Cut::prefix({0, -4})}) {
        CHECK(cut_from_json(cut_to_json(c), 2) == c);
    }
    CHECK(cutinf_from_json(cutinf_to_json(CutOrInfty::inf()), 2) == CutOrInfty::inf());
    CHECK(ideal_cut_from_json(Json("Ov"), 2) == IdealCut::ring_of_integers(2));
    CHECK(ideal_cut_from_json(Json("P1"), 2) ==
          IdealCut::prime_of(IsolatedSubgroup(1, 2), 2));
    CHECK(ideal_cut_to_json(IdealCut::valuation_ideal(3), 3) == Json("Iv"));
    CHECK_THROWS_AS(ideal_cut_from_json(Json("P7"), 2), std::invalid_argument);
    CHECK_THROWS_AS(cut_from_json(Json::parse("{\"cut\":\"prefix\",\"p\":[1,2,3]}"), 2),
                    std::invalid_argument);
}

TEST_CASE("cli cut expressions") {
    CHECK(run_cli("cut --rank 1 \"embed(0) + embed(0)\"").out ==
          "{\"cut\":\"prefix\",\"p\":[0]}\n");
    CHECK(run_cli("cut --rank 2 \"prefix([3]) + principal([0,7])\"").out ==
          "{\"cut\":\"prefix\",\"p\":[3]}\n");
    CHECK(run_cli("cut --rank 2 \"Hplus(1)\"").out == "{\"cut\":\"prefix\",\"p\":[0]}\n");
    RunResult bad = run_cli("cut --rank 2 \"prefix([3]) +\"");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli quasi-valuation evaluation") {
    std::string diag = "'{\"matrix\":[[[[1,1,[2]]],[]],[[],[[1,1,[3]]]]]}'";
    RunResult r = run_cli("qv m2_ov --rank 1 --element " + diag + " --which min_formula");
    Json out = Json::parse(r.out);
    CHECK(out["values"]["min_formula"] == Json::parse("{\"cut\":\"prefix\",\"p\":[2]}"));

    std::string zero = "'{\"matrix\":[[[],[]],[[],[]]]}'";
    RunResult rz = run_cli("qv m2_ov --element " + zero + " --which both");
    Json outz = Json::parse(rz.out);
    CHECK(outz["values"]["filter"] == Json::parse("{\"cut\":\"infty\"}"));
    CHECK(outz["values"]["min_formula"] == Json::parse("{\"cut\":\"infty\"}"));

    std::string e11 = "'{\"matrix\":[[[[1,1,[0]]],[]],[[],[]]]}'";
    RunResult re = run_cli("qv diag_f_ov --element " + e11 + " --which filter");
    Json oute = Json::parse(re.out);
    CHECK(oute["values"]["filter"] == Json::parse("{\"cut\":\"top\"}"));
}

TEST_CASE("cli spectrum and base chain") {
    RunResult base = run_cli("spec --rank 2");
    Json jb = Json::parse(base.out);
    CHECK(jb["base"].size() == 3);

    RunResult m2 = run_cli("spec m2_ov");
    Json jm = Json::parse(m2.out);
    CHECK(jm["spec_size"] == 3);
}

TEST_CASE("cli verify exit codes and deterministic reports") {
    RunResult ok = run_cli("verify m2_ov --report /tmp/cutspec_m2_a.json");
    CHECK(ok.exit_code == 0);
    RunResult ok2 = run_cli("verify m2_ov --report /tmp/cutspec_m2_b.json");
    CHECK(ok2.exit_code == 0);
    CHECK(slurp("/tmp/cutspec_m2_a.json") == slurp("/tmp/cutspec_m2_b.json"));

    RunResult all = run_cli("verify all --report /tmp/cutspec_all_a.json");
    CHECK(all.exit_code == 0);
    RunResult all2 = run_cli("verify all --report /tmp/cutspec_all_b.json");
    CHECK(all2.exit_code == 0);
    CHECK(slurp("/tmp/cutspec_all_a.json") == slurp("/tmp/cutspec_all_b.json"));

    std::string corrupted = std::string(CUTSPEC_TEST_DATA) + "/corrupted_closure.json";
    RunResult bad = run_cli("verify " + corrupted);
    CHECK(bad.exit_code == 1);

    RunResult missing = run_cli("verify no_such_fixture");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("fixture directory override") {
    RunResult r = run_cli(std::string("verify m2_ov --fixture-dir ") + CUTSPEC_FIXTURE_DIR);
    CHECK(r.exit_code == 0);
    RunResult e = run_cli(std::string("--instance m2_ov"), "CUTSPEC_FIXTURES=" CUTSPEC_FIXTURE_DIR " ", "verify");
    CHECK(e.exit_code == 0);
}

TEST_CASE("verify reports are stable under reruns in-process") {
    Instance inst = load_fixture("dualnum_ax_x2");
    InstanceReport a = verify_instance(inst);
    InstanceReport b = verify_instance(inst);
    CHECK(a.json == b.json);
    CHECK(a.ok());
}
