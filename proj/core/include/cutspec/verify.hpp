#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutspec/algebra.hpp"
#include "cutspec/json_io.hpp"
#include "cutspec/spectrum.hpp"

namespace cutspec {

struct VerifyOptions {
    std::optional<long long> samples; // overrides the instance sampling count
    std::optional<unsigned long long> seed;
    long long bound = 2'000'000;      // enumeration candidate bound
};

struct InstanceReport {
    std::string name;
    Json json;                               // the full machine-readable report
    std::vector<std::string> failures;       // theorem-conformance failures
    bool ok() const { return failures.empty(); }
};

/// Runs the verification suite on one instance: validation, quasi-valuation
/// axioms, condition (b), spectrum enumeration with the property checks,
/// bounds, chain bijection, separation and lifting evidence, and the
/// natural-extension witness searches.
InstanceReport verify_instance(const Instance& inst, const VerifyOptions& opts = {});

/// Verifies every shipped fixture (sorted by name). ok is the conjunction.
struct RunReport {
    Json json;
    bool ok = true;
};

RunReport verify_all(const VerifyOptions& opts = {},
                     const std::vector<std::string>& fixture_dirs = {});

/// The witness searches of the natural-extension comparison between R and
/// O_W (entry-min base): an extended element inside O_W but outside R (x 1,
/// and a member of R outside O_W.
struct ExtensionWitnesses {
    bool ow_minus_r_found = false;   // O_W not a subset of R
    bool r_minus_ow_found = false;   // R not a subset of O_W
    bool r_subset_ow = true;         // sampled members all landed in O_W
    std::string ow_minus_r, r_minus_ow;
};

ExtensionWitnesses search_extension_witnesses(const AlgebraVariant& alg, long long samples,
                                              unsigned long long seed);

} // namespace cutspec
