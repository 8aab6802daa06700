#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutspec/algebra.hpp"
#include "cutspec/json_io.hpp"

namespace cutspec {

/// Names of the shipped fixtures, sorted.
std::vector<std::string> fixture_names();

/// The raw JSON text of a shipped fixture (embedded at build time).
const std::string& fixture_text(const std::string& name);

/// Loads a fixture by name. Directories are searched first (fixture-dir
/// flag, then CUTSPEC_FIXTURES, then ./fixtures), falling back to the
/// embedded copies. rank_override re-targets instances whose components are
/// rank-symbolic.
Instance load_fixture(const std::string& name, std::optional<int> rank_override = std::nullopt,
                      const std::vector<std::string>& search_dirs = {});

/// Resolves an instance file: either an inline algebra or a fixture
/// reference ("algebra": "<name>").
Instance resolve_instance(const Json& file, std::optional<int> rank_override = std::nullopt,
                          const std::vector<std::string>& search_dirs = {});

} // namespace cutspec
