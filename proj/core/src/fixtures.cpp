#include "cutspec/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cutspec {

namespace detail {
const std::map<std::string, std::string>& embedded_fixtures();
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : detail::embedded_fixtures()) names.push_back(k);
    return names;
}

const std::string& fixture_text(const std::string& name) {
    const auto& m = detail::embedded_fixtures();
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
    return it->second;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string locate_fixture(const std::string& name, const std::vector<std::string>& dirs) {
    std::vector<std::string> search = dirs;
    if (const char* env = std::getenv("CUTSPEC_FIXTURES")) search.push_back(env);
    search.push_back("fixtures");
    for (const auto& d : search)
        if (auto text = read_file(d + "/" + name + ".json")) return *text;
    return fixture_text(name);
}

} // namespace

Instance load_fixture(const std::string& name, std::optional<int> rank_override,
                      const std::vector<std::string>& search_dirs) {
    std::string text = locate_fixture(name, search_dirs);
    Json j = Json::parse(text);
    if (rank_override) j["rank"] = *rank_override;
    Instance inst = instance_from_json(j);
    if (inst.name.empty()) inst.name = name;
    return inst;
}

Instance resolve_instance(const Json& file, std::optional<int> rank_override,
                          const std::vector<std::string>& search_dirs) {
    if (file.is_string()) return load_fixture(file.get<std::string>(), rank_override, search_dirs);
    if (file.is_object() && file.contains("algebra") && file.at("algebra").is_string()) {
        std::string name = file.at("algebra").get<std::string>();
        std::optional<int> rank = rank_override;
        if (!rank && file.contains("rank")) rank = file.at("rank").get<int>();
        Instance inst = load_fixture(name, rank, search_dirs);
        if (file.contains("name")) inst.name = file.at("name").get<std::string>();
        if (file.contains("qv")) inst.qv_selection = file.at("qv").get<std::string>();
        if (file.contains("sampling")) {
            inst.sampling.count = file.at("sampling").value("count", inst.sampling.count);
            inst.sampling.seed = file.at("sampling").value("seed", inst.sampling.seed);
        }
        return inst;
    }
    Json j = file;
    if (rank_override) j["rank"] = *rank_override;
    return instance_from_json(j);
}

} // namespace cutspec
