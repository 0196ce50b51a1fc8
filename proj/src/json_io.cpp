#include "cgt/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cgt/error.hpp"

namespace cgt {

using nlohmann::json;

GroupData parse_group_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::bad_input, std::string("invalid group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    fail(errc::bad_input, "group JSON needs \"degree\" and \"generators\"");

  GroupData data;
  data.name = j.value("name", "");
  std::uint64_t deg = j.at("degree").get<std::uint64_t>();
  if (deg < 1 || deg > 1000000) fail(errc::bad_input, "degree out of range");
  data.degree = static_cast<Point>(deg);

  for (const auto& gen : j.at("generators")) {
    std::vector<std::uint64_t> images = gen.get<std::vector<std::uint64_t>>();
    if (images.size() != deg) fail(errc::degree_mismatch, "generator length != degree");
    data.generators.push_back(Permutation::from_one_based(images));
  }
  return data;
}

std::string group_to_json(const GroupData& data) {
  json j;
  j["name"] = data.name;
  j["degree"] = data.degree;
  json gens = json::array();
  for (const auto& g : data.generators) gens.push_back(g.to_one_based());
  j["generators"] = std::move(gens);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_input, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupData load_group_file(const std::string& path) {
  return parse_group_json(read_text_file(path));
}

} // namespace cgt
