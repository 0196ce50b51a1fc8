#pragma once

#include <string>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

/// Group definition file contents: {"name": ..., "degree": n,
/// "generators": [[1-based images], ...]}.  This is the only ingestion
/// path for groups defined as data.
struct GroupData {
  std::string name;
  Point degree = 0;
  std::vector<Permutation> generators;
};

GroupData parse_group_json(const std::string& text);
std::string group_to_json(const GroupData& data);

GroupData load_group_file(const std::string& path);
std::string read_text_file(const std::string& path);

} // namespace cgt
