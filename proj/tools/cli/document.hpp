#pragma once

#include <string>
#include <vector>

#include "ghsimplex/metric_space.hpp"

namespace ghsimplex::cli {

// A space read from disk: either {"matrix": [[...]]} or
// {"points": [[...]], "norm": "l1"|"l2"|"linf"}, optionally with
// {"labels": [...]} naming the points; or a headerless CSV matrix.
struct LoadedSpace {
  ValidatedSpace space;
  std::vector<std::string> labels;  // empty when the document has none
  std::string digest;               // fnv1a64 over the raw file bytes
};

LoadedSpace load_space(const std::string& path, bool csv, ValidationOptions options);

std::string fnv1a64_digest(const std::string& bytes);

}  // namespace ghsimplex::cli
