#include "cli/document.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ghsimplex::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<double>> parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error("CSV cell is not a number: '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("CSV file contains no rows");
  return rows;
}

Norm parse_norm(const std::string& name) {
  if (name == "l1") return Norm::L1;
  if (name == "l2") return Norm::L2;
  if (name == "linf") return Norm::Linf;
  throw Error("unknown norm '" + name + "', expected l1, l2 or linf");
}

}  // namespace

std::string fnv1a64_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(hash >> shift) & 0xF]);
  return out;
}

LoadedSpace load_space(const std::string& path, bool csv, ValidationOptions options) {
  const std::string bytes = read_file(path);
  const std::string digest = fnv1a64_digest(bytes);

  if (csv) {
    auto matrix = parse_csv_matrix(bytes);
    return LoadedSpace{ValidatedSpace::validate(matrix, options), {}, digest};
  }

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw Error("space document must be a JSON object");

  const bool has_matrix = doc.contains("matrix");
  const bool has_points = doc.contains("points");
  if (has_matrix == has_points)
    throw Error("space document must contain exactly one of \"matrix\" or \"points\"");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error("\"labels\" must be an array of strings");
    for (const auto& item : doc["labels"]) labels.push_back(item.get<std::string>());
  }

  auto finish = [&](ValidatedSpace space) {
    if (!labels.empty() && static_cast<int>(labels.size()) != space.size())
      throw Error("\"labels\" has " + std::to_string(labels.size()) + " entries for " +
                  std::to_string(space.size()) + " points");
    return LoadedSpace{std::move(space), std::move(labels), digest};
  };

  try {
    if (has_matrix) {
      auto matrix = doc["matrix"].get<std::vector<std::vector<double>>>();
      return finish(ValidatedSpace::validate(matrix, options));
    }
    auto points = doc["points"].get<std::vector<std::vector<double>>>();
    const std::string norm = doc.value("norm", std::string("l2"));
    return finish(space_from_points(points, parse_norm(norm), options));
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed space document: " + std::string(e.what()));
  }
}

}  // namespace ghsimplex::cli
