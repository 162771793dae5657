#include "signseq/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace signseq {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<Vec> parse_vectors(std::istream& in) {
  std::vector<Vec> out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ls(line);
    std::vector<double> coords;
    double x;
    while (ls >> x) coords.push_back(x);
    if (!ls.eof()) {
      throw std::invalid_argument("vector file line " + std::to_string(line_no) +
                                  ": expected decimal numbers");
    }
    for (double c : coords) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("vector file line " + std::to_string(line_no) +
                                    ": non-finite coordinate");
      }
    }
    if (coords.empty()) continue;
    if (dim == 0) {
      dim = coords.size();
    } else if (coords.size() != dim) {
      throw std::invalid_argument("vector file line " + std::to_string(line_no) + ": dimension " +
                                  std::to_string(coords.size()) + " differs from " +
                                  std::to_string(dim));
    }
    out.push_back(Vec(std::move(coords)));
  }
  return out;
}

std::vector<Vec> load_vectors(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open vector file: " + path.string());
  return parse_vectors(f);
}

void write_vectors(std::ostream& out, std::span<const Vec> vectors) {
  for (const Vec& v : vectors) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (i) out << ' ';
      out << format_number(v[i]);
    }
    out << '\n';
  }
}

void save_vectors(const std::filesystem::path& path, std::span<const Vec> vectors) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write vector file: " + path.string());
  write_vectors(f, vectors);
}

std::string vectors_to_string(std::span<const Vec> vectors) {
  std::ostringstream s;
  write_vectors(s, vectors);
  return s.str();
}

NormSpec parse_polygon_norm(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidPolygon(std::string("polygon file: invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidPolygon("polygon file: expected an array of [x, y] pairs");
  std::vector<Vec> vertices;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw InvalidPolygon("polygon file: each vertex must be a numeric [x, y] pair");
    }
    vertices.push_back(Vec{item[0].get<double>(), item[1].get<double>()});
  }
  return NormSpec::polygon(vertices);
}

NormSpec load_polygon_norm(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw InvalidPolygon("cannot open polygon file: " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_polygon_norm(buf.str());
}

std::string input_digest(std::span<const Vec> vectors) {
  const std::string bytes = vectors_to_string(vectors);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json run_report(std::span<const Vec> vectors, const NormSpec& spec, double tol,
                          const SignResult& result, double timing_ms) {
  nlohmann::json j;
  j["input"] = {{"digest", input_digest(vectors)},
                {"count", vectors.size()},
                {"dimension", vectors.empty() ? 0 : vectors.front().dim()}};
  j["norm"] = {{"kind", spec.name()}};
  if (spec.kind() == NormKind::polygon) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Vec& v : spec.gauge()->vertices()) verts.push_back({v[0], v[1]});
    j["norm"]["vertices"] = verts;
  }
  j["algorithm"] = result.algorithm == Algorithm::trapping ? "trapping" : "greedy";
  j["tolerance"] = tol;
  j["signs"] = result.signs;
  j["partial_norms"] = result.partial_norms;
  j["max_partial_norm"] = result.max_partial_norm;
  j["certified_bound"] =
      result.certified_bound ? nlohmann::json(*result.certified_bound) : nlohmann::json(nullptr);
  j["final_radius"] =
      result.final_radius ? nlohmann::json(*result.final_radius) : nlohmann::json(nullptr);
  nlohmann::json warnings = nlohmann::json::array();
  for (const DegeneracyWarning& w : result.warnings) {
    warnings.push_back({{"index", w.index}, {"excess", w.excess}});
  }
  j["warnings"] = warnings;
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace signseq
