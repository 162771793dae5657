#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "signseq/norms.hpp"
#include "signseq/signer.hpp"
#include "signseq/vec.hpp"

namespace signseq {

/// Formats a double with 17 significant digits, enough for an exact
/// parse-back round trip.
std::string format_number(double x);

/// Line-oriented vector file: each non-empty line holds the d coordinates of
/// one vector in decimal notation, whitespace-separated; lines whose first
/// non-space character is '#' are ignored. The dimension must be constant
/// across lines. Throws std::invalid_argument naming the offending line.
std::vector<Vec> parse_vectors(std::istream& in);
std::vector<Vec> load_vectors(const std::filesystem::path& path);
void write_vectors(std::ostream& out, std::span<const Vec> vectors);
void save_vectors(const std::filesystem::path& path, std::span<const Vec> vectors);

/// Serialized form of one vector file, byte-stable at 17 significant digits.
std::string vectors_to_string(std::span<const Vec> vectors);

/// Polygon norm file: a JSON array of [x, y] vertex pairs. Invalid polygons
/// are rejected with a diagnostic naming the violated invariant.
NormSpec load_polygon_norm(const std::filesystem::path& path);
NormSpec parse_polygon_norm(const std::string& text);

/// FNV-1a 64-bit digest of the canonical serialization.
std::string input_digest(std::span<const Vec> vectors);

/// Structured run report for the sign command; schema-stable, all numbers
/// finite.
nlohmann::json run_report(std::span<const Vec> vectors, const NormSpec& spec, double tol,
                          const SignResult& result, double timing_ms);

}  // namespace signseq
