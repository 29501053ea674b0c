#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "compdnf/bounds.hpp"
#include "compdnf/core.hpp"
#include "compdnf/skeleton.hpp"
#include "compdnf/transform.hpp"

namespace compdnf {

inline constexpr int kReportFormatVersion = 1;

/// Matrix text: header "k n", then k rows of n characters '0'/'1'. Lines
/// starting with '#' and blank lines are skipped. Throws parse_error.
ZeroMatrix parse_matrix(std::string_view text);
std::string format_matrix(const ZeroMatrix& m);

/// DNF text: one term per line as signed 1-based variable indices
/// ("3 -5" is x3 !x5); '#' comments and blank lines are skipped.
Dnf parse_dnf(std::string_view text);
std::string format_dnf(const Dnf& d);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Renames literals named by the chi of their vector in B^k: j < 2^{k-1}
/// is x_j of F_k, j >= 2^{k-1} is the negation of x_{2^k - 1 - j}.
Dnf normalize_chi_named(const Dnf& raw, std::size_t k);

nlohmann::json to_json(const SPTransform& t);
nlohmann::json to_json(const ReductionMap& map);
ReductionMap reduction_map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SynthesisStats& s);
nlohmann::json to_json(const BoundReport& r);

}  // namespace compdnf
