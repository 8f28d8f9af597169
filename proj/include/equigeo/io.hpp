#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "equigeo/roots.hpp"

namespace equigeo::io {

using json = nlohmann::json;

/// Scalars are written as reduced "p/q" strings; integers are accepted on input.
Scalar scalar_from_json(const json& j);
json to_json(const Scalar& s);
json to_json(std::span<const Scalar> v);
json to_json(const Matrix& m);

/// Vector given as an array of scalars or as an object {basis name: scalar}.
Vec vector_from_json(const json& j, const std::vector<std::string>& names);

/// Comma-separated scalars, e.g. "0,1,-1/2".
Vec parse_vector_list(const std::string& text);

/// Algebra object: {"builder": "so"|"su", "n": k} or
/// {"dim": d, "basis": [names], "structure": [[i, j, k, c], ...]} with
/// zero-based indices; a string is read as a path relative to base_dir.
LieAlgebra algebra_from_json(const json& j, const std::filesystem::path& base_dir);
json algebra_to_json(const LieAlgebra& algebra);

/// Space object with keys "algebra", "h", optional "summands", "inner".
HomogeneousSpace space_from_json(const json& j, const std::filesystem::path& base_dir,
                                 const DecomposeOptions& options = {});
/// Self-contained specification that rebuilds the same space, with the
/// computed summands as the hint.
json space_to_json(const HomogeneousSpace& space);

json read_json_file(const std::filesystem::path& path);

/// "X3 - 1/2*X5".
std::string format_combination(std::span<const Scalar> v, const std::vector<std::string>& names);

json decompose_report(const HomogeneousSpace& space);
std::string decompose_text(const HomogeneousSpace& space);

struct MetricsRequest {
  std::vector<Vec> coords;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};
json metrics_report(const HomogeneousSpace& space, const MetricsRequest& request);

/// Interprets a user vector: coordinates in the basis of m when its length is
/// dim m and `ambient` is false, otherwise g coordinates projected onto m.
Vec vector_in_space(const HomogeneousSpace& space, const Vec& given, bool ambient);

struct CheckRequest {
  std::vector<Vec> vectors;  // g coordinates, already in m
  std::size_t samples = 8;
  std::uint64_t seed = 1;
};
/// Reads {"vectors": [...], "ambient": bool, "samples": n, "seed": s}.
CheckRequest check_request_from_json(const json& j, const HomogeneousSpace& space);
json check_report(const HomogeneousSpace& space, const CheckRequest& request);

// Plain-text renderings of finished JSON reports.
std::string metrics_text(const json& report);
std::string check_text(const json& report);
std::string mspace_text(const json& report);

json equations_report(const HomogeneousSpace& space);
std::string equations_text(const HomogeneousSpace& space);

json troots_report(const FlagSpec& spec);
std::string troots_text(const FlagSpec& spec);

/// Request vectors are interpreted against the M-space, so they lie in n.
json mspace_report(const HomogeneousSpace& flag, const HomogeneousSpace& mspace, const CheckRequest& request);

}  // namespace equigeo::io
