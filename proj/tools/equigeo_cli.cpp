// Batch front-end over the C API.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equigeo/equigeo.h"

namespace {

using json = nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(egeo_status s) {
  switch (s) {
    case EGEO_OK: return 0;
    case EGEO_ERR_VERIFY:
    case EGEO_ERR_NOT_APPLICABLE: return 2;
    default: return 1;
  }
}

class Space {
 public:
  Space(const std::string& path, const std::string& options) {
    const auto text = slurp(path);
    const auto dir = std::filesystem::path(path).parent_path().string();
    status_ = egeo_space_create(text.c_str(), dir.c_str(), options.c_str(), &handle_);
  }
  ~Space() { egeo_space_destroy(handle_); }
  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  egeo_status status() const { return status_; }
  const egeo_space* get() const { return handle_; }

 private:
  egeo_space* handle_ = nullptr;
  egeo_status status_;
};

// Comma-separated fractions; kept as strings so the library does the parsing.
json vector_json(const std::string& text) {
  json v = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(item);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equigeodesic analysis of reductive homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 20240229;
  double tolerance = 1e-9;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "Seed for decomposition and sampling");
    sub->add_option("--tolerance", tolerance, "Floating-point tolerance of the decomposition proposals");
  };

  std::string space_path, flag_path, mspace_path;
  std::vector<std::string> vectors, coords;
  bool ambient = false;
  std::size_t samples = 8;

  auto* decompose = app.add_subcommand("decompose", "Isotropy summands, equivalences and intertwiners");
  decompose->add_option("--space", space_path, "Space specification (JSON)")->required();
  add_common(decompose);

  auto* metrics = app.add_subcommand("metrics", "Invariant metric parameter space");
  metrics->add_option("--space", space_path, "Space specification (JSON)")->required();
  metrics->add_option("--coords", coords, "Metric coordinates to assemble, comma-separated");
  metrics->add_option("--samples", samples, "Number of sampled positive-definite operators");
  add_common(metrics);

  auto* check = app.add_subcommand("check", "Decide equigeodesic vectors");
  check->add_option("--space", space_path, "Space specification (JSON)")->required();
  check->add_option("--vector", vectors, "Vector, comma-separated fractions")->required();
  check->add_flag("--ambient", ambient, "Vectors are in g coordinates and are projected onto m");
  check->add_option("--samples", samples, "Sampled metrics used for cross-checking");
  add_common(check);

  auto* equations = app.add_subcommand("equations", "Equigeodesic polynomial system");
  equations->add_option("--space", space_path, "Space specification (JSON)")->required();
  add_common(equations);

  std::string type;
  int rank = 0;
  std::vector<int> pi_k;
  auto* troots = app.add_subcommand("troots", "t-roots of a flag manifold");
  troots->add_option("--type", type, "A, B, C or D")->required();
  troots->add_option("--rank", rank, "Rank")->required();
  troots->add_option("--piK", pi_k, "One-based simple roots of the isotropy")->delimiter(',');
  add_common(troots);

  auto* mspace = app.add_subcommand("mspace", "M-space classifier against the generic check");
  mspace->add_option("--flag", flag_path, "Flag manifold specification (JSON)")->required();
  mspace->add_option("--mspace", mspace_path, "M-space specification (JSON)")->required();
  mspace->add_option("--vector", vectors, "Vector in n, comma-separated fractions")->required();
  mspace->add_flag("--ambient", ambient, "Vectors are in g coordinates and are projected onto n");
  add_common(mspace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const egeo_format fmt = format == "text" ? EGEO_FORMAT_TEXT : EGEO_FORMAT_JSON;
  const std::string options = json{{"seed", seed}, {"tolerance", tolerance}}.dump();
  char* report = nullptr;
  egeo_status status = EGEO_OK;
  try {
    if (*troots) {
      status = egeo_troots_report(type.c_str(), rank, pi_k.data(), pi_k.size(), fmt, &report);
    } else if (*mspace) {
      Space flag(flag_path, options), ms(mspace_path, options);
      status = flag.status() != EGEO_OK ? flag.status() : ms.status();
      if (status == EGEO_OK) {
        json req{{"vectors", json::array()}, {"ambient", ambient}, {"format", format}};
        for (const auto& v : vectors) req["vectors"].push_back(vector_json(v));
        status = egeo_mspace_report(flag.get(), ms.get(), req.dump().c_str(), &report);
      }
    } else {
      Space space(space_path, options);
      status = space.status();
      if (status == EGEO_OK) {
        if (*decompose) {
          status = egeo_decompose_report(space.get(), fmt, &report);
        } else if (*metrics) {
          json req{{"coords", json::array()}, {"samples", samples}, {"seed", seed}, {"format", format}};
          for (const auto& c : coords) req["coords"].push_back(vector_json(c));
          status = egeo_metrics_report(space.get(), req.dump().c_str(), &report);
        } else if (*check) {
          json req{{"vectors", json::array()}, {"ambient", ambient}, {"samples", samples}, {"seed", seed}, {"format", format}};
          for (const auto& v : vectors) req["vectors"].push_back(vector_json(v));
          status = egeo_check_report(space.get(), req.dump().c_str(), &report);
        } else if (*equations) {
          status = egeo_equations_report(space.get(), fmt, &report);
        }
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (status != EGEO_OK) {
    std::cerr << "error: " << egeo_last_error() << "\n";
    return exit_code(status);
  }
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      egeo_string_free(report);
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << report;
  }
  egeo_string_free(report);
  return 0;
}
