#include "equigeo/equigeo.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "equigeo/error.hpp"
#include "equigeo/io.hpp"

struct egeo_space {
  equigeo::HomogeneousSpace space;
};

namespace {

using equigeo::Error;
using equigeo::ErrorKind;
using json = nlohmann::json;

thread_local std::string last_error;

egeo_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DecompositionInvalid:
    case ErrorKind::UndeterminedDecomposition:
    case ErrorKind::InvariantFailure:
    case ErrorKind::Structural:
      return EGEO_ERR_VERIFY;
    case ErrorKind::NotApplicable:
      return EGEO_ERR_NOT_APPLICABLE;
    default:
      return EGEO_ERR_INPUT;
  }
}

template <class F>
egeo_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return EGEO_OK;
  } catch (const Error& e) {
    last_error = std::string(equigeo::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("schema: ") + e.what();
    return EGEO_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return EGEO_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse(const char* text, const char* what) {
  if (!text) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorKind::Schema, std::string(what) + " must not be null");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool wants_text(const json& req) { return req.value("format", std::string("json")) == "text"; }

}  // namespace

extern "C" {

egeo_status egeo_space_create(const char* spec_json, const char* base_dir, const char* options_json,
                              egeo_space** out) {
  return guarded([&] {
    require(out, "out");
    require(spec_json, "spec_json");
    *out = nullptr;
    json options = parse(options_json, "options");
    equigeo::DecomposeOptions opts;
    opts.seed = options.value("seed", opts.seed);
    opts.tolerance = options.value("tolerance", opts.tolerance);
    opts.max_retries = options.value("max_retries", opts.max_retries);
    auto space = equigeo::io::space_from_json(parse(spec_json, "space specification"), base_dir ? base_dir : ".", opts);
    *out = new egeo_space{std::move(space)};
  });
}

void egeo_space_destroy(egeo_space* space) { delete space; }

egeo_status egeo_decompose_report(const egeo_space* space, egeo_format format, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(format == EGEO_FORMAT_TEXT ? equigeo::io::decompose_text(space->space)
                                          : dump(equigeo::io::decompose_report(space->space)));
  });
}

egeo_status egeo_metrics_report(const egeo_space* space, const char* request_json, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    json req = parse(request_json, "request");
    equigeo::io::MetricsRequest r;
    if (req.contains("coords"))
      for (const auto& c : req.at("coords")) r.coords.push_back(equigeo::io::vector_from_json(c, {}));
    r.samples = req.value("samples", r.samples);
    r.seed = req.value("seed", r.seed);
    auto report = equigeo::io::metrics_report(space->space, r);
    *out = dup(wants_text(req) ? equigeo::io::metrics_text(report) : dump(report));
  });
}

egeo_status egeo_check_report(const egeo_space* space, const char* request_json, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    json req = parse(request_json, "request");
    auto r = equigeo::io::check_request_from_json(req, space->space);
    auto report = equigeo::io::check_report(space->space, r);
    *out = dup(wants_text(req) ? equigeo::io::check_text(report) : dump(report));
  });
}

egeo_status egeo_equations_report(const egeo_space* space, egeo_format format, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(format == EGEO_FORMAT_TEXT ? equigeo::io::equations_text(space->space)
                                          : dump(equigeo::io::equations_report(space->space)));
  });
}

egeo_status egeo_troots_report(const char* type, int rank, const int* pi_k, size_t pi_k_count, egeo_format format,
                               char** out) {
  return guarded([&] {
    require(type, "type");
    require(out, "out");
    if (pi_k_count) require(pi_k, "pi_k");
    equigeo::FlagSpec spec{equigeo::generate_roots(equigeo::parse_root_type(type), rank), {}};
    for (size_t k = 0; k < pi_k_count; ++k) spec.pi_k.push_back(pi_k[k] - 1);
    *out = dup(format == EGEO_FORMAT_TEXT ? equigeo::io::troots_text(spec) : dump(equigeo::io::troots_report(spec)));
  });
}

egeo_status egeo_mspace_report(const egeo_space* flag, const egeo_space* mspace, const char* request_json,
                               char** out) {
  return guarded([&] {
    require(flag, "flag");
    require(mspace, "mspace");
    require(out, "out");
    json req = parse(request_json, "request");
    auto r = equigeo::io::check_request_from_json(req, mspace->space);
    auto report = equigeo::io::mspace_report(flag->space, mspace->space, r);
    *out = dup(wants_text(req) ? equigeo::io::mspace_text(report) : dump(report));
  });
}

egeo_status egeo_space_spec(const egeo_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(dump(equigeo::io::space_to_json(space->space)));
  });
}

const char* egeo_last_error(void) { return last_error.c_str(); }

void egeo_string_free(char* s) { std::free(s); }

const char* egeo_version(void) { return "0.1.0"; }

}  // extern "C"
