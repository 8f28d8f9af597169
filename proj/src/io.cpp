#include "equigeo/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "equigeo/error.hpp"

namespace equigeo::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    schema(std::string(what) + " index out of range");
  return j.get<std::size_t>();
}

std::string summand_name(std::size_t i) { return "m" + std::to_string(i + 1); }

json vectors_to_json(std::span<const Vec> vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  schema("expected a rational given as a string \"p/q\" or an integer");
}

json to_json(const Scalar& s) { return to_string(s); }

json to_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Vec vector_from_json(const json& j, const std::vector<std::string>& names) {
  if (j.is_array()) {
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
  }
  if (j.is_object()) {
    Vec v(names.size());
    for (const auto& [key, value] : j.items()) {
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end()) schema("unknown basis element \"" + key + "\"");
      v[static_cast<std::size_t>(it - names.begin())] = scalar_from_json(value);
    }
    return v;
  }
  schema("expected a vector as an array or an object of named coefficients");
}

Vec parse_vector_list(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
  if (v.empty()) throw Error(ErrorKind::Parse, "empty vector");
  return v;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

LieAlgebra algebra_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    auto path = base_dir / j.get<std::string>();
    return algebra_from_json(read_json_file(path), path.parent_path());
  }
  if (!j.is_object()) schema("algebra must be an object or a path");
  if (j.contains("builder")) {
    const auto name = require(j, "builder").get<std::string>();
    const auto& n = require(j, "n");
    if (!n.is_number_integer()) schema("builder \"n\" must be an integer");
    if (name == "so") return build_so(n.get<int>());
    if (name == "su") return build_su(n.get<int>());
    schema("unknown builder \"" + name + "\" (expected \"so\" or \"su\")");
  }
  const auto& dim_j = require(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1 || dim_j.get<long long>() > 4096)
    throw Error(ErrorKind::InvalidDimension, "algebra \"dim\" must be a positive integer");
  const std::size_t dim = dim_j.get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& n : j.at("basis")) names.push_back(n.get<std::string>());
    if (names.size() != dim) schema("\"basis\" must list dim names");
  } else {
    for (std::size_t k = 0; k < dim; ++k) names.push_back("e" + std::to_string(k + 1));
  }
  std::vector<StructureConstant> constants;
  for (const auto& t : require(j, "structure")) {
    if (!t.is_array() || t.size() != 4) schema("structure entries are [i, j, k, c]");
    constants.push_back({index_from_json(t[0], dim, "structure"), index_from_json(t[1], dim, "structure"),
                         index_from_json(t[2], dim, "structure"), scalar_from_json(t[3])});
  }
  return LieAlgebra(std::move(names), constants);
}

json algebra_to_json(const LieAlgebra& algebra) {
  if (const auto& b = algebra.builder()) return {{"builder", b->name}, {"n", b->n}};
  json structure = json::array();
  for (const auto& c : algebra.nonzero_constants()) structure.push_back({c.i, c.j, c.k, to_string(c.c)});
  return {{"dim", algebra.dim()}, {"basis", algebra.basis_names()}, {"structure", structure}};
}

HomogeneousSpace space_from_json(const json& j, const std::filesystem::path& base_dir,
                                 const DecomposeOptions& options) {
  if (!j.is_object()) schema("space specification must be an object");
  LieAlgebra algebra = algebra_from_json(require(j, "algebra"), base_dir);
  const std::size_t n = algebra.dim();
  const auto& names = algebra.basis_names();
  auto read_family = [&](const json& arr, const char* what) {
    if (!arr.is_array()) schema(std::string(what) + " must be an array of vectors");
    std::vector<Vec> out;
    for (const auto& v : arr) {
      Vec x = vector_from_json(v, names);
      if (x.size() != n) throw Error(ErrorKind::Shape, std::string(what) + " vector has the wrong length");
      out.push_back(std::move(x));
    }
    return out;
  };
  Subspace h(n, read_family(require(j, "h"), "h"));
  const auto& inner_j = require(j, "inner");
  SymForm inner;
  if (inner_j.contains("killing_scale")) {
    inner = SymForm(scalar_from_json(inner_j.at("killing_scale")) * killing_form(algebra).matrix());
  } else if (inner_j.contains("matrix")) {
    auto rows = read_family(inner_j.at("matrix"), "inner matrix");
    if (rows.size() != n) throw Error(ErrorKind::Shape, "inner matrix must be dim x dim");
    inner = SymForm(Matrix::from_rows(rows, n));
  } else {
    schema("\"inner\" needs \"killing_scale\" or \"matrix\"");
  }
  std::optional<std::vector<Subspace>> hint;
  if (j.contains("summands") && !j.at("summands").is_null()) {
    hint.emplace();
    for (const auto& s : j.at("summands")) hint->emplace_back(n, read_family(s, "summand"));
  }
  return HomogeneousSpace::build(std::move(algebra), std::move(h), std::move(inner), std::move(hint), options);
}

json space_to_json(const HomogeneousSpace& space) {
  json summands = json::array();
  for (const auto& s : space.summands()) summands.push_back(vectors_to_json(s.basis()));
  return {{"algebra", algebra_to_json(space.algebra())},
          {"h", vectors_to_json(space.h().basis())},
          {"summands", summands},
          {"inner", {{"matrix", to_json(space.inner().matrix())}}}};
}

std::string format_combination(std::span<const Scalar> v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    Scalar c = v[k];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += to_string(c) + "*";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

json decompose_report(const HomogeneousSpace& space) {
  const auto& names = space.algebra().basis_names();
  const std::size_t s = space.summand_count();
  json summands = json::array();
  for (std::size_t i = 0; i < s; ++i) {
    const auto& sub = space.summands()[i];
    json basis_text = json::array();
    for (const auto& v : sub.basis()) basis_text.push_back(format_combination(v, names));
    json ends = json::array();
    for (const auto& e : space.endomorphism_basis(i)) ends.push_back(to_json(e));
    summands.push_back({{"index", i + 1},
                        {"dim", sub.dim()},
                        {"basis", vectors_to_json(sub.basis())},
                        {"basis_text", basis_text},
                        {"end_type", to_string(space.intertwiners(i, i).dtype)},
                        {"end_basis", ends}});
  }
  json classes = json::array();
  for (const auto& cls : space.classes()) {
    json c = json::array();
    for (auto i : cls) c.push_back(i + 1);
    classes.push_back(c);
  }
  json inter = json::array();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const auto& sp = space.intertwiners(i, j);
      json entry = {{"source", i + 1}, {"target", j + 1}, {"dim", sp.dim()}, {"type", to_string(sp.dtype)}};
      if (space.equivalent(i, j)) {
        const auto& t = space.isometry(i, j);
        entry["isometry"] = {{"radicand", to_string(t.radicand)}, {"base", to_json(t.base)}};
      }
      inter.push_back(entry);
    }
  return {{"algebra", {{"dim", space.dim()}, {"basis", names}}},
          {"h_dim", space.h().dim()},
          {"m_dim", space.m_dim()},
          {"m_basis", vectors_to_json(space.m().basis())},
          {"hinted", space.hinted()},
          {"summands", summands},
          {"classes", classes},
          {"intertwiners", inter},
          {"sufficiency_applies", sufficiency_applies(space)},
          {"spec", space_to_json(space)}};
}

std::string decompose_text(const HomogeneousSpace& space) {
  const auto& names = space.algebra().basis_names();
  std::ostringstream out;
  out << "dim g = " << space.dim() << ", dim h = " << space.h().dim() << ", dim m = " << space.m_dim() << "\n";
  for (std::size_t i = 0; i < space.summand_count(); ++i) {
    const auto& sub = space.summands()[i];
    out << summand_name(i) << " (dim " << sub.dim() << ", End " << to_string(space.intertwiners(i, i).dtype)
        << ") = span{";
    for (std::size_t k = 0; k < sub.dim(); ++k) out << (k ? ", " : "") << format_combination(sub.basis()[k], names);
    out << "}\n";
  }
  out << "classes:";
  for (const auto& cls : space.classes()) {
    out << " {";
    for (std::size_t k = 0; k < cls.size(); ++k) out << (k ? "," : "") << cls[k] + 1;
    out << "}";
  }
  out << "\n";
  return out.str();
}

json metrics_report(const HomogeneousSpace& space, const MetricsRequest& request) {
  auto params = MetricParamSpace::build(space);
  json pairs = json::array();
  for (const auto& p : params.pairs())
    pairs.push_back({{"p", p.p + 1}, {"q", p.q + 1}, {"dtype", to_string(p.dtype)}, {"dim", p.dim}});
  json dirs = json::array();
  for (const auto& d : params.directions()) dirs.push_back({{"label", d.label}, {"matrix", to_json(d.matrix)}});
  auto describe = [](const Vec& coords, const MetricOperator& op) {
    return json{{"coords", to_json(coords)},
                {"positive_definite", op.positive_definite},
                {"minors", to_json(op.minors)},
                {"matrix", to_json(op.matrix)}};
  };
  json ops = json::array();
  for (const auto& c : request.coords) ops.push_back(describe(c, params.assemble(c)));
  json samples = json::array();
  if (request.samples > 0)
    for (const auto& s : sample_valid_coords(params, request.samples, request.seed)) samples.push_back(describe(s.coords, s.op));
  return {{"dimension", params.dimension()},
          {"mu_count", params.mu_count()},
          {"pairs", pairs},
          {"directions", dirs},
          {"operators", ops},
          {"samples", samples}};
}

Vec vector_in_space(const HomogeneousSpace& space, const Vec& given, bool ambient) {
  if (!ambient && given.size() == space.m_dim()) return space.from_split(given);
  if (given.size() != space.dim())
    throw Error(ErrorKind::Shape, "vector has length " + std::to_string(given.size()) + "; expected " +
                                      std::to_string(space.m_dim()) + " (basis of m) or " +
                                      std::to_string(space.dim()) + " (ambient)");
  return space.m_part(given);
}

CheckRequest check_request_from_json(const json& j, const HomogeneousSpace& space) {
  CheckRequest r;
  const bool ambient = j.value("ambient", false);
  for (const auto& v : require(j, "vectors")) {
    Vec x = vector_from_json(v, space.algebra().basis_names());
    r.vectors.push_back(vector_in_space(space, x, ambient || v.is_object()));
  }
  r.samples = j.value("samples", r.samples);
  r.seed = j.value("seed", r.seed);
  return r;
}

namespace {

json witness_json(const HomogeneousSpace& space, const Verdict& v) {
  if (v.result) return nullptr;
  const auto& w = *v.witness;
  Vec coords = space.split_coords(w.value);
  return {{"direction", w.label},
          {"value", to_json(coords)},
          {"value_text", format_combination(w.value, space.algebra().basis_names())}};
}

}  // namespace

json check_report(const HomogeneousSpace& space, const CheckRequest& request) {
  auto params = MetricParamSpace::build(space);
  auto samples = request.samples ? sample_valid_coords(params, request.samples, request.seed)
                                 : std::vector<MetricSample>{};
  json ops = json::array();
  for (std::size_t k = 0; k < samples.size(); ++k) ops.push_back({{"id", k}, {"coords", to_json(samples[k].coords)}});
  const auto& names = space.algebra().basis_names();
  json results = json::array();
  for (const auto& x : request.vectors) {
    auto t = make_tangent(space, x);
    auto eq = equigeodesic_check(params, t);
    auto nc = necessary_condition(space, t);
    json geodesic_for = json::array();
    bool kv_agrees = true;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      bool g = geodesic_check(space, t, samples[k].op).result;
      if (g) geodesic_for.push_back(k);
      if (kv_check(space, t, samples[k].op).result != g) kv_agrees = false;
    }
    results.push_back({{"vector", to_json(space.split_coords(x))},
                       {"vector_text", format_combination(x, names)},
                       {"equigeodesic", eq.result},
                       {"necessary", nc.result},
                       {"witness", witness_json(space, eq)},
                       {"geodesic_for", geodesic_for},
                       {"kv_agrees", kv_agrees}});
  }
  return {{"sufficiency_applies", sufficiency_applies(space)},
          {"variables", variable_names(space)},
          {"operators", ops},
          {"results", results}};
}

namespace {

std::string coordinate_name(const HomogeneousSpace& space, std::size_t k) {
  auto vars = variable_names(space);
  std::string v = vars[k];
  v[0] = v[0] == 'x' ? 'X' : 'Y';
  return v;
}

}  // namespace

json equations_report(const HomogeneousSpace& space) {
  auto params = MetricParamSpace::build(space);
  auto vars = variable_names(space);
  json eqs = json::array();
  for (const auto& e : equigeodesic_equations(params)) {
    json terms = json::array();
    for (const auto& t : e.form.terms) terms.push_back({{"vars", {vars[t.a], vars[t.b]}}, {"coeff", to_string(t.c)}});
    eqs.push_back({{"direction", e.direction},
                   {"coordinate", coordinate_name(space, e.coordinate)},
                   {"terms", terms},
                   {"text", to_string(e.form, vars)}});
  }
  json labels = json::array();
  for (const auto& d : params.directions()) labels.push_back(d.label);
  return {{"variables", vars}, {"directions", labels}, {"equations", eqs}};
}

std::string equations_text(const HomogeneousSpace& space) {
  auto params = MetricParamSpace::build(space);
  auto vars = variable_names(space);
  auto eqs = equigeodesic_equations(params);
  std::ostringstream out;
  out << "[X, AX]_m with X = ";
  for (std::size_t k = 0; k < vars.size(); ++k) out << (k ? " + " : "") << vars[k] << coordinate_name(space, k);
  out << "\n";
  if (eqs.empty()) {
    out << "  = 0 for every metric\n";
    return out.str();
  }
  std::map<std::size_t, std::vector<const Equation*>> by_coord;
  for (const auto& e : eqs) by_coord[e.coordinate].push_back(&e);
  for (const auto& [coord, list] : by_coord) {
    out << "  " << coordinate_name(space, coord) << ":";
    for (std::size_t k = 0; k < list.size(); ++k)
      out << (k ? " +" : "") << " " << list[k]->direction << "*(" << to_string(list[k]->form, vars) << ")";
    out << "\n";
  }
  return out.str();
}

json troots_report(const FlagSpec& spec) {
  auto table = troots(spec);
  auto shape = mspace_shape(table);
  json pik = json::array();
  for (int i : spec.pi_k) pik.push_back(i + 1);
  json classes = json::array();
  for (const auto& c : table.classes) classes.push_back({{"xi", c.xi}, {"roots", c.roots}, {"dim", c.dim()}});
  json summands = json::array();
  for (const auto& e : shape.summands)
    summands.push_back({{"xi", e.xi}, {"dim", e.dim}, {"status", to_string(e.status)}});
  json comp = json::array();
  for (int i : table.complementary) comp.push_back(i + 1);
  std::size_t rm = 0;
  for (const auto& c : table.classes) rm += c.roots.size();
  return {{"type", std::string(1, to_char(spec.roots.type))},
          {"rank", spec.roots.rank},
          {"pi_K", pik},
          {"complementary", comp},
          {"positive_roots", spec.roots.positive_roots.size()},
          {"R_M_plus", rm},
          {"classes", classes},
          {"m_dim", table.m_dim()},
          {"mspace", {{"lines", shape.lines}, {"summands", summands}}}};
}

std::string troots_text(const FlagSpec& spec) {
  auto table = troots(spec);
  auto shape = mspace_shape(table);
  auto tuple = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  std::ostringstream out;
  out << to_char(spec.roots.type) << spec.roots.rank << ", pi_K = {";
  for (std::size_t k = 0; k < spec.pi_k.size(); ++k) out << (k ? "," : "") << spec.pi_k[k] + 1;
  out << "}, " << table.classes.size() << " t-roots, dim m = " << table.m_dim() << "\n";
  std::size_t width = 2;
  for (const auto& c : table.classes) width = std::max(width, tuple(c.xi).size());
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& c = table.classes[i];
    out << "  xi" << std::left << std::setw(3) << i + 1 << std::setw(static_cast<int>(width) + 2) << tuple(c.xi)
        << "dim " << std::setw(4) << c.dim() << to_string(shape.summands[i].status) << "  roots:";
    for (const auto& r : c.roots) out << " " << tuple(r);
    out << "\n";
  }
  out << "  M-space: " << shape.lines << " central line(s)\n";
  return out.str();
}

json mspace_report(const HomogeneousSpace& flag, const HomogeneousSpace& mspace, const CheckRequest& request) {
  MSpacePair pair(flag, mspace);
  const auto applied = pair.applicable_case();
  auto params = MetricParamSpace::build(mspace);
  json irreducible = json::array();
  for (bool b : pair.k1_irreducible()) irreducible.push_back(b);
  json results = json::array();
  for (const auto& x : request.vectors) {
    auto verdict = pair.classify(x);
    bool generic = equigeodesic_check(params, make_tangent(mspace, x)).result;
    results.push_back({{"vector", to_json(mspace.split_coords(x))},
                       {"classifier", verdict.equigeodesic},
                       {"reason", verdict.reason},
                       {"generic", generic},
                       {"agree", generic == verdict.equigeodesic}});
  }
  return {{"case", static_cast<int>(applied)},
          {"s_dim", pair.s().dim()},
          {"s_basis", vectors_to_json(pair.s().basis())},
          {"k1_irreducible", irreducible},
          {"results", results}};
}

namespace {

std::string joined(const json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].get<std::string>();
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string metrics_text(const json& report) {
  std::ostringstream os;
  os << "dimension " << report.at("dimension").get<std::size_t>() << " (" << report.at("mu_count").get<std::size_t>()
     << " diagonal)\nparameters:";
  for (const auto& d : report.at("directions")) os << ' ' << d.at("label").get<std::string>();
  os << '\n';
  for (const auto& p : report.at("pairs"))
    os << "m" << p.at("p").get<std::size_t>() << " ~ m" << p.at("q").get<std::size_t>() << " ("
       << p.at("dtype").get<std::string>() << ")\n";
  auto ops = [&](const char* key, const char* title) {
    if (!report.contains(key) || report.at(key).empty()) return;
    os << title << ":\n";
    for (const auto& o : report.at(key))
      os << "  (" << joined(o.at("coords")) << ") "
         << (o.at("positive_definite").get<bool>() ? "positive definite" : "not positive definite") << '\n';
  };
  ops("operators", "operators");
  ops("samples", "samples");
  return os.str();
}

std::string check_text(const json& report) {
  std::ostringstream os;
  for (const auto& r : report.at("results")) {
    os << r.at("vector_text").get<std::string>() << ": "
       << (r.at("equigeodesic").get<bool>() ? "equigeodesic" : "not equigeodesic");
    os << " (necessary condition " << (r.at("necessary").get<bool>() ? "holds" : "fails") << ")\n";
    if (r.contains("witness") && !r.at("witness").is_null()) {
      const auto& w = r.at("witness");
      os << "  witness " << w.at("direction").get<std::string>() << ": [X, AX] component "
         << w.at("value_text").get<std::string>() << '\n';
    }
    const auto& g = r.at("geodesic_for");
    if (!g.empty()) {
      os << "  geodesic for sampled operators";
      for (const auto& id : g) os << ' ' << id.get<long long>();
      os << '\n';
    }
    if (!r.at("kv_agrees").get<bool>()) os << "  WARNING: Kowalski-Vanhecke test disagrees\n";
  }
  os << "sufficiency test applies: " << yes_no(report.at("sufficiency_applies").get<bool>()) << '\n';
  return os.str();
}

std::string mspace_text(const json& report) {
  std::ostringstream os;
  os << "case " << report.at("case").get<int>() << ", dim s = " << report.at("s_dim").get<std::size_t>() << '\n';
  for (const auto& r : report.at("results")) {
    os << '(' << joined(r.at("vector")) << "): classifier " << yes_no(r.at("classifier").get<bool>()) << ", generic "
       << yes_no(r.at("generic").get<bool>()) << (r.at("agree").get<bool>() ? "" : "  DISAGREE") << "\n  "
       << r.at("reason").get<std::string>() << '\n';
  }
  return os.str();
}

}  // namespace equigeo::io
