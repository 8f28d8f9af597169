// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--report FILE] [--specs DIR]
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "equigeo/equigeo.h"
#include "equigeo/equigeo.hpp"
#include "equigeo/error.hpp"
#include "equigeo/io.hpp"
#include "equigeo/metrics.hpp"
#include "equigeo/random.hpp"
#include "equigeo/roots.hpp"
#include "fixtures.hpp"
#include "root_oracle.hpp"

using namespace equigeo;
using json = nlohmann::json;

namespace {

constexpr std::uint64_t kSeed = 20240229;
constexpr std::size_t kPropertyVectors = 500;
constexpr std::size_t kSoundnessMetrics = 100;
constexpr std::size_t kSoundnessVectors = 40;
constexpr std::size_t kClassifierVectors = 200;
constexpr std::size_t kRandomRootSpecs = 20;

std::string spec_dir = EQUIGEO_SPEC_DIR;

HomogeneousSpace load(const std::string& name) {
  const auto path = std::filesystem::path(spec_dir) / name;
  return io::space_from_json(io::read_json_file(path), path.parent_path());
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Named {
  std::string name;
  HomogeneousSpace space;
};

// The five property-suite spaces.
std::vector<Named> property_spaces() {
  std::vector<Named> out;
  out.push_back({"V2(R4)", load("v2r4.json")});
  out.push_back({"SO(5)/SO(2)", load("so5_so2.json")});
  out.push_back({"SO(4)/T2", load("so4_torus.json")});
  out.push_back({"SO(3)/e", fixtures::trivial_isotropy(3)});
  out.push_back({"SO(4)/e", fixtures::trivial_isotropy(4)});
  return out;
}

std::vector<Named> all_spaces() {
  auto out = property_spaces();
  out.push_back({"SU(3)/S(U1xU2)", load("su3_flag.json")});
  out.push_back({"SU(3)/SU(2)", load("su3_mspace.json")});
  out.push_back({"SU(4)/S(U1xU1xU2)", load("su4_flag.json")});
  out.push_back({"SU(4)/SU(2)", load("su4_mspace.json")});
  return out;
}

// Random nonzero vector of m, biased toward summands and single coordinates
// so that equigeodesic vectors show up often.
Vec random_m_vector(const HomogeneousSpace& space, Rng& rng) {
  const std::size_t n = space.m_dim();
  Vec c(n);
  do {
    for (auto& x : c) x = 0;
    switch (rng.uniform_int(0, 3)) {
      case 0:
        for (auto& x : c) x = rng.uniform_rational(Scalar(-2), Scalar(2), 8);
        break;
      case 1: {
        const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(space.summand_count()) - 1));
        std::size_t off = 0;
        for (std::size_t k = 0; k < i; ++k) off += space.summands()[k].dim();
        for (std::size_t k = 0; k < space.summands()[i].dim(); ++k) c[off + k] = rng.uniform_int(-3, 3);
        break;
      }
      case 2:
        c[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))] = rng.uniform_int(1, 3);
        break;
      default:
        for (auto& x : c) x = rng.uniform_int(-1, 1);
    }
  } while (std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x == 0; }));
  return space.from_split(c);
}

std::string show(const HomogeneousSpace& space, const Vec& x) {
  return io::format_combination(x, space.algebra().basis_names());
}

// Unit coordinate vectors in split coordinates for ambient index k.
std::size_t split_index(const HomogeneousSpace& space, std::size_t ambient) {
  auto c = space.split_coords(unit_vector(space.algebra().dim(), ambient));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return i;
  throw std::logic_error("coordinate not in m");
}

// ---------------------------------------------------------------------------

Outcome stiefel_regression() {
  Outcome o;
  auto space = load("v2r4.json");
  std::vector<std::size_t> dims;
  for (const auto& s : space.summands()) dims.push_back(s.dim());
  o.expect(dims == std::vector<std::size_t>{1, 2, 2}, "summand dimensions");
  o.expect(space.classes() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}}, "equivalence classes");
  o.expect(space.endomorphism_basis(1).size() == 2 && space.intertwiners(1, 1).dtype == DivisionType::C,
           "End(m2) is C");
  auto params = MetricParamSpace::build(space);
  o.expect(params.dimension() == 5, "metric parameter dimension");

  // Positivity on the 8-point grid.
  int grid_bad = 0;
  for (int m1 = 1; m1 <= 2; ++m1)
    for (int m2 = 1; m2 <= 2; ++m2)
      for (int m3 = 1; m3 <= 2; ++m3)
        for (int ab = 0; ab <= 1; ++ab) {
          std::vector<Scalar> coords{m1, m2, m3, ab, ab};
          auto op = params.assemble(coords);
          const bool expected = 2 * ab * ab < m2 * m3;
          bool minors_positive = true;
          for (const auto& m : op.minors) minors_positive = minors_positive && m > 0;
          if (op.positive_definite != expected || minors_positive != expected) ++grid_bad;
        }
  o.expect(grid_bad == 0, std::to_string(grid_bad) + " positivity grid points disagree");

  // Equigeodesic set against span{X2} on the 3^5 grid.
  const std::size_t d = space.algebra().dim();
  std::vector<std::string> counter;
  std::size_t mismatches = 0, found = 0;
  for (int code = 1; code < 243; ++code) {
    Vec x(d);
    int c = code;
    for (std::size_t k = 1; k < 6; ++k, c /= 3) x[k] = c % 3 - 1;
    const bool in_span = x[2] == 0 && x[3] == 0 && x[4] == 0 && x[5] == 0;
    const bool eq = equigeodesic_check(params, make_tangent(space, x)).result;
    if (eq) ++found;
    if (eq != in_span) {
      ++mismatches;
      if (counter.size() < 4) counter.push_back(show(space, x));
    }
  }
  if (mismatches) {
    std::string list;
    for (const auto& s : counter) list += (list.empty() ? "" : "; ") + s;
    o.fail(std::to_string(found) + " of 242 grid vectors are equigeodesic, " + std::to_string(mismatches) +
           " outside span{X2}, e.g. " + list);
  }

  auto x3 = make_tangent(space, unit_vector(d, 2));
  o.expect(necessary_condition(space, x3).result && !equigeodesic_check(params, x3).result,
           "X3 satisfies the necessary condition without being equigeodesic");
  return o;
}

Outcome equation_system() {
  Outcome o;
  auto space = load("v2r4.json");
  auto params = MetricParamSpace::build(space);
  const std::size_t n = space.m_dim();
  auto monomial = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n + b;
  };
  std::vector<Vec> rows;
  for (const auto& eq : equigeodesic_equations(params)) {
    Vec r(n * n);
    for (const auto& t : eq.form.terms) r[monomial(t.a, t.b)] += t.c;
    rows.push_back(r);
  }
  // Reference forms entered by hand in the variables x2..x6: the X2 row
  // contributes x3x6 + x4x5 and the square sum, every other row x2 x_k.
  auto x = [&](int k) { return split_index(space, static_cast<std::size_t>(k - 1)); };
  std::vector<Vec> hand;
  auto form = [&](std::initializer_list<std::tuple<int, int, long>> terms) {
    Vec r(n * n);
    for (auto [a, b, c] : terms) r[monomial(x(a), x(b))] += c;
    hand.push_back(r);
  };
  form({{3, 6, 1}, {4, 5, 1}});
  form({{3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}});
  for (int k = 3; k <= 6; ++k) form({{2, k, 1}});

  const auto se = canonical_basis(rows, n * n), sh = canonical_basis(hand, n * n);
  const bool same = se == sh;
  if (!same) {
    std::string b_row;
    for (const auto& eq : equigeodesic_equations(params))
      if (eq.direction == "b23" && eq.coordinate == x(2)) b_row = to_string(eq.form, variable_names(space));
    o.fail("spans differ (dims " + std::to_string(se.size()) + " vs " + std::to_string(sh.size()) +
           "); emitted b-coefficient of X2 is " + b_row + ", reference -(x3^2 + x4^2 + x5^2 + x6^2)");
  }
  // The emitted forms reproduce [X, D X]_m for every direction D.
  Rng rng(kSeed);
  for (int t = 0; t < 20; ++t) {
    Vec xs(n);
    for (auto& c : xs) c = rng.uniform_int(-3, 3);
    const Vec xa = space.from_split(xs);
    for (const auto& eq : equigeodesic_equations(params)) {
      std::vector<Scalar> coords(params.dimension());
      for (std::size_t k = 0; k < params.dimension(); ++k)
        if (params.directions()[k].label == eq.direction) coords[k] = 1;
      auto op = params.assemble(coords);
      const Vec ax = space.from_adapted(op.matrix * space.adapted_coords(xa));
      const Vec br = space.split_coords(space.m_part(bracket(space.algebra(), xa, ax)));
      if (br[eq.coordinate] != eq.form.evaluate(xs)) {
        o.fail("emitted form disagrees with the bracket for " + eq.direction);
        return o;
      }
    }
  }
  return o;
}

Outcome necessary_implication() {
  Outcome o;
  Rng rng(kSeed);
  for (auto& [name, space] : property_spaces()) {
    auto params = MetricParamSpace::build(space);
    std::size_t violations = 0, positives = 0;
    for (std::size_t t = 0; t < kPropertyVectors; ++t) {
      auto x = make_tangent(space, random_m_vector(space, rng));
      if (equigeodesic_check(params, x).result) {
        ++positives;
        if (!necessary_condition(space, x).result) ++violations;
      }
    }
    o.expect(violations == 0, name + ": " + std::to_string(violations) + " violations");
    o.notes.push_back(name + " " + std::to_string(positives) + "/" + std::to_string(kPropertyVectors) +
                      " equigeodesic");
  }
  return o;
}

Outcome sufficiency_equivalence() {
  Outcome o;
  Rng rng(kSeed + 1);
  std::size_t applied = 0;
  for (auto& [name, space] : all_spaces()) {
    if (!sufficiency_applies(space)) continue;
    ++applied;
    auto params = MetricParamSpace::build(space);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < kPropertyVectors; ++t) {
      auto x = make_tangent(space, random_m_vector(space, rng));
      if (necessary_condition(space, x).result != equigeodesic_check(params, x).result) ++violations;
    }
    o.expect(violations == 0, name + ": " + std::to_string(violations) + " violations");
    o.notes.push_back(name);
  }
  o.expect(applied > 0, "no space satisfies the sufficiency hypothesis");
  return o;
}

Outcome soundness() {
  Outcome o;
  Rng rng(kSeed + 2);
  for (auto& [name, space] : property_spaces()) {
    auto params = MetricParamSpace::build(space);
    auto samples = sample_valid(params, kSoundnessMetrics, kSeed);
    std::size_t bad_pos = 0, bad_neg = 0;
    for (std::size_t t = 0; t < kSoundnessVectors; ++t) {
      auto x = make_tangent(space, random_m_vector(space, rng));
      auto v = equigeodesic_check(params, x);
      if (v.result) {
        for (const auto& a : samples)
          if (!a.positive_definite || !geodesic_check(space, x, a).result) ++bad_pos;
        continue;
      }
      // Identity plus a small multiple of the witness direction.
      std::vector<Scalar> coords(params.dimension());
      for (std::size_t k = 0; k < params.mu_count(); ++k) coords[k] = 1;
      std::size_t w = params.dimension();
      for (std::size_t k = 0; k < params.dimension(); ++k)
        if (v.witness && params.directions()[k].label == v.witness->label) w = k;
      if (w == params.dimension()) {
        ++bad_neg;
        continue;
      }
      Scalar eps(1, 8);
      MetricOperator op;
      for (int tries = 0; tries < 64; ++tries, eps /= 2) {
        auto c = coords;
        c[w] += eps;
        op = params.assemble(c);
        if (op.positive_definite) break;
      }
      if (!op.positive_definite || geodesic_check(space, x, op).result) ++bad_neg;
    }
    o.expect(bad_pos == 0, name + ": " + std::to_string(bad_pos) + " sampled metrics reject an equigeodesic vector");
    o.expect(bad_neg == 0, name + ": " + std::to_string(bad_neg) + " witnesses do not produce a failing metric");
  }
  return o;
}

Outcome algebra_kernel() {
  Outcome o;
  // so(4) uses the named order X1..X6 = E21, E43, E31, E42, E32, E41.
  const int so4[6][2] = {{1, 0}, {3, 2}, {2, 0}, {3, 1}, {2, 1}, {3, 0}};
  for (int n = 2; n <= 8; ++n) {
    auto g = build_so(n);
    const std::size_t d = g.dim();
    std::vector<std::pair<int, int>> pairs;
    if (n == 4) {
      for (auto& p : so4) pairs.emplace_back(p[0], p[1]);
    } else {
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) pairs.emplace_back(i, j);
    }
    std::vector<Vec> e;
    for (std::size_t k = 0; k < d; ++k) e.push_back(unit_vector(d, k));
    std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) br[a][b] = bracket(g, e[a], e[b]);
    std::size_t bad = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (add(br[a][b], br[b][a]) != Vec(d)) ++bad;
        for (std::size_t c = 0; c < d; ++c) {
          Vec j = add(add(bracket(g, e[a], br[b][c]), bracket(g, e[b], br[c][a])), bracket(g, e[c], br[a][b]));
          if (j != Vec(d)) ++bad;
        }
      }
    o.expect(bad == 0, "so(" + std::to_string(n) + "): " + std::to_string(bad) + " Jacobi/antisymmetry failures");
    // tr((E_ij - E_ji)(E_kl - E_lk)) = -2 when the pairs agree.
    auto kill = killing_form(g);
    std::size_t kbad = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const long tr = pairs[a] == pairs[b] ? -2 : 0;
        if (kill.matrix()(a, b) != Scalar((n - 2) * tr)) ++kbad;
      }
    o.expect(kbad == 0, "so(" + std::to_string(n) + "): Killing form differs in " + std::to_string(kbad) + " entries");
    SymForm quarter(Scalar(-1, 4) * kill.matrix());
    bool inv = check_ad_invariance(g, quarter);
    for (std::size_t a = 0; a < d && inv; ++a)
      for (std::size_t b = 0; b < d && inv; ++b)
        for (std::size_t c = 0; c < d && inv; ++c)
          inv = quarter(br[a][b], e[c]) + quarter(e[b], br[a][c]) == 0;
    o.expect(inv, "so(" + std::to_string(n) + "): -B/4 not ad-invariant");
  }
  return o;
}

Outcome schur() {
  Outcome o;
  std::vector<Matrix> rot{fixtures::mat(2, 2, {0, -1, 1, 0})};
  const auto c2 = equivariant_maps(rot, rot, 2, 2).size();
  o.expect(c2 == 2 && division_type_from_dim(c2) == DivisionType::C, "rotation of R^2: commutant dimension " +
                                                                          std::to_string(c2));
  std::vector<Matrix> zero{fixtures::mat(1, 1, {0})};
  const auto c1 = equivariant_maps(zero, zero, 1, 1).size();
  o.expect(c1 == 1 && division_type_from_dim(c1) == DivisionType::R, "trivial action on R: commutant dimension " +
                                                                          std::to_string(c1));
  for (auto& [name, space] : all_spaces())
    for (std::size_t i = 0; i < space.summand_count(); ++i)
      for (std::size_t j = 0; j < space.summand_count(); ++j) {
        const auto k = space.intertwiners(i, j).dim();
        o.expect(k == 0 || k == 1 || k == 2 || k == 4, name + ": Hom dimension " + std::to_string(k));
      }
  return o;
}

std::multiset<std::size_t> dims_of(const TRootTable& t) {
  std::multiset<std::size_t> out;
  for (const auto& c : t.classes) out.insert(c.dim());
  return out;
}

Outcome troots_criterion() {
  Outcome o;
  auto a2 = troots(FlagSpec{generate_roots(RootType::A, 2), {}});
  o.expect(dims_of(a2) == std::multiset<std::size_t>{2, 2, 2}, "A2 with empty Pi_K");
  auto a2k = troots(FlagSpec{generate_roots(RootType::A, 2), {1}});
  o.expect(dims_of(a2k) == std::multiset<std::size_t>{4}, "A2 with Pi_K = {alpha2}");
  FlagSpec a3{generate_roots(RootType::A, 3), {1}};
  o.expect(dims_of(troots(a3)) == oracle::brute_force_dims(a3), "A3 with Pi_K = {alpha2}");
  Rng rng(kSeed);
  const RootType types[] = {RootType::A, RootType::B, RootType::C, RootType::D};
  for (std::size_t t = 0; t < kRandomRootSpecs; ++t) {
    const RootType type = types[rng.uniform_int(0, 3)];
    const int rank = static_cast<int>(rng.uniform_int(type == RootType::D ? 2 : 1, 6));
    FlagSpec spec{generate_roots(type, rank), {}};
    for (int i = 0; i < rank; ++i)
      if (rng.uniform_int(0, 1)) spec.pi_k.push_back(i);
    if (static_cast<int>(spec.pi_k.size()) == rank) spec.pi_k.pop_back();
    auto table = troots(spec);
    std::size_t rm = 0;
    for (const auto& r : spec.roots.positive_roots)
      if (!in_isotropy(spec, r)) ++rm;
    std::string label = std::string(1, to_char(type)) + std::to_string(rank);
    o.expect(table.m_dim() == 2 * rm, label + ": dimension sum");
    o.expect(dims_of(table) == oracle::brute_force_dims(spec), label + ": grouping");
  }
  return o;
}

Outcome classifier_agreement() {
  Outcome o;
  auto flag = load("su4_flag.json");
  auto mspace = load("su4_mspace.json");
  MSpacePair pair(flag, mspace);
  auto params = MetricParamSpace::build(mspace);
  o.notes.push_back("case " + std::to_string(static_cast<int>(pair.applicable_case())) + ", dim s = " +
                    std::to_string(pair.s().dim()));
  Rng rng(kSeed);
  const std::size_t d = mspace.algebra().dim();
  std::map<std::string, std::size_t> disagree;
  std::string example;
  std::size_t mixed_bad = 0;
  for (std::size_t t = 0; t < kClassifierVectors; ++t) {
    const char* kind = t % 3 == 0 ? "pure-s" : t % 3 == 1 ? "pure-m" : "mixed";
    Vec xs(d), xm(d);
    do {
      Vec a(d);
      for (auto& c : a) c = rng.uniform_int(-2, 2);
      // n = s + m orthogonally, so the s part is what m_flag leaves of n.
      xm = flag.m_part(a);
      xs = sub(mspace.m_part(a), xm);
      if (t % 3 == 0) xm = Vec(d);
      if (t % 3 == 1) xs = Vec(d);
    } while (add(xs, xm) == Vec(d) || (t % 3 == 2 && (xs == Vec(d) || xm == Vec(d))));
    const Vec x = add(xs, xm);
    const bool classifier = pair.classify(x).equigeodesic;
    const bool generic = equigeodesic_check(params, make_tangent(mspace, x)).result;
    if (t % 3 == 2 && generic) ++mixed_bad;
    if (classifier != generic) {
      ++disagree[kind];
      if (example.empty())
        example = show(mspace, x) + " (classifier " + (classifier ? "true" : "false") + ", generic " +
                  (generic ? "true" : "false") + ")";
    }
  }
  for (auto& [kind, count] : disagree) o.fail(std::to_string(count) + " " + kind + " disagreements");
  if (!example.empty()) o.notes.push_back("e.g. " + example);
  o.expect(mixed_bad == 0, std::to_string(mixed_bad) + " mixed vectors are equigeodesic");
  return o;
}

// Every report the C API produces for the shipped specs, concatenated.
std::string report_bundle() {
  std::string all;
  auto take = [&](const std::function<egeo_status(char**)>& call) {
    char* s = nullptr;
    const auto st = call(&s);
    all += "status " + std::to_string(st) + "\n";
    if (st != EGEO_OK) all += std::string(egeo_last_error()) + "\n";
    if (s) all += s;
    egeo_string_free(s);
  };
  const char* options = "{\"seed\": 20240229}";
  std::map<std::string, egeo_space*> spaces;
  for (const char* name : {"v2r4.json", "so5_so2.json", "so4_torus.json", "su3_flag.json", "su3_mspace.json",
                           "su4_flag.json", "su4_mspace.json"}) {
    std::ifstream in(std::filesystem::path(spec_dir) / name);
    std::stringstream ss;
    ss << in.rdbuf();
    egeo_space* sp = nullptr;
    all += std::string("== ") + name + "\n";
    take([&](char**) { return egeo_space_create(ss.str().c_str(), spec_dir.c_str(), options, &sp); });
    spaces[name] = sp;
    if (!sp) continue;
    take([&](char** s) { return egeo_decompose_report(sp, EGEO_FORMAT_JSON, s); });
    take([&](char** s) { return egeo_metrics_report(sp, "{\"samples\": 6, \"seed\": 20240229}", s); });
    take([&](char** s) { return egeo_equations_report(sp, EGEO_FORMAT_JSON, s); });
    // Each split basis vector and the all-ones vector.
    char* spec = nullptr;
    egeo_space_spec(sp, &spec);
    const json echoed = json::parse(spec);
    egeo_string_free(spec);
    std::size_t n = 0;
    for (const auto& sum : echoed.at("summands")) n += sum.size();
    json req{{"vectors", json::array()}, {"samples", 6}, {"seed", kSeed}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> v(n, 0);
      v[k] = 1;
      req["vectors"].push_back(v);
    }
    req["vectors"].push_back(std::vector<int>(n, 1));
    take([&](char** s) { return egeo_check_report(sp, req.dump().c_str(), s); });
  }
  const int pik[] = {2};
  take([&](char** s) { return egeo_troots_report("A", 3, pik, 1, EGEO_FORMAT_JSON, s); });
  json req{{"vectors", json::array({std::vector<int>(12, 1)})}};
  take([&](char** s) {
    return egeo_mspace_report(spaces["su4_flag.json"], spaces["su4_mspace.json"], req.dump().c_str(), s);
  });
  for (auto& [name, sp] : spaces) egeo_space_destroy(sp);
  return all;
}

Outcome determinism() {
  Outcome o;
  const auto a = report_bundle();
  const auto b = report_bundle();
  o.expect(a == b, "report bundles differ between runs");
  std::istringstream lines(a);
  std::string line, section;
  while (std::getline(lines, line)) {
    if (line.rfind("== ", 0) == 0) section = line.substr(3);
    if (line.rfind("status ", 0) == 0 && line != "status 0") {
      std::string why;
      std::getline(lines, why);
      o.fail(section + ": " + line + " (" + why + ")");
    }
  }
  o.notes.push_back(std::to_string(a.size()) + " bytes");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "V2(R4) end-to-end regression", 5, stiefel_regression},
      {2, "equation system equivalence", 5, equation_system},
      {3, "equigeodesic implies necessary condition", 60, necessary_implication},
      {4, "necessary condition suffices under the hypothesis", 60, sufficiency_equivalence},
      {5, "soundness against sampled metrics", 120, soundness},
      {6, "algebra kernel on so(n), n <= 8", 10, algebra_kernel},
      {7, "Schur commutant dimensions", 10, schur},
      {8, "t-roots", 5, troots_criterion},
      {9, "M-space classifier agreement", 60, classifier_agreement},
      {10, "determinism", 60, determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--report" && i + 1 < argc) {
      report_path = argv[++i];
    } else if (arg == "--specs" && i + 1 < argc) {
      spec_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--report FILE] [--specs DIR]\n";
      return 1;
    }
  }
  json report = json::object();
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    ran = true;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << secs << "s";
    if (secs > c.limit_seconds) out.fail("took " + timing.str() + ", limit " + std::to_string(int(c.limit_seconds)) + "s");
    all_pass = all_pass && out.pass;
    std::string detail;
    for (const auto& n : out.notes) detail += (detail.empty() ? "" : " | ") + n;
    std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << timing.str() << ")" << (detail.empty() ? "" : "  " + detail) << std::endl;
    report[std::to_string(c.id)] = {{"title", c.title}, {"pass", out.pass}, {"notes", out.notes}};
  }
  if (!ran) {
    std::cerr << "no such criterion\n";
    return 1;
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << report.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}
