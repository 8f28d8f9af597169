#include "equigeo/equigeo.hpp"

#include "equigeo/error.hpp"

namespace equigeo {

namespace {

void require_same_space(const HomogeneousSpace& space, const TangentVector& x) {
  if (x.ambient.size() != space.dim()) throw Error(ErrorKind::Shape, "tangent vector has the wrong length");
}

void require_operator(const HomogeneousSpace& space, const MetricOperator& a, bool allow_invalid) {
  if (a.matrix.rows() != space.m_dim() || a.matrix.cols() != space.m_dim())
    throw Error(ErrorKind::Shape, "metric operator does not act on m");
  if (!allow_invalid && !a.positive_definite) throw Error(ErrorKind::Domain, "operator is not positive-definite");
}

Vec m_bracket(const HomogeneousSpace& space, std::span<const Scalar> x, std::span<const Scalar> y) {
  return space.m_part(bracket(space.algebra(), x, y));
}

Verdict fail(std::string label, std::size_t index, Vec value) {
  return Verdict{false, Witness{std::move(label), index, std::move(value)}};
}

}  // namespace

Verdict geodesic_check(const HomogeneousSpace& space, const TangentVector& x, const MetricOperator& a,
                       bool allow_invalid) {
  require_same_space(space, x);
  require_operator(space, a, allow_invalid);
  Vec v = m_bracket(space, x.ambient, space.apply(a.matrix, x.m_part));
  if (is_zero(v)) return {};
  return fail("A", 0, std::move(v));
}

Verdict kv_check(const HomogeneousSpace& space, const TangentVector& x, const MetricOperator& a, bool allow_invalid) {
  require_same_space(space, x);
  require_operator(space, a, allow_invalid);
  Vec ax = space.apply(a.matrix, x.m_part);
  const auto& basis = space.m().basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Vec br = m_bracket(space, x.ambient, basis[k]);
    Scalar value = space.inner()(ax, br);
    if (sgn(value) != 0) return fail("m" + std::to_string(k + 1), k, std::move(br));
  }
  return {};
}

Verdict necessary_condition(const HomogeneousSpace& space, const TangentVector& x) {
  require_same_space(space, x);
  const std::size_t s = space.summand_count();
  const Vec coords = space.adapted_coords(x.ambient);
  // Coordinates of P_i X inside m_i.
  auto local = [&](std::size_t i) {
    Vec c(space.summands()[i].dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coords[space.offset(i) + k];
    return c;
  };
  auto embed = [&](std::size_t j, const Vec& c) {
    Vec out(space.dim());
    for (std::size_t k = 0; k < c.size(); ++k) axpy(c[k], space.summands()[j].basis()[k], out);
    return out;
  };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      if (!space.equivalent(i, j)) continue;
      const std::string label = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j) {
        Vec v = m_bracket(space, x.ambient, x.summand_parts[i]);
        if (!is_zero(v)) return fail(label, i * s + j, std::move(v));
        continue;
      }
      const ScaledMatrix& tij = space.isometry(i, j);
      const ScaledMatrix& tji = space.isometry(j, i);
      Vec ui = embed(j, tij.base * std::span<const Scalar>(local(i)));
      Vec uj = embed(i, tji.base * std::span<const Scalar>(local(j)));
      Vec bi = m_bracket(space, x.ambient, ui);
      Vec bj = m_bracket(space, x.ambient, uj);
      // sqrt(r1) bi + sqrt(r2) bj = 0. When r1 r2 = q^2 multiply by sqrt(r1);
      // otherwise the two square roots are independent over the rationals.
      const Scalar prod = tij.radicand * tji.radicand;
      if (is_perfect_square(prod)) {
        Vec v = add(scale(tij.radicand, bi), scale(exact_sqrt(prod), bj));
        if (!is_zero(v)) return fail(label, i * s + j, std::move(v));
      } else {
        if (!is_zero(bi)) return fail(label, i * s + j, std::move(bi));
        if (!is_zero(bj)) return fail(label, i * s + j, std::move(bj));
      }
    }
  return {};
}

Verdict equigeodesic_check(const MetricParamSpace& params, const TangentVector& x) {
  const auto& space = params.space();
  require_same_space(space, x);
  const auto& dirs = params.directions();
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    Vec v = m_bracket(space, x.ambient, space.apply(dirs[k].matrix, x.m_part));
    if (!is_zero(v)) return fail(dirs[k].label, k, std::move(v));
  }
  return {};
}

bool sufficiency_applies(const HomogeneousSpace& space) {
  for (const auto& cls : space.classes()) {
    if (cls.size() < 2) continue;
    for (std::size_t j : cls)
      if (space.intertwiners(j, j).dim() != 1) return false;
  }
  return true;
}

Scalar QuadraticForm::evaluate(std::span<const Scalar> x) const {
  Scalar total = 0;
  for (const auto& t : terms) total += t.c * x[t.a] * x[t.b];
  return total;
}

std::vector<Equation> equigeodesic_equations(const MetricParamSpace& params) {
  const auto& space = params.space();
  const auto& basis = space.m().basis();
  const std::size_t n = basis.size();
  std::vector<Equation> out;
  for (const auto& dir : params.directions()) {
    std::vector<Vec> images;
    for (const auto& b : basis) images.push_back(space.apply(dir.matrix, b));
    // coeffs[coord] collects the terms for one output coordinate.
    std::vector<QuadraticForm> forms(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Vec v = bracket(space.algebra(), basis[a], images[b]);
        if (a != b) v = add(v, bracket(space.algebra(), basis[b], images[a]));
        Vec c = space.split_coords(v);
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(c[k]) != 0) forms[k].terms.push_back({a, b, c[k]});
      }
    for (std::size_t k = 0; k < n; ++k)
      if (!forms[k].empty()) out.push_back({dir.label, k, std::move(forms[k])});
  }
  return out;
}

std::vector<std::string> variable_names(const HomogeneousSpace& space) {
  const auto& basis = space.m().basis();
  std::vector<std::string> names;
  for (const auto& v : basis) {
    std::size_t hit = v.size(), nonzero = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) {
        ++nonzero;
        hit = k;
      }
    if (nonzero != 1 || v[hit] != 1) {
      names.clear();
      for (std::size_t k = 0; k < basis.size(); ++k) names.push_back("y" + std::to_string(k + 1));
      return names;
    }
    names.push_back("x" + std::to_string(hit + 1));
  }
  return names;
}

std::string to_string(const QuadraticForm& form, const std::vector<std::string>& vars) {
  if (form.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : form.terms) {
    Scalar c = t.c;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += to_string(c) + "*";
    out += t.a == t.b ? vars[t.a] + "^2" : vars[t.a] + "*" + vars[t.b];
    first = false;
  }
  return out;
}

}  // namespace equigeo
