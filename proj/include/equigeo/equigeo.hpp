#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equigeo/metrics.hpp"

namespace equigeo {

/// Failing evidence attached to a negative verdict.
struct Witness {
  std::string label;  // direction label, basis vector name, or summand pair "(i,j)"
  std::size_t index = 0;
  Vec value;  // nonzero ambient vector that should have vanished
};

struct Verdict {
  bool result = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return result; }
};

/// [X, A X_m]_m == 0. Operators that are not positive-definite are rejected
/// with Error(Domain) unless allow_invalid is set.
Verdict geodesic_check(const HomogeneousSpace& space, const TangentVector& x, const MetricOperator& a,
                       bool allow_invalid = false);

/// (A X_m, [X, b]_m) == 0 for every basis vector b of m.
Verdict kv_check(const HomogeneousSpace& space, const TangentVector& x, const MetricOperator& a,
                 bool allow_invalid = false);

/// [X, T_i^j P_i X + T_j^i P_j X]_m == 0 for all equivalent i <= j.
Verdict necessary_condition(const HomogeneousSpace& space, const TangentVector& x);

/// [X, D X_m]_m == 0 for every direction D of the parameter space. The witness
/// names the first failing direction.
Verdict equigeodesic_check(const MetricParamSpace& params, const TangentVector& x);

/// End(m_j) is one-dimensional for every summand with an equivalent partner.
bool sufficiency_applies(const HomogeneousSpace& space);

/// Quadratic form sum c * x_a * x_b with a <= b, in the split basis of m.
struct QuadraticForm {
  struct Term {
    std::size_t a, b;
    Scalar c;
  };
  std::vector<Term> terms;

  bool empty() const noexcept { return terms.empty(); }
  Scalar evaluate(std::span<const Scalar> x) const;
};

struct Equation {
  std::string direction;
  std::size_t coordinate;  // index in the split basis of m
  QuadraticForm form;
};

/// Coordinates of [X, D X]_m for symbolic X = sum x_k b_k, one entry per
/// direction and nonzero coordinate.
std::vector<Equation> equigeodesic_equations(const MetricParamSpace& params);

/// Names of the coordinates of m: "x<k>" after the ambient index when every
/// basis vector of m is a coordinate vector, "y<k>" otherwise.
std::vector<std::string> variable_names(const HomogeneousSpace& space);

std::string to_string(const QuadraticForm& form, const std::vector<std::string>& vars);

}  // namespace equigeo
