#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equigeo/homogeneous.hpp"

namespace equigeo {

/// Self-adjoint operator on m in the adapted basis, with its positivity verdict.
struct MetricOperator {
  Matrix matrix;
  /// Leading principal minors of G.A, where G is the adapted Gram matrix.
  std::vector<Scalar> minors;
  bool positive_definite = false;
};

/// One coordinate of the parameter space.
struct MetricDirection {
  std::string label;  // "mu2", "a23", "b23", ...
  std::size_t p = 0;  // summand (mu) or source summand (pair)
  std::size_t q = 0;  // equals p for mu directions
  std::size_t unit = 0;  // index into End(m_p) for pair directions
  Matrix matrix;
};

struct EquivalentPair {
  std::size_t p = 0, q = 0;
  DivisionType dtype = DivisionType::Zero;
  std::size_t dim = 0;
};

/// Linear family of all invariant metric operators on m. The pair coordinates
/// for (p, q) scale the maps T_p^q o E_k, with E_k the basis of End(m_p); when
/// T_p^q carries an irrational factor its rational part is used instead, which
/// rescales that coordinate and leaves the span unchanged.
class MetricParamSpace {
 public:
  static MetricParamSpace build(const HomogeneousSpace& space);

  const HomogeneousSpace& space() const noexcept { return *space_; }
  std::size_t dimension() const noexcept { return directions_.size(); }
  std::size_t mu_count() const noexcept { return mu_count_; }
  const std::vector<EquivalentPair>& pairs() const noexcept { return pairs_; }
  const std::vector<MetricDirection>& directions() const noexcept { return directions_; }

  /// Sum of coordinate * direction; positivity is checked, not required.
  MetricOperator assemble(std::span<const Scalar> coords) const;

 private:
  explicit MetricParamSpace(const HomogeneousSpace& space) : space_(&space) {}

  const HomogeneousSpace* space_;
  std::size_t mu_count_ = 0;
  std::vector<EquivalentPair> pairs_;
  std::vector<MetricDirection> directions_;
};

MetricOperator make_operator(const HomogeneousSpace& space, Matrix adapted);

/// Self-adjointness and commutation with ad(h) on m, checked exactly.
bool is_invariant_operator(const HomogeneousSpace& space, const Matrix& adapted);

/// Basis of all self-adjoint operators on m commuting with ad(h), computed
/// directly from the linear equations (no use of the summand structure).
std::vector<Matrix> symmetric_commutant(const HomogeneousSpace& space);

/// Positive-definite operators drawn with mu_p uniform on a grid in [1, 2]
/// and pair coordinates uniform in [-eps, eps], eps halved until positivity.
/// Deterministic in `seed`.
std::vector<MetricOperator> sample_valid(const MetricParamSpace& params, std::size_t count, std::uint64_t seed,
                                         bool diagonal_only = false);

/// Coordinates of a valid sample together with its operator.
struct MetricSample {
  Vec coords;
  MetricOperator op;
};
std::vector<MetricSample> sample_valid_coords(const MetricParamSpace& params, std::size_t count, std::uint64_t seed,
                                              bool diagonal_only = false);

}  // namespace equigeo
