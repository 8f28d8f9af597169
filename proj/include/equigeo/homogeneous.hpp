#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equigeo/algebra.hpp"

namespace equigeo {

/// Type of the space of equivariant maps between two irreducible summands.
enum class DivisionType { Zero, R, C, H };

const char* to_string(DivisionType t) noexcept;
DivisionType division_type_from_dim(std::size_t dim);

/// Equivariant maps m_source -> m_target, each a (d_target x d_source) matrix
/// in the summand bases. The basis is canonical: the reduced echelon form of
/// the solution space in row-major coordinates.
struct IntertwinerSpace {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Matrix> basis_maps;
  DivisionType dtype = DivisionType::Zero;

  std::size_t dim() const noexcept { return basis_maps.size(); }
};

/// The map sqrt(radicand) * base. Isometric intertwiners are rational only up
/// to a square-root factor, which is carried symbolically.
struct ScaledMatrix {
  Matrix base;
  Scalar radicand = 1;

  /// Folds the factor into `base` when the radicand is a rational square.
  ScaledMatrix simplified() const;
  bool is_rational() const { return is_perfect_square(radicand); }
  /// Requires is_rational().
  Matrix value() const;
  ScaledMatrix inverse() const;
  friend ScaledMatrix compose(const ScaledMatrix& outer, const ScaledMatrix& inner);
};

struct DecomposeOptions {
  std::uint64_t seed = 20240229;
  double tolerance = 1e-9;
  int max_retries = 32;
};

/// Reductive homogeneous space g = h + m with an orthogonal decomposition of m
/// into irreducible ad(h)-invariant summands. Immutable once built.
///
/// Only infinitesimal invariance is tested, so the results describe the
/// connected isotropy group with Lie algebra h.
class HomogeneousSpace {
 public:
  /// Runs the reductive split, the isotropy decomposition (verifying `hint`
  /// when given), intertwiner solving and equivalence classification.
  static HomogeneousSpace build(LieAlgebra algebra, Subspace h, SymForm inner,
                                std::optional<std::vector<Subspace>> hint = std::nullopt,
                                const DecomposeOptions& options = {});

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Subspace& h() const noexcept { return h_; }
  const SymForm& inner() const noexcept { return inner_; }
  const Subspace& m() const noexcept { return m_; }
  const std::vector<Subspace>& summands() const noexcept { return summands_; }
  std::size_t summand_count() const noexcept { return summands_.size(); }
  std::size_t m_dim() const noexcept { return m_.dim(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  bool hinted() const noexcept { return hinted_; }

  /// Equivalence classes of summand indices, each sorted, ordered by first member.
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t summand) const { return class_index_.at(summand); }
  bool equivalent(std::size_t i, std::size_t j) const { return class_of(i) == class_of(j); }

  const IntertwinerSpace& intertwiners(std::size_t i, std::size_t j) const;
  /// Isometric intertwiner T_i^j (identity for i == j); requires i ~ j.
  const ScaledMatrix& isometry(std::size_t i, std::size_t j) const;
  /// Basis of End(m_i): the identity first, then the skew-adjoint units with
  /// the first nonzero entry in column-major order positive.
  const std::vector<Matrix>& endomorphism_basis(std::size_t i) const { return end_basis_.at(i); }

  /// Offset of summand i inside the adapted basis of m (summand bases concatenated).
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  const std::vector<Vec>& adapted_basis() const noexcept { return adapted_; }
  /// Gram matrix of the inner product on the adapted basis.
  const Matrix& adapted_gram() const noexcept { return adapted_gram_; }
  Matrix summand_gram(std::size_t i) const;
  /// Matrix of ad(z)|m_i in the basis of m_i.
  Matrix ad_on_summand(std::span<const Scalar> z, std::size_t i) const;

  Vec h_part(std::span<const Scalar> x) const;
  Vec m_part(std::span<const Scalar> x) const;
  Vec summand_part(std::span<const Scalar> x, std::size_t i) const;
  /// Coordinates of the m-component of x in the adapted basis.
  Vec adapted_coords(std::span<const Scalar> x) const;
  Vec from_adapted(std::span<const Scalar> coords) const;
  /// Coordinates of the m-component of x in the basis of m() (the split basis).
  Vec split_coords(std::span<const Scalar> x) const;
  Vec from_split(std::span<const Scalar> coords) const;
  /// Applies an operator on m, given in the adapted basis, to the m-part of x.
  Vec apply(const Matrix& adapted_op, std::span<const Scalar> x) const;

 private:
  explicit HomogeneousSpace(LieAlgebra algebra) : algebra_(std::move(algebra)) {}
  void finish(const DecomposeOptions& options);

  LieAlgebra algebra_;
  Subspace h_;
  SymForm inner_;
  Subspace m_;
  std::vector<Subspace> summands_;
  bool hinted_ = false;
  std::vector<std::size_t> offsets_;
  std::vector<Vec> adapted_;
  Matrix adapted_gram_;
  Matrix frame_inverse_;  // inverse of [h | adapted]
  Matrix split_inverse_;  // inverse of [h | m]
  std::vector<std::vector<IntertwinerSpace>> inter_;
  std::vector<std::vector<std::optional<ScaledMatrix>>> iso_;
  std::vector<std::vector<Matrix>> end_basis_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_index_;
};

/// Orthogonal complement of h under `inner`; verifies [h, m] in m.
/// Throws Error(Structural) if h is not a subalgebra, Error(InvariantFailure)
/// if reductivity fails.
Subspace reductive_split(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner);

/// Matrix M of ad(z) on an invariant subspace: [z, b_j] = sum_i M(i, j) b_i.
/// Throws Error(InvariantFailure) if a bracket leaves `sub`.
Matrix ad_matrix(const LieAlgebra& algebra, std::span<const Scalar> z, const Subspace& sub);

/// Solves C . source_action[k] = target_action[k] . C for all k; returns the
/// canonical basis of solutions as (d_target x d_source) matrices.
std::vector<Matrix> equivariant_maps(std::span<const Matrix> source_action, std::span<const Matrix> target_action,
                                     std::size_t d_source, std::size_t d_target);

/// Self-adjoint (w.r.t. the Gram matrix `gram`) part of the commutant of `action`.
std::vector<Matrix> self_adjoint_commutant(std::span<const Matrix> action, const Matrix& gram);

/// Irreducibility test: the self-adjoint commutant on `sub` is the scalars.
bool is_irreducible(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner, const Subspace& sub);

/// Decomposes m into irreducible, pairwise orthogonal ad(h)-invariant summands.
/// With a hint the summands are verified exactly and returned as given
/// (Error(DecompositionInvalid) naming the failed condition otherwise).
/// Without one, floating-point eigenvectors of commutant elements propose
/// invariant subspaces that are then recovered and checked exactly;
/// Error(UndeterminedDecomposition) after options.max_retries failed proposals.
std::vector<Subspace> decompose_isotropy(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner,
                                         const Subspace& m, const std::optional<std::vector<Subspace>>& hint,
                                         const DecomposeOptions& options = {});

/// Rescales a nonzero intertwiner m_i -> m_j to preserve the inner product.
ScaledMatrix normalize_intertwiner(const HomogeneousSpace& space, const Matrix& map, std::size_t i, std::size_t j);

/// Tangent vector with its cached projections.
struct TangentVector {
  Vec ambient;
  Vec h_part;
  Vec m_part;
  std::vector<Vec> summand_parts;
};

TangentVector make_tangent(const HomogeneousSpace& space, Vec ambient);

}  // namespace equigeo
