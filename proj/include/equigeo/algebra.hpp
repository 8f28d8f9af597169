#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equigeo/linalg.hpp"

namespace equigeo {

/// Nonzero coefficient of a basis bracket: [e_i, e_j] = sum c * e_k.
struct StructureTerm {
  std::size_t k;
  Scalar c;
};

/// Nonzero structure constant as supplied by a user or a builder.
struct StructureConstant {
  std::size_t i, j, k;
  Scalar c;
};

/// Records how an algebra was produced so reports can echo it compactly.
struct BuilderInfo {
  std::string name;  // "so" or "su"
  int n = 0;
};

/// Finite-dimensional real Lie algebra with rational structure constants.
///
/// Brackets of basis pairs are stored as sparse coefficient lists; classical
/// matrix algebras have O(dim) nonzero terms per pair.
class LieAlgebra {
 public:
  /// Applies antisymmetric completion to `constants` and validates the
  /// result (antisymmetry and Jacobi). Throws Error(Structural) on failure.
  LieAlgebra(std::vector<std::string> basis_names, std::span<const StructureConstant> constants,
             std::optional<BuilderInfo> builder = std::nullopt);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::optional<BuilderInfo>& builder() const noexcept { return builder_; }

  const std::vector<StructureTerm>& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Scalar structure(std::size_t i, std::size_t j, std::size_t k) const;

  /// All nonzero c[i][j][k] with i < j.
  std::vector<StructureConstant> nonzero_constants() const;

  /// Matrix of ad(z) in the algebra basis.
  Matrix ad(std::span<const Scalar> z) const;

  bool is_antisymmetric() const;
  bool satisfies_jacobi() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<StructureTerm>> table_;
  std::optional<BuilderInfo> builder_;
};

/// Symmetric bilinear form on an algebra, stored as its Gram matrix.
class SymForm {
 public:
  SymForm() = default;
  /// Throws Error(Shape) if the matrix is not square and symmetric.
  explicit SymForm(Matrix gram);

  const Matrix& matrix() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool is_positive_definite() const { return equigeo::is_positive_definite(gram_); }

 private:
  Matrix gram_;
};

/// Linearly independent family spanning a subspace of a fixed ambient space.
class Subspace {
 public:
  Subspace() = default;
  /// Throws Error(Structural) when the vectors are dependent.
  Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(std::span<const Scalar> v) const;
  /// Canonical (RREF) basis; equal subspaces have equal canonical bases.
  std::vector<Vec> canonical() const { return canonical_basis(basis_, ambient_dim_); }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

/// so(n) with basis E_ij - E_ji (i > j) in lexicographic (i, j) order. For
/// n = 4 the basis is X_1..X_6 in the order
/// X_1 = E21-E12, X_2 = E43-E34, X_3 = E31-E13, X_4 = E42-E24, X_5 = E32-E23,
/// X_6 = E41-E14.
LieAlgebra build_so(int n);

/// su(n) with basis A_ij = E_ij - E_ji, S_ij = i(E_ij + E_ji) for i < j,
/// followed by H_k = i(E_kk - E_k+1,k+1).
LieAlgebra build_su(int n);

Vec bracket(const LieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y);

/// B(e_i, e_j) = tr(ad e_i . ad e_j).
SymForm killing_form(const LieAlgebra& algebra);

/// Infinitesimal Ad-invariance: F([z,x],y) + F(x,[z,y]) = 0 on all basis triples.
bool check_ad_invariance(const LieAlgebra& algebra, const SymForm& form);

}  // namespace equigeo
