#pragma once

#include <string>
#include <vector>

#include "equigeo/homogeneous.hpp"

namespace fixtures {

using namespace equigeo;

inline Vec basis_vec(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vec v(n);
  for (auto [i, c] : entries) v[i] = c;
  return v;
}

inline SymForm scaled_killing(const LieAlgebra& g, Scalar factor) {
  return SymForm(factor * killing_form(g).matrix());
}

// Stiefel manifold SO(4)/SO(2); X1 spans h.
inline HomogeneousSpace v2r4(bool hinted = true) {
  auto g = build_so(4);
  Subspace h(6, {unit_vector(6, 0)});
  auto inner = scaled_killing(g, Scalar(-1, 4));
  std::optional<std::vector<Subspace>> hint;
  if (hinted)
    hint = std::vector<Subspace>{Subspace(6, {unit_vector(6, 1)}), Subspace(6, {unit_vector(6, 2), unit_vector(6, 4)}),
                                 Subspace(6, {unit_vector(6, 3), unit_vector(6, 5)})};
  return HomogeneousSpace::build(std::move(g), std::move(h), std::move(inner), hint);
}

inline Matrix mat(std::size_t r, std::size_t c, std::initializer_list<long> entries) {
  Vec flat;
  for (long e : entries) flat.emplace_back(e);
  return Matrix::from_flat(r, c, std::move(flat));
}

inline Vec vec(std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.emplace_back(e);
  return v;
}

inline HomogeneousSpace so5_so2() {
  auto g = build_so(5);
  Subspace h(10, {unit_vector(10, 0)});
  auto inner = scaled_killing(g, Scalar(-1, 6));
  return HomogeneousSpace::build(std::move(g), std::move(h), std::move(inner));
}

// Maximal torus span{X1, X2} of so(4).
inline HomogeneousSpace so4_torus() {
  auto g = build_so(4);
  Subspace h(6, {unit_vector(6, 0), unit_vector(6, 1)});
  auto inner = scaled_killing(g, Scalar(-1, 4));
  return HomogeneousSpace::build(std::move(g), std::move(h), std::move(inner));
}

// Trivial isotropy: every coordinate line is a summand.
inline HomogeneousSpace trivial_isotropy(int n) {
  auto g = build_so(n);
  const std::size_t d = g.dim();
  std::vector<Subspace> lines;
  for (std::size_t k = 0; k < d; ++k) lines.emplace_back(d, std::vector<Vec>{unit_vector(d, k)});
  auto inner = scaled_killing(g, Scalar(-1, 2 * (n - 2)));
  return HomogeneousSpace::build(std::move(g), Subspace(d, {}), std::move(inner), lines);
}

// Index of A_ij, S_ij (one-based i < j) and H_k in the su(n) basis.
inline std::size_t su_a(int n, int i, int j) {
  std::size_t idx = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b, idx += 2)
      if (a == i && b == j) return idx;
  return idx;
}
inline std::size_t su_s(int n, int i, int j) { return su_a(n, i, j) + 1; }
inline std::size_t su_h(int n, int k) { return static_cast<std::size_t>(n * (n - 1) + k - 1); }

inline Subspace span_of(std::size_t d, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> b;
  for (auto i : idx) b.push_back(unit_vector(d, i));
  return Subspace(d, b);
}

inline HomogeneousSpace su_space(int n, Subspace h) {
  auto g = build_su(n);
  auto inner = scaled_killing(g, Scalar(-1));
  return HomogeneousSpace::build(std::move(g), std::move(h), std::move(inner));
}

// SU(4)/S(U(1)xU(1)xU(2)) and its M-space SU(4)/SU(2).
inline HomogeneousSpace su4_flag() {
  return su_space(4, span_of(15, {su_a(4, 3, 4), su_s(4, 3, 4), su_h(4, 1), su_h(4, 2), su_h(4, 3)}));
}
inline HomogeneousSpace su4_mspace() { return su_space(4, span_of(15, {su_a(4, 3, 4), su_s(4, 3, 4), su_h(4, 3)})); }

// SU(3)/S(U(1)xU(2)) and its M-space SU(3)/SU(2).
inline HomogeneousSpace su3_flag() {
  return su_space(3, span_of(8, {su_a(3, 2, 3), su_s(3, 2, 3), su_h(3, 1), su_h(3, 2)}));
}
inline HomogeneousSpace su3_mspace() { return su_space(3, span_of(8, {su_a(3, 2, 3), su_s(3, 2, 3), su_h(3, 2)})); }

}  // namespace fixtures
