#include "equigeo/homogeneous.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "equigeo/error.hpp"
#include "equigeo/random.hpp"

namespace equigeo {

const char* to_string(DivisionType t) noexcept {
  switch (t) {
    case DivisionType::Zero: return "ZERO";
    case DivisionType::R: return "R";
    case DivisionType::C: return "C";
    case DivisionType::H: return "H";
  }
  return "?";
}

DivisionType division_type_from_dim(std::size_t dim) {
  switch (dim) {
    case 0: return DivisionType::Zero;
    case 1: return DivisionType::R;
    case 2: return DivisionType::C;
    case 4: return DivisionType::H;
    default:
      throw Error(ErrorKind::InvariantFailure,
                  "intertwiner space of dimension " + std::to_string(dim) + " (expected 0, 1, 2 or 4)");
  }
}

ScaledMatrix ScaledMatrix::simplified() const {
  if (!is_rational() || radicand == 1) return *this;
  return {exact_sqrt(radicand) * base, Scalar(1)};
}

Matrix ScaledMatrix::value() const {
  if (!is_rational()) throw Error(ErrorKind::Domain, "scaled map carries an irrational factor");
  return exact_sqrt(radicand) * base;
}

ScaledMatrix ScaledMatrix::inverse() const {
  return ScaledMatrix{equigeo::inverse(base), Scalar(1 / radicand)}.simplified();
}

ScaledMatrix compose(const ScaledMatrix& outer, const ScaledMatrix& inner) {
  return ScaledMatrix{outer.base * inner.base, Scalar(outer.radicand * inner.radicand)}.simplified();
}

namespace {

Matrix gram_of(const SymForm& inner, std::span<const Vec> basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      g(a, b) = inner(basis[a], basis[b]);
      g(b, a) = g(a, b);
    }
  return g;
}

std::vector<Matrix> action_on(const LieAlgebra& algebra, const Subspace& h, const Subspace& sub) {
  std::vector<Matrix> out;
  for (const auto& z : h.basis()) out.push_back(ad_matrix(algebra, z, sub));
  return out;
}

Subspace from_coords(const Subspace& w, std::span<const Vec> coords) {
  std::vector<Vec> vecs;
  for (const auto& c : coords) {
    Vec v(w.ambient_dim());
    for (std::size_t k = 0; k < w.dim(); ++k) axpy(c[k], w.basis()[k], v);
    vecs.push_back(std::move(v));
  }
  return Subspace(w.ambient_dim(), canonical_basis(vecs, w.ambient_dim()));
}

// Orthogonal complement of u inside w.
Subspace complement_within(const SymForm& inner, const Subspace& w, const Subspace& u) {
  Matrix eq(u.dim(), w.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t k = 0; k < w.dim(); ++k) eq(a, k) = inner(u.basis()[a], w.basis()[k]);
  return from_coords(w, nullspace(eq));
}

// Smallest ad(h)-invariant subspace containing v.
Subspace invariant_closure(const LieAlgebra& algebra, const Subspace& h, const Vec& v) {
  std::vector<Vec> basis{v};
  for (std::size_t next = 0; next < basis.size(); ++next)
    for (const auto& z : h.basis()) {
      Vec w = bracket(algebra, z, basis[next]);
      std::vector<Vec> ext = basis;
      ext.push_back(w);
      if (rank(ext) > basis.size()) basis.push_back(std::move(w));
    }
  return Subspace(v.size(), canonical_basis(basis, v.size()));
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

struct SummandKey {
  std::size_t dim;
  std::size_t pivot;
  std::vector<Vec> canonical;
};

SummandKey key_of(const Subspace& s) {
  SummandKey k{s.dim(), s.ambient_dim(), s.canonical()};
  for (const auto& row : k.canonical)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (sgn(row[c]) != 0) {
        k.pivot = std::min(k.pivot, c);
        break;
      }
  return k;
}

bool key_less(const SummandKey& a, const SummandKey& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.pivot != b.pivot) return a.pivot < b.pivot;
  for (std::size_t r = 0; r < a.canonical.size(); ++r) {
    if (lex_less(a.canonical[r], b.canonical[r])) return true;
    if (lex_less(b.canonical[r], a.canonical[r])) return false;
  }
  return false;
}

// Floating-point eigenvectors of a self-adjoint commutant element propose an
// eigenvalue; the eigenspace is then recovered exactly as a kernel.
std::optional<Subspace> propose_from_element(const Subspace& w, const Matrix& element, const Matrix& gram,
                                             double tolerance) {
  const std::size_t d = w.dim();
  Matrix ge = gram * element;
  Eigen::MatrixXd a(d, d), b(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      a(r, c) = to_double(ge(r, c));
      b(r, c) = to_double(gram(r, c));
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const auto& values = solver.eigenvalues();
  std::size_t start = 0;
  while (start < d) {
    std::size_t end = start + 1;
    const double scale = std::max(1.0, std::fabs(values(start)));
    while (end < d && std::fabs(values(end) - values(start)) <= tolerance * scale * 1e3) ++end;
    const std::size_t cluster = end - start;
    double mean = 0;
    for (std::size_t i = start; i < end; ++i) mean += values(i);
    mean /= static_cast<double>(cluster);
    Scalar lambda = rationalize(mean, 1000000);
    if (std::fabs(to_double(lambda) - mean) <= 1e-6 * scale) {
      Matrix shifted = element - lambda * Matrix::identity(d);
      auto kernel = nullspace(shifted);
      if (!kernel.empty() && kernel.size() < d) return from_coords(w, kernel);
    }
    start = end;
  }
  return std::nullopt;
}

class Decomposer {
 public:
  Decomposer(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner, const DecomposeOptions& options)
      : algebra_(algebra), h_(h), inner_(inner), options_(options), rng_(options.seed) {}

  void split(const Subspace& w, std::vector<Subspace>& out) {
    if (w.dim() == 0) return;
    auto action = action_on(algebra_, h_, w);
    Matrix gram = gram_of(inner_, w.basis());
    auto sa = self_adjoint_commutant(action, gram);
    if (sa.size() == 1) {
      out.push_back(w);
      return;
    }
    auto u = find_invariant(w, sa, gram);
    if (!u) throw Error(ErrorKind::UndeterminedDecomposition,
                        "no invariant subspace found in a reducible block of dimension " + std::to_string(w.dim()));
    // Exact post-check of the proposal before recursing.
    (void)action_on(algebra_, h_, *u);
    split(*u, out);
    split(complement_within(inner_, w, *u), out);
  }

 private:
  std::optional<Subspace> find_invariant(const Subspace& w, const std::vector<Matrix>& sa, const Matrix& gram) {
    for (const auto& v : w.basis()) {
      auto closure = invariant_closure(algebra_, h_, v);
      if (closure.dim() < w.dim()) return closure;
    }
    for (const auto& element : sa) {
      if (auto u = propose_from_element(w, element, gram, options_.tolerance)) return u;
    }
    for (int attempt = 0; attempt < options_.max_retries; ++attempt) {
      Matrix element(w.dim(), w.dim());
      for (const auto& basis_elem : sa) {
        Scalar coeff = rng_.uniform_rational(Scalar(-1), Scalar(1), 16);
        element = element + coeff * basis_elem;
      }
      if (auto u = propose_from_element(w, element, gram, options_.tolerance)) return u;
    }
    return std::nullopt;
  }

  const LieAlgebra& algebra_;
  const Subspace& h_;
  const SymForm& inner_;
  DecomposeOptions options_;
  Rng rng_;
};

void verify_hint(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner, const Subspace& m,
                 const std::vector<Subspace>& hint) {
  auto fail = [](std::size_t k, const std::string& what) {
    throw Error(ErrorKind::DecompositionInvalid, "hinted summand " + std::to_string(k + 1) + " " + what);
  };
  std::size_t total = 0;
  for (std::size_t k = 0; k < hint.size(); ++k) {
    const auto& s = hint[k];
    if (s.ambient_dim() != algebra.dim()) fail(k, "has the wrong ambient dimension");
    if (s.dim() == 0) fail(k, "is zero-dimensional");
    for (const auto& v : s.basis())
      if (!m.contains(v)) fail(k, "is not contained in m");
    try {
      (void)action_on(algebra, h, s);
    } catch (const Error&) {
      fail(k, "is not ad(h)-invariant");
    }
    for (std::size_t l = 0; l < k; ++l)
      for (const auto& a : s.basis())
        for (const auto& b : hint[l].basis())
          if (sgn(inner(a, b)) != 0) fail(k, "is not orthogonal to summand " + std::to_string(l + 1));
    if (!is_irreducible(algebra, h, inner, s)) fail(k, "is reducible");
    total += s.dim();
  }
  if (total != m.dim())
    throw Error(ErrorKind::DecompositionInvalid, "hinted summands have total dimension " + std::to_string(total) +
                                                     " but m has dimension " + std::to_string(m.dim()));
}

// Makes the first nonzero entry in column-major order positive.
Matrix sign_normalized(Matrix m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) return sgn(m(r, c)) < 0 ? Scalar(-1) * m : m;
  return m;
}

}  // namespace

Matrix ad_matrix(const LieAlgebra& algebra, std::span<const Scalar> z, const Subspace& sub) {
  if (z.size() != algebra.dim() || sub.ambient_dim() != algebra.dim())
    throw Error(ErrorKind::Shape, "ad_matrix: dimension mismatch");
  SpanCoordinates coords(sub.basis(), sub.ambient_dim());
  Matrix m(sub.dim(), sub.dim());
  for (std::size_t j = 0; j < sub.dim(); ++j) {
    auto c = coords.coords(bracket(algebra, z, sub.basis()[j]));
    if (!c) throw Error(ErrorKind::InvariantFailure, "bracket leaves the subspace (not ad-invariant)");
    for (std::size_t i = 0; i < sub.dim(); ++i) m(i, j) = (*c)[i];
  }
  return m;
}

std::vector<Matrix> equivariant_maps(std::span<const Matrix> source_action, std::span<const Matrix> target_action,
                                     std::size_t d_source, std::size_t d_target) {
  const std::size_t unknowns = d_source * d_target;
  Matrix eq(source_action.size() * unknowns, unknowns);
  for (std::size_t k = 0; k < source_action.size(); ++k) {
    const auto& s = source_action[k];
    const auto& t = target_action[k];
    for (std::size_t r = 0; r < d_target; ++r)
      for (std::size_t c = 0; c < d_source; ++c) {
        const std::size_t row = k * unknowns + r * d_source + c;
        // (C S)(r, c) - (T C)(r, c)
        for (std::size_t l = 0; l < d_source; ++l) eq(row, r * d_source + l) += s(l, c);
        for (std::size_t l = 0; l < d_target; ++l) eq(row, l * d_source + c) -= t(r, l);
      }
  }
  std::vector<Matrix> out;
  for (auto& v : nullspace(eq)) out.push_back(Matrix::from_flat(d_target, d_source, std::move(v)));
  return out;
}

namespace {

std::vector<Matrix> adjoint_constrained_commutant(std::span<const Matrix> action, const Matrix& gram, int sign) {
  const std::size_t d = gram.rows();
  const std::size_t unknowns = d * d;
  Matrix eq(action.size() * unknowns + unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& a : action)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++row) {
        for (std::size_t l = 0; l < d; ++l) eq(row, r * d + l) += a(l, c);
        for (std::size_t l = 0; l < d; ++l) eq(row, l * d + c) -= a(r, l);
      }
  // (G C)(r, c) - sign * (G C)(c, r) = 0
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c, ++row) {
      for (std::size_t k = 0; k < d; ++k) eq(row, k * d + c) += gram(r, k);
      for (std::size_t k = 0; k < d; ++k) eq(row, k * d + r) -= Scalar(sign) * gram(c, k);
    }
  std::vector<Matrix> out;
  for (auto& v : nullspace(eq)) out.push_back(Matrix::from_flat(d, d, std::move(v)));
  return out;
}

}  // namespace

std::vector<Matrix> self_adjoint_commutant(std::span<const Matrix> action, const Matrix& gram) {
  return adjoint_constrained_commutant(action, gram, +1);
}

bool is_irreducible(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner, const Subspace& sub) {
  auto action = action_on(algebra, h, sub);
  return self_adjoint_commutant(action, gram_of(inner, sub.basis())).size() == 1;
}

Subspace reductive_split(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner) {
  const std::size_t n = algebra.dim();
  if (h.ambient_dim() != n || inner.dim() != n) throw Error(ErrorKind::Shape, "reductive_split: dimension mismatch");
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      if (!h.contains(bracket(algebra, h.basis()[a], h.basis()[b])))
        throw Error(ErrorKind::Structural, "h is not a subalgebra");
  Matrix eq(h.dim(), n);
  for (std::size_t a = 0; a < h.dim(); ++a) {
    Vec row = inner.matrix() * std::span<const Scalar>(h.basis()[a]);
    for (std::size_t k = 0; k < n; ++k) eq(a, k) = row[k];
  }
  Subspace m(n, nullspace(eq));
  if (m.dim() + h.dim() != n) throw Error(ErrorKind::InvariantFailure, "inner form is degenerate on h");
  for (const auto& z : h.basis())
    for (const auto& v : m.basis())
      if (!m.contains(bracket(algebra, z, v)))
        throw Error(ErrorKind::InvariantFailure, "[h, m] is not contained in m; the inner form is not Ad-invariant");
  return m;
}

std::vector<Subspace> decompose_isotropy(const LieAlgebra& algebra, const Subspace& h, const SymForm& inner,
                                         const Subspace& m, const std::optional<std::vector<Subspace>>& hint,
                                         const DecomposeOptions& options) {
  std::vector<Subspace> out;
  if (hint) {
    verify_hint(algebra, h, inner, m, *hint);
    out = *hint;
  } else {
    Decomposer(algebra, h, inner, options).split(m, out);
  }
  std::vector<std::pair<SummandKey, Subspace>> keyed;
  for (auto& s : out) keyed.emplace_back(key_of(s), std::move(s));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
  out.clear();
  for (auto& [k, s] : keyed) out.push_back(std::move(s));
  return out;
}

ScaledMatrix normalize_intertwiner(const HomogeneousSpace& space, const Matrix& map, std::size_t i, std::size_t j) {
  if (map.is_zero()) throw Error(ErrorKind::Degenerate, "cannot normalize the zero intertwiner");
  Matrix gi = space.summand_gram(i);
  Matrix gj = space.summand_gram(j);
  Vec u = unit_vector(gi.rows(), 0);
  Vec tu = map * std::span<const Scalar>(u);
  Scalar uu = gi(0, 0);
  Scalar tutu = 0;
  for (std::size_t a = 0; a < tu.size(); ++a)
    for (std::size_t b = 0; b < tu.size(); ++b) tutu += tu[a] * gj(a, b) * tu[b];
  if (sgn(tutu) == 0) throw Error(ErrorKind::Degenerate, "intertwiner annihilates a basis vector");
  Scalar a = uu / tutu;
  if (a * (map.transpose() * gj * map) != gi)
    throw Error(ErrorKind::InvariantFailure, "intertwiner is not a multiple of an isometry");
  return ScaledMatrix{map, a}.simplified();
}

HomogeneousSpace HomogeneousSpace::build(LieAlgebra algebra, Subspace h, SymForm inner,
                                         std::optional<std::vector<Subspace>> hint, const DecomposeOptions& options) {
  if (inner.dim() != algebra.dim()) throw Error(ErrorKind::Shape, "inner product dimension does not match algebra");
  if (!inner.is_positive_definite()) throw Error(ErrorKind::Structural, "inner product is not positive-definite");
  if (!check_ad_invariance(algebra, inner)) throw Error(ErrorKind::InvariantFailure, "inner product is not Ad-invariant");
  HomogeneousSpace space(std::move(algebra));
  space.h_ = std::move(h);
  space.inner_ = std::move(inner);
  space.m_ = reductive_split(space.algebra_, space.h_, space.inner_);
  space.hinted_ = hint.has_value();
  space.summands_ = decompose_isotropy(space.algebra_, space.h_, space.inner_, space.m_, hint, options);
  space.finish(options);
  return space;
}

void HomogeneousSpace::finish(const DecomposeOptions&) {
  const std::size_t n = dim();
  const std::size_t s = summands_.size();
  offsets_.clear();
  adapted_.clear();
  for (const auto& sub : summands_) {
    offsets_.push_back(adapted_.size());
    for (const auto& v : sub.basis()) adapted_.push_back(v);
  }
  adapted_gram_ = gram_of(inner_, adapted_);
  std::vector<Vec> frame = h_.basis();
  frame.insert(frame.end(), adapted_.begin(), adapted_.end());
  frame_inverse_ = equigeo::inverse(Matrix::from_columns(frame, n));
  std::vector<Vec> split = h_.basis();
  split.insert(split.end(), m_.basis().begin(), m_.basis().end());
  split_inverse_ = equigeo::inverse(Matrix::from_columns(split, n));

  std::vector<std::vector<Matrix>> actions;
  for (const auto& sub : summands_) actions.push_back(action_on(algebra_, h_, sub));

  inter_.assign(s, std::vector<IntertwinerSpace>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      auto& sp = inter_[i][j];
      sp.source = i;
      sp.target = j;
      sp.basis_maps = equivariant_maps(actions[i], actions[j], summands_[i].dim(), summands_[j].dim());
      sp.dtype = division_type_from_dim(sp.basis_maps.size());
    }

  // Union-find over nonzero intertwiner spaces.
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (inter_[i][j].dim() > 0) parent[find(j)] = find(i);
  classes_.clear();
  class_index_.assign(s, 0);
  std::vector<std::optional<std::size_t>> root_class(s);
  for (std::size_t i = 0; i < s; ++i) {
    auto r = find(i);
    if (!root_class[r]) {
      root_class[r] = classes_.size();
      classes_.emplace_back();
    }
    classes_[*root_class[r]].push_back(i);
    class_index_[i] = *root_class[r];
  }

  iso_.assign(s, std::vector<std::optional<ScaledMatrix>>(s));
  for (const auto& cls : classes_) {
    const std::size_t first = cls.front();
    for (std::size_t k : cls) {
      if (k == first) {
        iso_[first][first] = ScaledMatrix{Matrix::identity(summands_[first].dim()), Scalar(1)};
        continue;
      }
      const auto& sp = inter_[first][k];
      if (sp.dim() == 0) throw Error(ErrorKind::InvariantFailure, "equivalence classes are not transitive");
      iso_[first][k] = normalize_intertwiner(*this, sp.basis_maps.front(), first, k);
    }
    for (std::size_t l : cls)
      for (std::size_t k : cls) {
        if (l == first) continue;
        iso_[l][k] = compose(*iso_[first][k], iso_[first][l]->inverse());
      }
  }

  end_basis_.assign(s, {});
  for (std::size_t i = 0; i < s; ++i) {
    auto skew = adjoint_constrained_commutant(actions[i], summand_gram(i), -1);
    auto& basis = end_basis_[i];
    basis.push_back(Matrix::identity(summands_[i].dim()));
    for (auto& m : skew) basis.push_back(sign_normalized(std::move(m)));
    if (basis.size() != inter_[i][i].dim())
      throw Error(ErrorKind::InvariantFailure, "endomorphism algebra of summand " + std::to_string(i + 1) +
                                                   " is not a division algebra with scalar self-adjoint part");
  }
}

const IntertwinerSpace& HomogeneousSpace::intertwiners(std::size_t i, std::size_t j) const {
  if (i >= summands_.size() || j >= summands_.size()) throw Error(ErrorKind::Shape, "summand index out of range");
  return inter_[i][j];
}

const ScaledMatrix& HomogeneousSpace::isometry(std::size_t i, std::size_t j) const {
  if (i >= summands_.size() || j >= summands_.size()) throw Error(ErrorKind::Shape, "summand index out of range");
  if (!iso_[i][j]) throw Error(ErrorKind::Domain, "summands are not equivalent");
  return *iso_[i][j];
}

Matrix HomogeneousSpace::summand_gram(std::size_t i) const { return gram_of(inner_, summands_.at(i).basis()); }

Matrix HomogeneousSpace::ad_on_summand(std::span<const Scalar> z, std::size_t i) const {
  return ad_matrix(algebra_, z, summands_.at(i));
}

Vec HomogeneousSpace::h_part(std::span<const Scalar> x) const {
  Vec c = frame_inverse_ * x;
  Vec out(dim());
  for (std::size_t a = 0; a < h_.dim(); ++a) axpy(c[a], h_.basis()[a], out);
  return out;
}

Vec HomogeneousSpace::m_part(std::span<const Scalar> x) const { return sub(x, h_part(x)); }

Vec HomogeneousSpace::summand_part(std::span<const Scalar> x, std::size_t i) const {
  Vec c = frame_inverse_ * x;
  Vec out(dim());
  const std::size_t base = h_.dim() + offsets_.at(i);
  for (std::size_t k = 0; k < summands_[i].dim(); ++k) axpy(c[base + k], summands_[i].basis()[k], out);
  return out;
}

Vec HomogeneousSpace::adapted_coords(std::span<const Scalar> x) const {
  Vec c = frame_inverse_ * x;
  return Vec(c.begin() + static_cast<std::ptrdiff_t>(h_.dim()), c.end());
}

Vec HomogeneousSpace::from_adapted(std::span<const Scalar> coords) const {
  if (coords.size() != m_dim()) throw Error(ErrorKind::Shape, "adapted coordinate vector has the wrong length");
  Vec out(dim());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(coords[k], adapted_[k], out);
  return out;
}

Vec HomogeneousSpace::split_coords(std::span<const Scalar> x) const {
  Vec c = split_inverse_ * x;
  return Vec(c.begin() + static_cast<std::ptrdiff_t>(h_.dim()), c.end());
}

Vec HomogeneousSpace::from_split(std::span<const Scalar> coords) const {
  if (coords.size() != m_dim()) throw Error(ErrorKind::Shape, "m-coordinate vector has the wrong length");
  Vec out(dim());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(coords[k], m_.basis()[k], out);
  return out;
}

Vec HomogeneousSpace::apply(const Matrix& adapted_op, std::span<const Scalar> x) const {
  if (adapted_op.rows() != m_dim() || adapted_op.cols() != m_dim())
    throw Error(ErrorKind::Shape, "operator does not act on m");
  Vec c = adapted_coords(x);
  return from_adapted(adapted_op * std::span<const Scalar>(c));
}

TangentVector make_tangent(const HomogeneousSpace& space, Vec ambient) {
  if (ambient.size() != space.dim()) throw Error(ErrorKind::Shape, "tangent vector has the wrong length");
  TangentVector t;
  t.h_part = space.h_part(ambient);
  t.m_part = sub(ambient, t.h_part);
  for (std::size_t i = 0; i < space.summand_count(); ++i) t.summand_parts.push_back(space.summand_part(ambient, i));
  t.ambient = std::move(ambient);
  return t;
}

}  // namespace equigeo
