#include "equigeo/algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "equigeo/error.hpp"

namespace equigeo {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::span<const StructureConstant> constants,
                       std::optional<BuilderInfo> builder)
    : names_(std::move(basis_names)), builder_(std::move(builder)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorKind::InvalidDimension, "algebra must have positive dimension");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> entries;
  for (const auto& e : constants) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw Error(ErrorKind::Structural, "structure constant index out of range");
    if (sgn(e.c) == 0) continue;
    if (e.i == e.j) throw Error(ErrorKind::Structural, "nonzero [e_i, e_i] violates antisymmetry");
    for (auto [key, value] : {std::pair{std::tuple{e.i, e.j, e.k}, e.c}, std::pair{std::tuple{e.j, e.i, e.k}, Scalar(-e.c)}}) {
      auto [it, inserted] = entries.emplace(key, value);
      if (!inserted && it->second != value)
        throw Error(ErrorKind::Structural, "structure constants listed inconsistently (antisymmetry violated)");
    }
  }
  table_.assign(n * n, {});
  for (const auto& [key, value] : entries) {
    auto [i, j, k] = key;
    table_[i * n + j].push_back({k, value});
  }
  if (!satisfies_jacobi()) throw Error(ErrorKind::Structural, "structure constants violate the Jacobi identity");
}

Scalar LieAlgebra::structure(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : basis_bracket(i, j))
    if (t.k == k) return t.c;
  return 0;
}

std::vector<StructureConstant> LieAlgebra::nonzero_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& t : basis_bracket(i, j)) out.push_back({i, j, t.k, t.c});
  return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> z) const {
  if (z.size() != dim()) throw Error(ErrorKind::Shape, "ad: vector length does not match algebra dimension");
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(z[i]) == 0) continue;
    for (std::size_t l = 0; l < dim(); ++l)
      for (const auto& t : basis_bracket(i, l)) m(t.k, l) += z[i] * t.c;
  }
  return m;
}

bool LieAlgebra::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!basis_bracket(i, i).empty()) return false;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : basis_bracket(i, j))
        if (structure(j, i, t.k) != -t.c) return false;
  }
  return true;
}

bool LieAlgebra::satisfies_jacobi() const {
  const std::size_t n = dim();
  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c, Vec& acc) {
    for (const auto& t : basis_bracket(a, b))
      for (const auto& u : basis_bracket(t.k, c)) acc[u.k] += t.c * u.c;
  };
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        std::fill(acc.begin(), acc.end(), Scalar(0));
        add_nested(i, j, l, acc);
        add_nested(j, l, i, acc);
        add_nested(l, i, j, acc);
        if (!is_zero(acc)) return false;
      }
  return true;
}

SymForm::SymForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error(ErrorKind::Shape, "bilinear form matrix must be square and symmetric");
}

Scalar SymForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::Shape, "form argument length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0 && sgn(gram_(i, j)) != 0) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vec> basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_dim_) throw Error(ErrorKind::Shape, "subspace vector length mismatch");
  if (rank(basis_) != basis_.size()) throw Error(ErrorKind::Structural, "subspace basis vectors are linearly dependent");
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (is_zero(v)) return true;
  std::vector<Vec> ext = basis_;
  ext.emplace_back(v.begin(), v.end());
  return rank(ext) == basis_.size();
}

Vec bracket(const LieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = algebra.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::Shape, "bracket: vector length does not match algebra dimension");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& t : algebra.basis_bracket(i, j)) out[t.k] += xy * t.c;
    }
  }
  return out;
}

SymForm killing_form(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(algebra.ad(unit_vector(n, i)));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar tr = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(ads[i](k, l)) != 0 && sgn(ads[j](l, k)) != 0) tr += ads[i](k, l) * ads[j](l, k);
      b(i, j) = tr;
      b(j, i) = tr;
    }
  return SymForm(std::move(b));
}

bool check_ad_invariance(const LieAlgebra& algebra, const SymForm& form) {
  const std::size_t n = algebra.dim();
  if (form.dim() != n) throw Error(ErrorKind::Shape, "form dimension does not match algebra");
  for (std::size_t z = 0; z < n; ++z) {
    // F(ad_z x, y) + F(x, ad_z y) = 0  <=>  ad_z^T F + F ad_z = 0
    Matrix adz = algebra.ad(unit_vector(n, z));
    Matrix lhs = adz.transpose() * form.matrix() + form.matrix() * adz;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

namespace {

// Complex matrix with rational real and imaginary parts.
struct CMatrix {
  Matrix re, im;
  explicit CMatrix(std::size_t n) : re(n, n), im(n, n) {}
};

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.re.rows());
  Matrix rr = a.re * b.re - a.im * b.im;
  Matrix ii = a.re * b.im + a.im * b.re;
  Matrix rr2 = b.re * a.re - b.im * a.im;
  Matrix ii2 = b.re * a.im + b.im * a.re;
  out.re = rr - rr2;
  out.im = ii - ii2;
  return out;
}

std::string pair_name(const char* prefix, int i, int j, int n) {
  std::string sep = n >= 10 ? "_" : "";
  return prefix + std::to_string(i) + sep + std::to_string(j);
}

}  // namespace

LieAlgebra build_so(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "so(n) requires n >= 2");
  struct Gen {
    int i, j;  // zero-based, i > j
    std::string name;
  };
  std::vector<Gen> gens;
  if (n == 4) {
    const int order[6][2] = {{1, 0}, {3, 2}, {2, 0}, {3, 1}, {2, 1}, {3, 0}};
    for (int k = 0; k < 6; ++k) gens.push_back({order[k][0], order[k][1], "X" + std::to_string(k + 1)});
  } else {
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) gens.push_back({i, j, pair_name("e", i + 1, j + 1, n)});
  }
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Matrix> mats;
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix m(un, un);
    m(gens[g].i, gens[g].j) = 1;
    m(gens[g].j, gens[g].i) = -1;
    mats.push_back(std::move(m));
    index[{gens[g].i, gens[g].j}] = g;
  }
  std::vector<StructureConstant> constants;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Matrix c = mats[a] * mats[b] - mats[b] * mats[a];
      // Skew-symmetric result: the coefficient of E_ij - E_ji is entry (i, j).
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
          if (sgn(c(i, j)) != 0) constants.push_back({a, b, index[{i, j}], c(i, j)});
    }
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  return LieAlgebra(std::move(names), constants, BuilderInfo{"so", n});
}

LieAlgebra build_su(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "su(n) requires n >= 2");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<CMatrix> mats;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix a(un), s(un);
      a.re(i, j) = 1;
      a.re(j, i) = -1;
      s.im(i, j) = 1;
      s.im(j, i) = 1;
      mats.push_back(std::move(a));
      names.push_back(pair_name("A", i + 1, j + 1, n));
      mats.push_back(std::move(s));
      names.push_back(pair_name("S", i + 1, j + 1, n));
    }
  for (int k = 0; k + 1 < n; ++k) {
    CMatrix h(un);
    h.im(k, k) = 1;
    h.im(k + 1, k + 1) = -1;
    mats.push_back(std::move(h));
    names.push_back("H" + std::to_string(k + 1));
  }
  // Coordinates of a traceless skew-Hermitian matrix in the basis above.
  auto coords = [&](const CMatrix& m) {
    Vec c(mats.size());
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        c[idx++] = m.re(i, j);
        c[idx++] = m.im(i, j);
      }
    Scalar running = 0;
    for (int k = 0; k + 1 < n; ++k) {
      running += m.im(k, k);
      c[idx++] = running;
    }
    return c;
  };
  std::vector<StructureConstant> constants;
  for (std::size_t a = 0; a < mats.size(); ++a)
    for (std::size_t b = a + 1; b < mats.size(); ++b) {
      Vec c = coords(commutator(mats[a], mats[b]));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) constants.push_back({a, b, k, c[k]});
    }
  return LieAlgebra(std::move(names), constants, BuilderInfo{"su", n});
}

}  // namespace equigeo
