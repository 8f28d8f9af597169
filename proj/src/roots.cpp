#include "equigeo/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equigeo/error.hpp"

namespace equigeo {

RootType parse_root_type(const std::string& text) {
  if (text == "A" || text == "a") return RootType::A;
  if (text == "B" || text == "b") return RootType::B;
  if (text == "C" || text == "c") return RootType::C;
  if (text == "D" || text == "d") return RootType::D;
  throw Error(ErrorKind::Domain, "unsupported root system type '" + text + "' (expected A, B, C or D)");
}

char to_char(RootType t) noexcept {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

std::vector<std::string> RootSystem::simple_root_labels() const {
  std::vector<std::string> out;
  for (int i = 1; i <= rank; ++i) out.push_back("alpha" + std::to_string(i));
  return out;
}

bool RootSystem::is_root(const RootVector& v) const {
  RootVector neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](int c) { return -c; });
  for (const auto& r : positive_roots)
    if (r == v || r == neg) return true;
  return false;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(RootType type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case RootType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case RootType::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case RootType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
  }
  return a;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem generate_roots(RootType type, int rank) {
  if (rank < 1 || rank > 64) throw Error(ErrorKind::Domain, "root system rank must be between 1 and 64");
  if (type == RootType::D && rank < 2) throw Error(ErrorKind::Domain, "D_n requires rank >= 2");
  RootSystem rs{type, rank, cartan_matrix(type, rank), {}};
  std::set<RootVector> seen;
  std::vector<RootVector> layer;
  for (int i = 0; i < rank; ++i) {
    RootVector e(rank, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the largest integer with beta - p alpha_i a root.
  while (!layer.empty()) {
    for (const auto& r : layer) rs.positive_roots.push_back(r);
    std::vector<RootVector> next;
    for (const auto& beta : layer)
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        RootVector down = beta;
        for (;;) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += beta[j] * rs.cartan[j][i];
        if (p - pairing > 0) {
          RootVector up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                   [](const RootVector& a, const RootVector& b) { return height(a) < height(b); });
  return rs;
}

bool in_isotropy(const FlagSpec& spec, const RootVector& root) {
  for (int i = 0; i < spec.roots.rank; ++i)
    if (root[i] != 0 && std::find(spec.pi_k.begin(), spec.pi_k.end(), i) == spec.pi_k.end()) return false;
  return true;
}

std::size_t TRootTable::m_dim() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.dim();
  return total;
}

TRootTable troots(const FlagSpec& spec) {
  const int n = spec.roots.rank;
  std::set<int> pik;
  for (int i : spec.pi_k) {
    if (i < 0 || i >= n) throw Error(ErrorKind::Domain, "pi_K index out of range");
    if (!pik.insert(i).second) throw Error(ErrorKind::Domain, "pi_K index repeated");
  }
  TRootTable table;
  for (int i = 0; i < n; ++i)
    if (!pik.count(i)) table.complementary.push_back(i);
  if (table.complementary.empty())
    throw Error(ErrorKind::EmptyComplement, "pi_K contains every simple root; R_M is empty");
  std::map<std::vector<int>, std::vector<RootVector>> groups;
  for (const auto& r : spec.roots.positive_roots) {
    if (in_isotropy(spec, r)) continue;
    std::vector<int> xi;
    for (int i : table.complementary) xi.push_back(r[i]);
    groups[xi].push_back(r);
  }
  for (auto& [xi, roots] : groups) table.classes.push_back({xi, std::move(roots)});
  return table;
}

const char* to_string(SplitStatus s) noexcept {
  switch (s) {
    case SplitStatus::Irreducible: return "IRREDUCIBLE";
    case SplitStatus::Split: return "SPLIT";
    case SplitStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

MSpaceShape mspace_shape(const TRootTable& table) {
  MSpaceShape shape;
  shape.lines = table.complementary.size();
  for (const auto& c : table.classes)
    shape.summands.push_back({c.xi, c.dim(), c.dim() == 2 ? SplitStatus::Split : SplitStatus::Unknown});
  return shape;
}

namespace {

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  auto ca = a.nonzero_constants();
  auto cb = b.nonzero_constants();
  if (ca.size() != cb.size()) return false;
  for (std::size_t k = 0; k < ca.size(); ++k)
    if (ca[k].i != cb[k].i || ca[k].j != cb[k].j || ca[k].k != cb[k].k || ca[k].c != cb[k].c) return false;
  return true;
}

Subspace centre_part(const HomogeneousSpace& flag, const HomogeneousSpace& mspace) {
  const auto& k = flag.h();
  const auto& k1 = mspace.h();
  for (const auto& v : k1.basis())
    if (!k.contains(v)) throw Error(ErrorKind::Structural, "k_1 is not contained in k");
  Matrix eq(k1.dim(), k.dim());
  for (std::size_t a = 0; a < k1.dim(); ++a)
    for (std::size_t b = 0; b < k.dim(); ++b) eq(a, b) = flag.inner()(k1.basis()[a], k.basis()[b]);
  std::vector<Vec> basis;
  for (const auto& c : nullspace(eq)) {
    Vec v(flag.dim());
    for (std::size_t b = 0; b < k.dim(); ++b) axpy(c[b], k.basis()[b], v);
    basis.push_back(std::move(v));
  }
  return Subspace(flag.dim(), canonical_basis(basis, flag.dim()));
}

}  // namespace

MSpacePair::MSpacePair(const HomogeneousSpace& flag, const HomogeneousSpace& mspace)
    : flag_(&flag), mspace_(&mspace), flag_params_(MetricParamSpace::build(flag)) {
  if (!same_algebra(flag.algebra(), mspace.algebra()))
    throw Error(ErrorKind::Structural, "flag and M-space use different algebras");
  if (!(flag.inner().matrix() == mspace.inner().matrix()))
    throw Error(ErrorKind::Structural, "flag and M-space use different inner products");
  s_ = centre_part(flag, mspace);
  if (s_.dim() + flag.m_dim() != mspace.m_dim())
    throw Error(ErrorKind::InvariantFailure, "n is not the sum of s and m");
  for (const auto& sub : flag.summands())
    k1_irreducible_.push_back(is_irreducible(flag.algebra(), mspace.h(), flag.inner(), sub));
}

MSpaceCase MSpacePair::applicable_case() const {
  const auto& summands = flag_->summands();
  if (std::all_of(k1_irreducible_.begin(), k1_irreducible_.end(), [](bool b) { return b; }))
    return MSpaceCase::AllIrreducible;
  bool large = true;
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (k1_irreducible_[i] && summands[i].dim() <= 2) large = false;
  if (large) return MSpaceCase::LargeIrreducible;
  throw Error(ErrorKind::NotApplicable,
              "neither classifier hypothesis holds: some k_1-irreducible summand has dimension <= 2 and some "
              "summand is k_1-reducible");
}

MSpaceVerdict MSpacePair::classify(std::span<const Scalar> x) const {
  const MSpaceCase c = applicable_case();
  if (x.size() != flag_->dim()) throw Error(ErrorKind::Shape, "vector has the wrong length");
  const Vec xn = mspace_->m_part(x);
  const Vec xm = flag_->m_part(xn);
  const Vec xs = sub(xn, xm);
  if (is_zero(xm)) return {c, true, "X lies in s"};
  if (!is_zero(xs)) return {c, false, "X has nonzero s and m parts"};
  auto verdict = equigeodesic_check(flag_params_, make_tangent(*flag_, xm));
  if (!verdict) return {c, false, "X is not equigeodesic on the flag manifold"};
  if (c == MSpaceCase::LargeIrreducible) {
    for (std::size_t i = 0; i < flag_->summand_count(); ++i) {
      const auto& sub_i = flag_->summands()[i];
      if (sub_i.dim() != 2) continue;
      if (is_zero(flag_->summand_part(xm, i))) continue;
      for (const auto& b : sub_i.basis())
        if (!is_zero(mspace_->m_part(bracket(flag_->algebra(), xm, b))))
          return {c, false, "[X, m_" + std::to_string(i + 1) + "]_n is nonzero"};
    }
  }
  return {c, true, "X lies in m and is equigeodesic on the flag manifold"};
}

}  // namespace equigeo
