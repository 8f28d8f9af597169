#include "equigeo/metrics.hpp"

#include "equigeo/error.hpp"
#include "equigeo/random.hpp"

namespace equigeo {

namespace {

const char* const kUnitLetters = "abcd";

void place_block(Matrix& target, std::size_t row0, std::size_t col0, const Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) target(row0 + r, col0 + c) = block(r, c);
}

std::vector<Matrix> h_action_on_m(const HomogeneousSpace& space) {
  std::vector<Matrix> out;
  for (const auto& z : space.h().basis()) {
    Matrix block(space.m_dim(), space.m_dim());
    for (std::size_t i = 0; i < space.summand_count(); ++i)
      place_block(block, space.offset(i), space.offset(i), space.ad_on_summand(z, i));
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace

MetricParamSpace MetricParamSpace::build(const HomogeneousSpace& space) {
  if (space.summand_count() == 0 && space.m_dim() != 0)
    throw Error(ErrorKind::Ordering, "summands must be computed before the metric parameter space");
  MetricParamSpace ps(space);
  const std::size_t n = space.m_dim();
  const std::size_t s = space.summand_count();
  ps.mu_count_ = s;
  for (std::size_t p = 0; p < s; ++p) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < space.summands()[p].dim(); ++k) d(space.offset(p) + k, space.offset(p) + k) = 1;
    ps.directions_.push_back({"mu" + std::to_string(p + 1), p, p, 0, std::move(d)});
  }
  for (const auto& cls : space.classes())
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        const std::size_t p = cls[a], q = cls[b];
        const auto& hom = space.intertwiners(p, q);
        ps.pairs_.push_back({p, q, hom.dtype, hom.dim()});
        const Matrix& t = space.isometry(p, q).base;
        const Matrix gp_inv = inverse(space.summand_gram(p));
        const Matrix gq = space.summand_gram(q);
        const auto& units = space.endomorphism_basis(p);
        for (std::size_t k = 0; k < units.size(); ++k) {
          Matrix sk = t * units[k];
          Matrix adj = gp_inv * sk.transpose() * gq;
          Matrix d(n, n);
          place_block(d, space.offset(q), space.offset(p), sk);
          place_block(d, space.offset(p), space.offset(q), adj);
          std::string label = std::string(1, kUnitLetters[k]) + std::to_string(p + 1) + std::to_string(q + 1);
          if (s >= 10) label = std::string(1, kUnitLetters[k]) + std::to_string(p + 1) + "_" + std::to_string(q + 1);
          ps.directions_.push_back({std::move(label), p, q, k, std::move(d)});
        }
      }
  return ps;
}

MetricOperator make_operator(const HomogeneousSpace& space, Matrix adapted) {
  MetricOperator op;
  op.minors = leading_principal_minors(space.adapted_gram() * adapted);
  op.positive_definite = true;
  for (const auto& m : op.minors)
    if (sgn(m) <= 0) op.positive_definite = false;
  op.matrix = std::move(adapted);
  return op;
}

MetricOperator MetricParamSpace::assemble(std::span<const Scalar> coords) const {
  if (coords.size() != dimension())
    throw Error(ErrorKind::Shape, "expected " + std::to_string(dimension()) + " metric coordinates, got " +
                                      std::to_string(coords.size()));
  Matrix a(space_->m_dim(), space_->m_dim());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) a = a + coords[k] * directions_[k].matrix;
  return make_operator(*space_, std::move(a));
}

bool is_invariant_operator(const HomogeneousSpace& space, const Matrix& adapted) {
  if (!(space.adapted_gram() * adapted).is_symmetric()) return false;
  for (const auto& ad : h_action_on_m(space))
    if (!(adapted * ad == ad * adapted)) return false;
  return true;
}

std::vector<Matrix> symmetric_commutant(const HomogeneousSpace& space) {
  return self_adjoint_commutant(h_action_on_m(space), space.adapted_gram());
}

std::vector<MetricSample> sample_valid_coords(const MetricParamSpace& params, std::size_t count, std::uint64_t seed,
                                              bool diagonal_only) {
  Rng rng(seed);
  std::vector<MetricSample> out;
  const std::size_t mu = params.mu_count();
  while (out.size() < count) {
    Vec coords(params.dimension());
    for (std::size_t k = 0; k < mu; ++k) coords[k] = rng.uniform_rational(Scalar(1), Scalar(2), 64);
    Vec off(params.dimension());
    for (std::size_t k = mu; k < params.dimension(); ++k)
      off[k] = diagonal_only ? Scalar(0) : rng.uniform_rational(Scalar(-1), Scalar(1), 64);
    Scalar eps = 1;
    for (;;) {
      Vec trial = coords;
      for (std::size_t k = mu; k < trial.size(); ++k) trial[k] = eps * off[k];
      auto op = params.assemble(trial);
      if (op.positive_definite) {
        out.push_back({std::move(trial), std::move(op)});
        break;
      }
      eps /= 2;
    }
  }
  return out;
}

std::vector<MetricOperator> sample_valid(const MetricParamSpace& params, std::size_t count, std::uint64_t seed,
                                         bool diagonal_only) {
  std::vector<MetricOperator> out;
  for (auto& s : sample_valid_coords(params, count, seed, diagonal_only)) out.push_back(std::move(s.op));
  return out;
}

}  // namespace equigeo
