#pragma once

#include <map>
#include <string>
#include <vector>

#include "equigeo/equigeo.hpp"

namespace equigeo {

enum class RootType { A, B, C, D };

RootType parse_root_type(const std::string& text);
char to_char(RootType t) noexcept;

using RootVector = std::vector<int>;  // coefficients over the simple roots

/// Classical root system in Bourbaki numbering. Positive roots are ordered
/// by height, then lexicographically.
struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<RootVector> positive_roots;

  std::vector<std::string> simple_root_labels() const;
  bool is_root(const RootVector& v) const;
};

/// D_2 and D_3 are accepted as aliases of A_1 x A_1 and A_3. Throws
/// Error(Domain) for other unsupported ranks.
RootSystem generate_roots(RootType type, int rank);

struct FlagSpec {
  RootSystem roots;
  std::vector<int> pi_k;  // zero-based simple-root indices spanning the isotropy
};

/// Roots supported on pi_k only.
bool in_isotropy(const FlagSpec& spec, const RootVector& root);

struct TRootClass {
  std::vector<int> xi;  // coefficients on the complementary simple roots
  std::vector<RootVector> roots;
  std::size_t dim() const noexcept { return 2 * roots.size(); }
};

struct TRootTable {
  std::vector<int> complementary;  // zero-based indices of the simple roots outside pi_k
  std::vector<TRootClass> classes;  // ordered by xi
  std::size_t m_dim() const;
};

/// Groups R_M^+ by restriction to the centre of the isotropy algebra: two
/// roots restrict equally iff their coefficients on the complementary simple
/// roots agree. Throws Error(EmptyComplement) when pi_k is everything.
TRootTable troots(const FlagSpec& spec);

enum class SplitStatus { Irreducible, Split, Unknown };
const char* to_string(SplitStatus s) noexcept;

/// Isotropy of the M-space: `lines` trivial lines from the centre plus the
/// flag summands with their expected behaviour under the semisimple part.
struct MSpaceShape {
  std::size_t lines = 0;
  struct Entry {
    std::vector<int> xi;
    std::size_t dim;
    SplitStatus status;
  };
  std::vector<Entry> summands;
};

MSpaceShape mspace_shape(const TRootTable& table);

enum class MSpaceCase { AllIrreducible = 1, LargeIrreducible = 2 };

struct MSpaceVerdict {
  MSpaceCase applied_case;
  bool equigeodesic = false;
  std::string reason;
};

/// Pairs a flag manifold G/K with its M-space G/K_1 built over the same algebra
/// and inner product; k_1 must be contained in k. The centre part s is the
/// complement of k_1 in k.
class MSpacePair {
 public:
  MSpacePair(const HomogeneousSpace& flag, const HomogeneousSpace& mspace);

  const HomogeneousSpace& flag() const noexcept { return *flag_; }
  const HomogeneousSpace& mspace() const noexcept { return *mspace_; }
  const Subspace& s() const noexcept { return s_; }
  /// For each flag summand, whether it stays irreducible under k_1.
  const std::vector<bool>& k1_irreducible() const noexcept { return k1_irreducible_; }
  /// Throws Error(NotApplicable) when neither case of the classifier applies.
  MSpaceCase applicable_case() const;

  /// Classifier verdict for X in n (the k_1 part of X is ignored).
  MSpaceVerdict classify(std::span<const Scalar> x) const;

 private:
  const HomogeneousSpace* flag_;
  const HomogeneousSpace* mspace_;
  Subspace s_;
  std::vector<bool> k1_irreducible_;
  MetricParamSpace flag_params_;
};

}  // namespace equigeo
