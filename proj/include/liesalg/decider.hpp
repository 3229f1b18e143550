#pragma once

#include "liesalg/minimality.hpp"

namespace liesalg {

struct CatalogEntry {
  std::string name;
  int dim = 0;
  int sig_pos = 0, sig_neg = 0;
  int centroid_dim = 1;
  int real_rank = 0;
  bool is_sp_n1_or_f4 = false;
  bool geometric_rank_one = false;  // allowed factor of the discrete criterion
};

// Shipped recognition table, keyed by (dim, Killing signature, centroid dim).
const std::vector<CatalogEntry>& factor_catalog();

struct SimpleFactor {
  Subspace space;  // in ambient coordinates
  Compactness compact = Compactness::Noncompact;
  Inertia killing_sig;
  int centroid_dim = 1;
  std::optional<CatalogEntry> entry;
};

struct DecomposedAlgebra {
  LieAlgebra g;
  Subspace radical;
  Subspace levi;
  std::vector<SimpleFactor> factors;
};

struct NotALeviComplement : ExactError {
  using ExactError::ExactError;
};

// Checks the supplied basis spans a Levi complement (subalgebra, Killing
// nondegenerate, complementary to the computed radical), then splits it into
// recognized simple factors.
DecomposedAlgebra verify_levi(const LieAlgebra& g, const Subspace& levi_span);

struct MDecomposition {
  bool m_decomposed = true;
  std::optional<std::pair<Vec, Vec>> witness;  // (factor element, radical element)
};

// M-decomposed iff every noncompact simple factor acts as zero on the radical.
MDecomposition is_m_decomposed(const DecomposedAlgebra& d);

std::optional<CatalogEntry> recognize_factor(const DecomposedAlgebra& d, size_t factor_index);

struct WitnessEmbedding {
  std::string model;  // "sl2xv_n" or "sl2xh_m"
  int module_dim = 0;  // n of v_n
  LieAlgebra model_algebra;
  Matrix basis;  // model.dim rows, each a g-coordinate vector
};

// Embedded sl2 x v_n or sl2 x h_{2n-1} certificate when [s_nc, r] != 0 and a
// rational sl2 triple is found within the triple-search bound.
std::optional<WitnessEmbedding> find_witness(const DecomposedAlgebra& d, int triple_bound = 2);

// Re-verifies: basis rows independent, brackets realize the model table,
// the witness radical lies inside rad(g).
bool verify_witness(const DecomposedAlgebra& d, const WitnessEmbedding& w);

enum class Answer { Yes, No, Undecided };

struct Verdict {
  std::string question;
  Answer answer = Answer::Undecided;
  std::string reason;
  std::vector<std::string> violations;
  std::optional<WitnessEmbedding> witness;
};

Verdict haagerup_verdict(const DecomposedAlgebra& d, int triple_bound = 2);
Verdict discrete_haagerup_criterion(const DecomposedAlgebra& d);

// Nilpotency-checked exp(ad x), used by the presentation-invariance tests.
Matrix inner_automorphism(const LieAlgebra& g, const Vec& x);

}  // namespace liesalg
