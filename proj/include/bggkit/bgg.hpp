#pragma once

#include <map>
#include <optional>
#include <string>

#include "bggkit/errors.hpp"
#include "bggkit/profile.hpp"

namespace bggkit {

/// Rows and columns indexed by weights; missing entries are zero.
using LaurentMatrix = std::map<Weight, std::map<Weight, LaurentPoly>>;

LaurentPoly entry(const LaurentMatrix& m, Weight row, Weight col);

/// Carries the part of the character that could not be written in the simple basis.
class DecompositionError : public InconsistencyError {
 public:
  DecompositionError(const std::string& what, GradedChar residual)
      : InconsistencyError(what), residual_(std::move(residual)) {}
  const GradedChar& residual() const { return residual_; }

 private:
  GradedChar residual_;
};

/// Leading-term elimination from the top degree down.
std::map<Weight, LaurentPoly> decompose_into_simples(const GradedChar& chi, const SimpleTable& table);

enum class VermaClass { simple_projective, non_simple };
std::string to_string(VermaClass c);

struct BGGReport {
  NicholsProfile profile;
  /// false when built from ungraded [M:L] data; every entry is then a constant.
  bool graded = true;
  std::optional<SimpleTable> table;
  std::optional<LowestData> lowest;

  LaurentMatrix verma_simple;        // [lambda][mu] = p_{M(lambda),L(mu)}
  LaurentMatrix projective_verma;    // [mu][lambda] = p_{P(mu),M(lambda)}
  LaurentMatrix projective_coverma;  // [mu][lambda] = p_{P(mu),W(lambda)}
  std::map<Weight, GradedChar> projective_chars;
  LaurentMatrix cartan;  // [mu][nu] = p_{P(mu),L(nu)}
  std::map<Weight, VermaClass> classification;
};

BGGReport bgg_matrices(const NicholsProfile& profile, const SimpleTable& table);
/// Ungraded route: the [M(lambda):L(mu)] matrix is given as data.
BGGReport bgg_from_decomposition(const NicholsProfile& profile, const LaurentMatrix& verma_simple);

/// Coefficients of P(lambda) in Ind(mu); cross-checked against ind_char.
std::map<Weight, LaurentPoly> ind_into_projectives(const BGGReport& report, Weight mu);

struct TensorExpansion {
  std::map<Weight, LaurentPoly> ind;  // multiplicity of Ind(kappa)
  std::int64_t dim_product = 0;       // dim P(mu) * dim P(nu)
  std::int64_t dim_expansion = 0;     // sum of eval_1(coeff) * dim Ind(kappa)
  bool graded_consistent = false;     // expansion matches ch P(mu) * ch P(nu) degree by degree
};

/// P(mu) (x) P(nu) as a combination of induced modules; dimension mismatch throws.
TensorExpansion tensor_projectives(const BGGReport& report, Weight mu, Weight nu);

std::map<Weight, VermaClass> classify_vermas(const BGGReport& report);

/// Reassembly, BGG reciprocity (graded and at t = 1), Cartan symmetry, leading
/// entries, co-standard consistency, and on graded data the shift and
/// dual-composition laws.
CheckReport verify_report(const BGGReport& report);

}  // namespace bggkit
