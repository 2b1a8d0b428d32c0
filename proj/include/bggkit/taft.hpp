#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "bggkit/bgg.hpp"

namespace bggkit::taft {

struct TaftParams {
  int n = 2;
  Cyclotomic q;  // primitive n-th root of unity
  explicit TaftParams(int n);
};

/// c_1..c_{n-1} with c_k = [k]_q (1 - q^{r+s+k-1}); index 0 holds c_1.
std::vector<Cyclotomic> lowering_coeffs(const TaftParams& params, int r, int s);
/// First k >= 1 with c_k = 0, or n.
int simple_dimension(const TaftParams& params, int r, int s);

/// D(C_n) weights indexed by residues (r, s). The group is generated by the
/// n-cycle c; r picks the class of c^r and s the character with c -> q^s.
struct TaftData {
  TaftParams params;
  std::shared_ptr<const DoubleGroup> dg;
  NicholsProfile profile;
  SimpleTable table;
  std::vector<Weight> by_residue;  // index r * n + s

  Weight weight_of(int r, int s) const;
  std::pair<int, int> residues_of(Weight w) const;
  /// "(r,s)" for every weight.
  std::map<Weight, std::string> aliases() const;
};

GradedChar simple_char(const TaftData& data, int r, int s);
TaftData build_profile_and_table(int n);

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

struct Layer {
  int r = 0;
  int s = 0;
  int shift = 0;  // nonpositive
};

struct VermaMatrices {
  CycMatrix K;  // m_k -> q^{r+k} m_k
  CycMatrix L;  // m_k -> q^{s+k} m_k
  CycMatrix E;  // m_k -> c_k m_{k-1}
  CycMatrix F;  // m_k -> m_{k+1}
  std::vector<int> singular;  // k > 0 with m_k killed by E
  int head_dimension = 0;
  std::vector<Layer> composition;
};

/// Builds the action on M(r,s) and checks it against the closed formulas;
/// any disagreement throws OracleError.
VermaMatrices explicit_matrices(const TaftParams& params, int r, int s);

struct TaftSummary {
  int n = 0;
  int weights = 0;
  int simple_projective = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Duality identities, oracle/engine agreement, BGG report laws and the
/// rank-one projective structure for every weight.
TaftSummary verify_taft(const TaftData& data, const BGGReport& report);

}  // namespace bggkit::taft
