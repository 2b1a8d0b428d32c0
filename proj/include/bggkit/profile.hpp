#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bggkit/graded.hpp"

namespace bggkit {

/// Graded D(G)-character of a finite-dimensional Nichols algebra B(V):
/// components[j] = ch B^j(V), j = 0..n_top.
class NicholsProfile {
 public:
  /// Validates and throws InputError naming the violated invariant.
  static NicholsProfile create(std::shared_ptr<const DoubleGroup> dg, std::vector<KElement> components);

  const DoubleGroup& dg() const { return *dg_; }
  const std::shared_ptr<const DoubleGroup>& dg_ptr() const { return dg_; }
  const std::vector<KElement>& components() const { return components_; }
  int n_top() const { return static_cast<int>(components_.size()) - 1; }
  Weight lambda_V() const { return lambda_v_; }
  Weight lambda_oV() const { return lambda_ov_; }
  std::int64_t dim_B() const { return dim_b_; }

 private:
  NicholsProfile() = default;
  std::shared_ptr<const DoubleGroup> dg_;
  std::vector<KElement> components_;
  Weight lambda_v_;
  Weight lambda_ov_;
  std::int64_t dim_b_ = 0;
};

/// The unique weight of a * b when one factor is one-dimensional.
Weight invertible_product(const DoubleGroup& dg, Weight a, Weight b);

/// ch L(lambda) for every weight.
class SimpleTable {
 public:
  static SimpleTable create(const DoubleGroup& dg, std::map<Weight, GradedChar> entries);

  const std::map<Weight, GradedChar>& entries() const { return entries_; }
  const GradedChar& at(Weight w) const { return entries_.at(w); }
  friend bool operator==(const SimpleTable&, const SimpleTable&) = default;

 private:
  SimpleTable() = default;
  std::map<Weight, GradedChar> entries_;
};

struct Lowest {
  Weight bar;
  int l = 0;
};
using LowestData = std::map<Weight, Lowest>;

LowestData lowest_data(const SimpleTable& table);

GradedChar verma_char(const NicholsProfile& p, Weight lambda);
GradedChar verma_char(const NicholsProfile& p, const KElement& k);
GradedChar coverma_char(const NicholsProfile& p, Weight lambda);
GradedChar coverma_char(const NicholsProfile& p, const KElement& k);
GradedChar ind_char(const NicholsProfile& p, Weight lambda);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  void add(std::string name, bool passed, std::string detail = {});
  bool all_passed() const;
  std::vector<std::string> failures() const;
};

/// Graded duality chain between Verma and co-Verma characters, the ungraded
/// dual-of-Verma law and the socle weight law.
CheckReport verify_duality_identities(const NicholsProfile& p, Weight lambda);

}  // namespace bggkit
