#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bggkit/char_table.hpp"
#include "bggkit/cyclotomic.hpp"
#include "bggkit/group.hpp"

namespace bggkit {

/// A simple D(G)-module: conjugacy class of G plus an irreducible character
/// of the centralizer of the class representative.
struct Weight {
  int class_id = 0;
  int irrep_id = 0;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// "g{class}r{irrep}"
std::string weight_label(Weight w);
std::optional<Weight> parse_weight_label(std::string_view label);

using FusionRow = std::map<Weight, std::int64_t>;

/// The weight set of D(G) with its characters and Grothendieck-ring structure.
///
/// The character of a weight (O_a, psi) on a commuting pair (g, h) is
/// psi(x_g^-1 h x_g) for g in O_a and 0 otherwise, where x_g is the smallest
/// element (canonical order) with x_g a x_g^-1 = g. Tensor products are
/// computed from characters: chi_{l (x) m}(g, h) = sum_{g1 g2 = g} chi_l(g1, h) chi_m(g2, h).
///
/// Fusion and dual lookups are memoized behind a mutex; results do not depend
/// on call order.
class DoubleGroup {
 public:
  explicit DoubleGroup(FiniteGroup group);
  /// Uses precomputed centralizer tables (one per conjugacy class, in class order).
  DoubleGroup(FiniteGroup group, std::vector<OrdinaryCharTable> centralizer_tables);

  DoubleGroup(const DoubleGroup&) = delete;
  DoubleGroup& operator=(const DoubleGroup&) = delete;

  const FiniteGroup& group() const { return group_; }
  const ConjugacyData& classes() const { return classes_; }
  const FiniteGroup& centralizer_group(int class_id) const { return cent_[static_cast<std::size_t>(class_id)].group; }
  const OrdinaryCharTable& centralizer_table(int class_id) const {
    return cent_[static_cast<std::size_t>(class_id)].table;
  }
  /// x_g for g in the class of g.
  int canonical_conjugator(int g) const { return conjugator_[static_cast<std::size_t>(g)]; }

  /// Canonical order: by class, then irrep. epsilon is first.
  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  Weight epsilon() const { return Weight{0, 0}; }
  int index_of(Weight w) const;
  bool contains(Weight w) const;
  std::int64_t dimension(Weight w) const;

  /// Character of w on (g, h), as element indices of G. Values in Q(zeta_exp(G)).
  Cyclotomic pair_character(Weight w, int g, int h) const;
  /// Same, transporting through an arbitrary conjugator x with x a x^-1 = g.
  Cyclotomic pair_character_via(Weight w, int g, int h, int conjugator) const;

  /// N_{lm}^nu for all nu with nonzero coefficient.
  const FusionRow& fusion(Weight l, Weight m) const;
  /// Coefficient of epsilon in l (x) m.
  std::int64_t unit_coefficient(Weight l, Weight m) const;
  Weight dual(Weight w) const;

 private:
  struct Centralizer {
    FiniteGroup group;
    ConjugacyData classes;
    OrdinaryCharTable table;
  };

  void init(std::vector<OrdinaryCharTable> tables);
  /// chi_{l (x) m}(a, h) for a a class representative, h in C(a).
  Cyclotomic tensor_character(Weight l, Weight m, int a, int h) const;
  FusionRow compute_fusion(Weight l, Weight m) const;

  FiniteGroup group_;
  ConjugacyData classes_;
  std::vector<Centralizer> cent_;
  std::vector<int> conjugator_;
  std::vector<Weight> weights_;
  std::map<Weight, int> weight_index_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, FusionRow> fusion_cache_;
  mutable std::map<int, Weight> dual_cache_;
};

}  // namespace bggkit
