#pragma once

#include <cstdint>
#include <map>

#include "bggkit/double_group.hpp"
#include "bggkit/laurent.hpp"

namespace bggkit {

/// Z-linear combination of weights (a possibly virtual D(G)-character).
class KElement {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  KElement() = default;
  explicit KElement(Weight w, std::int64_t m = 1) { add(w, m); }

  void add(Weight w, std::int64_t m);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t multiplicity(Weight w) const;
  bool nonnegative() const;
  std::int64_t dimension(const DoubleGroup& dg) const;

  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  KElement& operator*=(std::int64_t c);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend bool operator==(const KElement&, const KElement&) = default;

 private:
  Terms terms_;
};

KElement k_mul(const DoubleGroup& dg, const KElement& a, const KElement& b);
KElement k_dual(const DoubleGroup& dg, const KElement& a);

/// Element of K[t, t^-1], stored degree-major.
class GradedChar {
 public:
  using Components = std::map<int, KElement>;

  GradedChar() = default;
  GradedChar(Weight w, int degree = 0, std::int64_t m = 1) { add(degree, w, m); }  // NOLINT

  void add(int degree, Weight w, std::int64_t m);
  void add(int degree, const KElement& k);
  const Components& components() const { return components_; }
  KElement component(int degree) const;
  bool is_zero() const { return components_.empty(); }
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;
  bool nonnegative() const;

  /// p_{N,lambda} for every weight present.
  std::map<Weight, LaurentPoly> weight_major() const;
  static GradedChar from_weight_major(const std::map<Weight, LaurentPoly>& coeffs);
  LaurentPoly coefficient(Weight w) const;

  GradedChar& operator+=(const GradedChar& o);
  GradedChar& operator-=(const GradedChar& o);
  friend GradedChar operator+(GradedChar a, const GradedChar& b) { return a += b; }
  friend GradedChar operator-(GradedChar a, const GradedChar& b) { return a -= b; }
  friend bool operator==(const GradedChar&, const GradedChar&) = default;

 private:
  Components components_;
};

/// p * a, scaling each weight coefficient by a Laurent polynomial.
GradedChar operator*(const LaurentPoly& p, const GradedChar& a);

GradedChar gc_mul(const DoubleGroup& dg, const GradedChar& a, const GradedChar& b);
/// Component i of the result is component i - l of a.
GradedChar gc_shift(const GradedChar& a, int l);
/// Dualizes weights and flips degrees.
GradedChar gc_dual(const DoubleGroup& dg, const GradedChar& a);
KElement gc_eval_ungraded(const GradedChar& a);
/// Graded dimension sum_j dim(component j) t^j.
LaurentPoly gc_dimension(const DoubleGroup& dg, const GradedChar& a);

}  // namespace bggkit
