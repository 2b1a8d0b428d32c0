#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace bggkit {

/// Sparse Laurent polynomial in Z[t, t^-1]; zero is the empty map.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms);
  explicit LaurentPoly(Terms terms);

  /// c * t^degree
  static LaurentPoly monomial(int degree, std::int64_t c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int degree) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;
  bool nonnegative() const;

  /// p(t) -> p(t^-1).
  LaurentPoly bar() const;
  /// p(1).
  std::int64_t eval_one() const;
  /// t^k * p.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Highest degree first: "t^2 + 3 - 2 t^-1".
  std::string to_string() const;

 private:
  void add_term(int degree, std::int64_t c);
  Terms terms_;
};

inline LaurentPoly laurent_bar(const LaurentPoly& p) { return p.bar(); }
inline std::int64_t laurent_eval_one(const LaurentPoly& p) { return p.eval_one(); }

}  // namespace bggkit
