#include "bggkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bggkit {

namespace {

std::vector<long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      long c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// Reduces a polynomial in zeta_e (any length) to the power basis.
std::vector<Rational> reduce(std::vector<Rational> p, int e) {
  const auto& phi_poly = cyclotomic_polynomial(e);
  const std::size_t phi = phi_poly.size() - 1;
  // zeta^e = 1
  if (p.size() > static_cast<std::size_t>(e)) {
    for (std::size_t i = static_cast<std::size_t>(e); i < p.size(); ++i) {
      if (sgn(p[i]) != 0) p[i % static_cast<std::size_t>(e)] += p[i];
    }
    p.resize(static_cast<std::size_t>(e));
  }
  for (std::size_t i = p.size(); i-- > phi;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= phi; ++j) {
      if (phi_poly[j] != 0) p[i - phi + j] -= c * phi_poly[j];
    }
  }
  p.resize(phi);
  return p;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long> poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic_polynomial(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value, int order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order))) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_ = reduce(std::move(coeffs), order);
}

Cyclotomic Cyclotomic::root_of_unity(int e, long k) {
  if (e < 1) throw std::invalid_argument("root of unity order must be positive");
  std::vector<Rational> p(static_cast<std::size_t>(mod(k, e)) + 1);
  p.back() = 1;
  return Cyclotomic(e, std::move(p));
}

Cyclotomic Cyclotomic::in_order(int e) const {
  if (e == order_) return *this;
  if (e % order_ != 0) throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) +
                                                   ") into Q(zeta_" + std::to_string(e) + ")");
  const std::size_t step = static_cast<std::size_t>(e / order_);
  std::vector<Rational> p((coeffs_.size() - 1) * step + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  return Cyclotomic(e, std::move(p));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(k, static_cast<long>(order_)) != 1) throw std::invalid_argument("galois exponent not a unit");
  std::vector<Rational> p(static_cast<std::size_t>(order_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    p[static_cast<std::size_t>(mod(static_cast<long>(j) * k, order_))] += coeffs_[j];
  }
  return Cyclotomic(order_, std::move(p));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<std::int64_t> Cyclotomic::integer_value() const {
  auto r = rational_value();
  if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
  return r->get_num().get_si();
}

std::optional<int> Cyclotomic::root_exponent() const {
  for (int k = 0; k < order_; ++k) {
    if (*this == root_of_unity(order_, k)) return k;
  }
  return std::nullopt;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int l = std::lcm(order_, o.order_);
  if (l != order_) *this = in_order(l);
  if (l != o.order_) return *this += o.in_order(l);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int l = std::lcm(a.order_, b.order_);
  if (l != a.order_) return a.in_order(l) * b;
  if (l != b.order_) return a * b.in_order(l);
  if (a.is_rational()) return Cyclotomic(b) *= a.coeffs_[0];
  if (b.is_rational()) return Cyclotomic(a) *= b.coeffs_[0];
  std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) != 0) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(l, std::move(p));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.order_, b.order_);
  return a.in_order(l).coeffs_ == b.in_order(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z" << order_;
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace bggkit
