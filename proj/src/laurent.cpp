#include "bggkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bggkit {

LaurentPoly::LaurentPoly(std::int64_t constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms) {
  for (const auto& [d, c] : terms) add_term(d, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [d, c] : terms) add_term(d, c);
}

LaurentPoly LaurentPoly::monomial(int degree, std::int64_t c) {
  LaurentPoly p;
  p.add_term(degree, c);
  return p;
}

void LaurentPoly::add_term(int degree, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [d, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(-d, c);
  return r;
}

std::int64_t LaurentPoly::eval_one() const {
  std::int64_t s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  return r *= -1;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [d, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << " ";
    out << "t";
    if (d != 1) out << "^" << d;
  }
  return out.str();
}

}  // namespace bggkit
