#include "bggkit/graded.hpp"

#include <algorithm>

namespace bggkit {

void KElement::add(Weight w, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.emplace(w, m);
  if (inserted) return;
  it->second += m;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t KElement::multiplicity(Weight w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

bool KElement::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::int64_t KElement::dimension(const DoubleGroup& dg) const {
  std::int64_t d = 0;
  for (const auto& [w, m] : terms_) d += m * dg.dimension(w);
  return d;
}

KElement& KElement::operator+=(const KElement& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

KElement& KElement::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

KElement k_mul(const DoubleGroup& dg, const KElement& a, const KElement& b) {
  KElement r;
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) {
      for (const auto& [nu, n] : dg.fusion(wa, wb)) r.add(nu, ma * mb * n);
    }
  }
  return r;
}

KElement k_dual(const DoubleGroup& dg, const KElement& a) {
  KElement r;
  for (const auto& [w, m] : a.terms()) r.add(dg.dual(w), m);
  return r;
}

void GradedChar::add(int degree, Weight w, std::int64_t m) { add(degree, KElement(w, m)); }

void GradedChar::add(int degree, const KElement& k) {
  if (k.is_zero()) return;
  auto& c = components_[degree];
  c += k;
  if (c.is_zero()) components_.erase(degree);
}

KElement GradedChar::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? KElement() : it->second;
}

int GradedChar::min_degree() const { return components_.begin()->first; }
int GradedChar::max_degree() const { return components_.rbegin()->first; }

bool GradedChar::nonnegative() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& kv) { return kv.second.nonnegative(); });
}

std::map<Weight, LaurentPoly> GradedChar::weight_major() const {
  std::map<Weight, LaurentPoly> out;
  for (const auto& [deg, k] : components_) {
    for (const auto& [w, m] : k.terms()) out[w] += LaurentPoly::monomial(deg, m);
  }
  return out;
}

GradedChar GradedChar::from_weight_major(const std::map<Weight, LaurentPoly>& coeffs) {
  GradedChar g;
  for (const auto& [w, p] : coeffs) {
    for (const auto& [deg, c] : p.terms()) g.add(deg, w, c);
  }
  return g;
}

LaurentPoly GradedChar::coefficient(Weight w) const {
  LaurentPoly p;
  for (const auto& [deg, k] : components_) p += LaurentPoly::monomial(deg, k.multiplicity(w));
  return p;
}

GradedChar& GradedChar::operator+=(const GradedChar& o) {
  for (const auto& [deg, k] : o.components_) add(deg, k);
  return *this;
}

GradedChar& GradedChar::operator-=(const GradedChar& o) {
  for (const auto& [deg, k] : o.components_) add(deg, KElement() - k);
  return *this;
}

GradedChar operator*(const LaurentPoly& p, const GradedChar& a) {
  GradedChar r;
  for (const auto& [shift, c] : p.terms()) {
    for (const auto& [deg, k] : a.components()) {
      KElement scaled = k;
      scaled *= c;
      r.add(deg + shift, scaled);
    }
  }
  return r;
}

GradedChar gc_mul(const DoubleGroup& dg, const GradedChar& a, const GradedChar& b) {
  GradedChar r;
  for (const auto& [da, ka] : a.components()) {
    for (const auto& [db, kb] : b.components()) r.add(da + db, k_mul(dg, ka, kb));
  }
  return r;
}

GradedChar gc_shift(const GradedChar& a, int l) {
  GradedChar r;
  for (const auto& [deg, k] : a.components()) r.add(deg + l, k);
  return r;
}

GradedChar gc_dual(const DoubleGroup& dg, const GradedChar& a) {
  GradedChar r;
  for (const auto& [deg, k] : a.components()) r.add(-deg, k_dual(dg, k));
  return r;
}

KElement gc_eval_ungraded(const GradedChar& a) {
  KElement r;
  for (const auto& [deg, k] : a.components()) r += k;
  return r;
}

LaurentPoly gc_dimension(const DoubleGroup& dg, const GradedChar& a) {
  LaurentPoly p;
  for (const auto& [deg, k] : a.components()) p += LaurentPoly::monomial(deg, k.dimension(dg));
  return p;
}

}  // namespace bggkit
