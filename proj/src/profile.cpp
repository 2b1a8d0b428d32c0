#include "bggkit/profile.hpp"

#include <algorithm>
#include <set>

#include "bggkit/errors.hpp"

namespace bggkit {

namespace {

void require_known(const DoubleGroup& dg, const KElement& k, const std::string& invariant) {
  for (const auto& [w, m] : k.terms()) {
    if (!dg.contains(w)) throw InputError(invariant, "unknown weight " + weight_label(w));
  }
}

}  // namespace

Weight invertible_product(const DoubleGroup& dg, Weight a, Weight b) {
  const auto& row = dg.fusion(a, b);
  if (row.size() != 1 || row.begin()->second != 1) {
    throw InconsistencyError("product " + weight_label(a) + " * " + weight_label(b) + " is not a single weight");
  }
  return row.begin()->first;
}

NicholsProfile NicholsProfile::create(std::shared_ptr<const DoubleGroup> dg, std::vector<KElement> components) {
  if (components.empty()) throw InputError("profile.nonempty", "profile has no components");
  for (std::size_t j = 0; j < components.size(); ++j) {
    require_known(*dg, components[j], "profile.known_weights");
    if (!components[j].nonnegative()) {
      throw InputError("profile.nonnegative", "component " + std::to_string(j) + " has a negative multiplicity");
    }
  }
  if (!(components.front() == KElement(dg->epsilon()))) {
    throw InputError("profile.component0_is_epsilon", "degree 0 component must be exactly epsilon");
  }
  const KElement& top = components.back();
  if (top.terms().size() != 1 || top.terms().begin()->second != 1 || top.dimension(*dg) != 1) {
    throw InputError("profile.top_is_one_dimensional", "top component must be a single one-dimensional weight");
  }
  NicholsProfile p;
  p.lambda_v_ = top.terms().begin()->first;
  p.lambda_ov_ = dg->dual(p.lambda_v_);
  if (dg->fusion(p.lambda_v_, p.lambda_ov_) != FusionRow{{dg->epsilon(), 1}}) {
    throw InputError("profile.top_dual_law", "lambda_V * lambda_V^* is not epsilon");
  }
  for (const auto& k : components) p.dim_b_ += k.dimension(*dg);
  p.dg_ = std::move(dg);
  p.components_ = std::move(components);
  return p;
}

SimpleTable SimpleTable::create(const DoubleGroup& dg, std::map<Weight, GradedChar> entries) {
  for (const auto& w : dg.weights()) {
    if (!entries.contains(w)) throw InputError("simples.complete", "no entry for " + weight_label(w));
  }
  std::set<Weight> bars;
  for (const auto& [w, ch] : entries) {
    if (!dg.contains(w)) throw InputError("simples.known_weights", "unknown weight " + weight_label(w));
    for (const auto& [deg, k] : ch.components()) require_known(dg, k, "simples.known_weights");
    if (!ch.nonnegative()) throw InputError("simples.nonnegative", "ch L(" + weight_label(w) + ") has a negative term");
    if (ch.max_degree() != 0 || !(ch.component(0) == KElement(w))) {
      throw InputError("simples.leading_term",
                       "ch L(" + weight_label(w) + ") must be the weight itself at degree 0 plus lower terms");
    }
    const KElement low = ch.component(ch.min_degree());
    if (low.terms().size() != 1) {
      throw InputError("simples.lowest_unique", "lowest component of ch L(" + weight_label(w) + ") is not one weight");
    }
    bars.insert(low.terms().begin()->first);
  }
  if (bars.size() != entries.size()) throw InputError("simples.bar_bijection", "lambda -> lowest weight is not injective");
  SimpleTable t;
  t.entries_ = std::move(entries);
  return t;
}

LowestData lowest_data(const SimpleTable& table) {
  LowestData out;
  for (const auto& [w, ch] : table.entries()) {
    const int l = ch.min_degree();
    out.emplace(w, Lowest{ch.component(l).terms().begin()->first, l});
  }
  return out;
}

GradedChar verma_char(const NicholsProfile& p, const KElement& k) {
  GradedChar r;
  for (std::size_t j = 0; j < p.components().size(); ++j) r.add(-static_cast<int>(j), k_mul(p.dg(), p.components()[j], k));
  return r;
}

GradedChar verma_char(const NicholsProfile& p, Weight lambda) { return verma_char(p, KElement(lambda)); }

GradedChar coverma_char(const NicholsProfile& p, const KElement& k) {
  GradedChar r;
  for (std::size_t j = 0; j < p.components().size(); ++j) {
    r.add(static_cast<int>(j), k_mul(p.dg(), k_dual(p.dg(), p.components()[j]), k));
  }
  return r;
}

GradedChar coverma_char(const NicholsProfile& p, Weight lambda) { return coverma_char(p, KElement(lambda)); }

GradedChar ind_char(const NicholsProfile& p, Weight lambda) {
  return gc_mul(p.dg(), coverma_char(p, p.dg().epsilon()), verma_char(p, lambda));
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), passed, std::move(detail)});
}

bool CheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.detail.empty() ? c.name : c.name + " (" + c.detail + ")");
  }
  return out;
}

CheckReport verify_duality_identities(const NicholsProfile& p, Weight lambda) {
  const DoubleGroup& dg = p.dg();
  const int n = p.n_top();
  const Weight vl = invertible_product(dg, p.lambda_V(), lambda);
  const Weight vl_dual = dg.dual(vl);

  const GradedChar a = gc_shift(gc_dual(dg, coverma_char(p, vl)), n);
  const GradedChar b = coverma_char(p, dg.dual(lambda));
  const GradedChar c = gc_dual(dg, verma_char(p, lambda));
  const GradedChar d = gc_shift(verma_char(p, vl_dual), n);

  const std::string at = " at " + weight_label(lambda);
  CheckReport r;
  r.add("dual_coverma_shift", a == b, at);
  r.add("coverma_of_dual", b == c, at);
  r.add("dual_verma_shift", c == d, at);
  r.add("dual_of_verma_ungraded", gc_eval_ungraded(c) == gc_eval_ungraded(verma_char(p, vl_dual)), at);
  const GradedChar m = verma_char(p, lambda);
  r.add("socle_weight", m.min_degree() == -n && m.component(-n) == KElement(vl), at);
  return r;
}

}  // namespace bggkit
