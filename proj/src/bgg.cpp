#include "bggkit/bgg.hpp"

namespace bggkit {

namespace {

void put(LaurentMatrix& m, Weight row, Weight col, const LaurentPoly& p) {
  if (!p.is_zero()) m[row][col] = p;
}

GradedChar at_one(const GradedChar& g) {
  GradedChar r;
  r.add(0, gc_eval_ungraded(g));
  return r;
}

LaurentPoly collapse(const LaurentPoly& p) { return LaurentPoly(p.eval_one()); }

// p_{P(mu),W(lambda)} from the Verma decomposition matrix.
void fill_projectives(BGGReport& r) {
  const DoubleGroup& dg = r.profile.dg();
  const int n = r.profile.n_top();
  for (const auto& mu : dg.weights()) {
    GradedChar pch;
    for (const auto& lambda : dg.weights()) {
      const LaurentPoly pv = entry(r.verma_simple, lambda, mu).bar();
      put(r.projective_verma, mu, lambda, pv);
      if (!pv.is_zero()) pch += pv * verma_char(r.profile, lambda);
      LaurentPoly pc = entry(r.verma_simple, invertible_product(dg, r.profile.lambda_oV(), lambda), mu).bar();
      put(r.projective_coverma, mu, lambda, r.graded ? pc.shifted(-n) : pc);
    }
    r.projective_chars.emplace(mu, r.graded ? pch : at_one(pch));
  }
  r.classification = classify_vermas(r);
}

}  // namespace

LaurentPoly entry(const LaurentMatrix& m, Weight row, Weight col) {
  auto it = m.find(row);
  if (it == m.end()) return {};
  auto jt = it->second.find(col);
  return jt == it->second.end() ? LaurentPoly() : jt->second;
}

std::string to_string(VermaClass c) { return c == VermaClass::simple_projective ? "simple_projective" : "non_simple"; }

std::map<Weight, LaurentPoly> decompose_into_simples(const GradedChar& chi, const SimpleTable& table) {
  std::map<Weight, LaurentPoly> out;
  GradedChar residual = chi;
  while (!residual.is_zero()) {
    const int d = residual.max_degree();
    const KElement top = residual.component(d);
    for (const auto& [w, m] : top.terms()) {
      if (m < 0) {
        throw DecompositionError("character is not in the nonnegative span of the simple characters", residual);
      }
      auto it = table.entries().find(w);
      if (it == table.entries().end()) throw DecompositionError("no simple character for " + weight_label(w), residual);
      out[w] += LaurentPoly::monomial(d, m);
      residual -= LaurentPoly::monomial(d, m) * it->second;
    }
    if (!residual.is_zero() && residual.max_degree() >= d) {
      throw DecompositionError("simple characters do not have leading term at degree 0", residual);
    }
  }
  return out;
}

BGGReport bgg_matrices(const NicholsProfile& profile, const SimpleTable& table) {
  BGGReport r{profile};
  r.graded = true;
  r.table = table;
  r.lowest = lowest_data(table);
  for (const auto& lambda : profile.dg().weights()) {
    for (const auto& [mu, p] : decompose_into_simples(verma_char(profile, lambda), table)) put(r.verma_simple, lambda, mu, p);
  }
  fill_projectives(r);
  for (const auto& [mu, pch] : r.projective_chars) {
    for (const auto& [nu, p] : decompose_into_simples(pch, table)) put(r.cartan, mu, nu, p);
  }
  return r;
}

BGGReport bgg_from_decomposition(const NicholsProfile& profile, const LaurentMatrix& verma_simple) {
  const DoubleGroup& dg = profile.dg();
  BGGReport r{profile};
  r.graded = false;
  for (const auto& [lambda, row] : verma_simple) {
    if (!dg.contains(lambda)) throw InputError("decomposition.known_weights", "unknown weight " + weight_label(lambda));
    for (const auto& [mu, p] : row) {
      if (!dg.contains(mu)) throw InputError("decomposition.known_weights", "unknown weight " + weight_label(mu));
      if (!p.nonnegative()) throw InputError("decomposition.nonnegative", "negative multiplicity in row " + weight_label(lambda));
      put(r.verma_simple, lambda, mu, collapse(p));
    }
  }
  for (const auto& lambda : dg.weights()) {
    if (entry(r.verma_simple, lambda, lambda).eval_one() < 1) {
      throw InputError("decomposition.head", "M(" + weight_label(lambda) + ") must contain L(" + weight_label(lambda) + ")");
    }
  }
  fill_projectives(r);
  for (const auto& mu : dg.weights()) {
    for (const auto& nu : dg.weights()) {
      LaurentPoly c;
      for (const auto& lambda : dg.weights()) c += entry(r.projective_verma, mu, lambda) * entry(r.verma_simple, lambda, nu);
      put(r.cartan, mu, nu, c);
    }
  }
  return r;
}

std::map<Weight, LaurentPoly> ind_into_projectives(const BGGReport& report, Weight mu) {
  if (!report.table) throw InputError("report.graded", "induced decomposition needs a simple character table");
  std::map<Weight, LaurentPoly> out;
  GradedChar sum;
  for (const auto& [lambda, ch] : report.table->entries()) {
    const LaurentPoly c = ch.coefficient(mu).bar();
    if (c.is_zero()) continue;
    out.emplace(lambda, c);
    sum += c * report.projective_chars.at(lambda);
  }
  if (!(sum == ind_char(report.profile, mu))) {
    throw InconsistencyError("projective expansion of Ind(" + weight_label(mu) + ") does not match its character");
  }
  return out;
}

TensorExpansion tensor_projectives(const BGGReport& report, Weight mu, Weight nu) {
  const NicholsProfile& p = report.profile;
  const DoubleGroup& dg = p.dg();
  TensorExpansion t;
  for (const auto& [lambda, a] : report.projective_coverma.at(mu)) {
    for (const auto& [kappa, b] : report.projective_verma.at(nu)) {
      const LaurentPoly ab = a * b;
      for (const auto& [w, n] : dg.fusion(lambda, kappa)) {
        LaurentPoly term = ab;
        term *= n;
        t.ind[w] += term;
      }
    }
  }
  std::erase_if(t.ind, [](const auto& kv) { return kv.second.is_zero(); });

  const auto dim_p = [&](Weight w) { return gc_eval_ungraded(report.projective_chars.at(w)).dimension(dg); };
  t.dim_product = dim_p(mu) * dim_p(nu);
  GradedChar expansion;
  for (const auto& [w, c] : t.ind) {
    t.dim_expansion += c.eval_one() * p.dim_B() * p.dim_B() * dg.dimension(w);
    if (report.graded) expansion += c * ind_char(p, w);
  }
  if (t.dim_product != t.dim_expansion) {
    throw InconsistencyError("dim P(" + weight_label(mu) + ") * dim P(" + weight_label(nu) + ") = " +
                             std::to_string(t.dim_product) + " but the Ind expansion has dimension " +
                             std::to_string(t.dim_expansion));
  }
  if (report.graded) {
    t.graded_consistent =
        expansion == gc_mul(dg, report.projective_chars.at(mu), report.projective_chars.at(nu));
  }
  return t;
}

std::map<Weight, VermaClass> classify_vermas(const BGGReport& report) {
  std::map<Weight, VermaClass> out;
  for (const auto& lambda : report.profile.dg().weights()) {
    auto it = report.verma_simple.find(lambda);
    const bool simple = it != report.verma_simple.end() && it->second.size() == 1 &&
                        it->second.begin()->first == lambda && it->second.begin()->second == LaurentPoly(1);
    out.emplace(lambda, simple ? VermaClass::simple_projective : VermaClass::non_simple);
  }
  return out;
}

CheckReport verify_report(const BGGReport& report) {
  const NicholsProfile& p = report.profile;
  const DoubleGroup& dg = p.dg();
  const auto& ws = dg.weights();
  const int n = p.n_top();
  CheckReport out;

  if (report.table) {
    bool ok = true;
    for (const auto& lambda : ws) {
      GradedChar sum;
      for (const auto& mu : ws) sum += entry(report.verma_simple, lambda, mu) * report.table->at(mu);
      ok = ok && sum == verma_char(p, lambda);
    }
    out.add("reassembly", ok);
  }

  bool graded_bgg = true;
  bool ungraded_bgg = true;
  bool leading = true;
  for (const auto& mu : ws) {
    for (const auto& lambda : ws) {
      const LaurentPoly pv = entry(report.projective_verma, mu, lambda);
      const LaurentPoly vs = entry(report.verma_simple, lambda, mu);
      graded_bgg = graded_bgg && pv == vs.bar();
      ungraded_bgg = ungraded_bgg && pv.eval_one() == vs.eval_one();
      if (report.graded && !pv.is_zero()) {
        leading = leading && pv.min_degree() >= 0 && (lambda == mu ? pv.coeff(0) == 1 : pv.coeff(0) == 0);
      }
    }
  }
  out.add("graded_bgg", graded_bgg);
  out.add("ungraded_bgg", ungraded_bgg);
  if (report.graded) out.add("leading_entries", leading);

  bool symmetric = true;
  bool dtd = true;
  for (const auto& mu : ws) {
    for (const auto& nu : ws) {
      const std::int64_t c = entry(report.cartan, mu, nu).eval_one();
      symmetric = symmetric && c == entry(report.cartan, nu, mu).eval_one();
      std::int64_t d = 0;
      for (const auto& lambda : ws) {
        d += entry(report.verma_simple, lambda, mu).eval_one() * entry(report.verma_simple, lambda, nu).eval_one();
      }
      dtd = dtd && c == d;
    }
  }
  out.add("cartan_symmetric", symmetric);
  out.add("cartan_is_DtD", dtd);

  bool costandard = true;
  for (const auto& mu : ws) {
    GradedChar sum;
    auto it = report.projective_coverma.find(mu);
    if (it != report.projective_coverma.end()) {
      for (const auto& [lambda, c] : it->second) sum += c * coverma_char(p, lambda);
    }
    if (!report.graded) sum = at_one(sum);
    costandard = costandard && sum == report.projective_chars.at(mu);
  }
  out.add("costandard_consistency", costandard);

  if (report.graded && report.lowest) {
    bool shift_law = true;
    bool dual_law = true;
    for (const auto& mu : ws) {
      const Lowest& low = report.lowest->at(mu);
      int best = 0;
      std::vector<Weight> argmax;
      for (const auto& [lambda, c] : report.projective_verma.at(mu)) {
        const int top = c.max_degree();
        if (argmax.empty() || top > best) {
          best = top;
          argmax = {lambda};
        } else if (top == best) {
          argmax.push_back(lambda);
        }
      }
      const Weight expected = invertible_product(dg, p.lambda_oV(), low.bar);
      shift_law = shift_law && best == low.l + n && argmax == std::vector<Weight>{expected} &&
                  entry(report.projective_verma, mu, expected).coeff(best) == 1;

      const Weight mu_bar_dual = dg.dual(low.bar);
      for (const auto& lambda : ws) {
        const Weight vl_dual = dg.dual(invertible_product(dg, p.lambda_V(), lambda));
        const LaurentPoly lhs = entry(report.verma_simple, lambda, mu).shifted(low.l + n);
        dual_law = dual_law && lhs == entry(report.verma_simple, vl_dual, mu_bar_dual).bar();
      }
    }
    out.add("shift_law", shift_law);
    out.add("dual_composition_law", dual_law);
  }
  return out;
}

}  // namespace bggkit
