// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "bggkit/io.hpp"
#include "bggkit/taft.hpp"

using namespace bggkit;
namespace fs = std::filesystem;

namespace {

using Row = std::map<Weight, LaurentPoly>;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::shared_ptr<const DoubleGroup> load_group(const std::string& name) {
  return io::load_double_group_file(fs::path(BGGKIT_DATA_DIR) / name, {});
}

std::shared_ptr<const DoubleGroup> cyclic(int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<Perm> g{Perm(c)};
  return std::make_shared<const DoubleGroup>(close_group(n, g));
}

Outcome census() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto dg = load_group("s3.json");
  const io::AliasMap names = io::aliases_from_json(io::read_json_file(fs::path(BGGKIT_DATA_DIR) / "s3_aliases.json"), *dg);
  const std::vector<std::string> expected{"(e,+)", "(e,-)", "(e,ρ)", "(σ,+)", "(σ,-)", "(τ,0)", "(τ,1)", "(τ,2)"};
  const std::vector<std::int64_t> dims{1, 1, 2, 3, 3, 2, 2, 2};
  o.require(dg->size() == 8, "weight count");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < dg->size() && o.ok; ++i) {
    const Weight w = dg->weights()[i];
    o.require(names.name(w) == expected[i], "label of " + weight_label(w));
    o.require(dg->dimension(w) == dims[i], "dimension of " + weight_label(w));
    sum += dg->dimension(w) * dg->dimension(w);
  }
  o.require(sum == 36, "sum of squared dimensions");

  // the alias names must describe the actual class and centralizer character
  const auto& g = dg->group();
  const auto& cls = dg->classes();
  const int sigma = cls.classes[1].representative;
  const int tau = cls.classes[2].representative;
  o.require(cls.class_size(0) == 1 && cls.class_size(1) == 3 && cls.class_size(2) == 2, "class sizes");
  o.require(g.element_order(sigma) == 2 && g.element_order(tau) == 3, "class representatives");
  auto value = [&](Weight w, int h) { return dg->pair_character(w, cls.classes[static_cast<std::size_t>(w.class_id)].representative, h); };
  o.require(value(Weight{0, 0}, sigma) == Cyclotomic(1), "(e,+) is trivial");
  o.require(value(Weight{0, 1}, sigma) == Cyclotomic(-1), "(e,-) is the sign");
  o.require(value(Weight{0, 2}, 0) == Cyclotomic(2), "(e,ρ) is two-dimensional");
  o.require(value(Weight{1, 0}, sigma) == Cyclotomic(1) && value(Weight{1, 1}, sigma) == Cyclotomic(-1), "(σ,±)");
  for (int k = 0; k < 3; ++k) o.require(value(Weight{2, k}, tau) == Cyclotomic::root_of_unity(3, k), "(τ,k)");
  const double t = seconds_since(t0);
  o.require(t < 1.0, "time budget");
  std::ostringstream note;
  note << "8 weights, sum dim^2 = " << sum << ", " << t << " s";
  if (o.ok) o.note = note.str();
  return o;
}

Outcome taft_dimensions() {
  Outcome o;
  for (int n = 2; n <= 5 && o.ok; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    auto d = taft::build_profile_and_table(n);
    for (const auto& w : d.dg->weights()) {
      o.require(gc_dimension(*d.dg, verma_char(d.profile, w)).eval_one() == n, "dim M at n=" + std::to_string(n));
    }
    for (int l = 1; l <= n; ++l) {
      for (int r = 1; r <= n; ++r) {
        const Weight w = d.weight_of(r, 1 - (r + l));
        o.require(gc_dimension(*d.dg, d.table.at(w)).eval_one() == l, "dim L at n=" + std::to_string(n));
      }
    }
    o.require(seconds_since(t0) < 5.0, "time budget at n=" + std::to_string(n));
  }
  if (o.ok) o.note = "n = 2..5";
  return o;
}

Outcome classification() {
  Outcome o;
  for (int n = 2; n <= 5 && o.ok; ++n) {
    auto d = taft::build_profile_and_table(n);
    const BGGReport r = bgg_matrices(d.profile, d.table);
    for (int rr = 0; rr < n; ++rr) {
      for (int s = 0; s < n; ++s) {
        const bool expect = s == mod(1 - (rr + n), n);
        const bool got = r.classification.at(d.weight_of(rr, s)) == VermaClass::simple_projective;
        o.require(expect == got, "flag of (" + std::to_string(rr) + "," + std::to_string(s) + ") at n=" + std::to_string(n));
      }
    }
  }
  if (o.ok) o.note = "n = 2..5, exactly n flagged each";
  return o;
}

Outcome taft_structure() {
  Outcome o;
  for (int n = 2; n <= 5 && o.ok; ++n) {
    auto d = taft::build_profile_and_table(n);
    const BGGReport r = bgg_matrices(d.profile, d.table);
    const LowestData low = lowest_data(d.table);
    for (int rr = 0; rr < n; ++rr) {
      for (int l = 1; l < n; ++l) {
        const Weight mu = d.weight_of(rr, 1 - (rr + l));
        const Weight second = d.weight_of(rr + l - n, 1 - ((rr + l - n) + (n - l)));
        const Row& pv = r.projective_verma.at(mu);
        Row at_one;
        for (const auto& [w, p] : pv) at_one.emplace(w, LaurentPoly(p.eval_one()));
        o.require(at_one == Row{{mu, 1}, {second, 1}}, "[P:M] at t=1 for n=" + std::to_string(n));
        const int shift = low.at(mu).l + d.profile.n_top();
        o.require(pv == Row{{mu, 1}, {second, LaurentPoly::monomial(shift)}} && shift == n - l,
                  "graded shift for n=" + std::to_string(n));
      }
    }
  }
  if (o.ok) o.note = "n = 2..5, second summand at t^(l_mu + n_top)";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (int n = 2; n <= 6 && o.ok; ++n) {
    auto d = taft::build_profile_and_table(n);
    for (const auto& w : d.dg->weights()) {
      const CheckReport c = verify_duality_identities(d.profile, w);
      o.require(c.all_passed(), c.all_passed() ? "" : c.failures().front());
      count += static_cast<int>(c.checks.size());
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, "time budget");
  if (o.ok) {
    std::ostringstream note;
    note << count << " identities, " << t << " s";
    o.note = note.str();
  }
  return o;
}

Outcome bgg_symmetry() {
  Outcome o;
  auto check = [&](const BGGReport& r, const std::string& tag) {
    const auto& ws = r.profile.dg().weights();
    for (const auto& mu : ws) {
      for (const auto& lambda : ws) {
        const LaurentPoly pv = entry(r.projective_verma, mu, lambda);
        const LaurentPoly vs = entry(r.verma_simple, lambda, mu);
        o.require(pv == vs.bar(), "bar-transpose on " + tag);
        o.require(pv.eval_one() == vs.eval_one(), "t=1 reciprocity on " + tag);
      }
    }
  };
  for (int n = 2; n <= 6; ++n) {
    auto d = taft::build_profile_and_table(n);
    check(bgg_matrices(d.profile, d.table), "Taft n=" + std::to_string(n));
  }
  const fs::path data(BGGKIT_DATA_DIR);
  const NicholsProfile p = io::profile_from_json(io::read_json_file(data / "fk3_profile.json"), data, {});
  const io::AliasMap names = io::aliases_from_json(io::read_json_file(data / "s3_aliases.json"), p.dg());
  check(bgg_from_decomposition(p, io::decomposition_from_json(io::read_json_file(data / "fk3_verma_simples.json"), names)),
        "FK3");
  if (o.ok) o.note = "Taft n = 2..6 and FK3";
  return o;
}

Outcome fk3() {
  Outcome o;
  const fs::path data(BGGKIT_DATA_DIR);
  const NicholsProfile p = io::profile_from_json(io::read_json_file(data / "fk3_profile.json"), data, {});
  const io::AliasMap names = io::aliases_from_json(io::read_json_file(data / "s3_aliases.json"), p.dg());
  const BGGReport r =
      bgg_from_decomposition(p, io::decomposition_from_json(io::read_json_file(data / "fk3_verma_simples.json"), names));
  auto w = [&](const char* s) { return names.resolve(s); };
  o.require(r.projective_verma.at(w("(σ,-)")) == Row{{w("(σ,-)"), 2}, {w("(e,+)"), 1}, {w("(τ,0)"), 1}, {w("(e,ρ)"), 1}},
            "ch P(σ,-)");
  o.require(r.projective_verma.at(w("(e,+)")) == Row{{w("(e,+)"), 2}, {w("(σ,-)"), 2}}, "ch P(e,+)");
  o.require(r.projective_verma.at(w("(e,ρ)")) == Row{{w("(τ,0)"), 1}, {w("(e,ρ)"), 1}, {w("(σ,-)"), 1}}, "ch P(e,ρ)");
  // the characters themselves, not just the coefficients
  KElement expected = gc_eval_ungraded(verma_char(p, w("(e,+)")));
  expected += gc_eval_ungraded(verma_char(p, w("(σ,-)")));
  expected *= 2;
  o.require(gc_eval_ungraded(r.projective_chars.at(w("(e,+)"))) == expected, "projective character of (e,+)");
  if (o.ok) {
    o.note = "ch P(σ,-) = " + io::render_combination(r.projective_verma.at(w("(σ,-)")), "ch M", names, w("(σ,-)"));
  }
  return o;
}

Outcome induction() {
  Outcome o;
  auto d = taft::build_profile_and_table(3);
  const BGGReport r = bgg_matrices(d.profile, d.table);
  for (const auto& mu : d.dg->weights()) {
    Row coeffs;
    try {
      coeffs = ind_into_projectives(r, mu);
    } catch (const InconsistencyError& e) {
      o.require(false, e.what());
      break;
    }
    GradedChar sum;
    std::int64_t dim = 0;
    for (const auto& [lambda, c] : coeffs) {
      o.require(c == d.table.at(lambda).coefficient(mu).bar(), "coefficient is bar(p_{L,mu})");
      sum += c * r.projective_chars.at(lambda);
      dim += c.eval_one() * gc_dimension(*d.dg, r.projective_chars.at(lambda)).eval_one();
    }
    o.require(sum == ind_char(d.profile, mu), "projective expansion equals ind_char");
    o.require(dim == 9 && gc_dimension(*d.dg, ind_char(d.profile, mu)).eval_one() == 9, "dim Ind = 9");
  }
  o.require(ind_into_projectives(r, d.weight_of(0, 0)) == Row{{d.weight_of(0, 0), 1}, {d.weight_of(2, 2), LaurentPoly::monomial(1)}},
            "Ind(0,0)");
  if (o.ok) o.note = "9 weights, Ind(0,0) = P(0,0) + t P(2,2)";
  return o;
}

Outcome tensor() {
  Outcome o;
  auto d = taft::build_profile_and_table(3);
  const BGGReport r = bgg_matrices(d.profile, d.table);
  int pairs = 0;
  for (const auto& mu : d.dg->weights()) {
    for (const auto& nu : d.dg->weights()) {
      try {
        const TensorExpansion t = tensor_projectives(r, mu, nu);
        o.require(t.dim_product == t.dim_expansion, "dimension");
        ++pairs;
      } catch (const InconsistencyError& e) {
        o.require(false, e.what());
      }
    }
  }
  const TensorExpansion spot = tensor_projectives(r, d.weight_of(2, 2), d.weight_of(2, 2));
  o.require(spot.ind == Row{{d.weight_of(0, 0), LaurentPoly::monomial(-2)}}, "P(2,2) x P(2,2)");
  if (o.ok) o.note = std::to_string(pairs) + " pairs, P(2,2)*P(2,2) = t^-2 Ind(0,0)";
  return o;
}

Outcome fusion_ring() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::shared_ptr<const DoubleGroup>> groups{load_group("s3.json")};
  for (int n = 2; n <= 6; ++n) groups.push_back(cyclic(n));
  for (const auto& dg : groups) {
    const auto& ws = dg->weights();
    auto product = [&](const KElement& a, Weight b) { return k_mul(*dg, a, KElement(b)); };
    for (const auto& a : ws) {
      o.require(dg->fusion(dg->epsilon(), a) == FusionRow{{a, 1}}, "unit");
      o.require(dg->dual(dg->dual(a)) == a, "dual involution");
      for (const auto& b : ws) {
        const FusionRow& ab = dg->fusion(a, b);
        o.require(ab == dg->fusion(b, a), "commutativity");
        std::int64_t dim = 0;
        for (const auto& [nu, n] : ab) {
          o.require(n > 0, "nonnegative integral coefficients");
          dim += n * dg->dimension(nu);
        }
        o.require(dim == dg->dimension(a) * dg->dimension(b), "dimension homomorphism");
        o.require(dg->unit_coefficient(a, b) == (b == dg->dual(a) ? 1 : 0), "unit coefficient");
        const KElement ab_k = k_mul(*dg, KElement(a), KElement(b));
        for (const auto& c : ws) {
          o.require(product(ab_k, c) == k_mul(*dg, KElement(a), product(KElement(b), c)), "associativity");
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "time budget");
  if (o.ok) {
    std::ostringstream note;
    note << "S3 and C_2..C_6, " << t << " s";
    o.note = note.str();
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    auto d = taft::build_profile_and_table(n);
    for (int rr = 0; rr < n; ++rr) {
      for (int s = 0; s < n; ++s) {
        Row oracle;
        try {
          for (const auto& layer : taft::explicit_matrices(d.params, rr, s).composition) {
            oracle[d.weight_of(layer.r, layer.s)] += LaurentPoly::monomial(layer.shift);
          }
        } catch (const OracleError& e) {
          o.require(false, e.what());
          continue;
        }
        o.require(decompose_into_simples(verma_char(d.profile, d.weight_of(rr, s)), d.table) == oracle,
                  "composition series at n=" + std::to_string(n));
        ++checked;
      }
    }
  }
  if (o.ok) o.note = std::to_string(checked) + " Verma modules";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"D(S3) weight census", census},
      {"Taft dimensions", taft_dimensions},
      {"simple-projective classification", classification},
      {"Taft projective structure", taft_structure},
      {"graded identity suite", identity_suite},
      {"graded BGG symmetry", bgg_symmetry},
      {"FK3 reproduction", fk3},
      {"induction decomposition", induction},
      {"tensor of projectives", tensor},
      {"fusion ring properties", fusion_ring},
      {"oracle/engine equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
