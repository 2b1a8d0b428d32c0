// bggkit command line: weights, fusion, bgg, ind, tensor, taft, verify.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bggkit/session.hpp"

namespace fs = std::filesystem;
using namespace bggkit;

namespace {

struct Config : io::Sources {
  std::string out;
  bool ungraded = false;
};

using io::Inputs;
using io::load_inputs;
using io::make_report;

int cmd_weights(const Config& c) {
  Inputs in = load_inputs(c, false);
  const DoubleGroup& dg = *in.dg;
  std::int64_t sum = 0;
  std::cout << "weight\talias\tdim\tdual\n";
  for (const auto& w : dg.weights()) {
    const auto d = dg.dimension(w);
    sum += d * d;
    std::cout << weight_label(w) << "\t" << in.names.name(w) << "\t" << d << "\t" << in.names.name(dg.dual(w)) << "\n";
  }
  std::cout << dg.size() << " weights, |G| = " << dg.group().order() << ", sum dim^2 = " << sum << "\n";
  return 0;
}

int cmd_fusion(const Config& c, const std::string& a, const std::string& b) {
  Inputs in = load_inputs(c, false);
  const Weight wa = in.names.resolve(a);
  const Weight wb = in.names.resolve(b);
  in.dg->index_of(wa);
  in.dg->index_of(wb);
  std::map<Weight, LaurentPoly> row;
  std::int64_t dim = 0;
  for (const auto& [w, n] : in.dg->fusion(wa, wb)) {
    row.emplace(w, LaurentPoly(n));
    dim += n * in.dg->dimension(w);
  }
  std::cout << in.names.name(wa) << " * " << in.names.name(wb) << " = " << io::render_combination(row, "", in.names)
            << "\n";
  std::cout << "dims " << in.dg->dimension(wa) * in.dg->dimension(wb) << " = " << dim << "\n";
  return 0;
}

int cmd_bgg(const Config& c) {
  Inputs in = load_inputs(c, true);
  const BGGReport r = make_report(in, c.ungraded);
  const CheckReport checks = verify_report(r);
  const std::string text = io::render_report_text(r, in.names, checks);
  std::cout << text;
  if (!c.out.empty()) {
    io::write_text_file(fs::path(c.out) / "report.json", io::dump(io::report_to_json(r, in.names, checks)));
    io::write_text_file(fs::path(c.out) / "report.txt", text);
  }
  return checks.all_passed() ? 0 : 3;
}

int cmd_ind(const Config& c, const std::string& mu_text) {
  Inputs in = load_inputs(c, true);
  if (!in.table) throw InputError("config.simples", "ind needs --simples");
  const BGGReport r = bgg_matrices(*in.profile, *in.table);
  const Weight mu = in.names.resolve(mu_text);
  in.dg->index_of(mu);
  const auto coeffs = ind_into_projectives(r, mu);
  std::int64_t dim = 0;
  for (const auto& [lambda, p] : coeffs) dim += p.eval_one() * gc_eval_ungraded(r.projective_chars.at(lambda)).dimension(*in.dg);
  std::cout << io::applied("Ind", in.names.name(mu)) << " = " << io::render_combination(coeffs, "P", in.names) << "\n";
  std::cout << "dims " << dim << " = " << in.profile->dim_B() * in.profile->dim_B() * in.dg->dimension(mu) << "\n";
  return 0;
}

int cmd_tensor(const Config& c, const std::string& a, const std::string& b) {
  Inputs in = load_inputs(c, true);
  const BGGReport r = make_report(in, false);
  const Weight mu = in.names.resolve(a);
  const Weight nu = in.names.resolve(b);
  in.dg->index_of(mu);
  in.dg->index_of(nu);
  const TensorExpansion t = tensor_projectives(r, mu, nu);
  std::cout << io::applied("P", in.names.name(mu)) << " * " << io::applied("P", in.names.name(nu)) << " = "
            << io::render_combination(t.ind, "Ind", in.names) << "\n";
  std::cout << "dims " << t.dim_product << " = " << t.dim_expansion << "\n";
  if (r.graded && !t.graded_consistent) {
    std::cerr << "graded characters of the expansion do not match\n";
    return 3;
  }
  return 0;
}

int cmd_taft(const Config& c, int n) {
  if (n < 2 || n > 12) throw InputError("taft.n", "n must be between 2 and 12");
  const taft::TaftData data = taft::build_profile_and_table(n);
  const BGGReport r = bgg_matrices(data.profile, data.table);
  const taft::TaftSummary s = taft::verify_taft(data, r);
  if (!c.out.empty()) io::write_taft_bundle(data, r, c.out);
  for (const auto& f : s.failures) std::cerr << "FAIL " << f << "\n";
  if (!s.ok()) {
    std::cout << s.failures.size() << " verification failures over " << s.weights << " weights\n";
    return 4;
  }
  std::cout << "all " << s.weights << " weights verified; " << s.simple_projective << " simple projective Vermas\n";
  return 0;
}

int cmd_verify(const Config& c) {
  Inputs in = load_inputs(c, true);
  CheckReport all;
  for (const auto& w : in.dg->weights()) {
    for (auto& chk : verify_duality_identities(*in.profile, w).checks) all.checks.push_back(chk);
  }
  if (in.table || in.decomposition) {
    for (auto& chk : verify_report(make_report(in, c.ungraded)).checks) all.checks.push_back(chk);
  }
  for (const auto& f : all.failures()) std::cout << "FAIL " << f << "\n";
  std::cout << all.checks.size() - all.failures().size() << "/" << all.checks.size() << " checks passed\n";
  return all.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded BGG reciprocity toolkit for Drinfeld doubles"};
  app.require_subcommand(1);
  Config c;
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--group", c.group, "group file");
    sub->add_option("--aliases", c.aliases, "weight alias file");
    sub->add_option("--cache-dir", c.cache_dir, "character table cache (default: $BGGKIT_CACHE_DIR)");
    sub->add_option("--max-group-order", c.max_group_order, "refuse groups larger than this");
  };
  auto with_profile = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--profile", c.profile, "Nichols profile file");
    sub->add_option("--simples", c.simples, "simple character table file");
    sub->add_option("--decomposition", c.decomposition, "ungraded [M:L] matrix file");
    sub->add_option("--out", c.out, "output directory");
    sub->add_flag("--ungraded", c.ungraded, "collapse to t = 1");
  };

  std::string a;
  std::string b;
  int n = 0;
  auto* weights = app.add_subcommand("weights", "list the weights of D(G)");
  common(weights);
  auto* fusion = app.add_subcommand("fusion", "tensor product of two weights");
  common(fusion);
  fusion->add_option("a", a)->required();
  fusion->add_option("b", b)->required();
  auto* bgg = app.add_subcommand("bgg", "decomposition, projective and Cartan matrices");
  with_profile(bgg);
  auto* ind = app.add_subcommand("ind", "induced module as a sum of projectives");
  with_profile(ind);
  ind->add_option("mu", a)->required();
  auto* tensor = app.add_subcommand("tensor", "tensor product of two projectives");
  with_profile(tensor);
  tensor->add_option("mu", a)->required();
  tensor->add_option("nu", b)->required();
  auto* taft = app.add_subcommand("taft", "generate and verify the Taft algebra data");
  taft->add_option("n", n)->required();
  taft->add_option("--out", c.out, "write group, profile, simples, aliases and report here");
  auto* verify = app.add_subcommand("verify", "run every identity check on the given data");
  with_profile(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*weights) return cmd_weights(c);
    if (*fusion) return cmd_fusion(c, a, b);
    if (*bgg) return cmd_bgg(c);
    if (*ind) return cmd_ind(c, a);
    if (*tensor) return cmd_tensor(c, a, b);
    if (*taft) return cmd_taft(c, n);
    if (*verify) return cmd_verify(c);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const DecompositionError& e) {
    std::cerr << "inconsistent: " << e.what() << "\nresidual: " << io::graded_to_json(e.residual()).dump() << "\n";
    return 3;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return 3;
  } catch (const OracleError& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
