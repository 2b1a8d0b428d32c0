// Python bindings: thin wrappers over the file-based session API.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bggkit/session.hpp"

namespace py = pybind11;
using namespace bggkit;

namespace {

using Coeffs = std::map<std::string, LaurentPoly::Terms>;

std::string opt(const std::optional<std::string>& s) { return s.value_or(""); }

io::Sources sources(const std::optional<std::string>& group, const std::optional<std::string>& profile,
                    const std::optional<std::string>& simples, const std::optional<std::string>& decomposition,
                    const std::optional<std::string>& aliases, const std::optional<std::string>& cache_dir) {
  io::Sources s;
  s.group = opt(group);
  s.profile = opt(profile);
  s.simples = opt(simples);
  s.decomposition = opt(decomposition);
  s.aliases = opt(aliases);
  s.cache_dir = opt(cache_dir);
  return s;
}

Coeffs named(const std::map<Weight, LaurentPoly>& m, const io::AliasMap& names) {
  Coeffs out;
  for (const auto& [w, p] : m) out.emplace(names.name(w), p.terms());
  return out;
}

Weight checked(const io::Inputs& in, const std::string& text) {
  const Weight w = in.names.resolve(text);
  in.dg->index_of(w);
  return w;
}

py::list weights(const std::string& group, const std::optional<std::string>& aliases,
                 const std::optional<std::string>& cache_dir) {
  const io::Inputs in = io::load_inputs(sources(group, {}, {}, {}, aliases, cache_dir), false);
  py::list out;
  for (const auto& w : in.dg->weights()) {
    py::dict row;
    row["label"] = weight_label(w);
    row["alias"] = in.names.name(w);
    row["dim"] = in.dg->dimension(w);
    row["dual"] = in.names.name(in.dg->dual(w));
    out.append(row);
  }
  return out;
}

std::map<std::string, std::int64_t> fusion(const std::string& group, const std::string& a, const std::string& b,
                                           const std::optional<std::string>& aliases) {
  const io::Inputs in = io::load_inputs(sources(group, {}, {}, {}, aliases, {}), false);
  std::map<std::string, std::int64_t> out;
  for (const auto& [w, n] : in.dg->fusion(checked(in, a), checked(in, b))) out.emplace(in.names.name(w), n);
  return out;
}

py::dict taft_verify(int n, const std::optional<std::string>& out_dir) {
  if (n < 2 || n > 12) throw InputError("taft.n", "n must be between 2 and 12");
  const taft::TaftData data = taft::build_profile_and_table(n);
  const BGGReport r = bgg_matrices(data.profile, data.table);
  const taft::TaftSummary s = taft::verify_taft(data, r);
  if (out_dir) io::write_taft_bundle(data, r, *out_dir);
  py::dict out;
  out["n"] = s.n;
  out["weights"] = s.weights;
  out["simple_projective"] = s.simple_projective;
  out["failures"] = s.failures;
  return out;
}

std::string bgg_report(const std::string& profile, const std::optional<std::string>& simples,
                       const std::optional<std::string>& decomposition, const std::optional<std::string>& aliases,
                       bool ungraded) {
  const io::Inputs in = io::load_inputs(sources({}, profile, simples, decomposition, aliases, {}), true);
  const BGGReport r = io::make_report(in, ungraded);
  return io::report_to_json(r, in.names, verify_report(r)).dump();
}

Coeffs ind(const std::string& profile, const std::string& simples, const std::string& mu,
           const std::optional<std::string>& aliases) {
  const io::Inputs in = io::load_inputs(sources({}, profile, simples, {}, aliases, {}), true);
  return named(ind_into_projectives(io::make_report(in, false), checked(in, mu)), in.names);
}

py::dict tensor(const std::string& profile, const std::string& simples, const std::string& mu, const std::string& nu,
                const std::optional<std::string>& aliases) {
  const io::Inputs in = io::load_inputs(sources({}, profile, simples, {}, aliases, {}), true);
  const TensorExpansion t = tensor_projectives(io::make_report(in, false), checked(in, mu), checked(in, nu));
  py::dict out;
  out["ind"] = named(t.ind, in.names);
  out["dim_product"] = t.dim_product;
  out["dim_expansion"] = t.dim_expansion;
  out["graded_consistent"] = t.graded_consistent;
  return out;
}

}  // namespace

PYBIND11_MODULE(_bggkit, m) {
  m.doc() = "Graded BGG reciprocity for Drinfeld doubles of finite groups";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);

  m.def("weights", &weights, py::arg("group"), py::arg("aliases") = py::none(), py::arg("cache_dir") = py::none(),
        "Weights of D(G) in canonical order, with dimension and dual.");
  m.def("fusion", &fusion, py::arg("group"), py::arg("a"), py::arg("b"), py::arg("aliases") = py::none(),
        "Multiplicities of a (x) b.");
  m.def("taft", &taft_verify, py::arg("n"), py::arg("out") = py::none(),
        "Build and verify the Taft algebra data for C_n, optionally writing the input files to `out`.");
  m.def("bgg_report", &bgg_report, py::arg("profile"), py::arg("simples") = py::none(),
        py::arg("decomposition") = py::none(), py::arg("aliases") = py::none(), py::arg("ungraded") = false,
        "Report JSON: decomposition, projective and Cartan matrices, classification, checks.");
  m.def("ind", &ind, py::arg("profile"), py::arg("simples"), py::arg("mu"), py::arg("aliases") = py::none(),
        "Ind(mu) as a combination of projectives; coefficients map degree to multiplicity.");
  m.def("tensor", &tensor, py::arg("profile"), py::arg("simples"), py::arg("mu"), py::arg("nu"),
        py::arg("aliases") = py::none(), "P(mu) (x) P(nu) as a combination of induced modules.");
}
