#include "bggkit/taft.hpp"

#include <numeric>

namespace bggkit::taft {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

CycMatrix zero_matrix(int n) { return CycMatrix(static_cast<std::size_t>(n), std::vector<Cyclotomic>(static_cast<std::size_t>(n))); }

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size();
  CycMatrix c(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

CycMatrix mat_scale(const CycMatrix& a, const Cyclotomic& z) {
  CycMatrix c = a;
  for (auto& row : c) {
    for (auto& x : row) x = x * z;
  }
  return c;
}

bool is_zero(const CycMatrix& a) {
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

// Column k as a vector: the image of m_k.
std::vector<Cyclotomic> column(const CycMatrix& a, int k) {
  std::vector<Cyclotomic> v;
  for (const auto& row : a) v.push_back(row[static_cast<std::size_t>(k)]);
  return v;
}

}  // namespace

TaftParams::TaftParams(int n_) : n(n_), q(Cyclotomic::root_of_unity(n_, 1)) {
  if (n < 2) throw InputError("taft.n", "n must be at least 2");
}

std::vector<Cyclotomic> lowering_coeffs(const TaftParams& params, int r, int s) {
  std::vector<Cyclotomic> c;
  Cyclotomic qint;  // [k]_q
  for (int k = 1; k < params.n; ++k) {
    qint += Cyclotomic::root_of_unity(params.n, k - 1);
    c.push_back(qint * (Cyclotomic(1) - Cyclotomic::root_of_unity(params.n, mod(r + s + k - 1, params.n))));
  }
  return c;
}

int simple_dimension(const TaftParams& params, int r, int s) {
  const auto c = lowering_coeffs(params, r, s);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) return static_cast<int>(k) + 1;
  }
  return params.n;
}

Weight TaftData::weight_of(int r, int s) const {
  return by_residue[static_cast<std::size_t>(mod(r, params.n) * params.n + mod(s, params.n))];
}

std::pair<int, int> TaftData::residues_of(Weight w) const {
  for (std::size_t i = 0; i < by_residue.size(); ++i) {
    if (by_residue[i] == w) return {static_cast<int>(i) / params.n, static_cast<int>(i) % params.n};
  }
  throw InputError("weight.known", "unknown weight " + weight_label(w));
}

std::map<Weight, std::string> TaftData::aliases() const {
  std::map<Weight, std::string> out;
  for (int r = 0; r < params.n; ++r) {
    for (int s = 0; s < params.n; ++s) out.emplace(weight_of(r, s), "(" + std::to_string(r) + "," + std::to_string(s) + ")");
  }
  return out;
}

GradedChar simple_char(const TaftData& data, int r, int s) { return data.table.at(data.weight_of(r, s)); }

TaftData build_profile_and_table(int n) {
  TaftParams params(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  images.back() = 0;
  const Perm c(images);
  const std::vector<Perm> gens{c};
  auto dg = std::make_shared<const DoubleGroup>(close_group(n, gens));

  // locate (r, s) by lookup: class of c^r, character with c -> q^s
  std::vector<Weight> by_residue(static_cast<std::size_t>(n * n));
  const FiniteGroup& g = dg->group();
  Perm power = Perm::identity(n);
  for (int r = 0; r < n; ++r, power = power * c) {
    const int cls = dg->classes().class_of[static_cast<std::size_t>(*g.index_of(power))];
    const auto& table = dg->centralizer_table(cls);
    const int c_local = table.classes.class_of[static_cast<std::size_t>(*dg->centralizer_group(cls).index_of(c))];
    for (int s = 0; s < n; ++s) {
      const Cyclotomic target = Cyclotomic::root_of_unity(n, s);
      int found = -1;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.value(static_cast<int>(i), c_local) == target) found = static_cast<int>(i);
      }
      if (found < 0) throw OracleError("no character of C_n sends c to q^" + std::to_string(s));
      by_residue[static_cast<std::size_t>(r * n + s)] = Weight{cls, found};
    }
  }

  std::vector<KElement> comps;
  for (int j = 0; j < n; ++j) comps.emplace_back(by_residue[static_cast<std::size_t>(j * n + j)]);
  NicholsProfile profile = NicholsProfile::create(dg, std::move(comps));

  std::map<Weight, GradedChar> simples;
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      GradedChar ch;
      const int d = simple_dimension(params, r, s);
      for (int k = 0; k < d; ++k) ch.add(-k, by_residue[static_cast<std::size_t>(mod(r + k, n) * n + mod(s + k, n))], 1);
      simples.emplace(by_residue[static_cast<std::size_t>(r * n + s)], std::move(ch));
    }
  }
  SimpleTable table = SimpleTable::create(*dg, std::move(simples));
  return TaftData{params, dg, profile, table, by_residue};
}

VermaMatrices explicit_matrices(const TaftParams& params, int r, int s) {
  const int n = params.n;
  const auto c = lowering_coeffs(params, r, s);
  VermaMatrices v;
  v.K = zero_matrix(n);
  v.L = zero_matrix(n);
  v.E = zero_matrix(n);
  v.F = zero_matrix(n);
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    v.K[i][i] = Cyclotomic::root_of_unity(n, mod(r + k, n));
    v.L[i][i] = Cyclotomic::root_of_unity(n, mod(s + k, n));
    if (k > 0) v.E[i - 1][i] = c[i - 1];
    if (k + 1 < n) v.F[i + 1][i] = Cyclotomic(1);
  }

  // weights: m_k is a common eigenvector with eigenvalues q^{r+k}, q^{s+k}
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    for (int j = 0; j < n; ++j) {
      if (j != k && (!v.K[static_cast<std::size_t>(j)][i].is_zero() || !v.L[static_cast<std::size_t>(j)][i].is_zero())) {
        throw OracleError("group-likes are not diagonal on m_" + std::to_string(k));
      }
    }
    auto er = v.K[i][i].root_exponent();
    auto es = v.L[i][i].root_exponent();
    if (!er || !es || mod(*er, n) != mod(r + k, n) || mod(*es, n) != mod(s + k, n)) {
      throw OracleError("m_" + std::to_string(k) + " has the wrong weight");
    }
  }
  // x raises both weight indices by one, its partner lowers them
  const Cyclotomic qinv = Cyclotomic::root_of_unity(n, n - 1);
  for (const auto* g : {&v.K, &v.L}) {
    if (!(mat_mul(*g, v.F) == mat_scale(mat_mul(v.F, *g), params.q)) ||
        !(mat_mul(*g, v.E) == mat_scale(mat_mul(v.E, *g), qinv))) {
      throw OracleError("ladder operators do not have bidegree (1,1)");
    }
  }
  CycMatrix e_pow = v.E;
  CycMatrix f_pow = v.F;
  for (int k = 1; k < n; ++k) {
    e_pow = mat_mul(e_pow, v.E);
    f_pow = mat_mul(f_pow, v.F);
  }
  if (!is_zero(e_pow) || !is_zero(f_pow)) throw OracleError("ladder operators are not nilpotent of order n");

  // weight spaces are the lines through m_k, so the kernel of E on each is all or nothing
  for (int k = 1; k < n; ++k) {
    bool killed = true;
    for (const auto& x : column(v.E, k)) killed = killed && x.is_zero();
    if (killed) v.singular.push_back(k);
  }
  v.head_dimension = v.singular.empty() ? n : v.singular.front();
  if (v.head_dimension != simple_dimension(params, r, s)) {
    throw OracleError("singular vector scan disagrees with the coefficient formula at (" + std::to_string(r) + "," +
                      std::to_string(s) + ")");
  }
  // below the first singular vector every m_k generates m_0, so span{m_k : k >= d} is the unique maximal submodule
  for (int k = 1; k < v.head_dimension; ++k) {
    std::vector<Cyclotomic> vec(static_cast<std::size_t>(n));
    vec[static_cast<std::size_t>(k)] = Cyclotomic(1);
    for (int step = 0; step < k; ++step) {
      std::vector<Cyclotomic> next(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < vec.size(); ++i) {
        for (std::size_t j = 0; j < vec.size(); ++j) {
          if (!v.E[i][j].is_zero() && !vec[j].is_zero()) next[i] += v.E[i][j] * vec[j];
        }
      }
      vec = std::move(next);
    }
    if (vec[0].is_zero()) throw OracleError("m_" + std::to_string(k) + " does not generate the Verma module");
  }

  int start = 0;
  for (std::size_t i = 0; i <= v.singular.size(); ++i) {
    v.composition.push_back(Layer{mod(r + start, n), mod(s + start, n), -start});
    if (i < v.singular.size()) start = v.singular[i];
  }
  return v;
}

TaftSummary verify_taft(const TaftData& data, const BGGReport& report) {
  const int n = data.params.n;
  const DoubleGroup& dg = *data.dg;
  TaftSummary out;
  out.n = n;
  out.weights = static_cast<int>(dg.size());
  auto name = [](int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; };

  for (const auto& f : verify_report(report).failures()) out.failures.push_back("report: " + f);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      const Weight w = data.weight_of(r, s);
      for (const auto& f : verify_duality_identities(data.profile, w).failures()) out.failures.push_back(f);

      if (gc_eval_ungraded(verma_char(data.profile, w)).dimension(dg) != n) {
        out.failures.push_back("dim M" + name(r, s) + " != n");
      }
      const int d = simple_dimension(data.params, r, s);
      if (gc_eval_ungraded(data.table.at(w)).dimension(dg) != d) out.failures.push_back("dim L" + name(r, s));

      std::map<Weight, LaurentPoly> oracle;
      for (const auto& layer : explicit_matrices(data.params, r, s).composition) {
        oracle[data.weight_of(layer.r, layer.s)] += LaurentPoly::monomial(layer.shift);
      }
      auto row = report.verma_simple.find(w);
      if (row == report.verma_simple.end() || row->second != oracle) {
        out.failures.push_back("composition series of M" + name(r, s) + " disagrees with the matrix oracle");
      }

      const bool expect_simple = mod(r + s, n) == 1;
      const bool simple = report.classification.at(w) == VermaClass::simple_projective;
      if (simple != expect_simple) out.failures.push_back("classification of M" + name(r, s));
      if (simple) ++out.simple_projective;

      // P(r, 1-(r+l)) = M(r, 1-(r+l)) + t^{n-l} M(r+l, 1-r)
      const int l = mod(1 - r - s, n);
      std::map<Weight, LaurentPoly> expected{{w, LaurentPoly(1)}};
      if (l != 0) expected[data.weight_of(r + l, 1 - r)] += LaurentPoly::monomial(n - l);
      if (report.projective_verma.at(w) != expected) out.failures.push_back("Verma filtration of P" + name(r, s));
    }
  }
  return out;
}

}  // namespace bggkit::taft
