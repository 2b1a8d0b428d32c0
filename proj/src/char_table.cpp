#include "bggkit/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bggkit/errors.hpp"

namespace bggkit {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Arithmetic in F_p, p < 2^31.
struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(std::int64_t a) const {
    auto m = static_cast<std::int64_t>(p);
    return static_cast<u64>(((a % m) + m) % m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(const Zp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; });
    if (ok) return g;
  }
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const Zp& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 factor = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {x : M x = 0} for a square matrix M.
Mat nullspace(Mat m, const Zp& f) {
  const std::size_t n = m.size();
  auto pivots = rref(m, f);
  Mat basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial via Hessenberg reduction; coefficients low to high.
Vec charpoly(Mat h, const Zp& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    u64 inv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      u64 u = f.mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    // (x - h[k-1][k-1]) p[k-1]
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[k - 1][d]);
      next[d] = f.sub(next[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      u64 c = f.mul(t, h[k - i - 1][k - 1]);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] = f.sub(next[d], f.mul(c, p[k - i - 1][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(const Vec& poly, const Zp& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

/// Class matrix A_i with (A_i)_{jk} = #{x in C_i : x^-1 z_k in C_j}.
Mat class_matrix(const FiniteGroup& g, const ConjugacyData& cd, std::size_t i, const Zp& f) {
  const std::size_t r = cd.size();
  Mat a(r, Vec(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    int z = cd.classes[k].representative;
    for (int x : cd.classes[i].members) {
      auto j = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(g.multiply(g.inverse(x), z))]);
      a[j][k] = f.add(a[j][k], 1);
    }
  }
  return a;
}

struct LiftedRow {
  std::int64_t degree;
  std::vector<Cyclotomic> values;
  std::vector<std::vector<std::int64_t>> multiplicities;  // per class, indexed by exponent of zeta_e
};

}  // namespace

namespace detail {

u64 dixon_prime(u64 e, u64 bound) {
  for (u64 p = e + 1;; p += e) {
    if (p > bound && is_prime(p)) return p;
  }
}

}  // namespace detail

OrdinaryCharTable character_table(const FiniteGroup& g) { return character_table(g, conjugacy_classes(g)); }

OrdinaryCharTable character_table(const FiniteGroup& g, const ConjugacyData& cd) {
  const std::size_t r = cd.size();
  const u64 order = g.order();
  const u64 e = static_cast<u64>(g.exponent());
  u64 bound = 1;
  while (bound * bound <= 4 * order) ++bound;  // p > 2 sqrt|G|
  const Zp f{detail::dixon_prime(e, bound - 1)};
  if (f.p >= (u64{1} << 31)) throw ResourceError("Dixon prime too large");

  // Split F_p^r into common eigenspaces of the class matrices.
  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    const Mat a = class_matrix(g, cd, i, f);
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = rref(basis, f);
      const std::size_t m = basis.size();
      Mat restricted(m, Vec(m, 0));
      for (std::size_t s = 0; s < m; ++s) {
        Vec image(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t k = 0; k < r; ++k) image[j] = f.add(image[j], f.mul(a[j][k], basis[s][k]));
        }
        for (std::size_t t = 0; t < m; ++t) restricted[t][s] = image[pivots[t]];
      }
      std::size_t found = 0;
      for (u64 lambda : roots(charpoly(restricted, f), f)) {
        Mat shifted = restricted;
        for (std::size_t t = 0; t < m; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        Mat sub;
        for (const auto& c : nullspace(shifted, f)) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < m; ++t) {
            for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[t], basis[t][k]));
          }
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != m) throw InconsistencyError("class matrix not diagonalizable modulo " + std::to_string(f.p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) {
    throw InconsistencyError("Dixon-Schneider split into " + std::to_string(spaces.size()) + " spaces, expected " +
                             std::to_string(r));
  }

  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  std::vector<LiftedRow> lifted;
  for (const auto& space : spaces) {
    Vec omega = space.front();
    if (omega[0] == 0) throw InconsistencyError("central character vanishes on the identity class");
    u64 inv0 = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, inv0);

    // chi(1)^2 = |G| / sum_i omega_i omega_i* / |C_i|
    u64 s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      auto ii = static_cast<std::size_t>(cd.inverse_class[i]);
      s = f.add(s, f.mul(f.mul(omega[i], omega[ii]), f.inv(cd.class_size(static_cast<int>(i)) % f.p)));
    }
    u64 d2 = f.mul(order % f.p, f.inv(s));
    std::int64_t degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (f.mul(d, d) == d2) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    }
    if (degree == 0) throw InconsistencyError("no integral character degree modulo " + std::to_string(f.p));

    Vec chi(r);
    for (std::size_t i = 0; i < r; ++i) {
      chi[i] = f.mul(f.mul(omega[i], static_cast<u64>(degree)), f.inv(cd.class_size(static_cast<int>(i)) % f.p));
    }

    LiftedRow row{degree, {}, {}};
    for (std::size_t i = 0; i < r; ++i) {
      const int rep = cd.classes[i].representative;
      const auto o = static_cast<u64>(g.element_order(rep));
      const u64 zo = f.pow(z, e / o);
      Vec powers(o);  // chi(rep^j)
      int x = 0;
      for (u64 j = 0; j < o; ++j) {
        powers[j] = chi[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(x)])];
        x = g.multiply(x, rep);
      }
      std::vector<Rational> coeffs(e);
      std::vector<std::int64_t> mult(e, 0);
      const u64 inv_o = f.inv(o);
      std::int64_t total = 0;
      for (u64 k = 0; k < o; ++k) {
        u64 acc = 0;
        for (u64 j = 0; j < o; ++j) acc = f.add(acc, f.mul(powers[j], f.pow(zo, (o - (j * k) % o) % o)));
        u64 m = f.mul(acc, inv_o);
        if (m > static_cast<u64>(degree)) throw InconsistencyError("eigenvalue multiplicity out of range");
        coeffs[k * (e / o)] = static_cast<long>(m);
        mult[k * (e / o)] = static_cast<std::int64_t>(m);
        total += static_cast<std::int64_t>(m);
      }
      if (total != degree) throw InconsistencyError("eigenvalue multiplicities do not sum to the degree");
      row.values.emplace_back(static_cast<int>(e), std::move(coeffs));
      row.multiplicities.push_back(std::move(mult));
    }
    lifted.push_back(std::move(row));
  }

  std::sort(lifted.begin(), lifted.end(), [](const LiftedRow& a, const LiftedRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t c = 0; c < a.multiplicities.size(); ++c) {
      if (a.multiplicities[c] != b.multiplicities[c]) {
        return std::lexicographical_compare(b.multiplicities[c].begin(), b.multiplicities[c].end(),
                                            a.multiplicities[c].begin(), a.multiplicities[c].end());
      }
    }
    return false;
  });

  OrdinaryCharTable table;
  table.group_order = order;
  table.exponent = static_cast<int>(e);
  table.classes = cd;
  std::int64_t sum_sq = 0;
  for (auto& row : lifted) {
    sum_sq += row.degree * row.degree;
    table.degrees.push_back(row.degree);
    table.rows.push_back(std::move(row.values));
  }
  if (sum_sq != static_cast<std::int64_t>(order)) throw InconsistencyError("character degrees do not square-sum to |G|");
  return table;
}

Cyclotomic class_function_inner_product(const OrdinaryCharTable& table, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b) {
  Cyclotomic acc;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    acc += (a[c] * b[c].conjugate()) * Rational(static_cast<long>(table.classes.class_size(static_cast<int>(c))));
  }
  return acc * Rational(1, static_cast<long>(table.group_order));
}

bool check_orthogonality(const OrdinaryCharTable& table) {
  const std::size_t r = table.size();
  if (r != table.classes.size()) return false;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      if (class_function_inner_product(table, table.rows[i], table.rows[j]) != Cyclotomic(i == j ? 1 : 0)) return false;
    }
  }
  // columns: sum_chi chi(c) conj(chi(d)) = |C(c)| delta_cd
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < r; ++i) acc += table.rows[i][c] * table.rows[i][d].conjugate();
      long expected = c == d ? static_cast<long>(table.group_order / table.classes.class_size(static_cast<int>(c))) : 0;
      if (acc != Cyclotomic(expected)) return false;
    }
  }
  return true;
}

}  // namespace bggkit
