#pragma once

#include <cstdint>
#include <vector>

#include "bggkit/cyclotomic.hpp"
#include "bggkit/group.hpp"

namespace bggkit {

/// Ordinary character table. Rows are irreducible characters, columns follow
/// `classes`; all values live in Q(zeta_exponent).
struct OrdinaryCharTable {
  std::size_t group_order = 1;
  int exponent = 1;
  ConjugacyData classes;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::int64_t> degrees;

  std::size_t size() const { return rows.size(); }
  const Cyclotomic& value(int irrep, int cls) const {
    return rows[static_cast<std::size_t>(irrep)][static_cast<std::size_t>(cls)];
  }
};

/// Dixon-Schneider: common eigenvectors of the class matrices modulo a prime
/// p = 1 (mod exponent), p > 2 sqrt|G|, lifted to exact cyclotomics through
/// eigenvalue multiplicities. Rows are sorted by degree, then by the
/// eigenvalue-multiplicity vectors of their values column by column (for
/// linear characters this is the order of the exponent k in zeta^k).
OrdinaryCharTable character_table(const FiniteGroup& g);
OrdinaryCharTable character_table(const FiniteGroup& g, const ConjugacyData& classes);

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic class_function_inner_product(const OrdinaryCharTable& table, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b);

/// Exact row and column orthogonality.
bool check_orthogonality(const OrdinaryCharTable& table);

namespace detail {
/// Smallest prime p = 1 (mod e) with p > bound.
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t bound);
}  // namespace detail

}  // namespace bggkit
