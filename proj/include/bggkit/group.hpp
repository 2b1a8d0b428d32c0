#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bggkit {

/// A permutation of {0, ..., degree-1} given by its image array.
/// Composition `p * q` applies q first.
class Perm {
 public:
  Perm() = default;
  /// Throws InputError if `images` is not a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic on image arrays; this is the canonical element order.
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 10000;

/// A finite permutation group stored as its sorted element list.
/// Elements are addressed by their index in that list; index 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  int exponent() const { return exponent_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  std::optional<int> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  int multiply(int a, int b) const;
  int inverse(int a) const;
  /// x a x^-1
  int conjugate(int a, int x) const;
  bool commute(int a, int b) const { return multiply(a, b) == multiply(b, a); }
  int element_order(int a) const { return element(a).order(); }

  /// Builds a group from an already-closed, sorted element list.
  static FiniteGroup from_elements(int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements);

 private:
  int degree_ = 0;
  int exponent_ = 1;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverse_;
};

/// Closes `gens` under multiplication. Throws InputError on a generator of the
/// wrong degree, ResourceError when the order would exceed `order_cap`.
FiniteGroup close_group(int degree, std::span<const Perm> gens,
                        std::size_t order_cap = kDefaultGroupOrderCap);

struct ConjugacyClass {
  int representative;        // minimal element index of the class
  std::vector<int> members;  // ascending element indices
};

struct ConjugacyData {
  std::vector<ConjugacyClass> classes;  // ordered by representative
  std::vector<int> class_of;            // element index -> class number
  std::vector<int> inverse_class;       // class -> class of inverses

  std::size_t size() const { return classes.size(); }
  std::size_t class_size(int c) const { return classes[static_cast<std::size_t>(c)].members.size(); }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

/// {h : hg = gh} as a group on the same points. Throws InputError if g is not in G.
FiniteGroup centralizer(const FiniteGroup& group, const Perm& g);

}  // namespace bggkit
