#include "bggkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bggkit/errors.hpp"

namespace bggkit {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InputError("perm.bijective", "image array " + to_string() + " is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  int result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm operator*(const Perm& p, const Perm& q) {
  Perm r;
  r.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  return r;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? "," : "") << images_[i];
  out << "]";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<int> FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::multiply(int a, int b) const { return index_.at(element(a) * element(b)); }

int FiniteGroup::inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

int FiniteGroup::conjugate(int a, int x) const { return multiply(multiply(x, a), inverse(x)); }

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements) {
  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_ = std::move(sorted_elements);
  g.index_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], static_cast<int>(i));
  g.inverse_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    g.inverse_[i] = g.index_.at(g.elements_[i].inverse());
    g.exponent_ = std::lcm(g.exponent_, g.elements_[i].order());
  }
  return g;
}

FiniteGroup close_group(int degree, std::span<const Perm> gens, std::size_t order_cap) {
  if (degree < 1) throw InputError("group.degree", "degree must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InputError("group.generator_degree",
                       "generator " + g.to_string() + " does not act on " + std::to_string(degree) + " points");
    }
  }
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.emplace(elements.front(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = elements[i] * g;
      if (seen.contains(next)) continue;
      if (elements.size() >= order_cap) {
        throw ResourceError("group order exceeds cap of " + std::to_string(order_cap));
      }
      seen.emplace(next, static_cast<int>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  std::sort(elements.begin(), elements.end());
  return FiniteGroup::from_elements(degree, std::vector<Perm>(gens.begin(), gens.end()), std::move(elements));
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  ConjugacyData data;
  data.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> gens;
  for (const auto& s : g.generators()) gens.push_back(*g.index_of(s));
  for (int a = 0; a < n; ++a) {
    if (data.class_of[static_cast<std::size_t>(a)] >= 0) continue;
    const int id = static_cast<int>(data.classes.size());
    ConjugacyClass cls{a, {a}};
    data.class_of[static_cast<std::size_t>(a)] = id;
    // orbit under conjugation by the generators
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (int s : gens) {
        int c = g.conjugate(cls.members[i], s);
        if (data.class_of[static_cast<std::size_t>(c)] < 0) {
          data.class_of[static_cast<std::size_t>(c)] = id;
          cls.members.push_back(c);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    data.classes.push_back(std::move(cls));
  }
  data.inverse_class.resize(data.classes.size());
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    data.inverse_class[c] = data.class_of[static_cast<std::size_t>(g.inverse(data.classes[c].representative))];
  }
  return data;
}

FiniteGroup centralizer(const FiniteGroup& group, const Perm& g) {
  auto gi = group.index_of(g);
  if (!gi) throw InputError("centralizer.member", "element " + g.to_string() + " is not in the group");
  std::vector<Perm> elements;
  for (int h = 0; h < static_cast<int>(group.order()); ++h) {
    if (group.commute(h, *gi)) elements.push_back(group.element(h));
  }
  // Greedy generating set: add an element whenever it escapes the span so far.
  std::vector<Perm> gens;
  std::unordered_map<Perm, int, PermHash> span{{Perm::identity(group.degree()), 0}};
  for (const auto& e : elements) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    std::vector<Perm> frontier;
    for (const auto& [p, unused] : span) frontier.push_back(p);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& s : gens) {
        Perm next = frontier[i] * s;
        if (span.emplace(next, 0).second) frontier.push_back(std::move(next));
      }
    }
  }
  return FiniteGroup::from_elements(group.degree(), std::move(gens), std::move(elements));
}

}  // namespace bggkit
