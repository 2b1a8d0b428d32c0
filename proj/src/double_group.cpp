#include "bggkit/double_group.hpp"

#include <charconv>

#include "bggkit/errors.hpp"

namespace bggkit {

std::string weight_label(Weight w) { return "g" + std::to_string(w.class_id) + "r" + std::to_string(w.irrep_id); }

std::optional<Weight> parse_weight_label(std::string_view label) {
  if (label.size() < 4 || label.front() != 'g') return std::nullopt;
  auto rpos = label.find('r');
  if (rpos == std::string_view::npos) return std::nullopt;
  Weight w;
  auto parse = [](std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
  };
  if (!parse(label.substr(1, rpos - 1), w.class_id) || !parse(label.substr(rpos + 1), w.irrep_id)) return std::nullopt;
  return w;
}

DoubleGroup::DoubleGroup(FiniteGroup group) : group_(std::move(group)), classes_(conjugacy_classes(group_)) {
  init({});
}

DoubleGroup::DoubleGroup(FiniteGroup group, std::vector<OrdinaryCharTable> centralizer_tables)
    : group_(std::move(group)), classes_(conjugacy_classes(group_)) {
  if (centralizer_tables.size() != classes_.size()) {
    throw InputError("tables.count", "expected one centralizer table per conjugacy class");
  }
  init(std::move(centralizer_tables));
}

void DoubleGroup::init(std::vector<OrdinaryCharTable> tables) {
  const int n = static_cast<int>(group_.order());
  conjugator_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const int a = classes_.classes[c].representative;
    for (int x = 0; x < n; ++x) {
      int g = group_.conjugate(a, x);
      if (conjugator_[static_cast<std::size_t>(g)] < 0) conjugator_[static_cast<std::size_t>(g)] = x;
    }
    FiniteGroup cg = centralizer(group_, group_.element(a));
    ConjugacyData cd = conjugacy_classes(cg);
    OrdinaryCharTable table;
    if (tables.empty()) {
      table = character_table(cg, cd);
    } else {
      table = std::move(tables[c]);
      std::int64_t sum_sq = 0;
      for (auto d : table.degrees) sum_sq += d * d;
      if (table.size() != cd.size() || table.classes.size() != cd.size() ||
          sum_sq != static_cast<std::int64_t>(cg.order())) {
        throw InputError("tables.shape", "centralizer table for class " + std::to_string(c) + " does not fit");
      }
      table.classes = cd;
    }
    for (std::size_t i = 0; i < table.size(); ++i) weights_.push_back(Weight{static_cast<int>(c), static_cast<int>(i)});
    cent_.push_back(Centralizer{std::move(cg), std::move(cd), std::move(table)});
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) weight_index_.emplace(weights_[i], static_cast<int>(i));
}

int DoubleGroup::index_of(Weight w) const {
  auto it = weight_index_.find(w);
  if (it == weight_index_.end()) throw InputError("weight.known", "unknown weight " + weight_label(w));
  return it->second;
}

bool DoubleGroup::contains(Weight w) const { return weight_index_.contains(w); }

std::int64_t DoubleGroup::dimension(Weight w) const {
  index_of(w);
  return static_cast<std::int64_t>(classes_.class_size(w.class_id)) *
         centralizer_table(w.class_id).degrees[static_cast<std::size_t>(w.irrep_id)];
}

Cyclotomic DoubleGroup::pair_character_via(Weight w, int g, int h, int conjugator) const {
  if (classes_.class_of[static_cast<std::size_t>(g)] != w.class_id) return Cyclotomic();
  if (!group_.commute(g, h)) return Cyclotomic();
  const auto& c = cent_[static_cast<std::size_t>(w.class_id)];
  // x^-1 h x lies in C(a) because x a x^-1 = g commutes with h
  const int moved = group_.conjugate(h, group_.inverse(conjugator));
  auto local = c.group.index_of(group_.element(moved));
  if (!local) throw InconsistencyError("conjugator does not carry the class representative to g");
  const int cls = c.classes.class_of[static_cast<std::size_t>(*local)];
  return c.table.value(w.irrep_id, cls).in_order(group_.exponent());
}

Cyclotomic DoubleGroup::pair_character(Weight w, int g, int h) const {
  return pair_character_via(w, g, h, conjugator_[static_cast<std::size_t>(g)]);
}

Cyclotomic DoubleGroup::tensor_character(Weight l, Weight m, int a, int h) const {
  Cyclotomic acc;
  for (int g1 : classes_.classes[static_cast<std::size_t>(l.class_id)].members) {
    const int g2 = group_.multiply(group_.inverse(g1), a);
    if (classes_.class_of[static_cast<std::size_t>(g2)] != m.class_id) continue;
    if (!group_.commute(g1, h) || !group_.commute(g2, h)) continue;
    acc += pair_character(l, g1, h) * pair_character(m, g2, h);
  }
  return acc;
}

FusionRow DoubleGroup::compute_fusion(Weight l, Weight m) const {
  FusionRow row;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const int a = classes_.classes[k].representative;
    const auto& c = cent_[k];
    std::vector<Cyclotomic> f;
    bool any = false;
    for (const auto& cls : c.classes.classes) {
      const int h = *group_.index_of(c.group.element(cls.representative));
      f.push_back(tensor_character(l, m, a, h));
      any = any || !f.back().is_zero();
    }
    if (!any) continue;
    for (std::size_t psi = 0; psi < c.table.size(); ++psi) {
      Cyclotomic n = class_function_inner_product(c.table, f, c.table.rows[psi]);
      auto value = n.integer_value();
      if (!value || *value < 0) {
        throw InconsistencyError("fusion coefficient N_{" + weight_label(l) + "," + weight_label(m) + "}^" +
                                 weight_label(Weight{static_cast<int>(k), static_cast<int>(psi)}) + " = " +
                                 n.to_string() + " is not a nonnegative integer");
      }
      if (*value > 0) row.emplace(Weight{static_cast<int>(k), static_cast<int>(psi)}, *value);
    }
  }
  return row;
}

const FusionRow& DoubleGroup::fusion(Weight l, Weight m) const {
  int il = index_of(l);
  int im = index_of(m);
  const auto key = std::minmax(il, im);
  {
    std::lock_guard lock(mutex_);
    if (auto it = fusion_cache_.find(key); it != fusion_cache_.end()) return it->second;
  }
  FusionRow row = compute_fusion(weights_[static_cast<std::size_t>(key.first)],
                                 weights_[static_cast<std::size_t>(key.second)]);
  std::lock_guard lock(mutex_);
  return fusion_cache_.emplace(key, std::move(row)).first->second;
}

std::int64_t DoubleGroup::unit_coefficient(Weight l, Weight m) const {
  index_of(l);
  index_of(m);
  if (classes_.inverse_class[static_cast<std::size_t>(l.class_id)] != m.class_id) return 0;
  const auto& c = cent_[0];
  std::vector<Cyclotomic> f;
  for (const auto& cls : c.classes.classes) f.push_back(tensor_character(l, m, 0, cls.representative));
  Cyclotomic n = class_function_inner_product(c.table, f, c.table.rows[0]);
  auto value = n.integer_value();
  if (!value || *value < 0) throw InconsistencyError("unit coefficient is not a nonnegative integer");
  return *value;
}

Weight DoubleGroup::dual(Weight w) const {
  const int iw = index_of(w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = dual_cache_.find(iw); it != dual_cache_.end()) return it->second;
  }
  std::optional<Weight> found;
  for (const auto& m : weights_) {
    const auto n = unit_coefficient(w, m);
    if (n == 0) continue;
    if (n != 1 || found) throw InconsistencyError("weight " + weight_label(w) + " has no unique dual");
    found = m;
  }
  if (!found) throw InconsistencyError("weight " + weight_label(w) + " has no dual");
  std::lock_guard lock(mutex_);
  dual_cache_.emplace(iw, *found);
  return *found;
}

}  // namespace bggkit
