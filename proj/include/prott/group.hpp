#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prott/element_set.hpp"
#include "prott/error.hpp"

namespace prott {

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. Instances are immutable and shared through GroupPtr.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  /// Builds a group from a Cayley table, checking the group axioms when
  /// `validate` is set. The identity is relabelled to element 0.
  static FiniteGroup from_table(const Table& table, std::vector<std::string> labels = {},
                                bool validate = true) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorCode::BadArgument, "empty multiplication table");
    for (const auto& row : table) {
      if (row.size() != n) throw Error(ErrorCode::BadArgument, "multiplication table is not square");
      for (auto v : row)
        if (v >= n) throw Error(ErrorCode::BadArgument, "table entry out of range");
    }
    if (!labels.empty() && labels.size() != n)
      throw Error(ErrorCode::BadArgument, "label count does not match order");

    std::size_t ident = n;
    for (std::size_t e = 0; e < n && ident == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
      if (ok) ident = e;
    }
    if (ident == n) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

    if (validate) {
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) found = table[x][y] == ident && table[y][x] == ident;
        if (!found)
          throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse");
      }
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (table[table[a][b]][c] != table[a][table[b][c]])
              throw Error(ErrorCode::NonAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                         ")*" + std::to_string(c) + " differs");
    }

    // swap the identity into slot 0
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::swap(relabel[0], relabel[ident]);
    FiniteGroup g;
    g.order_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g.table_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
    if (!labels.empty()) {
      g.labels_.resize(n);
      for (std::size_t a = 0; a < n; ++a) g.labels_[relabel[a]] = labels[a];
    }
    g.finish();
    return g;
  }

  /// Flat table constructor for trusted internal constructions (identity must be 0).
  static FiniteGroup from_flat(std::size_t n, std::vector<Element> flat, std::vector<std::string> labels = {}) {
    FiniteGroup g;
    g.order_ = n;
    g.table_ = std::move(flat);
    g.labels_ = std::move(labels);
    g.finish();
    return g;
  }

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element h, Element g) const { return mul(mul(inv(g), h), g); }  // g^-1 h g
  bool is_abelian() const { return abelian_; }

  Element power(Element a, std::size_t k) const {
    Element r = 0;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  FiniteGroup::Table table() const {
    Table t(order_, std::vector<Element>(order_));
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    return t;
  }

  ElementSet whole() const { return ElementSet::full(order_); }
  ElementSet trivial() const {
    ElementSet s(order_);
    s.insert(0);
    return s;
  }

 private:
  void finish() {
    inverse_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (table_[a * order_ + b] == 0) {
          inverse_[a] = static_cast<Element>(b);
          break;
        }
    abelian_ = true;
    for (std::size_t a = 0; a < order_ && abelian_; ++a)
      for (std::size_t b = a + 1; b < order_ && abelian_; ++b)
        abelian_ = table_[a * order_ + b] == table_[b * order_ + a];
  }

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A homomorphism between two finite groups, stored as an element map.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> map;
  bool surjective = false;

  static GroupHom make(GroupPtr source, GroupPtr target, std::vector<Element> map, bool validate = false) {
    if (map.size() != source->order()) throw Error(ErrorCode::BadArgument, "hom map has wrong length");
    if (validate) {
      if (map[0] != 0) throw Error(ErrorCode::BadArgument, "hom does not preserve the identity");
      for (std::size_t a = 0; a < source->order(); ++a)
        for (std::size_t b = 0; b < source->order(); ++b)
          if (map[source->mul(Element(a), Element(b))] != target->mul(map[a], map[b]))
            throw Error(ErrorCode::BadArgument, "map is not multiplicative");
    }
    ElementSet image(target->order());
    for (auto v : map) image.insert(v);
    GroupHom h{std::move(source), std::move(target), std::move(map), false};
    h.surjective = image.size() == h.target->order();
    return h;
  }

  Element operator()(Element a) const { return map[a]; }

  ElementSet image(const ElementSet& s) const {
    ElementSet out(target->order());
    for (auto e : s.members()) out.insert(map[e]);
    return out;
  }
  ElementSet preimage(const ElementSet& s) const {
    ElementSet out(source->order());
    for (std::size_t a = 0; a < map.size(); ++a)
      if (s.contains(map[a])) out.insert(Element(a));
    return out;
  }
  ElementSet kernel() const {
    ElementSet out(source->order());
    for (std::size_t a = 0; a < map.size(); ++a)
      if (map[a] == 0) out.insert(Element(a));
    return out;
  }
};

/// `second` after `first`.
inline GroupHom compose(const GroupHom& second, const GroupHom& first) {
  std::vector<Element> m(first.map.size());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = second.map[first.map[a]];
  return GroupHom::make(first.source, second.target, std::move(m));
}

inline GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Element> m(g->order());
  std::iota(m.begin(), m.end(), Element{0});
  return GroupHom::make(g, g, std::move(m));
}

// ---------------------------------------------------------------------------
// Constructions

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadArgument, "cyclic group of order 0");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_flat(n, std::move(t));
}

inline std::string permutation_cycles(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == int(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Symmetric group on n <= 5 points; elements in lexicographic order of
/// one-line notation, product (s*t)(x) = s(t(x)).
inline FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadArgument, "symmetric group on 0 points");
  if (n > 5) throw Error(ErrorCode::UnsupportedOrder, "S" + std::to_string(n) + " exceeds S5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Element> t(order * order);
  std::vector<int> c(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a * order + b] = index_of(c);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(permutation_cycles(q));
  return FiniteGroup::from_flat(order, std::move(t), std::move(labels));
}

/// Quaternion group; elements 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup quaternion_group() {
  // unit products among {1,i,j,k} as (sign, unit)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Element> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      t[std::size_t(a * 8 + b)] = static_cast<Element>(unit[ua][ub] * 2 + (s < 0 ? 1 : 0));
    }
  return FiniteGroup::from_flat(8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

/// Direct product with lexicographic indexing, first factor most significant.
inline FiniteGroup direct_product(const std::vector<GroupPtr>& factors) {
  std::size_t order = 1;
  for (const auto& f : factors) order *= f->order();
  const std::size_t k = factors.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * factors[i]->order();
  std::vector<Element> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t r = 0;
      for (std::size_t i = 0; i < k; ++i) {
        auto ca = Element((a / stride[i]) % factors[i]->order());
        auto cb = Element((b / stride[i]) % factors[i]->order());
        r += factors[i]->mul(ca, cb) * stride[i];
      }
      t[a * order + b] = static_cast<Element>(r);
    }
  std::vector<std::string> labels;
  bool any_labels = std::any_of(factors.begin(), factors.end(), [](const GroupPtr& f) { return !f->labels().empty(); });
  if (any_labels && k > 1) {
    for (std::size_t a = 0; a < order; ++a) {
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) {
        if (i) s += ",";
        s += factors[i]->label(Element((a / stride[i]) % factors[i]->order()));
      }
      labels.push_back(s + ")");
    }
  } else if (k == 1) {
    labels = factors[0]->labels();
  }
  return FiniteGroup::from_flat(order, std::move(t), std::move(labels));
}

/// Componentwise product of homomorphisms between product groups.
inline GroupHom product_hom(const GroupPtr& source, const GroupPtr& target, const std::vector<GroupHom>& parts) {
  const std::size_t k = parts.size();
  std::vector<std::size_t> sstride(k, 1), tstride(k, 1);
  for (std::size_t i = k; i-- > 1;) {
    sstride[i - 1] = sstride[i] * parts[i].source->order();
    tstride[i - 1] = tstride[i] * parts[i].target->order();
  }
  std::vector<Element> m(source->order());
  for (std::size_t a = 0; a < m.size(); ++a) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      auto c = Element((a / sstride[i]) % parts[i].source->order());
      r += parts[i].map[c] * tstride[i];
    }
    m[a] = static_cast<Element>(r);
  }
  return GroupHom::make(source, target, std::move(m));
}

/// Descriptor atoms accepted by make_group.
struct GroupAtom {
  struct Cyclic { std::size_t n; };
  struct Symmetric { std::size_t n; };
  struct Quaternion8 {};
  struct Product { std::vector<GroupAtom> factors; };
  struct DirectData { FiniteGroup::Table table; };
  std::variant<Cyclic, Symmetric, Quaternion8, Product, DirectData> value;
};

inline FiniteGroup make_group(const GroupAtom& atom) {
  return std::visit(
      [](const auto& a) -> FiniteGroup {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, GroupAtom::Cyclic>) return cyclic_group(a.n);
        else if constexpr (std::is_same_v<T, GroupAtom::Symmetric>) return symmetric_group(a.n);
        else if constexpr (std::is_same_v<T, GroupAtom::Quaternion8>) return quaternion_group();
        else if constexpr (std::is_same_v<T, GroupAtom::Product>) {
          std::vector<GroupPtr> fs;
          for (const auto& f : a.factors) fs.push_back(share(make_group(f)));
          if (fs.empty()) return cyclic_group(1);
          return direct_product(fs);
        } else {
          return FiniteGroup::from_table(a.table);
        }
      },
      atom.value);
}

}  // namespace prott
