#pragma once

#include <optional>
#include <string>
#include <vector>

#include "width2/labelled.hpp"

namespace width2 {

// Which symmetry of the target an embedding landed in. Searches try the
// allowed variants in this declaration order, so witnesses are reproducible.
enum class Variant { direct, dual_target, transpose_target };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::direct: return "direct";
    case Variant::dual_target: return "dual";
    default: return "transpose";
  }
}

struct Embedding {
  std::vector<int> map;  // vertex i of the pattern lands on map[i]
  Variant variant = Variant::direct;
};

struct EmbedOptions {
  bool allow_dual = false;       // posets and bichains
  bool allow_transpose = false;  // bichains only
};

namespace detail {

inline bool always_admissible(int, int) { return true; }

// Induced embedding search, smallest pattern vertex first, candidate images
// in increasing order. Relations must be preserved and reflected; admissible
// filters single-vertex constraints such as labels.
template <class RelEq, class Adm = bool (*)(int, int)>
inline std::optional<std::vector<int>> find_map(int nx, int ny, RelEq&& agrees,
                                                Adm&& admissible = always_admissible) {
  std::vector<int> img(nx, -1);
  vset used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == nx) return true;
    for (int c = 0; c < ny; ++c) {
      if (has_bit(used, c)) continue;
      if (!admissible(i, c)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = agrees(j, i, img[j], c);
      if (!ok) continue;
      img[i] = c;
      used |= vset(1) << c;
      if (self(self, i + 1)) return true;
      used &= ~(vset(1) << c);
    }
    img[i] = -1;
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

inline std::optional<std::vector<int>> graph_map(const Graph& x, const Graph& y) {
  if (x.n > y.n) return std::nullopt;
  return find_map(x.n, y.n, [&](int j, int i, int a, int b) {
    return x.has_edge(j, i) == y.has_edge(a, b);
  });
}

inline std::optional<std::vector<int>> poset_map(const Poset& x, const Poset& y) {
  if (x.n > y.n) return std::nullopt;
  return find_map(x.n, y.n, [&](int j, int i, int a, int b) {
    return x.leq(j, i) == y.leq(a, b) && x.leq(i, j) == y.leq(b, a);
  });
}

inline std::optional<std::vector<int>> bichain_map(const Bichain& x, const Bichain& y) {
  if (x.n > y.n) return std::nullopt;
  // Both orders must be preserved and reflected, so images sit at increasing
  // positions; this is permutation pattern containment with a witness.
  std::vector<int> pos(x.n, -1);
  auto rec = [&](auto&& self, int idx, int from) -> bool {
    if (idx == x.n) return true;
    for (int at = from; at <= y.n - (x.n - idx); ++at) {
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev)
        ok = (x.sigma[prev] < x.sigma[idx]) == (y.sigma[pos[prev]] < y.sigma[at]);
      if (!ok) continue;
      pos[idx] = at;
      if (self(self, idx + 1, at + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0, 0)) return pos;
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Embedding> embeds(const Graph& x, const Graph& y,
                                       const EmbedOptions& = {}) {
  if (auto m = detail::graph_map(x, y)) return Embedding{*m, Variant::direct};
  return std::nullopt;
}

inline std::optional<Embedding> embeds(const Poset& x, const Poset& y,
                                       const EmbedOptions& opt = {}) {
  if (auto m = detail::poset_map(x, y)) return Embedding{*m, Variant::direct};
  if (opt.allow_dual)
    if (auto m = detail::poset_map(x, dual(y))) return Embedding{*m, Variant::dual_target};
  return std::nullopt;
}

inline std::optional<Embedding> embeds(const Bichain& x, const Bichain& y,
                                       const EmbedOptions& opt = {}) {
  if (auto m = detail::bichain_map(x, y)) return Embedding{*m, Variant::direct};
  if (opt.allow_dual)
    if (auto m = detail::bichain_map(x, dual(y))) return Embedding{*m, Variant::dual_target};
  if (opt.allow_transpose)
    if (auto m = detail::bichain_map(x, transpose(y)))
      return Embedding{*m, Variant::transpose_target};
  return std::nullopt;
}

inline std::optional<Embedding> embeds(const Structure& x, const Structure& y,
                                       const EmbedOptions& opt = {}) {
  if (x.index() != y.index()) return std::nullopt;
  if (std::holds_alternative<Graph>(x))
    return embeds(std::get<Graph>(x), std::get<Graph>(y), opt);
  if (std::holds_alternative<Poset>(x))
    return embeds(std::get<Poset>(x), std::get<Poset>(y), opt);
  return embeds(std::get<Bichain>(x), std::get<Bichain>(y), opt);
}

// Labelled embedding: base embedding whose label constraint holds pointwise.
inline std::optional<Embedding> embeds(const LabelledStructure& x, const LabelledStructure& y,
                                       const EmbedOptions& = {}) {
  if (x.base.index() != y.base.index()) return std::nullopt;
  if (x.label_count != y.label_count) return std::nullopt;
  int nx = x.n(), ny = y.n();
  if (nx > ny) return std::nullopt;
  auto label_ok = [&](int i, int c) { return x.label_leq[x.labels[i]][y.labels[c]]; };
  std::optional<std::vector<int>> m;
  if (std::holds_alternative<Graph>(x.base)) {
    const Graph& gx = std::get<Graph>(x.base);
    const Graph& gy = std::get<Graph>(y.base);
    m = detail::find_map(
        nx, ny, [&](int j, int i, int a, int b) { return gx.has_edge(j, i) == gy.has_edge(a, b); },
        label_ok);
  } else if (std::holds_alternative<Poset>(x.base)) {
    const Poset& px = std::get<Poset>(x.base);
    const Poset& py = std::get<Poset>(y.base);
    m = detail::find_map(
        nx, ny,
        [&](int j, int i, int a, int b) {
          return px.leq(j, i) == py.leq(a, b) && px.leq(i, j) == py.leq(b, a);
        },
        label_ok);
  } else {
    const Bichain& bx = std::get<Bichain>(x.base);
    const Bichain& by = std::get<Bichain>(y.base);
    m = detail::find_map(
        nx, ny,
        [&](int j, int i, int a, int b) {
          return (j < i) == (a < b) && (bx.sigma[j] < bx.sigma[i]) == (by.sigma[a] < by.sigma[b]);
        },
        label_ok);
  }
  if (m) return Embedding{*m, Variant::direct};
  return std::nullopt;
}

// Same-size induced embedding is an isomorphism.
template <class S>
inline bool isomorphic(const S& x, const S& y) {
  if (x.n != y.n) return false;
  return embeds(x, y).has_value();
}

}  // namespace width2
