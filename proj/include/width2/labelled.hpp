#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "width2/bichain.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"

namespace width2 {

using Structure = std::variant<Graph, Poset, Bichain>;

inline int structure_size(const Structure& s) {
  return std::visit([](const auto& x) { return x.n; }, s);
}

// A structure whose vertices carry labels from a finite quasi-order.
// labelOrder is stored reflexively and transitively closed; an embedding must
// send a vertex labelled a to one labelled b with a <= b.
struct LabelledStructure {
  Structure base;
  std::vector<int> labels;
  int label_count = 0;
  std::vector<std::vector<bool>> label_leq;

  LabelledStructure() = default;
  LabelledStructure(Structure b, std::vector<int> ls, int lc,
                    const std::vector<std::pair<int, int>>& order_pairs)
      : base(std::move(b)), labels(std::move(ls)), label_count(lc) {
    if (static_cast<int>(labels.size()) != structure_size(base))
      throw std::invalid_argument("label vector size mismatch");
    for (int l : labels)
      if (l < 0 || l >= lc) throw std::invalid_argument("label out of range");
    label_leq.assign(lc, std::vector<bool>(lc, false));
    for (int a = 0; a < lc; ++a) label_leq[a][a] = true;
    for (auto [a, b] : order_pairs) {
      if (a < 0 || b < 0 || a >= lc || b >= lc) throw std::invalid_argument("label out of range");
      label_leq[a][b] = true;
    }
    for (int k = 0; k < lc; ++k)
      for (int a = 0; a < lc; ++a)
        if (label_leq[a][k])
          for (int b = 0; b < lc; ++b)
            if (label_leq[k][b]) label_leq[a][b] = true;
  }

  int n() const { return structure_size(base); }

  bool operator==(const LabelledStructure& o) const {
    return base == o.base && labels == o.labels && label_count == o.label_count &&
           label_leq == o.label_leq;
  }
};

}  // namespace width2
