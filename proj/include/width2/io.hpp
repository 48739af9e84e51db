#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "width2/labelled.hpp"

namespace width2 {

// A structure read from or written to the line-based text format. Input is
// order-insensitive; print emits one canonical form (sorted lines, covering
// relations only for posets), so parse(print(d)) == d whenever d came from
// parse. A line starting with "---" ends the payload, which lets command
// output carry a trailing key=value block and still be piped back in.
using Document = std::variant<Graph, Poset, Bichain, LabelledStructure>;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int at, const std::string& what)
      : std::runtime_error("line " + std::to_string(at) + ": " + what), line(at) {}
};

namespace detail {

struct TextLine {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> tokenize(const std::string& text) {
  std::vector<TextLine> out;
  std::istringstream in(text);
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;
    if (tokens[0] == "---") break;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

inline int parse_int(int line, const std::string& token, int lo, int hi) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
  if (value < lo || value > hi)
    throw ParseError(line, "value " + token + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return static_cast<int>(value);
}

inline Graph parse_graph_body(int n, const std::vector<TextLine>& lines) {
  Graph g(n);
  for (const TextLine& ln : lines) {
    if (ln.tokens.size() != 2) throw ParseError(ln.number, "expected an edge line 'u v'");
    int u = parse_int(ln.number, ln.tokens[0], 0, n - 1);
    int v = parse_int(ln.number, ln.tokens[1], 0, n - 1);
    if (u == v) throw ParseError(ln.number, "loop edge " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

inline Poset parse_poset_body(int header_line, int n, const std::vector<TextLine>& lines) {
  std::vector<std::pair<int, int>> rels;
  for (const TextLine& ln : lines) {
    if (ln.tokens.size() != 3 || ln.tokens[1] != "<")
      throw ParseError(ln.number, "expected a relation line 'u < v'");
    int u = parse_int(ln.number, ln.tokens[0], 0, n - 1);
    int v = parse_int(ln.number, ln.tokens[2], 0, n - 1);
    if (u == v) throw ParseError(ln.number, "reflexive relation " + std::to_string(u));
    rels.push_back({u, v});
  }
  try {
    return poset_from_relations(n, rels);
  } catch (const std::invalid_argument&) {
    throw ParseError(header_line, "relations close into a cycle");
  }
}

inline Bichain parse_bichain_body(int header_line, int n, const std::vector<TextLine>& lines) {
  if (n == 0) {
    if (!lines.empty()) throw ParseError(lines[0].number, "empty bichain takes no value line");
    return Bichain(std::vector<int>{});
  }
  if (lines.empty()) throw ParseError(header_line, "missing permutation line");
  if (lines.size() > 1) throw ParseError(lines[1].number, "more than one permutation line");
  const TextLine& ln = lines[0];
  if (static_cast<int>(ln.tokens.size()) != n)
    throw ParseError(ln.number, "expected " + std::to_string(n) + " values");
  std::vector<int> sigma(n);
  vset seen = 0;
  for (int i = 0; i < n; ++i) {
    sigma[i] = parse_int(ln.number, ln.tokens[i], 0, n - 1);
    if (seen >> sigma[i] & 1)
      throw ParseError(ln.number, "value " + std::to_string(sigma[i]) + " repeats");
    seen |= vset(1) << sigma[i];
  }
  return Bichain(sigma);
}

constexpr int kMaxLabel = 127;

inline LabelledStructure parse_labelled_body(int header_line, const std::string& base_kind, int n,
                                             const std::vector<TextLine>& lines) {
  std::vector<TextLine> base;
  std::vector<int> labels(n, 0);
  std::vector<bool> labelled(n, false);
  std::vector<std::pair<int, int>> order;
  int max_label = 0;
  for (const TextLine& ln : lines) {
    if (ln.tokens[0] == "label") {
      if (ln.tokens.size() != 3) throw ParseError(ln.number, "expected 'label u l'");
      int u = parse_int(ln.number, ln.tokens[1], 0, n - 1);
      int l = parse_int(ln.number, ln.tokens[2], 0, kMaxLabel);
      if (labelled[u])
        throw ParseError(ln.number, "vertex " + std::to_string(u) + " labelled twice");
      labelled[u] = true;
      labels[u] = l;
      max_label = std::max(max_label, l);
    } else if (ln.tokens[0] == "order") {
      if (ln.tokens.size() != 4 || ln.tokens[2] != "<=")
        throw ParseError(ln.number, "expected 'order a <= b'");
      int a = parse_int(ln.number, ln.tokens[1], 0, kMaxLabel);
      int b = parse_int(ln.number, ln.tokens[3], 0, kMaxLabel);
      order.push_back({a, b});
      max_label = std::max(max_label, std::max(a, b));
    } else {
      base.push_back(ln);
    }
  }
  Structure s;
  if (base_kind == "graph")
    s = parse_graph_body(n, base);
  else if (base_kind == "poset")
    s = parse_poset_body(header_line, n, base);
  else if (base_kind == "bichain")
    s = parse_bichain_body(header_line, n, base);
  else
    throw ParseError(header_line, "unknown base kind '" + base_kind + "'");
  return LabelledStructure(std::move(s), std::move(labels), max_label + 1, order);
}

inline void print_graph_body(std::ostream& out, const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adj[u] >> v & 1) out << u << ' ' << v << '\n';
}

inline void print_poset_body(std::ostream& out, const Poset& p) {
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v) {
      if (u == v || !p.leq(u, v)) continue;
      bool covered = false;
      for (int w = 0; w < p.n && !covered; ++w)
        if (w != u && w != v && p.leq(u, w) && p.leq(w, v)) covered = true;
      if (!covered) out << u << " < " << v << '\n';
    }
}

inline void print_bichain_body(std::ostream& out, const Bichain& b) {
  for (int i = 0; i < b.n; ++i) out << (i ? " " : "") << b.sigma[i];
  if (b.n > 0) out << '\n';
}

}  // namespace detail

inline const char* document_kind(const Document& d) {
  static const char* names[] = {"graph", "poset", "bichain", "labelled"};
  return names[d.index()];
}

inline Document parse_document(const std::string& text) {
  std::vector<detail::TextLine> lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty document");
  detail::TextLine header = lines[0];
  lines.erase(lines.begin());
  const std::string& kind = header.tokens[0];
  if (kind == "labelled") {
    if (header.tokens.size() != 3)
      throw ParseError(header.number, "expected header 'labelled <kind> n'");
    int n = detail::parse_int(header.number, header.tokens[2], 0, 64);
    return detail::parse_labelled_body(header.number, header.tokens[1], n, lines);
  }
  if (header.tokens.size() != 2)
    throw ParseError(header.number, "expected header '" + kind + " n'");
  int n = detail::parse_int(header.number, header.tokens[1], 0, 64);
  if (kind == "graph") return detail::parse_graph_body(n, lines);
  if (kind == "poset") return detail::parse_poset_body(header.number, n, lines);
  if (kind == "bichain") return detail::parse_bichain_body(header.number, n, lines);
  throw ParseError(header.number, "unknown kind '" + kind + "'");
}

inline std::string print_document(const Document& d) {
  std::ostringstream out;
  if (const auto* g = std::get_if<Graph>(&d)) {
    out << "graph " << g->n << '\n';
    detail::print_graph_body(out, *g);
  } else if (const auto* p = std::get_if<Poset>(&d)) {
    out << "poset " << p->n << '\n';
    detail::print_poset_body(out, *p);
  } else if (const auto* b = std::get_if<Bichain>(&d)) {
    out << "bichain " << b->n << '\n';
    detail::print_bichain_body(out, *b);
  } else {
    const auto& ls = std::get<LabelledStructure>(d);
    out << "labelled ";
    if (const auto* g = std::get_if<Graph>(&ls.base)) {
      out << "graph " << g->n << '\n';
      detail::print_graph_body(out, *g);
    } else if (const auto* p = std::get_if<Poset>(&ls.base)) {
      out << "poset " << p->n << '\n';
      detail::print_poset_body(out, *p);
    } else {
      const auto& b = std::get<Bichain>(ls.base);
      out << "bichain " << b.n << '\n';
      detail::print_bichain_body(out, b);
    }
    for (int u = 0; u < ls.n(); ++u)
      if (ls.labels[u] != 0) out << "label " << u << ' ' << ls.labels[u] << '\n';
    for (int a = 0; a < ls.label_count; ++a)
      for (int b = 0; b < ls.label_count; ++b)
        if (a != b && ls.label_leq[a][b]) out << "order " << a << " <= " << b << '\n';
  }
  return out.str();
}

}  // namespace width2
