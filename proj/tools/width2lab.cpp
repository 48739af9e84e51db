// Command line front end. Every command writes a report, a line of three
// dashes, then key=value rows for scripts. Commands whose report is a
// single document (convert, family, recognize, decompose prime/unique,
// class member, decompose quotient) can be piped into any command that
// reads one, since the parser stops at the dashes.
//
// Exit codes: 0 answers, 1 usage or malformed input, 2 a property failure
// (a verification criterion failed, or the input lacks a property the
// command needs, with the offending document shown).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "width2/verify.hpp"

namespace {

using namespace width2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PropertyFailure : std::runtime_error {
  PropertyFailure(const std::string& what, std::string witness = {})
      : std::runtime_error(what), document(std::move(witness)) {}
  std::string document;
};

// ---- output plumbing -------------------------------------------------------

class MachineBlock {
 public:
  void add(const std::string& key, const std::string& value) { rows_.push_back(key + "=" + value); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "1" : "0")); }
  void flush(std::ostream& out) const {
    out << "---\n";
    for (const std::string& row : rows_) out << row << '\n';
  }

 private:
  std::vector<std::string> rows_;
};

std::string set_str(vset s) {
  std::string out;
  for_bits(s, [&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

std::string map_str(const std::vector<int>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

// ---- input plumbing --------------------------------------------------------

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document load_document(const std::string& path) { return parse_document(read_text(path)); }

// The order a document denotes: a poset directly, a bichain through its
// intersection order, a graph through its recognized orientation.
Poset to_order(const Document& d) {
  if (const auto* p = std::get_if<Poset>(&d)) return *p;
  if (const auto* b = std::get_if<Bichain>(&d)) return intersection_order(*b);
  if (const auto* g = std::get_if<Graph>(&d)) {
    std::optional<Poset> p = recognize_bipartite_permutation(*g);
    if (!p)
      throw PropertyFailure("graph is not a bipartite permutation graph",
                            print_document(d));
    return *p;
  }
  throw UsageError("labelled documents carry no single order");
}

Structure to_structure(const Document& d) {
  if (const auto* g = std::get_if<Graph>(&d)) return *g;
  if (const auto* p = std::get_if<Poset>(&d)) return *p;
  if (const auto* b = std::get_if<Bichain>(&d)) return *b;
  throw UsageError("expected a graph, poset or bichain document");
}

// ---- convert ---------------------------------------------------------------

int run_convert(const std::string& to, const std::string& input) {
  Document d = load_document(input);
  Document out;
  if (to == "comp")
    out = comp(to_order(d));
  else if (to == "inc")
    out = inc(to_order(d));
  else if (to == "poset")
    out = std::holds_alternative<Poset>(d) ? d : Document(to_order(d));
  else if (std::holds_alternative<Bichain>(d))
    out = d;
  else {
    Poset p = to_order(d);
    std::optional<Poset> q = first_transitive_orientation(inc(p));
    if (!q) throw PropertyFailure("order has dimension above two", print_document(d));
    out = bichain_from_orientation(p, *q);
  }
  std::cout << print_document(out);
  MachineBlock m;
  m.add("kind", document_kind(out));
  m.add("n", structure_size(to_structure(out)));
  m.flush(std::cout);
  return 0;
}

// ---- metric ----------------------------------------------------------------

void print_matrix(const char* title, const std::vector<std::vector<int>>& rows) {
  std::cout << title << ":\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
    std::cout << '\n';
  }
}

int run_metric(bool oscillation, const std::string& input) {
  Document d = load_document(input);
  std::optional<Poset> order;
  if (!std::holds_alternative<Graph>(d)) order = to_order(d);
  Graph g = order ? inc(*order) : std::get<Graph>(d);
  if (oscillation && !order) throw UsageError("--oscillation needs an order or bichain document");
  MetricReport rep;
  try {
    rep = metric_report(g, oscillation ? &*order : nullptr);
  } catch (const std::invalid_argument& e) {
    throw PropertyFailure(e.what(), print_document(d));
  }
  std::cout << "vertices: " << rep.n << '\n';
  std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << '\n';
  std::cout << "diameter: " << rep.diameter << '\n';
  std::cout << "longest induced path (edges): " << rep.max_detour << '\n';
  if (rep.deg3_diameter >= 0)
    std::cout << "degree-3 diameter: " << rep.deg3_diameter << '\n';
  print_matrix("distances", rep.dist);
  print_matrix("detours", rep.detour);
  int osc_max = 0;
  if (rep.has_oscillation) {
    print_matrix("oscillation", rep.oscillation);
    for (const auto& row : rep.oscillation)
      for (int v : row) osc_max = std::max(osc_max, v);
  }
  MachineBlock m;
  m.add("n", rep.n);
  m.add("connected", is_connected(g));
  m.add("diameter", rep.diameter);
  m.add("detour_max", rep.max_detour);
  m.add("deg3_diameter", rep.deg3_diameter);
  if (rep.has_oscillation) m.add("oscillation_max", osc_max);
  m.flush(std::cout);
  return 0;
}

// ---- decompose -------------------------------------------------------------

template <class S>
void decompose_modules_of(const S& s, const Document& d) {
  ModuleFamily<S> fam = module_family(s);
  std::cout << "strong modules:";
  for (vset v : fam.strong) std::cout << " {" << set_str(v) << "}";
  std::cout << "\ncomponents:";
  for (vset v : fam.components) std::cout << " {" << set_str(v) << "}";
  std::cout << "\nquotient:\n" << print_document(Document(fam.quotient));
  MachineBlock m;
  m.add("kind", document_kind(d));
  m.add("modules", static_cast<long long>(fam.modules.size()));
  std::string strong;
  for (vset v : fam.strong) {
    if (!strong.empty()) strong += '|';
    strong += set_str(v);
  }
  m.add("strong", strong);
  m.add("prime", is_prime(s));
  m.flush(std::cout);
}

int run_decompose(const std::string& mode, const std::string& input) {
  Document d = load_document(input);
  if (mode == "modules") {
    Structure s = to_structure(d);
    std::visit([&](const auto& x) { decompose_modules_of(x, d); }, s);
    return 0;
  }
  if (mode == "prime") {
    Structure s = to_structure(d);
    bool prime = std::visit([](const auto& x) { return is_prime(x); }, s);
    std::cout << print_document(d);
    MachineBlock m;
    m.add("prime", prime);
    m.flush(std::cout);
    return 0;
  }
  Poset p = to_order(d);
  if (mode == "quotient") {
    ChainModuleQuotient q = chain_module_quotient(p);
    std::cout << print_document(Document(q.quotient));
    MachineBlock m;
    std::string classes;
    for (vset v : q.classes) {
      if (!classes.empty()) classes += '|';
      classes += set_str(v);
    }
    m.add("classes", classes);
    m.add("class_count", static_cast<long long>(q.classes.size()));
    m.flush(std::cout);
    return 0;
  }
  if (mode == "realizers") {
    std::vector<RealizerPair> rs = realizers(p);
    std::cout << rs.size() << " realizer pair" << (rs.size() == 1 ? "" : "s") << '\n';
    for (const RealizerPair& r : rs)
      std::cout << "  " << map_str(r.first) << " / " << map_str(r.second) << '\n';
    MachineBlock m;
    m.add("realizers", static_cast<long long>(rs.size()));
    m.add("dimension_at_most_two", !rs.empty());
    m.add("unique", rs.size() == 1);
    m.flush(std::cout);
    return 0;
  }
  // unique: the structural test, cross-checked against the count
  bool by_criterion = unique_realizability_criterion(p);
  bool by_count = is_uniquely_realizable(p);
  if (by_criterion != by_count)
    throw PropertyFailure("structural test disagrees with the realizer count",
                          print_document(d));
  std::cout << print_document(d);
  MachineBlock m;
  m.add("unique", by_count);
  m.flush(std::cout);
  return 0;
}

// ---- recognize -------------------------------------------------------------

int run_recognize(const std::string& input) {
  Document d = load_document(input);
  const auto* g = std::get_if<Graph>(&d);
  if (!g) throw UsageError("recognize expects a graph document");
  std::optional<Poset> p = recognize_bipartite_permutation(*g);
  MachineBlock m;
  m.add("accepted", p.has_value());
  if (p) {
    std::cout << print_document(Document(*p));
    m.add("width", width(*p));
  } else {
    std::cout << "not a bipartite permutation graph\n";
  }
  m.flush(std::cout);
  return 0;
}

// ---- embed -----------------------------------------------------------------

EmbedOptions parse_allow(const std::string& allow) {
  EmbedOptions opt;
  std::istringstream in(allow);
  for (std::string item; std::getline(in, item, ',');) {
    if (item == "dual")
      opt.allow_dual = true;
    else if (item == "transpose")
      opt.allow_transpose = true;
    else if (!item.empty())
      throw UsageError("--allow takes 'dual' and 'transpose', not '" + item + "'");
  }
  return opt;
}

int run_embed(const std::string& file_a, const std::string& file_b, const std::string& allow) {
  if (file_a == "-" && file_b == "-") throw UsageError("only one input may come from stdin");
  Document da = load_document(file_a);
  Document db = load_document(file_b);
  EmbedOptions opt = parse_allow(allow);
  std::optional<Embedding> e;
  if (std::holds_alternative<LabelledStructure>(da) &&
      std::holds_alternative<LabelledStructure>(db)) {
    e = embeds(std::get<LabelledStructure>(da), std::get<LabelledStructure>(db), opt);
  } else {
    Structure sa = to_structure(da);
    Structure sb = to_structure(db);
    if (sa.index() != sb.index())
      throw UsageError(std::string("pattern is a ") + document_kind(da) + " but target is a " +
                       document_kind(db));
    e = embeds(sa, sb, opt);
  }
  if (e) {
    std::cout << "embedding (" << variant_name(e->variant) << "):";
    for (std::size_t i = 0; i < e->map.size(); ++i)
      std::cout << ' ' << i << "->" << e->map[i];
    std::cout << '\n';
  } else {
    std::cout << "no embedding\n";
  }
  MachineBlock m;
  m.add("embedded", e.has_value());
  if (e) {
    m.add("variant", variant_name(e->variant));
    m.add("map", map_str(e->map));
  }
  m.flush(std::cout);
  return 0;
}

// ---- family ----------------------------------------------------------------

int run_family(const std::string& tag, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw UsageError("family " + tag + " takes " + std::to_string(k) + " parameter" +
                       (k == 1 ? "" : "s"));
  };
  Document out;
  MachineBlock m;
  try {
    if (tag == "DF") {
      need(1);
      out = double_fork(params[0]);
    } else if (tag == "H") {
      need(1);
      out = half_graph(params[0]);
    } else if (tag == "Path") {
      need(1);
      out = path_graph(params[0]);
    } else if (tag == "Comb") {
      need(1);
      out = comb_graph(params[0]);
    } else if (tag == "Kite1" || tag == "Kite2" || tag == "Kite3") {
      need(1);
      out = kite_truncation(tag[4] - '0', params[0]);
    } else if (tag == "P1") {
      need(1);
      out = poset_P1(params[0]);
    } else if (tag == "P2") {
      need(1);
      out = poset_P2(params[0]);
    } else if (tag == "B1") {
      need(1);
      out = bichain_B1(params[0]);
    } else if (tag == "B2") {
      need(1);
      out = bichain_B2(params[0]);
    } else if (tag == "SturmianOrientation") {
      need(3);
      SturmianOrientation s = sturmian_orientation(params[0], params[1], params[2]);
      out = poset_from_relations(static_cast<int>(s.word.size()) + 1, s.arcs);
      std::string word;
      for (int letter : s.word) word += char('0' + letter);
      m.add("word", word);
    } else {
      throw UsageError("unknown family '" + tag + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError("family " + tag + ": " + e.what());
  }
  std::cout << print_document(out);
  m.add("kind", document_kind(out));
  m.add("n", structure_size(to_structure(out)));
  m.flush(std::cout);
  return 0;
}

// ---- class -----------------------------------------------------------------

struct ClassChoice {
  Universe universe = Universe::All;
  Presentation presentation = Presentation::Avoiders;
  std::vector<Graph> graphs;
  std::vector<Poset> posets;
  std::vector<Bichain> bichains;
  int cap = 8;
};

// A list item is a file path, or a family shorthand: P<k>/C<k> for paths
// and cycles, or <tag>:<params> for any family tag.
Document class_list_item(const std::string& item) {
  {
    std::ifstream probe(item);
    if (probe) return parse_document(read_text(item));
  }
  std::size_t colon = item.find(':');
  if (colon != std::string::npos) {
    std::vector<int> params;
    std::istringstream in(item.substr(colon + 1));
    for (std::string tok; std::getline(in, tok, ':');)
      params.push_back(detail::parse_int(1, tok, 0, 1 << 20));
    std::string tag = item.substr(0, colon);
    if (tag == "DF") return double_fork(params.at(0));
    if (tag == "H") return half_graph(params.at(0));
    if (tag == "Path") return path_graph(params.at(0));
    if (tag == "Comb") return comb_graph(params.at(0));
    if (tag == "P1") return poset_P1(params.at(0));
    if (tag == "P2") return poset_P2(params.at(0));
    if (tag == "B1") return bichain_B1(params.at(0));
    if (tag == "B2") return bichain_B2(params.at(0));
    throw UsageError("unknown family shorthand '" + item + "'");
  }
  if ((item[0] == 'P' || item[0] == 'C') && item.size() > 1 &&
      item.find_first_not_of("0123456789", 1) == std::string::npos) {
    int k = std::stoi(item.substr(1));
    return item[0] == 'P' ? Document(path_graph(k)) : Document(cycle_graph(k));
  }
  throw UsageError("cannot open '" + item + "' and it is not a family shorthand");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

ClassChoice build_class(const std::string& age, const std::string& avoid,
                        const std::string& universe, int cap) {
  if (!age.empty() && !avoid.empty()) throw UsageError("--age and --avoid exclude each other");
  ClassChoice c;
  c.presentation = age.empty() ? Presentation::Avoiders : Presentation::AgeOf;
  c.cap = cap;
  if (universe == "all")
    c.universe = Universe::All;
  else if (universe == "bp")
    c.universe = Universe::BipartitePermutation;
  else if (universe == "width2")
    c.universe = Universe::WidthTwoPosets;
  else if (universe == "bichains")
    c.universe = Universe::Bichains321;
  else
    throw UsageError("--universe takes all, bp, width2 or bichains");
  bool order_kind = c.universe == Universe::WidthTwoPosets;
  bool bichain_kind = c.universe == Universe::Bichains321;
  for (const std::string& item : split_commas(age.empty() ? avoid : age)) {
    Document d = class_list_item(item);
    if (order_kind) {
      if (!std::holds_alternative<Poset>(d))
        throw UsageError("'" + item + "' is not a poset, as the width2 universe needs");
      c.posets.push_back(std::get<Poset>(d));
    } else if (bichain_kind) {
      if (!std::holds_alternative<Bichain>(d))
        throw UsageError("'" + item + "' is not a bichain, as the bichains universe needs");
      c.bichains.push_back(std::get<Bichain>(d));
    } else {
      if (!std::holds_alternative<Graph>(d))
        throw UsageError("'" + item + "' is not a graph, as a graph universe needs");
      c.graphs.push_back(std::get<Graph>(d));
    }
  }
  return c;
}

template <class S>
int class_dispatch(const ClassSpec<S>& spec, const std::vector<S>& /*unused*/,
                   const std::string& mode, const std::string& input, bool documents) {
  if (mode == "member") {
    Document d = load_document(input);
    const S* x = std::get_if<S>(&d);
    if (!x) throw UsageError("the member document must match the universe kind");
    bool in_class = member(spec, *x);
    std::cout << print_document(d);
    MachineBlock m;
    m.add("member", in_class);
    m.flush(std::cout);
    return 0;
  }
  if (mode == "enumerate") {
    std::vector<S> members = enumerate_members(spec, spec.size_cap);
    std::vector<long long> by_size(spec.size_cap + 1, 0);
    for (const S& s : members) ++by_size[s.n];
    std::string counts;
    for (int n = 1; n <= spec.size_cap; ++n) {
      std::cout << "size " << n << ": " << by_size[n] << '\n';
      if (!counts.empty()) counts += ',';
      counts += std::to_string(by_size[n]);
    }
    std::cout << "total: " << members.size() << '\n';
    if (documents)
      for (const S& s : members) std::cout << print_document(Document(s));
    MachineBlock m;
    m.add("counts", counts);
    m.add("total", static_cast<long long>(members.size()));
    m.flush(std::cout);
    return 0;
  }
  if (mode == "bounds") {
    std::vector<S> bs = bounds_up_to(spec, spec.size_cap);
    std::cout << bs.size() << " minimal non-member" << (bs.size() == 1 ? "" : "s") << " up to size "
              << spec.size_cap << '\n';
    std::string sizes;
    for (const S& b : bs) {
      std::cout << print_document(Document(b));
      if (!sizes.empty()) sizes += ',';
      sizes += std::to_string(b.n);
    }
    MachineBlock m;
    m.add("bounds", static_cast<long long>(bs.size()));
    m.add("sizes", sizes);
    m.flush(std::cout);
    return 0;
  }
  if (mode == "wqo") {
    WqoVerdict v;
    try {
      v = decide_wqo(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (v.wqo)
      std::cout << "WQO maxfork=" << v.max_fork_length << '\n';
    else {
      std::cout << "NOT_WQO witnesses=" << v.witnesses.size() << '\n';
      for (const Graph& w : v.witnesses) std::cout << print_document(Document(w));
    }
    MachineBlock m;
    m.add("wqo", v.wqo);
    m.add("maxfork", v.max_fork_length);
    m.add("deg3_sup", v.deg3_diameter_sup);
    m.add("witnesses", static_cast<long long>(v.witnesses.size()));
    m.flush(std::cout);
    return 0;
  }
  throw UsageError("class mode must be member, enumerate, bounds, wqo or audit");
}

int run_class(const std::string& mode, const std::string& age, const std::string& avoid,
              const std::string& universe, int cap, const std::string& input, bool documents) {
  ClassChoice c = build_class(age, avoid, universe, cap);
  if (c.universe == Universe::WidthTwoPosets) {
    ClassSpec<Poset> spec{c.presentation, c.posets, c.universe, c.cap};
    if (mode == "audit") {
      UniversalDepthReport rep = universal_depth_audit(spec, c.cap);
      std::cout << "members: " << rep.members << "\nlongest induced path: " << rep.k_star
                << "\ndeepest slice: " << rep.max_m << '\n';
      MachineBlock m;
      m.add("members", rep.members);
      m.add("k_star", rep.k_star);
      m.add("max_m", rep.max_m);
      m.add("pass", rep.all_embedded);
      m.flush(std::cout);
      if (!rep.all_embedded) return 2;
      return 0;
    }
    return class_dispatch(spec, c.posets, mode, input, documents);
  }
  if (c.universe == Universe::Bichains321) {
    ClassSpec<Bichain> spec{c.presentation, c.bichains, c.universe, c.cap};
    if (mode == "audit") throw UsageError("audit covers graph and width2 universes");
    return class_dispatch(spec, c.bichains, mode, input, documents);
  }
  ClassSpec<Graph> spec{c.presentation, c.graphs, c.universe, c.cap};
  if (mode == "audit") {
    if (c.universe == Universe::All)
      throw UsageError("audit needs the bp universe or width2");
    ForkBoundReport rep = fork_bound_audit(spec, c.cap);
    std::cout << "members: " << rep.members << "\nlongest fork: " << rep.max_fork
              << "\ndegree-3 diameter sup: " << rep.deg3_sup << '\n';
    if (!rep.decomposition_ok || !rep.consistent) std::cout << rep.failure << '\n';
    MachineBlock m;
    m.add("members", rep.members);
    m.add("max_fork", rep.max_fork);
    m.add("deg3_sup", rep.deg3_sup);
    m.add("pass", rep.decomposition_ok && rep.consistent);
    m.flush(std::cout);
    if (!rep.decomposition_ok || !rep.consistent) return 2;
    return 0;
  }
  return class_dispatch(spec, c.graphs, mode, input, documents);
}

// ---- verify ----------------------------------------------------------------

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  int budget = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("WIDTH2LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) budget = std::min(budget, cap);
  }
  return budget;
}

int run_verify(const std::string& suite, int max_size) {
  const std::vector<VerificationSuite>& suites = verification_suites();
  std::vector<int> selected;
  for (std::size_t i = 0; i < suites.size(); ++i)
    if (suite.empty() || suite == suites[i].name) selected.push_back(static_cast<int>(i));
  if (selected.empty()) throw UsageError("unknown suite '" + suite + "'");
  warm_enumeration_caches(max_size);
  std::vector<CriterionResult> results(selected.size());
  int threads = std::min<int>(thread_budget(), static_cast<int>(selected.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();)
      results[i] = suites[selected[i]].run(max_size);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  int failed = 0;
  double total = 0;
  MachineBlock m;
  for (const CriterionResult& r : results) {
    std::printf("%-4s %-15s %7.2fs  %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    m.add(r.name, r.pass);
    if (!r.pass) ++failed;
    total += r.seconds;
  }
  m.add("criteria", static_cast<long long>(results.size()));
  m.add("failed", failed);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", total);
  m.add("seconds", std::string(buf));
  m.flush(std::cout);
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width-two order laboratory"};
  app.require_subcommand(1);

  std::string to, input = "-", file_a, file_b, allow, tag, mode;
  std::string age, avoid, universe = "all", suite;
  std::vector<int> params;
  bool oscillation = false, documents = false;
  int cap = 8, max_size = 0;

  CLI::App* convert = app.add_subcommand("convert", "rewrite a document as another kind");
  convert->add_option("--to", to, "target kind")
      ->required()
      ->check(CLI::IsMember({"comp", "inc", "poset", "bichain"}));
  convert->add_option("input", input, "document file, - for stdin");

  CLI::App* metric = app.add_subcommand("metric", "distances, detours and oscillation");
  metric->add_flag("--oscillation", oscillation, "include the oscillation table");
  metric->add_option("input", input, "document file, - for stdin");

  CLI::App* decompose = app.add_subcommand("decompose", "modular structure and realizers");
  decompose->add_option("mode", mode, "what to compute")
      ->required()
      ->check(CLI::IsMember({"modules", "prime", "quotient", "realizers", "unique"}));
  decompose->add_option("input", input, "document file, - for stdin");

  CLI::App* recognize = app.add_subcommand("recognize", "bipartite permutation recognition");
  recognize->add_option("input", input, "graph document file, - for stdin");

  CLI::App* embed = app.add_subcommand("embed", "induced embedding between two documents");
  embed->add_option("pattern", file_a, "pattern document")->required();
  embed->add_option("target", file_b, "target document")->required();
  embed->add_option("--allow", allow, "comma list of dual, transpose");

  CLI::App* family = app.add_subcommand("family", "emit a named family member");
  family->add_option("tag", tag, "DF H Path P1 P2 B1 B2 Comb Kite1 Kite2 Kite3"
                                 " SturmianOrientation")
      ->required();
  family->add_option("params", params, "integer parameters");

  CLI::App* cls = app.add_subcommand("class", "hereditary class queries");
  cls->add_option("mode", mode, "member, enumerate, bounds, wqo or audit")
      ->required()
      ->check(CLI::IsMember({"member", "enumerate", "bounds", "wqo", "audit"}));
  cls->add_option("--age", age, "comma list of documents or shorthands generating an age");
  cls->add_option("--avoid", avoid, "comma list of forbidden documents or shorthands");
  cls->add_option("--universe", universe, "all, bp, width2 or bichains");
  cls->add_option("--cap", cap, "size cap for sweeps")->check(CLI::Range(1, 8));
  cls->add_flag("--documents", documents, "print enumerated members");
  cls->add_option("input", input, "member document, - for stdin");

  CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
  verify->add_option("--suite", suite, "run a single named suite");
  verify->add_option("--max-size", max_size, "shrink sweeps to this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (convert->parsed()) return run_convert(to, input);
    if (metric->parsed()) return run_metric(oscillation, input);
    if (decompose->parsed()) return run_decompose(mode, input);
    if (recognize->parsed()) return run_recognize(input);
    if (embed->parsed()) return run_embed(file_a, file_b, allow);
    if (family->parsed()) return run_family(tag, params);
    if (cls->parsed()) return run_class(mode, age, avoid, universe, cap, input, documents);
    if (verify->parsed()) return run_verify(suite, max_size);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const PropertyFailure& e) {
    std::cerr << "property failure: " << e.what() << '\n';
    if (!e.document.empty()) std::cerr << e.document;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
