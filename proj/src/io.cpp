#include "tangles/io.hpp"

#include "tangles/core.hpp"
#include "tangles/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace tangles {

namespace {

Order parse_order(const Json& j) {
  if (j.is_number_integer()) return Order(j.get<std::int64_t>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Order(std::stoll(s));
      return Order(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      fail(ErrorKind::input, "bad order value '" + s + "'");
    }
  }
  fail(ErrorKind::input, "orders are integers or \"p/q\" strings");
}

std::size_t element_index(const Json& j, const std::vector<std::string>& names) {
  if (j.is_number_unsigned()) {
    auto i = j.get<std::size_t>();
    if (i >= names.size()) fail(ErrorKind::input, "element index out of range");
    return i;
  }
  if (j.is_string()) {
    auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) fail(ErrorKind::input, "unknown element '" + j.get<std::string>() + "'");
    return static_cast<std::size_t>(it - names.begin());
  }
  fail(ErrorKind::input, "elements are given by name or index");
}

std::vector<std::vector<std::size_t>> table(const Json& j, const std::vector<std::string>& names) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : j) {
    out.emplace_back();
    for (const auto& cell : row) out.back().push_back(element_index(cell, names));
  }
  return out;
}

Instance table_instance(const Json& j) {
  TableUniverse::Spec spec;
  spec.names = j.at("elements").get<std::vector<std::string>>();
  for (const auto& x : j.at("involution")) spec.involution.push_back(element_index(x, spec.names));
  if (j.contains("leq_pairs"))
    for (const auto& p : j.at("leq_pairs")) {
      if (!p.is_array() || p.size() != 2) fail(ErrorKind::input, "leq_pairs entries are pairs");
      spec.leq_pairs.push_back({element_index(p[0], spec.names), element_index(p[1], spec.names)});
    }
  if (j.contains("meet")) spec.meet = table(j.at("meet"), spec.names);
  if (j.contains("join")) spec.join = table(j.at("join"), spec.names);
  if (j.contains("order")) {
    std::vector<Order> order;
    for (const auto& o : j.at("order")) order.push_back(parse_order(o));
    spec.order = std::move(order);
  }
  Instance inst;
  inst.universe = std::make_shared<const TableUniverse>(std::move(spec));
  return inst;
}

Code side_mask(const BipartitionUniverse& U, const Json& side) {
  if (side.is_string()) return U.mask_of(split_name_list(side.get<std::string>()));
  return U.mask_of(side.get<std::vector<std::string>>());
}

Instance bipartition_instance(const Json& j) {
  auto points = j.at("ground_set").get<std::vector<std::string>>();
  std::optional<std::vector<BipartitionUniverse::CutEdge>> cut;
  if (j.contains("cut")) {
    cut.emplace();
    for (const auto& e : j.at("cut")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) fail(ErrorKind::input, "cut entries are [u, v] or [u, v, w]");
      BipartitionUniverse::CutEdge edge;
      edge.u = element_index(e[0], points);
      edge.v = element_index(e[1], points);
      if (e.size() == 3) edge.weight = parse_order(e[2]);
      cut->push_back(edge);
    }
  }
  auto U = std::make_shared<const BipartitionUniverse>(points, cut);
  Instance inst;
  inst.universe = U;
  if (j.contains("separations") && !(j.at("separations").is_string() && j.at("separations") == "all")) {
    std::vector<Code> codes;
    for (const auto& side : j.at("separations")) {
      Code c = side_mask(*U, side);
      codes.push_back(c);
      codes.push_back(U->invert(c));
    }
    inst.members = std::move(codes);
  }
  return inst;
}

Instance graph_instance(Graph g) {
  Instance inst;
  inst.universe = std::make_shared<const GraphUniverse>(g);
  inst.graph = std::move(g);
  return inst;
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto id = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.size() == 1) {
      id(tokens[0]);
    } else if (tokens.size() == 2) {
      std::size_t u = id(tokens[0]);
      edges.push_back({u, id(tokens[1])});
    } else {
      fail(ErrorKind::input, "edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
  }
  return Graph::make(std::move(names), std::move(edges));
}

Graph parse_graph_json(const Json& j) {
  auto names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::input, "graph edges are pairs");
    edges.push_back({element_index(e[0], names), element_index(e[1], names)});
  }
  return Graph::make(std::move(names), std::move(edges));
}

Instance parse_instance(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(ErrorKind::input, "empty instance");
  if (text[first] != '{') return graph_instance(parse_edge_list(text));
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::input, std::string("malformed JSON: ") + e.what());
  }
  try {
    std::string kind;
    if (j.contains("kind"))
      kind = j.at("kind").get<std::string>();
    else if (j.contains("elements"))
      kind = "table";
    else if (j.contains("ground_set"))
      kind = "bipartition";
    else if (j.contains("vertices"))
      kind = "graph";
    if (kind == "table") return table_instance(j);
    if (kind == "bipartition") return bipartition_instance(j);
    if (kind == "graph") return graph_instance(parse_graph_json(j));
    fail(ErrorKind::input, "unknown instance kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::input, std::string("instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

SeparationSystem instantiate(const Instance& inst, std::optional<std::int64_t> k, std::size_t max_seps) {
  auto checked = [&](SeparationSystem S) {
    if (S.unoriented().size() > max_seps)
      fail(ErrorKind::resource, "system has " + std::to_string(S.unoriented().size()) + " separations, cap is " +
                                    std::to_string(max_seps));
    return S;
  };
  if (inst.members) {
    SeparationSystem S(inst.universe, *inst.members);
    if (!k) return checked(std::move(S));
    IdSet keep;
    for (Id i = 0; i < S.size(); ++i)
      if (S.order(i) < Order(*k)) keep.push_back(i);
    return checked(S.subsystem(keep));
  }
  if (k) return checked(induced_Sk(inst.universe, *k));
  return checked(SeparationSystem::full(inst.universe));
}

StarFamily parse_family(const SeparationSystem& S, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::input, std::string("malformed family JSON: ") + e.what());
  }
  if (!j.contains("stars") || !j.at("stars").is_array()) fail(ErrorKind::input, "family needs a \"stars\" list");
  std::vector<IdSet> stars;
  for (const auto& star : j.at("stars")) {
    IdSet members;
    for (const auto& m : star) {
      if (m.is_number_unsigned()) {
        auto i = m.get<std::size_t>();
        if (i >= S.size()) fail(ErrorKind::input, "family member id " + std::to_string(i) + " out of range");
        members.push_back(static_cast<Id>(i));
      } else if (m.is_string()) {
        members.push_back(S.parse(m.get<std::string>()));
      } else {
        fail(ErrorKind::input, "family members are ids or separation tokens");
      }
    }
    stars.push_back(make_set(std::move(members)));
  }
  return StarFamily(S.size(), std::move(stars));
}

StarFamily load_family(const SeparationSystem& S, const std::string& path) { return parse_family(S, read_file(path)); }

Json separation_json(const SeparationSystem& S, Id x) { return S.describe(x); }

Json ids_json(const SeparationSystem& S, const IdSet& ids) {
  Json out = Json::array();
  for (Id x : make_set(ids)) out.push_back(S.describe(x));
  return out;
}

Json orientation_json(const SeparationSystem& S, const Orientation& O) { return ids_json(S, O.ids()); }

Json nested_json(const SeparationSystem& S, const IdSet& N) {
  IdSet reps;
  for (Id x : N) reps.push_back(S.rep(x));
  return ids_json(S, reps);
}

Json stree_json(const SeparationSystem& S, const STree& T) {
  STree c = canonical_form(S, T);
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", S.describe(e.label)}});
  Json stars = Json::array();
  for (const auto& star : stars_of(S, c)) stars.push_back(ids_json(S, star));
  return Json{{"vertices", c.vertices}, {"edges", edges}, {"stars", stars}};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string stree_dot(const SeparationSystem& S, const STree& T, const std::vector<std::string>& vertex_labels) {
  STree c = vertex_labels.empty() ? canonical_form(S, T) : T;
  std::ostringstream out;
  out << "digraph stree {\n";
  for (std::size_t v = 0; v < c.vertices; ++v) {
    out << "  n" << v;
    if (v < vertex_labels.size()) out << " [label=\"" << dot_escape(vertex_labels[v]) << "\"]";
    out << ";\n";
  }
  for (const auto& e : c.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(S.describe(e.label)) << "\"];\n";
  out << "}\n";
  return out.str();
}

Json construction_trace(const SeparationSystem& S, const Construction41& c) {
  Json rounds = Json::array();
  for (std::size_t r = 0; r < c.rounds_N.size(); ++r) {
    Json records = Json::array();
    for (const auto& rec : c.records)
      if (rec.round == r + 1)
        records.push_back(Json{{"profile", rec.profile}, {"M", ids_json(S, rec.m_set)}, {"s_P", S.describe(rec.s_p)}});
    rounds.push_back(Json{{"round", r + 1},
                          {"records", records},
                          {"N", nested_json(S, c.rounds_N[r])},
                          {"surviving", c.rounds_size[r]}});
  }
  return Json{{"rounds", rounds}, {"N", nested_json(S, c.N)}};
}

Json good_trace(const SeparationSystem& S, const GoodNestedSet& g) {
  Json levels = Json::array();
  for (const auto& level : g.levels) {
    Json recs = Json::array();
    for (const auto& rec : level) {
      Json r{{"profile", rec.profile}, {"E", ids_json(S, rec.e_set)}};
      r["r_P"] = rec.r_p ? Json(S.describe(*rec.r_p)) : Json(nullptr);
      recs.push_back(r);
    }
    levels.push_back(recs);
  }
  return Json{{"levels", levels}, {"N", nested_json(S, g.N)}};
}

Json decomposition_json(const SeparationSystem& S, const Decomposition& d) {
  const auto& g = graph_universe_of(S).graph();
  Json nodes = Json::array();
  for (std::size_t v = 0; v < d.nodes.size(); ++v)
    nodes.push_back(Json{{"id", v}, {"part", describe_part(g, d.parts[v])}, {"star", ids_json(S, d.nodes[v])}});
  Json edges = Json::array();
  for (const auto& e : d.tree.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", S.describe(e.label)}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

std::string decomposition_dot(const SeparationSystem& S, const Decomposition& d) {
  const auto& g = graph_universe_of(S).graph();
  std::vector<std::string> labels;
  for (auto part : d.parts) labels.push_back(describe_part(g, part));
  return stree_dot(S, d.tree, labels);
}

}  // namespace tangles
