#pragma once

#include "tangles/canonical.hpp"
#include "tangles/graphsep.hpp"
#include "tangles/orient.hpp"
#include "tangles/system.hpp"
#include "tangles/trees.hpp"
#include "tangles/universe.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tangles {

using Json = nlohmann::ordered_json;

/// A loaded universe plus an optional explicit member list.
struct Instance {
  UniversePtr universe;
  std::optional<Graph> graph;
  std::optional<std::vector<Code>> members;  // closed under inversion
};

/// JSON with "kind" table, bipartition or graph (inferred from the keys
/// when absent), or a plain "u v" edge list. ErrorKind::input on bad input.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
Graph parse_edge_list(std::string_view text);
Graph parse_graph_json(const Json& j);

/// Explicit members, else S_k when k is given, else the whole universe.
/// ErrorKind::resource if the result exceeds `max_seps` unoriented
/// separations.
SeparationSystem instantiate(const Instance& inst, std::optional<std::int64_t> k, std::size_t max_seps = 4096);

/// {"stars": [[member, ...], ...]}; members are ids or separation tokens.
StarFamily parse_family(const SeparationSystem& S, std::string_view text);
StarFamily load_family(const SeparationSystem& S, const std::string& path);

std::string read_file(const std::string& path);

Json separation_json(const SeparationSystem& S, Id x);
Json ids_json(const SeparationSystem& S, const IdSet& ids);
Json orientation_json(const SeparationSystem& S, const Orientation& O);
/// Representatives of N in id order.
Json nested_json(const SeparationSystem& S, const IdSet& N);
/// In canonical form.
Json stree_json(const SeparationSystem& S, const STree& T);
std::string stree_dot(const SeparationSystem& S, const STree& T, const std::vector<std::string>& vertex_labels = {});
Json construction_trace(const SeparationSystem& S, const Construction41& c);
Json good_trace(const SeparationSystem& S, const GoodNestedSet& g);
Json decomposition_json(const SeparationSystem& S, const Decomposition& d);
std::string decomposition_dot(const SeparationSystem& S, const Decomposition& d);

}  // namespace tangles
