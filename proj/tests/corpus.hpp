#pragma once

#include "tangles/graphsep.hpp"
#include "tangles/orient.hpp"
#include "tangles/random.hpp"
#include "tangles/system.hpp"
#include "tangles/universe.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace corpus {

using namespace tangles;

/// All bipartitions of {a,b,c,d}.
SeparationSystem u4();
/// P_x for x in "abcd": every (A→) with x ∉ A.
Orientation principal(const SeparationSystem& S, char x);
/// Standard and regularity singletons plus every star of at most three
/// members whose first sides together contain a and b. Its tangles are
/// P_a and P_b.
StarFamily u4_pair_family(const SeparationSystem& S);
Id u4_id(const SeparationSystem& S, const std::string& token);

/// The path a-b-c.
Graph p3();
/// Three K5 glued at vertex 0.
Graph tripod();

struct Case {
  std::string name;
  std::shared_ptr<const SeparationSystem> S;
  StarFamily F;
  OrientationSet tangles;  // F-tangles, all profiles here
  std::optional<Graph> graph;
  std::optional<std::int64_t> k;
};

Case graph_case(const std::string& name, const Graph& g, std::int64_t k);
/// Random submodular system with its profiles as the tangle set and the
/// profile family as F.
Case system_case(const std::string& name, Rng& rng);

/// Fixed instances plus seeded random graphs and systems. `with_tripod`
/// adds the three-K5 instance, which dominates the running time.
std::vector<Case> standard(bool with_tripod = true);

}  // namespace corpus
