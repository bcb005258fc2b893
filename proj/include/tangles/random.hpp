#pragma once

#include "tangles/graphsep.hpp"
#include "tangles/orient.hpp"
#include "tangles/system.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tangles {

using Rng = std::mt19937_64;

/// Submodular system of at most `max_unoriented` bipartitions of 3 to 5
/// points, grown from random seeds by adding corners until submodular.
SeparationSystem random_submodular_system(Rng& rng, std::size_t max_unoriented = 10);

/// Standard star family closed under shifting: the standard singletons,
/// up to `seed_stars` random stars, then the shifting closure. Retries
/// until every image is a star.
StarFamily random_shift_closed_family(const SeparationSystem& S, Rng& rng, std::size_t seed_stars);

/// Erdős–Rényi graph on n vertices.
Graph random_graph(Rng& rng, std::size_t n, double p);

/// A random graph on 2 to 4 vertices, glued 2 or 3 times to itself at a
/// vertex (total at most `max_vertices`), then randomly relabelled.
Graph random_symmetric_graph(Rng& rng, std::size_t max_vertices = 10);

/// Renames vertex v to perm[v].
Graph permute_graph(const Graph& g, const std::vector<std::size_t>& perm);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

}  // namespace tangles
