#pragma once

#include "gsamp/graph.hpp"

#include <cstddef>
#include <cstdint>

namespace gsamp {

/// Unit-weight chain 0-1-...-(n-1). Requires n >= 2.
Graph build_path(std::size_t n);

/// Unit-weight cycle. Requires n >= 3.
Graph build_ring(std::size_t n);

/// 4-connected lattice, vertex index r*cols + c, coordinates evenly spaced in [0,1)^2.
Graph build_grid(std::size_t rows, std::size_t cols);

Graph build_complete(std::size_t n);

/// Star with `center_degree` leaves around vertex 0; the remaining
/// n - center_degree - 1 vertices form a tail hanging off the last leaf, so
/// the center keeps exactly `center_degree` neighbours.
Graph build_comet(std::size_t n, std::size_t center_degree);

/// Planted partition with k near-equal blocks. Retries with seed+1, seed+2, ...
/// until connected (bounded).
Graph build_community(std::size_t n, std::size_t k_communities, double p_in = 0.3, double p_out = 0.01,
                      std::uint64_t seed = 0);

/// Simple d-regular graph from the pairing model; unsuitable pairs are
/// re-drawn and the whole pairing restarted at most 1000 times.
Graph build_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed = 0);

/// Uniform points in [0,1)^2 joined to their k nearest neighbours (symmetrised)
/// with Gaussian weights exp(-d^2 / 2 sigma^2), sigma the mean k-NN distance.
/// Disconnected draws are retried with seed+1, seed+2, ... (bounded).
Graph build_random_sensor(std::size_t n, std::size_t k_nearest = 6, std::uint64_t seed = 0);

}  // namespace gsamp
