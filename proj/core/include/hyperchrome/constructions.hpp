#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hyperchrome/hypergraph.hpp"
#include "hyperchrome/rng.hpp"

namespace hyperchrome {

/// All C(n,3) triples on n >= 3 vertices.
Hypergraph complete(std::size_t n);

/// Edges {2i, 2i+1, 2i+2 mod 2l}; l >= 3.
Hypergraph loose_cycle(std::size_t l);
/// Edges {2i, 2i+1, 2i+2} on 2l+1 vertices; l >= 1.
Hypergraph loose_path(std::size_t l);

/// One of: k4, k4_minus, linear_pair, neighborhood5, sunflower7, fano.
Hypergraph named(std::string_view name);
std::vector<std::string_view> named_graphs();

/// (t-1)r vertices in r consecutive parts of size t-1; a triple is an edge iff
/// it meets at least two parts.
Hypergraph partition_example(std::size_t r, std::size_t t);

/// Symplectic generalized quadrangle W(3,q) for prime q: points of PG(3,q),
/// edges are the totally isotropic lines (q+1 points each).
Hypergraph gq(std::size_t q);

struct BlowupSpec {
    std::size_t m = 0;
    std::size_t tau = 1;
    RngSeed seed;
};

/// F_q on m vertices: a tau x tau grid of singletons v_ij plus sets S_i, T_j,
/// with edges {v_ij, a, b} for a in S_i, b in T_j.
struct Blowup {
    Hypergraph graph;
    std::vector<Vertex> grid;               // grid[i * tau + j] = v_ij
    std::vector<std::vector<Vertex>> s;     // S_1..S_tau
    std::vector<std::vector<Vertex>> t;     // T_1..T_tau
};

Blowup fq_blowup(const BlowupSpec& spec);

/// Replaces every edge of g (uniformity >= tau^2 + 2 tau) by an independent
/// seeded copy of F_q on its vertices.
Hypergraph blow_up(const Hypergraph& g, std::size_t tau, RngSeed seed);

/// m distinct uniformly random triples on n vertices.
Hypergraph random_3graph(std::size_t n, std::size_t m, RngSeed seed);

/// Connected 3-uniform hyperforest with e edges on 2e+1 vertices; each new
/// edge hangs off a uniformly chosen existing vertex.
Hypergraph random_hypertree(std::size_t e, RngSeed seed);

}  // namespace hyperchrome
