// Copyright 2026 The falqon-lab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace falqon {

/// One weighted undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Weighted undirected MaxCut instance.
///
/// Bit convention, fixed across the whole library: an assignment is a
/// bitmask z whose bit j is the side of vertex/qubit j, and qubit 0 is
/// the least significant bit of a basis-state index.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    /// Throws ParameterError on self-loops, duplicate or out-of-range
    /// edges, or non-positive weights.
    void validate() const;

    bool is_unweighted() const;
    bool is_connected() const;
    std::vector<int> degrees() const;
    double total_weight() const;
};

struct MaxCutSolution {
    double max_cut_value = 0.0;
    /// Sorted, closed under global bit flip.
    std::vector<std::uint64_t> optimal_bitstrings;
    /// Ground energy of the matching Ising diagonal: -max_cut_value.
    double min_energy = 0.0;
};

/// Samples a simple connected d-regular graph on n vertices via the
/// pairing model, resampling on loops, multi-edges, or disconnection.
/// Requires n >= 4, d < n, and n*d even.
Graph generate_connected_regular_graph(int n, int degree, std::uint64_t seed);

/// Returns a maximal subset of pairwise non-isomorphic graphs (weights
/// ignored), preserving first-seen order. All inputs must share n.
std::vector<Graph> dedupe_nonisomorphic(const std::vector<Graph>& graphs);

/// Exact isomorphism test on the underlying unweighted graphs.
bool graphs_isomorphic(const Graph& a, const Graph& b);

/// Keeps the edge set and draws each weight independently from (0, 1].
Graph assign_uniform_weights(const Graph& g, std::uint64_t seed);

/// Total weight of edges crossing the partition encoded by `assignment`.
double cut_value(const Graph& g, std::uint64_t assignment);

/// Exhaustive MaxCut oracle over 2^(n-1) partitions (global flip halves
/// the search). Requires n <= 24.
MaxCutSolution brute_force_maxcut(const Graph& g);

/// Samples d-regular graphs until `count` pairwise non-isomorphic ones
/// are collected. count < 0 exhausts: stop after `stall_limit` samples
/// in a row add no new class.
std::vector<Graph> generate_nonisomorphic_ensemble(int n, int degree, int count,
                                                   std::uint64_t seed,
                                                   int stall_limit = 400,
                                                   int max_attempts = 50000);

// Edge-list text format. Header line "n <vertex count>", then one
// "u v w" line per edge; w may be omitted and defaults to 1. Weights
// round-trip losslessly (17 significant digits).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// FNV-1a hash of the canonical edge-list text; artifact provenance tag.
std::uint64_t graph_hash(const Graph& g);

/// Renders bit j of z as character j ('0'/'1'), qubit 0 first.
std::string format_bitstring(std::uint64_t z, int n);
std::uint64_t parse_bitstring(const std::string& text);

} // namespace falqon
