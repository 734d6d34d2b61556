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
#include "falqon/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "falqon/errors.hpp"
#include "falqon/rng.hpp"

namespace falqon {
namespace {

constexpr int kBruteForceMaxVertices = 24;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

bool connected(const std::vector<std::uint32_t>& adj, int n) {
    if (n == 0) return false;
    std::uint32_t seen = 1u;
    std::uint32_t frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (frontier & (1u << v)) next |= adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1u);
}

// Invariant fingerprint used as an isomorphism prefilter: sorted degrees,
// sorted per-vertex triangle counts, rounded adjacency spectrum.
std::vector<long long> fingerprint(const Graph& g) {
    const auto adj = adjacency_masks(g);
    std::vector<long long> key;
    key.reserve(static_cast<std::size_t>(3 * g.n) + 2);

    std::vector<int> degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    for (int d : degs) key.push_back(d);
    key.push_back(-1);

    std::vector<int> tri(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) {
        int twice = 0;
        std::uint32_t nb = adj[static_cast<std::size_t>(v)];
        for (int a = 0; a < g.n; ++a) {
            if (nb & (1u << a)) twice += std::popcount(nb & adj[static_cast<std::size_t>(a)]);
        }
        tri[static_cast<std::size_t>(v)] = twice / 2;
    }
    std::sort(tri.begin(), tri.end());
    for (int t : tri) key.push_back(t);
    key.push_back(-1);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (const Edge& e : g.edges) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    for (int i = 0; i < g.n; ++i) {
        key.push_back(std::llround(solver.eigenvalues()[i] * 1e6));
    }
    return key;
}

// Backtracking isomorphism search; assumes equal n, degree sequences
// already matched by the fingerprint.
bool isomorphic_exact(const Graph& a, const Graph& b) {
    const int n = a.n;
    const auto adj_a = adjacency_masks(a);
    const auto adj_b = adjacency_masks(b);

    std::vector<int> deg_a(static_cast<std::size_t>(n)), deg_b(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        deg_a[static_cast<std::size_t>(v)] = std::popcount(adj_a[static_cast<std::size_t>(v)]);
        deg_b[static_cast<std::size_t>(v)] = std::popcount(adj_b[static_cast<std::size_t>(v)]);
    }

    // Map vertices of `a` in an order that keeps each new vertex attached
    // to the already-mapped prefix where possible.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    {
        std::uint32_t placed = 0;
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            int best_links = -1;
            for (int v = 0; v < n; ++v) {
                if (placed & (1u << v)) continue;
                const int links = std::popcount(adj_a[static_cast<std::size_t>(v)] & placed);
                if (links > best_links ||
                    (links == best_links && best >= 0 &&
                     deg_a[static_cast<std::size_t>(v)] > deg_a[static_cast<std::size_t>(best)])) {
                    best = v;
                    best_links = links;
                }
            }
            order.push_back(best);
            placed |= 1u << best;
        }
    }

    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    std::uint32_t used_b = 0;

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const int va = order[depth];
        const std::uint32_t need = adj_a[static_cast<std::size_t>(va)];
        for (int vb = 0; vb < n; ++vb) {
            if (used_b & (1u << vb)) continue;
            if (deg_b[static_cast<std::size_t>(vb)] != deg_a[static_cast<std::size_t>(va)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth; ++j) {
                const int pa = order[j];
                const bool adj_in_a = (need >> pa) & 1u;
                const bool adj_in_b =
                    (adj_b[static_cast<std::size_t>(vb)] >> map_ab[static_cast<std::size_t>(pa)]) & 1u;
                if (adj_in_a != adj_in_b) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(va)] = vb;
            used_b |= 1u << vb;
            if (self(self, depth + 1)) return true;
            used_b &= ~(1u << vb);
            map_ab[static_cast<std::size_t>(va)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::string format_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

} // namespace

void Graph::validate() const {
    if (n < 2) throw ParameterError("graph needs at least 2 vertices");
    if (n > 32) throw ParameterError("graph exceeds 32 vertices");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw ParameterError("edge endpoint out of range");
        if (e.u == e.v) throw ParameterError("self-loop");
        if (e.u > e.v) throw ParameterError("edge endpoints must satisfy u < v");
        if (!(e.weight > 0.0)) throw ParameterError("edge weight must be positive");
        if (!seen.insert({e.u, e.v}).second) throw ParameterError("duplicate edge");
    }
}

bool Graph::is_unweighted() const {
    return std::all_of(edges.begin(), edges.end(),
                       [](const Edge& e) { return e.weight == 1.0; });
}

bool Graph::is_connected() const { return connected(adjacency_masks(*this), n); }

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

double Graph::total_weight() const {
    double sum = 0.0;
    for (const Edge& e : edges) sum += e.weight;
    return sum;
}

Graph generate_connected_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n < 4) throw ParameterError("regular generator requires n >= 4");
    if (degree < 1 || degree >= n) throw ParameterError("degree must satisfy 1 <= d < n");
    if ((n * degree) % 2 != 0) throw ParameterError("n*d must be even");

    RandomStream rng(seed);
    constexpr int kAttemptBudget = 200000;
    std::vector<int> stubs(static_cast<std::size_t>(n * degree));
    for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
        for (int v = 0; v < n; ++v) {
            for (int s = 0; s < degree; ++s) stubs[static_cast<std::size_t>(v * degree + s)] = v;
        }
        rng.shuffle(stubs);

        bool simple = true;
        std::set<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!pairs.insert({u, v}).second) {
                simple = false;
                break;
            }
        }
        if (!simple) continue;

        Graph g;
        g.n = n;
        g.edges.reserve(pairs.size());
        for (const auto& [u, v] : pairs) g.edges.push_back({u, v, 1.0});
        if (!g.is_connected()) continue;
        return g;
    }
    throw GenerationError("pairing-model rejection budget exceeded");
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    if (fingerprint(a) != fingerprint(b)) return false;
    return isomorphic_exact(a, b);
}

std::vector<Graph> dedupe_nonisomorphic(const std::vector<Graph>& graphs) {
    std::vector<Graph> kept;
    std::vector<std::vector<long long>> keys;
    for (const Graph& g : graphs) {
        if (!kept.empty() && g.n != kept.front().n)
            throw ParameterError("dedupe requires equal vertex counts");
        auto key = fingerprint(g);
        bool fresh = true;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (keys[i] == key && isomorphic_exact(kept[i], g)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            kept.push_back(g);
            keys.push_back(std::move(key));
        }
    }
    return kept;
}

Graph assign_uniform_weights(const Graph& g, std::uint64_t seed) {
    g.validate();
    RandomStream rng(seed);
    Graph out = g;
    for (Edge& e : out.edges) e.weight = rng.uniform_open01();
    return out;
}

double cut_value(const Graph& g, std::uint64_t assignment) {
    double cut = 0.0;
    for (const Edge& e : g.edges) {
        if (((assignment >> e.u) ^ (assignment >> e.v)) & 1u) cut += e.weight;
    }
    return cut;
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
    g.validate();
    if (g.n > kBruteForceMaxVertices)
        throw CapacityError("brute-force MaxCut limited to 24 vertices");

    const std::size_t edge_count = g.edges.size();
    std::vector<std::uint64_t> masks(edge_count);
    std::vector<double> weights(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        masks[i] = (1ull << g.edges[i].u) | (1ull << g.edges[i].v);
        weights[i] = g.edges[i].weight;
    }

    const std::uint64_t half = 1ull << (g.n - 1);
    auto cut_of = [&](std::uint64_t z) {
        double c = 0.0;
        for (std::size_t i = 0; i < edge_count; ++i) {
            c += weights[i] * static_cast<double>(std::popcount(z & masks[i]) & 1);
        }
        return c;
    };

    double best = 0.0;
    for (std::uint64_t z = 0; z < half; ++z) best = std::max(best, cut_of(z));

    const double tol = 1e-12 * std::max(1.0, best);
    const std::uint64_t all = (g.n == 64) ? ~0ull : (1ull << g.n) - 1ull;
    MaxCutSolution sol;
    sol.max_cut_value = best;
    sol.min_energy = -best;
    for (std::uint64_t z = 0; z < half; ++z) {
        if (cut_of(z) >= best - tol) {
            sol.optimal_bitstrings.push_back(z);
            sol.optimal_bitstrings.push_back(z ^ all);
        }
    }
    std::sort(sol.optimal_bitstrings.begin(), sol.optimal_bitstrings.end());
    return sol;
}

std::vector<Graph> generate_nonisomorphic_ensemble(int n, int degree, int count,
                                                   std::uint64_t seed, int stall_limit,
                                                   int max_attempts) {
    std::vector<Graph> classes;
    std::vector<std::vector<long long>> keys;
    int stall = 0;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = generate_connected_regular_graph(n, degree, mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        auto key = fingerprint(g);
        bool fresh = true;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (keys[i] == key && isomorphic_exact(classes[i], g)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            classes.push_back(std::move(g));
            keys.push_back(std::move(key));
            stall = 0;
            if (count > 0 && static_cast<int>(classes.size()) == count) return classes;
        } else {
            ++stall;
            if (count < 0 && stall >= stall_limit) return classes;
        }
    }
    if (count < 0) return classes;
    throw GenerationError("could not collect requested number of graph classes");
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (const Edge& e : g.edges) {
        out += std::to_string(e.u) + " " + std::to_string(e.v);
        if (e.weight != 1.0) {
            out += " ";
            out += format_weight(e.weight);
        }
        out += "\n";
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag != "n") throw ParameterError("edge list must start with 'n <count>'");
            if (!(ls >> g.n)) throw ParameterError("bad vertex count in edge list header");
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParameterError("edge line needs two endpoints");
        double w = 1.0;
        ls >> w;
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v, w});
    }
    if (!have_header) throw ParameterError("empty edge list");
    g.validate();
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write graph file: " + path);
    out << to_edge_list(g);
    if (!out) throw IoError("short write: " + path);
}

std::uint64_t graph_hash(const Graph& g) {
    const std::string text = to_edge_list(g);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_bitstring(std::uint64_t z, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if ((z >> j) & 1ull) s[static_cast<std::size_t>(j)] = '1';
    }
    return s;
}

std::uint64_t parse_bitstring(const std::string& text) {
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1') {
            z |= 1ull << j;
        } else if (text[j] != '0') {
            throw ParameterError("bitstring must contain only 0/1");
        }
    }
    return z;
}

} // namespace falqon
