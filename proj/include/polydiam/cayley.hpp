/*
   Copyright 2026 The polydiam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cayley.hpp
 * @brief The directed Cayley graph on the multiplicative group of the
 *        extension field, generated by evaluations of degree-d prime-power
 *        polynomials at the field's distinguished root.
 *
 * Edges are u -> v iff u/v lies in the evaluation set.  Right multiplication
 * by any group element is a digraph automorphism, so the graph is
 * vertex-transitive and one BFS from the identity determines the diameter.
 * Walking edges forward multiplies by inverse generator values; walking the
 * reversed orientation multiplies by the values themselves.  Both stepping
 * conventions yield the same diameter (inversion permutes the vertex set),
 * and the test suite asserts this against an all-pairs oracle.
 */

#ifndef POLYDIAM_CAYLEY_HPP
#define POLYDIAM_CAYLEY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polydiam/common.hpp"
#include "polydiam/dlog.hpp"
#include "polydiam/ff.hpp"
#include "polydiam/poly_enum.hpp"

namespace polydiam {

/// One distinct generator value with everything that evaluates to it.
struct GeneratorEntry {
    ExtElem value;
    std::uint32_t multiplicity = 0;   // number of catalog polynomials mapping here
    std::uint64_t total_lambda = 0;   // sum of their weights
    std::vector<WeightedPoly> sources;
};

/// The evaluation multiset of degree-d prime powers at the root, grouped by
/// value.  Entries are ordered by ascending residue code.
struct GeneratorSet {
    std::uint32_t d = 0;
    std::vector<GeneratorEntry> elements;
    std::uint32_t distinct_count = 0;
    std::uint64_t regularity = 0;  // #P_d, the graph's out-degree counted with multiplicity

    bool contains_identity_value(const FieldContext& ctx) const {
        for (const auto& e : elements) {
            if (ctx.code(e.value) == 1) return true;
        }
        return false;
    }
};

/// Evaluate every catalog prime power at the root and group by value.
/// Requires 1 <= d < n so that no evaluation can be zero.
inline GeneratorSet build_generators(const FieldContext& ctx, const PolyCatalog& catalog) {
    if (catalog.d < 1 || catalog.d >= ctx.n()) {
        throw precondition_error("build_generators: need 1 <= d < n (zero could enter the evaluation set)");
    }
    if (catalog.q != ctx.q()) throw precondition_error("build_generators: catalog base field mismatch");
    std::map<std::uint64_t, GeneratorEntry> grouped;
    for (const WeightedPoly& w : catalog.prime_powers) {
        ExtElem value = ctx.evaluate_at_alpha(w.poly);
        const std::uint64_t code = ctx.code(value);
        if (code == 0) throw internal_error("build_generators: evaluation hit zero despite d < n");
        GeneratorEntry& entry = grouped[code];
        if (entry.multiplicity == 0) entry.value = std::move(value);
        entry.multiplicity += 1;
        entry.total_lambda += w.lambda;
        entry.sources.push_back(w);
    }
    GeneratorSet out;
    out.d = catalog.d;
    out.regularity = catalog.prime_powers.size();
    for (auto& [code, entry] : grouped) out.elements.push_back(std::move(entry));
    out.distinct_count = static_cast<std::uint32_t>(out.elements.size());
    return out;
}

inline GeneratorSet build_generators(const FieldContext& ctx, std::uint32_t d,
                                     std::uint64_t enum_cap = kDefaultEnumCap) {
    return build_generators(ctx, make_catalog(ctx.base(), d, enum_cap));
}

/// v -> v * e walks the reversed edge orientation; v -> v * e^{-1} walks
/// edges forward.  The diameters coincide (see the file comment).
enum class StepConvention { kMultiply, kMultiplyInverse };

inline const char* step_convention_name(StepConvention c) {
    return c == StepConvention::kMultiply ? "multiply" : "multiply-inverse";
}

struct DiameterResult {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    FqPoly modulus;
    StepConvention convention = StepConvention::kMultiply;
    bool connected = false;
    std::optional<std::uint32_t> diameter;            // absent iff disconnected
    std::vector<std::uint64_t> distance_histogram;    // [k] = vertices at distance k from identity
    std::optional<ExtElem> eccentric_vertex;          // a vertex attaining the diameter
    std::optional<ExtElem> unreached_witness;         // present iff disconnected
    std::uint64_t reached = 0;
};

/// Single BFS over the whole group from the identity vertex.  With a dlog
/// table, vertices are exponents and a step is an index addition; without
/// one, vertices are residue codes and a step is a field multiplication.
/// Scanning stops as soon as every vertex is reached: distances assigned up
/// to that point are final because BFS discovers in distance order.
inline DiameterResult bfs_from_identity(const GeneratorSet& gens, const FieldContext& ctx,
                                        const DlogTable* dlog = nullptr,
                                        StepConvention convention = StepConvention::kMultiply,
                                        std::uint64_t max_order = kDefaultMaxOrder) {
    const std::uint64_t N = ctx.group_order();
    if (N > max_order) {
        throw resource_error("bfs_from_identity: group order " + std::to_string(N) + " exceeds cap " +
                             std::to_string(max_order) + " (POLYDIAM_MAX_ORDER)");
    }
    if (dlog && dlog->order() != N) throw precondition_error("bfs_from_identity: dlog table context mismatch");

    DiameterResult res;
    res.q = ctx.q();
    res.n = ctx.n();
    res.d = gens.d;
    res.modulus = ctx.modulus();
    res.convention = convention;

    std::vector<std::int32_t> dist(N, -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(N);

    // vertex index: exponent (dlog) or residue code - 1 (fallback)
    dist[0] = 0;
    queue.push_back(0);
    std::uint64_t reached = 1;
    std::uint32_t last = 0;

    if (dlog) {
        std::vector<std::uint32_t> steps;
        steps.reserve(gens.elements.size());
        for (const auto& e : gens.elements) {
            std::uint64_t t = dlog->log(e.value);
            if (convention == StepConvention::kMultiplyInverse && t != 0) t = N - t;
            steps.push_back(static_cast<std::uint32_t>(t));
        }
        for (std::size_t head = 0; head < queue.size() && reached < N; ++head) {
            const std::uint32_t v = queue[head];
            const std::int32_t dv = dist[v];
            for (std::uint32_t s : steps) {
                std::uint64_t w = v + std::uint64_t(s);
                if (w >= N) w -= N;
                if (dist[w] < 0) {
                    dist[w] = dv + 1;
                    queue.push_back(static_cast<std::uint32_t>(w));
                    last = static_cast<std::uint32_t>(w);
                    if (++reached == N) break;
                }
            }
        }
    } else {
        std::vector<ExtElem> steps;
        steps.reserve(gens.elements.size());
        for (const auto& e : gens.elements) {
            steps.push_back(convention == StepConvention::kMultiply ? e.value : ctx.inv(e.value));
        }
        for (std::size_t head = 0; head < queue.size() && reached < N; ++head) {
            const std::uint32_t v = queue[head];
            const std::int32_t dv = dist[v];
            const ExtElem u = ctx.from_code(v + 1);
            for (const ExtElem& s : steps) {
                const std::uint64_t w = ctx.code(ctx.mul(u, s)) - 1;
                if (dist[w] < 0) {
                    dist[w] = dv + 1;
                    queue.push_back(static_cast<std::uint32_t>(w));
                    last = static_cast<std::uint32_t>(w);
                    if (++reached == N) break;
                }
            }
        }
    }

    res.reached = reached;
    res.connected = (reached == N);
    const std::uint32_t max_dist = static_cast<std::uint32_t>(dist[last]);
    res.distance_histogram.assign(max_dist + 1, 0);
    for (std::uint64_t v = 0; v < N; ++v) {
        if (dist[v] >= 0) res.distance_histogram[static_cast<std::uint32_t>(dist[v])] += 1;
    }
    if (res.connected) {
        res.diameter = max_dist;
        res.eccentric_vertex = dlog ? dlog->exp(last) : ctx.from_code(std::uint64_t(last) + 1);
    } else {
        for (std::uint64_t v = 0; v < N; ++v) {
            if (dist[v] < 0) {
                res.unreached_witness = dlog ? dlog->exp(v) : ctx.from_code(v + 1);
                break;
            }
        }
    }
    return res;
}

/// Explicit adjacency of the oracle graph: u -> u * e^{-1} for each distinct
/// generator value e.  Test-scale only.
inline std::vector<std::vector<std::uint32_t>> build_oracle_adjacency(const GeneratorSet& gens,
                                                                      const FieldContext& ctx) {
    if (ctx.ext_order() > 512) throw precondition_error("build_oracle_adjacency: q^n must be <= 512");
    const std::uint64_t N = ctx.group_order();
    std::vector<ExtElem> inv_gens;
    inv_gens.reserve(gens.elements.size());
    for (const auto& e : gens.elements) inv_gens.push_back(ctx.inv(e.value));
    std::vector<std::vector<std::uint32_t>> adj(N);
    for (std::uint64_t u = 0; u < N; ++u) {
        const ExtElem ue = ctx.from_code(u + 1);
        for (const ExtElem& g : inv_gens) {
            adj[u].push_back(static_cast<std::uint32_t>(ctx.code(ctx.mul(ue, g)) - 1));
        }
        std::vector<std::uint32_t> sorted = adj[u];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw internal_error("build_oracle_adjacency: duplicate out-neighbor (inversion must be injective)");
        }
    }
    return adj;
}

/// Diameter by BFS from every vertex over the explicit edge set; nullopt if
/// the graph is not strongly connected.  Also certifies vertex-transitivity
/// by requiring every eccentricity to be equal.
inline std::optional<std::uint32_t> all_pairs_diameter_oracle(const GeneratorSet& gens, const FieldContext& ctx) {
    if (ctx.ext_order() > 512) throw precondition_error("all_pairs_diameter_oracle: q^n must be <= 512");
    const std::uint64_t N = ctx.group_order();
    const auto adj = build_oracle_adjacency(gens, ctx);

    std::optional<std::int64_t> common_ecc;  // -1 encodes infinity
    for (std::uint64_t src = 0; src < N; ++src) {
        std::vector<std::int32_t> dist(N, -1);
        std::vector<std::uint32_t> queue;
        queue.reserve(N);
        dist[src] = 0;
        queue.push_back(static_cast<std::uint32_t>(src));
        std::uint64_t seen = 1;
        std::int32_t ecc = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            for (std::uint32_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    ecc = dist[w];
                    queue.push_back(w);
                    ++seen;
                }
            }
        }
        const std::int64_t this_ecc = (seen == N) ? ecc : -1;
        if (!common_ecc) {
            common_ecc = this_ecc;
        } else if (*common_ecc != this_ecc) {
            throw internal_error("all_pairs_diameter_oracle: unequal eccentricities in a vertex-transitive graph");
        }
    }
    if (!common_ecc || *common_ecc < 0) return std::nullopt;
    return static_cast<std::uint32_t>(*common_ecc);
}

struct ConnectivityReport {
    bool connected = false;
    std::optional<ExtElem> witness;  // an unreached element, present iff disconnected
};

inline ConnectivityReport connectivity_check(const FieldContext& ctx, std::uint32_t d,
                                             std::uint64_t enum_cap = kDefaultEnumCap,
                                             std::uint64_t max_order = kDefaultMaxOrder) {
    GeneratorSet gens = build_generators(ctx, d, enum_cap);
    DiameterResult r = bfs_from_identity(gens, ctx, nullptr, StepConvention::kMultiply, max_order);
    return ConnectivityReport{r.connected, r.unreached_witness};
}

}  // namespace polydiam

#endif  // POLYDIAM_CAYLEY_HPP
