#include "bcolab/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "bcolab/errors.hpp"

namespace bcolab {

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi)
        throw PreconditionError("empty range [" + std::to_string(lo) + ".." +
                                std::to_string(hi) + "]");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::pair<Graph, PathDecomposition> gen_pd_graph(std::uint64_t seed, int n, int w,
                                                 double density) {
    if (w < 1 || w >= n)
        throw PreconditionError("need 1 <= w < n, got w=" + std::to_string(w) +
                                " n=" + std::to_string(n));
    Rng rng(seed);

    std::vector<VertexId> sequence(n);
    std::iota(sequence.begin(), sequence.end(), 1);
    rng.shuffle(sequence);

    std::vector<Edge> edges;
    // Backbone path keeps the graph connected and fits every window.
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(sequence[i], sequence[i + 1]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n && j - i <= w; ++j)
            if (rng.chance(density))
                edges.emplace_back(sequence[i], sequence[j]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::vector<VertexId>> bags;
    for (int i = 0; i + w < n; ++i)
        bags.emplace_back(sequence.begin() + i, sequence.begin() + i + w + 1);

    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    return {Graph::build(std::move(ids), std::move(edges)),
            PathDecomposition::from_bags(std::move(bags))};
}

std::pair<CircOriInstance, Orientation> gen_yes_instance(std::uint64_t seed, int n,
                                                         int cycle_count, int wmax) {
    if (n < 3)
        throw PreconditionError("need n >= 3, got " + std::to_string(n));
    if (cycle_count < 1 || wmax < 1)
        throw PreconditionError("cycle_count and wmax must be positive");

    Rng rng(seed);
    constexpr int kMaxAttempts = 200;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Net flow per ordered pair; flow[{u,v}] - flow[{v,u}] decides
        // the surviving arc.
        std::map<std::pair<VertexId, VertexId>, long long> flow;
        for (int cyc = 0; cyc < cycle_count; ++cyc) {
            std::vector<VertexId> verts(n);
            std::iota(verts.begin(), verts.end(), 1);
            rng.shuffle(verts);
            // First cycle spans all vertices so connectivity usually holds.
            const int len = cyc == 0 ? n : rng.uniform_int(3, n);
            const long long f = rng.uniform_int(1, wmax);
            for (int i = 0; i < len; ++i) {
                VertexId a = verts[i], b = verts[(i + 1) % len];
                flow[{a, b}] += f;
            }
        }

        std::vector<Edge> edges;
        std::vector<Arc> arcs;
        std::map<Edge, int> weight_of;
        for (const auto& [pair, f] : flow) {
            auto [a, b] = pair;
            if (a > b)
                continue; // handled from the (b, a) side
            long long net = f;
            auto opposite = flow.find({b, a});
            if (opposite != flow.end())
                net -= opposite->second;
            if (net == 0)
                continue;
            Edge e(a, b);
            edges.push_back(e);
            weight_of[e] = static_cast<int>(net > 0 ? net : -net);
            arcs.push_back(net > 0 ? Arc{a, b} : Arc{b, a});
        }
        // One-sided pairs, where no (a, b) with a < b existed.
        for (const auto& [pair, f] : flow) {
            auto [a, b] = pair;
            if (a < b || flow.count({b, a}))
                continue;
            Edge e(b, a);
            edges.push_back(e);
            weight_of[e] = static_cast<int>(f);
            arcs.push_back(Arc{a, b});
        }

        std::vector<VertexId> ids(n);
        std::iota(ids.begin(), ids.end(), 1);
        Graph g = Graph::build(std::move(ids), std::move(edges));
        if (!is_connected(g) || g.edge_count() == 0)
            continue;

        std::vector<int> weights;
        weights.reserve(g.edge_count());
        for (const Edge& e : g.edges())
            weights.push_back(weight_of.at(e));

        CircOriInstance inst = CircOriInstance::build(std::move(g), std::move(weights));
        Orientation witness = Orientation::build(inst.graph, std::move(arcs));
        if (!is_circulating(inst, witness))
            throw InternalInvariantError("planted orientation is not circulating");
        return {std::move(inst), std::move(witness)};
    }
    throw PreconditionError("no connected instance after " + std::to_string(kMaxAttempts) +
                            " attempts (n=" + std::to_string(n) + ")");
}

CircOriInstance gen_random_instance(std::uint64_t seed, int n, int m, int wmax) {
    if (n < 1 || wmax < 1)
        throw PreconditionError("need n >= 1 and wmax >= 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw PreconditionError("edge count " + std::to_string(m) + " outside [" +
                                std::to_string(n - 1) + ".." + std::to_string(max_edges) +
                                "]");

    Rng rng(seed);
    // Random spanning tree: attach each vertex to a uniformly random
    // earlier vertex of a shuffled order.
    std::vector<VertexId> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    rng.shuffle(verts);

    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(verts[i], verts[rng.uniform_int(0, i - 1)]);
    std::sort(edges.begin(), edges.end());

    std::vector<Edge> pool;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            Edge e(u, v);
            if (!std::binary_search(edges.begin(), edges.end(), e))
                pool.push_back(e);
        }
    rng.shuffle(pool);
    for (std::size_t i = 0; edges.size() < static_cast<std::size_t>(m); ++i)
        edges.push_back(pool[i]);

    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    Graph g = Graph::build(std::move(ids), std::move(edges));

    std::vector<int> weights(m);
    for (int i = 0; i < m; ++i)
        weights[i] = rng.uniform_int(1, wmax);
    return CircOriInstance::build(std::move(g), std::move(weights));
}

} // namespace bcolab
