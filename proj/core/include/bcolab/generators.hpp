#ifndef BCOLAB_GENERATORS_HPP
#define BCOLAB_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bcolab/circulating_orientation.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/path_decomposition.hpp"

namespace bcolab {

/// Seeded generator with library-independent sampling, so identical
/// seeds give identical instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [lo..hi], inclusive, via rejection sampling.
    int uniform_int(int lo, int hi);

    /// Uniform in [0, 1).
    double uniform01();

    bool chance(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
            std::swap(items[i], items[uniform_int(0, i)]);
    }

private:
    std::mt19937_64 gen_;
};

/// splitmix64; used to derive per-trial seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t x);

/// Connected graph together with a valid path decomposition of width
/// <= w, built from a sliding window of size w+1 over a shuffled vertex
/// sequence. Consecutive sequence vertices are always adjacent; the
/// remaining in-window pairs are sampled with probability `density`.
/// Requires 1 <= w < n.
std::pair<Graph, PathDecomposition> gen_pd_graph(std::uint64_t seed, int n, int w,
                                                 double density);

/// Planted-witness generator: superposes `cycle_count` directed cycles
/// with per-cycle flow in [1..wmax], cancels opposite arcs, and keeps
/// the nonzero net arcs as weighted edges. The net arcs form a
/// circulating orientation, so every W_v is even by construction.
/// Retries until the instance is connected; requires n >= 3. Throws
/// PreconditionError when no connected instance appears within the
/// retry budget.
std::pair<CircOriInstance, Orientation> gen_yes_instance(std::uint64_t seed, int n,
                                                         int cycle_count, int wmax);

/// Connected graph with exactly m edges (random spanning tree plus
/// random extra edges) and uniform weights in [1..wmax]. Requires
/// n-1 <= m <= n(n-1)/2.
CircOriInstance gen_random_instance(std::uint64_t seed, int n, int m, int wmax);

} // namespace bcolab

#endif
