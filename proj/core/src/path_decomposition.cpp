#include "bcolab/path_decomposition.hpp"

#include <algorithm>
#include <limits>

#include "bcolab/errors.hpp"

namespace bcolab {

namespace {

std::string vertex_pair(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// order must be a permutation of g's vertex set.
void require_permutation(const Graph& g, const LinearOrder& order) {
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw PreconditionError("order has " + std::to_string(order.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId v : order) {
        int i = g.index_of(v); // throws on unknown vertex
        if (seen[i])
            throw PreconditionError("vertex " + std::to_string(v) + " repeated in order");
        seen[i] = 1;
    }
}

int module_number_unchecked(const Graph& g, const LinearOrder& order, int i) {
    std::vector<char> in_prefix(g.vertex_count(), 0);
    for (int j = 0; j < i; ++j)
        in_prefix[g.index_of(order[j])] = 1;

    // Outside-neighborhood signatures; neighbor lists are ascending, so
    // the filtered signatures are too.
    std::vector<std::vector<VertexId>> signatures;
    signatures.reserve(i);
    for (int j = 0; j < i; ++j) {
        std::vector<VertexId> sig;
        for (VertexId w : g.neighbors(order[j]))
            if (!in_prefix[g.index_of(w)])
                sig.push_back(w);
        signatures.push_back(std::move(sig));
    }
    std::sort(signatures.begin(), signatures.end());
    signatures.erase(std::unique(signatures.begin(), signatures.end()), signatures.end());
    return static_cast<int>(signatures.size());
}

} // namespace

PathDecomposition PathDecomposition::from_bags(std::vector<std::vector<VertexId>> bags) {
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    return PathDecomposition{std::move(bags)};
}

PdValidation validate_pd(const Graph& g, const PathDecomposition& pd) {
    const int d = pd.bag_count();

    // Occurrence statistics per vertex index: first/last bag and count.
    const int n = g.vertex_count();
    std::vector<int> first(n, -1), last(n, -1), count(n, 0);
    for (int b = 0; b < d; ++b) {
        VertexId prev = std::numeric_limits<VertexId>::min();
        for (VertexId v : pd.bags[b]) {
            if (!g.has_vertex(v))
                return {false, PdAxiom::VertexCoverage,
                        "bag " + std::to_string(b + 1) + " contains unknown vertex " +
                            std::to_string(v)};
            if (v == prev)
                continue; // duplicate inside one bag, treat as a set
            prev = v;
            int i = g.index_of(v);
            if (first[i] < 0)
                first[i] = b;
            last[i] = b;
            ++count[i];
        }
    }

    for (int i = 0; i < n; ++i)
        if (first[i] < 0)
            return {false, PdAxiom::VertexCoverage,
                    "vertex " + std::to_string(g.vertices()[i]) + " appears in no bag"};

    // Edge coverage needs a shared bag; scan the two occurrence lists.
    // Done via per-vertex sorted bag lists so it stays exact even when
    // the interval axiom is broken.
    std::vector<std::vector<int>> occ(n);
    for (int b = 0; b < d; ++b) {
        VertexId prev = std::numeric_limits<VertexId>::min();
        for (VertexId v : pd.bags[b]) {
            if (v == prev)
                continue;
            prev = v;
            occ[g.index_of(v)].push_back(b);
        }
    }
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        const auto& a = occ[g.index_of(e.u)];
        const auto& b = occ[g.index_of(e.v)];
        std::size_t ia = 0, ib = 0;
        bool covered = false;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia] == b[ib]) {
                covered = true;
                break;
            }
            (a[ia] < b[ib] ? ia : ib)++;
        }
        if (!covered)
            return {false, PdAxiom::EdgeCoverage,
                    "edge " + vertex_pair(e) + " (index " + std::to_string(ei + 1) +
                        ") is contained in no bag"};
    }

    // Occurrences of each vertex must form a contiguous bag interval.
    for (int i = 0; i < n; ++i) {
        if (count[i] != last[i] - first[i] + 1) {
            int missing = first[i];
            const auto& bags_of_i = occ[i];
            for (std::size_t j = 0; j + 1 < bags_of_i.size(); ++j)
                if (bags_of_i[j + 1] != bags_of_i[j] + 1) {
                    missing = bags_of_i[j] + 1;
                    break;
                }
            return {false, PdAxiom::Interval,
                    "vertex " + std::to_string(g.vertices()[i]) + " occurs in bags " +
                        std::to_string(first[i] + 1) + ".." + std::to_string(last[i] + 1) +
                        " but is absent from bag " + std::to_string(missing + 1)};
        }
    }

    return {};
}

int pd_width(const PathDecomposition& pd) {
    if (pd.bag_count() == 0)
        throw PreconditionError("width of an empty decomposition is undefined");
    std::size_t max_bag = 0;
    for (const auto& bag : pd.bags)
        max_bag = std::max(max_bag, bag.size());
    return static_cast<int>(max_bag) - 1;
}

LinearOrder pd_to_linear_order(const Graph& g, const PathDecomposition& pd) {
    PdValidation check = validate_pd(g, pd);
    if (!check.ok)
        throw PreconditionError("invalid path decomposition: " + check.message);

    const int n = g.vertex_count();
    std::vector<int> leftmost(n, -1);
    for (int b = 0; b < pd.bag_count(); ++b)
        for (VertexId v : pd.bags[b]) {
            int i = g.index_of(v);
            if (leftmost[i] < 0)
                leftmost[i] = b;
        }

    LinearOrder order(g.vertices());
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        int la = leftmost[g.index_of(a)], lb = leftmost[g.index_of(b)];
        return la != lb ? la < lb : a < b;
    });
    return order;
}

int module_number(const Graph& g, const LinearOrder& order, int i) {
    require_permutation(g, order);
    if (i < 1 || i > static_cast<int>(order.size()))
        throw PreconditionError("prefix index " + std::to_string(i) + " out of range [1.." +
                                std::to_string(order.size()) + "]");
    return module_number_unchecked(g, order, i);
}

int module_width(const Graph& g, const LinearOrder& order) {
    require_permutation(g, order);
    int best = 0;
    for (int i = 1; i <= static_cast<int>(order.size()); ++i)
        best = std::max(best, module_number_unchecked(g, order, i));
    return best;
}

} // namespace bcolab
