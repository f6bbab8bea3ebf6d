#include "bcolab/circulating_orientation.hpp"

#include <string>

#include "bcolab/errors.hpp"

namespace bcolab {

CircOriInstance CircOriInstance::build(Graph graph, std::vector<int> weights,
                                       long long unary_cap) {
    if (static_cast<int>(weights.size()) != graph.edge_count())
        throw PreconditionError("got " + std::to_string(weights.size()) + " weights for " +
                                std::to_string(graph.edge_count()) + " edges");
    long long total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1)
            throw PreconditionError("edge {" + std::to_string(graph.edges()[i].u) + "," +
                                    std::to_string(graph.edges()[i].v) + "} has weight " +
                                    std::to_string(weights[i]) + " < 1");
        total += weights[i];
    }
    if (total > unary_cap)
        throw PreconditionError("total weight " + std::to_string(total) +
                                " exceeds the unary cap " + std::to_string(unary_cap));
    return CircOriInstance{std::move(graph), std::move(weights)};
}

int CircOriInstance::weight(VertexId a, VertexId b) const {
    int ei = graph.edge_index(a, b);
    if (ei < 0)
        throw PreconditionError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return weights[ei];
}

long long vertex_weight(const CircOriInstance& inst, VertexId v) {
    inst.graph.index_of(v); // unknown-vertex check
    long long sum = 0;
    for (VertexId w : inst.graph.neighbors(v))
        sum += inst.weight(v, w);
    return sum;
}

long long total_weight(const CircOriInstance& inst) {
    long long sum = 0;
    for (int w : inst.weights)
        sum += w;
    return sum;
}

bool is_circulating(const CircOriInstance& inst, const Orientation& o) {
    if (o.arc_count() != inst.graph.edge_count())
        throw PreconditionError("orientation arc count does not match instance edge count");
    const int n = inst.graph.vertex_count();
    std::vector<long long> balance(n, 0); // out minus in
    for (int ei = 0; ei < o.arc_count(); ++ei) {
        const Arc& a = o.arcs()[ei];
        if (inst.graph.edge_index(a.tail, a.head) != ei)
            throw PreconditionError("orientation is not aligned with the instance's edges");
        balance[inst.graph.index_of(a.tail)] += inst.weights[ei];
        balance[inst.graph.index_of(a.head)] -= inst.weights[ei];
    }
    for (long long b : balance)
        if (b != 0)
            return false;
    return true;
}

bool parity_feasible(const CircOriInstance& inst) {
    for (VertexId v : inst.graph.vertices())
        if (vertex_weight(inst, v) % 2 != 0)
            return false;
    return true;
}

namespace {

struct BruteState {
    const CircOriInstance& inst;
    std::vector<long long> half_weight; // W_v / 2 target by vertex index, in 2*weight units
    std::vector<long long> out_w, in_w;
    std::vector<Arc> arcs;
    bool found = false;
};

// Edges in canonical order; per edge, arc (u -> v) with u < v first.
void search(BruteState& st, int ei) {
    if (st.found)
        return;
    const Graph& g = st.inst.graph;
    if (ei == g.edge_count()) {
        st.found = true;
        return;
    }
    const Edge& e = g.edges()[ei];
    const int iu = g.index_of(e.u), iv = g.index_of(e.v);
    const long long w = st.inst.weights[ei];

    for (int dir = 0; dir < 2 && !st.found; ++dir) {
        const int tail_idx = dir == 0 ? iu : iv;
        const int head_idx = dir == 0 ? iv : iu;
        st.out_w[tail_idx] += w;
        st.in_w[head_idx] += w;
        if (2 * st.out_w[tail_idx] <= st.half_weight[tail_idx] &&
            2 * st.in_w[head_idx] <= st.half_weight[head_idx]) {
            st.arcs[ei] = dir == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u};
            search(st, ei + 1);
        }
        if (!st.found) {
            st.out_w[tail_idx] -= w;
            st.in_w[head_idx] -= w;
        }
    }
}

} // namespace

std::optional<Orientation> solve_circori_brute(const CircOriInstance& inst,
                                               const CircOriBruteOptions& opts) {
    const int m = inst.graph.edge_count();
    if (m > opts.max_edges)
        throw PreconditionError("instance has " + std::to_string(m) +
                                " edges, above the solver cap of " +
                                std::to_string(opts.max_edges));

    const int n = inst.graph.vertex_count();
    BruteState st{inst, std::vector<long long>(n, 0), std::vector<long long>(n, 0),
                  std::vector<long long>(n, 0), std::vector<Arc>(m, Arc{0, 0}), false};
    for (int i = 0; i < n; ++i)
        st.half_weight[i] = vertex_weight(inst, inst.graph.vertices()[i]);

    search(st, 0);
    if (!st.found)
        return std::nullopt;
    Orientation o = Orientation::build(inst.graph, st.arcs);
    if (!is_circulating(inst, o))
        throw InternalInvariantError("brute solver produced an unbalanced orientation");
    return o;
}

} // namespace bcolab
