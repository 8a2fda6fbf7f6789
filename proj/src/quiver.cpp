#include "qdeg/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdeg {

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

void Quiver::add_vertex(const std::string& name) {
    if (vertex_index(name) >= 0) throw std::invalid_argument("duplicate vertex: " + name);
    vertices.push_back(name);
}

void Quiver::add_arrow(const std::string& name, const std::string& tail, const std::string& head) {
    if (arrow_index(name) >= 0) throw std::invalid_argument("duplicate arrow: " + name);
    int t = vertex_index(tail), h = vertex_index(head);
    if (t < 0 || h < 0) throw std::invalid_argument("arrow endpoints must exist: " + name);
    arrows.push_back({name, t, h});
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].name != o.arrows[i].name || arrows[i].tail != o.arrows[i].tail ||
            arrows[i].head != o.arrows[i].head)
            return false;
    }
    return true;
}

Quiver opposite(const Quiver& q) {
    Quiver r;
    r.vertices = q.vertices;
    for (const auto& a : q.arrows) r.arrows.push_back({a.name, a.head, a.tail});
    return r;
}

int total_dim(const DimVector& d) {
    return std::accumulate(d.begin(), d.end(), 0);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false when x and y were already joined (a cycle).
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[std::max(rx, ry)] = std::min(rx, ry);
        return true;
    }
};

} // namespace

Contraction contract(const Quiver& q, const std::vector<std::string>& arrow_names) {
    UnionFind uf(q.num_vertices());
    std::vector<bool> contracted_arrow(static_cast<std::size_t>(q.num_arrows()), false);
    for (const auto& name : arrow_names) {
        int ai = q.arrow_index(name);
        if (ai < 0) throw std::invalid_argument("unknown arrow: " + name);
        if (contracted_arrow[static_cast<std::size_t>(ai)])
            throw std::invalid_argument("arrow listed twice: " + name);
        contracted_arrow[static_cast<std::size_t>(ai)] = true;
        const auto& a = q.arrows[static_cast<std::size_t>(ai)];
        if (!uf.unite(a.tail, a.head))
            throw std::invalid_argument("arrow set not admissible for contraction (contains a cycle): " +
                                        name);
    }

    Contraction out;
    out.vertex_map.assign(static_cast<std::size_t>(q.num_vertices()), -1);
    // Class representatives in vertex order become the contracted vertices.
    for (int v = 0; v < q.num_vertices(); ++v) {
        int root = uf.find(v);
        if (out.vertex_map[static_cast<std::size_t>(root)] < 0) {
            out.vertex_map[static_cast<std::size_t>(root)] = out.contracted.num_vertices();
            out.contracted.vertices.push_back(q.vertices[static_cast<std::size_t>(root)]);
        }
        out.vertex_map[static_cast<std::size_t>(v)] = out.vertex_map[static_cast<std::size_t>(root)];
    }
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        if (contracted_arrow[static_cast<std::size_t>(ai)]) continue;
        const auto& a = q.arrows[static_cast<std::size_t>(ai)];
        out.contracted.arrows.push_back({a.name, out.vertex_map[static_cast<std::size_t>(a.tail)],
                                         out.vertex_map[static_cast<std::size_t>(a.head)]});
    }
    return out;
}

DimVector lift_dim(const DimVector& d_contracted, const Contraction& plan) {
    if (d_contracted.size() != plan.contracted.vertices.size())
        throw std::invalid_argument("dimension vector does not match contracted quiver");
    DimVector d(plan.vertex_map.size());
    for (std::size_t v = 0; v < plan.vertex_map.size(); ++v)
        d[v] = d_contracted[static_cast<std::size_t>(plan.vertex_map[v])];
    return d;
}

namespace {

// Undirected adjacency: (neighbor vertex, arrow index).
std::vector<std::vector<std::pair<int, int>>> undirected_adjacency(const Quiver& q) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(q.num_vertices()));
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const auto& a = q.arrows[static_cast<std::size_t>(ai)];
        adj[static_cast<std::size_t>(a.tail)].push_back({a.head, ai});
        adj[static_cast<std::size_t>(a.head)].push_back({a.tail, ai});
    }
    return adj;
}

} // namespace

bool is_type_D(const Quiver& q) {
    try {
        analyze_type_D(q);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

TypeDShape analyze_type_D(const Quiver& q) {
    const int n = q.num_vertices();
    if (n < 4) throw std::invalid_argument("type D requires at least 4 vertices");
    if (q.num_arrows() != n - 1)
        throw std::invalid_argument("type D underlying graph must be a tree");
    for (const auto& a : q.arrows)
        if (a.tail == a.head) throw std::invalid_argument("type D rejects loops");

    auto adj = undirected_adjacency(q);

    // Connectivity.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, _] : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != n) throw std::invalid_argument("type D underlying graph must be connected");

    int branch = -1;
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        std::size_t deg = adj[static_cast<std::size_t>(v)].size();
        if (deg == 3) {
            if (branch >= 0) throw std::invalid_argument("type D has exactly one degree-3 vertex");
            branch = v;
        } else if (deg == 1) {
            leaves.push_back(v);
        } else if (deg != 2) {
            throw std::invalid_argument("vertex degree exceeds 3");
        }
    }
    if (branch < 0) throw std::invalid_argument("type D has exactly one degree-3 vertex");
    if (leaves.size() != 3) throw std::invalid_argument("type D has exactly three leaves");

    // Walk each of the three branches outward.
    struct Branch {
        std::vector<int> verts;  // excludes the branch vertex
        std::vector<int> arrows;
        int leaf() const { return verts.back(); }
    };
    std::vector<Branch> branches;
    for (auto [first, ai0] : adj[static_cast<std::size_t>(branch)]) {
        Branch b;
        int prev = branch, cur = first, arrow = ai0;
        for (;;) {
            b.verts.push_back(cur);
            b.arrows.push_back(arrow);
            int next = -1, next_arrow = -1;
            for (auto [w, ai] : adj[static_cast<std::size_t>(cur)]) {
                if (ai != arrow) {
                    next = w;
                    next_arrow = ai;
                }
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            arrow = next_arrow;
        }
        (void)prev;
        branches.push_back(std::move(b));
    }

    // Longest branch is the long one; ties go to the smallest leaf index.
    std::size_t longest = 0;
    for (std::size_t i = 1; i < branches.size(); ++i) {
        if (branches[i].verts.size() > branches[longest].verts.size() ||
            (branches[i].verts.size() == branches[longest].verts.size() &&
             branches[i].leaf() < branches[longest].leaf()))
            longest = i;
    }
    std::vector<std::size_t> shorts;
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (i != longest) shorts.push_back(i);
    for (std::size_t si : shorts)
        if (branches[si].verts.size() != 1)
            throw std::invalid_argument("type D requires two branches of length 1");
    if (branches[shorts[0]].leaf() > branches[shorts[1]].leaf()) std::swap(shorts[0], shorts[1]);

    TypeDShape shape;
    shape.branch = branch;
    for (int k = 0; k < 2; ++k) {
        const Branch& b = branches[shorts[static_cast<std::size_t>(k)]];
        shape.short_leaf[k] = b.leaf();
        shape.short_arrow[k] = b.arrows[0];
        shape.short_inward[k] = q.arrows[static_cast<std::size_t>(b.arrows[0])].head == branch;
    }
    const Branch& lb = branches[longest];
    shape.long_vertices = lb.verts;
    shape.long_arrows = lb.arrows;
    int at = branch;
    for (std::size_t j = 0; j < lb.arrows.size(); ++j) {
        const auto& a = q.arrows[static_cast<std::size_t>(lb.arrows[j])];
        shape.long_away.push_back(a.tail == at);
        at = lb.verts[j];
    }
    return shape;
}

} // namespace qdeg
