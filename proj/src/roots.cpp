#include "qdeg/roots.hpp"

namespace qdeg {

long tits_form(const Quiver& q, const DimVector& d) {
    long val = 0;
    for (int dz : d) val += static_cast<long>(dz) * dz;
    for (const auto& a : q.arrows)
        val -= static_cast<long>(d[static_cast<std::size_t>(a.tail)]) *
               d[static_cast<std::size_t>(a.head)];
    return val;
}

bool is_dynkin_AD(const Quiver& q) {
    const int n = q.num_vertices();
    if (n < 1) return false;
    if (q.num_arrows() != n - 1) return false;
    for (const auto& a : q.arrows)
        if (a.tail == a.head) return false;

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& a : q.arrows) {
        ++degree[static_cast<std::size_t>(a.tail)];
        ++degree[static_cast<std::size_t>(a.head)];
        adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
        adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n) return false;

    int branch_count = 0;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] > 3) return false;
        if (degree[static_cast<std::size_t>(v)] == 3) ++branch_count;
    }
    if (branch_count == 0) return true; // type A path
    if (branch_count > 1) return false;
    return is_type_D(q); // a unique branch vertex must carry two length-1 branches
}

std::vector<Root> positive_roots(const Quiver& q) {
    if (!is_dynkin_AD(q))
        throw std::invalid_argument("positive roots require a Dynkin quiver of type A or D");
    const std::size_t n = q.vertices.size();
    std::vector<Root> roots;
    Root d(n, 0);
    // Entries of A/D roots lie in {0, 1, 2}.
    for (;;) {
        if (tits_form(q, d) == 1 && total_dim(d) > 0) roots.push_back(d);
        std::size_t k = 0;
        while (k < n && d[k] == 2) d[k++] = 0;
        if (k == n) break;
        ++d[k];
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace qdeg
