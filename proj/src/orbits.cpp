#include "qdeg/orbits.hpp"

#include <algorithm>

namespace qdeg {

namespace {

bool fits(const Root& root, const DimVector& remaining) {
    for (std::size_t z = 0; z < root.size(); ++z)
        if (root[z] > remaining[z]) return false;
    return true;
}

void subtract(DimVector& remaining, const Root& root) {
    for (std::size_t z = 0; z < root.size(); ++z) remaining[z] -= root[z];
}
void add_back(DimVector& remaining, const Root& root) {
    for (std::size_t z = 0; z < root.size(); ++z) remaining[z] += root[z];
}

// DFS over root indices in order; multiplicities are implicit in how many
// times an index repeats.  When `out` is null this only counts.
void enumerate(const std::vector<Root>& roots, std::size_t from, DimVector& remaining,
               std::vector<std::pair<std::size_t, int>>& prefix, std::size_t& count,
               std::size_t budget, std::vector<OrbitLabel>* out) {
    if (total_dim(remaining) == 0) {
        ++count;
        if (count > budget)
            throw std::runtime_error("orbit enumeration exceeds the budget of " +
                                     std::to_string(budget) + " labels");
        if (out) out->push_back(OrbitLabel{prefix});
        return;
    }
    for (std::size_t ri = from; ri < roots.size(); ++ri) {
        if (!fits(roots[ri], remaining)) continue;
        subtract(remaining, roots[ri]);
        if (!prefix.empty() && prefix.back().first == ri)
            ++prefix.back().second;
        else
            prefix.emplace_back(ri, 1);
        enumerate(roots, ri, remaining, prefix, count, budget, out);
        if (prefix.back().second == 1)
            prefix.pop_back();
        else
            --prefix.back().second;
        add_back(remaining, roots[ri]);
    }
}

} // namespace

std::vector<OrbitLabel> enumerate_orbit_labels(const std::vector<Root>& roots, const DimVector& d,
                                               std::size_t budget) {
    for (int dz : d)
        if (dz < 0) throw std::invalid_argument("dimension vector must be nonnegative");
    std::vector<OrbitLabel> out;
    DimVector remaining = d;
    std::vector<std::pair<std::size_t, int>> prefix;
    std::size_t count = 0;
    enumerate(roots, 0, remaining, prefix, count, budget, &out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string label_to_string(const OrbitLabel& label, const std::vector<Root>& roots) {
    if (label.parts.empty()) return "0";
    std::string s;
    for (const auto& [ri, mult] : label.parts) {
        if (!s.empty()) s += " + ";
        if (mult > 1) s += std::to_string(mult) + "*";
        s += "(";
        const Root& root = roots[ri];
        for (std::size_t z = 0; z < root.size(); ++z) {
            if (z) s += ",";
            s += std::to_string(root[z]);
        }
        s += ")";
    }
    return s;
}

std::vector<std::pair<int, int>> hasse_edges(std::size_t count,
                                             const std::function<bool(int, int)>& leq) {
    const int k = static_cast<int>(count);
    std::vector<std::vector<bool>> le(count, std::vector<bool>(count, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = leq(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw std::logic_error(
                    "distinct orbits compare equal in both directions (invariant violation): " +
                    std::to_string(i) + " vs " + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j || !le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            bool covered = true;
            for (int m = 0; m < k && covered; ++m) {
                if (m == i || m == j) continue;
                if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] &&
                    le[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])
                    covered = false;
            }
            if (covered) edges.emplace_back(i, j);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace qdeg
