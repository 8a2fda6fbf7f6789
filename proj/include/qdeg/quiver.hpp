#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qdeg {

// Directed multigraph with named vertices and arrows.  Loops and parallel
// arrows are allowed in general; type D validation rejects loops.
struct Quiver {
    struct Arrow {
        std::string name;
        int tail = -1;
        int head = -1;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const; // -1 if absent
    int arrow_index(const std::string& name) const;  // -1 if absent

    void add_vertex(const std::string& name);
    void add_arrow(const std::string& name, const std::string& tail, const std::string& head);

    bool operator==(const Quiver& o) const;
};

// Same vertices and arrow names, arrows reversed.
Quiver opposite(const Quiver& q);

// Dimension vector, indexed like Quiver::vertices.
using DimVector = std::vector<int>;

int total_dim(const DimVector& d);

// Result of contracting an admissible arrow set: the contracted quiver plus
// the vertex map from the original quiver onto it.
struct Contraction {
    Quiver contracted;
    std::vector<int> vertex_map; // original vertex index -> contracted vertex index
};

// A set of arrows is admissible when the subquiver it spans is a disjoint
// union of trees.  Throws std::invalid_argument otherwise.  The contracted
// vertex of each merged class is named after its first member in vertex
// order, so the result does not depend on the order of `arrows`.
Contraction contract(const Quiver& q, const std::vector<std::string>& arrows);

// Pull a dimension vector on the contracted quiver back along the vertex map.
DimVector lift_dim(const DimVector& d_contracted, const Contraction& plan);

// Shape data of a type D quiver: the branch vertex, the two length-1
// branches, and the long branch walked outward from the branch vertex.
struct TypeDShape {
    int branch = -1;
    int short_leaf[2] = {-1, -1};   // leaves of the two length-1 branches
    int short_arrow[2] = {-1, -1};
    bool short_inward[2] = {false, false}; // arrow points toward the branch vertex
    std::vector<int> long_vertices; // z_2, ..., z_L (branch vertex excluded)
    std::vector<int> long_arrows;
    std::vector<bool> long_away;    // arrow j points away from the branch vertex
};

bool is_type_D(const Quiver& q);

// Throws std::invalid_argument when q is not type D.  Branch selection is
// deterministic: among the three branches, the long one is the longest
// (ties broken by smallest leaf index), and the two short ones keep vertex
// order.
TypeDShape analyze_type_D(const Quiver& q);

} // namespace qdeg
