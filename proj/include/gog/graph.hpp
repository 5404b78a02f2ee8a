#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gog/descriptor.hpp"

namespace gog {

// One edge of a graph of groups.  The edge group is described only by its
// order, which must be finite.  u == v makes the edge a loop (an HNN-style
// letter); otherwise the edge stands for an amalgam over the edge group.
struct Edge {
    std::string id;
    std::string u;
    std::string v;
    long long order;  // >= 1
    bool operator==(const Edge&) const = default;
};

// Finite connected multigraph with group-valued vertices.  Vertices and
// edges keep their declaration order so that serialized output and reports
// are reproducible byte for byte.
class GraphOfGroups {
public:
    // Throws domain_error on duplicate or empty ids.
    void add_vertex(const std::string& id, GroupDescriptor descriptor);
    // Throws domain_error when an endpoint is undeclared or the id repeats.
    void add_edge(const std::string& id, const std::string& u, const std::string& v, long long order);

    const std::vector<std::pair<std::string, GroupDescriptor>>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
    const GroupDescriptor& vertex(const std::string& id) const;

    bool operator==(const GraphOfGroups& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    std::vector<std::pair<std::string, GroupDescriptor>> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, size_t> vertex_index_;
    std::unordered_map<std::string, size_t> edge_index_;
};

struct Issue {
    std::string where;  // vertex or edge id, possibly empty for graph-level issues
    std::string what;
    bool operator==(const Issue&) const = default;
};

// Violations make the graph invalid.  Warnings and notes do not: a warning
// flags a degenerate but legal input (an edge group equal to a finite
// endpoint, which collapses that edge), a note records something accepted
// on the user's word (custom vertices whose edge embeddings are unchecked).
struct ValidationReport {
    std::vector<Issue> violations;
    std::vector<Issue> warnings;
    std::vector<Issue> notes;
    bool valid() const { return violations.empty(); }
};

// Checks every structural invariant:
//   * graph is nonempty and connected;
//   * every vertex record passes record_violation and has hypothesis_ok;
//   * every edge order is >= 1 and divides each Finite endpoint's order
//     (Lagrange), loops included;
//   * torsion-free endpoints (surface, free of rank >= 1, and the trivial
//     group free:0) only admit edge order 1.
// Edge orders into nilpotent, polycyclic and custom vertices are accepted
// as asserted; custom ones are flagged in notes as unverified.
ValidationReport validate(const GraphOfGroups& g);

// Order of the fundamental group when the graph is a single vertex with a
// finite vertex group and no edges; nullopt means infinite.  (Assumes edges
// are minimal: with any edge present, or any infinite vertex, the
// fundamental group is infinite.)
std::optional<long long> total_group_order(const GraphOfGroups& g);

// Largest order of a finite subgroup of the fundamental group: the maximum
// of the vertex values.  nullopt when some vertex is unbounded.
std::optional<long long> graph_norm(const GraphOfGroups& g);

}  // namespace gog
