#include "gog/graph.hpp"

#include <numeric>

#include "gog/errors.hpp"

namespace gog {

void GraphOfGroups::add_vertex(const std::string& id, GroupDescriptor descriptor) {
    if (id.empty()) throw domain_error("empty vertex id");
    if (vertex_index_.count(id)) throw domain_error("duplicate vertex id \"" + id + "\"");
    vertex_index_[id] = vertices_.size();
    vertices_.emplace_back(id, std::move(descriptor));
}

void GraphOfGroups::add_edge(const std::string& id, const std::string& u, const std::string& v,
                             long long order) {
    if (id.empty()) throw domain_error("empty edge id");
    if (edge_index_.count(id)) throw domain_error("duplicate edge id \"" + id + "\"");
    if (!vertex_index_.count(u)) throw domain_error("edge \"" + id + "\" references undeclared vertex \"" + u + "\"");
    if (!vertex_index_.count(v)) throw domain_error("edge \"" + id + "\" references undeclared vertex \"" + v + "\"");
    edge_index_[id] = edges_.size();
    edges_.push_back({id, u, v, order});
}

const GroupDescriptor& GraphOfGroups::vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw domain_error("unknown vertex \"" + id + "\"");
    return vertices_[it->second].second;
}

namespace {

bool connected(const GraphOfGroups& g) {
    const auto& vs = g.vertices();
    if (vs.empty()) return false;
    std::unordered_map<std::string, size_t> index;
    for (size_t i = 0; i < vs.size(); ++i) index[vs[i].first] = i;
    std::vector<size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) parent[find(index[e.u])] = find(index[e.v]);
    size_t root = find(0);
    for (size_t i = 1; i < vs.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

// Edge-order admissibility against one endpoint.  Returns an explanation
// when the order cannot embed, nullopt when fine or merely unverifiable.
std::optional<std::string> endpoint_obstruction(const GroupDescriptor& d, long long order) {
    if (const auto* f = std::get_if<Finite>(&d)) {
        if (f->order % order != 0)
            return "edge order " + std::to_string(order) + " does not divide endpoint order " +
                   std::to_string(f->order);
        return std::nullopt;
    }
    bool torsion_free = std::holds_alternative<SurfaceGenus>(d) || std::holds_alternative<FreeOfRank>(d);
    if (torsion_free && order != 1) {
        // Free of rank 0 is the trivial group: same conclusion, only order 1
        // embeds.  Surface and free groups are torsion-free.
        return "edge order " + std::to_string(order) + " cannot embed in torsion-free endpoint";
    }
    return std::nullopt;
}

}  // namespace

ValidationReport validate(const GraphOfGroups& g) {
    ValidationReport report;
    if (g.vertices().empty()) {
        report.violations.push_back({"", "graph has no vertices"});
        return report;
    }
    if (!connected(g)) report.violations.push_back({"", "graph is not connected"});

    for (const auto& [id, d] : g.vertices()) {
        const InvariantRecord r = base_invariants(d);
        if (!r.hypothesis_ok)
            report.violations.push_back({id, "vertex group does not satisfy the standing hypotheses"});
        if (auto bad = record_violation(r))
            report.violations.push_back({id, *bad});
    }

    for (const auto& e : g.edges()) {
        if (e.order < 1) {
            report.violations.push_back({e.id, "edge order must be >= 1"});
            continue;
        }
        // A loop constrains its single endpoint once; a plain edge both ends.
        std::vector<std::string> ends = {e.u};
        if (e.v != e.u) ends.push_back(e.v);
        for (const auto& end : ends) {
            const GroupDescriptor& d = g.vertex(end);
            if (auto bad = endpoint_obstruction(d, e.order))
                report.violations.push_back({e.id, *bad + " (vertex \"" + end + "\")"});
            if (std::holds_alternative<Custom>(d) && e.order > 1)
                report.notes.push_back({e.id, "edge order " + std::to_string(e.order) +
                                                  " into custom vertex \"" + end + "\" is unverified"});
        }
        // An edge group of a finite endpoint's full order collapses that
        // edge; legal, but flagged because it carries no splitting.
        if (e.u != e.v) {
            for (const auto& end : {e.u, e.v}) {
                if (const auto* f = std::get_if<Finite>(&g.vertex(end))) {
                    if (f->order == e.order)
                        report.warnings.push_back(
                            {e.id, "edge order equals order of finite vertex \"" + end +
                                       "\", edge carries no splitting"});
                }
            }
        }
    }
    return report;
}

std::optional<long long> total_group_order(const GraphOfGroups& g) {
    if (g.vertices().size() != 1 || !g.edges().empty()) return std::nullopt;
    const InvariantRecord r = base_invariants(g.vertices()[0].second);
    return r.finite_order;  // nullopt for infinite vertex groups
}

std::optional<long long> graph_norm(const GraphOfGroups& g) {
    long long best = 1;
    for (const auto& [id, d] : g.vertices()) {
        const InvariantRecord r = base_invariants(d);
        if (!r.max_finite_subgroup) return std::nullopt;
        best = std::max(best, *r.max_finite_subgroup);
    }
    return best;
}

}  // namespace gog
