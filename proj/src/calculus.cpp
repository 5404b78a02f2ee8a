#include "gog/calculus.hpp"

#include "gog/errors.hpp"

namespace gog {

Rational chi_hnn(const Rational& chi_g, long long edge_order) {
    if (edge_order < 1) throw domain_error("edge order must be >= 1");
    return chi_g - Rational(1, edge_order);
}

Rational chi_amalgam(const Rational& chi1, const Rational& chi2, long long edge_order) {
    if (edge_order < 1) throw domain_error("edge order must be >= 1");
    return chi1 + chi2 - Rational(1, edge_order);
}

namespace {

Rational combine(const GraphOfGroups& g,
                 const std::function<Rational(const std::string&)>& vertex_value, int edge_sign) {
    Rational total(0);
    for (const auto& [id, d] : g.vertices()) total += vertex_value(id);
    for (const auto& e : g.edges()) {
        if (e.order < 1) throw domain_error("edge order must be >= 1");
        total += Rational(edge_sign, e.order);
    }
    return total;
}

}  // namespace

Rational graph_chi(const GraphOfGroups& g,
                   const std::function<Rational(const std::string&)>& vertex_value) {
    return combine(g, vertex_value, -1);
}

Rational graph_cochi(const GraphOfGroups& g,
                     const std::function<Rational(const std::string&)>& vertex_value) {
    return combine(g, vertex_value, +1);
}

Rational omega_graph(const GraphOfGroups& g) {
    return graph_chi(g, [&](const std::string& id) {
        const InvariantRecord r = base_invariants(g.vertex(id));
        if (!r.omega)
            throw undefined_error("omega not declared for vertex \"" + id + "\"");
        return *r.omega;
    });
}

Rational rank_gradient_graph(const GraphOfGroups& g) {
    return graph_cochi(g, [&](const std::string& id) {
        return base_invariants(g.vertex(id)).rank_gradient;
    });
}

Rational betti_volume_graph(const GraphOfGroups& g) {
    return graph_cochi(g, [&](const std::string& id) {
        return base_invariants(g.vertex(id)).betti_volume;
    });
}

Rational l2_betti_graph(const GraphOfGroups& g) {
    // Combine the defects b1l2(G_v) - 1/|G_v|, then add back 1/|G| for the
    // fundamental group itself (zero when it is infinite).
    Rational defect = graph_cochi(g, [&](const std::string& id) {
        const InvariantRecord r = base_invariants(g.vertex(id));
        Rational inv = r.finite_order ? Rational(1, *r.finite_order) : Rational(0);
        return r.l2_betti - inv;
    });
    std::optional<long long> order = total_group_order(g);
    return defect + (order ? Rational(1, *order) : Rational(0));
}

Rational vc_graph(const GraphOfGroups& g) {
    return graph_cochi(g, [&](const std::string& id) {
        const InvariantRecord r = base_invariants(g.vertex(id));
        if (r.finite_order) return Rational(-1, *r.finite_order);
        if (r.vc_equals_rg) return r.rank_gradient;
        throw undefined_error("vc not established for vertex \"" + id + "\"");
    });
}

InvariantReport invariant_report(const GraphOfGroups& g) {
    InvariantReport rep;
    try {
        rep.omega = omega_graph(g);
    } catch (const undefined_error& e) {
        rep.omega_reason = e.what();
    }
    rep.rank_gradient = rank_gradient_graph(g);
    rep.l2_betti = l2_betti_graph(g);
    rep.betti_volume = betti_volume_graph(g);
    try {
        rep.vc = vc_graph(g);
    } catch (const undefined_error& e) {
        rep.vc_reason = e.what();
    }
    rep.finite_order = total_group_order(g);
    return rep;
}

Rational ends_rg_lower_bound(SplitKind kind, long long edge_order) {
    if (edge_order < 1) throw domain_error("edge order must be >= 1");
    return Rational(1, (kind == SplitKind::Amalgam ? 6 : 2) * edge_order);
}

long long accessibility_edge_bound(long long norm, const Rational& rg) {
    if (norm < 1) throw domain_error("norm must be >= 1");
    if (rg < Rational(-1, 2))
        throw domain_error("rank gradient below -1/2 (trivial vertex group), bound undefined");
    long long bound = (Rational(norm) * (Rational(1, 2) + rg)).floor();
    return bound < 0 ? 0 : bound;
}

long long torsion_free_edge_bound(const Rational& rg_h) {
    if (rg_h < Rational(0)) throw domain_error("rank gradient must be >= 0 for a torsion-free subgroup");
    return rg_h.floor();
}

Rational fixed_subgroup_complexity_bound(long long index, const Rational& omega_n) {
    if (index < 1) throw domain_error("index must be >= 1");
    return Rational(index, 2) - omega_n + Rational(1);
}

}  // namespace gog
