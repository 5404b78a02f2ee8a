#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gog/graph.hpp"
#include "gog/rational.hpp"

namespace gog {

// Characteristic of an HNN extension over an edge group of the given order:
// chi(G *_C) = chi(G) - 1/|C|.
Rational chi_hnn(const Rational& chi_g, long long edge_order);

// Characteristic of an amalgam over an edge group of the given order:
// chi(G1 *_C G2) = chi(G1) + chi(G2) - 1/|C|.
Rational chi_amalgam(const Rational& chi1, const Rational& chi2, long long edge_order);

// Sum of vertex values minus 1/order per edge (chi-type combination rule).
Rational graph_chi(const GraphOfGroups& g,
                   const std::function<Rational(const std::string&)>& vertex_value);

// Sum of vertex values plus 1/order per edge (co-chi combination: rank
// gradient, L2 Betti defect, Betti volume, hom volume all combine this way).
Rational graph_cochi(const GraphOfGroups& g,
                     const std::function<Rational(const std::string&)>& vertex_value);

// Kurosh-style omega of the fundamental group.  Throws undefined_error when
// some vertex record leaves omega undeclared, naming the vertex.
Rational omega_graph(const GraphOfGroups& g);

// Rank gradient of the fundamental group (co-chi over vertex values).
Rational rank_gradient_graph(const GraphOfGroups& g);

// Betti volume of the fundamental group (co-chi over vertex values).
Rational betti_volume_graph(const GraphOfGroups& g);

// First L2 Betti number: the defect b1l2(H) - 1/|H| (with 1/|H| read as 0
// for infinite H) combines co-chi over vertices, then the total group's own
// 1/|G| term is restored.
Rational l2_betti_graph(const GraphOfGroups& g);

// Hom-growth volume: co-chi over vertex values, where a finite vertex of
// order n contributes -1/n and an infinite vertex contributes its rank
// gradient provided the record establishes vc_equals_rg.  Throws
// undefined_error otherwise, naming the vertex.
Rational vc_graph(const GraphOfGroups& g);

// Full bundle for reporting; undefined entries carry a reason instead.
struct InvariantReport {
    std::optional<Rational> omega;
    std::string omega_reason;
    Rational rank_gradient;
    Rational l2_betti;
    Rational betti_volume;
    std::optional<Rational> vc;
    std::string vc_reason;
    std::optional<long long> finite_order;
};

InvariantReport invariant_report(const GraphOfGroups& g);

// Lower bound on the rank gradient of a one-edge splitting over a finite
// edge group of order f: 1/(6f) for an amalgam, 1/(2f) for an HNN letter.
enum class SplitKind { Amalgam, Hnn };
Rational ends_rg_lower_bound(SplitKind kind, long long edge_order);

// Edge bound for reduced splittings over finite edge groups:
// floor(norm * (1/2 + rg)), clamped at zero.  Requires rg >= -1/2 (only the
// trivial vertex group breaks this) and norm >= 1.
long long accessibility_edge_bound(long long norm, const Rational& rg);

// Edge bound for splittings of a torsion-free subgroup with rank gradient
// rg_h >= 0: floor(rg_h).
long long torsion_free_edge_bound(const Rational& rg_h);

// Complexity bound for the fixed subgroup of an automorphism preserving a
// finite-index subgroup N: index/2 - omega(N) + 1, exact.
Rational fixed_subgroup_complexity_bound(long long index, const Rational& omega_n);

}  // namespace gog
