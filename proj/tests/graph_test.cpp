#include "gog/graph.hpp"

#include "doctest.h"
#include "gog/errors.hpp"

using namespace gog;

namespace {

GraphOfGroups psl_graph() {
    GraphOfGroups g;
    g.add_vertex("v1", Finite{2});
    g.add_vertex("v2", Finite{3});
    g.add_edge("e1", "v1", "v2", 1);
    return g;
}

}  // namespace

TEST_CASE("construction rejects bad ids") {
    GraphOfGroups g;
    g.add_vertex("v", Finite{2});
    CHECK_THROWS_AS(g.add_vertex("v", Finite{3}), domain_error);
    CHECK_THROWS_AS(g.add_vertex("", Finite{3}), domain_error);
    CHECK_THROWS_AS(g.add_edge("e", "v", "w", 1), domain_error);
    CHECK_THROWS_AS(g.add_edge("e", "w", "v", 1), domain_error);
    g.add_edge("e", "v", "v", 2);
    CHECK_THROWS_AS(g.add_edge("e", "v", "v", 1), domain_error);
    CHECK(g.edges().size() == 1);
    CHECK(g.has_vertex("v"));
    CHECK(!g.has_vertex("w"));
    CHECK_THROWS_AS(g.vertex("w"), domain_error);
}

TEST_CASE("a valid two-vertex amalgam graph") {
    const ValidationReport r = validate(psl_graph());
    CHECK(r.valid());
    CHECK(r.warnings.empty());
    CHECK(r.notes.empty());
}

TEST_CASE("empty and disconnected graphs are invalid") {
    CHECK(!validate(GraphOfGroups{}).valid());
    GraphOfGroups g;
    g.add_vertex("a", Finite{2});
    g.add_vertex("b", Finite{2});
    CHECK(!validate(g).valid());
    g.add_edge("e", "a", "b", 1);
    CHECK(validate(g).valid());
}

TEST_CASE("edge orders must divide finite endpoint orders") {
    GraphOfGroups g;
    g.add_vertex("a", Finite{6});
    g.add_vertex("b", Finite{8});
    g.add_edge("e", "a", "b", 2);
    CHECK(validate(g).valid());
    GraphOfGroups h;
    h.add_vertex("a", Finite{6});
    h.add_vertex("b", Finite{8});
    h.add_edge("e", "a", "b", 4);  // 4 does not divide 6
    const ValidationReport r = validate(h);
    CHECK(!r.valid());
    CHECK(r.violations.size() == 1);
    CHECK(r.violations[0].where == "e");
}

TEST_CASE("loops constrain their single endpoint once") {
    GraphOfGroups g;
    g.add_vertex("a", Finite{4});
    g.add_edge("t", "a", "a", 2);
    CHECK(validate(g).valid());
    GraphOfGroups h;
    h.add_vertex("a", Finite{4});
    h.add_edge("t", "a", "a", 3);
    CHECK(validate(h).violations.size() == 1);
}

TEST_CASE("torsion-free endpoints only admit trivial edge groups") {
    for (const GroupDescriptor& d :
         {GroupDescriptor(SurfaceGenus{2}), GroupDescriptor(FreeOfRank{2}),
          GroupDescriptor(FreeOfRank{0})}) {
        GraphOfGroups g;
        g.add_vertex("a", d);
        g.add_vertex("b", Finite{4});
        g.add_edge("e", "a", "b", 2);
        CHECK(!validate(g).valid());
        GraphOfGroups h;
        h.add_vertex("a", d);
        h.add_vertex("b", Finite{4});
        h.add_edge("e", "a", "b", 1);
        CHECK(validate(h).valid());
    }
}

TEST_CASE("edge equal to a finite endpoint draws a warning, not a violation") {
    GraphOfGroups g;
    g.add_vertex("a", Finite{2});
    g.add_vertex("b", Finite{4});
    g.add_edge("e", "a", "b", 2);
    const ValidationReport r = validate(g);
    CHECK(r.valid());
    CHECK(r.warnings.size() == 1);
    CHECK(r.warnings[0].where == "e");
}

TEST_CASE("edges into custom vertices are accepted with a note") {
    InvariantRecord rec;
    rec.rank_gradient = Rational(1);
    rec.l2_betti = Rational(0);
    rec.betti_volume = Rational(0);
    GraphOfGroups g;
    g.add_vertex("a", Custom{"mystery", rec});
    g.add_edge("t", "a", "a", 5);
    const ValidationReport r = validate(g);
    CHECK(r.valid());
    CHECK(r.notes.size() == 1);
}

TEST_CASE("hypothesis failures and record violations surface per vertex") {
    InvariantRecord rec;
    rec.hypothesis_ok = false;
    GraphOfGroups g;
    g.add_vertex("a", Custom{"bad", rec});
    CHECK(!validate(g).valid());

    InvariantRecord rec2;
    rec2.rank_gradient = Rational(0);
    rec2.betti_volume = Rational(1);  // vb > rg
    GraphOfGroups h;
    h.add_vertex("a", Custom{"worse", rec2});
    const ValidationReport r = validate(h);
    CHECK(!r.valid());
    CHECK(r.violations[0].where == "a");
}

TEST_CASE("total group order is finite only for a bare finite vertex") {
    GraphOfGroups g;
    g.add_vertex("a", Finite{6});
    CHECK(*total_group_order(g) == 6);
    g.add_edge("t", "a", "a", 6);
    CHECK(!total_group_order(g));
    GraphOfGroups h;
    h.add_vertex("a", SurfaceGenus{2});
    CHECK(!total_group_order(h));
    GraphOfGroups k;
    k.add_vertex("a", FreeOfRank{0});
    CHECK(*total_group_order(k) == 1);
    CHECK(!total_group_order(psl_graph()));
}

TEST_CASE("graph norm is the largest finite vertex bound") {
    CHECK(*graph_norm(psl_graph()) == 3);
    GraphOfGroups g;
    g.add_vertex("a", SurfaceGenus{3});
    CHECK(*graph_norm(g) == 1);
    GraphOfGroups h;
    h.add_vertex("a", Finite{4});
    h.add_vertex("b", PolycyclicInfinite{});
    h.add_edge("e", "a", "b", 2);
    CHECK(!graph_norm(h));
}

TEST_CASE("vertex lookup and equality") {
    const GraphOfGroups g = psl_graph();
    CHECK(std::get<Finite>(g.vertex("v2")).order == 3);
    CHECK(g == psl_graph());
    GraphOfGroups h = psl_graph();
    h.add_vertex("v3", Finite{5});
    CHECK(!(g == h));
}
