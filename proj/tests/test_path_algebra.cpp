#include <doctest.h>

#include "qpt/path_algebra.hpp"
#include "qpt/qp_io.hpp"
#include "test_support.hpp"

using namespace qpt;
using namespace qpt::testing;

TEST_CASE("trivial potential has no relations") {
    RelationSet rs = relations(a3());
    CHECK(rs.relations.empty());
    CHECK(rs.homogeneous);
}

TEST_CASE("cyclic derivatives of the mutated A3 potential") {
    QP qp = mu2a3_fixture();
    RelationSet rs = relations(qp);
    REQUIRE(rs.relations.size() == 3);
    CHECK(rs.homogeneous);
    for (const auto& r : rs.relations) {
        REQUIRE(r.paths.size() == 1);
        CHECK(r.paths[0].second.size() == 2);
        // composability t(a) ~> s(a)
        const Arrow& a = qp.quiver.arrows[r.arrow];
        const auto& p = r.paths[0].second;
        CHECK(qp.quiver.arrows[p[0]].src == a.tgt);
        CHECK(qp.quiver.arrows[p[1]].tgt == a.src);
    }
}

TEST_CASE("a 3-cycle potential gives three quadratic relations") {
    QP qp = fixture("cycle3.qp");
    qp.potential.terms.push_back({Rat(1), {0, 1, 2}});
    qp.potential.normalize();
    RelationSet rs = relations(qp);
    CHECK(rs.relations.size() == 3);
    CHECK(rs.homogeneous);
}

TEST_CASE("graded dimensions of the A3 path algebra") {
    GradedDims gd = jacobian_dims(a3());
    CHECK(gd.verdict == Finiteness::Finite);
    CHECK(gd.total == 6);
    REQUIRE(gd.dims.size() == 3);
    CHECK(gd.dims.at(0) == 3);
    CHECK(gd.dims.at(1) == 2);
    CHECK(gd.dims.at(2) == 1);
}

TEST_CASE("graded dimensions of the mutated A3 Jacobian algebra") {
    GradedDims gd = jacobian_dims(mu2a3_fixture());
    CHECK(gd.verdict == Finiteness::Finite);
    CHECK(gd.total == 6);
    REQUIRE(gd.dims.size() == 3);
    CHECK(gd.dims.at(0) == 3);
    CHECK(gd.dims.at(1) == 3);
    CHECK(gd.dims.at(2) == 0);
}

TEST_CASE("a cyclic quiver without potential stays unknown at the bound") {
    GradedDims gd = jacobian_dims(fixture("cycle3.qp"), 64);
    CHECK(gd.verdict == Finiteness::Unknown);
    CHECK(gd.bound == 64);
    CHECK(gd.dims.at(64) == 3);
}

TEST_CASE("mixed-length derivatives are refused") {
    // W = abc + abcabd has derivatives mixing lengths 2 and 5
    auto qp = parse_qp(R"({"vertices":["1","2","3"],
        "arrows":[{"id":"a","src":"1","tgt":"2"},{"id":"b","src":"2","tgt":"3"},
                  {"id":"c","src":"3","tgt":"1"},{"id":"d","src":"3","tgt":"1"}],
        "potential":[{"coeff":"1","cycle":["a","b","c"]},
                     {"coeff":"1","cycle":["a","b","c","a","b","d"]}]})");
    RelationSet rs = relations(qp);
    CHECK_FALSE(rs.homogeneous);
    CHECK_THROWS_AS(jacobian_dims(qp), NonHomogeneousPotential);
}

TEST_CASE("idempotent subalgebra quiver of A3 at the middle vertex") {
    QP qp = a3();
    auto sub = VertexSubset::of(qp, {1});
    EjeQuiver e = eje_quiver(qp, sub);
    REQUIRE(e.vertices.size() == 2);
    CHECK(e.vertex_names[0] == "1");
    CHECK(e.vertex_names[1] == "3");
    REQUIRE(e.arrows.size() == 1);
    CHECK(e.arrows[0].src == 0);
    CHECK(e.arrows[0].tgt == 1);
    CHECK(e.arrows[0].witness_display == "a.b");
    CHECK_FALSE(e.has_loops);
}

TEST_CASE("the mutated A3 gives the same idempotent subalgebra quiver") {
    QP qp = mu2a3_fixture();
    auto sub = VertexSubset::of(qp, {1});
    EjeQuiver e = eje_quiver(qp, sub);
    REQUIRE(e.arrows.size() == 1);
    CHECK(e.arrows[0].src == 0);
    CHECK(e.arrows[0].tgt == 1);
    CHECK(e.arrows[0].witness_display == "c"); // the composite arrow 1 -> 3
    // the reversed path 3 ~> 1 dies against the relations
    CHECK(e.arrow_counts() == eje_quiver(a3(), VertexSubset::of(a3(), {1})).arrow_counts());
}

TEST_CASE("the empty subset reproduces the quiver at the radical level") {
    QP qp = mu2a3_fixture();
    auto sub = VertexSubset::of(qp, {});
    EjeQuiver e = eje_quiver(qp, sub);
    CHECK(e.vertices.size() == 3);
    CHECK(e.arrows.size() == 3);
    CHECK(e.arrow_counts() == qp.quiver.arrow_counts());
}

TEST_CASE("subalgebra quiver refuses an unbounded Jacobian algebra") {
    QP qp = fixture("cycle3.qp");
    auto sub = VertexSubset::of(qp, {1});
    CHECK_THROWS_AS(eje_quiver(qp, sub, 16), JacobianNotFinite);
}

TEST_CASE("path enumeration") {
    QP qp = a3();
    auto p13 = enumerate_paths(qp.quiver, 0, 2, 2);
    REQUIRE(p13.size() == 1);
    CHECK(p13[0].size() == 2);
    auto p11 = enumerate_paths(qp.quiver, 0, 0, 5);
    REQUIRE(p11.size() == 1);
    CHECK(p11[0].empty());
    QP cyc = fixture("cycle3.qp");
    auto loops = enumerate_paths(cyc.quiver, 0, 0, 6);
    REQUIRE(loops.size() == 3);
    CHECK(loops[0].empty());
    CHECK(loops[1].size() == 3);
    CHECK(loops[2].size() == 6);
}

TEST_CASE("degree profile begins with the vertex and arrow counts") {
    for (const auto& name : {"a3.qp", "mu2a3.qp"}) {
        QP qp = fixture(name);
        GradedDims gd = jacobian_dims(qp);
        CHECK(gd.dims.at(0) == (long long)qp.quiver.size());
        CHECK(gd.dims.at(1) == (long long)qp.quiver.arrows.size());
    }
}

TEST_CASE("acyclic trivial-potential algebras count their paths") {
    QP qp = a3();
    GradedDims gd = jacobian_dims(qp);
    long long paths = 0;
    for (std::size_t i = 0; i < qp.quiver.size(); ++i)
        for (std::size_t j = 0; j < qp.quiver.size(); ++j)
            paths += (long long)enumerate_paths(qp.quiver, (int)i, (int)j, 8).size();
    CHECK(gd.verdict == Finiteness::Finite);
    CHECK(gd.total == paths);
}
