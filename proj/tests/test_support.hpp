#ifndef QPT_TEST_SUPPORT_HPP
#define QPT_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "qpt/exchange_graph.hpp"
#include "qpt/polygon.hpp"
#include "qpt/qp_io.hpp"

#ifndef QPT_TEST_DATA_DIR
#define QPT_TEST_DATA_DIR "tests/data"
#endif

namespace qpt::testing {

inline std::string data_path(const std::string& name) {
    return std::string(QPT_TEST_DATA_DIR) + "/" + name;
}

inline QP fixture(const std::string& name) { return load_qp_file(data_path(name)); }

inline QP a3() { return fixture("a3.qp"); }
inline QP a2() { return fixture("a2.qp"); }
inline QP a1() { return fixture("a1.qp"); }
inline QP mu2a3_fixture() { return fixture("mu2a3.qp"); }

// branching type: central vertex 0 with arrows out to 1, 2, 3
inline QP d4() {
    return parse_qp(R"({"vertices":["0","1","2","3"],
        "arrows":[{"id":"a","src":"0","tgt":"1"},{"id":"b","src":"0","tgt":"2"},
                  {"id":"c","src":"0","tgt":"3"}],"potential":[]})");
}

inline QP a5() {
    return parse_qp(R"({"vertices":["1","2","3","4","5"],
        "arrows":[{"id":"a","src":"1","tgt":"2"},{"id":"b","src":"2","tgt":"3"},
                  {"id":"c","src":"3","tgt":"4"},{"id":"d","src":"4","tgt":"5"}],
        "potential":[]})");
}

// ---------------------------------------------------------------------------
// The depth-6 golden region of the A3 exchange graph: 14 hearts and the 21
// tilts between them, under the naming X = S_3, Y = S_2, Z = S_1 and
// U = (0,1,1), V = (1,1,0), W = (1,1,1), with M_i meaning M[i-1].

inline IntVec rX() { return {0, 0, 1}; }
inline IntVec rY() { return {0, 1, 0}; }
inline IntVec rZ() { return {1, 0, 0}; }
inline IntVec rU() { return {0, 1, 1}; }
inline IntVec rV() { return {1, 1, 0}; }
inline IntVec rW() { return {1, 1, 1}; }

struct GoldenHeart {
    const char* name;
    std::vector<std::pair<IntVec, int>> simples; // (root, shift)
    std::string key() const {
        std::vector<CYObject> objs;
        for (auto& [root, shift] : simples) objs.push_back(CYObject::module(root, shift));
        return heart_key(objs);
    }
};

inline std::vector<GoldenHeart> golden_hearts() {
    return {
        {"x1", {{rX(), 0}, {rY(), 0}, {rZ(), 1}}},
        {"x2", {{rX(), 0}, {rY(), 0}, {rZ(), 0}}},
        {"x3", {{rX(), 1}, {rU(), 0}, {rZ(), 1}}},
        {"x4", {{rX(), 1}, {rU(), 0}, {rZ(), 0}}},
        {"x5", {{rW(), 0}, {rY(), 0}, {rU(), 1}}},
        {"x6", {{rX(), 0}, {rY(), 1}, {rV(), 0}}},
        {"x7", {{rX(), 1}, {rY(), 1}, {rW(), 0}}},
        {"x8", {{rW(), 1}, {rY(), 0}, {rZ(), 0}}},
        {"x9", {{rU(), 1}, {rY(), 0}, {rZ(), 1}}},
        {"x10", {{rV(), 0}, {rY(), 1}, {rW(), 1}}},
        {"x11", {{rX(), 1}, {rV(), 1}, {rZ(), 0}}},
        {"x12", {{rX(), 0}, {rV(), 1}, {rZ(), 0}}},
        {"x13", {{rX(), 1}, {rY(), 1}, {rZ(), 1}}},
        {"x14", {{rX(), 0}, {rY(), 1}, {rZ(), 1}}},
    };
}

struct GoldenEdge {
    const char* src;
    const char* tgt;
    IntVec root; // tilted simple, always at shift 0 in the region
};

inline std::vector<GoldenEdge> golden_edges() {
    return {
        {"x2", "x1", rZ()},  {"x2", "x4", rX()},  {"x2", "x6", rY()},
        {"x1", "x3", rX()},  {"x1", "x14", rY()}, {"x4", "x5", rU()},
        {"x4", "x3", rZ()},  {"x3", "x9", rU()},  {"x5", "x7", rY()},
        {"x5", "x8", rW()},  {"x6", "x7", rX()},  {"x6", "x12", rV()},
        {"x7", "x10", rW()}, {"x8", "x10", rY()}, {"x8", "x9", rZ()},
        {"x9", "x13", rY()}, {"x10", "x11", rV()},{"x11", "x13", rZ()},
        {"x14", "x13", rX()},{"x12", "x11", rX()},{"x12", "x14", rZ()},
    };
}

// red pentagon (I = {2}) and blue pentagon (I = {3}) of the golden region:
// class membership and labeled edges between classes
struct GoldenPentagon {
    int subcategory_vertex; // 0-based
    std::vector<std::pair<const char*, const char*>> same_class;
    // (source member, target member name, projected label display)
    struct Edge {
        const char* src;
        const char* tgt;
        const char* label;
    };
    std::vector<Edge> edges;
};

inline GoldenPentagon red_pentagon() {
    return {1,
            {{"x2", "x6"}, {"x5", "x7"}, {"x8", "x10"}, {"x9", "x13"}, {"x1", "x14"}},
            {{"x2", "x5", "01_1"},   // tilt at X-bar
             {"x5", "x8", "11_1"},   // tilt at W-bar
             {"x8", "x9", "10_1"},   // tilt at Z-bar
             {"x2", "x1", "10_1"},   // tilt at Z-bar
             {"x1", "x9", "01_1"}}}; // tilt at X-bar
}

inline GoldenPentagon blue_pentagon() {
    return {2,
            {{"x2", "x4"}, {"x1", "x3"}, {"x6", "x7"}, {"x11", "x12"}, {"x13", "x14"}},
            {{"x2", "x1", "10_1"},    // tilt at Z-bar
             {"x2", "x6", "01_1"},    // tilt at Y-bar
             {"x6", "x11", "11_1"},   // tilt at V-bar
             {"x11", "x13", "10_1"},  // tilt at Z-bar
             {"x1", "x13", "01_1"}}}; // tilt at Y-bar
}

// ---------------------------------------------------------------------------
// Seeded random instances

// random full triangulation of a glued polygon pair (or single polygon)
inline PolygonTriangulation random_triangulation(const PolygonPair& pp, std::mt19937& rng) {
    auto all = all_triangulations(pp);
    return all[rng() % all.size()];
}

// random geometric-type QP: the quiver of a random triangulation of a glued
// polygon pair, pushed around by a short random mutation word
inline QP random_geometric_qp(std::mt19937& rng, int max_vertices = 6, int mutations = 4) {
    while (true) {
        int k = 3 + (int)(rng() % 5);              // 3..7
        int l = (rng() % 2) ? 0 : 3 + (int)(rng() % 4); // 0 or 3..6
        PolygonPair pp;
        pp.k = k;
        pp.l = l;
        int vertices = (l > 0 ? k + l - 5 : k - 3);
        if (vertices < 1 || vertices > max_vertices) continue;
        PolygonTriangulation t = random_triangulation(pp, rng);
        QP qp = polygon_quiver(pp, t);
        for (int i = 0; i < mutations; ++i) {
            int v = (int)(rng() % qp.quiver.size());
            try {
                qp = mutate(qp, v);
            } catch (const ReductionUnsupported&) {
                break; // keep the last good one
            }
        }
        return qp;
    }
}

} // namespace qpt::testing

#endif
