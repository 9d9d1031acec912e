#ifndef QPT_EXCHANGE_GRAPH_HPP
#define QPT_EXCHANGE_GRAPH_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpt/representation.hpp"

namespace qpt {

// Hearts of bounded t-structures with their simple tilts, bounded exchange
// graph enumeration, restriction to a Serre subcategory, and the quotient
// exchange graph obtained by contracting tilts at simples supported inside
// the subcategory.

struct Heart {
    std::vector<CYObject> simples; // indexed by the vertices of qp
    QP qp;                         // mutation-evolved quiver with potential
    std::shared_ptr<const Cy3Context> ctx;
    std::string key;
    bool representable = true;

    std::size_t n() const { return simples.size(); }
    std::vector<IntVec> c_matrix() const; // column j = K-class of simple j
    // index of the simple equal to the given object, -1 if absent
    int index_of(const CYObject& o) const;
};

std::string heart_key(const std::vector<CYObject>& simples);

// standard heart: simples S_i at shift 0, identity c-matrix. Requires an
// acyclic finite-type quiver with trivial potential.
Heart standard_heart(const QP& qp);

// simple HRS tilts; the tilted simple shifts by +1/-1, every other simple is
// replaced by its universal-extension cone. The quiver advances by mutation
// at the same vertex.
Heart forward_tilt(const Heart& h, int k);
Heart backward_tilt(const Heart& h, int k);

// simultaneous tilt at a set of pairwise Ext-orthogonal simples (both
// directions); the result is independent of the order.
Heart composite_tilt(const Heart& h, const std::vector<int>& subset, bool forward);

struct TiltLabel {
    IntVec root;
    int shift = 0;
    std::string display;
};

struct EGVertex {
    Heart heart;
    int depth = 0;
    bool frontier_depth = false;  // at the exploration boundary
    bool frontier_opaque = false; // contains a non-representable simple
    bool interior() const { return !frontier_depth && !frontier_opaque; }
};

struct EGEdge {
    int src = 0, tgt = 0;
    TiltLabel label;
};

enum class Direction { Forward, Both };

struct ExchangeGraph {
    std::vector<EGVertex> vertices; // ordered by (BFS layer, key)
    std::vector<EGEdge> edges;
    std::map<std::string, int> index; // heart key -> vertex id
    int root = 0;
    int depth = 0;
    Direction direction = Direction::Forward;

    const EGVertex& operator[](int id) const { return vertices[id]; }
    int find(const std::string& key) const;
};

// BFS from the standard heart; hearts with opaque simples become frontier
// vertices and are never expanded. Deterministic for fixed inputs.
ExchangeGraph explore(const QP& qp, int depth, Direction direction = Direction::Forward);

// heart restricts to the Serre subcategory generated by the I-simples:
// exactly |I| simples are supported in I and their classes form an integer
// basis in the I-coordinates.
bool is_compatible(const Heart& h, const VertexSubset& sub);

// full subgraph on the compatible (representable) hearts
ExchangeGraph compatible_subgraph(const ExchangeGraph& eg, const VertexSubset& sub);

struct QuotientClass {
    std::vector<int> members; // vertex ids in the compatible subgraph
    std::string key;          // minimal member key
    bool interior = false;
    // projected simples of the quotient heart: (dim vector over I^c, shift)
    std::vector<std::pair<IntVec, int>> quotient_simples;
    // every quotient simple is witnessed by an explored edge in both
    // directions; together with interior members this makes the class
    // degrees exact
    bool lift_complete = false;
    bool fully_expanded() const { return interior && lift_complete; }
};

struct QuotientEdge {
    int src = 0, tgt = 0; // class indices
    IntVec proj;          // label projected to the I^c coordinates
    int shift = 0;
    std::string display;
};

struct QuotientGraph {
    ExchangeGraph sub; // the compatible subgraph the classes partition
    VertexSubset subset;
    std::vector<QuotientClass> classes;
    std::vector<QuotientEdge> edges;
    std::map<std::string, int> class_of; // heart key -> class index
};

// restrict to the compatible subgraph, contract edges whose label simple is
// supported in I, relabel the remaining edges by their projections.
QuotientGraph quotient_graph(const ExchangeGraph& eg, const VertexSubset& sub);

struct RegularityReport {
    struct Entry {
        std::string key;
        int out = 0, in = 0;
    };
    std::vector<Entry> interior;
    std::vector<std::string> frontier;
    bool regular = false; // every interior vertex has degrees (d, d)
    int degree = 0;
};

RegularityReport regularity_report(const ExchangeGraph& eg);
RegularityReport regularity_report(const QuotientGraph& qg);

struct LiftStep {
    int vertex = 0;
    std::string display;
};

// BFS over forward tilts at subcategory simples only, searching for a heart
// with no arrows from any subcategory-simple vertex into vertex k. Each such
// tilt leaves the induced quotient heart unchanged, so a successful sequence
// exhibits a lift of the quotient tilt at k.
std::vector<LiftStep> lift_tilt_search(const Heart& h, int k, const VertexSubset& sub, int bound);

} // namespace qpt

#endif
