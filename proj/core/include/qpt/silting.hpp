#ifndef QPT_SILTING_HPP
#define QPT_SILTING_HPP

#include <string>
#include <vector>

#include "qpt/exchange_graph.hpp"

namespace qpt {

// K-theoretic silting calculus: g-matrix states paired with companion
// hearts. The pairing of g-columns against the companion's c-columns is the
// coordinate dot product and stays the identity along every mutation word;
// a violation is an internal failure, never a user error.

struct SiltingState {
    std::vector<IntVec> g_cols; // column k = class of summand k
    Heart companion;
    std::vector<int> word; // mutation word (vertex indices, forward > 0, backward < 0 - 1)

    std::string g_key() const; // sorted-column fingerprint
};

SiltingState initial_silting(const QP& qp);

// column k becomes -g_k + sum_i (#arrows i->k) g_i, the multiplicities read
// off the companion quiver; the companion advances by the forward tilt at k.
SiltingState silting_mutate(const SiltingState& s, int k);
// inverse operation: multiplicities use arrows k->i, companion tilts backward.
SiltingState silting_mutate_back(const SiltingState& s, int k);

void verify_pairing(const SiltingState& s); // throws PairingViolation

struct SEGVertex {
    std::string key;       // g-matrix fingerprint
    std::string heart_key; // companion heart
    std::vector<IntVec> g_cols;
    bool frontier = false;
};

struct SEGEdge {
    int src = 0, tgt = 0;
    std::string label; // display of the tilted companion simple
};

struct SiltingGraph {
    std::vector<SEGVertex> vertices;
    std::vector<SEGEdge> edges;
    int root = 0;
};

// mirrors explore() vertex for vertex; dedup follows the companion heart.
SiltingGraph seg_explore(const QP& qp, int depth, Direction direction = Direction::Forward);

// label-preserving isomorphism check between an explored exchange graph and
// its silting mirror; both must come from the same (qp, depth, direction).
bool seg_isomorphic(const ExchangeGraph& eg, const SiltingGraph& sg);

// The summands indexed by the complement I^c, extracted from a state whose
// companion heart contains the standard subcategory simples.
struct PartialSilting {
    std::vector<int> summand_vertices; // companion vertex indices kept
    std::vector<IntVec> columns;       // their g-columns
    SiltingState state;                // originating full state
    VertexSubset sub;

    std::string key() const; // sorted-column fingerprint
};

PartialSilting partial_silting(const SiltingState& s, const VertexSubset& sub);

// mutation inside the perpendicular category: lift until no arrows run from
// subcategory vertices into j, mutate the full state at j, re-extract. The
// result does not depend on the lift found.
PartialSilting partial_mutate(const PartialSilting& p, int j, int lift_bound = 32);

// Certificate that the quotient exchange graph and the partial-silting
// exchange graph over the same region are isomorphic with matching labels.
struct SegBulletResult {
    SiltingGraph graph; // one vertex per verified quotient class
    // (class key, partial-silting key) pairs, parallel arrays
    std::vector<std::pair<std::string, std::string>> vertex_bijection;
    std::size_t verified_edges = 0;
    std::vector<std::string> skipped_classes; // no lifted member inside the region
    std::vector<std::string> skipped_edges;   // lift left the representable region

    bool edge_verified(const std::string& src_class, const std::string& label) const;
};

SegBulletResult seg_bullet(const ExchangeGraph& eg, const QuotientGraph& qg,
                           const VertexSubset& sub, int lift_bound = 32);

} // namespace qpt

#endif
