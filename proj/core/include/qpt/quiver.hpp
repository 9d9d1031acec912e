#ifndef QPT_QUIVER_HPP
#define QPT_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpt/errors.hpp"
#include "qpt/rational.hpp"

namespace qpt {

// Quivers with potential and their Derksen-Weyman-Zelevinsky mutation.
//
// Vertices and arrows carry string names for I/O; all internal bookkeeping is
// index-based. A valid quiver has no loops and no 2-cycles; the raw output of
// a premutation may violate that and is repaired by reduce().

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& id) const;
    std::size_t size() const { return vertices.size(); }

    // entry (i,j) = number of arrows i -> j
    std::vector<std::vector<int>> arrow_counts() const;
    bool is_acyclic() const;
};

// One potential term: a rational coefficient on a cyclically closed arrow word.
struct Cycle {
    Rat coeff;
    std::vector<int> arrows; // arrow indices, composable, returns to start
};

struct Potential {
    std::vector<Cycle> terms;

    bool empty() const { return terms.empty(); }
    // Rotate each cycle to its lexicographically minimal position, merge
    // duplicate cycles, drop zero coefficients, sort terms.
    void normalize();
};

struct QP {
    Quiver quiver;
    Potential potential;
};

// A raw (possibly 2-cycled) intermediate between premutate and reduce.
using RawQP = QP;

struct Diagnostic {
    std::string code;    // e.g. "loop", "two-cycle", "dangling-arrow"
    std::string message; // human-readable, includes offending ids
};

// Every violated invariant, with offending ids. Empty list iff valid.
std::vector<Diagnostic> validate_qp(const QP& qp);
bool is_valid(const QP& qp);

// Arrows through k are reversed, composites [ab] for paths through k are
// added, and the potential becomes W~ + sum [ab] b* a*. May emit 2-cycles.
RawQP premutate(const QP& qp, int k);

// Removes the quadratic part of the potential by exact substitution, deleting
// the 2-cycle arrow pairs. Supported exactly when the quadratic part stays a
// sum over pairwise-disjoint 2-cycles; substitution terms growing past
// max_cycle_len raise ReductionUnsupported.
QP reduce(const RawQP& raw, std::size_t max_cycle_len = 12);

// reduce(premutate(qp, k)). Never returns loops or 2-cycles.
QP mutate(const QP& qp, int k, std::size_t max_cycle_len = 12);

// Full subquiver on `keep`; potential terms that leave `keep` are dropped.
QP restrict_qp(const QP& qp, const std::vector<int>& keep);

// Proper subset of vertices, stored with its complement.
struct VertexSubset {
    std::vector<int> members;    // I, sorted
    std::vector<int> complement; // I^c, sorted

    static VertexSubset of(const QP& qp, std::vector<int> members);
    bool contains(int v) const;
};

// Presentation data of the Calabi-Yau dg completion of a QP: the doubled
// graded quiver with one reversed arrow per arrow in degree -1 and one loop
// per vertex in degree -2, plus the differential table.
struct GinzburgQuiver {
    struct GradedArrow {
        std::string id;
        int src = 0, tgt = 0;
        int degree = 0; // 0, -1 or -2
    };
    // d(dual of arrow a) = cyclic derivative of W at a, a path combination.
    struct PathCombo {
        std::vector<std::pair<Rat, std::vector<int>>> terms; // over base arrows
    };
    // d(loop at k) = sum over arrows a of e_k [a, a^dual] e_k, kept as signed
    // two-letter words (arrow index, +1 for a a^dual / -1 for a^dual a).
    struct CommutatorTerm {
        int arrow = 0;
        int sign = 1;
    };

    std::vector<std::string> vertices;
    std::vector<GradedArrow> arrows; // degree-0 arrows first, then duals, then loops
    std::vector<PathCombo> dual_differential;            // indexed like base arrows
    std::vector<std::vector<CommutatorTerm>> loop_differential; // indexed by vertex
};

GinzburgQuiver ginzburg(const QP& qp);

// entry (i,j) = #arrows i->j; equals dim Ext^1(S_i, S_j) for the standard
// heart under this library's orientation convention (an arrow i->j means a
// nonsplit extension 0 -> S_j -> E -> S_i -> 0 exists).
std::vector<std::vector<int>> ext1_matrix(const QP& qp);

// Cyclic-derivative relation set: the derivative at arrow a is a combination
// of paths composing t(a) ~> s(a).
struct Relation {
    int arrow;
    std::vector<std::pair<Rat, std::vector<int>>> paths;
};
struct RelationSet {
    std::vector<Relation> relations;
    bool homogeneous = true; // every relation's summands share one length
};
RelationSet relations(const QP& qp);

// Canonical form: isomorphic QPs (vertex/arrow relabelings) map to identical
// output. Canonical vertex names are "1".."n", arrow names "a1".."am".
struct CanonicalQP {
    QP qp;
    std::vector<int> vertex_map; // original index -> canonical index
};
CanonicalQP canonical_form(const QP& qp);

bool canonically_equal(const QP& a, const QP& b);
// Compares only the underlying quivers (ignores potentials).
bool canonically_equal_quiver(const QP& a, const QP& b);

std::string qp_brief(const QP& qp); // one-line summary for CLI output

} // namespace qpt

#endif
