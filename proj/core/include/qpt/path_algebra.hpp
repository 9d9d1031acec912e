#ifndef QPT_PATH_ALGEBRA_HPP
#define QPT_PATH_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "qpt/quiver.hpp"

namespace qpt {

// Graded dimensions of the Jacobian algebra, exact per-degree linear algebra.
// Valid exactly when the cyclic-derivative relations are homogeneous (always
// the case for potentials that are sums of cycles of one length, and vacuous
// for W = 0).

enum class Finiteness { Finite, InfiniteDetected, Unknown };

struct GradedDims {
    std::map<int, long long> dims; // degree -> dimension
    Finiteness verdict = Finiteness::Unknown;
    long long total = 0; // meaningful when verdict == Finite
    int bound = 0;       // the max_degree that was in effect
};

constexpr int kDefaultMaxDegree = 64;

GradedDims jacobian_dims(const QP& qp, int max_degree = kDefaultMaxDegree);

// All composable arrow sequences i ~> j of length <= max_len, in
// lexicographic order by arrow index; length 0 gives the trivial path when
// i == j.
std::vector<std::vector<int>> enumerate_paths(const Quiver& q, int i, int j, int max_len);

// The quiver of the idempotent subalgebra e J e, e the idempotent of the
// complement I^c: vertices I^c, arrows a basis of rad/rad^2 with witness
// paths in the ambient quiver. Requires a finite-dimensional Jacobian
// algebra.
struct EjeArrow {
    int src, tgt;                  // indices into EjeQuiver::vertices
    std::vector<int> witness;      // arrow indices of a witness path in Q
    std::string witness_display;   // arrow ids joined for reports
};

struct EjeQuiver {
    std::vector<int> vertices;     // original vertex indices (= I^c, sorted)
    std::vector<std::string> vertex_names;
    std::vector<EjeArrow> arrows;
    bool has_loops = false;        // reported, not forbidden

    std::vector<std::vector<int>> arrow_counts() const;
};

EjeQuiver eje_quiver(const QP& qp, const VertexSubset& sub, int max_degree = kDefaultMaxDegree);

// The eJe quiver as a plain QP (trivial potential) in the file format, with
// witness annotations.
QP eje_to_qp(const EjeQuiver& e);

} // namespace qpt

#endif
