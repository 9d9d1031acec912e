#ifndef QPT_REPRESENTATION_HPP
#define QPT_REPRESENTATION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpt/matrix.hpp"
#include "qpt/quiver.hpp"

namespace qpt {

// Exact object calculus for the 3-Calabi-Yau category attached to an acyclic
// quiver of finite representation type with trivial potential. Objects are
// shifted indecomposable modules; graded Homs are computed in the bounded
// derived category of the hereditary path algebra, and the Calabi-Yau Ext^1
// adds the Serre-dual summand:
//
//   Ext^1_CY3(a, b) = Hom_db(a, b[1])  (+)  Hom_db(b, a[2])^dual.

struct Representation {
    IntVec dims;                    // per-vertex dimensions
    std::vector<RatMatrix> mats;    // one per arrow, shape dim(tgt) x dim(src)
};

// A shifted indecomposable (kind Representable), or an opaque token carrying
// provenance when an object leaves the shifted-module regime.
struct CYObject {
    bool representable = false;
    IntVec root;     // dimension vector of the indecomposable
    int shift = 0;
    IntVec kclass;   // class in K_0 w.r.t. the simples; defined for both kinds
    std::string provenance; // opaque only: parent heart key + tilt label path

    static CYObject simple(std::size_t n, int vertex, int shift);
    static CYObject module(IntVec root, int shift);
    static CYObject opaque(IntVec kclass, std::string provenance);

    CYObject shifted(int by) const;
    bool operator==(const CYObject& o) const;
};

// Display convention: dimension digits then an underscore and shift+1, so a
// module M prints as ..._1 and M[1] as ..._2.
std::string display_object(const IntVec& root, int shift);

struct GradedHomDims {
    std::map<int, long long> dims; // degree -> dimension, zeros omitted
};

struct ExtCY3 {
    long long total = 0;
    long long db = 0;   // Hom_db(a, b[1])
    long long dual = 0; // Hom_db(b, a[2])^dual
};

// Indecomposables, Hom/Ext and cones over one fixed quiver. Instances are
// immutable after construction and shared read-only.
class Cy3Context {
public:
    // Requires a simply-laced Dynkin underlying graph (acyclic orientation),
    // else NotFiniteType.
    explicit Cy3Context(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    std::size_t n() const { return quiver_.size(); }

    // one representation per positive root, ordered by (height, lex)
    const std::vector<Representation>& indecomposables() const { return indecs_; }
    bool is_root(const IntVec& d) const;
    const Representation& module_of(const IntVec& root) const;

    long long hom(const IntVec& a, const IntVec& b) const;  // Hom_mod(M_a, M_b)
    long long ext1(const IntVec& a, const IntVec& b) const; // Ext^1_mod = hom - <a,b>
    long long euler(const IntVec& a, const IntVec& b) const;

    GradedHomDims hom_db(const CYObject& a, const CYObject& b) const;
    ExtCY3 ext1_cy3(const CYObject& a, const CYObject& b) const;

    // Cone of the universal extension along a forward tilt at S: the triangle
    // S (x) Ext^1(Sj, S) -> F -> Sj. Returns Sj when the Ext group vanishes,
    // an opaque object when the class leaves the shifted-module regime.
    CYObject cone_forward(const CYObject& S, const CYObject& Sj) const;
    // Dual triangle Sj -> E -> S (x) Ext^1(S, Sj).
    CYObject cone_backward(const CYObject& S, const CYObject& Sj) const;

    bool in_subcategory(const CYObject& a, const VertexSubset& sub) const;

private:
    struct UniversalMap {
        std::vector<long long> ker_dims, coker_dims;
        bool injective = false, surjective = false;
    };
    // the universal map MT -> MS^m, m = dim Hom(MT, MS)
    UniversalMap universal_into(const IntVec& rootT, const IntVec& rootS) const;
    // the universal map MS^m -> MT
    UniversalMap universal_from(const IntVec& rootS, const IntVec& rootT) const;

    CYObject classify_module(IntVec dims, int shift, const IntVec& kclass,
                             const std::string& why) const;

    Quiver quiver_;
    std::vector<Representation> indecs_;
    std::map<IntVec, std::size_t> root_index_;
    mutable std::map<std::pair<IntVec, IntVec>, long long> hom_cache_;
};

// Shared, memoized contexts keyed by quiver structure.
std::shared_ptr<const Cy3Context> cy3_context(const Quiver& q);

} // namespace qpt

#endif
