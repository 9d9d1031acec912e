#include "qpt/representation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qpt {

// ---------------------------------------------------------------------------
// CYObject

CYObject CYObject::simple(std::size_t n, int vertex, int shift) {
    IntVec root(n, 0);
    root[vertex] = 1;
    return module(std::move(root), shift);
}

CYObject CYObject::module(IntVec root, int shift) {
    CYObject o;
    o.representable = true;
    o.root = std::move(root);
    o.shift = shift;
    o.kclass.assign(o.root.size(), 0);
    long long sgn = (shift % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < o.root.size(); ++i) o.kclass[i] = sgn * o.root[i];
    return o;
}

CYObject CYObject::opaque(IntVec kclass, std::string provenance) {
    CYObject o;
    o.representable = false;
    o.kclass = std::move(kclass);
    o.provenance = std::move(provenance);
    return o;
}

CYObject CYObject::shifted(int by) const {
    if (!representable) {
        CYObject o = *this;
        for (auto& x : o.kclass) x = (by % 2 == 0) ? x : -x;
        o.provenance += "[" + std::to_string(by) + "]";
        return o;
    }
    return module(root, shift + by);
}

bool CYObject::operator==(const CYObject& o) const {
    if (representable != o.representable) return false;
    if (representable) return root == o.root && shift == o.shift;
    return provenance == o.provenance;
}

std::string display_object(const IntVec& root, int shift) {
    bool wide = false;
    for (long long d : root)
        if (d > 9) wide = true;
    std::string s;
    for (std::size_t i = 0; i < root.size(); ++i) {
        if (wide && i) s += "-";
        s += std::to_string(root[i]);
    }
    return s + "_" + std::to_string(shift + 1);
}

// ---------------------------------------------------------------------------
// Finite-type recognition and positive roots

namespace {

void require_finite_type(const Quiver& q) {
    std::set<std::pair<int, int>> und;
    for (const auto& a : q.arrows) {
        auto e = std::minmax(a.src, a.tgt);
        if (a.src == a.tgt) throw NotFiniteType("loop at vertex " + q.vertices[a.src]);
        if (!und.insert({e.first, e.second}).second)
            throw NotFiniteType("multiple edges between " + q.vertices[a.src] + " and " +
                                q.vertices[a.tgt]);
    }
    std::size_t n = q.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{(int)s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [x, y] : und) {
                int w = (x == v) ? y : (y == v ? x : -1);
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (std::size_t v = 0; v < n; ++v)
            if (comp[v] == c) verts.push_back((int)v);
        std::size_t edges = 0;
        std::map<int, int> deg;
        for (auto& [x, y] : und)
            if (comp[x] == c) {
                ++edges;
                deg[x]++;
                deg[y]++;
            }
        if (edges != verts.size() - 1) throw NotFiniteType("component contains a cycle");
        std::vector<int> branch;
        for (auto& [v, d] : deg) {
            if (d > 3) throw NotFiniteType("vertex of degree > 3");
            if (d == 3) branch.push_back(v);
        }
        if (branch.size() > 1) throw NotFiniteType("two branch vertices");
        if (branch.empty()) continue; // path: type A
        int b = branch[0];
        std::vector<int> legs;
        for (auto& [x, y] : und) {
            if (comp[x] != c) continue;
            int first = (x == b) ? y : (y == b ? x : -1);
            if (first < 0) continue;
            int len = 1, prev = b, cur = first;
            while (true) {
                int next = -1;
                for (auto& [p, r] : und) {
                    int w = (p == cur) ? r : (r == cur ? p : -1);
                    if (w >= 0 && w != prev) next = w;
                }
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        bool ok = (legs[0] == 1 && legs[1] == 1) ||               // D
                  (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4); // E6, E7, E8
        if (!ok) throw NotFiniteType("branch leg profile outside ADE");
    }
}

std::vector<std::vector<int>> underlying_adjacency(const Quiver& q) {
    std::vector<std::vector<int>> adj(q.size(), std::vector<int>(q.size(), 0));
    for (const auto& a : q.arrows) {
        adj[a.src][a.tgt]++;
        adj[a.tgt][a.src]++;
    }
    return adj;
}

IntVec reflect(const std::vector<std::vector<int>>& adj, const IntVec& d, int k) {
    long long pair = 2 * d[k];
    for (std::size_t j = 0; j < d.size(); ++j)
        if ((int)j != k) pair -= adj[k][j] * d[j];
    IntVec out = d;
    out[k] -= pair;
    return out;
}

std::vector<IntVec> positive_roots(const Quiver& q) {
    auto adj = underlying_adjacency(q);
    std::set<IntVec> roots;
    std::vector<IntVec> todo;
    for (std::size_t v = 0; v < q.size(); ++v) {
        IntVec e(q.size(), 0);
        e[v] = 1;
        roots.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        IntVec d = todo.back();
        todo.pop_back();
        for (std::size_t k = 0; k < q.size(); ++k) {
            IntVec r = reflect(adj, d, (int)k);
            bool positive = true;
            for (long long x : r)
                if (x < 0) positive = false;
            if (positive && roots.insert(r).second) todo.push_back(r);
        }
        if (roots.size() > 4000) throw NotFiniteType("root closure does not terminate");
    }
    std::vector<IntVec> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
        long long ha = std::accumulate(a.begin(), a.end(), 0LL);
        long long hb = std::accumulate(b.begin(), b.end(), 0LL);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Reflection-functor construction of indecomposables

struct OrientedQuiver {
    std::vector<std::pair<int, int>> arrows; // index tracks the underlying edge
};

OrientedQuiver reflect_quiver(const OrientedQuiver& q, int v) {
    OrientedQuiver out = q;
    for (auto& [s, t] : out.arrows)
        if (s == v || t == v) std::swap(s, t);
    return out;
}

struct Rep {
    IntVec dims;
    std::vector<RatMatrix> mats;
};

// Inverse reflection functor at a source v of q; the output is a
// representation of out_q, where v is a sink. The new space at v is the
// cokernel of M_v -> sum of M_{t(a)} over arrows a: v -> t(a).
Rep apply_minus_functor(const OrientedQuiver& q, const Rep& m, int v,
                        const OrientedQuiver& out_q) {
    std::vector<std::size_t> touched;
    std::size_t total = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].first == v) {
            touched.push_back(a);
            total += (std::size_t)m.dims[q.arrows[a].second];
        }

    RatMatrix big(total, (std::size_t)m.dims[v]);
    std::size_t row0 = 0;
    for (std::size_t a : touched) {
        const RatMatrix& ma = m.mats[a];
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t c = 0; c < ma.cols(); ++c) big.at(row0 + r, c) = ma.at(r, c);
        row0 += (std::size_t)m.dims[q.arrows[a].second];
    }

    // quotient functionals from rref([big | I]): rows whose pivot falls in the
    // identity block kill the image of big
    RatMatrix work(total, big.cols() + total);
    for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t c = 0; c < big.cols(); ++c) work.at(r, c) = big.at(r, c);
        work.at(r, big.cols() + r) = Rat(1);
    }
    work.rref();
    std::vector<std::vector<Rat>> quot_rows;
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t c = 0;
        while (c < big.cols() && work.at(r, c).is_zero()) ++c;
        if (c < big.cols()) continue;
        std::vector<Rat> row(total);
        for (std::size_t j = 0; j < total; ++j) row[j] = work.at(r, big.cols() + j);
        quot_rows.push_back(std::move(row));
    }
    std::size_t new_dim = quot_rows.size();

    Rep out;
    out.dims = m.dims;
    out.dims[v] = (long long)new_dim;
    out.mats.assign(out_q.arrows.size(), RatMatrix());
    for (std::size_t a = 0; a < out_q.arrows.size(); ++a) {
        auto [s, t] = out_q.arrows[a];
        if (t != v) {
            out.mats[a] = m.mats[a];
            continue;
        }
        std::size_t off = 0;
        for (std::size_t b : touched) {
            if (b == a) break;
            off += (std::size_t)m.dims[q.arrows[b].second];
        }
        RatMatrix res(new_dim, (std::size_t)m.dims[s]);
        for (std::size_t r = 0; r < new_dim; ++r)
            for (std::size_t c = 0; c < (std::size_t)m.dims[s]; ++c)
                res.at(r, c) = quot_rows[r][off + c];
        out.mats[a] = std::move(res);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Cy3Context

Cy3Context::Cy3Context(const Quiver& q) : quiver_(q) {
    require_finite_type(q);
    auto roots = positive_roots(q);
    auto adj = underlying_adjacency(q);

    // admissible vertex order: repeatedly peel a sink
    OrientedQuiver oq;
    for (const auto& a : q.arrows) oq.arrows.push_back({a.src, a.tgt});
    std::vector<int> order;
    {
        std::vector<char> used(q.size(), 0);
        for (std::size_t step = 0; step < q.size(); ++step) {
            for (std::size_t v = 0; v < q.size(); ++v) {
                if (used[v]) continue;
                bool sink = true;
                for (auto& [s, t] : oq.arrows)
                    if (s == (int)v && !used[t]) sink = false;
                if (sink) {
                    order.push_back((int)v);
                    used[v] = 1;
                    break;
                }
            }
        }
    }

    for (const auto& root : roots) {
        // walk the root down to a simple along the admissible sequence; a
        // reflection annihilates a positive root exactly when it IS that
        // simple root, so stop just before
        std::vector<int> steps;
        std::vector<OrientedQuiver> quivers{oq};
        IntVec d = root;
        int simple_at = -1;
        for (int round = 0; round < 1000 && simple_at < 0; ++round) {
            for (int v : order) {
                if (std::accumulate(d.begin(), d.end(), 0LL) == 1) break;
                steps.push_back(v);
                d = reflect(adj, d, v);
                quivers.push_back(reflect_quiver(quivers.back(), v));
            }
            if (std::accumulate(d.begin(), d.end(), 0LL) == 1)
                for (std::size_t v = 0; v < d.size(); ++v)
                    if (d[v] == 1) simple_at = (int)v;
        }
        if (simple_at < 0)
            throw Error(ErrorKind::Internal, "Indecomposables", "root reduction did not terminate");

        Rep m;
        m.dims.assign(q.size(), 0);
        m.dims[simple_at] = 1;
        m.mats.clear();
        for (std::size_t a = 0; a < oq.arrows.size(); ++a) {
            auto [s, t] = quivers.back().arrows[a];
            m.mats.push_back(RatMatrix((std::size_t)m.dims[t], (std::size_t)m.dims[s]));
        }
        for (std::size_t i = steps.size(); i-- > 0;)
            m = apply_minus_functor(quivers[i + 1], m, steps[i], quivers[i]);

        if (m.dims != root)
            throw Error(ErrorKind::Internal, "Indecomposables",
                        "reflection functors disagree with the root");
        Representation rep;
        rep.dims = m.dims;
        rep.mats = std::move(m.mats);
        root_index_[root] = indecs_.size();
        indecs_.push_back(std::move(rep));
    }
}

bool Cy3Context::is_root(const IntVec& d) const { return root_index_.count(d) > 0; }

const Representation& Cy3Context::module_of(const IntVec& root) const {
    auto it = root_index_.find(root);
    if (it == root_index_.end())
        throw Error(ErrorKind::Internal, "Cy3Context", "not a positive root");
    return indecs_[it->second];
}

long long Cy3Context::euler(const IntVec& a, const IntVec& b) const {
    long long s = 0;
    for (std::size_t v = 0; v < a.size(); ++v) s += a[v] * b[v];
    for (const auto& arr : quiver_.arrows) s -= a[arr.src] * b[arr.tgt];
    return s;
}

namespace {

// The intertwiner system phi_tgt . M_a = N_a . phi_src, unknowns packed per
// vertex as offset[v] + r * dimM_v + c for phi_v[r][c].
struct HomSystem {
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    RatMatrix sys;
};

HomSystem hom_system(const Quiver& q, const Representation& M, const Representation& N) {
    HomSystem h;
    h.offset.assign(q.size() + 1, 0);
    for (std::size_t v = 0; v < q.size(); ++v)
        h.offset[v + 1] = h.offset[v] + (std::size_t)(M.dims[v] * N.dims[v]);
    h.unknowns = h.offset[q.size()];
    std::size_t eqs = 0;
    for (const auto& arr : q.arrows) eqs += (std::size_t)(N.dims[arr.tgt] * M.dims[arr.src]);
    h.sys = RatMatrix(eqs, h.unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& arr = q.arrows[ai];
        for (long long r = 0; r < N.dims[arr.tgt]; ++r)
            for (long long c = 0; c < M.dims[arr.src]; ++c) {
                for (long long s = 0; s < M.dims[arr.tgt]; ++s)
                    h.sys.at(row, h.offset[arr.tgt] + (std::size_t)(r * M.dims[arr.tgt] + s)) +=
                        M.mats[ai].at((std::size_t)s, (std::size_t)c);
                for (long long s = 0; s < N.dims[arr.src]; ++s)
                    h.sys.at(row, h.offset[arr.src] + (std::size_t)(s * M.dims[arr.src] + c)) -=
                        N.mats[ai].at((std::size_t)r, (std::size_t)s);
                ++row;
            }
    }
    return h;
}

} // namespace

long long Cy3Context::hom(const IntVec& a, const IntVec& b) const {
    auto key = std::make_pair(a, b);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
    HomSystem h = hom_system(quiver_, module_of(a), module_of(b));
    long long dim = h.unknowns ? (long long)h.sys.kernel_dim() : 0;
    hom_cache_[key] = dim;
    return dim;
}

long long Cy3Context::ext1(const IntVec& a, const IntVec& b) const {
    return hom(a, b) - euler(a, b);
}

GradedHomDims Cy3Context::hom_db(const CYObject& a, const CYObject& b) const {
    if (!a.representable || !b.representable) throw OpaqueOperand("hom_db");
    GradedHomDims out;
    int base = a.shift - b.shift; // Hom_db(a, b[base]) = module Hom
    long long h = hom(a.root, b.root);
    long long e = ext1(a.root, b.root);
    if (h) out.dims[base] = h;
    if (e) out.dims[base + 1] = e;
    return out;
}

ExtCY3 Cy3Context::ext1_cy3(const CYObject& a, const CYObject& b) const {
    if (!a.representable || !b.representable) throw OpaqueOperand("ext1_cy3");
    ExtCY3 out;
    int rel = 1 + b.shift - a.shift; // Hom_db(a, b[1]) at module degree rel
    if (rel == 0) out.db = hom(a.root, b.root);
    else if (rel == 1) out.db = ext1(a.root, b.root);
    int rel2 = 2 + a.shift - b.shift; // Hom_db(b, a[2]) at module degree rel2
    if (rel2 == 0) out.dual = hom(b.root, a.root);
    else if (rel2 == 1) out.dual = ext1(b.root, a.root);
    out.total = out.db + out.dual;
    return out;
}

Cy3Context::UniversalMap Cy3Context::universal_into(const IntVec& rootT,
                                                    const IntVec& rootS) const {
    const Representation& M = module_of(rootT);
    const Representation& N = module_of(rootS);
    HomSystem h = hom_system(quiver_, M, N);
    auto basis = h.sys.nullspace();
    std::size_t m = basis.size();

    UniversalMap out;
    out.ker_dims.assign(quiver_.size(), 0);
    out.coker_dims.assign(quiver_.size(), 0);
    bool inj = true, surj = true;
    for (std::size_t v = 0; v < quiver_.size(); ++v) {
        RatMatrix f(m * (std::size_t)N.dims[v], (std::size_t)M.dims[v]);
        for (std::size_t b = 0; b < m; ++b)
            for (long long r = 0; r < N.dims[v]; ++r)
                for (long long c = 0; c < M.dims[v]; ++c)
                    f.at(b * (std::size_t)N.dims[v] + (std::size_t)r, (std::size_t)c) =
                        basis[b][h.offset[v] + (std::size_t)(r * M.dims[v] + c)];
        std::size_t rank = f.rank();
        out.ker_dims[v] = M.dims[v] - (long long)rank;
        out.coker_dims[v] = (long long)(m * (std::size_t)N.dims[v] - rank);
        if (out.ker_dims[v]) inj = false;
        if (out.coker_dims[v]) surj = false;
    }
    out.injective = inj;
    out.surjective = surj;
    return out;
}

Cy3Context::UniversalMap Cy3Context::universal_from(const IntVec& rootS,
                                                    const IntVec& rootT) const {
    const Representation& M = module_of(rootS);
    const Representation& N = module_of(rootT);
    HomSystem h = hom_system(quiver_, M, N);
    auto basis = h.sys.nullspace();
    std::size_t m = basis.size();

    UniversalMap out;
    out.ker_dims.assign(quiver_.size(), 0);
    out.coker_dims.assign(quiver_.size(), 0);
    bool inj = true, surj = true;
    for (std::size_t v = 0; v < quiver_.size(); ++v) {
        RatMatrix g((std::size_t)N.dims[v], m * (std::size_t)M.dims[v]);
        for (std::size_t b = 0; b < m; ++b)
            for (long long r = 0; r < N.dims[v]; ++r)
                for (long long c = 0; c < M.dims[v]; ++c)
                    g.at((std::size_t)r, b * (std::size_t)M.dims[v] + (std::size_t)c) =
                        basis[b][h.offset[v] + (std::size_t)(r * M.dims[v] + c)];
        std::size_t rank = g.rank();
        out.ker_dims[v] = (long long)(m * (std::size_t)M.dims[v] - rank);
        out.coker_dims[v] = N.dims[v] - (long long)rank;
        if (out.ker_dims[v]) inj = false;
        if (out.coker_dims[v]) surj = false;
    }
    out.injective = inj;
    out.surjective = surj;
    return out;
}

CYObject Cy3Context::classify_module(IntVec dims, int shift, const IntVec& kclass,
                                     const std::string& why) const {
    bool zero = true;
    for (long long d : dims)
        if (d) zero = false;
    if (zero || !is_root(dims)) return CYObject::opaque(kclass, why + ":non-root");
    return CYObject::module(std::move(dims), shift);
}

CYObject Cy3Context::cone_forward(const CYObject& S, const CYObject& Sj) const {
    ExtCY3 e = ext1_cy3(Sj, S);
    if (e.total == 0) return Sj;
    IntVec kclass(S.kclass.size(), 0);
    for (std::size_t i = 0; i < kclass.size(); ++i)
        kclass[i] = Sj.kclass[i] + e.total * S.kclass[i];
    std::string why = "fcone(" + display_object(S.root, S.shift) + "," +
                      display_object(Sj.root, Sj.shift) + ")";
    if (e.dual != 0) return CYObject::opaque(kclass, why + ":dual-class");

    if (Sj.shift == S.shift) {
        // genuine module extension 0 -> MS^m -> F -> MT -> 0
        IntVec d(S.root.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = Sj.root[i] + e.db * S.root[i];
        return classify_module(std::move(d), S.shift, kclass, why);
    }
    if (Sj.shift == S.shift + 1) {
        // cone of the universal module map MT -> MS^m one shift down:
        // cokernel if injective, shifted kernel if surjective
        UniversalMap f = universal_into(Sj.root, S.root);
        if (f.injective) return classify_module(f.coker_dims, S.shift, kclass, why);
        if (f.surjective) return classify_module(f.ker_dims, S.shift + 1, kclass, why);
        return CYObject::opaque(kclass, why + ":mixed-cone");
    }
    return CYObject::opaque(kclass, why + ":shift-gap");
}

CYObject Cy3Context::cone_backward(const CYObject& S, const CYObject& Sj) const {
    ExtCY3 e = ext1_cy3(S, Sj);
    if (e.total == 0) return Sj;
    IntVec kclass(S.kclass.size(), 0);
    for (std::size_t i = 0; i < kclass.size(); ++i)
        kclass[i] = Sj.kclass[i] + e.total * S.kclass[i];
    std::string why = "bcone(" + display_object(S.root, S.shift) + "," +
                      display_object(Sj.root, Sj.shift) + ")";
    if (e.dual != 0) return CYObject::opaque(kclass, why + ":dual-class");

    if (Sj.shift == S.shift) {
        // co-extension 0 -> MT -> E -> MS^m -> 0
        IntVec d(S.root.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = Sj.root[i] + e.db * S.root[i];
        return classify_module(std::move(d), S.shift, kclass, why);
    }
    if (Sj.shift == S.shift - 1) {
        // cone of the universal module map MS^m -> MT one shift down:
        // shifted kernel if surjective, cokernel if injective
        UniversalMap g = universal_from(S.root, Sj.root);
        if (g.surjective) return classify_module(g.ker_dims, S.shift, kclass, why);
        if (g.injective) return classify_module(g.coker_dims, S.shift - 1, kclass, why);
        return CYObject::opaque(kclass, why + ":mixed-cone");
    }
    return CYObject::opaque(kclass, why + ":shift-gap");
}

bool Cy3Context::in_subcategory(const CYObject& a, const VertexSubset& sub) const {
    if (!a.representable) throw OpaqueOperand("in_subcategory");
    bool any = false;
    for (std::size_t v = 0; v < a.root.size(); ++v) {
        if (a.root[v] == 0) continue;
        any = true;
        if (!sub.contains((int)v)) return false;
    }
    return any;
}

namespace {

std::string quiver_fingerprint(const Quiver& q) {
    std::ostringstream os;
    os << q.size() << ";";
    std::vector<std::pair<int, int>> arr;
    for (const auto& a : q.arrows) arr.push_back({a.src, a.tgt});
    std::sort(arr.begin(), arr.end());
    for (auto& [s, t] : arr) os << s << ">" << t << ",";
    return os.str();
}

} // namespace

std::shared_ptr<const Cy3Context> cy3_context(const Quiver& q) {
    static std::map<std::string, std::shared_ptr<const Cy3Context>> cache;
    std::string key = quiver_fingerprint(q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const Cy3Context>(q);
    cache[key] = ctx;
    return ctx;
}

} // namespace qpt
