#include "qpt/path_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qpt/matrix.hpp"

namespace qpt {

std::vector<std::vector<int>> enumerate_paths(const Quiver& q, int i, int j, int max_len) {
    std::vector<std::vector<int>> out;
    if (i == j) out.push_back({});
    std::vector<int> cur;
    // depth-first in arrow-index order gives lexicographic output per length;
    // collect by length afterwards to keep lengths grouped
    std::vector<std::vector<std::vector<int>>> by_len(max_len + 1);
    if (i == j) by_len[0].push_back({});
    std::function<void(int)> dfs = [&](int at) {
        if ((int)cur.size() >= max_len) return;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != at) continue;
            cur.push_back((int)a);
            if (q.arrows[a].tgt == j) by_len[cur.size()].push_back(cur);
            dfs(q.arrows[a].tgt);
            cur.pop_back();
        }
    };
    dfs(i);
    out.clear();
    for (int l = 0; l <= max_len; ++l)
        for (auto& p : by_len[l]) out.push_back(std::move(p));
    return out;
}

namespace {

// Per-degree path basis and the row space of the ideal slice. Paths are kept
// in a fixed lexicographic order so all choices downstream are deterministic.
struct DegreeData {
    std::vector<std::vector<int>> paths;          // all paths of this length
    std::map<std::vector<int>, std::size_t> index;
    RowSpace ideal;                               // degree slice of the relation ideal
    std::vector<std::size_t> basis;               // path indices spanning the quotient

    DegreeData() : ideal(0) {}
};

std::vector<std::vector<int>> paths_of_length(const Quiver& q, int len) {
    std::vector<std::vector<int>> out;
    if (len == 0) return out; // handled separately (one trivial path per vertex)
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int at) {
        if ((int)cur.size() == len) {
            out.push_back(cur);
            return;
        }
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != at) continue;
            cur.push_back((int)a);
            dfs(q.arrows[a].tgt);
            cur.pop_back();
        }
    };
    for (std::size_t v = 0; v < q.size(); ++v) dfs((int)v);
    std::sort(out.begin(), out.end());
    return out;
}

struct JacobianComputation {
    const QP& qp;
    RelationSet rels;
    std::vector<DegreeData> degrees; // index = path length

    explicit JacobianComputation(const QP& q) : qp(q), rels(relations(q)) {
        if (!rels.homogeneous)
            throw NonHomogeneousPotential("relations mix path lengths; exact grading unavailable");
    }

    // Builds degree d (paths, ideal slice, quotient basis). Returns the
    // quotient dimension.
    long long build_degree(int d) {
        while ((int)degrees.size() <= d) degrees.push_back(DegreeData());
        DegreeData& dd = degrees[d];
        if (d == 0) {
            dd.paths.assign(qp.quiver.size(), {});
            dd.ideal = RowSpace(qp.quiver.size());
            for (std::size_t v = 0; v < qp.quiver.size(); ++v) dd.basis.push_back(v);
            return (long long)qp.quiver.size();
        }
        dd.paths = paths_of_length(qp.quiver, d);
        dd.index.clear();
        for (std::size_t i = 0; i < dd.paths.size(); ++i) dd.index[dd.paths[i]] = i;
        dd.ideal = RowSpace(dd.paths.size());

        // degree-d slice of the two-sided ideal: p . rel . q with
        // len(p) + len(rel) + len(q) = d
        for (const auto& rel : rels.relations) {
            int rlen = (int)rel.paths.front().second.size();
            if (rlen > d) continue;
            int src = qp.quiver.arrows[rel.arrow].tgt; // relations run t(a) ~> s(a)
            int tgt = qp.quiver.arrows[rel.arrow].src;
            for (int lp = 0; lp + rlen <= d; ++lp) {
                int lq = d - rlen - lp;
                for (std::size_t v = 0; v < qp.quiver.size(); ++v) {
                    for (const auto& p : enumerate_exact(qp.quiver, (int)v, src, lp)) {
                        for (std::size_t w = 0; w < qp.quiver.size(); ++w) {
                            for (const auto& qpath : enumerate_exact(qp.quiver, tgt, (int)w, lq)) {
                                std::vector<Rat> row(dd.paths.size());
                                bool any = false;
                                for (const auto& [c, mid] : rel.paths) {
                                    std::vector<int> full = p;
                                    full.insert(full.end(), mid.begin(), mid.end());
                                    full.insert(full.end(), qpath.begin(), qpath.end());
                                    auto it = dd.index.find(full);
                                    if (it != dd.index.end()) {
                                        row[it->second] += c;
                                        any = true;
                                    }
                                }
                                if (any) dd.ideal.insert(std::move(row));
                            }
                        }
                    }
                }
            }
        }

        // quotient basis: paths independent modulo the slice, greedy in path order
        RowSpace span = dd.ideal;
        dd.basis.clear();
        for (std::size_t i = 0; i < dd.paths.size(); ++i) {
            std::vector<Rat> e(dd.paths.size());
            e[i] = Rat(1);
            if (span.insert(std::move(e))) dd.basis.push_back(i);
        }
        return (long long)dd.basis.size();
    }

    // normal form of a path against the degree slice, over the full path basis
    std::vector<Rat> normal_form(const std::vector<int>& path) {
        int d = (int)path.size();
        DegreeData& dd = degrees[d];
        std::vector<Rat> v(d == 0 ? qp.quiver.size() : dd.paths.size());
        if (d == 0)
            throw Error(ErrorKind::Internal, "Jacobian", "normal_form on trivial path");
        auto it = dd.index.find(path);
        if (it == dd.index.end())
            throw Error(ErrorKind::Internal, "Jacobian", "unknown path");
        v[it->second] = Rat(1);
        dd.ideal.reduce(v);
        return v;
    }

private:
    static std::vector<std::vector<int>> enumerate_exact(const Quiver& q, int i, int j, int len) {
        std::vector<std::vector<int>> out;
        if (len == 0) {
            if (i == j) out.push_back({});
            return out;
        }
        std::vector<int> cur;
        std::function<void(int)> dfs = [&](int at) {
            if ((int)cur.size() == len) {
                if (at == j) out.push_back(cur);
                return;
            }
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != at) continue;
                cur.push_back((int)a);
                dfs(q.arrows[a].tgt);
                cur.pop_back();
            }
        };
        dfs(i);
        return out;
    }
};

} // namespace

GradedDims jacobian_dims(const QP& qp, int max_degree) {
    JacobianComputation jc(qp);
    GradedDims out;
    out.bound = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        long long dim = jc.build_degree(d);
        bool have_paths = (d == 0) || !jc.degrees[d].paths.empty();
        if (!have_paths) {
            // acyclic exhaustion: no paths of this length at all
            out.verdict = Finiteness::Finite;
            break;
        }
        out.dims[d] = dim;
        if (dim == 0) {
            // graded and generated in degree 1: all later degrees vanish
            out.verdict = Finiteness::Finite;
            break;
        }
    }
    if (out.verdict == Finiteness::Finite) {
        out.total = 0;
        for (auto& [deg, x] : out.dims) out.total += x;
    }
    return out;
}

std::vector<std::vector<int>> EjeQuiver::arrow_counts() const {
    std::vector<std::vector<int>> m(vertices.size(), std::vector<int>(vertices.size(), 0));
    for (const auto& a : arrows) m[a.src][a.tgt]++;
    return m;
}

EjeQuiver eje_quiver(const QP& qp, const VertexSubset& sub, int max_degree) {
    JacobianComputation jc(qp);

    // grade-by-grade until the algebra is exhausted
    std::vector<long long> dims;
    int top = -1;
    for (int d = 0; d <= max_degree; ++d) {
        long long dim = jc.build_degree(d);
        dims.push_back(dim);
        if (dim == 0) {
            top = d;
            break;
        }
    }
    if (top < 0) throw JacobianNotFinite("no vanishing degree within the bound");

    const auto& icomp = sub.complement;
    auto comp_pos = [&](int v) {
        auto it = std::lower_bound(icomp.begin(), icomp.end(), v);
        return (it != icomp.end() && *it == v) ? (int)(it - icomp.begin()) : -1;
    };

    EjeQuiver out;
    out.vertices = icomp;
    for (int v : icomp) out.vertex_names.push_back(qp.quiver.vertices[v]);

    // e (rad J) e per endpoint pair: basis paths of J, degree >= 1, with both
    // endpoints in I^c. rad^2 of eJe is spanned by products of two such
    // elements (the intermediate vertex must lie in I^c as well).
    struct BasisElt {
        int degree;
        std::vector<int> path;
    };
    auto endpoints = [&](const std::vector<int>& p) {
        return std::make_pair(qp.quiver.arrows[p.front()].src, qp.quiver.arrows[p.back()].tgt);
    };
    std::map<std::pair<int, int>, std::vector<BasisElt>> rad;
    for (int d = 1; d < top; ++d) {
        for (std::size_t bi : jc.degrees[d].basis) {
            const auto& p = jc.degrees[d].paths[bi];
            auto [s, t] = endpoints(p);
            if (comp_pos(s) < 0 || comp_pos(t) < 0) continue;
            rad[{s, t}].push_back({d, p});
        }
    }

    for (auto& [st, elems] : rad) {
        auto [s, t] = st;
        // rad^2 slice for (s, t): products x.y through a middle I^c vertex,
        // expressed in normal form per degree
        std::map<int, RowSpace> rad2; // degree -> rowspace over that degree's path basis
        for (int m : icomp) {
            for (auto& [ab, xs] : rad) {
                if (ab.first != s || ab.second != m) continue;
                for (auto& [cd, ys] : rad) {
                    if (cd.first != m || cd.second != t) continue;
                    for (const auto& x : xs)
                        for (const auto& y : ys) {
                            int d = x.degree + y.degree;
                            if (d >= top) continue;
                            std::vector<int> prod = x.path;
                            prod.insert(prod.end(), y.path.begin(), y.path.end());
                            auto nf = jc.normal_form(prod);
                            auto it = rad2.find(d);
                            if (it == rad2.end())
                                it = rad2.emplace(d, RowSpace(jc.degrees[d].paths.size())).first;
                            it->second.insert(std::move(nf));
                        }
                }
            }
        }
        // arrows: basis of rad/rad^2, greedy over shortest witness then lex
        std::vector<BasisElt> sorted = elems;
        std::stable_sort(sorted.begin(), sorted.end(), [](const BasisElt& a, const BasisElt& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            return a.path < b.path;
        });
        std::map<int, RowSpace> span = rad2;
        for (const auto& e : sorted) {
            auto it = span.find(e.degree);
            if (it == span.end())
                it = span.emplace(e.degree, RowSpace(jc.degrees[e.degree].paths.size())).first;
            auto nf = jc.normal_form(e.path);
            if (!it->second.insert(std::move(nf))) continue;
            EjeArrow a;
            a.src = comp_pos(s);
            a.tgt = comp_pos(t);
            a.witness = e.path;
            for (std::size_t i = 0; i < e.path.size(); ++i)
                a.witness_display += (i ? "." : "") + qp.quiver.arrows[e.path[i]].id;
            if (s == t) out.has_loops = true;
            out.arrows.push_back(std::move(a));
        }
    }
    // deterministic arrow order
    std::stable_sort(out.arrows.begin(), out.arrows.end(), [](const EjeArrow& a, const EjeArrow& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        if (a.witness.size() != b.witness.size()) return a.witness.size() < b.witness.size();
        return a.witness < b.witness;
    });
    return out;
}

QP eje_to_qp(const EjeQuiver& e) {
    QP qp;
    for (const auto& n : e.vertex_names) qp.quiver.vertices.push_back(n);
    int idx = 0;
    for (const auto& a : e.arrows)
        qp.quiver.arrows.push_back({"e" + std::to_string(++idx), a.src, a.tgt});
    return qp;
}

} // namespace qpt
