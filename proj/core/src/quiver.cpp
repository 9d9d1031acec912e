#include "qpt/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qpt {

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return (int)i;
    return -1;
}

int Quiver::arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return (int)i;
    return -1;
}

std::vector<std::vector<int>> Quiver::arrow_counts() const {
    std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
    for (const auto& a : arrows) m[a.src][a.tgt]++;
    return m;
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm.
    std::vector<int> indeg(size(), 0);
    for (const auto& a : arrows) indeg[a.tgt]++;
    std::vector<int> stack;
    for (std::size_t v = 0; v < size(); ++v)
        if (indeg[v] == 0) stack.push_back((int)v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.src == v && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
    }
    return seen == size();
}

// ---------------------------------------------------------------------------
// Potential normalization

namespace {

std::vector<int> min_rotation(const std::vector<int>& cyc) {
    std::vector<int> best = cyc;
    std::vector<int> cur = cyc;
    for (std::size_t r = 1; r < cyc.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

} // namespace

void Potential::normalize() {
    std::map<std::vector<int>, Rat> acc;
    for (auto& t : terms) {
        if (t.coeff.is_zero() || t.arrows.empty()) continue;
        acc[min_rotation(t.arrows)] += t.coeff;
    }
    terms.clear();
    for (auto& [cyc, c] : acc)
        if (!c.is_zero()) terms.push_back({c, cyc});
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Diagnostic> validate_qp(const QP& qp) {
    std::vector<Diagnostic> out;
    const Quiver& q = qp.quiver;

    std::set<std::string> vnames;
    for (const auto& v : q.vertices)
        if (!vnames.insert(v).second)
            out.push_back({"duplicate-vertex", "vertex id '" + v + "' repeats"});
    std::set<std::string> anames;
    for (const auto& a : q.arrows) {
        if (!anames.insert(a.id).second)
            out.push_back({"duplicate-arrow", "arrow id '" + a.id + "' repeats"});
        if (a.src < 0 || a.src >= (int)q.size() || a.tgt < 0 || a.tgt >= (int)q.size()) {
            out.push_back({"dangling-arrow", "arrow '" + a.id + "' has an endpoint outside the vertex set"});
            continue;
        }
        if (a.src == a.tgt)
            out.push_back({"loop", "arrow '" + a.id + "' is a loop at vertex '" + q.vertices[a.src] + "'"});
    }
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[i].src == q.arrows[j].tgt && q.arrows[i].tgt == q.arrows[j].src &&
                q.arrows[i].src != q.arrows[i].tgt)
                out.push_back({"two-cycle", "arrows '" + q.arrows[i].id + "' and '" + q.arrows[j].id +
                                                "' form a 2-cycle"});

    for (const auto& t : qp.potential.terms) {
        if (t.coeff.is_zero()) out.push_back({"zero-coefficient", "potential term with zero coefficient"});
        if (t.arrows.empty()) {
            out.push_back({"empty-cycle", "potential term with empty cycle"});
            continue;
        }
        bool ok = true;
        for (int ai : t.arrows)
            if (ai < 0 || ai >= (int)q.arrows.size()) {
                out.push_back({"unknown-arrow", "potential cycle references a missing arrow"});
                ok = false;
            }
        if (!ok) continue;
        for (std::size_t p = 0; p < t.arrows.size(); ++p) {
            const Arrow& a = q.arrows[t.arrows[p]];
            const Arrow& b = q.arrows[t.arrows[(p + 1) % t.arrows.size()]];
            if (a.tgt != b.src) {
                out.push_back({"non-composable", "potential cycle is not cyclically composable"});
                break;
            }
        }
    }
    // duplicate cycles up to rotation
    std::map<std::vector<int>, int> seen;
    for (const auto& t : qp.potential.terms)
        if (!t.arrows.empty() && ++seen[min_rotation(t.arrows)] == 2)
            out.push_back({"duplicate-cycle", "potential stores the same cycle twice"});
    return out;
}

bool is_valid(const QP& qp) { return validate_qp(qp).empty(); }

// ---------------------------------------------------------------------------
// Mutation

namespace {

std::string unique_id(std::set<std::string>& taken, std::string want) {
    while (taken.count(want)) want += "'";
    taken.insert(want);
    return want;
}

} // namespace

RawQP premutate(const QP& qp, int k) {
    const Quiver& q = qp.quiver;
    if (k < 0 || k >= (int)q.size())
        throw UnknownVertex("no vertex with index " + std::to_string(k));

    RawQP out;
    out.quiver.vertices = q.vertices;

    std::set<std::string> taken;
    // old arrow index -> new index (for untouched arrows), reversed index, and
    // the composite table.
    std::vector<int> kept(q.arrows.size(), -1), reversed(q.arrows.size(), -1);
    std::vector<int> ins, outs;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        if (a.tgt == k) ins.push_back((int)i);
        else if (a.src == k) outs.push_back((int)i);
    }
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        if (a.src != k && a.tgt != k) {
            kept[i] = (int)out.quiver.arrows.size();
            out.quiver.arrows.push_back({unique_id(taken, a.id), a.src, a.tgt});
        }
    }
    for (int i : ins) {
        const Arrow& a = q.arrows[i];
        reversed[i] = (int)out.quiver.arrows.size();
        out.quiver.arrows.push_back({unique_id(taken, a.id + "*"), a.tgt, a.src});
    }
    for (int i : outs) {
        const Arrow& a = q.arrows[i];
        reversed[i] = (int)out.quiver.arrows.size();
        out.quiver.arrows.push_back({unique_id(taken, a.id + "*"), a.tgt, a.src});
    }
    std::map<std::pair<int, int>, int> comp; // (in-arrow, out-arrow) -> composite
    for (int a : ins)
        for (int b : outs) {
            comp[{a, b}] = (int)out.quiver.arrows.size();
            out.quiver.arrows.push_back({unique_id(taken, "[" + q.arrows[a].id + q.arrows[b].id + "]"),
                                         q.arrows[a].src, q.arrows[b].tgt});
        }

    // W~ : replace each passage a (into k) . b (out of k) by [ab].
    for (const auto& t : qp.potential.terms) {
        std::vector<int> cyc = t.arrows;
        bool touches = false;
        for (int ai : cyc)
            if (q.arrows[ai].src == k || q.arrows[ai].tgt == k) touches = true;
        std::vector<int> rewritten;
        if (!touches) {
            for (int ai : cyc) rewritten.push_back(kept[ai]);
        } else {
            // rotate so the cycle does not close at k
            std::size_t start = 0;
            while (start < cyc.size() && q.arrows[cyc[start]].src == k) ++start;
            std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
            for (std::size_t i = 0; i < cyc.size();) {
                if (q.arrows[cyc[i]].tgt == k) {
                    rewritten.push_back(comp.at({cyc[i], cyc[i + 1]}));
                    i += 2;
                } else {
                    rewritten.push_back(kept[cyc[i]]);
                    i += 1;
                }
            }
        }
        out.potential.terms.push_back({t.coeff, rewritten});
    }
    // + sum over passages: [ab] b* a*
    for (int a : ins)
        for (int b : outs)
            out.potential.terms.push_back({Rat(1), {comp.at({a, b}), reversed[b], reversed[a]}});
    out.potential.normalize();
    return out;
}

namespace {

// coefficient-weighted paths, used for cyclic derivatives and substitution
using PathCombo = std::vector<std::pair<Rat, std::vector<int>>>;

PathCombo cyclic_derivative(const Potential& w, int arrow) {
    std::map<std::vector<int>, Rat> acc;
    for (const auto& t : w.terms)
        for (std::size_t p = 0; p < t.arrows.size(); ++p) {
            if (t.arrows[p] != arrow) continue;
            std::vector<int> rest;
            for (std::size_t j = 1; j < t.arrows.size(); ++j)
                rest.push_back(t.arrows[(p + j) % t.arrows.size()]);
            acc[rest] += t.coeff;
        }
    PathCombo out;
    for (auto& [path, c] : acc)
        if (!c.is_zero()) out.push_back({c, path});
    return out;
}

int count_occurrences(const std::vector<int>& cyc, int arrow) {
    return (int)std::count(cyc.begin(), cyc.end(), arrow);
}

} // namespace

QP reduce(const RawQP& raw, std::size_t max_cycle_len) {
    QP qp = raw;
    qp.potential.normalize();

    for (int guard = 0; guard < 1000; ++guard) {
        std::vector<std::size_t> quad;
        for (std::size_t i = 0; i < qp.potential.terms.size(); ++i)
            if (qp.potential.terms[i].arrows.size() == 2) quad.push_back(i);
        if (quad.empty()) break;

        // the quadratic part must be a sum over pairwise-disjoint 2-cycles
        std::map<int, int> quad_uses;
        for (std::size_t qi : quad) {
            const auto& cyc = qp.potential.terms[qi].arrows;
            if (cyc[0] == cyc[1])
                throw ReductionUnsupported("quadratic term repeats one arrow");
            quad_uses[cyc[0]]++;
            quad_uses[cyc[1]]++;
        }
        for (auto& [a, n] : quad_uses)
            if (n > 1)
                throw ReductionUnsupported("arrow '" + qp.quiver.arrows[a].id +
                                           "' appears in two quadratic terms");

        const int u = qp.potential.terms[quad[0]].arrows[0];
        const int v = qp.potential.terms[quad[0]].arrows[1];
        const Rat c = qp.potential.terms[quad[0]].coeff;

        // split the rest of W into u-linear, v-linear and untouched parts
        PathCombo f_combo, g_combo; // u . F and v . G
        std::vector<Cycle> rest;
        for (std::size_t i = 0; i < qp.potential.terms.size(); ++i) {
            if (i == quad[0]) continue;
            const Cycle& t = qp.potential.terms[i];
            int cu = count_occurrences(t.arrows, u);
            int cv = count_occurrences(t.arrows, v);
            if (cu == 0 && cv == 0) {
                rest.push_back(t);
                continue;
            }
            if (cu + cv > 1)
                throw ReductionUnsupported("potential term couples both arrows of a 2-cycle");
            int which = cu ? u : v;
            std::size_t p = 0;
            while (t.arrows[p] != which) ++p;
            std::vector<int> tail;
            for (std::size_t j = 1; j < t.arrows.size(); ++j)
                tail.push_back(t.arrows[(p + j) % t.arrows.size()]);
            (cu ? f_combo : g_combo).push_back({t.coeff, tail});
        }

        // W := rest - c^{-1} F.G ; then u, v and the 2-cycle term are dropped
        for (const auto& [cf, pf] : f_combo)
            for (const auto& [cg, pg] : g_combo) {
                std::vector<int> cyc = pf;
                cyc.insert(cyc.end(), pg.begin(), pg.end());
                if (cyc.size() > max_cycle_len)
                    throw ReductionUnsupported("substitution exceeds the cycle-length bound");
                rest.push_back({-(cf * cg) / c, cyc});
            }

        // delete arrows u, v and reindex
        std::vector<int> remap(qp.quiver.arrows.size(), -1);
        Quiver nq;
        nq.vertices = qp.quiver.vertices;
        for (std::size_t i = 0; i < qp.quiver.arrows.size(); ++i) {
            if ((int)i == u || (int)i == v) continue;
            remap[i] = (int)nq.arrows.size();
            nq.arrows.push_back(qp.quiver.arrows[i]);
        }
        Potential np;
        for (auto& t : rest) {
            for (int& ai : t.arrows) ai = remap[ai];
            np.terms.push_back(t);
        }
        qp.quiver = std::move(nq);
        qp.potential = std::move(np);
        qp.potential.normalize();
    }

    for (const auto& d : validate_qp(qp))
        if (d.code == "loop" || d.code == "two-cycle")
            throw ReductionUnsupported("reduction left a degenerate quiver: " + d.message);
    return qp;
}

QP mutate(const QP& qp, int k, std::size_t max_cycle_len) {
    return reduce(premutate(qp, k), max_cycle_len);
}

QP restrict_qp(const QP& qp, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> vmap(qp.quiver.size(), -1);
    QP out;
    for (int v : sorted) {
        vmap[v] = (int)out.quiver.vertices.size();
        out.quiver.vertices.push_back(qp.quiver.vertices[v]);
    }
    std::vector<int> amap(qp.quiver.arrows.size(), -1);
    for (std::size_t i = 0; i < qp.quiver.arrows.size(); ++i) {
        const Arrow& a = qp.quiver.arrows[i];
        if (vmap[a.src] < 0 || vmap[a.tgt] < 0) continue;
        amap[i] = (int)out.quiver.arrows.size();
        out.quiver.arrows.push_back({a.id, vmap[a.src], vmap[a.tgt]});
    }
    for (const auto& t : qp.potential.terms) {
        bool inside = true;
        for (int ai : t.arrows)
            if (amap[ai] < 0) inside = false;
        if (!inside) continue;
        std::vector<int> cyc;
        for (int ai : t.arrows) cyc.push_back(amap[ai]);
        out.potential.terms.push_back({t.coeff, cyc});
    }
    out.potential.normalize();
    return out;
}

VertexSubset VertexSubset::of(const QP& qp, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members)
        if (v < 0 || v >= (int)qp.quiver.size())
            throw UnknownVertex("subset member " + std::to_string(v) + " is not a vertex");
    if (members.size() >= qp.quiver.size())
        throw UnknownVertex("the vertex subset must be proper");
    VertexSubset s;
    s.members = members;
    for (int v = 0; v < (int)qp.quiver.size(); ++v)
        if (!std::binary_search(members.begin(), members.end(), v)) s.complement.push_back(v);
    return s;
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

GinzburgQuiver ginzburg(const QP& qp) {
    GinzburgQuiver g;
    g.vertices = qp.quiver.vertices;
    std::set<std::string> taken;
    for (const auto& a : qp.quiver.arrows) {
        taken.insert(a.id);
        g.arrows.push_back({a.id, a.src, a.tgt, 0});
    }
    for (const auto& a : qp.quiver.arrows)
        g.arrows.push_back({unique_id(taken, a.id + "^"), a.tgt, a.src, -1});
    for (std::size_t v = 0; v < qp.quiver.size(); ++v)
        g.arrows.push_back({unique_id(taken, "l_" + qp.quiver.vertices[v]), (int)v, (int)v, -2});

    for (std::size_t i = 0; i < qp.quiver.arrows.size(); ++i) {
        GinzburgQuiver::PathCombo combo;
        for (auto& [c, path] : cyclic_derivative(qp.potential, (int)i))
            combo.terms.push_back({c, path});
        g.dual_differential.push_back(std::move(combo));
    }
    g.loop_differential.resize(qp.quiver.size());
    for (std::size_t i = 0; i < qp.quiver.arrows.size(); ++i) {
        const Arrow& a = qp.quiver.arrows[i];
        g.loop_differential[a.src].push_back({(int)i, +1}); // a a^
        g.loop_differential[a.tgt].push_back({(int)i, -1}); // a^ a
    }
    return g;
}

std::vector<std::vector<int>> ext1_matrix(const QP& qp) { return qp.quiver.arrow_counts(); }

RelationSet relations(const QP& qp) {
    RelationSet rs;
    for (std::size_t i = 0; i < qp.quiver.arrows.size(); ++i) {
        auto combo = cyclic_derivative(qp.potential, (int)i);
        if (combo.empty()) continue;
        Relation r;
        r.arrow = (int)i;
        r.paths = combo;
        std::size_t len = r.paths.front().second.size();
        for (const auto& [c, p] : r.paths)
            if (p.size() != len) rs.homogeneous = false;
        rs.relations.push_back(std::move(r));
    }
    return rs;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct Encoding {
    std::vector<std::pair<int, int>> arrows; // (src,tgt) sorted
    // terms as (cycle over canonical arrow numbers, coeff) sorted
    std::vector<std::pair<std::vector<int>, std::pair<long long, long long>>> potential;

    bool operator<(const Encoding& o) const {
        if (arrows != o.arrows) return arrows < o.arrows;
        return potential < o.potential;
    }
    bool operator==(const Encoding& o) const {
        return arrows == o.arrows && potential == o.potential;
    }
};

Encoding encode_potential(const QP& qp, const std::vector<int>& vmap,
                          const std::vector<int>& arrow_order) {
    // arrow_order[rank] = original arrow index; canonical number of an arrow
    // is its rank.
    std::vector<int> rank(qp.quiver.arrows.size());
    for (std::size_t r = 0; r < arrow_order.size(); ++r) rank[arrow_order[r]] = (int)r;
    Encoding e;
    for (int ai : arrow_order)
        e.arrows.push_back({vmap[qp.quiver.arrows[ai].src], vmap[qp.quiver.arrows[ai].tgt]});
    for (const auto& t : qp.potential.terms) {
        std::vector<int> cyc;
        for (int ai : t.arrows) cyc.push_back(rank[ai]);
        e.potential.push_back({min_rotation(cyc), {t.coeff.num(), t.coeff.den()}});
    }
    std::sort(e.potential.begin(), e.potential.end());
    return e;
}

} // namespace

CanonicalQP canonical_form(const QP& qp) {
    const std::size_t n = qp.quiver.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    bool have_best = false;
    Encoding best;
    std::vector<int> best_vmap;

    std::vector<int> vmap(n);
    do {
        // perm[rank] = original vertex; vmap: original -> canonical
        for (std::size_t r = 0; r < n; ++r) vmap[perm[r]] = (int)r;

        // arrows sorted by canonical endpoints; enumerate orders within
        // parallel groups so the potential comparison is exact
        std::vector<int> order(qp.quiver.arrows.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto ka = std::make_pair(vmap[qp.quiver.arrows[a].src], vmap[qp.quiver.arrows[a].tgt]);
            auto kb = std::make_pair(vmap[qp.quiver.arrows[b].src], vmap[qp.quiver.arrows[b].tgt]);
            if (ka != kb) return ka < kb;
            return a < b;
        });

        // quick reject on the quiver part alone
        {
            Encoding probe;
            for (int ai : order)
                probe.arrows.push_back({vmap[qp.quiver.arrows[ai].src], vmap[qp.quiver.arrows[ai].tgt]});
            if (have_best && best.arrows < probe.arrows) continue;
        }

        // group boundaries of parallel arrows
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i + 1;
            auto key = std::make_pair(vmap[qp.quiver.arrows[order[i]].src],
                                      vmap[qp.quiver.arrows[order[i]].tgt]);
            while (j < order.size() &&
                   std::make_pair(vmap[qp.quiver.arrows[order[j]].src],
                                  vmap[qp.quiver.arrows[order[j]].tgt]) == key)
                ++j;
            if (j - i > 1) groups.push_back({i, j});
            i = j;
        }

        std::vector<int> cur = order;
        std::size_t combos = 1;
        for (auto& [b, e2] : groups) {
            std::size_t f = 1;
            for (std::size_t x = 2; x <= e2 - b; ++x) f *= x;
            combos *= f;
        }
        if (combos > 100000) throw Error(ErrorKind::Internal, "CanonicalForm", "too many parallel arrows");

        std::function<void(std::size_t)> rec = [&](std::size_t gi) {
            if (gi == groups.size()) {
                Encoding e = encode_potential(qp, vmap, cur);
                if (!have_best || e < best) {
                    best = e;
                    best_vmap = vmap;
                    have_best = true;
                }
                return;
            }
            auto [b, e2] = groups[gi];
            std::sort(cur.begin() + b, cur.begin() + e2);
            do {
                rec(gi + 1);
            } while (std::next_permutation(cur.begin() + b, cur.begin() + e2));
        };
        rec(0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CanonicalQP out;
    out.vertex_map = best_vmap;
    for (std::size_t v = 0; v < n; ++v) out.qp.quiver.vertices.push_back(std::to_string(v + 1));
    for (std::size_t r = 0; r < best.arrows.size(); ++r)
        out.qp.quiver.arrows.push_back(
            {"a" + std::to_string(r + 1), best.arrows[r].first, best.arrows[r].second});
    for (const auto& [cyc, coeff] : best.potential)
        out.qp.potential.terms.push_back({Rat(coeff.first, coeff.second), cyc});
    out.qp.potential.normalize();
    return out;
}

namespace {

bool same_structure(const QP& a, const QP& b, bool with_potential) {
    if (a.quiver.vertices.size() != b.quiver.vertices.size()) return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    for (std::size_t i = 0; i < a.quiver.arrows.size(); ++i)
        if (a.quiver.arrows[i].src != b.quiver.arrows[i].src ||
            a.quiver.arrows[i].tgt != b.quiver.arrows[i].tgt)
            return false;
    if (!with_potential) return true;
    if (a.potential.terms.size() != b.potential.terms.size()) return false;
    for (std::size_t i = 0; i < a.potential.terms.size(); ++i)
        if (a.potential.terms[i].coeff != b.potential.terms[i].coeff ||
            a.potential.terms[i].arrows != b.potential.terms[i].arrows)
            return false;
    return true;
}

} // namespace

bool canonically_equal(const QP& a, const QP& b) {
    return same_structure(canonical_form(a).qp, canonical_form(b).qp, true);
}

bool canonically_equal_quiver(const QP& a, const QP& b) {
    QP a2 = a, b2 = b;
    a2.potential.terms.clear();
    b2.potential.terms.clear();
    return same_structure(canonical_form(a2).qp, canonical_form(b2).qp, false);
}

std::string qp_brief(const QP& qp) {
    std::ostringstream os;
    os << qp.quiver.size() << " vertices, " << qp.quiver.arrows.size() << " arrows, "
       << qp.potential.terms.size() << " potential terms";
    return os.str();
}

} // namespace qpt
