#include "qpt/silting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace qpt {

namespace {

std::string cols_fingerprint(const std::vector<IntVec>& cols) {
    std::vector<IntVec> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const auto& c : sorted) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ")";
    }
    return os.str();
}

} // namespace

std::string SiltingState::g_key() const { return cols_fingerprint(g_cols); }

void verify_pairing(const SiltingState& s) {
    auto prod = pairing_product(s.g_cols, s.companion.c_matrix());
    if (!is_identity(prod))
        throw PairingViolation("g/c pairing is not the identity after word of length " +
                               std::to_string(s.word.size()));
}

SiltingState initial_silting(const QP& qp) {
    SiltingState s;
    s.companion = standard_heart(qp);
    std::size_t n = qp.quiver.size();
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        s.g_cols.push_back(std::move(e));
    }
    verify_pairing(s);
    return s;
}

namespace {

SiltingState mutate_impl(const SiltingState& s, int k, bool forward) {
    if (k < 0 || k >= (int)s.g_cols.size())
        throw UnknownVertex("summand index " + std::to_string(k));
    if (!s.companion.representable)
        throw OpaqueCompanion("cannot advance the companion heart");
    auto counts = s.companion.qp.quiver.arrow_counts();
    SiltingState out;
    out.g_cols = s.g_cols;
    IntVec col(s.g_cols[k].size(), 0);
    for (std::size_t x = 0; x < col.size(); ++x) col[x] = -s.g_cols[k][x];
    for (std::size_t i = 0; i < s.g_cols.size(); ++i) {
        if ((int)i == k) continue;
        long long mult = forward ? counts[i][k] : counts[k][i];
        for (std::size_t x = 0; x < col.size(); ++x) col[x] += mult * s.g_cols[i][x];
    }
    out.g_cols[k] = std::move(col);
    out.companion = forward ? forward_tilt(s.companion, k) : backward_tilt(s.companion, k);
    out.word = s.word;
    out.word.push_back(forward ? k : -k - 1);
    verify_pairing(out);
    return out;
}

} // namespace

SiltingState silting_mutate(const SiltingState& s, int k) { return mutate_impl(s, k, true); }
SiltingState silting_mutate_back(const SiltingState& s, int k) { return mutate_impl(s, k, false); }

SiltingGraph seg_explore(const QP& qp, int depth, Direction direction) {
    // lock-step mirror of explore(): same BFS, same dedup (by companion key),
    // with the g-matrix carried along
    struct Node {
        SiltingState state;
        int depth;
    };
    std::map<std::string, Node> nodes; // companion heart key -> node
    std::set<std::tuple<std::string, std::string, std::string>> edge_keys;
    struct RawEdge {
        std::string src, tgt, label;
    };
    std::vector<RawEdge> raw_edges;

    SiltingState root = initial_silting(qp);
    std::string root_key = root.companion.key;
    nodes.emplace(root_key, Node{root, 0});
    std::vector<std::string> layer{root_key};

    for (int d = 0; d < depth && !layer.empty(); ++d) {
        std::sort(layer.begin(), layer.end());
        std::vector<std::string> next;
        for (const auto& key : layer) {
            const SiltingState state = nodes.at(key).state;
            if (!state.companion.representable) continue;
            for (std::size_t k = 0; k < state.g_cols.size(); ++k) {
                std::string lbl = display_object(state.companion.simples[k].root,
                                                 state.companion.simples[k].shift);
                SiltingState s2 = silting_mutate(state, (int)k);
                std::string tk = s2.companion.key;
                if (!nodes.count(tk)) {
                    nodes.emplace(tk, Node{std::move(s2), d + 1});
                    next.push_back(tk);
                }
                if (edge_keys.insert({key, tk, lbl}).second) raw_edges.push_back({key, tk, lbl});
            }
            if (direction == Direction::Both) {
                for (std::size_t k = 0; k < state.g_cols.size(); ++k) {
                    SiltingState s0 = silting_mutate_back(state, (int)k);
                    std::string lbl = display_object(s0.companion.simples[k].root,
                                                     s0.companion.simples[k].shift);
                    std::string sk = s0.companion.key;
                    if (!nodes.count(sk)) {
                        nodes.emplace(sk, Node{std::move(s0), d + 1});
                        next.push_back(sk);
                    }
                    if (edge_keys.insert({sk, key, lbl}).second) raw_edges.push_back({sk, key, lbl});
                }
            }
        }
        layer = std::move(next);
    }

    SiltingGraph sg;
    std::vector<std::pair<std::pair<int, std::string>, const Node*>> order;
    for (auto& [key, node] : nodes) order.push_back({{node.depth, key}, &node});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::map<std::string, int> index;
    for (auto& [sk, node] : order) {
        SEGVertex v;
        v.key = node->state.g_key();
        v.heart_key = node->state.companion.key;
        v.g_cols = node->state.g_cols;
        v.frontier = (node->depth == depth) || !node->state.companion.representable;
        index[v.heart_key] = (int)sg.vertices.size();
        sg.vertices.push_back(std::move(v));
    }
    sg.root = index.at(root_key);
    for (auto& re : raw_edges) sg.edges.push_back({index.at(re.src), index.at(re.tgt), re.label});
    std::sort(sg.edges.begin(), sg.edges.end(), [](const SEGEdge& a, const SEGEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.label < b.label;
    });
    return sg;
}

bool seg_isomorphic(const ExchangeGraph& eg, const SiltingGraph& sg) {
    if (eg.vertices.size() != sg.vertices.size()) return false;
    if (eg.edges.size() != sg.edges.size()) return false;
    // vertex map via companion heart keys. Bare g-matrices are only a
    // K-theoretic shadow and may repeat across even global shifts; the state
    // identity includes the companion heart.
    std::map<std::string, int> by_heart;
    for (std::size_t i = 0; i < sg.vertices.size(); ++i)
        by_heart[sg.vertices[i].heart_key] = (int)i;
    if (by_heart.size() != sg.vertices.size()) return false;
    std::vector<int> map(eg.vertices.size(), -1);
    for (std::size_t i = 0; i < eg.vertices.size(); ++i) {
        auto it = by_heart.find(eg.vertices[i].heart.key);
        if (it == by_heart.end()) return false;
        map[i] = it->second;
    }
    std::set<std::tuple<int, int, std::string>> seg_edges;
    for (const auto& e : sg.edges) seg_edges.insert({e.src, e.tgt, e.label});
    for (const auto& e : eg.edges)
        if (!seg_edges.count({map[e.src], map[e.tgt], e.label.display})) return false;
    return true;
}

std::string PartialSilting::key() const { return cols_fingerprint(columns); }

PartialSilting partial_silting(const SiltingState& s, const VertexSubset& sub) {
    if (!s.companion.representable)
        throw OpaqueCompanion("partial extraction needs a representable companion");
    const Heart& h = s.companion;
    // the subcategory simples must be exactly the standard ones at shift 0
    std::vector<int> v_idx, rest;
    for (std::size_t j = 0; j < h.n(); ++j) {
        if (h.ctx->in_subcategory(h.simples[j], sub)) v_idx.push_back((int)j);
        else rest.push_back((int)j);
    }
    std::vector<std::pair<IntVec, int>> found, wanted;
    for (int j : v_idx) found.push_back({h.simples[j].root, h.simples[j].shift});
    for (int i : sub.members) {
        IntVec e(h.n(), 0);
        e[i] = 1;
        wanted.push_back({e, 0});
    }
    std::sort(found.begin(), found.end());
    std::sort(wanted.begin(), wanted.end());
    if (found != wanted)
        throw HeartNotLifted("companion heart does not contain the standard subcategory simples");

    PartialSilting p;
    p.sub = sub;
    p.state = s;
    p.summand_vertices = rest;
    for (int j : rest) p.columns.push_back(s.g_cols[j]);

    // orthogonality: extracted columns pair to zero against the subcategory
    // simple classes and to delta against the remaining companion simples
    for (const auto& col : p.columns)
        for (int i : sub.members)
            if (col[i] != 0)
                throw PairingViolation("partial column has weight on a subcategory vertex");
    auto c = h.c_matrix();
    for (std::size_t a = 0; a < p.columns.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b) {
            long long dot = 0;
            for (std::size_t x = 0; x < p.columns[a].size(); ++x)
                dot += p.columns[a][x] * c[rest[b]][x];
            if (dot != (a == b ? 1 : 0))
                throw PairingViolation("partial columns do not pair to delta");
        }
    return p;
}

PartialSilting partial_mutate(const PartialSilting& p, int j, int lift_bound) {
    if (std::find(p.summand_vertices.begin(), p.summand_vertices.end(), j) ==
        p.summand_vertices.end())
        throw UnknownVertex("vertex " + std::to_string(j) + " is not a partial summand");
    SiltingState s = p.state;

    auto needs_lift = [&](const Heart& h) {
        auto counts = h.qp.quiver.arrow_counts();
        for (std::size_t v = 0; v < h.n(); ++v)
            if (h.ctx->in_subcategory(h.simples[v], p.sub) && counts[v][j] > 0) return true;
        return false;
    };
    if (needs_lift(s.companion)) {
        auto steps = lift_tilt_search(s.companion, j, p.sub, lift_bound);
        for (const auto& st : steps) s = silting_mutate(s, st.vertex);
    }
    s = silting_mutate(s, j);

    // re-extract at the non-subcategory vertices; the mutation left the
    // subcategory simples untouched, though possibly at nonzero shifts after
    // the lift
    const Heart& h = s.companion;
    PartialSilting out;
    out.sub = p.sub;
    out.state = s;
    for (std::size_t v = 0; v < h.n(); ++v) {
        if (!h.simples[v].representable)
            throw OpaqueCompanion("partial mutation produced an opaque companion");
        if (h.ctx->in_subcategory(h.simples[v], p.sub)) continue;
        out.summand_vertices.push_back((int)v);
        out.columns.push_back(s.g_cols[v]);
    }
    if (out.columns.size() != p.columns.size())
        throw PairingViolation("partial mutation changed the summand count");

    // quotient pairing: projected columns against projected non-subcategory
    // c-columns must give the identity
    for (const auto& col : out.columns)
        for (int i : p.sub.members)
            if (col[i] != 0)
                throw PairingViolation("partial column gained weight on a subcategory vertex");
    auto c = h.c_matrix();
    for (std::size_t a = 0; a < out.columns.size(); ++a)
        for (std::size_t b = 0; b < out.summand_vertices.size(); ++b) {
            long long dot = 0;
            for (std::size_t x = 0; x < out.columns[a].size(); ++x)
                dot += out.columns[a][x] * c[out.summand_vertices[b]][x];
            if (dot != (a == b ? 1 : 0))
                throw PairingViolation("quotient pairing violated after partial mutation");
        }
    return out;
}

SegBulletResult seg_bullet(const ExchangeGraph& eg, const QuotientGraph& qg,
                           const VertexSubset& sub, int lift_bound) {
    SegBulletResult res;

    // replay the silting states over the explored exchange graph
    std::map<std::string, SiltingState> states;
    {
        const EGVertex& rootv = eg.vertices[eg.root];
        states.emplace(rootv.heart.key, initial_silting(rootv.heart.qp));
        // adjacency for propagation in both directions
        std::vector<std::vector<std::pair<int, const EGEdge*>>> adj(eg.vertices.size());
        for (const auto& e : eg.edges) {
            adj[e.src].push_back({e.tgt, &e});
            adj[e.tgt].push_back({e.src, &e});
        }
        std::deque<int> queue{eg.root};
        std::set<int> seen{eg.root};
        while (!queue.empty()) {
            int at = queue.front();
            queue.pop_front();
            const Heart& h_at = eg.vertices[at].heart;
            const SiltingState& s_at = states.at(h_at.key);
            for (auto& [nb, e] : adj[at]) {
                if (seen.count(nb)) continue;
                const Heart& h_nb = eg.vertices[nb].heart;
                if (!h_at.representable || !h_nb.representable) continue;
                SiltingState s_nb = [&] {
                    if (e->src == at) {
                        // forward tilt at the label simple of this vertex
                        int k = h_at.index_of(CYObject::module(e->label.root, e->label.shift));
                        if (k < 0)
                            throw Error(ErrorKind::Internal, "SegBullet", "edge label not found");
                        return silting_mutate(s_at, k);
                    }
                    // at is the target: undo the tilt at the shifted-up label
                    int k = h_at.index_of(CYObject::module(e->label.root, e->label.shift + 1));
                    if (k < 0) throw Error(ErrorKind::Internal, "SegBullet", "edge label not found");
                    return silting_mutate_back(s_at, k);
                }();
                if (s_nb.companion.key != h_nb.key)
                    throw Error(ErrorKind::Internal, "SegBullet", "replay drifted off the graph");
                states.emplace(h_nb.key, std::move(s_nb));
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }

    // one partial silting object per class, via the lifted member; each
    // quotient heart lifts to a unique heart containing the standard
    // subcategory simples
    auto class_key_of_state = [&](const PartialSilting& p) {
        const Heart& h = p.state.companion;
        std::vector<std::pair<IntVec, int>> qs;
        for (const auto& s : h.simples) {
            if (h.ctx->in_subcategory(s, sub)) continue;
            IntVec proj;
            for (int i : sub.complement) proj.push_back(s.root[i]);
            qs.push_back({proj, s.shift});
        }
        std::sort(qs.begin(), qs.end());
        std::string key;
        for (const auto& [proj, shift] : qs) {
            if (!key.empty()) key += " ";
            key += display_object(proj, shift);
        }
        return key;
    };

    std::map<int, PartialSilting> partials;
    for (std::size_t ci = 0; ci < qg.classes.size(); ++ci) {
        const QuotientClass& cls = qg.classes[ci];
        int lifted = -1;
        for (int m : cls.members) {
            const Heart& h = qg.sub.vertices[m].heart;
            bool ok = true;
            for (std::size_t v = 0; v < h.n() && ok; ++v) {
                if (!h.ctx->in_subcategory(h.simples[v], sub)) continue;
                bool std_simple = (h.simples[v].shift == 0);
                long long support = 0;
                for (std::size_t x = 0; x < h.n(); ++x) support += h.simples[v].root[x];
                if (!std_simple || support != 1) ok = false;
            }
            if (ok) {
                if (lifted >= 0)
                    throw IsomorphismFailure("two lifted members in one contraction class");
                lifted = m;
            }
        }
        if (lifted < 0) {
            res.skipped_classes.push_back(cls.key);
            continue;
        }
        auto it = states.find(qg.sub.vertices[lifted].heart.key);
        if (it == states.end()) {
            res.skipped_classes.push_back(cls.key);
            continue;
        }
        PartialSilting p = partial_silting(it->second, sub);
        if (class_key_of_state(p) != cls.key)
            throw IsomorphismFailure("lifted state induces a different quotient heart");
        partials.emplace((int)ci, std::move(p));
    }

    // vertices
    std::map<int, int> sg_index;
    for (auto& [ci, p] : partials) {
        SEGVertex v;
        v.key = p.key();
        v.heart_key = qg.classes[ci].key;
        v.g_cols = p.columns;
        v.frontier = !qg.classes[ci].interior;
        sg_index[ci] = (int)res.graph.vertices.size();
        res.graph.vertices.push_back(std::move(v));
        res.vertex_bijection.push_back({qg.classes[ci].key, res.graph.vertices.back().key});
    }

    // edges: each quotient edge must be matched by a partial mutation; a
    // mismatch is a hard failure, but a lift that leaves the representable
    // region only makes the edge unverifiable and is reported
    for (const auto& e : qg.edges) {
        auto ps = partials.find(e.src);
        auto pt = partials.find(e.tgt);
        if (ps == partials.end() || pt == partials.end()) continue;
        const PartialSilting& p = ps->second;
        // the summand whose companion simple projects to the edge label
        const Heart& h = p.state.companion;
        int at = -1;
        for (int v : p.summand_vertices) {
            IntVec proj;
            for (int i : sub.complement) proj.push_back(h.simples[v].root[i]);
            if (proj == e.proj && h.simples[v].shift == e.shift) at = v;
        }
        if (at < 0)
            throw IsomorphismFailure("quotient edge label matches no partial summand: " + e.display);
        try {
            PartialSilting moved = partial_mutate(p, at, lift_bound);
            if (moved.key() != pt->second.key() ||
                class_key_of_state(moved) != qg.classes[e.tgt].key)
                throw IsomorphismFailure("partial mutation disagrees with the contracted edge " +
                                         e.display);
        } catch (const BoundExceeded&) {
            res.skipped_edges.push_back(qg.classes[e.src].key + " --" + e.display + "-->");
            continue;
        } catch (const OpaqueCompanion&) {
            res.skipped_edges.push_back(qg.classes[e.src].key + " --" + e.display + "-->");
            continue;
        }
        res.graph.edges.push_back({sg_index[e.src], sg_index[e.tgt], e.display});
        ++res.verified_edges;
    }
    return res;
}

bool SegBulletResult::edge_verified(const std::string& src_class, const std::string& label) const {
    for (const auto& e : graph.edges)
        if (vertex_bijection[e.src].first == src_class && e.label == label) return true;
    return false;
}

} // namespace qpt
