#include "qpt/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace qpt {

std::vector<IntVec> Heart::c_matrix() const {
    std::vector<IntVec> cols;
    for (const auto& s : simples) cols.push_back(s.kclass);
    return cols;
}

int Heart::index_of(const CYObject& o) const {
    for (std::size_t j = 0; j < simples.size(); ++j)
        if (simples[j] == o) return (int)j;
    return -1;
}

std::string heart_key(const std::vector<CYObject>& simples) {
    bool rep = true;
    for (const auto& s : simples)
        if (!s.representable) rep = false;
    if (rep) {
        std::vector<std::pair<IntVec, int>> items;
        for (const auto& s : simples) items.push_back({s.root, s.shift});
        std::sort(items.begin(), items.end());
        std::string key;
        for (auto& [root, shift] : items) {
            if (!key.empty()) key += " ";
            key += display_object(root, shift);
        }
        return key;
    }
    // provenance key: opaque simples make the heart identity path-dependent
    std::vector<std::string> parts;
    for (const auto& s : simples)
        parts.push_back(s.representable ? display_object(s.root, s.shift) : "?" + s.provenance);
    std::sort(parts.begin(), parts.end());
    std::string key = "opq{";
    for (auto& p : parts) key += p + ";";
    return key + "}";
}

Heart standard_heart(const QP& qp) {
    if (!qp.potential.empty())
        throw NotFiniteType("the object engine requires a trivial potential");
    if (!qp.quiver.is_acyclic())
        throw NotFiniteType("the object engine requires an acyclic quiver");
    Heart h;
    h.ctx = cy3_context(qp.quiver); // throws NotFiniteType outside ADE
    h.qp = qp;
    for (std::size_t v = 0; v < qp.quiver.size(); ++v)
        h.simples.push_back(CYObject::simple(qp.quiver.size(), (int)v, 0));
    h.key = heart_key(h.simples);
    h.representable = true;
    return h;
}

namespace {

Heart tilt(const Heart& h, int k, bool forward) {
    if (k < 0 || k >= (int)h.n()) throw UnknownVertex("tilt index " + std::to_string(k));
    const CYObject& S = h.simples[k];
    if (!S.representable)
        throw OpaqueSource("cannot tilt at an opaque simple");
    // cones against opaque companions would need Ext groups the engine
    // cannot compute, so hearts with opaque simples are frontier-only
    for (const auto& Sj : h.simples)
        if (!Sj.representable)
            throw OpaqueSource("cannot tilt a heart with opaque simples");
    Heart out;
    out.ctx = h.ctx;
    out.simples.resize(h.n());
    for (std::size_t j = 0; j < h.n(); ++j) {
        if ((int)j == k) continue;
        out.simples[j] = forward ? h.ctx->cone_forward(S, h.simples[j])
                                 : h.ctx->cone_backward(S, h.simples[j]);
    }
    out.simples[k] = S.shifted(forward ? 1 : -1);
    out.qp = mutate(h.qp, k);
    out.representable = true;
    for (const auto& s : out.simples)
        if (!s.representable) out.representable = false;
    if (out.representable) {
        out.key = heart_key(out.simples);
    } else {
        out.key = "opq{" + h.key + (forward ? "|f:" : "|b:") + display_object(S.root, S.shift) + "}";
    }
    return out;
}

} // namespace

Heart forward_tilt(const Heart& h, int k) { return tilt(h, k, true); }
Heart backward_tilt(const Heart& h, int k) { return tilt(h, k, false); }

Heart composite_tilt(const Heart& h, const std::vector<int>& subset, bool forward) {
    std::vector<int> idx = subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int k : idx) {
        if (k < 0 || k >= (int)h.n()) throw UnknownVertex("tilt index " + std::to_string(k));
        if (!h.simples[k].representable) throw OpaqueSource("composite tilt at an opaque simple");
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            ExtCY3 e1 = h.ctx->ext1_cy3(h.simples[idx[a]], h.simples[idx[b]]);
            ExtCY3 e2 = h.ctx->ext1_cy3(h.simples[idx[b]], h.simples[idx[a]]);
            if (e1.total || e2.total)
                throw NotIndependentSet("simples " + std::to_string(idx[a]) + " and " +
                                        std::to_string(idx[b]) + " are not Ext-orthogonal");
        }
    Heart cur = h;
    for (int k : idx) cur = forward ? forward_tilt(cur, k) : backward_tilt(cur, k);
    return cur;
}

namespace {

TiltLabel label_of(const CYObject& S) {
    TiltLabel l;
    l.root = S.root;
    l.shift = S.shift;
    l.display = display_object(S.root, S.shift);
    return l;
}

} // namespace

int ExchangeGraph::find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

ExchangeGraph explore(const QP& qp, int depth, Direction direction) {
    struct Node {
        Heart heart;
        int depth;
        bool opaque;
    };
    std::map<std::string, Node> nodes;
    // edges recorded by key triples until ids exist
    std::set<std::tuple<std::string, std::string, std::string>> edge_keys;
    struct RawEdge {
        std::string src, tgt;
        TiltLabel label;
    };
    std::vector<RawEdge> raw_edges;

    Heart root = standard_heart(qp);
    nodes.emplace(root.key, Node{root, 0, false});
    std::vector<std::string> layer{root.key};

    auto note_vertex = [&](Heart&& h, int d) {
        std::string key = h.key; // copy first: emplace may move h before reading it
        auto it = nodes.find(key);
        if (it == nodes.end()) {
            bool op = !h.representable;
            nodes.emplace(std::move(key), Node{std::move(h), d, op});
            return true;
        }
        return false;
    };
    auto note_edge = [&](const std::string& src, const std::string& tgt, const TiltLabel& l) {
        if (edge_keys.insert({src, tgt, l.display}).second) raw_edges.push_back({src, tgt, l});
    };

    for (int d = 0; d < depth && !layer.empty(); ++d) {
        std::sort(layer.begin(), layer.end());
        std::vector<std::string> next;
        for (const auto& key : layer) {
            const Node& node = nodes.at(key);
            if (node.opaque) continue; // frontier: never expanded
            const Heart h = node.heart; // copy: nodes may rehash during inserts
            for (std::size_t k = 0; k < h.n(); ++k) {
                TiltLabel fl = label_of(h.simples[k]);
                Heart h2 = forward_tilt(h, (int)k);
                std::string tk = h2.key;
                if (note_vertex(std::move(h2), d + 1)) next.push_back(tk);
                note_edge(key, tk, fl);
            }
            if (direction == Direction::Both) {
                for (std::size_t k = 0; k < h.n(); ++k) {
                    Heart h0 = backward_tilt(h, (int)k);
                    // the edge h0 -> h is the forward tilt at the shifted-down
                    // simple, which stays representable
                    TiltLabel bl = label_of(h0.simples[k]);
                    std::string sk = h0.key;
                    if (note_vertex(std::move(h0), d + 1)) next.push_back(sk);
                    note_edge(sk, key, bl);
                }
            }
        }
        layer = std::move(next);
    }

    ExchangeGraph eg;
    eg.depth = depth;
    eg.direction = direction;
    std::vector<std::pair<std::pair<int, std::string>, const Node*>> order;
    for (auto& [key, node] : nodes) order.push_back({{node.depth, key}, &node});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [sk, node] : order) {
        EGVertex v;
        v.heart = node->heart;
        v.depth = node->depth;
        v.frontier_depth = (node->depth == depth);
        v.frontier_opaque = node->opaque;
        eg.index[v.heart.key] = (int)eg.vertices.size();
        eg.vertices.push_back(std::move(v));
    }
    eg.root = eg.index.at(root.key);
    for (auto& re : raw_edges)
        eg.edges.push_back({eg.index.at(re.src), eg.index.at(re.tgt), re.label});
    std::sort(eg.edges.begin(), eg.edges.end(), [](const EGEdge& a, const EGEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.label.display < b.label.display;
    });
    return eg;
}

bool is_compatible(const Heart& h, const VertexSubset& sub) {
    if (!h.representable) throw OpaqueHeart("compatibility of a heart with opaque simples");
    std::vector<int> inside;
    for (std::size_t j = 0; j < h.n(); ++j)
        if (h.ctx->in_subcategory(h.simples[j], sub)) inside.push_back((int)j);
    if (inside.size() != sub.members.size()) return false;
    if (inside.empty()) return true;
    std::vector<IntVec> m;
    for (int j : inside) {
        IntVec row;
        for (int i : sub.members) row.push_back(h.simples[j].kclass[i]);
        m.push_back(std::move(row));
    }
    long long det = int_det(m);
    return det == 1 || det == -1;
}

ExchangeGraph compatible_subgraph(const ExchangeGraph& eg, const VertexSubset& sub) {
    ExchangeGraph out;
    out.depth = eg.depth;
    out.direction = eg.direction;
    std::vector<int> remap(eg.vertices.size(), -1);
    for (std::size_t i = 0; i < eg.vertices.size(); ++i) {
        const EGVertex& v = eg.vertices[i];
        if (!v.heart.representable) continue;
        if (!is_compatible(v.heart, sub)) continue;
        remap[i] = (int)out.vertices.size();
        out.index[v.heart.key] = (int)out.vertices.size();
        out.vertices.push_back(v);
    }
    for (const auto& e : eg.edges)
        if (remap[e.src] >= 0 && remap[e.tgt] >= 0)
            out.edges.push_back({remap[e.src], remap[e.tgt], e.label});
    out.root = (eg.root < (int)remap.size() && remap[eg.root] >= 0) ? remap[eg.root] : 0;
    return out;
}

namespace {

bool label_in_subcategory(const TiltLabel& l, const VertexSubset& sub) {
    bool any = false;
    for (std::size_t v = 0; v < l.root.size(); ++v) {
        if (l.root[v] == 0) continue;
        any = true;
        if (!sub.contains((int)v)) return false;
    }
    return any;
}

} // namespace

namespace {

std::vector<std::pair<IntVec, int>> quotient_simples_of(const Heart& h, const VertexSubset& sub) {
    std::vector<std::pair<IntVec, int>> qs;
    for (const auto& s : h.simples) {
        if (h.ctx->in_subcategory(s, sub)) continue;
        IntVec proj;
        for (int i : sub.complement) proj.push_back(s.root[i]);
        qs.push_back({proj, s.shift});
    }
    std::sort(qs.begin(), qs.end());
    return qs;
}

std::string quotient_key(const std::vector<std::pair<IntVec, int>>& qs) {
    std::string key;
    for (const auto& [proj, shift] : qs) {
        if (!key.empty()) key += " ";
        key += display_object(proj, shift);
    }
    return key;
}

} // namespace

QuotientGraph quotient_graph(const ExchangeGraph& eg, const VertexSubset& sub) {
    QuotientGraph qg;
    qg.subset = sub;
    qg.sub = compatible_subgraph(eg, sub);
    const ExchangeGraph& g = qg.sub;

    // Hearts with equal induced quotient hearts form one contraction class:
    // tilting at subcategory simples never changes the quotient heart, and
    // distinct classes induce distinct quotient hearts. Grouping by the
    // quotient heart is robust against chains leaving the explored region.
    std::map<std::string, std::vector<int>> groups;
    std::vector<std::vector<std::pair<IntVec, int>>> qs_of(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        qs_of[i] = quotient_simples_of(g.vertices[i].heart, sub);
        groups[quotient_key(qs_of[i])].push_back((int)i);
    }
    // contracted edges must stay inside one class
    for (const auto& e : g.edges)
        if (label_in_subcategory(e.label, sub) && qs_of[e.src] != qs_of[e.tgt])
            throw Error(ErrorKind::Internal, "QuotientLabels",
                        "a subcategory tilt changed the induced quotient heart");

    std::vector<int> class_of_vertex(g.vertices.size(), -1);
    for (auto& [key, members] : groups) {
        QuotientClass cls;
        cls.key = key;
        cls.quotient_simples = qs_of[members.front()];
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            return g.vertices[a].heart.key < g.vertices[b].heart.key;
        });
        cls.members = members;
        cls.interior = true;
        for (int m : members) {
            class_of_vertex[m] = (int)qg.classes.size();
            qg.class_of[g.vertices[m].heart.key] = (int)qg.classes.size();
            if (!g.vertices[m].interior()) cls.interior = false;
        }
        qg.classes.push_back(std::move(cls));
    }

    // Quotient edges, one per (source class, label). The quotient tilt at a
    // label is a function of the class, and its inverse is too: a second
    // target for one (source, label), or a second source for one
    // (target, label), falsifies the contraction and is a hard error.
    std::map<std::tuple<int, IntVec, int>, int> out_target, in_source;
    std::set<std::tuple<int, int, IntVec, int>> seen;
    for (const auto& e : g.edges) {
        if (label_in_subcategory(e.label, sub)) continue;
        int cs = class_of_vertex[e.src], ct = class_of_vertex[e.tgt];
        IntVec proj;
        for (int i : sub.complement) proj.push_back(e.label.root[i]);
        auto [oit, ofresh] = out_target.emplace(std::make_tuple(cs, proj, e.label.shift), ct);
        if (!ofresh && oit->second != ct)
            throw Error(ErrorKind::Internal, "QuotientLabels",
                        "one contraction class tilts to two classes under one label");
        auto [iit, ifresh] = in_source.emplace(std::make_tuple(ct, proj, e.label.shift), cs);
        if (!ifresh && iit->second != cs)
            throw Error(ErrorKind::Internal, "QuotientLabels",
                        "two contraction classes tilt to one class under one label");
        if (!seen.insert({cs, ct, proj, e.label.shift}).second) continue;
        qg.edges.push_back({cs, ct, proj, e.label.shift, display_object(proj, e.label.shift)});
    }

    // a class is lift-complete when every one of its quotient simples is
    // witnessed by an explored edge in both directions; tilts whose cones
    // leave the shifted-module regime make the witness unavailable
    for (std::size_t ci = 0; ci < qg.classes.size(); ++ci) {
        QuotientClass& cls = qg.classes[ci];
        cls.lift_complete = true;
        for (const auto& [proj, shift] : cls.quotient_simples) {
            bool fwd = out_target.count(std::make_tuple((int)ci, proj, shift)) > 0;
            bool bwd = in_source.count(std::make_tuple((int)ci, proj, shift - 1)) > 0;
            if (!fwd || !bwd) cls.lift_complete = false;
        }
    }
    std::sort(qg.edges.begin(), qg.edges.end(), [](const QuotientEdge& a, const QuotientEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.display < b.display;
    });
    return qg;
}

RegularityReport regularity_report(const ExchangeGraph& eg) {
    RegularityReport r;
    std::vector<int> out(eg.vertices.size(), 0), in(eg.vertices.size(), 0);
    for (const auto& e : eg.edges) {
        out[e.src]++;
        in[e.tgt]++;
    }
    bool first = true;
    r.regular = true;
    for (std::size_t i = 0; i < eg.vertices.size(); ++i) {
        if (!eg.vertices[i].interior()) {
            r.frontier.push_back(eg.vertices[i].heart.key);
            continue;
        }
        r.interior.push_back({eg.vertices[i].heart.key, out[i], in[i]});
        if (first) {
            r.degree = out[i];
            first = false;
        }
        if (out[i] != r.degree || in[i] != r.degree) r.regular = false;
    }
    if (first) r.regular = false; // empty interior
    return r;
}

RegularityReport regularity_report(const QuotientGraph& qg) {
    RegularityReport r;
    std::vector<int> out(qg.classes.size(), 0), in(qg.classes.size(), 0);
    for (const auto& e : qg.edges) {
        out[e.src]++;
        in[e.tgt]++;
    }
    bool first = true;
    r.regular = true;
    for (std::size_t i = 0; i < qg.classes.size(); ++i) {
        if (!qg.classes[i].fully_expanded()) {
            r.frontier.push_back(qg.classes[i].key);
            continue;
        }
        r.interior.push_back({qg.classes[i].key, out[i], in[i]});
        if (first) {
            r.degree = out[i];
            first = false;
        }
        if (out[i] != r.degree || in[i] != r.degree) r.regular = false;
    }
    if (first) r.regular = false;
    return r;
}

std::vector<LiftStep> lift_tilt_search(const Heart& h, int k, const VertexSubset& sub, int bound) {
    if (!is_compatible(h, sub))
        throw HeartNotLifted("lift search requires a compatible start heart");
    if (h.ctx->in_subcategory(h.simples[k], sub))
        throw UnknownVertex("the tracked simple lies inside the subcategory");

    auto subcategory_vertices = [&](const Heart& x) {
        std::vector<int> v;
        for (std::size_t j = 0; j < x.n(); ++j)
            if (x.simples[j].representable && x.ctx->in_subcategory(x.simples[j], sub))
                v.push_back((int)j);
        return v;
    };
    auto satisfied = [&](const Heart& x) {
        auto counts = x.qp.quiver.arrow_counts();
        for (int v : subcategory_vertices(x))
            if (counts[v][k] > 0) return false;
        return true;
    };

    struct Node {
        Heart heart;
        std::vector<LiftStep> path;
    };
    std::deque<Node> queue;
    std::set<std::string> visited{h.key};
    queue.push_back({h, {}});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (satisfied(node.heart)) return node.path;
        if ((int)node.path.size() >= bound) continue;
        for (int v : subcategory_vertices(node.heart)) {
            Heart h2 = forward_tilt(node.heart, v);
            if (!h2.representable) continue;
            if (!visited.insert(h2.key).second) continue;
            std::vector<LiftStep> path = node.path;
            path.push_back({v, display_object(node.heart.simples[v].root,
                                              node.heart.simples[v].shift)});
            queue.push_back({std::move(h2), std::move(path)});
        }
    }
    throw BoundExceeded("no lift within " + std::to_string(bound) + " subcategory tilts");
}

} // namespace qpt
