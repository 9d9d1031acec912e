#include "qpt/polygon.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

namespace qpt {

namespace {

Chord norm(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool adjacent_on_boundary(const PolygonPair& pp, const Chord& c) {
    return c.second - c.first == 1 || (c.first == 1 && c.second == pp.size());
}

bool is_valid_chord(const PolygonPair& pp, const Chord& c) {
    if (c.first < 1 || c.second > pp.size() || c.first >= c.second) return false;
    return !adjacent_on_boundary(pp, c);
}

} // namespace

bool chords_cross(const Chord& a, const Chord& b) {
    if (a == b) return false;
    auto strictly_inside = [](const Chord& c, int x) { return c.first < x && x < c.second; };
    bool c_in = strictly_inside(a, b.first);
    bool d_in = strictly_inside(a, b.second);
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        return false;
    return c_in != d_in;
}

void validate_polygon(const PolygonPair& pp, const PolygonTriangulation& t) {
    if (pp.k < 3) throw ParseError("polygon size k must be at least 3");
    if (pp.l != 0 && pp.l < 3) throw ParseError("polygon size l must be 0 or at least 3");
    int N = pp.size();
    for (const auto& [e1, e2] : pp.identifications) {
        auto edge_ok = [&](const BoundaryEdge& e) { return e.second == pp.next_vertex(e.first); };
        if (!edge_ok(e1) || !edge_ok(e2))
            throw ParseError("identifications must pair counterclockwise boundary edges");
    }
    if (pp.s_ident >= (int)pp.identifications.size())
        throw ParseError("s_ident out of range");
    if (pp.s_ident >= 0 && pp.l > 0)
        throw ParseError("S cannot be both a glued chord and an identified boundary pair");

    std::set<Chord> seen;
    for (const auto& c : t.chords) {
        if (!is_valid_chord(pp, c))
            throw ParseError("invalid chord (" + std::to_string(c.first) + "," +
                             std::to_string(c.second) + ")");
        if (pp.glued_s() && c == pp.s_chord()) throw ParseError("a chord may not equal S");
        if (pp.glued_s() && chords_cross(c, pp.s_chord()))
            throw ParseError("chords must not cross the shared edge S");
        if (!seen.insert(c).second) throw ParseError("duplicate chord");
    }
    for (std::size_t i = 0; i < t.chords.size(); ++i)
        for (std::size_t j = i + 1; j < t.chords.size(); ++j)
            if (chords_cross(t.chords[i], t.chords[j])) throw ParseError("crossing chords");
    std::size_t want = (std::size_t)(N - 3 - (pp.glued_s() ? 1 : 0));
    if (t.chords.size() != want)
        throw ParseError("expected " + std::to_string(want) + " chords for a full triangulation");
}

std::optional<Chord> diagonal_d(const PolygonPair& pp, int side) {
    if (side != 0 && side != 1) throw ParseError("side must be 0 or 1");
    if (pp.glued_s()) {
        if (side == 0) {
            // k-gon 1..k, S traversed k -> 1, neighbouring edge (1,2)
            if (pp.k == 3) return std::nullopt;
            return norm(2, pp.k);
        }
        // l-gon k..N,1, S traversed 1 -> k, neighbouring edge (k, k+1)
        if (pp.l == 3) return std::nullopt;
        return norm(pp.k + 1, 1);
    }
    if (pp.self_glued_s()) {
        const auto& pair = pp.identifications[pp.s_ident];
        BoundaryEdge copy = (side == 0) ? pair.first : pair.second;
        Chord d = norm(copy.first, pp.next_vertex(copy.second));
        if (!is_valid_chord(pp, d)) return std::nullopt;
        return d;
    }
    return std::nullopt; // single polygon without S: no distinguished diagonal
}

std::vector<Chord> crossing_edges(const PolygonPair& pp, const PolygonTriangulation& t,
                                  const Chord& c) {
    (void)pp;
    std::vector<std::pair<std::pair<int, int>, Chord>> hits;
    for (const auto& e : t.chords) {
        if (!chords_cross(c, e)) continue;
        // exactly one endpoint of e lies strictly inside (c.first, c.second)
        int in_arc = (c.first < e.first && e.first < c.second) ? e.first : e.second;
        int other = (in_arc == e.first) ? e.second : e.first;
        hits.push_back({{in_arc, other}, e});
    }
    std::sort(hits.begin(), hits.end());
    std::vector<Chord> out;
    for (auto& h : hits) out.push_back(h.second);
    return out;
}

namespace {

// edge relation of the triangulated figure on the universal polygon
std::set<Chord> edge_set(const PolygonPair& pp, const PolygonTriangulation& t) {
    std::set<Chord> edges;
    int N = pp.size();
    for (int v = 1; v <= N; ++v) edges.insert(norm(v, pp.next_vertex(v)));
    if (pp.glued_s()) edges.insert(pp.s_chord());
    for (const auto& c : t.chords) edges.insert(c);
    return edges;
}

std::vector<std::array<int, 3>> faces_of(const PolygonPair& pp, const PolygonTriangulation& t) {
    auto edges = edge_set(pp, t);
    int N = pp.size();
    std::vector<std::array<int, 3>> faces;
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
            if (!edges.count(norm(a, b))) continue;
            for (int c = b + 1; c <= N; ++c)
                if (edges.count(norm(a, c)) && edges.count(norm(b, c)))
                    faces.push_back({a, b, c});
        }
    return faces;
}

} // namespace

PolygonTriangulation flip(const PolygonPair& pp, const PolygonTriangulation& t, const Chord& e) {
    Chord ee = norm(e.first, e.second);
    if (std::find(t.chords.begin(), t.chords.end(), ee) == t.chords.end())
        throw ChordNotPresent("(" + std::to_string(ee.first) + "," + std::to_string(ee.second) +
                              ") is not in the triangulation");
    auto edges = edge_set(pp, t);
    std::vector<int> apex;
    for (int w = 1; w <= pp.size(); ++w) {
        if (w == ee.first || w == ee.second) continue;
        if (edges.count(norm(ee.first, w)) && edges.count(norm(ee.second, w))) apex.push_back(w);
    }
    if (apex.size() != 2)
        throw Error(ErrorKind::Internal, "Flip", "chord does not bound exactly two triangles");
    PolygonTriangulation out = t;
    for (auto& c : out.chords)
        if (c == ee) c = norm(apex[0], apex[1]);
    std::sort(out.chords.begin(), out.chords.end());
    return out;
}

FlipSequence exconvrep_sequence(const PolygonPair& pp, const PolygonTriangulation& t) {
    FlipSequence seq;
    seq.final = t;
    std::sort(seq.final.chords.begin(), seq.final.chords.end());
    for (int side = 0; side < 2; ++side) {
        auto d = diagonal_d(pp, side);
        if (!d) continue;
        auto crossers = crossing_edges(pp, seq.final, *d);
        for (const auto& e : crossers) {
            seq.final = flip(pp, seq.final, e);
            seq.flips.push_back(e);
        }
    }
    return seq;
}

std::string chord_name(const Chord& c) {
    return "c" + std::to_string(c.first) + "_" + std::to_string(c.second);
}

int chord_vertex(const QP& qp, const Chord& c) { return qp.quiver.vertex_index(chord_name(c)); }

QP polygon_quiver(const PolygonPair& pp, const PolygonTriangulation& t) {
    validate_polygon(pp, t);
    // arcs: S (glued or identified), additional identified pairs, chords
    std::map<Chord, std::string> arc_of_edge; // universal-polygon edge -> arc name
    std::vector<std::string> arc_names;
    if (pp.glued_s()) {
        arc_of_edge[pp.s_chord()] = "S";
        arc_names.push_back("S");
    }
    for (std::size_t i = 0; i < pp.identifications.size(); ++i) {
        std::string name = ((int)i == pp.s_ident) ? "S" : "g" + std::to_string(i + 1);
        const auto& [e1, e2] = pp.identifications[i];
        arc_of_edge[norm(e1.first, e1.second)] = name;
        arc_of_edge[norm(e2.first, e2.second)] = name;
        arc_names.push_back(name);
    }
    std::sort(arc_names.begin(), arc_names.end());
    std::vector<Chord> chords = t.chords;
    std::sort(chords.begin(), chords.end());
    for (const auto& c : chords) {
        arc_of_edge[c] = chord_name(c);
        arc_names.push_back(chord_name(c));
    }

    QP qp;
    std::map<std::string, int> vidx;
    for (const auto& nm : arc_names) {
        vidx[nm] = (int)qp.quiver.vertices.size();
        qp.quiver.vertices.push_back(nm);
    }

    // a triangle on ccw vertices (v0 < v1 < v2) has ccw sides
    // s0=(v0,v1), s1=(v1,v2), s2=(v2,v0); arrows run s1->s0, s2->s1, s0->s2
    // between internal arcs, and an all-internal triangle contributes its
    // 3-cycle to the potential
    int arrow_count = 0;
    for (const auto& f : faces_of(pp, t)) {
        Chord s0 = norm(f[0], f[1]), s1 = norm(f[1], f[2]), s2 = norm(f[0], f[2]);
        auto arc = [&](const Chord& c) -> int {
            auto it = arc_of_edge.find(c);
            return it == arc_of_edge.end() ? -1 : vidx.at(it->second);
        };
        int a0 = arc(s0), a1 = arc(s1), a2 = arc(s2);
        int id_alpha = -1, id_beta = -1, id_gamma = -1;
        if (a2 >= 0 && a1 >= 0) {
            id_alpha = (int)qp.quiver.arrows.size();
            qp.quiver.arrows.push_back({"x" + std::to_string(++arrow_count), a2, a1});
        }
        if (a1 >= 0 && a0 >= 0) {
            id_beta = (int)qp.quiver.arrows.size();
            qp.quiver.arrows.push_back({"x" + std::to_string(++arrow_count), a1, a0});
        }
        if (a0 >= 0 && a2 >= 0) {
            id_gamma = (int)qp.quiver.arrows.size();
            qp.quiver.arrows.push_back({"x" + std::to_string(++arrow_count), a0, a2});
        }
        if (id_alpha >= 0 && id_beta >= 0 && id_gamma >= 0)
            qp.potential.terms.push_back({Rat(1), {id_alpha, id_beta, id_gamma}});
    }
    qp.potential.normalize();
    return qp;
}

std::vector<PolygonTriangulation> all_triangulations(const PolygonPair& pp) {
    // triangulations of a convex region given by an increasing vertex list
    std::function<std::vector<std::vector<Chord>>(const std::vector<int>&)> rec =
        [&](const std::vector<int>& region) -> std::vector<std::vector<Chord>> {
        if (region.size() < 3) return {{}};
        std::vector<std::vector<Chord>> out;
        int base_a = region.front(), base_b = region.back();
        for (std::size_t i = 1; i + 1 < region.size(); ++i) {
            std::vector<int> left(region.begin(), region.begin() + i + 1);
            std::vector<int> right(region.begin() + i, region.end());
            for (const auto& lt : rec(left))
                for (const auto& rt : rec(right)) {
                    std::vector<Chord> chords = lt;
                    chords.insert(chords.end(), rt.begin(), rt.end());
                    if (i != 1) chords.push_back(norm(base_a, region[i]));
                    if (i + 2 != region.size()) chords.push_back(norm(region[i], base_b));
                    // the two added edges may duplicate recursion output
                    std::sort(chords.begin(), chords.end());
                    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
                    out.push_back(std::move(chords));
                }
        }
        // dedup (the base-edge recursion can revisit chord sets)
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    std::vector<PolygonTriangulation> result;
    if (pp.glued_s()) {
        std::vector<int> pk;
        for (int v = 1; v <= pp.k; ++v) pk.push_back(v);
        // the recursion needs an increasing list; the l-gon k, ..., N, 1 is
        // listed as 1, k, k+1, ..., N (its boundary edge (1, k) is S)
        std::vector<int> pl2{1};
        for (int v = pp.k; v <= pp.size(); ++v) pl2.push_back(v);
        for (const auto& ct_k : rec(pk))
            for (const auto& ct_l : rec(pl2)) {
                PolygonTriangulation t;
                t.chords = ct_k;
                for (const auto& c : ct_l) t.chords.push_back(c);
                // drop S itself if the recursion introduced it as a region edge
                t.chords.erase(std::remove(t.chords.begin(), t.chords.end(), pp.s_chord()),
                               t.chords.end());
                std::sort(t.chords.begin(), t.chords.end());
                result.push_back(std::move(t));
            }
    } else {
        std::vector<int> all;
        for (int v = 1; v <= pp.size(); ++v) all.push_back(v);
        for (const auto& ct : rec(all)) {
            PolygonTriangulation t;
            t.chords = ct;
            result.push_back(std::move(t));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PolygonTriangulation& a, const PolygonTriangulation& b) {
                  return a.chords < b.chords;
              });
    result.erase(std::unique(result.begin(), result.end(),
                             [](const PolygonTriangulation& a, const PolygonTriangulation& b) {
                                 return a.chords == b.chords;
                             }),
                 result.end());
    return result;
}

PolygonSpec parse_polygon(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    PolygonSpec ps;
    if (!j.contains("k")) throw ParseError("polygon spec needs 'k'");
    ps.pair.k = j["k"].get<int>();
    ps.pair.l = j.value("l", 0);
    if (j.contains("identifications")) {
        for (const auto& pr : j["identifications"]) {
            BoundaryEdge e1{pr[0][0].get<int>(), pr[0][1].get<int>()};
            BoundaryEdge e2{pr[1][0].get<int>(), pr[1][1].get<int>()};
            ps.pair.identifications.push_back({e1, e2});
        }
    }
    if (j.contains("s") && !j["s"].is_null()) {
        const auto& s = j["s"];
        if (s.is_array() && s.size() == 2 && s[0].is_number()) {
            // glued form: must be the chord {1, k}
            Chord want = ps.pair.s_chord();
            Chord got = norm(s[0].get<int>(), s[1].get<int>());
            if (!ps.pair.glued_s() || got != want)
                throw ParseError("the shared edge must be the chord {1, k} of the glued polygon");
        } else if (s.is_array() && s.size() == 2 && s[0].is_array()) {
            // identified form: locate it in the identification table
            BoundaryEdge e1{s[0][0].get<int>(), s[0][1].get<int>()};
            BoundaryEdge e2{s[1][0].get<int>(), s[1][1].get<int>()};
            for (std::size_t i = 0; i < ps.pair.identifications.size(); ++i)
                if (ps.pair.identifications[i] == std::make_pair(e1, e2)) ps.pair.s_ident = (int)i;
            if (ps.pair.s_ident < 0)
                throw ParseError("self-glued S must appear in the identification table");
        } else {
            throw ParseError("bad 's' field");
        }
    }
    // a glued pair's S is implied to be the chord {1, k} when omitted
    if (j.contains("chords"))
        for (const auto& c : j["chords"])
            ps.tri.chords.push_back(norm(c[0].get<int>(), c[1].get<int>()));
    std::sort(ps.tri.chords.begin(), ps.tri.chords.end());
    validate_polygon(ps.pair, ps.tri);
    return ps;
}

std::string serialize_polygon(const PolygonSpec& ps) {
    nlohmann::ordered_json j;
    j["k"] = ps.pair.k;
    j["l"] = ps.pair.l;
    if (ps.pair.glued_s()) {
        j["s"] = {ps.pair.s_chord().first, ps.pair.s_chord().second};
    } else if (ps.pair.self_glued_s()) {
        const auto& [e1, e2] = ps.pair.identifications[ps.pair.s_ident];
        j["s"] = {{e1.first, e1.second}, {e2.first, e2.second}};
    } else {
        j["s"] = nullptr;
    }
    j["identifications"] = nlohmann::ordered_json::array();
    for (const auto& [e1, e2] : ps.pair.identifications)
        j["identifications"].push_back({{e1.first, e1.second}, {e2.first, e2.second}});
    j["chords"] = nlohmann::ordered_json::array();
    std::vector<Chord> chords = ps.tri.chords;
    std::sort(chords.begin(), chords.end());
    for (const auto& c : chords) j["chords"].push_back({c.first, c.second});
    return j.dump(2) + "\n";
}

} // namespace qpt
