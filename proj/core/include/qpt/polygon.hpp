#ifndef QPT_POLYGON_HPP
#define QPT_POLYGON_HPP

#include <optional>
#include <string>
#include <vector>

#include "qpt/quiver.hpp"

namespace qpt {

// Two polygons glued along a distinguished edge S, realized as a convex
// N-gon (N = k + l - 2) with vertices 1..N counterclockwise and S the chord
// {1, k}; the first polygon occupies vertices 1..k, the second k..N,1.
// A pair of boundary edges may be identified (orientation-reversing); when
// l = 0 the figure is a single k-gon, and S, if present, is an identified
// boundary-edge pair.

using Chord = std::pair<int, int>; // polygon vertices, stored with first < second
using BoundaryEdge = std::pair<int, int>; // (i, next(i)) counterclockwise

struct PolygonPair {
    int k = 3;
    int l = 0; // 0: single polygon
    std::vector<std::pair<BoundaryEdge, BoundaryEdge>> identifications;
    int s_ident = -1; // index into identifications naming S, when self-glued

    int size() const { return l > 0 ? k + l - 2 : k; }
    bool glued_s() const { return l > 0; }
    bool self_glued_s() const { return s_ident >= 0; }
    Chord s_chord() const { return {1, k}; }
    int next_vertex(int v) const { return v == size() ? 1 : v + 1; }
};

struct PolygonTriangulation {
    std::vector<Chord> chords; // pairwise non-crossing, triangulating both sides
};

// Validates the pair/triangulation data; throws ParseError on violations.
void validate_polygon(const PolygonPair& pp, const PolygonTriangulation& t);

bool chords_cross(const Chord& a, const Chord& b);

// The diagonal cutting a triangle off side 0 (the k-gon) or side 1 together
// with S and S's counterclockwise neighbouring edge; absent for triangles.
std::optional<Chord> diagonal_d(const PolygonPair& pp, int side);

// Chords of t crossing c, ordered by the position of the crossing along c.
std::vector<Chord> crossing_edges(const PolygonPair& pp, const PolygonTriangulation& t,
                                  const Chord& c);

// Replaces e by the opposite diagonal of the quadrilateral formed by its two
// triangles.
PolygonTriangulation flip(const PolygonPair& pp, const PolygonTriangulation& t, const Chord& e);

struct FlipSequence {
    std::vector<Chord> flips;
    PolygonTriangulation final;
};

// Flips every chord crossing the diagonal of side 0 in order, then the same
// for side 1. Each chord is flipped at most once and the final triangulation
// contains both diagonals (when they exist).
FlipSequence exconvrep_sequence(const PolygonPair& pp, const PolygonTriangulation& t);

// The quiver of a triangulation: one vertex per internal arc (S and the
// chords), one arrow per shared corner inside a triangle, and a 3-cycle
// potential term for every triangle whose three sides are all internal.
QP polygon_quiver(const PolygonPair& pp, const PolygonTriangulation& t);

// vertex name of a chord in polygon_quiver output
std::string chord_name(const Chord& c);
// the quiver vertex index a chord maps to (S's arc is named "S")
int chord_vertex(const QP& qp, const Chord& c);

// All triangulations of the pair (product over the two polygons when glued).
std::vector<PolygonTriangulation> all_triangulations(const PolygonPair& pp);

// Polygon spec file: {"k":, "l":, "s":, "identifications":, "chords": }
struct PolygonSpec {
    PolygonPair pair;
    PolygonTriangulation tri;
};
PolygonSpec parse_polygon(const std::string& text);
std::string serialize_polygon(const PolygonSpec& ps);

} // namespace qpt

#endif
