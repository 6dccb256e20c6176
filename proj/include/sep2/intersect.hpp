#pragma once

#include <array>
#include <vector>

#include "sep2/word.hpp"

namespace sep2 {

// Geometric intersection numbers for free homotopy classes on the genus-2
// surface, computed by counting linked pairs of lifts.  Lifts are tracked as
// CCW-normal bi-infinite edge paths in the octagon tiling; two lifts cross
// iff their endpoint pairs interleave on the circle at infinity, which is
// decided by comparing eventually-periodic boundary words in the cyclic germ
// order at the vertex.

/// Cyclic order of the 8 outgoing edge germs at the single vertex of the
/// octagon cell structure, read from the corner links of abABcdCD.
inline constexpr std::array<char, 8> kGermOrder = {'a', 'B', 'A', 'b', 'c', 'D', 'C', 'd'};

int germ_position(char c);

/// One essential crossing between lifts of two curves.  Phases index the CCW
/// cycles returned in PairCrossings; states lists every (i, j) vertex
/// coincidence of the same lift pair.
struct Crossing {
    int i = 0, j = 0;    // representative phases on ccw_u, ccw_v
    int orient = 0;      // +1 if v crosses u positively at this point
    std::vector<std::pair<int, int>> states;
};

struct PairCrossings {
    CyclicWord ccw_u, ccw_v;
    std::vector<Crossing> crossings;
};

/// All crossings of the curve classes [u], [v]; u, v primitive and not
/// conjugate (up to inversion) unless self is set, in which case v is ignored
/// and unordered self-crossings of u are produced.
PairCrossings compute_crossings(const CyclicWord& u, const CyclicWord& v, bool self);

/// A boundary ray from the base vertex: either a periodic ray along a lift of
/// a CCW-normal cyclic word, or the constant ray down one germ.
struct RaySpec {
    const Word* cycle = nullptr;
    int phase = 0;
    bool backward = false;
    char constant = 0;  // when nonzero, overrides the cycle fields
};

/// Circular order of rays with pairwise distinct endpoints, as indices into
/// the input, counterclockwise in the germ order.
std::vector<int> circular_ray_order(const std::vector<RaySpec>& rays);

/// Minimal self-intersection number of a primitive class.
int self_intersection(const CyclicWord& w);

/// Geometric intersection number of two primitive classes; 0 when the classes
/// agree up to inversion (isotopic simple curves are disjoint).
int intersection_number_classes(const CyclicWord& u, const CyclicWord& v);

} // namespace sep2
