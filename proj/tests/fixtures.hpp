#pragma once

#include <string>
#include <vector>

#include "qsi/quiver.hpp"

// Shared test quivers. Vertex orders are fixed so dense vectors in tests read
// the same way as the diagrams in the docs.
namespace fx {

using qsi::DimVector;
using qsi::Quiver;
using qsi::Weight;

inline Quiver kronecker(int arrows) {
  std::vector<std::pair<int, int>> a(arrows, {0, 1});
  return Quiver::make({"1", "2"}, a, false);
}

// A_2 with the arrow 1 -> 2.
inline Quiver a2() { return Quiver::make({"1", "2"}, {{0, 1}}, false); }

// A_2 with the arrow 2 -> 1.
inline Quiver a2_rev() { return Quiver::make({"1", "2"}, {{1, 0}}, false); }

// T_{3,3,2}: vertices x1,x2,y1,y2,z1,c.
inline Quiver t332() {
  return Quiver::make({"x1", "x2", "y1", "y2", "z1", "c"},
                      {{0, 1}, {1, 5}, {2, 3}, {3, 5}, {4, 5}}, false);
}

// Square quiver: 1 -> 2, 1 -> 3, 1 -> 4, 2 -> 4, 3 -> 2, 3 -> 4 with vertices
// (1,2;3,4) = (top-left, top-right; bottom-left, bottom-right).
inline Quiver square() {
  return Quiver::make({"1", "2", "3", "4"}, {{0, 1}, {0, 3}, {0, 2}, {1, 3}, {2, 3}, {2, 1}},
                      false);
}

// Four outer vertices each with one arrow into the center; dimension
// (1,1,1,1;2) makes Sigma a cone over the octahedron.
inline Quiver octahedron() {
  return Quiver::make({"t", "l", "r", "b", "c"}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, false);
}
inline DimVector octahedron_dim() { return DimVector{{1, 1, 1, 1, 2}}; }

// Three outer vertices with double arrows into the center; dimension
// (1,1,1;3) makes Sigma a cone over the hexagon.
inline Quiver hexagon() {
  return Quiver::make({"t", "l", "r", "c"}, {{0, 3}, {0, 3}, {1, 3}, {1, 3}, {2, 3}, {2, 3}},
                      false);
}
inline DimVector hexagon_dim() { return DimVector{{1, 1, 1, 3}}; }

// 3-cycle with a loop at each vertex.
inline Quiver cycle3_loops() {
  return Quiver::make({"1", "2", "3"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 0}}, true);
}

// The separated-doubling illustration: o <-> o => o (4 arrows).
inline Quiver doubling_example() {
  return Quiver::make({"1", "2", "3"}, {{0, 1}, {1, 0}, {1, 2}, {1, 2}}, true);
}

// Three-vertex quiver with 2-cycles against vertex 1 and the simple-dimension
// inequalities a1 <= a2+a3, a2 <= a1, a3 <= a1+a2.
inline Quiver simple_dim_example() {
  return Quiver::make({"1", "2", "3"}, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 0}}, true);
}

}  // namespace fx
