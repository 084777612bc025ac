#pragma once

#include "plumbhf/char_lattice.hpp"
#include "plumbhf/graph.hpp"

namespace plumbhf {

// Plumbing for the Brieskorn sphere Sigma(2, 2n+1, 4n+3): a -1 vertex joined to
// -2, -3 and -(4n+3), with a chain of n-1 (-2)-vertices hanging off the -3 vertex.
// Coordinates: the first four are -1, -2, -3, -(4n+3); the chain follows, nearest first.
PlumbingGraph family_graph(int n);

// K_i = (1, 0, -1, -4n-3+2i, 0, ..., 0), i = 1..2n
CharVector family_generator(int n, int i);

// 1, 1, 2, 2, 3, 3, ...
inline int family_p(int i) { return (i + 1) / 2; }
inline int family_q(int i) { return i * (i + 1); }

}  // namespace plumbhf
