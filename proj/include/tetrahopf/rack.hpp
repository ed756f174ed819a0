#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tetrahopf {

/// Elements of the field F4, coded 0 -> 0, 1 -> 1, 2 -> omega, 3 -> omega^2.
using F4 = uint8_t;

inline constexpr F4 kF4Zero = 0, kF4One = 1, kF4Omega = 2, kF4OmegaSq = 3;

F4 f4_add(F4 a, F4 b);
F4 f4_mul(F4 a, F4 b);
std::string f4_name(F4 a); // "0", "1", "w", "w2"

/// The tetrahedron rack operation a |> b = omega*b + omega^2*a on F4.
F4 triangle(F4 a, F4 b);

struct RackReport {
    bool pass = true;
    int distributivity_triples_checked = 0;
    int bijections_checked = 0;
    std::string witness; // first failing triple / element, empty on pass
};

/// Exhaustively checks left self-distributivity and bijectivity of every
/// left translation over all of F4.
RackReport check_rack_axioms();

/// One relation g_i g_j = g_{i|>j} g_i of the enveloping group presentation.
struct EnvRelation {
    F4 i, j;
    F4 i_triangle_j;
};

/// All 16 relations of the enveloping group of the tetrahedron rack.
std::vector<EnvRelation> enveloping_relations();

} // namespace tetrahopf
