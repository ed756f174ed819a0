#include "tetrahopf/rack.hpp"

#include <sstream>

namespace tetrahopf {

namespace {

// F4 with basis {1, omega} over GF(2): code bit 0 is the coefficient of 1,
// bit 1 the coefficient of omega. Addition is XOR; the multiplication table
// is written out so it can be audited by eye.
constexpr F4 kMul[4][4] = {
    // 0  1  w  w2
    {0, 0, 0, 0}, // 0
    {0, 1, 2, 3}, // 1
    {0, 2, 3, 1}, // w   (w*w = w2, w*w2 = 1)
    {0, 3, 1, 2}, // w2  (w2*w2 = w)
};

} // namespace

F4 f4_add(F4 a, F4 b) { return a ^ b; }
F4 f4_mul(F4 a, F4 b) { return kMul[a][b]; }

std::string f4_name(F4 a) {
    static const char* names[4] = {"0", "1", "w", "w2"};
    return names[a & 3];
}

F4 triangle(F4 a, F4 b) { return f4_add(f4_mul(kF4Omega, b), f4_mul(kF4OmegaSq, a)); }

RackReport check_rack_axioms() {
    RackReport rep;
    for (F4 a = 0; a < 4; ++a)
        for (F4 b = 0; b < 4; ++b)
            for (F4 c = 0; c < 4; ++c) {
                ++rep.distributivity_triples_checked;
                F4 lhs = triangle(a, triangle(b, c));
                F4 rhs = triangle(triangle(a, b), triangle(a, c));
                if (lhs != rhs) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "self-distributivity fails at (" << f4_name(a) << "," << f4_name(b)
                       << "," << f4_name(c) << ")";
                    rep.witness = os.str();
                    return rep;
                }
            }
    for (F4 a = 0; a < 4; ++a) {
        ++rep.bijections_checked;
        bool seen[4] = {false, false, false, false};
        for (F4 b = 0; b < 4; ++b) seen[triangle(a, b)] = true;
        if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
            rep.pass = false;
            rep.witness = "left translation by " + f4_name(a) + " is not a bijection";
            return rep;
        }
    }
    return rep;
}

std::vector<EnvRelation> enveloping_relations() {
    std::vector<EnvRelation> rels;
    rels.reserve(16);
    for (F4 i = 0; i < 4; ++i)
        for (F4 j = 0; j < 4; ++j) rels.push_back({i, j, triangle(i, j)});
    return rels;
}

} // namespace tetrahopf
