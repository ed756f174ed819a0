#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetrahopf/rack.hpp"

using namespace tetrahopf;

namespace {

// Independent F4 oracle: GF(2)[x]/(x^2+x+1), elements as bit pairs (a, b)
// for a + b*x. Codes match the library's 0,1,w,w2 convention.
struct OracleF4 {
    int a, b;
};

OracleF4 from_code(F4 c) { return {c & 1, (c >> 1) & 1}; }
F4 to_code(OracleF4 v) { return static_cast<F4>((v.a & 1) | ((v.b & 1) << 1)); }

OracleF4 oadd(OracleF4 x, OracleF4 y) { return {(x.a + y.a) % 2, (x.b + y.b) % 2}; }

OracleF4 omul(OracleF4 x, OracleF4 y) {
    // (a1 + b1 x)(a2 + b2 x) = a1a2 + (a1b2 + b1a2) x + b1b2 x^2, x^2 = x + 1.
    int c0 = x.a * y.a, c1 = x.a * y.b + x.b * y.a, c2 = x.b * y.b;
    return {(c0 + c2) % 2, (c1 + c2) % 2};
}

F4 oracle_triangle(F4 a, F4 b) {
    OracleF4 w = from_code(kF4Omega), w2 = from_code(kF4OmegaSq);
    return to_code(oadd(omul(w, from_code(b)), omul(w2, from_code(a))));
}

} // namespace

TEST_CASE("F4 tables agree with the polynomial oracle") {
    for (F4 a = 0; a < 4; ++a)
        for (F4 b = 0; b < 4; ++b) {
            CHECK(f4_add(a, b) == to_code(oadd(from_code(a), from_code(b))));
            CHECK(f4_mul(a, b) == to_code(omul(from_code(a), from_code(b))));
            CHECK(triangle(a, b) == oracle_triangle(a, b));
        }
    // omega^3 = 1 and omega^2 + omega + 1 = 0
    CHECK(f4_mul(kF4Omega, f4_mul(kF4Omega, kF4Omega)) == kF4One);
    CHECK(f4_add(f4_add(kF4OmegaSq, kF4Omega), kF4One) == kF4Zero);
}

TEST_CASE("triangle spot values") {
    for (F4 a = 0; a < 4; ++a) CHECK(triangle(a, a) == a);
    CHECK(triangle(kF4Zero, kF4One) == kF4Omega);
    CHECK(triangle(kF4One, kF4Zero) == kF4OmegaSq);
}

TEST_CASE("rack axioms") {
    RackReport rep = check_rack_axioms();
    CHECK(rep.pass);
    CHECK(rep.distributivity_triples_checked == 64);
    CHECK(rep.bijections_checked == 4);
}

TEST_CASE("corrupted table is detected") {
    // Negative control: run the same exhaustive check against a deliberately
    // wrong operation and make sure a witness shows up.
    auto bad = [](F4 a, F4 b) { return f4_add(a, b); };
    bool found_violation = false;
    F4 wa = 0, wb = 0, wc = 0;
    for (F4 a = 0; a < 4 && !found_violation; ++a)
        for (F4 b = 0; b < 4 && !found_violation; ++b)
            for (F4 c = 0; c < 4 && !found_violation; ++c)
                if (bad(a, bad(b, c)) != bad(bad(a, b), bad(a, c))) {
                    found_violation = true;
                    wa = a, wb = b, wc = c;
                }
    CHECK(found_violation);
    CHECK(bad(wa, bad(wb, wc)) != bad(bad(wa, wb), bad(wa, wc)));
}

TEST_CASE("enveloping relations") {
    auto rels = enveloping_relations();
    CHECK(rels.size() == 16);
    for (const auto& r : rels)
        if (r.i == r.j) CHECK(r.i_triangle_j == r.i);
    // g_0 g_1 = g_w g_0
    bool found = false;
    for (const auto& r : rels)
        if (r.i == kF4Zero && r.j == kF4One) {
            CHECK(r.i_triangle_j == kF4Omega);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("left translations generate a transitive action") {
    // Orbit of 0 under all maps a |> - must be all of F4.
    bool reached[4] = {true, false, false, false};
    bool grew = true;
    while (grew) {
        grew = false;
        for (F4 a = 0; a < 4; ++a)
            for (F4 b = 0; b < 4; ++b)
                if (reached[b] && !reached[triangle(a, b)]) {
                    reached[triangle(a, b)] = true;
                    grew = true;
                }
    }
    CHECK(reached[0]);
    CHECK(reached[1]);
    CHECK(reached[2]);
    CHECK(reached[3]);
}
