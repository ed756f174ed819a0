#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetrahopf/realization.hpp"

using namespace tetrahopf;

namespace {

YDRealization extended_c4() {
    YDRealization base = mk_affine_realization(1, 0);
    FiniteGroup c4 = FiniteGroup::cyclic(4, "g");
    std::vector<Cyclotomic> chi1;
    for (int a = 0; a < 4; ++a) chi1.push_back(Cyclotomic::root_of_unity(a, 4));
    return extend_realization(base, c4, chi1);
}

} // namespace

TEST_CASE("affine (1,0) realization") {
    YDRealization r = mk_affine_realization(1, 0);
    CHECK(r.group.size() == 24);
    CHECK(r.group.label(r.gen(kF4Zero)) == "(0,t)");
    CHECK(r.chi(r.group.element("(0,t^3)")) == Cyclotomic::rational(-1, 2));
    CHECK(r.session_order == 2);
    ValidationReport rep = validate_realization(r);
    CHECK(rep.pass());
    CHECK_THROWS_AS(mk_affine_realization(1, 1), Error);
    CHECK_THROWS_AS(mk_affine_realization(0, 0), Error);
}

TEST_CASE("negative controls for validation") {
    YDRealization r = mk_affine_realization(1, 0);
    SUBCASE("character flipped at g_0") {
        YDRealization bad = r;
        bad.chi.values[bad.gen(kF4Zero)] = Cyclotomic::one(2);
        ValidationReport rep = validate_realization(bad);
        CHECK_FALSE(rep.pass());
        bool failed_multiplicative_or_minus1 = false;
        for (const auto& e : rep.entries)
            if (!e.pass && (e.name == "chi(g_i) = -1" || e.name == "chi multiplicative"))
                failed_multiplicative_or_minus1 = true;
        CHECK(failed_multiplicative_or_minus1);
    }
    SUBCASE("gmap made non-injective") {
        YDRealization bad = r;
        bad.gmap[1] = bad.gmap[0];
        ValidationReport rep = validate_realization(bad);
        CHECK_FALSE(rep.pass());
        bool inj_failed = false;
        for (const auto& e : rep.entries)
            if (!e.pass && e.name == "gmap injective") inj_failed = true;
        CHECK(inj_failed);
    }
}

TEST_CASE("extension by C4") {
    YDRealization r = extended_c4();
    CHECK(r.group.size() == 96);
    CHECK(r.session_order == 4);
    CHECK(validate_realization(r).pass());
    // chi_z = chi^6 is nontrivial: at the C4 generator it is (zeta_4)^6 = -1.
    int c = r.group.element("(0,1)*(g)");
    CHECK(r.chi_z(c) == Cyclotomic::rational(-1, 4));
    CHECK(z_weight_is_e(r));
    auto ker = ker_chi_z(r);
    CHECK(ker.size() == 48);
}

TEST_CASE("extension by the trivial group is the base") {
    YDRealization base = mk_affine_realization(1, 0);
    YDRealization ext =
        extend_realization(base, FiniteGroup::trivial(), {Cyclotomic::one(1)});
    CHECK(ext.group.size() == base.group.size());
    CHECK(validate_realization(ext).pass());
    for (int a = 0; a < base.group.size(); ++a) {
        CHECK(ext.group.label(a) == base.group.label(a));
        CHECK(ext.chi(a) == base.chi(a));
        for (int b = 0; b < base.group.size(); ++b) CHECK(ext.group.op(a, b) == base.group.op(a, b));
    }
}

TEST_CASE("ker chi_z for the bosonization case is everything") {
    YDRealization r = mk_affine_realization(1, 0);
    CHECK(ker_chi_z(r).size() == 24);
}

TEST_CASE("z has weight e") {
    CHECK(z_weight_is_e(mk_affine_realization(1, 0)));
    CHECK(z_weight_is_e(extended_c4()));
    // (2,0)-affine: z weight is (0, t^6) != e in C12, so not e.
    CHECK_FALSE(z_weight_is_e(mk_affine_realization(2, 0)));
}

TEST_CASE("epimorphism to F4xC6") {
    YDRealization r = extended_c4();
    Epimorphism epi = epimorphism_to_F4C6(r);
    CHECK(epi.target.size() == 24);
    CHECK(epi(r.gen(kF4Zero)) == epi.target.element("(0,t)"));
    CHECK(epi(r.group.id) == epi.target.id);
    int g0g1 = r.group.op(r.gen(kF4Zero), r.gen(kF4One));
    int gwg0 = r.group.op(r.gen(kF4Omega), r.gen(kF4Zero));
    CHECK(g0g1 == gwg0); // enveloping relation holds in G already
    CHECK(epi(g0g1) == epi(gwg0));
    // G' of the extended realization is the full base factor.
    CHECK(epi.gprime.size() == 24);

    int gt = g_top(r);
    CHECK(epi.defined_at(gt));
}

TEST_CASE("group label round trip and errors") {
    FiniteGroup g = FiniteGroup::f4_semidirect_cyclic(6);
    CHECK(g.size() == 24);
    g.check();
    CHECK(g.element("(w2,t^5)") >= 0);
    CHECK_THROWS_AS(g.element("(w2,t^6)"), Error);
    FiniteGroup c4 = FiniteGroup::cyclic(4, "g");
    CHECK(c4.label(0) == "1");
    CHECK(c4.label(1) == "g");
    CHECK(c4.label(3) == "g^3");
}
