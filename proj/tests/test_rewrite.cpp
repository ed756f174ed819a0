#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tetrahopf/linalg.hpp"
#include "tetrahopf/rewrite.hpp"

using namespace tetrahopf;

namespace {

constexpr int kOrder = 1; // plain rationals are enough for the free algebra

const RuleSystem& completed_full() {
    static RuleSystem rs = RuleSystem::complete(base_relations(kOrder), 12);
    return rs;
}

RuleSystem completed_at(long fvalue) {
    return RuleSystem::complete(
        specialize_F(base_relations(kOrder), Cyclotomic::rational(fvalue, kOrder)), 12);
}

Word word_from(std::initializer_list<F4> ls) { return Word(std::vector<F4>(ls)); }

} // namespace

TEST_CASE("base relations shape") {
    auto rels = base_relations(kOrder);
    CHECK(rels.size() == 9);
    // squares come first
    for (int i = 0; i < 4; ++i) {
        CHECK(rels[i].terms().size() == 1);
        CHECK(rels[i].leading_word().size() == 2);
    }
    // three-term quadratics with coefficients {1,1,1}
    for (int i = 4; i < 8; ++i) {
        CHECK(rels[i].terms().size() == 3);
        for (const auto& [w, c] : rels[i].terms()) {
            CHECK(w.size() == 2);
            CHECK(c == FPoly(Cyclotomic::one(kOrder)));
        }
    }
    // z - F: three words of degree 6 plus the empty word with coefficient -F
    const auto& zf = rels[8];
    int deg6 = 0;
    for (const auto& [w, c] : zf.terms()) {
        if (w.size() == 6) {
            ++deg6;
            CHECK(c == FPoly(Cyclotomic::one(kOrder)));
        } else {
            CHECK(w.empty());
            CHECK(c == -FPoly::F(kOrder));
        }
    }
    CHECK(deg6 == 3);
}

TEST_CASE("completion yields 72 standard monomials") {
    SUBCASE("F = 0") {
        RuleSystem rs = completed_at(0);
        auto words = rs.standard_monomials();
        CHECK(words.size() == 72);
    }
    SUBCASE("F = 1") {
        RuleSystem rs = completed_at(1);
        CHECK(rs.standard_monomials().size() == 72);
    }
    SUBCASE("F symbolic") {
        const RuleSystem& rs = completed_full();
        auto words = rs.standard_monomials();
        CHECK(words.size() == 72);
        CHECK(words.front().empty()); // contains the empty word
        int maxdeg = 0;
        for (const auto& w : words) maxdeg = std::max(maxdeg, w.size());
        CHECK(maxdeg == 9);
    }
}

TEST_CASE("normal form spot values") {
    const RuleSystem& rs = completed_full();
    CHECK(rs.normal_form(FreeElem::word(word_from({kF4Zero, kF4Zero}))).is_zero());
    // x1 x0 x1 = x0 x1 x0
    FreeElem diff = FreeElem::word(word_from({kF4One, kF4Zero, kF4One})) -
                    FreeElem::word(word_from({kF4Zero, kF4One, kF4Zero}));
    CHECK(rs.normal_form(diff).is_zero());
    // z reduces to F * 1
    FreeElem z = z_element(kOrder);
    FreeElem nf = rs.normal_form(z);
    REQUIRE(nf.terms().size() == 1);
    CHECK(nf.terms().begin()->first.empty());
    CHECK(nf.terms().begin()->second == FPoly::F(kOrder));
}

TEST_CASE("z - z' lies in the quadratic ideal") {
    RuleSystem quad = RuleSystem::complete(quadratic_relations(kOrder), 12);
    FreeElem d = z_element(kOrder) - z_prime_element(kOrder);
    CHECK(quad.normal_form(d).is_zero());
    // and z itself does not reduce to zero there
    CHECK_FALSE(quad.normal_form(z_element(kOrder)).is_zero());
}

TEST_CASE("B basis enumeration") {
    auto words = b_basis_words();
    CHECK(words.size() == 72);
    const RuleSystem& rs = completed_full();
    // every B word is a standard monomial for this order, hence NF-invariant
    for (const auto& b : words) {
        CAPTURE(b.to_string());
        CHECK(rs.is_standard(b));
    }
    // m_top is the unique degree-9 word
    int deg9 = 0;
    for (const auto& b : words)
        if (b.size() == 9) {
            ++deg9;
            CHECK(b == m_top_word());
        }
    CHECK(deg9 == 1);
}

TEST_CASE("B words are linearly independent in normal form") {
    for (long c : {0L, 1L}) {
        RuleSystem rs = completed_at(c);
        auto standard = rs.standard_monomials();
        auto index_of = [&standard](const Word& w) {
            for (size_t i = 0; i < standard.size(); ++i)
                if (standard[i] == w) return static_cast<int>(i);
            throw Error("word not standard: " + w.to_string());
        };
        SubspaceBasis span(72, kOrder);
        for (const auto& b : b_basis_words()) {
            FreeElem nf = rs.normal_form(FreeElem::word(b));
            Vec v = vec_zero(72, kOrder);
            for (const auto& [w, fp] : nf.terms()) {
                CHECK(fp.is_constant());
                v[index_of(w)] = fp.coeff(0);
            }
            CHECK(span.insert(v));
        }
        CHECK(span.size() == 72);
    }
}

TEST_CASE("m_top is an integral at F = 0") {
    RuleSystem rs = completed_at(0);
    Word mtop = m_top_word();
    for (F4 i = 0; i < 4; ++i) {
        CHECK(rs.normal_form(FreeElem::word(Word::single(i).concat(mtop))).is_zero());
        CHECK(rs.normal_form(FreeElem::word(mtop.concat(Word::single(i)))).is_zero());
    }
}

TEST_CASE("normal form is idempotent and linear on random words") {
    const RuleSystem& rs = completed_full();
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> letter(0, 3);
    auto random_word = [&]() {
        std::vector<F4> ls(len(rng));
        for (auto& l : ls) l = static_cast<F4>(letter(rng));
        return Word(ls);
    };
    for (int rep = 0; rep < 1000; ++rep) {
        Word w1 = random_word(), w2 = random_word();
        FreeElem a = FreeElem::word(w1), b = FreeElem::word(w2);
        FreeElem nf_a = rs.normal_form(a);
        CHECK(rs.normal_form(nf_a) == nf_a); // idempotent
        FreeElem lhs = rs.normal_form(a + b.scaled(FPoly(Cyclotomic::rational(3, kOrder))));
        FreeElem rhs = nf_a + rs.normal_form(b).scaled(FPoly(Cyclotomic::rational(3, kOrder)));
        CHECK(lhs == rhs); // linear
    }
}

TEST_CASE("left multiplication matrices satisfy the defining relations at F = 0") {
    RuleSystem rs = completed_at(0);
    auto standard = rs.standard_monomials();
    auto index_of = [&standard](const Word& w) {
        for (size_t i = 0; i < standard.size(); ++i)
            if (standard[i] == w) return static_cast<int>(i);
        throw Error("not standard");
    };
    // 72x72 matrices of left multiplication by each generator
    std::vector<Mat> L(4, Mat(72, 72, kOrder));
    for (F4 i = 0; i < 4; ++i)
        for (int col = 0; col < 72; ++col) {
            FreeElem nf = rs.normal_form(FreeElem::word(Word::single(i).concat(standard[col])));
            for (const auto& [w, c] : nf.terms()) L[i].at(index_of(w), col) = c.coeff(0);
        }
    auto word_matrix = [&](std::initializer_list<F4> ls) {
        Mat m = Mat::identity(72, kOrder);
        for (F4 l : ls) m = m * L[l];
        return m;
    };
    for (F4 i = 0; i < 4; ++i) CHECK((L[i] * L[i]).is_zero());
    CHECK((word_matrix({kF4Zero, kF4Omega}) + word_matrix({kF4Omega, kF4One}) +
           word_matrix({kF4One, kF4Zero}))
              .is_zero());
    CHECK((word_matrix({kF4Zero, kF4OmegaSq}) + word_matrix({kF4OmegaSq, kF4Omega}) +
           word_matrix({kF4Omega, kF4Zero}))
              .is_zero());
    CHECK((word_matrix({kF4One, kF4OmegaSq}) + word_matrix({kF4Zero, kF4One}) +
           word_matrix({kF4OmegaSq, kF4Zero}))
              .is_zero());
    CHECK((word_matrix({kF4Omega, kF4OmegaSq}) + word_matrix({kF4One, kF4Omega}) +
           word_matrix({kF4OmegaSq, kF4One}))
              .is_zero());
    Mat z = word_matrix({kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One}) +
            word_matrix({kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero}) +
            word_matrix({kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega});
    CHECK(z.is_zero());
}

TEST_CASE("rule dump is audit friendly") {
    const RuleSystem& rs = completed_full();
    std::string dump = rs.dump();
    CHECK(dump.find("x0 x0 -> 0") != std::string::npos);
    CHECK(dump.find("->") != std::string::npos);
}
