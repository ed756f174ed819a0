#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "tetrahopf/scalars.hpp"
#include "tetrahopf/words.hpp"

namespace tetrahopf {

/// An element of the free algebra with coefficients in Q(zeta_N)[F].
/// No zero coefficients are stored; terms are kept in deglex order so the
/// leading term is the last one.
class FreeElem {
public:
    using Terms = std::map<Word, FPoly, DegLexLess>;

    FreeElem() = default;
    static FreeElem word(const Word& w, FPoly c = FPoly(Cyclotomic(1)));

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }
    const Word& leading_word() const;
    const FPoly& leading_coeff() const;
    FPoly coeff(const Word& w) const;

    void add_term(const Word& w, const FPoly& c);
    FreeElem operator+(const FreeElem& o) const;
    FreeElem operator-(const FreeElem& o) const;
    FreeElem operator-() const;
    FreeElem scaled(const FPoly& c) const;
    FreeElem concat_left(const Word& w) const;  // w * this
    FreeElem concat_right(const Word& w) const; // this * w
    bool operator==(const FreeElem& o) const { return terms_ == o.terms_; }

    /// Substitute a concrete value for the central parameter F.
    FreeElem specialize_F(const Cyclotomic& value) const;

    std::string to_string() const;

private:
    Terms terms_;
};

/// The defining relations: four squares, four three-term quadratics and
/// z - F, with F the central parameter (nine generators).
std::vector<FreeElem> base_relations(int order);
/// The eight quadratic relations alone.
std::vector<FreeElem> quadratic_relations(int order);
/// z = (xw x0 x1)^2 + (x1 xw x0)^2 + (x0 x1 xw)^2 as a free element.
FreeElem z_element(int order);
/// z' = (xw xw2 x0)^2 + (x1 xw2 xw)^2 + (x0 xw2 x1)^2.
FreeElem z_prime_element(int order);
/// The top-degree basis word x0 x1 x0 xw x0 x1 xw x0 xw2.
Word m_top_word();
std::vector<FreeElem> specialize_F(const std::vector<FreeElem>& elems, const Cyclotomic& value);

struct Rule {
    Word lead;
    FreeElem rhs; // lead rewrites to rhs; every rhs word is deglex-smaller
};

/// A rewriting system on the free algebra, oriented by deglex with letter
/// precedence x0 < x1 < xw < xw2. complete() resolves every overlap
/// ambiguity, so normal forms of the returned system are confluent.
class RuleSystem {
public:
    static RuleSystem complete(const std::vector<FreeElem>& generators, int degree_bound);

    int degree_bound() const { return degree_bound_; }
    bool completed() const { return completed_; }
    std::vector<Rule> rules() const; // alive rules, sorted by lead

    std::shared_ptr<const FreeElem> normal_form_word(const Word& w) const;
    FreeElem normal_form(const FreeElem& x) const;
    bool is_standard(const Word& w) const; // contains no leading word

    /// Standard monomials of the completed system; errors unless there are
    /// exactly 72 of them, all of degree <= 9.
    std::vector<Word> standard_monomials() const;
    std::vector<Word> standard_monomials_unchecked(int max_degree) const;

    /// One rule per line, "lead -> rhs", for audit.
    std::string dump() const;

    RuleSystem(RuleSystem&&) = default;
    RuleSystem& operator=(RuleSystem&&) = default;

private:
    RuleSystem();

    struct Entry {
        Word lead;
        FreeElem rhs;
        bool alive = true;
    };

    struct Memo {
        std::mutex mu;
        std::unordered_map<uint64_t, std::shared_ptr<const FreeElem>> map;
    };

    int find_rule_at(const Word& w, int pos) const; // -1 if no lead matches at pos
    std::vector<int> add_rule(const Word& lead, FreeElem rhs); // returns retired rules
    bool orient_and_add(const FreeElem& elem, std::deque<FreeElem>& requeue);

    int degree_bound_ = 0;
    bool completed_ = false;
    std::vector<Entry> entries_;
    std::unordered_map<uint64_t, int> by_lead_;
    int max_lead_len_ = 0;

    mutable std::unique_ptr<Memo> memo_;
};

/// Enumeration of the 72 words of the basis B from its five-row description.
std::vector<Word> b_basis_words();

} // namespace tetrahopf
