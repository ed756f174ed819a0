#include "tetrahopf/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tetrahopf {

FreeElem FreeElem::word(const Word& w, FPoly c) {
    FreeElem e;
    e.add_term(w, c);
    return e;
}

const Word& FreeElem::leading_word() const {
    if (terms_.empty()) throw Error("leading word of zero");
    return terms_.rbegin()->first;
}

const FPoly& FreeElem::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coefficient of zero");
    return terms_.rbegin()->second;
}

FPoly FreeElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FPoly() : it->second;
}

void FreeElem::add_term(const Word& w, const FPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElem FreeElem::operator+(const FreeElem& o) const {
    FreeElem r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeElem FreeElem::operator-(const FreeElem& o) const {
    FreeElem r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreeElem FreeElem::operator-() const {
    FreeElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeElem FreeElem::scaled(const FPoly& c) const {
    FreeElem r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) {
        FPoly p = k * c;
        if (!p.is_zero()) r.terms_.emplace(w, p);
    }
    return r;
}

FreeElem FreeElem::concat_left(const Word& w) const {
    FreeElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(w.concat(m), c);
    return r;
}

FreeElem FreeElem::concat_right(const Word& w) const {
    FreeElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.concat(w), c);
    return r;
}

FreeElem FreeElem::specialize_F(const Cyclotomic& value) const {
    FreeElem r;
    for (const auto& [w, c] : terms_) {
        Cyclotomic v = c.eval(value);
        if (!v.is_zero()) r.terms_.emplace(w, FPoly(v));
    }
    return r;
}

std::string FreeElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const FPoly& c = it->second;
        std::string cs = c.to_string();
        if (cs == "(1)") {
            os << (first ? "" : " + ");
        } else if (cs == "(-1)") {
            os << (first ? "-" : " - ");
        } else {
            os << (first ? "" : " + ") << "[" << cs << "] ";
        }
        os << it->first.to_string();
        first = false;
    }
    return os.str();
}

namespace {

Word make_word(std::initializer_list<F4> ls) { return Word(std::vector<F4>(ls)); }

} // namespace

FreeElem z_element(int order) {
    const Cyclotomic one = Cyclotomic::one(order);
    FreeElem z;
    z.add_term(make_word({kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One}), FPoly(one));
    z.add_term(make_word({kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero}), FPoly(one));
    z.add_term(make_word({kF4Zero, kF4One, kF4Omega, kF4Zero, kF4One, kF4Omega}), FPoly(one));
    return z;
}

FreeElem z_prime_element(int order) {
    const Cyclotomic one = Cyclotomic::one(order);
    FreeElem z;
    z.add_term(make_word({kF4Omega, kF4OmegaSq, kF4Zero, kF4Omega, kF4OmegaSq, kF4Zero}), FPoly(one));
    z.add_term(make_word({kF4One, kF4OmegaSq, kF4Omega, kF4One, kF4OmegaSq, kF4Omega}), FPoly(one));
    z.add_term(make_word({kF4Zero, kF4OmegaSq, kF4One, kF4Zero, kF4OmegaSq, kF4One}), FPoly(one));
    return z;
}

Word m_top_word() {
    return make_word({kF4Zero, kF4One, kF4Zero, kF4Omega, kF4Zero, kF4One, kF4Omega, kF4Zero,
                      kF4OmegaSq});
}

std::vector<FreeElem> quadratic_relations(int order) {
    const Cyclotomic one = Cyclotomic::one(order);
    std::vector<FreeElem> rels;
    for (F4 i = 0; i < 4; ++i) {
        FreeElem sq;
        sq.add_term(make_word({i, i}), FPoly(one));
        rels.push_back(sq);
    }
    const F4 triples[4][3][2] = {
        {{kF4Zero, kF4Omega}, {kF4Omega, kF4One}, {kF4One, kF4Zero}},
        {{kF4Zero, kF4OmegaSq}, {kF4OmegaSq, kF4Omega}, {kF4Omega, kF4Zero}},
        {{kF4One, kF4OmegaSq}, {kF4Zero, kF4One}, {kF4OmegaSq, kF4Zero}},
        {{kF4Omega, kF4OmegaSq}, {kF4One, kF4Omega}, {kF4OmegaSq, kF4One}},
    };
    for (const auto& t : triples) {
        FreeElem rel;
        for (const auto& pair : t) rel.add_term(make_word({pair[0], pair[1]}), FPoly(one));
        rels.push_back(rel);
    }
    return rels;
}

std::vector<FreeElem> base_relations(int order) {
    std::vector<FreeElem> rels = quadratic_relations(order);
    FreeElem zf = z_element(order);
    zf.add_term(Word(), -FPoly::F(order));
    rels.push_back(zf);
    return rels;
}

std::vector<FreeElem> specialize_F(const std::vector<FreeElem>& elems, const Cyclotomic& value) {
    std::vector<FreeElem> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.specialize_F(value));
    return out;
}

std::vector<Word> b_basis_words() {
    const std::vector<std::vector<Word>> rows = {
        {Word(), make_word({kF4Zero})},
        {Word(), make_word({kF4One}), make_word({kF4One, kF4Zero})},
        {Word(), make_word({kF4Omega, kF4Zero, kF4One})},
        {Word(), make_word({kF4Omega}), make_word({kF4Omega, kF4Zero})},
        {Word(), make_word({kF4OmegaSq})},
    };
    std::vector<Word> words = {Word()};
    for (const auto& row : rows) {
        std::vector<Word> next;
        for (const auto& w : words)
            for (const auto& m : row) next.push_back(w.concat(m));
        words = std::move(next);
    }
    std::sort(words.begin(), words.end(), DegLexLess{});
    return words;
}

int RuleSystem::find_rule_at(const Word& w, int pos) const {
    const int avail = w.size() - pos;
    for (int l = 1; l <= std::min(max_lead_len_, avail); ++l) {
        auto it = by_lead_.find(w.subword(pos, l).key());
        if (it != by_lead_.end() && entries_[it->second].alive) return it->second;
    }
    return -1;
}

RuleSystem::RuleSystem() : memo_(std::make_unique<Memo>()) {}

std::shared_ptr<const FreeElem> RuleSystem::normal_form_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->map.find(w.key());
        if (it != memo_->map.end()) return it->second;
    }
    std::shared_ptr<const FreeElem> res;
    int rule = -1, pos = 0;
    for (pos = 0; pos < w.size(); ++pos) {
        rule = find_rule_at(w, pos);
        if (rule >= 0) break;
    }
    if (rule < 0) {
        res = std::make_shared<FreeElem>(FreeElem::word(w));
    } else {
        const Entry& e = entries_[rule];
        Word prefix = w.prefix(pos);
        Word suffix = w.suffix_from(pos + e.lead.size());
        FreeElem acc;
        for (const auto& [m, c] : e.rhs.terms()) {
            auto sub = normal_form_word(prefix.concat(m).concat(suffix));
            for (const auto& [sw, sc] : sub->terms()) acc.add_term(sw, sc * c);
        }
        res = std::make_shared<FreeElem>(std::move(acc));
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto [it, inserted] = memo_->map.emplace(w.key(), res);
    return it->second;
}

FreeElem RuleSystem::normal_form(const FreeElem& x) const {
    FreeElem acc;
    for (const auto& [w, c] : x.terms()) {
        auto nf = normal_form_word(w);
        for (const auto& [sw, sc] : nf->terms()) acc.add_term(sw, sc * c);
    }
    return acc;
}

bool RuleSystem::is_standard(const Word& w) const {
    for (int pos = 0; pos < w.size(); ++pos)
        if (find_rule_at(w, pos) >= 0) return false;
    return true;
}

std::vector<int> RuleSystem::add_rule(const Word& lead, FreeElem rhs) {
    if (lead.empty()) throw Error("completion produced the unit: ideal is the whole algebra");
    if (lead.size() > degree_bound_)
        throw Error("completion exceeded degree bound at lead " + lead.to_string());
    // Retire every rule whose lead properly contains the new lead; the
    // caller re-queues their equations.
    std::vector<int> removed;
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
        if (!entries_[i].alive) continue;
        const Word& other = entries_[i].lead;
        if (other.size() <= lead.size()) continue;
        for (int pos = 0; pos + lead.size() <= other.size(); ++pos) {
            if (other.subword(pos, lead.size()) == lead) {
                entries_[i].alive = false;
                by_lead_.erase(other.key());
                removed.push_back(i);
                break;
            }
        }
    }
    int idx = static_cast<int>(entries_.size());
    entries_.push_back({lead, std::move(rhs), true});
    by_lead_[lead.key()] = idx;
    max_lead_len_ = 0;
    for (const auto& e : entries_)
        if (e.alive) max_lead_len_ = std::max(max_lead_len_, e.lead.size());
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->map.clear();
    return removed;
}

bool RuleSystem::orient_and_add(const FreeElem& elem, std::deque<FreeElem>& requeue) {
    FreeElem nf = normal_form(elem);
    if (nf.is_zero()) return false;
    const Word lead = nf.leading_word();
    const FPoly lc = nf.leading_coeff();
    if (lc.degree() != 0)
        throw Error("completion requires inverting a non-unit coefficient " + lc.to_string() +
                    " at lead " + lead.to_string());
    FreeElem rhs;
    for (const auto& [w, c] : nf.terms()) {
        if (w == lead) continue;
        rhs.add_term(w, -c.div_unit(lc));
    }
    for (int i : add_rule(lead, std::move(rhs)))
        requeue.push_back(FreeElem::word(entries_[i].lead) - entries_[i].rhs);
    return true;
}

RuleSystem RuleSystem::complete(const std::vector<FreeElem>& generators, int degree_bound) {
    if (degree_bound < 10) throw Error("degree bound must be at least 10");
    RuleSystem rs;
    rs.degree_bound_ = degree_bound;

    struct Pending {
        int deg;
        long seq;
        int r1, r2, k; // overlap word l1 + l2[k:]
        bool operator<(const Pending& o) const {
            return std::tie(deg, seq) < std::tie(o.deg, o.seq);
        }
    };
    std::set<Pending> pairs;
    long seq = 0;
    size_t scanned = 0; // entries whose overlap pairs are already enqueued

    std::deque<FreeElem> pending_elems(generators.begin(), generators.end());

    auto enqueue_pairs = [&]() {
        for (; scanned < rs.entries_.size(); ++scanned) {
            if (!rs.entries_[scanned].alive) continue;
            const Word& lnew = rs.entries_[scanned].lead;
            for (size_t j = 0; j <= scanned; ++j) {
                if (!rs.entries_[j].alive) continue;
                const Word& lold = rs.entries_[j].lead;
                // overlaps lnew ... lold and lold ... lnew
                for (int k = 1; k < std::min(lnew.size(), lold.size()); ++k) {
                    if (lnew.suffix_from(lnew.size() - k) == lold.prefix(k))
                        pairs.insert({lnew.size() + lold.size() - k, seq++,
                                      static_cast<int>(scanned), static_cast<int>(j), k});
                    if (lold.suffix_from(lold.size() - k) == lnew.prefix(k))
                        pairs.insert({lnew.size() + lold.size() - k, seq++, static_cast<int>(j),
                                      static_cast<int>(scanned), k});
                }
            }
        }
    };

    while (!pending_elems.empty() || !pairs.empty()) {
        if (!pending_elems.empty()) {
            FreeElem e = std::move(pending_elems.front());
            pending_elems.pop_front();
            rs.orient_and_add(e, pending_elems);
            enqueue_pairs();
            continue;
        }
        Pending p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (!rs.entries_[p.r1].alive || !rs.entries_[p.r2].alive) continue;
        const Word& l1 = rs.entries_[p.r1].lead;
        const Word& l2 = rs.entries_[p.r2].lead;
        Word suffix = l2.suffix_from(p.k);
        Word prefix = l1.prefix(l1.size() - p.k);
        FreeElem route1 = rs.normal_form(rs.entries_[p.r1].rhs.concat_right(suffix));
        FreeElem route2 = rs.normal_form(rs.entries_[p.r2].rhs.concat_left(prefix));
        FreeElem diff = route1 - route2;
        if (!diff.is_zero()) pending_elems.push_back(std::move(diff));
    }

    // Fully reduce every right-hand side against the final system.
    for (auto& e : rs.entries_)
        if (e.alive) e.rhs = rs.normal_form(e.rhs);
    {
        std::lock_guard<std::mutex> lock(rs.memo_->mu);
        rs.memo_->map.clear();
    }
    rs.completed_ = true;
    return rs;
}

std::vector<Rule> RuleSystem::rules() const {
    std::vector<Rule> out;
    for (const auto& e : entries_)
        if (e.alive) out.push_back({e.lead, e.rhs});
    std::sort(out.begin(), out.end(),
              [](const Rule& a, const Rule& b) { return deglex_less(a.lead, b.lead); });
    return out;
}

std::vector<Word> RuleSystem::standard_monomials_unchecked(int max_degree) const {
    std::vector<Word> all = {Word()};
    std::vector<Word> level = {Word()};
    for (int d = 1; d <= max_degree && !level.empty(); ++d) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (F4 a = 0; a < 4; ++a) {
                Word cand = w.concat(Word::single(a));
                // w is standard, so only suffixes ending at the new letter
                // can match a lead.
                bool reducible = false;
                for (int l = 1; l <= std::min(max_lead_len_, cand.size()) && !reducible; ++l) {
                    auto it = by_lead_.find(cand.subword(cand.size() - l, l).key());
                    reducible = it != by_lead_.end() && entries_[it->second].alive;
                }
                if (!reducible) next.push_back(cand);
            }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), DegLexLess{});
    return all;
}

std::vector<Word> RuleSystem::standard_monomials() const {
    if (!completed_) throw Error("rule system is not completed");
    std::vector<Word> words = standard_monomials_unchecked(10);
    for (const auto& w : words)
        if (w.size() > 9)
            throw Error("standard monomial of degree > 9 found: " + w.to_string());
    if (words.size() != 72)
        throw Error("expected 72 standard monomials, found " + std::to_string(words.size()));
    return words;
}

std::string RuleSystem::dump() const {
    std::ostringstream os;
    for (const auto& r : rules()) os << r.lead.to_string() << " -> " << r.rhs.to_string() << "\n";
    return os.str();
}

} // namespace tetrahopf
