#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetrahopf/error.hpp"
#include "tetrahopf/rack.hpp"

namespace tetrahopf {

/// A word in the free algebra on x_0, x_1, x_w, x_w2, packed two bits per
/// letter. Words stay short (products of two degree-9 basis words plus
/// completion overlaps), so 28 letters is ample.
struct Word {
    static constexpr int kMaxLen = 28;

    uint64_t bits = 0; // letter k at bit position 2k
    uint8_t len = 0;

    Word() = default;
    explicit Word(const std::vector<F4>& letters) {
        if (letters.size() > kMaxLen) throw Error("word too long");
        len = static_cast<uint8_t>(letters.size());
        for (size_t k = 0; k < letters.size(); ++k)
            bits |= static_cast<uint64_t>(letters[k] & 3) << (2 * k);
    }
    static Word single(F4 letter) {
        Word w;
        w.len = 1;
        w.bits = letter & 3;
        return w;
    }

    int size() const { return len; }
    bool empty() const { return len == 0; }
    F4 letter(int k) const { return static_cast<F4>((bits >> (2 * k)) & 3); }

    uint64_t key() const { return bits | (static_cast<uint64_t>(len) << 56); }

    Word subword(int pos, int n) const {
        Word w;
        w.len = static_cast<uint8_t>(n);
        w.bits = (bits >> (2 * pos)) & ((n == 32) ? ~0ull : ((1ull << (2 * n)) - 1));
        return w;
    }
    Word prefix(int n) const { return subword(0, n); }
    Word suffix_from(int pos) const { return subword(pos, len - pos); }

    Word concat(const Word& o) const {
        if (len + o.len > kMaxLen) throw Error("word too long");
        Word w;
        w.len = static_cast<uint8_t>(len + o.len);
        w.bits = bits | (o.bits << (2 * len));
        return w;
    }

    bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    std::vector<F4> letters() const {
        std::vector<F4> ls(len);
        for (int k = 0; k < len; ++k) ls[k] = letter(k);
        return ls;
    }

    /// "x0 x1 xw xw2 ...", the empty word prints as "1".
    std::string to_string() const {
        if (len == 0) return "1";
        std::string s;
        for (int k = 0; k < len; ++k) {
            if (k) s += ' ';
            s += 'x';
            s += f4_name(letter(k));
        }
        return s;
    }
};

/// Degree-lexicographic order with letter precedence x0 < x1 < xw < xw2.
inline bool deglex_less(const Word& a, const Word& b) {
    if (a.len != b.len) return a.len < b.len;
    for (int k = 0; k < a.len; ++k) {
        F4 la = a.letter(k), lb = b.letter(k);
        if (la != lb) return la < lb;
    }
    return false;
}

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

} // namespace tetrahopf
