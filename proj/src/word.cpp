#include "debruijn/word.hpp"

#include <algorithm>
#include <limits>

namespace debruijn {

Index ipow(Index q, int n) {
    if (n < 0) throw DomainError("ipow: negative exponent");
    Index r = 1;
    for (int i = 0; i < n; ++i) {
        if (q != 0 && r > std::numeric_limits<Index>::max() / q)
            throw ResourceError("ipow: q^n overflows 64-bit index space");
        r *= q;
    }
    return r;
}

Index encode_word(const Word& w, int q) {
    if (q < 2) throw DomainError("encode_word: q must be at least 2");
    Index index = 0;
    for (Letter l : w) {
        if (l >= static_cast<Letter>(q))
            throw DomainError("encode_word: letter index out of range for q");
        index = index * static_cast<Index>(q) + l;
    }
    return index;
}

Word decode_index(Index index, int n, int q) {
    if (q < 2) throw DomainError("decode_index: q must be at least 2");
    if (n < 0) throw DomainError("decode_index: negative length");
    if (index >= ipow(q, n)) throw DomainError("decode_index: index out of range");
    Word w(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<Letter>(index % q);
        index /= q;
    }
    return w;
}

void ToleranceConfig::validate() const {
    if (float_tol < 0 || exact_tol < 0)
        throw DomainError("ToleranceConfig: tolerances must be nonnegative");
}

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.size() < 2)
        throw DomainError("Alphabet: need at least 2 letters (q >= 2)");
    std::string sorted = glyphs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("Alphabet: duplicate letter glyph");
}

Alphabet Alphabet::standard(int q) {
    if (q < 2 || q > 26)
        throw DomainError("Alphabet::standard: q must be in [2, 26]");
    std::string glyphs;
    for (int i = 0; i < q; ++i) glyphs.push_back(static_cast<char>('a' + i));
    return Alphabet(glyphs);
}

char Alphabet::glyph(Letter i) const {
    if (i >= glyphs_.size()) throw DomainError("Alphabet: letter index out of range");
    return glyphs_[i];
}

Letter Alphabet::letter(char glyph) const {
    auto pos = glyphs_.find(glyph);
    if (pos == std::string::npos)
        throw DomainError(std::string("Alphabet: unknown glyph '") + glyph + "'");
    return static_cast<Letter>(pos);
}

Word Alphabet::parse(const std::string& text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(letter(c));
    return w;
}

std::string Alphabet::format(const Word& w) const {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(glyph(l));
    return s;
}

} // namespace debruijn
