#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/errors.hpp"

namespace debruijn {

using Complex = std::complex<double>;
using Index = std::uint64_t;

// Letter indices run from 0 to q-1 for tensor coordinates; the Hopf layer
// reuses the same type for re-indexed primitive symbols, which can exceed q.
using Letter = std::uint16_t;

// A word is a sequence of letters, leftmost letter first.  The empty word is
// the unit of the word algebra.
using Word = std::vector<Letter>;

// q^n, throwing ResourceError on uint64 overflow.
Index ipow(Index q, int n);

// Big-endian positional encoding: index = sum_i w[i] * q^(n-1-i), so the
// leftmost letter is the most significant digit and words of equal length
// sort lexicographically by index.
Index encode_word(const Word& w, int q);

// Inverse of encode_word for words of length n.
Word decode_index(Index index, int n, int q);

struct ToleranceConfig {
    double float_tol = 1e-9; // float-equality comparisons
    double exact_tol = 0.0;  // residuals the theory says vanish identically

    void validate() const;   // both must be nonnegative
};

// Maps user-facing glyphs to letter indices.  Letter 0 is the coordinate the
// Fourier transforms carry to the de Bruijn direction.
class Alphabet {
public:
    explicit Alphabet(std::string glyphs);

    // 'a', 'b', 'c', ... for 2 <= q <= 26.
    static Alphabet standard(int q);

    int q() const noexcept { return static_cast<int>(glyphs_.size()); }
    char glyph(Letter i) const;
    Letter letter(char glyph) const;
    Word parse(const std::string& text) const;
    std::string format(const Word& w) const;
    const std::string& glyphs() const noexcept { return glyphs_; }

private:
    std::string glyphs_;
};

} // namespace debruijn
