#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "debruijn/operators.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

// A finitely supported formal sum of words with complex coefficients;
// words of different lengths may coexist (an element of the graded tensor
// algebra). Zero coefficients are dropped by the mutating helpers.
using WordSum = std::map<Word, Complex>;
using WordPair = std::pair<Word, Word>;
using PairSum = std::map<WordPair, Complex>;

void add_term(WordSum& sum, const Word& w, Complex c);
void add_term(PairSum& sum, const Word& a, const Word& b, Complex c);
WordSum word_sum(const Word& w, Complex c = Complex(1.0, 0.0));
double sum_norm(const WordSum& z);
double sum_norm(const PairSum& z);
// Orthonormal word-basis pairing, conjugate-linear in the first argument.
Complex word_pairing(const WordSum& a, const WordSum& b);

// Letters of interned primitive words. A primitive word has nonzero
// boundary letters and no interior split point; the symbol table lets the
// coproducts and antipode act on primitive blocks as single letters.
class PrimitiveAlphabet {
public:
    explicit PrimitiveAlphabet(int q);

    int q() const { return q_; }
    std::size_t size() const { return words_.size(); }
    Letter intern(const Word& primitive);
    const Word& word(Letter symbol) const;
    Word encode(const Word& base); // factorize + intern
    Word expand(const Word& symbols) const;

private:
    int q_;
    std::vector<Word> words_;
    std::map<Word, Letter> index_;
};

// Products: sum over order-preserving interleavings, and plain
// juxtaposition. Both are bilinear with the empty word as unit.
WordSum shuffle(const WordSum& z, const WordSum& zp);
WordSum concat_words(const WordSum& z, const WordSum& zp);

// Coproducts: all prefix/suffix splits, and all subset/complement splits.
// With an alphabet the word is first cut into primitive blocks, split at
// block granularity, and the factors expanded back to base letters.
PairSum deconcatenate(const WordSum& z, PrimitiveAlphabet* alphabet = nullptr);
PairSum deshuffle(const WordSum& z, PrimitiveAlphabet* alphabet = nullptr);

// Antipode: reverses each word (at the active letter granularity) with
// sign (-1)^length. Counit: the coefficient of the empty word.
WordSum antipode(const WordSum& z, PrimitiveAlphabet* alphabet = nullptr);
Complex counit(const WordSum& z);

// Primitive structure of Fourier-letter words: a word factors exactly
// before every nonzero letter whose predecessor is nonzero.
bool is_primitive(const Word& w);
std::vector<Word> primitive_factorize(const Word& w);

// Norm of theta(z sh z') - theta(z) sh z' - z sh theta(z') where theta is
// the scaled one-letter delete on the chosen side. Computed with unscaled
// integer brackets and scaled once at the end, so basis-word inputs give
// 0.0 exactly.
double leibniz_residual(Side side, const WordSum& z, const WordSum& zp, int q);

enum class HopfPair { shuffle_deconcat, concat_deshuffle };
const char* to_string(HopfPair pair);

// Max norm over the two antipode compositions of
// product(id (x) antipode)(coproduct(z)) - counit(z) * unit.
double antipode_axiom_residual(HopfPair pair, const WordSum& z,
                               PrimitiveAlphabet* alphabet = nullptr);

enum class ClosureSpace { fourier_words, cycle_space };
enum class ClosureProduct { shuffle, concat };
const char* to_string(ClosureSpace space);
const char* to_string(ClosureProduct product);

struct ClosureReport {
    ClosureSpace space = ClosureSpace::fourier_words;
    ClosureProduct product = ClosureProduct::shuffle;
    int q = 0;
    int max_len = 0;
    bool closed = true;
    std::size_t pairs_checked = 0;
    double max_residual = 0.0;
    // Populated when closed == false: the offending factors and the two
    // boundary deletes that disagree (unscaled words).
    Word witness_left_factor;
    Word witness_right_factor;
    Word witness_delete_left;
    Word witness_delete_right;
    std::string message;
};

// Exhaustive desk-scale closure checks: the Fourier-word span is closed
// under both products; the cycle space is closed under shuffle but not
// under concatenation, for which a concrete counterexample is produced.
ClosureReport closure_check(ClosureSpace space, ClosureProduct product, int q, int max_len);

// Residual of the four product/coproduct adjunctions under the word-basis
// pairing: shuffle pairs with deshuffle and concatenation with
// deconcatenation, in both argument orders.
double dual_pairing_residual(const WordSum& z, const WordSum& zp, const WordSum& w,
                             const WordSum& wp);

} // namespace debruijn
