#include "debruijn/hopf.hpp"

#include <algorithm>
#include <cmath>

#include "debruijn/spectral.hpp"

namespace debruijn {

namespace {

bool is_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

} // namespace

void add_term(WordSum& sum, const Word& w, Complex c) {
    if (is_zero(c)) return;
    auto [it, inserted] = sum.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) sum.erase(it);
    }
}

void add_term(PairSum& sum, const Word& a, const Word& b, Complex c) {
    if (is_zero(c)) return;
    auto [it, inserted] = sum.emplace(WordPair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) sum.erase(it);
    }
}

WordSum word_sum(const Word& w, Complex c) {
    WordSum sum;
    add_term(sum, w, c);
    return sum;
}

double sum_norm(const WordSum& z) {
    double s = 0.0;
    for (const auto& [w, c] : z) s += std::norm(c);
    return std::sqrt(s);
}

double sum_norm(const PairSum& z) {
    double s = 0.0;
    for (const auto& [p, c] : z) s += std::norm(c);
    return std::sqrt(s);
}

Complex word_pairing(const WordSum& a, const WordSum& b) {
    Complex acc(0.0, 0.0);
    const WordSum& small = a.size() <= b.size() ? a : b;
    const WordSum& large = a.size() <= b.size() ? b : a;
    for (const auto& [w, c] : small) {
        auto it = large.find(w);
        if (it == large.end()) continue;
        acc += (&small == &a) ? std::conj(c) * it->second : std::conj(it->second) * c;
    }
    return acc;
}

PrimitiveAlphabet::PrimitiveAlphabet(int q) : q_(q) {
    if (q < 2) throw DomainError("PrimitiveAlphabet: q must be at least 2");
}

Letter PrimitiveAlphabet::intern(const Word& primitive) {
    if (!is_primitive(primitive))
        throw DomainError("PrimitiveAlphabet::intern: word is not primitive");
    for (Letter a : primitive)
        if (a >= static_cast<Letter>(q_))
            throw DomainError("PrimitiveAlphabet::intern: letter out of range for q");
    auto it = index_.find(primitive);
    if (it != index_.end()) return it->second;
    const Letter symbol = static_cast<Letter>(words_.size());
    words_.push_back(primitive);
    index_.emplace(primitive, symbol);
    return symbol;
}

const Word& PrimitiveAlphabet::word(Letter symbol) const {
    if (symbol >= words_.size())
        throw DomainError("PrimitiveAlphabet::word: unknown symbol");
    return words_[symbol];
}

Word PrimitiveAlphabet::encode(const Word& base) {
    Word symbols;
    for (const Word& factor : primitive_factorize(base)) symbols.push_back(intern(factor));
    return symbols;
}

Word PrimitiveAlphabet::expand(const Word& symbols) const {
    Word base;
    for (Letter s : symbols) {
        const Word& w = word(s);
        base.insert(base.end(), w.begin(), w.end());
    }
    return base;
}

namespace {

void shuffle_words(const Word& u, std::size_t iu, const Word& v, std::size_t iv, Word& prefix,
                   Complex coeff, WordSum& out) {
    if (iu == u.size() && iv == v.size()) {
        add_term(out, prefix, coeff);
        return;
    }
    if (iu < u.size()) {
        prefix.push_back(u[iu]);
        shuffle_words(u, iu + 1, v, iv, prefix, coeff, out);
        prefix.pop_back();
    }
    if (iv < v.size()) {
        prefix.push_back(v[iv]);
        shuffle_words(u, iu, v, iv + 1, prefix, coeff, out);
        prefix.pop_back();
    }
}

} // namespace

WordSum shuffle(const WordSum& z, const WordSum& zp) {
    WordSum out;
    Word prefix;
    for (const auto& [u, cu] : z)
        for (const auto& [v, cv] : zp) {
            prefix.clear();
            prefix.reserve(u.size() + v.size());
            shuffle_words(u, 0, v, 0, prefix, cu * cv, out);
        }
    return out;
}

WordSum concat_words(const WordSum& z, const WordSum& zp) {
    WordSum out;
    for (const auto& [u, cu] : z)
        for (const auto& [v, cv] : zp) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            add_term(out, w, cu * cv);
        }
    return out;
}

namespace {

PairSum deconcatenate_raw(const WordSum& z) {
    PairSum out;
    for (const auto& [w, c] : z)
        for (std::size_t i = 0; i <= w.size(); ++i)
            add_term(out, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
                     Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()), c);
    return out;
}

PairSum deshuffle_raw(const WordSum& z) {
    PairSum out;
    for (const auto& [w, c] : z) {
        const std::size_t n = w.size();
        if (n > 20) throw ResourceError("deshuffle: word too long for subset enumeration");
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            Word picked, rest;
            for (std::size_t p = 0; p < n; ++p)
                ((mask >> p) & 1 ? picked : rest).push_back(w[p]);
            add_term(out, picked, rest, c);
        }
    }
    return out;
}

// Re-expresses each word over primitive-block symbols, applies the raw
// coproduct, and expands both factors back to base letters.
PairSum with_granularity(const WordSum& z, PrimitiveAlphabet* alphabet,
                         PairSum (*raw)(const WordSum&)) {
    if (alphabet == nullptr) return raw(z);
    WordSum encoded;
    for (const auto& [w, c] : z) add_term(encoded, alphabet->encode(w), c);
    PairSum out;
    for (const auto& [p, c] : raw(encoded))
        add_term(out, alphabet->expand(p.first), alphabet->expand(p.second), c);
    return out;
}

} // namespace

PairSum deconcatenate(const WordSum& z, PrimitiveAlphabet* alphabet) {
    return with_granularity(z, alphabet, deconcatenate_raw);
}

PairSum deshuffle(const WordSum& z, PrimitiveAlphabet* alphabet) {
    return with_granularity(z, alphabet, deshuffle_raw);
}

WordSum antipode(const WordSum& z, PrimitiveAlphabet* alphabet) {
    WordSum out;
    for (const auto& [w, c] : z) {
        Word letters = alphabet ? alphabet->encode(w) : w;
        std::reverse(letters.begin(), letters.end());
        const double sign = letters.size() % 2 == 0 ? 1.0 : -1.0;
        add_term(out, alphabet ? alphabet->expand(letters) : letters, sign * c);
    }
    return out;
}

Complex counit(const WordSum& z) {
    auto it = z.find(Word{});
    return it == z.end() ? Complex(0.0, 0.0) : it->second;
}

bool is_primitive(const Word& w) {
    if (!is_fourier_word(w))
        throw DomainError("is_primitive: boundary letters must be nonzero");
    if (w.empty()) return false;
    for (std::size_t p = 1; p < w.size(); ++p)
        if (w[p] != 0 && w[p - 1] != 0) return false;
    return true;
}

std::vector<Word> primitive_factorize(const Word& w) {
    if (!is_fourier_word(w))
        throw DomainError("primitive_factorize: boundary letters must be nonzero");
    std::vector<Word> factors;
    if (w.empty()) return factors;
    Word current{w.front()};
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w[p] != 0 && w[p - 1] != 0) {
            factors.push_back(current);
            current.clear();
        }
        current.push_back(w[p]);
    }
    factors.push_back(current);
    return factors;
}

namespace {

// Unscaled one-letter delete: drops the boundary letter with coefficient 1.
WordSum word_delete(Side side, const WordSum& z) {
    WordSum out;
    for (const auto& [w, c] : z) {
        if (w.empty())
            throw DomainError("leibniz_residual: words must have length >= 1");
        Word shorter = side == Side::left ? Word(w.begin() + 1, w.end())
                                          : Word(w.begin(), w.end() - 1);
        add_term(out, shorter, c);
    }
    return out;
}

WordSum difference(const WordSum& a, const WordSum& b) {
    WordSum out = a;
    for (const auto& [w, c] : b) add_term(out, w, -c);
    return out;
}

} // namespace

double leibniz_residual(Side side, const WordSum& z, const WordSum& zp, int q) {
    if (q < 2) throw DomainError("leibniz_residual: q must be at least 2");
    const WordSum product = shuffle(z, zp);
    WordSum bracket = word_delete(side, product);
    bracket = difference(bracket, shuffle(word_delete(side, z), zp));
    bracket = difference(bracket, shuffle(z, word_delete(side, zp)));
    return sum_norm(bracket) / std::sqrt(static_cast<double>(q));
}

const char* to_string(HopfPair pair) {
    return pair == HopfPair::shuffle_deconcat ? "shuffle-deconcat" : "concat-deshuffle";
}

double antipode_axiom_residual(HopfPair pair, const WordSum& z, PrimitiveAlphabet* alphabet) {
    // Work at symbol granularity throughout when an alphabet is given; the
    // expansion back to base letters is injective on primitive symbols, so
    // the residual is the same either way.
    WordSum input;
    if (alphabet)
        for (const auto& [w, c] : z) add_term(input, alphabet->encode(w), c);
    else
        input = z;
    const PairSum split = pair == HopfPair::shuffle_deconcat ? deconcatenate_raw(input)
                                                             : deshuffle_raw(input);
    WordSum left_composition, right_composition;
    for (const auto& [p, c] : split) {
        const WordSum first = word_sum(p.first);
        const WordSum second = word_sum(p.second);
        const WordSum anti_first = antipode(first);
        const WordSum anti_second = antipode(second);
        const WordSum a = pair == HopfPair::shuffle_deconcat ? shuffle(first, anti_second)
                                                             : concat_words(first, anti_second);
        const WordSum b = pair == HopfPair::shuffle_deconcat ? shuffle(anti_first, second)
                                                             : concat_words(anti_first, second);
        for (const auto& [w, cc] : a) add_term(left_composition, w, c * cc);
        for (const auto& [w, cc] : b) add_term(right_composition, w, c * cc);
    }
    WordSum target = word_sum(Word{}, counit(input));
    const double res_left = sum_norm(difference(left_composition, target));
    const double res_right = sum_norm(difference(right_composition, target));
    return std::max(res_left, res_right);
}

const char* to_string(ClosureSpace space) {
    return space == ClosureSpace::fourier_words ? "fourier-words" : "cycle-space";
}

const char* to_string(ClosureProduct product) {
    return product == ClosureProduct::shuffle ? "shuffle" : "concat";
}

namespace {

// Incidence residual of a Fourier-letter word sum: boundary letter 0 is
// dropped with coefficient 1, anything else annihilates the term.
double fourier_incidence_residual(const WordSum& z) {
    WordSum bracket;
    for (const auto& [w, c] : z) {
        if (w.empty()) continue;
        if (w.front() == 0) add_term(bracket, Word(w.begin() + 1, w.end()), c);
        if (w.back() == 0) add_term(bracket, Word(w.begin(), w.end() - 1), -c);
    }
    return sum_norm(bracket);
}

bool all_terms_fourier(const WordSum& z) {
    for (const auto& [w, c] : z)
        if (!is_fourier_word(w)) return false;
    return true;
}

} // namespace

ClosureReport closure_check(ClosureSpace space, ClosureProduct product, int q, int max_len) {
    if (q < 2) throw DomainError("closure_check: q must be at least 2");
    if (max_len < 1 || max_len > 6)
        throw DomainError("closure_check: max_len must be between 1 and 6");
    ClosureReport report;
    report.space = space;
    report.product = product;
    report.q = q;
    report.max_len = max_len;

    if (space == ClosureSpace::fourier_words) {
        std::vector<Word> generators;
        for (int r = 1; r <= max_len; ++r)
            for (const Word& w : enumerate_fourier_words(q, r)) generators.push_back(w);
        for (const Word& u : generators)
            for (const Word& v : generators) {
                const WordSum prod = product == ClosureProduct::shuffle
                                         ? shuffle(word_sum(u), word_sum(v))
                                         : concat_words(word_sum(u), word_sum(v));
                ++report.pairs_checked;
                if (!all_terms_fourier(prod)) {
                    report.closed = false;
                    report.witness_left_factor = u;
                    report.witness_right_factor = v;
                    report.message = "product left the Fourier-word span";
                    return report;
                }
            }
        report.message = "all products stayed in the Fourier-word span";
        return report;
    }

    if (product == ClosureProduct::shuffle) {
        // Generators: sparse cycle-basis elements of each order, as
        // Fourier-letter word sums.
        std::vector<WordSum> generators;
        for (int r = 1; r <= max_len; ++r)
            for (const BasisElement& e : cycle_basis(q, r)) {
                WordSum ws;
                for (const auto& [index, value] : e.coeffs)
                    add_term(ws, decode_index(index, r, q), value);
                generators.push_back(std::move(ws));
            }
        for (const WordSum& u : generators)
            for (const WordSum& v : generators) {
                ++report.pairs_checked;
                report.max_residual =
                    std::max(report.max_residual, fourier_incidence_residual(shuffle(u, v)));
            }
        report.closed = report.max_residual <= 1e-12;
        report.message = report.closed ? "all shuffles stayed in the cycle space"
                                       : "a shuffle left the cycle space";
        return report;
    }

    // Cycle space under concatenation: constant-letter words are cycle
    // elements (self-loop walks), and joining two different letters breaks
    // the marginal symmetry. The witness uses lengths max_len-1 and
    // max_len over the first two letters.
    const int left_len = std::max(1, max_len - 1);
    report.witness_left_factor = Word(static_cast<std::size_t>(left_len), Letter(0));
    report.witness_right_factor = Word(static_cast<std::size_t>(max_len), Letter(1));
    Word joined = report.witness_left_factor;
    joined.insert(joined.end(), report.witness_right_factor.begin(),
                  report.witness_right_factor.end());
    report.witness_delete_left = Word(joined.begin() + 1, joined.end());
    report.witness_delete_right = Word(joined.begin(), joined.end() - 1);
    report.pairs_checked = 1;
    WordSum bracket;
    add_term(bracket, report.witness_delete_left, Complex(1.0, 0.0));
    add_term(bracket, report.witness_delete_right, Complex(-1.0, 0.0));
    report.max_residual = sum_norm(bracket) / std::sqrt(static_cast<double>(q));
    report.closed = report.max_residual <= 1e-12;
    report.message = report.closed
                         ? "no counterexample found (unexpected)"
                         : "concatenation of two cycle words left the cycle space";
    return report;
}

double dual_pairing_residual(const WordSum& z, const WordSum& zp, const WordSum& w,
                             const WordSum& wp) {
    const auto pair_against_split = [](const WordSum& a, const WordSum& b, const PairSum& split) {
        Complex acc(0.0, 0.0);
        for (const auto& [p, c] : split) {
            auto ia = a.find(p.first);
            if (ia == a.end()) continue;
            auto ib = b.find(p.second);
            if (ib == b.end()) continue;
            acc += std::conj(ia->second * ib->second) * c;
        }
        return acc;
    };
    const auto split_against_pair = [](const PairSum& split, const WordSum& a, const WordSum& b) {
        Complex acc(0.0, 0.0);
        for (const auto& [p, c] : split) {
            auto ia = a.find(p.first);
            if (ia == a.end()) continue;
            auto ib = b.find(p.second);
            if (ib == b.end()) continue;
            acc += std::conj(c) * ia->second * ib->second;
        }
        return acc;
    };

    const double t1 = std::abs(word_pairing(shuffle(z, zp), w) - pair_against_split(z, zp, deshuffle_raw(w)));
    const double t2 = std::abs(word_pairing(concat_words(z, zp), w) -
                               pair_against_split(z, zp, deconcatenate_raw(w)));
    const double t3 =
        std::abs(word_pairing(z, shuffle(w, wp)) - split_against_pair(deshuffle_raw(z), w, wp));
    const double t4 = std::abs(word_pairing(z, concat_words(w, wp)) -
                               split_against_pair(deconcatenate_raw(z), w, wp));
    return t1 + t2 + t3 + t4;
}

} // namespace debruijn
