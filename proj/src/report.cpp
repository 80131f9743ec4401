#include "debruijn/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <tuple>

#include <Eigen/Dense>

#include "debruijn/fourier.hpp"
#include "debruijn/hopf.hpp"
#include "debruijn/kmer.hpp"
#include "debruijn/serialize.hpp"
#include "debruijn/spectral.hpp"
#include "debruijn/tensor.hpp"

namespace debruijn {

bool RunReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

double RunReport::total_ms() const {
    double total = 0.0;
    for (const CheckResult& c : checks) total += c.wall_ms;
    return total;
}

namespace {

// Raw-bits uniform draws so the stream is identical across standard
// libraries (distribution objects are implementation-defined).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * uniform() - 1.0; }
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
};

Tensor random_tensor(Rng& rng, int q, int order, Frame frame) {
    Tensor t(q, order, frame);
    for (Index i = 0; i < t.size(); ++i) t[i] = Complex(rng.sym(), rng.sym());
    return t;
}

double diff_norm(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d -= b;
    return d.norm();
}

Tensor scaled(const Tensor& t, double s) {
    Tensor out = t;
    out *= Complex(s, 0.0);
    return out;
}

// Random unit-ish combination of cycle-basis elements: an exact member of
// the cycle space.
Tensor random_cycle_tensor(Rng& rng, int q, int k) {
    Tensor out(q, k, Frame::fourier);
    for (const BasisElement& e : cycle_basis(q, k)) {
        const Complex c(rng.sym(), rng.sym());
        for (const auto& [index, value] : e.coeffs) out[index] += c * value;
    }
    return out;
}

Word random_word(Rng& rng, int q, int len) {
    Word w(static_cast<std::size_t>(len));
    for (auto& a : w) a = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(q)));
    return w;
}

class SuiteRunner {
public:
    SuiteRunner(int q, int k_max, std::uint64_t seed, const ToleranceConfig& tol,
                Index dense_limit)
        : q_(q), k_max_(k_max), tol_(tol), limit_(dense_limit), rng_(seed) {
        report_.q = q;
        report_.k_max = k_max;
        report_.seed = seed;
    }

    template <typename F>
    void check(const std::string& name, double tolerance, F&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        const double residual = body();
        const auto t1 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = name;
        r.residual = residual;
        r.tolerance = tolerance;
        r.pass = residual <= tolerance;
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report_.checks.push_back(std::move(r));
    }

    RunReport run();

private:
    int q_;
    int k_max_;
    ToleranceConfig tol_;
    Index limit_;
    Rng rng_;
    RunReport report_;
};

double operator_identities(Rng& rng, int q, int k_max, Frame frame) {
    double worst = 0.0;
    const auto del = [](Side s, const Tensor& t) { return apply_delete(s, t); };
    const auto ins = [](Side s, const Tensor& t) { return apply_insert(s, t); };
    for (int n = 1; n <= std::min(k_max, 5); ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Tensor t = random_tensor(rng, q, n, frame);
            const Tensor s = random_tensor(rng, q, n, frame);
            // theta theta* = identity on both sides
            worst = std::max(worst, diff_norm(del(Side::left, ins(Side::left, t)), t));
            worst = std::max(worst, diff_norm(del(Side::right, ins(Side::right, t)), t));
            // theta* theta are orthogonal projections
            const auto proj = [&](Side side, const Tensor& v) {
                return ins(side, del(side, v));
            };
            for (Side side : {Side::left, Side::right}) {
                const Tensor p = proj(side, t);
                worst = std::max(worst, diff_norm(proj(side, p), p));
                worst = std::max(worst, std::abs(inner_product(proj(side, s), t) -
                                                 inner_product(s, proj(side, t))));
            }
            // commutation in all four mixed orders
            if (n >= 2)
                worst = std::max(worst, diff_norm(del(Side::left, del(Side::right, t)),
                                                  del(Side::right, del(Side::left, t))));
            worst = std::max(worst, diff_norm(ins(Side::left, ins(Side::right, t)),
                                              ins(Side::right, ins(Side::left, t))));
            worst = std::max(worst, diff_norm(del(Side::left, ins(Side::right, t)),
                                              ins(Side::right, del(Side::left, t))));
            worst = std::max(worst, diff_norm(del(Side::right, ins(Side::left, t)),
                                              ins(Side::left, del(Side::right, t))));
        }
    }
    return worst;
}

double laplacian_consistency(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (Frame frame : {Frame::native, Frame::fourier})
        for (int n = 1; n <= std::min(k_max, 5); ++n)
            for (int rep = 0; rep < 5; ++rep) {
                const Tensor t = random_tensor(rng, q, n, frame);
                Tensor two_minus_a = scaled(t, 2.0);
                two_minus_a -= apply_adjacency(t);
                worst = std::max(worst, diff_norm(apply_vertex_laplacian(t), two_minus_a));
                Tensor gram = apply_insert(Side::left, apply_delete(Side::left, t));
                gram += apply_insert(Side::right, apply_delete(Side::right, t));
                gram -= apply_adjacency(t);
                worst = std::max(worst, diff_norm(apply_edge_laplacian(t), gram));
            }
    return worst;
}

double transform_roundtrip(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    std::vector<TransformKind> kinds{TransformKind::dft};
    if ((q & (q - 1)) == 0) kinds.push_back(TransformKind::hadamard);
    for (TransformKind kind : kinds)
        for (int n = 0; n <= std::min(k_max, 5); ++n)
            for (int rep = 0; rep < 5; ++rep) {
                const Tensor t = random_tensor(rng, q, n, Frame::native);
                const Tensor hat = transform_tensor(t, TransformDirection::forward, kind);
                worst = std::max(worst, std::abs(hat.norm() - t.norm()));
                worst = std::max(
                    worst, diff_norm(transform_tensor(hat, TransformDirection::inverse, kind), t));
            }
    return worst;
}

double conjugation_sweep(int q, int k_max, Index limit) {
    double worst = 0.0;
    std::vector<TransformKind> kinds{TransformKind::dft};
    if ((q & (q - 1)) == 0) kinds.push_back(TransformKind::hadamard);
    const Index cap = std::min<Index>(limit, 1024);
    for (TransformKind transform : kinds)
        for (OperatorKind kind :
             {OperatorKind::delete_left, OperatorKind::delete_right, OperatorKind::insert_left,
              OperatorKind::insert_right, OperatorKind::adjacency, OperatorKind::incidence,
              OperatorKind::incidence_adjoint, OperatorKind::vertex_laplacian,
              OperatorKind::edge_laplacian})
            for (int n = std::max(min_domain_order(kind), 0); n <= k_max; ++n) {
                if (ipow(static_cast<Index>(q), n + 1) > cap) break;
                worst = std::max(worst, conjugation_residual(kind, n, q, transform, cap));
            }
    return worst;
}

double spectrum_agreement(int q, int k_max, LaplacianKind which, Index limit) {
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const std::vector<double> closed = closed_form_spectrum(q, k, which);
        const std::vector<double> oracle = dense_spectrum_oracle(q, k, which, limit);
        if (closed.size() != oracle.size()) return 1.0 + std::abs(static_cast<double>(closed.size()) - static_cast<double>(oracle.size()));
        for (std::size_t i = 0; i < closed.size(); ++i)
            worst = std::max(worst, std::abs(closed[i] - oracle[i]));
    }
    return worst;
}

double vertex_eigen_residuals(int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k)
        for (int i = 1; i <= k; ++i)
            for (const Word& x : enumerate_fourier_words(q, i))
                for (const EigenPair& p : vertex_eigenpairs(q, k, x)) {
                    Tensor r = apply_vertex_laplacian(p.vector);
                    r -= scaled(p.vector, p.eigenvalue);
                    worst = std::max(worst, r.norm());
                }
    return worst;
}

double vertex_completeness(int q, int k_max) {
    double mismatches = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        Index count = 1; // the flat kernel vector
        for (int i = 1; i <= k; ++i)
            count += count_fourier_words(q, i) * static_cast<Index>(k - i + 1);
        if (count != ipow(static_cast<Index>(q), k)) mismatches += 1.0;
    }
    return mismatches;
}

double edge_eigen_residuals(int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::max(1, k_max - 1); ++k)
        for (int i = 1; i <= k; ++i)
            for (const Word& x : enumerate_fourier_words(q, i))
                for (const EigenPair& p : edge_eigenpairs(q, k, x)) {
                    Tensor r = apply_edge_laplacian(p.vector);
                    r -= scaled(p.vector, p.eigenvalue);
                    worst = std::max(worst, r.norm());
                }
    return worst;
}

double edge_xi_relation(int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::max(1, k_max - 1); ++k)
        for (int i = 1; i <= k; ++i)
            for (const Word& x : enumerate_fourier_words(q, i)) {
                const Tensor xhat = Tensor::basis(q, x, Frame::fourier);
                const int j = k - i;
                for (const EigenPair& p : edge_eigenpairs(q, k, x)) {
                    const Tensor via_xi =
                        scaled(xi_apply(xhat, j + 1, p.h), std::sqrt(static_cast<double>(j + 2)));
                    worst = std::max(worst, diff_norm(p.vector, via_xi));
                }
            }
    return worst;
}

double basis_dimension_mismatches(int q, int k_max) {
    double mismatches = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const Index qk = ipow(static_cast<Index>(q), k);
        const Index qk1 = ipow(static_cast<Index>(q), k - 1);
        if (cycle_basis(q, k).size() != qk - qk1 + 1) mismatches += 1.0;
        if (cut_basis(q, k).size() != qk1 - 1) mismatches += 1.0;
        Index total = 0;
        for (int r = 0; r <= k; ++r) total += count_fourier_words(q, r);
        if (total != qk - qk1 + 1) mismatches += 1.0;
    }
    for (int r = 0; r <= 8; ++r) {
        if (ipow(static_cast<Index>(q), std::max(r, 1)) > 65536) break;
        if (enumerate_fourier_words(q, r).size() != count_fourier_words(q, r)) mismatches += 1.0;
    }
    return mismatches;
}

double toeplitz_oracle(double float_tol) {
    double worst = 0.0;
    const std::vector<std::tuple<double, double, double, int>> cases{
        {2.0, -1.0, -1.0, 1}, {2.0, -1.0, -1.0, 2}, {2.0, -1.0, -1.0, 3},
        {2.0, -1.0, -1.0, 6}, {5.0, 1.0, 1.0, 4},   {1.0, 0.5, 2.0, 4},
        {3.0, -2.0, 1.0, 5},
    };
    for (const auto& [delta, sigma, tau, n] : cases) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        for (int r = 0; r < n; ++r) {
            m(r, r) = delta;
            if (r + 1 < n) {
                m(r + 1, r) = sigma;
                m(r, r + 1) = tau;
            }
        }
        // Pair closed-form and dense eigenvalues greedily by distance; a
        // lexicographic sort would be unstable for conjugate pairs whose
        // real parts differ only by rounding noise.
        const std::vector<Complex> closed = toeplitz_eigenvalues(delta, sigma, tau, n);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
        std::vector<Complex> dense(solver.eigenvalues().data(),
                                   solver.eigenvalues().data() + n);
        for (const Complex& value : closed) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < dense.size(); ++i)
                if (std::abs(dense[i] - value) < std::abs(dense[best] - value)) best = i;
            worst = std::max(worst, std::abs(dense[best] - value));
            dense.erase(dense.begin() + static_cast<std::ptrdiff_t>(best));
        }
        for (const ToeplitzPair& p : toeplitz_eigenpairs(delta, sigma, tau, n)) {
            Eigen::VectorXcd v(n);
            for (int i = 0; i < n; ++i) v(i) = p.vector[static_cast<std::size_t>(i)];
            worst = std::max(worst, (m * v - p.value * v).norm() / v.norm());
        }
    }
    // sigma*tau = 0: eigenvalues collapse to the diagonal and eigenvectors
    // are declared unavailable.
    for (Complex v : toeplitz_eigenvalues(4.0, 0.0, 2.0, 3))
        worst = std::max(worst, std::abs(v - Complex(4.0, 0.0)));
    try {
        toeplitz_eigenpairs(4.0, 0.0, 2.0, 3);
        worst = std::max(worst, 1.0 + float_tol);
    } catch (const DomainError&) {
    }
    return worst;
}

double block_compression(int q, int k_max) {
    double worst = 0.0;
    const int k = std::min(k_max, 5);
    for (int i = 1; i <= k; ++i)
        for (const Word& x : enumerate_fourier_words(q, i)) {
            const Index xi = encode_word(x, q);
            const int j = k - i;
            std::vector<Index> family;
            for (int l = 1; l <= j + 1; ++l)
                family.push_back(xi * ipow(static_cast<Index>(q), l - 1));
            for (int b = 0; b <= j; ++b) {
                Tensor e(q, k, Frame::fourier);
                e[family[static_cast<std::size_t>(b)]] = Complex(1.0, 0.0);
                const Tensor image = apply_vertex_laplacian(e);
                for (int a = 0; a <= j; ++a) {
                    const double expected = a == b ? 2.0 : (std::abs(a - b) == 1 ? -1.0 : 0.0);
                    worst = std::max(worst,
                                     std::abs(image[family[static_cast<std::size_t>(a)]] -
                                              Complex(expected, 0.0)));
                }
            }
        }
    return worst;
}

double xi_contraction(int q, int k_max) {
    double worst = 0.0;
    for (int k = 2; k <= k_max; ++k)
        for (int i = 1; i <= k - 1; ++i)
            for (const Word& x : enumerate_fourier_words(q, i)) {
                const Tensor xhat = Tensor::basis(q, x, Frame::fourier);
                const int j = k - i;
                const Tensor padded = xi_apply(xhat, j, 0);
                const Tensor target = xi_apply(xhat, j - 1, 0);
                const double factor = std::sqrt(static_cast<double>(j + 1) / j);
                worst = std::max(
                    worst, diff_norm(scaled(apply_delete(Side::left, padded), factor), target));
                worst = std::max(
                    worst, diff_norm(scaled(apply_delete(Side::right, padded), factor), target));
                // iterated contraction telescopes
                Tensor it = padded;
                for (int a = 1; a <= j; ++a) {
                    it = apply_delete(Side::right, it);
                    const Tensor expect = scaled(xi_apply(xhat, j - a, 0),
                                                 std::sqrt(static_cast<double>(j - a + 1)) /
                                                     std::sqrt(static_cast<double>(j + 1)));
                    worst = std::max(worst, diff_norm(it, expect));
                }
            }
    return worst;
}

double kernel_stability(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 2; k <= k_max; ++k) {
        const Tensor w = random_cycle_tensor(rng, q, k);
        for (int total = 1; total <= std::min(3, k - 1); ++total) {
            Tensor first(q, 0, Frame::fourier);
            bool have_first = false;
            for (int a = 0; a <= total; ++a) {
                Tensor v = w;
                for (int d = 0; d < a; ++d) v = apply_delete(Side::left, v);
                for (int d = 0; d < total - a; ++d) v = apply_delete(Side::right, v);
                if (!have_first) {
                    first = v;
                    have_first = true;
                } else {
                    worst = std::max(worst, diff_norm(v, first));
                }
                if (v.order() >= 1) worst = std::max(worst, apply_incidence(v).norm());
            }
        }
    }
    return worst;
}

double lift_pairing_sweep(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const std::vector<Word> words = enumerate_fourier_words(q, k);
        for (int ell = 0; ell <= std::min(3, k_max - k); ++ell)
            for (int rep = 0; rep < 3; ++rep) {
                const Tensor w = random_cycle_tensor(rng, q, k);
                const Word& x = words[static_cast<std::size_t>(rng.below(words.size()))];
                worst = std::max(worst, lift_pairing_residual(w, x, ell));
            }
    }
    return worst;
}

CircularString random_string(Rng& rng, int q) {
    const int n = 1 + static_cast<int>(rng.below(40));
    return circular_string(q, random_word(rng, q, n));
}

double kmer_count_exactness(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::min(6, k_max); ++k)
        for (int rep = 0; rep < 200; ++rep) {
            const CircularString s = random_string(rng, q);
            const CountTensor ct = count_kmers(s, k);
            std::int64_t total = 0;
            for (std::int64_t c : ct.counts) total += c;
            if (total != static_cast<std::int64_t>(ct.n)) worst = std::max(worst, 1.0);
            worst = std::max(worst, cycle_residual(ct));
        }
    return worst;
}

double kmer_rotation_invariance(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::min(5, k_max); ++k)
        for (int rep = 0; rep < 50; ++rep) {
            const CircularString s = random_string(rng, q);
            const std::size_t shift = rng.below(s.letters.size());
            Word rotated(s.letters.begin() + static_cast<std::ptrdiff_t>(shift), s.letters.end());
            rotated.insert(rotated.end(), s.letters.begin(),
                           s.letters.begin() + static_cast<std::ptrdiff_t>(shift));
            const CountTensor a = count_kmers(s, k);
            const CountTensor b = count_kmers(circular_string(q, rotated), k);
            for (std::size_t i = 0; i < a.counts.size(); ++i)
                worst = std::max(worst, std::abs(static_cast<double>(a.counts[i] - b.counts[i])));
        }
    return worst;
}

double kmer_roundtrip(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::min(5, k_max); ++k)
        for (int rep = 0; rep < 20; ++rep) {
            const CircularString s = random_string(rng, q);
            const Tensor t = count_kmers(s, k).to_tensor();
            const Tensor hat = transform_tensor(t, TransformDirection::forward);
            const Decomposition d = decompose(t, q, k);
            const Tensor back = reconstruct(d.entries, q, k);
            worst = std::max(worst, diff_norm(back, hat)); // counts live in the cycle space
            double coeff_sq = 0.0;
            for (const auto& entry : d.entries) coeff_sq += std::norm(entry.coefficient);
            worst = std::max(worst, std::abs(t.norm() * t.norm() - coeff_sq -
                                             d.residual * d.residual));
            worst = std::max(worst, d.residual);
        }
    return worst;
}

double kmer_multik_pairing(Rng& rng, int q, int k_max) {
    double worst = 0.0;
    for (int k = 1; k <= std::max(1, k_max - 1); ++k) {
        const std::vector<Word> words = enumerate_fourier_words(q, k);
        for (int ell = 1; ell <= std::min(2, k_max - k); ++ell)
            for (int rep = 0; rep < 5; ++rep) {
                const CircularString s = random_string(rng, q);
                const Tensor psi_k =
                    transform_tensor(count_kmers(s, k).to_tensor(), TransformDirection::forward);
                const Tensor psi_kl = transform_tensor(count_kmers(s, k + ell).to_tensor(),
                                                       TransformDirection::forward);
                const Word& x = words[static_cast<std::size_t>(rng.below(words.size()))];
                const Tensor xhat = Tensor::basis(q, x, Frame::fourier);
                const Complex lhs = inner_product(psi_kl, xi_apply(xhat, ell, 0));
                const Complex rhs = std::sqrt(static_cast<double>(ell + 1)) /
                                    std::sqrt(std::pow(static_cast<double>(q), ell)) *
                                    inner_product(psi_k, xhat);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    }
    return worst;
}

double hopf_shuffle_fixture() {
    const WordSum got = shuffle(word_sum(Word{0, 1}), word_sum(Word{2, 3}));
    WordSum expected;
    for (const Word& w : std::vector<Word>{{0, 1, 2, 3}, {0, 2, 1, 3}, {2, 0, 1, 3},
                                           {0, 2, 3, 1}, {2, 0, 3, 1}, {2, 3, 0, 1}})
        add_term(expected, w, Complex(1.0, 0.0));
    WordSum diff = got;
    for (const auto& [w, c] : expected) add_term(diff, w, -c);
    return sum_norm(diff);
}

std::vector<Word> all_words(int alphabet, int min_len, int max_len) {
    std::vector<Word> out;
    for (int len = min_len; len <= max_len; ++len) {
        Word w(static_cast<std::size_t>(len), 0);
        while (true) {
            out.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && ++w[static_cast<std::size_t>(pos)] == static_cast<Letter>(alphabet)) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

double hopf_leibniz_exhaustive(int q) {
    double worst = 0.0;
    const std::vector<Word> words = all_words(std::min(q, 2), 1, 3);
    for (const Word& u : words)
        for (const Word& v : words)
            for (Side side : {Side::left, Side::right})
                worst = std::max(worst, leibniz_residual(side, word_sum(u), word_sum(v), q));
    return worst;
}

double hopf_antipode_axioms() {
    double worst = 0.0;
    for (const Word& w : all_words(2, 0, 4))
        for (HopfPair pair : {HopfPair::shuffle_deconcat, HopfPair::concat_deshuffle})
            worst = std::max(worst, antipode_axiom_residual(pair, word_sum(w)));
    return worst;
}

double hopf_antipode_primitive(int q) {
    // The same axioms at primitive-block granularity on base-letter words.
    double worst = 0.0;
    PrimitiveAlphabet alphabet(q);
    const Word p0{1};
    const Word p1{1, 0, 1};
    std::vector<Word> base_words;
    for (const Word& symbols : all_words(2, 0, 3)) {
        Word base;
        for (Letter s : symbols) {
            const Word& block = s == 0 ? p0 : p1;
            base.insert(base.end(), block.begin(), block.end());
        }
        base_words.push_back(base);
    }
    for (const Word& w : base_words)
        for (HopfPair pair : {HopfPair::shuffle_deconcat, HopfPair::concat_deshuffle})
            worst = std::max(worst, antipode_axiom_residual(pair, word_sum(w), &alphabet));
    return worst;
}

using TripleSum = std::map<std::tuple<Word, Word, Word>, Complex>;

double hopf_coassociativity() {
    double worst = 0.0;
    for (const Word& w : all_words(2, 0, 3))
        for (bool use_deconcat : {true, false}) {
            const auto coproduct = [&](const WordSum& z) {
                return use_deconcat ? deconcatenate(z) : deshuffle(z);
            };
            TripleSum left, right;
            for (const auto& [p, c] : coproduct(word_sum(w))) {
                for (const auto& [pp, cc] : coproduct(word_sum(p.first))) {
                    auto key = std::make_tuple(pp.first, pp.second, p.second);
                    left[key] += c * cc;
                }
                for (const auto& [pp, cc] : coproduct(word_sum(p.second))) {
                    auto key = std::make_tuple(p.first, pp.first, pp.second);
                    right[key] += c * cc;
                }
            }
            for (const auto& [key, c] : right) left[key] -= c;
            double norm_sq = 0.0;
            for (const auto& [key, c] : left) norm_sq += std::norm(c);
            worst = std::max(worst, std::sqrt(norm_sq));
        }
    return worst;
}

double hopf_closure(int q) {
    double worst = 0.0;
    const int xw_len = q <= 3 ? 4 : 3;
    if (!closure_check(ClosureSpace::fourier_words, ClosureProduct::shuffle, q, xw_len).closed)
        worst = std::max(worst, 1.0);
    if (!closure_check(ClosureSpace::fourier_words, ClosureProduct::concat, q, xw_len).closed)
        worst = std::max(worst, 1.0);
    const int w_len = q == 2 ? 4 : (q == 3 ? 3 : 2);
    const ClosureReport sh = closure_check(ClosureSpace::cycle_space, ClosureProduct::shuffle, q, w_len);
    if (!sh.closed) worst = std::max(worst, 1.0);
    worst = std::max(worst, sh.max_residual);
    const ClosureReport cc = closure_check(ClosureSpace::cycle_space, ClosureProduct::concat, q, 4);
    if (cc.closed) worst = std::max(worst, 1.0); // must produce a counterexample
    if (cc.witness_delete_left == cc.witness_delete_right) worst = std::max(worst, 1.0);
    return worst;
}

double hopf_factorization(int q) {
    double mismatches = 0.0;
    const std::vector<Word> f1 = primitive_factorize(Word{1, 1, 0, 1});
    if (f1 != std::vector<Word>{{1}, {1, 0, 1}}) mismatches += 1.0;
    if (q >= 3) {
        const std::vector<Word> f2 = primitive_factorize(Word{1, 0, 0, 2, 1, 0, 2});
        if (f2 != std::vector<Word>{{1, 0, 0, 2}, {1, 0, 2}}) mismatches += 1.0;
    }
    if (!is_primitive(Word{1, 0, 1})) mismatches += 1.0;
    for (int r = 1; r <= 5; ++r)
        for (const Word& w : enumerate_fourier_words(std::min(q, 3), r)) {
            Word joined;
            for (const Word& factor : primitive_factorize(w)) {
                if (!is_primitive(factor)) mismatches += 1.0;
                joined.insert(joined.end(), factor.begin(), factor.end());
            }
            if (joined != w) mismatches += 1.0;
        }
    return mismatches;
}

double hopf_deconcat_witness() {
    // De-concatenation over raw letters must split some Fourier word into a
    // factor with a zero boundary letter; the canonical witness has an
    // interior zero.
    for (const auto& [p, c] : deconcatenate(word_sum(Word{1, 0, 1})))
        if (!p.first.empty() && !p.second.empty() &&
            (!is_fourier_word(p.first) || !is_fourier_word(p.second)))
            return 0.0;
    return 1.0;
}

double hopf_dual_pairing() {
    double worst = 0.0;
    const std::vector<Word> words = all_words(2, 0, 2);
    for (const Word& z : words)
        for (const Word& zp : words)
            for (const Word& w : words)
                for (const Word& wp : words)
                    worst = std::max(worst, dual_pairing_residual(word_sum(z), word_sum(zp),
                                                                  word_sum(w), word_sum(wp)));
    return worst;
}

const char kFigureString[] =
    "abbbababbbababbabababaaabaabaaabbbbbabaaabbabaababbbbbaaababa";

double kmer_count_fixture() {
    Word letters;
    for (const char* p = kFigureString; *p; ++p)
        letters.push_back(static_cast<Letter>(*p - 'a'));
    const CountTensor ct = count_kmers(circular_string(2, letters), 3);
    const std::vector<std::int64_t> expected{4, 7, 12, 6, 7, 11, 6, 8};
    double mismatches = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (ct.counts[i] != expected[i]) mismatches += 1.0;
    if (cycle_residual(ct) != 0.0) mismatches += 1.0;
    const Decomposition d = decompose(ct.to_tensor(), 2, 3);
    // the coefficient on the flat basis element is (sum of counts)/sqrt(q^k)
    const double expected_flat = 61.0 / std::sqrt(8.0);
    double flat_err = 1.0;
    if (!d.entries.empty())
        flat_err = std::abs(d.entries.front().coefficient - Complex(expected_flat, 0.0));
    return std::max(mismatches, std::max(flat_err > 1e-9 ? 1.0 : 0.0, d.residual > 1e-9 ? 1.0 : 0.0));
}

RunReport SuiteRunner::run() {
    if (k_max_ < 1) throw DomainError("run_invariant_suite: k_max must be at least 1");
    tol_.validate();
    if (ipow(static_cast<Index>(q_), k_max_) > limit_)
        throw ResourceError("run_invariant_suite: q^k_max exceeds the dense limit for oracle checks");

    const double exact = tol_.exact_tol;
    const double loose = tol_.float_tol;

    check("identities-native", 1e-12,
          [&] { return operator_identities(rng_, q_, k_max_, Frame::native); });
    check("identities-fourier", 1e-12,
          [&] { return operator_identities(rng_, q_, k_max_, Frame::fourier); });
    check("laplacian-consistency", 1e-12, [&] { return laplacian_consistency(rng_, q_, k_max_); });
    check("transform-roundtrip", 1e-12, [&] { return transform_roundtrip(rng_, q_, k_max_); });
    check("conjugation", 1e-10, [&] { return conjugation_sweep(q_, k_max_, limit_); });
    check("spectrum-oracle-vertex", loose,
          [&] { return spectrum_agreement(q_, k_max_, LaplacianKind::vertex, limit_); });
    check("spectrum-oracle-edge", loose,
          [&] { return spectrum_agreement(q_, k_max_, LaplacianKind::edge, limit_); });
    check("vertex-eigen-residual", loose, [&] { return vertex_eigen_residuals(q_, k_max_); });
    check("vertex-completeness", exact, [&] { return vertex_completeness(q_, k_max_); });
    check("edge-eigen-residual", loose, [&] { return edge_eigen_residuals(q_, k_max_); });
    check("edge-xi-relation", 1e-12, [&] { return edge_xi_relation(q_, k_max_); });
    check("basis-dimensions", exact, [&] { return basis_dimension_mismatches(q_, k_max_); });

    // Basis verification: one pass per k, three reported aspects.
    double gram = 0.0, kernel = 0.0, eigres = 0.0;
    for (int k = 1; k <= k_max_; ++k) {
        const BasisVerification v = verify_basis(q_, k, full_basis(q_, k), limit_);
        gram = std::max(gram, v.max_gram_offdiag);
        kernel = std::max(kernel, v.max_kernel_residual);
        eigres = std::max(eigres, v.max_eigen_residual);
    }
    check("basis-gram-offdiag", loose, [&] { return gram; });
    check("basis-kernel-residual", 1e-10, [&] { return kernel; });
    check("basis-eigen-residual", loose, [&] { return eigres; });

    check("incidence-rank", exact, [&] {
        double mismatches = 0.0;
        for (int k = 1; k <= k_max_; ++k) {
            const Index expected = ipow(static_cast<Index>(q_), k - 1) - 1;
            if (dense_incidence_rank(q_, k, 1e-9, limit_) != expected) mismatches += 1.0;
        }
        return mismatches;
    });
    check("edge-kernel-dimension", exact, [&] {
        double mismatches = 0.0;
        for (int k = 1; k <= k_max_; ++k) {
            const std::vector<double> ev = dense_spectrum_oracle(q_, k, LaplacianKind::edge, limit_);
            Index zero_dim = 0;
            for (double v : ev)
                if (std::abs(v) <= 1e-9) ++zero_dim;
            const Index cycle_dim = ipow(static_cast<Index>(q_), k) -
                                    ipow(static_cast<Index>(q_), k - 1) + 1;
            if (zero_dim != cycle_dim) mismatches += 1.0;
        }
        return mismatches;
    });

    check("toeplitz-oracle", loose, [&] { return toeplitz_oracle(loose); });
    check("vertex-block-compression", 1e-12, [&] { return block_compression(q_, k_max_); });
    check("xi-contraction", 1e-12, [&] { return xi_contraction(q_, k_max_); });
    check("kernel-stability", 1e-10, [&] { return kernel_stability(rng_, q_, k_max_); });
    check("lift-pairing", loose, [&] { return lift_pairing_sweep(rng_, q_, k_max_); });

    check("kmer-count-exactness", exact, [&] { return kmer_count_exactness(rng_, q_, k_max_); });
    check("kmer-rotation-invariance", exact,
          [&] { return kmer_rotation_invariance(rng_, q_, k_max_); });
    check("kmer-roundtrip", loose, [&] { return kmer_roundtrip(rng_, q_, k_max_); });
    check("kmer-multik-pairing", loose, [&] { return kmer_multik_pairing(rng_, q_, k_max_); });
    if (q_ == 2 && k_max_ >= 3)
        check("kmer-count-fixture", exact, [&] { return kmer_count_fixture(); });

    check("hopf-shuffle-fixture", exact, [&] { return hopf_shuffle_fixture(); });
    check("hopf-leibniz", exact, [&] { return hopf_leibniz_exhaustive(q_); });
    check("hopf-antipode-axioms", exact, [&] { return hopf_antipode_axioms(); });
    check("hopf-antipode-primitive", exact, [&] { return hopf_antipode_primitive(q_); });
    check("hopf-coassociativity", exact, [&] { return hopf_coassociativity(); });
    check("hopf-closure", 1e-12, [&] { return hopf_closure(q_); });
    check("hopf-factorization", exact, [&] { return hopf_factorization(q_); });
    check("hopf-deconcat-witness", exact, [&] { return hopf_deconcat_witness(); });
    check("hopf-dual-pairing", 1e-12, [&] { return hopf_dual_pairing(); });

    return std::move(report_);
}

} // namespace

RunReport run_invariant_suite(int q, int k_max, std::uint64_t seed,
                              const ToleranceConfig& tolerances, Index dense_limit) {
    if (q < 2) throw DomainError("run_invariant_suite: q must be at least 2");
    SuiteRunner runner(q, k_max, seed, tolerances, dense_limit);
    return runner.run();
}

std::string report_text(const RunReport& report) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "invariant suite: q=%d k_max=%d seed=%llu\n", report.q,
                  report.k_max, static_cast<unsigned long long>(report.seed));
    out += line;
    std::snprintf(line, sizeof line, "%-28s %-6s %-13s %-10s %s\n", "check", "status", "residual",
                  "tolerance", "ms");
    out += line;
    out += std::string(70, '-') + "\n";
    for (const CheckResult& c : report.checks) {
        std::snprintf(line, sizeof line, "%-28s %-6s %-13.3e %-10.1e %.1f\n", c.name.c_str(),
                      c.pass ? "pass" : "FAIL", c.residual, c.tolerance, c.wall_ms);
        out += line;
    }
    std::size_t passed = 0;
    for (const CheckResult& c : report.checks)
        if (c.pass) ++passed;
    std::snprintf(line, sizeof line, "total: %zu checks, %zu passed, %.1f ms\n",
                  report.checks.size(), passed, report.total_ms());
    out += line;
    return out;
}

std::string report_json(const RunReport& report) {
    std::string out = "{\n";
    out += "  \"q\": " + std::to_string(report.q) + ",\n";
    out += "  \"k_max\": " + std::to_string(report.k_max) + ",\n";
    out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
    out += "  \"all_pass\": " + std::string(report.all_pass() ? "true" : "false") + ",\n";
    out += "  \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        out += i ? ",\n    {" : "\n    {";
        out += "\"name\": \"" + c.name + "\", \"pass\": " + (c.pass ? "true" : "false") +
               ", \"residual\": " + format_real(c.residual) +
               ", \"tolerance\": " + format_real(c.tolerance) + "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

} // namespace debruijn
