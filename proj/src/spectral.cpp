#include "debruijn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace debruijn {

bool is_fourier_word(const Word& w) {
    if (w.empty()) return true;
    return w.front() != 0 && w.back() != 0;
}

Index count_fourier_words(int q, int r) {
    if (q < 2) throw DomainError("count_fourier_words: q must be at least 2");
    if (r < 0) throw DomainError("count_fourier_words: r must be nonnegative");
    if (r == 0) return 1;
    const Index boundary = static_cast<Index>(q - 1);
    if (r == 1) return boundary;
    return boundary * boundary * ipow(static_cast<Index>(q), r - 2);
}

std::vector<Word> enumerate_fourier_words(int q, int r) {
    const Index total = count_fourier_words(q, r);
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(total));
    if (r == 0) {
        words.emplace_back();
        return words;
    }
    // Odometer over per-position ranges: boundary letters start at 1,
    // interior letters at 0. Counting up yields lexicographic order.
    Word w(static_cast<std::size_t>(r), 0);
    w.front() = 1;
    w.back() = 1;
    const auto lo = [&](int pos) -> Letter {
        return (pos == 0 || pos == r - 1) ? Letter(1) : Letter(0);
    };
    while (true) {
        words.push_back(w);
        int pos = r - 1;
        while (pos >= 0) {
            if (w[static_cast<std::size_t>(pos)] + 1 < static_cast<Letter>(q)) {
                ++w[static_cast<std::size_t>(pos)];
                break;
            }
            w[static_cast<std::size_t>(pos)] = lo(pos);
            --pos;
        }
        if (pos < 0) break;
    }
    return words;
}

const char* to_string(EigenKind kind) {
    return kind == EigenKind::vertex ? "vertex" : "edge";
}

const char* to_string(BasisKind kind) {
    return kind == BasisKind::cycle ? "cycle" : "cut";
}

BasisKind parse_basis_kind(const std::string& name) {
    if (name == "cycle") return BasisKind::cycle;
    if (name == "cut") return BasisKind::cut;
    throw DomainError("unknown basis kind: " + name);
}

const char* to_string(LaplacianKind kind) {
    return kind == LaplacianKind::vertex ? "vertex" : "edge";
}

LaplacianKind parse_laplacian_kind(const std::string& name) {
    if (name == "vertex") return LaplacianKind::vertex;
    if (name == "edge") return LaplacianKind::edge;
    throw DomainError("unknown laplacian kind: " + name);
}

Tensor xi_apply(const Tensor& x, int j, int h) {
    if (x.frame() != Frame::fourier)
        throw ShapeError("xi_apply: input must be in the fourier frame");
    if (j < 0) throw DomainError("xi_apply: j must be nonnegative");
    if (h < 0 || h > j) throw DomainError("xi_apply: h must satisfy 0 <= h <= j");
    const int q = x.q();
    Tensor out(q, x.order() + j, Frame::fourier);
    const double norm = std::sqrt(static_cast<double>(j + 1));
    for (int l = 0; l <= j; ++l) {
        const double weight =
            std::cos((2.0 * l + 1.0) * h * std::numbers::pi / (2.0 * (j + 1))) / norm;
        // (insert-left)^(j-l) (insert-right)^l maps coefficient index
        // u -> u * q^l in the Fourier frame.
        const Index shift = ipow(static_cast<Index>(q), l);
        for (Index u = 0; u < x.size(); ++u) out[u * shift] += weight * x[u];
    }
    return out;
}

namespace {

void require_generator(int q, int k, const Word& x, const char* what) {
    if (q < 2) throw DomainError(std::string(what) + ": q must be at least 2");
    const int i = static_cast<int>(x.size());
    if (i < 1 || i > k)
        throw DomainError(std::string(what) + ": generator length must satisfy 1 <= i <= k");
    for (Letter a : x)
        if (a >= static_cast<Letter>(q))
            throw DomainError(std::string(what) + ": letter out of range for q");
    if (!is_fourier_word(x))
        throw DomainError(std::string(what) + ": generator boundary letters must be nonzero");
}

} // namespace

std::vector<EigenPair> vertex_eigenpairs(int q, int k, const Word& x) {
    require_generator(q, k, x, "vertex_eigenpairs");
    const int i = static_cast<int>(x.size());
    const int j = k - i;
    const Index xi = encode_word(x, q);
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(j + 1));
    for (int h = 1; h <= j + 1; ++h) {
        EigenPair p{EigenKind::vertex, x, i, j, h,
                    2.0 - 2.0 * std::cos(h * std::numbers::pi / (j + 2)),
                    Tensor(q, k, Frame::fourier)};
        for (int l = 1; l <= j + 1; ++l) {
            const double weight = std::sin(l * h * std::numbers::pi / (j + 2));
            p.vector[xi * ipow(static_cast<Index>(q), l - 1)] += Complex(weight, 0.0);
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

std::vector<EigenPair> edge_eigenpairs(int q, int k, const Word& x) {
    require_generator(q, k, x, "edge_eigenpairs");
    const int i = static_cast<int>(x.size());
    const int j = k - i;
    const Index xi = encode_word(x, q);
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(j + 2));
    for (int h = 0; h <= j + 1; ++h) {
        EigenPair p{EigenKind::edge, x, i, j, h,
                    2.0 - 2.0 * std::cos(h * std::numbers::pi / (j + 2)),
                    Tensor(q, k + 1, Frame::fourier)};
        for (int l = 0; l <= j + 1; ++l) {
            const double weight = std::cos((2.0 * l + 1.0) * h * std::numbers::pi / (2.0 * (j + 2)));
            p.vector[xi * ipow(static_cast<Index>(q), l)] += Complex(weight, 0.0);
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

Tensor BasisElement::to_tensor() const {
    Tensor t(q, k, Frame::fourier);
    for (const auto& [index, value] : coeffs) t[index] = value;
    return t;
}

namespace {

BasisElement make_element(BasisKind kind, int q, int k, const Word& x, int h) {
    BasisElement e;
    e.kind = kind;
    e.x = x;
    e.i = static_cast<int>(x.size());
    e.j = k - e.i;
    e.h = h;
    e.eigenvalue = h == 0 ? 0.0 : 2.0 - 2.0 * std::cos(h * std::numbers::pi / (e.j + 1));
    e.q = q;
    e.k = k;
    const Index xi = x.empty() ? 0 : encode_word(x, q);
    const double norm_j = std::sqrt(static_cast<double>(e.j + 1));
    // Accumulate the padded-word coefficients; for the empty generator all
    // j+1 placements coincide on the flat word at index 0.
    std::vector<std::pair<Index, Complex>> raw;
    for (int l = 0; l <= e.j; ++l) {
        const double weight =
            std::cos((2.0 * l + 1.0) * h * std::numbers::pi / (2.0 * (e.j + 1))) / norm_j;
        const Index index = xi * ipow(static_cast<Index>(q), l);
        if (!raw.empty() && raw.back().first == index)
            raw.back().second += Complex(weight, 0.0);
        else
            raw.emplace_back(index, Complex(weight, 0.0));
    }
    double norm_sq = 0.0;
    for (const auto& [index, value] : raw) norm_sq += std::norm(value);
    e.scale = std::sqrt(norm_sq);
    for (auto& [index, value] : raw) value /= e.scale;
    e.coeffs = std::move(raw);
    return e;
}

} // namespace

std::vector<BasisElement> cycle_basis(int q, int k) {
    if (q < 2) throw DomainError("cycle_basis: q must be at least 2");
    if (k < 1) throw DomainError("cycle_basis: k must be at least 1");
    std::vector<BasisElement> out;
    out.push_back(make_element(BasisKind::cycle, q, k, Word{}, 0));
    for (int i = 1; i <= k; ++i)
        for (const Word& x : enumerate_fourier_words(q, i))
            out.push_back(make_element(BasisKind::cycle, q, k, x, 0));
    return out;
}

std::vector<BasisElement> cut_basis(int q, int k) {
    if (q < 2) throw DomainError("cut_basis: q must be at least 2");
    if (k < 1) throw DomainError("cut_basis: k must be at least 1");
    std::vector<BasisElement> out;
    for (int i = 1; i <= k - 1; ++i) {
        const int j = k - i;
        for (const Word& x : enumerate_fourier_words(q, i))
            for (int h = 1; h <= j; ++h)
                out.push_back(make_element(BasisKind::cut, q, k, x, h));
    }
    return out;
}

std::vector<BasisElement> full_basis(int q, int k) {
    std::vector<BasisElement> out = cycle_basis(q, k);
    std::vector<BasisElement> cut = cut_basis(q, k);
    out.insert(out.end(), std::make_move_iterator(cut.begin()), std::make_move_iterator(cut.end()));
    return out;
}

BasisVerification verify_basis(int q, int k, const std::vector<BasisElement>& elements,
                               Index dense_limit) {
    if (ipow(static_cast<Index>(q), k) > dense_limit)
        throw ResourceError("verify_basis: q^k exceeds the dense limit");
    BasisVerification v;
    // Sparse Gram matrix: elements hold at most k+1 coefficients each.
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = a + 1; b < elements.size(); ++b) {
            Complex dot(0.0, 0.0);
            const auto& ca = elements[a].coeffs;
            const auto& cb = elements[b].coeffs;
            std::size_t ia = 0, ib = 0;
            while (ia < ca.size() && ib < cb.size()) {
                if (ca[ia].first < cb[ib].first) ++ia;
                else if (cb[ib].first < ca[ia].first) ++ib;
                else dot += std::conj(ca[ia++].second) * cb[ib++].second;
            }
            v.max_gram_offdiag = std::max(v.max_gram_offdiag, std::abs(dot));
        }
    for (const BasisElement& e : elements) {
        const Tensor t = e.to_tensor();
        if (e.kind == BasisKind::cycle && k >= 1)
            v.max_kernel_residual = std::max(v.max_kernel_residual, apply_incidence(t).norm());
        Tensor r = apply_edge_laplacian(t);
        r -= Complex(e.eigenvalue, 0.0) * t;
        v.max_eigen_residual = std::max(v.max_eigen_residual, r.norm());
    }
    return v;
}

std::vector<Complex> toeplitz_eigenvalues(double delta, double sigma, double tau, int n) {
    if (n < 1) throw DomainError("toeplitz_eigenvalues: n must be at least 1");
    const Complex mu = std::sqrt(Complex(sigma * tau, 0.0));
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h)
        values.push_back(Complex(delta, 0.0) +
                         2.0 * mu * std::cos(h * std::numbers::pi / (n + 1)));
    return values;
}

std::vector<ToeplitzPair> toeplitz_eigenpairs(double delta, double sigma, double tau, int n) {
    if (n < 1) throw DomainError("toeplitz_eigenpairs: n must be at least 1");
    if (sigma * tau == 0.0)
        throw DomainError("toeplitz_eigenpairs: eigenvectors unavailable when sigma*tau = 0");
    const Complex mu = std::sqrt(Complex(sigma * tau, 0.0));
    const Complex ratio = Complex(sigma, 0.0) / mu;
    std::vector<ToeplitzPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h) {
        ToeplitzPair p;
        p.value = Complex(delta, 0.0) + 2.0 * mu * std::cos(h * std::numbers::pi / (n + 1));
        p.vector.reserve(static_cast<std::size_t>(n));
        Complex power(1.0, 0.0);
        for (int m = 1; m <= n; ++m) {
            power *= ratio;
            p.vector.push_back(power * std::sin(h * m * std::numbers::pi / (n + 1)));
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

std::vector<double> closed_form_spectrum(int q, int k, LaplacianKind which) {
    if (q < 2) throw DomainError("closed_form_spectrum: q must be at least 2");
    if (k < 1) throw DomainError("closed_form_spectrum: k must be at least 1");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(ipow(static_cast<Index>(q), k)));
    if (which == LaplacianKind::vertex) {
        values.push_back(0.0); // the flat kernel vector
        for (int i = 1; i <= k; ++i) {
            const Index mult = count_fourier_words(q, i);
            const int j = k - i;
            for (int h = 1; h <= j + 1; ++h) {
                const double lambda = 2.0 - 2.0 * std::cos(h * std::numbers::pi / (j + 2));
                for (Index m = 0; m < mult; ++m) values.push_back(lambda);
            }
        }
    } else {
        const Index cycle_dim =
            ipow(static_cast<Index>(q), k) - ipow(static_cast<Index>(q), k - 1) + 1;
        values.assign(static_cast<std::size_t>(cycle_dim), 0.0);
        for (int i = 1; i <= k - 1; ++i) {
            const Index mult = count_fourier_words(q, i);
            const int j = k - i;
            for (int h = 1; h <= j; ++h) {
                const double lambda = 2.0 - 2.0 * std::cos(h * std::numbers::pi / (j + 1));
                for (Index m = 0; m < mult; ++m) values.push_back(lambda);
            }
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> dense_spectrum_oracle(int q, int k, LaplacianKind which, Index dense_limit) {
    const OperatorKind kind = which == LaplacianKind::vertex ? OperatorKind::vertex_laplacian
                                                             : OperatorKind::edge_laplacian;
    const DenseMatrix m = materialize(kind, k, q, MatrixNormalization::paper, dense_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries);
    if (solver.info() != Eigen::Success)
        throw ResourceError("dense_spectrum_oracle: eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Index dense_incidence_rank(int q, int k, double tol, Index dense_limit) {
    const DenseMatrix m =
        materialize(OperatorKind::incidence, k, q, MatrixNormalization::paper, dense_limit);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol * sv(0);
    Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

double lift_pairing_residual(const Tensor& w, const Word& x, int ell) {
    if (w.frame() != Frame::fourier)
        throw ShapeError("lift_pairing_residual: w must be in the fourier frame");
    if (static_cast<int>(x.size()) != w.order())
        throw ShapeError("lift_pairing_residual: generator length must equal the order of w");
    if (ell < 0) throw DomainError("lift_pairing_residual: ell must be nonnegative");
    const int q = w.q();
    for (Letter a : x)
        if (a >= static_cast<Letter>(q))
            throw DomainError("lift_pairing_residual: letter out of range for q");
    if (!is_fourier_word(x))
        throw DomainError("lift_pairing_residual: x must have nonzero boundary letters");
    if (w.order() >= 1 && apply_incidence(w).norm() > 1e-10)
        throw DomainError("lift_pairing_residual: w is not in the cycle space");

    const int k = w.order();
    Tensor lift(q, k + ell, Frame::fourier);
    const double scale = std::pow(static_cast<double>(q), -0.5 * ell);
    for (int i = 0; i <= ell; ++i) {
        // (insert-left)^i (insert-right)^(ell-i): index u -> u * q^(ell-i).
        const Index shift = ipow(static_cast<Index>(q), ell - i);
        for (Index u = 0; u < w.size(); ++u) lift[u * shift] += scale * w[u];
    }
    const Tensor xhat = Tensor::basis(q, x, Frame::fourier);
    const Tensor padded = xi_apply(xhat, ell, 0);
    const Complex lhs = inner_product(lift, padded);
    const Complex rhs = std::sqrt(static_cast<double>(ell + 1)) /
                        std::sqrt(std::pow(static_cast<double>(q), ell)) *
                        inner_product(w, xhat);
    return std::abs(lhs - rhs);
}

} // namespace debruijn
