#pragma once

#include <string>
#include <utility>
#include <vector>

#include "debruijn/fourier.hpp"
#include "debruijn/operators.hpp"
#include "debruijn/tensor.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

// A Fourier word: letters are indices into the Fourier letter basis
// (letter 0 = the flat vector). Membership in the generating family X
// requires nonzero boundary letters; the empty word is the unique length-0
// member.
bool is_fourier_word(const Word& w);
std::vector<Word> enumerate_fourier_words(int q, int r);
Index count_fourier_words(int q, int r);

enum class EigenKind { vertex, edge };
const char* to_string(EigenKind kind);

// Closed-form Laplacian eigenpair. The vector lives in the Fourier frame.
// Provenance: x is the generating Fourier word of length i, j = k - i is
// the number of padding slots in the defining sum, and h indexes the pair
// within its block; eigenvalue = 2 - 2*cos(h*pi/(j+2)).
struct EigenPair {
    EigenKind kind = EigenKind::vertex;
    Word x;
    int i = 0;
    int j = 0;
    int h = 0;
    double eigenvalue = 0.0;
    Tensor vector;
};

// The cosine-weighted padding operator: distributes j extra letter-0 slots
// around the input with weights cos((2l+1)h*pi/(2(j+1)))/sqrt(j+1),
// l = 0..j counting the slots placed on the right.
Tensor xi_apply(const Tensor& x, int j, int h);

// Eigenpairs of the order-k vertex Laplacian (vectors of order k) generated
// by the Fourier word x of length i, 1 <= i <= k; h runs 1..k-i+1.
std::vector<EigenPair> vertex_eigenpairs(int q, int k, const Word& x);

// Eigenpairs of the edge Laplacian generated by x (vectors of order k+1);
// h runs 0..k-i+1 and h = 0 is the directed-kernel (cycle) member.
std::vector<EigenPair> edge_eigenpairs(int q, int k, const Word& x);

enum class BasisKind { cycle, cut };
const char* to_string(BasisKind kind);
BasisKind parse_basis_kind(const std::string& name);

// One element of the orthonormal cycle or cut basis of the order-k edge
// space, stored sparsely in the Fourier frame. The element equals the
// padded word family Xi*_{j,h}(x) scaled to unit norm; `scale` is the norm
// the unnormalized form had. Here j counts the padding slots, so i + j = k,
// and the edge-Laplacian eigenvalue is 2 - 2*cos(h*pi/(j+1)) (zero exactly
// when h = 0, i.e. for cycle elements).
struct BasisElement {
    BasisKind kind = BasisKind::cycle;
    Word x;
    int i = 0;
    int j = 0;
    int h = 0;
    double eigenvalue = 0.0;
    double scale = 1.0;
    int q = 0;
    int k = 0;
    std::vector<std::pair<Index, Complex>> coeffs; // sorted by index, unit norm

    Tensor to_tensor() const;
};

// Orthonormal basis of the cycle space (dimension q^k - q^(k-1) + 1) and of
// its orthogonal complement, the cut space (dimension q^(k-1) - 1).
// Construction is sparse and matrix-free. Elements are ordered by
// (i ascending, x lexicographic, h ascending); full_basis lists the cycle
// block first, then the cut block.
std::vector<BasisElement> cycle_basis(int q, int k);
std::vector<BasisElement> cut_basis(int q, int k);
std::vector<BasisElement> full_basis(int q, int k);

// Dense cross-checks of a constructed basis (Gram diagonality, incidence
// kernel membership, eigen-residuals). Gated by the dense limit.
struct BasisVerification {
    double max_gram_offdiag = 0.0;
    double max_kernel_residual = 0.0; // over cycle elements only
    double max_eigen_residual = 0.0;  // edge Laplacian, all elements
};
BasisVerification verify_basis(int q, int k, const std::vector<BasisElement>& elements,
                               Index dense_limit = kDefaultDenseLimit);

// Analytic eigensystem of the n x n tridiagonal Toeplitz matrix with
// diagonal delta, subdiagonal sigma, superdiagonal tau:
// lambda_h = delta + 2*mu*cos(h*pi/(n+1)) with mu the principal square
// root of sigma*tau, and x_{h,m} = (sigma/mu)^m * sin(h*m*pi/(n+1)).
std::vector<Complex> toeplitz_eigenvalues(double delta, double sigma, double tau, int n);
struct ToeplitzPair {
    Complex value;
    std::vector<Complex> vector;
};
std::vector<ToeplitzPair> toeplitz_eigenpairs(double delta, double sigma, double tau, int n);

enum class LaplacianKind { vertex, edge };
const char* to_string(LaplacianKind kind);
LaplacianKind parse_laplacian_kind(const std::string& name);

// Sorted (ascending) eigenvalue list of the order-k Laplacian: closed form
// from the block structure, and the dense Hermitian eigensolver oracle.
std::vector<double> closed_form_spectrum(int q, int k, LaplacianKind which);
std::vector<double> dense_spectrum_oracle(int q, int k, LaplacianKind which,
                                          Index dense_limit = kDefaultDenseLimit);

// Rank of the densely materialized incidence operator on order-k tensors,
// computed by SVD with the given relative threshold.
Index dense_incidence_rank(int q, int k, double tol = 1e-9,
                           Index dense_limit = kDefaultDenseLimit);

// Residual of the pairing identity linking a cycle-space tensor w of order
// k with its order-(k+ell) lift: the pairing of the lift against
// Xi*_{ell,0}(x) must equal sqrt(ell+1)/sqrt(q^ell) times the pairing of w
// against x itself. Requires w in the kernel of the Fourier incidence
// operator (within 1e-10).
double lift_pairing_residual(const Tensor& w, const Word& x, int ell);

} // namespace debruijn
