#pragma once

#include <cstdint>
#include <vector>

#include "debruijn/spectral.hpp"
#include "debruijn/tensor.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

// A nonempty string read with period-n wraparound.
struct CircularString {
    int q = 0;
    Word letters;
};

CircularString circular_string(int q, Word letters);

// Exact integer k-mer counts of a circular string; one window per start
// position, so the coefficients always sum to the string length.
struct CountTensor {
    int q = 0;
    int k = 0;
    Index n = 0;
    std::vector<std::int64_t> counts;

    Tensor to_tensor() const; // native frame
};

CountTensor count_kmers(const CircularString& s, int k);

// Norm of the incidence operator applied to the counts. The left and right
// marginals are compared as exact integers first, so genuine circular
// counts return 0.0 exactly; k = 1 is 0 by definition.
double cycle_residual(const CountTensor& t);

// Expansion of a tensor over the orthonormal cycle basis (Fourier frame).
// Entries are aligned with, and indexed into, cycle_basis(q, k); the
// residual is the norm of the component outside the cycle space. Native
// inputs are transformed forward first.
struct Decomposition {
    struct Entry {
        std::size_t basis_index = 0;
        Complex coefficient;
    };
    std::vector<Entry> entries;
    double residual = 0.0;
};

Decomposition decompose(const Tensor& t, int q, int k,
                        TransformKind transform = TransformKind::dft);

// Inverse of decompose on the cycle space: sums coefficient * basis element
// into a Fourier-frame tensor. Unknown basis indices are rejected.
Tensor reconstruct(const std::vector<Decomposition::Entry>& entries, int q, int k);

} // namespace debruijn
