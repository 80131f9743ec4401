#pragma once

#include <string>

#include <Eigen/Dense>

#include "debruijn/operators.hpp"
#include "debruijn/tensor.hpp"

namespace debruijn {

// Unitary letter-space transforms. `dft` is defined for every q >= 2;
// `hadamard` only for q a power of two. Both have the flat unit vector as
// column 0, which is what makes the frame-change absorb the 1/sqrt(q)
// factors of the deletion operators.
enum class TransformKind { dft, hadamard };

const char* to_string(TransformKind kind);
TransformKind parse_transform_kind(const std::string& name);

enum class TransformDirection { forward, inverse };

// The q x q unitary matrix F. dft: F[r][c] = exp(-2*pi*i*r*c/q)/sqrt(q).
// hadamard: the recursively defined Walsh matrix scaled to be unitary.
// Fourier basis letters are the columns of F; column 0 is the flat vector.
Eigen::MatrixXcd unitary_transform_matrix(TransformKind kind, int q);

// Changes coordinate frame by applying F (inverse) or its adjoint (forward)
// independently along each of the tensor's modes. forward maps native ->
// fourier and inverse maps fourier -> native; the input frame must match.
Tensor transform_tensor(const Tensor& t, TransformDirection direction,
                        TransformKind kind = TransformKind::dft);

// Frame-checked aliases of the deletion/insertion maps in Fourier
// coordinates: on a Fourier basis word the boundary letter is dropped with
// coefficient 1 when it is letter 0 and the word is annihilated otherwise;
// insertion prepends/appends letter 0 with coefficient 1.
Tensor apply_fourier_delete(Side side, const Tensor& t);
Tensor apply_fourier_insert(Side side, const Tensor& t);

// Max-norm difference between the operator materialized in the Fourier
// frame and the conjugation of its native matrix by the tensor-power
// transform. Small residual certifies that both frame implementations
// realize the same abstract operator.
double conjugation_residual(OperatorKind kind, int n, int q,
                            TransformKind transform = TransformKind::dft,
                            Index dense_limit = kDefaultDenseLimit);

} // namespace debruijn
