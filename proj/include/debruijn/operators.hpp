#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "debruijn/tensor.hpp"

namespace debruijn {

enum class OperatorKind {
    delete_left,
    delete_right,
    insert_left,
    insert_right,
    adjacency,
    incidence,
    incidence_adjoint,
    vertex_laplacian,
    edge_laplacian,
};

const char* to_string(OperatorKind kind);
OperatorKind parse_operator_kind(const std::string& name); // "delete-left", ...

enum class Side { left, right };

// paper: the 1/sqrt(q)-weighted operator matrices; combinatorial: the
// integer +-1/0 graph matrices (incidence E, multiplicity adjacency A, and
// the E-product Laplacians), defined for the five graph kinds only.
enum class MatrixNormalization { paper, combinatorial };

const char* to_string(MatrixNormalization n);
MatrixNormalization parse_normalization(const std::string& name);

inline constexpr Index kDefaultDenseLimit = 65536; // 2^16 columns

struct DenseMatrix {
    Eigen::MatrixXcd entries;
    MatrixNormalization normalization = MatrixNormalization::paper;

    Index rows() const { return static_cast<Index>(entries.rows()); }
    Index cols() const { return static_cast<Index>(entries.cols()); }
};

// Codomain order minus domain order (-1, 0, or +1).
int order_offset(OperatorKind kind);

// Smallest domain order the kind accepts (0 for inserts, 1 otherwise).
int min_domain_order(OperatorKind kind);

// Applications are matrix-free and frame-covariant: native tensors get the
// 1/sqrt(q)-weighted word maps, Fourier tensors the conjugated operators
// (letter-0 boundary selection / insertion with unit coefficient).
Tensor apply_delete(Side side, const Tensor& t);           // order n >= 1 -> n-1
Tensor apply_insert(Side side, const Tensor& t);           // order n -> n+1
Tensor apply_adjacency(const Tensor& t);                   // n >= 1
Tensor apply_incidence(const Tensor& t);                   // n >= 1 -> n-1
Tensor apply_incidence_adjoint(const Tensor& t);           // n -> n+1
Tensor apply_vertex_laplacian(const Tensor& t);            // n >= 1
Tensor apply_edge_laplacian(const Tensor& t);              // n >= 1
Tensor apply_operator(OperatorKind kind, const Tensor& t);

// Dense matrix of the operator with domain order n.  paper normalization
// applies the operator column-by-column; combinatorial emits the integer
// graph matrices (self-loop incidence columns exactly zero).
DenseMatrix materialize(OperatorKind kind, int n, int q,
                        MatrixNormalization normalization,
                        Index dense_limit = kDefaultDenseLimit);

struct DeBruijnEdge {
    Word source; // length k-1
    Word target; // length k-1
    Word edge;   // length k
};

// All q^k edges of the order-k de Bruijn graph; edge w runs from its prefix
// (k-1)-mer to its suffix (k-1)-mer.
std::vector<DeBruijnEdge> debruijn_edges(int k, int q,
                                         Index dense_limit = kDefaultDenseLimit);

} // namespace debruijn
