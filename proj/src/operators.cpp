#include "debruijn/operators.hpp"

#include <cmath>

namespace debruijn {

const char* to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::delete_left: return "delete-left";
        case OperatorKind::delete_right: return "delete-right";
        case OperatorKind::insert_left: return "insert-left";
        case OperatorKind::insert_right: return "insert-right";
        case OperatorKind::adjacency: return "adjacency";
        case OperatorKind::incidence: return "incidence";
        case OperatorKind::incidence_adjoint: return "incidence-adjoint";
        case OperatorKind::vertex_laplacian: return "vertex-laplacian";
        case OperatorKind::edge_laplacian: return "edge-laplacian";
    }
    return "?";
}

OperatorKind parse_operator_kind(const std::string& name) {
    for (OperatorKind k : {OperatorKind::delete_left, OperatorKind::delete_right,
                           OperatorKind::insert_left, OperatorKind::insert_right,
                           OperatorKind::adjacency, OperatorKind::incidence,
                           OperatorKind::incidence_adjoint, OperatorKind::vertex_laplacian,
                           OperatorKind::edge_laplacian})
        if (name == to_string(k)) return k;
    throw DomainError("unknown operator kind: " + name);
}

const char* to_string(MatrixNormalization n) {
    return n == MatrixNormalization::paper ? "paper" : "combinatorial";
}

MatrixNormalization parse_normalization(const std::string& name) {
    if (name == "paper") return MatrixNormalization::paper;
    if (name == "combinatorial") return MatrixNormalization::combinatorial;
    throw DomainError("unknown normalization: " + name);
}

int order_offset(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::delete_left:
        case OperatorKind::delete_right:
        case OperatorKind::incidence:
            return -1;
        case OperatorKind::insert_left:
        case OperatorKind::insert_right:
        case OperatorKind::incidence_adjoint:
            return +1;
        default:
            return 0;
    }
}

int min_domain_order(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::insert_left:
        case OperatorKind::insert_right:
        case OperatorKind::incidence_adjoint:
            return 0;
        default:
            return 1;
    }
}

namespace {

void require_order(const Tensor& t, int min_order, const char* what) {
    if (t.order() < min_order)
        throw DomainError(std::string(what) + ": tensor order too small (order " +
                          std::to_string(t.order()) + ", need >= " + std::to_string(min_order) + ")");
}

} // namespace

Tensor apply_delete(Side side, const Tensor& t) {
    require_order(t, 1, "apply_delete");
    const int q = t.q();
    const int n = t.order();
    Tensor out(q, n - 1, t.frame());
    const Index block = out.size(); // q^(n-1)
    if (t.frame() == Frame::native) {
        const double s = 1.0 / std::sqrt(static_cast<double>(q));
        if (side == Side::left) {
            for (Index a = 0; a < static_cast<Index>(q); ++a)
                for (Index u = 0; u < block; ++u) out[u] += t[a * block + u];
        } else {
            for (Index u = 0; u < block; ++u)
                for (Index a = 0; a < static_cast<Index>(q); ++a) out[u] += t[u * q + a];
        }
        out *= s;
    } else {
        // Fourier frame: keep only the boundary-letter-0 slice, coefficient 1.
        if (side == Side::left) {
            for (Index u = 0; u < block; ++u) out[u] = t[u];
        } else {
            for (Index u = 0; u < block; ++u) out[u] = t[u * q];
        }
    }
    return out;
}

Tensor apply_insert(Side side, const Tensor& t) {
    const int q = t.q();
    const int n = t.order();
    Tensor out(q, n + 1, t.frame());
    const Index block = t.size(); // q^n
    if (t.frame() == Frame::native) {
        const double s = 1.0 / std::sqrt(static_cast<double>(q));
        if (side == Side::left) {
            for (Index a = 0; a < static_cast<Index>(q); ++a)
                for (Index u = 0; u < block; ++u) out[a * block + u] = s * t[u];
        } else {
            for (Index u = 0; u < block; ++u)
                for (Index a = 0; a < static_cast<Index>(q); ++a) out[u * q + a] = s * t[u];
        }
    } else {
        // Fourier frame: prepend/append letter 0 with unit coefficient.
        if (side == Side::left) {
            for (Index u = 0; u < block; ++u) out[u] = t[u];
        } else {
            for (Index u = 0; u < block; ++u) out[u * q] = t[u];
        }
    }
    return out;
}

Tensor apply_adjacency(const Tensor& t) {
    require_order(t, 1, "apply_adjacency");
    Tensor a = apply_insert(Side::right, apply_delete(Side::left, t));
    a += apply_insert(Side::left, apply_delete(Side::right, t));
    return a;
}

Tensor apply_incidence(const Tensor& t) {
    require_order(t, 1, "apply_incidence");
    Tensor d = apply_delete(Side::left, t);
    d -= apply_delete(Side::right, t);
    return d;
}

Tensor apply_incidence_adjoint(const Tensor& t) {
    Tensor d = apply_insert(Side::left, t);
    d -= apply_insert(Side::right, t);
    return d;
}

Tensor apply_vertex_laplacian(const Tensor& t) {
    require_order(t, 1, "apply_vertex_laplacian");
    return apply_incidence(apply_incidence_adjoint(t));
}

Tensor apply_edge_laplacian(const Tensor& t) {
    require_order(t, 1, "apply_edge_laplacian");
    return apply_incidence_adjoint(apply_incidence(t));
}

Tensor apply_operator(OperatorKind kind, const Tensor& t) {
    switch (kind) {
        case OperatorKind::delete_left: return apply_delete(Side::left, t);
        case OperatorKind::delete_right: return apply_delete(Side::right, t);
        case OperatorKind::insert_left: return apply_insert(Side::left, t);
        case OperatorKind::insert_right: return apply_insert(Side::right, t);
        case OperatorKind::adjacency: return apply_adjacency(t);
        case OperatorKind::incidence: return apply_incidence(t);
        case OperatorKind::incidence_adjoint: return apply_incidence_adjoint(t);
        case OperatorKind::vertex_laplacian: return apply_vertex_laplacian(t);
        case OperatorKind::edge_laplacian: return apply_edge_laplacian(t);
    }
    throw DomainError("apply_operator: unknown kind");
}

namespace {

// Integer +-1/0 incidence matrix of the order-k de Bruijn graph: rows are the
// q^(k-1) vertices, columns the q^k edges; self-loop columns are exactly zero.
Eigen::MatrixXcd integer_incidence(int k, int q) {
    const Index rows = ipow(static_cast<Index>(q), k - 1);
    const Index cols = ipow(static_cast<Index>(q), k);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                                static_cast<Eigen::Index>(cols));
    for (Index e = 0; e < cols; ++e) {
        const Index src = e / static_cast<Index>(q);
        const Index tgt = e % rows;
        if (src == tgt) continue;
        m(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(e)) -= 1.0;
        m(static_cast<Eigen::Index>(tgt), static_cast<Eigen::Index>(e)) += 1.0;
    }
    return m;
}

// Undirected multiplicity adjacency of the order-(n+1) de Bruijn graph on the
// q^n vertices; a self-loop contributes 2 to its diagonal entry.
Eigen::MatrixXcd integer_adjacency(int n, int q) {
    const Index verts = ipow(static_cast<Index>(q), n);
    const Index edges = verts * static_cast<Index>(q);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(verts),
                                                static_cast<Eigen::Index>(verts));
    for (Index e = 0; e < edges; ++e) {
        const Index src = e / static_cast<Index>(q);
        const Index tgt = e % verts;
        m(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(tgt)) += 1.0;
        m(static_cast<Eigen::Index>(tgt), static_cast<Eigen::Index>(src)) += 1.0;
    }
    return m;
}

} // namespace

DenseMatrix materialize(OperatorKind kind, int n, int q,
                        MatrixNormalization normalization, Index dense_limit) {
    if (q < 2) throw DomainError("materialize: q must be at least 2");
    if (n < min_domain_order(kind))
        throw DomainError(std::string("materialize: domain order too small for ") + to_string(kind));
    const int cod = n + order_offset(kind);
    const Index size = ipow(static_cast<Index>(q), std::max(n, cod));
    if (size > dense_limit)
        throw ResourceError("materialize: q^order exceeds the dense limit");

    DenseMatrix result;
    result.normalization = normalization;

    if (normalization == MatrixNormalization::paper) {
        const Index rows = ipow(static_cast<Index>(q), cod);
        const Index cols = ipow(static_cast<Index>(q), n);
        result.entries.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (Index c = 0; c < cols; ++c) {
            Tensor e(q, n, Frame::native);
            e[c] = Complex(1.0, 0.0);
            const Tensor col = apply_operator(kind, e);
            for (Index r = 0; r < rows; ++r)
                result.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
        }
        return result;
    }

    switch (kind) {
        case OperatorKind::incidence:
            result.entries = integer_incidence(n, q);
            return result;
        case OperatorKind::incidence_adjoint:
            result.entries = integer_incidence(n + 1, q).transpose();
            return result;
        case OperatorKind::adjacency:
            result.entries = integer_adjacency(n, q);
            return result;
        case OperatorKind::vertex_laplacian: {
            const Eigen::MatrixXcd e = integer_incidence(n + 1, q);
            result.entries = e * e.transpose();
            return result;
        }
        case OperatorKind::edge_laplacian: {
            const Eigen::MatrixXcd e = integer_incidence(n, q);
            result.entries = e.transpose() * e;
            return result;
        }
        default:
            throw DomainError(std::string("materialize: combinatorial normalization is undefined for ") +
                              to_string(kind));
    }
}

std::vector<DeBruijnEdge> debruijn_edges(int k, int q, Index dense_limit) {
    if (k < 2) throw DomainError("debruijn_edges: k must be at least 2");
    if (q < 2) throw DomainError("debruijn_edges: q must be at least 2");
    const Index edges = ipow(static_cast<Index>(q), k);
    if (edges > dense_limit) throw ResourceError("debruijn_edges: q^k exceeds the dense limit");
    const Index verts = edges / static_cast<Index>(q);
    std::vector<DeBruijnEdge> out;
    out.reserve(static_cast<std::size_t>(edges));
    for (Index e = 0; e < edges; ++e) {
        out.push_back(DeBruijnEdge{
            decode_index(e / static_cast<Index>(q), k - 1, q),
            decode_index(e % verts, k - 1, q),
            decode_index(e, k, q),
        });
    }
    return out;
}

} // namespace debruijn
