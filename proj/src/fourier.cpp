#include "debruijn/fourier.hpp"

#include <cmath>
#include <numbers>

namespace debruijn {

const char* to_string(TransformKind kind) {
    return kind == TransformKind::dft ? "dft" : "hadamard";
}

TransformKind parse_transform_kind(const std::string& name) {
    if (name == "dft") return TransformKind::dft;
    if (name == "hadamard") return TransformKind::hadamard;
    throw DomainError("unknown transform kind: " + name);
}

Eigen::MatrixXcd unitary_transform_matrix(TransformKind kind, int q) {
    if (q < 2) throw DomainError("unitary_transform_matrix: q must be at least 2");
    if (kind == TransformKind::dft) {
        Eigen::MatrixXcd f(q, q);
        const double scale = 1.0 / std::sqrt(static_cast<double>(q));
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) {
                const double angle = -2.0 * std::numbers::pi *
                                     static_cast<double>(static_cast<long long>(r) * c % q) /
                                     static_cast<double>(q);
                f(r, c) = std::polar(scale, angle);
            }
        return f;
    }
    if ((q & (q - 1)) != 0)
        throw DomainError("unitary_transform_matrix: hadamard requires q to be a power of 2");
    Eigen::MatrixXcd h(1, 1);
    h(0, 0) = Complex(1.0, 0.0);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int m = 1; m < q; m *= 2) {
        Eigen::MatrixXcd next(2 * m, 2 * m);
        next.topLeftCorner(m, m) = h;
        next.topRightCorner(m, m) = h;
        next.bottomLeftCorner(m, m) = h;
        next.bottomRightCorner(m, m) = -h;
        h = scale * next;
    }
    return h;
}

namespace {

// Applies the q x q matrix g along every mode of the coefficient array.
std::vector<Complex> apply_modewise(const std::vector<Complex>& in, int q, int order,
                                    const Eigen::MatrixXcd& g) {
    std::vector<Complex> cur = in;
    std::vector<Complex> fiber(static_cast<std::size_t>(q));
    for (int mode = 0; mode < order; ++mode) {
        const Index stride = ipow(static_cast<Index>(q), order - 1 - mode);
        const Index outer = static_cast<Index>(cur.size()) / (stride * static_cast<Index>(q));
        for (Index pre = 0; pre < outer; ++pre)
            for (Index rest = 0; rest < stride; ++rest) {
                const Index base = pre * static_cast<Index>(q) * stride + rest;
                for (int r = 0; r < q; ++r) fiber[static_cast<std::size_t>(r)] = cur[base + static_cast<Index>(r) * stride];
                for (int s = 0; s < q; ++s) {
                    Complex acc(0.0, 0.0);
                    for (int r = 0; r < q; ++r) acc += g(s, r) * fiber[static_cast<std::size_t>(r)];
                    cur[base + static_cast<Index>(s) * stride] = acc;
                }
            }
    }
    return cur;
}

} // namespace

Tensor transform_tensor(const Tensor& t, TransformDirection direction, TransformKind kind) {
    const Frame expected = direction == TransformDirection::forward ? Frame::native : Frame::fourier;
    if (t.frame() != expected)
        throw ShapeError(std::string("transform_tensor: ") +
                         (direction == TransformDirection::forward ? "forward" : "inverse") +
                         " direction requires the " + to_string(expected) + " frame");
    const Eigen::MatrixXcd f = unitary_transform_matrix(kind, t.q());
    const Eigen::MatrixXcd g = direction == TransformDirection::forward
                                   ? Eigen::MatrixXcd(f.adjoint())
                                   : f;
    Tensor out(t.q(), t.order(), expected == Frame::native ? Frame::fourier : Frame::native);
    std::vector<Complex> transformed = apply_modewise(t.coeffs(), t.q(), t.order(), g);
    for (Index i = 0; i < out.size(); ++i) out[i] = transformed[static_cast<std::size_t>(i)];
    return out;
}

Tensor apply_fourier_delete(Side side, const Tensor& t) {
    if (t.frame() != Frame::fourier)
        throw ShapeError("apply_fourier_delete: tensor is not in the fourier frame");
    return apply_delete(side, t);
}

Tensor apply_fourier_insert(Side side, const Tensor& t) {
    if (t.frame() != Frame::fourier)
        throw ShapeError("apply_fourier_insert: tensor is not in the fourier frame");
    return apply_insert(side, t);
}

namespace {

Eigen::MatrixXcd kronecker_power(const Eigen::MatrixXcd& f, int n) {
    Eigen::MatrixXcd out(1, 1);
    out(0, 0) = Complex(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd next(out.rows() * f.rows(), out.cols() * f.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c)
                next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = out(r, c) * f;
        out = std::move(next);
    }
    return out;
}

} // namespace

double conjugation_residual(OperatorKind kind, int n, int q, TransformKind transform,
                            Index dense_limit) {
    const DenseMatrix native = materialize(kind, n, q, MatrixNormalization::paper, dense_limit);
    const int cod = n + order_offset(kind);

    // Materialize the operator directly in the Fourier frame, column by column.
    const Index rows = ipow(static_cast<Index>(q), cod);
    const Index cols = ipow(static_cast<Index>(q), n);
    Eigen::MatrixXcd fourier(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Index c = 0; c < cols; ++c) {
        Tensor e(q, n, Frame::fourier);
        e[c] = Complex(1.0, 0.0);
        const Tensor col = apply_operator(kind, e);
        for (Index r = 0; r < rows; ++r)
            fourier(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
    }

    const Eigen::MatrixXcd f = unitary_transform_matrix(transform, q);
    const Eigen::MatrixXcd u_dom = kronecker_power(f, n);
    const Eigen::MatrixXcd u_cod = kronecker_power(f, cod);
    const Eigen::MatrixXcd conjugated = u_cod.adjoint() * native.entries * u_dom;
    return (fourier - conjugated).cwiseAbs().maxCoeff();
}

} // namespace debruijn
