#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "debruijn/errors.hpp"
#include "debruijn/fourier.hpp"
#include "debruijn/tensor.hpp"

using namespace debruijn;

namespace {

constexpr double kRoot2Inv = 0.70710678118654752;

double diff_norm(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d -= b;
    return d.norm();
}

Tensor random_tensor(int q, int n, Frame frame, std::mt19937_64& rng) {
    Tensor t(q, n, frame);
    for (Index i = 0; i < t.size(); ++i) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        t[i] = Complex(re, im);
    }
    return t;
}

} // namespace

TEST_CASE("transform kind names round-trip") {
    CHECK(parse_transform_kind("dft") == TransformKind::dft);
    CHECK(parse_transform_kind("hadamard") == TransformKind::hadamard);
    CHECK(std::string(to_string(TransformKind::dft)) == "dft");
    CHECK_THROWS_AS(parse_transform_kind("fft"), DomainError);
}

TEST_CASE("binary DFT matrix") {
    const Eigen::MatrixXcd f = unitary_transform_matrix(TransformKind::dft, 2);
    REQUIRE(f.rows() == 2);
    CHECK(std::abs(f(0, 0) - Complex(kRoot2Inv, 0)) <= 1e-15);
    CHECK(std::abs(f(0, 1) - Complex(kRoot2Inv, 0)) <= 1e-15);
    CHECK(std::abs(f(1, 0) - Complex(kRoot2Inv, 0)) <= 1e-15);
    CHECK(std::abs(f(1, 1) - Complex(-kRoot2Inv, 0)) <= 1e-15);
}

TEST_CASE("quaternary DFT column 1 runs through the fourth roots of unity") {
    const Eigen::MatrixXcd f = unitary_transform_matrix(TransformKind::dft, 4);
    CHECK(std::abs(f(0, 1) - Complex(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(f(1, 1) - Complex(0.0, -0.5)) <= 1e-15);
    CHECK(std::abs(f(2, 1) - Complex(-0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(f(3, 1) - Complex(0.0, 0.5)) <= 1e-15);
}

TEST_CASE("transform matrices are unitary with a flat first column") {
    for (int q = 2; q <= 8; ++q) {
        const Eigen::MatrixXcd f = unitary_transform_matrix(TransformKind::dft, q);
        const Eigen::MatrixXcd gram = f.adjoint() * f;
        CHECK((gram - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff() <= 1e-12);
        for (int r = 0; r < q; ++r)
            CHECK(std::abs(f(r, 0) - Complex(1.0 / std::sqrt(double(q)), 0)) <= 1e-12);
    }
    for (int q : {2, 4, 8}) {
        const Eigen::MatrixXcd h = unitary_transform_matrix(TransformKind::hadamard, q);
        const Eigen::MatrixXcd gram = h.adjoint() * h;
        CHECK((gram - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff() <= 1e-12);
        for (int r = 0; r < q; ++r)
            CHECK(std::abs(h(r, 0) - Complex(1.0 / std::sqrt(double(q)), 0)) <= 1e-12);
    }
    CHECK_THROWS_AS(unitary_transform_matrix(TransformKind::hadamard, 3), DomainError);
    CHECK_THROWS_AS(unitary_transform_matrix(TransformKind::hadamard, 6), DomainError);
    CHECK_THROWS_AS(unitary_transform_matrix(TransformKind::dft, 1), DomainError);
}

TEST_CASE("forward transform sends the flat vector to the first Fourier word") {
    for (int n = 0; n <= 3; ++n) {
        const Tensor u = Tensor::debruijn(2, n);
        const Tensor hat = transform_tensor(u, TransformDirection::forward);
        CHECK(hat.frame() == Frame::fourier);
        const Tensor expected = Tensor::basis(2, Word(n, 0), Frame::fourier);
        CHECK(diff_norm(hat, expected) <= 1e-12);
    }
}

TEST_CASE("forward transform of the signed pair lands on the mixed words") {
    // aa - bb in native coordinates equals the Fourier words 01 + 10.
    Tensor t(2, 2, Frame::native);
    t[0] = Complex(1.0, 0.0);
    t[3] = Complex(-1.0, 0.0);
    const Tensor hat = transform_tensor(t, TransformDirection::forward);
    const Tensor expected = Tensor::basis(2, Word{0, 1}, Frame::fourier) +
                            Tensor::basis(2, Word{1, 0}, Frame::fourier);
    CHECK(diff_norm(hat, expected) <= 1e-12);
}

TEST_CASE("transforms round-trip and preserve energy") {
    std::mt19937_64 rng(17);
    for (int q : {2, 3, 4}) {
        const Tensor t = random_tensor(q, 4, Frame::native, rng);
        const Tensor hat = transform_tensor(t, TransformDirection::forward);
        CHECK(std::abs(hat.norm() - t.norm()) <= 1e-12);
        const Tensor back = transform_tensor(hat, TransformDirection::inverse);
        CHECK(back.frame() == Frame::native);
        CHECK(diff_norm(back, t) <= 1e-12);
    }
    const Tensor t2 = random_tensor(4, 3, Frame::native, rng);
    const Tensor h2 = transform_tensor(t2, TransformDirection::forward, TransformKind::hadamard);
    const Tensor b2 = transform_tensor(h2, TransformDirection::inverse, TransformKind::hadamard);
    CHECK(diff_norm(b2, t2) <= 1e-12);
}

TEST_CASE("transform directions require the matching frame") {
    const Tensor native = Tensor::basis(2, Word{0}, Frame::native);
    const Tensor fourier = Tensor::basis(2, Word{0}, Frame::fourier);
    CHECK_THROWS_AS(transform_tensor(native, TransformDirection::inverse), ShapeError);
    CHECK_THROWS_AS(transform_tensor(fourier, TransformDirection::forward), ShapeError);
}

TEST_CASE("Fourier deletions keep or kill by the boundary letter") {
    const Tensor uub = Tensor::basis(2, Word{0, 0, 1}, Frame::fourier);
    CHECK(diff_norm(apply_fourier_delete(Side::left, uub),
                    Tensor::basis(2, Word{0, 1}, Frame::fourier)) <= 1e-15);

    const Tensor bub = Tensor::basis(2, Word{1, 0, 1}, Frame::fourier);
    CHECK(apply_fourier_delete(Side::left, bub).norm() <= 1e-15);

    const Tensor ubu = Tensor::basis(2, Word{0, 1, 0}, Frame::fourier);
    CHECK(diff_norm(apply_fourier_delete(Side::right, ubu),
                    Tensor::basis(2, Word{0, 1}, Frame::fourier)) <= 1e-15);
}

TEST_CASE("Fourier insertions prepend or append letter 0 with unit weight") {
    const Tensor b = Tensor::basis(2, Word{1}, Frame::fourier);
    CHECK(diff_norm(apply_fourier_insert(Side::left, b),
                    Tensor::basis(2, Word{0, 1}, Frame::fourier)) <= 1e-15);

    Tensor unit(2, 0, Frame::fourier);
    unit[0] = Complex(1.0, 0.0);
    CHECK(diff_norm(apply_fourier_insert(Side::right, unit),
                    Tensor::basis(2, Word{0}, Frame::fourier)) <= 1e-15);
}

TEST_CASE("Fourier deletion/insertion are adjoint on random tensors") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor s = random_tensor(3, 3, Frame::fourier, rng);
        const Tensor t = random_tensor(3, 2, Frame::fourier, rng);
        for (Side side : {Side::left, Side::right}) {
            const Complex lhs = inner_product(apply_fourier_delete(side, s), t);
            const Complex rhs = inner_product(s, apply_fourier_insert(side, t));
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("frame application is conjugation by the tensor-power transform") {
    CHECK(conjugation_residual(OperatorKind::adjacency, 3, 2) <= 1e-10);
    CHECK(conjugation_residual(OperatorKind::incidence, 4, 2) <= 1e-10);
    CHECK(conjugation_residual(OperatorKind::vertex_laplacian, 2, 3) <= 1e-10);
    CHECK(conjugation_residual(OperatorKind::delete_left, 3, 2) <= 1e-10);
    CHECK(conjugation_residual(OperatorKind::insert_right, 2, 4) <= 1e-10);
    CHECK(conjugation_residual(OperatorKind::adjacency, 3, 2, TransformKind::hadamard) <= 1e-10);
}

TEST_CASE("conjugation residual respects the dense limit") {
    CHECK_THROWS_AS(conjugation_residual(OperatorKind::adjacency, 10, 2,
                                         TransformKind::dft, 256),
                    ResourceError);
}
