#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>

#include <Eigen/Dense>

#include "debruijn/errors.hpp"
#include "debruijn/operators.hpp"
#include "debruijn/tensor.hpp"

using namespace debruijn;

namespace {

constexpr double kRoot2Inv = 0.70710678118654752;

Tensor basis2(const std::string& glyphs) {
    const Alphabet ab = Alphabet::standard(2);
    return Tensor::basis(2, ab.parse(glyphs), Frame::native);
}

double diff_norm(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d -= b;
    return d.norm();
}

Tensor random_tensor(int q, int n, std::mt19937_64& rng) {
    Tensor t(q, n, Frame::native);
    for (Index i = 0; i < t.size(); ++i) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        t[i] = Complex(re, im);
    }
    return t;
}

} // namespace

TEST_CASE("operator kind names round-trip") {
    CHECK(parse_operator_kind("delete-left") == OperatorKind::delete_left);
    CHECK(parse_operator_kind("incidence-adjoint") == OperatorKind::incidence_adjoint);
    CHECK(parse_operator_kind("edge-laplacian") == OperatorKind::edge_laplacian);
    CHECK(std::string(to_string(OperatorKind::vertex_laplacian)) == "vertex-laplacian");
    CHECK_THROWS_AS(parse_operator_kind("banana"), DomainError);
    CHECK(parse_normalization("paper") == MatrixNormalization::paper);
    CHECK(parse_normalization("combinatorial") == MatrixNormalization::combinatorial);
    CHECK_THROWS_AS(parse_normalization("x"), DomainError);
}

TEST_CASE("order offsets and minimum domain orders") {
    CHECK(order_offset(OperatorKind::delete_left) == -1);
    CHECK(order_offset(OperatorKind::delete_right) == -1);
    CHECK(order_offset(OperatorKind::incidence) == -1);
    CHECK(order_offset(OperatorKind::insert_left) == 1);
    CHECK(order_offset(OperatorKind::insert_right) == 1);
    CHECK(order_offset(OperatorKind::incidence_adjoint) == 1);
    CHECK(order_offset(OperatorKind::adjacency) == 0);
    CHECK(order_offset(OperatorKind::vertex_laplacian) == 0);
    CHECK(order_offset(OperatorKind::edge_laplacian) == 0);

    CHECK(min_domain_order(OperatorKind::insert_left) == 0);
    CHECK(min_domain_order(OperatorKind::insert_right) == 0);
    CHECK(min_domain_order(OperatorKind::incidence_adjoint) == 0);
    CHECK(min_domain_order(OperatorKind::delete_left) == 1);
    CHECK(min_domain_order(OperatorKind::adjacency) == 1);
    CHECK(min_domain_order(OperatorKind::edge_laplacian) == 1);
}

TEST_CASE("deletions drop one letter with weight 1/sqrt(q)") {
    const Tensor left = apply_delete(Side::left, basis2("aab"));
    CHECK(diff_norm(left, Complex(kRoot2Inv, 0) * basis2("ab")) <= 1e-15);

    const Tensor right = apply_delete(Side::right, basis2("aab"));
    CHECK(diff_norm(right, Complex(kRoot2Inv, 0) * basis2("aa")) <= 1e-15);
}

TEST_CASE("insertions sum over the new letter with weight 1/sqrt(q)") {
    const Tensor ins = apply_insert(Side::left, basis2("ab"));
    const Tensor expected =
        Complex(kRoot2Inv, 0) * (basis2("aab") + basis2("bab"));
    CHECK(diff_norm(ins, expected) <= 1e-15);

    // Left-insert then left-delete is the identity.
    CHECK(diff_norm(apply_delete(Side::left, ins), basis2("ab")) <= 1e-15);

    // Right insertion applied to the order-0 unit produces the flat vector.
    Tensor unit(2, 0, Frame::native);
    unit[0] = Complex(1.0, 0.0);
    CHECK(diff_norm(apply_insert(Side::right, unit), Tensor::debruijn(2, 1)) <= 1e-15);
}

TEST_CASE("deletion and insertion are adjoint on a fixture") {
    const Complex lhs = inner_product(apply_delete(Side::left, basis2("baab")), basis2("aab"));
    const Complex rhs = inner_product(basis2("baab"), apply_insert(Side::left, basis2("aab")));
    CHECK(std::abs(lhs - Complex(kRoot2Inv, 0)) <= 1e-15);
    CHECK(std::abs(lhs - rhs) <= 1e-15);
}

TEST_CASE("adjacency maps a word to its half-weighted graph neighbours") {
    const Tensor got = apply_adjacency(basis2("aab"));
    const Tensor expected = Complex(0.5, 0) * (basis2("aba") + basis2("abb") +
                                               basis2("aaa") + basis2("baa"));
    CHECK(diff_norm(got, expected) <= 1e-15);

    // Order 1: both graph directions contribute the full letter sum.
    const Tensor a1 = apply_adjacency(basis2("a"));
    CHECK(diff_norm(a1, basis2("a") + basis2("b")) <= 1e-15);

    // The flat vector is an eigenvector with eigenvalue 2.
    for (int n = 1; n <= 4; ++n) {
        const Tensor u = Tensor::debruijn(2, n);
        CHECK(diff_norm(apply_adjacency(u), Complex(2.0, 0) * u) <= 1e-14);
    }
}

TEST_CASE("incidence fixtures") {
    const Tensor d = apply_incidence(basis2("baab"));
    const Tensor expected = Complex(kRoot2Inv, 0) * (basis2("aab") - basis2("baa"));
    CHECK(diff_norm(d, expected) <= 1e-15);

    // Self-loop edges (constant words) are boundaryless.
    CHECK(apply_incidence(basis2("aaa")).norm() <= 1e-15);
    for (int n = 1; n <= 4; ++n)
        CHECK(apply_incidence(Tensor::debruijn(2, n)).norm() <= 1e-14);
}

TEST_CASE("incidence adjoint fixtures") {
    const Tensor dstar = apply_incidence_adjoint(basis2("ab"));
    const Tensor expected =
        Complex(kRoot2Inv, 0) *
        (basis2("aab") + basis2("bab") - basis2("aba") - basis2("abb"));
    CHECK(diff_norm(dstar, expected) <= 1e-15);
    for (int n = 1; n <= 4; ++n)
        CHECK(apply_incidence_adjoint(Tensor::debruijn(2, n)).norm() <= 1e-14);
}

TEST_CASE("incidence and its adjoint pair correctly on random tensors") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor s = random_tensor(3, 3, rng);
        const Tensor t = random_tensor(3, 2, rng);
        const Complex lhs = inner_product(apply_incidence(s), t);
        const Complex rhs = inner_product(s, apply_incidence_adjoint(t));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("vertex Laplacian fixtures and the two-form identity") {
    CHECK(apply_vertex_laplacian(Tensor::debruijn(2, 1)).norm() <= 1e-14);
    const Tensor la = apply_vertex_laplacian(basis2("a"));
    CHECK(diff_norm(la, basis2("a") - basis2("b")) <= 1e-15);

    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const Tensor x = random_tensor(2, 3, rng);
        const Tensor via_incidence = apply_incidence(apply_incidence_adjoint(x));
        Tensor via_adjacency = Complex(2.0, 0) * x;
        via_adjacency -= apply_adjacency(x);
        CHECK(diff_norm(apply_vertex_laplacian(x), via_incidence) <= 1e-12);
        CHECK(diff_norm(via_incidence, via_adjacency) <= 1e-12);
    }
}

TEST_CASE("edge Laplacian annihilates known cycle directions") {
    for (int n = 1; n <= 4; ++n)
        CHECK(apply_edge_laplacian(Tensor::debruijn(2, n)).norm() <= 1e-14);

    // (aa - ab - ba + bb)/2 is the alternating-sign edge cycle for q = 2.
    Tensor alt = basis2("aa") - basis2("ab") - basis2("ba") + basis2("bb");
    alt *= Complex(0.5, 0.0);
    CHECK(apply_edge_laplacian(alt).norm() <= 1e-14);
}

TEST_CASE("operators reject tensors below their minimum order") {
    Tensor unit(2, 0, Frame::native);
    unit[0] = Complex(1.0, 0.0);
    CHECK_THROWS_AS(apply_delete(Side::left, unit), DomainError);
    CHECK_THROWS_AS(apply_delete(Side::right, unit), DomainError);
    CHECK_THROWS_AS(apply_adjacency(unit), DomainError);
    CHECK_THROWS_AS(apply_incidence(unit), DomainError);
    CHECK_THROWS_AS(apply_vertex_laplacian(unit), DomainError);
    CHECK_THROWS_AS(apply_edge_laplacian(unit), DomainError);
    CHECK_NOTHROW(apply_insert(Side::left, unit));
    CHECK_NOTHROW(apply_incidence_adjoint(unit));
}

TEST_CASE("combinatorial incidence matrix of the 2-letter order-2 graph") {
    const DenseMatrix m = materialize(OperatorKind::incidence, 2, 2,
                                      MatrixNormalization::combinatorial);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 4);
    // Columns aa, ab, ba, bb; rows a, b.  Self-loops are zero columns.
    const double expected[2][4] = {{0, -1, 1, 0}, {0, 1, -1, 0}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) {
            CHECK(m.entries(r, c).real() == expected[r][c]);
            CHECK(m.entries(r, c).imag() == 0.0);
        }
}

TEST_CASE("paper incidence is the combinatorial matrix scaled by 1/sqrt(q)") {
    for (int n = 2; n <= 4; ++n) {
        const DenseMatrix paper =
            materialize(OperatorKind::incidence, n, 2, MatrixNormalization::paper);
        const DenseMatrix comb =
            materialize(OperatorKind::incidence, n, 2, MatrixNormalization::combinatorial);
        const double err =
            (paper.entries - comb.entries / std::sqrt(2.0)).cwiseAbs().maxCoeff();
        CHECK(err <= 1e-14);
    }
}

TEST_CASE("paper adjacency at order 1 is the all-ones matrix") {
    const DenseMatrix m =
        materialize(OperatorKind::adjacency, 1, 2, MatrixNormalization::paper);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(m.entries(r, c) - Complex(1, 0)) <= 1e-15);
}

TEST_CASE("combinatorial adjacency counts self-loops twice on the diagonal") {
    const DenseMatrix m =
        materialize(OperatorKind::adjacency, 1, 2, MatrixNormalization::combinatorial);
    // Vertices a, b; edges aa, ab, ba, bb.  Each self-loop adds 2 on the
    // diagonal and ab/ba contribute symmetric ones.
    CHECK(m.entries(0, 0).real() == 2.0);
    CHECK(m.entries(1, 1).real() == 2.0);
    CHECK(m.entries(0, 1).real() == 2.0); // ab and ba both join a and b
    CHECK(m.entries(1, 0).real() == 2.0);
}

TEST_CASE("materialized Laplacians are symmetric positive semidefinite") {
    for (OperatorKind kind : {OperatorKind::vertex_laplacian, OperatorKind::edge_laplacian}) {
        const DenseMatrix m = materialize(kind, 2, 2, MatrixNormalization::paper);
        const double asym = (m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff();
        CHECK(asym <= 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
    }
}

TEST_CASE("order-1 vertex Laplacian spectrum is {0, 2}") {
    const DenseMatrix m =
        materialize(OperatorKind::vertex_laplacian, 1, 2, MatrixNormalization::paper);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries);
    REQUIRE(solver.eigenvalues().size() == 2);
    CHECK(solver.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(solver.eigenvalues()(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("order-2 edge Laplacian has rank q^(k-1) - 1 = 1") {
    const DenseMatrix m =
        materialize(OperatorKind::edge_laplacian, 2, 2, MatrixNormalization::paper);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-9) ++rank;
    CHECK(rank == 1);
}

TEST_CASE("materialize rejects unsupported requests") {
    CHECK_THROWS_AS(materialize(OperatorKind::delete_left, 2, 2,
                                MatrixNormalization::combinatorial),
                    DomainError);
    CHECK_THROWS_AS(materialize(OperatorKind::insert_right, 2, 2,
                                MatrixNormalization::combinatorial),
                    DomainError);
    CHECK_THROWS_AS(materialize(OperatorKind::adjacency, 12, 2,
                                MatrixNormalization::paper, 1024),
                    ResourceError);
    CHECK_THROWS_AS(materialize(OperatorKind::adjacency, 0, 2, MatrixNormalization::paper),
                    DomainError);
}

TEST_CASE("de Bruijn edge enumeration") {
    const auto edges = debruijn_edges(2, 2);
    REQUIRE(edges.size() == 4);
    const Alphabet ab = Alphabet::standard(2);
    std::map<std::string, std::pair<std::string, std::string>> got;
    for (const auto& e : edges)
        got[ab.format(e.edge)] = {ab.format(e.source), ab.format(e.target)};
    CHECK(got.at("aa") == std::pair<std::string, std::string>("a", "a"));
    CHECK(got.at("ab") == std::pair<std::string, std::string>("a", "b"));
    CHECK(got.at("ba") == std::pair<std::string, std::string>("b", "a"));
    CHECK(got.at("bb") == std::pair<std::string, std::string>("b", "b"));
}

TEST_CASE("every vertex of the order-3 ternary graph has degree q both ways") {
    const auto edges = debruijn_edges(3, 3);
    REQUIRE(edges.size() == 27);
    std::map<Index, int> out_degree, in_degree;
    for (const auto& e : edges) {
        out_degree[encode_word(e.source, 3)]++;
        in_degree[encode_word(e.target, 3)]++;
        REQUIRE(e.edge.size() == 3);
        // Edge word = source word + last letter = first letter + target word.
        CHECK(Word(e.edge.begin(), e.edge.end() - 1) == e.source);
        CHECK(Word(e.edge.begin() + 1, e.edge.end()) == e.target);
    }
    REQUIRE(out_degree.size() == 9);
    REQUIRE(in_degree.size() == 9);
    for (const auto& [v, d] : out_degree) CHECK(d == 3);
    for (const auto& [v, d] : in_degree) CHECK(d == 3);
}

TEST_CASE("edge enumeration guards its inputs") {
    CHECK_THROWS_AS(debruijn_edges(1, 2), DomainError);
    CHECK_THROWS_AS(debruijn_edges(40, 2), ResourceError);
}
