#include "debruijn/tensor.hpp"

#include <cmath>

namespace debruijn {

const char* to_string(Frame f) {
    return f == Frame::native ? "native" : "fourier";
}

namespace {

void require_compatible(const Tensor& a, const Tensor& b, const char* what) {
    if (a.q() != b.q() || a.order() != b.order() || a.frame() != b.frame())
        throw ShapeError(std::string(what) + ": order/q/frame mismatch");
}

} // namespace

Tensor::Tensor(int q, int order, Frame frame) : q_(q), order_(order), frame_(frame) {
    if (q < 2) throw DomainError("Tensor: q must be at least 2");
    if (order < 0) throw DomainError("Tensor: negative order");
    coeffs_.assign(static_cast<std::size_t>(ipow(static_cast<Index>(q), order)), Complex(0.0, 0.0));
}

Tensor Tensor::basis(int q, const Word& w, Frame frame) {
    Tensor t(q, static_cast<int>(w.size()), frame);
    t[encode_word(w, q)] = Complex(1.0, 0.0);
    return t;
}

Tensor Tensor::debruijn(int q, int order) {
    Tensor t(q, order, Frame::native);
    const double c = std::pow(static_cast<double>(q), -0.5 * order);
    for (auto& v : t.coeffs_) v = Complex(c, 0.0);
    return t;
}

double Tensor::norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    require_compatible(*this, rhs, "Tensor::operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    require_compatible(*this, rhs, "Tensor::operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Tensor& Tensor::operator*=(Complex c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Tensor operator+(Tensor lhs, const Tensor& rhs) { lhs += rhs; return lhs; }
Tensor operator-(Tensor lhs, const Tensor& rhs) { lhs -= rhs; return lhs; }
Tensor operator*(Complex c, Tensor t) { t *= c; return t; }

Complex inner_product(const Tensor& s, const Tensor& t) {
    require_compatible(s, t, "inner_product");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        acc += std::conj(s.coeffs()[i]) * t.coeffs()[i];
    return acc;
}

Tensor tensor_from_terms(int q, int order, Frame frame,
                         const std::vector<std::pair<Word, Complex>>& terms) {
    Tensor t(q, order, frame);
    for (const auto& [w, c] : terms) {
        if (static_cast<int>(w.size()) != order)
            throw ShapeError("tensor_from_terms: mixed word lengths");
        t[encode_word(w, q)] += c;
    }
    return t;
}

} // namespace debruijn
