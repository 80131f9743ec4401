#pragma once

#include <utility>
#include <vector>

#include "debruijn/word.hpp"

namespace debruijn {

// Coordinate frame of a tensor's coefficients.  Linear operators preserve the
// frame; only transform_tensor flips it.
enum class Frame { native, fourier };

const char* to_string(Frame f);

// Dense coefficient vector over the order-n tensor power of the q-letter
// coordinate space.  Coefficients are indexed by encode_word, so an order-0
// tensor is a single scalar.
class Tensor {
public:
    Tensor(int q, int order, Frame frame);

    // Basis word with unit coefficient.
    static Tensor basis(int q, const Word& w, Frame frame);

    // The order-n de Bruijn direction: every coefficient q^{-n/2} (native).
    static Tensor debruijn(int q, int order);

    int q() const noexcept { return q_; }
    int order() const noexcept { return order_; }
    Frame frame() const noexcept { return frame_; }
    Index size() const noexcept { return static_cast<Index>(coeffs_.size()); }

    Complex& operator[](Index i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const Complex& operator[](Index i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    std::vector<Complex>& coeffs() noexcept { return coeffs_; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    double norm() const;

    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& operator*=(Complex c);

private:
    int q_;
    int order_;
    Frame frame_;
    std::vector<Complex> coeffs_;
};

Tensor operator+(Tensor lhs, const Tensor& rhs);
Tensor operator-(Tensor lhs, const Tensor& rhs);
Tensor operator*(Complex c, Tensor t);

// Conjugate-linear in the FIRST argument, linear in the second.
Complex inner_product(const Tensor& s, const Tensor& t);

// Builds an order-n tensor from (word, coefficient) terms; repeated words
// accumulate.  Every word must have length n.
Tensor tensor_from_terms(int q, int order, Frame frame,
                         const std::vector<std::pair<Word, Complex>>& terms);

} // namespace debruijn
