#include "debruijn/kmer.hpp"

#include <cmath>

#include "debruijn/fourier.hpp"

namespace debruijn {

CircularString circular_string(int q, Word letters) {
    if (q < 2) throw DomainError("circular_string: q must be at least 2");
    if (letters.empty()) throw DomainError("circular_string: the string must be nonempty");
    for (Letter a : letters)
        if (a >= static_cast<Letter>(q))
            throw DomainError("circular_string: letter out of range for q");
    return CircularString{q, std::move(letters)};
}

Tensor CountTensor::to_tensor() const {
    Tensor t(q, k, Frame::native);
    for (Index i = 0; i < t.size(); ++i)
        t[i] = Complex(static_cast<double>(counts[static_cast<std::size_t>(i)]), 0.0);
    return t;
}

CountTensor count_kmers(const CircularString& s, int k) {
    if (k < 1) throw DomainError("count_kmers: k must be at least 1");
    const int q = s.q;
    const Index n = static_cast<Index>(s.letters.size());
    CountTensor ct;
    ct.q = q;
    ct.k = k;
    ct.n = n;
    ct.counts.assign(static_cast<std::size_t>(ipow(static_cast<Index>(q), k)), 0);
    for (Index start = 0; start < n; ++start) {
        Index idx = 0;
        for (int p = 0; p < k; ++p)
            idx = idx * static_cast<Index>(q) +
                  static_cast<Index>(s.letters[static_cast<std::size_t>((start + static_cast<Index>(p)) % n)]);
        ++ct.counts[static_cast<std::size_t>(idx)];
    }
    return ct;
}

double cycle_residual(const CountTensor& t) {
    if (t.k <= 1) return 0.0;
    const Index q = static_cast<Index>(t.q);
    const Index block = ipow(q, t.k - 1);
    std::vector<std::int64_t> diff(static_cast<std::size_t>(block), 0);
    bool equal = true;
    for (Index u = 0; u < block; ++u) {
        std::int64_t left = 0;  // marginal over the first letter
        std::int64_t right = 0; // marginal over the last letter
        for (Index a = 0; a < q; ++a) {
            left += t.counts[static_cast<std::size_t>(a * block + u)];
            right += t.counts[static_cast<std::size_t>(u * q + a)];
        }
        diff[static_cast<std::size_t>(u)] = left - right;
        if (left != right) equal = false;
    }
    if (equal) return 0.0;
    double sum = 0.0;
    for (std::int64_t d : diff) sum += static_cast<double>(d) * static_cast<double>(d);
    return std::sqrt(sum / static_cast<double>(t.q));
}

Decomposition decompose(const Tensor& t, int q, int k, TransformKind transform) {
    if (t.q() != q || t.order() != k)
        throw ShapeError("decompose: tensor shape does not match (q, k)");
    const Tensor hat = t.frame() == Frame::native
                           ? transform_tensor(t, TransformDirection::forward, transform)
                           : t;
    const std::vector<BasisElement> basis = cycle_basis(q, k);
    Decomposition d;
    d.entries.reserve(basis.size());
    Tensor remainder = hat;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Complex coeff(0.0, 0.0);
        for (const auto& [index, value] : basis[b].coeffs)
            coeff += std::conj(value) * hat[index];
        d.entries.push_back(Decomposition::Entry{b, coeff});
        for (const auto& [index, value] : basis[b].coeffs) remainder[index] -= coeff * value;
    }
    d.residual = remainder.norm();
    return d;
}

Tensor reconstruct(const std::vector<Decomposition::Entry>& entries, int q, int k) {
    const std::vector<BasisElement> basis = cycle_basis(q, k);
    Tensor out(q, k, Frame::fourier);
    for (const auto& entry : entries) {
        if (entry.basis_index >= basis.size())
            throw DomainError("reconstruct: unknown basis element index " +
                              std::to_string(entry.basis_index));
        for (const auto& [index, value] : basis[entry.basis_index].coeffs)
            out[index] += entry.coefficient * value;
    }
    return out;
}

} // namespace debruijn
