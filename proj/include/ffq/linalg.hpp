#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "ffq/gfield.hpp"

// Dense exact vectors and matrices over an arbitrary scalar: GaussianElem for
// F_{p^2}, Bit for the modal theory, plain signed integers for integer-level
// traces. Everything is a value; operations return fresh objects.
namespace ffq::la {

template <class S>
struct Vec {
    std::vector<S> a;

    Vec() = default;
    explicit Vec(std::vector<S> amps) : a(std::move(amps)) {}
    Vec(std::size_t dim, const S& fill) : a(dim, fill) {}

    std::size_t dim() const { return a.size(); }
    S& operator[](std::size_t i) { return a[i]; }
    const S& operator[](std::size_t i) const { return a[i]; }

    friend bool operator==(const Vec&, const Vec&) = default;
};

template <class S>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<S> e; // row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const S& fill) : rows(r), cols(c), e(r * c, fill) {}
    Mat(std::size_t r, std::size_t c, std::vector<S> entries)
        : rows(r), cols(c), e(std::move(entries)) {
        if (e.size() != r * c) throw std::invalid_argument("Mat: entry count mismatch");
    }

    S& operator()(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

namespace detail {

template <class S>
S sconj(const S& x) {
    if constexpr (std::is_integral_v<S>) {
        return x;
    } else {
        return conj(x); // ADL
    }
}

template <class S>
bool szero(const S& x) {
    if constexpr (std::is_integral_v<S>) {
        return x == 0;
    } else {
        return is_zero(x);
    }
}

template <class S>
bool sone(const S& x) {
    if constexpr (std::is_integral_v<S>) {
        return x == 1;
    } else {
        return is_one(x);
    }
}

template <class S>
S szero_like(const S& x) {
    if constexpr (std::is_integral_v<S>) {
        (void)x;
        return S{0};
    } else {
        return zero_like(x);
    }
}

template <class S>
S sinv(const S& x) {
    if constexpr (std::is_integral_v<S>) {
        static_assert(!std::is_integral_v<S>, "inverse needs a field scalar");
    } else {
        return inv(x);
    }
}

} // namespace detail

template <class S>
bool is_zero_vec(const Vec<S>& v) {
    for (const auto& x : v.a)
        if (!detail::szero(x)) return false;
    return true;
}

// Indices with non-zero amplitude, ascending. This is the outcome set of a
// standard-basis measurement.
template <class S>
std::vector<std::size_t> support(const Vec<S>& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!detail::szero(v.a[i])) out.push_back(i);
    return out;
}

// <phi|psi> = sum conj(phi_i) * psi_i. Conjugate linear in the first
// argument; over F_2 conjugation is the identity and the sum is bilinear.
template <class S>
S herm_dot(const Vec<S>& phi, const Vec<S>& psi) {
    if (phi.dim() != psi.dim() || phi.dim() == 0)
        throw std::invalid_argument("herm_dot: dimension mismatch");
    S acc = detail::sconj(phi.a[0]) * psi.a[0];
    for (std::size_t i = 1; i < phi.dim(); ++i)
        acc = acc + detail::sconj(phi.a[i]) * psi.a[i];
    return acc;
}

template <class S>
Vec<S> scalar_mul(const S& c, const Vec<S>& v) {
    Vec<S> out = v;
    for (auto& x : out.a) x = c * x;
    return out;
}

template <class S>
Vec<S> tensor(const Vec<S>& x, const Vec<S>& y) {
    // Left factor is the most significant index.
    Vec<S> out;
    out.a.reserve(x.dim() * y.dim());
    for (const auto& xi : x.a)
        for (const auto& yj : y.a) out.a.push_back(xi * yj);
    return out;
}

template <class S>
Mat<S> tensor(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> out;
    out.rows = x.rows * y.rows;
    out.cols = x.cols * y.cols;
    out.e.reserve(out.rows * out.cols);
    for (std::size_t xr = 0; xr < x.rows; ++xr)
        for (std::size_t yr = 0; yr < y.rows; ++yr)
            for (std::size_t xc = 0; xc < x.cols; ++xc)
                for (std::size_t yc = 0; yc < y.cols; ++yc)
                    out.e.push_back(x(xr, xc) * y(yr, yc));
    return out;
}

template <class S>
Vec<S> apply(const Mat<S>& m, const Vec<S>& v) {
    if (m.cols != v.dim() || m.cols == 0)
        throw std::invalid_argument("apply: shape mismatch");
    Vec<S> out;
    out.a.reserve(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        S acc = m(r, 0) * v.a[0];
        for (std::size_t c = 1; c < m.cols; ++c) acc = acc + m(r, c) * v.a[c];
        out.a.push_back(acc);
    }
    return out;
}

template <class S>
Mat<S> matmul(const Mat<S>& x, const Mat<S>& y) {
    if (x.cols != y.rows || x.cols == 0)
        throw std::invalid_argument("matmul: shape mismatch");
    Mat<S> out;
    out.rows = x.rows;
    out.cols = y.cols;
    out.e.reserve(out.rows * out.cols);
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t c = 0; c < y.cols; ++c) {
            S acc = x(r, 0) * y(0, c);
            for (std::size_t k = 1; k < x.cols; ++k) acc = acc + x(r, k) * y(k, c);
            out.e.push_back(acc);
        }
    return out;
}

template <class S>
Mat<S> conj_transpose(const Mat<S>& m) {
    Mat<S> out;
    out.rows = m.cols;
    out.cols = m.rows;
    out.e.reserve(m.e.size());
    for (std::size_t r = 0; r < m.cols; ++r)
        for (std::size_t c = 0; c < m.rows; ++c)
            out.e.push_back(detail::sconj(m(c, r)));
    return out;
}

// M+M == I, with M+ the conjugate transpose.
template <class S>
bool is_unitary(const Mat<S>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("is_unitary: non-square");
    Mat<S> prod = matmul(conj_transpose(m), m);
    for (std::size_t r = 0; r < prod.rows; ++r)
        for (std::size_t c = 0; c < prod.cols; ++c) {
            const bool want_one = (r == c);
            if (want_one ? !detail::sone(prod(r, c)) : !detail::szero(prod(r, c)))
                return false;
        }
    return true;
}

// Non-zero determinant, decided by exact Gaussian elimination over the field.
template <class S>
bool is_invertible(const Mat<S>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("is_invertible: non-square");
    Mat<S> w = m;
    const std::size_t n = w.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::szero(w(pivot, col))) ++pivot;
        if (pivot == n) return false;
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) std::swap(w(pivot, c), w(col, c));
        const S piv_inv = detail::sinv(w(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (detail::szero(w(r, col))) continue;
            const S factor = w(r, col) * piv_inv;
            for (std::size_t c = col; c < n; ++c)
                w(r, c) = w(r, c) - factor * w(col, c);
        }
    }
    return true;
}

// In-place single-qubit gate at `qubit` (0 = most significant) of an
// nq-qubit state. Bit-exact with the dense tensor(I,...,g,...,I) route.
template <class S>
void apply_1q(Vec<S>& v, unsigned nq, unsigned qubit, const Mat<S>& g) {
    if (g.rows != 2 || g.cols != 2)
        throw std::invalid_argument("apply_1q: gate must be 2x2");
    if (v.dim() != (std::size_t{1} << nq) || qubit >= nq)
        throw std::invalid_argument("apply_1q: shape mismatch");
    const std::size_t mask = std::size_t{1} << (nq - 1 - qubit);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i & mask) continue;
        const S x0 = v.a[i];
        const S x1 = v.a[i | mask];
        v.a[i] = g(0, 0) * x0 + g(0, 1) * x1;
        v.a[i | mask] = g(1, 0) * x0 + g(1, 1) * x1;
    }
}

template <class S>
void apply_cnot(Vec<S>& v, unsigned nq, unsigned control, unsigned target) {
    if (v.dim() != (std::size_t{1} << nq) || control >= nq || target >= nq ||
        control == target)
        throw std::invalid_argument("apply_cnot: shape mismatch");
    const std::size_t cmask = std::size_t{1} << (nq - 1 - control);
    const std::size_t tmask = std::size_t{1} << (nq - 1 - target);
    for (std::size_t i = 0; i < v.dim(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(v.a[i], v.a[i | tmask]);
}

// Deutsch black box |y>|x> -> |y + f(x)>|x> with y the most significant
// qubit: swaps the two y-branches of every satisfying x.
template <class S>
void apply_oracle_perm(Vec<S>& v, unsigned n, const std::vector<std::uint8_t>& table) {
    const std::size_t half = std::size_t{1} << n;
    if (v.dim() != 2 * half || table.size() != half)
        throw std::invalid_argument("apply_oracle_perm: shape mismatch");
    for (std::size_t x = 0; x < half; ++x)
        if (table[x]) std::swap(v.a[x], v.a[half + x]);
}

} // namespace ffq::la
