#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace ffq::gf {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct GaussianElem;

// A validated prime p. Complex arithmetic (conjugation, norms, inverses of
// non-real elements) exists only when x^2+1 is irreducible over F_p, i.e.
// p = 4l+3. make_field(2) is allowed but only the modal module can use it.
struct FieldCtx {
    u64 p = 0;
    bool complexifiable = false;

    GaussianElem elem(i64 re, i64 im = 0) const;
    GaussianElem zero() const;
    GaussianElem one() const;
    GaussianElem i() const;

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;
};

FieldCtx make_field(u64 p);

// Element re + im*i of F_{p^2} with canonical residues in 0..p-1. Carries its
// modulus so elements of distinct fields never mix silently.
struct GaussianElem {
    u64 re = 0;
    u64 im = 0;
    u64 p = 0;

    friend bool operator==(const GaussianElem&, const GaussianElem&) = default;
};

GaussianElem operator+(const GaussianElem& x, const GaussianElem& y);
GaussianElem operator-(const GaussianElem& x, const GaussianElem& y);
GaussianElem operator*(const GaussianElem& x, const GaussianElem& y);
GaussianElem operator-(const GaussianElem& x);

// Frobenius conjugation a+bi -> a-bi (equals x^p). Complexifiable fields only.
GaussianElem conj(const GaussianElem& x);

// conj(x)*x = (a^2 + b^2) mod p, returned as the real residue.
u64 norm_sq(const GaussianElem& x);

// Multiplicative inverse. Real elements invert in any field via a^(p-2);
// non-real elements use conj(x) * norm_sq(x)^(p-2), cross-checked against
// x^(q-2) with q = p^2.
GaussianElem inv(const GaussianElem& x);

GaussianElem pow(GaussianElem x, u128 e);

bool is_zero(const GaussianElem& x);
bool is_one(const GaussianElem& x);
GaussianElem zero_like(const GaussianElem& x);
GaussianElem one_like(const GaussianElem& x);

// Signed representative of each component: r for r <= (p-1)/2, else r - p.
std::pair<i64, i64> center_lift(const GaussianElem& x);

// "a+bi" / "a-bi"; centered=true renders signed representatives.
std::string to_string(const GaussianElem& x, bool centered = false);

// Scalar for the modal theory over F_2.
struct Bit {
    std::uint8_t v = 0;
    friend bool operator==(const Bit&, const Bit&) = default;
};

inline Bit operator+(Bit a, Bit b) { return Bit{static_cast<std::uint8_t>(a.v ^ b.v)}; }
inline Bit operator-(Bit a, Bit b) { return a + b; }
inline Bit operator*(Bit a, Bit b) { return Bit{static_cast<std::uint8_t>(a.v & b.v)}; }
inline Bit operator-(Bit a) { return a; }
inline Bit conj(Bit a) { return a; }
inline bool is_zero(Bit a) { return a.v == 0; }
inline bool is_one(Bit a) { return a.v == 1; }
inline Bit zero_like(Bit) { return Bit{0}; }
inline Bit one_like(Bit) { return Bit{1}; }
Bit inv(Bit a);

} // namespace ffq::gf
