#include "ffq/gfield.hpp"

#include <stdexcept>

#include "ffq/numtheory.hpp"

namespace ffq::gf {

namespace nt = ffq::numtheory;

FieldCtx make_field(u64 p) {
    if (!nt::is_prime(p))
        throw std::invalid_argument("make_field: p must be prime");
    return FieldCtx{p, p % 4 == 3};
}

static u64 reduce(i64 v, u64 p) {
    const i64 sp = static_cast<i64>(p);
    return static_cast<u64>((v % sp + sp) % sp);
}

GaussianElem FieldCtx::elem(i64 re, i64 im) const {
    if (p == 0) throw std::logic_error("FieldCtx: uninitialized context");
    return GaussianElem{reduce(re, p), reduce(im, p), p};
}

GaussianElem FieldCtx::zero() const { return elem(0, 0); }
GaussianElem FieldCtx::one() const { return elem(1, 0); }
GaussianElem FieldCtx::i() const { return elem(0, 1); }

static u64 ctx_of(const GaussianElem& x, const GaussianElem& y) {
    if (x.p == 0 || y.p == 0)
        throw std::logic_error("GaussianElem: uninitialized element");
    if (x.p != y.p)
        throw std::invalid_argument("GaussianElem: mixed field contexts");
    return x.p;
}

GaussianElem operator+(const GaussianElem& x, const GaussianElem& y) {
    const u64 p = ctx_of(x, y);
    return GaussianElem{(x.re + y.re) % p, (x.im + y.im) % p, p};
}

GaussianElem operator-(const GaussianElem& x, const GaussianElem& y) {
    const u64 p = ctx_of(x, y);
    return GaussianElem{(x.re + p - y.re) % p, (x.im + p - y.im) % p, p};
}

GaussianElem operator*(const GaussianElem& x, const GaussianElem& y) {
    const u64 p = ctx_of(x, y);
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i with i^2 = -1
    const u64 ac = nt::mulmod(x.re, y.re, p);
    const u64 bd = nt::mulmod(x.im, y.im, p);
    const u64 ad = nt::mulmod(x.re, y.im, p);
    const u64 bc = nt::mulmod(x.im, y.re, p);
    return GaussianElem{(ac + p - bd) % p, (ad + bc) % p, p};
}

GaussianElem operator-(const GaussianElem& x) {
    if (x.p == 0) throw std::logic_error("GaussianElem: uninitialized element");
    return GaussianElem{x.re == 0 ? 0 : x.p - x.re, x.im == 0 ? 0 : x.p - x.im, x.p};
}

static void require_complexifiable(const GaussianElem& x, const char* who) {
    if (x.p == 0) throw std::logic_error("GaussianElem: uninitialized element");
    if (x.p % 4 != 3)
        throw std::invalid_argument(std::string(who) +
                                    ": field is not complexifiable (p != 4l+3)");
}

GaussianElem conj(const GaussianElem& x) {
    require_complexifiable(x, "conj");
    return GaussianElem{x.re, x.im == 0 ? 0 : x.p - x.im, x.p};
}

u64 norm_sq(const GaussianElem& x) {
    require_complexifiable(x, "norm_sq");
    return (nt::mulmod(x.re, x.re, x.p) + nt::mulmod(x.im, x.im, x.p)) % x.p;
}

GaussianElem pow(GaussianElem x, u128 e) {
    if (x.p == 0) throw std::logic_error("GaussianElem: uninitialized element");
    GaussianElem r{1 % x.p, 0, x.p};
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

GaussianElem inv(const GaussianElem& x) {
    if (x.p == 0) throw std::logic_error("GaussianElem: uninitialized element");
    if (is_zero(x)) throw std::domain_error("inv: division by zero");
    const u64 p = x.p;
    if (x.im == 0)
        return GaussianElem{nt::powmod(x.re, p - 2, p), 0, p};
    require_complexifiable(x, "inv");
    const u64 n_inv = nt::powmod(norm_sq(x), p - 2, p);
    GaussianElem r = conj(x) * GaussianElem{n_inv, 0, p};
    // Frobenius route: x^(q-2) with q = p^2 must give the same element.
    if (r != pow(x, u128{p} * p - 2))
        throw std::logic_error("inv: Frobenius cross-check failed");
    return r;
}

bool is_zero(const GaussianElem& x) { return x.re == 0 && x.im == 0; }
bool is_one(const GaussianElem& x) { return x.re == 1 && x.im == 0; }
GaussianElem zero_like(const GaussianElem& x) { return GaussianElem{0, 0, x.p}; }
GaussianElem one_like(const GaussianElem& x) { return GaussianElem{1 % x.p, 0, x.p}; }

std::pair<i64, i64> center_lift(const GaussianElem& x) {
    if (x.p == 0) throw std::logic_error("GaussianElem: uninitialized element");
    const u64 half = (x.p - 1) / 2;
    auto lift = [&](u64 r) {
        return r <= half ? static_cast<i64>(r)
                         : static_cast<i64>(r) - static_cast<i64>(x.p);
    };
    return {lift(x.re), lift(x.im)};
}

std::string to_string(const GaussianElem& x, bool centered) {
    i64 a, b;
    if (centered) {
        auto [la, lb] = center_lift(x);
        a = la;
        b = lb;
    } else {
        a = static_cast<i64>(x.re);
        b = static_cast<i64>(x.im);
    }
    if (b == 0) return std::to_string(a);
    const i64 mag = b < 0 ? -b : b;
    std::string imag = (mag == 1 ? "i" : std::to_string(mag) + "i");
    if (a == 0) return (b < 0 ? "-" : "") + imag;
    return std::to_string(a) + (b < 0 ? "-" : "+") + imag;
}

Bit inv(Bit a) {
    if (a.v == 0) throw std::domain_error("inv: division by zero");
    return Bit{1};
}

} // namespace ffq::gf
