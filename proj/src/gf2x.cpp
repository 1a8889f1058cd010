#include "qc2/gf2x.hpp"

#include <stdexcept>

namespace qc2 {

Gf2x Gf2x::monomial(int k) {
    Gf2x r;
    r.set(k, true);
    return r;
}

int Gf2x::degree() const {
    if (w.empty()) return -1;
    int top = static_cast<int>(w.size()) - 1;
    std::uint64_t h = w[top];
    int bit = 63;
    while (!(h >> bit)) --bit;
    return top * 64 + bit;
}

bool Gf2x::get(int i) const {
    int wi = i / 64;
    if (wi >= static_cast<int>(w.size())) return false;
    return (w[wi] >> (i % 64)) & 1u;
}

void Gf2x::set(int i, bool v) {
    int wi = i / 64;
    if (wi >= static_cast<int>(w.size())) {
        if (!v) return;
        w.resize(wi + 1, 0);
    }
    std::uint64_t mask = std::uint64_t(1) << (i % 64);
    if (v)
        w[wi] |= mask;
    else
        w[wi] &= ~mask;
    if (!v) trim();
}

void Gf2x::trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

Gf2x gf2x_add(const Gf2x& a, const Gf2x& b) {
    Gf2x r;
    r.w.resize(std::max(a.w.size(), b.w.size()), 0);
    for (size_t i = 0; i < r.w.size(); ++i) {
        std::uint64_t x = i < a.w.size() ? a.w[i] : 0;
        std::uint64_t y = i < b.w.size() ? b.w[i] : 0;
        r.w[i] = x ^ y;
    }
    r.trim();
    return r;
}

Gf2x gf2x_shift(const Gf2x& a, int k) {
    if (a.is_zero() || k == 0) return a;
    Gf2x r;
    int words = k / 64, bits = k % 64;
    r.w.assign(a.w.size() + words + 1, 0);
    for (size_t i = 0; i < a.w.size(); ++i) {
        r.w[i + words] ^= a.w[i] << bits;
        if (bits) r.w[i + words + 1] ^= a.w[i] >> (64 - bits);
    }
    r.trim();
    return r;
}

Gf2x gf2x_mul(const Gf2x& a, const Gf2x& b) {
    Gf2x r;
    if (a.is_zero() || b.is_zero()) return r;
    r.w.assign(a.w.size() + b.w.size(), 0);
    for (size_t i = 0; i < a.w.size(); ++i) {
        std::uint64_t av = a.w[i];
        while (av) {
            int bit = __builtin_ctzll(av);
            av &= av - 1;
            int shift = static_cast<int>(i) * 64 + bit;
            int words = shift / 64, bits = shift % 64;
            for (size_t j = 0; j < b.w.size(); ++j) {
                r.w[j + words] ^= b.w[j] << bits;
                if (bits) r.w[j + words + 1] ^= b.w[j] >> (64 - bits);
            }
        }
    }
    r.trim();
    return r;
}

Gf2x gf2x_mod(const Gf2x& a, const Gf2x& b) {
    if (b.is_zero()) throw std::invalid_argument("gf2x_mod: zero modulus");
    Gf2x r = a;
    int db = b.degree();
    int dr = r.degree();
    while (dr >= db) {
        r = gf2x_add(r, gf2x_shift(b, dr - db));
        dr = r.degree();
    }
    return r;
}

Gf2x gf2x_gcd(Gf2x a, Gf2x b) {
    while (!b.is_zero()) {
        Gf2x r = gf2x_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

Gf2x gf2x_pow2k_x(int e, const Gf2x& f) {
    Gf2x r = Gf2x::monomial(1);
    r = gf2x_mod(r, f);
    for (int i = 0; i < e; ++i) r = gf2x_mod(gf2x_mul(r, r), f);
    return r;
}

bool gf2x_irreducible(const Gf2x& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(2^n) == x mod f, and x^(2^(n/q)) != x for every prime q | n.
    Gf2x x = Gf2x::monomial(1);
    if (!(gf2x_pow2k_x(n, f) == gf2x_mod(x, f))) return false;
    int m = n;
    for (int q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        Gf2x d = gf2x_add(gf2x_pow2k_x(n / q, f), x);
        Gf2x g = gf2x_gcd(f, gf2x_mod(d, f));
        if (g.degree() != 0) return false;
        while (m % q == 0) m /= q;
    }
    if (m > 1) {
        Gf2x d = gf2x_add(gf2x_pow2k_x(n / m, f), x);
        Gf2x g = gf2x_gcd(f, gf2x_mod(d, f));
        if (g.degree() != 0) return false;
    }
    return true;
}

Gf2x smallest_irreducible(int n) {
    if (n < 1) throw std::invalid_argument("smallest_irreducible: n < 1");
    if (n == 1) return Gf2x::monomial(1);  // x itself
    if (n > 63) throw std::invalid_argument("smallest_irreducible: degree too large");
    for (std::uint64_t low = 1; low < (std::uint64_t(1) << n); low += 2) {
        Gf2x f(low);
        f.set(n, true);
        if (gf2x_irreducible(f)) return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

}  // namespace qc2
