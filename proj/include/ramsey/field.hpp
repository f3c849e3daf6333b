#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

namespace fdetail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors c[0] + c[1] x + ..., trimmed.
using Poly = std::vector<std::uint32_t>;

inline int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    ptrim(r);
    return r;
}

// a mod m, m monic
inline Poly pmod(Poly a, const Poly& m, std::uint32_t p) {
    ptrim(a);
    int dm = pdeg(m);
    while (pdeg(a) >= dm) {
        std::uint32_t c = a.back();
        int shift = pdeg(a) - dm;
        for (int i = 0; i <= dm; ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * m[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        ptrim(a);
    }
    return a;
}

inline Poly pgcd(Poly a, Poly b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic before reducing
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint32_t inv = 1;
            for (std::uint32_t x = 1; x < p; ++x)
                if (static_cast<std::uint64_t>(x) * lead % p == 1) { inv = x; break; }
            for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
        }
        Poly r = pmod(a, b, p);
        a.swap(b);
        b.swap(r);
    }
    return a;
}

// g^e mod m
inline Poly ppowmod(Poly g, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r = {1};
    g = pmod(std::move(g), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, g, p), m, p);
        g = pmod(pmul(g, g, p), m, p);
        e >>= 1;
    }
    return r;
}

// Rabin irreducibility test: f monic of degree m over F_p is irreducible iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    int m = pdeg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    // h_k = x^(p^k) mod f, built by iterated p-th powers
    std::vector<Poly> h(m + 1);
    h[0] = {0, 1};
    for (int k = 1; k <= m; ++k) h[k] = ppowmod(h[k - 1], p, f, p);
    Poly xm = h[m];
    // x^(p^m) - x == 0 ?
    Poly diff = xm;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (int r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        bool rprime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) { rprime = false; break; }
        if (!rprime) continue;
        Poly g = h[m / r];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        ptrim(g);
        Poly gc = pgcd(f, g, p);
        if (pdeg(gc) != 0) return false;
    }
    return true;
}

// Fixed table for GF(2^m), m <= 16: lowest-weight, lexicographically-first
// irreducible polynomial of degree m, as a bitmask (bit i = coefficient of x^i).
inline constexpr std::uint32_t kF2ReductionTable[17] = {
    0,       0x3,     0x7,    0xB,    0x13,   0x25,    0x43,   0x83,  0x11B,
    0x203,   0x409,   0x805,  0x1009, 0x201B, 0x4021,  0x8003, 0x1002B,
};

}  // namespace fdetail

// Finite field GF(p^m). Elements are encoded as integers in [0, q) by
// base-p digit packing of the coefficient vector (least significant digit
// is the constant term). For m > 1, arithmetic is modulo a fixed reduction
// polynomial: the table entry above for p = 2, m <= 16, otherwise the
// lowest-weight lexicographically-first irreducible polynomial of degree m.
class FiniteField {
public:
    static constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 20;
    static constexpr std::uint32_t kTableCap = 512;  // mul/add lookup tables

    FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
        if (!fdetail::is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
        if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > kOrderCap) throw std::invalid_argument("field order exceeds cap 2^20");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (m_ > 1) {
            poly_ = find_reduction_poly(p_, m_);
            if (!fdetail::is_irreducible(poly_, p_))
                throw std::logic_error("reduction polynomial is not irreducible");
        }
        if (q_ <= kTableCap) build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    // Coefficients c_0..c_m of the reduction polynomial; empty for m == 1.
    const std::vector<std::uint32_t>& reduction_poly() const { return poly_; }

    bool operator==(const FiniteField& o) const { return p_ == o.p_ && m_ == o.m_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_slow(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        check(a);
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        std::uint32_t r = 0, pw = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = (a / pw) % p_;
            r += (d == 0 ? 0 : p_ - d) * pw;
            pw *= p_;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        check(a);
        check(b);
        if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
        return mul_slow(a, b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        check(a);
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, q_ - 2);
    }

    std::vector<std::uint32_t> decode(std::uint32_t a) const {
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    std::uint32_t encode(std::span<const std::uint32_t> digits) const {
        std::uint32_t a = 0, pw = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            a += (i < digits.size() ? digits[i] % p_ : 0) * pw;
            pw *= p_;
        }
        return a;
    }

    // Monic irreducible of degree m over F_p, enumerated by weight (number of
    // nonzero coefficients) ascending, then by packed value ascending.
    static std::vector<std::uint32_t> find_reduction_poly(std::uint32_t p, std::uint32_t m) {
        if (p == 2 && m <= 16) {
            std::uint32_t mask = fdetail::kF2ReductionTable[m];
            std::vector<std::uint32_t> c(m + 1, 0);
            for (std::uint32_t i = 0; i <= m; ++i) c[i] = (mask >> i) & 1;
            return c;
        }
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;  // choices for c_0..c_{m-1}
        for (std::uint32_t w = 2; w <= m + 1; ++w) {
            for (std::uint64_t v = 0; v < count; ++v) {
                std::vector<std::uint32_t> c(m + 1, 0);
                std::uint64_t x = v;
                std::uint32_t weight = 1;  // leading coefficient
                for (std::uint32_t i = 0; i < m; ++i) {
                    c[i] = static_cast<std::uint32_t>(x % p);
                    if (c[i]) ++weight;
                    x /= p;
                }
                c[m] = 1;
                if (weight != w) continue;
                if (fdetail::is_irreducible(c, p)) return c;
            }
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

private:
    void check(std::uint32_t a) const {
        if (a >= q_) throw std::invalid_argument("element out of range");
    }

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) {
            std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, pw = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t s = (a % p_) + (b % p_);
            if (s >= p_) s -= p_;
            r += s * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
        std::vector<std::uint32_t> da = decode(a), db = decode(b);
        std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
        // reduce by the monic reduction polynomial: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        for (int i = 2 * static_cast<int>(m_) - 2; i >= static_cast<int>(m_); --i) {
            std::uint32_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * poly_[j] % p_;
                prod[i - m_ + j] = static_cast<std::uint32_t>((prod[i - m_ + j] + p_ - sub) % p_);
            }
        }
        prod.resize(m_);
        return encode(prod);
    }

    void build_tables() {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_slow(a, b);
                mul_tab_[a * q_ + b] = mul_slow(a, b);
            }
    }

    std::uint32_t p_, m_, q_ = 0;
    std::vector<std::uint32_t> poly_;
    std::vector<std::uint32_t> add_tab_, mul_tab_;
};

// Vector of field elements of fixed length (t+1 coordinates in the geometry,
// s-1 in the characteristic-2 counting argument).
struct FieldVector {
    const FiniteField* field = nullptr;
    std::vector<std::uint32_t> coords;
};

inline std::uint32_t inner_product(const FiniteField& f, std::span<const std::uint32_t> u,
                                   std::span<const std::uint32_t> v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner product length mismatch");
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
    return acc;
}

inline std::uint32_t inner_product(const FieldVector& u, const FieldVector& v) {
    if (u.field == nullptr || v.field == nullptr || !(*u.field == *v.field))
        throw std::invalid_argument("inner product field mismatch");
    return inner_product(*u.field, u.coords, v.coords);
}

}  // namespace ramsey
