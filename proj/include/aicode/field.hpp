#ifndef AICODE_FIELD_HPP
#define AICODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace aicode {

/// Field element in polynomial-basis representation: bit i is the coefficient
/// of x^i, so elements of GF(2^n) are integers below 2^n.
using Fe = std::uint32_t;

namespace gf2poly {

// Polynomials over GF(2) packed into integers, bit i = coefficient of x^i.

inline int degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a))
        a ^= m << (da - dm);
    return a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

/// Trial division by every polynomial of degree <= deg(p)/2. Composite trial
/// divisors are preceded by their own factors, so this is a sound test.
inline bool is_irreducible(std::uint64_t p) {
    const int d = degree(p);
    if (d < 1) return false;
    for (std::uint64_t q = 2; degree(q) <= d / 2; ++q)
        if (mod(p, q) == 0) return false;
    return true;
}

}  // namespace gf2poly

/// GF(2^n) for 1 <= n <= 16 with a fixed reduction polynomial and a fixed
/// primitive element alpha. Construction builds log/antilog tables for the
/// whole field, so all arithmetic afterwards is table lookups. Instances are
/// immutable and safe to share across threads.
class Gf2n {
public:
    static constexpr int kMaxDegree = 16;

    /// Reduction polynomial per degree: the minimal-weight irreducible with
    /// the smallest integer value, except n = 1 where x + 1 is used so that
    /// the modulus has a nonzero constant term.
    static constexpr std::uint32_t kReductionPoly[kMaxDegree + 1] = {
        0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,    0x83, 0x11b,
        0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

    static std::shared_ptr<const Gf2n> make(int n) {
        if (n < 1 || n > kMaxDegree)
            throw std::invalid_argument("Gf2n: unsupported extension degree " +
                                        std::to_string(n));
        return std::shared_ptr<const Gf2n>(new Gf2n(n));
    }

    int degree_n() const { return n_; }
    std::uint32_t order() const { return order_; }           // 2^n
    std::uint32_t group_order() const { return order_ - 1; } // 2^n - 1
    std::uint32_t reduction_poly() const { return poly_; }
    Fe alpha() const { return alpha_; }

    static Fe add(Fe a, Fe b) { return a ^ b; }

    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Fe inv(Fe a) const {
        if (a == 0) throw std::domain_error("Gf2n::inv: division by zero");
        return exp_[group_order() - log_[a]];
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    Fe sqr(Fe a) const { return mul(a, a); }

    /// a^e with e reduced mod 2^n - 1 (a != 0); 0^e = 0 for e > 0, 0^0 = 1.
    Fe pow(Fe a, long long e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        const long long g = group_order();
        long long r = e % g;
        if (r < 0) r += g;
        return exp_[static_cast<std::uint32_t>(log_[a] * r % g)];
    }

    /// alpha^e, exponent taken mod 2^n - 1 (negative exponents allowed).
    Fe alpha_pow(long long e) const {
        const long long g = group_order();
        long long r = e % g;
        if (r < 0) r += g;
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Discrete log base alpha of a nonzero element.
    std::uint32_t log_alpha(Fe a) const {
        if (a == 0) throw std::domain_error("Gf2n::log_alpha: log of zero");
        return log_[a];
    }

    std::uint32_t element_order(Fe a) const {
        if (a == 0) throw std::domain_error("Gf2n::element_order: zero");
        // ord(alpha^k) = (2^n-1)/gcd(k, 2^n-1)
        std::uint32_t g = group_order(), k = log_[a];
        if (k == 0) return 1;
        std::uint32_t x = g, y = k;
        while (y) {
            std::uint32_t t = x % y;
            x = y;
            y = t;
        }
        return g / x;
    }

    /// Tr^n_m(a) = a + a^(2^m) + a^(2^2m) + ... ; m must divide n. The result
    /// lies in the subfield GF(2^m) embedded in GF(2^n).
    Fe trace_to(int m, Fe a) const {
        if (m < 1 || n_ % m != 0)
            throw std::invalid_argument("Gf2n::trace_to: " + std::to_string(m) +
                                        " does not divide " + std::to_string(n_));
        Fe acc = 0, t = a;
        for (int i = 0; i < n_ / m; ++i) {
            acc ^= t;
            for (int j = 0; j < m; ++j) t = sqr(t);
        }
        return acc;
    }

    /// Absolute trace Tr^n_1 as a bit.
    int abs_trace(Fe a) const { return abs_tr_[a]; }

    /// Image of every m-bit value under the fixed embedding of GF(2^m) into
    /// this field (m | n). The embedding sends the generator of GF(2^m) --
    /// built with the same reduction table -- to the smallest root of that
    /// reduction polynomial here, which makes the m = n case the identity.
    std::vector<Fe> subfield_embedding(int m) const {
        if (m < 1 || n_ % m != 0)
            throw std::invalid_argument("Gf2n::subfield_embedding: " +
                                        std::to_string(m) + " does not divide " +
                                        std::to_string(n_));
        const std::uint32_t pm = kReductionPoly[m];
        Fe root = 0;
        for (Fe c = 0; c < order_; ++c) {
            Fe acc = 0, x = 1;
            for (int i = 0; i <= m; ++i) {
                if ((pm >> i) & 1) acc ^= x;
                x = mul(x, c);
            }
            if (acc == 0) {
                root = c;
                break;
            }
        }
        std::vector<Fe> table(std::size_t{1} << m, 0);
        for (std::uint32_t b = 0; b < table.size(); ++b) {
            Fe acc = 0, x = 1;
            for (int i = 0; i < m; ++i) {
                if ((b >> i) & 1) acc ^= x;
                x = mul(x, root);
            }
            table[b] = acc;
        }
        return table;
    }

    /// Product computed by shift-and-reduce, independent of the log tables.
    Fe mul_noluts(Fe a, Fe b) const {
        std::uint32_t acc = 0, x = a;
        while (b) {
            if (b & 1) acc ^= x;
            x <<= 1;
            if (x >> n_) x ^= poly_;
            b >>= 1;
        }
        return acc;
    }

private:
    explicit Gf2n(int n)
        : n_(n),
          order_(1u << n),
          poly_(kReductionPoly[n]),
          alpha_(0),
          exp_(2 * ((1u << n) - 1)),
          log_(1u << n, 0),
          abs_tr_(1u << n, 0) {
        // smallest element of full multiplicative order
        const std::uint32_t g = order_ - 1;
        for (Fe a = 1; a < order_; ++a) {
            Fe x = a;
            std::uint32_t k = 1;
            while (x != 1 && k <= g) {
                x = mul_noluts(x, a);
                ++k;
            }
            if (x == 1 && k == g) {
                alpha_ = a;
                break;
            }
        }
        if (alpha_ == 0) throw std::logic_error("Gf2n: no primitive element");
        Fe x = 1;
        for (std::uint32_t e = 0; e < g; ++e) {
            exp_[e] = x;
            exp_[e + g] = x;
            log_[x] = e;
            x = mul_noluts(x, alpha_);
        }
        for (Fe a = 0; a < order_; ++a) {
            Fe t = 0, y = a;
            for (int i = 0; i < n_; ++i) {
                t ^= y;
                y = mul_noluts(y, y);
            }
            abs_tr_[a] = static_cast<std::uint8_t>(t & 1);
        }
    }

    int n_;
    std::uint32_t order_;
    std::uint32_t poly_;
    Fe alpha_;
    std::vector<Fe> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint8_t> abs_tr_;
};

using FieldPtr = std::shared_ptr<const Gf2n>;

}  // namespace aicode

#endif  // AICODE_FIELD_HPP
