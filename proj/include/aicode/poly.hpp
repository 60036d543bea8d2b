#ifndef AICODE_POLY_HPP
#define AICODE_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "aicode/field.hpp"

namespace aicode {

/// Polynomials over GF(2^n) as coefficient vectors, index i = coefficient of
/// x^i. The zero polynomial is the empty vector; nonzero polynomials keep a
/// nonzero leading coefficient.
using Poly = std::vector<Fe>;

namespace poly {

inline Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly one() { return Poly{1}; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    return trim(std::move(r));
}

inline Poly mul(const Gf2n& f, const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] ^= f.mul(a[i], b[j]);
    }
    return r;
}

inline Poly scale(const Gf2n& f, const Poly& a, Fe c) {
    if (c == 0) return {};
    Poly r(a);
    for (Fe& x : r) x = f.mul(x, c);
    return r;
}

struct DivMod {
    Poly quot;
    Poly rem;
};

inline DivMod divmod(const Gf2n& f, Poly a, const Poly& b) {
    if (is_zero(b)) throw std::domain_error("poly::divmod: division by zero");
    const int db = degree(b);
    const Fe lead_inv = f.inv(b.back());
    if (degree(a) < db) return {Poly{}, trim(std::move(a))};
    Poly q(a.size() - b.size() + 1, 0);
    for (int i = degree(a); i >= db; --i) {
        if (a[i] == 0) continue;
        const Fe c = f.mul(a[i], lead_inv);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] ^= f.mul(c, b[j]);
    }
    return {trim(std::move(q)), trim(std::move(a))};
}

inline Poly mod(const Gf2n& f, Poly a, const Poly& b) {
    return divmod(f, std::move(a), b).rem;
}

inline Poly monic(const Gf2n& f, Poly p) {
    if (is_zero(p) || p.back() == 1) return p;
    return scale(f, p, f.inv(p.back()));
}

inline Poly gcd(const Gf2n& f, Poly a, Poly b) {
    while (!is_zero(b)) {
        Poly r = mod(f, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, std::move(a));
}

inline Fe eval(const Gf2n& f, const Poly& p, Fe x) {
    Fe acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = Gf2n::add(f.mul(acc, x), p[i]);
    return acc;
}

/// x^(2^n - 1) + 1, the product of (x - r) over all nonzero r.
inline Poly x_order_minus_one(const Gf2n& f) {
    Poly p(f.group_order() + 1, 0);
    p[0] = 1;
    p[f.group_order()] = 1;
    return p;
}

/// Reciprocal x^deg(p) * p(1/x); no normalization.
inline Poly reciprocal(const Poly& p) {
    Poly r(p.rbegin(), p.rend());
    return trim(std::move(r));
}

}  // namespace poly

}  // namespace aicode

#endif  // AICODE_POLY_HPP
