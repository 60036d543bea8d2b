#ifndef AICODE_BOOLFUN_HPP
#define AICODE_BOOLFUN_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aicode/field.hpp"

namespace aicode {

/// Points of F_2^n are encoded as integers: coordinate x_i is bit i-1, and the
/// field element with the same bit pattern is the image of the point under the
/// fixed bijection F_2^n <-> GF(2^n).
using Point = std::uint32_t;

inline int weight2(std::uint32_t j) { return std::popcount(j); }

/// In-place binary Moebius transform; applying it twice is the identity, so it
/// converts truth table -> ANF and back.
inline void mobius_transform(std::vector<std::uint8_t>& v) {
    const std::size_t sz = v.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw std::invalid_argument("mobius_transform: length not a power of two");
    for (std::size_t step = 1; step < sz; step <<= 1)
        for (std::size_t block = 0; block < sz; block += step << 1)
            for (std::size_t i = block; i < block + step; ++i)
                v[i + step] ^= v[i];
}

/// Unique interpolating polynomial of degree < 2^n through all 2^n field
/// points: coefficients d_0..d_{2^n-1} with d_0 = F(0),
/// d_j = sum_{x != 0} F(x) x^{-j} for 0 < j < 2^n-1, and
/// d_{2^n-1} = F(0) + sum_{x != 0} F(x).
inline std::vector<Fe> univariate_from_values(const Gf2n& f,
                                              const std::vector<Fe>& values) {
    const std::uint32_t q = f.order(), g = f.group_order();
    if (values.size() != q)
        throw std::invalid_argument("univariate_from_values: wrong length");
    std::vector<Fe> d(q, 0);
    d[0] = values[0];
    Fe sum = 0;
    for (std::uint32_t e = 0; e < g; ++e) sum ^= values[f.alpha_pow(e)];
    d[g] = values[0] ^ sum;
    for (std::uint32_t j = 1; j < g; ++j) {
        Fe acc = 0;
        for (std::uint32_t e = 0; e < g; ++e) {
            const Fe v = values[f.alpha_pow(e)];
            if (v) acc ^= f.mul(v, f.alpha_pow(-(long long)j * e));
        }
        d[j] = acc;
    }
    return d;
}

inline Fe eval_univariate(const Gf2n& f, const std::vector<Fe>& coeffs, Fe x) {
    Fe acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = Gf2n::add(f.mul(acc, x), coeffs[i]);
    return acc;
}

inline int univariate_degree2(const std::vector<Fe>& coeffs) {
    int d = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j]) d = std::max(d, weight2(static_cast<std::uint32_t>(j)));
    return d;
}

struct WalshSpectrum {
    std::vector<long long> values;  // indexed by u as field element

    bool parseval_ok(int n) const {
        long long acc = 0;
        for (long long w : values) acc += w * w;
        return acc == (1ll << (2 * n));
    }
};

/// A Boolean function f : F_2^n -> F_2 held simultaneously as truth table, ANF
/// coefficient vector and univariate polynomial over GF(2^n). Immutable.
class BooleanFunction {
public:
    static BooleanFunction from_tt(FieldPtr field, std::vector<std::uint8_t> tt) {
        check_len(*field, tt.size(), "from_tt");
        std::vector<std::uint8_t> anf(tt);
        mobius_transform(anf);
        return BooleanFunction(std::move(field), std::move(tt), std::move(anf));
    }

    static BooleanFunction from_anf(FieldPtr field, std::vector<std::uint8_t> anf) {
        check_len(*field, anf.size(), "from_anf");
        std::vector<std::uint8_t> tt(anf);
        mobius_transform(tt);
        return BooleanFunction(std::move(field), std::move(tt), std::move(anf));
    }

    static BooleanFunction from_uni(FieldPtr field, const std::vector<Fe>& uni) {
        check_len(*field, uni.size(), "from_uni");
        std::vector<std::uint8_t> tt(uni.size());
        for (Point x = 0; x < uni.size(); ++x) {
            const Fe v = eval_univariate(*field, uni, x);
            if (v > 1)
                throw std::invalid_argument(
                    "BooleanFunction::from_uni: polynomial is not 0/1-valued");
            tt[x] = static_cast<std::uint8_t>(v);
        }
        std::vector<std::uint8_t> anf(tt);
        mobius_transform(anf);
        return BooleanFunction(std::move(field), std::move(tt), std::move(anf));
    }

    int n() const { return field_->degree_n(); }
    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint8_t>& tt() const { return tt_; }
    const std::vector<std::uint8_t>& anf() const { return anf_; }
    const std::vector<Fe>& uni() const { return uni_; }
    std::uint8_t eval(Point x) const { return tt_[x]; }

    /// Algebraic degree; the zero function has degree 0 by convention.
    int degree() const {
        int d = 0;
        for (std::uint32_t u = 0; u < anf_.size(); ++u)
            if (anf_[u]) d = std::max(d, weight2(u));
        return d;
    }

    bool is_zero() const {
        for (auto b : tt_)
            if (b) return false;
        return true;
    }

    std::vector<Point> support() const {
        std::vector<Point> s;
        for (Point x = 0; x < tt_.size(); ++x)
            if (tt_[x]) s.push_back(x);
        return s;
    }

    /// Walsh-Hadamard transform W_f(u) = sum_x (-1)^(f(x) + Tr(ux)), computed
    /// by a fast butterfly over the dot-product pairing followed by the linear
    /// reindexing that turns dot products into trace products.
    WalshSpectrum walsh() const {
        const std::size_t sz = tt_.size();
        std::vector<long long> w(sz);
        for (std::size_t x = 0; x < sz; ++x) w[x] = tt_[x] ? -1 : 1;
        for (std::size_t step = 1; step < sz; step <<= 1)
            for (std::size_t block = 0; block < sz; block += step << 1)
                for (std::size_t i = block; i < block + step; ++i) {
                    const long long a = w[i], b = w[i + step];
                    w[i] = a + b;
                    w[i + step] = a - b;
                }
        WalshSpectrum spec;
        spec.values.resize(sz);
        const int nn = n();
        for (Point u = 0; u < sz; ++u) {
            std::uint32_t v = 0;
            for (int i = 0; i < nn; ++i)
                v |= static_cast<std::uint32_t>(field_->abs_trace(
                         field_->mul(u, 1u << i)))
                     << i;
            spec.values[u] = w[v];
        }
        return spec;
    }

    bool operator==(const BooleanFunction& o) const { return tt_ == o.tt_; }

private:
    BooleanFunction(FieldPtr field, std::vector<std::uint8_t> tt,
                    std::vector<std::uint8_t> anf)
        : field_(std::move(field)), tt_(std::move(tt)), anf_(std::move(anf)) {
        std::vector<Fe> vals(tt_.begin(), tt_.end());
        uni_ = univariate_from_values(*field_, vals);
    }

    static void check_len(const Gf2n& f, std::size_t len, const char* who) {
        if (len != f.order())
            throw std::invalid_argument(std::string("BooleanFunction::") + who +
                                        ": length does not match field order");
    }

    FieldPtr field_;
    std::vector<std::uint8_t> tt_;
    std::vector<std::uint8_t> anf_;
    std::vector<Fe> uni_;
};

/// An (n,m)-function given by its output table; when m divides n the outputs
/// are also embedded into the subfield GF(2^m) of GF(2^n) and the univariate
/// interpolating polynomial is kept.
class VectorialFunction {
public:
    static VectorialFunction from_table(FieldPtr field, int m,
                                        std::vector<std::uint32_t> table) {
        if (m < 1 || m > 31)
            throw std::invalid_argument("VectorialFunction: bad output size");
        if (table.size() != field->order())
            throw std::invalid_argument("VectorialFunction: wrong table length");
        for (auto v : table)
            if (v >> m)
                throw std::invalid_argument("VectorialFunction: output exceeds m bits");
        return VectorialFunction(std::move(field), m, std::move(table));
    }

    static VectorialFunction from_boolean(const BooleanFunction& f) {
        std::vector<std::uint32_t> table(f.tt().begin(), f.tt().end());
        return VectorialFunction(f.field(), 1, std::move(table));
    }

    /// Builds from a univariate polynomial whose values all lie in the
    /// embedded subfield GF(2^m).
    static VectorialFunction from_uni(FieldPtr field, int m,
                                      const std::vector<Fe>& uni) {
        if (m < 1 || field->degree_n() % m != 0)
            throw std::invalid_argument(
                "VectorialFunction::from_uni: m does not divide n");
        const auto embed = field->subfield_embedding(m);
        std::vector<std::uint32_t> table(field->order());
        for (Point x = 0; x < table.size(); ++x) {
            const Fe v = eval_univariate(*field, uni, x);
            std::uint32_t b = 0;
            bool found = false;
            for (std::uint32_t c = 0; c < embed.size(); ++c)
                if (embed[c] == v) {
                    b = c;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument(
                    "VectorialFunction::from_uni: value outside subfield image");
            table[x] = b;
        }
        return VectorialFunction(std::move(field), m, std::move(table));
    }

    int n() const { return field_->degree_n(); }
    int m() const { return m_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    std::uint32_t eval(Point x) const { return table_[x]; }

    bool has_univariate() const { return !uni_.empty(); }
    const std::vector<Fe>& uni() const {
        if (uni_.empty())
            throw std::logic_error("VectorialFunction: no univariate form (m does not divide n)");
        return uni_;
    }
    const std::vector<Fe>& embedding() const {
        if (embed_.empty())
            throw std::logic_error("VectorialFunction: no subfield embedding");
        return embed_;
    }
    /// F(x) as an element of GF(2^n) through the subfield embedding.
    Fe eval_embedded(Point x) const { return embedding()[table_[x]]; }

    /// Coordinate function: bit i (0-based) of the output.
    BooleanFunction coordinate(int i) const {
        std::vector<std::uint8_t> tt(table_.size());
        for (Point x = 0; x < table_.size(); ++x)
            tt[x] = static_cast<std::uint8_t>((table_[x] >> i) & 1);
        return BooleanFunction::from_tt(field_, std::move(tt));
    }

    /// Component function Tr^m_1(v F(x)) for nonzero v in GF(2^m).
    BooleanFunction component(Fe v) const {
        const auto fm = Gf2n::make(m_);
        std::vector<std::uint8_t> tt(table_.size());
        for (Point x = 0; x < table_.size(); ++x)
            tt[x] = static_cast<std::uint8_t>(fm->abs_trace(fm->mul(v, table_[x])));
        return BooleanFunction::from_tt(field_, std::move(tt));
    }

    std::vector<Point> preimage(std::uint32_t b) const {
        std::vector<Point> s;
        for (Point x = 0; x < table_.size(); ++x)
            if (table_[x] == b) s.push_back(x);
        return s;
    }

    /// Points where F(x) != 0.
    std::vector<Point> nonzero_support() const {
        std::vector<Point> s;
        for (Point x = 0; x < table_.size(); ++x)
            if (table_[x]) s.push_back(x);
        return s;
    }

    bool is_constant() const {
        for (auto v : table_)
            if (v != table_[0]) return false;
        return true;
    }

    /// Max algebraic degree over the coordinate functions.
    int degree() const {
        int d = 0;
        for (int i = 0; i < m_; ++i) d = std::max(d, coordinate(i).degree());
        return d;
    }

    BooleanFunction to_boolean() const {
        if (m_ != 1)
            throw std::logic_error("VectorialFunction::to_boolean: m != 1");
        std::vector<std::uint8_t> tt(table_.begin(), table_.end());
        return BooleanFunction::from_tt(field_, std::move(tt));
    }

    bool operator==(const VectorialFunction& o) const {
        return m_ == o.m_ && table_ == o.table_;
    }

private:
    VectorialFunction(FieldPtr field, int m, std::vector<std::uint32_t> table)
        : field_(std::move(field)), m_(m), table_(std::move(table)) {
        if (field_->degree_n() % m_ == 0) {
            embed_ = field_->subfield_embedding(m_);
            std::vector<Fe> vals(table_.size());
            for (Point x = 0; x < table_.size(); ++x) vals[x] = embed_[table_[x]];
            uni_ = univariate_from_values(*field_, vals);
        }
    }

    FieldPtr field_;
    int m_;
    std::vector<std::uint32_t> table_;
    std::vector<Fe> uni_;
    std::vector<Fe> embed_;
};

}  // namespace aicode

#endif  // AICODE_BOOLFUN_HPP
