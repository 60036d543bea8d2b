#ifndef AICODE_CODE_HPP
#define AICODE_CODE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aicode/boolfun.hpp"
#include "aicode/field.hpp"
#include "aicode/poly.hpp"

namespace aicode {

/// Monic generator polynomial together with its defining set, i.e. the sorted
/// exponents e for which alpha^e is a root. G always divides x^(2^n-1) + 1.
struct GenPoly {
    Poly coeffs;
    std::vector<int> root_exponents;

    int degree() const { return poly::degree(coeffs); }
};

inline GenPoly make_gen_poly(const Gf2n& f, Poly coeffs) {
    GenPoly g;
    g.coeffs = poly::monic(f, poly::trim(std::move(coeffs)));
    if (poly::is_zero(g.coeffs))
        throw std::invalid_argument("make_gen_poly: zero polynomial");
    const Poly xn1 = poly::x_order_minus_one(f);
    if (!poly::is_zero(poly::divmod(f, xn1, g.coeffs).rem))
        throw std::invalid_argument(
            "make_gen_poly: polynomial does not divide x^(2^n-1)+1");
    for (std::uint32_t e = 0; e < f.group_order(); ++e)
        if (poly::eval(f, g.coeffs, f.alpha_pow(e)) == 0)
            g.root_exponents.push_back(static_cast<int>(e));
    if (g.root_exponents.size() != static_cast<std::size_t>(g.degree()))
        throw std::invalid_argument(
            "make_gen_poly: generator must split with simple nonzero roots");
    return g;
}

/// Cyclic code of length 2^n - 1 over GF(2^n) given by a monic generator
/// polynomial dividing x^(2^n-1) + 1. Codewords are residues
/// c(x) = sum_{j=0}^{2^n-2} c_j x^j; on nonzero field points the coordinate
/// j = 0 evaluates like the exponent 2^n - 1, which is how weight-height
/// treats it.
class CyclicCode {
public:
    CyclicCode(FieldPtr field, GenPoly gen)
        : field_(std::move(field)), gen_(std::move(gen)) {}

    const FieldPtr& field() const { return field_; }
    const GenPoly& gen() const { return gen_; }
    int length() const { return static_cast<int>(field_->group_order()); }
    int dimension() const { return length() - gen_.degree(); }
    bool is_zero_code() const { return dimension() == 0; }
    bool is_full_space() const { return gen_.degree() == 0; }

    bool contains(const Poly& word) const {
        for (int e : gen_.root_exponents)
            if (poly::eval(*field_, word, field_->alpha_pow(e)) != 0) return false;
        return true;
    }

private:
    FieldPtr field_;
    GenPoly gen_;
};

/// Reduce a full univariate coefficient vector (2^n entries) to a length-
/// (2^n-1) codeword residue: x^(2^n-1) = x^0 on nonzero points, so the top
/// coefficient folds onto the constant one. Values on GF(2^n)* are preserved.
inline Poly fold_to_codeword(const std::vector<Fe>& uni) {
    if (uni.empty()) return {};
    Poly c(uni.begin(), uni.end() - 1);
    c[0] ^= uni.back();
    return poly::trim(std::move(c));
}

/// C(Z): the code whose defining set is a set of nonzero field elements.
inline CyclicCode code_from_pointset(const FieldPtr& field,
                                     const std::vector<Fe>& Z) {
    Poly g = poly::one();
    std::vector<Fe> zs(Z);
    std::sort(zs.begin(), zs.end());
    for (Fe r : zs) {
        if (r == 0)
            throw std::invalid_argument(
                "code_from_pointset: zero is not an evaluation point of a "
                "length-(2^n-1) code");
        g = poly::mul(*field, g, Poly{r, 1});
    }
    return CyclicCode(field, make_gen_poly(*field, std::move(g)));
}

/// G_F as the product of the linear factors (x - r) over nonzero r with
/// F(r) != 0.
inline GenPoly generator_by_root_product(const VectorialFunction& F) {
    const auto& f = *F.field();
    Poly g = poly::one();
    for (std::uint32_t e = 0; e < f.group_order(); ++e) {
        const Fe r = f.alpha_pow(e);
        if (F.eval(r) != 0) g = poly::mul(f, g, Poly{r, 1});
    }
    return make_gen_poly(f, std::move(g));
}

/// G_F as the product over nonzero a of gcd(F(x) - a, x^(2^n-1) + 1), using
/// the univariate form of F.
inline GenPoly generator_by_gcd_product(const VectorialFunction& F) {
    const auto& f = *F.field();
    const Poly xn1 = poly::x_order_minus_one(f);
    Poly acc = poly::one();
    Poly fx(F.uni());
    fx = poly::trim(std::move(fx));
    for (std::uint32_t e = 0; e < f.group_order(); ++e) {
        const Fe a = f.alpha_pow(e);
        Poly shifted(fx);
        if (shifted.empty()) shifted.push_back(a);
        else shifted[0] ^= a;
        acc = poly::mul(f, acc, poly::gcd(f, poly::trim(std::move(shifted)), xn1));
    }
    return make_gen_poly(f, std::move(acc));
}

/// Both computation paths, checked against each other.
inline GenPoly generator_for_function(const VectorialFunction& F) {
    GenPoly byroots = generator_by_root_product(F);
    if (F.has_univariate()) {
        const GenPoly bygcd = generator_by_gcd_product(F);
        if (byroots.coeffs != bygcd.coeffs)
            throw std::logic_error(
                "generator_for_function: root-product and gcd-product paths disagree");
    }
    return byroots;
}

inline CyclicCode code_for_function(const VectorialFunction& F) {
    return CyclicCode(F.field(), generator_for_function(F));
}

/// C(F^-1(b)): defining set is the preimage of b with the zero point dropped.
inline CyclicCode code_from_preimage(const VectorialFunction& F,
                                     std::uint32_t b) {
    std::vector<Fe> zs;
    for (Point x : F.preimage(b))
        if (x != 0) zs.push_back(x);
    return code_from_pointset(F.field(), zs);
}

/// Generator of the dual code: x^k p(1/x)/p(0) with p = (x^(2^n-1)+1)/g.
inline GenPoly dual_generator(const CyclicCode& C) {
    const auto& f = *C.field();
    const Poly p =
        poly::divmod(f, poly::x_order_minus_one(f), C.gen().coeffs).quot;
    Poly rec = poly::reciprocal(p);
    rec = poly::scale(f, rec, f.inv(p[0]));
    return make_gen_poly(f, std::move(rec));
}

namespace gfq_linalg {

/// Row-reduces in place; returns the rank.
inline std::size_t rank(const Gf2n& f, std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Fe piv_inv = f.inv(rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], piv_inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Fe m = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] ^= f.mul(m, rows[r][j]);
        }
        ++r;
    }
    return r;
}

/// A nonzero kernel vector of the matrix, or nullopt if the columns are
/// independent. Deterministic: the lowest free column is chosen.
inline std::optional<std::vector<Fe>> kernel_vector(
    const Gf2n& f, std::vector<std::vector<Fe>> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Fe piv_inv = f.inv(rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], piv_inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Fe m = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] ^= f.mul(m, rows[r][j]);
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<std::uint8_t> is_pivot(cols, 0);
    for (auto c : pivot_of_row) is_pivot[c] = 1;
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;
    std::vector<Fe> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivot_of_row.size(); ++p)
        v[pivot_of_row[p]] = rows[p][free_col];
    return v;
}

}  // namespace gfq_linalg

struct LcdResult {
    bool lcd = false;
    /// A defining-set exponent whose negation is missing, when not LCD.
    std::optional<int> witness_exponent;
    /// Result of the direct rank computation dim(C + Cperp) == length, when run.
    std::optional<bool> rank_confirms;
};

/// Generator matrix rows: the cyclic shifts x^i g(x), i = 0..k-1.
inline std::vector<std::vector<Fe>> generator_matrix(const CyclicCode& C) {
    const int N = C.length(), k = C.dimension();
    std::vector<std::vector<Fe>> rows;
    rows.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::vector<Fe> row(N, 0);
        const auto& g = C.gen().coeffs;
        for (std::size_t j = 0; j < g.size(); ++j) row[i + j] = g[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

/// LCD check: the generator is self-reciprocal iff the defining set is closed
/// under negation mod 2^n - 1. When with_rank_check is set the claim is also
/// confirmed by stacking the generator matrices of C and its dual and testing
/// that their spans fill the whole space.
inline LcdResult is_lcd(const CyclicCode& C, bool with_rank_check = false) {
    const auto& f = *C.field();
    const int N = C.length();
    LcdResult res;
    res.lcd = true;
    std::vector<std::uint8_t> in_set(N, 0);
    for (int e : C.gen().root_exponents) in_set[e] = 1;
    for (int e : C.gen().root_exponents) {
        const int neg = (N - e) % N;
        if (!in_set[neg]) {
            res.lcd = false;
            res.witness_exponent = e;
            break;
        }
    }
    // sanity: root-set symmetry must match the polynomial identity
    {
        Poly rec = poly::reciprocal(C.gen().coeffs);
        rec = poly::scale(f, rec, f.inv(C.gen().coeffs[0]));
        const bool self_rec = rec == C.gen().coeffs;
        if (self_rec != res.lcd)
            throw std::logic_error("is_lcd: root-set and polynomial tests disagree");
    }
    if (with_rank_check) {
        auto rows = generator_matrix(C);
        const CyclicCode dual(C.field(), dual_generator(C));
        for (auto& row : generator_matrix(dual)) rows.push_back(std::move(row));
        const std::size_t r = gfq_linalg::rank(f, rows);
        res.rank_confirms = (r == static_cast<std::size_t>(N)) == res.lcd;
    }
    return res;
}

struct HtBoundReport {
    int value = 0;  // the minimum distance exceeds this value
    int r = 0, step = 0, run = 0, rows = 0;  // pattern certificate: t = run, k = rows-1
    bool coprime_to_order = true;            // convention used for the step
};

/// Best t + k over patterns {r + i*step + j : 0 <= i <= k, 0 <= j <= t-1}
/// inside the defining set, with the step restricted to values coprime to
/// 2^n - 1 (default) or to n. The code's minimum distance is > value.
inline HtBoundReport ht_bound(const std::vector<int>& defining, int n,
                              bool coprime_to_order = true) {
    if (defining.empty())
        throw std::invalid_argument("ht_bound: empty defining set");
    const int N = (1 << n) - 1;
    std::vector<std::uint8_t> in_set(N, 0);
    for (int e : defining) in_set[((e % N) + N) % N] = 1;
    // circular run length starting at each exponent
    std::vector<int> run(N, 0);
    for (int s = 0; s < N; ++s) {
        int t = 0;
        while (t < N && in_set[(s + t) % N]) ++t;
        run[s] = t;
    }
    auto gcd_int = [](int a, int b) {
        while (b) {
            int t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    HtBoundReport best;
    best.coprime_to_order = coprime_to_order;
    for (int step = 1; step < N; ++step) {
        if (coprime_to_order ? gcd_int(step, N) != 1 : gcd_int(step, n) != 1)
            continue;
        for (int r : defining) {
            const int r0 = ((r % N) + N) % N;
            int t = run[r0];
            for (int k = 0; k < N && t >= 1; ++k) {
                t = std::min(t, run[(r0 + k * step) % N]);
                if (t < 1) break;
                if (t + k > best.value) {
                    best.value = t + k;
                    best.r = r0;
                    best.step = step;
                    best.run = t;
                    best.rows = k + 1;
                }
            }
        }
    }
    return best;
}

struct DistanceReport {
    std::string method;  // "enum" | "support-rank" | "bracket" | "zero-code"
    int lower = 0;       // lower == upper for the exact methods
    int upper = 0;
    std::map<int, unsigned long long> distribution;  // "enum" only

    bool exact() const { return method == "enum" || method == "support-rank"; }
    bool zero_code() const { return method == "zero-code"; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// message-space enumeration: exact distance and full weight distribution
inline DistanceReport enumerate_distance(const CyclicCode& C) {
    const auto& f = *C.field();
    const int N = C.length(), k = C.dimension();
    const std::uint32_t q = f.order();
    const auto& g = C.gen().coeffs;
    DistanceReport rep;
    rep.method = "enum";
    rep.distribution[0] = 1;
    std::vector<Fe> digits(k, 0);
    std::vector<Fe> cw(N, 0);
    int best = N + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    for (std::uint64_t step = 1; step < total; ++step) {
        int i = 0;
        while (digits[i] == q - 1) {
            const Fe change = digits[i];  // old ^ new with new = 0
            digits[i] = 0;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j]) cw[i + j] ^= f.mul(change, g[j]);
            ++i;
        }
        const Fe oldv = digits[i];
        digits[i] = oldv + 1;
        const Fe change = oldv ^ digits[i];
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[j]) cw[i + j] ^= f.mul(change, g[j]);
        int w = 0;
        for (int j = 0; j < N; ++j) w += cw[j] != 0;
        ++rep.distribution[w];
        best = std::min(best, w);
    }
    rep.lower = rep.upper = best;
    return rep;
}

// smallest support size carrying a dependency among the root-evaluation
// columns; exact but without a weight distribution
inline std::optional<int> support_rank_distance(const CyclicCode& C,
                                                std::uint64_t work_cap) {
    const auto& f = *C.field();
    const int N = C.length();
    const auto& roots = C.gen().root_exponents;
    std::uint64_t work = 0;
    for (int w = 1; w <= N; ++w) {
        std::vector<int> comb(w);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            work += static_cast<std::uint64_t>(roots.size()) * w;
            if (work > work_cap) return std::nullopt;
            std::vector<std::vector<Fe>> m(roots.size(), std::vector<Fe>(w));
            for (std::size_t r = 0; r < roots.size(); ++r)
                for (int c = 0; c < w; ++c)
                    m[r][c] = f.alpha_pow(static_cast<long long>(roots[r]) * comb[c]);
            if (gfq_linalg::rank(f, m) < static_cast<std::size_t>(w)) return w;
            int i = w - 1;
            while (i >= 0 && comb[i] == N - w + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;  // only reachable for the zero code
}

}  // namespace detail

/// Minimum distance and (when enumeration is affordable) the full weight
/// distribution. Methods, in order of preference under the budget:
/// message-space enumeration (exact, distribution), support-rank search
/// (exact), and a [bound, lightest-found] bracket.
inline DistanceReport min_distance(const CyclicCode& C,
                                   std::uint64_t budget = 1ull << 24,
                                   std::uint64_t seed = 1) {
    const auto& f = *C.field();
    const int N = C.length(), k = C.dimension();
    const std::uint32_t q = f.order();
    DistanceReport rep;
    if (C.is_zero_code()) {
        rep.method = "zero-code";
        return rep;
    }
    long double msgs = 1;
    for (int i = 0; i < k; ++i) msgs *= q;
    if (msgs <= static_cast<long double>(budget))
        return detail::enumerate_distance(C);
    if (auto d = detail::support_rank_distance(C, budget)) {
        rep.method = "support-rank";
        rep.lower = rep.upper = *d;
        return rep;
    }
    rep.method = "bracket";
    rep.lower = C.gen().root_exponents.empty()
                    ? 1
                    : ht_bound(C.gen().root_exponents, f.degree_n()).value + 1;
    int lightest = N;
    {
        int w = 0;
        for (Fe c : C.gen().coeffs) w += c != 0;
        lightest = std::min(lightest, w);
    }
    std::uint64_t s = seed;
    const auto& g = C.gen().coeffs;
    for (int trial = 0; trial < 2048; ++trial) {
        std::vector<Fe> cw(N, 0);
        for (int i = 0; i < k; ++i) {
            const Fe m = static_cast<Fe>(detail::splitmix64(s) % q);
            if (!m) continue;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j]) cw[i + j] ^= f.mul(m, g[j]);
        }
        int w = 0;
        for (int j = 0; j < N; ++j) w += cw[j] != 0;
        if (w > 0) lightest = std::min(lightest, w);
    }
    rep.upper = lightest;
    return rep;
}

struct WeightHeightResult {
    bool zero_code = false;
    int value = 0;
    Poly witness;  // a codeword achieving the value (residue coefficients)
};

/// Minimum over nonzero codewords of max{w_2(i) : c_i != 0}, where the residue
/// coordinate j = 0 counts as the exponent 2^n - 1 (of 2-weight n), matching
/// the evaluation x^(2^n-1) = x^0 = 1 on nonzero points. Computed by rank
/// tests on column-restricted root systems, so no enumeration is needed.
inline WeightHeightResult min_weight_height(const CyclicCode& C) {
    const auto& f = *C.field();
    const int N = C.length(), n = f.degree_n();
    WeightHeightResult res;
    if (C.is_zero_code()) {
        res.zero_code = true;
        return res;
    }
    const auto& roots = C.gen().root_exponents;
    for (int d = 1; d <= n; ++d) {
        std::vector<int> cols;  // residue coordinates whose exponent label has w2 <= d
        for (int j = 1; j < N; ++j)
            if (weight2(static_cast<std::uint32_t>(j)) <= d) cols.push_back(j);
        if (d == n) cols.insert(cols.begin(), 0);
        std::vector<std::vector<Fe>> m(roots.size(), std::vector<Fe>(cols.size()));
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                m[r][c] = f.alpha_pow(static_cast<long long>(roots[r]) * cols[c]);
        if (auto v = gfq_linalg::kernel_vector(f, std::move(m), cols.size())) {
            res.value = d;
            res.witness.assign(N, 0);
            for (std::size_t c = 0; c < cols.size(); ++c)
                res.witness[cols[c]] = (*v)[c];
            res.witness = poly::trim(std::move(res.witness));
            return res;
        }
    }
    throw std::logic_error("min_weight_height: no codeword found in a nonzero code");
}

}  // namespace aicode

#endif  // AICODE_CODE_HPP
