#ifndef AICODE_ANNIHILATOR_HPP
#define AICODE_ANNIHILATOR_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aicode/boolfun.hpp"
#include "aicode/field.hpp"

namespace aicode {

/// Monomial exponents u with 2-weight <= d, ascending. Index u stands for the
/// monomial prod_{i : u_i = 1} x_i.
inline std::vector<std::uint32_t> monomials_up_to(int n, int d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < (1u << n); ++u)
        if (weight2(u) <= d) out.push_back(u);
    return out;
}

namespace detail {

// Kernel basis of the evaluation matrix (rows: points of S, columns: the given
// monomials) over GF(2). Returns one packed coefficient vector per kernel
// dimension, bit j = coefficient of monomials[j]; columns are eliminated in
// ascending order so the result is deterministic.
inline std::vector<std::vector<std::uint64_t>> eval_matrix_kernel(
    const std::vector<Point>& points, const std::vector<std::uint32_t>& monomials) {
    const std::size_t cols = monomials.size();
    const std::size_t blocks = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(points.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        rows[r].assign(blocks, 0);
        for (std::size_t j = 0; j < cols; ++j)
            if ((points[r] & monomials[j]) == monomials[j])
                rows[r][j >> 6] |= 1ull << (j & 63);
    }
    // reduced row echelon form, pivot = lowest column
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && !((rows[sel][c >> 6] >> (c & 63)) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r][c >> 6] >> (c & 63)) & 1))
                for (std::size_t blk = 0; blk < blocks; ++blk)
                    rows[r][blk] ^= rows[rank][blk];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::uint8_t> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<std::uint64_t>> kernel;
    for (std::size_t cf = 0; cf < cols; ++cf) {
        if (is_pivot[cf]) continue;
        std::vector<std::uint64_t> v(blocks, 0);
        v[cf >> 6] |= 1ull << (cf & 63);
        for (std::size_t p = 0; p < pivot_col.size(); ++p)
            if ((rows[p][cf >> 6] >> (cf & 63)) & 1)
                v[pivot_col[p] >> 6] |= 1ull << (pivot_col[p] & 63);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

/// ANF vectors (length 2^n) of a basis of {g : deg g <= d, g|_S = 0}.
inline std::vector<std::vector<std::uint8_t>> annihilator_anf_basis(
    int n, const std::vector<Point>& S, int d) {
    const auto monos = monomials_up_to(n, d);
    const auto kernel = detail::eval_matrix_kernel(S, monos);
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        std::vector<std::uint8_t> anf(std::size_t{1} << n, 0);
        for (std::size_t j = 0; j < monos.size(); ++j)
            if ((v[j >> 6] >> (j & 63)) & 1) anf[monos[j]] = 1;
        out.push_back(std::move(anf));
    }
    return out;
}

/// Dimension of the degree-<= d annihilator space of S, without materializing
/// a basis.
inline std::size_t annihilator_space_dim(int n, const std::vector<Point>& S,
                                         int d) {
    const auto monos = monomials_up_to(n, d);
    return detail::eval_matrix_kernel(S, monos).size();
}

/// Basis of the annihilators of a point set with ANF support restricted to
/// monomials of 2-weight <= degree_bound.
struct AnnihilatorBasis {
    int degree_bound = 0;
    int dimension = 0;
    std::vector<BooleanFunction> basis;
    /// Set by product_annihilators when no degree bound can help: F vanishes
    /// nowhere, so only g = 0 would qualify.
    bool note_no_annihilator = false;
};

inline AnnihilatorBasis annihilator_basis(const FieldPtr& field,
                                          const std::vector<Point>& S, int d) {
    const int n = field->degree_n();
    if (d < 0 || d > n)
        throw std::invalid_argument("annihilator_basis: degree bound out of range");
    AnnihilatorBasis out;
    out.degree_bound = d;
    for (auto& anf : annihilator_anf_basis(n, S, d))
        out.basis.push_back(BooleanFunction::from_anf(field, std::move(anf)));
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

/// Lowest algebraic degree of a nonzero annihilator of S; throws when
/// S = F_2^n since only the zero function vanishes everywhere.
inline int lda_of_set(int n, const std::vector<Point>& S) {
    if (S.size() == (std::size_t{1} << n))
        throw std::domain_error("lda_of_set: full point set has no annihilator");
    for (int d = 0; d <= n; ++d)
        if (annihilator_space_dim(n, S, d) > 0) return d;
    throw std::logic_error("lda_of_set: unreachable");
}

struct AiResult {
    int value = 0;
    bool degenerate = false;  // constant input: no preimage admits an annihilator
};

/// Algebraic immunity: min over outputs b with nonempty preimage of the lowest
/// annihilator degree of F^-1(b). Empty preimages impose no constraint and are
/// skipped; a constant F is flagged degenerate with value 0.
inline AiResult ai_vectorial(const VectorialFunction& F) {
    const int n = F.n();
    const std::size_t domain = std::size_t{1} << n;
    AiResult r;
    bool any = false;
    for (std::uint32_t b = 0; b < (1u << F.m()); ++b) {
        const auto pre = F.preimage(b);
        if (pre.empty() || pre.size() == domain) continue;
        const int d = lda_of_set(n, pre);
        if (!any || d < r.value) r.value = d;
        any = true;
    }
    if (!any) {
        r.value = 0;
        r.degenerate = true;
    }
    return r;
}

/// Annihilators in the product sense: g with g(x) F(x) = 0 everywhere, i.e.
/// annihilators of the set {x : F(x) != 0}. An empty basis is legal (for
/// example when F vanishes nowhere).
inline AnnihilatorBasis product_annihilators(const VectorialFunction& F, int d) {
    const auto nz = F.nonzero_support();
    auto out = annihilator_basis(F.field(), nz, d);
    out.note_no_annihilator =
        out.dimension == 0 && nz.size() == (std::size_t{1} << F.n());
    return out;
}

/// Lowest degree of a nonzero product-sense annihilator of F; throws when F
/// vanishes nowhere on F_2^n.
inline int lda_product(const VectorialFunction& F) {
    return lda_of_set(F.n(), F.nonzero_support());
}

}  // namespace aicode

#endif  // AICODE_ANNIHILATOR_HPP
