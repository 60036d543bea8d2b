#ifndef AICODE_COMPLEMENT_HPP
#define AICODE_COMPLEMENT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "aicode/boolfun.hpp"
#include "aicode/code.hpp"

namespace aicode {

/// Delta(x) = prod_i (1 + x_i), the indicator of the zero point; its ANF has
/// every monomial.
inline BooleanFunction delta_function(const FieldPtr& field) {
    std::vector<std::uint8_t> anf(field->order(), 1);
    return BooleanFunction::from_anf(field, std::move(anf));
}

/// ANF-wise monomial complement; pointwise this is f + Delta, so it flips the
/// value at 0 and agrees with f elsewhere. Involutive.
inline BooleanFunction complement_boolean(const BooleanFunction& f) {
    std::vector<std::uint8_t> anf(f.anf());
    for (auto& c : anf) c ^= 1;
    return BooleanFunction::from_anf(f.field(), std::move(anf));
}

struct ComplementPair {
    VectorialFunction F;
    VectorialFunction Fc;
    BooleanFunction delta;
};

/// Coordinatewise algebraic complement: Fc(x) = F(x) off zero and
/// Fc(0) = F(0) + (1,...,1).
inline ComplementPair complement_vectorial(const VectorialFunction& F) {
    std::vector<std::uint32_t> table(F.table());
    table[0] ^= (1u << F.m()) - 1;
    auto Fc = VectorialFunction::from_table(F.field(), F.m(), std::move(table));
    return ComplementPair{F, std::move(Fc), delta_function(F.field())};
}

struct GeneratorDivision {
    GenPoly g_f;
    GenPoly g_fc;
    Poly quotient;
    bool divides = false;
    /// Every generator-matrix row of C(F^-1(b)) satisfies the root equations
    /// of the complement's code for the same b, for every b.
    bool membership_ok = false;
};

/// G_F against G_{F^c}: exact division plus the per-preimage code containment
/// check. Both functions agree off zero, so the quotient is expected to be 1.
inline GeneratorDivision complement_generator_division(const VectorialFunction& F) {
    GeneratorDivision out;
    const auto pair = complement_vectorial(F);
    out.g_f = generator_for_function(F);
    out.g_fc = generator_for_function(pair.Fc);
    const auto dm = poly::divmod(*F.field(), out.g_f.coeffs, out.g_fc.coeffs);
    out.divides = poly::is_zero(dm.rem);
    out.quotient = dm.quot;
    out.membership_ok = true;
    for (std::uint32_t b = 0; b < (1u << F.m()); ++b) {
        const CyclicCode cb = code_from_preimage(F, b);
        const CyclicCode cbc = code_from_preimage(pair.Fc, b);
        for (const auto& row : generator_matrix(cb)) {
            Poly w(row);
            if (!cbc.contains(poly::trim(std::move(w)))) {
                out.membership_ok = false;
                break;
            }
        }
        if (!out.membership_ok) break;
    }
    return out;
}

}  // namespace aicode

#endif  // AICODE_COMPLEMENT_HPP
