#ifndef AICODE_SEQUENCE_HPP
#define AICODE_SEQUENCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "aicode/annihilator.hpp"
#include "aicode/boolfun.hpp"
#include "aicode/code.hpp"

namespace aicode {

/// Filter generator: the state runs through the orbit x alpha^t of a single
/// multiplicative LFSR and the keystream is z_t = F(x alpha^t).
struct FilterGenerator {
    VectorialFunction F;
    Fe state;
};

struct SymbolSequence {
    std::vector<std::uint32_t> symbols;
    int period = 0;  // period of the underlying orbit sequence, divides 2^n - 1
};

inline SymbolSequence keystream(const FilterGenerator& gen, int T) {
    if (gen.state == 0)
        throw std::invalid_argument("keystream: zero state has a degenerate orbit");
    if (T < 1) throw std::invalid_argument("keystream: need T >= 1");
    const auto& f = *gen.F.field();
    const int N = static_cast<int>(f.group_order());
    std::vector<std::uint32_t> orbit(N);
    Fe x = gen.state;
    for (int t = 0; t < N; ++t) {
        orbit[t] = gen.F.eval(x);
        x = f.mul(x, f.alpha());
    }
    int period = N;
    for (int p = 1; p <= N; ++p) {
        if (N % p != 0) continue;
        bool ok = true;
        for (int t = 0; t < N && ok; ++t) ok = orbit[t % p] == orbit[t];
        if (ok) {
            period = p;
            break;
        }
    }
    SymbolSequence out;
    out.period = period;
    out.symbols.resize(T);
    for (int t = 0; t < T; ++t) out.symbols[t] = orbit[t % N];
    return out;
}

struct BmResult {
    std::size_t lc = 0;
    /// Characteristic polynomial of the shortest recurrence, bit i =
    /// coefficient of x^i, monic of degree lc: s_{t+lc} = sum h_i s_{t+i}.
    std::vector<std::uint8_t> min_poly;

    /// Regenerates a window of the given length from its first lc bits.
    std::vector<std::uint8_t> regenerate(std::vector<std::uint8_t> seed,
                                         std::size_t len) const {
        seed.resize(std::max(len, lc));
        for (std::size_t t = lc; t < len; ++t) {
            std::uint8_t s = 0;
            for (std::size_t i = 0; i < lc; ++i)
                if (min_poly[i]) s ^= seed[t - lc + i];
            seed[t] = s;
        }
        seed.resize(len);
        return seed;
    }
};

/// Berlekamp-Massey over GF(2): shortest LFSR generating the window.
inline BmResult berlekamp_massey(const std::vector<std::uint8_t>& s) {
    const std::size_t n = s.size();
    std::vector<std::uint8_t> C(n + 1, 0), B(n + 1, 0);
    C[0] = B[0] = 1;
    std::size_t L = 0, m = 1;
    for (std::size_t t = 0; t < n; ++t) {
        std::uint8_t d = s[t] & 1;
        for (std::size_t i = 1; i <= L; ++i) d ^= C[i] & s[t - i];
        if (d == 0) {
            ++m;
        } else if (2 * L <= t) {
            std::vector<std::uint8_t> T(C);
            for (std::size_t i = 0; i + m <= n; ++i) C[i + m] ^= B[i];
            L = t + 1 - L;
            B = std::move(T);
            m = 1;
        } else {
            for (std::size_t i = 0; i + m <= n; ++i) C[i + m] ^= B[i];
            ++m;
        }
    }
    BmResult out;
    out.lc = L;
    out.min_poly.assign(L + 1, 0);
    // connection poly C with s_t = sum_{i=1..L} C_i s_{t-i}; the characteristic
    // polynomial is its reciprocal padded to degree L
    for (std::size_t i = 0; i <= L && i < C.size(); ++i)
        out.min_poly[L - i] = C[i];
    return out;
}

struct AnnihilatorSequence {
    std::vector<std::uint8_t> bits;
    int period = 0;
    /// g vanishes on the whole orbit: the annihilating sequence is zero and
    /// useless as a distinguisher.
    bool zero_sequence = false;
};

struct AnnihilatorContractViolation : std::runtime_error {
    explicit AnnihilatorContractViolation(int t_)
        : std::runtime_error(
              "sequence annihilator contract violated at t = " + std::to_string(t_)),
          t(t_) {}
    int t;
};

/// u_t = g(x alpha^t) for a product-sense annihilator g of F; the symbolwise
/// product u_t z_t is zero along the whole orbit. Throws with the first
/// failing index if g is not an annihilator there.
inline AnnihilatorSequence sequence_annihilator_from_function(
    const BooleanFunction& g, const FilterGenerator& gen, int T) {
    if (gen.state == 0)
        throw std::invalid_argument("sequence annihilator: zero state");
    const auto& f = *gen.F.field();
    const int N = static_cast<int>(f.group_order());
    Fe x = gen.state;
    std::vector<std::uint8_t> u_orbit(N);
    for (int t = 0; t < N; ++t) {
        const std::uint8_t u = g.eval(x);
        if (u && gen.F.eval(x) != 0) throw AnnihilatorContractViolation(t);
        u_orbit[t] = u;
        x = f.mul(x, f.alpha());
    }
    AnnihilatorSequence out;
    out.zero_sequence = true;
    for (auto b : u_orbit)
        if (b) {
            out.zero_sequence = false;
            break;
        }
    int period = N;
    for (int p = 1; p <= N; ++p) {
        if (N % p != 0) continue;
        bool ok = true;
        for (int t = 0; t < N && ok; ++t) ok = u_orbit[t % p] == u_orbit[t];
        if (ok) {
            period = p;
            break;
        }
    }
    out.period = period;
    out.bits.resize(T);
    for (int t = 0; t < T; ++t) out.bits[t] = u_orbit[t % N];
    return out;
}

struct SpectralImmunityReport {
    /// G_F = x^(2^n-1)+1: the code is zero and no nonzero annihilating
    /// codeword exists.
    bool zero_code = false;
    DistanceReport weight;  // minimum Hamming weight of the G_F code
    int ai_value = 0;
    bool ai_degenerate = false;
    bool ai_bound_holds = false;  // SI <= sum_{i<=AI} C(n,i), when SI is exact
};

/// Spectral immunity of F as the minimum Hamming weight of the cyclic code
/// generated by G_F, with the algebraic-immunity comparison reported
/// alongside.
inline SpectralImmunityReport spectral_immunity(const VectorialFunction& F,
                                                std::uint64_t budget = 1ull << 24,
                                                std::uint64_t seed = 1) {
    SpectralImmunityReport rep;
    const CyclicCode code = code_for_function(F);
    if (code.is_zero_code()) {
        rep.zero_code = true;
        return rep;
    }
    rep.weight = min_distance(code, budget, seed);
    const AiResult ai = ai_vectorial(F);
    rep.ai_value = ai.value;
    rep.ai_degenerate = ai.degenerate;
    if (rep.weight.exact() && !ai.degenerate) {
        long long sum = 0;
        const int n = F.n();
        long long c = 1;
        for (int i = 0; i <= ai.value; ++i) {
            sum += c;
            c = c * (n - i) / (i + 1);
        }
        rep.ai_bound_holds = rep.weight.upper <= sum;
    }
    return rep;
}

}  // namespace aicode

#endif  // AICODE_SEQUENCE_HPP
