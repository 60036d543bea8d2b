#include <doctest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "aicode/annihilator.hpp"
#include "aicode/sequence.hpp"

using namespace aicode;

namespace {

std::uint64_t rng_state = 0xc0ffee1234567890ull;
std::uint64_t next_rand() {
    rng_state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = rng_state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// exhaustive shortest-recurrence search, usable for short windows
std::size_t brute_lc(const std::vector<std::uint8_t>& s) {
    const std::size_t n = s.size();
    for (std::size_t L = 0; L <= n; ++L) {
        if (L >= n) return L;
        for (std::uint64_t code = 0; code < (1ull << L); ++code) {
            bool ok = true;
            for (std::size_t t = L; t < n && ok; ++t) {
                std::uint8_t v = 0;
                for (std::size_t i = 0; i < L; ++i)
                    if ((code >> i) & 1) v ^= s[t - L + i];
                ok = v == s[t];
            }
            if (ok) return L;
        }
    }
    return n;
}

VectorialFunction boolean_from_tt_bits(const FieldPtr& f, std::uint32_t bits) {
    std::vector<std::uint32_t> table(f->order());
    for (std::uint32_t x = 0; x < f->order(); ++x) table[x] = (bits >> x) & 1;
    return VectorialFunction::from_table(f, 1, table);
}

}  // namespace

TEST_SUITE_BEGIN("seq");

TEST_CASE("keystream generation") {
    auto f = Gf2n::make(3);
    SUBCASE("constant filter gives a constant stream") {
        const auto F = VectorialFunction::from_table(f, 2, std::vector<std::uint32_t>(8, 2));
        const auto ks = keystream({F, 1}, 10);
        CHECK(ks.period == 1);
        for (auto v : ks.symbols) CHECK(v == 2);
    }
    SUBCASE("identity filter walks the alpha orbit with full period") {
        std::vector<std::uint32_t> table(8);
        for (std::uint32_t x = 0; x < 8; ++x) table[x] = x;
        const auto F = VectorialFunction::from_table(f, 3, table);
        const auto ks = keystream({F, 1}, 14);
        CHECK(ks.period == 7);
        for (int t = 0; t < 14; ++t) REQUIRE(ks.symbols[t] == f->alpha_pow(t));
    }
    SUBCASE("pointwise oracle for a trace filter") {
        std::vector<std::uint32_t> table(8);
        for (Fe x = 0; x < 8; ++x)
            table[x] = static_cast<std::uint32_t>(f->abs_trace(f->pow(x, 3)));
        const auto F = VectorialFunction::from_table(f, 1, table);
        const auto ks = keystream({F, 1}, 7);
        for (int t = 0; t < 7; ++t)
            REQUIRE(ks.symbols[t] == table[f->alpha_pow(t)]);
        CHECK(7 % ks.period == 0);
    }
    SUBCASE("zero state is rejected") {
        const auto F = VectorialFunction::from_table(f, 1, std::vector<std::uint32_t>(8, 0));
        CHECK_THROWS_AS((void)keystream({F, 0}, 4), std::invalid_argument);
    }
    SUBCASE("period always divides 2^n - 1") {
        for (int trial = 0; trial < 40; ++trial) {
            const auto F = boolean_from_tt_bits(f, static_cast<std::uint32_t>(next_rand() & 255));
            const auto ks = keystream({F, static_cast<Fe>(1 + next_rand() % 7)}, 7);
            CHECK(7 % ks.period == 0);
        }
    }
}

TEST_CASE("berlekamp-massey") {
    SUBCASE("all-zero window") {
        const auto r = berlekamp_massey(std::vector<std::uint8_t>(16, 0));
        CHECK(r.lc == 0);
        CHECK(r.min_poly == std::vector<std::uint8_t>{1});
    }
    SUBCASE("m-sequence of x^3 + x + 1 over a doubled period") {
        std::vector<std::uint8_t> s = {1, 0, 0};
        for (std::size_t t = 3; t < 14; ++t) s.push_back(s[t - 2] ^ s[t - 3]);
        const auto r = berlekamp_massey(s);
        CHECK(r.lc == 3);
        CHECK(r.min_poly == std::vector<std::uint8_t>{1, 1, 0, 1});  // x^3+x+1
        CHECK(r.regenerate({s.begin(), s.begin() + 3}, 14) == s);
    }
    SUBCASE("impulse window") {
        std::vector<std::uint8_t> s = {1, 0, 0, 0, 0, 0};
        const auto r = berlekamp_massey(s);
        CHECK(r.lc == brute_lc(s));
        CHECK(r.regenerate({s.begin(), s.begin() + r.lc}, s.size()) == s);
    }
    SUBCASE("matches the exhaustive recurrence oracle on short windows") {
        for (int len = 1; len <= 8; ++len)
            for (std::uint32_t code = 0; code < (1u << len); ++code) {
                std::vector<std::uint8_t> s(len);
                for (int t = 0; t < len; ++t) s[t] = (code >> t) & 1;
                const auto r = berlekamp_massey(s);
                REQUIRE(r.lc == brute_lc(s));
                REQUIRE(r.regenerate({s.begin(), s.begin() + r.lc}, len) == s);
            }
    }
    SUBCASE("regenerates random long windows") {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::uint8_t> s(64);
            for (auto& b : s) b = next_rand() & 1;
            const auto r = berlekamp_massey(s);
            CHECK(r.lc <= s.size());
            CHECK(r.regenerate({s.begin(), s.begin() + r.lc}, s.size()) == s);
        }
    }
}

TEST_CASE("annihilating sequences") {
    auto f = Gf2n::make(3);
    SUBCASE("zero-point indicator yields the zero sequence, flagged") {
        std::vector<std::uint8_t> tt(8, 0);
        tt[0] = 1;
        const auto g = BooleanFunction::from_tt(f, tt);
        // F vanishes only at 0, so g * F = 0 holds
        std::vector<std::uint32_t> table(8);
        for (std::uint32_t x = 0; x < 8; ++x) table[x] = x;
        const auto F = VectorialFunction::from_table(f, 3, table);
        const auto u = sequence_annihilator_from_function(g, {F, 1}, 7);
        CHECK(u.zero_sequence);
        for (auto b : u.bits) CHECK(b == 0);
    }
    SUBCASE("u_t z_t vanishes over the whole period") {
        for (int trial = 0; trial < 25; ++trial) {
            const auto F = boolean_from_tt_bits(f, static_cast<std::uint32_t>(next_rand() & 255));
            const auto basis = product_annihilators(F, 3);
            if (basis.dimension == 0) continue;
            const auto& g = basis.basis[0];
            const auto u = sequence_annihilator_from_function(g, {F, 1}, 7);
            const auto z = keystream({F, 1}, 7);
            for (int t = 0; t < 7; ++t) REQUIRE((u.bits[t] == 0 || z.symbols[t] == 0));
        }
    }
    SUBCASE("non-annihilators are rejected with the first failing index") {
        const auto F = boolean_from_tt_bits(f, 0xff);  // constant one
        const auto g = BooleanFunction::from_tt(f, std::vector<std::uint8_t>(8, 1));
        CHECK_THROWS_AS(
            (void)sequence_annihilator_from_function(g, {F, 1}, 7),
            AnnihilatorContractViolation);
        try {
            (void)sequence_annihilator_from_function(g, {F, 1}, 7);
        } catch (const AnnihilatorContractViolation& e) {
            CHECK(e.t == 0);
        }
    }
    SUBCASE("linear complexity equals the folded coefficient count") {
        // u_t = g(alpha^t) has one spectral line per nonzero residue
        // coefficient of g, so its linear complexity is that count
        for (std::uint32_t code = 1; code < 256; ++code) {
            std::vector<std::uint8_t> tt(8);
            for (int x = 0; x < 8; ++x) tt[x] = (code >> x) & 1;
            const auto g = BooleanFunction::from_tt(f, tt);
            const auto folded = fold_to_codeword(g.uni());
            int weight = 0;
            for (Fe c : folded) weight += c != 0;
            std::vector<std::uint8_t> u(14);
            for (int t = 0; t < 14; ++t) u[t] = g.eval(f->alpha_pow(t));
            REQUIRE(berlekamp_massey(u).lc == static_cast<std::size_t>(weight));
        }
    }
}

TEST_CASE("spectral immunity") {
    auto f = Gf2n::make(3);
    SUBCASE("zero function: full code, immunity 1") {
        const auto F = boolean_from_tt_bits(f, 0);
        const auto rep = spectral_immunity(F);
        CHECK_FALSE(rep.zero_code);
        REQUIRE(rep.weight.exact());
        CHECK(rep.weight.lower == 1);
    }
    SUBCASE("functions with no vanishing point are flagged") {
        const auto rep = spectral_immunity(boolean_from_tt_bits(f, 0xff));
        CHECK(rep.zero_code);
    }
    SUBCASE("single-point support keeps immunity under the binomial cap") {
        const auto F = boolean_from_tt_bits(f, 1u << 1);  // supp = {1}
        const auto rep = spectral_immunity(F);
        REQUIRE(rep.weight.exact());
        CHECK(rep.ai_value == 1);
        CHECK(rep.weight.lower <= 4);  // 1 + n
        CHECK(rep.ai_bound_holds);
    }
    SUBCASE("shifted permutation: immunity equals the lightest annihilator") {
        // F(x) = x + 1 vanishes exactly at the nonzero point 1
        std::vector<std::uint32_t> table(8);
        for (std::uint32_t x = 0; x < 8; ++x) table[x] = x ^ 1;
        const auto F = VectorialFunction::from_table(f, 3, table);
        const auto rep = spectral_immunity(F);
        REQUIRE(rep.weight.exact());
        // the annihilator space is spanned by the indicator of {1}
        const auto basis = product_annihilators(F, 3);
        REQUIRE(basis.dimension == 1);
        const auto folded = fold_to_codeword(basis.basis[0].uni());
        int count = 0;
        for (Fe c : folded) count += c != 0;
        CHECK(rep.weight.lower == count);
        CHECK(rep.weight.lower == 7);
    }
}

TEST_SUITE_END();
