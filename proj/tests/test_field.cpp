#include <doctest.h>

#include <set>

#include "aicode/field.hpp"

using namespace aicode;

TEST_SUITE_BEGIN("field");

TEST_CASE("reduction table entries are the minimal irreducibles") {
    for (int n = 1; n <= Gf2n::kMaxDegree; ++n) {
        const std::uint32_t p = Gf2n::kReductionPoly[n];
        CAPTURE(n);
        REQUIRE(gf2poly::degree(p) == n);
        CHECK(gf2poly::is_irreducible(p));
        // minimal weight then minimal value; n = 1 pins x + 1 so the modulus
        // keeps a nonzero constant term
        int best_weight = 99;
        std::uint64_t best = 0;
        for (std::uint64_t q = (1ull << n) | 1u; q < (2ull << n); q += 2) {
            if (!gf2poly::is_irreducible(q)) continue;
            const int w = __builtin_popcountll(q);
            if (w < best_weight || (w == best_weight && q < best)) {
                best_weight = w;
                best = q;
            }
        }
        CHECK(p == best);
    }
}

TEST_CASE("pinned small-degree examples") {
    CHECK(Gf2n::kReductionPoly[3] == 0xb);   // x^3 + x + 1
    CHECK(Gf2n::kReductionPoly[1] == 0x3);   // x + 1
    CHECK(Gf2n::kReductionPoly[4] == 0x13);  // x^4 + x + 1
    auto f1 = Gf2n::make(1);
    CHECK(f1->alpha() == 1);
    auto f4 = Gf2n::make(4);
    CHECK(f4->alpha() == 2);
    CHECK(f4->element_order(2) == 15);
}

TEST_CASE("alpha is the smallest primitive element") {
    for (int n = 1; n <= 12; ++n) {
        auto f = Gf2n::make(n);
        CAPTURE(n);
        CHECK(f->element_order(f->alpha()) == f->group_order());
        for (Fe a = 1; a < f->alpha(); ++a)
            CHECK(f->element_order(a) != f->group_order());
    }
}

TEST_CASE("alpha powers enumerate the multiplicative group") {
    for (int n : {1, 2, 3, 4, 6, 8}) {
        auto f = Gf2n::make(n);
        std::set<Fe> seen;
        for (std::uint32_t e = 0; e < f->group_order(); ++e)
            seen.insert(f->alpha_pow(e));
        CHECK(seen.size() == f->group_order());
        CHECK(seen.count(0) == 0);
    }
}

TEST_CASE("multiplication examples in GF(8)") {
    auto f = Gf2n::make(3);
    const Fe a = f->alpha();
    CHECK(f->mul(a, f->mul(a, a)) == 0b011);  // alpha^3 = alpha + 1
    CHECK(f->mul(a, f->sqr(a)) == 0b011);
    for (Fe x = 0; x < 8; ++x) CHECK(f->mul(x, 0) == 0);
    CHECK(f->mul(f->alpha_pow(3), f->alpha_pow(4)) == 1);  // order 7
}

TEST_CASE("field axioms hold exhaustively for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto f = Gf2n::make(n);
        const Fe q = f->order();
        for (Fe a = 0; a < q; ++a)
            for (Fe b = 0; b < q; ++b) {
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->mul(a, b) == f->mul_noluts(a, b));
                for (Fe c = 0; c < q; ++c) {
                    CHECK(f->mul(a, Gf2n::add(b, c)) ==
                          Gf2n::add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
            }
    }
}

TEST_CASE("frobenius is additive") {
    for (int n : {3, 5, 8}) {
        auto f = Gf2n::make(n);
        for (int trial = 0; trial < 200; ++trial) {
            const Fe a = static_cast<Fe>((trial * 2654435761u) % f->order());
            const Fe b = static_cast<Fe>((trial * 40503u + 17) % f->order());
            CHECK(f->sqr(Gf2n::add(a, b)) == Gf2n::add(f->sqr(a), f->sqr(b)));
        }
    }
}

TEST_CASE("inverses") {
    auto f = Gf2n::make(3);
    CHECK(f->inv(1) == 1);
    CHECK(f->inv(f->alpha()) == f->alpha_pow(f->group_order() - 1));
    CHECK(f->inv(f->alpha_pow(3)) == f->alpha_pow(4));
    for (Fe a = 1; a < f->order(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK_THROWS_AS((void)f->inv(0), std::domain_error);
}

TEST_CASE("trace values and properties") {
    auto f3 = Gf2n::make(3);
    CHECK(f3->trace_to(1, 1) == 1);  // 1 + 1 + 1
    for (Fe a = 0; a < 8; ++a) CHECK(f3->trace_to(3, a) == a);

    auto f4 = Gf2n::make(4);
    const Fe t = f4->trace_to(2, f4->alpha());
    CHECK(f4->pow(t, 4) == t);  // lands in GF(4)
    CHECK_THROWS_AS((void)f4->trace_to(3, 1), std::invalid_argument);

    // additivity and subfield stability
    for (int n : {4, 6}) {
        auto f = Gf2n::make(n);
        for (int m = 1; m <= n; ++m) {
            if (n % m) continue;
            for (Fe a = 0; a < f->order(); ++a) {
                const Fe tr = f->trace_to(m, a);
                CHECK(f->pow(tr, 1u << m) == tr);
                const Fe b = f->mul_noluts(a, 0x5 % f->order());
                CHECK(f->trace_to(m, Gf2n::add(a, b)) ==
                      Gf2n::add(f->trace_to(m, a), f->trace_to(m, b)));
            }
        }
    }
}

TEST_CASE("trace transitivity") {
    for (int n = 1; n <= 4; ++n) {
        auto f = Gf2n::make(n);
        for (int m = 1; m <= n; ++m) {
            if (n % m) continue;
            auto fm = Gf2n::make(m);
            const auto embed = f->subfield_embedding(m);
            for (Fe a = 0; a < f->order(); ++a) {
                // pull Tr^n_m(a) back to GF(2^m) through the embedding
                const Fe tnm = f->trace_to(m, a);
                Fe pullback = 0;
                bool found = false;
                for (Fe b = 0; b < fm->order(); ++b)
                    if (embed[b] == tnm) {
                        pullback = b;
                        found = true;
                        break;
                    }
                REQUIRE(found);
                CHECK(fm->trace_to(1, pullback) == f->trace_to(1, a));
            }
        }
    }
}

TEST_CASE("subfield embedding is a field homomorphism") {
    struct Pair {
        int n, m;
    };
    for (auto [n, m] : {Pair{4, 2}, Pair{6, 2}, Pair{6, 3}, Pair{8, 4}}) {
        auto f = Gf2n::make(n);
        auto fm = Gf2n::make(m);
        const auto E = f->subfield_embedding(m);
        CHECK(E[0] == 0);
        CHECK(E[1] == 1);
        std::set<Fe> image;
        for (Fe a = 0; a < fm->order(); ++a) {
            image.insert(E[a]);
            for (Fe b = 0; b < fm->order(); ++b) {
                CHECK(E[a ^ b] == (E[a] ^ E[b]));
                CHECK(E[fm->mul(a, b)] == f->mul(E[a], E[b]));
            }
        }
        CHECK(image.size() == fm->order());  // injective
    }
    // m = n embedding is the identity
    auto f5 = Gf2n::make(5);
    const auto E = f5->subfield_embedding(5);
    for (Fe a = 0; a < f5->order(); ++a) CHECK(E[a] == a);
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_AS((void)Gf2n::make(0), std::invalid_argument);
    CHECK_THROWS_AS((void)Gf2n::make(17), std::invalid_argument);
    CHECK(Gf2n::make(16)->order() == 65536u);
}

TEST_SUITE_END();
