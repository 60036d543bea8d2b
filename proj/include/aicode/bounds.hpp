#ifndef AICODE_BOUNDS_HPP
#define AICODE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aicode/field.hpp"

namespace aicode {

/// sum_{i=lo}^{hi} C(n,i), exact.
inline long long binom_sum(int n, int lo, int hi) {
    long long sum = 0, c = 1;
    for (int i = 0; i <= n; ++i) {
        if (i >= lo && i <= hi) sum += c;
        c = c * (n - i) / (i + 1);
    }
    return sum;
}

enum class BoundKind {
    lda_lower,             // from a minimum distance
    lda_complement_lower,  // for 1 + f, from a V-pattern in the support
    ai_upper,              // pigeonhole on preimage sizes
    ai_lower_corollary,    // min(delta+k, 2^n-delta+k) threshold
};

struct BoundReport {
    BoundKind kind = BoundKind::lda_lower;
    int value = 0;
    // certificate
    long long delta = 0;
    int k = 0;
    int e = 0;
    int pattern_l = -1;  // V-pattern start exponent, when applicable
    int pattern_step = 0;
    // convention flags
    bool strict_convention = true;  // binomial sum from i = 0 (strict) vs i = 1
    bool coprime_to_order = true;   // pattern step coprime to 2^n-1 vs to n
    bool applicable = true;         // false when a precondition is not met
};

/// Lowest-degree-annihilator bound from a code distance: with the strict
/// convention, the smallest e with sum_{i=0}^{e} C(n,i) >= delta satisfies
/// LDA >= e; the weak convention starts the sum at i = 1.
inline BoundReport lda_lower_from_distance(long long delta, int n,
                                           bool strict = true) {
    if (delta < 1)
        throw std::invalid_argument("lda_lower_from_distance: need delta >= 1");
    if (delta > (1ll << n))
        throw std::invalid_argument(
            "lda_lower_from_distance: distance exceeds the number of points");
    BoundReport r;
    r.kind = BoundKind::lda_lower;
    r.delta = delta;
    r.strict_convention = strict;
    const int lo = strict ? 0 : 1;
    int e = lo == 0 ? 0 : 1;
    while (e <= n && binom_sum(n, lo, e) < delta) ++e;
    r.e = r.value = e;
    return r;
}

/// Smallest d with sum_{i=0}^{d} C(n,i) > 2^(n-m); an upper bound on the
/// algebraic immunity of surjective (n,m)-functions (the pigeonhole argument
/// needs every output value to be hit).
inline BoundReport ai_upper(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("ai_upper: need 1 <= m <= n");
    BoundReport r;
    r.kind = BoundKind::ai_upper;
    const long long cap = 1ll << (n - m);
    int d = 0;
    while (d <= n && binom_sum(n, 0, d) <= cap) ++d;
    r.value = r.e = d;
    r.delta = cap;
    return r;
}

namespace detail {

struct VPattern {
    bool found = false;
    int l = 0, step = 1, delta = 0, k = 0;
};

// Largest pattern V(a,l,delta-1) u V(a,l+step,delta-1) u ... u
// V(a,l+k*step,delta-1) inside the exponent set, scored by the given
// objective; step restricted by the coprimality convention.
template <typename Score>
inline VPattern best_v_pattern(const std::vector<int>& exponents, int n,
                               bool coprime_to_order, Score score) {
    const int N = (1 << n) - 1;
    std::vector<std::uint8_t> in_set(N, 0);
    for (int e : exponents) in_set[((e % N) + N) % N] = 1;
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
    VPattern best;
    long long best_score = 0;
    for (int step = 1; step < std::max(2, N); ++step) {
        if (N > 1 && (coprime_to_order ? gcd_int(step, N) != 1 : gcd_int(step, n) != 1))
            continue;
        for (int l = 0; l < N; ++l) {
            if (!in_set[l]) continue;
            int t = run[l];
            for (int k = 0; k < N && t >= 1; ++k) {
                t = std::min(t, run[(l + k * step) % N]);
                if (t < 1) break;
                const int delta = t + 1;  // rows have length delta - 1
                const long long sc = score(delta, k);
                if (!best.found || sc > best_score) {
                    best.found = true;
                    best_score = sc;
                    best.l = l;
                    best.step = step;
                    best.delta = delta;
                    best.k = k;
                }
            }
        }
        if (N == 1) break;
    }
    return best;
}

// The exponent set when it is exactly one circular run: (start, length).
inline std::optional<std::pair<int, int>> exact_single_run(
    const std::vector<int>& exponents, int N) {
    if (exponents.empty() || exponents.size() >= static_cast<std::size_t>(N))
        return std::nullopt;
    std::vector<std::uint8_t> in_set(N, 0);
    for (int e : exponents) in_set[((e % N) + N) % N] = 1;
    int start = -1;
    for (int s = 0; s < N; ++s)
        if (in_set[s] && !in_set[(s + N - 1) % N]) {
            if (start != -1) return std::nullopt;  // two run starts
            start = s;
        }
    if (start == -1) return std::nullopt;
    int len = 0;
    while (in_set[(start + len) % N]) ++len;
    int count = 0;
    for (auto b : in_set) count += b;
    if (count != len) return std::nullopt;
    return std::make_pair(start, len);
}

}  // namespace detail

/// Bound from consecutive-zero patterns in a support exponent set. With
/// for_complemented = false: LDA(f) >= e where e is the smallest positive
/// integer whose binomial sum reaches delta + k, maximized over detected
/// patterns (strict convention sums from i = 0, the weak one from i = 1).
/// With for_complemented = true: LDA(1+f) >= e - 1 with the threshold
/// 2^n - delta + k; this direction needs the support to be exactly the
/// pattern window, and `applicable` reports whether that identity holds.
inline BoundReport consecutive_zero_bound(const std::vector<int>& support_exponents,
                                          int n, bool for_complemented,
                                          bool coprime_to_order = true,
                                          bool strict = true) {
    BoundReport r;
    r.kind = for_complemented ? BoundKind::lda_complement_lower : BoundKind::lda_lower;
    r.coprime_to_order = coprime_to_order;
    r.strict_convention = strict;
    if (support_exponents.empty()) {
        r.applicable = false;
        return r;
    }
    const int N = (1 << n) - 1;
    const int lo = strict ? 0 : 1;
    if (!for_complemented) {
        const auto pat = detail::best_v_pattern(
            support_exponents, n, coprime_to_order,
            [](int delta, int k) { return static_cast<long long>(delta) + k; });
        if (!pat.found) {
            r.applicable = false;
            return r;
        }
        r.pattern_l = pat.l;
        r.pattern_step = pat.step;
        r.delta = pat.delta;
        r.k = pat.k;
        const long long threshold = r.delta + r.k;
        if (threshold > binom_sum(n, lo, n)) {
            // no degree can reach the threshold; the pattern is degenerate
            r.applicable = false;
            r.e = r.value = n;
            return r;
        }
        int e = lo;
        while (e <= n && binom_sum(n, lo, e) < threshold) ++e;
        r.e = r.value = e;
        return r;
    }
    // complemented direction: the support identity forces a single exact run
    const auto run = detail::exact_single_run(support_exponents, N);
    if (run) {
        r.pattern_l = run->first;
        r.pattern_step = 1;
        r.delta = run->second + 1;
        r.k = 0;
        r.applicable = true;
    } else {
        const auto pat = detail::best_v_pattern(
            support_exponents, n, coprime_to_order, [&](int delta, int k) {
                return (1ll << n) - delta + k;
            });
        if (!pat.found) {
            r.applicable = false;
            return r;
        }
        r.pattern_l = pat.l;
        r.pattern_step = pat.step;
        r.delta = pat.delta;
        r.k = pat.k;
        r.applicable = false;  // the support exceeds the pattern window
    }
    const long long threshold = (1ll << n) - r.delta + r.k;
    if (threshold > (1ll << n) - 1 || threshold < 1) {
        r.applicable = false;
        r.e = n;
        r.value = n - 1;
        return r;
    }
    int e = 1;
    while (e <= n && binom_sum(n, 1, e) < threshold) ++e;
    r.e = e;
    r.value = e - 1;
    return r;
}

/// AI(f) >= e - 1 with e the smallest positive integer whose binomial sum
/// from i = 1 reaches min(delta + k, 2^n - delta + k). The complemented leg
/// needs the support to be exactly one run, so `applicable` is set only then.
inline BoundReport ai_lower_corollary(const std::vector<int>& support_exponents,
                                      int n, bool coprime_to_order = true) {
    BoundReport r;
    r.kind = BoundKind::ai_lower_corollary;
    r.coprime_to_order = coprime_to_order;
    r.strict_convention = false;
    const int N = (1 << n) - 1;
    const auto run = detail::exact_single_run(support_exponents, N);
    if (!run) {
        r.applicable = false;
        return r;
    }
    r.pattern_l = run->first;
    r.pattern_step = 1;
    r.delta = run->second + 1;
    r.k = 0;
    const long long a = r.delta + r.k;
    const long long b = (1ll << n) - r.delta + r.k;
    const long long threshold = a < b ? a : b;
    if (threshold > (1ll << n) - 1 || threshold < 1) {
        r.applicable = false;
        r.e = n;
        r.value = n - 1;
        return r;
    }
    int e = 1;
    while (e <= n && binom_sum(n, 1, e) < threshold) ++e;
    r.e = e;
    r.value = e - 1;
    return r;
}

}  // namespace aicode

#endif  // AICODE_BOUNDS_HPP
