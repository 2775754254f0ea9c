#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace cutsim {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact integer tables for the expected-intersection formula: binomials
/// C(n,0..n), Stirling numbers of the second kind S(a,b) for all b <= a <= n,
/// and the inner sums
///     inner(i,x) = sum_{j=0}^{x-1} S(i,j+1) * S(n-i,x-j)
/// for 1 <= i <= n-1, 1 <= x <= n. Building costs O(n^3) time and space;
/// evaluating the formula for one (k,l) afterwards is O(n).
class CombinatoricsTables {
public:
    explicit CombinatoricsTables(std::uint32_t n) : n_(n) {
        if (n < 2) throw std::invalid_argument("tables need n >= 2");
        if (n > 10000) throw std::invalid_argument("n too large for table precomputation");

        binomial_.resize(n + 1);
        binomial_[0] = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            // C(n,i+1) = C(n,i) * (n-i) / (i+1), exact at every step.
            binomial_[i + 1] = binomial_[i] * (n - i) / (i + 1);
        }

        stirling_.resize(n + 1);
        stirling_[0] = {BigInt(1)};
        for (std::uint32_t a = 1; a <= n; ++a) {
            stirling_[a].assign(a + 1, BigInt(0));
            stirling_[a][a] = 1;
            for (std::uint32_t b = 1; b < a; ++b)
                stirling_[a][b] = b * stirling_[a - 1][b] + stirling_[a - 1][b - 1];
        }

        inner_.assign(n, {});
        for (std::uint32_t i = 1; i <= n - 1; ++i) {
            inner_[i].assign(n + 1, BigInt(0));
            for (std::uint32_t x = 1; x <= n; ++x) {
                BigInt sum = 0;
                for (std::uint32_t j = 0; j < x; ++j)
                    sum += stirling(i, j + 1) * stirling(n - i, x - j);
                inner_[i][x] = sum;
            }
        }
    }

    std::uint32_t n() const { return n_; }

    const BigInt& binomial(std::uint32_t i) const { return binomial_[i]; }

    /// S(a,b); zero outside 0 <= b <= a.
    const BigInt& stirling(std::uint32_t a, std::uint32_t b) const {
        static const BigInt zero(0);
        if (b > a) return zero;
        return stirling_[a][b];
    }

    const BigInt& inner_sum(std::uint32_t i, std::uint32_t x) const {
        return inner_[i][x];
    }

private:
    std::uint32_t n_;
    std::vector<BigInt> binomial_;
    std::vector<std::vector<BigInt>> stirling_;
    std::vector<std::vector<BigInt>> inner_;
};

inline CombinatoricsTables build_tables(std::uint32_t n) { return CombinatoricsTables(n); }

/// Which reading of the inner product to use. The symmetric reading mirrors
/// the first factor, S(i,j+1); AsPrinted keeps the constant S(i,l+1) factor
/// exactly as typeset, for comparison.
enum class EsReading { Symmetric, AsPrinted };

struct ExpectedIntersection {
    Rational value;
    /// True when (k,l) is outside the Stirling-normalized formula's domain
    /// and the lower bound k*l/(2^(n-1)-1) was returned instead.
    bool fallback = false;
};

/// Expected size of the intersection of two random approximation sets of
/// sizes k and l over all cuts of a complete n-vertex graph, under the
/// non-crossing counting model:
///
///   Es(k,l) = sum_i C(n,i) * inner(i,k) * inner(i,l)
///             / ( S(n,k+1) S(n,l+1) (2^(k+1)-2) (2^(l+1)-2) )
///
/// For k+1 > n or l+1 > n the Stirling denominator vanishes; the lower
/// bound k*l/|S| with |S| = 2^(n-1)-1 is used and flagged.
inline ExpectedIntersection expected_intersection(const CombinatoricsTables& t,
                                                  std::uint64_t k, std::uint64_t l,
                                                  EsReading reading = EsReading::Symmetric) {
    if (k < 1 || l < 1) throw std::invalid_argument("set sizes must be at least 1");
    const std::uint32_t n = t.n();

    if (k + 1 > n || l + 1 > n) {
        BigInt all_cuts = (BigInt(1) << (n - 1)) - 1;
        Rational bound(BigInt(k) * BigInt(l), all_cuts);
        bound.canonicalize();
        return {bound, true};
    }

    const auto ku = static_cast<std::uint32_t>(k);
    const auto lu = static_cast<std::uint32_t>(l);
    BigInt numerator = 0;
    for (std::uint32_t i = 1; i <= n - 1; ++i) {
        BigInt first = t.inner_sum(i, ku);
        BigInt second;
        if (reading == EsReading::Symmetric) {
            second = t.inner_sum(i, lu);
        } else {
            second = 0;
            for (std::uint32_t j = 0; j < lu; ++j)
                second += t.stirling(i, lu + 1) * t.stirling(n - i, lu - j);
        }
        numerator += t.binomial(i) * first * second;
    }
    BigInt denominator = t.stirling(n, ku + 1) * t.stirling(n, lu + 1) *
                         ((BigInt(1) << (ku + 1)) - 2) * ((BigInt(1) << (lu + 1)) - 2);
    Rational es(numerator, denominator);
    es.canonicalize();
    return {es, false};
}

/// Exact-to-double conversion of a rational; GMP handles magnitudes far
/// beyond the double range by returning +/-inf, which never occurs for the
/// instance sizes this library targets.
inline double rational_to_double(const Rational& q) { return q.get_d(); }

} // namespace cutsim
