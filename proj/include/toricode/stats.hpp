#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "toricode/codes.hpp"

namespace toricode {

/// Deterministic cross-platform bounded draw from a seeded mt19937_64.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

/// Uniform size-s subset of {0..n-1}, sorted; rejection sampling over
/// index tuples.
std::vector<int> sample_subset(std::mt19937_64& rng, int n, int s);

/// C(n, s) capped at `cap` (returns cap+1 when the count exceeds it).
long long binom_capped(long long n, long long s, long long cap);

struct WsResult {
    bool unbounded;
    int w; // valid when !unbounded
};

/// Weight of the shortest dual word whose support contains S, by iterative
/// deepening over extensions of size 0..max_extension; Unbounded if no
/// word appears within the budget.
WsResult w_s(const EvaluationMatrix& a, std::span<const int> s, int max_extension);

struct ModeConfig {
    long long exhaustive_threshold = 2000;
    long long samples = 2000;
    std::uint64_t seed = 0;
    int max_extension = 2;
};

struct ModeReport {
    int s = 0;
    std::map<int, long long> histogram; // finite w values
    long long unbounded_count = 0;
    bool mode_unbounded = false;
    int mode = 0; // valid when !mode_unbounded; ties broken by smaller w
    long long sample_count = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    int max_extension = 0;
    // descriptors for the report
    int field_p = 0, field_e = 0;
    int polytope_dim = 0;
    long long polytope_points = 0;
};

/// Mode of size s over subsets of B (row indices of A). Exhausts all
/// C(|B|, s) subsets when within the threshold, otherwise draws seeded
/// samples.
ModeReport mode_over(const EvaluationMatrix& a, const std::vector<int>& b, int s,
                     const ModeConfig& cfg);

/// Mode of size s over all torus points.
ModeReport mode(const EvaluationMatrix& a, int s, const ModeConfig& cfg);

/// Mode restricted to the rows of A(F_{q^ext_degree}, P) whose coordinates
/// lie in the embedded image of F_q^*.
ModeReport relative_mode(const LatticePolytope& p, const Field& base_field, int ext_degree,
                         int s, const ModeConfig& cfg);

struct GenericityReport {
    std::vector<int> tuple;
    int span_rank = 0;
    std::vector<int> points_in_span; // extra rows lying in the span
    bool condition1_ok = false;      // span has projective dimension c
    bool proxy2_ok = true;           // F_q-level proxy only; see points_in_span
    bool proxy3_ok = true;           // vacuous: all rows are torus points
};

/// Tests condition (1) of genericity exactly; conditions (2)-(3) are
/// scheme-theoretic and only reported as F_q-level proxies.
GenericityReport is_generic_tuple(const EvaluationMatrix& a, std::span<const int> tuple);

struct Fraction {
    long long num = 0;
    long long den = 1;
    bool exhaustive = false;
    double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
};

/// Fraction of ordered (c+1)-tuples of torus points (with replacement)
/// spanning a projective c-plane; exhaustive when t^(c+1) <= 10^6.
Fraction generic_fraction_estimate(const LatticePolytope& p, const Field& field,
                                   long long samples, std::uint64_t seed);

} // namespace toricode
