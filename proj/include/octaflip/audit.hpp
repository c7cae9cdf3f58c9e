#pragma once

#include <cstdint>
#include <optional>

#include "octaflip/invariant.hpp"

namespace octaflip {

/// Deterministic splitmix64 stream. Self-contained so that seeded runs are
/// byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Random rational with numerator in [lo, hi] and denominator in [1, maxden].
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t maxden);

private:
    std::uint64_t state_;
};

std::vector<std::array<Rational, 2>> random_affine_points(Rng& rng, std::size_t n,
                                                          std::int64_t box = 12);
Configuration random_generic_configuration(Rng& rng, std::size_t n, std::int64_t box = 12);

/// Random piecewise-linear wiggle starting at the given points (open motion).
Trajectory random_wiggle_trajectory(Rng& rng, const std::vector<std::array<Rational, 2>>& start);

/// A random generic motion together with its compiled script, truncated to
/// max_len flips. Non-generic draws are rejected and resampled.
struct GeometricScript {
    Trajectory trajectory;
    FlipScript script;
};
GeometricScript random_geometric_script(Rng& rng, std::size_t n, std::size_t max_len);

struct AuditReport {
    std::size_t n = 0, trials = 0, script_length = 0;
    std::uint64_t seed = 0;
    std::size_t labels_total = 0, labels_laurent = 0;
    bool all_laurent() const { return labels_laurent == labels_total; }
};

/// Empirical Laurent audit: propagates fresh classical generators through
/// random geometric scripts and counts labels whose denominator reduces to a
/// monomial (expected: all of them).
AuditReport laurent_audit(std::size_t n, std::size_t trials, std::size_t script_length,
                          std::uint64_t seed);

struct FuzzReport {
    std::size_t cases = 0, skipped = 0, mismatches = 0;
};

/// Evaluation-homomorphism fuzz: symbolic propagation evaluated at a random
/// rational point must equal fully numeric propagation from the same values.
/// Classical cases with a zero division anywhere are skipped and counted.
FuzzReport evaluation_fuzz(Backend backend, std::size_t cases, std::size_t n,
                           std::size_t max_len, std::uint64_t seed);

struct SuiteReport {
    std::size_t cases = 0, failures = 0;
};

/// flip-then-reverse on fresh generators equals the input labeling.
SuiteReport involution_suite(Backend backend, std::size_t cases, std::uint64_t seed);
/// Two flips with disjoint role faces commute.
SuiteReport commutation_suite(Backend backend, std::size_t cases, std::uint64_t seed);

struct OracleReport {
    std::size_t trajectories = 0, mismatches = 0;
};

/// Cross-checks detect_events/order_events against a dense grid sign scan of
/// every triple determinant.
OracleReport event_grid_oracle(std::size_t trajectories, std::size_t grid_size,
                               std::uint64_t seed);

} // namespace octaflip
