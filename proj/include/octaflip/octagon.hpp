#pragma once

#include <array>
#include <string>
#include <vector>

#include "octaflip/semifield.hpp"

namespace octaflip {

/// The octagon fixture lives on eleven abstract symbols a..k. Eight flips
/// produce l, m, n, o, p, q, r, s; each step applies the flip formula
/// (p1 (x) p2 (+) p3 (x) p4 (+) p5 (x) p6) (/) divisor.
struct OctagonStep {
    std::size_t out;                               // slot receiving the value
    std::array<std::array<std::size_t, 2>, 3> pairs;
    std::size_t divisor;
};

struct OctagonSteps {
    std::array<OctagonStep, 8> steps;
    /// The eight flips of the octagon relation. The fifth step (p) is the
    /// unique value that closes the relation; see the tests for its
    /// derivation check.
    static OctagonSteps standard();
    /// Standard steps with the fifth deliberately corrupted (negative
    /// control; also selected by the OCTAFLIP_OCTAGON_FAULT_INJECTION build
    /// flag as the default).
    static OctagonSteps corrupted_fifth();
};

struct OctagonIdentity {
    std::string name;
    std::string lhs, rhs; // serialized computed / expected values
    bool ok = false;
};

struct OctagonReport {
    Backend backend = Backend::Classical;
    bool ok = false;
    std::vector<OctagonIdentity> identities;
};

/// Executes the eight flips symbolically and checks, in order: the closed
/// expansions of m, n and o, then q = i, r = j, s = k. Classical identities
/// additionally require bit-identical canonical serializations.
OctagonReport run_octagon(Backend backend, const OctagonSteps& steps = OctagonSteps::standard());

/// Like run_octagon but throws RelationFailed at the first failing identity.
OctagonReport verify_octagon(Backend backend);

} // namespace octaflip
