#pragma once

#include <map>

#include "octaflip/arrangement.hpp"
#include "octaflip/motion.hpp"
#include "octaflip/semifield.hpp"

namespace octaflip {

/// Finite map from face keys to semifield labels. Keys live in the basis of
/// the arrangement family the labeling travels with (input basis during
/// propagation); the generator count is the face count n(n-1)/2 + 1.
struct Labeling {
    Backend backend = Backend::Classical;
    std::size_t gens = 0;
    std::map<std::string, SemifieldElement> values;

    bool operator==(const Labeling& o) const = default;
};

/// Fresh generators, one per face: faces are sorted by lexicographic order of
/// their canonical sign vectors and face r receives generator r. Keys of the
/// returned labeling are in input basis.
Labeling initial_labeling(const DualArrangement& a, Backend backend);

/// The sorted canonical face keys, i.e. generator index -> canonical face.
std::vector<std::string> generator_faces(const DualArrangement& a);

/// One Desargues flip on the labels: the collapsing face's label x is replaced
/// by (E_i (x) W_i (+) E_j (x) W_j (+) E_k (x) W_k) (/) x placed at the
/// replacement face. Throws MissingRole when a hexagon key is absent.
Labeling flip_label(const Labeling& l, const FlipSite& site);

/// Left fold of flip_label over the script, advancing the face-key set from
/// the initial arrangement. Throws SiteNotPresent/MissingRole on invalid
/// entries.
Labeling propagate(const Labeling& l0, const FlipScript& script, const DualArrangement& a0);

/// Numeric twin of propagate for the evaluation-homomorphism checks: labels
/// are plain rationals and the flip formula is folded numerically. Returns
/// false (leaving the map untouched) when a classical division by zero occurs.
bool numeric_propagate(std::map<std::string, Rational>& values, Backend backend,
                       const FlipScript& script, const DualArrangement& a0);

} // namespace octaflip
