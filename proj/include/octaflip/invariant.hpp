#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octaflip/labeling.hpp"

namespace octaflip {

/// Final labels of a closed motion, re-expressed over the initial
/// arrangement's canonical face keys. permutation[p] = q means point p ends
/// at the initial position of point q. Labels are stored in canonical
/// serialized form so that results round-trip bit-exactly through JSON.
struct InvariantResult {
    std::size_t n = 0;
    Backend backend = Backend::Classical;
    std::vector<std::size_t> permutation;
    std::map<std::string, std::string> labels;
    std::size_t script_length = 0;

    bool operator==(const InvariantResult& o) const = default;
};

/// Runs the whole pipeline on a closed generic motion: compile the flip
/// script, propagate labels from the initial labeling (fresh generators
/// unless explicit labels are supplied, keyed by canonical face vectors),
/// and re-key the final labels against the initial arrangement. Throws
/// NotClosed when the endpoint point sets differ, plus all motion errors.
InvariantResult compute_invariant(
    const Trajectory& traj, Backend backend,
    const std::optional<std::map<std::string, std::string>>& initial_labels = std::nullopt);

/// True iff the permutations are equal and every face's labels agree under
/// semifield equality. Throws InvalidInput when the results are not
/// comparable (different n, backend, or face-key sets).
bool compare_invariants(const InvariantResult& a, const InvariantResult& b);

/// First face whose labels differ (for diagnostics); empty when equal or when
/// only the permutations differ.
std::optional<std::string> first_label_difference(const InvariantResult& a,
                                                  const InvariantResult& b);

std::string result_to_json(const InvariantResult& r);
InvariantResult result_from_json(const std::string& text);

} // namespace octaflip
