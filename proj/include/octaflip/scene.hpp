#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "octaflip/motion.hpp"
#include "octaflip/semifield.hpp"

namespace octaflip {

/// Parsed scene file. All numerics are exact rational strings ("p/q"); the
/// motion is either explicit piecewise-linear trajectories or a braid word,
/// never both. Optional explicit initial labels are keyed by canonical face
/// sign vectors.
struct Scene {
    std::vector<std::array<Rational, 2>> points;
    std::optional<std::vector<PointTrack>> tracks;
    std::optional<std::string> word;
    std::size_t arc_segments = 8;
    std::optional<Backend> backend;
    std::optional<std::map<std::string, std::string>> initial_labels;
    std::optional<std::uint64_t> seed;
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);

/// The motion a scene describes: explicit tracks, an encoded braid word, or
/// (when neither is present) the constant motion holding the points.
Trajectory scene_trajectory(const Scene& scene);

} // namespace octaflip
