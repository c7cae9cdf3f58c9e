#include "octaflip/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "octaflip/errors.hpp"

namespace octaflip {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InvalidInput(where + ": expected an exact rational string");
}

std::array<Rational, 2> point_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput(where + ": expected a pair [x, y]");
    return {rational_field(j[0], where + "[0]"), rational_field(j[1], where + "[1]")};
}

} // namespace

Scene parse_scene(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("scene is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("scene must be a JSON object");

    Scene scene;
    if (j.contains("word") && j.contains("trajectories"))
        throw InvalidInput("scene may give trajectories or a braid word, not both");

    if (j.contains("points")) {
        const auto& pts = j.at("points");
        if (!pts.is_array() || pts.empty())
            throw InvalidInput("points: expected a nonempty array");
        for (std::size_t i = 0; i < pts.size(); ++i)
            scene.points.push_back(point_field(pts[i], "points[" + std::to_string(i) + "]"));
    } else if (j.contains("word")) {
        // default base: points on a parabola, generic with distinct x
        std::size_t n = 0;
        if (j.contains("n")) {
            if (!j.at("n").is_number_unsigned()) throw InvalidInput("n: expected an integer");
            n = j.at("n").get<std::size_t>();
        } else {
            const BraidWord w = parse_braid_word(j.at("word").get<std::string>());
            for (int letter : w.letters)
                n = std::max<std::size_t>(n, static_cast<std::size_t>(std::abs(letter)) + 1);
            n = std::max<std::size_t>(n, 2);
        }
        for (std::size_t i = 0; i < n; ++i)
            scene.points.push_back({Rational(i), Rational(i) * Rational(i)});
    } else {
        throw InvalidInput("scene needs points (or a braid word with a strand count)");
    }

    if (j.contains("trajectories")) {
        const auto& trs = j.at("trajectories");
        if (!trs.is_array() || trs.size() != scene.points.size())
            throw InvalidInput("trajectories: expected one track per point");
        std::vector<PointTrack> tracks;
        for (std::size_t i = 0; i < trs.size(); ++i) {
            const std::string where = "trajectories[" + std::to_string(i) + "]";
            const auto& tj = trs[i];
            if (!tj.is_object() || !tj.contains("times") || !tj.contains("positions"))
                throw InvalidInput(where + ": expected {times, positions}");
            PointTrack track;
            for (std::size_t s = 0; s < tj.at("times").size(); ++s)
                track.times.push_back(
                    rational_field(tj.at("times")[s], where + ".times"));
            for (std::size_t s = 0; s < tj.at("positions").size(); ++s)
                track.positions.push_back(
                    point_field(tj.at("positions")[s], where + ".positions"));
            track.validate();
            if (!(track.positions.front() == scene.points[i]))
                throw InvalidInput(where + " does not start at its point");
            tracks.push_back(std::move(track));
        }
        scene.tracks = std::move(tracks);
    }

    if (j.contains("word")) {
        scene.word = j.at("word").get<std::string>();
        if (j.contains("arc_segments")) {
            if (!j.at("arc_segments").is_number_unsigned())
                throw InvalidInput("arc_segments: expected a positive integer");
            scene.arc_segments = j.at("arc_segments").get<std::size_t>();
        }
    }

    if (j.contains("backend"))
        scene.backend = backend_from_name(j.at("backend").get<std::string>());

    if (j.contains("initial_labels")) {
        const auto& labels = j.at("initial_labels");
        if (!labels.is_object()) throw InvalidInput("initial_labels: expected an object");
        std::map<std::string, std::string> out;
        for (const auto& [key, value] : labels.items()) {
            if (!value.is_string())
                throw InvalidInput("initial_labels: values must be element strings");
            out.emplace(key, value.get<std::string>());
        }
        scene.initial_labels = std::move(out);
    }

    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw InvalidInput("seed: expected a non-negative integer");
        scene.seed = j.at("seed").get<std::uint64_t>();
    }
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

Trajectory scene_trajectory(const Scene& scene) {
    if (scene.tracks) {
        Trajectory t;
        t.tracks = *scene.tracks;
        t.validate();
        return t;
    }
    if (scene.word)
        return braid_word_to_trajectory(parse_braid_word(*scene.word), scene.points,
                                        scene.arc_segments);
    return Trajectory::constant(scene.points);
}

} // namespace octaflip
