#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "octaflip/audit.hpp"
#include "octaflip/invariant.hpp"
#include "octaflip/octagon.hpp"
#include "octaflip/scene.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNotGeneric = 2;
constexpr int kExitRelationFailed = 3;

std::uint64_t seed_or_default(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("OCTAFLIP_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw octaflip::InvalidInput("OCTAFLIP_SEED is not a non-negative integer");
        }
    }
    return 12345;
}

std::string permutation_str(const std::vector<std::size_t>& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i];
    }
    os << "]";
    return os.str();
}

int cmd_run(const std::string& scene_path, const std::string& backend_flag,
            const std::string& out_path) {
    using namespace octaflip;
    const Scene scene = load_scene(scene_path);
    Backend backend = scene.backend.value_or(Backend::Classical);
    if (!backend_flag.empty()) backend = backend_from_name(backend_flag);

    const Trajectory traj = scene_trajectory(scene);
    const InvariantResult result = compute_invariant(traj, backend, scene.initial_labels);
    const std::string json = result_to_json(result);

    if (out_path.empty()) {
        std::cout << json;
        std::cerr << "script_length: " << result.script_length << "\n"
                  << "permutation: " << permutation_str(result.permutation) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidInput("cannot write result file '" + out_path + "'");
        out << json;
        std::cout << "script_length: " << result.script_length << "\n"
                  << "permutation: " << permutation_str(result.permutation) << "\n";
    }
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    using namespace octaflip;
    auto read = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open result file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return result_from_json(buf.str());
    };
    const InvariantResult a = read(path_a);
    const InvariantResult b = read(path_b);
    if (a.permutation != b.permutation) {
        std::cout << "results differ: permutations " << permutation_str(a.permutation)
                  << " vs " << permutation_str(b.permutation) << "\n";
        return kExitInvalidInput;
    }
    if (const auto face = first_label_difference(a, b)) {
        std::cout << "results differ at face " << *face << ":\n"
                  << "  " << path_a << ": " << a.labels.at(*face) << "\n"
                  << "  " << path_b << ": " << b.labels.at(*face) << "\n";
        return kExitInvalidInput;
    }
    std::cout << "results are equal (" << a.labels.size() << " faces)\n";
    return kExitOk;
}

int cmd_verify_octagon(const std::string& backend_flag) {
    using namespace octaflip;
    std::vector<Backend> backends;
    if (backend_flag == "both") {
        backends = {Backend::Classical, Backend::Tropical};
    } else {
        backends = {backend_from_name(backend_flag)};
    }
    bool all_ok = true;
    for (const Backend backend : backends) {
        const OctagonReport report = run_octagon(backend);
        std::cout << "octagon relation, " << backend_name(backend) << " backend:\n";
        for (const auto& id : report.identities) {
            std::cout << "  [" << (id.ok ? "ok" : "FAIL") << "] " << id.name << "\n"
                      << "      computed: " << id.lhs << "\n"
                      << "      expected: " << id.rhs << "\n";
        }
        all_ok = all_ok && report.ok;
    }
    if (!all_ok) {
        std::cout << "octagon relation FAILED\n";
        return kExitRelationFailed;
    }
    std::cout << "octagon relation holds\n";
    return kExitOk;
}

int cmd_laurent_audit(std::size_t n, std::size_t trials, std::size_t len,
                      const std::optional<std::uint64_t>& seed_flag) {
    using namespace octaflip;
    const std::uint64_t seed = seed_or_default(seed_flag);
    const AuditReport report = laurent_audit(n, trials, len, seed);
    std::cout << "{\"n\": " << report.n << ", \"trials\": " << report.trials
              << ", \"script_length\": " << report.script_length << ", \"seed\": "
              << report.seed << ", \"labels_total\": " << report.labels_total
              << ", \"labels_laurent\": " << report.labels_laurent << "}\n";
    const double ratio = report.labels_total == 0
                             ? 1.0
                             : static_cast<double>(report.labels_laurent) /
                                   static_cast<double>(report.labels_total);
    std::cout << "laurent ratio: " << ratio * 100.0 << "%\n";
    return report.all_laurent() ? kExitOk : kExitRelationFailed;
}

int cmd_geometry_stats(const std::string& scene_path, bool dump) {
    using namespace octaflip;
    const Scene scene = load_scene(scene_path);
    Configuration c;
    for (const auto& p : scene.points) c.push_back(ProjPoint::from_affine(p[0], p[1]));
    const DualArrangement a = DualArrangement::from_configuration(c);
    std::cout << "n: " << a.n() << "\nV: " << a.vertex_count() << "\nE: " << a.edge_count()
              << "\nF: " << a.face_count() << "\ntriangles: " << a.triangle_faces().size()
              << "\n";
    if (dump) std::cout << a.dump_json() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid invariant on the projective plane via Desargues flips"};
    app.require_subcommand(1);

    std::string scene_path, out_path, backend_flag;
    auto* run = app.add_subcommand("run", "Compute the invariant of a scene");
    run->add_option("scene", scene_path, "scene JSON file")->required();
    run->add_option("--backend", backend_flag, "classical or tropical")
        ->check(CLI::IsMember({"classical", "tropical"}));
    run->add_option("--out", out_path, "write the result JSON here");

    std::string cmp_a, cmp_b;
    auto* cmp = app.add_subcommand("compare", "Compare two invariant results");
    cmp->add_option("a", cmp_a, "first result JSON")->required();
    cmp->add_option("b", cmp_b, "second result JSON")->required();

    std::string oct_backend = "both";
    auto* oct = app.add_subcommand("verify-octagon", "Verify the octagon relation");
    oct->add_option("--backend", oct_backend, "classical, tropical or both")
        ->check(CLI::IsMember({"classical", "tropical", "both"}));

    std::size_t audit_n = 4, audit_trials = 200, audit_len = 12;
    std::optional<std::uint64_t> audit_seed;
    auto* audit = app.add_subcommand("laurent-audit", "Empirical Laurent-ness audit");
    audit->add_option("--n", audit_n, "number of points (>= 3)");
    audit->add_option("--trials", audit_trials, "number of random motions");
    audit->add_option("--len", audit_len, "maximum script length per motion");
    audit->add_option("--seed", audit_seed, "RNG seed (default: OCTAFLIP_SEED or 12345)");

    std::string stats_scene;
    bool stats_dump = false;
    auto* stats = app.add_subcommand("geometry-stats",
                                     "Print V/E/F and triangle count of a configuration");
    stats->add_option("scene", stats_scene, "scene JSON file (points are used)")->required();
    stats->add_flag("--dump", stats_dump, "also dump the arrangement as JSON");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(scene_path, backend_flag, out_path);
        if (cmp->parsed()) return cmd_compare(cmp_a, cmp_b);
        if (oct->parsed()) return cmd_verify_octagon(oct_backend);
        if (audit->parsed())
            return cmd_laurent_audit(audit_n, audit_trials, audit_len, audit_seed);
        if (stats->parsed()) return cmd_geometry_stats(stats_scene, stats_dump);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInvalidInput;
    } catch (const octaflip::RelationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelationFailed;
    } catch (const octaflip::NotGeneric& e) {
        std::cerr << "error: non-generic motion: " << e.what() << "\n";
        return kExitNotGeneric;
    } catch (const octaflip::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const octaflip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelationFailed;
    }
    return kExitInvalidInput;
}
