#include "octaflip/invariant.hpp"

#include <json.hpp>

#include "octaflip/errors.hpp"

namespace octaflip {

namespace {

std::size_t generator_count(std::size_t n) { return n * (n - 1) / 2 + 1; }

} // namespace

InvariantResult compute_invariant(
    const Trajectory& traj, Backend backend,
    const std::optional<std::map<std::string, std::string>>& initial_labels) {
    traj.validate();
    const std::size_t n = traj.size();
    if (n < 2) throw InvalidInput("the invariant needs at least two points");

    const Configuration start = traj.configuration_at(Rational(0));
    const Configuration end = traj.configuration_at(Rational(1));

    // Closure: endpoint configurations coincide as sets; record which initial
    // slot each point lands on.
    std::vector<std::size_t> permutation(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (end[p] == start[q]) {
                permutation[p] = q;
                break;
            }
        }
        if (permutation[p] == n)
            throw NotClosed("point " + std::to_string(p) +
                            " does not return to an initial position");
    }

    const FlipScript script = compile_flip_script(start, traj);
    const DualArrangement a0 = arrangement_at(traj, Rational(0));
    const std::size_t gens = generator_count(n);
    const SymbolTable symbols = SymbolTable::numbered(gens);

    Labeling l0;
    if (initial_labels) {
        l0.backend = backend;
        l0.gens = gens;
        const auto canon = a0.canonical_faces();
        for (const auto& [key, text] : *initial_labels) {
            if (!canon.count(key))
                throw InvalidInput("initial label key '" + key +
                                   "' is not a face of the arrangement");
            l0.values.emplace(a0.from_canonical_key(key), parse(text, backend, symbols));
        }
        if (l0.values.size() != a0.face_count())
            throw InvalidInput("initial labels must cover every face exactly once");
    } else {
        l0 = initial_labeling(a0, backend);
    }

    const Labeling final_labels = propagate(l0, script, a0);

    // The lines at t=1 are the same set as at t=0, so the canonical face keys
    // of the final arrangement must reproduce the initial ones.
    const DualArrangement a1 = arrangement_at(traj, Rational(1));
    std::set<std::string> propagated_keys;
    for (const auto& [key, value] : final_labels.values) propagated_keys.insert(key);
    if (propagated_keys != a1.faces())
        throw InternalError("propagated face keys do not match the final arrangement");

    InvariantResult result;
    result.n = n;
    result.backend = backend;
    result.permutation = std::move(permutation);
    result.script_length = script.size();
    for (const auto& [key, value] : final_labels.values)
        result.labels.emplace(a1.to_canonical_key(key), serialize(value, symbols));
    if (result.labels.size() != a0.face_count() ||
        [&] {
            for (const auto& [k, v] : result.labels)
                if (!a0.canonical_faces().count(k)) return true;
            return false;
        }())
        throw InternalError("final labels are not keyed by the initial faces");
    return result;
}

namespace {

void check_comparable(const InvariantResult& a, const InvariantResult& b) {
    if (a.n != b.n) throw InvalidInput("results have different point counts");
    if (a.backend != b.backend) throw InvalidInput("results have different backends");
    if (a.permutation.size() != b.permutation.size())
        throw InvalidInput("results have different permutation sizes");
    auto keys = [](const InvariantResult& r) {
        std::vector<std::string> k;
        for (const auto& [key, value] : r.labels) k.push_back(key);
        return k;
    };
    if (keys(a) != keys(b)) throw InvalidInput("results are keyed by different face sets");
}

} // namespace

bool compare_invariants(const InvariantResult& a, const InvariantResult& b) {
    check_comparable(a, b);
    if (a.permutation != b.permutation) return false;
    const SymbolTable symbols = SymbolTable::numbered(generator_count(a.n));
    for (const auto& [key, text] : a.labels) {
        const SemifieldElement va = parse(text, a.backend, symbols);
        const SemifieldElement vb = parse(b.labels.at(key), b.backend, symbols);
        if (!sf_equals(va, vb)) return false;
    }
    return true;
}

std::optional<std::string> first_label_difference(const InvariantResult& a,
                                                  const InvariantResult& b) {
    check_comparable(a, b);
    const SymbolTable symbols = SymbolTable::numbered(generator_count(a.n));
    for (const auto& [key, text] : a.labels) {
        const SemifieldElement va = parse(text, a.backend, symbols);
        const SemifieldElement vb = parse(b.labels.at(key), b.backend, symbols);
        if (!sf_equals(va, vb)) return key;
    }
    return std::nullopt;
}

std::string result_to_json(const InvariantResult& r) {
    nlohmann::ordered_json j;
    j["permutation"] = r.permutation;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.labels) labels[key] = value;
    j["labels"] = std::move(labels);
    j["script_length"] = r.script_length;
    j["backend"] = backend_name(r.backend);
    return j.dump(2) + "\n";
}

InvariantResult result_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad result JSON: ") + e.what());
    }
    InvariantResult r;
    try {
        r.permutation = j.at("permutation").get<std::vector<std::size_t>>();
        for (const auto& [key, value] : j.at("labels").items())
            r.labels.emplace(key, value.get<std::string>());
        r.script_length = j.at("script_length").get<std::size_t>();
        r.backend = backend_from_name(j.at("backend").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad result JSON: ") + e.what());
    }
    r.n = r.permutation.size();
    return r;
}

} // namespace octaflip
