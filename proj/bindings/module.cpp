#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octaflip/audit.hpp"
#include "octaflip/invariant.hpp"
#include "octaflip/octagon.hpp"
#include "octaflip/scene.hpp"

namespace py = pybind11;

namespace {

using namespace octaflip;

std::string run_scene(const std::string& scene_json, const std::string& backend_flag) {
    const Scene scene = parse_scene(scene_json);
    Backend backend = scene.backend.value_or(Backend::Classical);
    if (!backend_flag.empty()) backend = backend_from_name(backend_flag);
    const InvariantResult result =
        compute_invariant(scene_trajectory(scene), backend, scene.initial_labels);
    return result_to_json(result);
}

bool compare_results(const std::string& a, const std::string& b) {
    return compare_invariants(result_from_json(a), result_from_json(b));
}

py::dict octagon_report(const std::string& backend_flag) {
    const OctagonReport report = run_octagon(backend_from_name(backend_flag));
    py::dict out;
    out["backend"] = backend_name(report.backend);
    out["ok"] = report.ok;
    py::list identities;
    for (const auto& id : report.identities) {
        py::dict d;
        d["name"] = id.name;
        d["computed"] = id.lhs;
        d["expected"] = id.rhs;
        d["ok"] = id.ok;
        identities.append(std::move(d));
    }
    out["identities"] = std::move(identities);
    return out;
}

py::dict geometry_stats(const std::vector<std::pair<std::string, std::string>>& points) {
    Configuration c;
    for (const auto& [x, y] : points)
        c.push_back(ProjPoint::from_affine(parse_rational(x), parse_rational(y)));
    const DualArrangement a = DualArrangement::from_configuration(c);
    py::dict out;
    out["n"] = a.n();
    out["vertices"] = a.vertex_count();
    out["edges"] = a.edge_count();
    out["faces"] = a.face_count();
    out["triangles"] = a.triangle_faces().size();
    return out;
}

py::dict audit_report(std::size_t n, std::size_t trials, std::size_t length,
                      std::uint64_t seed) {
    const AuditReport report = laurent_audit(n, trials, length, seed);
    py::dict out;
    out["n"] = report.n;
    out["trials"] = report.trials;
    out["script_length"] = report.script_length;
    out["seed"] = report.seed;
    out["labels_total"] = report.labels_total;
    out["labels_laurent"] = report.labels_laurent;
    out["all_laurent"] = report.all_laurent();
    return out;
}

std::string canonicalize_element(const std::string& text, const std::string& backend_flag,
                                 const std::vector<std::string>& generator_names) {
    const SymbolTable symbols(generator_names);
    return serialize(parse(text, backend_from_name(backend_flag), symbols), symbols);
}

std::string element_op(const std::string& op, const std::string& a, const std::string& b,
                       const std::string& backend_flag,
                       const std::vector<std::string>& generator_names) {
    const SymbolTable symbols(generator_names);
    const Backend backend = backend_from_name(backend_flag);
    const SemifieldElement x = parse(a, backend, symbols);
    const SemifieldElement y = parse(b, backend, symbols);
    if (op == "otimes") return serialize(sf_otimes(x, y), symbols);
    if (op == "oplus") return serialize(sf_oplus(x, y), symbols);
    if (op == "oslash") return serialize(sf_oslash(x, y), symbols);
    if (op == "equals") return sf_equals(x, y) ? "true" : "false";
    throw InvalidInput("unknown operation '" + op + "'");
}

void register_exceptions(py::module_& m) {
    static py::exception<Error> base(m, "OctaflipError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const NotGeneric& e) {
            base(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Braid invariant on the projective plane via Desargues flips";
    register_exceptions(m);

    m.def("run_scene", &run_scene, py::arg("scene_json"), py::arg("backend") = "",
          "Compute the invariant of a scene; returns the result JSON.");
    m.def("compare_results", &compare_results, py::arg("a"), py::arg("b"),
          "Semifield comparison of two result JSON documents.");
    m.def("verify_octagon", &octagon_report, py::arg("backend") = "classical",
          "Run the octagon relation checks; returns a report dict.");
    m.def("geometry_stats", &geometry_stats, py::arg("points"),
          "V/E/F and triangle count of a point configuration (rational strings).");
    m.def("laurent_audit", &audit_report, py::arg("n") = 4, py::arg("trials") = 20,
          py::arg("length") = 8, py::arg("seed") = 12345,
          "Empirical Laurent-ness audit over random geometric scripts.");
    m.def("canonicalize_element", &canonicalize_element, py::arg("text"),
          py::arg("backend"), py::arg("generators"),
          "Parse and re-serialize an element in canonical form.");
    m.def("element_op", &element_op, py::arg("op"), py::arg("a"), py::arg("b"),
          py::arg("backend"), py::arg("generators"),
          "Apply otimes/oplus/oslash/equals to two serialized elements.");
}
