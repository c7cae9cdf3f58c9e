#include "octaflip/labeling.hpp"

#include <algorithm>

#include "octaflip/errors.hpp"

namespace octaflip {

std::vector<std::string> generator_faces(const DualArrangement& a) {
    const auto canon = a.canonical_faces();
    return {canon.begin(), canon.end()}; // std::set iterates in lex order
}

Labeling initial_labeling(const DualArrangement& a, Backend backend) {
    Labeling l;
    l.backend = backend;
    l.gens = a.face_count();
    const auto faces = generator_faces(a);
    for (std::size_t r = 0; r < faces.size(); ++r) {
        l.values.emplace(a.from_canonical_key(faces[r]),
                         SemifieldElement::generator(backend, l.gens, r));
    }
    return l;
}

namespace {

const SemifieldElement& role(const Labeling& l, const std::string& key, const char* what) {
    const auto it = l.values.find(key);
    if (it == l.values.end())
        throw MissingRole(std::string("missing ") + what + " face '" + key + "'");
    return it->second;
}

} // namespace

Labeling flip_label(const Labeling& l, const FlipSite& site) {
    const SemifieldElement& x = role(l, site.sigma, "collapsing");
    SemifieldElement acc = sf_otimes(role(l, site.edge_neighbors[0], "edge"),
                                     role(l, site.vertex_neighbors[0], "vertex"));
    for (int m = 1; m < 3; ++m)
        acc = sf_oplus(acc, sf_otimes(role(l, site.edge_neighbors[m], "edge"),
                                      role(l, site.vertex_neighbors[m], "vertex")));
    SemifieldElement replacement = sf_oslash(acc, x);

    Labeling out = l;
    out.values.erase(site.sigma);
    out.values.insert_or_assign(site.tau, std::move(replacement));
    return out;
}

Labeling propagate(const Labeling& l0, const FlipScript& script, const DualArrangement& a0) {
    Labeling current = l0;
    std::set<std::string> faces = a0.faces();
    for (const auto& key : faces)
        if (!current.values.count(key))
            throw MissingRole("labeling does not cover face '" + key + "'");

    for (const auto& entry : script.entries) {
        const FlipSite site = make_flip_site(entry.triple, entry.sigma);
        if (!faces.count(site.sigma))
            throw SiteNotPresent("script entry collapses unknown face '" + site.sigma + "'");
        for (int m = 0; m < 3; ++m)
            if (!faces.count(site.edge_neighbors[m]) ||
                !faces.count(site.vertex_neighbors[m]))
                throw MissingRole("script entry hexagon is not present");
        current = flip_label(current, site);
        faces.erase(site.sigma);
        faces.insert(site.tau);
    }
    return current;
}

bool numeric_propagate(std::map<std::string, Rational>& values, Backend backend,
                       const FlipScript& script, const DualArrangement& a0) {
    std::set<std::string> faces = a0.faces();
    std::map<std::string, Rational> work = values;
    for (const auto& entry : script.entries) {
        const FlipSite site = make_flip_site(entry.triple, entry.sigma);
        const Rational x = work.at(site.sigma);
        Rational acc;
        bool first = true;
        for (int m = 0; m < 3; ++m) {
            const Rational e = work.at(site.edge_neighbors[m]);
            const Rational w = work.at(site.vertex_neighbors[m]);
            if (backend == Backend::Classical) {
                acc = first ? Rational(e * w) : Rational(acc + e * w);
            } else {
                const Rational prod = e + w;
                acc = first ? prod : std::max(acc, prod);
            }
            first = false;
        }
        Rational replacement;
        if (backend == Backend::Classical) {
            if (x == 0) return false;
            replacement = acc / x;
        } else {
            replacement = acc - x;
        }
        work.erase(site.sigma);
        work.insert_or_assign(site.tau, std::move(replacement));
        faces.erase(site.sigma);
        faces.insert(site.tau);
    }
    values = std::move(work);
    return true;
}

} // namespace octaflip
