#include "octaflip/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "octaflip/errors.hpp"

namespace octaflip {

namespace signvec {

std::string normalize(std::string key) {
    if (!key.empty() && key[0] == '-')
        for (auto& c : key) c = (c == '+') ? '-' : '+';
    return key;
}

std::string flip_one(std::string key, std::size_t i) {
    key[i] = (key[i] == '+') ? '-' : '+';
    return normalize(std::move(key));
}

std::string flip_three(std::string key, const std::array<std::size_t, 3>& triple) {
    for (auto i : triple) key[i] = (key[i] == '+') ? '-' : '+';
    return normalize(std::move(key));
}

} // namespace signvec

FlipSite make_flip_site(const std::array<std::size_t, 3>& triple, const std::string& sigma) {
    FlipSite s;
    s.triple = triple;
    std::sort(s.triple.begin(), s.triple.end());
    s.sigma = signvec::normalize(sigma);
    for (int m = 0; m < 3; ++m) {
        s.edge_neighbors[m] = signvec::flip_one(s.sigma, s.triple[m]);
        std::string w = s.sigma;
        for (int r = 0; r < 3; ++r)
            if (r != m) w[s.triple[r]] = (w[s.triple[r]] == '+') ? '-' : '+';
        s.vertex_neighbors[m] = signvec::normalize(std::move(w));
    }
    s.tau = signvec::flip_three(s.sigma, s.triple);
    return s;
}

FlipSite FlipSite::reversed() const { return make_flip_site(triple, tau); }

// ---------------------------------------------------------------------------
// Construction

namespace {

int lex_cmp_triple(const Vec3Z& a, const Vec3Z& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

DualArrangement DualArrangement::from_configuration(const Configuration& c) {
    if (!is_generic(c))
        throw NotGeneric("configuration is not generic (repeated point or collinear triple)");
    std::vector<Vec3Q> reps;
    reps.reserve(c.size());
    for (const auto& p : c) {
        const Vec3Z& k = dualize(p).key;
        reps.push_back({Rational(k[0]), Rational(k[1]), Rational(k[2])});
    }
    return from_line_reps(reps);
}

DualArrangement DualArrangement::from_line_reps(const std::vector<Vec3Q>& reps) {
    if (reps.size() < 2)
        throw InvalidInput("an arrangement needs at least two lines");
    DualArrangement a;
    a.reps_ = reps;
    for (const auto& r : reps) {
        Vec3Z key = canonical_triple(r);
        a.lines_.push_back(ProjLine{key});
        // orientation of the stored rep against the canonical key
        int eta = 0;
        for (int i = 0; i < 3 && eta == 0; ++i)
            if (r[i] != 0) eta = (r[i].sign() == key[i].sign()) ? 1 : -1;
        a.eta_.push_back(eta);
    }
    for (std::size_t i = 0; i < a.lines_.size(); ++i)
        for (std::size_t j = i + 1; j < a.lines_.size(); ++j)
            if (a.lines_[i] == a.lines_[j])
                throw NotGeneric("two lines coincide");

    a.canon_order_.resize(a.lines_.size());
    for (std::size_t i = 0; i < a.canon_order_.size(); ++i) a.canon_order_[i] = i;
    std::sort(a.canon_order_.begin(), a.canon_order_.end(),
              [&](std::size_t x, std::size_t y) {
                  return lex_cmp_triple(a.lines_[x].key, a.lines_[y].key) < 0;
              });

    a.build_geometry();
    return a;
}

void DualArrangement::build_geometry() {
    const std::size_t n = lines_.size();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vertex v;
            v.i = i;
            v.j = j;
            v.coords = canonical_triple(cross(lines_[i].key, lines_[j].key));
            v.signs.resize(n, 0);
            for (std::size_t m = 0; m < n; ++m) {
                if (m == i || m == j) continue;
                const int s = dot(reps_[m], v.coords).sign();
                if (s == 0)
                    throw NotGeneric("three lines are concurrent (lines " +
                                     std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(m) + ")");
                v.signs[m] = s;
            }
            vertices_.push_back(std::move(v));
        }
    }

    // Circular order of the vertices along each projective line: parametrize
    // x = alpha*p + beta*q on the line and sort by beta/alpha with the
    // infinity slot last (RP^1 closes up, so "last" glues to "first").
    circular_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3Z& l = lines_[i].key;
        int piv = 0;
        while (l[piv] == 0) ++piv;
        const int a1 = (piv + 1) % 3, a2 = (piv + 2) % 3;
        Vec3Z e1{}, e2{};
        e1[a1] = 1;
        e2[a2] = 1;
        const Vec3Z p = cross(l, e1), q = cross(l, e2);
        const Vec3Z alpha_form = cross(q, l), beta_form = cross(l, p);

        std::vector<std::pair<std::pair<Int, Int>, std::size_t>> params;
        for (std::size_t vid = 0; vid < vertices_.size(); ++vid) {
            const auto& v = vertices_[vid];
            if (v.i != i && v.j != i) continue;
            Int alpha = dot(alpha_form, v.coords);
            Int beta = dot(beta_form, v.coords);
            if (alpha < 0 || (alpha == 0 && beta < 0)) {
                alpha = -alpha;
                beta = -beta;
            }
            params.push_back({{alpha, beta}, vid});
        }
        std::sort(params.begin(), params.end(), [](const auto& x, const auto& y) {
            const auto& [ax, bx] = x.first;
            const auto& [ay, by] = y.first;
            if (ax == 0 && ay == 0) return false;
            if (ax == 0) return false; // infinity sorts last
            if (ay == 0) return true;
            const int c = (bx * ay < by * ax) ? -1 : (bx * ay > by * ax ? 1 : 0);
            return c < 0;
        });
        for (const auto& [param, vid] : params) circular_[i].push_back(vid);
        if (circular_[i].size() != n - 1)
            throw InternalError("unexpected vertex count along a line");
    }

    // Faces: every face of an arrangement with n >= 2 lines touches a vertex,
    // and the four local sectors of a vertex are faces, so sweeping vertices
    // enumerates the full face set.
    faces_.clear();
    for (const auto& v : vertices_) {
        for (int a : {1, -1}) {
            for (int b : {1, -1}) {
                std::string key(lines_.size(), '+');
                for (std::size_t m = 0; m < lines_.size(); ++m) {
                    int s = (m == v.i) ? a : (m == v.j) ? b : v.signs[m];
                    key[m] = s > 0 ? '+' : '-';
                }
                faces_.insert(signvec::normalize(std::move(key)));
            }
        }
    }

    const std::size_t expected = lines_.size() * (lines_.size() - 1) / 2 + 1;
    if (faces_.size() != expected)
        throw InternalError("face count " + std::to_string(faces_.size()) +
                            " does not match " + std::to_string(expected));
    derive_combinatorics();
}

void DualArrangement::derive_combinatorics() {
    // Everything downstream (boundary lines, polygon sizes, triangles, flip
    // sites) is derived on demand from the face-key set; nothing to cache yet.
}

std::size_t DualArrangement::edge_count() const {
    std::size_t total = 0;
    for (const auto& c : circular_) total += c.size();
    return total;
}

std::vector<std::size_t> DualArrangement::boundary_lines(const std::string& key) const {
    if (!has_face(key)) throw SiteNotPresent("unknown face '" + key + "'");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lines_.size(); ++i)
        if (faces_.count(signvec::flip_one(key, i))) out.push_back(i);
    return out;
}

std::size_t DualArrangement::polygon_size(const std::string& key) const {
    return boundary_lines(key).size();
}

std::vector<std::string> DualArrangement::triangle_faces() const {
    std::vector<std::string> out;
    for (const auto& f : faces_)
        if (polygon_size(f) == 3) out.push_back(f);
    return out;
}

std::vector<FlipSite> DualArrangement::flip_sites() const {
    std::vector<FlipSite> out;
    for (const auto& f : triangle_faces()) {
        if (auto s = site_at(f)) out.push_back(std::move(*s));
    }
    return out;
}

std::optional<FlipSite> DualArrangement::site_at(const std::string& sigma) const {
    if (!has_face(sigma)) return std::nullopt;
    const auto bl = boundary_lines(sigma);
    if (bl.size() != 3) return std::nullopt;
    FlipSite s = make_flip_site({bl[0], bl[1], bl[2]}, sigma);
    for (int m = 0; m < 3; ++m) {
        if (!has_face(s.edge_neighbors[m]) || !has_face(s.vertex_neighbors[m]))
            return std::nullopt;
    }
    return s;
}

DualArrangement DualArrangement::apply_flip(const FlipSite& site) const {
    const auto current = site_at(site.sigma);
    if (!current || !(*current == site))
        throw SiteNotPresent("flip site is not present in this arrangement");
    DualArrangement next = *this;
    next.geometric_ = false;
    next.faces_.erase(site.sigma);
    next.faces_.insert(site.tau);
    next.derive_combinatorics();
    return next;
}

// ---------------------------------------------------------------------------
// Canonical view

std::string DualArrangement::to_canonical_key(const std::string& input_key) const {
    std::string out(input_key.size(), '+');
    for (std::size_t r = 0; r < canon_order_.size(); ++r) {
        const std::size_t m = canon_order_[r];
        const bool plus = (input_key[m] == '+') == (eta_[m] > 0);
        out[r] = plus ? '+' : '-';
    }
    return signvec::normalize(std::move(out));
}

std::string DualArrangement::from_canonical_key(const std::string& canonical_key) const {
    std::string out(canonical_key.size(), '+');
    for (std::size_t r = 0; r < canon_order_.size(); ++r) {
        const std::size_t m = canon_order_[r];
        const bool plus = (canonical_key[r] == '+') == (eta_[m] > 0);
        out[m] = plus ? '+' : '-';
    }
    return signvec::normalize(std::move(out));
}

std::set<std::string> DualArrangement::canonical_faces() const {
    std::set<std::string> out;
    for (const auto& f : faces_) out.insert(to_canonical_key(f));
    return out;
}

// ---------------------------------------------------------------------------
// Validation helpers

Vec3Z DualArrangement::interior_point(const std::string& key) const {
    if (!geometric_)
        throw InternalError("interior points require a geometric arrangement");
    if (lines_.size() < 3)
        throw InvalidInput("interior sampling needs n >= 3");
    if (!has_face(key)) throw SiteNotPresent("unknown face '" + key + "'");

    Vec3Z sum{0, 0, 0};
    std::size_t used = 0;
    for (const auto& v : vertices_) {
        // v is on the face's boundary iff the face's signs agree with the
        // vertex signs away from v's two lines, for one of the two vertex
        // orientations. Sum the aligned representatives: the equal-weight
        // combination of all extreme rays lies interior to the face cone.
        int align = 0; // +1: as stored, -1: negated, 0: not incident
        bool as_is = true, negated = true;
        for (std::size_t m = 0; m < lines_.size(); ++m) {
            if (m == v.i || m == v.j) continue;
            const int fs = key[m] == '+' ? 1 : -1;
            if (v.signs[m] != fs) as_is = false;
            if (v.signs[m] != -fs) negated = false;
        }
        if (as_is) align = 1;
        else if (negated) align = -1;
        if (align == 0) continue;
        for (int c = 0; c < 3; ++c) sum[c] += align * v.coords[c];
        ++used;
    }
    if (used < 3) throw InternalError("face with fewer than three boundary vertices");
    if (signs_at(sum) != key)
        throw InternalError("interior sample does not reproduce the face signs");
    return sum;
}

std::string DualArrangement::signs_at(const Vec3Z& point) const {
    std::string key(lines_.size(), '+');
    for (std::size_t m = 0; m < lines_.size(); ++m) {
        const int s = dot(reps_[m], point).sign();
        if (s == 0) throw InvalidInput("sample point lies on a line");
        key[m] = s > 0 ? '+' : '-';
    }
    return signvec::normalize(std::move(key));
}

std::string DualArrangement::dump_json() const {
    std::ostringstream os;
    os << "{\"lines\":[";
    for (std::size_t r = 0; r < canon_order_.size(); ++r) {
        const auto& k = lines_[canon_order_[r]].key;
        if (r) os << ",";
        os << "[\"" << k[0].str() << "\",\"" << k[1].str() << "\",\"" << k[2].str() << "\"]";
    }
    os << "],\"faces\":[";
    const auto cf = canonical_faces();
    bool first = true;
    for (const auto& f : cf) {
        if (!first) os << ",";
        first = false;
        os << '"' << f << '"';
    }
    os << "],\"triangles\":[";
    std::set<std::string> tris;
    for (const auto& t : triangle_faces()) tris.insert(to_canonical_key(t));
    first = true;
    for (const auto& t : tris) {
        if (!first) os << ",";
        first = false;
        os << '"' << t << '"';
    }
    os << "]}";
    return os.str();
}

} // namespace octaflip
