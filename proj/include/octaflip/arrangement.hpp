#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "octaflip/projective.hpp"

namespace octaflip {

/// Face keys are sign vectors: one '+'/'-' per line, normalized so the first
/// character is '+' (projective sign vectors are defined up to global
/// negation). Coordinate order and sign basis depend on the arrangement that
/// issued the key; see DualArrangement.
namespace signvec {

std::string normalize(std::string key);
std::string flip_one(std::string key, std::size_t i);
std::string flip_three(std::string key, const std::array<std::size_t, 3>& triple);

} // namespace signvec

/// A Desargues flip site: a triangular face together with its hexagon.
/// For each line m of the triple, edge_neighbor[m] is sigma with coordinate m
/// negated and vertex_neighbor[m] is sigma with the other two coordinates of
/// the triple negated; these are the three opposite pairs of the flip formula.
/// tau (sigma with all three negated) is the face that replaces sigma; it is
/// not a face before the flip except when n = 3, where tau == sigma.
struct FlipSite {
    std::array<std::size_t, 3> triple; // line indices, ascending
    std::string sigma;
    std::array<std::string, 3> edge_neighbors;
    std::array<std::string, 3> vertex_neighbors;
    std::string tau;

    /// The reverse site: same triple, collapsing face tau.
    FlipSite reversed() const;
    bool operator==(const FlipSite& o) const = default;
};

/// Builds the site rooted at `sigma` for `triple` without consulting any
/// arrangement (pure sign-vector algebra).
FlipSite make_flip_site(const std::array<std::size_t, 3>& triple, const std::string& sigma);

/// Combinatorial line arrangement of the real projective plane, dual to the
/// moving point configuration. Faces are keyed by normalized sign vectors in
/// *input line order*, with signs taken against each line's stored
/// representative. Two bases coexist:
///   - input basis: coordinate m is the m-th input line, sign against rep(m).
///     Representatives chosen by the caller vary continuously along a motion,
///     which makes keys comparable across nearby times.
///   - canonical basis: coordinates sorted by canonical line key and signs
///     taken against canonical representatives. Stable under relabelling and
///     across rebuilds from the same line set; used for all exported data.
class DualArrangement {
public:
    /// Geometric construction from the dual lines of a generic configuration.
    static DualArrangement from_configuration(const Configuration& c);
    /// Geometric construction from explicit line representatives (each rep is
    /// a nonzero homogeneous coefficient triple; orientation is preserved).
    static DualArrangement from_line_reps(const std::vector<Vec3Q>& reps);

    std::size_t n() const { return lines_.size(); }
    const std::vector<ProjLine>& lines() const { return lines_; }
    const Vec3Q& rep(std::size_t i) const { return reps_[i]; }

    struct Vertex {
        std::size_t i, j;          // the two lines crossing here, i < j
        Vec3Z coords;              // canonical representative
        std::vector<int> signs;    // sign against rep(m); 0 at i and j
    };
    const std::vector<Vertex>& vertices() const { return vertices_; }
    /// Vertex ids in circular order along each line.
    const std::vector<std::vector<std::size_t>>& circular_orders() const { return circular_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const;
    std::size_t face_count() const { return faces_.size(); }

    const std::set<std::string>& faces() const { return faces_; }
    bool has_face(const std::string& key) const { return faces_.count(key) != 0; }
    /// Lines bounding the face (those whose single-coordinate flip is a face).
    std::vector<std::size_t> boundary_lines(const std::string& key) const;
    /// Number of edges of the face polygon.
    std::size_t polygon_size(const std::string& key) const;
    std::vector<std::string> triangle_faces() const;

    std::vector<FlipSite> flip_sites() const;
    std::optional<FlipSite> site_at(const std::string& sigma) const;

    /// Combinatorial triangle inversion: the face set with sigma replaced by
    /// tau, adjacency re-derived. Vertex geometry is carried over unchanged
    /// and no longer describes the flipped faces. Throws SiteNotPresent.
    DualArrangement apply_flip(const FlipSite& site) const;

    // --- canonical view -----------------------------------------------------
    /// canonical_order()[r] = input index of the r-th line in canonical order.
    const std::vector<std::size_t>& canonical_order() const { return canon_order_; }
    int orientation_sign(std::size_t i) const { return eta_[i]; }
    std::string to_canonical_key(const std::string& input_key) const;
    std::string from_canonical_key(const std::string& canonical_key) const;
    std::set<std::string> canonical_faces() const;

    /// Exact interior sample point of a face (geometric arrangements with
    /// n >= 3 only): equal-weight sum of the face's aligned vertex rays.
    Vec3Z interior_point(const std::string& key) const;
    /// Sign vector read back from a sample point, in input basis, normalized.
    std::string signs_at(const Vec3Z& point) const;

    /// Debug dump: canonical lines, canonical face keys, triangle list.
    std::string dump_json() const;

private:
    DualArrangement() = default;
    void build_geometry();   // vertices, circular orders, faces
    void derive_combinatorics();

    std::vector<ProjLine> lines_;  // canonical, input order
    std::vector<Vec3Q> reps_;      // sign basis, input order
    std::vector<int> eta_;         // canonical key = eta * rep * positive scale
    std::vector<std::size_t> canon_order_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::size_t>> circular_;
    std::set<std::string> faces_;
    bool geometric_ = true;        // false after combinatorial flips
};

} // namespace octaflip
