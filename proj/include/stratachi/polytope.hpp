#pragma once

#include <stratachi/feasibility.hpp>
#include <stratachi/linalg.hpp>
#include <stratachi/point.hpp>
#include <stratachi/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stratachi {

namespace detail {

/// Simplicial facet of an intermediate hull. `verts`/`nbrs` have length r
/// (the hull dimension); nbrs[s] is the facet across the ridge obtained by
/// dropping verts[s]. The supporting hyperplane is dot(normal, x) = offset
/// with the hull on the <= side.
struct Facet {
    std::vector<int> verts;
    std::vector<int> nbrs;
    Vec normal;
    Rational offset;
    bool alive = true;
};

/// Incremental beneath-beyond hull over exact rationals. Points must span
/// R^r affinely; `simplex` lists r+1 affinely independent indices. Facets of
/// non-simplicial faces stay triangulated; volume does not depend on the
/// triangulation chosen.
class HullBuilder {
public:
    HullBuilder(const std::vector<Vec>& pts, const std::vector<int>& simplex) : pts_(pts) {
        const std::size_t r = simplex.size() - 1;
        centroid_.assign(r, Rational(0));
        for (int idx : simplex)
            for (std::size_t j = 0; j < r; ++j) centroid_[j] += pts_[static_cast<std::size_t>(idx)][j];
        for (auto& c : centroid_) c /= Rational(static_cast<int>(r + 1));

        for (std::size_t i = 0; i <= r; ++i) {
            Facet f;
            for (std::size_t j = 0; j <= r; ++j)
                if (j != i) f.verts.push_back(simplex[j]);
            for (std::size_t j = 0; j <= r; ++j)
                if (j != i) f.nbrs.push_back(static_cast<int>(j));
            orient(f);
            facets_.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (std::find(simplex.begin(), simplex.end(), static_cast<int>(i)) == simplex.end())
                insert(static_cast<int>(i));
        }
    }

    bool saw_coplanarity() const { return saw_coplanarity_; }
    const std::vector<Facet>& facets() const { return facets_; }

    Rational cone_volume() const {
        const std::size_t r = centroid_.size();
        Rational total = 0;
        for (const auto& f : facets_) {
            if (!f.alive) continue;
            Mat rows;
            rows.reserve(r);
            for (int v : f.verts) {
                Vec row = pts_[static_cast<std::size_t>(v)];
                for (std::size_t j = 0; j < r; ++j) row[j] -= centroid_[j];
                rows.push_back(std::move(row));
            }
            Rational det = determinant(std::move(rows));
            total += (det < 0) ? -det : det;
        }
        return total / Rational(factorial(static_cast<int>(r)));
    }

    /// Indices of points that are extreme in the hull. Facet corners are a
    /// superset of the vertex set whenever a point landed exactly on a
    /// supporting hyperplane; in that case corners are filtered face by face
    /// with exact linear feasibility.
    std::vector<int> vertex_indices() const {
        std::vector<int> corners;
        for (const auto& f : facets_)
            if (f.alive) corners.insert(corners.end(), f.verts.begin(), f.verts.end());
        std::sort(corners.begin(), corners.end());
        corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
        if (!saw_coplanarity_) return corners;

        // Group facets by supporting hyperplane; a corner is a hull vertex
        // iff it is extreme within every face it lies on.
        std::map<std::pair<std::vector<std::string>, std::string>, std::vector<int>> faces;
        for (const auto& f : facets_) {
            if (!f.alive) continue;
            std::vector<std::string> nkey;
            for (const auto& x : f.normal) nkey.push_back(x.str());
            auto& members = faces[{std::move(nkey), f.offset.str()}];
            members.insert(members.end(), f.verts.begin(), f.verts.end());
        }
        std::map<int, std::vector<const std::vector<int>*>> corner_faces;
        for (auto& [key, members] : faces) {
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            for (int v : members) corner_faces[v].push_back(&members);
        }
        std::vector<int> out;
        for (int v : corners) {
            bool extreme = true;
            for (const auto* members : corner_faces[v]) {
                std::vector<RationalPoint> others;
                others.reserve(members->size());
                for (int w : *members)
                    if (w != v) others.emplace_back(pts_[static_cast<std::size_t>(w)]);
                if (in_convex_hull(others, RationalPoint(pts_[static_cast<std::size_t>(v)]))) {
                    extreme = false;
                    break;
                }
            }
            if (extreme) out.push_back(v);
        }
        return out;
    }

private:
    void orient(Facet& f) {
        const std::size_t r = centroid_.size();
        std::vector<Vec> edges;
        edges.reserve(r - 1);
        const Vec& v0 = pts_[static_cast<std::size_t>(f.verts[0])];
        for (std::size_t j = 1; j < r; ++j) {
            Vec e = pts_[static_cast<std::size_t>(f.verts[j])];
            for (std::size_t c = 0; c < r; ++c) e[c] -= v0[c];
            edges.push_back(std::move(e));
        }
        f.normal = cross_normal(edges);
        make_primitive(f.normal);
        f.offset = dot(f.normal, v0);
        const Rational side = dot(f.normal, centroid_);
        if (side == f.offset) throw std::runtime_error("internal error: degenerate facet");
        if (side > f.offset) {
            for (auto& x : f.normal) x = -x;
            f.offset = -f.offset;
        }
    }

    void insert(int pi) {
        const Vec& p = pts_[static_cast<std::size_t>(pi)];
        std::vector<int> visible;
        for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
            if (!facets_[fi].alive) continue;
            const Rational side = dot(facets_[fi].normal, p) - facets_[fi].offset;
            if (side > 0)
                visible.push_back(static_cast<int>(fi));
            else if (side == 0)
                saw_coplanarity_ = true;
        }
        if (visible.empty()) return;

        std::vector<char> is_visible(facets_.size(), 0);
        for (int fi : visible) is_visible[static_cast<std::size_t>(fi)] = 1;

        // Horizon: ridges between a visible facet and a surviving neighbor.
        struct HorizonEdge {
            std::vector<int> ridge;
            int outside;  // surviving facet
            int dead;     // visible facet it was attached to
        };
        std::vector<HorizonEdge> horizon;
        for (int fi : visible) {
            const Facet& f = facets_[static_cast<std::size_t>(fi)];
            for (std::size_t s = 0; s < f.verts.size(); ++s) {
                const int g = f.nbrs[s];
                if (is_visible[static_cast<std::size_t>(g)]) continue;
                HorizonEdge h;
                for (std::size_t j = 0; j < f.verts.size(); ++j)
                    if (j != s) h.ridge.push_back(f.verts[j]);
                h.outside = g;
                h.dead = fi;
                horizon.push_back(std::move(h));
            }
        }
        for (int fi : visible) facets_[static_cast<std::size_t>(fi)].alive = false;

        // Cone the new point over the horizon; stitch new facets pairwise.
        std::map<std::vector<int>, std::pair<int, int>> open_ridges;  // ridge -> (facet, slot)
        for (const auto& h : horizon) {
            Facet nf;
            nf.verts = h.ridge;
            nf.verts.push_back(pi);
            nf.nbrs.assign(nf.verts.size(), -1);
            orient(nf);
            const int nfi = static_cast<int>(facets_.size());

            nf.nbrs[nf.verts.size() - 1] = h.outside;
            Facet& g = facets_[static_cast<std::size_t>(h.outside)];
            for (std::size_t s = 0; s < g.nbrs.size(); ++s)
                if (g.nbrs[s] == h.dead) g.nbrs[s] = nfi;

            facets_.push_back(std::move(nf));
            Facet& stored = facets_.back();
            for (std::size_t s = 0; s + 1 < stored.verts.size(); ++s) {
                std::vector<int> rkey;
                for (std::size_t j = 0; j < stored.verts.size(); ++j)
                    if (j != s) rkey.push_back(stored.verts[j]);
                std::sort(rkey.begin(), rkey.end());
                auto it = open_ridges.find(rkey);
                if (it == open_ridges.end()) {
                    open_ridges.emplace(std::move(rkey), std::make_pair(nfi, static_cast<int>(s)));
                } else {
                    const auto [oi, os] = it->second;
                    stored.nbrs[s] = oi;
                    facets_[static_cast<std::size_t>(oi)].nbrs[static_cast<std::size_t>(os)] = nfi;
                    open_ridges.erase(it);
                }
            }
        }
        if (!open_ridges.empty()) throw std::runtime_error("internal error: unmatched hull ridges");
    }

    const std::vector<Vec>& pts_;
    std::vector<Facet> facets_;
    Vec centroid_;
    bool saw_coplanarity_ = false;
};

}  // namespace detail

/// Convex polytope with exact rational vertices. Immutable after
/// construction: the canonical vertex set, affine dimension, ambient-dim
/// volume and the facet data used by contains() are all computed up front.
/// Two polytopes are equal iff their canonical vertex sets are equal.
class Polytope {
public:
    /// Hull of a nonempty set of points of uniform dimension.
    static Polytope hull_of(std::vector<RationalPoint> points) {
        if (points.empty()) throw std::invalid_argument("empty point set");
        const int d = points[0].dim();
        if (d < 1) throw std::invalid_argument("empty point set");
        for (const auto& p : points)
            if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        Polytope out;
        out.build(std::move(points), d);
        return out;
    }

    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }

    /// Canonical vertex set, sorted lexicographically.
    const std::vector<RationalPoint>& vertices() const { return vertices_; }

    /// Exact d-dimensional volume; zero whenever affine_dim < ambient_dim.
    const Rational& volume() const { return volume_; }

    bool operator==(const Polytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
    }
    bool operator!=(const Polytope& o) const { return !(*this == o); }

    /// Stable serialization of the canonical form; doubles as a cache key.
    const std::string& canonical_key() const { return key_; }

    /// Exact membership test against the stored facet description.
    bool contains(const RationalPoint& q) const {
        if (q.dim() != ambient_dim_) throw std::invalid_argument("dimension mismatch");
        Vec y;
        if (affine_dim_ == ambient_dim_) {
            y = q.coords;
        } else {
            // Map into chart coordinates; points off the affine span are out.
            Vec rhs(static_cast<std::size_t>(affine_dim_));
            for (int i = 0; i < affine_dim_; ++i) {
                const auto r = static_cast<std::size_t>(chart_pivot_rows_[static_cast<std::size_t>(i)]);
                rhs[static_cast<std::size_t>(i)] = q.coords[r] - vertices_[0].coords[r];
            }
            y.assign(static_cast<std::size_t>(affine_dim_), Rational(0));
            for (int i = 0; i < affine_dim_; ++i)
                for (int j = 0; j < affine_dim_; ++j)
                    y[static_cast<std::size_t>(i)] +=
                        chart_pivot_inv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        rhs[static_cast<std::size_t>(j)];
            for (int row = 0; row < ambient_dim_; ++row) {
                Rational lhs = vertices_[0].coords[static_cast<std::size_t>(row)];
                for (int j = 0; j < affine_dim_; ++j)
                    lhs += chart_basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)] *
                           y[static_cast<std::size_t>(j)];
                if (lhs != q.coords[static_cast<std::size_t>(row)]) return false;
            }
        }
        for (const auto& [normal, offset] : facets_)
            if (dot(normal, y) > offset) return false;
        return true;
    }

    Polytope translated(const RationalPoint& v) const {
        if (v.dim() != ambient_dim_) throw std::invalid_argument("dimension mismatch");
        Polytope out = *this;
        for (auto& p : out.vertices_) p = p + v;
        if (affine_dim_ == ambient_dim_)
            for (auto& [normal, offset] : out.facets_) offset += dot(normal, v.coords);
        out.rebuild_key();
        return out;
    }

    /// Dilation by a nonnegative rational factor; scaled(0) is the origin.
    Polytope scaled(const Rational& factor) const {
        if (factor < 0) throw std::invalid_argument("negative scale factor");
        if (factor == 0) return hull_of({origin_point(ambient_dim_)});
        Polytope out = *this;
        for (auto& p : out.vertices_) p = p.scaled(factor);
        for (auto& [normal, offset] : out.facets_) offset *= factor;
        out.volume_ = volume_ * pow_rational(factor, ambient_dim_);
        out.rebuild_key();
        return out;
    }

    /// Deletes one coordinate; the image of a hull is the hull of the image.
    Polytope project_out(int axis) const {
        if (axis < 0 || axis >= ambient_dim_) throw std::invalid_argument("axis out of range");
        if (ambient_dim_ < 2) throw std::invalid_argument("cannot project a 1-dimensional polytope");
        std::vector<RationalPoint> pts;
        pts.reserve(vertices_.size());
        for (const auto& v : vertices_) {
            Vec c;
            c.reserve(static_cast<std::size_t>(ambient_dim_ - 1));
            for (int j = 0; j < ambient_dim_; ++j)
                if (j != axis) c.push_back(v.coords[static_cast<std::size_t>(j)]);
            pts.emplace_back(std::move(c));
        }
        return hull_of(std::move(pts));
    }

private:
    Polytope() = default;

    void build(std::vector<RationalPoint> pts, int d) {
        ambient_dim_ = d;

        // Affine span scan; pivot points double as the initial simplex.
        EchelonBasis span(d);
        std::vector<int> pivots;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            Vec diff = pts[i].coords;
            for (int j = 0; j < d; ++j) diff[static_cast<std::size_t>(j)] -= pts[0].coords[static_cast<std::size_t>(j)];
            if (span.add(std::move(diff))) pivots.push_back(static_cast<int>(i));
            if (span.rank() == d) break;
        }
        affine_dim_ = span.rank();

        if (affine_dim_ == 0) {
            vertices_ = {pts[0]};
            volume_ = 0;
            rebuild_key();
            return;
        }

        std::vector<Vec> work;
        if (affine_dim_ == d) {
            work.reserve(pts.size());
            for (const auto& p : pts) work.push_back(p.coords);
        } else {
            prepare_chart(pts, pivots);
            work = chart_coords(pts);
        }

        if (affine_dim_ == 1) {
            std::size_t lo = 0, hi = 0;
            for (std::size_t i = 1; i < work.size(); ++i) {
                if (work[i][0] < work[lo][0]) lo = i;
                if (work[i][0] > work[hi][0]) hi = i;
            }
            volume_ = (d == 1) ? work[hi][0] - work[lo][0] : Rational(0);
            facets_ = {{Vec{Rational(1)}, work[hi][0]}, {Vec{Rational(-1)}, -work[lo][0]}};
            finish(pts, {static_cast<int>(lo), static_cast<int>(hi)});
            return;
        }

        std::vector<int> simplex = {0};
        simplex.insert(simplex.end(), pivots.begin(), pivots.end());
        detail::HullBuilder hull(work, simplex);
        volume_ = (affine_dim_ == d) ? hull.cone_volume() : Rational(0);
        for (const auto& f : hull.facets())
            if (f.alive) facets_.emplace_back(f.normal, f.offset);
        finish(pts, hull.vertex_indices());
    }

    // Chart for polytopes of deficient dimension: x = origin + B y with B the
    // pivot difference vectors as columns; pivot rows make B invertible.
    void prepare_chart(const std::vector<RationalPoint>& pts, const std::vector<int>& pivots) {
        const int r = affine_dim_;
        chart_basis_.clear();
        for (int idx : pivots) {
            Vec col = pts[static_cast<std::size_t>(idx)].coords;
            for (int j = 0; j < ambient_dim_; ++j)
                col[static_cast<std::size_t>(j)] -= pts[0].coords[static_cast<std::size_t>(j)];
            chart_basis_.push_back(std::move(col));
        }
        EchelonBasis rows(r);
        chart_pivot_rows_.clear();
        for (int row = 0; row < ambient_dim_ && static_cast<int>(chart_pivot_rows_.size()) < r; ++row) {
            Vec v(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j)
                v[static_cast<std::size_t>(j)] = chart_basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
            if (rows.add(std::move(v))) chart_pivot_rows_.push_back(row);
        }
        Mat square(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                square[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    chart_basis_[static_cast<std::size_t>(j)]
                                [static_cast<std::size_t>(chart_pivot_rows_[static_cast<std::size_t>(i)])];
        chart_pivot_inv_ = invert(square);
        chart_origin_ = pts[0];
    }

    std::vector<Vec> chart_coords(const std::vector<RationalPoint>& pts) const {
        const int r = affine_dim_;
        std::vector<Vec> out;
        out.reserve(pts.size());
        for (const auto& p : pts) {
            Vec rhs(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                const auto row = static_cast<std::size_t>(chart_pivot_rows_[static_cast<std::size_t>(i)]);
                rhs[static_cast<std::size_t>(i)] = p.coords[row] - chart_origin_.coords[row];
            }
            Vec y(static_cast<std::size_t>(r), Rational(0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    y[static_cast<std::size_t>(i)] +=
                        chart_pivot_inv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        rhs[static_cast<std::size_t>(j)];
            out.push_back(std::move(y));
        }
        return out;
    }

    static Mat invert(Mat a) {
        const std::size_t n = a.size();
        Mat inv(n, Vec(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a[pivot][col] == 0) ++pivot;
            if (pivot == n) throw std::runtime_error("internal error: singular chart matrix");
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            const Rational s = Rational(1) / a[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[col][j] *= s;
                inv[col][j] *= s;
            }
            for (std::size_t row = 0; row < n; ++row) {
                if (row == col || a[row][col] == 0) continue;
                const Rational f = a[row][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[row][j] -= f * a[col][j];
                    inv[row][j] -= f * inv[col][j];
                }
            }
        }
        return inv;
    }

    void finish(const std::vector<RationalPoint>& pts, std::vector<int> vertex_idx) {
        vertices_.clear();
        vertices_.reserve(vertex_idx.size());
        for (int i : vertex_idx) vertices_.push_back(pts[static_cast<std::size_t>(i)]);
        std::sort(vertices_.begin(), vertices_.end());
        // The chart references vertices_[0]; keep it equal to the scan origin,
        // which is the lexicographic minimum and hence always a vertex.
        rebuild_key();
    }

    void rebuild_key() {
        key_ = "d" + std::to_string(ambient_dim_) + "|";
        for (const auto& v : vertices_) {
            for (const auto& c : v.coords) {
                key_ += c.str();
                key_ += ',';
            }
            key_ += ';';
        }
        if (affine_dim_ != ambient_dim_ && affine_dim_ > 0) chart_origin_ = vertices_[0];
    }

    int ambient_dim_ = 0;
    int affine_dim_ = 0;
    std::vector<RationalPoint> vertices_;
    Rational volume_ = 0;
    std::string key_;
    std::vector<std::pair<Vec, Rational>> facets_;  // chart coords when degenerate
    std::vector<Vec> chart_basis_;                  // columns, ambient length
    std::vector<int> chart_pivot_rows_;
    Mat chart_pivot_inv_;
    RationalPoint chart_origin_;
};

/// The polytope spanned by a point set.
inline Polytope convex_hull(const std::vector<RationalPoint>& points) {
    return Polytope::hull_of(points);
}

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<RationalPoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices()) sums.push_back(p + q);
    return Polytope::hull_of(std::move(sums));
}

inline Polytope scale(const Polytope& a, const Rational& factor) { return a.scaled(factor); }

inline Rational volume(const Polytope& a) { return a.volume(); }

}  // namespace stratachi
