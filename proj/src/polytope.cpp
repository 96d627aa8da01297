#include "augnewton/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace augnewton {

namespace {

using I128 = __int128;

std::int64_t narrow(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("lattice coordinate exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

long long narrow_ll(const I128& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("count exceeds 64 bits");
    return static_cast<long long>(v);
}

I128 dot(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    I128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += I128(a[i]) * b[i];
    return acc;
}

std::int64_t floor_div(I128 a, I128 b) {
    I128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return narrow_ll(q);
}

std::int64_t ceil_div(I128 a, I128 b) {
    I128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0)))
        ++q;
    return narrow_ll(q);
}

void make_primitive(std::vector<Exponent>& normal, Exponent& offset) {
    Exponent g = 0;
    for (auto x : normal)
        g = std::gcd(g, x);
    g = std::gcd(g, offset);
    if (g > 1) {
        for (auto& x : normal)
            x /= g;
        offset /= g;
    }
}

}  // namespace

LatticeReduction lattice_reduce(const std::vector<ExponentVector>& points) {
    if (points.empty())
        throw std::invalid_argument("lattice_reduce: empty point set");
    const std::size_t k = points[0].size();
    const ExponentVector& v0 = points[0];

    if (points.size() == 1) {
        LatticeReduction out{0, {std::vector<Exponent>{}}, {v0, IntMatrix(0, k), IntMatrix(k, 0)}};
        return out;
    }

    IntMatrix diffs(points.size() - 1, k);
    for (std::size_t i = 1; i < points.size(); ++i) {
        ExponentVector d = points[i] - v0;
        for (std::size_t j = 0; j < k; ++j)
            diffs.at(i - 1, j) = d[j];
    }
    ColumnEchelonResult ce = column_echelon(diffs);
    const int d = ce.rank;

    IntMatrix basis(d, k);
    for (int r = 0; r < d; ++r)
        for (std::size_t c = 0; c < k; ++c)
            basis.at(r, c) = ce.v_inv.at(r, c);
    IntMatrix proj(k, d);
    for (std::size_t r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c)
            proj.at(r, c) = ce.v.at(r, c);

    LatticeReduction out{d, {}, {v0, std::move(basis), std::move(proj)}};
    out.reduced.reserve(points.size());
    for (const auto& p : points) {
        ExponentVector delta = p - v0;
        std::vector<Exponent> y(d);
        for (int c = 0; c < d; ++c) {
            BigInt acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                acc += BigInt(delta[j]) * out.map.proj.at(j, c);
            y[c] = narrow(acc);
        }
        // round-trip check: y * basis must reproduce the difference exactly
        for (std::size_t j = 0; j < k; ++j) {
            BigInt acc = 0;
            for (int c = 0; c < d; ++c)
                acc += BigInt(y[c]) * out.map.basis.at(c, j);
            if (acc != delta[j])
                throw std::logic_error("lattice_reduce: saturation round-trip failed");
        }
        out.reduced.push_back(std::move(y));
    }
    return out;
}

namespace {

ExponentVector to_ambient(const AffineReduction& map, const std::vector<Exponent>& y) {
    const std::size_t k = map.base.size();
    std::vector<Exponent> out(k);
    for (std::size_t j = 0; j < k; ++j) {
        BigInt acc = map.base[j];
        for (std::size_t c = 0; c < y.size(); ++c)
            acc += BigInt(y[c]) * map.basis.at(c, j);
        out[j] = narrow(acc);
    }
    return ExponentVector(std::move(out));
}

I128 cross2(const std::vector<Exponent>& o, const std::vector<Exponent>& a,
            const std::vector<Exponent>& b) {
    return I128(a[0] - o[0]) * (b[1] - o[1]) - I128(a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns hull vertices in counterclockwise boundary
// order with no collinear points retained.
std::vector<std::vector<Exponent>> hull_2d(std::vector<std::vector<Exponent>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    std::vector<std::vector<Exponent>> h(2 * n);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (m >= 2 && cross2(h[m - 2], h[m - 1], pts[i]) <= 0)
            --m;
        h[m++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = m + 1; i-- > 0;) {
        while (m >= lower && cross2(h[m - 2], h[m - 1], pts[i]) <= 0)
            --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

std::array<Exponent, 3> cross3(const std::vector<Exponent>& u, const std::vector<Exponent>& v) {
    auto comp = [](I128 x) {
        if (x > std::numeric_limits<Exponent>::max() || x < std::numeric_limits<Exponent>::min())
            throw std::overflow_error("facet normal exceeds 64 bits");
        return static_cast<Exponent>(x);
    };
    return {comp(I128(u[1]) * v[2] - I128(u[2]) * v[1]),
            comp(I128(u[2]) * v[0] - I128(u[0]) * v[2]),
            comp(I128(u[0]) * v[1] - I128(u[1]) * v[0])};
}

std::vector<Facet> facets_3d(const std::vector<std::vector<Exponent>>& pts) {
    std::map<std::pair<std::vector<Exponent>, Exponent>, bool> seen;
    std::vector<Facet> facets;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                std::vector<Exponent> u(3), v(3);
                for (int c = 0; c < 3; ++c) {
                    u[c] = pts[j][c] - pts[i][c];
                    v[c] = pts[l][c] - pts[i][c];
                }
                auto nc = cross3(u, v);
                std::vector<Exponent> normal(nc.begin(), nc.end());
                if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0)
                    continue;
                I128 c0 = dot(normal, pts[i]);
                bool le = true, ge = true;
                for (const auto& q : pts) {
                    I128 val = dot(normal, q);
                    le = le && val <= c0;
                    ge = ge && val >= c0;
                    if (!le && !ge)
                        break;
                }
                if (!le && !ge)
                    continue;
                if (!le) {
                    for (auto& x : normal)
                        x = -x;
                    c0 = -c0;
                }
                Exponent off = narrow_ll(c0);
                make_primitive(normal, off);
                if (!seen.emplace(std::make_pair(normal, off), true).second)
                    continue;
                facets.push_back({std::move(normal), off});
            }
    return facets;
}

int active_rank(const std::vector<const std::vector<Exponent>*>& normals) {
    // rank over Q of up to 3-dim integer vectors, Gaussian elimination
    if (normals.empty())
        return 0;
    const std::size_t d = normals[0]->size();
    std::vector<std::vector<BigInt>> m;
    for (const auto* n : normals)
        m.emplace_back(n->begin(), n->end());
    int rank = 0;
    for (std::size_t c = 0; c < d && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][c] == 0)
                continue;
            BigInt f = m[r][c], g = m[rank][c];
            for (std::size_t cc = 0; cc < d; ++cc)
                m[r][cc] = m[r][cc] * g - m[rank][cc] * f;
        }
        ++rank;
    }
    return rank;
}

// Facets of a d-simplex from its d+1 affinely independent reduced vertices.
std::vector<Facet> facets_simplex(const std::vector<std::vector<Exponent>>& verts) {
    const std::size_t d = verts[0].size();
    std::vector<Facet> facets;
    for (std::size_t omit = 0; omit < verts.size(); ++omit) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != omit)
                rest.push_back(i);
        IntMatrix diffs(d - 1, d);
        for (std::size_t r = 1; r < rest.size(); ++r)
            for (std::size_t c = 0; c < d; ++c)
                diffs.at(r - 1, c) = verts[rest[r]][c] - verts[rest[0]][c];
        ColumnEchelonResult ce = column_echelon(diffs);
        if (ce.rank != static_cast<int>(d) - 1)
            throw std::logic_error("simplex facet is degenerate");
        // the last column of v spans the integer kernel of diffs
        std::vector<Exponent> normal(d);
        for (std::size_t i = 0; i < d; ++i)
            normal[i] = ce.v.at(i, d - 1);
        I128 off = dot(normal, verts[rest[0]]);
        I128 side = dot(normal, verts[omit]);
        if (side == off)
            throw std::logic_error("simplex vertex lies on its opposite facet");
        if (side > off) {
            for (auto& x : normal)
                x = -x;
            off = -off;
        }
        Exponent o = narrow_ll(off);
        make_primitive(normal, o);
        facets.push_back({std::move(normal), o});
    }
    return facets;
}

}  // namespace

LatticePolytope newton_polytope(const LaurentPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial has no Newton polytope");
    LatticeReduction red = lattice_reduce(p.support());
    LatticePolytope out;
    out.ambient_dim = p.vars().size();
    out.dim = red.dim;
    out.reduction = red.map;

    const int d = red.dim;
    if (d == 0) {
        out.reduced_vertices = {{}};
    } else if (d == 1) {
        Exponent lo = red.reduced[0][0], hi = lo;
        for (const auto& y : red.reduced) {
            lo = std::min(lo, y[0]);
            hi = std::max(hi, y[0]);
        }
        out.reduced_vertices = {{lo}, {hi}};
        out.facets = {{{1}, hi}, {{-1}, -lo}};
    } else if (d == 2) {
        out.hull_cycle = hull_2d(red.reduced);
        out.reduced_vertices = out.hull_cycle;
        const std::size_t m = out.hull_cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            const auto& a = out.hull_cycle[i];
            const auto& b = out.hull_cycle[(i + 1) % m];
            // outward normal of a counterclockwise edge
            std::vector<Exponent> normal = {b[1] - a[1], a[0] - b[0]};
            Exponent off = narrow_ll(dot(normal, a));
            make_primitive(normal, off);
            out.facets.push_back({std::move(normal), off});
        }
    } else if (d == 3) {
        out.facets = facets_3d(red.reduced);
        for (const auto& y : red.reduced) {
            std::vector<const std::vector<Exponent>*> active;
            for (const auto& f : out.facets)
                if (dot(f.normal, y) == f.offset)
                    active.push_back(&f.normal);
            if (active_rank(active) == 3)
                out.reduced_vertices.push_back(y);
        }
    } else {
        if (red.reduced.size() != static_cast<std::size_t>(d) + 1)
            throw UnsupportedDimension(
                "intrinsic dimension " + std::to_string(d) +
                " is supported only for simplices (d+1 support points)");
        out.reduced_vertices = red.reduced;
        out.facets = facets_simplex(red.reduced);
    }

    for (const auto& y : out.reduced_vertices)
        out.vertices.push_back(to_ambient(out.reduction, y));
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

namespace {

// Lattice points of the polytope on the axis-`free` line through `fixed`
// (fixed has the polytope's dimension, with the free coordinate ignored).
struct LineSlice {
    bool empty = true;
    Exponent lo = 0, hi = 0;
    bool all_boundary = false;
};

LineSlice slice(const std::vector<Facet>& facets, const std::vector<Exponent>& fixed,
                std::size_t free) {
    I128 lo = std::numeric_limits<std::int64_t>::min();
    I128 hi = std::numeric_limits<std::int64_t>::max();
    bool all_boundary = false;
    for (const auto& f : facets) {
        I128 rest = 0;
        for (std::size_t i = 0; i < f.normal.size(); ++i)
            if (i != free)
                rest += I128(f.normal[i]) * fixed[i];
        const Exponent c = f.normal[free];
        if (c == 0) {
            if (rest > f.offset)
                return {};
            if (rest == f.offset)
                all_boundary = true;
        } else if (c > 0) {
            hi = std::min<I128>(hi, floor_div(I128(f.offset) - rest, c));
        } else {
            lo = std::max<I128>(lo, ceil_div(I128(f.offset) - rest, c));
        }
    }
    if (lo > hi)
        return {};
    return {false, narrow_ll(lo), narrow_ll(hi), all_boundary};
}

bool tight_on_any(const std::vector<Facet>& facets, const std::vector<Exponent>& pt) {
    for (const auto& f : facets)
        if (dot(f.normal, pt) == f.offset)
            return true;
    return false;
}

Counts count_by_sweep(const LatticePolytope& p) {
    const int d = p.dim;
    std::vector<Exponent> lo(d, std::numeric_limits<Exponent>::max());
    std::vector<Exponent> hi(d, std::numeric_limits<Exponent>::min());
    for (const auto& y : p.reduced_vertices)
        for (int c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], y[c]);
            hi[c] = std::max(hi[c], y[c]);
        }
    // sweep the widest axis; enumerate the others
    std::size_t free = 0;
    for (int c = 1; c < d; ++c)
        if (hi[c] - lo[c] > hi[free] - lo[free])
            free = c;
    std::vector<std::size_t> grid;
    for (int c = 0; c < d; ++c)
        if (static_cast<std::size_t>(c) != free)
            grid.push_back(c);

    Counts out;
    std::vector<Exponent> fixed(d, 0);
    std::vector<Exponent> cursor;
    for (auto g : grid)
        cursor.push_back(lo[g]);
    while (true) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            fixed[grid[i]] = cursor[i];
        LineSlice s = slice(p.facets, fixed, free);
        if (!s.empty) {
            const long long len = s.hi - s.lo + 1;
            out.total += len;
            if (s.all_boundary) {
                out.boundary += len;
            } else {
                std::vector<Exponent> pt = fixed;
                pt[free] = s.lo;
                if (tight_on_any(p.facets, pt))
                    ++out.boundary;
                if (s.hi != s.lo) {
                    pt[free] = s.hi;
                    if (tight_on_any(p.facets, pt))
                        ++out.boundary;
                }
            }
        }
        // odometer over the grid axes
        std::size_t i = 0;
        for (; i < grid.size(); ++i) {
            if (cursor[i] < hi[grid[i]]) {
                ++cursor[i];
                break;
            }
            cursor[i] = lo[grid[i]];
        }
        if (i == grid.size())
            break;
    }
    out.interior = out.total - out.boundary;
    return out;
}

}  // namespace

Counts count_lattice_points(const LatticePolytope& p) {
    if (p.dim == 0)
        return {1, 1, 0};
    if (p.dim == 1) {
        const Exponent lo = p.reduced_vertices[0][0];
        const Exponent hi = p.reduced_vertices[1][0];
        Counts out;
        out.total = hi - lo + 1;
        out.boundary = 2;
        out.interior = out.total - 2;
        return out;
    }
    return count_by_sweep(p);
}

namespace {

long long normalized_volume_of(const LatticePolytope& p) {
    const int d = p.dim;
    if (d == 0)
        return 0;
    if (d == 1)
        return p.reduced_vertices[1][0] - p.reduced_vertices[0][0];
    if (d == 2) {
        I128 twice_area = 0;
        const auto& h = p.hull_cycle;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& a = h[i];
            const auto& b = h[(i + 1) % h.size()];
            twice_area += I128(a[0]) * b[1] - I128(a[1]) * b[0];
        }
        return narrow_ll(twice_area < 0 ? -twice_area : twice_area);
    }
    if (p.reduced_vertices.size() == static_cast<std::size_t>(d) + 1) {
        IntMatrix edges(d, d);
        for (int r = 1; r <= d; ++r)
            for (int c = 0; c < d; ++c)
                edges.at(r - 1, c) = p.reduced_vertices[r][c] - p.reduced_vertices[0][c];
        BigInt det = det_bareiss(edges);
        return narrow(det < 0 ? -det : det);
    }
    // d == 3, non-simplex: pyramids from one vertex over the facets avoiding it
    const auto& apex = p.reduced_vertices[0];
    BigInt six_vol = 0;
    for (const auto& f : p.facets) {
        if (dot(f.normal, apex) == f.offset)
            continue;
        std::vector<std::vector<Exponent>> poly;
        for (const auto& v : p.reduced_vertices)
            if (dot(f.normal, v) == f.offset)
                poly.push_back(v);
        if (poly.size() < 3)
            throw std::logic_error("facet with fewer than three vertices");
        // order the facet polygon around its first vertex (convex, no ties)
        const auto& o = poly[0];
        std::vector<Exponent> u(3), w(3);
        for (int c = 0; c < 3; ++c)
            u[c] = poly[1][c] - o[c];
        auto wc = cross3(f.normal, u);
        w.assign(wc.begin(), wc.end());
        auto plane_coords = [&](const std::vector<Exponent>& q) {
            std::vector<Exponent> delta(3);
            for (int c = 0; c < 3; ++c)
                delta[c] = q[c] - o[c];
            return std::pair<I128, I128>(dot(delta, u), dot(delta, w));
        };
        std::sort(poly.begin() + 1, poly.end(),
                  [&](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
                      auto [ax, ay] = plane_coords(a);
                      auto [bx, by] = plane_coords(b);
                      // all points lie in the half plane w >= 0 seen from o
                      return ax * by - ay * bx > 0;
                  });
        for (std::size_t t = 1; t + 1 < poly.size(); ++t) {
            std::vector<std::vector<BigInt>> tet(3, std::vector<BigInt>(3));
            const std::vector<Exponent>* tri[3] = {&poly[0], &poly[t], &poly[t + 1]};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    tet[r][c] = BigInt((*tri[r])[c]) - apex[c];
            BigInt det = tet[0][0] * (tet[1][1] * tet[2][2] - tet[1][2] * tet[2][1]) -
                         tet[0][1] * (tet[1][0] * tet[2][2] - tet[1][2] * tet[2][0]) +
                         tet[0][2] * (tet[1][0] * tet[2][1] - tet[1][1] * tet[2][0]);
            six_vol += det < 0 ? -det : det;
        }
    }
    return narrow(six_vol);
}

}  // namespace

Fingerprint fingerprint_of(const LatticePolytope& p) {
    Counts c = count_lattice_points(p);
    Fingerprint fp;
    fp.intrinsic_dim = p.dim;
    fp.total = c.total;
    fp.boundary = c.boundary;
    fp.interior = c.interior;
    fp.normalized_volume = normalized_volume_of(p);
    if (fp.intrinsic_dim == 2 &&
        2 * fp.interior + fp.boundary - 2 != *fp.normalized_volume)
        throw std::logic_error("Pick identity violated; counting bug");
    return fp;
}

Fingerprint fingerprint(const LaurentPoly& p) {
    return fingerprint_of(newton_polytope(p));
}

LaurentPoly embed(const LaurentPoly& p, const IntMatrix& iota) {
    if (p.vars().size() != 2)
        throw std::invalid_argument("embed expects a polynomial in exactly 2 variables");
    if (iota.cols() != 2)
        throw std::invalid_argument("embedding map must have 2 columns");
    std::vector<std::string> names = p.vars().names();
    for (std::size_t i = 0; i < iota.rows(); ++i) {
        std::string fresh = "e" + std::to_string(i + 1);
        while (std::find(names.begin(), names.end(), fresh) != names.end())
            fresh += "_";
        names.push_back(fresh);
    }
    VariableList ext(std::move(names));
    std::vector<ExponentVector> support;
    support.reserve(p.support().size());
    for (const auto& e : p.support()) {
        std::vector<Exponent> v = {e[0], e[1]};
        for (std::size_t r = 0; r < iota.rows(); ++r)
            v.push_back(checked_add(checked_mul(iota.at(r, 0), e[0]),
                                    checked_mul(iota.at(r, 1), e[1])));
        support.emplace_back(std::move(v));
    }
    return LaurentPoly(std::move(ext), std::move(support));
}

LaurentPoly apply_unimodular(const LaurentPoly& p, const IntMatrix& a,
                             const ExponentVector& t) {
    const std::size_t k = p.vars().size();
    if (a.rows() != k || a.cols() != k || t.size() != k)
        throw std::invalid_argument("unimodular map has the wrong shape");
    if (!is_unimodular(a))
        throw std::invalid_argument("matrix is not unimodular");
    std::vector<ExponentVector> support;
    support.reserve(p.support().size());
    for (const auto& e : p.support()) {
        std::vector<Exponent> v(k);
        for (std::size_t i = 0; i < k; ++i) {
            Exponent acc = t[i];
            for (std::size_t j = 0; j < k; ++j)
                acc = checked_add(acc, checked_mul(a.at(i, j), e[j]));
            v[i] = acc;
        }
        support.emplace_back(std::move(v));
    }
    return LaurentPoly(p.vars(), std::move(support));
}

bool is_simplex_unimodular_standard(const LatticePolytope& p) {
    const int d = p.dim;
    if (p.reduced_vertices.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("polytope is not a simplex");
    if (d == 0)
        return true;
    IntMatrix edges(d, d);
    for (int r = 1; r <= d; ++r)
        for (int c = 0; c < d; ++c)
            edges.at(r - 1, c) = p.reduced_vertices[r][c] - p.reduced_vertices[0][c];
    return is_unimodular(edges);
}

}  // namespace augnewton
