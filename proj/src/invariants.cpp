#include "ribbongate/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ribbongate {

namespace {

void require_knot(const KnotDiagram& d, const char* op) {
    if (!d.is_knot())
        throw NotAKnot(std::string(op) + " needs a single-component diagram, got " +
                       std::to_string(d.component_count()) + " components");
}

// Over-arc generators: arcs glued through the over-strand of each crossing.
// A knot with n >= 1 crossings has exactly n generators.
struct OverArcs {
    std::vector<int> class_of;  // arc label -> generator index
    int count = 0;
};

OverArcs over_arc_classes(const KnotDiagram& d) {
    const int arcs = d.arc_count();
    std::vector<int> parent(static_cast<std::size_t>(arcs) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Crossing& c : d.crossings())
        parent[static_cast<std::size_t>(find(c.arcs[1]))] = find(c.arcs[3]);

    OverArcs oa;
    oa.class_of.assign(static_cast<std::size_t>(arcs) + 1, -1);
    std::map<int, int> index;
    for (int a = 1; a <= arcs; ++a) {
        auto [it, fresh] = index.emplace(find(a), oa.count);
        if (fresh) ++oa.count;
        oa.class_of[static_cast<std::size_t>(a)] = it->second;
    }
    if (oa.count != static_cast<int>(d.crossing_count()))
        throw InternalError("over-arc count " + std::to_string(oa.count) +
                            " differs from crossing count");
    return oa;
}

}  // namespace

std::vector<std::vector<LaurentPoly>> alexander_matrix(const KnotDiagram& d) {
    OverArcs oa = over_arc_classes(d);
    const std::size_t n = d.crossing_count();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));

    const LaurentPoly one_minus_t =
        laurent_sub(LaurentPoly::one(), LaurentPoly::term(1, 1));
    const LaurentPoly t = LaurentPoly::term(1, 1);
    const LaurentPoly minus_one = LaurentPoly(Zint(-1));

    for (std::size_t r = 0; r < n; ++r) {
        const Crossing& c = d.crossings()[r];
        auto j = static_cast<std::size_t>(oa.class_of[static_cast<std::size_t>(c.arcs[1])]);
        auto i = static_cast<std::size_t>(oa.class_of[static_cast<std::size_t>(c.arcs[0])]);
        auto k = static_cast<std::size_t>(oa.class_of[static_cast<std::size_t>(c.arcs[2])]);
        m[r][j] = laurent_add(m[r][j], one_minus_t);
        if (c.sign > 0) {
            m[r][i] = laurent_add(m[r][i], t);
            m[r][k] = laurent_add(m[r][k], minus_one);
        } else {
            m[r][i] = laurent_add(m[r][i], minus_one);
            m[r][k] = laurent_add(m[r][k], t);
        }
    }
    return m;
}

LaurentPoly laurent_matrix_det(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::one();

    LaurentPoly prev = LaurentPoly::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = laurent_sub(laurent_mul(m[k][k], m[i][j]),
                                              laurent_mul(m[i][k], m[k][j]));
                m[i][j] = num.is_zero() ? LaurentPoly() : laurent_div_exact(num, prev);
            }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly alexander_poly(const KnotDiagram& d) {
    require_knot(d, "alexander_poly");
    if (d.crossing_count() == 0) return LaurentPoly::one();

    auto m = alexander_matrix(d);
    const std::size_t n = m.size();
    m.pop_back();
    for (auto& row : m) row.pop_back();
    (void)n;

    LaurentPoly det = laurent_matrix_det(std::move(m));
    if (det.is_zero()) throw InternalError("Alexander determinant vanished on a knot");
    LaurentPoly norm = laurent_normalize(det);

    Zint at_one = laurent_eval(norm, 1);
    if (at_one != 1 && at_one != -1)
        throw InternalError("Alexander polynomial fails |eval(1)| = 1: " + norm.str());
    return norm;
}

namespace {

// Face 2-coloring; returns color per face id. Knot projections always admit
// one (every vertex of the projection graph has even degree).
std::vector<int> checkerboard(const KnotDiagram& d, const FaceData& fd) {
    std::vector<int> color(static_cast<std::size_t>(fd.face_count), -1);
    std::vector<int> queue;
    color[0] = 0;
    queue.push_back(0);
    // Edge adjacency: arc with tail slot (c,p) separates corners p and p-1.
    std::vector<std::pair<int, int>> edge_faces;
    for (int a = 1; a <= d.arc_count(); ++a) {
        auto t = d.arc_tail(a);
        int f1 = fd.corner_face[static_cast<std::size_t>(t.crossing)]
                               [static_cast<std::size_t>(t.pos)];
        int f2 = fd.corner_face[static_cast<std::size_t>(t.crossing)]
                               [static_cast<std::size_t>((t.pos + 3) % 4)];
        edge_faces.emplace_back(f1, f2);
    }
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (auto [f1, f2] : edge_faces) {
            if (f1 != f && f2 != f) continue;
            int g = f1 == f ? f2 : f1;
            if (color[static_cast<std::size_t>(g)] == -1) {
                color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
                queue.push_back(g);
            } else if (color[static_cast<std::size_t>(g)] ==
                       color[static_cast<std::size_t>(f)]) {
                throw InternalError("checkerboard coloring failed");
            }
        }
    }
    for (int c : color)
        if (c == -1) throw InternalError("disconnected face graph in checkerboard coloring");
    return color;
}

}  // namespace

IntMatrix goeritz_matrix(const KnotDiagram& d) {
    require_knot(d, "goeritz_matrix");
    if (d.crossing_count() == 0)
        throw BadParameter("goeritz_matrix needs at least one crossing");

    FaceData fd = trace_faces(d);
    std::vector<int> color = checkerboard(d, fd);

    // White is the smaller color class (smaller matrix); tie goes to the
    // class of face 0 so the choice stays deterministic.
    int count1 = 0;
    for (int c : color) count1 += c;
    int white = (2 * count1 < fd.face_count) ? 1 : (2 * count1 > fd.face_count ? 0 : color[0]);

    std::vector<int> white_index(static_cast<std::size_t>(fd.face_count), -1);
    int m = 0;
    for (int f = 0; f < fd.face_count; ++f)
        if (color[static_cast<std::size_t>(f)] == white) white_index[static_cast<std::size_t>(f)] = m++;

    IntMatrix g(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
        const auto& corners = fd.corner_face[c];
        // Corners alternate white/black around a crossing; the white pair
        // determines the crossing type relative to the shading.
        int base;
        if (color[static_cast<std::size_t>(corners[0])] == white &&
            color[static_cast<std::size_t>(corners[2])] == white)
            base = 0;
        else if (color[static_cast<std::size_t>(corners[1])] == white &&
                 color[static_cast<std::size_t>(corners[3])] == white)
            base = 1;
        else
            throw InternalError("white corners are not opposite at crossing " +
                                std::to_string(c));
        int eta = base == 0 ? +1 : -1;
        int u = white_index[static_cast<std::size_t>(corners[static_cast<std::size_t>(base)])];
        int v = white_index[static_cast<std::size_t>(
            corners[static_cast<std::size_t>(base + 2)])];
        if (u == v) continue;
        g.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) -= eta;
        g.at(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) -= eta;
    }
    for (int u = 0; u < m; ++u) {
        Zint row_sum = 0;
        for (int v = 0; v < m; ++v)
            if (v != u) row_sum += g.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        g.at(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) = -row_sum;
    }

    // Reduced form: drop the last region's row and column.
    IntMatrix reduced(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i)
        for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(m); ++j)
            reduced.at(i, j) = g.at(i, j);
    return reduced;
}

Zint determinant_knot(const KnotDiagram& d) {
    require_knot(d, "determinant_knot");
    if (d.crossing_count() == 0) return 1;

    // |Delta(-1)| via the Alexander matrix evaluated at t = -1: all three
    // entry kinds become {2, -1, -1}, so the rows no longer depend on sign.
    OverArcs oa = over_arc_classes(d);
    const std::size_t n = d.crossing_count();
    IntMatrix a(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        const Crossing& c = d.crossings()[r];
        auto add = [&](int arc, Zint val) {
            auto col = static_cast<std::size_t>(oa.class_of[static_cast<std::size_t>(arc)]);
            if (col + 1 < n) a.at(r, col) += val;
        };
        add(c.arcs[1], 2);
        add(c.arcs[0], -1);
        add(c.arcs[2], -1);
    }
    Zint det = abs(det_exact(a));

    Zint goeritz_det = abs(det_exact(goeritz_matrix(d)));
    if (det != goeritz_det)
        throw InternalError("determinant routes disagree: Alexander " + det.str() +
                            " vs Goeritz " + goeritz_det.str());
    if (det < 1 || det % 2 == 0)
        throw InternalError("knot determinant must be odd and positive, got " + det.str());
    return det;
}

DoubleCoverHomology h1_double_cover(const KnotDiagram& d) {
    require_knot(d, "h1_double_cover");
    DoubleCoverHomology h;
    h.order = 1;
    if (d.crossing_count() == 0) return h;

    SnfResult s = snf(goeritz_matrix(d));
    for (const Zint& f : s.invariant_factors) {
        if (f == 0)
            throw InternalError("double-cover homology of a knot cannot be infinite");
        if (f == 1) continue;
        h.invariant_factors.push_back(f);
        h.order *= f;
    }
    return h;
}

std::size_t beta1_mod_p(const KnotDiagram& d, long long p) {
    if (p < 3 || !is_prime(p))
        throw BadParameter("beta1 needs an odd prime, got " + std::to_string(p));
    require_knot(d, "beta1_mod_p");
    if (d.crossing_count() == 0) return 0;

    DoubleCoverHomology h = h1_double_cover(d);
    std::size_t from_factors = 0;
    for (const Zint& f : h.invariant_factors)
        if (f % p == 0) ++from_factors;

    IntMatrix g = goeritz_matrix(d);
    std::size_t corank = g.rows() - rank_mod_p(g, p);
    if (corank != from_factors)
        throw InternalError("beta1 routes disagree: factors say " +
                            std::to_string(from_factors) + ", corank says " +
                            std::to_string(corank));
    return from_factors;
}

}  // namespace ribbongate
