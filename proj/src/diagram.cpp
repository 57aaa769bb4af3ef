#include "ribbongate/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace ribbongate {

namespace {

using Slot = KnotDiagram::SlotRef;

// Occurrence table: each arc label -> its (at most two) slots, in scan order.
std::vector<std::vector<Slot>> occurrences(const std::vector<std::array<int, 4>>& pd,
                                           int arc_count) {
    std::vector<std::vector<Slot>> occ(static_cast<std::size_t>(arc_count) + 1);
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int p = 0; p < 4; ++p) {
            int a = pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
            if (a < 1 || a > arc_count)
                throw InvalidDiagram(DiagramFault::DUPLICATE_ARC,
                                     "arc label " + std::to_string(a) + " outside 1.." +
                                         std::to_string(arc_count));
            occ[static_cast<std::size_t>(a)].push_back({c, p});
        }
    for (int a = 1; a <= arc_count; ++a)
        if (occ[static_cast<std::size_t>(a)].size() != 2)
            throw InvalidDiagram(DiagramFault::DUPLICATE_ARC,
                                 "arc " + std::to_string(a) + " occurs " +
                                     std::to_string(occ[static_cast<std::size_t>(a)].size()) +
                                     " times");
    return occ;
}

struct TraceResult {
    int components = 0;
    std::vector<std::array<bool, 4>> is_entry;  // slot consumed as strand entry
    std::vector<Slot> tail, head;               // per arc label
};

// Walk every strand through the diagram (in at slot i, out at slot i+2).
// enforce_convention additionally requires that under-out slots are never
// entered, which pins the global orientation against the PD convention.
TraceResult trace_strands(const std::vector<std::array<int, 4>>& pd, int arc_count,
                          bool enforce_convention) {
    const int n = static_cast<int>(pd.size());
    auto occ = occurrences(pd, arc_count);

    TraceResult tr;
    tr.is_entry.assign(static_cast<std::size_t>(n), {false, false, false, false});
    tr.tail.assign(static_cast<std::size_t>(arc_count) + 1, Slot{});
    tr.head.assign(static_cast<std::size_t>(arc_count) + 1, Slot{});
    std::vector<std::array<bool, 4>> visited(static_cast<std::size_t>(n),
                                             {false, false, false, false});

    auto other_occurrence = [&occ](int arc, Slot s) {
        const auto& both = occ[static_cast<std::size_t>(arc)];
        return both[0] == s ? both[1] : both[0];
    };

    auto run_trace = [&](Slot start) {
        Slot cur = start;
        for (;;) {
            if (visited[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.pos)])
                throw InvalidDiagram(DiagramFault::OPEN_STRAND,
                                     "strand traversal does not close");
            if (enforce_convention && cur.pos == 2)
                throw InvalidDiagram(DiagramFault::SIGN_MISMATCH,
                                     "strand enters a crossing at the under-exit slot");
            visited[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.pos)] =
                true;
            tr.is_entry[static_cast<std::size_t>(cur.crossing)]
                       [static_cast<std::size_t>(cur.pos)] = true;
            int in_arc =
                pd[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.pos)];
            tr.head[static_cast<std::size_t>(in_arc)] = cur;

            Slot exit{cur.crossing, (cur.pos + 2) % 4};
            if (visited[static_cast<std::size_t>(exit.crossing)]
                       [static_cast<std::size_t>(exit.pos)])
                throw InvalidDiagram(DiagramFault::OPEN_STRAND,
                                     "strand traversal does not close");
            visited[static_cast<std::size_t>(exit.crossing)][static_cast<std::size_t>(exit.pos)] =
                true;
            int out_arc =
                pd[static_cast<std::size_t>(exit.crossing)][static_cast<std::size_t>(exit.pos)];
            tr.tail[static_cast<std::size_t>(out_arc)] = exit;

            Slot next = other_occurrence(out_arc, exit);
            if (next == start) break;
            cur = next;
        }
        ++tr.components;
    };

    // Components that pass under somewhere are seeded at under-in slots,
    // which forces the conventional orientation. Anything left over is an
    // always-over component; its direction is a free choice.
    for (int c = 0; c < n; ++c)
        if (!visited[static_cast<std::size_t>(c)][0]) run_trace({c, 0});
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p)
            if (!visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)])
                run_trace({c, p});

    return tr;
}

int sign_from_entries(const std::array<bool, 4>& entry, int crossing_index) {
    if (entry[1] == entry[3])
        throw InvalidDiagram(DiagramFault::SIGN_MISMATCH,
                             "over-strand orientation broken at crossing " +
                                 std::to_string(crossing_index));
    return entry[3] ? +1 : -1;
}

}  // namespace

KnotDiagram::KnotDiagram(std::vector<std::array<int, 4>> pd) {
    const int n = static_cast<int>(pd.size());
    arc_count_ = 2 * n;
    if (n == 0) {
        components_ = 1;
        tail_.assign(1, SlotRef{});
        head_.assign(1, SlotRef{});
        return;
    }
    TraceResult tr = trace_strands(pd, arc_count_, /*enforce_convention=*/true);
    components_ = tr.components;
    tail_ = std::move(tr.tail);
    head_ = std::move(tr.head);
    crossings_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        crossings_[static_cast<std::size_t>(c)].arcs = pd[static_cast<std::size_t>(c)];
        crossings_[static_cast<std::size_t>(c)].sign =
            sign_from_entries(tr.is_entry[static_cast<std::size_t>(c)], c);
    }
}

int KnotDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings_) w += c.sign;
    return w;
}

KnotDiagram parse_pd(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("PD code is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw MalformedInput("PD code must be a JSON array");
    std::vector<std::array<int, 4>> pd;
    pd.reserve(j.size());
    for (const auto& tup : j) {
        if (!tup.is_array() || tup.size() != 4)
            throw MalformedInput("each crossing must be a 4-tuple");
        std::array<int, 4> arcs{};
        for (int p = 0; p < 4; ++p) {
            const auto& v = tup[static_cast<std::size_t>(p)];
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw MalformedInput("arc labels must be positive integers");
            arcs[static_cast<std::size_t>(p)] = v.get<int>();
        }
        pd.push_back(arcs);
    }
    return KnotDiagram(std::move(pd));
}

int validate(const KnotDiagram& d) {
    if (d.crossing_count() == 0) return 1;
    std::vector<std::array<int, 4>> pd;
    pd.reserve(d.crossing_count());
    for (const Crossing& c : d.crossings()) pd.push_back(c.arcs);
    TraceResult tr = trace_strands(pd, d.arc_count(), /*enforce_convention=*/true);
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
        int s = sign_from_entries(tr.is_entry[static_cast<std::size_t>(c)], c);
        if (s != d.crossings()[static_cast<std::size_t>(c)].sign)
            throw InvalidDiagram(DiagramFault::SIGN_MISMATCH,
                                 "stored sign disagrees with traced orientation at crossing " +
                                     std::to_string(c));
    }
    return tr.components;
}

KnotDiagram unknot() { return KnotDiagram(); }

namespace {

// Generators assemble crossings with the under-strand on the 0-2 axis but
// without knowing which end is "in"; a trace (convention not enforced)
// decides, and tuples get rotated by two slots where needed.
KnotDiagram finish_raw(std::vector<std::array<int, 4>> pd, int arc_count) {
    TraceResult tr = trace_strands(pd, arc_count, /*enforce_convention=*/false);
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
        auto& tup = pd[static_cast<std::size_t>(c)];
        if (tr.is_entry[static_cast<std::size_t>(c)][2])
            tup = {tup[2], tup[3], tup[0], tup[1]};
    }
    return KnotDiagram(std::move(pd));
}

// Tiny union-find for provisional arc ids.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

KnotDiagram build_from_provisional(const std::vector<std::array<int, 4>>& cr, DisjointSet& ds,
                                   const char* what) {
    // Compact union classes to labels 1..2n in order of first use.
    std::map<int, int> compact;
    std::vector<std::array<int, 4>> pd;
    pd.reserve(cr.size());
    int next = 1;
    for (const auto& tup : cr) {
        std::array<int, 4> out{};
        for (int p = 0; p < 4; ++p) {
            int root = ds.find(tup[static_cast<std::size_t>(p)]);
            auto [it, fresh] = compact.emplace(root, next);
            if (fresh) ++next;
            out[static_cast<std::size_t>(p)] = it->second;
        }
        pd.push_back(out);
    }
    if (next - 1 != 2 * static_cast<int>(cr.size()))
        throw NotAKnot(std::string(what) +
                       ": a closed component avoids every crossing (not PD-expressible)");
    return finish_raw(std::move(pd), next - 1);
}

// Append a vertical twist region of |twists| crossings between the strands
// currently ending in arcs `left` and `right`; returns the strand ends
// below the region. Positive twists are right-handed.
void emit_twist_region(std::vector<std::array<int, 4>>& cr, int& next_id, int twists, int& left,
                       int& right) {
    const int m = twists < 0 ? -twists : twists;
    for (int j = 0; j < m; ++j) {
        int nl = next_id++;
        int nr = next_id++;
        if (twists > 0)
            cr.push_back({right, left, nl, nr});  // under on the NE-SW diagonal
        else
            cr.push_back({left, nl, nr, right});  // under on the NW-SE diagonal
        left = nl;
        right = nr;
    }
}

}  // namespace

KnotDiagram pretzel(int t1, int t2, int t3) {
    const std::array<int, 3> t{t1, t2, t3};
    int total = 0;
    for (int v : t) total += v < 0 ? -v : v;
    if (total < 1) throw BadParameter("pretzel needs at least one half-twist");

    std::vector<std::array<int, 4>> cr;
    DisjointSet ds(4 * total + 12);
    int next_id = 0;

    std::array<int, 3> top_left{}, top_right{}, bot_left{}, bot_right{};
    for (int i = 0; i < 3; ++i) {
        int l = next_id++;
        int r = next_id++;
        top_left[static_cast<std::size_t>(i)] = l;
        top_right[static_cast<std::size_t>(i)] = r;
        emit_twist_region(cr, next_id, t[static_cast<std::size_t>(i)], l, r);
        bot_left[static_cast<std::size_t>(i)] = l;
        bot_right[static_cast<std::size_t>(i)] = r;
    }
    // Cyclic closure: adjacent tangles joined along the top and the bottom.
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        ds.unite(top_right[static_cast<std::size_t>(i)], top_left[static_cast<std::size_t>(j)]);
        ds.unite(bot_right[static_cast<std::size_t>(i)], bot_left[static_cast<std::size_t>(j)]);
    }

    KnotDiagram d = build_from_provisional(cr, ds, "pretzel");
    if (!d.is_knot())
        throw NotAKnot("pretzel(" + std::to_string(t1) + "," + std::to_string(t2) + "," +
                       std::to_string(t3) + ") has " + std::to_string(d.component_count()) +
                       " components");
    return d;
}

KnotDiagram trefoil() { return pretzel(1, 1, 1); }

KnotDiagram torus2(int n) {
    if (n < 3 || n % 2 == 0)
        throw BadParameter("torus2 requires an odd parameter >= 3, got " + std::to_string(n));
    // Closure of the positive 2-strand braid with n equal crossings: arcs
    // left_j, right_j at level j, levels cyclic.
    std::vector<std::array<int, 4>> cr;
    DisjointSet ds(2 * n);
    auto left = [n](int j) { return 2 * (j % n); };
    auto right = [n](int j) { return 2 * (j % n) + 1; };
    for (int j = 0; j < n; ++j) cr.push_back({left(j), left(j + 1), right(j + 1), right(j)});
    KnotDiagram d = build_from_provisional(cr, ds, "torus2");
    if (!d.is_knot()) throw InternalError("torus2 closure is not a knot");
    return d;
}

KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2) {
    if (!d1.is_knot() || !d2.is_knot())
        throw NotAKnot("connected sum requires single-component inputs");
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;

    const int shift = d1.arc_count();
    std::vector<std::array<int, 4>> pd;
    pd.reserve(d1.crossing_count() + d2.crossing_count());
    for (const Crossing& c : d1.crossings()) pd.push_back(c.arcs);
    for (const Crossing& c : d2.crossings()) {
        std::array<int, 4> t = c.arcs;
        for (int& a : t) a += shift;
        pd.push_back(t);
    }

    // Splice the lowest-labeled arc of each summand: cut both and cross-join
    // so the strand detours through the whole second diagram.
    const int a = 1;
    const int b = shift + 1;
    Slot head_a = d1.arc_head(a);
    Slot head_b = d2.arc_head(1);
    head_b.crossing += static_cast<int>(d1.crossing_count());

    pd[static_cast<std::size_t>(head_b.crossing)][static_cast<std::size_t>(head_b.pos)] = a;
    pd[static_cast<std::size_t>(head_a.crossing)][static_cast<std::size_t>(head_a.pos)] = b;

    KnotDiagram out(std::move(pd));
    if (!out.is_knot()) throw InternalError("connected sum lost connectivity");
    return out;
}

namespace {

std::size_t rng_below(std::mt19937_64& g, std::size_t n) { return g() % n; }

std::vector<std::array<int, 4>> tuples_of(const KnotDiagram& d) {
    std::vector<std::array<int, 4>> pd;
    pd.reserve(d.crossing_count());
    for (const Crossing& c : d.crossings()) pd.push_back(c.arcs);
    return pd;
}

KnotDiagram insert_r1(const KnotDiagram& d, std::mt19937_64& rng) {
    const int n2 = d.arc_count();
    if (n2 == 0) {
        // Kink on the round unknot; all four chiralities are one of these.
        static const std::array<std::array<int, 4>, 4> shapes{
            std::array<int, 4>{1, 2, 2, 1}, {1, 1, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 2}};
        return KnotDiagram({shapes[rng_below(rng, 4)]});
    }
    int a = static_cast<int>(rng_below(rng, static_cast<std::size_t>(n2))) + 1;
    int x = n2 + 1, y = n2 + 2;
    auto pd = tuples_of(d);
    Slot ha = d.arc_head(a);
    pd[static_cast<std::size_t>(ha.crossing)][static_cast<std::size_t>(ha.pos)] = x;
    std::array<int, 4> tup{};
    switch (rng_below(rng, 4)) {
        case 0: tup = {a, y, y, x}; break;  // negative kink
        case 1: tup = {a, x, y, y}; break;  // positive kink
        case 2: tup = {y, y, x, a}; break;  // positive kink, loop goes under
        default: tup = {y, a, x, y}; break;
    }
    pd.push_back(tup);
    return KnotDiagram(std::move(pd));
}

// Push a finger of arc `a` under arc `b` across a face both bound.
KnotDiagram insert_r2(const KnotDiagram& d, std::mt19937_64& rng) {
    if (d.crossing_count() == 0) return insert_r1(d, rng);
    FaceData faces = trace_faces(d);

    struct Candidate {
        int a, b;
        bool a_co_directed, b_co_directed;
    };
    std::vector<Candidate> cands;
    for (const auto& boundary : faces.boundaries)
        for (std::size_t i = 0; i < boundary.size(); ++i)
            for (std::size_t j = 0; j < boundary.size(); ++j) {
                if (i == j || boundary[i].arc == boundary[j].arc) continue;
                cands.push_back({boundary[i].arc, boundary[j].arc,
                                 boundary[i].co_directed, boundary[j].co_directed});
            }
    if (cands.empty()) return insert_r1(d, rng);

    const Candidate& c = cands[rng_below(rng, cands.size())];
    const int n2 = d.arc_count();
    const int u1 = n2 + 1, u2 = n2 + 2, v1 = n2 + 3, v2 = n2 + 4;

    auto pd = tuples_of(d);
    Slot ha = d.arc_head(c.a);
    Slot hb = d.arc_head(c.b);
    pd[static_cast<std::size_t>(ha.crossing)][static_cast<std::size_t>(ha.pos)] = u2;
    pd[static_cast<std::size_t>(hb.crossing)][static_cast<std::size_t>(hb.pos)] = v2;
    // The boundary trace keeps the face on the right of travel, so b's flag
    // fixes which side of b the finger hits and a's flag fixes the u-turn
    // chirality (hence the order of the two new crossings along b). Each of
    // the four orientation states has exactly one planar tuple pair.
    if (c.b_co_directed) {
        if (c.a_co_directed) {
            pd.push_back({c.a, v2, u1, v1});
            pd.push_back({u1, c.b, u2, v1});
        } else {
            pd.push_back({c.a, v1, u1, c.b});
            pd.push_back({u1, v1, u2, v2});
        }
    } else {
        if (c.a_co_directed) {
            pd.push_back({c.a, c.b, u1, v1});
            pd.push_back({u1, v2, u2, v1});
        } else {
            pd.push_back({c.a, v1, u1, v2});
            pd.push_back({u1, v1, u2, c.b});
        }
    }
    return KnotDiagram(std::move(pd));
}

}  // namespace

KnotDiagram reidemeister_perturb(const KnotDiagram& d, std::uint64_t seed, int steps) {
    if (steps < 0) throw BadParameter("negative step count");
    std::mt19937_64 rng(seed);
    KnotDiagram cur = d;
    for (int s = 0; s < steps; ++s) {
        if (rng_below(rng, 2) == 0)
            cur = insert_r1(cur, rng);
        else
            cur = insert_r2(cur, rng);
    }
    return cur;
}

KnotDiagram relabel_arcs(const KnotDiagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.arc_count() + 1)
        throw BadParameter("permutation must have arc_count+1 entries (index 0 unused)");
    auto pd = tuples_of(d);
    for (auto& tup : pd)
        for (int& a : tup) a = perm[static_cast<std::size_t>(a)];
    return KnotDiagram(std::move(pd));
}

FaceData trace_faces(const KnotDiagram& d) {
    const int n = static_cast<int>(d.crossing_count());
    if (n == 0) throw BadParameter("face tracing needs at least one crossing");

    FaceData fd;
    fd.corner_face.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});

    // Directed edge-ends: (crossing, slot, outgoing?) with outgoing meaning
    // the walk leaves the crossing through that slot. Face rule (face kept on
    // the right of travel): arrive at slot s, depart at slot s+1.
    auto slot_key = [](int c, int p) { return 4 * c + p; };
    std::vector<bool> corner_done(static_cast<std::size_t>(4 * n), false);

    for (int c0 = 0; c0 < n; ++c0)
        for (int p0 = 0; p0 < 4; ++p0) {
            if (corner_done[static_cast<std::size_t>(slot_key(c0, p0))]) continue;
            const int fid = fd.face_count++;
            fd.boundaries.emplace_back();
            int c = c0, p = p0;  // arriving slot
            do {
                corner_done[static_cast<std::size_t>(slot_key(c, p))] = true;
                fd.corner_face[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] = fid;
                int out_pos = (p + 1) % 4;
                int arc = d.crossings()[static_cast<std::size_t>(c)]
                              .arcs[static_cast<std::size_t>(out_pos)];
                Slot tail = d.arc_tail(arc);
                Slot head = d.arc_head(arc);
                bool co = (tail.crossing == c && tail.pos == out_pos);
                fd.boundaries.back().push_back({arc, co});
                Slot next = co ? head : tail;
                c = next.crossing;
                p = next.pos;
            } while (!(c == c0 && p == p0));
        }

    const int v = n, e = 2 * n;
    if (v - e + fd.face_count != 2)
        throw InvalidDiagram(DiagramFault::NOT_PLANAR,
                             "rotation system is not planar (V-E+F = " +
                                 std::to_string(v - e + fd.face_count) + ")");
    return fd;
}

nlohmann::json diagram_to_json(const KnotDiagram& d) {
    nlohmann::json pd = nlohmann::json::array();
    for (const Crossing& c : d.crossings())
        pd.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
    return nlohmann::json{{"pd", pd}};
}

KnotDiagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pd"))
        throw MalformedInput("diagram JSON must be an object with a \"pd\" key");
    return parse_pd(j.at("pd").dump());
}

KnotDiagram diagram_from_spec(const nlohmann::json& spec) {
    if (spec.is_string()) {
        const std::string s = spec.get<std::string>();
        if (s == "unknot") return unknot();
        if (s == "trefoil") return trefoil();
        throw MalformedInput("unknown generator name \"" + s + "\"");
    }
    if (!spec.is_object() || spec.size() != 1)
        throw MalformedInput("generator spec must be a name or a single-key object");
    const std::string key = spec.begin().key();
    const nlohmann::json& val = spec.begin().value();
    if (key == "pretzel") {
        if (!val.is_array() || val.size() != 3)
            throw MalformedInput("\"pretzel\" takes three integers");
        return pretzel(val[0].get<int>(), val[1].get<int>(), val[2].get<int>());
    }
    if (key == "torus2") {
        if (!val.is_number_integer()) throw MalformedInput("\"torus2\" takes an integer");
        return torus2(val.get<int>());
    }
    if (key == "sum") {
        if (!val.is_array() || val.size() < 2)
            throw MalformedInput("\"sum\" takes at least two specs");
        KnotDiagram acc = diagram_from_spec(val[0]);
        for (std::size_t i = 1; i < val.size(); ++i)
            acc = connected_sum(acc, diagram_from_spec(val[static_cast<std::size_t>(i)]));
        return acc;
    }
    if (key == "pd") return parse_pd(val.dump());
    throw MalformedInput("unknown generator key \"" + key + "\"");
}

namespace {

// Recursive descent over the compact text grammar:
//   atom := "unknot" | "trefoil" | "pretzel:a,b,c" | "torus2:n"
//         | "pd:<json>" | "sum(spec,spec,...)"
struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit SpecParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }

    bool consume(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                                     s[start]))))
            throw MalformedInput("expected integer in generator spec at offset " +
                                 std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }

    nlohmann::json parse_spec() {
        skip_ws();
        if (consume("unknot")) return "unknot";
        if (consume("trefoil")) return "trefoil";
        if (consume("pretzel:")) {
            long long a = parse_int();
            if (!consume(",")) throw MalformedInput("pretzel: expects a,b,c");
            long long b = parse_int();
            if (!consume(",")) throw MalformedInput("pretzel: expects a,b,c");
            long long c = parse_int();
            return nlohmann::json{{"pretzel", {a, b, c}}};
        }
        if (consume("torus2:")) return nlohmann::json{{"torus2", parse_int()}};
        if (consume("pd:")) {
            // The PD JSON runs to the matching close bracket.
            skip_ws();
            if (pos >= s.size() || s[pos] != '[') throw MalformedInput("pd: expects [[...]]");
            int depth = 0;
            std::size_t start = pos;
            do {
                if (s[pos] == '[') ++depth;
                if (s[pos] == ']') --depth;
                ++pos;
            } while (pos < s.size() && depth > 0);
            if (depth != 0) throw MalformedInput("unbalanced brackets in pd: spec");
            return nlohmann::json{{"pd", nlohmann::json::parse(s.substr(start, pos - start))}};
        }
        if (consume("sum(")) {
            nlohmann::json parts = nlohmann::json::array();
            parts.push_back(parse_spec());
            while (consume(",")) parts.push_back(parse_spec());
            if (!consume(")")) throw MalformedInput("sum(...) missing close paren");
            return nlohmann::json{{"sum", parts}};
        }
        throw MalformedInput("unrecognized generator spec near \"" + s.substr(pos) + "\"");
    }
};

}  // namespace

nlohmann::json spec_from_text(const std::string& text) {
    SpecParser p(text);
    nlohmann::json j = p.parse_spec();
    p.skip_ws();
    // Bare comma-joined atoms are an implicit sum: "trefoil,trefoil".
    if (p.pos < text.size() && text[p.pos] == ',') {
        nlohmann::json parts = nlohmann::json::array();
        parts.push_back(j);
        while (p.consume(",")) parts.push_back(p.parse_spec());
        p.skip_ws();
        j = nlohmann::json{{"sum", parts}};
    }
    if (p.pos != text.size())
        throw MalformedInput("trailing characters in generator spec: \"" + text.substr(p.pos) +
                             "\"");
    return j;
}

}  // namespace ribbongate
