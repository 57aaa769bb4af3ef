#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ribbongate/errors.hpp"

namespace ribbongate {

/// One crossing of a PD code. The 4-tuple lists the incident arc labels
/// counterclockwise starting from the incoming under-strand, so the
/// under-strand occupies slots 0 (in) and 2 (out) and the over-strand
/// slots 1 and 3. sign is the writhe sign recovered from orientation
/// tracing: +1 when the over-strand enters at slot 3.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 0;

    bool operator==(const Crossing& o) const { return arcs == o.arcs && sign == o.sign; }
};

/// Immutable PD-code diagram of a knot or link. Arc labels are 1..arc_count
/// and every label occurs exactly twice; construction traces the diagram,
/// derives crossing signs and the component count, and rejects anything
/// structurally broken. The zero-crossing diagram is the round unknot
/// (PD codes cannot express it natively).
class KnotDiagram {
public:
    /// Where an arc meets a crossing: crossing index + slot position.
    struct SlotRef {
        int crossing = -1;
        int pos = -1;
        bool operator==(const SlotRef& o) const {
            return crossing == o.crossing && pos == o.pos;
        }
    };

    KnotDiagram() = default;  // round unknot
    explicit KnotDiagram(std::vector<std::array<int, 4>> pd);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::size_t crossing_count() const { return crossings_.size(); }
    int arc_count() const { return arc_count_; }
    int component_count() const { return components_; }
    bool is_knot() const { return components_ == 1; }
    int writhe() const;

    /// Slot where the arc leaves / enters a crossing (orientation cache).
    SlotRef arc_tail(int arc) const { return tail_.at(static_cast<std::size_t>(arc)); }
    SlotRef arc_head(int arc) const { return head_.at(static_cast<std::size_t>(arc)); }

    bool operator==(const KnotDiagram& o) const {
        return crossings_ == o.crossings_ && arc_count_ == o.arc_count_;
    }
    bool operator!=(const KnotDiagram& o) const { return !(*this == o); }

private:
    std::vector<Crossing> crossings_;
    int arc_count_ = 0;
    int components_ = 1;
    std::vector<SlotRef> tail_, head_;  // indexed by arc label, entry 0 unused
};

/// Parse a JSON array of 4-tuples, e.g. "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]".
/// "[]" denotes the round unknot.
KnotDiagram parse_pd(const std::string& text);

/// Structural re-validation; returns the number of link components.
int validate(const KnotDiagram& d);

KnotDiagram unknot();

/// Standard 3-strand pretzel diagram with |t1|+|t2|+|t3| crossings;
/// positive parameters are right-handed half-twists. Rejects inputs
/// whose closure is not a knot.
KnotDiagram pretzel(int t1, int t2, int t3);

/// Right-handed trefoil, pretzel(1,1,1).
KnotDiagram trefoil();

/// (2,n) torus knot as the closure of the 2-strand braid with n equal
/// crossings; n must be odd and >= 3.
KnotDiagram torus2(int n);

/// Connected sum spliced at the lowest-labeled arc of each summand.
KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2);

/// Apply `steps` random R1 twists / R2 pokes (insertions only) chosen by a
/// seeded PRNG. The smooth knot type is unchanged; invariance tests lean
/// on this as a fuzz harness.
KnotDiagram reidemeister_perturb(const KnotDiagram& d, std::uint64_t seed, int steps);

/// Rename arcs by a permutation perm (perm[a] = new label of a, 1-based).
KnotDiagram relabel_arcs(const KnotDiagram& d, const std::vector<int>& perm);

// --- planar face structure (rotation-system tracing) ---

/// Faces of the underlying 4-valent plane graph. Corner k of a crossing is
/// the region between slots k and k+1 mod 4.
struct FaceData {
    int face_count = 0;
    /// corner_face[c][k] = face id at corner k of crossing c.
    std::vector<std::array<int, 4>> corner_face;
    struct BoundaryEdge {
        int arc;
        bool co_directed;  // boundary traversal runs with the arc's orientation
    };
    std::vector<std::vector<BoundaryEdge>> boundaries;
};

/// Trace all faces; throws InvalidDiagram(NOT_PLANAR) when the rotation
/// system fails the Euler count V - E + F = 2.
FaceData trace_faces(const KnotDiagram& d);

// --- JSON interfaces ---

/// {"pd": [[a,b,c,d],...]}; empty list = unknot.
nlohmann::json diagram_to_json(const KnotDiagram& d);
KnotDiagram diagram_from_json(const nlohmann::json& j);

/// Generator specs: "unknot" | "trefoil" | {"pretzel":[a,b,c]} |
/// {"torus2":n} | {"sum":[spec,spec]} | {"pd":[...]} (recursive).
KnotDiagram diagram_from_spec(const nlohmann::json& spec);

/// Compact text form of a generator spec, e.g. "pretzel:3,-3,4" or
/// "sum(trefoil,torus2:5)"; parsed into the JSON form above.
nlohmann::json spec_from_text(const std::string& text);

}  // namespace ribbongate
