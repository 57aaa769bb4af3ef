#pragma once

#include <string>
#include <vector>

#include "ribbongate/diagram.hpp"

namespace ribbongate {

/// Classical Legendrian data carried on top of a smooth diagram. tb and
/// rotation follow the standard stabilization and connected-sum rules; the
/// stabilization counters only ever grow. Batches of stabilizations whose
/// count is deliberately left unspecified (the approximation step of the
/// cobordism pipeline) are tracked as symbolic marks, not numbers.
struct LegendrianKnot {
    KnotDiagram smooth;
    int tb = 0;
    int rotation = 0;
    int pos_stabs = 0;
    int neg_stabs = 0;
    std::vector<std::string> symbolic_stabs;

    /// tb before any recorded stabilizations.
    int base_tb() const { return tb + pos_stabs + neg_stabs; }

    bool operator==(const LegendrianKnot& o) const {
        return smooth == o.smooth && tb == o.tb && rotation == o.rotation &&
               pos_stabs == o.pos_stabs && neg_stabs == o.neg_stabs &&
               symbolic_stabs == o.symbolic_stabs;
    }
    bool operator!=(const LegendrianKnot& o) const { return !(*this == o); }
};

/// The tb = -1, rotation 0 Legendrian unknot.
LegendrianKnot legendrian_unknot();

/// Single stabilization: tb drops by one, rotation moves by +-1, the smooth
/// type stays put.
LegendrianKnot stabilize(const LegendrianKnot& l, int sign);

/// S_+ S_- applied once: tb - 2, rotation unchanged.
LegendrianKnot stabilize_both(const LegendrianKnot& l);

/// Connected sum: tb adds plus one, rotation adds, counters add.
LegendrianKnot legendrian_connected_sum(const LegendrianKnot& l1, const LegendrianKnot& l2);

/// Record an unspecified batch of stabilizations under a symbolic label.
/// tb/rotation are left numeric-as-is; ends only compare equal when their
/// symbolic marks agree, which is what keeps recipes composable.
LegendrianKnot mark_symbolic_stabilization(const LegendrianKnot& l, const std::string& label);

nlohmann::json legendrian_to_json(const LegendrianKnot& l);
LegendrianKnot legendrian_from_json(const nlohmann::json& j);

}  // namespace ribbongate
