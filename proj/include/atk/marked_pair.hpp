#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atk/fan.hpp"

namespace atk {

enum class ModelName { T6, T7, Ti, Tii, T9 };

const char* to_string(ModelName m);
std::optional<ModelName> parse_model_name(std::string_view s);

// One of the five common toric pairs the calculus contracts to.
struct StandardModel {
    ModelName name;
    Fan fan;
    Cycle cycle; // labeled cycle of the normalized fan
};

const std::vector<StandardModel>& standard_models();
const StandardModel& standard_model(ModelName name);

// A toric model plus per-component interior blowup multiplicities. The
// modeled pair has boundary entries a_i + m_i and charge sum(m).
struct MarkedPair {
    Fan base;
    std::vector<Int> marks;

    bool operator==(const MarkedPair&) const = default;
};

MarkedPair make_marked_pair(Fan base, std::vector<Int> marks);

// One mark on every -1 component; the derived cycle becomes all 2s.
MarkedPair elliptic_pair(const StandardModel& model);

MarkedPair add_marks(const MarkedPair& p, const std::vector<Int>& extra);

Cycle base_cycle(const MarkedPair& p);
Cycle derived_cycle(const MarkedPair& p);
Int derived_charge(const MarkedPair& p);

// Z^2 modulo the subgroup generated by the rays carrying at least one mark.
GroupInvariants fundamental_group(const MarkedPair& p);

} // namespace atk
