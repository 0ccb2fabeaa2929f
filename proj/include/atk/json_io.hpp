#pragma once

#include <json.hpp>

#include "atk/classify.hpp"
#include "atk/tables.hpp"

namespace atk {

using ordered_json = nlohmann::ordered_json;

// Number when the value fits a 64-bit integer, decimal string otherwise.
ordered_json json_int(const Int& v);

ordered_json json_cycle(const Cycle& c);
ordered_json json_vector(const LatticeVector& v);
ordered_json json_fan(const Fan& f);
ordered_json json_group(const GroupInvariants& g);

// Definiteness plus the numeric invariants of a cycle.
ordered_json json_invariants(const Cycle& c);

// Moves and paths carry 1-based component indices externally.
ordered_json json_move(const Move& m);
ordered_json json_path(const Path& p);

ordered_json json_model(const StandardModel& m);
ordered_json json_presentation(const Presentation& p);
ordered_json json_type_count(const Cycle& input, const TypeCount& t);
ordered_json json_replay_report(const ReplayReport& r);
ordered_json json_error(const domain_error& e);

} // namespace atk
