#include "atk/json_io.hpp"

#include <limits>

#include "atk/transform.hpp"

namespace atk {

ordered_json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

ordered_json json_cycle(const Cycle& c) {
    ordered_json arr = ordered_json::array();
    for (const Int& a : c)
        arr.push_back(json_int(a));
    return arr;
}

ordered_json json_vector(const LatticeVector& v) {
    return ordered_json::array({json_int(v.x), json_int(v.y)});
}

ordered_json json_fan(const Fan& f) {
    ordered_json arr = ordered_json::array();
    for (const LatticeVector& v : f.rays())
        arr.push_back(json_vector(v));
    return arr;
}

ordered_json json_group(const GroupInvariants& g) {
    ordered_json out;
    out["free_rank"] = g.free_rank;
    ordered_json tors = ordered_json::array();
    for (const Int& t : g.torsion)
        tors.push_back(json_int(t));
    out["torsion"] = tors;
    if (g.free_rank == 0) {
        Int order = 1;
        for (const Int& t : g.torsion)
            order *= t;
        out["order"] = json_int(order);
    } else {
        out["order"] = nullptr;
    }
    return out;
}

ordered_json json_invariants(const Cycle& c) {
    PairInvariants inv = invariants_of(c);
    ordered_json out;
    out["cycle"] = json_cycle(c);
    out["toric"] = toric_realizable(c);
    out["negative_definite"] = is_negative_definite(c);
    out["determinant"] = json_int(intersection_determinant(c));
    out["d_squared"] = json_int(inv.d_squared);
    out["charge"] = json_int(inv.charge);
    out["euler_complement"] = json_int(inv.euler_complement);
    out["lambda_rank"] = inv.lambda_rank ? json_int(*inv.lambda_rank) : ordered_json(nullptr);
    return out;
}

ordered_json json_move(const Move& m) {
    ordered_json out;
    out["up"] = m.up + 1;
    out["down"] = m.down + 1;
    return out;
}

ordered_json json_path(const Path& p) {
    ordered_json out;
    out["start"] = json_cycle(p.start);
    out["end"] = json_cycle(p.end);
    ordered_json moves = ordered_json::array();
    for (const Move& m : p.moves)
        moves.push_back(json_move(m));
    out["moves"] = moves;
    out["length"] = p.moves.size();
    return out;
}

ordered_json json_model(const StandardModel& m) {
    ordered_json out;
    out["name"] = to_string(m.name);
    out["cycle"] = json_cycle(m.cycle);
    out["rays"] = json_fan(m.fan);
    return out;
}

ordered_json json_presentation(const Presentation& p) {
    ordered_json out;
    out["model"] = to_string(p.model);
    ordered_json marks = ordered_json::array();
    for (const Int& m : p.marks)
        marks.push_back(json_int(m));
    out["marks"] = marks;
    out["pi1"] = json_group(p.pi1);
    return out;
}

ordered_json json_type_count(const Cycle& input, const TypeCount& t) {
    ordered_json out;
    out["cycle"] = json_cycle(input);
    if (t.exact()) {
        out["count"] = t.lo;
    } else {
        ordered_json interval;
        interval["lo"] = t.lo;
        interval["hi"] = t.hi;
        out["count"] = interval;
    }
    ordered_json reps = ordered_json::array();
    for (const Presentation& p : t.representatives)
        reps.push_back(json_presentation(p));
    out["representatives"] = reps;
    return out;
}

ordered_json json_replay_report(const ReplayReport& r) {
    ordered_json out;
    out["table"] = r.table_id;
    out["row"] = r.row_index;
    out["label"] = r.label;
    out["start"] = json_cycle(r.start);
    out["target"] = to_string(r.declared_target);
    out["status"] = to_string(r.status);
    out["orientation"] = r.orientation_choices;
    out["final"] = r.final_cycle ? json_cycle(*r.final_cycle) : ordered_json(nullptr);
    out["search"] = r.search_path ? json_path(*r.search_path) : ordered_json(nullptr);
    out["notes"] = r.notes;
    return out;
}

ordered_json json_error(const domain_error& e) {
    ordered_json out;
    out["error"] = errc_name(e.code());
    out["detail"] = e.what();
    return out;
}

} // namespace atk
