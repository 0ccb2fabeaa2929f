#include "atk/marked_pair.hpp"

#include <cstddef>

namespace atk {

const char* to_string(ModelName m) {
    switch (m) {
    case ModelName::T6: return "T6";
    case ModelName::T7: return "T7";
    case ModelName::Ti: return "Ti";
    case ModelName::Tii: return "Tii";
    case ModelName::T9: return "T9";
    }
    return "?";
}

std::optional<ModelName> parse_model_name(std::string_view s) {
    if (s == "T6") return ModelName::T6;
    if (s == "T7") return ModelName::T7;
    if (s == "Ti") return ModelName::Ti;
    if (s == "Tii") return ModelName::Tii;
    if (s == "T9") return ModelName::T9;
    return std::nullopt;
}

namespace {

StandardModel build_model(ModelName name, std::vector<LatticeVector> rays) {
    Fan fan(std::move(rays));
    Cycle cycle = cycle_from_fan(fan);
    return {name, std::move(fan), std::move(cycle)};
}

std::vector<StandardModel> build_models() {
    // Hexagon, then one extra ray per step: -e1+e2 gives the 7-ray model,
    // plus e1-e2 the 8-ray model Ti; the hexagon plus e1+2e2 and -2e1-e2
    // gives Tii, plus e1-e2 the 9-ray model.
    std::vector<LatticeVector> hex = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};

    std::vector<LatticeVector> t7 = hex;
    t7.insert(t7.begin() + 3, {-1, 1});

    std::vector<LatticeVector> ti = t7;
    ti.push_back({1, -1});

    std::vector<LatticeVector> tii = {{1, 0}, {1, 1}, {1, 2}, {0, 1},
                                      {-1, 0}, {-2, -1}, {-1, -1}, {0, -1}};

    std::vector<LatticeVector> t9 = tii;
    t9.push_back({1, -1});

    std::vector<StandardModel> models;
    models.push_back(build_model(ModelName::T6, hex));
    models.push_back(build_model(ModelName::T7, t7));
    models.push_back(build_model(ModelName::Ti, ti));
    models.push_back(build_model(ModelName::Tii, tii));
    models.push_back(build_model(ModelName::T9, t9));
    return models;
}

} // namespace

const std::vector<StandardModel>& standard_models() {
    static const std::vector<StandardModel> models = build_models();
    return models;
}

const StandardModel& standard_model(ModelName name) {
    for (const StandardModel& m : standard_models())
        if (m.name == name)
            return m;
    fail(errc::length_out_of_range, "unknown model");
}

MarkedPair make_marked_pair(Fan base, std::vector<Int> marks) {
    if (static_cast<std::size_t>(base.size()) != marks.size())
        fail(errc::length_mismatch, "marks length does not match the number of components");
    for (const Int& m : marks)
        if (m < 0)
            fail(errc::length_mismatch, "marks must be nonnegative");
    return {std::move(base), std::move(marks)};
}

MarkedPair elliptic_pair(const StandardModel& model) {
    std::vector<Int> marks(model.cycle.size());
    for (std::size_t i = 0; i < model.cycle.size(); ++i)
        marks[i] = model.cycle[i] == 1 ? 1 : 0;
    return {model.fan, std::move(marks)};
}

MarkedPair add_marks(const MarkedPair& p, const std::vector<Int>& extra) {
    if (extra.size() != p.marks.size())
        fail(errc::length_mismatch,
             "extra marks have length " + std::to_string(extra.size()) + ", expected " +
                 std::to_string(p.marks.size()));
    MarkedPair out = p;
    for (std::size_t i = 0; i < extra.size(); ++i) {
        if (extra[i] < 0)
            fail(errc::length_mismatch, "marks must be nonnegative");
        out.marks[i] += extra[i];
    }
    return out;
}

Cycle base_cycle(const MarkedPair& p) {
    return cycle_from_fan(p.base);
}

Cycle derived_cycle(const MarkedPair& p) {
    Cycle c = cycle_from_fan(p.base);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += p.marks[i];
    return c;
}

Int derived_charge(const MarkedPair& p) {
    Int q = 0;
    for (const Int& m : p.marks)
        q += m;
    return q;
}

GroupInvariants fundamental_group(const MarkedPair& p) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < p.marks.size(); ++i)
        if (p.marks[i] >= 1)
            gens.push_back(p.base.rays()[i]);
    return cokernel_invariants(gens);
}

} // namespace atk
