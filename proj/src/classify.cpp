#include "atk/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "atk/errors.hpp"

namespace atk {

namespace {

// The rotation known to act on each model (together with fan reflections
// it generates the full realized subgroup).
int realized_rotation_step(ModelName m) {
    switch (m) {
    case ModelName::T6: return 1;
    case ModelName::T7: return 1;
    case ModelName::Ti: return 2;
    case ModelName::Tii: return 1;
    case ModelName::T9: return 3;
    }
    return 1;
}

RealizedSymmetry build_realized(ModelName name) {
    const StandardModel& m = standard_model(name);
    const int n = m.fan.size();

    std::set<int> elliptic;
    for (int i = 0; i < n; ++i)
        if (m.cycle[i] == 1)
            elliptic.insert(i);

    std::set<DihedralElement> gen;
    gen.insert(DihedralElement{0, false});
    gen.insert(DihedralElement{realized_rotation_step(name) % n, false});
    for (const FanSymmetry& s : fan_symmetries(m.fan)) {
        if (!s.action.reflected)
            continue;
        std::set<int> image;
        for (int i : elliptic)
            image.insert(dihedral_image(s.action, n, i));
        if (image != elliptic)
            fail(errc::not_toric, "fan reflection does not preserve the marked components");
        gen.insert(s.action);
    }

    std::set<DihedralElement> group = gen;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<DihedralElement> cur(group.begin(), group.end());
        for (const DihedralElement& a : cur)
            for (const DihedralElement& b : cur)
                if (group.insert(dihedral_compose(n, a, b)).second)
                    grew = true;
    }

    RealizedSymmetry r;
    r.n = n;
    r.subgroup.assign(group.begin(), group.end());
    std::sort(r.subgroup.begin(), r.subgroup.end());
    return r;
}

void check_classifiable(const Cycle& c) {
    int n = static_cast<int>(c.size());
    if (n < 6 || n > 9)
        fail(errc::length_out_of_range,
             "classification covers lengths 6 to 9, got " + std::to_string(n));
    for (const Int& a : c)
        if (a < 2)
            fail(errc::not_negative_definite,
                 "entry " + a.str() + " < 2: cycle has a component of self-intersection >= -1");
    if (!is_negative_definite(c))
        fail(errc::not_negative_definite, "intersection matrix is not negative definite");
}

// Feasible alignments of one model against c, in dihedral element order.
std::vector<Presentation> presentations_for(const Cycle& c, const StandardModel& m) {
    const int n = static_cast<int>(c.size());
    std::vector<Presentation> out;
    for (const DihedralElement& sigma : dihedral_elements(n)) {
        Cycle aligned = atk::apply(sigma, c);
        std::vector<Int> marks(n);
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            marks[k] = aligned[k] - m.cycle[k];
            ok = marks[k] >= (m.cycle[k] == 1 ? 1 : 0);
        }
        if (!ok)
            continue;
        Presentation p;
        p.model = m.name;
        p.alignment = sigma;
        p.marks = std::move(marks);
        p.pi1 = fundamental_group(make_marked_pair(m.fan, p.marks));
        out.push_back(std::move(p));
    }
    return out;
}

// Orbit decomposition of the feasible alignments under sigma ~ s.sigma.r.
// Returns, per orbit, the index (into pres) of its least alignment.
std::vector<int> orbit_firsts(const Cycle& c, const std::vector<Presentation>& pres,
                              const RealizedSymmetry& real) {
    const int n = real.n;
    std::map<DihedralElement, int> index;
    for (int i = 0; i < static_cast<int>(pres.size()); ++i)
        index[pres[i].alignment] = i;

    const std::vector<DihedralElement> sym = symmetry_group(c);
    std::vector<bool> seen(pres.size(), false);
    std::vector<int> firsts;
    for (int i = 0; i < static_cast<int>(pres.size()); ++i) {
        if (seen[i])
            continue;
        firsts.push_back(i);
        for (const DihedralElement& s : sym)
            for (const DihedralElement& r : real.subgroup) {
                DihedralElement img =
                    dihedral_compose(n, s, dihedral_compose(n, pres[i].alignment, r));
                auto it = index.find(img);
                if (it != index.end())
                    seen[it->second] = true;
            }
    }
    return firsts;
}

bool has_alternating_2s(const Cycle& c) {
    const int n = static_cast<int>(c.size());
    for (const DihedralElement& g : dihedral_elements(n)) {
        Cycle img = atk::apply(g, c);
        bool ok = true;
        for (int i = 1; i < n; i += 2)
            ok = ok && img[i] == 2;
        if (ok)
            return true;
    }
    return false;
}

} // namespace

const RealizedSymmetry& realized_subgroup(ModelName model) {
    static const std::vector<RealizedSymmetry> cache = [] {
        std::vector<RealizedSymmetry> v;
        for (const StandardModel& m : standard_models())
            v.push_back(build_realized(m.name));
        return v;
    }();
    for (std::size_t i = 0; i < standard_models().size(); ++i)
        if (standard_models()[i].name == model)
            return cache[i];
    fail(errc::length_out_of_range, "unknown model");
}

std::vector<Presentation> feasible_presentations(const Cycle& c) {
    check_classifiable(c);
    std::vector<Presentation> out;
    for (const StandardModel& m : standard_models()) {
        if (m.fan.size() != static_cast<int>(c.size()))
            continue;
        for (Presentation& p : presentations_for(c, m))
            out.push_back(std::move(p));
    }
    return out;
}

int orbit_upper_bound(const Cycle& c, ModelName model) {
    check_classifiable(c);
    const StandardModel& m = standard_model(model);
    if (m.fan.size() != static_cast<int>(c.size()))
        fail(errc::length_mismatch, "cycle length does not match the model");
    std::vector<Presentation> pres = presentations_for(c, m);
    return static_cast<int>(orbit_firsts(c, pres, realized_subgroup(model)).size());
}

TypeCount deformation_types(const Cycle& c) {
    check_classifiable(c);
    const Cycle canon = dihedral_canonical(c).first;
    const int n = static_cast<int>(canon.size());

    TypeCount out;
    if (n == 6 || n == 7) {
        out.lo = out.hi = 1;
        std::vector<Presentation> pres = feasible_presentations(canon);
        out.representatives.push_back(pres.front());
        return out;
    }

    if (n == 8) {
        const StandardModel& ti = standard_model(ModelName::Ti);
        const StandardModel& tii = standard_model(ModelName::Tii);
        std::vector<Presentation> on_ti = presentations_for(canon, ti);
        if (has_alternating_2s(canon)) {
            // Two types, told apart by the fundamental group.
            out.lo = out.hi = 2;
            const GroupInvariants order2{0, {Int(2)}};
            auto it = std::find_if(on_ti.begin(), on_ti.end(),
                                   [&](const Presentation& p) { return p.pi1 == order2; });
            out.representatives.push_back(it != on_ti.end() ? *it : on_ti.front());
            out.representatives.push_back(presentations_for(canon, tii).front());
        } else {
            out.lo = out.hi = 1;
            if (!on_ti.empty())
                out.representatives.push_back(on_ti.front());
            else
                out.representatives.push_back(presentations_for(canon, tii).front());
        }
        return out;
    }

    // n == 9: only the upper bound is proven; report an interval.
    const StandardModel& t9 = standard_model(ModelName::T9);
    std::vector<Presentation> pres = presentations_for(canon, t9);
    std::vector<int> firsts = orbit_firsts(canon, pres, realized_subgroup(ModelName::T9));
    out.lo = 1;
    out.hi = std::min<int>(3, static_cast<int>(firsts.size()));
    for (int i = 0; i < out.hi; ++i)
        out.representatives.push_back(pres[firsts[i]]);
    return out;
}

} // namespace atk
