#include "atk/fan.hpp"

#include <cstddef>
#include <string>

namespace atk {

namespace {

std::string vec_str(const LatticeVector& v) {
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

// Exact angular order on nonzero vectors: upper half-plane (including the
// positive x-axis) before lower, cross product decides within a half-plane.
int half_plane(const LatticeVector& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0))
        return 0;
    return 1;
}

bool angle_less(const LatticeVector& v, const LatticeVector& w) {
    int hv = half_plane(v), hw = half_plane(w);
    if (hv != hw)
        return hv < hw;
    return det2(v, w) > 0;
}

} // namespace

int winding_number(const std::vector<LatticeVector>& rays) {
    const std::size_t n = rays.size();
    int descents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!angle_less(rays[i], rays[(i + 1) % n]))
            ++descents;
    }
    return descents;
}

Fan::Fan(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {
    const std::size_t n = rays_.size();
    if (n < 3)
        fail(errc::not_toric, "a complete fan needs at least 3 rays");
    for (const LatticeVector& v : rays_) {
        if (!is_primitive(v))
            fail(errc::not_toric, "ray " + vec_str(v) + " is not primitive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int d = det2(rays_[i], rays_[(i + 1) % n]);
        if (d != 1)
            fail(errc::not_toric, "adjacent rays " + vec_str(rays_[i]) + ", " +
                                      vec_str(rays_[(i + 1) % n]) + " have determinant " + d.str());
    }
    int w = winding_number(rays_);
    if (w != 1)
        fail(errc::not_toric, "ray sequence winds " + std::to_string(w) + " times, expected 1");
    // Normalize so the first two rays become the standard basis.
    Mat2 u = Mat2::from_columns(rays_[0], rays_[1]).inverse_unimodular();
    for (LatticeVector& v : rays_)
        v = u.apply(v);
}

Fan fan_from_cycle(const Cycle& c) {
    validate_cycle(c);
    const std::size_t n = c.size();
    std::vector<LatticeVector> rays;
    rays.reserve(n);
    rays.push_back({1, 0});
    rays.push_back({0, 1});
    for (std::size_t i = 1; i + 1 < n; ++i)
        rays.push_back(c[i] * rays[i] - rays[i - 1]);
    // Closure: the recurrence must return to v_0 and satisfy the neighbor
    // relation at position 0.
    LatticeVector vn = c[n - 1] * rays[n - 1] - rays[n - 2];
    if (!(vn == rays[0]))
        fail(errc::not_toric, "ray recurrence does not close up: v_n = " + vec_str(vn));
    if (!(rays[n - 1] + rays[1] == c[0] * rays[0]))
        fail(errc::not_toric, "neighbor relation fails at component 0");
    return Fan(std::move(rays)); // validates winding
}

Cycle cycle_from_fan(const Fan& f) {
    const std::vector<LatticeVector>& r = f.rays();
    const std::size_t n = r.size();
    Cycle c(n);
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector s = r[(i + n - 1) % n] + r[(i + 1) % n];
        // s = a_i v_i with v_i primitive, so the quotient is exact.
        c[i] = (r[i].x != 0) ? s.x / r[i].x : s.y / r[i].y;
    }
    return c;
}

Fan corner_blowup(const Fan& f, int i) {
    const int n = f.size();
    if (i < 0 || i >= n)
        fail(errc::length_out_of_range, "corner index out of range");
    std::vector<LatticeVector> rays = f.rays();
    LatticeVector fresh = rays[i] + rays[(i + 1) % n];
    rays.insert(rays.begin() + i + 1, fresh);
    return Fan(std::move(rays));
}

Fan corner_blowdown(const Fan& f, int i) {
    const int n = f.size();
    if (i < 0 || i >= n)
        fail(errc::length_out_of_range, "ray index out of range");
    const std::vector<LatticeVector>& r = f.rays();
    if (!(r[(i + n - 1) % n] + r[(i + 1) % n] == r[i]))
        fail(errc::not_contractible,
             "ray " + std::to_string(i) + " is not a -1 component, cannot contract");
    std::vector<LatticeVector> rays = r;
    rays.erase(rays.begin() + i);
    return Fan(std::move(rays));
}

bool are_opposite(const Fan& f, int i, int j) {
    const int n = f.size();
    if (i < 0 || i >= n || j < 0 || j >= n)
        fail(errc::length_out_of_range, "component index out of range");
    return f.rays()[i] == -f.rays()[j];
}

std::vector<FanSymmetry> fan_symmetries(const Fan& f) {
    const std::vector<LatticeVector>& r = f.rays();
    const int n = f.size();
    std::vector<FanSymmetry> out;
    for (const DihedralElement& g : dihedral_elements(n)) {
        // The normalized fan has rays[0] = e1, rays[1] = e2, so the candidate
        // map is determined by the images of those two rays.
        Mat2 u = Mat2::from_columns(r[dihedral_image(g, n, 0)], r[dihedral_image(g, n, 1)]);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = u.apply(r[i]) == r[dihedral_image(g, n, i)];
        if (ok)
            out.push_back({g, u});
    }
    return out;
}

} // namespace atk
