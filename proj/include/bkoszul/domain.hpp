#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

// Ball of radius R or polydisk with per-axis radii.  The ball is the
// theorem-faithful case; the polydisk (non-smooth boundary) is exploratory
// and runs are flagged as such in reports.
struct DomainSpec {
    enum class Kind { Ball, Polydisk };

    Kind kind = Kind::Ball;
    int n = 1;
    std::vector<double> radii;  // size 1 for ball, size n for polydisk

    static DomainSpec ball(int n, double R) {
        if (R <= 0) throw std::invalid_argument("ball radius must be positive");
        return {Kind::Ball, n, {R}};
    }
    static DomainSpec polydisk(std::vector<double> r) {
        if (r.empty()) throw std::invalid_argument("polydisk needs at least one radius");
        for (double v : r)
            if (v <= 0) throw std::invalid_argument("polydisk radii must be positive");
        int n = static_cast<int>(r.size());
        return {Kind::Polydisk, n, std::move(r)};
    }

    double scale() const { return *std::max_element(radii.begin(), radii.end()); }

    // Signed distance to the boundary: positive inside, negative outside.
    double boundary_distance(const std::vector<std::complex<double>>& z) const {
        if (kind == Kind::Ball) {
            double s = 0;
            for (const auto& zi : z) s += std::norm(zi);
            return radii[0] - std::sqrt(s);
        }
        double d = radii[0] - std::abs(z[0]);
        for (int i = 1; i < n; ++i) d = std::min(d, radii[i] - std::abs(z[i]));
        return d;
    }

    std::string describe() const {
        if (kind == Kind::Ball) return "ball:" + std::to_string(radii[0]);
        std::string s = "polydisk:";
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(radii[i]);
        return s;
    }
};

}  // namespace bk
