#include "toric/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

Integer BundleSpec::twist_sum() const {
    Integer s = 0;
    for (const auto& a : twists) s += a;
    return s;
}

std::string BundleSpec::str() const {
    std::ostringstream os;
    os << "m=" << m << " n=" << n << " a=(";
    for (std::size_t i = 0; i < twists.size(); ++i) os << (i ? "," : "") << twists[i];
    os << ')';
    return os.str();
}

void BundleSpec::check() const {
    if (m < 2 || n < 2) throw ToricError(ErrorKind::InvalidBundle, "m and n must be at least 2");
    if (twists.size() + 1 != m) throw ToricError(ErrorKind::InvalidBundle, "expected m - 1 twists");
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (twists[i] < 0) throw ToricError(ErrorKind::InvalidBundle, "negative twist");
        if (i > 0 && twists[i] > twists[i - 1]) throw ToricError(ErrorKind::InvalidBundle, "twists must be non-increasing");
    }
}

Fan projective_space(std::size_t d) {
    if (d < 1) throw ToricError(ErrorKind::OutOfRange, "projective space of dimension 0");
    RawFan raw;
    raw.dim = static_cast<long long>(d);
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d);
        e[i] = 1;
        raw.rays.push_back(std::move(e));
    }
    raw.rays.emplace_back(d, Integer(-1));
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<long long> cone;
        for (std::size_t i = 0; i <= d; ++i) {
            if (i != skip) cone.push_back(static_cast<long long>(i));
        }
        raw.max_cones.push_back(std::move(cone));
    }
    return Fan::validate(raw);
}

Fan hirzebruch(const Integer& alpha) {
    if (alpha < 0) throw ToricError(ErrorKind::OutOfRange, "Hirzebruch degree must be non-negative");
    RawFan raw;
    raw.dim = 2;
    raw.rays = {{1, 0}, {0, 1}, {-1, alpha}, {0, -1}};
    raw.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return Fan::validate(raw);
}

Fan product(const Fan& a, const Fan& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    RawFan raw;
    raw.dim = static_cast<long long>(da + db);
    for (const auto& r : a.rays()) {
        IntVector v(da + db);
        std::copy(r.begin(), r.end(), v.begin());
        raw.rays.push_back(std::move(v));
    }
    for (const auto& r : b.rays()) {
        IntVector v(da + db);
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
        raw.rays.push_back(std::move(v));
    }
    const auto offset = static_cast<long long>(a.ray_count());
    for (const auto& ca : a.max_cones()) {
        for (const auto& cb : b.max_cones()) {
            std::vector<long long> ids(ca.ids().begin(), ca.ids().end());
            for (RayId id : cb.ids()) ids.push_back(offset + id);
            raw.max_cones.push_back(std::move(ids));
        }
    }
    return Fan::validate(raw);
}

Fan kleinschmidt_bundle(const BundleSpec& spec) {
    spec.check();
    const std::size_t m = spec.m;
    const std::size_t n = spec.n;
    const std::size_t d = spec.dim();
    RawFan raw;
    raw.dim = static_cast<long long>(d);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        IntVector v(d);
        v[i] = 1;
        raw.rays.push_back(std::move(v));
    }
    {
        IntVector v(d);
        for (std::size_t i = 0; i + 1 < m; ++i) v[i] = -1;
        raw.rays.push_back(std::move(v));
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        IntVector v(d);
        v[m - 1 + j] = 1;
        raw.rays.push_back(std::move(v));
    }
    {
        IntVector v(d);
        for (std::size_t i = 0; i + 1 < m; ++i) v[i] = spec.twists[i];
        for (std::size_t j = 0; j + 1 < n; ++j) v[m - 1 + j] = -1;
        raw.rays.push_back(std::move(v));
    }
    for (std::size_t skip_x = 0; skip_x < m; ++skip_x) {
        for (std::size_t skip_y = 0; skip_y < n; ++skip_y) {
            std::vector<long long> cone;
            for (std::size_t i = 0; i < m; ++i) {
                if (i != skip_x) cone.push_back(static_cast<long long>(i));
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (j != skip_y) cone.push_back(static_cast<long long>(m + j));
            }
            raw.max_cones.push_back(std::move(cone));
        }
    }
    return Fan::validate(raw);
}

std::vector<NamedFan> del_pezzo_database() {
    const Fan p2 = projective_space(2);
    const Fan bl1 = star_subdivision(p2, Cone{0, 1});
    const Fan bl2 = star_subdivision(bl1, Cone{1, 2});
    const Fan bl3 = star_subdivision(bl2, Cone{0, 2});
    return {
        {"P2", p2},
        {"P1xP1", product(projective_space(1), projective_space(1))},
        {"Bl1P2", bl1},
        {"Bl2P2", bl2},
        {"Bl3P2", bl3},
    };
}

std::vector<BundleSpec> bundle_specs(std::size_t m, std::size_t n, const Integer& budget) {
    std::vector<BundleSpec> out;
    std::vector<Integer> twists(m - 1);
    auto rec = [&](auto&& self, std::size_t pos, const Integer& cap, const Integer& left) -> void {
        if (pos == twists.size()) {
            out.push_back(BundleSpec{m, n, twists});
            return;
        }
        const Integer top = cap < left ? cap : left;
        for (Integer a = 0; a <= top; ++a) {
            twists[pos] = a;
            self(self, pos + 1, a, left - a);
        }
    };
    rec(rec, 0, budget, budget);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toric
