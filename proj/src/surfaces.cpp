#include "toric/surfaces.hpp"

#include <algorithm>

namespace toric {

namespace {

using Vec2 = std::array<Integer, 2>;

// angular order starting from the positive x-axis
bool angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
    const bool ha = half(a);
    const bool hb = half(b);
    if (ha != hb) return !ha;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

Vec2 sum(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
bool is_zero(const Vec2& v) { return v[0] == 0 && v[1] == 0; }

// k with v = k * primitive, assuming v is a multiple of primitive
std::optional<Integer> multiple_of(const Vec2& v, const Vec2& primitive) {
    const std::size_t t = primitive[0] != 0 ? 0 : 1;
    const Integer k = v[t] / primitive[t];
    if (k * primitive[0] != v[0] || k * primitive[1] != v[1]) return std::nullopt;
    return k;
}

}  // namespace

std::string kind_name(const SurfaceKind& kind) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PlaneSurface>) return "P2";
            else if constexpr (std::is_same_v<T, HirzebruchSurface>) return "Hirzebruch";
            else return "Other";
        },
        kind);
}

SurfaceKind classify_surface(const Fan& fan, const Cone& tau) {
    if (fan.dim() < 2 || tau.dim() + 2 != fan.dim()) {
        throw ToricError(ErrorKind::WrongDimension, "cone {" + tau.str() + "} is not of codimension 2");
    }
    const StarFan star = star_fan(fan, tau);
    const std::size_t k = star.image_rays.size();
    if (k == 3) return PlaneSurface{tau.with(star.image_rays.begin()->first)};
    if (k != 4) return OtherSurface{k};

    struct StarRay {
        RayId id;
        Vec2 v;
    };
    std::vector<StarRay> rays;
    for (const auto& [id, v] : star.image_rays) rays.push_back({id, {v[0], v[1]}});
    std::sort(rays.begin(), rays.end(), [](const StarRay& a, const StarRay& b) { return angle_less(a.v, b.v); });

    // opposite pairs in cyclic order: (0,2) and (1,3)
    std::array<std::array<StarRay, 2>, 2> pairs{{{rays[0], rays[2]}, {rays[1], rays[3]}}};
    for (auto& p : pairs) {
        if (p[1].id < p[0].id) std::swap(p[0], p[1]);
    }
    const std::array<Vec2, 2> sums{sum(pairs[0][0].v, pairs[0][1].v), sum(pairs[1][0].v, pairs[1][1].v)};

    std::size_t fiber;
    if (is_zero(sums[0]) && is_zero(sums[1])) {
        fiber = pairs[0][0].id < pairs[1][0].id ? 0 : 1;
    } else if (is_zero(sums[0])) {
        fiber = 0;
    } else if (is_zero(sums[1])) {
        fiber = 1;
    } else {
        throw ToricError(ErrorKind::UnsupportedSurface, "4-ray star of {" + tau.str() + "} without a fiber pair");
    }
    const auto& fib = pairs[fiber];
    const auto& other = pairs[1 - fiber];
    const Vec2& other_sum = sums[1 - fiber];

    // other pair sums to alpha * (the ray carrying the negative section), alpha >= 0
    RayId negative = fib[0].id;
    Integer alpha = 0;
    if (!is_zero(other_sum)) {
        const auto k0 = multiple_of(other_sum, fib[0].v);
        if (!k0) throw ToricError(ErrorKind::UnsupportedSurface, "star of {" + tau.str() + "} is not smooth");
        alpha = *k0;
        if (alpha < 0) {
            alpha = -alpha;
            negative = fib[1].id;
        }
    }
    return HirzebruchSurface{alpha, tau.with(other[0].id), tau.with(negative)};
}

CycleClass surface_class_fast(const Fan& fan, const Cone& tau, const SurfaceKind& kind) {
    if (const auto* plane = std::get_if<PlaneSurface>(&kind)) {
        return CycleClass::square(curve_class(fan, plane->curve_wall));
    }
    if (const auto* hz = std::get_if<HirzebruchSurface>(&kind)) {
        const CycleClass fiber = curve_class(fan, hz->fiber_wall);
        const CycleClass negative = curve_class(fan, hz->negative_wall);
        CycleClass out = CycleClass::square(fiber);
        out *= hz->alpha;
        out += CycleClass::symmetric_product(fiber, negative);
        return out;
    }
    throw ToricError(ErrorKind::UnsupportedSurface, "no closed form for the surface of {" + tau.str() + "}");
}

CycleClass surface_class_fast(const Fan& fan, const Cone& tau) {
    return surface_class_fast(fan, tau, classify_surface(fan, tau));
}

CycleClass surface_class(IntersectionEngine& engine, const Cone& tau, const SurfaceKind& kind) {
    if (std::holds_alternative<OtherSurface>(kind)) return engine.class_of(tau);
    return surface_class_fast(engine.fan(), tau, kind);
}

Rational ch2_pair(const CycleClass& surface_class) {
    if (surface_class.degree() != 2) throw ToricError(ErrorKind::DegreeMismatch, "ch2 pairs with surfaces only");
    Integer diagonal = 0;
    for (const auto& [m, n] : surface_class.coeffs()) {
        if (m[0] == m[1]) diagonal += n;
    }
    return Rational(diagonal, 2);
}

}  // namespace toric
