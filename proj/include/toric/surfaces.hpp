#pragma once

#include <string>
#include <variant>

#include "toric/chow.hpp"

namespace toric {

/// V(tau) is a projective plane; curve_wall is a wall through tau.
struct PlaneSurface {
    Cone curve_wall;
    bool operator==(const PlaneSurface&) const = default;
};

/// V(tau) is the Hirzebruch surface F_alpha.
struct HirzebruchSurface {
    Integer alpha;
    Cone fiber_wall;
    Cone negative_wall;
    bool operator==(const HirzebruchSurface&) const = default;
};

/// Star fan with five or more rays; only the intersection oracle applies.
struct OtherSurface {
    std::size_t ray_count = 0;
    bool operator==(const OtherSurface&) const = default;
};

using SurfaceKind = std::variant<PlaneSurface, HirzebruchSurface, OtherSurface>;

std::string kind_name(const SurfaceKind& kind);

SurfaceKind classify_surface(const Fan& fan, const Cone& tau);

/// I_{S/X} from the curve classes of the surface: (I_C)^2 for planes,
/// alpha (I_fib)^2 + 2 I_fib I_neg for Hirzebruch surfaces.
/// Throws UnsupportedSurface for OtherSurface.
CycleClass surface_class_fast(const Fan& fan, const Cone& tau, const SurfaceKind& kind);
CycleClass surface_class_fast(const Fan& fan, const Cone& tau);

/// Fast route when the surface is recognized, intersection oracle otherwise.
CycleClass surface_class(IntersectionEngine& engine, const Cone& tau, const SurfaceKind& kind);

/// (ch_2(X) . S) = 1/2 sum_i N({i,i}).
Rational ch2_pair(const CycleClass& surface_class);

}  // namespace toric
