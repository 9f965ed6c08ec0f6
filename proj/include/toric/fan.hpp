#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric/errors.hpp"
#include "toric/integer.hpp"

namespace toric {

using RayId = std::uint32_t;
using LatticeVector = IntVector;

/// A simplicial cone given by a strictly increasing list of ray ids.
class Cone {
public:
    Cone() = default;
    Cone(std::initializer_list<RayId> ids);
    explicit Cone(std::vector<RayId> ids);

    const std::vector<RayId>& ids() const { return ids_; }
    std::size_t dim() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(RayId id) const;
    bool contains(const Cone& other) const;

    Cone with(RayId id) const;
    Cone without(RayId id) const;

    std::string str() const;

    auto operator<=>(const Cone&) const = default;

private:
    std::vector<RayId> ids_;
};

struct ConeHash {
    std::size_t operator()(const Cone& c) const noexcept;
};

/// Unvalidated fan data as read from input.
struct RawFan {
    long long dim = 0;
    std::vector<std::vector<Integer>> rays;
    std::vector<std::vector<long long>> max_cones;
};

/// A validated smooth complete fan. Ray order is the caller's; maximal cones are
/// stored sorted.
class Fan {
public:
    static Fan validate(const RawFan& raw);

    std::size_t dim() const { return dim_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(RayId id) const { return rays_.at(id); }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    std::size_t picard_number() const { return rays_.size() - dim_; }

    bool contains(const Cone& cone) const;
    /// Lowest-index maximal cone containing `cone`; throws ConeNotInFan.
    std::size_t containing_max_cone(const Cone& cone) const;
    /// Rows are the dual basis of the rays of maximal cone `index`, in cone order.
    const IntMatrix& dual_basis(std::size_t index) const { return dual_bases_.at(index); }

    RawFan raw() const;
    /// Same fan with rays sorted lexicographically and cones relabeled.
    Fan canonical() const;

    bool operator==(const Fan& other) const;

private:
    Fan() = default;

    std::size_t dim_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
    std::vector<IntMatrix> dual_bases_;
    std::unordered_map<Cone, std::size_t, ConeHash> face_owner_;
};

inline Fan validate_fan(const RawFan& raw) { return Fan::validate(raw); }

/// All cones of dimension l, sorted.
std::vector<Cone> faces(const Fan& fan, std::size_t l);

struct Wall {
    Cone cone;
    std::array<std::size_t, 2> max_cones;  // ascending
    std::array<RayId, 2> opposite;         // opposite[k] completes max_cones[k]
};

/// Every (d-1)-cone once, sorted by cone.
std::vector<Wall> walls(const Fan& fan);
Wall find_wall(const Fan& fan, const Cone& cone);

struct StarFan {
    Cone base_cone;
    std::size_t quotient_dim = 0;
    std::map<RayId, LatticeVector> image_rays;
    std::vector<Cone> quotient_max_cones;  // in original ray ids

    /// Validated fan in the quotient lattice; ray k is the k-th entry of image_rays.
    Fan to_fan() const;
    std::vector<RayId> ray_ids() const;
};

StarFan star_fan(const Fan& fan, const Cone& tau);

/// Blow-up along V(sigma): adds the ray sum of sigma as the last ray.
Fan star_subdivision(const Fan& fan, const Cone& sigma);

/// Image of the fan under a unimodular lattice map.
Fan apply_lattice_map(const Fan& fan, const IntMatrix& map);

}  // namespace toric
