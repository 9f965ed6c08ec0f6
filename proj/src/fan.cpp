#include "toric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadConeIndex: return "BadConeIndex";
        case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
        case ErrorKind::DuplicateRay: return "DuplicateRay";
        case ErrorKind::UnusedRay: return "UnusedRay";
        case ErrorKind::NonUnimodularCone: return "NonUnimodularCone";
        case ErrorKind::UnpairedWall: return "UnpairedWall";
        case ErrorKind::CoverageFailure: return "CoverageFailure";
        case ErrorKind::ConeNotInFan: return "ConeNotInFan";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotAWall: return "NotAWall";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::UnsupportedSurface: return "UnsupportedSurface";
        case ErrorKind::InvalidBundle: return "InvalidBundle";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Cone

Cone::Cone(std::initializer_list<RayId> ids) : Cone(std::vector<RayId>(ids)) {}

Cone::Cone(std::vector<RayId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw ToricError(ErrorKind::BadConeIndex, "repeated ray id in cone");
    }
}

bool Cone::contains(RayId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool Cone::contains(const Cone& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

Cone Cone::with(RayId id) const {
    Cone out = *this;
    auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
    if (it != out.ids_.end() && *it == id) return out;
    out.ids_.insert(it, id);
    return out;
}

Cone Cone::without(RayId id) const {
    Cone out = *this;
    out.ids_.erase(std::remove(out.ids_.begin(), out.ids_.end(), id), out.ids_.end());
    return out;
}

std::string Cone::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) os << ',';
        os << ids_[i];
    }
    return os.str();
}

std::size_t ConeHash::operator()(const Cone& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (RayId id : c.ids()) {
        h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h ^ c.dim();
}

// ---------------------------------------------------------------------------
// Fan validation

namespace {

std::vector<long long> first_primes(std::size_t count) {
    std::vector<long long> primes;
    for (long long n = 2; primes.size() < count; ++n) {
        bool prime = true;
        for (long long p : primes) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    return primes;
}

// Fixed pseudo-random probe points for the coverage test.
std::vector<IntVector> probe_points(std::size_t d) {
    constexpr std::size_t kPoints = 8;
    const auto primes = first_primes(kPoints * d + 3);
    std::vector<IntVector> points;
    for (std::size_t k = 0; k < kPoints; ++k) {
        IntVector p(d);
        for (std::size_t t = 0; t < d; ++t) {
            const bool negative = ((k * 5 + t * 3 + k * t) % 7) < 3;
            const long long v = primes[k * d + t] * (1 + static_cast<long long>((k + t) % 3));
            p[t] = negative ? -v : v;
        }
        points.push_back(std::move(p));
    }
    return points;
}

template <typename F>
void for_each_subset(const std::vector<RayId>& ids, F&& f) {
    const std::size_t n = ids.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<RayId> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) sub.push_back(ids[i]);
        }
        f(Cone(std::move(sub)));
    }
}

}  // namespace

Fan Fan::validate(const RawFan& raw) {
    if (raw.dim < 1) throw ToricError(ErrorKind::DimensionMismatch, "fan dimension must be positive");
    const auto d = static_cast<std::size_t>(raw.dim);
    Fan fan;
    fan.dim_ = d;

    for (std::size_t i = 0; i < raw.rays.size(); ++i) {
        const auto& r = raw.rays[i];
        if (r.size() != d) {
            throw ToricError(ErrorKind::DimensionMismatch,
                             "ray " + std::to_string(i) + " has length " + std::to_string(r.size()));
        }
        if (gcd_of(r) != 1) throw ToricError(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i));
        fan.rays_.push_back(r);
    }
    {
        std::map<LatticeVector, std::size_t> seen;
        for (std::size_t i = 0; i < fan.rays_.size(); ++i) {
            auto [it, inserted] = seen.emplace(fan.rays_[i], i);
            if (!inserted) {
                throw ToricError(ErrorKind::DuplicateRay,
                                 "rays " + std::to_string(it->second) + " and " + std::to_string(i));
            }
        }
    }
    if (raw.max_cones.empty()) throw ToricError(ErrorKind::DimensionMismatch, "no maximal cones");

    std::vector<bool> used(fan.rays_.size(), false);
    std::set<Cone> cone_set;
    for (const auto& rc : raw.max_cones) {
        std::vector<RayId> ids;
        for (long long idx : rc) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= fan.rays_.size()) {
                throw ToricError(ErrorKind::BadConeIndex, "ray index " + std::to_string(idx));
            }
            ids.push_back(static_cast<RayId>(idx));
            used[static_cast<std::size_t>(idx)] = true;
        }
        Cone cone(std::move(ids));
        if (cone.dim() != d) {
            throw ToricError(ErrorKind::DimensionMismatch,
                             "maximal cone {" + cone.str() + "} does not have " + std::to_string(d) + " rays");
        }
        if (!cone_set.insert(cone).second) {
            throw ToricError(ErrorKind::CoverageFailure, "maximal cone {" + cone.str() + "} listed twice");
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) throw ToricError(ErrorKind::UnusedRay, "ray " + std::to_string(i) + " is in no cone");
    }
    fan.max_cones_.assign(cone_set.begin(), cone_set.end());

    for (const auto& cone : fan.max_cones_) {
        std::vector<IntVector> cols;
        for (RayId id : cone.ids()) cols.push_back(fan.rays_[id]);
        const IntMatrix basis = IntMatrix::from_columns(cols, d);
        const Integer det = determinant(basis);
        if (det != 1 && det != -1) {
            throw ToricError(ErrorKind::NonUnimodularCone, "cone {" + cone.str() + "} has determinant " + det.str());
        }
        fan.dual_bases_.push_back(unimodular_inverse(basis));
    }

    for (std::size_t i = 0; i < fan.max_cones_.size(); ++i) {
        for_each_subset(fan.max_cones_[i].ids(), [&](Cone c) { fan.face_owner_.emplace(std::move(c), i); });
    }

    // each wall in exactly two maximal cones, on opposite sides
    std::map<Cone, std::vector<std::pair<std::size_t, RayId>>> incidence;
    for (std::size_t i = 0; i < fan.max_cones_.size(); ++i) {
        for (RayId id : fan.max_cones_[i].ids()) incidence[fan.max_cones_[i].without(id)].emplace_back(i, id);
    }
    for (const auto& [wall, inc] : incidence) {
        if (inc.size() != 2) {
            throw ToricError(ErrorKind::UnpairedWall, "wall {" + wall.str() + "} lies in " +
                                                          std::to_string(inc.size()) + " maximal cone(s)");
        }
        const auto& [c0, p] = inc[0];
        const RayId q = inc[1].second;
        const auto& ids = fan.max_cones_[c0].ids();
        const auto pos = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), p) - ids.begin());
        if (dot(fan.dual_bases_[c0].row(pos), fan.rays_[q]) >= 0) {
            throw ToricError(ErrorKind::CoverageFailure, "cones at wall {" + wall.str() + "} overlap");
        }
    }

    std::size_t usable = 0;
    for (const auto& point : probe_points(d)) {
        std::size_t inside = 0;
        bool degenerate = false;
        for (const auto& dual : fan.dual_bases_) {
            const IntVector coords = dual * point;
            bool all_positive = true;
            for (const auto& x : coords) {
                if (x == 0) degenerate = true;
                if (x <= 0) all_positive = false;
            }
            if (all_positive) ++inside;
        }
        if (degenerate) continue;
        ++usable;
        if (inside != 1) {
            throw ToricError(ErrorKind::CoverageFailure,
                             "probe point covered by " + std::to_string(inside) + " maximal cones");
        }
    }
    if (usable == 0) throw ToricError(ErrorKind::CoverageFailure, "no usable probe point");
    if (fan.rays_.size() <= d) throw ToricError(ErrorKind::CoverageFailure, "Picard number must be positive");
    return fan;
}

bool Fan::contains(const Cone& cone) const { return face_owner_.count(cone) != 0; }

std::size_t Fan::containing_max_cone(const Cone& cone) const {
    auto it = face_owner_.find(cone);
    if (it == face_owner_.end()) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + cone.str() + "}");
    return it->second;
}

RawFan Fan::raw() const {
    RawFan raw;
    raw.dim = static_cast<long long>(dim_);
    raw.rays = rays_;
    for (const auto& c : max_cones_) raw.max_cones.emplace_back(c.ids().begin(), c.ids().end());
    return raw;
}

Fan Fan::canonical() const {
    std::vector<RayId> order(rays_.size());
    std::iota(order.begin(), order.end(), RayId{0});
    std::sort(order.begin(), order.end(), [&](RayId a, RayId b) { return rays_[a] < rays_[b]; });
    std::vector<long long> new_id(rays_.size());
    RawFan raw;
    raw.dim = static_cast<long long>(dim_);
    for (std::size_t k = 0; k < order.size(); ++k) {
        new_id[order[k]] = static_cast<long long>(k);
        raw.rays.push_back(rays_[order[k]]);
    }
    for (const auto& c : max_cones_) {
        std::vector<long long> ids;
        for (RayId id : c.ids()) ids.push_back(new_id[id]);
        raw.max_cones.push_back(std::move(ids));
    }
    return Fan::validate(raw);
}

bool Fan::operator==(const Fan& other) const {
    return dim_ == other.dim_ && rays_ == other.rays_ && max_cones_ == other.max_cones_;
}

// ---------------------------------------------------------------------------
// Faces, walls, stars

std::vector<Cone> faces(const Fan& fan, std::size_t l) {
    if (l > fan.dim()) throw ToricError(ErrorKind::OutOfRange, "face dimension " + std::to_string(l));
    std::set<Cone> out;
    for (const auto& mc : fan.max_cones()) {
        for_each_subset(mc.ids(), [&](Cone c) {
            if (c.dim() == l) out.insert(std::move(c));
        });
    }
    return {out.begin(), out.end()};
}

std::vector<Wall> walls(const Fan& fan) {
    std::map<Cone, Wall> by_cone;
    const auto& mcs = fan.max_cones();
    for (std::size_t i = 0; i < mcs.size(); ++i) {
        for (RayId id : mcs[i].ids()) {
            Cone w = mcs[i].without(id);
            auto it = by_cone.find(w);
            if (it == by_cone.end()) {
                by_cone.emplace(w, Wall{w, {i, i}, {id, id}});
            } else {
                it->second.max_cones[1] = i;
                it->second.opposite[1] = id;
            }
        }
    }
    std::vector<Wall> out;
    out.reserve(by_cone.size());
    for (auto& [_, w] : by_cone) out.push_back(std::move(w));
    return out;
}

Wall find_wall(const Fan& fan, const Cone& cone) {
    if (cone.dim() + 1 != fan.dim() || !fan.contains(cone)) {
        throw ToricError(ErrorKind::NotAWall, "cone {" + cone.str() + "}");
    }
    Wall w{cone, {0, 0}, {0, 0}};
    std::size_t found = 0;
    const auto& mcs = fan.max_cones();
    for (std::size_t i = 0; i < mcs.size() && found < 2; ++i) {
        if (!mcs[i].contains(cone)) continue;
        for (RayId id : mcs[i].ids()) {
            if (!cone.contains(id)) {
                w.max_cones[found] = i;
                w.opposite[found] = id;
            }
        }
        ++found;
    }
    return w;
}

StarFan star_fan(const Fan& fan, const Cone& tau) {
    if (!fan.contains(tau)) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + tau.str() + "}");
    if (tau.dim() >= fan.dim()) throw ToricError(ErrorKind::OutOfRange, "star of a maximal cone");

    const std::size_t owner = fan.containing_max_cone(tau);
    const auto& owner_ids = fan.max_cones()[owner].ids();
    const IntMatrix& dual = fan.dual_basis(owner);
    std::vector<std::size_t> quotient_rows;
    for (std::size_t k = 0; k < owner_ids.size(); ++k) {
        if (!tau.contains(owner_ids[k])) quotient_rows.push_back(k);
    }

    StarFan star;
    star.base_cone = tau;
    star.quotient_dim = fan.dim() - tau.dim();
    for (const auto& mc : fan.max_cones()) {
        if (!mc.contains(tau)) continue;
        std::vector<RayId> rest;
        for (RayId id : mc.ids()) {
            if (tau.contains(id)) continue;
            rest.push_back(id);
            if (!star.image_rays.count(id)) {
                LatticeVector image;
                for (std::size_t row : quotient_rows) image.push_back(dot(dual.row(row), fan.ray(id)));
                star.image_rays.emplace(id, std::move(image));
            }
        }
        star.quotient_max_cones.emplace_back(std::move(rest));
    }
    std::sort(star.quotient_max_cones.begin(), star.quotient_max_cones.end());
    return star;
}

std::vector<RayId> StarFan::ray_ids() const {
    std::vector<RayId> ids;
    for (const auto& [id, _] : image_rays) ids.push_back(id);
    return ids;
}

Fan StarFan::to_fan() const {
    RawFan raw;
    raw.dim = static_cast<long long>(quotient_dim);
    std::map<RayId, long long> index;
    for (const auto& [id, v] : image_rays) {
        index.emplace(id, static_cast<long long>(raw.rays.size()));
        raw.rays.push_back(v);
    }
    for (const auto& c : quotient_max_cones) {
        std::vector<long long> ids;
        for (RayId id : c.ids()) ids.push_back(index.at(id));
        raw.max_cones.push_back(std::move(ids));
    }
    return Fan::validate(raw);
}

Fan star_subdivision(const Fan& fan, const Cone& sigma) {
    if (!fan.contains(sigma)) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + sigma.str() + "}");
    if (sigma.dim() < 2) throw ToricError(ErrorKind::DimensionTooSmall, "cone {" + sigma.str() + "}");

    RawFan raw = fan.raw();
    LatticeVector added(fan.dim());
    for (RayId id : sigma.ids()) {
        for (std::size_t t = 0; t < fan.dim(); ++t) added[t] += fan.ray(id)[t];
    }
    const auto new_id = static_cast<RayId>(fan.ray_count());
    raw.rays.push_back(std::move(added));
    raw.max_cones.clear();
    for (const auto& mc : fan.max_cones()) {
        if (!mc.contains(sigma)) {
            raw.max_cones.emplace_back(mc.ids().begin(), mc.ids().end());
            continue;
        }
        for (RayId s : sigma.ids()) {
            const Cone c = mc.without(s).with(new_id);
            raw.max_cones.emplace_back(c.ids().begin(), c.ids().end());
        }
    }
    return Fan::validate(raw);
}

Fan apply_lattice_map(const Fan& fan, const IntMatrix& map) {
    RawFan raw = fan.raw();
    for (auto& r : raw.rays) r = map * r;
    return Fan::validate(raw);
}

}  // namespace toric
