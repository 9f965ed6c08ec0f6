#include "toric/chow.hpp"

#include <algorithm>
#include <limits>

namespace toric {

// ---------------------------------------------------------------------------
// WallRelation / CycleClass

Integer WallRelation::coefficient(RayId id) const {
    auto it = coefficients.find(id);
    return it == coefficients.end() ? Integer(0) : it->second;
}

Integer WallRelation::anticanonical_degree() const {
    Integer sum = 0;
    for (const auto& [_, c] : coefficients) sum += c;
    return sum;
}

CycleClass CycleClass::linear(const std::map<RayId, Integer>& coefficients) {
    CycleClass c(1);
    for (const auto& [id, v] : coefficients) c.set({id}, v);
    return c;
}

Integer CycleClass::at(const Multiset& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void CycleClass::set(Multiset m, Integer value) {
    if (m.size() != degree_) throw ToricError(ErrorKind::DegreeMismatch, "multiset size differs from class degree");
    std::sort(m.begin(), m.end());
    if (value == 0) {
        coeffs_.erase(m);
    } else {
        coeffs_[std::move(m)] = std::move(value);
    }
}

void CycleClass::add(Multiset m, const Integer& value) {
    std::sort(m.begin(), m.end());
    set(m, at(m) + value);
}

Polynomial CycleClass::polynomial() const {
    Polynomial p;
    for (const auto& [m, n] : coeffs_) {
        Polynomial term(n * arrangement_count(m));
        for (RayId id : m) term = term * Polynomial::variable(id);
        p += term;
    }
    return p;
}

CycleClass CycleClass::symmetric_product(const CycleClass& a, const CycleClass& b) {
    if (a.degree() != 1 || b.degree() != 1) {
        throw ToricError(ErrorKind::DegreeMismatch, "symmetric product needs two degree-1 classes");
    }
    CycleClass out(2);
    for (const auto& [ma, ca] : a.coeffs()) {
        for (const auto& [mb, cb] : b.coeffs()) {
            // the tensor a (x) b + b (x) a, folded onto multisets
            out.add({ma[0], mb[0]}, ca * cb);
        }
    }
    for (auto& [m, v] : out.coeffs_) {
        if (m[0] == m[1]) v *= 2;
    }
    return out;
}

CycleClass CycleClass::square(const CycleClass& a) {
    if (a.degree() != 1) throw ToricError(ErrorKind::DegreeMismatch, "square needs a degree-1 class");
    CycleClass out(2);
    for (const auto& [ma, ca] : a.coeffs()) {
        for (const auto& [mb, cb] : a.coeffs()) {
            if (ma[0] <= mb[0]) out.set({ma[0], mb[0]}, ca * cb);
        }
    }
    return out;
}

CycleClass& CycleClass::operator+=(const CycleClass& other) {
    if (other.degree_ != degree_) throw ToricError(ErrorKind::DegreeMismatch, "adding classes of different degree");
    for (const auto& [m, v] : other.coeffs_) add(m, v);
    return *this;
}

CycleClass& CycleClass::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [_, v] : coeffs_) v *= scalar;
    return *this;
}

// ---------------------------------------------------------------------------
// Walls and restriction

WallRelation wall_relation(const Fan& fan, const Cone& wall) {
    const Wall w = find_wall(fan, wall);
    const Cone& mc = fan.max_cones()[w.max_cones[0]];
    const RayId p = w.opposite[0];
    const RayId q = w.opposite[1];
    const IntVector coords = fan.dual_basis(w.max_cones[0]) * fan.ray(q);

    WallRelation rel;
    rel.wall = wall;
    rel.opposite = w.opposite;
    for (std::size_t k = 0; k < mc.ids().size(); ++k) {
        const RayId id = mc.ids()[k];
        if (id == p) {
            if (coords[k] != -1) {
                throw ToricError(ErrorKind::NonUnimodularCone, "wall {" + wall.str() + "} is not smooth");
            }
            rel.coefficients[p] = 1;
        } else {
            rel.coefficients[id] = -coords[k];
        }
    }
    rel.coefficients[q] = 1;
    return rel;
}

CycleClass curve_class(const Fan& fan, const Cone& wall) {
    return CycleClass::linear(wall_relation(fan, wall).coefficients);
}

DivisorCombo restrict_divisor(const Fan& fan, RayId divisor, const Cone& sigma) {
    if (!fan.contains(sigma)) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + sigma.str() + "}");
    if (sigma.dim() >= fan.dim()) throw ToricError(ErrorKind::OutOfRange, "cannot restrict to a point");
    if (divisor >= fan.ray_count()) throw ToricError(ErrorKind::OutOfRange, "ray " + std::to_string(divisor));

    DivisorCombo combo{sigma, {}};
    if (!sigma.contains(divisor)) {
        if (fan.contains(sigma.with(divisor))) combo.terms.emplace(divisor, 1);
        return combo;
    }
    // D_i ~ D_i - div(chi^u) with <u, ray_i> = 1 and u vanishing on the rest of a
    // maximal cone containing sigma.
    const std::size_t owner = fan.containing_max_cone(sigma);
    const auto& ids = fan.max_cones()[owner].ids();
    const auto pos = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), divisor) - ids.begin());
    const IntVector u = fan.dual_basis(owner).row(pos);
    for (RayId j = 0; j < fan.ray_count(); ++j) {
        if (sigma.contains(j) || !fan.contains(sigma.with(j))) continue;
        Integer c = -dot(u, fan.ray(j));
        if (c != 0) combo.terms.emplace(j, std::move(c));
    }
    return combo;
}

// ---------------------------------------------------------------------------
// Intersection numbers

namespace {

void check_request(const Fan& fan, std::span<const RayId> divisors, const Cone& sigma) {
    if (!fan.contains(sigma)) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + sigma.str() + "}");
    if (divisors.size() + sigma.dim() != fan.dim()) {
        throw ToricError(ErrorKind::DegreeMismatch, std::to_string(divisors.size()) + " divisors on a cycle of dimension " +
                                                        std::to_string(fan.dim() - sigma.dim()));
    }
    for (RayId id : divisors) {
        if (id >= fan.ray_count()) throw ToricError(ErrorKind::OutOfRange, "ray " + std::to_string(id));
    }
}

Integer reduce_in_order(const Fan& fan, const Cone& sigma, std::span<const RayId> divisors) {
    if (divisors.empty()) return 1;
    const DivisorCombo combo = restrict_divisor(fan, divisors.front(), sigma);
    Integer total = 0;
    for (const auto& [j, c] : combo.terms) total += c * reduce_in_order(fan, sigma.with(j), divisors.subspan(1));
    return total;
}

}  // namespace

std::size_t IntersectionEngine::KeyHash::operator()(const std::vector<RayId>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (RayId id : key) h = (h ^ id) * 1099511628211ull;
    return h;
}

const DivisorCombo& IntersectionEngine::restriction(RayId divisor, const Cone& sigma) {
    std::vector<RayId> key = sigma.ids();
    key.push_back(std::numeric_limits<RayId>::max());
    key.push_back(divisor);
    auto it = restrictions_.find(key);
    if (it == restrictions_.end()) it = restrictions_.emplace(std::move(key), restrict_divisor(fan_, divisor, sigma)).first;
    return it->second;
}

Integer IntersectionEngine::reduce(const Cone& sigma, std::span<const RayId> divisors) {
    if (divisors.empty()) return 1;
    std::vector<RayId> key = sigma.ids();
    key.push_back(std::numeric_limits<RayId>::max());
    key.insert(key.end(), divisors.begin(), divisors.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Integer total = 0;
    const DivisorCombo& combo = restriction(divisors.front(), sigma);
    for (const auto& [j, c] : combo.terms) total += c * reduce(sigma.with(j), divisors.subspan(1));
    memo_.emplace(std::move(key), total);
    return total;
}

Integer IntersectionEngine::number(std::span<const RayId> divisors, const Cone& sigma) {
    check_request(fan_, divisors, sigma);
    std::vector<RayId> sorted(divisors.begin(), divisors.end());
    std::sort(sorted.begin(), sorted.end());
    return reduce(sigma, sorted);
}

CycleClass IntersectionEngine::class_of(const Cone& sigma) {
    if (!fan_.contains(sigma)) throw ToricError(ErrorKind::ConeNotInFan, "cone {" + sigma.str() + "}");
    const std::size_t l = fan_.dim() - sigma.dim();
    CycleClass cls(l);

    std::vector<RayId> candidates;
    for (RayId j = 0; j < fan_.ray_count(); ++j) {
        if (sigma.contains(j) || fan_.contains(sigma.with(j))) candidates.push_back(j);
    }

    Multiset current;
    // non-decreasing sequences over candidates whose support extends sigma inside the fan
    auto extend = [&](auto&& self, std::size_t start, const Cone& support) -> void {
        if (current.size() == l) {
            Integer n = reduce(sigma, current);
            if (n != 0) cls.set(current, std::move(n));
            return;
        }
        for (std::size_t k = start; k < candidates.size(); ++k) {
            const RayId j = candidates[k];
            if (support.contains(j)) {
                current.push_back(j);
                self(self, k, support);
                current.pop_back();
                continue;
            }
            Cone grown = support.with(j);
            if (!fan_.contains(grown)) continue;
            current.push_back(j);
            self(self, k, grown);
            current.pop_back();
        }
    };
    extend(extend, 0, sigma);
    return cls;
}

Integer intersection_number(const Fan& fan, std::span<const RayId> divisors, const Cone& sigma) {
    IntersectionEngine engine(fan);
    return engine.number(divisors, sigma);
}

Integer intersection_number_in_order(const Fan& fan, std::span<const RayId> divisors, const Cone& sigma) {
    check_request(fan, divisors, sigma);
    return reduce_in_order(fan, sigma, divisors);
}

CycleClass class_polynomial(const Fan& fan, const Cone& sigma) {
    IntersectionEngine engine(fan);
    return engine.class_of(sigma);
}

// ---------------------------------------------------------------------------
// Chern degrees and N_2

Integer integrate(const Polynomial& p, const CycleClass& fundamental) {
    Integer total = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.size() != fundamental.degree()) {
            throw ToricError(ErrorKind::DegreeMismatch, "integrand is not of top degree");
        }
        total += c * fundamental.at(m);
    }
    return total;
}

ChernDegrees chern_degrees(const Fan& fan) {
    const std::size_t d = fan.dim();
    const std::size_t m = fan.ray_count();
    const CycleClass fundamental = class_polynomial(fan, Cone{});
    const Polynomial c1 = Polynomial::elementary_symmetric(1, m);

    ChernDegrees out;
    out.dim = d;
    out.c1_top = integrate(c1.pow(static_cast<unsigned>(d)), fundamental);
    out.euler = integrate(Polynomial::elementary_symmetric(d, m), fundamental);
    if (d >= 2) {
        const Polynomial c1_pow = c1.pow(static_cast<unsigned>(d - 2));
        const Integer c1c2 = integrate(c1_pow * Polynomial::elementary_symmetric(2, m), fundamental);
        Polynomial squares;
        for (RayId i = 0; i < m; ++i) squares += Polynomial::variable(i) * Polynomial::variable(i);
        out.c1_pow_c2 = c1c2;
        out.ch2_c1 = Rational(integrate(c1_pow * squares, fundamental), 2);
        out.lemma_value = out.c1_top - 2 * c1c2;
    }
    return out;
}

std::size_t n2_rank(const Fan& fan) {
    if (fan.dim() < 2) throw ToricError(ErrorKind::WrongDimension, "N_2 needs dimension at least 2");
    const std::size_t m = fan.ray_count();
    std::vector<Multiset> columns;
    for (RayId i = 0; i < m; ++i) {
        for (RayId j = i; j < m; ++j) columns.push_back({i, j});
    }
    const auto surfaces = faces(fan, fan.dim() - 2);
    IntersectionEngine engine(fan);
    IntMatrix pairing(surfaces.size(), columns.size());
    for (std::size_t r = 0; r < surfaces.size(); ++r) {
        const CycleClass cls = engine.class_of(surfaces[r]);
        for (std::size_t c = 0; c < columns.size(); ++c) pairing(r, c) = cls.at(columns[c]);
    }
    return rank(pairing);
}

}  // namespace toric
