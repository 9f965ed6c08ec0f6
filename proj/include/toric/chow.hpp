#pragma once

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Reid's wall relation: sum_i coefficients[i] * ray_i = 0, with both opposite rays at 1.
struct WallRelation {
    Cone wall;
    std::array<RayId, 2> opposite{};
    std::map<RayId, Integer> coefficients;  // wall rays and opposite rays, zeros included

    Integer coefficient(RayId id) const;
    /// (-K . C) for the curve of the wall.
    Integer anticanonical_degree() const;
};

/// Numerical class of an l-cycle: N(multiset) = (D_{i1}...D_{il} . Y). Zero entries are not stored.
class CycleClass {
public:
    CycleClass() = default;
    explicit CycleClass(std::size_t degree) : degree_(degree) {}

    /// Degree-1 class with the given coefficients.
    static CycleClass linear(const std::map<RayId, Integer>& coefficients);

    std::size_t degree() const { return degree_; }
    const std::map<Multiset, Integer>& coeffs() const { return coeffs_; }
    Integer at(const Multiset& m) const;
    void set(Multiset m, Integer value);
    void add(Multiset m, const Integer& value);

    /// I_{Y/X} as a polynomial: sum over ordered tuples.
    Polynomial polynomial() const;

    /// Symmetric product of two degree-1 classes: N({i,j}) = a_i b_j + a_j b_i (a_i b_i on the
    /// diagonal doubled accordingly).
    static CycleClass symmetric_product(const CycleClass& a, const CycleClass& b);
    /// Class of the square of a degree-1 class: N({i,j}) = a_i a_j.
    static CycleClass square(const CycleClass& a);
    CycleClass& operator+=(const CycleClass& other);
    CycleClass& operator*=(const Integer& scalar);

    bool operator==(const CycleClass&) const = default;

private:
    std::size_t degree_ = 0;
    std::map<Multiset, Integer> coeffs_;
};

/// sum_j terms[j] * V(base + ray_j).
struct DivisorCombo {
    Cone base;
    std::map<RayId, Integer> terms;
};

WallRelation wall_relation(const Fan& fan, const Cone& wall);
CycleClass curve_class(const Fan& fan, const Cone& wall);
DivisorCombo restrict_divisor(const Fan& fan, RayId divisor, const Cone& sigma);

/// Memoizing intersection-number evaluator over one fan. Not thread-safe; use one per worker.
class IntersectionEngine {
public:
    explicit IntersectionEngine(const Fan& fan) : fan_(fan) {}

    const Fan& fan() const { return fan_; }

    /// (D_{i1}...D_{il} . V(sigma)), l = d - dim sigma.
    Integer number(std::span<const RayId> divisors, const Cone& sigma);
    /// Class of V(sigma) over all multisets of size d - dim sigma.
    CycleClass class_of(const Cone& sigma);

    std::size_t memo_size() const { return memo_.size(); }

private:
    Integer reduce(const Cone& sigma, std::span<const RayId> sorted_divisors);
    const DivisorCombo& restriction(RayId divisor, const Cone& sigma);

    struct KeyHash {
        std::size_t operator()(const std::vector<RayId>& key) const noexcept;
    };

    const Fan& fan_;
    // keys: sigma ids, a sentinel, then the divisor ids
    std::unordered_map<std::vector<RayId>, Integer, KeyHash> memo_;
    std::unordered_map<std::vector<RayId>, DivisorCombo, KeyHash> restrictions_;
};

Integer intersection_number(const Fan& fan, std::span<const RayId> divisors, const Cone& sigma);
/// Reduction that consumes divisors in the given order, without memoization.
Integer intersection_number_in_order(const Fan& fan, std::span<const RayId> divisors, const Cone& sigma);
CycleClass class_polynomial(const Fan& fan, const Cone& sigma);

struct ChernDegrees {
    std::size_t dim = 0;
    Integer c1_top;                      // c1^d
    std::optional<Integer> c1_pow_c2;    // c1^{d-2} c2, d >= 2
    std::optional<Rational> ch2_c1;      // c1^{d-2} ch2, d >= 2
    Integer euler;                       // degree of c_d
    std::optional<Integer> lemma_value;  // c1^{d-2} (c1^2 - 2 c2), d >= 2
};

ChernDegrees chern_degrees(const Fan& fan);

/// Degree of a degree-d polynomial in the prime divisors against the fundamental class.
Integer integrate(const Polynomial& p, const CycleClass& fundamental);

/// Rank of the surface / degree-2 monomial pairing matrix, i.e. dim N_2(X).
std::size_t n2_rank(const Fan& fan);

}  // namespace toric
