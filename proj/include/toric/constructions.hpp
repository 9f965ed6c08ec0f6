#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Kleinschmidt parameters of P_{P^{n-1}}(O + O(a_1) + ... + O(a_{m-1})).
struct BundleSpec {
    std::size_t m = 2;
    std::size_t n = 2;
    std::vector<Integer> twists;  // a_1 >= ... >= a_{m-1} >= 0

    std::size_t dim() const { return m + n - 2; }
    Integer twist_sum() const;
    bool fano() const { return Integer(n) > twist_sum(); }
    std::string str() const;

    /// Throws InvalidBundle on bad sizes or unsorted / negative twists.
    void check() const;

    auto operator<=>(const BundleSpec&) const = default;
};

/// x_i = e_i, x_{d+1} = -(e_1 + ... + e_d); maximal cones are all d-subsets.
Fan projective_space(std::size_t d);

/// Rays e1, e2, -e1 + alpha e2, -e2.
Fan hirzebruch(const Integer& alpha);

Fan product(const Fan& a, const Fan& b);

/// Rays x_1..x_m then y_1..y_n in Z^{m-1} + Z^{n-1}: x_i = e_i, x_m = -sum e_i,
/// y_j = f_j, y_n = -sum f_j + sum a_i e_i. Maximal cones omit one x and one y.
Fan kleinschmidt_bundle(const BundleSpec& spec);

struct NamedFan {
    std::string name;
    Fan fan;
};

/// P^2, P^1 x P^1 and the blow-ups of P^2 at one, two and three fixed points.
std::vector<NamedFan> del_pezzo_database();

/// All sorted twist vectors of length m-1 with sum at most budget.
std::vector<BundleSpec> bundle_specs(std::size_t m, std::size_t n, const Integer& budget);

}  // namespace toric
