#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/integer.hpp"

namespace toric {

/// A monomial X_{i1}...X_{ik} as the sorted multiset of its variable ids.
using Multiset = std::vector<RayId>;

/// l! / prod(e_i!) for the multiplicities e_i of `m`: the number of ordered tuples with
/// underlying multiset `m`.
Integer arrangement_count(const Multiset& m);

/// Sparse multivariate polynomial with integer coefficients in variables X_0, X_1, ...
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Integer constant);

    static Polynomial variable(RayId id);
    static Polynomial linear(const std::map<RayId, Integer>& coefficients);
    /// k-th elementary symmetric polynomial in X_0..X_{n-1}.
    static Polynomial elementary_symmetric(std::size_t k, std::size_t n);

    const std::map<Multiset, Integer>& terms() const { return terms_; }
    Integer coefficient(const Multiset& monomial) const;
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scalar);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned exponent) const;

    std::string str() const;

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Multiset& monomial, const Integer& c);

    std::map<Multiset, Integer> terms_;
};

}  // namespace toric
