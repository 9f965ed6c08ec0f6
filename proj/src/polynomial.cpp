#include "toric/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

Integer arrangement_count(const Multiset& m) {
    Integer count = factorial(m.size());
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        count /= factorial(j - i);
        i = j;
    }
    return count;
}

Polynomial::Polynomial(Integer constant) {
    if (constant != 0) terms_.emplace(Multiset{}, std::move(constant));
}

Polynomial Polynomial::variable(RayId id) {
    Polynomial p;
    p.terms_.emplace(Multiset{id}, 1);
    return p;
}

Polynomial Polynomial::linear(const std::map<RayId, Integer>& coefficients) {
    Polynomial p;
    for (const auto& [id, c] : coefficients) p.add_term({id}, c);
    return p;
}

Polynomial Polynomial::elementary_symmetric(std::size_t k, std::size_t n) {
    Polynomial p;
    if (k > n) return p;
    std::vector<RayId> pick(k);
    // enumerate k-subsets of {0..n-1} in lexicographic order
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<RayId>(i);
    while (true) {
        p.terms_.emplace(pick, 1);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == static_cast<RayId>(n - k + i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return p;
}

Integer Polynomial::coefficient(const Multiset& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Multiset& monomial, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(monomial, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Multiset m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(Integer(1));
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (mag != 1 || m.empty()) os << mag;
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            os << "X" << m[i];
            if (j - i > 1) os << '^' << (j - i);
            i = j;
        }
    }
    return os.str();
}

}  // namespace toric
