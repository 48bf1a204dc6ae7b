#pragma once

#include "unbraid/gauss.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace unbraid {

// Exponent vector, one slot per session variable. Negative entries allowed
// (Laurent), except the surd slot which stays in {0,1}.
using Exp = std::vector<int>;

// Sparse multivariate Laurent polynomial with GaussQ coefficients.
// Plain container; arithmetic lives in CoeffField (it needs the surd relation).
struct Poly {
    std::map<Exp, GaussQ> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }
    size_t size() const { return terms.size(); }

    void add_term(const Exp& e, const GaussQ& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    const std::pair<const Exp, GaussQ>& leading() const {
        if (terms.empty()) throw std::logic_error("leading() of zero polynomial");
        return *terms.rbegin();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.terms == b.terms); }
};

} // namespace unbraid
