#pragma once

#include "unbraid/coeff.hpp"

#include <map>
#include <string>
#include <vector>

namespace unbraid {

using GenId = int;
using Word = std::vector<GenId>; // empty word = unit

enum class Family : int { Coordinate = 0, Derivative = 1, FrtAux = 2, Scale = 3 };

struct GenInfo {
    GenId id = -1;
    std::string name;
    int copy = 1;           // tensor-factor index, >= 1
    Family family = Family::Coordinate;
    int position = 0;       // order within family (index value, adjunction slot, ...)
    int degw = 1;           // degree weight in the term order
    int grade = 0;          // diagnostic grading (position weight)
    GenId inverse = -1;     // partner generator with x * x^-1 = 1, if any
};

// Finite linear combination of words; zero coefficients never stored.
struct Element {
    std::map<Word, Coeff> terms;

    static Element zero() { return {}; }
    static Element unit(const CoeffField& f) {
        Element e;
        e.terms.emplace(Word{}, Coeff::one(f));
        return e;
    }
    static Element gen(const CoeffField& f, GenId g) {
        Element e;
        e.terms.emplace(Word{g}, Coeff::one(f));
        return e;
    }
    static Element word(const Coeff& c, Word w) {
        Element e;
        if (!c.is_zero()) e.terms.emplace(std::move(w), c);
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (auto& [w, c] : o.terms) add_term(w, c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    Element operator-() const {
        Element r;
        for (auto& [w, c] : terms) r.terms.emplace(w, -c);
        return r;
    }
    friend Element operator-(Element a, const Element& b) { a += -b; return a; }

    Element scaled(const Coeff& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (auto& [w, k] : terms) {
            Coeff p = k * c;
            if (!p.is_zero()) r.terms.emplace(w, p);
        }
        return r;
    }

    // Free product (no normal form).
    friend Element operator*(const Element& a, const Element& b) {
        Element r;
        for (auto& [wa, ca] : a.terms)
            for (auto& [wb, cb] : b.terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.terms.size() != b.terms.size()) return false;
        auto it = b.terms.begin();
        for (auto& [w, c] : a.terms) {
            if (it->first != w || !(it->second == c)) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

} // namespace unbraid
