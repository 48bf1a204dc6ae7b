#pragma once

#include "unbraid/coeff.hpp"

#include <functional>
#include <map>
#include <vector>

namespace unbraid {

// Sparse matrix over the Coeff field, row-major. Sized at construction.
class SpMat {
public:
    SpMat() : n_(0), m_(0) {}
    SpMat(int rows, int cols) : n_(rows), m_(cols), rows_(rows) {}

    int rows() const { return n_; }
    int cols() const { return m_; }

    void set(int r, int c, const Coeff& v) {
        if (v.is_zero()) rows_[r].erase(c);
        else rows_[r][c] = v;
    }
    void add(int r, int c, const Coeff& v) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
            if (!v.is_zero()) rows_[r].emplace(c, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) rows_[r].erase(it);
        }
    }
    bool has(int r, int c) const { return rows_[r].count(c) != 0; }
    Coeff get(const CoeffField& f, int r, int c) const {
        auto it = rows_[r].find(c);
        return it == rows_[r].end() ? Coeff::zero(f) : it->second;
    }
    const std::map<int, Coeff>& row(int r) const { return rows_[r]; }

    static SpMat identity(const CoeffField& f, int n) {
        SpMat I(n, n);
        for (int k = 0; k < n; ++k) I.set(k, k, Coeff::one(f));
        return I;
    }

    SpMat mul(const SpMat& o) const {
        SpMat r(n_, o.m_);
        for (int i = 0; i < n_; ++i)
            for (auto& [k, a] : rows_[i])
                for (auto& [j, b] : o.rows_[k]) r.add(i, j, a * b);
        return r;
    }
    SpMat add_mat(const SpMat& o) const {
        SpMat r = *this;
        for (int i = 0; i < n_; ++i)
            for (auto& [j, v] : o.rows_[i]) r.add(i, j, v);
        return r;
    }
    SpMat scale(const Coeff& c) const {
        SpMat r(n_, m_);
        if (c.is_zero()) return r;
        for (int i = 0; i < n_; ++i)
            for (auto& [j, v] : rows_[i]) r.set(i, j, v * c);
        return r;
    }
    SpMat sub(const SpMat& o) const { return add_mat(o.scale(Coeff::from_int(o.field_of(), -1))); }

    bool is_zero() const {
        for (auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }
    bool equals(const SpMat& o) const {
        if (n_ != o.n_ || m_ != o.m_) return false;
        for (int i = 0; i < n_; ++i) {
            // symmetric difference must vanish
            for (auto& [j, v] : rows_[i]) {
                auto it = o.rows_[i].find(j);
                if (it == o.rows_[i].end()) {
                    if (!v.is_zero()) return false;
                } else if (v != it->second)
                    return false;
            }
            for (auto& [j, v] : o.rows_[i])
                if (!rows_[i].count(j) && !v.is_zero()) return false;
        }
        return true;
    }

    Coeff trace(const CoeffField& f) const {
        Coeff t = Coeff::zero(f);
        for (int i = 0; i < n_; ++i) t += get(f, i, i);
        return t;
    }

    SpMat transpose() const {
        SpMat r(m_, n_);
        for (int i = 0; i < n_; ++i)
            for (auto& [j, v] : rows_[i]) r.set(j, i, v);
        return r;
    }

    // Exact inverse by Gauss-Jordan; throws on singular input.
    SpMat inverse(const CoeffField& f) const {
        int n = n_;
        std::vector<std::vector<Coeff>> a(n, std::vector<Coeff>(2 * n, Coeff::zero(f)));
        for (int i = 0; i < n; ++i) {
            for (auto& [j, v] : rows_[i]) a[i][j] = v;
            a[i][n + i] = Coeff::one(f);
        }
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!a[r][c].is_zero()) { p = r; break; }
            if (p < 0) throw std::runtime_error("singular matrix");
            std::swap(a[c], a[p]);
            Coeff ip = a[c][c].inv();
            for (int j = 0; j < 2 * n; ++j)
                if (!a[c][j].is_zero()) a[c][j] = a[c][j] * ip;
            for (int r = 0; r < n; ++r) {
                if (r == c || a[r][c].is_zero()) continue;
                Coeff m = a[r][c];
                for (int j = 0; j < 2 * n; ++j)
                    if (!a[c][j].is_zero()) a[r][j] = a[r][j] - m * a[c][j];
            }
        }
        SpMat r(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!a[i][n + j].is_zero()) r.set(i, j, a[i][n + j]);
        return r;
    }

    void for_each(const std::function<void(int, int, const Coeff&)>& fn) const {
        for (int i = 0; i < n_; ++i)
            for (auto& [j, v] : rows_[i]) fn(i, j, v);
    }

private:
    const CoeffField& field_of() const {
        for (auto& r : rows_)
            if (!r.empty()) return r.begin()->second.field();
        throw std::logic_error("field_of on empty matrix");
    }
    int n_, m_;
    std::vector<std::map<int, Coeff>> rows_;
};

} // namespace unbraid
