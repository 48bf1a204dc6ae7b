#pragma once

#include <gmpxx.h>
#include <string>

namespace unbraid {

// Exact Gaussian rational a + b*i.
class GaussQ {
public:
    GaussQ() : re_(0), im_(0) {}
    GaussQ(long n) : re_(n), im_(0) {}
    GaussQ(const mpq_class& re) : re_(re), im_(0) {}
    GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussQ i() { return GaussQ(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussQ operator-() const { return GaussQ(-re_, -im_); }
    GaussQ conj() const { return GaussQ(re_, -im_); }

    GaussQ& operator+=(const GaussQ& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussQ& operator-=(const GaussQ& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return GaussQ(a.re_ + b.re_, a.im_ + b.im_); }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return GaussQ(a.re_ - b.re_, a.im_ - b.im_); }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }

    GaussQ inv() const {
        mpq_class n = re_ * re_ + im_ * im_;
        return GaussQ(re_ / n, -im_ / n);
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inv(); }

    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
    // Ordering is only used to keep containers deterministic.
    friend bool operator<(const GaussQ& a, const GaussQ& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) {
            if (im_ == 1) return "i";
            if (im_ == -1) return "-i";
            return im_.get_str() + "*i";
        }
        s = "(" + re_.get_str();
        if (im_ > 0) s += "+";
        if (im_ == 1) s += "i";
        else if (im_ == -1) s += "-i";
        else s += im_.get_str() + "*i";
        s += ")";
        return s;
    }

private:
    mpq_class re_, im_;
};

} // namespace unbraid
