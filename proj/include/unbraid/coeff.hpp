#pragma once

#include "unbraid/poly.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unbraid {

struct CoeffError : std::runtime_error {
    enum Kind { DivisionByZero, UnknownParameter, PoleAtPoint, NoRootInField, BadExponent };
    Kind kind;
    CoeffError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class Coeff;

// Scalar field of one session: fractions of Laurent polynomials over Q(i) in
// the root variable t (q = t^L), declared parameter symbols, and at most one
// quadratic surd s with s^2 = p(t).
//
// Variable slots: 0 = t, 1 = s (reserved even when unused), 2.. = parameters.
class CoeffField {
public:
    explicit CoeffField(int root_order, std::vector<std::string> params = {})
        : L_(root_order), names_{"t", "s"} {
        if (root_order <= 0) throw CoeffError(CoeffError::BadExponent, "root order must be positive");
        for (auto& p : params) names_.push_back(p);
    }

    int root_order() const { return L_; }
    int nvars() const { return (int)names_.size(); }
    static constexpr int t_var = 0;
    static constexpr int s_var = 1;

    int param_index(const std::string& name) const {
        for (size_t k = 2; k < names_.size(); ++k)
            if (names_[k] == name) return (int)k;
        throw CoeffError(CoeffError::UnknownParameter, "unknown parameter " + name);
    }
    const std::string& var_name(int v) const { return names_.at(v); }

    bool has_surd() const { return surd_.has_value(); }
    // Declares s^2 = p(t); p must involve only t.
    void set_surd(const Poly& p) {
        for (auto& [e, c] : p.terms)
            for (int v = 1; v < nvars(); ++v)
                if (e[v] != 0) throw std::logic_error("surd radicand must be a polynomial in t");
        surd_ = p;
    }
    const Poly& surd_radicand() const { return *surd_; }

    // --- polynomial layer -------------------------------------------------

    Exp zero_exp() const { return Exp(nvars(), 0); }

    Poly p_zero() const { return Poly{}; }
    Poly p_const(const GaussQ& c) const {
        Poly p;
        p.add_term(zero_exp(), c);
        return p;
    }
    Poly p_monomial(const GaussQ& c, int var, int e) const {
        Poly p;
        Exp x = zero_exp();
        x[var] = e;
        p.add_term(x, c);
        return p;
    }

    Poly p_add(const Poly& a, const Poly& b) const {
        Poly r = a;
        for (auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    Poly p_neg(const Poly& a) const {
        Poly r;
        for (auto& [e, c] : a.terms) r.terms.emplace(e, -c);
        return r;
    }
    Poly p_sub(const Poly& a, const Poly& b) const { return p_add(a, p_neg(b)); }

    Poly p_scale(const Poly& a, const GaussQ& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
        return r;
    }

    // Product with eager reduction of s^2 -> p(t).
    Poly p_mul(const Poly& a, const Poly& b) const {
        Poly r;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                Exp e(nvars());
                for (int v = 0; v < nvars(); ++v) e[v] = ea[v] + eb[v];
                GaussQ c = ca * cb;
                if (e[s_var] >= 2) {
                    if (!surd_) throw std::logic_error("surd power without declared surd");
                    int halves = e[s_var] / 2;
                    e[s_var] %= 2;
                    Poly f;
                    f.add_term(e, c);
                    for (int k = 0; k < halves; ++k) f = p_mul(f, *surd_);
                    for (auto& [ef, cf] : f.terms) r.add_term(ef, cf);
                } else {
                    r.add_term(e, c);
                }
            }
        return r;
    }

    Poly p_pow(const Poly& a, int n) const {
        if (n < 0) throw std::logic_error("p_pow: negative power");
        Poly r = p_const(GaussQ(1));
        for (int k = 0; k < n; ++k) r = p_mul(r, a);
        return r;
    }

    // t^e, integral e (Laurent).
    Poly p_tpow(int e) const { return p_monomial(GaussQ(1), t_var, e); }

    // q^(num/den) = t^(L*num/den); exponent must come out integral.
    Poly p_qpow(long num, long den = 1) const {
        long e = (long)L_ * num;
        if (e % den != 0)
            throw CoeffError(CoeffError::BadExponent, "q-power not integral at this root order");
        return p_tpow((int)(e / den));
    }

    // [n]_q = (q^{n/2}-q^{-n/2})/(q^{1/2}-q^{-1/2}) expanded as a Laurent polynomial.
    Poly p_qnumber(int n) const {
        Poly r;
        if (n == 0) return r;
        if (n < 0) return p_neg(p_qnumber(-n));
        for (int k = 0; k < n; ++k) {
            long e2 = (long)L_ * (n - 1 - 2 * k);
            if (e2 % 2 != 0) throw CoeffError(CoeffError::BadExponent, "q-number needs even root order");
            r = p_add(r, p_tpow((int)(e2 / 2)));
        }
        return r;
    }

    // --- gcd machinery (ordinary exponents only) --------------------------

    static int deg_in(const Poly& a, int var) {
        int d = 0;
        for (auto& [e, c] : a.terms) d = std::max(d, e[var]);
        return d;
    }
    static bool mentions(const Poly& a, int var) {
        for (auto& [e, c] : a.terms)
            if (e[var] != 0) return true;
        return false;
    }

    // x^k-coefficient of a viewed as univariate in var.
    Poly coeff_in(const Poly& a, int var, int k) const {
        Poly r;
        for (auto& [e, c] : a.terms)
            if (e[var] == k) {
                Exp e2 = e;
                e2[var] = 0;
                r.terms.emplace(e2, c);
            }
        return r;
    }

    Poly shift_var(const Poly& a, int var, int by) const {
        Poly r;
        for (auto& [e, c] : a.terms) {
            Exp e2 = e;
            e2[var] += by;
            r.terms.emplace(e2, c);
        }
        return r;
    }

    // Exact division; returns nullopt when b does not divide a.
    std::optional<Poly> p_divide_exact(const Poly& a, const Poly& b) const {
        if (b.is_zero()) throw CoeffError(CoeffError::DivisionByZero, "polynomial division by zero");
        Poly rem = a, quot;
        const auto& [eb, cb] = b.leading();
        while (!rem.is_zero()) {
            const auto& [er, cr] = rem.leading();
            Exp q(nvars());
            for (int v = 0; v < nvars(); ++v) {
                q[v] = er[v] - eb[v];
                if (q[v] < 0) return std::nullopt;
            }
            GaussQ qc = cr / cb;
            Poly qt;
            qt.terms.emplace(q, qc);
            quot = p_add(quot, qt);
            rem = p_sub(rem, p_mul(qt, b));
        }
        return quot;
    }

    Poly content_in(const Poly& a, int var) const {
        Poly g;
        for (int k = 0; k <= deg_in(a, var); ++k) {
            Poly c = coeff_in(a, var, k);
            if (!c.is_zero()) g = p_gcd(g, c);
        }
        return g;
    }

    // gcd of ordinary (non-Laurent) polynomials, primitive PRS. Result has
    // leading coefficient 1.
    Poly p_gcd(const Poly& a, const Poly& b) const {
        if (a.is_zero()) return normalize_lead(b);
        if (b.is_zero()) return normalize_lead(a);
        int var = -1;
        for (int v = nvars() - 1; v >= 0; --v)
            if (mentions(a, v) || mentions(b, v)) { var = v; break; }
        if (var < 0) return p_const(GaussQ(1));
        if (!mentions(a, var) || !mentions(b, var)) {
            // var appears in only one argument: gcd divides the other's content.
            const Poly& flat = mentions(a, var) ? b : a;
            const Poly& tall = mentions(a, var) ? a : b;
            return p_gcd(flat, content_in(tall, var));
        }
        Poly ca = content_in(a, var), cb = content_in(b, var);
        Poly c = p_gcd(ca, cb);
        Poly A = *p_divide_exact(a, ca), B = *p_divide_exact(b, cb);
        if (deg_in(A, var) < deg_in(B, var)) std::swap(A, B);
        while (!B.is_zero()) {
            Poly r = prem(A, B, var);
            A = B;
            if (r.is_zero()) { B = r; break; }
            Poly cr = content_in(r, var);
            B = *p_divide_exact(r, cr);
        }
        Poly pp = *p_divide_exact(A, content_in(A, var));
        return normalize_lead(p_mul(c, pp));
    }

    Poly normalize_lead(const Poly& a) const {
        if (a.is_zero()) return a;
        return p_scale(a, a.leading().second.inv());
    }

    // Pseudo-remainder of a by b in var.
    Poly prem(Poly a, const Poly& b, int var) const {
        int db = deg_in(b, var);
        Poly lb = coeff_in(b, var, db);
        while (!a.is_zero() && deg_in(a, var) >= db) {
            int da = deg_in(a, var);
            Poly la = coeff_in(a, var, da);
            // a <- lb*a - la*x^(da-db)*b
            Poly t = shift_var(p_mul(la, b), var, da - db);
            a = p_sub(p_mul(a, lb), t);
        }
        return a;
    }

    // --- string form -------------------------------------------------------

    std::string p_str(const Poly& a) const {
        if (a.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (auto& [e, c] : a.terms) {
            std::string mono;
            for (int v = 0; v < nvars(); ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names_[v];
                if (e[v] != 1) mono += "^" + std::to_string(e[v]);
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else term = cs + "*" + mono;
            if (!first && term[0] != '-') s += "+";
            s += term;
            first = false;
        }
        return s;
    }

private:
    int L_;
    std::vector<std::string> names_;
    std::optional<Poly> surd_;
};

// Numeric value a + b*sigma with sigma^2 = p(t0); exact over GaussQ.
struct NumV {
    GaussQ a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const NumV& x, const NumV& y) { return x.a == y.a && x.b == y.b; }
};

struct EvalPoint {
    mpq_class t0;
    std::map<int, GaussQ> params; // by variable index
    GaussQ surd_sq;               // p(t0), filled by Coeff::eval
};

// Element of the session field: num/den with den a nonzero s-free polynomial.
class Coeff {
public:
    Coeff() : fld_(nullptr) {}
    Coeff(const CoeffField* f, Poly num, Poly den) : fld_(f), num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static Coeff zero(const CoeffField& f) { return Coeff(&f, f.p_zero(), f.p_const(GaussQ(1))); }
    static Coeff one(const CoeffField& f) { return from_int(f, 1); }
    static Coeff from_int(const CoeffField& f, long n) {
        return Coeff(&f, f.p_const(GaussQ(n)), f.p_const(GaussQ(1)));
    }
    static Coeff from_rat(const CoeffField& f, const GaussQ& c) {
        return Coeff(&f, f.p_const(c), f.p_const(GaussQ(1)));
    }
    static Coeff from_poly(const CoeffField& f, Poly p) { return Coeff(&f, std::move(p), f.p_const(GaussQ(1))); }
    static Coeff var(const CoeffField& f, int v, int e = 1) {
        if (e >= 0) return Coeff(&f, f.p_monomial(GaussQ(1), v, e), f.p_const(GaussQ(1)));
        return Coeff(&f, f.p_const(GaussQ(1)), f.p_monomial(GaussQ(1), v, -e));
    }
    static Coeff tpow(const CoeffField& f, int e) { return from_poly(f, f.p_tpow(e)); }
    static Coeff qpow(const CoeffField& f, long num, long den = 1) { return from_poly(f, f.p_qpow(num, den)); }
    static Coeff qnum(const CoeffField& f, int n) { return from_poly(f, f.p_qnumber(n)); }

    const CoeffField& field() const { return *fld_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend Coeff operator+(const Coeff& x, const Coeff& y) {
        const CoeffField& f = x.field();
        if (x.den_ == y.den_) return Coeff(&f, f.p_add(x.num_, y.num_), x.den_);
        return Coeff(&f, f.p_add(f.p_mul(x.num_, y.den_), f.p_mul(y.num_, x.den_)), f.p_mul(x.den_, y.den_));
    }
    friend Coeff operator-(const Coeff& x, const Coeff& y) { return x + (-y); }
    Coeff operator-() const {
        Coeff r = *this;
        r.num_ = fld_->p_neg(r.num_);
        return r;
    }
    friend Coeff operator*(const Coeff& x, const Coeff& y) {
        const CoeffField& f = x.field();
        return Coeff(&f, f.p_mul(x.num_, y.num_), f.p_mul(x.den_, y.den_));
    }
    Coeff inv() const {
        const CoeffField& f = field();
        if (is_zero()) throw CoeffError(CoeffError::DivisionByZero, "inverse of zero");
        // keep the new denominator s-free: 1/(a+b*s) = (a-b*s)/(a^2-b^2*p)
        Poly a, b;
        split_surd(f, num_, a, b);
        if (b.is_zero()) return Coeff(&f, den_, num_);
        Poly conj = f.p_sub(a, f.p_mul(b, f.p_monomial(GaussQ(1), CoeffField::s_var, 1)));
        Poly norm = f.p_sub(f.p_mul(a, a), f.p_mul(f.p_mul(b, b), f.surd_radicand()));
        if (norm.is_zero()) throw CoeffError(CoeffError::DivisionByZero, "non-invertible surd element");
        return Coeff(&f, f.p_mul(den_, conj), norm);
    }
    friend Coeff operator/(const Coeff& x, const Coeff& y) { return x * y.inv(); }

    Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
    Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
    Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

    // Exact equality; cross-multiplication is authoritative.
    friend bool operator==(const Coeff& x, const Coeff& y) {
        if (x.num_ == y.num_ && x.den_ == y.den_) return true;
        const CoeffField& f = x.field();
        return f.p_sub(f.p_mul(x.num_, y.den_), f.p_mul(y.num_, x.den_)).is_zero();
    }
    friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

    // Deterministic container order (normal forms are canonical per computation path).
    friend bool operator<(const Coeff& x, const Coeff& y) {
        if (x.num_.terms != y.num_.terms) return x.num_.terms < y.num_.terms;
        return x.den_.terms < y.den_.terms;
    }

    // True when num/den is c * prod(var^e); reports c and exponents.
    bool as_monomial(GaussQ& c, Exp& e) const {
        if (!num_.is_monomial() || !den_.is_monomial()) return false;
        auto& [en, cn] = *num_.terms.begin();
        auto& [ed, cd] = *den_.terms.begin();
        c = cn / cd;
        e = en;
        for (int v = 0; v < fld_->nvars(); ++v) e[v] -= ed[v];
        return true;
    }
    bool is_t_monomial(GaussQ& c, int& e) const {
        Exp ev;
        if (!as_monomial(c, ev)) return false;
        for (int v = 1; v < fld_->nvars(); ++v)
            if (ev[v] != 0) return false;
        e = ev[CoeffField::t_var];
        return true;
    }
    // Square root of a monomial c*t^e with c = 1 and even e (the case the
    // scaling oracle needs); throws NoRootInField otherwise.
    Coeff monomial_sqrt() const {
        GaussQ c;
        int e;
        if (!is_t_monomial(c, e) || !(c.is_one()) || (e % 2) != 0)
            throw CoeffError(CoeffError::NoRootInField, "no t-monomial square root");
        return tpow(field(), e / 2);
    }

    NumV eval(const EvalPoint& pt) const {
        NumV nv = eval_poly(num_, pt);
        NumV dv = eval_poly(den_, pt);
        if (dv.is_zero()) throw CoeffError(CoeffError::PoleAtPoint, "denominator vanishes at evaluation point");
        // dv is s-free by the invariant, so dv.b == 0.
        GaussQ d = dv.a.inv();
        return NumV{nv.a * d, nv.b * d};
    }

    std::string str() const {
        const CoeffField& f = field();
        if (is_zero()) return "0";
        Poly one = f.p_const(GaussQ(1));
        if (den_ == one) return f.p_str(num_);
        std::string ns = f.p_str(num_);
        std::string ds = f.p_str(den_);
        if (num_.size() > 1) ns = "(" + ns + ")";
        if (den_.size() > 1) ds = "(" + ds + ")";
        return ns + "/" + ds;
    }

private:
    static void split_surd(const CoeffField&, const Poly& p, Poly& a, Poly& b) {
        for (auto& [e, c] : p.terms) {
            Exp e2 = e;
            e2[CoeffField::s_var] = 0;
            if (e[CoeffField::s_var] == 0) a.terms.emplace(e2, c);
            else b.terms.emplace(e2, c);
        }
    }

    NumV eval_poly(const Poly& p, const EvalPoint& pt) const {
        const CoeffField& f = field();
        NumV r{GaussQ(0), GaussQ(0)};
        GaussQ p0;
        if (f.has_surd()) {
            // p(t0)
            for (auto& [e, c] : f.surd_radicand().terms) p0 += c * qpow_num(pt.t0, e[CoeffField::t_var]);
        }
        for (auto& [e, c] : p.terms) {
            GaussQ v = c * qpow_num(pt.t0, e[CoeffField::t_var]);
            for (int k = 2; k < f.nvars(); ++k) {
                if (e[k] == 0) continue;
                auto it = pt.params.find(k);
                if (it == pt.params.end())
                    throw CoeffError(CoeffError::UnknownParameter, "unbound parameter " + f.var_name(k));
                GaussQ pv = it->second;
                if (e[k] < 0) {
                    if (pv.is_zero()) throw CoeffError(CoeffError::PoleAtPoint, "parameter bound to zero");
                    pv = pv.inv();
                }
                for (int j = 0; j < std::abs(e[k]); ++j) v = v * pv;
            }
            int se = e[CoeffField::s_var];
            if (se == 0) r.a += v;
            else r.b += v; // se == 1 by invariant
        }
        return r;
    }

    static GaussQ qpow_num(const mpq_class& base, int e) {
        mpq_class r = 1;
        mpq_class b = base;
        int n = std::abs(e);
        if (e < 0) {
            if (base == 0) throw CoeffError(CoeffError::PoleAtPoint, "t0 = 0 with negative exponent");
            b = 1 / base;
        }
        for (int k = 0; k < n; ++k) r *= b;
        return GaussQ(r);
    }

    void normalize() {
        const CoeffField& f = *fld_;
        if (den_.is_zero()) throw CoeffError(CoeffError::DivisionByZero, "zero denominator");
        if (num_.is_zero()) {
            den_ = f.p_const(GaussQ(1));
            return;
        }
        // 1. Laurent shift to ordinary polys, cancelling common monomials.
        for (int v = 0; v < f.nvars(); ++v) {
            int mn = INT32_MAX, md = INT32_MAX;
            for (auto& [e, c] : num_.terms) mn = std::min(mn, e[v]);
            for (auto& [e, c] : den_.terms) md = std::min(md, e[v]);
            int s = std::min(mn, md);
            if (mn != 0) num_ = f.shift_var(num_, v, -mn);
            if (md != 0) den_ = f.shift_var(den_, v, -md);
            int net = mn - md;
            (void)s;
            if (net > 0) num_ = f.shift_var(num_, v, net);
            else if (net < 0) den_ = f.shift_var(den_, v, -net);
        }
        // 2. Monomial denominator folds into the numerator entirely.
        if (den_.is_monomial()) {
            auto& [ed, cd] = *den_.terms.begin();
            Poly n2;
            for (auto& [e, c] : num_.terms) {
                Exp e2 = e;
                for (int v = 0; v < f.nvars(); ++v) e2[v] -= ed[v];
                n2.terms.emplace(e2, c / cd);
            }
            num_ = n2;
            den_ = f.p_const(GaussQ(1));
            return;
        }
        // 3. Full gcd reduction (den has several terms, sizes stay small).
        Poly g = f.p_gcd(num_, den_);
        if (!(g.is_monomial() && g.leading().second.is_one() && g.leading().first == f.zero_exp())) {
            auto qn = f.p_divide_exact(num_, g);
            auto qd = f.p_divide_exact(den_, g);
            if (qn && qd) {
                num_ = *qn;
                den_ = *qd;
            }
        }
        // 4. Monic denominator.
        GaussQ lc = den_.leading().second;
        if (!lc.is_one()) {
            GaussQ ilc = lc.inv();
            num_ = f.p_scale(num_, ilc);
            den_ = f.p_scale(den_, ilc);
        }
        if (den_.is_monomial()) { // may have become monomial after gcd
            auto& [de, dc] = *den_.terms.begin();
            if (!(de == f.zero_exp())) {
                Poly n2;
                for (auto& [e, c] : num_.terms) {
                    Exp e2 = e;
                    for (int v = 0; v < f.nvars(); ++v) e2[v] -= de[v];
                    n2.terms.emplace(e2, c);
                }
                num_ = n2;
                den_ = f.p_const(dc);
                normalize();
            }
        }
    }

    const CoeffField* fld_;
    Poly num_, den_;
};

// Ring involution: t -> t or 1/t, i -> -i, each parameter -> a Coeff image.
struct InvolutionSpec {
    bool invert_t = false;
    std::map<int, Coeff> param_images; // by variable index
    // s maps to itself (only used in the real-q fuzzy regime).

    Coeff apply(const Coeff& x) const {
        const CoeffField& f = x.field();
        Coeff n = apply_poly(f, x.num());
        Coeff d = apply_poly(f, x.den());
        return n / d;
    }

private:
    Coeff apply_poly(const CoeffField& f, const Poly& p) const {
        Coeff acc = Coeff::zero(f);
        for (auto& [e, c] : p.terms) {
            Coeff term = Coeff::from_rat(f, c.conj());
            int te = e[CoeffField::t_var];
            if (te != 0) term *= Coeff::tpow(f, invert_t ? -te : te);
            if (e[CoeffField::s_var] != 0) term *= Coeff::var(f, CoeffField::s_var, e[CoeffField::s_var]);
            for (int v = 2; v < f.nvars(); ++v) {
                if (e[v] == 0) continue;
                auto it = param_images.find(v);
                if (it == param_images.end())
                    throw CoeffError(CoeffError::UnknownParameter,
                                     "involution lacks image for " + f.var_name(v));
                Coeff img = it->second;
                if (e[v] < 0) img = img.inv();
                for (int k = 0; k < std::abs(e[v]); ++k) term *= img;
            }
            acc += term;
        }
        return acc;
    }
};

} // namespace unbraid
