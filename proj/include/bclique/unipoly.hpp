#pragma once

#include "bclique/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bclique {

// Dense univariate polynomial over the rationals, lowest degree first.
// The zero polynomial is the empty coefficient list.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly constant(const Rat& v) {
        return v == 0 ? UnivariatePoly() : UnivariatePoly({v});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const Rat& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    int sign_at(const Rat& x) const { return sgn(eval(x)); }

    UnivariatePoly derivative() const {
        if (c_.size() <= 1) return UnivariatePoly();
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
        return UnivariatePoly(std::move(d));
    }

    UnivariatePoly operator+(const UnivariatePoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UnivariatePoly(std::move(r));
    }

    UnivariatePoly operator-(const UnivariatePoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return UnivariatePoly(std::move(r));
    }

    UnivariatePoly operator*(const UnivariatePoly& o) const {
        if (is_zero() || o.is_zero()) return UnivariatePoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UnivariatePoly(std::move(r));
    }

    UnivariatePoly scaled(const Rat& k) const {
        if (k == 0) return UnivariatePoly();
        std::vector<Rat> r(c_);
        for (auto& v : r) v *= k;
        return UnivariatePoly(std::move(r));
    }

    bool operator==(const UnivariatePoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// Quotient and remainder of a / b over the rationals; b nonzero.
inline std::pair<UnivariatePoly, UnivariatePoly> poly_divmod(const UnivariatePoly& a,
                                                             const UnivariatePoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UnivariatePoly(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    const Rat& lb = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + db)] / lb;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.coeff(i);
    }
    return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

// Primitive integer coefficient vector: p scaled by a positive rational so every
// coefficient is an integer with overall content 1. Signs are preserved.
inline std::vector<Int> primitive_int_coeffs(const UnivariatePoly& p) {
    if (p.is_zero()) return {};
    Int lcm = 1;
    for (const auto& c : p.coeffs()) {
        Int d = rat_den(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int v = rat_num(c) * (lcm / rat_den(c));
        content = boost::multiprecision::gcd(content, v);
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

// Same scaling, returned as a polynomial (positive leading coefficient).
inline UnivariatePoly primitive_part(const UnivariatePoly& p, bool positive_leading = false) {
    auto ic = primitive_int_coeffs(p);
    if (positive_leading && !ic.empty() && ic.back() < 0)
        for (auto& v : ic) v = -v;
    std::vector<Rat> rc(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i) rc[i] = Rat(ic[i]);
    return UnivariatePoly(std::move(rc));
}

// Monic-free gcd via Euclid with primitive normalization each step; the result is
// primitive with positive leading coefficient (constant 1 for coprime inputs).
inline UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    if (a.is_zero()) return primitive_part(b, true);
    if (b.is_zero()) return primitive_part(a, true);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a, true);
}

// p / gcd(p, p'): same real roots, all simple. Primitive, positive leading coefficient.
inline UnivariatePoly square_free(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
    if (p.degree() == 0) return UnivariatePoly({Rat(1)});
    UnivariatePoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return primitive_part(p, true);
    auto [q, r] = poly_divmod(p, g);
    if (!r.is_zero()) throw std::logic_error("square-free division left a remainder");
    return primitive_part(q, true);
}

// Strict bound: every root r of p satisfies |r| < cauchy_root_bound(p).
inline Rat cauchy_root_bound(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    if (p.degree() == 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = abs(p.coeff(i) / p.leading());
        if (v > m) m = v;
    }
    return m + 1;
}

// Sturm chain of a square-free polynomial, stored as primitive integer polynomials
// so sign evaluation at p/q is pure integer arithmetic.
class SturmChain {
public:
    explicit SturmChain(const UnivariatePoly& square_free_poly) {
        if (square_free_poly.is_zero())
            throw std::invalid_argument("Sturm chain of zero polynomial");
        UnivariatePoly a = primitive_part(square_free_poly);
        UnivariatePoly b = primitive_part(a.derivative());
        chain_.push_back(primitive_int_coeffs(a));
        while (!b.is_zero()) {
            chain_.push_back(primitive_int_coeffs(b));
            auto [q, r] = poly_divmod(a, b);
            a = std::move(b);
            b = primitive_part(r.scaled(Rat(-1)));
        }
    }

    int poly_sign_at(const Rat& x) const { return ipoly_sign(chain_.front(), x); }

    int variations_at(const Rat& x) const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = ipoly_sign(p, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Number of distinct real roots in the open interval (lo, hi).
    // Requires lo < hi and the polynomial nonzero at both endpoints.
    int count_open(const Rat& lo, const Rat& hi) const {
        if (!(lo < hi)) throw std::invalid_argument("empty Sturm interval");
        if (poly_sign_at(lo) == 0 || poly_sign_at(hi) == 0)
            throw std::invalid_argument("Sturm endpoint is a root");
        return variations_at(lo) - variations_at(hi);
    }

    std::size_t length() const { return chain_.size(); }

private:
    static int ipoly_sign(const std::vector<Int>& c, const Rat& x) {
        // sign of sum a_i (p/q)^i  ==  sign of sum a_i p^i q^(d-i), q > 0
        const Int p = rat_num(x), q = rat_den(x);
        Int acc = 0, ppow = 1;
        std::size_t d = c.size() - 1;
        std::vector<Int> qpow(d + 1);
        qpow[0] = 1;
        for (std::size_t i = 1; i <= d; ++i) qpow[i] = qpow[i - 1] * q;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] != 0) acc += c[i] * ppow * qpow[d - i];
            if (i < d) ppow *= p;
        }
        return acc.sign();
    }

    std::vector<std::vector<Int>> chain_;
};

// Exact count of real roots of a square-free polynomial in (lo, hi).
inline int sturm_count(const UnivariatePoly& square_free_poly, const Rat& lo, const Rat& hi) {
    return SturmChain(square_free_poly).count_open(lo, hi);
}

// True iff every root of p is real (p not identically zero).
inline bool is_real_rooted(const UnivariatePoly& p) {
    UnivariatePoly sf = square_free(p);
    if (sf.degree() <= 0) return true;
    Rat bound = cauchy_root_bound(sf);
    return sturm_count(sf, -bound, bound) == sf.degree();
}

}  // namespace bclique
