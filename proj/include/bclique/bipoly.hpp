#pragma once

#include "bclique/numbers.hpp"
#include "bclique/unipoly.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bclique {

// Exact bivariate polynomial with integer coefficients, indexed by
// (x-degree, y-degree). Only nonzero terms are stored.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;

    static BivariatePoly zero() { return BivariatePoly(); }
    static BivariatePoly one() { return monomial(0, 0, 1); }

    static BivariatePoly monomial(int i, int j, Int c = Int(1)) {
        BivariatePoly p;
        p.add_term(i, j, c);
        return p;
    }

    void add_term(int i, int j, const Int& c) {
        if (c == 0) return;
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            t_.emplace(Key{i, j}, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Int coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Int(0) : it->second;
    }

    const std::map<Key, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    int x_degree() const {
        int d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }

    int y_degree() const {
        int d = 0;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }

    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
        return *this;
    }

    BivariatePoly operator+(const BivariatePoly& o) const {
        BivariatePoly r = *this;
        r += o;
        return r;
    }

    BivariatePoly operator*(const BivariatePoly& o) const {
        BivariatePoly r;
        for (const auto& [ka, ca] : t_)
            for (const auto& [kb, cb] : o.t_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    // Multiplication by x^di y^dj.
    BivariatePoly shifted(int di, int dj) const {
        BivariatePoly r;
        for (const auto& [k, c] : t_) r.add_term(k.first + di, k.second + dj, c);
        return r;
    }

    bool operator==(const BivariatePoly&) const = default;

    // Coefficient of x^i becomes a_i(y0) = sum_j c_ij * y0^j.
    UnivariatePoly section_at_y(const Rat& y0) const {
        if (t_.empty()) return UnivariatePoly();
        std::vector<Rat> sec(static_cast<std::size_t>(x_degree()) + 1, Rat(0));
        for (const auto& [k, c] : t_)
            sec[static_cast<std::size_t>(k.first)] += Rat(c) * rat_pow(y0, static_cast<unsigned>(k.second));
        return UnivariatePoly(std::move(sec));
    }

    // Floating-point evaluation; diagnostics only, never certification.
    std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const {
        // Horner in x over the per-degree sections b_i(y)
        int dx = x_degree(), dy = y_degree();
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(dx) + 1,
                                              std::vector<double>(static_cast<std::size_t>(dy) + 1, 0.0));
        for (const auto& [k, c] : t_)
            rows[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)] =
                c.convert_to<double>();
        std::complex<double> acc(0.0, 0.0);
        for (int i = dx; i >= 0; --i) {
            std::complex<double> row(0.0, 0.0);
            for (int j = dy; j >= 0; --j)
                row = row * y + rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            acc = acc * x + row;
        }
        return acc;
    }

    Rat evaluate_exact(const Rat& x, const Rat& y) const {
        Rat acc(0);
        for (const auto& [k, c] : t_)
            acc += Rat(c) * rat_pow(x, static_cast<unsigned>(k.first)) *
                   rat_pow(y, static_cast<unsigned>(k.second));
        return acc;
    }

    Int total_coefficient_sum() const {
        Int s = 0;
        for (const auto& [k, c] : t_) s += c;
        return s;
    }

    // Exact univariate restriction t -> P(a t + c, b t + d).
    UnivariatePoly restrict_to_line(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
        int dx = x_degree(), dy = y_degree();
        auto powers = [](const Rat& s, const Rat& t, int maxe) {
            // (s u + t)^e for e = 0..maxe as dense polynomials in u
            std::vector<UnivariatePoly> out;
            out.reserve(static_cast<std::size_t>(maxe) + 1);
            out.push_back(UnivariatePoly({Rat(1)}));
            UnivariatePoly lin({t, s});
            for (int e = 1; e <= maxe; ++e) out.push_back(out.back() * lin);
            return out;
        };
        std::vector<UnivariatePoly> xp = powers(a, c, dx);
        std::vector<UnivariatePoly> yp = powers(b, d, dy);
        UnivariatePoly acc;
        for (const auto& [k, cf] : t_)
            acc = acc + (xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)])
                            .scaled(Rat(cf));
        return acc;
    }

    // Sorted monomials, e.g. "1 + 2 x + 2 x y + 3 x^2 y + x^2 y^2 + x^3 y^2".
    std::string pretty() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : t_) {
            Int ab = c < 0 ? Int(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            bool has_var = k.first > 0 || k.second > 0;
            if (ab != 1 || !has_var) out += ab.str();
            auto var = [&](const char* name, int e) {
                if (e == 0) return;
                if (!out.empty() && out.back() != '-' && out.back() != ' ') out += " ";
                out += name;
                if (e > 1) out += "^" + std::to_string(e);
            };
            var("x", k.first);
            var("y", k.second);
        }
        return out;
    }

private:
    std::map<Key, Int> t_;
};

// Structural check for a B-clique polynomial with |B| = b_size:
// c_00 = 1, all coefficients nonnegative, 0 <= j <= min(i, b_size).
inline bool is_bclique_shape(const BivariatePoly& p, int b_size) {
    if (p.coeff(0, 0) != 1) return false;
    for (const auto& [k, c] : p.terms()) {
        if (c < 0) return false;
        if (k.second > k.first || k.second > b_size) return false;
    }
    return true;
}

}  // namespace bclique
