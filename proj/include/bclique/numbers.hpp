#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bclique {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Int& v) { return v.sign(); }
inline int sgn(const Rat& v) { return v.sign(); }

// q = p/d with d possibly negative or zero.
inline Rat make_rat(const Int& p, const Int& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return d < 0 ? Rat(-p, -d) : Rat(p, d);
}

inline Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);  // d > 0
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    return make_rat(int_pow(rat_num(base), e), int_pow(rat_den(base), e));
}

// C(n, k) for integer n >= 0; returns 0 when n < k.
inline Int binomial(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial with negative upper argument");
    if (Int(k) > n) return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - Int(i - 1);
        r /= Int(i);
    }
    return r;
}

inline Int binomial_u(unsigned n, unsigned k) { return binomial(Int(n), k); }

// Parses "p", "-p", "p/q"; rejects decimals and empty input.
inline Rat parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("expected rational p/q, got '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string num, den;
    bool in_den = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (in_den || num.empty()) fail();
            in_den = true;
        } else if (c >= '0' && c <= '9') {
            (in_den ? den : num) += c;
        } else {
            fail();
        }
    }
    if (num.empty() || (in_den && den.empty())) fail();
    Int p(num);
    Int q = in_den ? Int(den) : Int(1);
    if (q == 0) fail();
    return make_rat(neg ? -p : p, q);
}

inline std::string rat_string(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace detail {

// Deterministic integer in [lo, hi]; splitmix64 keeps results independent of
// platform library distributions.
inline long long rand_range(std::uint64_t& state, long long lo, long long hi) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return lo + static_cast<long long>(z % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

// Dyadic rational u with u >= sqrt(s) and u - sqrt(s) <= 2^(1-bits).
inline Rat sqrt_upper(const Rat& s, unsigned bits = 50) {
    if (s < 0) throw std::invalid_argument("sqrt of negative value");
    if (s == 0) return Rat(0);
    Int num = rat_num(s) << (2 * bits);
    Int t = (num + rat_den(s) - 1) / rat_den(s);  // ceil(s * 4^bits)
    Int r = boost::multiprecision::sqrt(t);       // floor sqrt
    return make_rat(r + 1, Int(1) << bits);
}

// Dyadic rational l with l <= sqrt(s).
inline Rat sqrt_lower(const Rat& s, unsigned bits = 50) {
    if (s < 0) throw std::invalid_argument("sqrt of negative value");
    if (s == 0) return Rat(0);
    Int num = rat_num(s) << (2 * bits);
    Int t = num / rat_den(s);  // floor(s * 4^bits)
    Int r = boost::multiprecision::sqrt(t);
    return make_rat(r, Int(1) << bits);
}

}  // namespace bclique
