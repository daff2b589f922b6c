#pragma once

#include "bclique/numbers.hpp"
#include "bclique/unipoly.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace bclique {

// Open interval with rational endpoints containing exactly one real root of the
// square-free part; the polynomial has opposite nonzero signs at the endpoints.
struct RootInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
};

inline Rat default_isolation_width() { return make_rat(1, Int(1) << 40); }

// Certified isolation of the negative real roots of a univariate polynomial.
// zeta is the rightmost isolated root; no intervals means zeta = -infinity.
class RootAnalysis {
public:
    static RootAnalysis isolate_negative_roots(const UnivariatePoly& p,
                                               const Rat& max_width = default_isolation_width()) {
        if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
        if (p.sign_at(Rat(0)) == 0)
            throw std::invalid_argument("isolate_negative_roots requires p(0) != 0");
        RootAnalysis ra(square_free(p));
        if (ra.sf_.degree() <= 0) return ra;

        Rat lo = -cauchy_root_bound(ra.sf_);
        Rat hi(0);
        struct Segment {
            Rat lo, hi;
            int vlo, vhi;
        };
        std::deque<Segment> work;
        work.push_back({lo, hi, ra.chain_.variations_at(lo), ra.chain_.variations_at(hi)});
        while (!work.empty()) {
            Segment s = work.front();
            work.pop_front();
            int count = s.vlo - s.vhi;
            if (count == 0) continue;
            if (count == 1 && s.hi - s.lo <= max_width) {
                ra.intervals_.push_back({s.lo, s.hi});
                continue;
            }
            Rat mid = ra.split_point(s.lo, s.hi);
            int vmid = ra.chain_.variations_at(mid);
            work.push_front({mid, s.hi, vmid, s.vhi});
            work.push_front({s.lo, mid, s.vlo, vmid});
        }
        std::sort(ra.intervals_.begin(), ra.intervals_.end(),
                  [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
        return ra;
    }

    const UnivariatePoly& square_free_part() const { return sf_; }
    const std::vector<RootInterval>& negative_roots() const { return intervals_; }
    bool has_negative_root() const { return !intervals_.empty(); }

    const RootInterval& zeta() const {
        if (intervals_.empty()) throw std::logic_error("zeta is -infinity (no negative root)");
        return intervals_.back();
    }

    // One bisection step on interval idx, keeping the invariant.
    void refine(std::size_t idx) {
        RootInterval& iv = intervals_.at(idx);
        Rat mid = iv.midpoint();
        int s = chain_.poly_sign_at(mid);
        if (s == 0) {
            // mid is the root itself: shrink symmetrically around it
            iv.lo = (iv.lo + mid) / 2;
            iv.hi = (mid + iv.hi) / 2;
            return;
        }
        if (s == chain_.poly_sign_at(iv.lo))
            iv.lo = mid;
        else
            iv.hi = mid;
    }

    void refine_zeta() { refine(intervals_.size() - 1); }

    void refine_zeta_to(const Rat& width) {
        while (zeta().width() > width) refine_zeta();
    }

    // True iff the zeta root is exactly r.
    bool zeta_is_exactly(const Rat& r) const {
        const RootInterval& iv = zeta();
        return iv.lo < r && r < iv.hi && chain_.poly_sign_at(r) == 0;
    }

    // Position of the zeta root relative to a rational: -1 (root < r), 0 (equal), +1 (root > r).
    int zeta_compare_to(const Rat& r) {
        if (zeta_is_exactly(r)) return 0;
        for (;;) {
            const RootInterval& iv = zeta();
            if (iv.hi <= r) return -1;
            if (iv.lo >= r) return +1;
            refine_zeta();
        }
    }

private:
    explicit RootAnalysis(UnivariatePoly sf) : sf_(std::move(sf)), chain_(sf_) {}

    // Bisection point with nonzero sign; if the midpoint is a root, halve toward hi.
    Rat split_point(const Rat& lo, const Rat& hi) const {
        Rat mid = (lo + hi) / 2;
        while (chain_.poly_sign_at(mid) == 0) mid = (mid + hi) / 2;
        return mid;
    }

    UnivariatePoly sf_;
    SturmChain chain_;
    std::vector<RootInterval> intervals_;
};

struct ZetaComparison {
    enum class Order { LT, GT, EqOrUnresolved };
    Order order = Order::EqOrUnresolved;
    bool certified_equal = false;   // equality proved via common root
    bool budget_exhausted = false;  // distinct-looking roots failed to separate in budget
};

// Certified comparison of the rightmost negative roots of two analyses.
// -infinity sentinels order below every interval. Refines both sides, at most
// budget_steps bisections each; a shared root is detected exactly via gcd first.
inline ZetaComparison compare_zeta(RootAnalysis& a, RootAnalysis& b, int budget_steps = 80) {
    using Order = ZetaComparison::Order;
    if (!a.has_negative_root() && !b.has_negative_root())
        return {Order::EqOrUnresolved, true, false};
    if (!a.has_negative_root()) return {Order::LT, false, false};
    if (!b.has_negative_root()) return {Order::GT, false, false};

    auto decide = [&]() -> ZetaComparison {
        if (a.zeta().hi <= b.zeta().lo) return {Order::LT, false, false};
        if (b.zeta().hi <= a.zeta().lo) return {Order::GT, false, false};
        return {Order::EqOrUnresolved, false, false};
    };
    if (auto d = decide(); d.order != Order::EqOrUnresolved) return d;

    UnivariatePoly g = poly_gcd(a.square_free_part(), b.square_free_part());
    if (g.degree() >= 1) {
        Rat lo = std::max(a.zeta().lo, b.zeta().lo);
        Rat hi = std::min(a.zeta().hi, b.zeta().hi);
        // overlap endpoints are endpoints of a or b, so g is nonzero there
        if (lo < hi && sturm_count(g, lo, hi) >= 1)
            return {Order::EqOrUnresolved, true, false};
    }
    for (int step = 0; step < budget_steps; ++step) {
        a.refine_zeta();
        b.refine_zeta();
        if (auto d = decide(); d.order != Order::EqOrUnresolved) return d;
    }
    return {Order::EqOrUnresolved, false, true};
}

}  // namespace bclique
