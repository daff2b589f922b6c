#pragma once

#include "bclique/analysis.hpp"
#include "bclique/clique_engine.hpp"
#include "bclique/report.hpp"

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace bclique {

namespace detail {

template <class F>
struct SymmetricEigen {
    std::vector<F> values;                // descending
    std::vector<std::vector<F>> vectors;  // vectors[k] pairs with values[k]
    F off_frobenius = 0;                  // final off-diagonal Frobenius norm
};

template <class F>
F off_diagonal_frobenius(const std::vector<std::vector<F>>& a) {
    const int n = static_cast<int>(a.size());
    F s = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[p][q] * a[p][q];
    return std::sqrt(F(2) * s);
}

// Cyclic Jacobi sweeps on a dense symmetric matrix until the off-diagonal
// Frobenius norm drops below tol. By Weyl's theorem every eigenvalue then lies
// within tol of a diagonal entry (sorted pairing), which is the certified radius.
template <class F>
SymmetricEigen<F> jacobi_eigen(std::vector<std::vector<F>> a, F tol, int max_sweeps = 60) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<F>> v(static_cast<std::size_t>(n),
                                  std::vector<F>(static_cast<std::size_t>(n), F(0)));
    for (int i = 0; i < n; ++i) v[i][i] = F(1);

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_frobenius(a) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                F apq = a[p][q];
                if (apq == F(0)) continue;
                F theta = (a[q][q] - a[p][p]) / (F(2) * apq);
                F t = theta >= F(0) ? F(1) / (theta + std::sqrt(theta * theta + F(1)))
                                    : F(-1) / (-theta + std::sqrt(theta * theta + F(1)));
                F c = F(1) / std::sqrt(t * t + F(1));
                F s = t * c;
                F app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = F(0);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    F akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    F vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    SymmetricEigen<F> out;
    out.off_frobenius = off_diagonal_frobenius(a);
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });
    out.values.reserve(static_cast<std::size_t>(n));
    out.vectors.reserve(static_cast<std::size_t>(n));
    for (int i : idx) {
        out.values.push_back(a[i][i]);
        std::vector<F> col(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) col[k] = v[k][i];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

template <class F>
std::vector<std::vector<F>> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<F>> a(static_cast<std::size_t>(n),
                                  std::vector<F>(static_cast<std::size_t>(n), F(0)));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = F(1);
    return a;
}

}  // namespace detail

// Spectrum of a d-regular graph with a certified error radius and an outward
// rounded rational lambda >= every nontrivial |eigenvalue|.
struct SpectralProfile {
    int n = 0;
    int d = 0;
    std::vector<double> eigenvalues;                // descending
    std::vector<std::vector<double>> eigenvectors;  // paired with eigenvalues
    double error_radius = 0;
    Rat lambda;

    static SpectralProfile compute(const Graph& g) { return build<double>(g, 1e-12); }

    // Long-double pass with a tighter threshold; used to re-verify any
    // candidate Violated verdict before it is emitted.
    static SpectralProfile compute_refined(const Graph& g) { return build<long double>(g, 1e-16L); }

private:
    template <class F>
    static SpectralProfile build(const Graph& g, F tol) {
        const int n = g.vertex_count();
        if (n == 0) throw std::invalid_argument("empty graph has no spectrum");
        const int d = g.degree(0);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != d)
                throw std::invalid_argument(
                    "graph is not regular: vertex " + std::to_string(g.label(v)) + " has degree " +
                    std::to_string(g.degree(v)) + ", vertex " + std::to_string(g.label(0)) +
                    " has degree " + std::to_string(d));
        auto eig = detail::jacobi_eigen<F>(detail::adjacency_matrix<F>(g), tol);
        SpectralProfile prof;
        prof.n = n;
        prof.d = d;
        // roundoff slop on top of the Weyl radius from the off-diagonal mass
        F radius = eig.off_frobenius + F(1024) * std::numeric_limits<F>::epsilon() * F(n) * F(std::max(d, 1));
        prof.error_radius = static_cast<double>(radius);
        prof.eigenvalues.assign(eig.values.begin(), eig.values.end());
        for (const auto& col : eig.vectors)
            prof.eigenvectors.emplace_back(col.begin(), col.end());
        if (std::abs(prof.eigenvalues.front() - d) > prof.error_radius + 1e-9)
            throw std::logic_error("largest eigenvalue is not near d");
        F lam = 0;
        for (std::size_t i = 1; i < eig.values.size(); ++i)
            lam = std::max(lam, std::abs(eig.values[i]));
        // exact double/long-double to rational conversions keep the bound outward
        prof.lambda = Rat(static_cast<double>(lam)) + Rat(static_cast<double>(radius)) +
                      make_rat(1, Int(1) << 40);
        return prof;
    }
};

// Rational upper enclosure of (d/n) j (n-j) + lambda sqrt(j (n-j)).
inline Rat mixing_neighborhood_bound(const SpectralProfile& prof, int j) {
    if (j < 1 || j > prof.n - 1) throw std::invalid_argument("j out of range [1, n-1]");
    Rat s = Rat(Int(j) * Int(prof.n - j));
    return make_rat(Int(prof.d) * Int(j) * Int(prof.n - j), prof.n) +
           prof.lambda * sqrt_upper(s);
}

// M_j upper bounds from the mixing lemma plus exhaustively computed exact M_j,
// and the derived effective-degree cap D(y) <= max_j { j + M_j bound }.
struct SpectralBounds {
    std::map<int, Rat> mj_bound;  // j -> rational upper bound
    std::map<int, int> mj_exact;  // j -> max |N(S)| over S subset of B, |S| = j
    Rat dy_bound;                 // the j = 0 term contributes 0
};

inline SpectralBounds compute_spectral_bounds(const Graph& g, VertexSet b,
                                              const SpectralProfile& prof) {
    if (b.size() > 16) throw BudgetError("subset budget |B| <= 16 exceeded");
    SpectralBounds out;
    for (int j = 1; j <= b.size(); ++j) {
        out.mj_exact[j] = 0;
        if (j <= prof.n - 1) {
            out.mj_bound[j] = mixing_neighborhood_bound(prof, j);
            Rat term = Rat(j) + out.mj_bound[j];
            if (term > out.dy_bound) out.dy_bound = term;
        }
    }
    std::vector<int> members = b.members();
    const std::uint64_t subsets = 1ULL << members.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((mask >> i) & 1ULL) s.add(members[i]);
        int j = s.size();
        int m = common_neighborhood(g, s).size();
        if (m > out.mj_exact[j]) out.mj_exact[j] = m;
    }
    return out;
}

namespace detail {

// Exact violation test of m <= base + lambda*sqrt(s): true iff violated.
// Decided by rational squaring, so float rounding can never flag falsely.
inline bool mixing_violated_exact(const Rat& m, const Rat& base, const Rat& lambda, const Rat& s) {
    Rat excess = m - base;
    if (excess <= 0) return false;
    return excess * excess > lambda * lambda * s;
}

}  // namespace detail

// |N(S)| <= (d/n) j (n-j) + lambda sqrt(j(n-j)) for every nonempty S subset of B.
// A Violated verdict must survive exact rational squaring and a doubled-precision
// lambda recheck.
inline CheckReport check_common_neighborhood_bound(const Graph& g, VertexSet b) {
    CheckReport rep;
    rep.claim = "mixing-common-neighborhood-bound";
    SpectralProfile prof;
    try {
        prof = SpectralProfile::compute(g);
    } catch (const std::invalid_argument& e) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = e.what();
        return rep;
    }
    if (b.empty()) {
        rep.verdict = Verdict::Holds;
        rep.notes = "B empty, nothing to check";
        return rep;
    }
    if (b.size() > 16) throw BudgetError("subset budget |B| <= 16 exceeded");

    std::vector<int> members = b.members();
    const std::uint64_t subsets = 1ULL << members.size();
    rep.verdict = Verdict::Holds;
    int checked = 0;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((mask >> i) & 1ULL) s.add(members[i]);
        int j = s.size();
        if (j > prof.n - 1) continue;  // S = V has no outside vertices; bound void
        ++checked;
        Rat m(common_neighborhood(g, s).size());
        Rat base = make_rat(Int(prof.d) * Int(j) * Int(prof.n - j), prof.n);
        Rat sq = Rat(Int(j) * Int(prof.n - j));
        if (detail::mixing_violated_exact(m, base, prof.lambda, sq)) {
            SpectralProfile refined = SpectralProfile::compute_refined(g);
            if (detail::mixing_violated_exact(m, base, refined.lambda, sq)) {
                rep.verdict = Verdict::Violated;
                rep.witness = Json{{"S", vertex_set_json(g, s)},
                                   {"common_neighborhood_size", common_neighborhood(g, s).size()},
                                   {"lambda", rat_string(refined.lambda)},
                                   {"bound_base", rat_string(base)}};
                rep.notes = "violation confirmed by exact squaring and doubled-precision lambda";
                return rep;
            }
        }
    }
    rep.notes = "checked " + std::to_string(checked) + " subsets; lambda = " +
                rat_string(prof.lambda) + " (outward rounded)";
    return rep;
}

// c_{i,j} <= C(|B|, j) * C(M_j, i-j) for j >= 1, checked against both the exact
// M_j and the floor of the spectral upper bound (two sub-verdicts).
inline CheckReport check_coefficient_bounds(const Graph& g, VertexSet b,
                                            std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "spectral-coefficient-bounds";
    SpectralProfile prof;
    try {
        prof = SpectralProfile::compute(g);
    } catch (const std::invalid_argument& e) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = e.what();
        return rep;
    }
    SpectralBounds bounds = compute_spectral_bounds(g, b, prof);
    BivariatePoly p = cbpoly_bruteforce(g, b, budget);

    Json table = Json::array();
    bool exact_ok = true, spectral_ok = true;
    Json first_violation;
    for (const auto& [key, c] : p.terms()) {
        auto [i, j] = key;
        if (j < 1) continue;
        Int choose_b = binomial_u(static_cast<unsigned>(b.size()), static_cast<unsigned>(j));
        Int exact_m(bounds.mj_exact.at(j));
        Int exact_bound = choose_b * binomial(exact_m, static_cast<unsigned>(i - j));
        Int spec_floor = bounds.mj_bound.count(j) ? floor_rat(bounds.mj_bound.at(j)) : Int(prof.n - j);
        Int spec_bound = choose_b * binomial(spec_floor, static_cast<unsigned>(i - j));
        bool exact_violated = c > exact_bound;
        bool spec_violated = c > spec_bound;
        if (spec_violated) {
            // doubled-precision gate before trusting a spectral violation
            SpectralProfile refined = SpectralProfile::compute_refined(g);
            SpectralBounds rb = compute_spectral_bounds(g, b, refined);
            Int rfloor = rb.mj_bound.count(j) ? floor_rat(rb.mj_bound.at(j)) : Int(prof.n - j);
            spec_violated = c > choose_b * binomial(rfloor, static_cast<unsigned>(i - j));
        }
        table.push_back(Json{{"i", i},
                             {"j", j},
                             {"c", c.str()},
                             {"m_exact", bounds.mj_exact.at(j)},
                             {"bound_exact", exact_bound.str()},
                             {"m_spectral_floor", spec_floor.str()},
                             {"bound_spectral", spec_bound.str()}});
        if (exact_violated && exact_ok) {
            exact_ok = false;
            first_violation = table.back();
        }
        if (spec_violated && spectral_ok) {
            spectral_ok = false;
            first_violation = table.back();
        }
    }
    rep.witness = Json{{"table", table},
                       {"subverdict_exact", exact_ok ? "holds" : "violated"},
                       {"subverdict_spectral", spectral_ok ? "holds" : "violated"}};
    if (!exact_ok || !spectral_ok) {
        rep.verdict = Verdict::Violated;
        rep.witness["violation"] = first_violation;
        rep.notes = "coefficient bound violated (doubled-precision gate applied)";
    } else {
        rep.verdict = Verdict::Holds;
        rep.notes = "all nonzero c_{i,j} with j >= 1 within both bounds";
    }
    return rep;
}

// Largest i with a_i(y) > 0.
inline int effective_degree(const BivariatePoly& p, const Rat& y) {
    if (y < 0) throw std::invalid_argument("effective degree requires y >= 0");
    UnivariatePoly sec = p.section_at_y(y);
    if (sec.is_zero()) throw std::invalid_argument("section is identically zero");
    return sec.degree();
}

// D(y) <= max_j { j + (d/n) j (n-j) + lambda sqrt(j(n-j)) } over 0 <= j <= |B|;
// the j = 0 term is 0 exactly as the claim states, which makes the bound
// degenerate whenever B-avoiding cliques dominate.
inline CheckReport check_effective_degree_bound(const Graph& g, VertexSet b,
                                                std::span<const Rat> ygrid,
                                                std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "effective-degree-spectral-bound";
    SpectralProfile prof;
    try {
        prof = SpectralProfile::compute(g);
    } catch (const std::invalid_argument& e) {
        rep.verdict = Verdict::NotApplicable;
        rep.notes = e.what();
        return rep;
    }
    Rat bound(0);
    for (int j = 1; j <= std::min(b.size(), prof.n - 1); ++j) {
        Rat term = Rat(j) + mixing_neighborhood_bound(prof, j);
        if (term > bound) bound = term;
    }
    BivariatePoly p = cbpoly_bruteforce(g, b, budget);
    rep.verdict = Verdict::Holds;
    Json per_y = Json::array();
    for (const Rat& y : ygrid) {
        int dy = effective_degree(p, y);
        bool ok = Rat(dy) <= bound;
        per_y.push_back(Json{{"y", rat_string(y)}, {"D", dy}, {"holds", ok}});
        if (!ok && rep.verdict == Verdict::Holds) {
            SpectralProfile refined = SpectralProfile::compute_refined(g);
            Rat rbound(0);
            for (int j = 1; j <= std::min(b.size(), refined.n - 1); ++j) {
                Rat term = Rat(j) + mixing_neighborhood_bound(refined, j);
                if (term > rbound) rbound = term;
            }
            if (Rat(dy) > rbound) {
                rep.verdict = Verdict::Violated;
                rep.witness = Json{{"y", rat_string(y)},
                                   {"D", dy},
                                   {"bound", rat_string(rbound)},
                                   {"B", vertex_set_json(g, b)}};
            }
        }
    }
    if (rep.verdict == Verdict::Holds) rep.witness = Json{{"per_y", per_y}, {"bound", rat_string(bound)}};
    rep.notes = "regime y >= 0; j = 0 contributes 0 to the stated maximum";
    return rep;
}

// zeta_G(B; y) >= -1/D(y), decided exactly per grid point.
inline CheckReport check_root_bound(const Graph& g, VertexSet b, std::span<const Rat> ygrid,
                                    std::uint64_t budget = default_clique_budget) {
    CheckReport rep;
    rep.claim = "effective-degree-root-bound";
    {
        const int n = g.vertex_count();
        int d = g.degree(0);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != d) {
                rep.verdict = Verdict::NotApplicable;
                rep.notes = "graph is not regular";
                return rep;
            }
    }
    BivariatePoly p = cbpoly_bruteforce(g, b, budget);
    rep.verdict = Verdict::Holds;
    Json per_y = Json::array();
    std::string notes = "regime y >= 0;";
    int decided = 0;
    for (const Rat& y : ygrid) {
        UnivariatePoly sec = p.section_at_y(y);
        int dy = sec.degree();
        if (dy <= 0) {
            per_y.push_back(Json{{"y", rat_string(y)}, {"status", "constant-section"}});
            continue;
        }
        RootAnalysis ra = RootAnalysis::isolate_negative_roots(sec);
        if (!ra.has_negative_root()) {
            per_y.push_back(Json{{"y", rat_string(y)}, {"status", "zeta-neg-infinity"}});
            notes += " zeta = -infinity at y=" + rat_string(y) + " (claim not applicable there);";
            continue;
        }
        Rat threshold = make_rat(-1, dy);
        int pos = ra.zeta_compare_to(threshold);
        ++decided;
        per_y.push_back(Json{{"y", rat_string(y)},
                             {"D", dy},
                             {"zeta", root_analysis_json(ra)},
                             {"holds", pos >= 0}});
        if (pos < 0 && rep.verdict == Verdict::Holds) {
            rep.verdict = Verdict::Violated;
            rep.witness = Json{{"y", rat_string(y)},
                               {"D", dy},
                               {"threshold", rat_string(threshold)},
                               {"zeta", root_analysis_json(ra)},
                               {"B", vertex_set_json(g, b)}};
        }
    }
    if (rep.verdict == Verdict::Holds) {
        rep.witness = Json{{"per_y", per_y}};
        if (decided == 0) rep.verdict = Verdict::NotApplicable;
    }
    rep.notes = notes;
    return rep;
}

// y-grid for the spectral checkers (their claims are stated for y >= 0).
inline std::vector<Rat> default_spectral_grid() {
    return {Rat(0), make_rat(1, 2), Rat(1), Rat(2)};
}

}  // namespace bclique
