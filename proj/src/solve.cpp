#include "qc2/solve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qc2/linalg.hpp"
#include "qc2/prng.hpp"
#include "qc2/unipoly.hpp"

namespace qc2 {

namespace {

struct PointKey {
    int level;
    std::vector<std::uint64_t> bits;
    bool operator<(const PointKey& o) const {
        if (level != o.level) return level < o.level;
        return bits < o.bits;
    }
};

PointKey key_of(const ProjPoint& p) {
    PointKey k;
    k.level = p.level();
    for (auto& c : p.x) k.bits.push_back(c.bits());
    return k;
}

// lcm of tower levels when representable.
inline bool level_compatible(const FieldTower& T, int a, int b) {
    return std::lcm(a, b) <= T.max_level();
}

// Roots of the gcd of the (nonzero) univariate members of a system.
std::vector<UniRoot> fiber_roots(const std::vector<MultiPoly>& sys1, int max_ext, bool& all_zero) {
    UniPoly g;
    bool first = true;
    all_zero = true;
    for (auto& p : sys1) {
        if (p.is_zero()) continue;
        all_zero = false;
        UniPoly u = p.as_univariate();
        if (u.degree() == 0) return {};  // nonzero constant: no common root
        g = first ? u.monic() : gcd(g, u);
        first = false;
        if (g.degree() == 0) return {};
    }
    if (first) return {};
    return uni_roots(g, max_ext);
}

// Field values whose minimal tower level is exactly d.
std::vector<FieldElem> level_values(const FieldTower& T, int d) {
    std::vector<FieldElem> out;
    for (std::uint64_t b = 0; b < T.order(d); ++b) {
        FieldElem e = T.from_bits(b, d);
        if (e.min_level() == d) out.push_back(e);
    }
    return out;
}

// --- enumeration solver ------------------------------------------------------

void enumerate_chart(const std::vector<MultiPoly>& sys, int nfree, int max_ext,
                     std::vector<std::vector<FieldElem>>& sols) {
    const FieldTower& T = sys.front().tower();
    if (nfree == 1) {
        bool all_zero = false;
        for (auto& r : fiber_roots(sys, max_ext, all_zero)) sols.push_back({r.root});
        if (all_zero)
            throw NonNormalError("projective solver: a coordinate line satisfies the system");
        return;
    }
    for (int d = 1; d <= max_ext; ++d) {
        for (auto& a : level_values(T, d)) {
            std::vector<MultiPoly> sub;
            sub.reserve(sys.size());
            for (auto& p : sys) sub.push_back(p.eval_var(0, a));
            std::vector<std::vector<FieldElem>> tail;
            enumerate_chart(sub, nfree - 1, max_ext, tail);
            for (auto& t : tail) {
                std::vector<FieldElem> full{a};
                full.insert(full.end(), t.begin(), t.end());
                sols.push_back(std::move(full));
            }
        }
    }
}

// --- resultant solver ---------------------------------------------------------

// Smallest level whose field has more than `need` elements.
int eval_level(const FieldTower& T, long long need) {
    for (int e = 1; e <= T.max_level(); ++e) {
        if (T.m() * e >= 62) return e;
        if (static_cast<long long>(T.order(e)) > need) return e;
    }
    throw std::logic_error("eval_level: tower exhausted");
}

UniPoly lagrange_interpolate(const FieldTower& T, int lvl,
                             const std::vector<std::pair<FieldElem, FieldElem>>& pts) {
    UniPoly acc(T, lvl);
    for (size_t i = 0; i < pts.size(); ++i) {
        UniPoly basis = UniPoly::constant(T.one(lvl));
        FieldElem denom = T.one(lvl);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            UniPoly lin = UniPoly::var(T, lvl);
            lin.set_coeff(0, pts[j].first);  // t + x_j in characteristic 2
            basis = basis * lin;
            denom = denom * (pts[i].first + pts[j].first);
        }
        acc += basis.scale(pts[i].second * denom.inv());
    }
    return acc;
}

// Leading coefficient of p in its last variable, as a polynomial in the rest.
MultiPoly leading_in_last(const MultiPoly& p, int& deg_last) {
    int nv = p.num_vars();
    deg_last = 0;
    for (auto& [m, c] : p.terms()) deg_last = std::max(deg_last, static_cast<int>(m[nv - 1]));
    MultiPoly lc(p.tower(), p.level(), nv - 1);
    for (auto& [m, c] : p.terms()) {
        if (m[nv - 1] != deg_last) continue;
        Mono d(m.begin(), m.end() - 1);
        lc.set_coeff(d, p.tower().from_bits(c, p.level()));
    }
    return lc;
}

bool lc_is_nonzero_constant(const MultiPoly& p) {
    int dl = 0;
    MultiPoly lc = leading_in_last(p, dl);
    if (dl == 0) return false;  // does not involve the last variable
    return lc.num_terms() == 1 && lc.terms().begin()->first == Mono(lc.num_vars(), 0);
}

UniPoly descend_coeffs(const UniPoly& r, int lvl) {
    UniPoly out(r.tower(), lvl);
    for (int k = 0; k <= r.degree(); ++k) {
        auto down = r.coeff(k).descend(lvl);
        if (!down) throw std::logic_error("resultant interpolation failed to descend");
        out.set_coeff(k, *down);
    }
    return out;
}

// Resultant of two bivariate polynomials w.r.t. their last variable via
// evaluation/interpolation, skipping points that kill a leading coefficient.
UniPoly resultant_bivar_lastvar(const MultiPoly& A, const MultiPoly& B) {
    const FieldTower& T = A.tower();
    int lvl = std::lcm(A.level(), B.level());
    long long dbound =
        static_cast<long long>(std::max(A.total_degree(), 0)) * std::max(B.total_degree(), 0);
    int dla = 0, dlb = 0;
    MultiPoly lca = leading_in_last(A, dla);
    MultiPoly lcb = leading_in_last(B, dlb);
    int E = std::lcm(eval_level(T, 2 * dbound + 16), lvl);
    std::vector<std::pair<FieldElem, FieldElem>> vals;
    std::uint64_t ctr = 0;
    while (static_cast<long long>(vals.size()) <= dbound) {
        if (T.m() * E < 62 && ctr >= T.order(E))
            throw CertificationError("bivariate resultant: evaluation points exhausted");
        FieldElem xi = T.from_bits(ctr++, E);
        if (lca.lift(E).eval({xi}).is_zero() || lcb.lift(E).eval({xi}).is_zero()) continue;
        UniPoly ua = A.lift(E).eval_var(0, xi).as_univariate();
        UniPoly ub = B.lift(E).eval_var(0, xi).as_univariate();
        vals.emplace_back(xi, resultant(ua, ub));
    }
    return descend_coeffs(lagrange_interpolate(T, E, vals), lvl);
}

// Resultant w.r.t. the last variable of two trivariate polynomials whose
// leading coefficients in that variable are nonzero constants (tensor grid).
MultiPoly resultant_trivar_lastvar_constlc(const MultiPoly& A, const MultiPoly& B) {
    const FieldTower& T = A.tower();
    int lvl = std::lcm(A.level(), B.level());
    long long dbound =
        static_cast<long long>(std::max(A.total_degree(), 0)) * std::max(B.total_degree(), 0);
    int E = std::lcm(eval_level(T, dbound + 2), lvl);
    std::vector<FieldElem> xs;
    for (long long i = 0; i <= dbound; ++i)
        xs.push_back(T.from_bits(static_cast<std::uint64_t>(i), E));
    std::vector<UniPoly> slices;
    MultiPoly AE = A.lift(E), BE = B.lift(E);
    for (auto& xi : xs) {
        MultiPoly Ax = AE.eval_var(0, xi);
        MultiPoly Bx = BE.eval_var(0, xi);
        std::vector<std::pair<FieldElem, FieldElem>> vals;
        for (auto& yj : xs) {
            UniPoly ua = Ax.eval_var(0, yj).as_univariate();
            UniPoly ub = Bx.eval_var(0, yj).as_univariate();
            vals.emplace_back(yj, resultant(ua, ub));
        }
        slices.push_back(lagrange_interpolate(T, E, vals));
    }
    int dy = -1;
    for (auto& s : slices) dy = std::max(dy, s.degree());
    MultiPoly out(T, lvl, 2);
    for (int k = 0; k <= dy; ++k) {
        std::vector<std::pair<FieldElem, FieldElem>> vals;
        for (size_t i = 0; i < xs.size(); ++i) vals.emplace_back(xs[i], slices[i].coeff(k));
        UniPoly ck = descend_coeffs(lagrange_interpolate(T, E, vals), lvl);
        for (int i = 0; i <= ck.degree(); ++i) {
            Mono m{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(k)};
            out.set_coeff(m, ck.coeff(i));
        }
    }
    return out;
}

// Candidate values of the first coordinate of a bivariate system, via
// pairwise elimination of the second variable. Superset of the truth.
std::vector<UniRoot> candidates_2var(const std::vector<MultiPoly>& sys, int max_ext,
                                     bool& degenerate) {
    degenerate = false;
    UniPoly g;
    bool first = true;
    auto fold = [&](const UniPoly& u) {
        if (u.is_zero()) return;
        g = first ? u.monic() : gcd(g, u);
        first = false;
    };
    for (size_t i = 0; i < sys.size(); ++i) {
        int dli = 0;
        leading_in_last(sys[i], dli);
        if (dli == 0) {
            fold(sys[i].as_univariate());
            continue;
        }
        for (size_t j = i + 1; j < sys.size(); ++j) {
            int dlj = 0;
            leading_in_last(sys[j], dlj);
            if (dlj == 0) continue;
            fold(resultant_bivar_lastvar(sys[i], sys[j]));
        }
        if (!first && g.degree() == 0) return {};  // gcd is a nonzero constant
    }
    if (first) {
        degenerate = true;
        return {};
    }
    if (g.degree() == 0) return {};
    return uni_roots(g, max_ext);
}

std::vector<std::vector<FieldElem>> solve_system_2var(const std::vector<MultiPoly>& sys_in,
                                                      int max_ext) {
    std::vector<MultiPoly> sys;
    for (auto& p : sys_in)
        if (!p.is_zero()) sys.push_back(p);
    if (sys.empty())
        throw NonNormalError("projective solver: chart system vanished identically");
    for (auto& p : sys)
        if (p.total_degree() == 0) return {};
    std::vector<std::vector<FieldElem>> out;
    bool degenerate = false;
    auto xs = candidates_2var(sys, max_ext, degenerate);
    if (degenerate) {
        // a single bivariate polynomial cuts a curve, which cannot happen in
        // a chart of a scheme already certified zero-dimensional
        throw NonNormalError("projective solver: chart system is not zero-dimensional");
    }
    const FieldTower& T2 = sys.front().tower();
    for (auto& xr : xs) {
        if (!level_compatible(T2, sys.front().level(), xr.root.level())) continue;
        std::vector<MultiPoly> sub;
        for (auto& p : sys) sub.push_back(p.eval_var(0, xr.root));
        bool all_zero = false;
        for (auto& r : fiber_roots(sub, max_ext, all_zero)) {
            if (!level_compatible(T2, xr.root.level(), r.root.level())) continue;
            out.push_back({xr.root, r.root});
        }
        if (all_zero) throw NonNormalError("projective solver: fiber line satisfies the system");
    }
    return out;
}

std::vector<std::vector<FieldElem>> solve_system_3var(const std::vector<MultiPoly>& sys_in,
                                                      int max_ext, std::uint64_t seed) {
    std::vector<MultiPoly> sys;
    for (auto& p : sys_in)
        if (!p.is_zero()) sys.push_back(p);
    if (sys.empty())
        throw NonNormalError("projective solver: chart system vanished identically");
    for (auto& p : sys)
        if (p.total_degree() == 0) return {};
    const FieldTower& T = sys.front().tower();
    int lvl = sys.front().level();

    // Shear candidates come from the lowest usable level: coordinates of the
    // sheared solutions live at lcm(point level, shear level), so a shear
    // over the base keeps every point within the representable tower range.
    Prng rng(seed ^ 0x5eedull);
    std::vector<int> shear_levels{lvl};
    for (int extra = lvl + 1; extra <= T.max_level() && shear_levels.size() < 3; ++extra)
        if (extra % lvl == 0 && T.order(extra) >= 16) shear_levels.push_back(extra);
    for (int attempt = 0; attempt < 60; ++attempt) {
        int rlvl = shear_levels[std::min<size_t>(attempt / 20, shear_levels.size() - 1)];
        // points of level p reach lcm(p, rlvl) <= p * rlvl as sheared values
        int ext_int = std::min(T.max_level(), max_ext * rlvl);
        std::vector<std::vector<FieldElem>> M(3, std::vector<FieldElem>(3, T.zero(rlvl)));
        if (attempt == 0) {
            for (int i = 0; i < 3; ++i) M[i][i] = T.one(rlvl);
        } else {
            FieldElem det = T.zero(rlvl);
            do {
                for (auto& row : M)
                    for (auto& e : row) e = T.from_bits(rng.below(T.order(rlvl)), rlvl);
                det = M[0][0] * (M[1][1] * M[2][2] + M[1][2] * M[2][1]) +
                      M[0][1] * (M[1][0] * M[2][2] + M[1][2] * M[2][0]) +
                      M[0][2] * (M[1][0] * M[2][1] + M[1][1] * M[2][0]);
            } while (det.is_zero());
        }
        std::vector<MultiPoly> sheared;
        bool ok = true;
        for (auto& p : sys) {
            MultiPoly q = p.linear_change(M);
            if (q.total_degree() > 0 && !lc_is_nonzero_constant(q)) ok = false;
            sheared.push_back(q);
        }
        if (!ok) continue;

        std::vector<MultiPoly> biv;
        for (size_t i = 0; i < sheared.size(); ++i) {
            int dli = 0;
            leading_in_last(sheared[i], dli);
            if (dli == 0) continue;
            for (size_t j = i + 1; j < sheared.size(); ++j) {
                int dlj = 0;
                leading_in_last(sheared[j], dlj);
                if (dlj == 0) continue;
                MultiPoly r = resultant_trivar_lastvar_constlc(sheared[i], sheared[j]);
                if (!r.is_zero()) biv.push_back(r);
            }
        }
        if (biv.empty()) continue;
        bool degenerate = false;
        auto xs = candidates_2var(biv, ext_int, degenerate);
        if (degenerate) continue;
        std::vector<std::vector<FieldElem>> out;
        for (auto& xr : xs) {
            if (!level_compatible(T, rlvl, xr.root.level())) continue;
            std::vector<MultiPoly> sub;
            for (auto& p : sheared) sub.push_back(p.eval_var(0, xr.root));
            for (auto& yz : solve_system_2var(sub, ext_int)) {
                // undo the shear: u = M (x, y, z)
                std::vector<FieldElem> v{xr.root, yz[0], yz[1]};
                long long plvl = rlvl;
                bool fits = true;
                for (auto& c : v) {
                    plvl = std::lcm(plvl, static_cast<long long>(c.level()));
                    fits = fits && plvl <= T.max_level();
                }
                if (!fits) continue;  // cannot be a point within the tower range
                std::vector<FieldElem> u(3, T.zero(static_cast<int>(plvl)));
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        u[i] = u[i] + M[i][j].lift(static_cast<int>(plvl)) *
                                          v[j].lift(static_cast<int>(plvl));
                out.push_back(std::move(u));
            }
        }
        return out;
    }
    throw CertificationError("projective solver: no usable shear found");
}

}  // namespace

std::vector<ProjPoint> solve_projective_system(const std::vector<MultiPoly>& gens,
                                               int max_ext_degree, std::uint64_t seed,
                                               SolveStrategy strategy) {
    if (gens.empty()) throw std::invalid_argument("solve_projective_system: no generators");
    const FieldTower& T = gens.front().tower();
    int nvars = gens.front().num_vars();
    bool brute = strategy == SolveStrategy::Enumerate ||
                 (strategy == SolveStrategy::Auto && T.m() * max_ext_degree <= 8);

    std::map<PointKey, ProjPoint> reps;
    for (int c = 0; c < nvars; ++c) {
        std::vector<MultiPoly> sys;
        for (auto& g : gens) {
            MultiPoly s = g;
            for (int i = 0; i < c; ++i) s = s.eval_var(0, T.zero());
            s = s.eval_var(0, T.one());
            sys.push_back(s);
        }
        int nfree = nvars - 1 - c;
        std::vector<std::vector<FieldElem>> sols;
        if (nfree == 0) {
            bool good = true;
            for (auto& p : sys)
                if (!p.eval({}).is_zero()) good = false;
            if (good) sols.push_back({});
        } else if (nfree == 1) {
            bool all_zero = false;
            for (auto& r : fiber_roots(sys, max_ext_degree, all_zero)) sols.push_back({r.root});
            if (all_zero)
                throw NonNormalError("projective solver: coordinate line satisfies the system");
        } else if (brute) {
            enumerate_chart(sys, nfree, max_ext_degree, sols);
        } else if (nfree == 2) {
            sols = solve_system_2var(sys, max_ext_degree);
        } else if (nfree == 3) {
            sols = solve_system_3var(sys, max_ext_degree, seed);
        } else {
            throw std::invalid_argument("solve_projective_system: more than 4 variables");
        }
        for (auto& s : sols) {
            long long plvl = 1;
            bool fits = true;
            for (auto& v : s) {
                plvl = std::lcm(plvl, static_cast<long long>(v.level()));
                fits = fits && plvl <= T.max_level();
            }
            if (!fits) continue;
            std::vector<FieldElem> coords;
            for (int i = 0; i < c; ++i) coords.push_back(T.zero());
            coords.push_back(T.one());
            for (auto& v : s) coords.push_back(v);
            bool good = true;
            for (auto& g : gens)
                if (!g.eval(coords).is_zero()) {
                    good = false;
                    break;
                }
            if (!good) continue;
            ProjPoint p = ProjPoint::normalize(coords).reduced();
            if (p.level() > max_ext_degree) continue;
            ProjPoint canon = p.orbit_canonical();
            reps.emplace(key_of(canon), canon);
        }
    }
    std::vector<ProjPoint> out;
    for (auto& [k, p] : reps) out.push_back(p);
    return out;
}

}  // namespace qc2
