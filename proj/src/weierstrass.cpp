#include "qc2/weierstrass.hpp"

#include <algorithm>
#include <numeric>

namespace qc2 {

std::string KodairaType::name() const {
    switch (family) {
        case KodairaFamily::In:
            return n == 0 ? "I0" : "I" + std::to_string(n);
        case KodairaFamily::II:
            return "II";
        case KodairaFamily::III:
            return "III";
        case KodairaFamily::IV:
            return "IV";
        case KodairaFamily::InStar:
            return "I" + std::to_string(n) + "*";
        case KodairaFamily::IVStar:
            return "IV*";
        case KodairaFamily::IIIStar:
            return "III*";
        case KodairaFamily::IIStar:
            return "II*";
    }
    return "?";
}

FiberTableRow fiber_table(const KodairaType& t) {
    switch (t.family) {
        case KodairaFamily::In:
            if (t.n < 0) throw std::invalid_argument("fiber_table: I_n needs n >= 0");
            if (t.n == 0) return {1, 0, 0, 0, true};  // good reduction
            return {t.n, 0, t.n, t.n / 2, true};
        case KodairaFamily::II:
            return {1, 2, 2, 0, false};
        case KodairaFamily::III:
            return {2, 1, 3, 1, false};
        case KodairaFamily::IV:
            return {3, 0, 4, 1, true};
        case KodairaFamily::InStar:
            if (t.n < 0) throw std::invalid_argument("fiber_table: I_n* needs n >= 0");
            if (t.n == 1) return {6, 1, 7, 4, true};
            return {t.n + 5, 2, t.n + 6, 4 + t.n / 2, false};
        case KodairaFamily::IVStar:
            return {7, 0, 8, 4, true};
        case KodairaFamily::IIIStar:
            return {8, 1, 9, 5, false};
        case KodairaFamily::IIStar:
            return {9, 1, 10, 5, false};
    }
    throw std::invalid_argument("fiber_table: unknown type");
}

WeierstrassModel WeierstrassModel::make(UniPoly a1, UniPoly a2, UniPoly a3, UniPoly a4,
                                        UniPoly a6) {
    int lvl = std::lcm(std::lcm(a1.level(), a2.level()),
                       std::lcm(a3.level(), std::lcm(a4.level(), a6.level())));
    a1 = a1.lift(lvl);
    a2 = a2.lift(lvl);
    a3 = a3.lift(lvl);
    a4 = a4.lift(lvl);
    a6 = a6.lift(lvl);
    const int bound[5] = {2, 4, 6, 8, 12};
    const UniPoly* as[5] = {&a1, &a2, &a3, &a4, &a6};
    for (int i = 0; i < 5; ++i)
        if (as[i]->degree() > bound[i])
            throw std::invalid_argument("WeierstrassModel: K3 degree bound exceeded");
    return WeierstrassModel{std::move(a1), std::move(a2), std::move(a3), std::move(a4),
                            std::move(a6)};
}

namespace {

UniPoly disc_of(const UniPoly& a1, const UniPoly& a2, const UniPoly& a3, const UniPoly& a4,
                const UniPoly& a6) {
    UniPoly a1_2 = a1 * a1;
    UniPoly a1_3 = a1_2 * a1;
    UniPoly a1_4 = a1_2 * a1_2;
    UniPoly a3_2 = a3 * a3;
    UniPoly a3_3 = a3_2 * a3;
    return a3_2 * a3_2 + a1_3 * a3_3 + a1_4 * (a4 * a4) + a1_4 * a2 * a3_2 +
           a1_4 * a1 * a3 * a4 + a1_4 * a1_2 * a6;
}

}  // namespace

UniPoly discriminant(const WeierstrassModel& W) {
    return disc_of(W.a1, W.a2, W.a3, W.a4, W.a6);
}

bool is_quasi_elliptic(const WeierstrassModel& W) { return W.a1.is_zero() && W.a3.is_zero(); }

bool is_square_poly(const UniPoly& p) {
    for (int i = 1; i <= p.degree(); i += 2)
        if (p.coeff_bits(i)) return false;
    return true;
}

Place Place::infinity(const FieldTower& T, int level) {
    Place p;
    p.at_infinity = true;
    p.pi = UniPoly(T, level);
    return p;
}

Place Place::finite(UniPoly pi) {
    if (pi.degree() < 1) throw std::invalid_argument("Place: need positive degree");
    auto fac = factorize(pi);
    if (fac.size() != 1 || fac.front().second != 1 || fac.front().first.degree() != pi.degree())
        throw std::invalid_argument("Place: polynomial is not irreducible");
    Place p;
    p.pi = pi.monic();
    return p;
}

// ---------------------------------------------------------------------------
// Tate's algorithm, characteristic 2.

namespace {

struct Local {
    UniPoly a1, a2, a3, a4, a6;
};

int val(const UniPoly& p) { return p.is_zero() ? 1 << 20 : p.valuation(); }

// (x, y) -> (x + r, y + s x + w) with u = 1.
Local shifted(const Local& W, const UniPoly& r, const UniPoly& s, const UniPoly& w) {
    Local o;
    o.a1 = W.a1;
    o.a2 = W.a2 + s * W.a1 + r + s * s;
    o.a3 = W.a3 + r * W.a1;
    o.a4 = W.a4 + s * W.a3 + (w + r * s) * W.a1 + r * r;
    o.a6 = W.a6 + r * W.a4 + r * r * W.a2 + r * r * r + w * W.a3 + w * w + r * w * W.a1;
    return o;
}

struct LocalResult {
    KodairaType type;
    int v_delta;
    int minimal_steps;
};

LocalResult tate_local(Local W, const FieldTower& T, int lvl) {
    int steps = 0;
    for (;;) {
        UniPoly Delta = disc_of(W.a1, W.a2, W.a3, W.a4, W.a6);
        if (Delta.is_zero()) throw std::logic_error("tate_local: discriminant vanished");
        int vD = Delta.valuation();
        if (vD == 0) return {KodairaType{KodairaFamily::In, 0}, 0, steps};

        // move the singular point of the reduction to the origin
        FieldElem a1b = W.a1.coeff(0), a2b = W.a2.coeff(0), a3b = W.a3.coeff(0),
                  a4b = W.a4.coeff(0), a6b = W.a6.coeff(0);
        FieldElem x0 = T.zero(lvl), y0 = T.zero(lvl);
        if (!a1b.is_zero()) {
            x0 = a3b * a1b.inv();
            y0 = (x0 * x0 + a4b) * a1b.inv();
        } else {
            x0 = a4b.sqrt();
            y0 = (x0 * x0 * x0 + a2b * x0 * x0 + a4b * x0 + a6b).sqrt();
        }
        W = shifted(W, UniPoly::constant(x0), UniPoly(T, lvl), UniPoly::constant(y0));
        if (val(W.a3) < 1 || val(W.a4) < 1 || val(W.a6) < 1)
            throw std::logic_error("tate_local: singular point translation failed");

        if (val(W.a1) == 0)  // b2 is a unit: multiplicative
            return {KodairaType{KodairaFamily::In, vD}, vD, steps};
        if (val(W.a6) == 1) return {KodairaType{KodairaFamily::II, 0}, vD, steps};
        UniPoly b8 = W.a1 * W.a1 * W.a6 + W.a1 * W.a3 * W.a4 + W.a2 * W.a3 * W.a3 + W.a4 * W.a4;
        if (val(b8) == 2) return {KodairaType{KodairaFamily::III, 0}, vD, steps};
        if (val(W.a3) == 1)  // v(b6) == 2
            return {KodairaType{KodairaFamily::IV, 0}, vD, steps};

        // normalize into step 6 shape: v(a2) >= 1, then v(a6) >= 3
        W = shifted(W, UniPoly(T, lvl), UniPoly::constant(W.a2.coeff(0).sqrt()), UniPoly(T, lvl));
        W = shifted(W, UniPoly(T, lvl), UniPoly(T, lvl),
                    UniPoly::monomial(T, lvl, 1).scale(W.a6.coeff(2).sqrt()));
        if (val(W.a2) < 1 || val(W.a3) < 2 || val(W.a4) < 2 || val(W.a6) < 3)
            throw std::logic_error("tate_local: step 6 normalization failed");

        // P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3 over the residue field
        UniPoly P(T, lvl);
        P.set_coeff(3, T.one(lvl));
        P.set_coeff(2, W.a2.coeff(1));
        P.set_coeff(1, W.a4.coeff(2));
        P.set_coeff(0, W.a6.coeff(3));
        UniPoly Pprime(T, lvl);  // P' = T^2 + a4,2 in characteristic 2
        Pprime.set_coeff(2, T.one(lvl));
        Pprime.set_coeff(0, W.a4.coeff(2));
        UniPoly rep = gcd(P, Pprime);

        if (rep.degree() == 0) return {KodairaType{KodairaFamily::InStar, 0}, vD, steps};

        if (rep.degree() == 1) {
            // double root of P: translate it to T = 0, then the I_n* loop
            FieldElem alpha = rep.coeff(0);
            W = shifted(W, UniPoly::monomial(T, lvl, 1).scale(alpha), UniPoly(T, lvl),
                        UniPoly(T, lvl));
            if (val(W.a2) != 1 || val(W.a4) < 3 || val(W.a6) < 4)
                throw std::logic_error("tate_local: step 7 entry failed");
            FieldElem eta = W.a2.coeff(1);
            for (int k = 1; k <= vD; ++k) {
                // Y^2 + a3,(k+1) Y + a6,(2k+2): separable iff the middle
                // coefficient survives
                if (val(W.a3) == k + 1)
                    return {KodairaType{KodairaFamily::InStar, 2 * k - 1}, vD, steps};
                FieldElem yk = W.a6.coeff(2 * k + 2).sqrt();
                W = shifted(W, UniPoly(T, lvl), UniPoly(T, lvl),
                            UniPoly::monomial(T, lvl, k + 1).scale(yk));
                // eta X^2 + a4,(k+2) X + a6,(2k+3)
                if (val(W.a4) == k + 2)
                    return {KodairaType{KodairaFamily::InStar, 2 * k}, vD, steps};
                FieldElem xk = (W.a6.coeff(2 * k + 3) * eta.inv()).sqrt();
                W = shifted(W, UniPoly::monomial(T, lvl, k + 1).scale(xk), UniPoly(T, lvl),
                            UniPoly(T, lvl));
            }
            throw std::logic_error("tate_local: I_n* loop exceeded v(Delta)");
        }

        // triple root of P (rep = (T + alpha)^2): translate to T = 0
        FieldElem alpha = rep.coeff(0).sqrt();
        W = shifted(W, UniPoly::monomial(T, lvl, 1).scale(alpha), UniPoly(T, lvl), UniPoly(T, lvl));
        if (val(W.a2) < 2 || val(W.a4) < 3 || val(W.a6) < 4)
            throw std::logic_error("tate_local: step 8 entry failed");
        // Y^2 + a3,2 Y + a6,4
        if (val(W.a3) == 2) return {KodairaType{KodairaFamily::IVStar, 0}, vD, steps};
        W = shifted(W, UniPoly(T, lvl), UniPoly(T, lvl),
                    UniPoly::monomial(T, lvl, 2).scale(W.a6.coeff(4).sqrt()));
        if (val(W.a3) < 3 || val(W.a6) < 5)
            throw std::logic_error("tate_local: step 9 entry failed");
        if (val(W.a4) == 3) return {KodairaType{KodairaFamily::IIIStar, 0}, vD, steps};
        if (val(W.a6) == 5) return {KodairaType{KodairaFamily::IIStar, 0}, vD, steps};

        // Step 11: not minimal; rescale and restart.
        if (++steps > 10) throw std::logic_error("tate_local: minimalization cap hit");
        W.a1 = W.a1.shift_down(1);
        W.a2 = W.a2.shift_down(2);
        W.a3 = W.a3.shift_down(3);
        W.a4 = W.a4.shift_down(4);
        W.a6 = W.a6.shift_down(6);
    }
}

FiberReport finish_report(Place place, const LocalResult& lr) {
    FiberReport rep;
    rep.place = std::move(place);
    rep.type = lr.type;
    FiberTableRow row = fiber_table(lr.type);
    rep.m_v = row.m_v;
    rep.e_v = row.e_v;
    rep.v_delta = lr.v_delta;
    rep.delta_v = lr.v_delta - row.e_v;
    rep.N_v = row.N_v;
    rep.minimalization_steps = lr.minimal_steps;
    if (rep.delta_v < row.delta_min || (row.delta_exact && rep.delta_v != row.delta_min))
        throw std::logic_error("tate_fiber: wild ramification outside the admissible range for " +
                               lr.type.name());
    return rep;
}

}  // namespace

FiberReport tate_fiber(const WeierstrassModel& W, const Place& place, int max_ext_degree) {
    if (is_quasi_elliptic(W))
        throw QuasiEllipticError("tate_fiber: model is quasi-elliptic (a1 = a3 = 0)");
    UniPoly Delta = discriminant(W);
    if (Delta.is_zero())
        throw std::invalid_argument("tate_fiber: discriminant vanishes identically");
    const FieldTower& T = W.tower();
    Local L;
    if (place.at_infinity) {
        L.a1 = W.a1.reverse(2);
        L.a2 = W.a2.reverse(4);
        L.a3 = W.a3.reverse(6);
        L.a4 = W.a4.reverse(8);
        L.a6 = W.a6.reverse(12);
        return finish_report(place, tate_local(L, T, W.level()));
    }
    int d = place.pi.degree();
    FieldElem theta = T.zero(W.level());
    if (d == 1) {
        theta = place.pi.monic().coeff(0);  // monic t + c has root c
    } else {
        if (place.pi.level() * d > T.max_level() ||
            d * place.pi.level() > std::max(max_ext_degree, 1) * place.pi.level())
            throw std::invalid_argument("tate_fiber: place needs an extension beyond the bound");
        auto roots = uni_roots(place.pi, place.pi.level() * d);
        if (roots.empty()) throw std::logic_error("tate_fiber: place has no root in its own field");
        theta = roots.front().root;
    }
    int lvl = std::lcm(W.level(), theta.level());
    L.a1 = W.a1.lift(lvl).translate(theta.lift(lvl));
    L.a2 = W.a2.lift(lvl).translate(theta.lift(lvl));
    L.a3 = W.a3.lift(lvl).translate(theta.lift(lvl));
    L.a4 = W.a4.lift(lvl).translate(theta.lift(lvl));
    L.a6 = W.a6.lift(lvl).translate(theta.lift(lvl));
    return finish_report(place, tate_local(L, T, lvl));
}

EulerLedger euler_ledger(const WeierstrassModel& W, int max_ext_degree) {
    if (is_quasi_elliptic(W))
        throw QuasiEllipticError("euler_ledger: model is quasi-elliptic (a1 = a3 = 0)");
    UniPoly Delta = discriminant(W);
    if (Delta.is_zero())
        throw std::invalid_argument("euler_ledger: discriminant vanishes identically");
    EulerLedger led;
    for (auto& [pi, mult] : factorize(Delta)) {
        (void)mult;
        Place p = Place::finite(pi);
        FiberReport rep = tate_fiber(W, p, max_ext_degree);
        led.total += static_cast<long long>(p.degree()) * (rep.e_v + rep.delta_v);
        led.places.push_back(std::move(rep));
    }
    if (Delta.degree() < 24) {
        Place inf = Place::infinity(W.tower(), W.level());
        FiberReport rep = tate_fiber(W, inf, max_ext_degree);
        if (rep.type.family != KodairaFamily::In || rep.type.n != 0) {
            led.total += rep.e_v + rep.delta_v;
            led.places.push_back(std::move(rep));
        }
    }
    return led;
}

namespace {

bool cor12_member(const KodairaType& t) {
    switch (t.family) {
        case KodairaFamily::In:
            return t.n > 0 && t.n % 2 == 0;
        case KodairaFamily::InStar:
            return t.n % 2 == 0 || t.n == 1;
        case KodairaFamily::IVStar:
        case KodairaFamily::IIIStar:
            return true;
        default:
            return false;
    }
}

}  // namespace

DisjointSum max_disjoint_sum(const std::vector<FiberReport>& reports) {
    DisjointSum out;
    for (auto& r : reports) out.sum += r.place.degree() * r.N_v;
    out.bound_ok = out.sum <= 12;
    out.cor12_ok = true;
    if (out.sum == 12) {
        for (auto& r : reports) {
            FiberTableRow row = fiber_table(r.type);
            if (!cor12_member(r.type) || r.delta_v != row.delta_min) {
                out.cor12_ok = false;
                break;
            }
        }
    }
    return out;
}

WeierstrassModel normal_form_Istar(int n, const UniPoly& a2p, const UniPoly& a3p,
                                   const UniPoly& a4p, const UniPoly& a6p) {
    if (n < 0) throw std::invalid_argument("normal_form_Istar: n >= 0");
    if (a2p.is_zero() || a2p.valuation() != 0 || a4p.is_zero() || a4p.valuation() != 0)
        throw std::invalid_argument("normal_form_Istar: t must not divide a2' a4'");
    const FieldTower& T = a2p.tower();
    int lvl = a2p.level();
    return WeierstrassModel::make(UniPoly::monomial(T, lvl, 2), a2p.shift_up(1),
                                  a3p.shift_up(n + 2), a4p.shift_up(n + 2), a6p.shift_up(2 * n + 4));
}

SquareDiscAssignment square_disc_constraints_Istar0(UniPoly a2p, UniPoly a3p, UniPoly a4p,
                                                    UniPoly a6p) {
    SquareDiscAssignment out;
    if (a3p.is_zero() || a3p.valuation() != 0)
        throw std::invalid_argument(
            "square_disc_constraints_Istar0: need t not dividing a3' (minimal wild ramification)");
    const FieldTower& T = a3p.tower();
    int lvl = std::lcm(std::lcm(a2p.level(), a3p.level()), std::lcm(a4p.level(), a6p.level()));
    a2p = a2p.lift(lvl);
    a3p = a3p.lift(lvl);
    a4p = a4p.lift(lvl);
    a6p = a6p.lift(lvl);
    FieldElem a30 = a3p.coeff(0), a31 = a3p.coeff(1), a33 = a3p.coeff(3);
    // t^13 coefficient of Delta: a2'_0 = a3'_1
    a2p.set_coeff(0, a31);
    out.notes.push_back("a2'_0 = a3'_1");
    // t^15 coefficient: a4'_1 = (a2'_2 a3'_0^2 + a3'_0^2 a3'_3 + a3'_1 a4'_0) / a3'_0
    FieldElem a22 = a2p.coeff(2), a40 = a4p.coeff(0);
    a4p.set_coeff(1, (a22 * a30 * a30 + a30 * a30 * a33 + a31 * a40) * a30.inv());
    out.notes.push_back("a4'_1 = (a2'_2 a3'_0^2 + a3'_0^2 a3'_3 + a3'_1 a4'_0) / a3'_0");
    // odd coefficients of a6' from t^17 ... t^23: with
    // M0 = a3'^3 + t a2' a3'^2 + t^2 a3' a4', the odd part of M0 + t^4 a6'
    // must vanish
    UniPoly tpoly = UniPoly::var(T, lvl);
    UniPoly M0 = a3p * a3p * a3p + tpoly * a2p * (a3p * a3p) + tpoly * tpoly * a3p * a4p;
    for (int j : {1, 3, 5, 7}) a6p.set_coeff(j, M0.coeff(j + 4));
    out.notes.push_back("odd coefficients of a6' determined from t^17..t^23");
    out.a2p = a2p;
    out.a3p = a3p;
    out.a4p = a4p;
    out.a6p = a6p;
    out.consistent = true;
    return out;
}

std::vector<std::string> quasi_elliptic_types() {
    return {"II", "III", "I_2n* (n >= 0)", "III*", "II*"};
}

bool quasi_elliptic_type_possible(const KodairaType& t) {
    switch (t.family) {
        case KodairaFamily::II:
        case KodairaFamily::III:
        case KodairaFamily::IIIStar:
        case KodairaFamily::IIStar:
            return true;
        case KodairaFamily::InStar:
            return t.n >= 0 && t.n % 2 == 0;
        default:
            return false;
    }
}

bool quasi_elliptic_type_reduced(const KodairaType& t) {
    return t.family == KodairaFamily::II || t.family == KodairaFamily::III;
}

WeierstrassModel transform_model(const WeierstrassModel& W, const FieldElem& u, const UniPoly& r,
                                 const UniPoly& s, const UniPoly& w) {
    if (u.is_zero()) throw std::invalid_argument("transform_model: u must be a unit");
    FieldElem ui = u.inv();
    UniPoly a1 = W.a1;
    UniPoly a2 = W.a2 + s * W.a1 + r + s * s;
    UniPoly a3 = W.a3 + r * W.a1;
    UniPoly a4 = W.a4 + s * W.a3 + (w + r * s) * W.a1 + r * r;
    UniPoly a6 = W.a6 + r * W.a4 + r * r * W.a2 + r * r * r + w * W.a3 + w * w + r * w * W.a1;
    return WeierstrassModel::make(a1.scale(ui), a2.scale(ui.pow(2)), a3.scale(ui.pow(3)),
                                  a4.scale(ui.pow(4)), a6.scale(ui.pow(6)));
}

}  // namespace qc2
