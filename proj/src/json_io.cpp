#include "qc2/json_io.hpp"

#include <stdexcept>

namespace qc2 {

namespace {

std::uint64_t hex_to_bits(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("hex coefficient: empty");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("hex coefficient: bad digit");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = p.num_vars();
    j["deg"] = p.total_degree();
    j["field"] = Json{{"m", p.tower().m()}};
    if (p.level() != 1) j["level"] = p.level();
    Json terms = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = m;
        t["coef"] = p.tower().from_bits(c, p.level()).to_hex();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    int nvars = j.at("vars").get<int>();
    int m = j.at("field").at("m").get<int>();
    int level = j.contains("level") ? j.at("level").get<int>() : 1;
    const FieldTower& T = FieldTower::make(m);
    MultiPoly p(T, level, nvars);
    for (auto& t : j.at("terms")) {
        auto exps = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("polynomial JSON: exponent arity mismatch");
        Mono mo;
        for (int e : exps) {
            if (e < 0 || e > 255) throw std::invalid_argument("polynomial JSON: bad exponent");
            mo.push_back(static_cast<std::uint8_t>(e));
        }
        p.add_term(mo, T.from_bits(hex_to_bits(t.at("coef").get<std::string>()), level));
    }
    return p;
}

Json surface_to_json(const QuarticSurface& X) {
    Json j;
    j["kind"] = "quartic_surface";
    j["F"] = poly_to_json(X.F);
    return j;
}

QuarticSurface surface_from_json(const Json& j) {
    const Json& pj = j.contains("F") ? j.at("F") : j;
    return QuarticSurface::make(poly_from_json(pj));
}

Json weierstrass_to_json(const WeierstrassModel& W) {
    Json j;
    j["field"] = Json{{"m", W.tower().m()}};
    if (W.level() != 1) j["level"] = W.level();
    auto arr = [&](const UniPoly& p) {
        Json a = Json::array();
        for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).to_hex());
        return a;
    };
    j["a"] = Json::array({arr(W.a1), arr(W.a2), arr(W.a3), arr(W.a4), arr(W.a6)});
    return j;
}

WeierstrassModel weierstrass_from_json(const Json& j) {
    int m = j.at("field").at("m").get<int>();
    int level = j.contains("level") ? j.at("level").get<int>() : 1;
    const FieldTower& T = FieldTower::make(m);
    const Json& a = j.at("a");
    if (!a.is_array() || a.size() != 5)
        throw std::invalid_argument("weierstrass JSON: need five coefficient arrays");
    auto poly = [&](const Json& arr) {
        UniPoly p(T, level);
        int i = 0;
        for (auto& c : arr) p.set_coeff(i++, T.from_bits(hex_to_bits(c.get<std::string>()), level));
        return p;
    };
    return WeierstrassModel::make(poly(a[0]), poly(a[1]), poly(a[2]), poly(a[3]), poly(a[4]));
}

Json point_to_json(const ProjPoint& p) {
    Json j;
    j["level"] = p.level();
    Json coords = Json::array();
    for (auto& c : p.x) coords.push_back(c.to_hex());
    j["coords"] = std::move(coords);
    return j;
}

namespace {

const char* kind_name(SingKind k) {
    switch (k) {
        case SingKind::Node: return "node";
        case SingKind::Biplanar: return "biplanar";
        case SingKind::Uniplanar: return "uniplanar";
        case SingKind::TripleOrWorse: return "triple_or_worse";
    }
    return "?";
}

const char* rdp_name(RdpStatus s) {
    switch (s) {
        case RdpStatus::RDP: return "RDP";
        case RdpStatus::RDP_BY_DEFECT: return "RDP_BY_DEFECT";
        case RdpStatus::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

}  // namespace

Json locus_report_to_json(const SingularLocusReport& rep) {
    Json j;
    j["total_length"] = rep.total_length;
    j["complete"] = rep.complete;
    j["nu"] = rep.nu;
    j["b"] = rep.b;
    j["u"] = rep.u;
    j["triple_or_worse"] = rep.triple_or_worse;
    j["defect_sum"] = rep.defect_sum();
    Json pts = Json::array();
    for (auto& r : rep.points) {
        Json p;
        p["point"] = point_to_json(r.point);
        p["ext_degree"] = r.ext_degree;
        p["orbit_size"] = r.ext_degree;
        p["kind"] = kind_name(r.kind);
        if (r.an_index) p["an_index"] = *r.an_index;
        if (r.defect.infinite) {
            p["defect"] = "INFINITE";
        } else {
            p["defect"] = r.defect.value;
            p["defect_stable"] = r.defect.stable;
        }
        p["local_length"] = r.local_length;
        p["rdp_status"] = rdp_name(r.rdp_status);
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j;
}

Json degree_ledger_to_json(const DegreeLedger& led) {
    Json j;
    j["defect_sum"] = led.defect_sum;
    j["product"] = led.product;
    j["nu"] = led.nu;
    j["b"] = led.b;
    j["u"] = led.u;
    j["bound_ok"] = led.bound_ok;
    return j;
}

Json configuration_to_json(const ConfigurationReport& rep) {
    Json j;
    j["max_collinear"] = rep.max_collinear;
    j["max_coplanar"] = rep.max_coplanar;
    j["collinear_bound_ok"] = rep.collinear_bound_ok;
    j["coplanar_bound_ok"] = rep.coplanar_bound_ok;
    j["num_lines"] = rep.lines.size();
    Json pairs = Json::array();
    for (auto& [a, b] : rep.companion_pairs) pairs.push_back(Json::array({a, b}));
    j["companion_pairs"] = std::move(pairs);
    j["has_point_with_two_companions"] = rep.has_point_with_two_companions;
    return j;
}

Json strange_locus_to_json(const StrangeLocus& s) {
    Json j;
    j["finite"] = s.finite;
    j["length"] = s.length;
    j["split_certificate"] = s.split_certificate;
    j["geometric_count"] = s.geometric_count();
    Json pts = Json::array();
    for (auto& p : s.points) {
        Json e;
        e["point"] = point_to_json(p.point);
        e["multiplicity"] = p.multiplicity;
        e["ext_degree"] = p.ext_degree;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

Json verify_to_json(const VerifyResult& v) {
    Json j;
    j["ok"] = v.ok;
    j["diagnostics"] = v.diagnostics;
    j["locus"] = locus_report_to_json(v.locus);
    return j;
}

Json insep_report_to_json(const InsepReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["lengths"] = Json{{"base", r.len_base},
                        {"line", r.len_line},
                        {"hilbert_burch", r.len_hb},
                        {"residual", r.len_s}};
    j["disjoint"] = r.disjoint;
    j["node_at_center"] = r.node_at_center;
    j["diagnostics"] = r.diagnostics;
    j["locus"] = locus_report_to_json(r.locus);
    return j;
}

Json fiber_report_to_json(const FiberReport& r) {
    Json j;
    if (r.place.at_infinity) {
        j["place"] = "infinity";
    } else {
        Json coeffs = Json::array();
        for (int i = 0; i <= r.place.pi.degree(); ++i) coeffs.push_back(r.place.pi.coeff(i).to_hex());
        j["place"] = Json{{"pi", coeffs}};
    }
    j["place_degree"] = r.place.degree();
    j["type"] = r.type.name();
    j["m_v"] = r.m_v;
    j["e_v"] = r.e_v;
    j["v_delta"] = r.v_delta;
    j["delta_v"] = r.delta_v;
    j["N_v"] = r.N_v;
    if (r.minimalization_steps) j["minimalization_steps"] = r.minimalization_steps;
    return j;
}

Json euler_ledger_to_json(const EulerLedger& led) {
    Json j;
    j["total"] = led.total;
    Json fibers = Json::array();
    for (auto& r : led.places) fibers.push_back(fiber_report_to_json(r));
    j["places"] = std::move(fibers);
    auto ds = max_disjoint_sum(led.places);
    j["disjoint_sum"] = ds.sum;
    j["disjoint_bound_ok"] = ds.bound_ok;
    j["cor12_ok"] = ds.cor12_ok;
    return j;
}

Json lattice_to_json(const LatticeBasis& B) {
    Json j;
    j["labels"] = B.labels;
    j["gram"] = B.gram;
    return j;
}

}  // namespace qc2
