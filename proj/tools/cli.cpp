// Command-line front end: parse surface / Weierstrass JSON, dispatch the
// analyses, emit machine-readable reports (JSON is the source of truth) or
// derived text summaries.
//
// Exit codes: 0 success / verification passed; 1 malformed input or unknown
// family; 2 non-normal surface or quasi-elliptic model; 3 certification or
// verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qc2/json_io.hpp"
#include "qc2/prng.hpp"

using namespace qc2;

namespace {

int read_threads_cap() {
    // Caps internal parallelism; the current pipelines are sequential, so any
    // positive value is honored as-is.
    const char* env = std::getenv("CHAR2_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) {
        std::cerr << "warning: ignoring invalid CHAR2_THREADS\n";
        return 1;
    }
    return v;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text view derived from the JSON
    std::function<void(const Json&, int)> walk = [&](const Json& v, int indent) {
        std::string pad(indent, ' ');
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (it.value().is_object() || it.value().is_array()) {
                    std::cout << pad << it.key() << ":\n";
                    walk(it.value(), indent + 2);
                } else {
                    std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
                }
            }
        } else if (v.is_array()) {
            int i = 0;
            for (auto& e : v) {
                if (e.is_object() || e.is_array()) {
                    std::cout << pad << "- [" << i << "]\n";
                    walk(e, indent + 2);
                } else {
                    std::cout << pad << "- " << e.dump() << "\n";
                }
                ++i;
            }
        } else {
            std::cout << pad << v.dump() << "\n";
        }
    };
    walk(j, 0);
}

LatticeBasis lattice_from_report(const SingularLocusReport& rep) {
    std::vector<AdeType> ade;
    for (auto& r : rep.points) {
        if (r.kind != SingKind::Node && r.kind != SingKind::Biplanar) continue;
        if (!r.an_index) continue;
        for (int k = 0; k < r.ext_degree; ++k) ade.push_back(AdeType{AdeKind::A, *r.an_index});
    }
    return LatticeBasis::quartic_basis(ade);
}

int cmd_analyze(const std::string& input, std::uint64_t seed, int max_ext, int cap,
                const std::string& format, bool with_lattice) {
    Json in;
    QuarticSurface X = [&] {
        try {
            in = load_json(input);
            return surface_from_json(in);
        } catch (const NonNormalError&) {
            throw;
        } catch (const std::exception& e) {
            std::cerr << "error: malformed input: " << e.what() << "\n";
            std::exit(1);
        }
    }();
    FindOptions opt;
    opt.seed = seed;
    opt.max_ext_degree = max_ext;
    opt.colength_cap = cap;
    Json out;
    try {
        auto rep = find_singular_points(X, opt);
        out["report"] = locus_report_to_json(rep);
        if (!rep.complete) {
            emit(out, format);
            std::cerr << "error: census incomplete at extension bound " << max_ext << "\n";
            return 3;
        }
        auto led = degree_ledger(rep);
        out["degree_ledger"] = degree_ledger_to_json(led);
        auto kernel = dual_plane_kernel(X);
        out["kernel_dim"] = kernel.size();
        if (auto g = gauss_degree_if_dual_plane(led, static_cast<int>(kernel.size())))
            out["gauss_degree_if_dual_plane"] = *g;
        std::vector<ProjPoint> pts = geometric_points(rep);
        out["configuration"] = configuration_to_json(configuration_report(pts));
        if (with_lattice) out["lattice"] = lattice_to_json(lattice_from_report(rep));
    } catch (const NonNormalError& e) {
        std::cerr << "error: non-normal surface: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "error: certification failure: " << e.what() << "\n";
        return 3;
    }
    emit(out, format);
    return 0;
}

int cmd_family(const std::string& name, int m, std::uint64_t seed, const std::string& lambda_hex,
               int max_ext, const std::string& format) {
    if (name != "a3" && name != "special" && name != "insep" && name != "dualplane") {
        std::cerr << "error: unknown family '" << name << "'\n";
        return 1;
    }
    const FieldTower& T = FieldTower::make(m);
    PlaneCurve B = seeded_general_quartic(T, seed);
    FindOptions opt;
    opt.seed = seed;
    opt.max_ext_degree = max_ext;
    Json out;
    bool ok = false;
    try {
        if (name == "a3") {
            QuarticSurface X = family_a3(B);
            auto v = verify_a3(X, B, opt);
            out["surface"] = surface_to_json(X);
            out["verification"] = verify_to_json(v);
            ok = v.ok;
        } else if (name == "special") {
            QuarticSurface X = family_special(B);
            auto v = verify_special(X, B, opt);
            out["surface"] = surface_to_json(X);
            out["verification"] = verify_to_json(v);
            ok = v.ok;
        } else if (name == "insep") {
            QuarticSurface X = family_insep(B);
            auto v = verify_insep(X, B, opt);
            out["surface"] = surface_to_json(X);
            out["verification"] = insep_report_to_json(v);
            ok = v.ok;
        } else {
            FieldElem lambda = lambda_hex.empty() ? T.zero() : T.from_hex(lambda_hex, 1);
            QuarticSurface X = family_dual_plane(lambda, B);
            auto v = verify_dual_plane(X, B, opt);
            out["surface"] = surface_to_json(X);
            out["verification"] = verify_to_json(v);
            out["excess_at_Pprime"] = dual_plane_excess(lambda, B);
            ok = v.ok;
        }
    } catch (const NonNormalError& e) {
        std::cerr << "error: non-normal surface: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "error: certification failure: " << e.what() << "\n";
        return 3;
    }
    emit(out, format);
    if (!ok) {
        std::cerr << "error: family verification failed\n";
        return 3;
    }
    return 0;
}

int cmd_fibration(const std::string& input, int max_ext, const std::string& format) {
    Json in;
    WeierstrassModel W = [&] {
        try {
            in = load_json(input);
            return weierstrass_from_json(in);
        } catch (const std::exception& e) {
            std::cerr << "error: malformed input: " << e.what() << "\n";
            std::exit(1);
        }
    }();
    Json out;
    if (is_quasi_elliptic(W)) {
        out["quasi_elliptic"] = true;
        out["possible_fiber_types"] = quasi_elliptic_types();
        emit(out, format);
        return 2;
    }
    try {
        UniPoly Delta = discriminant(W);
        if (Delta.is_zero()) {
            std::cerr << "error: discriminant vanishes but the model is not quasi-elliptic\n";
            return 1;
        }
        auto led = euler_ledger(W, max_ext);
        out["quasi_elliptic"] = false;
        out["square_discriminant"] = is_square_poly(Delta);
        out["ledger"] = euler_ledger_to_json(led);
        // plain-text fiber census is derived from the same JSON
        emit(out, format);
        if (format == "text") {
            std::cout << "fiber census:\n";
            for (auto& f : led.places)
                std::cout << "  " << f.type.name() << "  deg " << f.place.degree() << "  v(D) "
                          << f.v_delta << "  delta " << f.delta_v << "  N " << f.N_v << "\n";
        }
    } catch (const QuasiEllipticError&) {
        out["quasi_elliptic"] = true;
        out["possible_fiber_types"] = quasi_elliptic_types();
        emit(out, format);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic-2 quartic surface and fibration analysis"};
    app.require_subcommand(1);
    (void)read_threads_cap();

    std::string input, format = "json", family_name, lambda_hex;
    std::uint64_t seed = 0;
    int m = 3, max_ext = 3, cap = 40;
    bool with_lattice = false;

    auto* analyze = app.add_subcommand("analyze", "singular locus, degree ledger, configuration");
    analyze->add_option("input", input, "quartic surface JSON file")->required();
    analyze->add_option("--seed", seed, "seed for randomized choices");
    analyze->add_option("--max-ext", max_ext, "extension degree bound");
    analyze->add_option("--cap", cap, "colength stabilization cap");
    analyze->add_option("--format", format, "json or text");
    analyze->add_flag("--lattice", with_lattice, "emit the A_n Picard sublattice");

    auto* family = app.add_subcommand("family", "build and verify a named family");
    family->add_option("name", family_name, "a3 | special | insep | dualplane")->required();
    family->add_option("--m", m, "base field exponent");
    family->add_option("--seed", seed, "seed for the square part of B");
    family->add_option("--lambda", lambda_hex, "lambda (hex) for dualplane");
    family->add_option("--max-ext", max_ext, "extension degree bound");
    family->add_option("--format", format, "json or text");

    auto* fibration = app.add_subcommand("fibration", "Tate fiber census and Euler ledger");
    fibration->add_option("input", input, "Weierstrass JSON file")->required();
    fibration->add_option("--max-ext", max_ext, "extension degree bound");
    fibration->add_option("--format", format, "json or text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(input, seed, max_ext, cap, format, with_lattice);
        if (app.got_subcommand(family))
            return cmd_family(family_name, m, seed, lambda_hex, max_ext, format);
        if (app.got_subcommand(fibration)) return cmd_fibration(input, max_ext, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
