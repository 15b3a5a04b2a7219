#include "schurpoly/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurpoly/arith.hpp"
#include "schurpoly/family.hpp"
#include "schurpoly/lemmas.hpp"
#include "schurpoly/newton.hpp"
#include "schurpoly/poly.hpp"
#include "schurpoly/selftest.hpp"
#include "schurpoly/sharpness.hpp"

namespace schurpoly::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kUsageError = 2;
constexpr int kScanFailed = 3;
constexpr int kUndecided = 4;

unsigned env_threads() {
    const char* v = std::getenv("SCHURPOLY_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (end == v || t < 0) return 0;
    return static_cast<unsigned>(t);
}

json poly_json(const poly::IntPolynomial& f) { return f.to_string(); }

json aux_json(const std::vector<std::pair<std::string, Int>>& aux) {
    json out = json::object();
    for (const auto& [name, value] : aux) out[name] = to_decimal(value);
    return out;
}

json polygon_json(const newton::NewtonPolygon& np) {
    json out;
    out["prime"] = to_decimal(np.prime);
    out["spots"] = json::array();
    for (const auto& s : np.spots) out["spots"].push_back({s.x, s.y});
    out["vertices"] = json::array();
    for (const auto& s : np.vertices) out["vertices"].push_back({s.x, s.y});
    out["edges"] = json::array();
    for (const auto& e : np.edges)
        out["edges"].push_back({{"slope", e.slope.str()},
                                {"from", {e.from.x, e.from.y}},
                                {"to", {e.to.x, e.to.y}}});
    return out;
}

json verdict_json(const family::IrreducibilityVerdict& v) {
    json out;
    out["status"] = v.status == family::VerdictStatus::certified_irreducible
                        ? "certified-irreducible"
                        : "undecided";
    out["certificates"] = json::array();
    for (const auto& c : v.certificates)
        out["certificates"].push_back({{"k", c.k}, {"p", to_decimal(c.p)}, {"r", c.r}});
    out["undecided"] = v.undecided;
    return out;
}

json sharpness_json(unsigned long n, const sharpness::SharpnessResult& res) {
    json out;
    out["n"] = n;
    out["a"] = json::array();
    for (const Int& a : res.coefficients.a) out["a"].push_back(to_decimal(a));
    out["factor"] = poly_json(res.factor);
    out["cofactor"] = poly_json(res.cofactor);
    out["aux"] = aux_json(res.aux);
    return out;
}

family::SchurCoefficients parse_coefficients(unsigned long n, const std::string& text) {
    family::SchurCoefficients sc;
    sc.n = n;
    std::size_t tokens = text.empty() ? 0 : 1;
    for (char ch : text) tokens += ch == ',';
    if (tokens != n + 1) throw std::domain_error("certify: expected n+1 coefficients a0..aN");
    sc.a = poly::IntPolynomial::from_string(text).coeffs();
    sc.a.resize(n + 1);  // from_string drops trailing zeros; a_n = 0 fails validate
    sc.validate();
    return sc;
}

int cmd_params(unsigned long n, bool as_json, std::ostream& out) {
    family::SchurParams p = family::schur_params(n);
    if (as_json) {
        json j;
        j["n"] = p.n;
        j["k_prime"] = to_decimal(p.k_prime);
        j["u"] = p.u;
        j["k_double_prime"] = to_decimal(p.k_double_prime);
        j["M"] = to_decimal(p.M);
        out << j.dump() << "\n";
    } else {
        out << "n = " << p.n << "\nk' = " << to_decimal(p.k_prime) << "  (2n+1 = k'*3^" << p.u
            << ")\nk'' = " << to_decimal(p.k_double_prime) << "\nM = " << to_decimal(p.M)
            << "\n";
    }
    return kOk;
}

int cmd_certify(unsigned long n, const std::string& coeffs, long k, bool as_json,
                std::ostream& out) {
    family::SchurCoefficients sc = parse_coefficients(n, coeffs);
    if (k >= 0) {
        auto cert = family::lemma31_certificate(n, static_cast<unsigned long>(k), sc.a[n]);
        if (as_json) {
            json j;
            j["n"] = n;
            j["k"] = k;
            if (cert) {
                j["certificate"] = {{"k", cert->k}, {"p", to_decimal(cert->p)}, {"r", cert->r}};
                j["excludes"] = {cert->k, cert->k + 1};
            } else {
                j["certificate"] = nullptr;
            }
            out << j.dump() << "\n";
        } else if (cert) {
            out << "certificate: p = " << to_decimal(cert->p) << ", r = " << cert->r
                << " excludes factor degrees {" << cert->k << ", " << cert->k + 1 << "}\n";
        } else {
            out << "no certificate for k = " << k << "\n";
        }
        return cert ? kOk : kUndecided;
    }
    auto v = family::verdict(sc);
    if (as_json) {
        out << verdict_json(v).dump() << "\n";
    } else {
        out << (v.status == family::VerdictStatus::certified_irreducible
                    ? "certified-irreducible"
                    : "undecided")
            << "\n";
        for (const auto& c : v.certificates)
            out << "  k = " << c.k << ": p = " << to_decimal(c.p) << ", r = " << c.r
                << " excludes {" << c.k << ", " << c.k + 1 << "}\n";
        if (!v.undecided.empty()) {
            out << "  undecided degrees:";
            for (unsigned long d : v.undecided) out << " " << d;
            out << "\n";
        }
    }
    return v.status == family::VerdictStatus::certified_irreducible ? kOk : kUndecided;
}

int cmd_np(const std::string& poly_text, const std::string& prime_text, bool as_json,
           std::ostream& out) {
    poly::IntPolynomial w = poly::IntPolynomial::from_string(poly_text);
    Int p;
    if (mpz_set_str(p.get_mpz_t(), prime_text.c_str(), 10) != 0)
        throw std::domain_error("np: bad prime");
    if (!arith::is_prime(p)) throw std::domain_error("np: --prime must be prime");
    auto np = newton::newton_polygon(w, p);
    if (as_json) {
        out << polygon_json(np).dump() << "\n";
    } else {
        out << "prime " << to_decimal(np.prime) << "\nspots:";
        for (const auto& s : np.spots) out << " (" << s.x << "," << s.y << ")";
        out << "\nvertices:";
        for (const auto& s : np.vertices) out << " (" << s.x << "," << s.y << ")";
        out << "\nedges:";
        for (const auto& e : np.edges)
            out << " [(" << e.from.x << "," << e.from.y << ")->(" << e.to.x << "," << e.to.y
                << ") slope " << e.slope.str() << "]";
        out << "\n";
    }
    return kOk;
}

int cmd_scan(unsigned long k, unsigned long from, unsigned long to, bool as_json,
             std::ostream& out) {
    bool all_hold = true;
    lemmas::scan(
        k, from, to,
        [&](const lemmas::ScanRow& row) {
            all_hold = all_hold && row.holds;
            if (as_json) {
                json j;
                j["n"] = row.n;
                j["k"] = row.k;
                j["v"] = to_decimal(row.v);
                j["bound"] = row.bound.get_ui();
                j["holds"] = row.holds;
                out << j.dump() << "\n";
            } else {
                out << "n=" << row.n << " v=" << to_decimal(row.v)
                    << " bound=" << to_decimal(row.bound) << (row.holds ? " holds" : " FAILS")
                    << "\n";
            }
        },
        env_threads());
    return all_hold ? kOk : kScanFailed;
}

int cmd_sharp_quad(unsigned long n, const std::string& sign, bool as_json, std::ostream& out) {
    sharpness::QuadraticTarget target;
    if (sign == "minus")
        target = sharpness::QuadraticTarget::x2_minus_3;
    else if (sign == "plus")
        target = sharpness::QuadraticTarget::x2_plus_3;
    else
        throw std::domain_error("sharp-quad: --sign must be plus or minus");
    auto res = sharpness::construct_quadratic(n, target);
    if (as_json) {
        out << sharpness_json(n, res).dump() << "\n";
    } else {
        out << "a =";
        for (const Int& a : res.coefficients.a) out << " " << to_decimal(a);
        out << "\nfactor = " << res.factor.to_string()
            << "\ncofactor = " << res.cofactor.to_string() << "\n";
    }
    return kOk;
}

int cmd_sharp_quartic(unsigned long n, bool as_json, std::ostream& out) {
    auto res = sharpness::construct_quartic(n);
    if (as_json) {
        out << sharpness_json(n, res).dump() << "\n";
    } else {
        out << "a =";
        for (const Int& a : res.coefficients.a) out << " " << to_decimal(a);
        out << "\nfactor = " << res.factor.to_string()
            << "\ncofactor = " << res.cofactor.to_string() << "\n";
    }
    return kOk;
}

int cmd_bc(unsigned long jmax, bool as_json, std::ostream& out) {
    auto bc = sharpness::bc_sequence(jmax);
    if (as_json) {
        json rows = json::array();
        for (const auto& p : bc)
            rows.push_back({{"j", p.j}, {"b", to_decimal(p.b)}, {"c", to_decimal(p.c)}});
        out << rows.dump() << "\n";
    } else {
        for (const auto& p : bc)
            out << p.j << " " << to_decimal(p.b) << " " << to_decimal(p.c) << "\n";
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton-polygon irreducibility certificates and sharpness constructions "
                 "for the even Schur family f(x) = sum a_j x^(2j)/u_(2j+2)"};
    app.require_subcommand(1);
    bool as_json = false;
    auto with_json = [&as_json](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit JSON instead of text");
        return sub;
    };

    unsigned long params_n = 0;
    auto* params = with_json(app.add_subcommand("params", "k', k'', M for a given n"));
    params->add_option("n", params_n, "family index n >= 1")->required();

    unsigned long certify_n = 0;
    std::string certify_a;
    long certify_k = -1;
    auto* certify = with_json(
        app.add_subcommand("certify", "degree-exclusion certificates for a0..aN"));
    certify->add_option("--n", certify_n, "family index n >= 1")->required();
    certify->add_option("--a", certify_a, "coefficients a0,...,aN (|a0| = 1)")->required();
    certify->add_option("--k", certify_k, "single odd window k (default: all)");

    std::string np_poly, np_prime;
    auto* np = with_json(app.add_subcommand("np", "Newton polygon of a polynomial"));
    np->add_option("--poly", np_poly, "coefficients c0,...,cd, constant first")->required();
    np->add_option("--prime", np_prime, "prime p")->required();

    unsigned long scan_k = 0, scan_from = 0, scan_to = 0;
    auto* scan = with_json(app.add_subcommand("scan-lemma", "v > 2n+1 scan over an n range"));
    scan->add_option("--k", scan_k, "odd window k")->required();
    scan->add_option("--from", scan_from, "first n")->required();
    scan->add_option("--to", scan_to, "last n")->required();

    unsigned long quad_n = 0;
    std::string quad_sign;
    auto* quad = with_json(
        app.add_subcommand("sharp-quad", "coefficients making x^2 -/+ 3 a factor"));
    quad->add_option("--n", quad_n, "family index n >= 2")->required();
    quad->add_option("--sign", quad_sign, "plus (x^2+3) or minus (x^2-3)")->required();

    unsigned long quartic_n = 0;
    auto* quartic = with_json(
        app.add_subcommand("sharp-quartic", "coefficients making x^4-5x^2-15 a factor"));
    quartic->add_option("--n", quartic_n, "eligible family index (k'' < k')")->required();

    unsigned long bc_jmax = 0;
    auto* bc = with_json(app.add_subcommand("bc", "b_j/c_j rows of t^j mod t^2-5t-15"));
    bc->add_option("--jmax", bc_jmax, "largest j")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (params->parsed()) return cmd_params(params_n, as_json, out);
        if (certify->parsed()) return cmd_certify(certify_n, certify_a, certify_k, as_json, out);
        if (np->parsed()) return cmd_np(np_poly, np_prime, as_json, out);
        if (scan->parsed()) return cmd_scan(scan_k, scan_from, scan_to, as_json, out);
        if (quad->parsed()) return cmd_sharp_quad(quad_n, quad_sign, as_json, out);
        if (quartic->parsed()) return cmd_sharp_quartic(quartic_n, as_json, out);
        if (bc->parsed()) return cmd_bc(bc_jmax, as_json, out);
        if (selftest_cmd->parsed())
            return selftest::run_and_report(out) == 0 ? kOk : kInternalError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    err << "error: no subcommand\n";
    return kUsageError;
}

}  // namespace schurpoly::cli
