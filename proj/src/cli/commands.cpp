#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "padorb/arc.hpp"
#include "padorb/bounds.hpp"
#include "padorb/cli.hpp"

namespace padorb::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json residue_point_json(const ResiduePoint& x) {
    ordered_json j = ordered_json::array();
    for (auto c : x) j.push_back(c);
    return j;
}

ordered_json scalar_json(const PadicScalar& x) {
    if (x.params().e == 1) return x.coefficient(0);
    ordered_json j = ordered_json::array();
    for (int i = 0; i < x.params().e; ++i) j.push_back(x.coefficient(i));
    return j;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    int p = 0;
    int e = 1;
    int g = 1;
    std::string q;
    std::string points;
    bool csv = false;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    BoundInput in;
    in.p = a.p;
    in.e = a.e;
    in.g = a.g;
    in.q = a.q.empty() ? mpz_class(a.p) : mpz_class(a.q);
    if (a.points.empty())
        mpz_pow_ui(in.n_points.get_mpz_t(), in.q.get_mpz_t(), static_cast<unsigned long>(std::max(a.g, 0)));
    else
        in.n_points = mpz_class(a.points);
    const BoundReport r = bound_report(in);
    if (a.csv) {
        out << "p,e,g,q,points,r,m,t,gl,orbit_bound,torsion_bound\n";
        out << in.p << ',' << in.e << ',' << in.g << ',' << in.q << ',' << in.n_points << ',' << r.r << ',' << r.m
            << ',' << r.t << ',' << r.gl << ',' << r.orbit_bound << ',' << r.torsion_bound << '\n';
        return kOk;
    }
    // Written by hand: the bounds are exact integers of any size.
    out << "{\"p\": " << in.p << ", \"e\": " << in.e << ", \"g\": " << in.g << ", \"q\": " << in.q
        << ", \"points\": " << in.n_points << ", \"r\": " << r.r << ", \"m\": " << r.m << ", \"t\": " << r.t
        << ", \"gl\": " << r.gl << ", \"orbit_bound\": " << r.orbit_bound
        << ", \"torsion_bound\": " << r.torsion_bound << "}\n";
    return kOk;
}

// ---------------------------------------------------------------------------

int report_non_etale(const EtaleCertificate& cert, std::ostream& err) {
    ordered_json j;
    j["error"] = "map is not etale";
    j["p"] = cert.p;
    j["witness"] = residue_point_json(*cert.witness);
    err << j.dump() << '\n';
    return kVerificationFailed;
}

int cmd_etale(const std::string& map_path, int p, std::ostream& out) {
    const PolySelfMap map = load_map(map_path);
    const EtaleCertificate cert = p == 0 ? check_etale(map) : check_etale(map, p);
    ordered_json j;
    j["etale"] = cert.etale;
    j["p"] = cert.p;
    j["witness"] = cert.witness ? residue_point_json(*cert.witness) : ordered_json(nullptr);
    out << j.dump() << '\n';
    return cert.etale ? kOk : kVerificationFailed;
}

int cmd_orbit(const std::string& map_path, const std::string& point, int k, std::ostream& out,
              std::ostream& err) {
    const PolySelfMap map = load_map(map_path);
    const IntPoint x = parse_point(point);
    if (x.size() != static_cast<std::size_t>(map.dimension()))
        throw ParameterError("point has " + std::to_string(x.size()) + " coordinates, map needs " +
                             std::to_string(map.dimension()));
    const EtaleCertificate cert = check_etale(map);
    if (!cert.etale) return report_non_etale(cert, err);
    const OrbitReport rep = orbit_of_point(map, x, k > 0 ? k : map.k());
    ordered_json j;
    j["tail"] = rep.tail;
    j["cycle"] = rep.cycle;
    j["modulus"] = rep.modulus;
    j["start"] = residue_point_json(rep.start);
    out << j.dump() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct ArcArgs {
    std::string map;
    std::string center;
    std::string base;
    int N = 6;
    int J = 0;
    std::uint64_t stride = 0;
    std::string vanish;
};

int cmd_arc(const ArcArgs& a, std::ostream& out, std::ostream& err) {
    const PolySelfMap map = load_map(a.map);
    const int g = map.dimension();
    const IntPoint center = parse_point(a.center);
    if (center.size() != static_cast<std::size_t>(g)) throw ParameterError("center has the wrong dimension");
    const EtaleCertificate cert = check_etale(map);
    if (!cert.etale) return report_non_etale(cert, err);

    const SeriesTuple G = disk_linearization(map, center, a.N);
    const RingParams& params = G.params();
    PadicVector beta;
    if (a.base.empty()) {
        beta.assign(static_cast<std::size_t>(g), PadicScalar::zero(params));
    } else {
        for (const auto& c : parse_point(a.base)) beta.push_back(to_scalar(c, params));
        if (beta.size() != static_cast<std::size_t>(g)) throw ParameterError("base point has the wrong dimension");
    }
    std::uint64_t stride = a.stride;
    if (stride == 0) {
        const mpz_class m = iteration_count(params.p, params.e, g, params.p);
        if (!m.fits_ulong_p()) throw ParameterError("default stride exceeds 64 bits");
        stride = m.get_ui();
    }
    const int J = a.J > 0 ? a.J : default_mahler_length(params);
    const MahlerArc arc = mahler_coefficients(G, beta, J, stride);

    ordered_json j;
    j["p"] = params.p;
    j["N"] = params.N;
    j["stride"] = arc.stride;
    j["J"] = arc.length();
    j["vanishing_index"] = arc.vanishing_index;
    j["coefficients"] = ordered_json::array();
    j["valuations"] = ordered_json::array();
    for (const auto& c : arc.coefficients) {
        ordered_json vec = ordered_json::array();
        int v = params.precision();
        for (const auto& x : c) {
            vec.push_back(scalar_json(x));
            v = std::min(v, x.valuation());
        }
        j["coefficients"].push_back(vec);
        j["valuations"].push_back(v);
    }
    if (!a.vanish.empty()) {
        json poly;
        try {
            poly = json::parse(a.vanish);
        } catch (const json::exception& ex) {
            throw ParameterError(std::string("malformed --vanish polynomial: ") + ex.what());
        }
        const bool vanishes = vanishing_propagation(parse_polynomial(poly, g), arc);
        j["vanishes"] = vanishes;
    }
    out << j.dump() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct SubvarietyArgs {
    std::string map;
    std::string generators;
    std::string sample;
    int k = 0;
    std::uint64_t n_max = 1000;
};

int cmd_subvariety(const SubvarietyArgs& a, std::ostream& out, std::ostream& err) {
    const PolySelfMap map = load_map(a.map);
    if (!map.inverse()) throw ParameterError("subvariety-period needs a map file with an \"inverse\"");
    const int g = map.dimension();
    json gens;
    try {
        gens = json::parse(a.generators);
    } catch (const json::exception& ex) {
        throw ParameterError(std::string("malformed --generators: ") + ex.what());
    }
    if (!gens.is_array()) throw ParameterError("--generators must be a JSON list of polynomials");
    std::vector<IntPoly> polys;
    for (const auto& f : gens) polys.push_back(parse_polynomial(f, g));
    IntPoint sample = parse_point(a.sample);
    std::optional<SubvarietyModel> Y;
    try {
        Y.emplace(std::move(polys), std::move(sample));
    } catch (const DomainError& ex) {
        throw ParameterError(ex.what());
    }
    const EtaleCertificate cert = check_etale(map);
    if (!cert.etale) return report_non_etale(cert, err);
    const SubvarietyOrbitReport rep = subvariety_orbit(map, *Y, a.k > 0 ? a.k : map.k(), a.n_max);
    ordered_json j;
    j["detected"] = rep.detected;
    j["tail"] = rep.detected ? ordered_json(rep.tail) : ordered_json(nullptr);
    j["cycle"] = rep.detected ? ordered_json(rep.cycle) : ordered_json(nullptr);
    j["modulus"] = rep.modulus;
    j["n_max"] = rep.n_max;
    j["zero_set_size"] = rep.zero_set_size;
    out << j.dump() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

int cmd_campaign(const CampaignConfig& cfg, std::ostream& out) {
    const CampaignResult res = run_campaign(cfg);
    if (cfg.output.empty()) {
        out << res.report;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw ParameterError("cannot write report to " + cfg.output);
        f << res.report;
        out << "{\"passed\": " << res.passed << ", \"failed\": " << res.failed << ", \"report\": "
            << json(cfg.output).dump() << "}\n";
    }
    return res.failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic orbit-length bounds and verification", "padorb"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto* sub_bounds = app.add_subcommand("bounds", "orbit and torsion bounds for (p, e, g, q, points)");
    sub_bounds->add_option("--p", bounds.p, "odd prime p")->required();
    sub_bounds->add_option("--e", bounds.e, "ramification index");
    sub_bounds->add_option("--g", bounds.g, "dimension");
    sub_bounds->add_option("--q", bounds.q, "residue field order (default p)");
    sub_bounds->add_option("--points", bounds.points, "special fiber point count (default q^g)");
    sub_bounds->add_flag("--csv", bounds.csv, "emit a CSV row instead of JSON");

    std::string map_path;
    std::string point;
    int k = 0;
    auto* sub_orbit = app.add_subcommand("orbit", "tail and cycle of a point mod p^k");
    sub_orbit->add_option("--map", map_path, "map file")->required();
    sub_orbit->add_option("--point", point, "comma-separated integer point")->required();
    sub_orbit->add_option("--k", k, "exponent of the modulus (default from the map file)");

    int etale_p = 0;
    auto* sub_etale = app.add_subcommand("etale-check", "certify a unit Jacobian on all of F_p^g");
    sub_etale->add_option("--map", map_path, "map file")->required();
    sub_etale->add_option("--p", etale_p, "prime (default from the map file)");

    CampaignConfig campaign;
    auto* sub_campaign = app.add_subcommand("verify-prop21", "seeded campaign checking F^m = id mod pi^t");
    sub_campaign->add_option("--seed", campaign.seed, "random seed");
    sub_campaign->add_option("--cases", campaign.cases, "number of cases");
    sub_campaign->add_option("--p", campaign.p_list, "primes")->delimiter(',');
    sub_campaign->add_option("--e", campaign.e_list, "ramification indices")->delimiter(',');
    sub_campaign->add_option("--g", campaign.g_list, "dimensions")->delimiter(',');
    sub_campaign->add_option("--N", campaign.N, "precision in powers of p");
    sub_campaign->add_option("--D", campaign.D, "degree cap (default eN)");
    sub_campaign->add_flag("--arc-check", campaign.arc_check, "also compare Mahler arcs with direct iteration");
    sub_campaign->add_option("--output", campaign.output, "report path (default standard output)");

    ArcArgs arc;
    auto* sub_arc = app.add_subcommand("arc", "Mahler coefficients of an orbit in a residue disk");
    sub_arc->add_option("--map", arc.map, "map file")->required();
    sub_arc->add_option("--center", arc.center, "integer point with fixed residue")->required();
    sub_arc->add_option("--base", arc.base, "disk coordinate of the base point (default 0)");
    sub_arc->add_option("--N", arc.N, "precision");
    sub_arc->add_option("--J", arc.J, "number of Mahler coefficients (default (p-1)N+8)");
    sub_arc->add_option("--stride", arc.stride, "iterate used for the arc (default p * #GL_g(F_p))");
    sub_arc->add_option("--vanish", arc.vanish, "polynomial (JSON terms) to test along the arc");

    SubvarietyArgs subv;
    auto* sub_subv = app.add_subcommand("subvariety-period", "period of a subvariety's zero set mod p^k");
    sub_subv->add_option("--map", subv.map, "map file with inverse")->required();
    sub_subv->add_option("--generators", subv.generators, "JSON list of polynomials")->required();
    sub_subv->add_option("--sample", subv.sample, "integer point on the subvariety")->required();
    sub_subv->add_option("--k", subv.k, "exponent of the modulus (default from the map file)");
    sub_subv->add_option("--n-max", subv.n_max, "largest iterate examined");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (sub_bounds->parsed()) return cmd_bounds(bounds, out);
        if (sub_orbit->parsed()) return cmd_orbit(map_path, point, k, out, err);
        if (sub_etale->parsed()) return cmd_etale(map_path, etale_p, out);
        if (sub_campaign->parsed()) return cmd_campaign(campaign, out);
        if (sub_arc->parsed()) return cmd_arc(arc, out, err);
        if (sub_subv->parsed()) return cmd_subvariety(subv, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const Error& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kInvalidInput;
}

}  // namespace padorb::cli
