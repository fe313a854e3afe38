#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "padorb/arc.hpp"
#include "padorb/bounds.hpp"
#include "padorb/cli.hpp"
#include "padorb/sampling.hpp"

namespace padorb::cli {

using nlohmann::ordered_json;

void CampaignConfig::validate() const {
    if (p_list.empty() || e_list.empty() || g_list.empty())
        throw ParameterError("p, e and g lists must be nonempty");
    for (int p : p_list)
        for (int e : e_list) RingParams::make(p, e, N);
    for (int g : g_list)
        if (g < 1 || g > kMaxVariables) throw ParameterError("g must lie in [1, " + std::to_string(kMaxVariables) + "]");
    for (int e : e_list)
        if (D != 0 && D < e * N) throw ParameterError("degree cap D must be at least eN for every e");
    if (D < 0 || D > 255) throw ParameterError("degree cap out of range");
}

namespace {

struct CaseOutcome {
    ordered_json record;
    bool pass = false;
};

ordered_json arc_check(Rng& rng, const SeriesTuple& F, std::uint64_t m) {
    const RingParams& params = F.params();
    PadicVector beta;
    for (int i = 0; i < F.dimension(); ++i) beta.push_back(random_scalar(rng, params));
    const int J = default_mahler_length(params);
    const MahlerArc arc = mahler_coefficients(F, beta, J, m);
    const SeriesTuple G = iterate(F, m);
    PadicVector direct = beta;
    bool agree = true;
    for (int n = 0; n <= 2 * J; ++n) {
        if (evaluate_arc(arc, static_cast<std::uint64_t>(n)) != direct) {
            agree = false;
            break;
        }
        direct = G.evaluate(direct);
    }
    ordered_json j;
    j["J"] = J;
    j["vanishing_index"] = arc.vanishing_index;
    j["agree"] = agree;
    return j;
}

CaseOutcome run_case(const CampaignConfig& cfg, std::uint64_t index) {
    Rng rng = make_rng(cfg.seed, index);
    const int p = cfg.p_list[uniform_below(rng, cfg.p_list.size())];
    const int e = cfg.e_list[uniform_below(rng, cfg.e_list.size())];
    const int g = cfg.g_list[uniform_below(rng, cfg.g_list.size())];
    const RingParams params = RingParams::make(p, e, cfg.N);
    const int D = cfg.D != 0 ? cfg.D : e * cfg.N;

    CaseOutcome out;
    auto& rec = out.record;
    rec["index"] = index;
    rec["p"] = p;
    rec["e"] = e;
    rec["g"] = g;
    rec["N"] = cfg.N;
    rec["D"] = D;
    try {
        const SeriesTuple F = random_scaled_tuple(rng, params, g, D, LinearMode::general);
        rec["terms"] = F.term_count();
        const BoundCheckReport rep = verify_mikes_bound(F);
        rec["r"] = rep.r;
        rec["m"] = rep.m;
        rec["t"] = rep.t;
        out.pass = rep.pass;
        if (cfg.arc_check && rep.pass) {
            rec["arc"] = arc_check(rng, F, rep.m);
            out.pass = rec["arc"]["agree"].get<bool>();
        }
    } catch (const Error& ex) {
        rec["error"] = ex.what();
        out.pass = false;
    }
    rec["pass"] = out.pass;
    return out;
}

unsigned thread_count(const CampaignConfig& cfg) {
    unsigned n = cfg.threads;
    if (n == 0) {
        if (const char* env = std::getenv("PADORB_THREADS")) {
            try {
                n = static_cast<unsigned>(std::stoul(env));
            } catch (const std::exception&) {
                throw ParameterError("PADORB_THREADS must be a positive integer");
            }
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
    config.validate();
    std::vector<CaseOutcome> outcomes(config.cases);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(thread_count(config), std::max<std::uint64_t>(config.cases, 1)));
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t i = next++; i < config.cases; i = next++) outcomes[i] = run_case(config, i);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    CampaignResult result;
    ordered_json report;
    report["seed"] = config.seed;
    report["cases"] = config.cases;
    report["p"] = config.p_list;
    report["e"] = config.e_list;
    report["g"] = config.g_list;
    report["N"] = config.N;
    report["D"] = config.D;
    report["arc_check"] = config.arc_check;
    report["results"] = ordered_json::array();
    for (auto& o : outcomes) {
        (o.pass ? result.passed : result.failed)++;
        report["results"].push_back(std::move(o.record));
    }
    report["summary"] = {{"total", config.cases}, {"passed", result.passed}, {"failed", result.failed}};
    result.report = report.dump(2) + "\n";
    return result;
}

}  // namespace padorb::cli
