#pragma once

// Command-line front end.  Everything here is callable in-process so the
// test suites can drive the commands without spawning the binary.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "padorb/dynamics.hpp"

namespace padorb::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
};

/// Dispatches `padorb <command> ...`; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Map files: {"p", "k", "g", "polynomials": [[[c, [e1..eg]], ...], ...], "inverse"?}.

/// Throws ParameterError on any schema violation.
IntPoly parse_polynomial(const nlohmann::json& j, int g);
PolySelfMap parse_map(const nlohmann::json& j);
PolySelfMap load_map(const std::string& path);
nlohmann::json polynomial_to_json(const IntPoly& f);
nlohmann::json map_to_json(const PolySelfMap& map);

/// "1,-2,3" -> integer point.
IntPoint parse_point(const std::string& csv);

struct CampaignConfig {
    std::uint64_t seed = 42;
    std::uint64_t cases = 10;
    std::vector<int> p_list{3};
    std::vector<int> e_list{1};
    std::vector<int> g_list{1};
    int N = 6;
    int D = 0;  ///< 0 selects eN per case
    bool arc_check = false;
    std::string output;  ///< empty writes to standard output
    unsigned threads = 0;  ///< 0 reads PADORB_THREADS, then the hardware

    /// Throws ParameterError for unusable settings.
    void validate() const;
};

struct CampaignResult {
    std::string report;  ///< rendered JSON, identical for identical configs
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace padorb::cli
