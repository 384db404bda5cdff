#pragma once

// JSON configuration shared by the CLI and the python bindings. Schema:
//   { "p": 2, "f": 1, "phi": [0,1], "e": 2, "eisenstein": [-2,0,1],
//     "M": 2, "N": 4,
//     "gammas": [ {"r": 1, "x": [0,1]} ],          // optional
//     "degree_cap": 512 }                           // optional
// "eisenstein" entries are integers, or f-coordinate lists for coefficients
// with a nontrivial unramified part. Gamma "x" entries are digit vectors
// (flat, length e*f, row-major in (i,k)).

#include <optional>
#include <string>
#include <vector>

#include "iwa/dynamics.hpp"
#include "iwa/padic.hpp"
#include "iwa/series.hpp"

namespace iwa {

struct GammaSpec {
  int r = 1;
  std::vector<long> digits;
};

struct Config {
  LocalFieldSpec local;
  int N = 0;
  std::vector<GammaSpec> gammas;
  int degree_cap = 512;
};

Config config_from_json_text(const std::string& text);
Config config_load(const std::string& path);

LocalRing make_local_ring(const Config& c);
SeriesRingPtr make_series_ring(const Config& c);
ActionContext make_action_context(const Config& c);
std::vector<GammaEndomorphism> gammas_from_config(const ActionContext& ctx, const Config& c);

}  // namespace iwa
