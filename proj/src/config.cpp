#include "iwa/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iwa {

namespace {

using json = nlohmann::json;

long require_int(const json& j, const std::string& field) {
  if (!j.contains(field)) throw std::invalid_argument("config: missing field \"" + field + "\"");
  if (!j[field].is_number_integer())
    throw std::invalid_argument("config: field \"" + field + "\" must be an integer");
  return j[field].get<long>();
}

}  // namespace

Config config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  Config c;
  c.local.base.p = require_int(j, "p");
  c.local.base.f = static_cast<int>(require_int(j, "f"));
  if (!j.contains("phi") || !j["phi"].is_array())
    throw std::invalid_argument("config: missing field \"phi\" (array)");
  for (const auto& v : j["phi"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("config: \"phi\" entries must be integers");
    c.local.base.phi.push_back(v.get<long>());
  }
  c.local.e = static_cast<int>(require_int(j, "e"));
  if (!j.contains("eisenstein") || !j["eisenstein"].is_array())
    throw std::invalid_argument("config: missing field \"eisenstein\" (array)");
  for (const auto& entry : j["eisenstein"]) {
    std::vector<long> coeff;
    if (entry.is_number_integer()) {
      coeff.assign(static_cast<size_t>(c.local.base.f), 0);
      coeff[0] = entry.get<long>();
    } else if (entry.is_array()) {
      for (const auto& v : entry) {
        if (!v.is_number_integer())
          throw std::invalid_argument("config: \"eisenstein\" coordinates must be integers");
        coeff.push_back(v.get<long>());
      }
      if (static_cast<int>(coeff.size()) != c.local.base.f)
        throw std::invalid_argument("config: \"eisenstein\" list entries need f coordinates");
    } else {
      throw std::invalid_argument("config: \"eisenstein\" entries must be integers or lists");
    }
    c.local.eis.push_back(std::move(coeff));
  }
  c.local.M = static_cast<int>(require_int(j, "M"));
  c.N = static_cast<int>(require_int(j, "N"));
  if (j.contains("degree_cap")) c.degree_cap = static_cast<int>(require_int(j, "degree_cap"));
  if (j.contains("gammas")) {
    if (!j["gammas"].is_array())
      throw std::invalid_argument("config: \"gammas\" must be an array");
    for (const auto& g : j["gammas"]) {
      GammaSpec gs;
      gs.r = static_cast<int>(require_int(g, "r"));
      if (!g.contains("x") || !g["x"].is_array())
        throw std::invalid_argument("config: gamma entry missing digit list \"x\"");
      for (const auto& v : g["x"]) {
        if (!v.is_number_integer())
          throw std::invalid_argument("config: gamma digits must be integers");
        gs.digits.push_back(v.get<long>());
      }
      c.gammas.push_back(std::move(gs));
    }
  }
  // Validate eagerly so errors carry field names instead of surfacing later.
  make_local_ring(c);
  make_series_ring(c);
  return c;
}

Config config_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

LocalRing make_local_ring(const Config& c) { return LocalRing::make(c.local); }

SeriesRingPtr make_series_ring(const Config& c) {
  return SeriesRing::make(c.local.base.p, c.local.e, c.local.base.f, c.N);
}

ActionContext make_action_context(const Config& c) {
  return ActionContext(make_local_ring(c), make_series_ring(c));
}

std::vector<GammaEndomorphism> gammas_from_config(const ActionContext& ctx, const Config& c) {
  if (c.gammas.empty()) return ctx.default_gammas();
  std::vector<GammaEndomorphism> out;
  for (const auto& gs : c.gammas) {
    if (static_cast<int>(gs.digits.size()) != ctx.local().n())
      throw std::invalid_argument("config: gamma digit list needs e*f entries");
    OFElem x = ctx.local().digits_compose(DigitVector{gs.digits});
    out.push_back(ctx.gamma_make(gs.r, x));
  }
  return out;
}

}  // namespace iwa
