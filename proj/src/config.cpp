// Copyright 2026 The gframe Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gframe/cli.hpp"
#include "json.hpp"

namespace gframe::cli {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::vector<std::string>& diags) : diags_(diags) {}

  void error(const std::string& field, const std::string& what) {
    diags_.push_back(field + ": " + what);
  }

  bool object(const Json& j, const std::string& field) {
    if (j.is_object()) return true;
    error(field, "expected an object");
    return false;
  }

  void known_keys(const Json& j, const std::string& field,
                  const std::set<std::string>& keys) {
    for (const auto& item : j.items()) {
      if (!keys.count(item.key())) {
        error(field.empty() ? item.key() : field + "." + item.key(),
              "unknown field");
      }
    }
  }

  void number(const Json& j, const char* key, const std::string& field,
              double& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (!v.is_number()) {
      error(field, "expected a number");
      return;
    }
    out = v.get<double>();
    if (!std::isfinite(out)) error(field, "must be finite");
  }

  template <typename Int>
  void integer(const Json& j, const char* key, const std::string& field,
               Int& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (!v.is_number_integer()) {
      error(field, "expected an integer");
      return;
    }
    out = v.get<Int>();
  }

  void string(const Json& j, const char* key, const std::string& field,
              std::string& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (!v.is_string()) {
      error(field, "expected a string");
      return;
    }
    out = v.get<std::string>();
  }

  bool matrix(const Json& j, const std::string& field,
              std::vector<std::vector<double>>& out) {
    if (!j.is_array()) {
      error(field, "expected an array of rows");
      return false;
    }
    out.clear();
    for (const auto& row : j) {
      if (!row.is_array()) {
        error(field, "expected an array of rows");
        return false;
      }
      std::vector<double> values;
      for (const auto& v : row) {
        if (!v.is_number()) {
          error(field, "entries must be numbers");
          return false;
        }
        values.push_back(v.get<double>());
      }
      out.push_back(std::move(values));
    }
    return true;
  }

 private:
  std::vector<std::string>& diags_;
};

const std::set<std::string> kModes = {"analyze", "witness", "shiftinv", "zak",
                                      "heisenberg"};

void parse_weight(Reader& r, const Json& j, WeightSpec& w) {
  const std::string field = "space.weight";
  if (j.is_array()) {
    w.kind = "inline";
    w.values.clear();
    for (const auto& v : j) {
      if (!v.is_number()) {
        r.error(field, "entries must be numbers");
        return;
      }
      w.values.push_back(v.get<double>());
    }
    return;
  }
  if (!r.object(j, field)) return;
  r.known_keys(j, field, {"preset", "value", "low", "high", "at"});
  std::string preset;
  r.string(j, "preset", field + ".preset", preset);
  if (preset != "constant" && preset != "step" && preset != "ramp") {
    r.error(field + ".preset", "unknown preset '" + preset +
                                   "' (constant, step, ramp)");
    return;
  }
  w.kind = preset;
  r.number(j, "value", field + ".value", w.value);
  r.number(j, "low", field + ".low", w.low);
  r.number(j, "high", field + ".high", w.high);
  r.number(j, "at", field + ".at", w.at);
}

void parse_space(Reader& r, const Json& j, SpaceSpec& s) {
  if (!r.object(j, "space")) return;
  r.known_keys(j, "space", {"grid_size", "fiber_dim", "weight",
                            "scalar_family"});
  r.integer(j, "grid_size", "space.grid_size", s.grid_size);
  r.integer(j, "fiber_dim", "space.fiber_dim", s.fiber_dim);
  if (j.contains("weight")) parse_weight(r, j.at("weight"), s.weight);
  if (j.contains("scalar_family")) {
    const Json& f = j.at("scalar_family");
    if (!r.object(f, "space.scalar_family")) return;
    r.known_keys(f, "space.scalar_family", {"re", "im"});
    if (!f.contains("re")) {
      r.error("space.scalar_family.re", "required");
      return;
    }
    r.matrix(f.at("re"), "space.scalar_family.re", s.family_re);
    if (f.contains("im")) {
      r.matrix(f.at("im"), "space.scalar_family.im", s.family_im);
    }
  }
}

void check_space(Reader& r, const SpaceSpec& s) {
  if (s.grid_size < 1) r.error("space.grid_size", "must be >= 1");
  if (s.fiber_dim < 1) r.error("space.fiber_dim", "must be >= 1");
  const WeightSpec& w = s.weight;
  if (w.kind == "inline") {
    if (static_cast<Index>(w.values.size()) != s.grid_size) {
      r.error("space.weight", "length " + std::to_string(w.values.size()) +
                                  " does not match grid_size " +
                                  std::to_string(s.grid_size));
    }
    for (double v : w.values) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        r.error("space.weight", "entries must be finite and nonnegative");
        break;
      }
    }
  } else if (w.kind == "constant") {
    if (!(w.value >= 0.0)) r.error("space.weight.value", "must be >= 0");
  } else {
    if (!(w.low >= 0.0)) r.error("space.weight.low", "must be >= 0");
    if (!(w.high >= 0.0)) r.error("space.weight.high", "must be >= 0");
    if (w.kind == "step" && !(w.at >= 0.0 && w.at <= 1.0)) {
      r.error("space.weight.at", "must lie in [0, 1]");
    }
  }
  if (!s.family_re.empty()) {
    const std::size_t rows = s.family_re.size();
    const std::size_t cols = s.family_re.front().size();
    bool rectangular = cols > 0;
    for (const auto& row : s.family_re) rectangular &= row.size() == cols;
    if (!rectangular) {
      r.error("space.scalar_family.re", "rows must have equal nonzero length");
    } else if (static_cast<Index>(rows) != s.grid_size) {
      r.error("space.scalar_family.re", "needs grid_size rows");
    }
    if (!s.family_im.empty()) {
      bool same = s.family_im.size() == rows;
      for (const auto& row : s.family_im) same &= row.size() == cols;
      if (!same) {
        r.error("space.scalar_family.im", "shape differs from re");
      }
    }
  }
}

void parse_generator(Reader& r, const Json& j, GeneratorSpec& g) {
  if (!r.object(j, "generator")) return;
  r.known_keys(j, "generator",
               {"preset", "grid_size", "radius", "samples_path"});
  r.string(j, "preset", "generator.preset", g.preset);
  r.integer(j, "grid_size", "generator.grid_size", g.grid_size);
  r.integer(j, "radius", "generator.radius", g.radius);
  r.string(j, "samples_path", "generator.samples_path", g.samples_path);
}

void check_generator(Reader& r, GeneratorSpec& g,
                     const std::filesystem::path& base_dir) {
  static const std::set<std::string> presets = {"indicator", "wide-indicator",
                                                "gaussian", "custom"};
  if (!presets.count(g.preset)) {
    r.error("generator.preset",
            "unknown preset '" + g.preset +
                "' (indicator, wide-indicator, gaussian, custom)");
  }
  if (g.grid_size < 1) r.error("generator.grid_size", "must be >= 1");
  if (g.radius < 0) r.error("generator.radius", "must be >= 0");
  if (g.preset == "wide-indicator" && g.radius == 1) {
    r.error("generator.radius", "wide-indicator needs radius >= 2");
  }
  if (g.preset == "custom") {
    if (g.radius < 1) r.error("generator.radius", "custom needs radius >= 1");
    if (g.samples_path.empty()) {
      r.error("generator.samples_path", "required for the custom preset");
    } else {
      std::filesystem::path p(g.samples_path);
      if (p.is_relative()) p = base_dir / p;
      p = p.lexically_normal();
      if (!std::filesystem::is_regular_file(p)) {
        r.error("generator.samples_path", "file not found: " + p.string());
      }
      g.samples_path = p.string();
    }
  } else if (!g.samples_path.empty()) {
    r.error("generator.samples_path", "only valid for the custom preset");
  }
}

void parse_zak(Reader& r, const Json& j, ZakSpec& z) {
  if (!r.object(j, "zak")) return;
  r.known_keys(j, "zak", {"window", "samples_per_period", "periods"});
  r.string(j, "window", "zak.window", z.window);
  r.integer(j, "samples_per_period", "zak.samples_per_period",
            z.samples_per_period);
  r.integer(j, "periods", "zak.periods", z.periods);
}

void check_zak(Reader& r, const ZakSpec& z) {
  if (z.window != "indicator" && z.window != "gaussian") {
    r.error("zak.window",
            "unknown window '" + z.window + "' (indicator, gaussian)");
  }
  if (z.samples_per_period < 1) {
    r.error("zak.samples_per_period", "must be >= 1");
  }
  if (z.periods < 1) r.error("zak.periods", "must be >= 1");
  if (z.samples_per_period * z.periods > 1024) {
    r.error("zak", "samples_per_period * periods must be <= 1024");
  }
}

void parse_heisenberg(Reader& r, const Json& j, HeisenbergSpec& h) {
  if (!r.object(j, "heisenberg")) return;
  r.known_keys(j, "heisenberg",
               {"eps", "dim", "resolution", "frame_resolution",
                "coefficient_range", "trials"});
  r.number(j, "eps", "heisenberg.eps", h.eps);
  r.integer(j, "dim", "heisenberg.dim", h.dim);
  r.integer(j, "resolution", "heisenberg.resolution", h.resolution);
  r.integer(j, "frame_resolution", "heisenberg.frame_resolution",
            h.frame_resolution);
  r.integer(j, "coefficient_range", "heisenberg.coefficient_range",
            h.coefficient_range);
  r.integer(j, "trials", "heisenberg.trials", h.trials);
}

void check_heisenberg(Reader& r, const HeisenbergSpec& h) {
  if (!(h.eps > 0.0 && h.eps < 1.0)) {
    r.error("heisenberg.eps", "must lie in (0, 1)");
  }
  if (h.dim < 1) r.error("heisenberg.dim", "must be >= 1");
  if (h.resolution < 2) r.error("heisenberg.resolution", "must be >= 2");
  if (h.frame_resolution < 2 || h.frame_resolution > 1024) {
    r.error("heisenberg.frame_resolution", "must lie in [2, 1024]");
  }
  if (h.coefficient_range < 0) {
    r.error("heisenberg.coefficient_range", "must be >= 0");
  }
  if (h.trials < 1) r.error("heisenberg.trials", "must be >= 1");
}

OrderedJson matrix_json(const std::vector<std::vector<double>>& m) {
  OrderedJson out = OrderedJson::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

}  // namespace

std::vector<std::string> parse_config(const std::string& text,
                                      const std::filesystem::path& base_dir,
                                      RunConfig& config) {
  std::vector<std::string> diags;
  Reader r(diags);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    diags.push_back(std::string("config: ") + e.what());
    return diags;
  }
  if (!r.object(j, "config")) return diags;
  r.known_keys(j, "", {"mode", "space", "witness", "generator", "zak",
                       "heisenberg", "tolerance", "seed", "output"});

  if (!j.contains("mode")) {
    r.error("mode", "required");
  } else {
    r.string(j, "mode", "mode", config.mode);
    if (!config.mode.empty() && !kModes.count(config.mode)) {
      r.error("mode", "unknown mode '" + config.mode +
                          "' (analyze, witness, shiftinv, zak, heisenberg)");
    }
  }
  r.number(j, "tolerance", "tolerance", config.tolerance);
  if (!(config.tolerance > 0.0)) r.error("tolerance", "must be positive");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      r.error("seed", "expected an unsigned integer");
    } else {
      config.seed = j.at("seed").get<std::uint64_t>();
    }
  }
  if (j.contains("output")) {
    const Json& o = j.at("output");
    if (r.object(o, "output")) {
      r.known_keys(o, "output", {"report"});
      r.string(o, "report", "output.report", config.report_name);
      const std::filesystem::path name(config.report_name);
      if (config.report_name.empty() || name.has_parent_path()) {
        r.error("output.report", "must be a plain file name");
      }
    }
  }

  const std::string& mode = config.mode;
  const bool needs_space = mode == "analyze" || mode == "witness";
  if (j.contains("space")) parse_space(r, j.at("space"), config.space);
  if (needs_space) {
    if (!j.contains("space")) {
      r.error("space", "required for mode " + mode);
    } else {
      check_space(r, config.space);
    }
  }
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    if (r.object(w, "witness")) {
      r.known_keys(w, "witness", {"a_claimed"});
      r.number(w, "a_claimed", "witness.a_claimed", config.a_claimed);
    }
  }
  if (mode == "witness" && !(config.a_claimed > 0.0)) {
    r.error("witness.a_claimed", "must be positive");
  }
  if (j.contains("generator")) {
    parse_generator(r, j.at("generator"), config.generator);
  }
  if (mode == "shiftinv") check_generator(r, config.generator, base_dir);
  if (j.contains("zak")) parse_zak(r, j.at("zak"), config.zak);
  if (mode == "zak") check_zak(r, config.zak);
  if (j.contains("heisenberg")) {
    parse_heisenberg(r, j.at("heisenberg"), config.heisenberg);
  }
  if (mode == "heisenberg") check_heisenberg(r, config.heisenberg);
  return diags;
}

std::vector<std::string> validate(const std::filesystem::path& config_path) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot read config " + config_path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunConfig config;
  return parse_config(buffer.str(), config_path.parent_path(), config);
}

std::string config_to_json(const RunConfig& c) {
  OrderedJson j;
  j["mode"] = c.mode;
  if (c.mode == "analyze" || c.mode == "witness") {
    OrderedJson space;
    space["grid_size"] = c.space.grid_size;
    space["fiber_dim"] = c.space.fiber_dim;
    const WeightSpec& w = c.space.weight;
    if (w.kind == "inline") {
      space["weight"] = w.values;
    } else {
      OrderedJson preset;
      preset["preset"] = w.kind;
      if (w.kind == "constant") {
        preset["value"] = w.value;
      } else {
        preset["low"] = w.low;
        preset["high"] = w.high;
        if (w.kind == "step") preset["at"] = w.at;
      }
      space["weight"] = preset;
    }
    if (!c.space.family_re.empty()) {
      OrderedJson family;
      family["re"] = matrix_json(c.space.family_re);
      if (!c.space.family_im.empty()) {
        family["im"] = matrix_json(c.space.family_im);
      }
      space["scalar_family"] = family;
    }
    j["space"] = space;
  }
  if (c.mode == "witness") j["witness"] = {{"a_claimed", c.a_claimed}};
  if (c.mode == "shiftinv") {
    OrderedJson g;
    g["preset"] = c.generator.preset;
    g["grid_size"] = c.generator.grid_size;
    g["radius"] = c.generator.radius;
    if (!c.generator.samples_path.empty()) {
      g["samples_path"] = c.generator.samples_path;
    }
    j["generator"] = g;
  }
  if (c.mode == "zak") {
    OrderedJson z;
    z["window"] = c.zak.window;
    z["samples_per_period"] = c.zak.samples_per_period;
    z["periods"] = c.zak.periods;
    j["zak"] = z;
  }
  if (c.mode == "heisenberg") {
    OrderedJson h;
    h["eps"] = c.heisenberg.eps;
    h["dim"] = c.heisenberg.dim;
    h["resolution"] = c.heisenberg.resolution;
    h["frame_resolution"] = c.heisenberg.frame_resolution;
    h["coefficient_range"] = c.heisenberg.coefficient_range;
    h["trials"] = c.heisenberg.trials;
    j["heisenberg"] = h;
  }
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  j["output"] = {{"report", c.report_name}};
  return j.dump(2);
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace gframe::cli
