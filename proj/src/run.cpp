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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gframe/analyzer.hpp"
#include "gframe/cli.hpp"
#include "gframe/gframe_ops.hpp"
#include "gframe/heisenberg.hpp"
#include "gframe/shiftinv.hpp"
#include "gframe/tensor_onb.hpp"
#include "gframe/wspace.hpp"
#include "json.hpp"

namespace gframe::cli {
namespace {

using Json = nlohmann::ordered_json;

// Slacks for the consistency checks, independent of the verdict
// tolerance.
constexpr double kMassSlack = 1e-8;
constexpr double kPairingSlack = 1e-9;
constexpr double kIsometrySlack = 1e-8;
constexpr double kClosedFormSlack = 1e-9;
constexpr double kWitnessSlack = 1e-9;

struct Csv {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string render() const {
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c) out += ',';
      out += header[c];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += format_number(row[c]);
      }
      out += '\n';
    }
    return out;
  }
};

struct Outcome {
  Json body = Json::object();
  std::vector<Csv> tables;
  bool consistent = true;
};

Json bounds_json(const Bounds<double>& b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

Json residuals_json(const std::map<std::string, double>& r) {
  Json out = Json::object();
  for (const auto& [key, value] : r) out[key] = value;
  return out;
}

Json witness_json(const Witness<double>& w) {
  Json out;
  out["set_size"] = static_cast<std::int64_t>(w.set.size());
  out["energy"] = w.energy;
  out["norm_sq"] = w.norm_sq;
  out["ratio"] = w.ratio;
  out["operator_ratio"] = w.operator_ratio;
  out["extreme_weight"] = w.extreme_weight;
  return out;
}

Csv spectrum_csv(const std::string& name, const RealVector<double>& values) {
  Csv csv{name, {"index", "eigenvalue"}, {}};
  for (Index i = 0; i < values.size(); ++i) {
    csv.rows.push_back({double(i), values(i)});
  }
  return csv;
}

Csv weight_csv(const RealVector<double>& nodes, const RealVector<double>& w,
               const char* coordinate) {
  Csv csv{"weights.csv", {"index", coordinate, "weight"}, {}};
  for (Index i = 0; i < w.size(); ++i) {
    csv.rows.push_back({double(i), nodes(i), w(i)});
  }
  return csv;
}

RealVector<double> grid_nodes(Index n) {
  RealVector<double> x(n);
  for (Index i = 0; i < n; ++i) x(i) = double(i) / double(n);
  return x;
}

void frame_report_json(const FrameReport<double>& r, Json& body) {
  body["verdict"] = std::string(to_string(r.verdict));
  body["consistent"] = r.consistent;
  body["weight_bounds"] = bounds_json(r.weight_bounds);
  body["oracle_bounds"] = bounds_json(r.oracle_bounds);
  body["gram_bounds"] =
      r.gram_bounds ? bounds_json(*r.gram_bounds) : Json(nullptr);
  body["support_size"] = static_cast<std::int64_t>(r.support_size);
  body["residuals"] = residuals_json(r.residuals);
  body["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
}

RealVector<double> build_weights(const SpaceSpec& s) {
  const Index n = s.grid_size;
  const WeightSpec& w = s.weight;
  RealVector<double> out(n);
  for (Index i = 0; i < n; ++i) {
    const double x = double(i) / double(n);
    if (w.kind == "inline") {
      out(i) = w.values[static_cast<std::size_t>(i)];
    } else if (w.kind == "constant") {
      out(i) = w.value;
    } else if (w.kind == "step") {
      out(i) = x < w.at ? w.low : w.high;
    } else {
      out(i) = w.low + (w.high - w.low) * x;
    }
  }
  return out;
}

OperatorFamily<double> build_family(const SpaceSpec& s) {
  WeightedSpace<double> space(build_weights(s), s.fiber_dim);
  if (s.family_re.empty()) {
    return OperatorFamily<double>::with_default_basis(std::move(space));
  }
  const Index rows = static_cast<Index>(s.family_re.size());
  const Index cols = static_cast<Index>(s.family_re.front().size());
  ComplexMatrix<double> family(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index n = 0; n < cols; ++n) {
      const auto ui = static_cast<std::size_t>(i);
      const auto un = static_cast<std::size_t>(n);
      const double im = s.family_im.empty() ? 0.0 : s.family_im[ui][un];
      family(i, n) = {s.family_re[ui][un], im};
    }
  }
  TensorBasis<double> basis{
      family, ComplexMatrix<double>::Identity(s.fiber_dim, s.fiber_dim)};
  return OperatorFamily<double>(std::move(space), std::move(basis));
}

// Unweighted orthonormality and unimodularity of the tensor family.
Json basis_json(const OperatorFamily<double>& fam) {
  const auto& space = fam.space();
  const auto flat = WeightedSpace<double>::constant(space.grid_size(),
                                                    space.fiber_dim(), 1.0);
  Json out;
  out["custom"] = fam.basis().scalar_family.cols() != space.grid_size() ||
                  fam.basis().scalar_family != dft_family<double>(
                                                   space.grid_size());
  out["orthonormality_residual"] =
      verify_tensor_onb(flat, fam.basis());
  out["unimodularity_residual"] =
      unimodularity_residual(fam.basis().scalar_family);
  return out;
}

Outcome run_analyze(const RunConfig& c) {
  Outcome o;
  const auto fam = build_family(c.space);
  const auto report = decide_onb(fam, c.tolerance, c.seed);
  frame_report_json(report, o.body);
  o.body["basis"] = basis_json(fam);
  o.consistent = report.consistent;
  o.tables.push_back(weight_csv(grid_nodes(fam.space().grid_size()),
                                fam.space().weights(), "x"));
  o.tables.push_back(spectrum_csv("frame_spectrum.csv", report.frame_spectrum));
  o.tables.push_back(spectrum_csv("gram_spectrum.csv", report.gram_spectrum));
  return o;
}

Outcome run_witness(const RunConfig& c) {
  Outcome o;
  const auto fam = build_family(c.space);
  const auto report = decide_frame(fam, c.tolerance);
  frame_report_json(report, o.body);
  o.body["basis"] = basis_json(fam);

  const auto witness = witness_lower_failure(fam, c.a_claimed);
  Json claim;
  claim["a_claimed"] = c.a_claimed;
  claim["holds"] = !witness.has_value();
  claim["witness"] = witness ? witness_json(*witness) : Json(nullptr);
  o.body["claim"] = claim;

  o.consistent = report.consistent;
  Csv summary{"witness.csv",
              {"a_claimed", "set_size", "energy", "norm_sq", "ratio",
               "operator_ratio", "extreme_weight"},
              {}};
  if (witness) {
    const double scale = std::max(1.0, witness->ratio);
    o.consistent = o.consistent &&
                   witness->ratio <= witness->extreme_weight + kWitnessSlack &&
                   witness->extreme_weight < c.a_claimed &&
                   std::abs(witness->operator_ratio - witness->ratio) <=
                       kWitnessSlack * scale;
    summary.rows.push_back({c.a_claimed, double(witness->set.size()),
                            witness->energy, witness->norm_sq, witness->ratio,
                            witness->operator_ratio,
                            witness->extreme_weight});
    Csv field{"witness_field.csv",
              {"index", "x", "weight", "in_set", "phi_re", "phi_im"},
              {}};
    const auto& space = fam.space();
    for (Index i = 0; i < space.grid_size(); ++i) {
      const bool in_set =
          std::find(witness->set.begin(), witness->set.end(), i) !=
          witness->set.end();
      field.rows.push_back({double(i), space.grid_point(i), space.weight(i),
                            in_set ? 1.0 : 0.0, witness->field(i, 0).real(),
                            witness->field(i, 0).imag()});
    }
    o.tables.push_back(std::move(field));
  }
  o.tables.push_back(std::move(summary));
  o.tables.push_back(weight_csv(grid_nodes(fam.space().grid_size()),
                                fam.space().weights(), "x"));
  return o;
}

Generator<double> read_custom_generator(const GeneratorSpec& g) {
  std::ifstream in(g.samples_path);
  if (!in) throw IoError("cannot read generator samples " + g.samples_path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("re,im", 0) != 0) {
    throw IoError(g.samples_path + ": expected header 're,im'");
  }
  std::vector<Complex<double>> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string re, im;
    if (!std::getline(row, re, ',') || !std::getline(row, im)) {
      throw IoError(g.samples_path + ": malformed record '" + line + "'");
    }
    try {
      samples.emplace_back(std::stod(re), std::stod(im));
    } catch (const std::exception&) {
      throw IoError(g.samples_path + ": malformed record '" + line + "'");
    }
  }
  Generator<double> gen;
  gen.grid_size = g.grid_size;
  gen.radius = g.radius;
  if (static_cast<Index>(samples.size()) != gen.sample_count()) {
    throw IoError(g.samples_path + ": expected " +
                  std::to_string(gen.sample_count()) + " samples, found " +
                  std::to_string(samples.size()));
  }
  gen.fhat = Eigen::Map<ComplexVector<double>>(samples.data(),
                                               gen.sample_count());
  return gen;
}

Generator<double> build_generator(const GeneratorSpec& g) {
  if (g.preset == "indicator") {
    return indicator_generator<double>(g.grid_size, g.radius ? g.radius : 1);
  }
  if (g.preset == "wide-indicator") {
    return wide_indicator_generator<double>(g.grid_size,
                                            g.radius ? g.radius : 2);
  }
  if (g.preset == "gaussian") {
    return gaussian_generator<double>(g.grid_size, g.radius ? g.radius : 4);
  }
  return read_custom_generator(g);
}

Outcome run_shiftinv(const RunConfig& c) {
  Outcome o;
  const auto gen = build_generator(c.generator);
  const auto a = analyze_generator(gen, c.tolerance);
  frame_report_json(a.report, o.body);

  // <f, T_k phi> by both routes for a random combination of translates.
  const Index reach = (gen.grid_size - 1) / 2;
  std::mt19937_64 rng(c.seed);
  TranslateSum<double> f;
  f.offset = -reach;
  f.coefficients = random_complex<double>(2 * reach + 1, 1, rng);
  double pairing = 0.0;
  for (Index k = -reach; k <= reach; ++k) {
    pairing = std::max(pairing, translation_pairing(gen, k, f).residual);
  }

  const double mass_residual = std::abs(a.mass - a.energy);
  Json details;
  details["grid_size"] = static_cast<std::int64_t>(gen.grid_size);
  details["radius"] = static_cast<std::int64_t>(gen.radius);
  details["mass"] = a.mass;
  details["energy"] = a.energy;
  details["mass_residual"] = mass_residual;
  details["translate_gram_bounds"] = bounds_json(a.translate_gram_bounds);
  details["transfer_residual"] = a.transfer_residual;
  details["pairing_residual"] = pairing;
  if (c.generator.preset == "indicator") {
    const double tol = c.tolerance;
    details["reference_pair"] = {
        {"lower", 1.0},
        {"upper", 2.0},
        {"valid", a.report.weight_bounds.lower >= 1.0 - tol &&
                      a.report.weight_bounds.upper <= 2.0 + tol}};
  }
  o.body["shift_invariant"] = details;
  o.consistent = a.report.consistent &&
                 a.transfer_residual <= kSpectralSlack &&
                 mass_residual <= kMassSlack * std::max(1.0, a.energy) &&
                 pairing <= kPairingSlack;

  o.tables.push_back(weight_csv(grid_nodes(gen.grid_size), a.weights, "x"));
  o.tables.push_back(
      spectrum_csv("frame_spectrum.csv", a.report.frame_spectrum));
  return o;
}

Outcome run_zak(const RunConfig& c) {
  Outcome o;
  const Index n = c.zak.samples_per_period;
  const Index l = c.zak.periods;
  const ComplexVector<double> phi = c.zak.window == "indicator"
                                        ? indicator_window<double>(n, l)
                                        : gaussian_window<double>(n, l);
  const auto report = gabor_riesz_check(phi, n, l, c.tolerance);
  const double quasi = quasi_periodicity_residual(phi, report.zak);

  o.body["verdict"] = std::string(to_string(report.verdict));
  o.body["consistent"] = report.consistent && quasi <= kPairingSlack;
  o.body["zak_bounds"] = bounds_json(report.zak_bounds);
  o.body["gram_bounds"] = bounds_json(report.gram_bounds);
  o.body["residuals"] = {{"zak_gram_relative", report.residual},
                         {"quasi_periodicity", quasi}};
  o.consistent = o.body["consistent"].get<bool>();

  Csv zak{"zak.csv", {"j", "k", "x", "xi", "modulus_sq"}, {}};
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < l; ++k) {
      zak.rows.push_back({double(j), double(k), double(j) / double(n),
                          double(k) / double(l),
                          std::norm(report.zak.values(j, k))});
    }
  }
  o.tables.push_back(std::move(zak));
  o.tables.push_back(spectrum_csv(
      "gram_spectrum.csv",
      hermitian_spectrum(gabor_gram(phi, n, l))));
  return o;
}

Outcome run_heisenberg(const RunConfig& c) {
  Outcome o;
  const auto& h = c.heisenberg;
  const RankOneHSField<double> field(h.eps, h.dim);
  const CenterTranslateModel<double> model(
      field, AlphaGrid<double>::midpoint(h.resolution));

  const double mass = psi_norm_sq(h.eps, h.dim);
  const double mass_closed = psi_norm_sq_closed(h.eps, h.dim);
  const auto lemma = lemma_bounds_check(h.eps, h.dim, model.grid());

  std::mt19937_64 rng(c.seed);
  double isometry = 0.0, pairing = 0.0;
  for (int t = 0; t < h.trials; ++t) {
    TranslateSum<double> a;
    a.offset = -h.coefficient_range;
    a.coefficients =
        random_complex<double>(2 * h.coefficient_range + 1, 1, rng);
    isometry = std::max(isometry, isometry_residual(model, a));
    for (Index k = a.first(); k <= a.last(); ++k) {
      pairing = std::max(pairing, std::abs(lambda_k(model, k, a) -
                                           translate_pairing(model, k, a)));
    }
  }

  const auto frame = center_translate_frame(field, h.frame_resolution,
                                            c.tolerance);
  frame_report_json(frame.report, o.body);

  Json details;
  details["psi_norm_sq"] = mass;
  details["psi_norm_sq_closed"] = mass_closed;
  details["lemma_bounds"] = {{"min", lemma.min},
                             {"max", lemma.max},
                             {"lower_limit", lemma.lower_limit},
                             {"support_size",
                              static_cast<std::int64_t>(lemma.support_size)},
                             {"holds", lemma.holds}};
  details["admissible_bounds"] = bounds_json(frame.admissible);
  details["frame_within_admissible"] = frame.within;
  details["isometry_residual"] = isometry;
  details["pairing_residual"] = pairing;
  o.body["heisenberg"] = details;

  o.consistent = frame.report.consistent && frame.within && lemma.holds &&
                 isometry <= kIsometrySlack &&
                 std::abs(mass - mass_closed) <= kClosedFormSlack &&
                 pairing <= kPairingSlack;
  o.body["consistent"] = o.consistent;

  o.tables.push_back(
      weight_csv(model.grid().nodes, model.weights(), "alpha"));
  o.tables.push_back(
      spectrum_csv("frame_spectrum.csv", frame.report.frame_spectrum));
  return o;
}

bool all_finite(const Json& j) {
  if (j.is_number_float()) return std::isfinite(j.get<double>());
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (!all_finite(item)) return false;
    }
  }
  return true;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace

ExitCode run(const RunConfig& config, const std::filesystem::path& out_dir,
             std::ostream& diag) {
  Outcome o;
  try {
    if (config.mode == "analyze") {
      o = run_analyze(config);
    } else if (config.mode == "witness") {
      o = run_witness(config);
    } else if (config.mode == "shiftinv") {
      o = run_shiftinv(config);
    } else if (config.mode == "zak") {
      o = run_zak(config);
    } else if (config.mode == "heisenberg") {
      o = run_heisenberg(config);
    } else {
      diag << "error: unknown mode '" << config.mode << "'\n";
      return kConfigError;
    }
  } catch (const IoError& e) {
    diag << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    diag << "error: " << config.mode << ": " << e.what() << '\n';
    return kConfigError;
  }

  Json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["mode"] = config.mode;
  for (auto& [key, value] : o.body.items()) report[key] = value;
  Json outputs = Json::array();
  for (const auto& t : o.tables) outputs.push_back(t.name);
  report["outputs"] = outputs;
  report["config"] = Json::parse(config_to_json(config));

  if (!all_finite(report)) {
    diag << "error: report contains a non-finite value\n";
    return kConfigError;
  }

  try {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string());
    for (const auto& t : o.tables) write_file(out_dir / t.name, t.render());
    write_file(out_dir / config.report_name, report.dump(2) + "\n");
  } catch (const IoError& e) {
    diag << "error: " << e.what() << '\n';
    return kConfigError;
  }

  if (!o.consistent) {
    diag << "warning: consistency residual above tolerance; see "
         << (out_dir / config.report_name).string() << '\n';
    return kInconsistent;
  }
  return kOk;
}

ExitCode run_file(const std::filesystem::path& config_path,
                  const std::filesystem::path& out_dir,
                  const Overrides& overrides, std::ostream& diag) {
  std::ifstream in(config_path);
  if (!in) {
    diag << "error: cannot read config " << config_path.string() << '\n';
    return kConfigError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunConfig config;
  auto diags = parse_config(buffer.str(), config_path.parent_path(), config);
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.tolerance) {
    config.tolerance = *overrides.tolerance;
    if (!(config.tolerance > 0.0)) diags.push_back("--tol: must be positive");
  }
  if (!diags.empty()) {
    for (const auto& d : diags) diag << "config error: " << d << '\n';
    return kConfigError;
  }
  return run(config, out_dir, diag);
}

}  // namespace gframe::cli
