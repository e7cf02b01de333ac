// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// liyorke: construct and verify Li-Yorke pairs, estimate dimensions.
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical failure (degenerate fit,
// failed Li-Yorke verdict, failed conjugacy bound).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liyorke/liyorke.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Failure {
  int exit_code;
  std::string message;
};

bool numerical(ly_status s) {
  return s == LY_DEGENERATE_FIT || s == LY_TOO_FEW_CHECKPOINTS || s == LY_INTERNAL;
}

void check(ly_status s) {
  if (s == LY_OK) return;
  throw Failure{numerical(s) ? kExitNumerical : kExitValidation,
                std::string(ly_status_string(s)) + ": " + ly_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Sequence = std::unique_ptr<ly_sequence, Deleter<ly_sequence, ly_sequence_free>>;
using Gaps = std::unique_ptr<ly_gaps, Deleter<ly_gaps, ly_gaps_free>>;
using Ifs = std::unique_ptr<ly_ifs, Deleter<ly_ifs, ly_ifs_free>>;
using System = std::unique_ptr<ly_system, Deleter<ly_system, ly_system_free>>;
using Cloud = std::unique_ptr<ly_cloud, Deleter<ly_cloud, ly_cloud_free>>;
using Estimate = std::unique_ptr<ly_estimate, Deleter<ly_estimate, ly_estimate_free>>;
using Profile = std::unique_ptr<ly_profile, Deleter<ly_profile, ly_profile_free>>;

std::string take(char* s) {
  std::string out(s);
  ly_string_free(s);
  return out;
}

template <class H, class Fn>
Json as_json(const H* handle, Fn to_json) {
  char* text = nullptr;
  check(to_json(handle, &text));
  return Json::parse(take(text));
}

std::string canonical(const Json& j) {
  char* text = nullptr;
  check(ly_json_canonical(j.dump().c_str(), &text));
  return take(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitValidation, "cannot read '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool inline_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitValidation, "cannot write '" + path + "'"};
  out << text;
}

// ---- JSON config files

// Top-level keys name long options ("eps_min" and "eps-min" both work).
// "system" may be an object {"kind": ..., parameters}; "ifs" and "gaps" may
// be objects and are passed on as inline JSON.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* app) : app_(app) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::ostringstream os;
    os << input.rdbuf();
    Json j;
    try {
      j = Json::parse(os.str());
    } catch (const Json::parse_error& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<std::pair<std::string, std::vector<std::string>>> flat;
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string name = it.key();
      for (auto& c : name) c = c == '_' ? '-' : c;
      const Json& v = it.value();
      if (name == "system" && v.is_object()) {
        for (auto p = v.begin(); p != v.end(); ++p) {
          flat.push_back({p.key() == "kind" ? "system" : p.key(), {scalar(p.value())}});
        }
      } else if (v.is_object()) {
        flat.push_back({name, {v.dump()}});
      } else if (v.is_array()) {
        std::vector<std::string> inputs;
        for (const auto& e : v) inputs.push_back(scalar(e));
        flat.push_back({name, inputs});
      } else {
        flat.push_back({name, {scalar(v)}});
      }
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [name, inputs] : flat) {
      bool known = false;
      for (const CLI::App* sub : app_->get_subcommands([](const CLI::App*) { return true; })) {
        if (sub->get_option_no_throw("--" + name) == nullptr) continue;
        known = true;
        CLI::ConfigItem item;
        item.parents = {sub->get_name()};
        item.name = name;
        item.inputs = inputs;
        items.push_back(item);
      }
      if (!known) throw CLI::ConversionError("config: unknown option '" + name + "'");
    }
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_structured()) throw CLI::ConversionError("config: nested value " + v.dump());
    return v.dump();
  }

  const CLI::App* app_;
};

// ---- shared options

struct SystemOptions {
  std::string system;
  std::string ifs;
  double a = 2;
  double beta1 = 1.0 / 3.0;
  double beta2 = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double tau = 3;
};

struct RunOptions {
  std::string gaps = "quadratic";
  std::size_t depth = 40;
  std::size_t count = 100000;
  std::uint64_t seed = 1;
  double eps_min = 0x1.0p-14;
  double eps_max = 0x1.0p-4;
  std::string out = "-";
  std::string format = "json";
  unsigned threads = 0;
};

void add_system_options(CLI::App* sub, SystemOptions& o, bool allow_ifs) {
  auto* sys = sub->add_option("--system", o.system, "tent | baker | horseshoe | solenoid")
                  ->check(CLI::IsMember({"tent", "baker", "horseshoe", "solenoid"}));
  if (allow_ifs) {
    sub->add_option("--ifs", o.ifs, "IFS JSON file or inline JSON object")->excludes(sys);
  }
  sub->add_option("--a", o.a, "tent height parameter");
  sub->add_option("--beta1", o.beta1, "baker/solenoid first contraction");
  sub->add_option("--beta2", o.beta2, "baker/solenoid second contraction");
  sub->add_option("--beta", o.beta, "horseshoe contraction");
  sub->add_option("--tau", o.tau, "horseshoe expansion");
}

void add_common(CLI::App* sub, RunOptions& r) {
  sub->add_option("--seed", r.seed, "random seed");
  sub->add_option("--threads", r.threads, "worker threads (0: all cores)");
  sub->add_option("--out", r.out, "output file ('-' for stdout)");
}

void add_gaps(CLI::App* sub, RunOptions& r) {
  sub->add_option("--gaps", r.gaps,
                  "zero | constant:c | linear | quadratic | affine:a,b | list:FILE | JSON");
}

void add_ladder(CLI::App* sub, RunOptions& r) {
  sub->add_option("--eps-min", r.eps_min, "smallest grid size");
  sub->add_option("--eps-max", r.eps_max, "largest grid size");
}

void add_format(CLI::App* sub, RunOptions& r) {
  sub->add_option("--format", r.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

System make_system(const SystemOptions& o) {
  ly_system* s = nullptr;
  check(ly_system_create(o.system.c_str(), o.a, o.beta1, o.beta2, o.beta, o.tau, &s));
  return System(s);
}

Ifs make_ifs(const std::string& arg) {
  const std::string text = inline_json(arg) ? arg : read_file(arg);
  ly_ifs* f = nullptr;
  check(ly_ifs_from_json(text.c_str(), &f));
  return Ifs(f);
}

Gaps make_gaps(const std::string& arg) {
  ly_gaps* g = nullptr;
  check(inline_json(arg) ? ly_gaps_from_json(arg.c_str(), &g) : ly_gaps_parse(arg.c_str(), &g));
  return Gaps(g);
}

Sequence random_binary(bool two_sided, std::size_t past, std::size_t future, std::uint64_t seed) {
  ly_sequence* s = nullptr;
  check(ly_sequence_random(two_sided ? 1 : 0, 2, past, future, seed, &s));
  return Sequence(s);
}

/// The IFS a subcommand works on: --ifs, or the system's separated IFS.
Ifs target_ifs(const SystemOptions& o) {
  if (!o.ifs.empty()) return make_ifs(o.ifs);
  if (o.system.empty()) throw Failure{kExitValidation, "give --system or --ifs"};
  const System sys = make_system(o);
  ly_ifs* f = nullptr;
  check(ly_system_ifs(sys.get(), 0, &f));
  return Ifs(f);
}

std::vector<double> ladder(const RunOptions& r) {
  std::vector<double> eps(128);
  std::size_t n = 0;
  check(ly_dyadic_ladder(r.eps_max, r.eps_min, eps.data(), eps.size(), &n));
  eps.resize(n);
  return eps;
}

/// Box count plus fit. Returns the estimate JSON and whether the fit worked.
std::pair<Json, bool> estimate_cloud(const ly_cloud* cloud, const RunOptions& r,
                                     std::string* csv) {
  const auto eps = ladder(r);
  ly_estimate* raw = nullptr;
  check(ly_box_count(cloud, eps.data(), eps.size(), r.threads, &raw));
  Estimate est(raw);
  const ly_status fit = ly_dimension_fit(est.get());
  const std::string fit_error = fit == LY_OK ? "" : ly_last_error();
  if (fit != LY_OK && fit != LY_DEGENERATE_FIT) check(fit);
  Json j = as_json(est.get(), ly_estimate_to_json);
  if (!fit_error.empty()) j["fit_error"] = fit_error;
  if (csv) {
    char* text = nullptr;
    check(ly_estimate_to_csv(est.get(), &text));
    *csv = take(text);
  }
  return {j, fit == LY_OK};
}

Cloud sample_target(const std::string& target, const SystemOptions& so, const RunOptions& r,
                    const std::string& base_arg) {
  const ly_sampler_config cfg{r.count, r.depth, r.seed, r.threads};
  ly_cloud* c = nullptr;
  if (target == "attractor") {
    if (so.ifs.empty() && !so.system.empty()) {
      const System sys = make_system(so);
      check(ly_sample_system(sys.get(), &cfg, &c));
    } else {
      const Ifs ifs = target_ifs(so);
      check(ly_sample_attractor(ifs.get(), &cfg, &c));
    }
    return Cloud(c);
  }
  const Ifs ifs = target_ifs(so);
  const Gaps gaps = make_gaps(r.gaps);
  if (target == "pairs") {
    check(ly_sample_pairs(ifs.get(), gaps.get(), &cfg, &c));
    return Cloud(c);
  }
  ly_sequence* s = nullptr;
  if (base_arg == "random") {
    const int m = static_cast<int>(ly_ifs_size(ifs.get()));
    check(ly_sequence_random(0, m, 0, r.depth, r.seed ^ 0x5bd1e995ULL, &s));
  } else {
    check(ly_sequence_from_json(read_file(base_arg).c_str(), &s));
  }
  const Sequence base(s);
  check(ly_sample_restricted(ifs.get(), base.get(), gaps.get(), &cfg, &c));
  return Cloud(c);
}

// ---- subcommands

int cmd_dimension(const SystemOptions& so, const RunOptions& r) {
  Json out;
  if (!so.ifs.empty() || so.system.empty()) {
    const Ifs ifs = target_ifs(so);
    out["ifs"] = as_json(ifs.get(), ly_ifs_to_json);
  } else {
    const System sys = make_system(so);
    out["system"] = as_json(sys.get(), ly_system_to_json);
    if (ly_system_two_sided_p(sys.get())) {
      ly_ifs* e = nullptr;
      check(ly_system_ifs(sys.get(), 1, &e));
      const Ifs expanding(e);
      double de = 0;
      check(ly_ifs_moran(expanding.get(), &de, nullptr));
      out["expanding_dimension"] = de;
    }
  }
  const Ifs ifs = target_ifs(so);
  double dim = 0, residual = 0, gap = 0;
  check(ly_ifs_moran(ifs.get(), &dim, &residual));
  check(ly_ifs_separation(ifs.get(), &gap));
  out["dimension"] = dim;
  out["residual"] = residual;
  out["separation_gap"] = gap;
  if (out.contains("expanding_dimension")) {
    out["invariant_set_dimension"] = dim + out["expanding_dimension"].get<double>();
  }
  bool fitted = true;
  if (r.count > 0) {
    const ly_sampler_config cfg{r.count, r.depth, r.seed, r.threads};
    ly_cloud* c = nullptr;
    check(ly_sample_attractor(ifs.get(), &cfg, &c));
    const Cloud cloud(c);
    auto [est, ok] = estimate_cloud(cloud.get(), r, nullptr);
    out["box_count"] = est;
    fitted = ok;
  }
  write_output(r.out, canonical(out));
  std::fprintf(stderr, "D = %.12g\n", dim);
  return fitted ? 0 : kExitNumerical;
}

struct ConstructOptions {
  int m = 2;
  std::size_t length = 64;
  std::string side = "one";
  std::string base = "const:1";
  std::string filler = "random";
  std::string extract;
  std::size_t gap_terms = 100;
};

Sequence make_sequence(const std::string& arg, const ConstructOptions& c, std::uint64_t seed) {
  const bool two = c.side == "two";
  const std::size_t past = two ? c.length : 0;
  ly_sequence* s = nullptr;
  if (arg == "random") {
    check(ly_sequence_random(two ? 1 : 0, c.m, past, c.length, seed, &s));
  } else if (arg.rfind("const:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(arg.substr(6));
    } catch (const std::exception&) {
      throw Failure{kExitValidation, "bad constant sequence '" + arg + "'"};
    }
    const std::vector<int> digits(c.length, d);
    check(two ? ly_sequence_two_sided(c.m, digits.data(), past, digits.data(), c.length, &s)
              : ly_sequence_one_sided(c.m, digits.data(), c.length, &s));
  } else {
    check(ly_sequence_from_json(read_file(arg).c_str(), &s));
  }
  return Sequence(s);
}

int cmd_construct(const ConstructOptions& c, const RunOptions& r) {
  const Gaps gaps = make_gaps(r.gaps);
  char* report = nullptr;
  check(ly_gap_check(gaps.get(), c.gap_terms, &report));
  const Json gap_report = Json::parse(take(report));
  std::fprintf(stderr, "gap condition: %s (limit %s)\n",
               gap_report["verdict"].get<std::string>().c_str(),
               gap_report["limit_label"].get<std::string>().c_str());

  Json out;
  out["gaps"] = as_json(gaps.get(), ly_gaps_to_json);
  out["gap_report"] = gap_report;
  const Sequence base = make_sequence(c.base, c, r.seed * 2);
  out["base"] = as_json(base.get(), ly_sequence_to_json);

  if (!c.extract.empty()) {
    ly_sequence* p = nullptr;
    check(ly_sequence_from_json(read_file(c.extract).c_str(), &p));
    const Sequence partner(p);
    ly_sequence* f = nullptr;
    check(ly_extract_filler(partner.get(), base.get(), gaps.get(), &f));
    const Sequence filler(f);
    out["partner"] = as_json(partner.get(), ly_sequence_to_json);
    out["filler"] = as_json(filler.get(), ly_sequence_to_json);
    write_output(r.out, canonical(out));
    return 0;
  }

  const Sequence filler = make_sequence(c.filler, c, r.seed * 2 + 1);
  ly_sequence* p = nullptr;
  check(ly_construct_partner(base.get(), gaps.get(), filler.get(), c.length, &p));
  const Sequence partner(p);
  // smallest schedule covering the constructed span
  Json schedule;
  for (std::size_t blocks = 1;; ++blocks) {
    char* text = nullptr;
    check(ly_block_schedule(gaps.get(), blocks, &text));
    schedule = Json::parse(take(text));
    if (schedule["span"].get<std::size_t>() >= c.length) break;
  }
  out["filler"] = as_json(filler.get(), ly_sequence_to_json);
  out["partner"] = as_json(partner.get(), ly_sequence_to_json);
  out["schedule"] = schedule;
  write_output(r.out, canonical(out));
  return 0;
}

struct VerifyOptions {
  std::size_t blocks = 12;
  std::string control = "none";
  std::size_t keep_blocks = 2;
  double decay = 0;
  double floor = 0;
  bool unsafe_iterate = false;
};

Json unsafe_iterate(const ly_system* sys, const ly_sequence* base, std::size_t horizon,
                    std::size_t depth) {
  const std::size_t w = ly_system_dim(sys);
  std::vector<double> x(w), y(w), coded(w);
  check(ly_code_orbit_point(sys, base, 0, depth, x.data(), nullptr));
  Json deviation = Json::array();
  std::string stopped;
  for (std::size_t t = 1; t <= horizon; ++t) {
    if (ly_apply_map(sys, x.data(), y.data()) != LY_OK) {
      stopped = "time " + std::to_string(t) + ": " + ly_last_error();
      break;
    }
    x.swap(y);
    check(ly_code_orbit_point(sys, base, t, depth, coded.data(), nullptr));
    double d2 = 0;
    for (std::size_t k = 0; k < w; ++k) d2 += (x[k] - coded[k]) * (x[k] - coded[k]);
    deviation.push_back(std::sqrt(d2));
  }
  Json j{{"deviation", deviation}};
  if (!stopped.empty()) j["stopped"] = stopped;
  return j;
}

int cmd_verify(const SystemOptions& so, const RunOptions& r, const VerifyOptions& v) {
  if (so.system.empty()) throw Failure{kExitValidation, "verify needs --system"};
  const System sys = make_system(so);
  const Gaps gaps = make_gaps(r.gaps);
  const bool two = ly_system_two_sided_p(sys.get()) != 0;
  std::size_t length = 0;
  check(ly_required_length(sys.get(), gaps.get(), v.blocks, r.depth, &length));
  const std::size_t past = two ? r.depth : 0;

  const Sequence base = random_binary(two, past, length, r.seed * 2);
  const Sequence filler = random_binary(two, past, length, r.seed * 2 + 1);
  ly_sequence* p = nullptr;
  check(ly_construct_partner(base.get(), gaps.get(), filler.get(), length, &p));
  Sequence partner(p);
  int skip = 0;
  if (v.control == "identical") {
    ly_sequence* copy = nullptr;
    check(ly_shift(base.get(), 0, &copy));
    partner = Sequence(copy);
    skip = 1;
  } else if (v.control == "eventually-equal") {
    ly_sequence* e = nullptr;
    check(ly_eventually_equal_control(partner.get(), base.get(), gaps.get(), v.keep_blocks, &e));
    partner = Sequence(e);
    skip = 1;
  }

  ly_profile* prof = nullptr;
  check(ly_liyorke_profile(sys.get(), base.get(), gaps.get(), partner.get(), v.blocks, r.depth,
                           skip, &prof));
  const Profile profile(prof);
  double decay = 0, floor = 0;
  check(ly_default_thresholds(sys.get(), &decay, &floor));
  if (v.decay > 0) decay = v.decay;
  if (v.floor > 0) floor = v.floor;
  ly_verdict verdict{};
  check(ly_verify_liyorke(profile.get(), decay, floor, &verdict));

  Json out;
  out["system"] = as_json(sys.get(), ly_system_to_json);
  out["gaps"] = as_json(gaps.get(), ly_gaps_to_json);
  out["blocks"] = v.blocks;
  out["depth"] = r.depth;
  out["control"] = v.control;
  out["thresholds"] = {{"proximity_decay", decay}, {"separation_floor", floor}};
  out["base"] = as_json(base.get(), ly_sequence_to_json);
  out["partner"] = as_json(partner.get(), ly_sequence_to_json);
  out["profile"] = as_json(profile.get(), ly_profile_to_json);
  out["verdict"] = as_json(&verdict, ly_verdict_to_json);
  if (v.unsafe_iterate) {
    const std::size_t horizon = out["profile"]["separation"].back()["time"].get<std::size_t>();
    out["unsafe_iterate"] = unsafe_iterate(sys.get(), base.get(), horizon, r.depth);
  }
  write_output(r.out, canonical(out));
  if (verdict.pass) {
    std::fprintf(stderr, "Li-Yorke: pass (%zu blocks)\n", v.blocks);
    return 0;
  }
  std::fprintf(stderr, "Li-Yorke: fail (%s at block %zu, time %zu: %.6g vs %.6g)\n",
               ly_failure_string(verdict.failure), verdict.block, verdict.time, verdict.value,
               verdict.limit);
  return kExitNumerical;
}

int cmd_boxdim(const SystemOptions& so, const RunOptions& r, const std::string& target,
               const std::string& base) {
  const Cloud cloud = sample_target(target, so, r, base);
  std::string csv;
  auto [est, ok] = estimate_cloud(cloud.get(), r, &csv);
  if (r.format == "csv") {
    write_output(r.out, csv);
  } else {
    est["target"] = target;
    est["depth"] = r.depth;
    est["seed"] = r.seed;
    write_output(r.out, canonical(est));
  }
  if (ok) {
    std::fprintf(stderr, "slope = %.6f +- %.6f\n", est["slope"].get<double>(),
                 est["stderr"].get<double>());
    return 0;
  }
  std::fprintf(stderr, "%s\n", est["fit_error"].get<std::string>().c_str());
  return kExitNumerical;
}

int cmd_sample(const SystemOptions& so, const RunOptions& r, const std::string& target,
               const std::string& base) {
  const Cloud cloud = sample_target(target, so, r, base);
  char* text = nullptr;
  check(r.format == "csv" ? ly_cloud_to_csv(cloud.get(), &text)
                          : ly_cloud_to_json(cloud.get(), &text));
  write_output(r.out, take(text));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li-Yorke pairs on self-similar sets: construction, verification, dimension"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON config file (command-line flags take precedence)");

  SystemOptions dim_sys;
  RunOptions dim_run;
  dim_run.count = 0;
  dim_run.depth = 30;
  auto* dimension = app.add_subcommand("dimension", "Moran dimension, optional box-count check");
  add_system_options(dimension, dim_sys, true);
  dimension->add_option("--count", dim_run.count, "samples for a box-count check (0: none)");
  dimension->add_option("--depth", dim_run.depth, "coding depth of the samples");
  add_ladder(dimension, dim_run);
  add_common(dimension, dim_run);

  ConstructOptions con;
  RunOptions con_run;
  auto* construct = app.add_subcommand("construct", "build a partner in Sigma_N(base)");
  construct->add_option("--m", con.m, "alphabet size");
  construct->add_option("--length", con.length, "number of partner digits");
  construct->add_option("--side", con.side, "one | two")->check(CLI::IsMember({"one", "two"}));
  construct->add_option("--base", con.base, "const:d | random | sequence JSON file");
  construct->add_option("--filler", con.filler, "const:d | random | sequence JSON file");
  construct->add_option("--extract", con.extract, "partner JSON file: recover its filler");
  construct->add_option("--gap-terms", con.gap_terms, "terms in the gap-condition report");
  add_gaps(construct, con_run);
  add_common(construct, con_run);

  SystemOptions ver_sys;
  RunOptions ver_run;
  ver_run.depth = 20;
  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Li-Yorke verdict for a constructed pair");
  add_system_options(verify, ver_sys, false);
  add_gaps(verify, ver_run);
  verify->add_option("--blocks", ver.blocks, "checkpoint blocks");
  verify->add_option("--depth", ver_run.depth, "coding depth");
  verify->add_option("--control", ver.control, "none | identical | eventually-equal")
      ->check(CLI::IsMember({"none", "identical", "eventually-equal"}));
  verify->add_option("--keep-blocks", ver.keep_blocks, "blocks kept by eventually-equal");
  verify->add_option("--decay", ver.decay, "proximity decay (0: system default)");
  verify->add_option("--floor", ver.floor, "separation floor (0: system default)");
  verify->add_flag("--unsafe-iterate", ver.unsafe_iterate,
                   "also iterate the map in floating point and report the drift");
  add_common(verify, ver_run);

  SystemOptions box_sys;
  RunOptions box_run;
  std::string box_target = "attractor";
  std::string box_base = "random";
  auto* boxdim = app.add_subcommand("boxdim", "box-counting dimension of a sampled set");
  add_system_options(boxdim, box_sys, true);
  boxdim->add_option("--target", box_target, "attractor | restricted | pairs")
      ->check(CLI::IsMember({"attractor", "restricted", "pairs"}));
  boxdim->add_option("--base", box_base, "restricted target: random | sequence JSON file");
  add_gaps(boxdim, box_run);
  boxdim->add_option("--count", box_run.count, "samples");
  boxdim->add_option("--depth", box_run.depth, "coding depth");
  add_ladder(boxdim, box_run);
  add_format(boxdim, box_run);
  add_common(boxdim, box_run);

  SystemOptions smp_sys;
  RunOptions smp_run;
  smp_run.count = 1000;
  smp_run.format = "csv";
  std::string smp_target = "attractor";
  std::string smp_base = "random";
  auto* sample = app.add_subcommand("sample", "write sampled points");
  add_system_options(sample, smp_sys, true);
  sample->add_option("--target", smp_target, "attractor | restricted | pairs")
      ->check(CLI::IsMember({"attractor", "restricted", "pairs"}));
  sample->add_option("--base", smp_base, "restricted target: random | sequence JSON file");
  add_gaps(sample, smp_run);
  sample->add_option("--count", smp_run.count, "samples");
  sample->add_option("--depth", smp_run.depth, "coding depth");
  add_format(sample, smp_run);
  add_common(sample, smp_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (dimension->parsed()) return cmd_dimension(dim_sys, dim_run);
    if (construct->parsed()) return cmd_construct(con, con_run);
    if (verify->parsed()) return cmd_verify(ver_sys, ver_run, ver);
    if (boxdim->parsed()) return cmd_boxdim(box_sys, box_run, box_target, box_base);
    if (sample->parsed()) return cmd_sample(smp_sys, smp_run, smp_target, smp_base);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.exit_code;
  } catch (const Json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}
