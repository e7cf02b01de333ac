// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace liyorke {

namespace {

Json number_or_label(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

void write_string(std::string& out, const std::string& s) {
  // nlohmann's own escaping, without its float formatting.
  out += Json(s).dump();
}

void write_value(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map: sorted
        if (!first) out += ",\n";
        first = false;
        out += inner;
        write_string(out, it.key());
        out += ": ";
        write_value(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& e : v) scalars = scalars && !e.is_structured();
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write_value(out, v[i], indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write_value(out, v[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (std::isfinite(x)) {
        out += format_double(x);
      } else {
        write_string(out, number_or_label(x).get<std::string>());
      }
      return;
    }
    default:
      out += v.dump();
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::Parse, std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::Parse, std::string("wrong type for '") + what + "'");
  }
}

std::vector<std::uint64_t> parse_integer_list(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return get_as<std::vector<std::uint64_t>>(parse_json_text(text), "values");
  }
  std::istringstream is(text);
  std::vector<std::uint64_t> values;
  std::string token;
  while (is >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorCode::Parse, "gap list entry '" + token + "' is not a non-negative integer");
    }
    values.push_back(std::stoull(token));
  }
  return values;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorCode::Parse, what + " must be a non-negative integer, got '" + text + "'");
  }
  return std::stoull(text);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_canonical(const Json& value) {
  std::string out;
  write_value(out, value, 0);
  out += "\n";
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_text_file(path)); }

Json to_json(const SymbolSequence& seq) {
  Json j;
  j["m"] = seq.alphabet_size();
  if (seq.side() == Side::One) {
    j["side"] = "one";
    j["digits"] = std::vector<Digit>(seq.digits().begin(), seq.digits().end());
  } else {
    j["side"] = "two";
    j["past"] = std::vector<Digit>(seq.past().begin(), seq.past().end());
    j["future"] = std::vector<Digit>(seq.digits().begin(), seq.digits().end());
  }
  return j;
}

SymbolSequence sequence_from_json(const Json& j) {
  const int m = get_as<int>(require(j, "m"), "m");
  const std::string side = j.contains("side") ? get_as<std::string>(j["side"], "side") : "one";
  if (side == "one") {
    return SymbolSequence::one_sided(m, get_as<std::vector<Digit>>(require(j, "digits"), "digits"));
  }
  if (side == "two") {
    return SymbolSequence::two_sided(m, get_as<std::vector<Digit>>(require(j, "past"), "past"),
                                     get_as<std::vector<Digit>>(require(j, "future"), "future"));
  }
  fail(ErrorCode::Parse, "side must be 'one' or 'two'");
}

Json to_json(const GapSequence& gaps) {
  Json j;
  switch (gaps.rule()) {
    case GapSequence::Rule::List:
      j["rule"] = "list";
      j["values"] = std::vector<std::uint64_t>(gaps.values().begin(), gaps.values().end());
      break;
    case GapSequence::Rule::Constant:
      j["rule"] = "constant";
      j["c"] = gaps.b();
      break;
    case GapSequence::Rule::Linear:
      j["rule"] = "linear";
      break;
    case GapSequence::Rule::Quadratic:
      j["rule"] = "quadratic";
      break;
    case GapSequence::Rule::Affine:
      j["rule"] = "affine";
      j["a"] = gaps.a();
      j["b"] = gaps.b();
      break;
  }
  return j;
}

GapSequence gaps_from_json(const Json& j) {
  const std::string rule = get_as<std::string>(require(j, "rule"), "rule");
  if (rule == "zero") return GapSequence::constant(0);
  if (rule == "constant") return GapSequence::constant(get_as<std::uint64_t>(require(j, "c"), "c"));
  if (rule == "linear") return GapSequence::linear();
  if (rule == "quadratic") return GapSequence::quadratic();
  if (rule == "affine") {
    return GapSequence::affine(get_as<std::uint64_t>(require(j, "a"), "a"),
                               get_as<std::uint64_t>(require(j, "b"), "b"));
  }
  if (rule == "list") {
    return GapSequence::list(get_as<std::vector<std::uint64_t>>(require(j, "values"), "values"));
  }
  fail(ErrorCode::Parse, "unknown gap rule '" + rule + "'");
}

GapSequence parse_gap_rule(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  if (!has_arg) {
    if (head == "zero") return GapSequence::constant(0);
    if (head == "linear") return GapSequence::linear();
    if (head == "quadratic") return GapSequence::quadratic();
  } else {
    if (head == "constant") return GapSequence::constant(parse_count(arg, "constant gap"));
    if (head == "affine") {
      const auto comma = arg.find(',');
      if (comma == std::string::npos) fail(ErrorCode::Parse, "affine gaps need 'affine:a,b'");
      return GapSequence::affine(parse_count(arg.substr(0, comma), "affine a"),
                                 parse_count(arg.substr(comma + 1), "affine b"));
    }
    if (head == "list") return GapSequence::list(parse_integer_list(read_text_file(arg)));
  }
  fail(ErrorCode::Parse, "unknown gap rule '" + text +
                             "' (zero, constant:c, linear, quadratic, affine:a,b, list:FILE)");
}

Json to_json(const PairSchedule& schedule) {
  Json blocks = Json::array();
  for (const Block& b : schedule.blocks) {
    blocks.push_back({{"start", b.start},
                      {"match_len", b.match_len},
                      {"mismatch_pos", b.mismatch_pos},
                      {"free_count", b.free_count}});
  }
  return {{"blocks", blocks}, {"span", schedule.span}};
}

Json to_json(const GapReport& report) {
  Json ratios = Json::array();
  for (double r : report.ratios) ratios.push_back(number_or_label(r));
  return {{"ratios", ratios},
          {"verdict", to_string(report.verdict)},
          {"limit", number_or_label(report.limit)},
          {"limit_label", report.limit_label}};
}

Json to_json(const IfsSystem& ifs) {
  Json box = Json::array();
  for (std::size_t k = 0; k < ifs.dim(); ++k) {
    box.push_back({ifs.domain().lo[k], ifs.domain().hi[k]});
  }
  Json maps = Json::array();
  for (const Similitude& s : ifs.maps()) {
    maps.push_back({{"ratio", s.ratio()},
                    {"orth", Vec(s.orth().begin(), s.orth().end())},
                    {"t", Vec(s.translation().begin(), s.translation().end())}});
  }
  return {{"w", ifs.dim()}, {"K", box}, {"maps", maps}};
}

IfsSystem ifs_from_json(const Json& j) {
  const Json& box = require(j, "K");
  if (!box.is_array() || box.empty()) fail(ErrorCode::Parse, "K must be a list of [lo, hi]");
  const std::size_t w = j.contains("w") ? get_as<std::size_t>(j["w"], "w") : box.size();
  if (w != box.size()) fail(ErrorCode::Parse, "w does not match the number of K intervals");
  Box domain;
  for (const auto& interval : box) {
    const auto lohi = get_as<std::vector<double>>(interval, "K");
    if (lohi.size() != 2 || !(lohi[0] < lohi[1])) {
      fail(ErrorCode::InvalidArgument, "each K interval must be [lo, hi] with lo < hi");
    }
    domain.lo.push_back(lohi[0]);
    domain.hi.push_back(lohi[1]);
  }
  const Json& list = require(j, "maps");
  if (!list.is_array() || list.empty()) fail(ErrorCode::Parse, "maps must be a non-empty list");
  std::vector<Similitude> maps;
  for (const auto& m : list) {
    Vec orth;
    if (m.contains("orth")) {
      orth = get_as<Vec>(m["orth"], "orth");
    } else {
      orth.assign(w * w, 0.0);
      for (std::size_t k = 0; k < w; ++k) orth[k * w + k] = 1.0;
    }
    Vec t = m.contains("t") ? get_as<Vec>(m["t"], "t") : Vec(w, 0.0);
    if (orth.size() != w * w || t.size() != w) {
      fail(ErrorCode::InvalidArgument, "map shape does not match w");
    }
    maps.emplace_back(get_as<double>(require(m, "ratio"), "ratio"), std::move(orth), std::move(t));
  }
  return IfsSystem(std::move(domain), std::move(maps));
}

Json to_json(const SystemSpec& spec) {
  Json j{{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
    case SystemKind::Tent:
      j["a"] = spec.a;
      break;
    case SystemKind::Baker:
    case SystemKind::Solenoid:
      j["beta1"] = spec.beta1;
      j["beta2"] = spec.beta2;
      break;
    case SystemKind::Horseshoe:
      j["beta"] = spec.beta;
      j["tau"] = spec.tau;
      break;
  }
  return j;
}

SystemSpec system_from_json(const Json& j) {
  const SystemKind kind = parse_system_kind(get_as<std::string>(require(j, "kind"), "kind"));
  auto num = [&](const char* key) { return get_as<double>(require(j, key), key); };
  switch (kind) {
    case SystemKind::Tent:
      return SystemSpec::tent(num("a"));
    case SystemKind::Baker:
      return SystemSpec::baker(num("beta1"), num("beta2"));
    case SystemKind::Horseshoe:
      return SystemSpec::horseshoe(num("beta"), num("tau"));
    case SystemKind::Solenoid:
      return SystemSpec::solenoid(num("beta1"), num("beta2"));
  }
  fail(ErrorCode::Parse, "unknown system");
}

Json to_json(const MoranSolution& solution) {
  return {{"dimension", solution.dimension}, {"residual", solution.residual}};
}

Json to_json(const ConjugacyReport& report) {
  return {{"trials", report.trials},
          {"max_defect", report.max_defect},
          {"max_excess", report.max_excess},
          {"violations", report.violations}};
}

Json to_json(const PointCloud& cloud) {
  Json points = Json::array();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    points.push_back(Vec(p.begin(), p.end()));
  }
  return {{"dim", cloud.dim}, {"points", points}};
}

std::string cloud_to_csv(const PointCloud& cloud) {
  std::string out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ',';
      out += format_double(p[k]);
    }
    out += '\n';
  }
  return out;
}

Json to_json(const BoxCountEstimate& est) {
  Json j{{"epsilons", est.epsilons},
         {"counts", est.counts},
         {"sample_count", est.sample_count},
         {"fitted", est.fitted}};
  if (est.fitted) {
    j["slope"] = est.slope;
    j["stderr"] = est.stderr_slope;
    j["fit_range"] = {est.fit_begin, est.fit_end};
  }
  return j;
}

std::string estimate_to_csv(const BoxCountEstimate& est) {
  std::string out = "neg_log_eps,log_count\n";
  for (std::size_t i = 0; i < est.epsilons.size(); ++i) {
    out += format_double(-std::log(est.epsilons[i]));
    out += ',';
    out += format_double(std::log(static_cast<double>(est.counts[i])));
    out += '\n';
  }
  return out;
}

Json to_json(const LiYorkeProfile& profile) {
  Json prox = Json::array();
  for (const auto& c : profile.proximity) {
    prox.push_back({{"block", c.block}, {"time", c.time}, {"upper", c.upper}});
  }
  Json sep = Json::array();
  for (const auto& c : profile.separation) {
    sep.push_back({{"block", c.block}, {"time", c.time}, {"lower", c.lower}});
  }
  return {{"proximity", prox}, {"separation", sep}, {"reference_scale", profile.reference_scale}};
}

Json to_json(const LiYorkeVerdict& verdict) {
  Json j{{"pass", verdict.pass}, {"failure", to_string(verdict.failure)}};
  if (!verdict.pass) {
    j["witness"] = {{"block", verdict.block},
                    {"time", verdict.time},
                    {"value", verdict.value},
                    {"limit", verdict.limit}};
  }
  return j;
}

}  // namespace liyorke
