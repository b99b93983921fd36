// Copyright 2026 The qmask Authors
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
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "qmask/verify.hpp"

namespace qmask {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

void require_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) schema_error(where, std::string("missing field '") + key + "'");
  }
  for (const auto& item : j.items()) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return item.key() == k; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char* k) { return item.key() == k; });
    if (!known) schema_error(where, "unknown field '" + item.key() + "'");
  }
}

template <class T>
T get_field(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    schema_error(where + "." + key, "wrong type");
  }
}

json input_to_json(const InputDescriptor& input) {
  return std::visit(
      overloaded{
          [](const BellLabel& b) { return json{{"kind", "bell"}, {"lambda", b.lambda}, {"a", b.a}}; },
          [](const CatLabel& c) { return json{{"kind", "cat"}, {"bits", c.bits}, {"lambda", c.lambda}}; },
          [](const MaxEntLabel& m) { return json{{"kind", "maxent"}, {"u", m.u}}; },
          [](const ModiQubitInput& q) { return json{{"kind", "modi_qubit"}, {"l", q.l}}; },
          [](const ModiQuditInput& q) {
            return json{{"kind", "modi_qudit"}, {"eta", q.input.eta}, {"theta", q.input.theta}};
          },
          [](const LiInput& li) {
            json alpha = json::array();
            for (const Complex& a : li.input.alpha) alpha.push_back({a.real(), a.imag()});
            return json{{"kind", "li"}, {"alpha", alpha}};
          },
          [](const ProductInput& p) { return json{{"kind", "product"}, {"digits", p.digits}}; },
      },
      input);
}

InputDescriptor input_from_json(const json& j, int level, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) schema_error(where, "input needs a 'kind'");
  const std::string kind = get_field<std::string>(j, "kind", where);
  if (kind == "bell") {
    require_keys(j, where, {"kind", "lambda", "a"});
    return BellLabel{get_field<int>(j, "lambda", where), get_field<int>(j, "a", where)};
  }
  if (kind == "cat") {
    require_keys(j, where, {"kind", "bits", "lambda"});
    return CatLabel{get_field<std::vector<int>>(j, "bits", where), get_field<int>(j, "lambda", where)};
  }
  if (kind == "maxent") {
    require_keys(j, where, {"kind", "u"});
    return MaxEntLabel(level, get_field<std::vector<int>>(j, "u", where));
  }
  if (kind == "modi_qubit") {
    require_keys(j, where, {"kind", "l"});
    return ModiQubitInput{get_field<int>(j, "l", where)};
  }
  if (kind == "modi_qudit") {
    require_keys(j, where, {"kind", "eta", "theta"});
    PhaseAmplitudeInput in{get_field<std::vector<double>>(j, "eta", where),
                           get_field<std::vector<double>>(j, "theta", where)};
    return ModiQuditInput{std::move(in)};
  }
  if (kind == "li") {
    require_keys(j, where, {"kind", "alpha"});
    QuditAmplitudes in;
    for (const auto& pair : get_field<std::vector<std::vector<double>>>(j, "alpha", where)) {
      if (pair.size() != 2) schema_error(where + ".alpha", "entries are [re, im] pairs");
      in.alpha.emplace_back(pair[0], pair[1]);
    }
    return LiInput{std::move(in)};
  }
  if (kind == "product") {
    require_keys(j, where, {"kind", "digits"});
    return ProductInput{get_field<std::vector<int>>(j, "digits", where)};
  }
  schema_error(where, "unknown input kind '" + kind + "'");
}

std::vector<double> random_sphere(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(dim));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : v) {
      x = normal(rng);
      norm += x * x;
    }
  } while (norm < 1e-12);
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace

PhaseAmplitudeInput random_phase_amplitude(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  PhaseAmplitudeInput in;
  for (double x : random_sphere(rng, d)) in.eta.push_back(std::abs(x));
  for (int l = 0; l < d; ++l) in.theta.push_back(angle(rng));
  return in;
}

QuditAmplitudes random_amplitudes(std::mt19937_64& rng, int d) {
  const auto v = random_sphere(rng, 2 * d);
  QuditAmplitudes in;
  for (int k = 0; k < d; ++k) in.alpha.emplace_back(v[static_cast<std::size_t>(2 * k)], v[static_cast<std::size_t>(2 * k + 1)]);
  return in;
}

json scenario_to_json(const ScenarioSpec& spec) {
  const SwapScenario& s = spec.scenario;
  json inputs = json::array();
  for (const auto& in : s.inputs) inputs.push_back(input_to_json(in));
  json j{{"name", s.name},
         {"level", s.level},
         {"predictor", to_string(spec.predictor)},
         {"inputs", inputs},
         {"measured", std::vector<int>(s.measured.begin(), s.measured.end())},
         {"basis", to_string(s.basis)}};
  if (!s.measured_order.empty()) j["measured_order"] = s.measured_order;
  if (spec.tolerance) j["tolerance"] = *spec.tolerance;
  return j;
}

ScenarioSpec scenario_from_json(const json& j, const std::string& where) {
  require_keys(j, where, {"name", "level", "predictor", "inputs", "measured", "basis"},
               {"measured_order", "tolerance", "format"});
  ScenarioSpec spec;
  SwapScenario& s = spec.scenario;
  try {
    s.name = get_field<std::string>(j, "name", where);
    s.level = get_field<int>(j, "level", where);
    if (s.level < 2) schema_error(where + ".level", "must be at least 2");
    spec.predictor = parse_predictor(get_field<std::string>(j, "predictor", where));
    const json& inputs = j.at("inputs");
    if (!inputs.is_array() || inputs.empty()) schema_error(where + ".inputs", "expected a non-empty array");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      s.inputs.push_back(input_from_json(inputs[i], s.level, where + ".inputs[" + std::to_string(i) + "]"));
    }
    s.measured = ParticleSet(get_field<std::vector<int>>(j, "measured", where));
    if (j.contains("measured_order")) s.measured_order = get_field<std::vector<int>>(j, "measured_order", where);
    s.basis = parse_basis_kind(get_field<std::string>(j, "basis", where));
    if (j.contains("tolerance")) {
      spec.tolerance = get_field<double>(j, "tolerance", where);
      if (!(*spec.tolerance > 0.0)) schema_error(where + ".tolerance", "must be positive");
    }
    s.validate();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    schema_error(where, e.what());
  }
  return spec;
}

std::string dump_scenarios(const std::vector<ScenarioSpec>& specs) {
  json scenarios = json::array();
  for (const auto& spec : specs) scenarios.push_back(scenario_to_json(spec));
  return json{{"format", kScenarioFormat}, {"scenarios", scenarios}}.dump(2) + "\n";
}

std::vector<ScenarioSpec> parse_scenarios(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // The message carries "line L, column C".
    throw Error(ErrorKind::Schema, source + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("format")) schema_error(source, "missing top-level 'format'");
  if (j.at("format") != kScenarioFormat) {
    schema_error(source, "unsupported format " + j.at("format").dump() + ", expected \"" + kScenarioFormat + "\"");
  }
  std::vector<ScenarioSpec> specs;
  if (j.contains("scenarios")) {
    require_keys(j, source, {"format", "scenarios"});
    if (!j.at("scenarios").is_array()) schema_error(source + ".scenarios", "expected an array");
    for (std::size_t i = 0; i < j.at("scenarios").size(); ++i) {
      specs.push_back(scenario_from_json(j.at("scenarios")[i], source + ": scenarios[" + std::to_string(i) + "]"));
    }
  } else {
    specs.push_back(scenario_from_json(j, source));
  }
  return specs;
}

std::vector<ScenarioSpec> load_scenarios(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<ScenarioSpec> specs;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::BadInput, "cannot read " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto part = parse_scenarios(buffer.str(), file.string());
    specs.insert(specs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return specs;
}

std::vector<int> Bounds::effective_levels() const {
  if (!levels.empty()) return levels;
  std::vector<int> out;
  for (int d = 2; d <= d_max; ++d) out.push_back(d);
  return out;
}

std::vector<std::string> scenario_families() {
  return {"bell-bell", "cat-swap", "karimipour", "masked-ghz", "masked-qudit", "li-masked"};
}

namespace {

std::string bits_string(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) out += static_cast<char>('0' + b);
  return out;
}

bool within_cap(int level, int particles) {
  try {
    checked_dimension(level, particles);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ScenarioSpec cat_spec(const std::vector<CatLabel>& cats, const std::vector<int>& k) {
  SwapScenario s = cat_swap_scenario(cats, k);
  std::ostringstream name;
  name << "cat-swap/";
  for (std::size_t r = 0; r < cats.size(); ++r) {
    name << (r ? "," : "") << bits_string(cats[r].bits) << (cats[r].lambda ? "-" : "+") << "k" << k[r];
  }
  s.name = name.str();
  return {std::move(s), Predictor::cat_swap, std::nullopt};
}

void enumerate_cat_pairs(std::vector<ScenarioSpec>& out, int m_max) {
  for (int m1 = 2; m1 <= m_max; ++m1) {
    for (int m2 = 2; m2 <= m_max; ++m2) {
      for (unsigned a1 = 0; a1 < (1u << m1); ++a1) {
        for (unsigned a2 = 0; a2 < (1u << m2); ++a2) {
          for (int l1 = 0; l1 < 2; ++l1) {
            for (int l2 = 0; l2 < 2; ++l2) {
              for (int k1 = 1; k1 <= m1; ++k1) {
                for (int k2 = 1; k2 <= m2; ++k2) {
                  if (k1 == m1 && k2 == m2) continue;
                  const CatLabel c1{index_to_digits(a1, 2, m1), l1};
                  const CatLabel c2{index_to_digits(a2, 2, m2), l2};
                  out.push_back(cat_spec({c1, c2}, {k1, k2}));
                }
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<ScenarioSpec> enumerate_scenarios(const std::string& family, const Bounds& bounds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ScenarioSpec> out;
  const auto levels = bounds.effective_levels();
  for (int d : levels) {
    if (d < 2) throw Error(ErrorKind::BadInput, "levels must be at least 2");
  }
  if (bounds.n_max < 2) throw Error(ErrorKind::BadInput, "n-max must be at least 2");

  if (family == "bell-bell") {
    for (int i = 0; i < 16; ++i) {
      const BellLabel first{(i >> 3) & 1, (i >> 2) & 1};
      const BellLabel second{(i >> 1) & 1, i & 1};
      SwapScenario s = bell_bell_scenario(first, second);
      s.name = "bell-bell/l" + std::to_string(first.lambda) + "a" + std::to_string(first.a) + ",l" +
               std::to_string(second.lambda) + "a" + std::to_string(second.a);
      out.push_back({std::move(s), Predictor::bell_bell, std::nullopt});
    }
  } else if (family == "cat-swap") {
    if (bounds.m_max < 2) throw Error(ErrorKind::BadInput, "m-max must be at least 2");
    if (!within_cap(2, bounds.n_max * bounds.m_max)) {
      throw Error(ErrorKind::DimensionTooLarge, "n-max * m-max qubits exceed the dimension cap");
    }
    enumerate_cat_pairs(out, bounds.m_max);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> size(2, bounds.m_max);
    for (int n = 3; n <= bounds.n_max; ++n) {
      for (int sample = 0; sample < bounds.count; ++sample) {
        std::vector<CatLabel> cats;
        std::vector<int> k;
        int unmeasured = 0;
        for (int r = 0; r < n; ++r) {
          CatLabel c;
          const int m = size(rng);
          for (int i = 0; i < m; ++i) c.bits.push_back(bit(rng));
          c.lambda = bit(rng);
          std::uniform_int_distribution<int> kdist(1, m);
          k.push_back(kdist(rng));
          unmeasured += m - k.back();
          cats.push_back(std::move(c));
        }
        if (unmeasured == 0) k.back() -= 1;
        out.push_back(cat_spec(cats, k));
      }
    }
  } else if (family == "karimipour") {
    for (int d : levels) {
      for (int m = 2; m <= bounds.m_max; ++m) {
        if (!within_cap(d, m + 2)) throw Error(ErrorKind::DimensionTooLarge, "karimipour bounds exceed the cap");
        std::uniform_int_distribution<int> digit(0, d - 1);
        std::uniform_int_distribution<int> position(2, m);
        for (int sample = 0; sample < bounds.count; ++sample) {
          std::vector<int> u(static_cast<std::size_t>(m));
          for (int& x : u) x = digit(rng);
          const MaxEntLabel cat_label(d, u);
          const MaxEntLabel pair(d, {digit(rng), digit(rng)});
          const int k = position(rng);
          for (Predictor p : {Predictor::cat_bell_karimipour, Predictor::cat_bell_clear}) {
            SwapScenario s = cat_bell_scenario(cat_label, pair, k);
            s.name = "karimipour/d" + std::to_string(d) + "/" + cat_label.to_string() + "x" + pair.to_string() +
                     "/k" + std::to_string(k) + "/" + to_string(p);
            out.push_back({std::move(s), p, std::nullopt});
          }
        }
      }
    }
  } else if (family == "masked-ghz") {
    if (!within_cap(2, 2 * bounds.n_max)) throw Error(ErrorKind::DimensionTooLarge, "n-max exceeds the cap");
    for (int n = 2; n <= bounds.n_max; ++n) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const auto lambdas = index_to_digits(mask, 2, n);
        SwapScenario s = masked_ghz_scenario(lambdas);
        s.name = "masked-ghz/" + bits_string(lambdas);
        out.push_back({std::move(s), Predictor::masked_ghz, std::nullopt});
      }
    }
  } else if (family == "masked-qudit") {
    for (int d : levels) {
      for (int n = 2; n <= bounds.n_max; ++n) {
        if (!within_cap(d, 2 * n)) continue;
        for (int sample = 0; sample < bounds.count; ++sample) {
          std::vector<PhaseAmplitudeInput> inputs;
          for (int r = 0; r < n; ++r) inputs.push_back(random_phase_amplitude(rng, d));
          SwapScenario s = masked_qudit_scenario(inputs);
          s.name = "masked-qudit/d" + std::to_string(d) + "/n" + std::to_string(n) + "/#" + std::to_string(sample);
          out.push_back({std::move(s), Predictor::masked_qudit, std::nullopt});
        }
      }
    }
  } else if (family == "li-masked") {
    for (int d : levels) {
      for (int n = 2; n <= bounds.n_max; ++n) {
        if (!within_cap(d, 2 * d * n)) continue;
        for (int sample = 0; sample < bounds.count; ++sample) {
          std::vector<QuditAmplitudes> inputs;
          for (int r = 0; r < n; ++r) inputs.push_back(random_amplitudes(rng, d));
          SwapScenario s = li_masked_scenario(inputs);
          s.name = "li-masked/d" + std::to_string(d) + "/n" + std::to_string(n) + "/#" + std::to_string(sample);
          out.push_back({std::move(s), Predictor::li_masked, std::nullopt});
        }
      }
    }
  } else {
    throw Error(ErrorKind::BadInput, "unknown scenario family '" + family + "'");
  }
  return out;
}

}  // namespace qmask
