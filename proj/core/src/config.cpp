#include "hybridom/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "hybridom/errors.hpp"

namespace hybridom {
namespace {

struct KeySlot {
  const char* name;
  std::optional<double> ParamLayer::*field;
  bool strictly_positive;
};

constexpr KeySlot kSlots[] = {
    {"C0", &ParamLayer::C0, false},
    {"C1", &ParamLayer::C1, false},
    {"xi_m", &ParamLayer::xi_m, false},
    {"xi_d", &ParamLayer::xi_d, false},
    {"xi_m_ratio", &ParamLayer::xi_m_ratio, false},
    {"xi_d_ratio", &ParamLayer::xi_d_ratio, false},
    {"kappa", &ParamLayer::kappa, true},
    {"gamma_m", &ParamLayer::gamma_m, true},
    {"gamma_d", &ParamLayer::gamma_d, true},
    {"n_a", &ParamLayer::n_a, false},
    {"n_m", &ParamLayer::n_m, false},
    {"n_d", &ParamLayer::n_d, false},
};

const KeySlot* find_slot(std::string_view key) {
  for (const KeySlot& s : kSlots)
    if (key == s.name) return &s;
  return nullptr;
}

// --- YAML helpers --------------------------------------------------------------------

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
    const YAML::Mark m = at.Mark();
    if (m.is_null()) throw ConfigError(what, origin_);
    throw ConfigError(what, origin_, m.line + 1, m.column + 1);
  }

  void require_map(const YAML::Node& n, const std::string& what) const {
    if (!n.IsMap()) fail(n, what + " must be a mapping");
  }

  double number(const YAML::Node& n, const std::string& key) const {
    if (!n.IsScalar()) fail(n, key + ": expected a number");
    double v = 0.0;
    try {
      v = n.as<double>();
    } catch (const YAML::Exception&) {
      fail(n, key + ": expected a number, got '" + n.Scalar() + "'");
    }
    if (!std::isfinite(v)) fail(n, key + ": must be finite");
    return v;
  }

  int integer(const YAML::Node& n, const std::string& key) const {
    if (!n.IsScalar()) fail(n, key + ": expected an integer");
    try {
      return n.as<int>();
    } catch (const YAML::Exception&) {
      fail(n, key + ": expected an integer, got '" + n.Scalar() + "'");
    }
  }

  std::string text(const YAML::Node& n, const std::string& key) const {
    if (!n.IsScalar()) fail(n, key + ": expected a string");
    return n.Scalar();
  }

  void check_value(const YAML::Node& at, const KeySlot& slot, double v) const {
    if (slot.strictly_positive ? !(v > 0.0) : !(v >= 0.0)) {
      fail(at, std::string(slot.name) + ": must be " + (slot.strictly_positive ? "> 0" : ">= 0") + ", got " + format_number(v));
    }
  }

  // Reads parameter keys of `n` into `layer`; `extra` lists keys handled by the caller.
  void param_map(const YAML::Node& n, ParamLayer& layer, const std::set<std::string>& extra) const {
    for (auto it = n.begin(); it != n.end(); ++it) {
      const std::string key = it->first.as<std::string>();
      if (extra.count(key)) continue;
      if (const KeySlot* slot = find_slot(key)) {
        const double v = number(it->second, key);
        check_value(it->second, *slot, v);
        layer.set(key, v);
      } else if (key == "xi_m_rule" || key == "xi_d_rule") {
        const std::string t = text(it->second, key);
        const auto rule = parse_xi_rule(t);
        if (!rule) fail(it->second, key + ": unknown rule '" + t + "'");
        const bool for_m = *rule != XiRule::MechSqueezeCaseII;
        if (for_m != (key == "xi_m_rule")) fail(it->second, key + ": rule '" + t + "' sets the other amplitude");
        ParamLayer l;
        (key == "xi_m_rule" ? l.xi_m_rule : l.xi_d_rule) = rule;
        layer.merge(l);
      } else {
        fail(it->first, "unknown key '" + key + "'");
      }
    }
  }

  ParamLayer physical(const YAML::Node& n) const {
    require_map(n, "physical");
    PhysicalParams p;
    std::set<std::string> seen;
    const std::pair<const char*, double PhysicalParams::*> fields[] = {
        {"kappa", &PhysicalParams::kappa},       {"gamma_m", &PhysicalParams::gamma_m},
        {"gamma_d", &PhysicalParams::gamma_d},   {"g", &PhysicalParams::g},
        {"G", &PhysicalParams::G},               {"lambda_m", &PhysicalParams::lambda_m},
        {"lambda_d", &PhysicalParams::lambda_d}, {"n_a", &PhysicalParams::n_a},
        {"n_m", &PhysicalParams::n_m},           {"n_d", &PhysicalParams::n_d},
    };
    for (auto it = n.begin(); it != n.end(); ++it) {
      const std::string key = it->first.as<std::string>();
      bool known = false;
      for (const auto& [name, field] : fields) {
        if (key != name) continue;
        known = true;
        const double v = number(it->second, key);
        const bool rate = key == "kappa" || key == "gamma_m" || key == "gamma_d";
        if (rate ? !(v > 0.0) : !(v >= 0.0)) {
          fail(it->second, key + ": must be " + (rate ? "> 0" : ">= 0") + ", got " + format_number(v));
        }
        p.*field = v;
        seen.insert(key);
      }
      if (!known) fail(it->first, "unknown key '" + key + "'");
    }
    for (const char* rate : {"kappa", "gamma_m", "gamma_d"}) {
      if (!seen.count(rate)) fail(n, std::string("physical: missing required key '") + rate + "'");
    }
    const DimensionlessParams d = derive_dimensionless(p);
    ParamLayer l;
    l.C0 = d.C0;
    l.C1 = d.C1;
    l.xi_m = d.xi_m;
    l.xi_d = d.xi_d;
    l.kappa = d.kappa;
    l.gamma_m = d.gamma_m;
    l.gamma_d = d.gamma_d;
    l.n_a = d.n_a;
    l.n_m = d.n_m;
    l.n_d = d.n_d;
    return l;
  }

  SweepAxis axis(const YAML::Node& n) const {
    require_map(n, "sweep");
    SweepAxis a;
    std::set<std::string> seen;
    YAML::Node name_node;
    for (auto it = n.begin(); it != n.end(); ++it) {
      const std::string key = it->first.as<std::string>();
      seen.insert(key);
      if (key == "axis") {
        a.name = text(it->second, "sweep.axis");
        name_node = it->second;
      } else if (key == "from") {
        a.from = number(it->second, "sweep.from");
      } else if (key == "to") {
        a.to = number(it->second, "sweep.to");
      } else if (key == "points") {
        a.points = integer(it->second, "sweep.points");
        if (a.points < 2) fail(it->second, "sweep.points: must be >= 2");
      } else if (key == "scale") {
        const std::string s = text(it->second, "sweep.scale");
        if (s == "linear") a.scale = AxisScale::Linear;
        else if (s == "log") a.scale = AxisScale::Log;
        else fail(it->second, "sweep.scale: expected 'linear' or 'log', got '" + s + "'");
      } else {
        fail(it->first, "unknown key 'sweep." + key + "'");
      }
    }
    for (const char* req : {"axis", "from", "to", "points"}) {
      if (!seen.count(req)) fail(n, std::string("sweep: missing required key '") + req + "'");
    }
    if (a.name != "omega") {
      const KeySlot* slot = find_slot(a.name);
      if (!slot) fail(name_node, "sweep.axis: unknown parameter '" + a.name + "'");
      check_value(n["from"], *slot, a.from);
      check_value(n["to"], *slot, a.to);
    }
    if (a.scale == AxisScale::Log && !(a.from > 0.0 && a.to > 0.0)) {
      fail(n, "sweep: log scale requires from > 0 and to > 0");
    }
    return a;
  }

 private:
  std::string origin_;
};

}  // namespace

std::string_view to_string(XiRule r) {
  switch (r) {
    case XiRule::MechSqueezeCaseI: return "mech_squeeze_case_i";
    case XiRule::MechSqueezeCaseII: return "mech_squeeze_case_ii";
    case XiRule::OpticalSqueezeMax: return "optical_squeeze_max";
  }
  return "?";
}

std::optional<XiRule> parse_xi_rule(std::string_view text) {
  for (XiRule r : {XiRule::MechSqueezeCaseI, XiRule::MechSqueezeCaseII, XiRule::OpticalSqueezeMax})
    if (text == to_string(r)) return r;
  return std::nullopt;
}

const std::vector<std::string>& numeric_param_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const KeySlot& s : kSlots) k.emplace_back(s.name);
    return k;
  }();
  return keys;
}

bool ParamLayer::set(std::string_view key, double value) {
  const KeySlot* slot = find_slot(key);
  if (!slot) return false;
  ParamLayer l;
  l.*(slot->field) = value;
  merge(l);
  return true;
}

void ParamLayer::merge(const ParamLayer& o) {
  if (o.xi_m || o.xi_m_ratio || o.xi_m_rule) {
    xi_m = o.xi_m;
    xi_m_ratio = o.xi_m_ratio;
    xi_m_rule = o.xi_m_rule;
  }
  if (o.xi_d || o.xi_d_ratio || o.xi_d_rule) {
    xi_d = o.xi_d;
    xi_d_ratio = o.xi_d_ratio;
    xi_d_rule = o.xi_d_rule;
  }
  for (const KeySlot& s : kSlots) {
    const std::string_view n = s.name;
    if (n.rfind("xi_", 0) == 0) continue;
    if (o.*(s.field)) this->*(s.field) = o.*(s.field);
  }
}

std::string ParamLayer::describe() const {
  std::string out;
  auto add = [&out](std::string_view k, const std::string& v) {
    if (!out.empty()) out += ", ";
    out.append(k);
    out += "=";
    out += v;
  };
  for (const KeySlot& s : kSlots) {
    if (this->*(s.field)) add(s.name, format_number(*(this->*(s.field))));
  }
  if (xi_m_rule) add("xi_m_rule", std::string(to_string(*xi_m_rule)));
  if (xi_d_rule) add("xi_d_rule", std::string(to_string(*xi_d_rule)));
  return out;
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    if (scale == AxisScale::Log) {
      v[static_cast<std::size_t>(i)] = std::exp(std::log(from) + t * (std::log(to) - std::log(from)));
    } else {
      v[static_cast<std::size_t>(i)] = from + t * (to - from);
    }
  }
  // Pin the endpoints exactly.
  v.front() = from;
  v.back() = to;
  return v;
}

namespace {

constexpr std::pair<ObservableKind, const char*> kKinds[] = {
    {ObservableKind::Gain, "gain"},
    {ObservableKind::AddedNoise, "added_noise"},
    {ObservableKind::AmplifiedSpectrum, "amplified_spectrum"},
    {ObservableKind::Squeezing, "squeezing"},
    {ObservableKind::Purity, "purity"},
    {ObservableKind::CrossCorrelation, "cross_correlation"},
    {ObservableKind::Bandwidth, "bandwidth"},
    {ObservableKind::Stability, "stability"},
};

}  // namespace

std::string Observable::to_string() const {
  for (const auto& [k, name] : kKinds) {
    if (k != kind) continue;
    if (kind == ObservableKind::Stability) return name;
    return std::string(name) + ":" + std::string(hybridom::to_string(mode));
  }
  return "?";
}

std::optional<Observable> parse_observable(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  for (const auto& [k, name] : kKinds) {
    if (kind != name) continue;
    Observable o;
    o.kind = k;
    if (k == ObservableKind::Stability) {
      if (colon != std::string_view::npos) return std::nullopt;
      return o;
    }
    if (colon == std::string_view::npos) return std::nullopt;
    const auto mode = parse_subsystem(text.substr(colon + 1));
    if (!mode) return std::nullopt;
    o.mode = *mode;
    return o;
  }
  return std::nullopt;
}

SweepConfig parse_config(std::string_view text, const std::string& origin) {
  const Reader r(origin);
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.msg, origin, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) throw ConfigError("top level must be a mapping", origin);

  SweepConfig cfg;
  bool have_params = false;
  bool have_physical = false;
  bool have_observables = false;
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string key = it->first.as<std::string>();
    const YAML::Node& v = it->second;
    if (key == "name") {
      cfg.name = r.text(v, key);
    } else if (key == "description") {
      cfg.description = r.text(v, key);
    } else if (key == "params") {
      r.require_map(v, "params");
      r.param_map(v, cfg.base, {});
      have_params = true;
    } else if (key == "physical") {
      ParamLayer p = r.physical(v);
      p.merge(cfg.base);
      cfg.base = p;
      have_physical = true;
    } else if (key == "sweep") {
      cfg.axis = r.axis(v);
    } else if (key == "omega") {
      cfg.omega = r.number(v, key);
    } else if (key == "series") {
      if (!v.IsSequence()) r.fail(v, "series must be a list");
      std::set<std::string> labels;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const YAML::Node& s = v[i];
        r.require_map(s, "series entry");
        Series entry;
        if (s["label"]) entry.label = r.text(s["label"], "label");
        else entry.label = "s" + std::to_string(i + 1);
        if (entry.label.empty() || entry.label.find(':') != std::string::npos) {
          r.fail(s, "series label must be nonempty and contain no ':'");
        }
        if (!labels.insert(entry.label).second) r.fail(s, "duplicate series label '" + entry.label + "'");
        r.param_map(s, entry.params, {"label"});
        cfg.series.push_back(std::move(entry));
      }
      if (cfg.series.empty()) r.fail(v, "series: list is empty");
    } else if (key == "observables") {
      if (!v.IsSequence()) r.fail(v, "observables must be a list");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string t = r.text(v[i], "observables");
        const auto o = parse_observable(t);
        if (!o) r.fail(v[i], "observables: unknown observable '" + t + "'");
        cfg.observables.push_back(*o);
      }
      have_observables = true;
    } else {
      r.fail(it->first, "unknown key '" + key + "'");
    }
  }
  if (have_params && have_physical) throw ConfigError("use either 'params' or 'physical', not both", origin);
  if (!have_observables || cfg.observables.empty()) {
    throw ConfigError("observables: at least one observable is required", origin);
  }
  if (cfg.series.empty()) cfg.series.push_back(Series{});
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read error");
  return parse_config(ss.str(), path.string());
}

DimensionlessParams resolve(const ParamLayer& layer) {
  DimensionlessParams d;
  if (layer.C0) d.C0 = *layer.C0;
  if (layer.C1) d.C1 = *layer.C1;
  if (layer.kappa) d.kappa = *layer.kappa;
  if (layer.gamma_m) d.gamma_m = *layer.gamma_m;
  if (layer.gamma_d) d.gamma_d = *layer.gamma_d;
  if (layer.n_a) d.n_a = *layer.n_a;
  if (layer.n_m) d.n_m = *layer.n_m;
  if (layer.n_d) d.n_d = *layer.n_d;
  d.xi_m = layer.xi_m.value_or(0.0);
  d.xi_d = layer.xi_d.value_or(0.0);
  validate(d);

  if (layer.xi_d_rule) {
    // Only case (ii) targets xi_d.
    if (!(d.C0 > 1.0 && d.C1 > d.C0 - 1.0)) {
      throw InvalidParameter("xi_d_rule", "mech_squeeze_case_ii requires C0 > 1 and C1 > C0 - 1");
    }
    d.xi_d = (d.C1 + 1.0 - d.C0) / (d.C0 - 1.0);
  } else if (layer.xi_d_ratio) {
    d.xi_d = *layer.xi_d_ratio * collective_cooperativities(d).xi_d_max;
  }

  if (layer.xi_m_rule) {
    if (*layer.xi_m_rule == XiRule::MechSqueezeCaseI) {
      const double xm = 1.0 - d.C0 / (1.0 + d.C1);
      if (xm < 0.0) throw InvalidParameter("xi_m_rule", "mech_squeeze_case_i requires C0 <= 1 + C1");
      d.xi_m = xm;
    } else {
      if (!(d.C1 < 1.0) || d.C0 / (1.0 - d.C1) - 1.0 < 0.0) {
        throw InvalidParameter("xi_m_rule", "optical_squeeze_max requires C1 < 1 and C0 >= 1 - C1");
      }
      d.xi_m = d.C0 / (1.0 - d.C1) - 1.0;
    }
  } else if (layer.xi_m_ratio) {
    d.xi_m = *layer.xi_m_ratio * collective_cooperativities(d).xi_m_max;
  }
  validate(d);
  return d;
}

}  // namespace hybridom
