#include "asqg/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace asqg {
namespace {

double parse_double(const std::string& s, int line, const std::string& key) {
  double v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError(line, key, "value for '" + key + "' is not a number: " + s);
  }
  return v;
}

long parse_long(const std::string& s, int line, const std::string& key) {
  long v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError(line, key, "value for '" + key + "' is not an integer: " + s);
  }
  return v;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SimulationConfig parse_config(const std::string& text) {
  static const std::set<std::string> known = {
      "grid", "alpha", "beta", "mu", "nu", "velocity_law", "t_end",
      "dt", "cfl_factor", "initial_condition", "diagnostics_every", "seed"};
  SimulationConfig c;
  std::set<std::string> seen;
  std::optional<std::uint64_t> seed_override;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(lineno, "", "expected key=value, got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!known.count(key)) {
      throw ConfigError(lineno, key, "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(lineno, key, "duplicate key '" + key + "'");
    }
    if (key == "grid") {
      auto x = val.find('x');
      if (x == std::string::npos) {
        throw ConfigError(lineno, key, "grid must look like 64x64");
      }
      c.n1 = int(parse_long(trim(val.substr(0, x)), lineno, key));
      c.n2 = int(parse_long(trim(val.substr(x + 1)), lineno, key));
    } else if (key == "alpha") {
      c.alpha = parse_double(val, lineno, key);
    } else if (key == "beta") {
      c.beta = parse_double(val, lineno, key);
    } else if (key == "mu") {
      c.mu = parse_double(val, lineno, key);
    } else if (key == "nu") {
      c.nu = parse_double(val, lineno, key);
    } else if (key == "velocity_law") {
      if (val == "sqg") c.velocity_law = VelocityLaw::Sqg;
      else if (val == "pm") c.velocity_law = VelocityLaw::Pm;
      else throw ConfigError(lineno, key, "velocity_law must be sqg or pm");
    } else if (key == "t_end") {
      c.t_end = parse_double(val, lineno, key);
    } else if (key == "dt") {
      c.dt = parse_double(val, lineno, key);
    } else if (key == "cfl_factor") {
      c.cfl_factor = parse_double(val, lineno, key);
    } else if (key == "diagnostics_every") {
      c.diagnostics_every = int(parse_long(val, lineno, key));
    } else if (key == "seed") {
      seed_override = std::uint64_t(parse_long(val, lineno, key));
    } else {  // initial_condition
      auto tk = tokens(val);
      if (tk.empty()) throw ConfigError(lineno, key, "empty initial_condition");
      if (tk[0] == "plane_wave") {
        if (tk.size() != 4) {
          throw ConfigError(lineno, key,
                            "expected: initial_condition = plane_wave <k1> <k2> <amplitude>");
        }
        c.initial_condition.kind = InitialCondition::Kind::PlaneWave;
        c.initial_condition.plane_wave = {
            int(parse_long(tk[1], lineno, key)),
            int(parse_long(tk[2], lineno, key)),
            parse_double(tk[3], lineno, key)};
      } else if (tk[0] == "random") {
        if (tk.size() != 4) {
          throw ConfigError(lineno, key,
                            "expected: initial_condition = random <seed> <kmax> <amplitude>");
        }
        c.initial_condition.kind = InitialCondition::Kind::Random;
        c.initial_condition.random.seed = std::uint64_t(parse_long(tk[1], lineno, key));
        c.initial_condition.random.kmax = int(parse_long(tk[2], lineno, key));
        c.initial_condition.random.amplitude = parse_double(tk[3], lineno, key);
      } else if (tk[0] == "from_checkpoint") {
        if (tk.size() != 2) {
          throw ConfigError(lineno, key,
                            "expected: initial_condition = from_checkpoint <path>");
        }
        c.initial_condition.kind = InitialCondition::Kind::Checkpoint;
        c.initial_condition.checkpoint.path = tk[1];
      } else {
        throw ConfigError(lineno, key, "unknown initial_condition kind: " + tk[0]);
      }
    }
  }

  for (const char* req : {"grid", "alpha", "beta", "t_end", "initial_condition"}) {
    if (!seen.count(req)) {
      throw ConfigError(0, req, std::string("missing required key '") + req + "'");
    }
  }
  if (seed_override &&
      c.initial_condition.kind == InitialCondition::Kind::Random) {
    c.initial_condition.random.seed = *seed_override;
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(0, "", e.what());
  }
  return c;
}

std::string config_echo(const SimulationConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "grid=" << c.n1 << "x" << c.n2 << " alpha=" << c.alpha
      << " beta=" << c.beta << " mu=" << c.mu << " nu=" << c.nu
      << " velocity_law=" << (c.velocity_law == VelocityLaw::Sqg ? "sqg" : "pm")
      << " t_end=" << c.t_end;
  if (c.dt) out << " dt=" << *c.dt;
  if (c.cfl_factor) out << " cfl_factor=" << *c.cfl_factor;
  out << " initial_condition=";
  switch (c.initial_condition.kind) {
    case InitialCondition::Kind::PlaneWave:
      out << "plane_wave " << c.initial_condition.plane_wave.k1 << " "
          << c.initial_condition.plane_wave.k2 << " "
          << c.initial_condition.plane_wave.amplitude;
      break;
    case InitialCondition::Kind::Random:
      out << "random " << c.initial_condition.random.seed << " "
          << c.initial_condition.random.kmax << " "
          << c.initial_condition.random.amplitude;
      break;
    case InitialCondition::Kind::Checkpoint:
      out << "from_checkpoint " << c.initial_condition.checkpoint.path;
      break;
  }
  out << " diagnostics_every=" << c.diagnostics_every;
  return out.str();
}

}  // namespace asqg
