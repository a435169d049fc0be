#include "asqg/diagnostics_io.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "asqg/config.hpp"

namespace asqg {
namespace {

constexpr std::array<const char*, 13> field_names = {
    "t",  "l2", "lp4",        "lp8",       "linf", "h1",    "h2",
    "diss_alpha", "diss_beta", "A",         "B",    "besov", "energy_residual"};

std::array<double, 13> field_values(const DiagnosticsRecord& r) {
  return {r.t, r.l2, r.lp4, r.lp8, r.linf, r.h1, r.h2,
          r.diss_alpha, r.diss_beta, r.A, r.B, r.besov, r.energy_residual};
}

}  // namespace

std::string format_record(const DiagnosticsRecord& r) {
  const auto vals = field_values(r);
  std::string out;
  char buf[64];
  for (size_t i = 0; i < vals.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%s=%.17g", i ? " " : "", field_names[i],
                  vals[i]);
    out += buf;
  }
  return out;
}

DiagnosticsRecord parse_record(const std::string& line) {
  std::istringstream in(line);
  std::array<double, 13> vals{};
  std::string tok;
  size_t i = 0;
  while (in >> tok) {
    if (i >= vals.size()) throw std::runtime_error("record has extra fields: " + line);
    const std::string want = std::string(field_names[i]) + "=";
    if (tok.rfind(want, 0) != 0) {
      throw std::runtime_error("expected field '" + std::string(field_names[i]) +
                               "', got: " + tok);
    }
    vals[i] = std::stod(tok.substr(want.size()));
    ++i;
  }
  if (i != vals.size()) throw std::runtime_error("record has missing fields: " + line);
  DiagnosticsRecord r;
  r.t = vals[0]; r.l2 = vals[1]; r.lp4 = vals[2]; r.lp8 = vals[3];
  r.linf = vals[4]; r.h1 = vals[5]; r.h2 = vals[6];
  r.diss_alpha = vals[7]; r.diss_beta = vals[8];
  r.A = vals[9]; r.B = vals[10]; r.besov = vals[11];
  r.energy_residual = vals[12];
  return r;
}

std::string diagnostics_header(const RunResult& result) {
  std::ostringstream out;
  out << "# " << config_echo(result.config);
  if (result.admissibility_applicable) {
    out << " admissible=" << (result.admissibility.admissible ? "yes" : "no")
        << " regime=" << regime_name(result.admissibility.regime);
  } else {
    out << " admissible=n/a regime=n/a";
  }
  if (result.blew_up) out << " blew_up_at=" << result.blow_up_time;
  return out.str();
}

void emit_diagnostics(const RunResult& result, std::ostream& out) {
  out << diagnostics_header(result) << "\n";
  for (const auto& r : result.records) {
    out << format_record(r) << "\n";
    if (!out) {
      out.clear();
      out << "# OUTPUT TRUNCATED: write failure\n";
      throw std::runtime_error("diagnostics write failure");
    }
  }
  out.flush();
}

}  // namespace asqg
