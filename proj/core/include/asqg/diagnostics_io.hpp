#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asqg/solver.hpp"

namespace asqg {

/// One self-describing line per record, fixed field order, 17 significant
/// digits (round-trips doubles bitwise).
std::string format_record(const DiagnosticsRecord& r);
DiagnosticsRecord parse_record(const std::string& line);

std::string diagnostics_header(const RunResult& result);

/// Header line followed by one line per record.
void emit_diagnostics(const RunResult& result, std::ostream& out);

}  // namespace asqg
