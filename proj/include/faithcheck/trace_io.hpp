#pragma once

#include <iosfwd>
#include <string>

#include "faithcheck/trace.hpp"

namespace faithcheck {

enum class TraceFormat { Jsonl, Csv };

TraceFormat parse_trace_format(const std::string& name);

// Guesses from the file extension (.csv -> Csv, otherwise Jsonl).
TraceFormat format_for_path(const std::string& path);

// JSON lines: an optional header object {"schema":[...],"provenance":{...}}
// followed by one record object per line. Files without a header get a
// synthesized schema f0..f{d-1}. Carries every payload kind losslessly.
//
// CSV is the keyed format: header "id,label,explanation_key[,f_<name>...]",
// records become opaque payloads. Categorical cells are always quoted;
// unquoted feature cells must parse as numbers.
Trace load_trace(const std::string& path, TraceFormat format);
Trace load_trace(std::istream& in, TraceFormat format, const std::string& origin = "<stream>");

void write_trace(const Trace& trace, const std::string& path, TraceFormat format);
void write_trace(const Trace& trace, std::ostream& out, TraceFormat format);

}  // namespace faithcheck
