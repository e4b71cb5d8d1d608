#pragma once

namespace faithcheck {

// Kernel selection. Serial variants are straightforward reference loops kept
// for testing; Parallel variants use OpenMP when compiled in and fall back to
// the same loops otherwise. Both produce bit-identical results: parallel
// passes write per-element slots or merge integer counts, and every floating
// point reduction is performed serially in index order.
enum class ExecMode { Serial, Parallel };

inline constexpr ExecMode kDefaultExec = ExecMode::Parallel;

}  // namespace faithcheck
