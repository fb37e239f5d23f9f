#ifndef HK_REPORT_HPP
#define HK_REPORT_HPP

#include "hk/cells.hpp"
#include "hk/ehrhart.hpp"
#include "hk/spec_io.hpp"

namespace hk {

// "hk <version>"; part of the cache key so reports from older builds never
// get replayed.
std::string tool_version();

std::string sha256_hex(const std::string& bytes);

// Canonical JSON shapes.
Json qp_to_json(const QuasiPolynomial& qp);
Json hk_form_to_json(const HKFunctionForm& f);

// Runs the spec's task list and assembles the report: tool version, input
// echo, content hash, per-task results, per-task wall time. Everything
// except timing_ms is a pure function of the spec and the tool version.
Json run_tasks(const ProblemSpec& spec);

// Content hash of canonical spec + tool version; names the cache entry and
// is echoed in the report as input_sha256.
std::string spec_content_hash(const ProblemSpec& spec);

// HK_CACHE_DIR, else XDG_CACHE_HOME/hk, else HOME/.cache/hk, else
// ./.hk-cache.
std::string default_cache_dir();

// Report bytes as written to --out / the cache: 2-space indent plus a
// trailing newline.
std::string report_bytes(const Json& report);

// Fixed-layout "path = value" text rendering for --format table.
std::string report_table(const Json& report);

}  // namespace hk

#endif
