#pragma once

// Exhaustive desk-scale enumeration: every canonical tangle triple with
// q_i <= q_bound, deduplicated across mirror images, classified row by
// row.  The parallel kernel partitions rows across OpenMP threads and
// writes by index, so its output is byte-identical to the serial
// reference at any thread count.

#include <array>
#include <cstddef>
#include <vector>

#include "montesinos/classifier.hpp"
#include "montesinos/tangle.hpp"

namespace montesinos {

enum class OutputFormat { JSON, CSV, Table };

struct RunConfig {
    int q_bound = 5;
    OutputFormat format = OutputFormat::Table;
    int parallelism = 1;       // >= 1
    bool include_links = false;  // report-only rows for multi-component closures
};

// All canonical tangles (2|p| <= q, gcd = 1, positive tie at q = 2) with
// q <= q_bound, sorted by (q, p).
std::vector<RationalTangle> canonical_tangles(int q_bound);

// Canonical sorted triples with e0 = 0, one representative per mirror
// orbit.  Links are included; callers filter on component count.
std::vector<MontesinosKnot> canonical_orbit_reps(int q_bound);

struct EnumRow {
    MontesinosKnot knot;
    int components = 1;
    std::optional<Classification> classification;  // absent for links
};

struct EnumSummary {
    std::size_t total = 0;
    std::size_t knots = 0;
    std::size_t links = 0;
    std::size_t certified_preset = 0;
    std::size_t certified_solver = 0;
    std::size_t family = 0;
    std::size_t anomaly = 0;
    std::array<std::size_t, 5> family_counts{};
};

struct EnumResult {
    std::vector<EnumRow> rows;
    EnumSummary summary;
};

// Serial reference kernel.
EnumResult enumerate_and_classify_serial(const RunConfig& config);

// Dispatches to the OpenMP kernel when config.parallelism > 1 (falls back
// to the serial path when OpenMP is unavailable).  Row order is canonical
// and independent of parallelism.
EnumResult enumerate_and_classify(const RunConfig& config);

} // namespace montesinos
