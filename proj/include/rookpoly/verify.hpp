#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rookpoly/enumerate.hpp"
#include "rookpoly/grid.hpp"
#include "rookpoly/polynomial.hpp"

namespace rookpoly {

// One verified shape: both sides of the correspondence, the structural flags,
// and the outcome of the comparison.
struct VerificationRecord {
    std::string canonical_key;
    int rank = 0;
    ShapeKind kind = ShapeKind::collection;
    IntPolynomial switching_polynomial;
    IntPolynomial h_poly;
    int rook_number = 0;
    int deg_h = 0;
    bool simple = false;
    bool sharp = false;
    bool sharp_prime = false;
    bool match_poly = false;
    bool match_reg = false;
    std::int64_t elapsed_ms = 0;

    std::string tsv() const;
};

struct VerifySummary {
    std::vector<VerificationRecord> records;       // sorted by canonical form
    std::vector<std::string> counterexamples;      // keys with a failed comparison
    std::vector<std::string> timeouts;             // keys that exceeded the budget
    std::vector<std::string> engine_mismatches;    // internal cross-check failures
    std::uint64_t matches = 0;

    bool ok() const {
        return counterexamples.empty() && timeouts.empty() && engine_mismatches.empty();
    }
};

struct VerifyOptions {
    int jobs = 1;
    std::chrono::milliseconds per_shape_timeout{60'000};
    // When set, shapes are read from this dataset file instead of being
    // enumerated.
    std::string dataset_path;
    // When set, progress is checkpointed here and a previous run is resumed.
    std::string checkpoint_path;
    // Cross-check the recursion engine against the series pipeline on
    // convex-component shapes, and multiplicativity on multi-component ones.
    bool cross_check = true;
};

// Enumerates (or loads) every shape of the given kind and rank, computes the
// switching rook polynomial and the h-polynomial for each, and compares them
// coefficientwise along with rook number vs deg h. Deterministic: the record
// set does not depend on the job count.
VerifySummary test_conjecture(ShapeKind kind, int rank, const VerifyOptions& options = {});

VerificationRecord verify_shape(const CellCollection& p, ShapeKind kind, bool cross_check,
                                std::vector<std::string>* mismatch_sink = nullptr);

// Dataset files: one brace-encoded collection per line, UTF-8.
void write_dataset(const std::vector<CellCollection>& shapes, const std::string& path);
std::vector<CellCollection> read_dataset(const std::string& path);

// Renders the summary in report form: one record per line, then timeout and
// mismatch lines, then "OK <n>" or "COUNTEREXAMPLES <m>".
std::string render_report(const VerifySummary& summary);

}  // namespace rookpoly
