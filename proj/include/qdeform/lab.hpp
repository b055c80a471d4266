#pragma once

#include "qdeform/qmat.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qdeform {

enum class TraceCheck { Palindrome, Positive, Unimodal, ReversalEquality };

enum class ScanHypothesis {
    InteriorAtLeast2,  // positivity asserted for words with c_1..c_{k-1} >= 2, c_k >= 1
    AllIntegers,       // positivity not asserted, only reported
};

struct ScanSpec {
    int k_min = 1;
    int k_max = 4;
    std::int64_t c_min = 2;
    std::int64_t c_max = 4;
    ScanHypothesis hypothesis = ScanHypothesis::InteriorAtLeast2;
    std::set<TraceCheck> checks = {TraceCheck::Palindrome, TraceCheck::Positive,
                                   TraceCheck::Unimodal, TraceCheck::ReversalEquality};
    std::uint64_t cap = 10'000'000;             // enumeration cap
    std::optional<std::uint64_t> sample_count;  // seeded sampling instead of exhaustion
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency

    std::uint64_t total_words() const;  // throws when above the cap
};

struct ScanFinding {
    std::uint64_t index;  // position in the canonical enumeration order
    std::vector<std::int64_t> word;
    TraceCheck check;
    LaurentPoly trace;
};

struct ScanReport {
    ScanSpec spec;
    std::uint64_t words_checked = 0;
    // Violations of proved statements; any entry is a hard failure.
    std::vector<ScanFinding> theorem_violations;
    // Unimodality counterexamples (conjecture: reported, never asserted).
    std::vector<ScanFinding> conjecture_counterexamples;
    // Traces with interior zero coefficients, reported separately because the
    // unimodality reading of such sequences is a convention.
    std::vector<ScanFinding> zero_gap_cases;
    double elapsed_seconds = 0;

    bool theorem_failed() const { return !theorem_violations.empty(); }
    std::string to_text() const;
    std::string to_json() const;
};

// Deterministic scan over negative-flavor words: lexicographic by
// (k, c_1, ..., c_k), or seeded uniform sampling when sample_count is set.
// Parallel workers split the index space; the merged findings and their
// order do not depend on the thread count.
ScanReport scan_traces(const ScanSpec& spec);

enum class CohnLetter { A, B };

// q-deformations of the Cohn matrices A = [[2,1],[1,1]], B = [[5,2],[2,1]]
// and of products of them; units are tracked exactly.
QMat2 cohn_matrix(const std::vector<CohnLetter>& word);
std::vector<CohnLetter> parse_cohn_word(std::string_view text);

struct DivisibilityRow {
    std::size_t target_index;
    std::size_t candidate_index;
    std::optional<LaurentPoly> quotient;
    bool quotient_nonneg = false;
};

struct DivisibilityReport {
    std::vector<LaurentPoly> targets;
    std::vector<LaurentPoly> candidates;
    std::vector<DivisibilityRow> rows;

    std::string to_text() const;
    std::string to_json() const;
};

DivisibilityReport divisibility_report(std::vector<LaurentPoly> targets,
                                       std::vector<LaurentPoly> candidates);

}  // namespace qdeform
