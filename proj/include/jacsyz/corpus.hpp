#pragma once

#include <string>
#include <vector>

#include "jacsyz/analyzer.hpp"

namespace jacsyz {

// Expected value at a JSON pointer into the report. Arrays compare as
// prefixes: the report may carry more degrees than the golden value lists.
struct GoldenValue {
    std::string pointer;
    Json expected;
    std::string provenance;  // "published: ..." or "derived: ..."
};

struct CorpusEntry {
    std::string name;
    std::string poly;
    std::vector<std::string> vars;
    std::vector<GoldenValue> golden;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct GoldenMismatch {
    std::string entry;
    std::string field;
    Json expected;
    Json got;
};

struct CorpusOutcome {
    std::string name;
    InvariantReport report;
    std::vector<GoldenMismatch> mismatches;
};

struct CorpusSummary {
    std::vector<CorpusOutcome> outcomes;
    bool modular = false;

    // Golden mismatches are fatal only in exact mode; a modular mismatch
    // points at an unlucky prime and is reported instead.
    bool passed() const;
};

bool golden_matches(const Json& expected, const Json& got);

// Entries whose name contains `filter` (all when empty).
CorpusSummary run_corpus(const std::string& filter, const AnalyzeOptions& options);

}  // namespace jacsyz
