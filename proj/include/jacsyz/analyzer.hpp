#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jacsyz/milnor.hpp"
#include "jacsyz/saturation.hpp"
#include "jacsyz/syzygy.hpp"

namespace jacsyz {

using Json = nlohmann::ordered_json;

// Working field: exact rationals, or residues modulo `prime`.
struct FieldSpec {
    std::optional<std::uint32_t> prime;

    std::string name() const { return prime ? "mod:" + std::to_string(*prime) : "exact"; }
    bool exact() const noexcept { return !prime; }
};

// "exact", "mod:<prime>" or "mod:random" (uses `rng`).
FieldSpec parse_field(const std::string& text, std::mt19937_64& rng);

struct AnalyzeOptions {
    FieldSpec field;
    std::optional<int> kmax;
    // Candidate complete-intersection degrees; required for the CI record when n >= 3.
    std::optional<std::vector<int>> ci_degrees;
};

// One named identity. pass is empty when the identity does not apply to the
// input. Conjectures are evidence only and never fail a report.
struct IdentityCheck {
    std::string name;
    Json lhs;
    Json rhs;
    std::optional<bool> pass;
    bool conjecture = false;
};

// dim M(f)_{T-k} = dim M(f_s)_k + defect_k
struct TheoremRow {
    int k;
    long lhs;
    long smooth;
    long defect;
    bool pass;
};

struct CiAnalysis {
    std::string source;  // "recovered" or "supplied"
    std::vector<int> degrees;
    std::string verdict;  // "CI-compatible", "not CI-compatible", "no integer solution"
    std::optional<bool> hilbert_identity;
    std::optional<bool> saturation_match;
    std::optional<bool> tau_product;
    std::optional<bool> ct_formula;
};

struct InvariantReport {
    std::string poly;
    std::vector<std::string> vars;
    int n = 0;
    int d = 0;
    std::string field;
    int kmax = 0;

    MilnorProfile milnor;
    SyzygyProfile syzygy;
    std::vector<long> koszul_hn;  // indexed like syzygy.er: value at j = m + n
    std::optional<SaturationProfile> saturation;
    std::vector<IdentityCheck> checks;
    std::vector<TheoremRow> theorem;
    std::optional<CiAnalysis> ci;
    std::vector<std::string> warnings;

    bool non_isolated() const noexcept { return !milnor.isolated.isolated; }
    // Every applicable non-conjecture identity passed.
    bool checks_pass() const;
};

// Never throws for mathematical reasons: identity failures and a failed
// isolatedness check are recorded in the report. Throws std::invalid_argument
// for unusable options (degree < 2, fewer than two variables, kmax too small).
InvariantReport analyze(const HomogPoly& f, const std::vector<std::string>& vars, const AnalyzeOptions& options);

// 0 = all checks pass, 2 = identity failure, 3 = non-isolated input.
int exit_code(const InvariantReport& r);

Json to_json(const InvariantReport& r);
std::string to_csv(const InvariantReport& r);

// Coefficients of prod(1 - t^a_i) / (1 - t)^(nvars), degrees 0..kmax.
std::vector<long> complete_intersection_hilbert(const std::vector<int>& degrees, int nvars, int kmax);

}  // namespace jacsyz
