#include "jacsyz/corpus.hpp"

namespace jacsyz {

namespace {

std::vector<long> zeros(std::size_t n) { return std::vector<long>(n, 0); }

std::vector<CorpusEntry> make_corpus() {
    const std::vector<std::string> xyz{"x", "y", "z"};
    std::vector<CorpusEntry> c;

    {
        // Ĵ_m has codimension 6 from degree 3 on; kmax = T + 2n + 4 = 14.
        std::vector<long> hat{0, 0, 0};
        for (int m = 3; m <= 14; ++m) hat.push_back(binomial(m + 2, 2) - 6);
        std::vector<long> sd = zeros(15);
        sd[3] = 1;
        std::vector<long> defects = zeros(15);
        defects[0] = 5;
        defects[1] = 3;
        c.push_back({"three-cuspidal-quartic",
                     "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x+y+z)",
                     xyz,
                     {{"/milnor/dims", {1, 3, 6, 7, 6, 6, 6, 6, 6}, "published: Milnor series 1+3t+6t^2+7t^3+6(t^4+...)"},
                      {"/milnor/smooth_dims", {1, 3, 6, 7, 6, 3, 1, 0}, "published: smooth quartic series"},
                      {"/milnor/tau", 6, "published: defect_0 = 6 - 1"},
                      {"/milnor/st", 4, "published: sat = 4 = st"},
                      {"/milnor/ct", 4, "derived: first disagreement of the two series at degree 5"},
                      {"/syzygy/mdr", 2, "derived: ct - d + 2"},
                      {"/saturation/sat", 4, "published: sat = 4 = st"},
                      {"/saturation/defects", defects, "published: defects 5, 3, 0, ..."},
                      {"/saturation/hatJ_dims", hat, "published: Ĵ_k = 0 for k <= 2, binom(m+2,2) - 6 after"},
                      {"/saturation/sd_dims", sd, "published: SD = C in degree 3"},
                      {"/saturation/a_invariant", 1, "derived: T - ct - 1"},
                      {"/saturation/regularity", 3, "derived: max(T - ct, sat - 1)"},
                      {"/ci/verdict", "no integer solution", "derived: a1 + a2 = 4, a1 a2 = 6 has no real root"}}});
    }
    c.push_back({"smooth-fermat-quartic",
                 "x^4 + y^4 + z^4",
                 xyz,
                 {{"/milnor/dims", {1, 3, 6, 7, 6, 3, 1, 0, 0}, "published: smooth quartic series"},
                  {"/milnor/tau", 0, "derived: no singular points"},
                  {"/milnor/ct", nullptr, "derived: undefined for smooth input"},
                  {"/syzygy/mdr", nullptr, "derived: regular sequence, only Koszul relations"}}});
    c.push_back({"xyz",
                 "x*y*z",
                 xyz,
                 {{"/milnor/dims", {1, 3, 3, 3, 3, 3}, "derived: hand computation of S/(yz, xz, xy)"},
                  {"/milnor/tau", 3, "derived: stable Milnor dimension"},
                  {"/milnor/st", 1, "published: T - ct = st = 1"},
                  {"/milnor/ct", 2, "derived: T - ct = 1 with T = 3"},
                  {"/syzygy/mdr", 1, "derived: relation x(yz) - y(xz) = 0"},
                  {"/syzygy/ar", {0, 2}, "derived: explicit kernel in degrees 0 and 1"},
                  {"/saturation/sat", 0, "published: sat(J_f) = 0"},
                  {"/saturation/sd_dims", zeros(10), "published: J_f saturated"},
                  {"/saturation/a_invariant", 0, "derived: T - ct - 1"},
                  {"/saturation/regularity", 1, "derived: max(T - ct, sat - 1)"},
                  {"/ci/verdict", "no integer solution", "derived: a1 + a2 = 3, a1 a2 = 3 has no real root"}}});
    c.push_back({"x-times-fermat-cubic",
                 "x*(x^3 + y^3 + z^3)",
                 xyz,
                 {{"/saturation/sd_dims", {0, 1, 3, 4, 3, 1, 0}, "published: SD sequence 0,1,3,4,3,1,0"}}});
    c.push_back({"xpyq-zd-2-2-4",
                 "x^2*y^2 + z^4",
                 xyz,
                 {{"/milnor/dims", {1, 3, 6, 7, 7, 6, 6}, "derived: CI series with (a1, a2) = (2, 3)"},
                  {"/milnor/tau", 6, "derived: two A3 points"},
                  {"/milnor/ct", 3, "published: ct = d - 1"},
                  {"/milnor/st", 5, "published: st = 2d - 3"},
                  {"/syzygy/mdr", 1, "published: mdr = 1"},
                  {"/ci/degrees", {2, 3}, "derived: a1 + a2 = 5, a1 a2 = 6"},
                  {"/ci/verdict", "CI-compatible", "derived: Ĵ = (xy, z^3)"}}});
    c.push_back({"xpyq-zd-1-2-3",
                 "x*y^2 + z^3",
                 xyz,
                 {{"/milnor/tau", 2, "derived: one A2 point"},
                  {"/milnor/ct", 2, "published: ct = d - 1"},
                  {"/milnor/st", 3, "published: st = 2d - 3"},
                  {"/syzygy/mdr", 1, "published: mdr = 1"},
                  {"/ci/degrees", {1, 2}, "derived: Ĵ = (y, z^2)"},
                  {"/ci/verdict", "CI-compatible", "derived: Ĵ = (y, z^2)"}}});
    c.push_back({"xpyq-zd-2-3-5",
                 "x^2*y^3 + z^5",
                 xyz,
                 {{"/milnor/tau", 12, "derived: E8 + A4"},
                  {"/milnor/ct", 4, "published: ct = d - 1"},
                  {"/milnor/st", 7, "published: st = 2d - 3"},
                  {"/syzygy/mdr", 1, "published: mdr = 1"},
                  {"/ci/degrees", {3, 4}, "derived: Ĵ = (xy^2, z^4)"},
                  {"/ci/verdict", "CI-compatible", "derived: Ĵ = (xy^2, z^4)"}}});
    c.push_back({"one-node-cubic",
                 "z*y^2 - x^3 - x^2*z",
                 xyz,
                 {{"/milnor/tau", 1, "derived: one A1 point"},
                  {"/milnor/ct", 3, "published: ct = T exactly for a single node"},
                  {"/milnor/st", 3, "published: sat = st = T"},
                  {"/saturation/sat", 3, "published: sat = T = 3d - 6"},
                  {"/ci/degrees", {1, 1}, "derived: a reduced point is cut out by two lines"},
                  {"/ci/verdict", "CI-compatible", "derived: a reduced point is cut out by two lines"}}});
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = make_corpus();
    return corpus;
}

bool golden_matches(const Json& expected, const Json& got) {
    if (expected.is_array() && got.is_array()) {
        if (expected.size() > got.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!golden_matches(expected[i], got[i])) return false;
        return true;
    }
    return expected == got;
}

bool CorpusSummary::passed() const {
    for (const auto& o : outcomes) {
        if (exit_code(o.report) != 0) return false;
        if (!modular && !o.mismatches.empty()) return false;
    }
    return true;
}

CorpusSummary run_corpus(const std::string& filter, const AnalyzeOptions& options) {
    CorpusSummary summary;
    summary.modular = !options.field.exact();
    for (const auto& entry : builtin_corpus()) {
        if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
        auto f = parse_poly(entry.poly, entry.vars);
        CorpusOutcome outcome{entry.name, analyze(f, entry.vars, options), {}};
        const Json report = to_json(outcome.report);
        for (const auto& g : entry.golden) {
            const Json::json_pointer ptr(g.pointer);
            const Json got = report.contains(ptr) ? report.at(ptr) : Json(nullptr);
            if (!golden_matches(g.expected, got)) outcome.mismatches.push_back({entry.name, g.pointer, g.expected, got});
        }
        summary.outcomes.push_back(std::move(outcome));
    }
    return summary;
}

}  // namespace jacsyz
