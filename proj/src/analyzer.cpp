#include "jacsyz/analyzer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacsyz {

namespace {

Json opt_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

void add_check(InvariantReport& r, std::string name, Json lhs, Json rhs, std::optional<bool> pass,
               bool conjecture = false) {
    r.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass, conjecture});
}

void not_applicable(InvariantReport& r, std::string name) {
    add_check(r, std::move(name), nullptr, nullptr, std::nullopt);
}

std::vector<long> slice(const std::vector<long>& v, std::size_t from, std::size_t to) {
    to = std::min(to, v.size());
    if (from >= to) return {};
    return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to)};
}

// Positive integer pairs a1 <= a2 with a1 + a2 = sum and a1 * a2 = product.
std::optional<std::vector<int>> solve_ci_degrees(long sum, long product) {
    for (long a1 = 1; 2 * a1 <= sum; ++a1) {
        if (a1 * (sum - a1) == product) return std::vector<int>{static_cast<int>(a1), static_cast<int>(sum - a1)};
    }
    return std::nullopt;
}

CiAnalysis verify_ci(const InvariantReport& r, std::vector<int> degrees, std::string source) {
    CiAnalysis ci;
    ci.source = std::move(source);
    ci.degrees = std::move(degrees);
    const auto& m = r.milnor;
    const int nvars = r.n + 1;
    const int sum = std::accumulate(ci.degrees.begin(), ci.degrees.end(), 0);
    const long product = std::accumulate(ci.degrees.begin(), ci.degrees.end(), 1L, std::multiplies<long>());
    auto quotient = complete_intersection_hilbert(ci.degrees, nvars, r.kmax);
    const int shift = nvars * (r.d - 1) - sum;
    bool hp = true;
    for (int k = 0; k <= r.kmax; ++k) {
        const long extra = (k - shift >= 0) ? quotient[k - shift] : 0;
        if (m.milnor_dims[k] != m.smooth_dims[k] + extra) hp = false;
    }
    ci.hilbert_identity = hp;
    if (r.saturation) {
        bool match = true;
        for (int k = 0; k <= r.kmax; ++k)
            if (r.saturation->hatj_dims[k] != monomial_count(nvars, k) - quotient[k]) match = false;
        ci.saturation_match = match;
    }
    if (m.tau) ci.tau_product = *m.tau == product;
    if (m.ct) ci.ct_formula = *m.ct == m.T - sum + r.n;
    const bool ok = hp && ci.saturation_match.value_or(false) && ci.tau_product.value_or(false) &&
                    ci.ct_formula.value_or(false);
    ci.verdict = ok ? "CI-compatible" : "not CI-compatible";
    return ci;
}

void run_ci_analysis(InvariantReport& r, const AnalyzeOptions& options) {
    if (r.non_isolated() || r.milnor.smooth() || !r.milnor.ct) return;
    if (options.ci_degrees) {
        r.ci = verify_ci(r, *options.ci_degrees, "supplied");
        return;
    }
    if (r.n != 2) return;
    const long sum = r.milnor.T - *r.milnor.ct + r.n;
    auto solution = solve_ci_degrees(sum, *r.milnor.tau);
    if (!solution) {
        CiAnalysis ci;
        ci.source = "recovered";
        ci.verdict = "no integer solution";
        r.ci = ci;
        return;
    }
    r.ci = verify_ci(r, *solution, "recovered");
}

template <class F>
void compute_profiles(const F& field, const HomogPoly& f, InvariantReport& r) {
    auto parts = partial_derivatives(f);
    std::span<const HomogPoly> gens(parts);
    r.milnor = milnor_profile(field, f, r.kmax);
    const int mmax = r.kmax - (r.d - 1);
    r.syzygy = syzygy_profile(field, f, mmax);
    for (int m = 0; m <= mmax; ++m) r.koszul_hn.push_back(koszul_hn_dim(r.milnor, m + r.n));
    if (r.non_isolated()) return;
    r.saturation = saturation_profile(field, f, r.milnor);

    // One-step colon at the saturation bound: {g ∈ S_B : x_i g ∈ J_{B+1}} must equal J_B.
    const int bound = r.saturation->bound;
    if (bound + 1 <= r.kmax) {
        auto j_next = ideal_slice(field, gens, bound + 1).space;
        auto colon = saturation_below_bound(field, j_next, f.nvars(), bound, bound + 1);
        const long j_bound = r.saturation->j_dims[bound];
        add_check(r, "colon_stable_at_saturation_bound", static_cast<long>(colon.dim()), j_bound,
                  static_cast<long>(colon.dim()) == j_bound);
    }
}

void record_identities(const HomogPoly& f, InvariantReport& r) {
    const auto& m = r.milnor;
    const int n = r.n, d = r.d, T = m.T;
    const int nvars = n + 1;

    {
        auto parts = partial_derivatives(f);
        HomogPoly sum(f.nvars(), f.degree());
        for (int i = 0; i < f.nvars(); ++i) sum = sum + parts[i] * Monomial::variable(f.nvars(), i);
        add_check(r, "euler_relation", to_string(sum, r.vars), to_string(f.scaled(Rational(d)), r.vars),
                  euler_check(f));
    }
    {
        std::vector<long> head = slice(m.smooth_dims.dims, 0, static_cast<std::size_t>(T) + 1);
        std::vector<long> reversed(head.rbegin(), head.rend());
        bool vanish = true;
        for (int k = T + 1; k <= r.kmax; ++k) vanish = vanish && m.smooth_dims[k] == 0;
        add_check(r, "smooth_series_symmetric", head, reversed, head == reversed && vanish);
    }
    {
        std::vector<long> lhs, rhs;
        for (int j = 0; j < d - 1 && j <= r.kmax; ++j) {
            lhs.push_back(m.milnor_dims[j]);
            rhs.push_back(monomial_count(nvars, j));
        }
        add_check(r, "milnor_equals_ring_below_d_minus_1", lhs, rhs, lhs == rhs);
    }
    {
        const auto& kr = r.syzygy.kr;
        std::vector<long> low = slice(kr, 0, static_cast<std::size_t>(std::max(0, d - 1)));
        add_check(r, "koszul_relations_vanish_below_d_minus_1", low, std::vector<long>(low.size(), 0),
                  std::all_of(low.begin(), low.end(), [](long v) { return v == 0; }));
    }

    if (r.non_isolated()) {
        for (const char* name :
             {"er_equals_koszul_cohomology", "er_tail_equals_tau", "ct_range", "st_bound", "ct_equals_mdr_plus_d_minus_2",
              "j_contained_in_saturation", "defects_non_increasing", "defect_vanishes_from_T_minus_ct",
              "sat_bound", "sat_equals_st_when_st_large", "tau_bound_when_ct_large", "a_invariant_closed_form",
              "a_invariant_mdr_form", "regularity_closed_form", "er_equals_defect", "main_theorem",
              "gorenstein_symmetry"})
            not_applicable(r, name);
        return;
    }

    const long tau = *m.tau;
    const int st = *m.st;
    const auto& sat = *r.saturation;

    // Syzygy route vs. Milnor-dimension route.
    add_check(r, "er_equals_koszul_cohomology", r.syzygy.er, r.koszul_hn, r.syzygy.er == r.koszul_hn);
    {
        std::vector<long> tail = slice(r.syzygy.er, static_cast<std::size_t>(std::max(0, n * (d - 2))),
                                       r.syzygy.er.size());
        add_check(r, "er_tail_equals_tau", tail, tau,
                  std::all_of(tail.begin(), tail.end(), [&](long v) { return v == tau; }));
    }
    if (m.smooth()) {
        add_check(r, "ar_equals_kr_for_smooth", r.syzygy.ar, r.syzygy.kr, r.syzygy.ar == r.syzygy.kr);
        add_check(r, "st_bound", st, T + 1, st <= T + 1);
        for (const char* name :
             {"ct_range", "ct_equals_mdr_plus_d_minus_2", "defect_vanishes_from_T_minus_ct", "sat_bound",
              "sat_equals_st_when_st_large", "tau_bound_when_ct_large", "a_invariant_closed_form",
              "a_invariant_mdr_form", "regularity_closed_form", "er_equals_defect", "main_theorem"})
            not_applicable(r, name);
    } else {
        const int ct = *m.ct;
        add_check(r, "ct_range", ct, Json::array({d - 2, T}), d - 2 <= ct && ct <= T);
        add_check(r, "st_bound", st, T, st <= T);
        const std::optional<int> mdr = r.syzygy.mdr;
        add_check(r, "ct_equals_mdr_plus_d_minus_2", ct, mdr ? Json(*mdr + d - 2) : Json(nullptr),
                  mdr && ct == *mdr + d - 2);
        {
            int zero_from = static_cast<int>(sat.defects.size());
            while (zero_from > 0 && sat.defects[zero_from - 1] == 0) --zero_from;
            add_check(r, "defect_vanishes_from_T_minus_ct", zero_from, T - ct, zero_from == T - ct);
        }
        const int bound = std::max(T - ct, st);
        add_check(r, "sat_bound", sat.sat, bound, sat.sat <= bound);
        if (st >= n * (d - 2) + 1)
            add_check(r, "sat_equals_st_when_st_large", sat.sat, st, sat.sat == st);
        else
            not_applicable(r, "sat_equals_st_when_st_large");
        if (2 * ct >= T) {
            const long cap = smooth_series_coeff(n, d, T - ct);
            add_check(r, "tau_bound_when_ct_large", tau, cap, tau <= cap);
        } else {
            not_applicable(r, "tau_bound_when_ct_large");
        }
        add_check(r, "a_invariant_closed_form", opt_json(sat.a_invariant), opt_json(sat.a_invariant_closed),
                  sat.a_invariant.has_value() && sat.a_invariant == sat.a_invariant_closed);
        const int top = n * d - 2 * n - 1;
        add_check(r, "a_invariant_mdr_form", opt_json(sat.a_invariant), mdr ? Json(top - *mdr) : Json(nullptr),
                  sat.a_invariant.has_value() && mdr && *sat.a_invariant == top - *mdr);
        add_check(r, "regularity_closed_form", opt_json(sat.regularity), opt_json(sat.regularity_closed),
                  sat.regularity.has_value() && sat.regularity == sat.regularity_closed);

        // dim ER_{nd-2n-1-k} = defect_k: kernel route against saturation route.
        std::vector<long> er_side, defect_side;
        bool ok = true;
        for (int k = 0; k <= top; ++k) {
            const int mdeg = top - k;
            const long er = mdeg < static_cast<int>(r.syzygy.er.size()) ? r.syzygy.er[mdeg] : -1;
            er_side.push_back(er);
            defect_side.push_back(sat.defects[k]);
            ok = ok && er == sat.defects[k];
        }
        add_check(r, "er_equals_defect", er_side, defect_side, ok);

        for (int k = 0; k <= top; ++k) {
            TheoremRow row{k, m.milnor_dims[T - k], m.smooth_dims[k], sat.defects[k], false};
            row.pass = row.lhs == row.smooth + row.defect;
            r.theorem.push_back(row);
        }
        const long passed = std::count_if(r.theorem.begin(), r.theorem.end(), [](const TheoremRow& t) { return t.pass; });
        add_check(r, "main_theorem", passed, static_cast<long>(r.theorem.size()),
                  passed == static_cast<long>(r.theorem.size()));
    }

    add_check(r, "j_contained_in_saturation", sat.j_contained, true, sat.j_contained);
    {
        bool monotone = true;
        for (std::size_t k = 1; k < sat.defects.size(); ++k) monotone = monotone && sat.defects[k] <= sat.defects[k - 1];
        bool nonneg = std::all_of(sat.defects.begin(), sat.defects.end(), [](long v) { return v >= 0; });
        add_check(r, "defects_non_increasing", sat.defects, "non-increasing, >= 0", monotone && nonneg);
    }
    {
        std::vector<long> head(static_cast<std::size_t>(T) + 1), mirror(static_cast<std::size_t>(T) + 1);
        for (int k = 0; k <= T; ++k) {
            head[k] = sat.sd_dims[k];
            mirror[k] = sat.sd_dims[T - k];
        }
        add_check(r, "gorenstein_symmetry", head, mirror, gorenstein_symmetry_check(sat.sd_dims, T));
    }
    add_check(r, "conjecture:sd_unimodal", slice(sat.sd_dims, 0, static_cast<std::size_t>(T) + 1),
              "non-decreasing below T/2", unimodality_check(sat.sd_dims, T), true);
    if (m.ct) add_check(r, "conjecture:T_minus_ct_le_st", T - *m.ct, st, T - *m.ct <= st, true);
}

}  // namespace

FieldSpec parse_field(const std::string& text, std::mt19937_64& rng) {
    if (text == "exact") return {};
    if (text.rfind("mod:", 0) == 0) {
        const std::string rest = text.substr(4);
        if (rest == "random") return {random_prime(rng)};
        std::size_t used = 0;
        unsigned long long p = 0;
        try {
            p = std::stoull(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size()) throw Error("invalid prime '" + rest + "'");
        if (p >= (1ull << 31) || !is_prime(p)) throw Error(rest + " is not a prime below 2^31");
        return {static_cast<std::uint32_t>(p)};
    }
    throw Error("field must be 'exact', 'mod:<prime>' or 'mod:random'");
}

bool InvariantReport::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.conjecture || c.pass.value_or(true); });
}

std::vector<long> complete_intersection_hilbert(const std::vector<int>& degrees, int nvars, int kmax) {
    // numerator prod(1 - t^a)
    std::vector<long> num{1};
    for (int a : degrees) {
        std::vector<long> next(num.size() + static_cast<std::size_t>(a), 0);
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i];
            next[i + a] -= num[i];
        }
        num = std::move(next);
    }
    std::vector<long> out(static_cast<std::size_t>(std::max(kmax, 0)) + 1, 0);
    for (int k = 0; k <= kmax; ++k) {
        long c = 0;
        for (int j = 0; j < static_cast<int>(num.size()) && j <= k; ++j)
            c += num[j] * monomial_count(nvars, k - j);
        out[k] = c;
    }
    return out;
}

InvariantReport analyze(const HomogPoly& f, const std::vector<std::string>& vars, const AnalyzeOptions& options) {
    if (f.nvars() < 2) throw std::invalid_argument("need at least two variables");
    if (static_cast<int>(vars.size()) != f.nvars()) throw std::invalid_argument("variable list does not match polynomial");
    if (f.degree() < 2) throw std::invalid_argument("degree must be at least 2");
    InvariantReport r;
    r.poly = to_string(f, vars);
    r.vars = vars;
    r.n = f.nvars() - 1;
    r.d = f.degree();
    r.field = options.field.name();
    r.kmax = options.kmax.value_or(default_kmax(r.n, r.d));
    if (r.kmax < min_kmax(r.n, r.d))
        throw std::invalid_argument("kmax must be at least T + n + 2 = " + std::to_string(min_kmax(r.n, r.d)));
    if (options.ci_degrees && static_cast<int>(options.ci_degrees->size()) != r.n)
        throw std::invalid_argument("expected " + std::to_string(r.n) + " complete-intersection degrees");

    if (options.field.exact())
        compute_profiles(RationalField{}, f, r);
    else
        compute_profiles(PrimeField(*options.field.prime), f, r);

    record_identities(f, r);
    run_ci_analysis(r, options);

    if (!options.field.exact())
        r.warnings.push_back("modular computation over " + r.field +
                             ": dimensions are unverified (ranks mod p can only drop below the rational ranks)");
    if (r.non_isolated())
        r.warnings.push_back("NON-ISOLATED: Milnor dimensions are not constant on [T+1, T+n+2]; "
                             "singularities are not isolated and threshold invariants are omitted");
    else
        r.warnings.push_back("isolatedness: heuristic (window [T+1, T+n+2])");
    if (r.milnor.smooth()) r.warnings.push_back("smooth hypersurface: tau = 0, ct and mdr undefined, theorem check skipped");
    for (const auto& c : r.checks)
        if (c.conjecture && c.pass == false) r.warnings.push_back("conjecture evidence against: " + c.name);
    return r;
}

int exit_code(const InvariantReport& r) {
    if (r.non_isolated()) return 3;
    return r.checks_pass() ? 0 : 2;
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["input"] = {{"poly", r.poly}, {"vars", r.vars}, {"n", r.n}, {"d", r.d}, {"field", r.field}, {"kmax", r.kmax}};
    const auto& m = r.milnor;
    j["milnor"] = {{"T", m.T},
                   {"tau", opt_json(m.tau)},
                   {"st", opt_json(m.st)},
                   {"ct", opt_json(m.ct)},
                   {"isolated", {{"value", m.isolated.isolated}, {"method", m.isolated.method}}},
                   {"dims", m.milnor_dims.dims},
                   {"smooth_dims", m.smooth_dims.dims}};
    j["syzygy"] = {{"mdr", opt_json(r.syzygy.mdr)},
                   {"ar", r.syzygy.ar},
                   {"kr", r.syzygy.kr},
                   {"er", r.syzygy.er},
                   {"koszul_hn", r.koszul_hn}};
    if (r.saturation) {
        const auto& s = *r.saturation;
        j["saturation"] = {{"sat", s.sat},
                           {"a_invariant", opt_json(s.a_invariant)},
                           {"regularity", opt_json(s.regularity)},
                           {"bound", s.bound},
                           {"J_dims", s.j_dims},
                           {"hatJ_dims", s.hatj_dims},
                           {"sd_dims", s.sd_dims},
                           {"defects", s.defects}};
    } else {
        j["saturation"] = nullptr;
    }
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", opt_json(c.pass)}});
    j["checks"] = std::move(checks);
    Json theorem = Json::array();
    for (const auto& t : r.theorem)
        theorem.push_back({{"k", t.k}, {"lhs", t.lhs}, {"smooth", t.smooth}, {"defect", t.defect}, {"pass", t.pass}});
    j["theorem"] = std::move(theorem);
    if (r.ci) {
        const auto& c = *r.ci;
        j["ci"] = {{"source", c.source},
                   {"degrees", c.degrees},
                   {"verdict", c.verdict},
                   {"hilbert_identity", opt_json(c.hilbert_identity)},
                   {"saturation_match", opt_json(c.saturation_match)},
                   {"tau_product", opt_json(c.tau_product)},
                   {"ct_formula", opt_json(c.ct_formula)}};
    } else {
        j["ci"] = nullptr;
    }
    j["warnings"] = r.warnings;
    return j;
}

std::string to_csv(const InvariantReport& r) {
    std::ostringstream out;
    out << "k,dim_S,milnor,smooth,ar,kr,er,koszul_hn,J,hatJ,sd,defect\n";
    auto cell = [&](const std::vector<long>& v, int k) {
        out << ',';
        if (k < static_cast<int>(v.size())) out << v[k];
    };
    const std::vector<long> none;
    const auto& s = r.saturation;
    for (int k = 0; k <= r.kmax; ++k) {
        out << k << ',' << monomial_count(r.n + 1, k);
        cell(r.milnor.milnor_dims.dims, k);
        cell(r.milnor.smooth_dims.dims, k);
        cell(r.syzygy.ar, k);
        cell(r.syzygy.kr, k);
        cell(r.syzygy.er, k);
        cell(r.koszul_hn, k);
        cell(s ? s->j_dims : none, k);
        cell(s ? s->hatj_dims : none, k);
        cell(s ? s->sd_dims : none, k);
        cell(s ? s->defects : none, k);
        out << '\n';
    }
    return out.str();
}

}  // namespace jacsyz
