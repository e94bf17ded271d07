#include "mzv/verify.hpp"

#include "mzv/errors.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/text_format.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

namespace mzv::verify {

using numeric::BigFloat;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string short_float(const BigFloat& v) { return v.to_string(6); }

BigFloat max_abs_one(const BigFloat& v) {
    BigFloat one(1, v.digits());
    return is_within(v, one) ? one : numeric::abs(v);
}

// Uniform integer in [lo, hi] by rejection; independent of the standard
// library's distribution implementation.
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r = 0;
    do {
        r = rng();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

NumericReport compare_numeric(std::string check, nlohmann::json params, const numeric::EvalResult& lhs,
                              const BigFloat& rhs, std::size_t n_terms, int digits) {
    NumericReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.lhs_value = lhs.value;
    r.rhs_value = rhs;
    r.abs_error = numeric::abs_diff(lhs.value, rhs);
    r.tolerance = BigFloat::pow10(-(digits - 10), digits);
    r.n_terms = n_terms;
    r.passed = is_within(r.abs_error, r.tolerance);
    return r;
}

// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += workers) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
    return {{"check", check},         {"params", params}, {"passed", passed},       {"lhs", lhs},
            {"rhs", rhs},             {"abs_error", abs_error}, {"tolerance", tolerance}, {"runtime_ms", runtime_ms}};
}

CheckReport Thm1Report::to_check_report() const {
    CheckReport r;
    r.check = "thm1";
    r.params = {{"m", m}, {"n", n}, {"precision", lhs_value.digits()}, {"n_terms", n_terms}};
    r.passed = passed;
    r.lhs = lhs_value.to_string();
    r.rhs = rhs_value.to_string();
    r.abs_error = short_float(abs_error);
    r.tolerance = short_float(tolerance);
    return r;
}

CheckReport NumericReport::to_check_report() const {
    CheckReport r;
    r.check = check;
    r.params = params;
    r.params["precision"] = lhs_value.digits();
    r.params["n_terms"] = n_terms;
    r.passed = passed;
    r.lhs = lhs_value.to_string();
    r.rhs = rhs_value.to_string();
    r.abs_error = short_float(abs_error);
    r.tolerance = short_float(tolerance);
    return r;
}

CheckReport to_check_report(const identities::IdentityReport& r) {
    CheckReport out;
    out.check = r.identity;
    out.params = r.params;
    out.passed = r.holds;
    out.lhs = r.lhs;
    out.rhs = r.rhs;
    out.abs_error = r.difference;
    out.tolerance = "0";
    return out;
}

Thm1Report check_thm1(int m, int n, int digits, numeric::Method method) {
    auto terms = identities::thm1_expansion(m, n);
    Thm1Report r;
    r.m = m;
    r.n = n;
    r.n_terms = terms.size();
    BigFloat lhs(digits);
    for (const auto& [c, coeff] : terms) {
        lhs += BigFloat(coeff, digits) * numeric::zeta(c, digits, method).value;
    }
    r.lhs_value = lhs;
    r.rhs_value = numeric::realize(identities::thm1_rhs_exact(m, n), digits);
    r.abs_error = numeric::abs_diff(r.lhs_value, r.rhs_value);
    r.tolerance = BigFloat::pow10(-(digits - 5), digits) * max_abs_one(r.rhs_value);
    r.passed = is_within(r.abs_error, r.tolerance);
    return r;
}

NumericReport check_homomorphism(const Composition& c1, const Composition& c2, int digits) {
    if (!is_admissible(c1) || !is_admissible(c2)) throw DivergentError();
    const WordPoly product = shuffle_xy(encode_z(c1), encode_z(c2));
    const numeric::EvalResult lhs = numeric::evaluate(product, digits);
    const BigFloat rhs = numeric::zeta(c1, digits).value * numeric::zeta(c2, digits).value;
    return compare_numeric("hom", {{"c1", c1.to_string()}, {"c2", c2.to_string()}}, lhs, rhs, product.size(), digits);
}

NumericReport check_prop2_numeric(int n, int N, int digits, identities::Prop2Variant v) {
    if (v != identities::Prop2Variant::eq1) {
        throw DomainError("prop2 numeric check applies to eq1 only: eq2 words start with z1 and diverge");
    }
    const WordPoly lhs_poly = identities::prop2_lhs(n, N, v);
    const WordPoly rhs_poly = identities::prop2_rhs(n, N, v);
    const numeric::EvalResult lhs = numeric::evaluate(lhs_poly, digits);
    const numeric::EvalResult rhs = numeric::evaluate(rhs_poly, digits);
    return compare_numeric("prop2-numeric", {{"n", n}, {"N", N}, {"eq", 1}}, lhs, rhs.value, lhs_poly.size(), digits);
}

Composition random_admissible(std::mt19937_64& rng, int weight) {
    if (weight < 2) throw DomainError("admissible compositions have weight >= 2");
    // Compositions of weight-1 (each of the weight-2 gaps cut or not), then
    // first part + 1: a bijection onto admissible compositions of `weight`.
    std::vector<int> parts{1};
    for (int gap = 0; gap < weight - 2; ++gap) {
        if (uniform_int(rng, 0, 1) == 1) {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    parts.front() += 1;
    return Composition(std::move(parts));
}

std::vector<std::pair<Composition, Composition>> random_admissible_pairs(std::uint64_t seed, int count,
                                                                         int max_total_weight) {
    if (max_total_weight < 4) throw DomainError("pairs of admissible compositions need total weight >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Composition, Composition>> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        int w1 = uniform_int(rng, 2, max_total_weight - 2);
        int w2 = uniform_int(rng, 2, max_total_weight - w1);
        Composition c1 = random_admissible(rng, w1);
        Composition c2 = random_admissible(rng, w2);
        out.emplace_back(std::move(c1), std::move(c2));
    }
    return out;
}

std::string to_string(SweepKind k) {
    switch (k) {
        case SweepKind::prop2_exact: return "prop2-exact";
        case SweepKind::eq3: return "eq3";
        case SweepKind::thm1_numeric: return "thm1-numeric";
        case SweepKind::homomorphism_random: return "homomorphism-random";
    }
    return "?";
}

SweepKind parse_sweep_kind(std::string_view text) {
    for (auto k : {SweepKind::prop2_exact, SweepKind::eq3, SweepKind::thm1_numeric, SweepKind::homomorphism_random}) {
        if (text == to_string(k)) return k;
    }
    throw ParseError("unknown sweep kind '" + std::string(text) + "'");
}

nlohmann::json SweepSummary::to_json() const {
    return {{"summary", true},
            {"kind", kind},
            {"grid", grid},
            {"cells", cells.size()},
            {"passed", cells.size() - failures.size()},
            {"failed", failures.size()},
            {"failures", failures},
            {"worst_abs_error", worst_abs_error},
            {"all_passed", all_passed()},
            {"total_runtime_ms", total_runtime_ms}};
}

SweepSummary sweep(SweepKind kind, const SweepBounds& bounds, int digits, std::uint64_t seed, bool record_timing) {
    using identities::Prop2Variant;
    const auto start = Clock::now();

    SweepSummary s;
    s.kind = to_string(kind);
    std::vector<std::function<CheckReport()>> cells;

    switch (kind) {
        case SweepKind::prop2_exact: {
            s.grid = {{"max_n_plus_N", bounds.max}};
            std::vector<Prop2Variant> variants;
            if (bounds.variant) {
                variants.push_back(*bounds.variant);
                s.grid["eq"] = *bounds.variant == Prop2Variant::eq1 ? 1 : 2;
            } else {
                variants = {Prop2Variant::eq1, Prop2Variant::eq2};
            }
            for (auto v : variants) {
                for (int n = 0; 2 * n <= bounds.max; ++n) {
                    for (int N = n; n + N <= bounds.max; ++N) {
                        cells.emplace_back([=] { return to_check_report(identities::verify_prop2(n, N, v)); });
                    }
                }
            }
            break;
        }
        case SweepKind::eq3: {
            s.grid = {{"max_m", bounds.max}, {"max_n", bounds.max}};
            for (int m = 0; m <= bounds.max; ++m) {
                for (int n = 0; n <= bounds.max; ++n) {
                    cells.emplace_back([=] { return to_check_report(identities::eq3_check(m, n)); });
                }
            }
            break;
        }
        case SweepKind::thm1_numeric: {
            s.grid = {{"max_weight", bounds.max}, {"precision", digits}};
            for (int n = 0; 4 * n <= bounds.max; ++n) {
                for (int m = 0; 2 * m + 4 * n <= bounds.max; ++m) {
                    cells.emplace_back([=] { return check_thm1(m, n, digits).to_check_report(); });
                }
            }
            break;
        }
        case SweepKind::homomorphism_random: {
            s.grid = {{"pairs", bounds.count}, {"max_total_weight", bounds.max}, {"seed", seed}, {"precision", digits}};
            for (auto& [c1, c2] : random_admissible_pairs(seed, bounds.count, bounds.max)) {
                cells.emplace_back([=] { return check_homomorphism(c1, c2, digits).to_check_report(); });
            }
            break;
        }
    }

    s.cells.resize(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto cell_start = Clock::now();
        CheckReport r = cells[i]();
        r.runtime_ms = record_timing ? elapsed_ms(cell_start) : 0.0;
        s.cells[i] = std::move(r);
    });

    double worst = 0.0;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        const CheckReport& r = s.cells[i];
        if (!r.passed) s.failures.push_back(i);
        // Exact checks report "0" or a symbolic difference; only numeric cells
        // carry a decimal abs_error.
        try {
            std::size_t used = 0;
            double e = std::stod(r.abs_error, &used);
            if (used == r.abs_error.size() && e > worst) {
                worst = e;
                s.worst_abs_error = r.abs_error;
            }
        } catch (const std::exception&) {
            if (!r.passed) s.worst_abs_error = r.abs_error;
        }
    }
    s.total_runtime_ms = record_timing ? elapsed_ms(start) : 0.0;
    return s;
}

}  // namespace mzv::verify
