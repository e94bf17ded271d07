#include "mzv/cli.hpp"

#include "mzv/errors.hpp"
#include "mzv/identities.hpp"
#include "mzv/mzv_numeric.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/text_format.hpp"
#include "mzv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

namespace mzv::cli {

namespace {

using identities::Prop2Variant;
using nlohmann::json;
using verify::CheckReport;

struct CliConfig {
    int precision = 30;
    std::string method = "hoelder";
    bool json_output = false;
    std::uint64_t seed = 42;
    bool no_timing = false;

    // shuffle / encode / decode / mzv
    std::string alphabet;
    std::string operand_u;
    std::string operand_v;
    std::string composition;
    std::string word;
    long cutoff = numeric::kDefaultTruncation;

    // verify / sweep
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> big_n;
    int eq = 1;
    bool numeric_check = false;
    std::optional<int> max;
    std::string c1;
    std::string c2;
    bool have_c1 = false;
    bool have_c2 = false;
    int count = 50;
    int weight = 10;
    std::string sweep_kind;
    std::string eq_filter = "both";
};

class Runner {
public:
    Runner(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    int shuffle() {
        std::string result;
        std::size_t terms = 0;
        if (cfg_.alphabet == "xy") {
            WordPoly p = shuffle_xy(parse_wordpoly(cfg_.operand_u), parse_wordpoly(cfg_.operand_v));
            result = to_string(p);
            terms = p.size();
        } else {
            ZPoly p = shuffle_z(parse_zpoly(cfg_.operand_u), parse_zpoly(cfg_.operand_v));
            result = to_string(p);
            terms = p.size();
        }
        if (cfg_.json_output) {
            out_ << json{{"alphabet", cfg_.alphabet}, {"u", cfg_.operand_u}, {"v", cfg_.operand_v},
                         {"result", result}, {"terms", terms}}.dump()
                 << '\n';
        } else {
            out_ << result << '\n';
        }
        return kOk;
    }

    int encode() {
        Composition c = Composition::parse(cfg_.composition);
        Word w = encode_z(c);
        if (cfg_.json_output) {
            out_ << json{{"composition", c.to_string()}, {"word", w.str()}}.dump() << '\n';
        } else {
            out_ << w << '\n';
        }
        return kOk;
    }

    int decode() {
        Word w = cfg_.word == "1" ? Word() : Word::parse(cfg_.word);
        Composition c = decode_z(w);
        if (cfg_.json_output) {
            out_ << json{{"word", w.str()}, {"composition", c.to_string()}, {"admissible", is_admissible(c)}}.dump()
                 << '\n';
        } else {
            out_ << c << '\n';
        }
        return kOk;
    }

    int mzv() {
        Composition c = Composition::parse(cfg_.composition);
        const auto method = numeric::parse_method(cfg_.method);
        const auto start = std::chrono::steady_clock::now();
        numeric::EvalResult r = numeric::zeta(c, cfg_.precision, method, cfg_.cutoff);
        const std::string value = r.value.to_string(cfg_.precision);
        const std::string bound = r.error_bound.to_string(3);
        if (cfg_.json_output) {
            json j{{"composition", c.to_string()}, {"value", value},   {"precision", cfg_.precision},
                   {"method", numeric::to_string(r.method)}, {"error_bound", bound}};
            if (method == numeric::Method::truncated) j["cutoff"] = cfg_.cutoff;
            j["runtime_ms"] = runtime_since(start);
            out_ << j.dump() << '\n';
        } else {
            out_ << value << '\n';
            out_ << "# precision=" << cfg_.precision << " method=" << numeric::to_string(r.method)
                 << " error_bound=" << bound << '\n';
        }
        return kOk;
    }

    int verify_prop2() {
        if (!cfg_.n || !cfg_.big_n) throw CLI::ValidationError("verify prop2", "--n and --N are required");
        const Prop2Variant v = cfg_.eq == 1 ? Prop2Variant::eq1 : Prop2Variant::eq2;
        std::vector<CheckReport> reports;
        reports.push_back(timed([&] { return verify::to_check_report(identities::verify_prop2(*cfg_.n, *cfg_.big_n, v)); }));
        if (cfg_.numeric_check) {
            reports.push_back(timed([&] {
                return verify::check_prop2_numeric(*cfg_.n, *cfg_.big_n, cfg_.precision, v).to_check_report();
            }));
        }
        return emit(reports);
    }

    int verify_eq3() {
        if (cfg_.max) return emit_sweep(verify::sweep(verify::SweepKind::eq3, {*cfg_.max, 0, std::nullopt}, cfg_.precision,
                                                      cfg_.seed, !cfg_.no_timing));
        if (!cfg_.m || !cfg_.n) throw CLI::ValidationError("verify eq3", "give --max or both --m and --n");
        return emit({timed([&] { return verify::to_check_report(identities::eq3_check(*cfg_.m, *cfg_.n)); })});
    }

    int verify_thm1() {
        if (cfg_.max) {
            return emit_sweep(verify::sweep(verify::SweepKind::thm1_numeric, {*cfg_.max, 0, std::nullopt}, cfg_.precision,
                                            cfg_.seed, !cfg_.no_timing));
        }
        if (!cfg_.m || !cfg_.n) throw CLI::ValidationError("verify thm1", "give --m and --n (or --max)");
        const auto method = numeric::parse_method(cfg_.method);
        return emit({timed([&] { return verify::check_thm1(*cfg_.m, *cfg_.n, cfg_.precision, method).to_check_report(); })});
    }

    int verify_hom() {
        if (cfg_.have_c1 || cfg_.have_c2) {
            Composition a = Composition::parse(cfg_.c1);
            Composition b = Composition::parse(cfg_.c2);
            return emit({timed([&] { return verify::check_homomorphism(a, b, cfg_.precision).to_check_report(); })});
        }
        return emit_sweep(verify::sweep(verify::SweepKind::homomorphism_random, {cfg_.weight, cfg_.count, std::nullopt},
                                        cfg_.precision, cfg_.seed, !cfg_.no_timing));
    }

    int sweep() {
        const auto kind = verify::parse_sweep_kind(cfg_.sweep_kind);
        verify::SweepBounds bounds;
        bounds.count = cfg_.count;
        switch (kind) {
            case verify::SweepKind::prop2_exact: bounds.max = cfg_.max.value_or(8); break;
            case verify::SweepKind::eq3: bounds.max = cfg_.max.value_or(40); break;
            case verify::SweepKind::thm1_numeric: bounds.max = cfg_.max.value_or(12); break;
            case verify::SweepKind::homomorphism_random: bounds.max = cfg_.max.value_or(cfg_.weight); break;
        }
        if (cfg_.eq_filter == "1") bounds.variant = Prop2Variant::eq1;
        if (cfg_.eq_filter == "2") bounds.variant = Prop2Variant::eq2;
        return emit_sweep(verify::sweep(kind, bounds, cfg_.precision, cfg_.seed, !cfg_.no_timing));
    }

private:
    double runtime_since(std::chrono::steady_clock::time_point start) const {
        if (cfg_.no_timing) return 0.0;
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    CheckReport timed(const std::function<CheckReport()>& fn) const {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r = fn();
        r.runtime_ms = runtime_since(start);
        return r;
    }

    void print_text(const CheckReport& r) {
        out_ << (r.passed ? "PASS " : "FAIL ") << r.check;
        for (const auto& [key, value] : r.params.items()) {
            out_ << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        out_ << " lhs=" << r.lhs << " rhs=" << r.rhs << " abs_error=" << r.abs_error << " tolerance=" << r.tolerance
             << '\n';
    }

    int emit(const std::vector<CheckReport>& reports) {
        bool ok = true;
        for (const auto& r : reports) {
            ok = ok && r.passed;
            if (cfg_.json_output) {
                out_ << r.to_json().dump() << '\n';
            } else {
                print_text(r);
            }
        }
        return ok ? kOk : kCheckFailed;
    }

    int emit_sweep(const verify::SweepSummary& s) {
        if (cfg_.json_output) {
            for (const auto& r : s.cells) out_ << r.to_json().dump() << '\n';
            out_ << s.to_json().dump() << '\n';
        } else {
            for (std::size_t i : s.failures) print_text(s.cells[i]);
            out_ << (s.all_passed() ? "PASS " : "FAIL ") << s.kind << ": " << (s.cells.size() - s.failures.size()) << '/'
                 << s.cells.size() << " passed, worst abs_error " << s.worst_abs_error;
            if (!cfg_.no_timing) out_ << ", " << static_cast<long>(s.total_runtime_ms) << " ms";
            out_ << '\n';
        }
        return s.all_passed() ? kOk : kCheckFailed;
    }

    const CliConfig& cfg_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Shuffle algebra and multiple zeta value toolkit", argv.empty() ? "mzvkit" : argv.front()};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--prec", cfg.precision, "Decimal digits of precision")->check(CLI::Range(numeric::kMinDigits, 100000));
    app.add_option("--method", cfg.method, "MZV evaluator")->check(CLI::IsMember({"hoelder", "truncated"}));
    app.add_flag("--json", cfg.json_output, "Emit JSON lines instead of text");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_flag("--no-timing", cfg.no_timing, "Report all runtimes as 0 (byte-reproducible output)");

    std::function<int()> action;
    Runner runner(cfg, out);

    auto* shuffle = app.add_subcommand("shuffle", "Shuffle product of two polynomials");
    shuffle->add_option("alphabet", cfg.alphabet, "xy or z")->required()->check(CLI::IsMember({"xy", "z"}));
    shuffle->add_option("u", cfg.operand_u, "Left operand")->required();
    shuffle->add_option("v", cfg.operand_v, "Right operand")->required();
    shuffle->callback([&] { action = [&] { return runner.shuffle(); }; });

    auto* encode = app.add_subcommand("encode", "Composition to {x,y}-word (z_k = x^(k-1) y)");
    encode->add_option("composition", cfg.composition)->required();
    encode->callback([&] { action = [&] { return runner.encode(); }; });

    auto* decode = app.add_subcommand("decode", "{x,y}-word ending in y to composition");
    decode->add_option("word", cfg.word)->required();
    decode->callback([&] { action = [&] { return runner.decode(); }; });

    auto* mzv = app.add_subcommand("mzv", "Evaluate a multiple zeta value");
    mzv->add_option("composition", cfg.composition)->required();
    mzv->add_option("--cutoff", cfg.cutoff, "Truncation point for --method truncated")->check(CLI::PositiveNumber);
    mzv->callback([&] { action = [&] { return runner.mzv(); }; });

    auto* verify_cmd = app.add_subcommand("verify", "Check one identity");
    verify_cmd->require_subcommand(1);

    auto* prop2 = verify_cmd->add_subcommand("prop2", "z2^n sh z2^N expansion (exact)");
    prop2->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
    prop2->add_option("--N", cfg.big_n)->check(CLI::NonNegativeNumber);
    prop2->add_option("--eq", cfg.eq, "1 or 2")->check(CLI::IsMember({1, 2}));
    prop2->add_flag("--numeric", cfg.numeric_check, "Also compare Z of both sides (eq 1 only)");
    prop2->callback([&] { action = [&] { return runner.verify_prop2(); }; });

    auto* eq3 = verify_cmd->add_subcommand("eq3", "Binomial key identity (exact)");
    eq3->add_option("--m", cfg.m)->check(CLI::NonNegativeNumber);
    eq3->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
    eq3->add_option("--max", cfg.max, "Check all 0 <= m, n <= max")->check(CLI::NonNegativeNumber);
    eq3->callback([&] { action = [&] { return runner.verify_eq3(); }; });

    auto* thm1 = verify_cmd->add_subcommand("thm1", "Z(z2^m sh~ (z3 z1)^n) against its closed form");
    thm1->add_option("--m", cfg.m)->check(CLI::NonNegativeNumber);
    thm1->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
    thm1->add_option("--max", cfg.max, "Check all cells with 2m + 4n <= max")->check(CLI::NonNegativeNumber);
    thm1->callback([&] { action = [&] { return runner.verify_thm1(); }; });

    auto* hom = verify_cmd->add_subcommand("hom", "Z(w1 sh w2) = Z(w1) Z(w2)");
    hom->add_option("--c1", cfg.c1)->each([&](const std::string&) { cfg.have_c1 = true; });
    hom->add_option("--c2", cfg.c2)->each([&](const std::string&) { cfg.have_c2 = true; });
    hom->add_option("--count", cfg.count, "Random pairs when --c1/--c2 are absent")->check(CLI::NonNegativeNumber);
    hom->add_option("--weight", cfg.weight, "Maximum total weight of random pairs")->check(CLI::Range(4, 64));
    hom->callback([&] { action = [&] { return runner.verify_hom(); }; });

    auto* sweep = app.add_subcommand("sweep", "Run a whole verification grid");
    sweep->add_option("kind", cfg.sweep_kind, "prop2-exact | eq3 | thm1-numeric | homomorphism-random")
        ->required()
        ->check(CLI::IsMember({"prop2-exact", "eq3", "thm1-numeric", "homomorphism-random"}));
    sweep->add_option("--max", cfg.max, "Grid bound (see README)")->check(CLI::NonNegativeNumber);
    sweep->add_option("--count", cfg.count, "homomorphism-random: number of pairs")->check(CLI::NonNegativeNumber);
    sweep->add_option("--eq", cfg.eq_filter, "prop2-exact: 1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    sweep->callback([&] { action = [&] { return runner.sweep(); }; });

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const DivergentError& e) {
        err << e.what() << '\n';
        return kCheckFailed;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace mzv::cli
