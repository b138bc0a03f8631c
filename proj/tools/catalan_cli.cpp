// Command-line front end. Talks to the shared library exclusively through
// the C interface in catalan.h.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "catalan.h"

namespace {

struct ReportDeleter {
    void operator()(catalan_report* r) const { catalan_report_free(r); }
};
using ReportPtr = std::unique_ptr<catalan_report, ReportDeleter>;

// Bounds accept underscore separators: 100_000_000.
uint64_t parse_u64(const std::string& text) {
    std::string digits;
    for (char c : text) {
        if (c == '_') continue;
        if (c < '0' || c > '9') throw CLI::ValidationError("not a natural number: " + text);
        digits += c;
    }
    if (digits.empty()) throw CLI::ValidationError("not a natural number: " + text);
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(digits.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0')
        throw CLI::ValidationError("out of range: " + text);
    return static_cast<uint64_t>(v);
}

std::string render_text(const catalan_report* rep) {
    std::string out;
    size_t records = catalan_report_records(rep);
    for (size_t r = 0; r < records; ++r) {
        size_t fields = catalan_report_fields(rep, r);
        for (size_t f = 0; f < fields; ++f) {
            if (f) out += " ";
            std::string value = catalan_report_value(rep, r, f);
            bool quote = value.find(' ') != std::string::npos || value.empty();
            out += catalan_report_key(rep, r, f);
            out += "=";
            if (quote) out += "\"";
            out += value;
            if (quote) out += "\"";
        }
        out += "\n";
    }
    return out;
}

int emit(catalan_status status, ReportPtr rep, const std::string& format,
         const std::string& out_file, long elapsed_ms) {
    if (status == CATALAN_INVALID_ARGUMENT) {
        std::cerr << "error: " << catalan_last_error() << "\n";
        return 2;
    }
    if (!rep) {
        std::cerr << "error: " << catalan_last_error() << "\n";
        return 1;
    }
    std::string text =
        format == "json" ? std::string(catalan_report_json(rep.get())) : render_text(rep.get());
    if (elapsed_ms >= 0) {
        // opted in via --timing; kept out of the default output so identical
        // invocations stay byte-identical
        if (format == "json")
            text += "{\"record\":\"timing\",\"elapsed_ms\":\"" +
                    std::to_string(elapsed_ms) + "\"}\n";
        else
            text += "record=timing elapsed_ms=" + std::to_string(elapsed_ms) + "\n";
    }
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_file << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return catalan_report_passed(rep.get()) ? 0 : 1;
}

unsigned default_threads() {
    const char* env = std::getenv("CATALAN_THREADS");
    if (env == nullptr) return 1;
    try {
        unsigned long v = std::stoul(env);
        return v == 0 ? 1 : static_cast<unsigned>(v);
    } catch (...) {
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic searches and lemma checks around consecutive perfect powers"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_file;
    std::string threads_text = std::to_string(default_threads());
    bool timing = false;
    app.add_option("--format", format, "output rendering")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_file, "write the report to a file instead of stdout");
    app.add_option("--threads", threads_text,
                   "worker threads for the big searches (default from CATALAN_THREADS)");
    app.add_flag("--timing", timing, "append an elapsed-time record to the report");

    std::string opt_d = "3", opt_bound, opt_cube_bound, opt_limit, opt_max, opt_qlimit;
    std::string opt_p, opt_q, opt_m, opt_n, opt_l, opt_c, opt_re = "0", opt_im = "0";
    std::string opt_identities = "0";
    std::string lemma_name;

    CLI::App* pell = app.add_subcommand("pell", "enumerate x^2 - d y^2 = 1");
    pell->add_option("--d", opt_d, "non-square d >= 2")->capture_default_str();
    pell->add_option("--bound", opt_bound, "largest x")->required();
    pell->add_option("--identities", opt_identities,
                     "for d=3, check the doubling identities up to this index");

    CLI::App* mordell = app.add_subcommand("mordell", "solve x^2 - y^3 = 1");
    mordell->add_option("--bound", opt_bound, "largest |x|")->required();

    CLI::App* quartic = app.add_subcommand("quartic", "solve x^4 - c y^2 = 1, c in {2,3}");
    quartic->add_option("--c", opt_c, "coefficient, 2 or 3")->required();
    quartic->add_option("--bound", opt_bound, "largest |x|")->required();

    CLI::App* wakulicz = app.add_subcommand("wakulicz", "solve x^3 + y^3 = 2z^3");
    wakulicz->add_option("--bound", opt_bound, "largest |x|,|y|,|z|")->required();
    wakulicz->add_option("--cube-bound", opt_cube_bound,
                         "largest |x| for the derived x^3 - 2y^3 = +-1 scan");

    CLI::App* chao_ko = app.add_subcommand("chao-ko", "solve x^2 - y^q = 1, prime q >= 5");
    chao_ko->add_option("--q", opt_q, "prime exponent q >= 5")->required();
    chao_ko->add_option("--bound", opt_bound, "largest |x|")->required();

    CLI::App* lebesgue = app.add_subcommand("lebesgue", "solve x^m - y^2 = 1, odd m >= 3");
    lebesgue->add_option("--m", opt_m, "odd exponent m >= 3")->required();
    lebesgue->add_option("--bound", opt_bound, "largest x")->required();

    CLI::App* pq = app.add_subcommand("catalan-pq", "scan x^p - y^q = 1, odd primes p > q");
    pq->add_option("--p", opt_p, "larger odd prime")->required();
    pq->add_option("--q", opt_q, "smaller odd prime")->required();
    pq->add_option("--bound", opt_bound, "largest |x|,|y|")->required();

    CLI::App* powers =
        app.add_subcommand("consecutive-powers", "find consecutive perfect powers");
    powers->add_option("--max", opt_max, "largest value to enumerate")->required();

    CLI::App* wieferich =
        app.add_subcommand("wieferich", "search double Wieferich pairs of odd primes");
    wieferich->add_option("--limit", opt_limit, "largest prime")->required();

    CLI::App* deduction =
        app.add_subcommand("deduction", "replay the final exponent-pair elimination");
    deduction->add_option("--q-limit", opt_qlimit, "largest odd prime q")->required();

    CLI::App* fmn = app.add_subcommand(
        "fmn", "Taylor coefficients of ((1+X)^m - X^m)^{1/n} up to degree l");
    fmn->add_option("--m", opt_m, "m >= 1")->required();
    fmn->add_option("--n", opt_n, "odd n >= 1")->required();
    fmn->add_option("--l", opt_l, "degree l < m")->required();

    CLI::App* fg = app.add_subcommand("factor-gaussian", "factor re + im*i in Z[i]");
    fg->add_option("--re", opt_re, "real part")->capture_default_str();
    fg->add_option("--im", opt_im, "imaginary part")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify-lemma", "run a named lemma suite");
    verify->add_option("name", lemma_name, "suite name; use 'list' to print all");

    // global flags may appear after the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        uint32_t threads = static_cast<uint32_t>(parse_u64(threads_text));
        if (threads == 0) threads = 1;
        catalan_report* raw = nullptr;
        catalan_status status = CATALAN_INVALID_ARGUMENT;
        auto started = std::chrono::steady_clock::now();

        if (*pell) {
            status = catalan_run_pell(parse_u64(opt_d), parse_u64(opt_bound),
                                      static_cast<uint32_t>(parse_u64(opt_identities)),
                                      &raw);
        } else if (*mordell) {
            status = catalan_run_mordell(parse_u64(opt_bound), &raw);
        } else if (*quartic) {
            status = catalan_run_quartic(static_cast<uint32_t>(parse_u64(opt_c)),
                                         parse_u64(opt_bound), &raw);
        } else if (*wakulicz) {
            uint64_t cube =
                opt_cube_bound.empty() ? parse_u64(opt_bound) : parse_u64(opt_cube_bound);
            status = catalan_run_wakulicz(parse_u64(opt_bound), cube, &raw);
        } else if (*chao_ko) {
            status = catalan_run_chao_ko(static_cast<uint32_t>(parse_u64(opt_q)),
                                         parse_u64(opt_bound), &raw);
        } else if (*lebesgue) {
            status = catalan_run_lebesgue(static_cast<uint32_t>(parse_u64(opt_m)),
                                          parse_u64(opt_bound), &raw);
        } else if (*pq) {
            status = catalan_run_catalan_pq(static_cast<uint32_t>(parse_u64(opt_p)),
                                            static_cast<uint32_t>(parse_u64(opt_q)),
                                            parse_u64(opt_bound), threads, &raw);
        } else if (*powers) {
            status = catalan_run_consecutive_powers(parse_u64(opt_max), threads, &raw);
        } else if (*wieferich) {
            status = catalan_run_wieferich(parse_u64(opt_limit), threads, &raw);
        } else if (*deduction) {
            status = catalan_run_deduction(parse_u64(opt_qlimit), &raw);
        } else if (*fmn) {
            status = catalan_run_fmn(static_cast<uint32_t>(parse_u64(opt_m)),
                                     static_cast<uint32_t>(parse_u64(opt_n)),
                                     static_cast<uint32_t>(parse_u64(opt_l)), &raw);
        } else if (*fg) {
            status = catalan_factor_gaussian(opt_re.c_str(), opt_im.c_str(), &raw);
        } else if (*verify) {
            if (lemma_name.empty() || lemma_name == "list") {
                for (size_t i = 0; i < catalan_lemma_count(); ++i)
                    std::cout << catalan_lemma_name(i) << "\n";
                return lemma_name == "list" ? 0 : 2;
            }
            status = catalan_verify_lemma(lemma_name.c_str(), &raw);
            if (status == CATALAN_INVALID_ARGUMENT) {
                std::cerr << "error: " << catalan_last_error() << "\navailable:\n";
                for (size_t i = 0; i < catalan_lemma_count(); ++i)
                    std::cerr << "  " << catalan_lemma_name(i) << "\n";
                return 2;
            }
        }

        long elapsed_ms = -1;
        if (timing)
            elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        return emit(status, ReportPtr(raw), format, out_file, elapsed_ms);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
