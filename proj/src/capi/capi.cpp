#include "catalan.h"

#include <string>

#include "../core/cassels.hpp"
#include "../core/checks.hpp"
#include "../core/criteria.hpp"
#include "../core/diophantine.hpp"
#include "../core/domain.hpp"
#include "../core/gaussian.hpp"
#include "../core/pell.hpp"
#include "../core/report.hpp"
#include "../core/series_oracle.hpp"

using namespace catalan;

struct catalan_report {
    Report body;
    std::string json_cache;
};

namespace {

thread_local std::string g_last_error;

catalan_status finish_call(catalan_report** out, catalan_report* rep) {
    *out = rep;
    return rep->body.passed ? CATALAN_OK : CATALAN_VERIFICATION_FAILED;
}

template <typename Fn>
catalan_status guarded(catalan_report** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "output handle is null";
        return CATALAN_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        return finish_call(out, new catalan_report{fn(), {}});
    } catch (const rejected_input& e) {
        g_last_error = e.what();
        return CATALAN_INVALID_ARGUMENT;
    } catch (const verification_error& e) {
        g_last_error = e.what();
        return CATALAN_VERIFICATION_FAILED;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CATALAN_INTERNAL_ERROR;
    }
}

Record& header(Report& rep, const std::string& command) {
    return rep.add_record()
        .add("record", std::string("header"))
        .add("command", command);
}

void solution_records(Report& rep, const SolutionReport& sr,
                      const std::vector<std::string>& names) {
    for (const auto& tuple : sr.solutions()) {
        Record& r = rep.add_record().add("record", std::string("solution"));
        for (size_t i = 0; i < tuple.size(); ++i)
            r.add(i < names.size() ? names[i] : "v" + std::to_string(i), tuple[i]);
    }
    for (const std::string& n : sr.notes())
        rep.add_record().add("record", std::string("note")).add("text", n);
}

} // namespace

extern "C" {

const char* catalan_version(void) { return "0.1.0"; }

const char* catalan_last_error(void) { return g_last_error.c_str(); }

void catalan_report_free(catalan_report* report) { delete report; }

int catalan_report_passed(const catalan_report* report) {
    return report != nullptr && report->body.passed ? 1 : 0;
}

size_t catalan_report_records(const catalan_report* report) {
    return report == nullptr ? 0 : report->body.records.size();
}

size_t catalan_report_fields(const catalan_report* report, size_t record) {
    if (report == nullptr || record >= report->body.records.size()) return 0;
    return report->body.records[record].fields.size();
}

const char* catalan_report_key(const catalan_report* report, size_t record,
                               size_t field) {
    if (report == nullptr || record >= report->body.records.size()) return nullptr;
    const auto& fields = report->body.records[record].fields;
    if (field >= fields.size()) return nullptr;
    return fields[field].first.c_str();
}

const char* catalan_report_value(const catalan_report* report, size_t record,
                                 size_t field) {
    if (report == nullptr || record >= report->body.records.size()) return nullptr;
    const auto& fields = report->body.records[record].fields;
    if (field >= fields.size()) return nullptr;
    return fields[field].second.c_str();
}

const char* catalan_report_json(catalan_report* report) {
    if (report == nullptr) return nullptr;
    report->json_cache = report->body.to_json();
    return report->json_cache.c_str();
}

catalan_status catalan_run_pell(uint64_t d, uint64_t x_bound, uint32_t identity_n,
                                catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "pell")
            .add("d", d)
            .add("x_bound", x_bound)
            .add("identity_n", static_cast<uint64_t>(identity_n));
        std::vector<PellSolution> sols = pell_enumerate(d, Int(x_bound));
        for (const PellSolution& s : sols)
            rep.add_record()
                .add("record", std::string("solution"))
                .add("n", static_cast<uint64_t>(s.index))
                .add("x", s.x)
                .add("y", s.y);
        bool pass = true;
        if (d == 3 && identity_n > 0) {
            std::string violation;
            for (unsigned long n = 0; n <= identity_n; ++n) {
                Sqrt3IdentityReport ir = sqrt3_identity_check(n);
                if (!ir.pass) {
                    pass = false;
                    violation = "n=" + std::to_string(n) + ": " + ir.violation;
                    break;
                }
            }
            Record& r = rep.add_record()
                            .add("record", std::string("identity-check"))
                            .add("n_max", static_cast<uint64_t>(identity_n))
                            .add("pass", pass);
            if (!pass) r.add("violation", violation);
        }
        rep.finish(pass).add("solutions", static_cast<uint64_t>(sols.size()));
        return rep;
    });
}

catalan_status catalan_run_mordell(uint64_t bound, catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "mordell").add("bound", bound);
        SolutionReport sr = mordell_search(Int(static_cast<unsigned long>(bound)));
        for (const auto& tuple : sr.solutions()) {
            MordellTrace tr = mordell_classify(tuple[0], tuple[1]);
            Record& r = rep.add_record()
                            .add("record", std::string("solution"))
                            .add("x", tuple[0])
                            .add("y", tuple[1])
                            .add("gcd_branch", tr.gcd_branch);
            r.add("classification", tr.lines.back());
        }
        bool pass = sr.solutions_equal(mordell_known_solutions());
        rep.finish(pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string("(+-3,2), (+-1,0), (0,-1)"));
        return rep;
    });
}

catalan_status catalan_run_quartic(uint32_t c, uint64_t bound, catalan_report** out) {
    return guarded(out, [&] {
        require(c == 2 || c == 3, "coefficient must be 2 or 3");
        Report rep;
        header(rep, "quartic").add("c", static_cast<uint64_t>(c)).add("bound", bound);
        QuarticKind kind = c == 2 ? QuarticKind::minus_two : QuarticKind::minus_three;
        SolutionReport sr = quartic_search(kind, Int(static_cast<unsigned long>(bound)));
        solution_records(rep, sr, {"x", "y"});
        bool pass = sr.solutions_equal(quartic_known_solutions());
        rep.finish(pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string("(+-1,0)"));
        return rep;
    });
}

catalan_status catalan_run_wakulicz(uint64_t bound, uint64_t cube_bound,
                                    catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "wakulicz").add("bound", bound).add("cube_bound", cube_bound);
        SolutionReport sr = wakulicz_search(Int(static_cast<unsigned long>(bound)));
        bool families = true;
        for (const auto& t : sr.solutions())
            if (!wakulicz_trivial_family(t)) families = false;
        solution_records(rep, sr, {"x", "y", "z"});
        SolutionReport cubes = cube_pair_search(Int(static_cast<unsigned long>(cube_bound)));
        for (const auto& t : cubes.solutions())
            rep.add_record()
                .add("record", std::string("cube-pair"))
                .add("x", t[0])
                .add("y", t[1]);
        bool cubes_pass = cubes.solutions_equal(cube_pair_known_solutions());
        rep.finish(families && cubes_pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("only_trivial_families", families)
            .add("cube_pairs", static_cast<uint64_t>(cubes.solutions().size()));
        return rep;
    });
}

catalan_status catalan_run_chao_ko(uint32_t q, uint64_t x_bound, catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "chao-ko").add("q", static_cast<uint64_t>(q)).add("x_bound", x_bound);
        SolutionReport sr = chao_ko_search(q, Int(static_cast<unsigned long>(x_bound)));
        solution_records(rep, sr, {"x", "y"});
        bool pass = sr.solutions_equal(chao_ko_known_solutions());
        rep.finish(pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string("(+-1,0), (0,-1)"));
        return rep;
    });
}

catalan_status catalan_run_lebesgue(uint32_t m, uint64_t x_bound, catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "lebesgue").add("m", static_cast<uint64_t>(m)).add("x_bound", x_bound);
        SolutionReport sr = lebesgue_search(m, Int(static_cast<unsigned long>(x_bound)));
        solution_records(rep, sr, {"x", "y"});
        bool pass = sr.solutions_equal(lebesgue_known_solutions());
        rep.finish(pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string("(1,0)"));
        return rep;
    });
}

catalan_status catalan_run_catalan_pq(uint32_t p, uint32_t q, uint64_t bound,
                                      uint32_t threads, catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "catalan-pq")
            .add("p", static_cast<uint64_t>(p))
            .add("q", static_cast<uint64_t>(q))
            .add("bound", bound);
        SolutionReport sr =
            catalan_pq_search(p, q, Int(static_cast<unsigned long>(bound)), threads);
        solution_records(rep, sr, {"x", "y"});
        bool pass = sr.solutions().empty();
        rep.finish(pass)
            .add("solutions", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string("none"));
        return rep;
    });
}

catalan_status catalan_run_consecutive_powers(uint64_t max, uint32_t threads,
                                              catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "consecutive-powers").add("max", max);
        SolutionReport sr = consecutive_power_search(max, threads);
        solution_records(rep, sr, {"a", "b"});
        bool pass;
        if (max >= 9)
            pass = sr.solutions_equal({{Int(8), Int(9)}});
        else
            pass = sr.solutions().empty();
        rep.finish(pass)
            .add("pairs", static_cast<uint64_t>(sr.solutions().size()))
            .add("expected_set", std::string(max >= 9 ? "(8,9)" : "none"));
        return rep;
    });
}

catalan_status catalan_run_wieferich(uint64_t limit, uint32_t threads,
                                     catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "wieferich").add("limit", limit);
        auto pairs = search_double_wieferich(limit, threads);
        for (const auto& [p, q] : pairs)
            rep.add_record()
                .add("record", std::string("pair"))
                .add("p", p)
                .add("q", q);
        rep.finish(true).add("pairs", static_cast<uint64_t>(pairs.size()));
        return rep;
    });
}

catalan_status catalan_run_deduction(uint64_t q_limit, catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "deduction").add("q_limit", q_limit);
        DeductionReport dr = final_deduction_check(q_limit);
        for (const auto& [p, q] : dr.survivors)
            rep.add_record()
                .add("record", std::string("survivor"))
                .add("p", p)
                .add("q", q);
        for (const std::string& n : dr.notes)
            rep.add_record().add("record", std::string("note")).add("text", n);
        bool pass = dr.survivors.size() == 1 && dr.survivors[0].first == 19 &&
                    dr.survivors[0].second == 3;
        rep.finish(pass)
            .add("odd_primes_checked", dr.odd_primes_checked)
            .add("eliminated_by_parity", dr.eliminated_by_parity)
            .add("eliminated_by_three", dr.eliminated_by_three);
        return rep;
    });
}

catalan_status catalan_run_fmn(uint32_t m, uint32_t n, uint32_t l,
                               catalan_report** out) {
    return guarded(out, [&] {
        Report rep;
        header(rep, "fmn")
            .add("m", static_cast<uint64_t>(m))
            .add("n", static_cast<uint64_t>(n))
            .add("l", static_cast<uint64_t>(l));
        FmnCoefficients fc = fmn_coefficients(m, n, l);
        std::vector<Rat> h = series::one_plus_x_pow_minus_x_pow(m, l);
        std::vector<Rat> oracle = series::nth_root(h, n, l);
        bool pass = true;
        for (unsigned j = 0; j <= l; ++j) {
            bool same = fc.coeff[j] == oracle[j];
            if (!same) pass = false;
            rep.add_record()
                .add("record", std::string("coefficient"))
                .add("j", static_cast<uint64_t>(j))
                .add("value", fc.coeff[j])
                .add("series_oracle_match", same);
        }
        rep.finish(pass).add("coefficients", static_cast<uint64_t>(l) + 1);
        return rep;
    });
}

catalan_status catalan_factor_gaussian(const char* re, const char* im,
                                       catalan_report** out) {
    return guarded(out, [&] {
        require(re != nullptr && im != nullptr, "re and im must be decimal strings");
        Int r, i;
        if (mpz_set_str(r.get_mpz_t(), re, 10) != 0)
            throw rejected_input("re is not a decimal integer");
        if (mpz_set_str(i.get_mpz_t(), im, 10) != 0)
            throw rejected_input("im is not a decimal integer");
        GaussianInt z(r, i);
        Report rep;
        header(rep, "factor-gaussian").add("re", r).add("im", i);
        Factorization<GaussianDomain> f = factorize<GaussianDomain>(z);
        for (const auto& [irr, mult] : f.factors)
            rep.add_record()
                .add("record", std::string("factor"))
                .add("value", gaussian_str(irr))
                .add("norm", norm(irr))
                .add("multiplicity", static_cast<uint64_t>(mult));
        rep.add_record().add("record", std::string("unit")).add("value",
                                                                gaussian_str(f.unit));
        bool pass = reconstruct<GaussianDomain>(f) == z;
        rep.finish(pass).add("factors", static_cast<uint64_t>(f.factors.size()));
        return rep;
    });
}

size_t catalan_lemma_count(void) { return lemma_check_names().size(); }

const char* catalan_lemma_name(size_t index) {
    static thread_local std::string slot;
    std::vector<std::string> names = lemma_check_names();
    if (index >= names.size()) return nullptr;
    slot = names[index];
    return slot.c_str();
}

catalan_status catalan_verify_lemma(const char* name, catalan_report** out) {
    return guarded(out, [&] {
        require(name != nullptr, "lemma name must not be null");
        return run_lemma_check(name);
    });
}

} // extern "C"
