#include <doctest.h>

#include "checks.hpp"
#include "report.hpp"

using namespace catalan;

TEST_CASE("json round trip is lossless") {
    Report rep;
    rep.add_record()
        .add("record", std::string("header"))
        .add("command", std::string("demo"))
        .add("bound", Int("123456789012345678901234567890"))
        .add("ratio", make_rat(-7, 125));
    rep.add_record()
        .add("record", std::string("note"))
        .add("text", std::string("value with spaces, quotes \" and backslash \\"));
    rep.finish(true).add("cases", uint64_t{42});

    std::string json = rep.to_json();
    Report back = Report::from_json(json);
    CHECK(back == rep);
    CHECK(back.to_json() == json);
}

TEST_CASE("status comes back from the summary record") {
    Report rep;
    rep.add_record().add("record", std::string("header"));
    rep.finish(false);
    Report back = Report::from_json(rep.to_json());
    CHECK_FALSE(back.passed);
}

TEST_CASE("identical runs render byte-identically") {
    Report a = run_lemma_check("pell-identities");
    Report b = run_lemma_check("pell-identities");
    CHECK(a.to_json() == b.to_json());
    Report c = run_lemma_check("gaussian-division");
    Report d = run_lemma_check("gaussian-division");
    CHECK(c.to_json() == d.to_json());
}

TEST_CASE("every registered lemma suite passes") {
    for (const std::string& name : lemma_check_names()) {
        Report rep = run_lemma_check(name);
        INFO(name);
        CHECK(rep.passed);
        REQUIRE(!rep.records.empty());
        const std::string* status = rep.records.back().find("status");
        REQUIRE(status != nullptr);
        CHECK(*status == "pass");
    }
}

TEST_CASE("unknown check names are rejected") {
    CHECK_THROWS_AS(run_lemma_check("nope"), rejected_input);
    CHECK(has_lemma_check("pell-identities"));
    CHECK_FALSE(has_lemma_check("nope"));
}
