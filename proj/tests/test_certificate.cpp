#include <doctest.h>

#include <json.hpp>

#include "ramsey/certificate.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "test_util.hpp"

using namespace ramsey;
using testutil::cycle;

namespace {

Certificate c5_certificate() {
    const RamseyQuery q{Kind::r, 3, 3};
    const auto report = verify_witness(cycle(5), q);
    return make_certificate(report, cycle(5));
}

} // namespace

TEST_CASE("certificate round trip and recheck") {
    const Certificate cert = c5_certificate();
    CHECK(cert.claim.type == Certificate::Claim::Type::lower_bound);
    CHECK(cert.claim.value == 6);
    REQUIRE(cert.graph6.has_value());
    CHECK(*cert.graph6 == emit_graph6(cycle(5)));

    const std::string text = certificate_to_json(cert);
    const Certificate back = certificate_from_json(text);
    CHECK(back.claim.value == cert.claim.value);
    CHECK(back.graph6 == cert.graph6);
    CHECK(back.checks.size() == cert.checks.size());
    CHECK(back.tool_version == cert.tool_version);
    CHECK(recheck(back));
}

TEST_CASE("certificate JSON carries the contract fields") {
    const auto j = nlohmann::json::parse(certificate_to_json(c5_certificate()));
    for (const char* key :
         {"schema_version", "query", "claim", "graph6", "checks", "limits", "tool_version"})
        CHECK(j.contains(key));
    CHECK(j["query"]["kind"] == "r");
    CHECK(j["query"]["m"] == 3);
    CHECK(j["claim"]["type"] == "lower_bound");
    CHECK(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
    }
    CHECK(j["limits"].contains("max_nodes"));
    CHECK(j["limits"].contains("max_seconds"));
    CHECK(j["limits"].contains("workers"));
}

TEST_CASE("tampering is caught") {
    Certificate cert = c5_certificate();
    cert.graph6 = emit_graph6(testutil::path(5)); // swap in a different graph
    CHECK_THROWS_AS(recheck(cert), CheckMismatch);

    Certificate cert2 = c5_certificate();
    cert2.checks[0].pass = !cert2.checks[0].pass;
    CHECK_THROWS_AS(recheck(cert2), CheckMismatch);

    Certificate cert3 = c5_certificate();
    cert3.graph6.reset();
    CHECK_THROWS_AS(recheck(cert3), GraphMissing);

    Certificate cert4 = c5_certificate();
    cert4.claim.value = 7; // order no longer matches
    CHECK_THROWS_AS(recheck(cert4), SchemaMismatch);
}

TEST_CASE("forced certificates replay the decision") {
    const RamseyQuery q{Kind::s, 3, 3};
    SearchLimits limits;
    const auto outcome = decide(q, 6, limits);
    REQUIRE(outcome.status == DecideOutcome::Status::forced);
    const Certificate cert = make_certificate(q, 6, outcome, limits);
    CHECK(cert.claim.type == Certificate::Claim::Type::forced);
    CHECK(cert.claim.value == 6);
    CHECK_FALSE(cert.graph6.has_value());
    CHECK(recheck(cert));

    // replay under a one-node budget reports the limit instead of an answer
    Certificate strangled = cert;
    strangled.limits.max_nodes = 1;
    CHECK_THROWS_AS(recheck(strangled), LimitExceededError);

    // a forced claim that is actually witnessed fails the replay
    Certificate wrong = cert;
    wrong.claim.value = 5;
    CHECK_THROWS_AS(recheck(wrong), CheckMismatch);
}

TEST_CASE("decide witnesses certify the next lower bound") {
    const RamseyQuery q{Kind::t, 3, 4};
    SearchLimits limits;
    const auto outcome = decide(q, 8, limits);
    REQUIRE(outcome.status == DecideOutcome::Status::witness);
    const Certificate cert = make_certificate(q, 8, outcome, limits);
    CHECK(cert.claim.type == Certificate::Claim::Type::lower_bound);
    CHECK(cert.claim.value == 9);
    CHECK(recheck(cert));
}

TEST_CASE("schema validation") {
    CHECK_THROWS_AS(certificate_from_json("not json"), SchemaMismatch);
    CHECK_THROWS_AS(certificate_from_json("{}"), SchemaMismatch);
    CHECK_THROWS_AS(certificate_from_json(R"({"schema_version":99})"), SchemaMismatch);

    auto j = nlohmann::json::parse(certificate_to_json(c5_certificate()));
    j["query"]["kind"] = "z";
    CHECK_THROWS_AS(certificate_from_json(j.dump()), UnsupportedKind);
    j["query"]["kind"] = "r";
    j["claim"]["type"] = "upper_bound";
    CHECK_THROWS_AS(certificate_from_json(j.dump()), SchemaMismatch);

    // verification failures never become certificates
    const auto bad = verify_witness(cycle(6), {Kind::s, 3, 3});
    CHECK_FALSE(bad.is_valid_witness);
    CHECK_THROWS_AS(make_certificate(bad, cycle(6)), CheckMismatch);
}
