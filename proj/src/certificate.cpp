#include "ramsey/certificate.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/version.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json jc{{"name", c.name}, {"pass", c.pass}};
        if (c.witness) jc["witness"] = c.witness->to_vector();
        arr.push_back(std::move(jc));
    }
    return arr;
}

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaMismatch(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace

Certificate make_certificate(const VerificationReport& report, const Graph& g_red) {
    if (!report.is_valid_witness)
        throw CheckMismatch("certificates attest valid witnesses only; this verification failed");
    Certificate cert;
    cert.query = report.query;
    cert.claim = {Certificate::Claim::Type::lower_bound, report.order + 1};
    cert.graph6 = emit_graph6(g_red);
    cert.checks = report.checks;
    cert.tool_version = kToolVersion;
    cert.timestamp = utc_now();
    return cert;
}

Certificate make_certificate(const RamseyQuery& query, int p, const DecideOutcome& outcome,
                             const SearchLimits& limits) {
    Certificate cert;
    cert.query = query;
    cert.limits = limits;
    cert.tool_version = kToolVersion;
    cert.timestamp = utc_now();
    if (outcome.status == DecideOutcome::Status::forced) {
        cert.claim = {Certificate::Claim::Type::forced, p};
        cert.checks.push_back({"decide_forced", true, std::nullopt});
    } else if (outcome.status == DecideOutcome::Status::witness) {
        const VerificationReport report = verify_witness(*outcome.witness, query);
        cert = make_certificate(report, *outcome.witness);
        cert.limits = limits;
    } else {
        throw CheckMismatch("cannot certify a limit-exceeded decision");
    }
    return cert;
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["schema_version"] = cert.schema_version;
    j["query"] = {{"kind", std::string(1, kind_char(cert.query.kind))},
                  {"m", cert.query.m},
                  {"n", cert.query.n}};
    j["claim"] = {{"type", cert.claim.type == Certificate::Claim::Type::lower_bound
                               ? "lower_bound"
                               : "forced"},
                  {"value", cert.claim.value}};
    if (cert.graph6) j["graph6"] = *cert.graph6;
    j["checks"] = checks_to_json(cert.checks);
    j["limits"] = {{"max_nodes", cert.limits.max_nodes},
                   {"max_seconds", cert.limits.max_seconds},
                   {"workers", cert.limits.workers}};
    j["tool_version"] = cert.tool_version;
    j["timestamp"] = cert.timestamp;
    return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaMismatch(std::string("not valid JSON: ") + e.what());
    }
    Certificate cert;
    try {
        if (field(j, "schema_version").get<int>() != Certificate::kSchemaVersion)
            throw SchemaMismatch("unknown schema_version");
        const json& q = field(j, "query");
        cert.query.kind = parse_kind(field(q, "kind").get<std::string>());
        cert.query.m = field(q, "m").get<int>();
        cert.query.n = field(q, "n").get<int>();
        cert.query.validate();
        const json& cl = field(j, "claim");
        const std::string type = field(cl, "type").get<std::string>();
        if (type == "lower_bound")
            cert.claim.type = Certificate::Claim::Type::lower_bound;
        else if (type == "forced")
            cert.claim.type = Certificate::Claim::Type::forced;
        else
            throw SchemaMismatch("claim type must be lower_bound or forced");
        cert.claim.value = field(cl, "value").get<int>();
        if (j.contains("graph6")) cert.graph6 = j["graph6"].get<std::string>();
        for (const json& jc : field(j, "checks")) {
            CheckResult c;
            c.name = field(jc, "name").get<std::string>();
            c.pass = field(jc, "pass").get<bool>();
            if (jc.contains("witness")) {
                VertexSet w;
                for (int v : jc["witness"].get<std::vector<int>>()) w.add(v);
                c.witness = w;
            }
            cert.checks.push_back(std::move(c));
        }
        const json& lim = field(j, "limits");
        cert.limits.max_nodes = field(lim, "max_nodes").get<std::uint64_t>();
        cert.limits.max_seconds = field(lim, "max_seconds").get<double>();
        cert.limits.workers = field(lim, "workers").get<int>();
        cert.tool_version = field(j, "tool_version").get<std::string>();
        if (j.contains("timestamp")) cert.timestamp = j["timestamp"].get<std::string>();
    } catch (const json::exception& e) {
        throw SchemaMismatch(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

bool recheck(const Certificate& cert) {
    if (cert.claim.type == Certificate::Claim::Type::lower_bound) {
        if (!cert.graph6) throw GraphMissing("lower_bound certificate carries no graph");
        const Graph g = parse_graph6(*cert.graph6);
        if (g.order() != cert.claim.value - 1)
            throw SchemaMismatch("graph order " + std::to_string(g.order()) +
                                 " does not match claimed bound " + std::to_string(cert.claim.value));
        const VerificationReport fresh = verify_witness(g, cert.query);
        if (fresh.checks.size() != cert.checks.size())
            throw CheckMismatch("check list length changed on replay");
        for (std::size_t i = 0; i < cert.checks.size(); ++i) {
            const CheckResult& want = cert.checks[i];
            const CheckResult& got = fresh.checks[i];
            if (want.name != got.name || want.pass != got.pass || want.witness != got.witness)
                throw CheckMismatch("check \"" + want.name + "\" did not reproduce");
        }
        if (!fresh.is_valid_witness)
            throw CheckMismatch("embedded graph is not a valid witness");
        return true;
    }
    // forced claim: replay the decision under the recorded limits
    const DecideOutcome outcome = decide(cert.query, cert.claim.value, cert.limits);
    if (outcome.status == DecideOutcome::Status::limit_exceeded)
        throw LimitExceededError("decision replay exceeded the recorded limits after " +
                                 std::to_string(outcome.nodes) + " nodes");
    if (outcome.status != DecideOutcome::Status::forced)
        throw CheckMismatch("replay found a witness; the forced claim does not reproduce");
    return true;
}

} // namespace ramsey
