#include "ramsey/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/version.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string kind = "s";
    int m = 3;
    int n = 3;
    int p = 0;
    std::string graph_path;
    std::string cert_path;
    std::string output_path;
    std::uint64_t max_nodes = SearchLimits{}.max_nodes;
    double max_seconds = 1e9;
    int workers = 1;
    int from = 2;
    int to = 100;
    int grid_points = 10000;
    std::string log_base = "natural";
    std::string format = "text";
};

RamseyQuery make_query(const Options& opt) {
    RamseyQuery q{parse_kind(opt.kind), opt.m, opt.n};
    q.validate();
    return q;
}

LogBase make_log_base(const Options& opt) {
    if (opt.log_base == "natural") return LogBase::natural;
    if (opt.log_base == "2") return LogBase::two;
    throw DomainError("--log-base must be natural or 2");
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_auto(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write: " + path);
    out << content;
}

json check_to_json(const CheckResult& c) {
    json jc{{"name", c.name}, {"pass", c.pass}};
    if (c.witness) jc["witness"] = c.witness->to_vector();
    return jc;
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["query"] = {{"kind", std::string(1, kind_char(report.query.kind))},
                  {"m", report.query.m},
                  {"n", report.query.n}};
    j["order"] = report.order;
    j["is_valid_witness"] = report.is_valid_witness;
    j["checks"] = json::array();
    for (const auto& c : report.checks) j["checks"].push_back(check_to_json(c));
    return j;
}

void print_header(std::ostream& err, const std::string& query_text) {
    err << "ramsey " << kToolVersion << " (convention: graph file = RED subgraph)\n";
    if (!query_text.empty()) err << "query: " << query_text << "\n";
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const RamseyQuery query = make_query(opt);
    print_header(err, query.to_string());
    const Graph g = load_graph(opt.graph_path);
    const VerificationReport report = verify_witness(g, query);

    if (report.is_valid_witness) {
        const Certificate cert = make_certificate(report, g);
        const std::string cert_json = certificate_to_json(cert);
        if (!opt.output_path.empty()) write_file(opt.output_path, cert_json);
        if (opt.format == "json") {
            out << cert_json << "\n";
        } else {
            out << "valid witness of order " << report.order << ": " << query.to_string()
                << " > " << report.order << " (so " << query.to_string() << " >= "
                << report.order + 1 << ")\n";
            for (const auto& c : report.checks) out << "  [pass] " << c.name << "\n";
            if (!opt.output_path.empty()) out << "certificate written to " << opt.output_path << "\n";
        }
        return 0;
    }
    if (opt.format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << "NOT a valid witness for " << query.to_string() << " at order " << report.order
            << "\n";
        for (const auto& c : report.checks) {
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.pass && c.witness) out << "  witness " << c.witness->to_string();
            out << "\n";
        }
        for (const auto& c : report.checks)
            if (!c.pass && c.witness) {
                json evidence{{"check", c.name}, {"witness", c.witness->to_vector()}};
                out << "counterexample: " << evidence.dump() << "\n";
            }
    }
    return 1;
}

int run_circulant(const Options& opt, std::ostream& out, std::ostream& err) {
    const RamseyQuery query = make_query(opt);
    print_header(err, query.to_string());
    const auto results = circulant_search(opt.p, query);
    if (opt.format == "json") {
        json j;
        j["p"] = opt.p;
        j["query"] = {{"kind", opt.kind}, {"m", opt.m}, {"n", opt.n}};
        j["results"] = json::array();
        for (const auto& spec : results) j["results"].push_back(spec.connections);
        out << j.dump(2) << "\n";
    } else {
        out << results.size() << " circulant witness(es) on " << opt.p << " vertices for "
            << query.to_string() << "\n";
        for (const auto& spec : results) out << "  " << spec.to_string() << "\n";
    }
    return 0;
}

int run_decide(const Options& opt, std::ostream& out, std::ostream& err) {
    const RamseyQuery query = make_query(opt);
    print_header(err, query.to_string());
    SearchLimits limits{opt.max_nodes, opt.max_seconds, opt.workers};
    const DecideOutcome outcome = decide(query, opt.p, limits);
    if (outcome.status == DecideOutcome::Status::limit_exceeded) {
        out << "limit exceeded after " << outcome.nodes << " nodes\n";
        return 3;
    }
    const Certificate cert = make_certificate(query, opt.p, outcome, limits);
    const std::string cert_json = certificate_to_json(cert);
    if (!opt.output_path.empty()) write_file(opt.output_path, cert_json);
    if (opt.format == "json") {
        out << cert_json << "\n";
    } else if (outcome.status == DecideOutcome::Status::forced) {
        out << "forced: every coloring of order " << opt.p << " meets a condition of "
            << query.to_string() << " (" << outcome.nodes << " nodes)\n";
    } else {
        out << "witness of order " << opt.p << " found (" << outcome.nodes << " nodes): "
            << emit_graph6(*outcome.witness) << "\n";
    }
    return 0;
}

int run_f_family(const Options& opt, std::ostream& out, std::ostream& err) {
    print_header(err, "");
    const FamilyEnumeration family = enumerate_f_family();
    const bool expected = family.classes.size() == 8;
    if (opt.format == "json") {
        json j;
        j["count"] = family.classes.size();
        j["labeled_count"] = family.labeled_count;
        j["expected_count"] = 8;
        j["classes"] = json::array();
        for (const auto& member : family.classes) j["classes"].push_back(emit_graph6(member.graph));
        out << j.dump(2) << "\n";
    } else {
        out << family.classes.size() << " isomorphism classes (" << family.labeled_count
            << " labeled graphs)\n";
        for (const auto& member : family.classes) out << "  " << emit_graph6(member.graph) << "\n";
        if (!expected)
            out << "DISCREPANCY: expected exactly 8 classes, found " << family.classes.size()
                << "\n";
    }
    return expected ? 0 : 1;
}

int run_bounds_table(const Options& opt, std::ostream& out, std::ostream& err) {
    print_header(err, "");
    std::ostringstream csv;
    write_bounds_csv(csv, opt.from, opt.to, make_log_base(opt), KnownValuesRegistry::standard());
    if (!opt.output_path.empty()) {
        write_file(opt.output_path, csv.str());
        out << "table written to " << opt.output_path << "\n";
    } else {
        out << csv.str();
    }
    return 0;
}

int run_bounds_check_f(const Options& opt, std::ostream& out, std::ostream& err) {
    print_header(err, "");
    if (opt.grid_points < 1) throw DomainError("--grid-points must be positive");
    const auto grid = geometric_grid(2.0, 1e9, opt.grid_points);
    const FClaimReport report = check_f_claim(grid);
    auto line = [&](const char* name, bool ok, const std::optional<double>& at) {
        out << "  [" << (ok ? "pass" : "FAIL") << "] " << name;
        if (!ok && at) out << "  first violation at n = " << *at;
        out << "\n";
    };
    if (opt.format == "json") {
        json j{{"grid_points", opt.grid_points},
               {"f_monotone", report.f_monotone},
               {"f_lower_bound", report.f_lower_bound},
               {"gh_remark", report.gh_remark}};
        if (report.first_gh_violation) j["first_gh_violation"] = *report.first_gh_violation;
        out << j.dump(2) << "\n";
    } else {
        out << "f-claim checks on a " << opt.grid_points << "-point geometric grid [2, 1e9]\n";
        line("f nondecreasing", report.f_monotone, report.first_monotone_violation);
        line("f >= 0.98", report.f_lower_bound, report.first_lower_bound_violation);
        line("g(n) <= h(n)", report.gh_remark, report.first_gh_violation);
        if (!report.gh_remark && report.first_gh_violation) {
            const double n = *report.first_gh_violation;
            json evidence{{"check", "gh_remark"}, {"n", n}, {"g", g_remark(n)}, {"h", h_remark(n)}};
            out << "counterexample: " << evidence.dump() << "\n";
        }
    }
    return report.all_pass() ? 0 : 1;
}

int run_recheck(const Options& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.cert_path, std::ios::binary);
    if (!in) throw Error("cannot open certificate: " + opt.cert_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const Certificate cert = certificate_from_json(buf.str());
    print_header(err, cert.query.to_string());
    try {
        recheck(cert);
    } catch (const CheckMismatch& e) {
        out << "recheck FAILED: " << e.what() << "\n";
        json evidence{{"check", "recheck"}, {"error", e.what()}};
        out << "counterexample: " << evidence.dump() << "\n";
        return 1;
    }
    out << "recheck passed: every recorded check reproduced\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"witness search and verification for irredundant, mixed and classical "
                 "Ramsey numbers at small orders"};
    app.set_version_flag("--version", std::string("ramsey ") + kToolVersion);
    Options opt;

    auto add_query_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", opt.kind, "query kind: s, t or r")->required();
        cmd->add_option("--m", opt.m, "blue-side cardinality")->required();
        cmd->add_option("--n", opt.n, "red-side cardinality")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "verify a witness coloring from a graph file");
    add_query_flags(verify);
    verify->add_option("--graph", opt.graph_path, "graph6 or edge-list file (RED subgraph)")
        ->required();
    verify->add_option("--output", opt.output_path, "write the certificate here");
    add_format(verify);

    CLI::App* circ = app.add_subcommand("circulant", "search all circulant colorings of order p");
    add_query_flags(circ);
    circ->add_option("--p", opt.p, "order")->required();
    add_format(circ);

    CLI::App* dec = app.add_subcommand("decide", "exhaustively decide order p");
    add_query_flags(dec);
    dec->add_option("--p", opt.p, "order")->required();
    dec->add_option("--max-nodes", opt.max_nodes, "node budget");
    dec->add_option("--max-seconds", opt.max_seconds, "time budget");
    dec->add_option("--workers", opt.workers, "parallel workers")->check(CLI::PositiveNumber);
    dec->add_option("--output", opt.output_path, "write the certificate here");
    add_format(dec);

    CLI::App* fam = app.add_subcommand("f-family", "enumerate the 7-vertex family");
    add_format(fam);

    CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound tables and checks");
    bounds->require_subcommand(1);
    CLI::App* table = bounds->add_subcommand("table", "CSV of the t(3,n) upper bounds");
    table->add_option("--from", opt.from, "first n");
    table->add_option("--to", opt.to, "last n");
    table->add_option("--log-base", opt.log_base, "natural or 2")
        ->check(CLI::IsMember({"natural", "2"}));
    table->add_option("--output", opt.output_path, "write the CSV here");
    CLI::App* checkf = bounds->add_subcommand("check-f", "sweep the f and g/h inequalities");
    checkf->add_option("--grid-points", opt.grid_points, "geometric grid size");
    add_format(checkf);

    CLI::App* rec = app.add_subcommand("recheck", "replay a certificate from scratch");
    rec->add_option("--cert", opt.cert_path, "certificate JSON file")->required();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("ramsey");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "ramsey " << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(opt, out, err);
        if (circ->parsed()) return run_circulant(opt, out, err);
        if (dec->parsed()) return run_decide(opt, out, err);
        if (fam->parsed()) return run_f_family(opt, out, err);
        if (bounds->parsed()) {
            if (table->parsed()) return run_bounds_table(opt, out, err);
            return run_bounds_check_f(opt, out, err);
        }
        if (rec->parsed()) return run_recheck(opt, out, err);
    } catch (const LimitExceededError& e) {
        err << "limits exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace ramsey::cli
