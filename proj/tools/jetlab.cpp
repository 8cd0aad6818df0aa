#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetlab/contact.hpp"
#include "jetlab/count.hpp"
#include "jetlab/formulas.hpp"
#include "jetlab/groebner.hpp"

using json = nlohmann::ordered_json;
using namespace jetlab;

namespace {

int default_workers() {
    const char* env = std::getenv("JETLAB_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& path) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidSpec, "cannot open output file " + path);
    out << body;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidSpec, "cannot open input file " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad JSON input: ") + e.what());
    }
}

struct CommonArgs {
    int rows = 2, cols = 2, rank = 1, jets = 1;
    std::string format = "json";
    std::string output;
    int workers = default_workers();
};

void add_spec_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--rows,-r", a.rows, "matrix rows")->check(CLI::PositiveNumber);
    cmd->add_option("--cols,-s", a.cols, "matrix columns")->check(CLI::PositiveNumber);
    cmd->add_option("--rank,-c", a.rank, "rank bound")->check(CLI::NonNegativeNumber);
    cmd->add_option("--jets,-m", a.jets, "jet order")->check(CLI::NonNegativeNumber);
}

void add_io_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", a.output, "write the report to a file");
}

json config_echo(const std::string& command, const CommonArgs& a) {
    return json{{"command", command}, {"rows", a.rows},     {"cols", a.cols},
                {"rank", a.rank},     {"jets", a.jets},     {"workers", a.workers},
                {"format", a.format}};
}

json check_item(const std::string& name, bool pass) {
    return json{{"name", name}, {"pass", pass}};
}

std::string render_checks_text(const json& report) {
    std::ostringstream out;
    for (const json& item : report.at("checks"))
        out << (item.at("pass").get<bool>() ? "PASS " : "FAIL ")
            << item.at("name").get<std::string>() << "\n";
    out << (report.at("pass").get<bool>() ? "PASS" : "FAIL");
    return out.str();
}

int finish_check(const json& report, const CommonArgs& args) {
    emit(args.format == "text" ? render_checks_text(report) : report.dump(2),
         args.output);
    return report.at("pass").get<bool>() ? 0 : 1;
}

int run_generate(const CommonArgs& args, std::uint64_t prime) {
    CoefficientField field =
        prime == 0 ? CoefficientField::rationals() : CoefficientField::prime_field(prime);
    JetIdealPresentation pres =
        jet_ideal_generators({args.rows, args.cols, args.rank}, args.jets, field);
    if (args.format == "text") {
        std::ostringstream out;
        for (const Polynomial& g : pres.generators) out << g.to_text() << "\n";
        emit(out.str(), args.output);
        return 0;
    }
    json out;
    out["schema"] = 1;
    out["config"] = config_echo("generate", args);
    out["config"]["prime"] = prime;
    out["r"] = args.rows;
    out["s"] = args.cols;
    out["c"] = args.rank;
    out["m"] = args.jets;
    json vars = json::array();
    for (const JetVariable& v : pres.variables) vars.push_back(v.name());
    out["variables"] = std::move(vars);
    json gens = json::array();
    for (const Polynomial& g : pres.generators) gens.push_back(g.to_text());
    out["generators"] = std::move(gens);
    emit(out.dump(2), args.output);
    return 0;
}

int run_predict(const CommonArgs& args) {
    ComponentPrediction pred = rank1_components(args.rows, args.cols, args.jets);
    if (args.format == "text") {
        std::ostringstream out;
        out << "applicable: " << (pred.applicable == Applicability::Applies ? "yes" : "no")
            << "\ncount: " << pred.count << "\ndims:";
        for (long long d : pred.dims) out << ' ' << d;
        out << "\ncertificate: " << pred.certificate;
        emit(out.str(), args.output);
        return 0;
    }
    json out;
    out["schema"] = 1;
    out["config"] = config_echo("predict", args);
    out["applicable"] = pred.applicable == Applicability::Applies;
    out["count"] = pred.count;
    out["dims"] = pred.dims;
    out["certificate"] = pred.certificate;
    emit(out.dump(2), args.output);
    return 0;
}

json report_to_json(const PointCountReport& rep) {
    json r;
    r["q"] = rep.q;
    r["num_vars"] = rep.num_vars;
    r["mode"] = rep.exact() ? "exact" : "monte-carlo";
    if (rep.exact()) {
        r["count"] = static_cast<std::uint64_t>(rep.count);
    } else {
        r["estimate"] = rep.count;
        r["half_width"] = rep.mc->half_width;
        r["samples"] = rep.mc->samples;
        r["hits"] = rep.mc->hits;
        r["confidence"] = rep.mc->confidence;
        r["seed"] = rep.mc->seed;
        r["workers"] = rep.mc->workers;
    }
    return r;
}

int run_count(const CommonArgs& args, const std::vector<std::uint64_t>& qs,
              const std::string& mode, std::uint64_t samples, double confidence,
              std::uint64_t seed, std::uint64_t cap) {
    std::vector<PointCountReport> reports;
    for (std::uint64_t q : qs) {
        CoefficientField field = CoefficientField::prime_field(q);
        JetIdealPresentation pres =
            jet_ideal_generators({args.rows, args.cols, args.rank}, args.jets, field);
        if (mode == "exact")
            reports.push_back(exhaustive_count(pres.generators, pres.variables, q,
                                               args.workers, cap));
        else
            reports.push_back(monte_carlo_count(pres.generators, pres.variables, q,
                                                samples, confidence, seed,
                                                args.workers));
    }

    bool fit = false;
    DimEstimate estimate{0.0, 0.0};
    std::vector<std::uint64_t> distinct = qs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 2) {
        estimate = dim_estimate(reports);
        fit = true;
    }

    if (args.format == "text") {
        std::ostringstream out;
        for (const PointCountReport& rep : reports) {
            out << "q=" << rep.q << " vars=" << rep.num_vars;
            if (rep.exact())
                out << " exact count=" << static_cast<std::uint64_t>(rep.count);
            else
                out << " estimate=" << rep.count << " half_width=" << rep.mc->half_width
                    << " hits=" << rep.mc->hits << "/" << rep.mc->samples;
            out << "\n";
        }
        if (fit)
            out << "dim_estimate slope=" << estimate.slope
                << " residual=" << estimate.residual << "\n";
        out << "label: EVIDENCE";
        emit(out.str(), args.output);
        return 0;
    }

    json out;
    out["schema"] = 1;
    out["config"] = config_echo("count", args);
    out["config"]["q"] = qs;
    out["config"]["mode"] = mode;
    out["config"]["samples"] = samples;
    out["config"]["confidence"] = confidence;
    out["config"]["seed"] = seed;
    out["config"]["cap"] = cap;
    out["label"] = "EVIDENCE";
    json items = json::array();
    for (const PointCountReport& rep : reports) items.push_back(report_to_json(rep));
    out["reports"] = std::move(items);
    if (fit)
        out["dim_estimate"] = {{"slope", estimate.slope},
                               {"residual", estimate.residual}};
    emit(out.dump(2), args.output);
    return 0;
}

LogResolutionInput resolution_from_json(const json& in) {
    try {
        std::vector<long long> k = in.at("k").get<std::vector<long long>>();
        auto a = in.at("a").get<std::vector<std::vector<long long>>>();
        std::vector<std::vector<int>> families;
        if (in.contains("families"))
            families = in.at("families").get<std::vector<std::vector<int>>>();
        if (in.contains("n") &&
            in.at("n").get<long long>() != static_cast<long long>(k.size()))
            fail(ErrorCode::InvalidResolution, "n does not match the k list");
        return LogResolutionInput(std::move(k), std::move(a), std::move(families));
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad resolution input: ") + e.what());
    }
}

int run_contact(const CommonArgs& args, const std::string& input) {
    json in = load_json_file(input);
    LogResolutionInput res = resolution_from_json(in);
    std::vector<long long> orders;
    try {
        orders = in.at("orders").get<std::vector<long long>>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad resolution input: ") + e.what());
    }
    ContactSolution sol = contact_codim(res, ContactQuery(orders));

    if (args.format == "text") {
        std::ostringstream out;
        if (!sol.feasible) {
            out << "infeasible";
        } else {
            out << "value: " << sol.value << "\nnu:";
            for (long long v : sol.nu) out << ' ' << v;
        }
        emit(out.str(), args.output);
        return 0;
    }
    json out;
    out["schema"] = 1;
    out["config"] = {{"command", "contact"}, {"input", input}, {"format", args.format}};
    if (sol.feasible)
        out["value"] = sol.value;
    else
        out["value"] = "infeasible";
    out["nu"] = sol.nu;
    emit(out.dump(2), args.output);
    return 0;
}

int run_check_origin_fiber(const CommonArgs& args) {
    CoefficientField field = CoefficientField::rationals();
    JetIdealPresentation base =
        jet_ideal_generators({args.rows, args.cols, args.rank}, 0, field);
    OriginFiberReport rep =
        verify_origin_fiber_isomorphism(base.generators, base.variables, args.jets);
    json out;
    out["schema"] = 1;
    out["config"] = config_echo("check", args);
    out["suite"] = "origin-fiber";
    out["label"] = "VERIFIED";
    out["degree"] = rep.degree;
    out["order"] = rep.order;
    out["survivors"] = rep.survivor_count;
    out["dropped"] = rep.dropped_count;
    out["checks"] = json::array({
        check_item("survivors-match-lower-jets", rep.survivors_match_lower_jets),
        check_item("high-orders-absent", rep.high_orders_absent),
    });
    out["pass"] = rep.isomorphic;
    return finish_check(out, args);
}

int run_check_origin_fiber_count(const CommonArgs& args,
                                 const std::vector<std::uint64_t>& qs,
                                 std::uint64_t cap) {
    json checks = json::array();
    bool pass = true;
    for (std::uint64_t q : qs) {
        OriginFiberCountReport rep = origin_fiber_count_check(
            {args.rows, args.cols, args.rank}, args.jets, args.rank + 1, q,
            args.workers, cap);
        json item = check_item("q=" + std::to_string(q), rep.equal);
        item["left"] = rep.left;
        item["jet_count"] = rep.jet_count;
        item["factor"] = rep.factor;
        item["right"] = rep.right;
        checks.push_back(std::move(item));
        pass = pass && rep.equal;
    }
    json out;
    out["schema"] = 1;
    out["config"] = config_echo("check", args);
    out["config"]["q"] = qs;
    out["suite"] = "origin-fiber-count";
    out["label"] = "EVIDENCE";
    out["checks"] = std::move(checks);
    out["pass"] = pass;
    return finish_check(out, args);
}

int run_check_minimal_primes(const CommonArgs& args, std::uint64_t budget) {
    Remark310Report rep = verify_remark_310(budget);
    json out;
    out["schema"] = 1;
    out["config"] = config_echo("check", args);
    out["config"]["budget"] = budget;
    out["suite"] = "minimal-primes";
    out["label"] = rep.evidence_only ? "EVIDENCE" : "VERIFIED";
    out["field"] = rep.field;
    out["p2_dimension"] = rep.p2_dimension;
    out["p1_dimension"] = rep.p1_dimension;
    out["checks"] = json::array({
        check_item("cubic-matches-determinant", rep.cubic_matches),
        check_item("j1-inside-p2", rep.j1_in_p2),
        check_item("j1-inside-p1", rep.j1_in_p1),
        check_item("x_1_1_0-outside-p1", rep.x110_outside_p1),
        check_item("cubic-outside-p2", rep.cubic_outside_p2),
        check_item("dimensions-are-9-and-10", rep.dimensions_match),
    });
    out["pass"] = rep.all_pass;
    return finish_check(out, args);
}

int run_check_lemma32(const CommonArgs& args, const std::string& input, long long m,
                      long long p, int z_index) {
    json in = load_json_file(input);
    LogResolutionInput res = resolution_from_json(in);
    Lemma32Report rep = lemma32_check(res, m, p, z_index);
    bool pass = rep.left.has_value() && rep.right.has_value() && rep.inequality_holds &&
                rep.scaled_witness_feasible;
    json out;
    out["schema"] = 1;
    out["config"] = {{"command", "check"},  {"input", input},
                     {"order", m},          {"scale", p},
                     {"z_index", z_index},  {"format", args.format}};
    out["suite"] = "lemma32";
    out["label"] = "VERIFIED";
    if (rep.left)
        out["left"] = *rep.left;
    else
        out["left"] = nullptr;
    if (rep.right)
        out["right"] = *rep.right;
    else
        out["right"] = nullptr;
    out["scaled_witness"] = rep.scaled_witness;
    out["checks"] = json::array({
        check_item("both-sides-feasible", rep.left.has_value() && rep.right.has_value()),
        check_item("left-at-most-p-times-right", rep.inequality_holds),
        check_item("scaled-witness-feasible", rep.scaled_witness_feasible),
    });
    out["pass"] = pass;
    return finish_check(out, args);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jet schemes of determinantal varieties: generators, closed-form "
                 "predictions, and verification engines"};
    app.require_subcommand(1);
    std::function<int()> action;

    CommonArgs gen_args;
    std::uint64_t gen_prime = 0;
    CLI::App* gen = app.add_subcommand("generate", "emit jet ideal generators");
    add_spec_flags(gen, gen_args);
    add_io_flags(gen, gen_args);
    gen->add_option("--prime", gen_prime, "coefficient prime, 0 for rationals");
    gen->callback([&] { action = [&] { return run_generate(gen_args, gen_prime); }; });

    CommonArgs pred_args;
    CLI::App* pred = app.add_subcommand("predict", "rank-one component data");
    pred->add_option("--rows,-r", pred_args.rows, "matrix rows")
        ->check(CLI::PositiveNumber);
    pred->add_option("--cols,-s", pred_args.cols, "matrix columns")
        ->check(CLI::PositiveNumber);
    pred->add_option("--jets,-m", pred_args.jets, "jet order")
        ->check(CLI::NonNegativeNumber);
    add_io_flags(pred, pred_args);
    pred->callback([&] { action = [&] { return run_predict(pred_args); }; });

    CommonArgs count_args;
    std::vector<std::uint64_t> count_qs{2, 3};
    std::string count_mode = "exact";
    std::uint64_t count_samples = 100000, count_seed = 0, count_cap = kDefaultCountCap;
    double count_confidence = 0.99;
    CLI::App* cnt = app.add_subcommand("count", "finite-field point counts");
    add_spec_flags(cnt, count_args);
    add_io_flags(cnt, count_args);
    cnt->add_option("--q", count_qs, "primes to count over");
    cnt->add_option("--mode", count_mode, "exact or mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    cnt->add_option("--samples", count_samples, "Monte Carlo samples");
    cnt->add_option("--confidence", count_confidence, "interval confidence");
    cnt->add_option("--seed", count_seed, "Monte Carlo master seed");
    cnt->add_option("--cap", count_cap, "exhaustive enumeration cap");
    cnt->add_option("--workers", count_args.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    cnt->callback([&] {
        action = [&] {
            return run_count(count_args, count_qs, count_mode, count_samples,
                             count_confidence, count_seed, count_cap);
        };
    });

    CommonArgs contact_args;
    std::string contact_input;
    CLI::App* con = app.add_subcommand("contact", "contact-locus codimension");
    con->add_option("--input", contact_input, "resolution JSON file")->required();
    add_io_flags(con, contact_args);
    con->callback(
        [&] { action = [&] { return run_contact(contact_args, contact_input); }; });

    CommonArgs check_args;
    std::string check_suite;
    std::vector<std::uint64_t> check_qs{2, 3};
    std::uint64_t check_budget = kDefaultPairBudget, check_cap = kDefaultCountCap;
    std::string check_input;
    long long check_m = 1, check_p = 1;
    int check_z = 1;
    CLI::App* chk = app.add_subcommand("check", "run a verification suite");
    chk->add_option("--suite", check_suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember(
            {"origin-fiber", "origin-fiber-count", "minimal-primes", "lemma32"}));
    add_spec_flags(chk, check_args);
    add_io_flags(chk, check_args);
    chk->add_option("--q", check_qs, "primes for counting suites");
    chk->add_option("--budget", check_budget, "pair reduction budget");
    chk->add_option("--cap", check_cap, "exhaustive enumeration cap");
    chk->add_option("--input", check_input, "resolution JSON file for lemma32");
    chk->add_option("--order", check_m, "contact order m for lemma32");
    chk->add_option("--scale", check_p, "scaling factor p for lemma32");
    chk->add_option("--z-index", check_z, "which center is Z for lemma32");
    chk->add_option("--workers", check_args.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    chk->callback([&] {
        action = [&] {
            if (check_suite == "origin-fiber") return run_check_origin_fiber(check_args);
            if (check_suite == "origin-fiber-count")
                return run_check_origin_fiber_count(check_args, check_qs, check_cap);
            if (check_suite == "minimal-primes")
                return run_check_minimal_primes(check_args, check_budget);
            if (check_input.empty())
                fail(ErrorCode::InvalidSpec, "lemma32 needs --input");
            return run_check_lemma32(check_args, check_input, check_m, check_p,
                                     check_z);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
