#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnc/hornnc.hpp"
#include "pnc/parser.hpp"
#include "pnc/semantics.hpp"
#include "pnc/solver.hpp"
#include "pnc/trace.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_horn_nc = 1;
constexpr int exit_input_error = 2;

pnc::base load_base(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw pnc::error("cannot open file: " + path);
    return pnc::parse_base(in);
}

nlohmann::json step_to_json(const pnc::derivation_step& step) {
    nlohmann::json j;
    j["step"] = step.id;
    j["rule"] = pnc::rule_name(step.r);
    j["premises"] = step.premises;
    j["conclusion"] = pnc::render(step.conclusion);
    j["weight"] = step.w.to_string();
    return j;
}

nlohmann::json solve_to_json(const pnc::solve_result& result) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& round : result.rounds) {
        nlohmann::json r;
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& step : round.steps)
            steps.push_back(step_to_json(step));
        r["steps"] = std::move(steps);
        r["outcome"] = round.empty_clause_found ? "empty_clause" : "fixpoint";
        if (round.empty_clause_found)
            r["weight"] = round.empty_weight->to_string();
        r["inferences"] = round.inference_count;
        rounds.push_back(std::move(r));
    }
    nlohmann::json j;
    j["rounds"] = std::move(rounds);
    j["inc"] = result.inc.to_string();
    return j;
}

int run_check(const std::string& file) {
    pnc::base b = load_base(file);
    bool all_horn = true;
    for (std::size_t i = 0; i < b.items.size(); ++i) {
        pnc::formula::ptr f = pnc::simplify_constants(b.items[i].f);
        bool horn = f->is_constant() || pnc::is_horn_nc(f);
        all_horn = all_horn && horn;
        std::cout << "item " << i << ": " << (horn ? "Horn-NC" : "not Horn-NC") << " : "
                  << pnc::render(b.items[i].f) << "\n";
    }
    std::cout << (all_horn ? "base is Horn-NC" : "base is not Horn-NC") << "\n";
    return all_horn ? exit_ok : exit_not_horn_nc;
}

int run_inc(const std::string& file, bool trace, bool lur, bool hur, const std::string& format) {
    pnc::base b = load_base(file);
    pnc::engine_options opt;
    opt.use_lur = lur;
    opt.use_hur = hur;
    pnc::solve_result result = pnc::find_inc(b, opt);
    if (format == "structured") {
        std::cout << solve_to_json(result).dump(2) << "\n";
        return exit_ok;
    }
    if (trace)
        std::cout << pnc::render_trace(result);
    else
        std::cout << "Inc = " << result.inc.to_string() << "\n";
    return exit_ok;
}

int run_oracle(const std::string& file) {
    pnc::base b = load_base(file);
    std::cout << "Inc = " << pnc::inc_oracle(b).to_string() << "\n";
    return exit_ok;
}

int run_entail(const std::string& file, const std::string& query_text, bool use_oracle, bool lur,
               bool hur) {
    pnc::base b = load_base(file);
    pnc::formula::ptr query = pnc::parse_formula(query_text);
    if (use_oracle) {
        std::cout << "N = " << pnc::necessity_oracle(b, query).to_string() << "\n";
        return exit_ok;
    }
    pnc::engine_options opt;
    opt.use_lur = lur;
    opt.use_hur = hur;
    pnc::solve_result result = pnc::entails(b, query, opt);
    std::cout << "N = " << result.inc.to_string() << "\n";
    return exit_ok;
}

int run_clausal(const std::string& file) {
    pnc::base b = load_base(file);
    for (std::size_t i = 0; i < b.items.size(); ++i) {
        pnc::formula::ptr f = pnc::simplify_constants(b.items[i].f);
        if (f->is_constant()) {
            std::cout << "item " << i << ": " << pnc::render(f) << "\n";
            continue;
        }
        pnc::clausal_formula c = pnc::cl_transform(f);
        std::string rendered = "(and";
        for (const auto& cl : c.clauses) {
            rendered += " (or";
            for (const auto& lit : cl)
                rendered += lit.negative ? " -" + lit.name : " " + lit.name;
            rendered += ")";
        }
        rendered += ")";
        std::cout << "item " << i << ": " << rendered << " : "
                  << (pnc::is_horn_clausal(c) ? "Horn" : "not Horn") << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"possibilistic Horn non-clausal reasoning"};
    app.require_subcommand(1);

    std::string file;
    std::string query_text;
    std::string format = "text";
    bool trace = false, lur = false, hur = false, use_oracle = false;

    CLI::App* check = app.add_subcommand("check", "Horn-NC recognition report per item");
    check->add_option("file", file)->required();

    CLI::App* inc = app.add_subcommand("inc", "inconsistency degree via unit resolution");
    inc->add_option("file", file)->required();
    inc->add_flag("--trace", trace, "print the derivation trace");
    inc->add_flag("--lur", lur, "enable local unit resolution");
    inc->add_flag("--hur", hur, "enable hyper unit resolution");
    inc->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* entail = app.add_subcommand("entail", "necessity degree of a query");
    entail->add_option("file", file)->required();
    entail->add_option("--query", query_text, "query formula")->required();
    entail->add_flag("--oracle", use_oracle, "use the brute-force oracle instead of the calculus");
    entail->add_flag("--lur", lur);
    entail->add_flag("--hur", hur);

    CLI::App* oracle = app.add_subcommand("oracle", "inconsistency degree by model enumeration");
    oracle->add_option("file", file)->required();

    CLI::App* clausal = app.add_subcommand("clausal", "distributive clausal form with Horn verdicts");
    clausal->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(file);
        if (inc->parsed())
            return run_inc(file, trace, lur, hur, format);
        if (entail->parsed())
            return run_entail(file, query_text, use_oracle, lur, hur);
        if (oracle->parsed())
            return run_oracle(file);
        if (clausal->parsed())
            return run_clausal(file);
    } catch (const pnc::not_horn_nc_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_horn_nc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
