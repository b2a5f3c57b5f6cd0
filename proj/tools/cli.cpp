#include "cli.hpp"

#include "coopshare/axioms.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/io.hpp"
#include "coopshare/matrix.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace coopshare::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUnexpected = 1;
constexpr int kBadInput = 2;

Rule require_rule(const std::string& name) {
    if (auto r = parse_rule(name))
        return *r;
    throw Error(ErrorCode::ParseError, "unknown rule '" + name + "'");
}

Axiom require_axiom(const std::string& name) {
    if (auto a = parse_axiom(name))
        return *a;
    throw Error(ErrorCode::ParseError, "unknown axiom '" + name + "'");
}

GameClass require_pool(const std::string& name) {
    if (auto c = parse_game_class(name))
        return *c;
    throw Error(ErrorCode::ParseError, "unknown pool class '" + name + "'");
}

ArrivalOrder parse_order_flag(const std::string& text, int n) {
    std::vector<int> seq;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            seq.push_back(std::stoi(token) - 1);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadPermutation, "bad --order entry '" + token + "'");
        }
    }
    if (static_cast<int>(seq.size()) != n)
        throw Error(ErrorCode::BadPermutation, "--order must list all " + std::to_string(n) +
                                                   " players");
    return ArrivalOrder(seq);
}

Game load_with_order(const std::string& path, const std::string& order_flag) {
    Game g = load_game_file(path);
    if (!order_flag.empty())
        return g.with_order(parse_order_flag(order_flag, g.player_count()));
    return g;
}

struct CheckPoolOptions {
    GameClass pool;
    int n = 4;
    int seeds = 200;
    int grid = 4;
    std::uint64_t base_seed = 1180;
};

AxiomVerdict check_over_pool(Axiom axiom, Rule rule, const CheckPoolOptions& opt) {
    SearchRequest request;
    request.axiom = axiom;
    request.rule = rule;
    request.pool = opt.pool;
    request.n_min = opt.n;
    request.n_max = opt.n;
    request.seeds = opt.seeds;
    request.value_grid = opt.grid;
    request.base_seed = opt.base_seed;
    long checked = 0;
    if (auto witness = search_counterexample(request, &checked)) {
        witness->games_checked = checked;
        return *witness;
    }
    AxiomVerdict pass;
    pass.axiom = axiom;
    pass.rule = rule;
    pass.pass = true;
    pass.games_checked = checked;
    return pass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact value-sharing rules and axiom checks for online cooperative games"};
    app.require_subcommand(1);

    std::string rule_name_flag, axiom_flag, game_path, order_flag, pool_flag, out_path;
    std::string format = "json", scope = "base";
    int n_flag = 4, seeds = 200, grid = 4, jobs = 1, n_max = 5;
    std::uint64_t seed = 0, base_seed = 1180;

    auto* cmd_run = app.add_subcommand("run", "Print a rule's final allocation for a game");
    cmd_run->add_option("--rule", rule_name_flag)->required();
    cmd_run->add_option("--game", game_path)->required();
    cmd_run->add_option("--order", order_flag, "Override the file's arrival order, e.g. 2,1,3");

    auto* cmd_traj = app.add_subcommand("trajectory", "Print a rule's full allocation trajectory");
    cmd_traj->add_option("--rule", rule_name_flag)->required();
    cmd_traj->add_option("--game", game_path)->required();
    cmd_traj->add_option("--order", order_flag);

    auto* cmd_dec = app.add_subcommand("decompose", "Print the GM decomposition of a game");
    cmd_dec->add_option("--game", game_path)->required();

    auto* cmd_check = app.add_subcommand("check", "Check one axiom for one rule");
    cmd_check->add_option("--axiom", axiom_flag)->required();
    cmd_check->add_option("--rule", rule_name_flag)->required();
    cmd_check->add_option("--game", game_path);
    cmd_check->add_option("--order", order_flag);
    cmd_check->add_option("--scope", scope, "EA base-order scope: base|all (default base)");
    cmd_check->add_option("--pool", pool_flag, "Check seeded games of this class instead of a file");
    cmd_check->add_option("--n", n_flag);
    cmd_check->add_option("--seeds", seeds);
    cmd_check->add_option("--grid", grid);
    cmd_check->add_option("--seed-base", base_seed);

    auto* cmd_matrix = app.add_subcommand("matrix", "Reproduce the rule/axiom satisfaction matrix");
    cmd_matrix->add_option("--n-max", n_max, "Seeded-pool player count (default 5)");
    cmd_matrix->add_option("--seeds", seeds, "Seeded games per class (default 1000)")
        ->default_val(1000);
    cmd_matrix->add_option("--grid", grid);
    cmd_matrix->add_option("--seed-base", base_seed);
    cmd_matrix->add_option("--jobs", jobs);
    cmd_matrix->add_option("--out", out_path, "Write the report here instead of stdout");
    cmd_matrix->add_option("--format", format, "json|csv");

    auto* cmd_search = app.add_subcommand("search", "Hunt for a counterexample, smallest n first");
    cmd_search->add_option("--axiom", axiom_flag)->required();
    cmd_search->add_option("--rule", rule_name_flag)->required();
    cmd_search->add_option("--pool", pool_flag)->required();
    cmd_search->add_option("--n", n_flag, "Largest player count to try (default 4)");
    cmd_search->add_option("--seeds", seeds);
    cmd_search->add_option("--grid", grid);
    cmd_search->add_option("--seed-base", base_seed);
    cmd_search->add_option("--jobs", jobs);

    auto* cmd_gen = app.add_subcommand("gen", "Emit a seeded game document");
    cmd_gen->add_option("--pool", pool_flag)->required();
    cmd_gen->add_option("--n", n_flag)->required();
    cmd_gen->add_option("--seed", seed)->required();
    cmd_gen->add_option("--grid", grid);

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (cmd_run->parsed() || cmd_traj->parsed()) {
            const Rule rule = require_rule(rule_name_flag);
            const Game game = load_with_order(game_path, order_flag);
            const AllocationTrajectory traj = run_rule(rule, game);
            const auto doc = cmd_run->parsed() ? final_row_to_json(rule_name_flag, game, traj)
                                               : trajectory_to_json(rule_name_flag, game, traj);
            out << doc.dump(2) << "\n";
            return kOk;
        }

        if (cmd_dec->parsed()) {
            const Game game = load_game_file(game_path);
            out << decomposition_to_json(gm_decompose(game.valuation())).dump(2) << "\n";
            return kOk;
        }

        if (cmd_check->parsed()) {
            const Rule rule = require_rule(rule_name_flag);
            const Axiom axiom = require_axiom(axiom_flag);
            if (game_path.empty() == pool_flag.empty())
                throw Error(ErrorCode::ParseError, "check needs exactly one of --game or --pool");

            AxiomVerdict verdict;
            if (!game_path.empty()) {
                const Game game = load_with_order(game_path, order_flag);
                if (axiom == Axiom::EA && scope == "all")
                    verdict = check_ea(rule, game.valuation(), EaScope::all_orders());
                else
                    verdict = check_axiom(axiom, rule, game);
            } else {
                CheckPoolOptions opt{require_pool(pool_flag), n_flag, seeds, grid, base_seed};
                verdict = check_over_pool(axiom, rule, opt);
            }
            out << verdict_to_json(verdict).dump(2) << "\n";
            return verdict.pass ? kOk : kUnexpected;
        }

        if (cmd_matrix->parsed()) {
            MatrixBudget budget;
            budget.seeded_n = n_max;
            budget.exhaustive_n_max = std::min(4, n_max);
            budget.all_orders_n_max = std::min(4, n_max);
            budget.seeds_per_class = seeds;
            budget.value_grid = grid;
            budget.base_seed = base_seed;
            budget.jobs = jobs;
            const MatrixReport report = run_matrix(budget);

            std::string rendered;
            if (format == "csv")
                rendered = matrix_to_csv(report);
            else if (format == "json")
                rendered = matrix_to_json(report).dump(2) + "\n";
            else
                throw Error(ErrorCode::ParseError, "unknown --format '" + format + "'");

            if (!out_path.empty()) {
                std::ofstream file(out_path, std::ios::binary);
                if (!file)
                    throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
                file << rendered;
            } else {
                out << rendered;
            }
            for (const MatrixCell& cell : report.cells)
                if (!cell.matches_expected())
                    err << "mismatch: " << rule_name(cell.rule) << " x " << axiom_name(cell.axiom)
                        << " got " << cell_status_name(cell.status) << ", expected "
                        << cell_status_name(cell.expected) << "\n";
            return report.all_expected() ? kOk : kUnexpected;
        }

        if (cmd_search->parsed()) {
            SearchRequest request;
            request.axiom = require_axiom(axiom_flag);
            request.rule = require_rule(rule_name_flag);
            request.pool = require_pool(pool_flag);
            request.n_max = n_flag;
            request.seeds = seeds;
            request.value_grid = grid;
            request.base_seed = base_seed;
            request.jobs = jobs;
            long checked = 0;
            if (auto witness = search_counterexample(request, &checked)) {
                witness->games_checked = checked;
                out << verdict_to_json(*witness).dump(2) << "\n";
                return kOk;
            }
            out << nlohmann::json{{"status", "not-found"}, {"games_checked", checked}}.dump(2)
                << "\n";
            return kUnexpected;
        }

        if (cmd_gen->parsed()) {
            GenSpec spec{n_flag, require_pool(pool_flag), seed, grid};
            out << save_game(generate_game(spec));
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    err << "error: no command\n";
    return kBadInput;
}

} // namespace coopshare::cli
