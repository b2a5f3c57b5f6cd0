#include "coopshare/matrix.hpp"

#include "coopshare/errors.hpp"
#include "coopshare/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace coopshare {

const char* cell_status_name(CellStatus s) {
    return s == CellStatus::ConfirmedFail ? "confirmed-fail" : "no-counterexample-found";
}

bool MatrixReport::all_expected() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const MatrixCell& c) { return c.matches_expected(); });
}

const std::vector<Rule>& table_rules() {
    static const std::vector<Rule> rules = {Rule::DMC,   Rule::SV,     Rule::ERFC,
                                            Rule::MES,   Rule::NDMES,  Rule::ULMES,
                                            Rule::EULMES, Rule::IR_EULMES};
    return rules;
}

const std::vector<Axiom>& table_axioms() {
    static const std::vector<Axiom> axioms = {Axiom::IR,     Axiom::PART, Axiom::EA, Axiom::STAY,
                                              Axiom::S_STAY, Axiom::OD,   Axiom::SF};
    return axioms;
}

CellStatus expected_status(Rule r, Axiom a) {
    const bool satisfied = [&] {
        switch (r) {
        case Rule::DMC:
            return a == Axiom::IR || a == Axiom::PART || a == Axiom::STAY || a == Axiom::OD ||
                   a == Axiom::SF;
        case Rule::SV:
            return a != Axiom::STAY && a != Axiom::S_STAY;
        case Rule::ERFC:
            return a == Axiom::STAY || a == Axiom::OD || a == Axiom::SF;
        case Rule::MES:
            return a == Axiom::PART || a == Axiom::EA || a == Axiom::STAY || a == Axiom::S_STAY;
        case Rule::NDMES:
            return a != Axiom::IR && a != Axiom::SF;
        case Rule::ULMES:
            return a != Axiom::IR && a != Axiom::EA && a != Axiom::SF;
        case Rule::EULMES:
            return a != Axiom::IR && a != Axiom::SF;
        case Rule::IR_EULMES:
            return a != Axiom::SF;
        default:
            return false;
        }
    }();
    return satisfied ? CellStatus::NoCounterexampleFound : CellStatus::ConfirmedFail;
}

namespace {

struct PoolEntry {
    Game game;
    bool superadditive = false;
};

struct Pools {
    std::vector<PoolEntry> fixtures;
    std::vector<PoolEntry> exhaustive; // simple games, identity order
    std::vector<std::pair<GameClass, std::vector<PoolEntry>>> seeded;

    const std::vector<PoolEntry>* seeded_class(GameClass c) const {
        for (const auto& [cls, games] : seeded)
            if (cls == c)
                return &games;
        return nullptr;
    }
};

Pools build_pools(const MatrixBudget& budget) {
    Pools pools;
    for (const auto& named : fixtures::all())
        pools.fixtures.push_back(
            {named.game, classify_valuation(named.game.valuation()).superadditive});

    for (int n = 2; n <= budget.exhaustive_n_max; ++n) {
        for (ValuationTable& table : enumerate_simple_tables(n)) {
            const bool superadd = classify_valuation(table).superadditive;
            std::vector<int> seq(n);
            std::iota(seq.begin(), seq.end(), 0);
            pools.exhaustive.push_back({Game(std::move(table), ArrivalOrder(seq)), superadd});
        }
    }

    for (GameClass cls : {GameClass::Monotone, GameClass::Submodular, GameClass::Subadditive,
                          GameClass::Superadditive, GameClass::Simple}) {
        std::vector<PoolEntry> games;
        games.reserve(budget.seeds_per_class);
        for (int seed = 0; seed < budget.seeds_per_class; ++seed) {
            GenSpec spec{budget.seeded_n, cls, budget.base_seed + static_cast<std::uint64_t>(seed),
                         budget.value_grid};
            Game game = generate_game(spec);
            const bool superadd = cls == GameClass::Superadditive ||
                                  classify_valuation(game.valuation()).superadditive;
            games.push_back({std::move(game), superadd});
        }
        pools.seeded.emplace_back(cls, std::move(games));
    }
    return pools;
}

std::vector<GameClass> seeded_classes_for(Rule rule, Axiom axiom) {
    if (rule == Rule::IR_EULMES || axiom == Axiom::IR)
        return {GameClass::Superadditive};
    switch (axiom) {
    case Axiom::EA:
    case Axiom::SF:
        return {GameClass::Monotone, GameClass::Simple};
    case Axiom::OD:
        return {GameClass::Monotone, GameClass::Simple, GameClass::Subadditive};
    default:
        return {GameClass::Monotone, GameClass::Submodular, GameClass::Subadditive,
                GameClass::Superadditive, GameClass::Simple};
    }
}

bool per_order_axiom(Axiom a) {
    return a == Axiom::STAY || a == Axiom::S_STAY || a == Axiom::PART || a == Axiom::OD ||
           a == Axiom::IR || a == Axiom::EFF;
}

struct CellRun {
    long games_checked = 0;
    std::optional<AxiomVerdict> fail;

    bool record(AxiomVerdict v) {
        ++games_checked;
        if (!v.pass) {
            fail = std::move(v);
            return true;
        }
        return false;
    }
};

// One pool game against one cell. Per-order axioms enumerate every arrival
// order when n is small enough; EA expands to all base orders likewise.
bool run_unit(CellRun& run, Rule rule, Axiom axiom, const Game& game, int all_orders_n_max) {
    const int n = game.player_count();
    const bool exhaustive_orders = n <= all_orders_n_max;
    RuleContext ctx;

    if (axiom == Axiom::EA) {
        const EaScope scope = exhaustive_orders ? EaScope::all_orders()
                                                : EaScope::base_order(game.order());
        return run.record(check_ea(rule, game.valuation(), scope, &ctx));
    }
    if (axiom == Axiom::SF)
        return run.record(check_sf(rule, game.valuation(), &ctx));

    if (!exhaustive_orders)
        return run.record(check_axiom(axiom, rule, game, &ctx));

    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    do {
        if (run.record(check_axiom(axiom, rule, game.with_order(ArrivalOrder(seq)), &ctx)))
            return true;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return false;
}

MatrixCell eval_cell(Rule rule, Axiom axiom, const Pools& pools, const MatrixBudget& budget) {
    MatrixCell cell;
    cell.rule = rule;
    cell.axiom = axiom;
    cell.expected = expected_status(rule, axiom);

    const bool superadditive_only = rule == Rule::IR_EULMES || axiom == Axiom::IR;
    CellRun run;

    auto sweep = [&](const std::vector<PoolEntry>& entries) {
        for (const PoolEntry& entry : entries) {
            if (superadditive_only && !entry.superadditive)
                continue;
            if (run_unit(run, rule, axiom, entry.game, budget.all_orders_n_max))
                return true;
        }
        return false;
    };

    bool found = sweep(pools.fixtures) || sweep(pools.exhaustive);
    if (!found) {
        for (GameClass cls : seeded_classes_for(rule, axiom)) {
            const auto* games = pools.seeded_class(cls);
            if (games && sweep(*games))
                break;
        }
    }

    cell.games_checked = run.games_checked;
    if (run.fail) {
        cell.status = CellStatus::ConfirmedFail;
        cell.counterexample = std::move(run.fail);
    }
    return cell;
}

} // namespace

MatrixReport run_matrix(const MatrixBudget& budget) {
    const Pools pools = build_pools(budget);

    std::vector<std::pair<Rule, Axiom>> tasks;
    for (Rule r : table_rules())
        for (Axiom a : table_axioms())
            tasks.emplace_back(r, a);

    MatrixReport report;
    report.budget = budget;
    report.cells.resize(tasks.size());

    const int jobs = std::max(1, budget.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            report.cells[i] = eval_cell(tasks[i].first, tasks[i].second, pools, budget);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < tasks.size(); i += jobs)
                    report.cells[i] = eval_cell(tasks[i].first, tasks[i].second, pools, budget);
            });
        }
        for (auto& worker : workers)
            worker.join();
    }
    return report;
}

nlohmann::json matrix_to_json(const MatrixReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const MatrixCell& cell : report.cells) {
        nlohmann::json jc{
            {"rule", rule_name(cell.rule)},
            {"axiom", axiom_name(cell.axiom)},
            {"status", cell_status_name(cell.status)},
            {"expected", cell_status_name(cell.expected)},
            {"matches_expected", cell.matches_expected()},
            {"games_checked", cell.games_checked},
            {"witness", nullptr},
        };
        if (cell.counterexample)
            jc["witness"] = verdict_to_json(*cell.counterexample)["witness"];
        cells.push_back(std::move(jc));
    }
    return nlohmann::json{
        {"budget",
         {{"exhaustive_n_max", report.budget.exhaustive_n_max},
          {"all_orders_n_max", report.budget.all_orders_n_max},
          {"seeded_n", report.budget.seeded_n},
          {"seeds_per_class", report.budget.seeds_per_class},
          {"value_grid", report.budget.value_grid},
          {"base_seed", report.budget.base_seed}}},
        {"cells", cells},
        {"all_expected", report.all_expected()},
    };
}

std::string matrix_to_csv(const MatrixReport& report) {
    std::ostringstream out;
    out << "rule";
    for (Axiom a : table_axioms())
        out << ',' << axiom_name(a);
    out << '\n';
    for (Rule r : table_rules()) {
        out << rule_name(r);
        for (Axiom a : table_axioms()) {
            const auto it = std::find_if(report.cells.begin(), report.cells.end(),
                                         [&](const MatrixCell& c) {
                                             return c.rule == r && c.axiom == a;
                                         });
            out << ',' << (it != report.cells.end() ? cell_status_name(it->status) : "missing");
        }
        out << '\n';
    }
    return out.str();
}

std::optional<AxiomVerdict> search_counterexample(const SearchRequest& request,
                                                  long* games_checked) {
    long checked = 0;
    std::optional<AxiomVerdict> found;
    for (int n = std::max(1, request.n_min); n <= request.n_max && !found; ++n) {
        for (int seed = 0; seed < request.seeds && !found; ++seed) {
            GenSpec spec{n, request.pool, request.base_seed + static_cast<std::uint64_t>(seed),
                         request.value_grid};
            const Game game = generate_game(spec);
            CellRun run;
            run_unit(run, request.rule, request.axiom, game, request.all_orders_n_max);
            checked += run.games_checked;
            if (run.fail)
                found = std::move(run.fail);
        }
    }
    if (games_checked)
        *games_checked = checked;
    return found;
}

} // namespace coopshare
