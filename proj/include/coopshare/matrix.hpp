#pragma once

#include "coopshare/axioms.hpp"
#include "coopshare/gen.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace coopshare {

/// Search budget for the satisfaction matrix. The defaults realize the
/// reference run: named fixtures plus every simple game up to n = 4 checked
/// under all orders and deviations, plus 1000 seeded games per valuation
/// class at n = 5 (own order; EA deviations from that base; SF over all n!).
struct MatrixBudget {
    int exhaustive_n_max = 4;
    int all_orders_n_max = 4;
    int seeded_n = 5;
    int seeds_per_class = 1000;
    int value_grid = 4;
    std::uint64_t base_seed = 1180;
    int jobs = 1;
};

enum class CellStatus { NoCounterexampleFound, ConfirmedFail };

const char* cell_status_name(CellStatus s);

struct MatrixCell {
    Rule rule;
    Axiom axiom;
    CellStatus status = CellStatus::NoCounterexampleFound;
    CellStatus expected = CellStatus::NoCounterexampleFound;
    long games_checked = 0;
    std::optional<AxiomVerdict> counterexample;

    bool matches_expected() const { return status == expected; }
};

struct MatrixReport {
    MatrixBudget budget;
    std::vector<MatrixCell> cells;

    bool all_expected() const;
};

/// The eight rules and seven axioms of the summary table, in report order.
const std::vector<Rule>& table_rules();
const std::vector<Axiom>& table_axioms();

/// The published verdict for a cell: ConfirmedFail where the summary table
/// has a counterexample, NoCounterexampleFound where it claims satisfaction.
CellStatus expected_status(Rule r, Axiom a);

/// Runs every cell. A cell's pool follows its axiom's domain: IR cells and
/// the IR-refined rule's row run on superadditive games only; OD also draws
/// from the subadditive pool (whose zero-weight players are dummies); EA and
/// SF draw from the monotone and simple pools; the remaining axioms see all
/// five classes. Cell evaluation order is fixed, so reports are
/// deterministic for a given budget regardless of `jobs`.
MatrixReport run_matrix(const MatrixBudget& budget);

nlohmann::json matrix_to_json(const MatrixReport& report);
std::string matrix_to_csv(const MatrixReport& report);

/// Seeded counterexample hunt, smallest n first.
struct SearchRequest {
    Axiom axiom = Axiom::STAY;
    Rule rule = Rule::DMC;
    GameClass pool = GameClass::Monotone;
    int n_max = 4;
    int n_min = 2;
    int seeds = 200;
    int value_grid = 4;
    int all_orders_n_max = 4;
    std::uint64_t base_seed = 1180;
    int jobs = 1;
};

std::optional<AxiomVerdict> search_counterexample(const SearchRequest& request,
                                                  long* games_checked = nullptr);

} // namespace coopshare
