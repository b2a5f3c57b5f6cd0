#pragma once

#include "coopshare/decomposition.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace coopshare {

enum class Axiom { EFF, STAY, S_STAY, PART, OD, IR, EA, SF };

const char* axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(const std::string& name);

/// Counterexample witness. `relation` tags which strict (in)equality was
/// violated so the witness can be replayed standalone; lhs/rhs hold the two
/// exact sides as evaluated when the violation was found.
struct Witness {
    Game game;
    std::optional<ArrivalOrder> deviation; // EA only: the delayed order
    int player = -1;                       // internal 0-based id
    int step = 0;                          // 0 when the axiom is not step-scoped
    Rational lhs;
    Rational rhs;
    std::string relation;
};

struct AxiomVerdict {
    Axiom axiom;
    Rule rule;
    bool pass = true;
    std::optional<Witness> witness;
    long games_checked = 1;
};

/// Scope of the EA deviation enumeration: either every base order (requires
/// n within the factorial cap) or a single given base order. Deviations are
/// always the full set of later insertions of each player.
struct EaScope {
    std::optional<ArrivalOrder> base; // nullopt = all n! base orders

    static EaScope all_orders() { return {}; }
    static EaScope base_order(ArrivalOrder o) { return {std::move(o)}; }
};

AxiomVerdict check_efficiency(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_stay(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_s_stay(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_part(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_od(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_ir(Rule rule, const Game& g, RuleContext* ctx = nullptr);
AxiomVerdict check_ea(Rule rule, const ValuationTable& v, const EaScope& scope,
                      RuleContext* ctx = nullptr);
AxiomVerdict check_sf(Rule rule, const ValuationTable& v, RuleContext* ctx = nullptr);

/// Single-game dispatcher. EA uses the game's own order as base; SF ignores
/// the order entirely.
AxiomVerdict check_axiom(Axiom a, Rule rule, const Game& g, RuleContext* ctx = nullptr);

/// Re-evaluates a fail witness from scratch and confirms that the recorded
/// inequality still holds with bit-identical sides.
bool replay_witness(const AxiomVerdict& verdict);

nlohmann::json verdict_to_json(const AxiomVerdict& verdict);

} // namespace coopshare
