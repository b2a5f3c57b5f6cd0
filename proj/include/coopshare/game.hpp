#pragma once

#include "coopshare/valuation.hpp"

#include <memory>
#include <vector>

namespace coopshare {

/// Arrival permutation: position p (0-based) holds the (p+1)-th arriver.
class ArrivalOrder {
public:
    ArrivalOrder() = default;
    explicit ArrivalOrder(std::vector<int> sequence);

    int length() const { return static_cast<int>(sequence_.size()); }
    int arriver_at(int step) const; // step is 1-based
    int position_of(int player) const;
    const std::vector<int>& sequence() const { return sequence_; }

    /// Players arrived once step `t` completed, as a coalition mask.
    CoalitionSet prefix_set(int step) const;

    bool operator==(const ArrivalOrder& o) const { return sequence_ == o.sequence_; }

private:
    std::vector<int> sequence_;
    std::vector<int> positions_; // player -> 1-based arrival step
};

/// The (N, v, pi) triple. The valuation is shared, so re-ordering a game for
/// order enumeration costs nothing and per-valuation caches can key on the
/// table's identity. `labels` maps internal 0-based ids to external 1-based
/// names; prefix sub-games keep the original names so worked examples read
/// the same as in the source documents.
class Game {
public:
    Game() = default;
    Game(ValuationTable v, ArrivalOrder ord);
    Game(std::shared_ptr<const ValuationTable> v, ArrivalOrder ord, std::vector<int> labels);

    const ValuationTable& valuation() const { return *valuation_; }
    const std::shared_ptr<const ValuationTable>& valuation_ptr() const { return valuation_; }
    const ArrivalOrder& order() const { return order_; }
    const std::vector<int>& labels() const { return labels_; }
    int player_count() const { return valuation_->player_count(); }

    /// Same players and valuation under a different arrival order.
    Game with_order(ArrivalOrder ord) const { return Game(valuation_, std::move(ord), labels_); }

private:
    std::shared_ptr<const ValuationTable> valuation_;
    ArrivalOrder order_;
    std::vector<int> labels_;
};

/// Restriction of G to the first t arrivers, players re-indexed compactly by
/// increasing original id; identities ride along in `labels`. Throws
/// Error{StepOutOfRange}.
Game prefix_subgame(const Game& g, int step);

/// True iff the step-t arrival strictly raises the running coalition value.
bool is_contributional(const Game& g, int step);

/// For a simple game, the arriver at whose step the prefix value jumps from
/// 0 to 1. Throws Error{NotSimpleGame} when the valuation is not simple.
int pivotal_player(const Game& g);

/// Per-arrival cumulative allocation: row t (1-based) is the length-n vector
/// of shares after step t; players not yet arrived hold 0. Rows of any rule
/// run satisfy sum(row t) = v(prefix t) exactly.
struct AllocationTrajectory {
    std::vector<std::vector<Rational>> rows;

    int step_count() const { return static_cast<int>(rows.size()); }
    const std::vector<Rational>& row(int step) const { return rows[step - 1]; }
    const std::vector<Rational>& final_row() const { return rows.back(); }
};

/// Row-sum efficiency check used by the axiom harness and its negative
/// controls; returns the first failing step, or 0 when every row is exact.
int first_inefficient_row(const Game& g, const AllocationTrajectory& t);

} // namespace coopshare
