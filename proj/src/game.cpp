#include "coopshare/game.hpp"

#include "coopshare/errors.hpp"

#include <algorithm>
#include <numeric>

namespace coopshare {

ArrivalOrder::ArrivalOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
    const int n = static_cast<int>(sequence_.size());
    positions_.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) {
        const int player = sequence_[pos];
        if (player < 0 || player >= n || positions_[player] != 0)
            throw Error(ErrorCode::BadPermutation, "order is not a permutation of the players");
        positions_[player] = pos + 1;
    }
}

int ArrivalOrder::arriver_at(int step) const {
    if (step < 1 || step > length())
        throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(step));
    return sequence_[step - 1];
}

int ArrivalOrder::position_of(int player) const {
    return positions_.at(player);
}

CoalitionSet ArrivalOrder::prefix_set(int step) const {
    if (step < 0 || step > length())
        throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(step));
    CoalitionSet s = 0;
    for (int i = 0; i < step; ++i)
        s |= singleton(sequence_[i]);
    return s;
}

Game::Game(ValuationTable v, ArrivalOrder ord)
    : valuation_(std::make_shared<const ValuationTable>(std::move(v))), order_(std::move(ord)) {
    if (order_.length() != valuation_->player_count())
        throw Error(ErrorCode::BadPermutation, "order length differs from player count");
    labels_.resize(valuation_->player_count());
    std::iota(labels_.begin(), labels_.end(), 1);
}

Game::Game(std::shared_ptr<const ValuationTable> v, ArrivalOrder ord, std::vector<int> labels)
    : valuation_(std::move(v)), order_(std::move(ord)), labels_(std::move(labels)) {
    if (order_.length() != valuation_->player_count())
        throw Error(ErrorCode::BadPermutation, "order length differs from player count");
    if (labels_.size() != static_cast<std::size_t>(valuation_->player_count()))
        throw Error(ErrorCode::InternalError, "label count differs from player count");
}

Game prefix_subgame(const Game& g, int step) {
    const int n = g.player_count();
    if (step < 1 || step > n)
        throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(step));
    if (step == n)
        return g;

    const CoalitionSet prefix = g.order().prefix_set(step);
    const std::vector<int> members = members_of(prefix); // ascending original id

    std::vector<int> new_index(n, -1);
    std::vector<int> labels(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        new_index[members[i]] = static_cast<int>(i);
        labels[i] = g.labels()[members[i]];
    }

    std::vector<int> seq;
    seq.reserve(step);
    for (int t = 1; t <= step; ++t)
        seq.push_back(new_index[g.order().arriver_at(t)]);

    return Game(std::make_shared<const ValuationTable>(restrict_to(g.valuation(), prefix)),
                ArrivalOrder(std::move(seq)), std::move(labels));
}

bool is_contributional(const Game& g, int step) {
    const CoalitionSet prefix = g.order().prefix_set(step);
    const CoalitionSet before = g.order().prefix_set(step - 1);
    return g.valuation()[prefix] > g.valuation()[before];
}

int pivotal_player(const Game& g) {
    if (!classify_valuation(g.valuation()).simple)
        throw Error(ErrorCode::NotSimpleGame, "pivotal player is defined for simple games only");
    for (int t = 1; t <= g.player_count(); ++t)
        if (g.valuation()[g.order().prefix_set(t)] == Rational(1))
            return g.order().arriver_at(t);
    throw Error(ErrorCode::InternalError, "simple game with v(N) = 1 must have a pivotal step");
}

int first_inefficient_row(const Game& g, const AllocationTrajectory& t) {
    for (int step = 1; step <= t.step_count(); ++step) {
        Rational sum(0);
        for (const Rational& share : t.row(step))
            sum += share;
        if (sum != g.valuation()[g.order().prefix_set(step)])
            return step;
    }
    return 0;
}

} // namespace coopshare
