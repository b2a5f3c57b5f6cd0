#include "coopshare/io.hpp"

#include "coopshare/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace coopshare {

using nlohmann::json;

namespace {

CoalitionSet parse_coalition_key(const std::string& key, int n) {
    if (key.empty())
        return 0;
    CoalitionSet mask = 0;
    int previous = 0;
    std::size_t i = 0;
    while (i < key.size()) {
        std::size_t j = i;
        while (j < key.size() && std::isdigit(static_cast<unsigned char>(key[j])))
            ++j;
        if (j == i)
            throw Error(ErrorCode::ParseError, "malformed coalition key '" + key + "'");
        const int member = std::stoi(key.substr(i, j - i));
        if (member < 1 || member > n)
            throw Error(ErrorCode::ParseError,
                        "coalition key '" + key + "' names player " + std::to_string(member) +
                            " outside 1.." + std::to_string(n));
        if (member <= previous)
            throw Error(ErrorCode::ParseError,
                        "coalition key '" + key + "' is not in canonical ascending order");
        previous = member;
        mask |= singleton(member - 1);
        if (j < key.size()) {
            if (key[j] != ',')
                throw Error(ErrorCode::ParseError, "malformed coalition key '" + key + "'");
            ++j;
            if (j == key.size())
                throw Error(ErrorCode::ParseError, "trailing comma in coalition key '" + key + "'");
        }
        i = j;
    }
    return mask;
}

Rational parse_value(const json& v, const std::string& key) {
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) {
        std::ostringstream os;
        os << v;
        return Rational::parse(os.str());
    }
    throw Error(ErrorCode::ParseError,
                "value for coalition '" + key + "' must be an integer or a \"p/q\" string");
}

json rational_value(const Rational& r) {
    if (r.is_integer()) {
        // Integers are emitted as JSON numbers when they fit.
        try {
            return json(std::stoll(r.str()));
        } catch (const std::exception&) {
            return json(r.str());
        }
    }
    return json(r.str());
}

std::vector<json> row_strings(const std::vector<Rational>& row) {
    std::vector<json> out;
    out.reserve(row.size());
    for (const Rational& r : row)
        out.emplace_back(r.str());
    return out;
}

} // namespace

Game load_game(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::ParseError, "game document must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "n" && key != "order" && key != "valuation")
            throw Error(ErrorCode::ParseError, "unknown document key '" + key + "'");
    if (!doc.contains("n") || !doc.contains("order") || !doc.contains("valuation"))
        throw Error(ErrorCode::ParseError, "game document needs 'n', 'order' and 'valuation'");

    if (!doc["n"].is_number_integer())
        throw Error(ErrorCode::ParseError, "'n' must be an integer");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxPlayers)
        throw Error(ErrorCode::ParseError,
                    "'n' = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPlayers));

    if (!doc["order"].is_array() || doc["order"].size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::BadPermutation, "'order' must list all " + std::to_string(n) + " players");
    std::vector<int> order;
    for (const json& entry : doc["order"]) {
        if (!entry.is_number_integer())
            throw Error(ErrorCode::BadPermutation, "'order' entries must be integers");
        const int player = entry.get<int>();
        if (player < 1 || player > n)
            throw Error(ErrorCode::BadPermutation,
                        "'order' entry " + std::to_string(player) + " outside 1.." + std::to_string(n));
        order.push_back(player - 1);
    }

    if (!doc["valuation"].is_object())
        throw Error(ErrorCode::ParseError, "'valuation' must be an object");
    const std::size_t table_size = std::size_t{1} << n;
    std::vector<Rational> values(table_size);
    std::vector<bool> present(table_size, false);
    for (const auto& [key, value] : doc["valuation"].items()) {
        const CoalitionSet mask = parse_coalition_key(key, n);
        values[mask] = parse_value(value, key);
        if (values[mask].is_negative())
            throw Error(ErrorCode::NegativeValue,
                        "v({" + key + "}) = " + values[mask].str() + " is negative");
        present[mask] = true;
    }
    for (CoalitionSet s = 0; s < table_size; ++s)
        if (!present[s])
            throw Error(ErrorCode::MissingCoalition, "no value for coalition {" + coalition_key(s) + "}");

    ValuationTable table(n, std::move(values));
    table.validate();
    return Game(std::move(table), ArrivalOrder(std::move(order)));
}

Game load_game_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_game(buffer.str());
}

json game_to_json(const Game& g) {
    const int n = g.player_count();
    json valuation = json::object();
    for (CoalitionSet s = 0; s < (CoalitionSet{1} << n); ++s)
        valuation[coalition_key(s)] = rational_value(g.valuation()[s]);

    std::vector<int> order;
    for (int player : g.order().sequence())
        order.push_back(player + 1);

    return json{{"n", n}, {"order", order}, {"valuation", valuation}};
}

std::string save_game(const Game& g) {
    return game_to_json(g).dump(2) + "\n";
}

json trajectory_to_json(const std::string& rule, const Game& g, const AllocationTrajectory& t) {
    (void)g;
    std::vector<std::vector<json>> rows;
    for (const auto& row : t.rows)
        rows.push_back(row_strings(row));
    return json{{"rule", rule}, {"rows", rows}, {"final", row_strings(t.final_row())}};
}

json final_row_to_json(const std::string& rule, const Game& g, const AllocationTrajectory& t) {
    (void)g;
    return json{{"rule", rule}, {"final", row_strings(t.final_row())}};
}

json decomposition_to_json(const Decomposition& d) {
    json components = json::array();
    for (const auto& comp : d.components) {
        std::vector<std::string> winning;
        for (CoalitionSet s = 0; s < comp.table.size(); ++s)
            if (!comp.table[s].is_zero())
                winning.push_back(coalition_key(s));
        components.push_back(json{{"coef", comp.coefficient.str()}, {"winning", winning}});
    }
    return json{{"components", components}};
}

} // namespace coopshare
