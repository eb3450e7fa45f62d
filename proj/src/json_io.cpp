#include "reconkit/json_io.hpp"

#include "reconkit/errors.hpp"

namespace reconkit {

Json to_json(const Integer& x) {
    if (fits_int64(x)) return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + j.get<std::string>(), 0);
        }
    }
    throw ParseError("expected an integer, got " + j.dump(), 0);
}

Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const Integer& c : p.coeffs) a.push_back(to_json(c));
    return a;
}

Json to_json(const NMatrix& n) {
    Json j;
    j["size"] = n.size();
    j["rows"] = n.rows;
    Json ve = Json::array();
    for (const VE& x : infer_v_e(n)) ve.push_back({x.v, x.e});
    j["ve"] = ve;
    if (n.labels) {
        Json labels = Json::array();
        for (const IsoClass& c : n.labels->classes) labels.push_back(write_graph6(c.rep));
        j["labels"] = labels;
    }
    return j;
}

Json to_json(const Elp& p) {
    Json j;
    Json nodes = Json::array();
    for (int r : p.ranks) nodes.push_back({{"rank", r}});
    j["nodes"] = nodes;
    Json covers = Json::array();
    for (const ElpCover& c : p.covers) covers.push_back({{"from", c.from}, {"to", c.to}, {"label", c.label}});
    j["covers"] = covers;
    return j;
}

Json to_json(const PolyDeck& d) {
    Json polys = Json::array();
    for (const Polynomial& p : d.polys) polys.push_back(to_json(p));
    return {{"n", d.n}, {"polys", polys}};
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["charpoly"] = to_json(r.charpoly);
    j["tr"] = to_json(r.tr);
    j["ham"] = to_json(r.ham);
    Json psi = Json::object();
    for (const auto& [i, x] : r.psi) psi[std::to_string(i)] = to_json(x);
    j["psi"] = psi;
    Json uni = Json::object();
    for (const auto& [i, x] : r.uni) uni[std::to_string(i)] = to_json(x);
    j["uni"] = uni;
    if (r.rankpoly) {
        Json terms = Json::array();
        for (const auto& [rs, x] : *r.rankpoly) terms.push_back({{"r", rs.first}, {"s", rs.second}, {"count", to_json(x)}});
        j["rankpoly"] = terms;
    }
    return j;
}

NMatrix nmatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) throw ParseError("N-matrix document needs a \"rows\" array", 0);
    NMatrix n;
    for (const Json& row : j["rows"]) {
        if (!row.is_array()) throw ParseError("N-matrix row is not an array", 0);
        std::vector<Count> r;
        for (const Json& x : row) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
                throw ParseError("N-matrix entry is not a non-negative integer", 0);
            r.push_back(x.get<Count>());
        }
        n.rows.push_back(std::move(r));
    }
    if (j.contains("size") && j["size"] != n.size()) throw ParseError("N-matrix \"size\" disagrees with the rows", 0);
    return n;
}

PolyDeck polydeck_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("polys") || !j["polys"].is_array())
        throw ParseError("polynomial deck document needs \"n\" and \"polys\"", 0);
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" is not an integer", 0);
    PolyDeck d;
    d.n = j["n"].get<int>();
    for (const Json& p : j["polys"]) {
        if (!p.is_array() || p.empty()) throw ParseError("polynomial is not a nonempty array", 0);
        Polynomial poly;
        for (const Json& c : p) poly.coeffs.push_back(integer_from_json(c));
        d.polys.push_back(std::move(poly));
    }
    return d;
}

std::vector<Graph> vertex_deck_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cards") || !j["cards"].is_array()) throw ParseError("vertex deck document needs a \"cards\" array", 0);
    std::vector<Graph> deck;
    for (const Json& c : j["cards"]) {
        if (!c.is_string()) throw ParseError("card is not a graph6 string", 0);
        deck.push_back(parse_graph6(c.get<std::string>()));
    }
    return deck;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

}  // namespace reconkit
