#include "halg/json_io.hpp"

#include <stdexcept>

namespace halg {

namespace {

std::vector<std::vector<Label>> parse_label_groups(const Json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + " must be an array");
    std::vector<std::vector<Label>> out;
    for (const auto& group : j) {
        if (!group.is_array())
            throw std::invalid_argument(std::string(field) + " entries must be arrays of labels");
        std::vector<Label> labels;
        for (const auto& l : group) {
            if (!l.is_string()) throw std::invalid_argument("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        out.push_back(std::move(labels));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_index_pairs(const Json& j,
                                                                   const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + " must be an array");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
            !p[1].is_number_unsigned())
            throw std::invalid_argument(std::string(field) +
                                        " entries must be pairs of nonnegative indices");
        out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance document must be a JSON object");

    std::string kind;
    if (j.contains("kind")) {
        if (!j.at("kind").is_string()) throw std::invalid_argument("kind must be a string");
        kind = j.at("kind").get<std::string>();
    } else if (j.contains("edges")) {
        kind = "graph";
    } else if (j.contains("covers")) {
        kind = "quasiposet";
    } else if (j.contains("blocks")) {
        kind = "setcomp";
    } else {
        throw std::invalid_argument("cannot determine instance kind: expected edges, covers, or blocks");
    }

    if (kind == "graph") {
        if (!j.contains("blocks")) throw std::invalid_argument("graph instance needs blocks");
        auto blocks = parse_label_groups(j.at("blocks"), "blocks");
        auto edges = j.contains("edges")
                         ? parse_index_pairs(j.at("edges"), "edges")
                         : std::vector<std::pair<std::size_t, std::size_t>>{};
        return BlockGraph(std::move(blocks), std::move(edges));
    }
    if (kind == "quasiposet") {
        if (!j.contains("classes")) throw std::invalid_argument("quasi-poset instance needs classes");
        auto classes = parse_label_groups(j.at("classes"), "classes");
        auto covers = j.contains("covers")
                          ? parse_index_pairs(j.at("covers"), "covers")
                          : std::vector<std::pair<std::size_t, std::size_t>>{};
        return QuasiPoset(std::move(classes), std::move(covers));
    }
    if (kind == "setcomp") {
        if (!j.contains("blocks")) throw std::invalid_argument("set composition instance needs blocks");
        return SetComposition(parse_label_groups(j.at("blocks"), "blocks"));
    }
    throw std::invalid_argument("unknown instance kind: " + kind);
}

Json to_json(const SetComposition& c) {
    Json out = Json::array();
    for (const auto& b : c.blocks) out.push_back(b);
    return out;
}

Json to_json(const BlockGraph& g) {
    Json blocks = Json::array();
    for (const auto& b : g.blocks) blocks.push_back(b);
    Json edges = Json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
    return Json{{"blocks", blocks}, {"edges", edges}};
}

Json to_json(const QuasiPoset& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(c);
    Json covers = Json::array();
    for (const auto& [i, j] : t.covers) covers.push_back(Json::array({i, j}));
    return Json{{"classes", classes}, {"covers", covers}};
}

Json to_json(const PackedWord& w) { return Json(w.images); }

Json to_json(const IntComposition& c) { return Json(c.parts); }

Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(rat_to_string(c));
    return Json{{"coeffs", coeffs}, {"text", poly_to_string(p)}};
}

}  // namespace halg
