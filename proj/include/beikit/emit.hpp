#ifndef BEIKIT_EMIT_HPP
#define BEIKIT_EMIT_HPP

#include <nlohmann/json.hpp>

#include "beikit/gbasis.hpp"
#include "beikit/polytext.hpp"
#include "beikit/primdec.hpp"

// JSON emission, schema "bei-kit/1". Keys are ordered alphabetically by the
// json object type, so dumps are byte-stable.

namespace beikit {

inline constexpr const char* kSchemaTag = "bei-kit/1";

inline nlohmann::json graph_to_json(const OrderedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [x, y] : g.edges())
        edges.push_back({x, y});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

inline nlohmann::json paths_to_json(const std::vector<std::vector<int>>& paths) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["count"] = paths.size();
    j["paths"] = paths;
    return j;
}

template <class K>
nlohmann::json basis_to_json(std::span<const BasisElement<K>> basis) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["count"] = basis.size();
    nlohmann::json items = nlohmann::json::array();
    for (const auto& e : basis) {
        items.push_back({{"path", e.path},
                         {"kappa", e.kappa},
                         {"polynomial", polynomial_to_text(e.poly)},
                         {"initial", monomial_to_text(e.initial)}});
    }
    j["basis"] = std::move(items);
    return j;
}

template <class K>
nlohmann::json components_to_json(const OrderedGraph& g,
                                  std::span<const PrimeComponent> comps, const K& one,
                                  std::size_t generator_listing_cap) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["count"] = comps.size();
    nlohmann::json items = nlohmann::json::array();
    for (const auto& comp : comps) {
        nlohmann::json item;
        item["y"] = comp.y;
        item["blocks"] = comp.blocks;
        item["monomial_generators"] = comp.monomial_generator_count();
        item["binomial_generators"] = comp.binomial_generator_count();
        std::size_t total = comp.monomial_generator_count() + comp.binomial_generator_count();
        if (total <= generator_listing_cap) {
            nlohmann::json gens = nlohmann::json::array();
            for (const auto& p : component_generators(g, comp, one))
                gens.push_back(polynomial_to_text(p));
            item["generators"] = std::move(gens);
        } else {
            item["generators_suppressed"] = true;
        }
        items.push_back(std::move(item));
    }
    j["components"] = std::move(items);
    return j;
}

} // namespace beikit

#endif
