#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "turan/constructions.hpp"
#include "turan/decomposition.hpp"
#include "turan/pattern.hpp"
#include "turan/search.hpp"

namespace turan {

std::string method_name(SearchMethod method);
SearchMethod parse_method(const std::string& name);
std::string match_tag_name(MatchTag tag);
std::string recipe_kind_name(RecipeKind kind);

nlohmann::ordered_json to_json(const SearchReport& report);
nlohmann::ordered_json to_json(const VerificationRow& row);
nlohmann::ordered_json to_json(const std::vector<VerificationRow>& rows);
nlohmann::ordered_json to_json(const ConstructionRecipe& recipe);
nlohmann::ordered_json to_json(const EmbeddingWitness& witness);
nlohmann::ordered_json to_json(const DecompositionResult& result);

// RFC-style CSV escaping: quote when the field holds a comma, quote, or
// newline, doubling embedded quotes.
std::string csv_quote(const std::string& field);

std::string csv_search(const SearchReport& report);
std::string csv_verification(const std::vector<VerificationRow>& rows);
std::string csv_decomposition(const DecompositionResult& result);

}  // namespace turan
