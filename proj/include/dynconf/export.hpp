#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynconf/configurations.hpp"
#include "dynconf/hom_length.hpp"
#include "dynconf/quiver.hpp"

namespace dynconf {

using json = nlohmann::ordered_json;

json quiver_to_json(const TranslationQuiver& q);
TranslationQuiver quiver_from_json(const json& j);

std::string quiver_name(const TranslationQuiver& q);  // "E6/tau5rho", "A5[0,3)"

json configuration_to_json(const TranslationQuiver& q, const std::vector<int>& members);
// Members given as ids or label strings; returns sorted ids.
std::vector<int> configuration_from_json(const TranslationQuiver& q, const json& j);
json configuration_list_to_json(const TranslationQuiver& q, const std::vector<Configuration>& configs);

json hom_table_to_json(const TranslationQuiver& q, const HomTable& t);
json cover_hom_to_json(const DynkinDiagram& dg, const CoverHom& t);
json report_to_json(const ConfigurationReport& r);
json relation_to_json(const BrauerRelation& b);

std::string quiver_to_dot(const TranslationQuiver& q, const std::vector<int>& highlight = {});

// Diagonal grid: one text row per diagram vertex, one character cell block per level.
using CellFn = std::function<std::string(const Slot&)>;
std::string render_grid(const DynkinDiagram& dg, std::int64_t level_lo, std::int64_t level_hi, const CellFn& cell);

// Compact label text as drawn in grids ("13", "24+", "1.12").
std::string compact_label(const DynkinDiagram& dg, const Slot& s);

// Fundamental domain of a quotient (or the window), members bracketed.
std::string render_quiver(const TranslationQuiver& q, const std::vector<int>& members = {});
std::string render_hom(const DynkinDiagram& dg, const CoverHom& t);
// h(-, base) over the fundamental domain of a quotient.
std::string render_hom(const TranslationQuiver& q, const HomTable& t);

}  // namespace dynconf
