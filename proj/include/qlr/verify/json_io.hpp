#pragma once

#include <json.hpp>

#include "qlr/kpoly.hpp"
#include "qlr/partition.hpp"
#include "qlr/qpoly.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

using Json = nlohmann::json;

Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const RectSequence& r);
RectSequence rects_from_json(const Json& j);

Json to_json(const KIndex& k);
// Accepts {"lambda","gamma","eta"} or {"lambda","rects":[[...],...]}.
KIndex kindex_from_json(const Json& j);

}  // namespace qlr
