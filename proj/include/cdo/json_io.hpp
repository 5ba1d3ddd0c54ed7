#pragma once

#include "json.hpp"

#include "cdo/lifting.hpp"

namespace cdo {

using Json = nlohmann::json;

Json element_to_json(const BElement& e);
Json element_to_json(const UElement& e);
BElement belement_from_json(const Json& j);
UElement uelement_from_json(const Json& j);

Json symbol_to_json(const FunctionSymbol& s);
FunctionSymbol symbol_from_json(const Json& j);

Json vector_to_json(const InvariantVector& v);
InvariantVector vector_from_json(const Json& j);

Json operator_to_json(const LiftingOperator& op);
LiftingOperator operator_from_json(const Json& j);

Json table_to_json(const DimensionTable& t);
DimensionTable table_from_json(const Json& j);

Json qseries_to_json(const QSeries& s);
Json symbolic_sum_to_json(const SymbolicSum& s);

}  // namespace cdo
