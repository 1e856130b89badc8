#pragma once

// JSON encodings of the library types. Rationals are strings ("3/2"),
// partitions are keys of the form "[2,1]".

#include "tca/dfinite.hpp"
#include "tca/grassmann.hpp"
#include "tca/series_forms.hpp"
#include "tca/symfunc.hpp"
#include "tca/torus.hpp"

#include <nlohmann/json.hpp>

namespace tca {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const SymFunc& f);
Json to_json(const SigmaExpr& e);
Json to_json(const ExpPoly& h);
Json to_json(const TSeries& s);
Json to_json(const TTPoly& p);
Json to_json(const EnhancedExpr& e);
Json to_json(const OdeOperator& op);
Json to_json(const CharPolyForm& form);
Json to_json(const GrClass& c);
Json to_json(const LambdaGrClass& c);
Json to_json(const LaurentPoly& f);
Json to_json(const CoeffSeries& c);
Json to_json(const std::vector<Integer>& v);

/// Integers that fit a machine word are emitted as JSON numbers.
Json integer_to_json(const Integer& z);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
SigmaExpr sigma_from_json(const Json& j);
ExpPoly exppoly_from_json(const Json& j);
TSeries tseries_from_json(const Json& j);
OdeOperator ode_from_json(const Json& j);
GrClass grclass_from_json(const Json& j);
LambdaGrClass lambda_grclass_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
CoeffSeries coeffs_from_json(const Json& j);

}  // namespace tca
