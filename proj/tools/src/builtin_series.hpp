#pragma once

// Named inputs of the CLI, generated from first principles.

#include "tca/series_forms.hpp"
#include "tca/symfunc.hpp"
#include "tca/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tca::cli::builtin {

/// Character of E on the product torus: the named representation of each
/// factor, tensored across factors. An empty group takes a dimension.
std::optional<LaurentPoly> representation(const std::vector<GroupFactor>& group, const std::string& rep);

/// catalan-egf, bell-egf, catalan-sq-ogf with `length` coefficients.
std::optional<CoeffSeries> named_series(const std::string& name, int length);

/// Character of a polynomial functor concentrated in one degree: sym2,
/// wedge2, tensorK, or a partition "[2,1]".
std::optional<SymFunc> object_character(const std::string& rep);

}  // namespace tca::cli::builtin
