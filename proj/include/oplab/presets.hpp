#pragma once

// Named reproductions of the worked examples, shared by the CLI, the tests
// and the Python module.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oplab/graded_algebra.hpp"
#include "oplab/monomial_operad.hpp"

namespace oplab {

struct PresetInfo {
    std::string name;  // with a parameter placeholder, e.g. "ex35:<r>"
    std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

struct ResolvedPreset {
    std::string name;
    std::string description;
    IndexKind index_kind = IndexKind::arity;
    std::optional<MonomialOperadPresentation> presentation;
    std::function<DimSeries(int)> dims;  // values[0..max]
};

/// Resolves operad presets (ex34:<a>, ex35:<r>, ex53-1, ex53-2, ex53-3, ex62,
/// ex64-partition, ex46-avoidance, free-operad:<k>) and the closed-form
/// algebra names (warfield:<r>, example62, partition, floorpow:<a>,
/// polyring:<d>, free:<d>).
ResolvedPreset resolve_preset(std::string_view text);

/// The three operadization presentations of the binary-generator example.
MonomialOperadPresentation binary_chain_presentation(int which);

/// F<x1,x2>/(x1^2) and F<x1,x2>/(x2 x1, x2^2).
MonomialAlgebraPresentation fibonacci_algebra();
MonomialAlgebraPresentation bounded_algebra();

}  // namespace oplab
