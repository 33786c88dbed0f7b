#include "oplab/presets.hpp"

#include "oplab/constructions.hpp"
#include "oplab/single_branched.hpp"

namespace oplab {

namespace {

constexpr const char* kBoth = "a(a(*,*),a(*,*))";  // both children grafted

std::pair<std::string, std::string> split_parameter(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) return {std::string(text), {}};
    return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

DimSeries truncated(DimSeries s, int max) {
    s.values.resize(static_cast<std::size_t>(max) + 1);
    return s;
}

ResolvedPreset from_presentation(std::string name, std::string description, MonomialOperadPresentation p) {
    ResolvedPreset r;
    r.name = std::move(name);
    r.description = std::move(description);
    r.presentation = p;
    const bool unary = p.alphabet()->has_unary();
    r.dims = [p, unary](int max) {
        return unary ? dim_by_arity(p, max, Engine::profile_dp, max) : dim_by_arity(p, max);
    };
    return r;
}

}  // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog = {
        {"ex34:<a>", "operad with floor(n^a) - floor((n-1)^a) generators of arity n, all compositions zero"},
        {"ex35:<r>", "Warfield-type monomial algebra of GK-dimension r, 2 < r < 3 (dims by degree)"},
        {"ex53-1", "one binary generator, relation a(a(*,*),a(*,*)); dims 2^(n-2)"},
        {"ex53-2", "Fibonacci operad: operadization of F<x1,x2>/(x1^2)"},
        {"ex53-3", "operadization of F<x1,x2>/(x2 x1, x2^2); dims eventually 2"},
        {"ex62", "min-envelope of the gapped monomial algebra U; non-holonomic series"},
        {"ex64-partition", "min-envelope of an algebra with Hilbert series prod 1/(1-z^i)"},
        {"ex46-avoidance", "binary right-normal words with at most one index 2 (counts by height)"},
        {"free-operad:<k>", "free operad on one generator of arity k"},
        {"warfield:<r>", "algebra dims 1 + n + (f-1)f/2, f = floor(n^((r-1)/2))"},
        {"example62", "algebra dims 1, 2, 3 + delta(n)"},
        {"partition", "partition numbers p(n)"},
        {"floorpow:<a>", "same series as ex34:<a>"},
        {"polyring:<d>", "polynomial ring in d variables"},
        {"free:<d>", "free associative algebra on d letters"},
    };
    return catalog;
}

MonomialOperadPresentation binary_chain_presentation(int which) {
    std::string text = "generator a 2\nrelation " + std::string(kBoth) + "\n";
    std::string name;
    switch (which) {
        case 1: name = "ex53-1"; break;
        case 2:
            name = "ex53-2";
            text += "relation a(a(a(*,*),*),*)\n";
            break;
        case 3:
            name = "ex53-3";
            text += "relation a(*,a(a(*,*),*))\nrelation a(*,a(*,a(*,*)))\n";
            break;
        default: throw InvalidArgumentError("binary chain presentations are numbered 1..3");
    }
    return parse_presentation(text, name);
}

MonomialAlgebraPresentation fibonacci_algebra() {
    return MonomialAlgebraPresentation({"x1", "x2"}, {{0, 0}}, "fibonacci");
}

MonomialAlgebraPresentation bounded_algebra() {
    return MonomialAlgebraPresentation({"x1", "x2"}, {{1, 0}, {1, 1}}, "bounded");
}

ResolvedPreset resolve_preset(std::string_view text) {
    auto [head, arg] = split_parameter(text);
    const std::string name(text);
    auto require_arg = [&](const char* what) {
        if (arg.empty()) throw InvalidArgumentError("preset '" + head + "' needs a parameter: " + what);
        return parse_decimal_rational(arg);
    };

    if (head == "ex53-1" || head == "ex53-2" || head == "ex53-3") {
        const int which = head.back() - '0';
        const auto& info = preset_catalog()[1 + which];
        return from_presentation(name, info.description, binary_chain_presentation(which));
    }
    if (head == "free-operad") {
        Rational k = require_arg("arity k >= 1");
        if (k.get_den() != 1 || k < 1 || k > 64) throw InvalidArgumentError("free-operad arity must be in 1..64");
        AlphabetPtr alphabet = make_alphabet({{"a", static_cast<int>(k.get_num().get_si())}});
        return from_presentation(name, "free operad on one generator of arity " + arg,
                                 MonomialOperadPresentation(alphabet, {}, name));
    }
    ResolvedPreset r;
    r.name = name;
    if (head == "ex34") {
        Rational a = require_arg("exponent a > 0");
        if (a <= 0) throw InvalidArgumentError("ex34 exponent must be positive");
        r.description = preset_catalog()[0].description;
        r.dims = [a](int max) { return floor_power_dims(a, max); };
        return r;
    }
    if (head == "ex35") {
        Rational q = require_arg("r in (2, 3)");
        warfield_dims(q, 0);
        r.description = preset_catalog()[1].description;
        r.index_kind = IndexKind::degree;
        r.dims = [q](int max) { return warfield_dims(q, max); };
        return r;
    }
    if (head == "ex62" && arg.empty()) {
        r.description = preset_catalog()[5].description;
        r.dims = [](int max) { return truncated(min_envelope_dims(example62_dims(std::max(max - 1, 0))).dims, max); };
        return r;
    }
    if (head == "ex64-partition" && arg.empty()) {
        r.description = preset_catalog()[6].description;
        r.dims = [](int max) { return truncated(min_envelope_dims(partition_dims(std::max(max - 1, 0))).dims, max); };
        return r;
    }
    if (head == "ex46-avoidance" && arg.empty()) {
        r.description = preset_catalog()[7].description;
        r.index_kind = IndexKind::height;
        r.dims = [](int max) { return closed_set_counts(at_most_one_turn_system(max), max); };
        return r;
    }
    try {
        ClosedFormSeries s = ClosedFormSeries::parse(text);
        r.description = "closed-form algebra series " + s.name();
        r.index_kind = s.kind == ClosedFormSeries::Kind::floor_power ? IndexKind::arity : IndexKind::degree;
        r.dims = [s](int max) { return s.dims(max); };
        return r;
    } catch (const InvalidArgumentError&) {
        if (!arg.empty() && (head == "warfield" || head == "floorpow" || head == "polyring" || head == "free"))
            throw;
    }
    throw InvalidArgumentError("unknown preset '" + name + "' (see preset-list)");
}

}  // namespace oplab
