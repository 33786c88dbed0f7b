#include "oplab/constructions.hpp"

namespace oplab {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::min_envelope: return "min_envelope";
        case Provenance::operadization: return "operadization";
        case Provenance::symmetric_envelope: return "symmetric_envelope";
        case Provenance::direct: return "direct";
    }
    return "?";
}

namespace {

void require_connected(const DimSeries& a) {
    if (a.values.empty() || a.values[0] != 1)
        throw InvalidArgumentError("envelope constructions need a connected algebra (dim A_0 = 1)");
}

}  // namespace

OperadDimProfile min_envelope_dims(const DimSeries& algebra_dims) {
    require_connected(algebra_dims);
    std::vector<BigInt> dims{0};
    dims.insert(dims.end(), algebra_dims.values.begin(), algebra_dims.values.end());
    return {make_series(std::move(dims), IndexKind::arity, algebra_dims.exact), Provenance::min_envelope};
}

OperadDimProfile symmetric_envelope_dims(const DimSeries& algebra_dims) {
    require_connected(algebra_dims);
    std::vector<BigInt> dims{0};
    for (std::size_t i = 0; i < algebra_dims.size(); ++i) dims.push_back(BigInt(i + 1) * algebra_dims[i]);
    return {make_series(std::move(dims), IndexKind::arity, algebra_dims.exact), Provenance::symmetric_envelope};
}

OperadDimProfile operadization_dims(const DimSeries& algebra_dims, int d, int max_arity) {
    if (d < 2) throw InvalidArgumentError("operadization needs at least two variables");
    if (max_arity < 0) throw InvalidArgumentError("max arity must be nonnegative");
    std::vector<BigInt> dims(max_arity + 1, 0);
    if (max_arity >= 1) dims[1] = 1;
    if (max_arity >= d) dims[d] = 1;
    for (int l = 1; (l + 1) * d - l <= max_arity; ++l) {
        if (static_cast<std::size_t>(l) >= algebra_dims.size())
            throw InvalidArgumentError("algebra dims too short for the requested arity");
        dims[(l + 1) * d - l] = algebra_dims[l];
    }
    return {make_series(std::move(dims), IndexKind::arity), Provenance::operadization};
}

TreeMonomial operadize_word(const AlphabetPtr& alphabet, const AlgebraWord& w) {
    const int d = alphabet->arity(0);
    NodePtr below = make_node(*alphabet, 0, std::vector<NodePtr>(d));
    for (std::size_t k = w.size(); k-- > 0;) {
        if (w[k] < 0 || w[k] >= d) throw InvalidArgumentError("word letter outside the operad arity");
        std::vector<NodePtr> children(d);
        children[w[k]] = below;
        below = make_node(*alphabet, 0, std::move(children));
    }
    return TreeMonomial::from_root(alphabet, below);
}

MonomialOperadPresentation operadize(const MonomialAlgebraPresentation& algebra) {
    const int d = algebra.num_variables();
    if (d < 2) throw InvalidArgumentError("operadization needs at least two variables");
    AlphabetPtr alphabet = make_alphabet({{"a", d}});
    NodePtr corolla = make_node(*alphabet, 0, std::vector<NodePtr>(d));
    std::vector<TreeMonomial> relations;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::vector<NodePtr> children(d);
            children[i] = corolla;
            children[j] = corolla;
            relations.push_back(TreeMonomial::from_root(alphabet, make_node(*alphabet, 0, std::move(children))));
        }
    for (const auto& w : algebra.forbidden()) relations.push_back(operadize_word(alphabet, w));
    std::string name = algebra.name().empty() ? std::string("operadized") : "operadized " + algebra.name();
    return MonomialOperadPresentation(alphabet, std::move(relations), std::move(name));
}

}  // namespace oplab
