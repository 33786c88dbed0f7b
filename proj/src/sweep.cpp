#include "oplab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "oplab/series.hpp"

namespace oplab {

bool SweepReport::dichotomy_holds() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const SweepRow& r) { return r.tail_exponent > 1.1 && r.tail_exponent < 1.9; });
}

bool SweepReport::linear_rows_have_criterion() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) {
        return r.growth_class != GrowthClass::linear || r.criterion_d.has_value();
    });
}

unsigned default_threads() {
    if (const char* env = std::getenv("OPLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepReport run_sweep(int max_relation_weight, int horizon, unsigned threads) {
    if (max_relation_weight != 2 && max_relation_weight != 3)
        throw InvalidArgumentError("sweep relation weight must be 2 or 3");
    if (horizon < 6 || horizon > 40) throw InvalidArgumentError("sweep horizon must be between 6 and 40 weights");
    AlphabetPtr alphabet = make_alphabet({{"a", 2}});
    MonomialOperadPresentation free_operad(alphabet, {});

    SweepReport report;
    report.max_relation_weight = max_relation_weight;
    report.horizon = horizon;
    report.candidates_by_weight.assign(max_relation_weight + 1, 0);
    for (auto& t : enumerate_irr(free_operad, max_relation_weight)) {
        ++report.candidates_by_weight[t.weight()];
        if (t.weight() >= 2) report.candidates.push_back(std::move(t));
    }
    const std::size_t k = report.candidates.size();
    const std::uint32_t family = std::uint32_t(1) << k;
    report.rows.resize(family);

    auto compute = [&](std::uint32_t key) {
        std::vector<TreeMonomial> relations;
        std::string text;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(key >> i & 1)) continue;
            relations.push_back(report.candidates[i]);
            if (!text.empty()) text += ';';
            text += report.candidates[i].to_string();
        }
        MonomialOperadPresentation p(alphabet, std::move(relations));
        SweepRow row;
        row.key = key;
        row.relations = text.empty() ? "-" : text;
        GapReport gap = gap_dichotomy_check(p, horizon);
        row.criterion_d = gap.criterion_d;
        row.growth_class = gap.growth_class;
        // weight <= horizon corresponds to arity <= horizon + 1
        GkReport gk = gk_estimate(dim_by_arity(p, horizon + 1));
        row.tail_exponent = gk.slope;
        row.exponential = gk.exp_flag;
        report.rows[key] = std::move(row);
    };

    threads = std::max(1u, std::min<unsigned>(threads, family));
    std::atomic<std::uint32_t> next{0};
    auto worker = [&]() {
        for (std::uint32_t key; (key = next++) < family;) compute(key);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

}  // namespace oplab
