#include "oplab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oplab/constructions.hpp"
#include "oplab/presets.hpp"
#include "oplab/series.hpp"
#include "oplab/sweep.hpp"

namespace oplab::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
    using Error::Error;
};

std::string fixed(double v, int digits = 6) {
    if (!std::isfinite(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational parse_number(const std::string& text, std::size_t line) {
    try {
        return parse_decimal_rational(text);
    } catch (const Error& e) {
        throw ParseError("not an exact number: '" + text + "'", line, text);
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
        auto b = f.find_first_not_of(" \t\r");
        auto e = f.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? std::string{} : f.substr(b, e - b + 1));
    }
    return fields;
}

// Reads one coefficient per row, indexed from 0. A header row selects the
// `coeff` or `dim` column; otherwise the second column (or the only one).
SeriesWindow read_csv(std::istream& in) {
    SeriesWindow w;
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> column;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv(line);
        if (!column) {
            bool header = !fields.empty() && !fields[0].empty() &&
                          !(std::isdigit(static_cast<unsigned char>(fields[0][0])) || fields[0][0] == '-');
            if (header) {
                for (std::size_t i = 0; i < fields.size(); ++i)
                    if (fields[i] == "coeff" || fields[i] == "dim" || fields[i] == "value") column = i;
                if (!column) column = fields.size() >= 2 ? 1 : 0;
                continue;
            }
            column = fields.size() >= 2 ? 1 : 0;
        }
        if (*column >= fields.size()) throw ParseError("missing column", line_no, line);
        w.coefficients.push_back(parse_number(fields[*column], line_no));
    }
    if (w.coefficients.empty()) throw UsageError("no coefficients in CSV input");
    return w;
}

DimSeries window_to_dims(const SeriesWindow& w) {
    std::vector<BigInt> values;
    for (const auto& c : w.coefficients) {
        if (c.get_den() != 1) throw UsageError("this command needs integer coefficients");
        values.push_back(c.get_num());
    }
    return make_series(std::move(values), IndexKind::degree);
}

// Where a command takes its sequence from.
struct SourceOptions {
    std::string presentation, preset, algebra, csv, source;
};

void add_source_options(CLI::App* cmd, SourceOptions& s, bool with_algebra = true) {
    cmd->add_option("--presentation", s.presentation, "operad presentation file");
    cmd->add_option("--preset", s.preset, "preset name (see preset-list)");
    if (with_algebra) {
        cmd->add_option("--algebra", s.algebra, "monomial algebra file");
        cmd->add_option("--csv", s.csv, "CSV file with one coefficient per row");
    }
    cmd->add_option("--source", s.source, "file (presentation, algebra or CSV) or preset name");
}

struct Source {
    std::string label;
    IndexKind index_kind = IndexKind::arity;
    std::optional<MonomialOperadPresentation> presentation;
    std::optional<MonomialAlgebraPresentation> algebra;
    std::optional<SeriesWindow> fixed;
    std::function<DimSeries(int)> generate;

};

Source from_text_file(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#' || line.compare(b, 5, "name ") == 0) continue;
        if (line.compare(b, 10, "generator ") == 0 || line.compare(b, 9, "relation ") == 0) {
            Source s;
            s.label = path;
            s.presentation = parse_presentation(text, std::filesystem::path(path).stem().string());
            return s;
        }
        if (line.compare(b, 4, "var ") == 0 || line.compare(b, 7, "forbid ") == 0) {
            Source s;
            s.label = path;
            s.index_kind = IndexKind::degree;
            s.algebra = parse_algebra(text, std::filesystem::path(path).stem().string());
            return s;
        }
        break;
    }
    Source s;
    s.label = path;
    std::istringstream in(text);
    s.fixed = read_csv(in);
    s.index_kind = IndexKind::degree;
    return s;
}

std::optional<Source> resolve_source(const SourceOptions& o) {
    int given = !o.presentation.empty() + !o.preset.empty() + !o.algebra.empty() + !o.csv.empty() + !o.source.empty();
    if (given > 1) throw UsageError("give only one of --presentation, --preset, --algebra, --csv, --source");
    Source s;
    if (!o.presentation.empty()) {
        s.label = o.presentation;
        s.presentation = parse_presentation(read_file(o.presentation),
                                            std::filesystem::path(o.presentation).stem().string());
    } else if (!o.algebra.empty()) {
        s.label = o.algebra;
        s.index_kind = IndexKind::degree;
        s.algebra = parse_algebra(read_file(o.algebra), std::filesystem::path(o.algebra).stem().string());
    } else if (!o.csv.empty()) {
        s.label = o.csv;
        std::istringstream in(read_file(o.csv));
        s.fixed = read_csv(in);
        s.index_kind = IndexKind::degree;
    } else if (!o.preset.empty() || !o.source.empty()) {
        const std::string& name = o.preset.empty() ? o.source : o.preset;
        if (o.preset.empty() && std::filesystem::is_regular_file(name)) {
            s = from_text_file(name);
        } else {
            ResolvedPreset p = resolve_preset(name);
            s.label = p.name;
            s.index_kind = p.index_kind;
            s.presentation = p.presentation;
            s.generate = p.dims;
        }
    } else {
        return std::nullopt;
    }
    if (!s.generate && s.presentation) {
        auto p = *s.presentation;
        s.generate = [p](int max) {
            return p.alphabet()->has_unary() ? dim_by_arity(p, max, Engine::profile_dp, max) : dim_by_arity(p, max);
        };
    }
    if (!s.generate && s.algebra) {
        auto a = *s.algebra;
        s.generate = [a](int max) { return hilbert_dims(a, max); };
    }
    return s;
}

Source require_source(const SourceOptions& o) {
    auto s = resolve_source(o);
    if (!s) throw UsageError("no input: give --presentation, --preset, --algebra, --csv or --source");
    return *s;
}

SeriesWindow window_from(const Source& s, std::optional<int> max, const char* flag) {
    if (s.fixed) {
        SeriesWindow w = *s.fixed;
        if (max && static_cast<std::size_t>(*max) + 1 < w.size()) w.coefficients.resize(*max + 1);
        return w;
    }
    if (!max) throw UsageError(std::string("this source needs ") + flag);
    return to_window(s.generate(*max));
}

const MonomialOperadPresentation& require_presentation(const Source& s) {
    if (!s.presentation) throw UsageError("this command needs an operad presentation (file or presentation preset)");
    return *s.presentation;
}

void add_emit(CLI::App* cmd, std::string& emit) {
    cmd->add_option("--emit", emit, "output format")->check(CLI::IsMember({"csv", "json", "gnuplot"}));
}

std::vector<Rational> partial_sums(const std::vector<Rational>& c) {
    std::vector<Rational> s(c.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s[i] = acc += c[i];
    return s;
}

std::string log_ratio(std::size_t n, const Rational& sum) {
    if (n < 2 || sgn(sum) <= 0) return "";
    double v = sum.get_den() == 1 ? log_big(sum.get_num()) : std::log(sum.get_d());
    return fixed(v / std::log(static_cast<double>(n)));
}

struct EmitContext {
    std::string command, source, engine, index_name, value_name;
    std::optional<std::uint64_t> fingerprint;
    bool exact = true;
    std::string index_kind;
};

void emit_table(std::ostream& out, const std::string& format, const EmitContext& ctx, const std::vector<Rational>& c) {
    const auto sums = partial_sums(c);
    if (format == "json") {
        Json j;
        j["command"] = ctx.command;
        j["source"] = ctx.source;
        if (ctx.fingerprint) j["fingerprint"] = hex64(*ctx.fingerprint);
        if (!ctx.engine.empty()) j["engine"] = ctx.engine;
        j["index_kind"] = ctx.index_kind;
        j["horizon"] = c.empty() ? 0 : c.size() - 1;
        j["exact"] = ctx.exact;
        Json values = Json::array(), partial = Json::array();
        for (std::size_t i = 0; i < c.size(); ++i) {
            values.push_back(c[i].get_str());
            partial.push_back(sums[i].get_str());
        }
        j["values"] = values;
        j["partial_sums"] = partial;
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "gnuplot") {
        out << "# " << ctx.command << " " << ctx.source << (ctx.exact ? "" : " (weight-capped, inexact)") << '\n';
        out << "$data << EOD\n";
        for (std::size_t i = 0; i < c.size(); ++i) out << i << ' ' << c[i].get_str() << ' ' << sums[i].get_str() << '\n';
        out << "EOD\n";
        out << "set logscale y\nplot $data using 1:($2 > 0 ? $2 : 1/0) with linespoints title '" << ctx.value_name
            << "', $data using 1:3 with lines title 'partial sum'\n";
        return;
    }
    out << ctx.index_name << ',' << ctx.value_name << ",partial_sum,log_n_partial_sum\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        out << i << ',' << c[i].get_str() << ',' << sums[i].get_str() << ',' << log_ratio(i, sums[i]) << '\n';
}

std::vector<Rational> as_rationals(const DimSeries& d) {
    std::vector<Rational> out;
    out.reserve(d.size());
    for (const auto& v : d.values) out.emplace_back(v);
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"oplab: monomial operads, dimension series and growth analysis"};
    app.name("oplab");
    app.require_subcommand(1);
    std::function<void()> action;

    // dims
    SourceOptions dims_src;
    int dims_max_arity = -1, dims_max_weight = -1, dims_cap = -1;
    std::string dims_engine = "dp", dims_emit = "csv";
    auto* dims = app.add_subcommand("dims", "dimension sequence of an operad, algebra or preset");
    add_source_options(dims, dims_src);
    dims->add_option("--max-arity,--max-index,--max", dims_max_arity, "largest index");
    dims->add_option("--max-weight", dims_max_weight, "count normal forms by weight instead of arity");
    dims->add_option("--engine", dims_engine, "brute or dp")->check(CLI::IsMember({"brute", "dp", "profile_dp"}));
    dims->add_option("--weight-cap", dims_cap, "weight cap (required with unary generators)");
    add_emit(dims, dims_emit);
    dims->callback([&] {
        action = [&] {
            Source s = require_source(dims_src);
            EmitContext ctx{"dims", s.label, "", "index", "dim", std::nullopt, true, std::string(to_string(s.index_kind))};
            DimSeries d;
            if (s.presentation) {
                const auto& p = *s.presentation;
                Engine engine = parse_engine(dims_engine);
                ctx.engine = std::string(to_string(engine));
                ctx.fingerprint = p.fingerprint();
                if (dims_max_weight >= 0) {
                    d = dim_by_weight(p, dims_max_weight, engine);
                } else {
                    if (dims_max_arity < 0) throw UsageError("dims needs --max-arity or --max-weight");
                    std::optional<int> cap;
                    if (dims_cap >= 0) cap = dims_cap;
                    d = dim_by_arity(p, dims_max_arity, engine, cap);
                }
            } else if (s.fixed) {
                d = window_to_dims(window_from(s, dims_max_arity >= 0 ? std::optional<int>(dims_max_arity) : std::nullopt, ""));
            } else {
                if (dims_max_weight >= 0) throw UsageError("--max-weight applies to operad presentations only");
                if (dims_max_arity < 0) throw UsageError("dims needs --max-arity");
                d = s.generate(dims_max_arity);
            }
            ctx.exact = d.exact;
            ctx.index_kind = std::string(to_string(d.index_kind));
            emit_table(out, dims_emit, ctx, as_rationals(d));
        };
    });

    // series
    SourceOptions series_src;
    int series_max = -1;
    bool series_egf = false;
    std::string series_emit = "csv";
    auto* series = app.add_subcommand("series", "generating-series coefficients");
    add_source_options(series, series_src);
    series->add_option("--max,-N", series_max, "largest index");
    series->add_flag("--egf", series_egf, "divide coefficient n by n!");
    add_emit(series, series_emit);
    series->callback([&] {
        action = [&] {
            Source s = require_source(series_src);
            SeriesWindow w = window_from(s, series_max >= 0 ? std::optional<int>(series_max) : std::nullopt, "--max");
            if (series_egf) w = exponential_transform(w);
            EmitContext ctx{"series", s.label, "", "n", "coeff", std::nullopt, true, std::string(to_string(s.index_kind))};
            if (s.presentation) ctx.fingerprint = s.presentation->fingerprint();
            emit_table(out, series_emit, ctx, w.coefficients);
        };
    });

    // analyses reading a window from a source or from stdin
    auto window_or_stdin = [&](const SourceOptions& o, int max, const char* flag) {
        auto s = resolve_source(o);
        if (!s) {
            SeriesWindow w = read_csv(in);
            if (max >= 0 && static_cast<std::size_t>(max) + 1 < w.size()) w.coefficients.resize(max + 1);
            return std::make_pair(std::string("stdin"), w);
        }
        return std::make_pair(s->label, window_from(*s, max >= 0 ? std::optional<int>(max) : std::nullopt, flag));
    };

    SourceOptions gk_src;
    int gk_n = -1;
    double gk_tail = 1.0 / 3.0;
    std::string gk_emit = "csv";
    auto* gk = app.add_subcommand("gk", "estimate the GK-dimension from partial sums");
    add_source_options(gk, gk_src);
    gk->add_option("--N,--max", gk_n, "largest index");
    gk->add_option("--tail", gk_tail, "tail fraction used as fit window")->check(CLI::Range(0.01, 1.0));
    gk->add_option("--emit", gk_emit)->check(CLI::IsMember({"csv", "json"}));
    gk->callback([&] {
        action = [&] {
            auto [label, w] = window_or_stdin(gk_src, gk_n, "--N");
            GkReport r = gk_estimate(window_to_dims(w), gk_tail);
            if (gk_emit == "json") {
                Json j;
                j["command"] = "gk";
                j["source"] = label;
                j["horizon"] = r.n;
                j["window_start"] = r.window_start;
                j["pointwise_estimate"] = r.pointwise;
                j["pointwise_max_estimate"] = r.pointwise_max;
                j["slope_estimate"] = r.slope;
                j["exp_flag"] = r.exp_flag;
                out << j.dump(2) << '\n';
            } else {
                out << "metric,value\n";
                out << "source," << label << '\n';
                out << "N," << r.n << '\n';
                out << "window_start," << r.window_start << '\n';
                out << "pointwise_estimate," << fixed(r.pointwise) << '\n';
                out << "pointwise_max_estimate," << fixed(r.pointwise_max) << '\n';
                out << "slope_estimate," << fixed(r.slope) << '\n';
                out << "exp_flag," << (r.exp_flag ? "true" : "false") << '\n';
            }
        };
    });

    SourceOptions guess_src;
    int guess_max = -1, guess_order = 4, guess_degree = 4;
    std::size_t guess_holdout = 20;
    auto* guess = app.add_subcommand("guess", "search for a linear recurrence with polynomial coefficients");
    add_source_options(guess, guess_src);
    guess->add_option("--max,-N", guess_max, "largest index");
    guess->add_option("--max-order", guess_order, "largest order R")->check(CLI::Range(1, 64));
    guess->add_option("--max-degree", guess_degree, "largest coefficient degree D")->check(CLI::Range(0, 64));
    guess->add_option("--holdout", guess_holdout, "trailing coefficients kept out of the fit");
    guess->callback([&] {
        action = [&] {
            auto [label, w] = window_or_stdin(guess_src, guess_max, "--max");
            auto cand = guess_holonomic(w, guess_order, guess_degree, guess_holdout);
            if (!cand) {
                out << "no recurrence found at bounds (R=" << guess_order << ", D=" << guess_degree
                    << ", N=" << w.truncation() << ")\n";
                return;
            }
            out << "recurrence: " << cand->to_string() << '\n';
            out << "order: " << cand->order << '\n' << "degree: " << cand->degree << '\n';
            out << "fit_window: " << cand->fit_window.first << ".." << cand->fit_window.second << '\n';
            out << "holdout_verified: " << (cand->holdout_verified ? "true" : "false") << " (" << cand->holdout
                << " terms)\n";
        };
    });

    SourceOptions fit_src;
    int fit_max = -1;
    std::size_t fit_holdout = 20;
    auto* fit = app.add_subcommand("fit", "fit a rational generating function");
    add_source_options(fit, fit_src);
    fit->add_option("--max,-N", fit_max, "largest index");
    fit->add_option("--holdout", fit_holdout, "trailing coefficients kept out of the fit");
    fit->callback([&] {
        action = [&] {
            auto [label, w] = window_or_stdin(fit_src, fit_max, "--max");
            auto r = fit_rational(w, fit_holdout);
            if (!r) {
                out << "no rational fit at N=" << w.truncation() << " (holdout " << fit_holdout << ")\n";
                return;
            }
            out << "numerator: " << polynomial_to_string(r->numerator) << '\n';
            out << "denominator: " << polynomial_to_string(r->denominator) << '\n';
            out << "series: " << r->to_string() << '\n';
            out << "holdout_verified: " << (r->holdout_verified ? "true" : "false") << '\n';
        };
    });

    SourceOptions gap_src;
    int gap_weight = 30;
    std::string gap_emit = "csv";
    auto* gap = app.add_subcommand("gapcheck", "linear-growth criterion and affine bound on partial sums");
    add_source_options(gap, gap_src, false);
    gap->add_option("--max-weight", gap_weight, "weight horizon (>= 6)");
    gap->add_option("--emit", gap_emit)->check(CLI::IsMember({"csv", "json"}));
    gap->callback([&] {
        action = [&] {
            Source s = require_source(gap_src);
            const auto& p = require_presentation(s);
            GapReport r = gap_dichotomy_check(p, gap_weight);
            if (gap_emit == "json") {
                Json j;
                j["command"] = "gapcheck";
                j["source"] = s.label;
                j["fingerprint"] = hex64(p.fingerprint());
                j["horizon"] = gap_weight;
                j["criterion_d"] = r.criterion_d ? Json(*r.criterion_d) : Json(nullptr);
                j["growth_class"] = std::string(to_string(r.growth_class));
                if (r.affine) {
                    j["affine_slope_estimate"] = r.affine->slope;
                    j["affine_intercept_estimate"] = r.affine->intercept;
                    j["first_violation"] = r.affine->first_violation ? Json(*r.affine->first_violation) : Json(nullptr);
                }
                Json counts = Json::array(), sums = Json::array();
                for (std::size_t i = 0; i < r.weight_counts.size(); ++i) {
                    counts.push_back(r.weight_counts[i].get_str());
                    sums.push_back(r.partial_sums[i].get_str());
                }
                j["weight_counts"] = counts;
                j["partial_sums"] = sums;
                out << j.dump(2) << '\n';
                return;
            }
            out << "# criterion_d," << (r.criterion_d ? std::to_string(*r.criterion_d) : "none") << '\n';
            out << "# growth_class," << to_string(r.growth_class) << '\n';
            if (r.affine) {
                out << "# affine_fit_estimate," << fixed(r.affine->slope) << "*n + " << fixed(r.affine->intercept)
                    << '\n';
                out << "# first_violation,"
                    << (r.affine->first_violation ? std::to_string(*r.affine->first_violation) : "none") << '\n';
            }
            EmitContext ctx{"gapcheck", s.label, "profile_dp", "index", "dim", p.fingerprint(), true, "weight"};
            emit_table(out, "csv", ctx, as_rationals(r.weight_counts));
        };
    });

    int sweep_weight = 3, sweep_horizon = 40, sweep_threads = 0;
    std::string sweep_emit = "csv";
    auto* sweep = app.add_subcommand("sweep", "growth sweep over one-binary-generator monomial operads");
    sweep->add_option("--max-relation-weight,-W", sweep_weight, "relations of weight 2..W")
        ->check(CLI::IsMember({2, 3}));
    sweep->add_option("--horizon", sweep_horizon, "weight horizon")->check(CLI::Range(6, 40));
    sweep->add_option("--threads", sweep_threads, "worker threads (default OPLAB_THREADS)");
    sweep->add_option("--emit", sweep_emit)->check(CLI::IsMember({"csv", "json"}));
    sweep->callback([&] {
        action = [&] {
            unsigned threads = sweep_threads > 0 ? static_cast<unsigned>(sweep_threads) : default_threads();
            SweepReport r = run_sweep(sweep_weight, sweep_horizon, threads);
            if (sweep_emit == "json") {
                Json j;
                j["command"] = "sweep";
                j["max_relation_weight"] = r.max_relation_weight;
                j["horizon"] = r.horizon;
                j["candidates_by_weight"] = r.candidates_by_weight;
                j["family_size"] = r.rows.size();
                Json rows = Json::array();
                for (const auto& row : r.rows) {
                    Json x;
                    x["key"] = row.key;
                    x["relations"] = row.relations;
                    x["criterion_d"] = row.criterion_d ? Json(*row.criterion_d) : Json(nullptr);
                    x["growth_class"] = std::string(to_string(row.growth_class));
                    x["tail_fit_exponent_estimate"] = std::stod(fixed(row.tail_exponent));
                    x["exp_flag"] = row.exponential;
                    rows.push_back(x);
                }
                j["rows"] = rows;
                j["dichotomy_holds"] = r.dichotomy_holds();
                j["linear_rows_have_criterion"] = r.linear_rows_have_criterion();
                out << j.dump(2) << '\n';
                return;
            }
            out << "# weight-2 monomials: " << r.candidates_by_weight[2];
            if (r.max_relation_weight >= 3) out << ", weight-3 monomials: " << r.candidates_by_weight[3];
            out << ", presentations: " << r.rows.size() << '\n';
            out << "key,relations,criterion_d,growth_class,tail_fit_exponent_estimate,exp_flag\n";
            for (const auto& row : r.rows)
                out << row.key << ',' << csv_field(row.relations) << ','
                    << (row.criterion_d ? std::to_string(*row.criterion_d) : "none") << ','
                    << to_string(row.growth_class) << ',' << fixed(row.tail_exponent, 4) << ','
                    << (row.exponential ? "true" : "false") << '\n';
            out << "# dichotomy (no tail exponent in (1.1, 1.9)): " << (r.dichotomy_holds() ? "holds" : "FAILS") << '\n';
            out << "# linear rows satisfy the criterion: " << (r.linear_rows_have_criterion() ? "yes" : "NO") << '\n';
        };
    });

    std::string op_algebra, op_out = "-";
    auto* operadize_cmd = app.add_subcommand("operadize", "operadization of a monomial algebra");
    operadize_cmd->add_option("--algebra", op_algebra, "monomial algebra file")->required();
    operadize_cmd->add_option("--emit", op_out, "output presentation file ('-' for stdout)");
    operadize_cmd->callback([&] {
        action = [&] {
            auto a = parse_algebra(read_file(op_algebra), std::filesystem::path(op_algebra).stem().string());
            std::string text = operadize(a).to_text();
            if (op_out == "-") {
                out << text;
            } else {
                std::ofstream f(op_out, std::ios::binary);
                if (!f) throw UsageError("cannot write '" + op_out + "'");
                f << text;
            }
        };
    });

    SourceOptions env_src;
    std::string env_kind = "min", env_emit = "csv";
    int env_max = -1;
    auto* envelope = app.add_subcommand("envelope", "dimension profile of the min or symmetric envelope");
    add_source_options(envelope, env_src);
    envelope->add_option("--kind", env_kind)->check(CLI::IsMember({"min", "sym"}));
    envelope->add_option("--max-index,--max", env_max, "largest arity")->required();
    add_emit(envelope, env_emit);
    envelope->callback([&] {
        action = [&] {
            Source s = require_source(env_src);
            if (env_max < 1) throw UsageError("--max-index must be at least 1");
            SeriesWindow w = window_from(s, env_max - 1, "--max-index");
            DimSeries a = window_to_dims(w);
            OperadDimProfile p = env_kind == "min" ? min_envelope_dims(a) : symmetric_envelope_dims(a);
            EmitContext ctx{"envelope", s.label, "", "index", "dim", std::nullopt, p.dims.exact, "arity"};
            ctx.command += " " + std::string(to_string(p.provenance));
            emit_table(out, env_emit, ctx, as_rationals(p.dims));
        };
    });

    auto* presets = app.add_subcommand("preset-list", "list preset names");
    presets->callback([&] {
        action = [&] {
            out << "name,description\n";
            for (const auto& p : preset_catalog()) out << csv_field(p.name) << ',' << csv_field(p.description) << '\n';
        };
    });

    SourceOptions irr_src;
    int irr_weight = 3;
    std::string irr_order = "deglex", irr_rank;
    auto* irr = app.add_subcommand("irr", "list normal forms by weight, then path-sequence order");
    add_source_options(irr, irr_src, false);
    irr->add_option("--max-weight", irr_weight, "largest weight");
    irr->add_option("--order", irr_order, "deglex or degrevlex");
    irr->add_option("--rank", irr_rank, "generator ids from smallest to largest, comma separated");
    irr->callback([&] {
        action = [&] {
            Source s = require_source(irr_src);
            const auto& p = require_presentation(s);
            TreeOrder order = make_tree_order(*p.alphabet(), irr_order, irr_rank);
            IrrEnumerator it(p, irr_weight, order);
            out << "weight,arity,monomial,path_sequence\n";
            while (auto t = it.next())
                out << t->weight() << ',' << t->arity() << ',' << csv_field(t->to_string()) << ','
                    << csv_field(path_to_string(*p.alphabet(), to_path_sequence(*t))) << '\n';
        };
    });

    std::vector<const char*> argv{"oplab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    try {
        if (action) action();
        out.flush();
        return ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const InvalidArgumentError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return computation_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return computation_error;
    }
}

}  // namespace oplab::cli
