#include "ncx/cli.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncx/analysis.hpp"
#include "ncx/boolean.hpp"
#include "ncx/bounds.hpp"
#include "ncx/conjectures.hpp"
#include "ncx/errors.hpp"
#include "ncx/expression.hpp"
#include "ncx/table.hpp"

namespace ncx {

namespace {

// Tables bigger than this are refused when auto-computed; build them
// explicitly with `compute` and pass --table.
constexpr uint64_t kAutoTableCap = uint64_t(1) << 27;

struct GlobalOpts {
    std::string format = "plain";
    bool quiet = false;
    std::string table_path;
};

using Cell = std::variant<uint64_t, int64_t, double, bool, std::string>;

struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string cell_text(const Cell& cell) {
    if (const auto* u = std::get_if<uint64_t>(&cell)) return std::to_string(*u);
    if (const auto* i = std::get_if<int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

void emit(const Dataset& data, const GlobalOpts& opts, std::ostream& out) {
    if (opts.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : data.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < data.columns.size(); ++i) {
                const Cell& cell = row[i];
                if (const auto* u = std::get_if<uint64_t>(&cell))
                    obj[data.columns[i]] = *u;
                else if (const auto* v = std::get_if<int64_t>(&cell))
                    obj[data.columns[i]] = *v;
                else if (const auto* d = std::get_if<double>(&cell))
                    obj[data.columns[i]] = *d;
                else if (const auto* b = std::get_if<bool>(&cell))
                    obj[data.columns[i]] = *b;
                else
                    obj[data.columns[i]] = std::get<std::string>(cell);
            }
            rows.push_back(std::move(obj));
        }
        out << rows.dump(2) << '\n';
        return;
    }
    const char sep = (opts.format == "csv") ? ',' : ' ';
    for (std::size_t i = 0; i < data.columns.size(); ++i)
        out << (i ? std::string(1, sep) : "") << data.columns[i];
    out << '\n';
    for (const auto& row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? std::string(1, sep) : "") << cell_text(row[i]);
        out << '\n';
    }
}

ComputeMode parse_mode(const std::string& name) {
    return name == "naive" ? ComputeMode::NaiveExact : ComputeMode::PrunedExact;
}

// Loads the configured table or computes the smallest one that covers
// `needed`.
ComplexityTable obtain_table(const GlobalOpts& opts, uint64_t needed,
                             std::ostream& err) {
    if (!opts.table_path.empty()) {
        ComplexityTable table = load_table(std::filesystem::path(opts.table_path));
        if (table.max_n() < needed)
            throw RangeError("table file covers 1.." +
                             std::to_string(table.max_n()) + " but 1.." +
                             std::to_string(needed) + " is needed");
        return table;
    }
    if (needed == 0) needed = 1;
    if (needed > kAutoTableCap)
        throw CapacityError(
            "auto-computed table would need " + std::to_string(needed) +
            " entries; build one with `compute` and pass --table");
    ComplexityTable table = compute_table(needed, ComputeMode::PrunedExact);
    if (!opts.quiet)
        err << "computed table to " << needed << "\n";
    return table;
}

uint64_t checked_mul_pow3(uint64_t base, unsigned exponent) {
    uint64_t result = base;
    for (unsigned i = 0; i < exponent; ++i) {
        if (result > UINT64_MAX / 3)
            throw RangeError("3^j scan exceeds 64 bits");
        result *= 3;
    }
    return result;
}

uint64_t checked_square(uint64_t v) {
    if (v > UINT32_MAX) throw RangeError("factor limit too large to square");
    return v * v;
}

std::string family_name(FamilyMatch::Family family) {
    switch (family) {
        case FamilyMatch::Family::MainA: return "main-a";
        case FamilyMatch::Family::MainB: return "main-b";
        case FamilyMatch::Family::MainC: return "main-c";
        case FamilyMatch::Family::SporadicA: return "sporadic-a";
        case FamilyMatch::Family::SporadicB: return "sporadic-b";
        case FamilyMatch::Family::SporadicC: return "sporadic-c";
    }
    return "?";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact integer complexity toolkit"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    app.add_flag("--quiet", opts.quiet, "suppress progress notes");
    app.add_option("--table", opts.table_path, "use a saved table file");

    // compute
    auto* compute = app.add_subcommand("compute", "build and save a table");
    uint64_t compute_max = 0;
    std::string compute_mode = "pruned";
    std::string compute_out;
    compute->add_option("--max", compute_max, "largest n")->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--mode", compute_mode, "naive|pruned")
        ->check(CLI::IsMember({"naive", "pruned"}))
        ->capture_default_str();
    compute->add_option("--out", compute_out, "output file")->required();
    compute->callback([&] {
        const ComplexityTable table =
            compute_table(compute_max, parse_mode(compute_mode));
        save_table(table, std::filesystem::path(compute_out));
        if (!opts.quiet)
            err << "wrote table 1.." << compute_max << " to " << compute_out
                << "\n";
    });

    // query
    auto* query = app.add_subcommand("query", "complexity and a witness");
    uint64_t query_n = 0;
    query->add_option("n", query_n, "number to query")->required()
        ->check(CLI::PositiveNumber);
    query->callback([&] {
        const ComplexityTable table = obtain_table(opts, query_n, err);
        const Expression witness = reconstruct_optimal(table, query_n);
        Dataset data;
        data.columns = {"n", "complexity", "canonical", "ones"};
        data.rows.push_back({query_n, uint64_t(table.at(query_n)),
                             render(witness, RenderStyle::Canonical),
                             render(witness, RenderStyle::Ones)});
        if (opts.format == "plain") {
            out << unsigned(table.at(query_n)) << "\n"
                << render(witness, RenderStyle::Canonical) << "\n"
                << render(witness, RenderStyle::Ones) << "\n";
        } else {
            emit(data, opts, out);
        }
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "bound sandwich for n");
    uint64_t bounds_n = 0;
    bounds_cmd->add_option("n", bounds_n, "number to report")->required()
        ->check(CLI::PositiveNumber);
    bounds_cmd->callback([&] {
        const ComplexityTable table = obtain_table(opts, bounds_n, err);
        const SpfSieve sieve(bounds_n);
        const BoundsReport report = bounds_report(table, sieve, bounds_n);
        Dataset data;
        data.columns = {"n", "lower", "complexity", "additive", "binary",
                        "verified"};
        data.rows.push_back({report.n, uint64_t(report.lower),
                             uint64_t(*report.complexity),
                             uint64_t(report.additive), uint64_t(report.binary),
                             report.verified});
        emit(data, opts, out);
    });

    // bad-factors
    auto* bad = app.add_subcommand("bad-factors", "pairs cheaper multiplied");
    uint64_t bad_max = 0;
    bad->add_option("--max", bad_max, "largest factor")->required()
        ->check(CLI::PositiveNumber);
    bad->callback([&] {
        const ComplexityTable table = obtain_table(opts, checked_square(bad_max), err);
        Dataset data;
        data.columns = {"m", "n", "deficit"};
        for (const auto& pair : bad_factorizations(table, bad_max))
            data.rows.push_back({pair.m, pair.n, uint64_t(pair.deficit)});
        emit(data, opts, out);
    });

    // figure
    auto* figure = app.add_subcommand("figure", "datasets behind the plots");
    unsigned figure_which = 0;
    uint64_t figure_limit = 0;
    figure->add_option("--which", figure_which, "1|2")->required()
        ->check(CLI::Range(1u, 2u));
    figure->add_option("--limit", figure_limit, "largest n")->required()
        ->check(CLI::PositiveNumber);
    figure->callback([&] {
        Dataset data;
        if (figure_which == 1) {
            const ComplexityTable table =
                obtain_table(opts, checked_square(figure_limit), err);
            data.columns = {"m", "n", "deficit"};
            for (const auto& pair : bad_factorizations(table, figure_limit))
                data.rows.push_back({pair.m, pair.n, uint64_t(pair.deficit)});
        } else {
            const ComplexityTable table = obtain_table(opts, figure_limit, err);
            data.columns = {"n", "complexity", "lower", "midline", "upper"};
            for (const auto& row : figure2_data(table, figure_limit))
                data.rows.push_back({row.n, uint64_t(row.complexity), row.lower,
                                     row.midline, row.upper});
        }
        emit(data, opts, out);
    });

    // hardest
    auto* hardest = app.add_subcommand("hardest", "least n in a complexity class");
    unsigned hardest_class = 0;
    hardest->add_option("--class", hardest_class, "complexity class")
        ->required()->check(CLI::PositiveNumber);
    hardest->callback([&] {
        const ComplexityTable table =
            obtain_table(opts, max_value(hardest_class), err);
        const auto seq = great_complexity_sequence(table, hardest_class);
        if (seq.entries.size() < hardest_class)
            throw RangeError("class " + std::to_string(hardest_class) +
                             " is empty within the table");
        Dataset data;
        data.columns = {"k", "n"};
        const auto& entry = seq.entries[hardest_class - 1];
        data.rows.push_back({uint64_t(entry.k), entry.n});
        emit(data, opts, out);
    });

    // sequence great
    auto* sequence = app.add_subcommand("sequence", "derived sequences");
    auto* great = sequence->add_subcommand("great", "numbers of great complexity");
    unsigned great_count = 0;
    great->add_option("--count", great_count, "classes 1..K")->required()
        ->check(CLI::PositiveNumber);
    great->callback([&] {
        const ComplexityTable table =
            obtain_table(opts, max_value(great_count), err);
        const auto seq = great_complexity_sequence(table, great_count);
        Dataset data;
        data.columns = {"k", "n"};
        for (const auto& entry : seq.entries)
            data.rows.push_back({uint64_t(entry.k), entry.n});
        emit(data, opts, out);
        if (seq.truncated_at && !opts.quiet)
            err << "truncated: class " << *seq.truncated_at
                << " is empty within the table\n";
    });
    sequence->require_subcommand(1);

    // selfridge / mersenne
    auto* selfridge = app.add_subcommand("selfridge", "powers of two check");
    auto* mersenne = app.add_subcommand("mersenne", "2^e - 1 check");
    uint64_t window_max = 200000;
    selfridge->add_option("--max", window_max, "table range")
        ->capture_default_str()->check(CLI::PositiveNumber);
    uint64_t mersenne_max = 200000;
    mersenne->add_option("--max", mersenne_max, "table range")
        ->capture_default_str()->check(CLI::PositiveNumber);
    selfridge->callback([&] {
        const ComplexityTable table = obtain_table(opts, window_max, err);
        Dataset data;
        data.columns = {"e", "complexity", "target"};
        for (const auto& row : selfridge_check(table))
            data.rows.push_back({uint64_t(row.exponent), uint64_t(row.complexity),
                                 uint64_t(row.expected)});
        emit(data, opts, out);
    });
    mersenne->callback([&] {
        const ComplexityTable table = obtain_table(opts, mersenne_max, err);
        Dataset data;
        data.columns = {"e", "complexity", "target"};
        for (const auto& row : mersenne_check(table))
            data.rows.push_back({uint64_t(row.exponent), uint64_t(row.complexity),
                                 uint64_t(row.expected)});
        emit(data, opts, out);
    });

    // a-set
    auto* aset = app.add_subcommand("a-set", "stable multiplicative set members");
    uint64_t aset_max = 0;
    unsigned aset_horizon = 0;
    aset->add_option("--max", aset_max, "largest base")->required()
        ->check(CLI::PositiveNumber);
    aset->add_option("--horizon", aset_horizon, "verified powers of three")
        ->required()->check(CLI::PositiveNumber);
    aset->callback([&] {
        const uint64_t needed = checked_mul_pow3(aset_max, aset_horizon);
        const ComplexityTable table = obtain_table(opts, needed, err);
        Dataset data;
        data.columns = {"n"};
        for (uint64_t n : a_set_members(table, aset_max, aset_horizon))
            data.rows.push_back({n});
        emit(data, opts, out);
    });

    // classes
    auto* classes = app.add_subcommand("classes", "members of one class");
    unsigned classes_k = 0;
    bool classes_base3 = false;
    classes->add_option("--k", classes_k, "complexity class")->required()
        ->check(CLI::PositiveNumber);
    classes->add_flag("--base3", classes_base3, "emit base-3 numerals");
    classes->callback([&] {
        const ComplexityTable table =
            obtain_table(opts, max_value(classes_k), err);
        Dataset data;
        if (classes_base3) {
            data.columns = {"base3"};
            for (const auto& digits : class_members_base3(table, classes_k))
                data.rows.push_back({digits});
        } else {
            data.columns = {"n"};
            for (uint64_t n : class_members(table, classes_k))
                data.rows.push_back({n});
        }
        emit(data, opts, out);
    });

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "conjectured rational sequences");
    std::string seq_kind = "a";
    uint64_t seq_count = 0;
    uint64_t seq_table_max = 200000;
    seq_cmd->add_option("--kind", seq_kind, "a|b|c")->required()
        ->check(CLI::IsMember({"a", "b", "c"}));
    seq_cmd->add_option("--count", seq_count, "terms to emit")->required()
        ->check(CLI::PositiveNumber);
    seq_cmd->add_option("--max", seq_table_max, "table range")
        ->capture_default_str()->check(CLI::PositiveNumber);
    seq_cmd->callback([&] {
        const ComplexityTable table = obtain_table(opts, seq_table_max, err);
        const SequenceKind kind = seq_kind == "a"   ? SequenceKind::A
                                  : seq_kind == "b" ? SequenceKind::B
                                                    : SequenceKind::C;
        Dataset data;
        data.columns = {"position", "numerator", "exp3", "witness_n",
                        "witness_complexity", "stable_flag"};
        uint64_t position = 0;
        for (const auto& term : sequence_prefix(table, kind, seq_count)) {
            data.rows.push_back({position, term.term.numerator,
                                 uint64_t(term.term.exp3), term.witness,
                                 uint64_t(term.witness_complexity), term.stable});
            ++position;
        }
        emit(data, opts, out);
    });

    // family
    auto* family = app.add_subcommand("family", "family matches for m/3^e");
    uint64_t family_num = 0;
    unsigned family_exp = 0;
    uint64_t family_table_max = 200000;
    family->add_option("--numerator", family_num, "m")->required()
        ->check(CLI::PositiveNumber);
    family->add_option("--exp3", family_exp, "e");
    family->add_option("--max", family_table_max, "table range")
        ->capture_default_str()->check(CLI::PositiveNumber);
    family->callback([&] {
        const ComplexityTable table = obtain_table(opts, family_table_max, err);
        Dataset data;
        data.columns = {"family", "p", "q", "j", "a"};
        for (const auto& match :
             family_match(Rational3{family_num, family_exp}, table)) {
            data.rows.push_back({family_name(match.family), match.p, match.q,
                                 uint64_t(match.j), uint64_t(match.a)});
        }
        emit(data, opts, out);
    });

    // boolean
    auto* boolean = app.add_subcommand("boolean", "boolean function complexity");
    auto* census = boolean->add_subcommand("census", "exhaustive complexities");
    unsigned census_vars = 0;
    census->add_option("--vars", census_vars, "variables (1..3)")->required()
        ->check(CLI::Range(1u, 3u));
    census->callback([&] {
        const BooleanCensus table(census_vars);
        Dataset data;
        data.columns = {"function", "complexity"};
        for (unsigned mask = 0; mask < table.function_count(); ++mask)
            data.rows.push_back(
                {uint64_t(mask), uint64_t(table.complexity(mask))});
        emit(data, opts, out);
    });
    auto* counts = boolean->add_subcommand("counts", "census vs bound");
    unsigned counts_vars = 0;
    unsigned counts_kmax = 10;
    counts->add_option("--vars", counts_vars, "variables (1..3)")->required()
        ->check(CLI::Range(1u, 3u));
    counts->add_option("--kmax", counts_kmax, "largest k")
        ->capture_default_str();
    counts->callback([&] {
        Dataset data;
        data.columns = {"k", "a_k", "A_k"};
        for (const auto& row : count_vs_bound(counts_vars, counts_kmax))
            data.rows.push_back(
                {uint64_t(row.k), row.exact, row.bound.to_decimal()});
        emit(data, opts, out);
    });
    boolean->require_subcommand(1);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("ncx");
        for (const auto& arg : args) argv.push_back(arg.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 1;
    }

    out.flush();
    if (!out) throw IoError("output stream failure");
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ncx
