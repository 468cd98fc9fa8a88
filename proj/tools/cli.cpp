#include "cli.hpp"

#include "gwcount/errors.hpp"
#include "gwcount/invariants.hpp"
#include "gwcount/recursion_cache.hpp"
#include "gwcount/series.hpp"
#include "gwcount/series_io.hpp"
#include "gwcount/shape_format.hpp"
#include "gwcount/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

namespace gwcount::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return Format::Plain;
}

// Right-aligns numeric-looking columns, left-aligns the rest.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                 const std::vector<bool>& right_align) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                line += "  ";
            }
            const std::size_t pad = width[c] - row[c].size();
            const bool right = c < right_align.size() && right_align[c];
            if (right) {
                line.append(pad, ' ');
            }
            line += row[c];
            if (!right && c + 1 < row.size()) {
                line.append(pad, ' ');
            }
        }
        out << line << '\n';
    }
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                out << ',';
            }
            out << csv_field(row[c]);
        }
        out << '\n';
    }
}

std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += std::to_string(values[i]);
    }
    return out;
}

// --- nd ---------------------------------------------------------------------

struct NdArgs {
    int max = 0;
    int limit = kDefaultMaxDegree;
    std::string format = "plain";
    std::string cache;
};

int cmd_nd(const NdArgs& args, std::ostream& out, std::ostream& err) {
    if (args.max < 1 || args.max > args.limit) {
        err << "nd: --max must be in 1.." << args.limit << ", got " << args.max << '\n';
        return kUsage;
    }

    RecursionTable table;
    int loaded = 0;
    if (!args.cache.empty() && std::filesystem::exists(args.cache)) {
        try {
            table = load_recursion_cache(args.cache);
        } catch (const CacheError& e) {
            err << "nd: corrupt cache " << args.cache << ": " << e.what() << '\n';
            return kCacheCorrupt;
        }
        loaded = table.max_degree();
        err << "nd: loaded " << loaded << " cached entries from " << args.cache << '\n';
    }
    table.fill_to(args.max);
    if (!args.cache.empty() && table.max_degree() > loaded) {
        save_recursion_cache(args.cache, table);
    }

    switch (parse_format(args.format)) {
        case Format::Plain: {
            std::vector<std::vector<std::string>> rows{{"d", "N_d"}};
            for (int d = 1; d <= args.max; ++d) {
                rows.push_back({std::to_string(d), table.at(d).get_str()});
            }
            print_table(out, rows, {true, true});
            break;
        }
        case Format::Csv: {
            std::vector<std::vector<std::string>> rows{{"d", "N_d"}};
            for (int d = 1; d <= args.max; ++d) {
                rows.push_back({std::to_string(d), table.at(d).get_str()});
            }
            print_csv(out, rows);
            break;
        }
        case Format::Json: {
            Json counts = Json::array();
            for (int d = 1; d <= args.max; ++d) {
                counts.push_back(Json{{"d", d}, {"N", table.at(d).get_str()}});
            }
            out << Json{{"counts", std::move(counts)}}.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// --- ed ---------------------------------------------------------------------

struct EdArgs {
    int d = 0;
    std::string j = "all";
    std::string format = "plain";
};

int cmd_ed(const EdArgs& args, std::ostream& out, std::ostream& err) {
    if (args.d < 3) {
        err << "ed: E_{d,j} is defined only for d >= 3 (got d = " << args.d << ")\n";
        return kUsage;
    }
    std::vector<JClass> classes;
    if (args.j == "all") {
        classes.assign(std::begin(kAllJClasses), std::end(kAllJClasses));
    } else if (args.j == "generic") {
        classes = {JClass::Generic};
    } else if (args.j == "0") {
        classes = {JClass::JZero};
    } else {
        classes = {JClass::J1728};
    }

    RecursionTable table;
    const std::string zt = zt_invariant(args.d, table).get_str();
    std::vector<std::pair<std::string, std::string>> values;
    for (JClass j : classes) {
        values.emplace_back(std::string(to_string(j)), elliptic_count(args.d, j, table).get_str());
    }

    switch (parse_format(args.format)) {
        case Format::Plain: {
            out << "d = " << args.d << '\n';
            std::vector<std::vector<std::string>> rows{{"j", "E_{d,j}"}};
            for (const auto& [j, e] : values) {
                rows.push_back({j, e});
            }
            rows.push_back({"Z.T", zt});
            print_table(out, rows, {false, true});
            break;
        }
        case Format::Csv: {
            std::vector<std::vector<std::string>> rows{{"d", "j", "E", "ZT"}};
            for (const auto& [j, e] : values) {
                rows.push_back({std::to_string(args.d), j, e, zt});
            }
            print_csv(out, rows);
            break;
        }
        case Format::Json: {
            Json doc;
            doc["d"] = args.d;
            if (values.size() == 1) {
                doc["j"] = values.front().first;
                doc["E"] = values.front().second;
            } else {
                Json e = Json::object();
                for (const auto& [j, v] : values) {
                    e[j] = v;
                }
                doc["E"] = std::move(e);
            }
            doc["ZT"] = zt;
            out << doc.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// --- strata -----------------------------------------------------------------

struct StrataArgs {
    int d = 0;
    int max_extra = 1;
    bool survivors_only = false;
    bool full = false;
    bool trees_only = false;
    std::string ceiling = "1000000";
    std::string format = "plain";
};

struct StrataRow {
    const ShapeClass* shape = nullptr;
    StratumDimension dim = StratumDimension::empty();
    StratumDimension bound = StratumDimension::empty();
    StratumCategory category = StratumCategory::LowDimension;
    bool survivor = false;
};

std::string kind_name(GraphKind kind) { return kind == GraphKind::Tree ? "tree" : "circuit"; }

bool in_single_tail_family(const Skeleton& s, int d) {
    return s.kind == GraphKind::Tree && s.vertex_count() == 2 && s.weights[0] == 0 &&
           s.weights[1] == d;
}

int cmd_strata(const StrataArgs& args, std::ostream& out, std::ostream& err) {
    if (args.d < 3) {
        err << "strata: strata are defined for d >= 3 (got d = " << args.d << ")\n";
        return kUsage;
    }
    mpz_class ceiling;
    if (ceiling.set_str(args.ceiling, 10) != 0 || ceiling < 0) {
        err << "strata: --ceiling must be a non-negative integer\n";
        return kUsage;
    }

    EnumerationOptions options;
    options.degree = args.d;
    options.max_extra_vertices = args.max_extra;
    options.collapsed = !args.full;
    options.include_trees = true;
    options.include_circuits = !args.trees_only;
    options.ceiling = ceiling;

    std::vector<ShapeClass> shapes;
    try {
        shapes = enumerate_shapes(options);
    } catch (const ResourceGuardError& e) {
        err << "strata: " << e.what();
        if (e.projected().empty()) {
            err << " (no class-count projection beyond the vertex limit)";
        }
        err << '\n';
        return kResourceGuard;
    } catch (const DomainError& e) {
        err << "strata: " << e.what() << '\n';
        return kUsage;
    }

    const int threshold = 6 * args.d - 2;
    std::vector<StrataRow> rows;
    mpz_class classes = 0;
    mpz_class single_tail = 0;
    std::size_t survivors = 0;
    for (const ShapeClass& shape : shapes) {
        StrataRow row;
        row.shape = &shape;
        row.dim = dimension(shape.skeleton, args.d);
        row.bound = deformation_bound(shape.skeleton, args.d);
        row.category = categorize(shape.skeleton, args.d);
        row.survivor = !row.bound.is_empty() && row.bound.value() >= threshold;
        classes += shape.multiplicity;
        if (in_single_tail_family(shape.skeleton, args.d)) {
            single_tail += shape.multiplicity;
        }
        survivors += row.survivor ? 1 : 0;
        if (!args.survivors_only || row.survivor) {
            rows.push_back(row);
        }
    }

    const std::string mode = args.full ? "full" : "collapsed";
    auto summary_text = [&] {
        return "summary: mode=" + mode + " entries=" + std::to_string(shapes.size()) +
               " classes=" + classes.get_str() + " survivors=" + std::to_string(survivors) +
               " phi_family=" + single_tail.get_str() + " (expected 2^(3d-1))";
    };
    auto dim_text = [](const StratumDimension& dim) { return dim.to_string(); };

    switch (parse_format(args.format)) {
        case Format::Plain:
        case Format::Csv: {
            std::vector<std::vector<std::string>> table{{"kind", "k", "e", "weights", "legs",
                                                         "multiplicity", "dim", "bound",
                                                         "category", "survivor", "canonical"}};
            for (const StrataRow& row : rows) {
                const Skeleton& s = row.shape->skeleton;
                std::string tag = row.survivor ? "yes" : "no";
                if (row.survivor && row.category == StratumCategory::PositivePartition) {
                    tag = "yes (geometrically avoided)";
                }
                table.push_back({kind_name(s.kind), std::to_string(s.extra_vertices()),
                                 std::to_string(core_weight(s)), join(s.weights, ' '),
                                 join(s.leg_counts, ' '), row.shape->multiplicity.get_str(),
                                 dim_text(row.dim), dim_text(row.bound),
                                 std::string(to_string(row.category)), tag, row.shape->canonical});
            }
            if (parse_format(args.format) == Format::Csv) {
                print_csv(out, table);
                err << summary_text() << '\n';
            } else {
                print_table(out, table, {false, true, true, false, false, true, true, true});
                out << summary_text() << '\n';
            }
            break;
        }
        case Format::Json: {
            Json list = Json::array();
            for (const StrataRow& row : rows) {
                const Skeleton& s = row.shape->skeleton;
                Json item;
                item["kind"] = kind_name(s.kind);
                item["canonical"] = row.shape->canonical;
                item["k"] = s.extra_vertices();
                item["e"] = core_weight(s);
                item["weights"] = s.weights;
                item["legs"] = s.leg_counts;
                item["multiplicity"] = row.shape->multiplicity.get_str();
                item["dimension"] = row.dim.is_empty() ? Json(nullptr) : Json(row.dim.value());
                item["bound"] = row.bound.is_empty() ? Json(nullptr) : Json(row.bound.value());
                item["category"] = std::string(to_string(row.category));
                item["survivor"] = row.survivor;
                item["geometrically_avoided"] =
                    row.category == StratumCategory::PositivePartition;
                list.push_back(std::move(item));
            }
            Json doc;
            doc["d"] = args.d;
            doc["max_extra"] = args.max_extra;
            doc["mode"] = mode;
            doc["shapes"] = std::move(list);
            doc["summary"] = Json{{"entries", shapes.size()},
                                  {"classes", classes.get_str()},
                                  {"survivors", survivors},
                                  {"phi_family", single_tail.get_str()}};
            out << doc.dump() << '\n';
            break;
        }
    }
    return kOk;
}

// --- series -----------------------------------------------------------------

struct SeriesArgs {
    std::string file;
    bool at_infinity = false;
    std::string at;
    std::string format = "plain";
};

int cmd_series(const SeriesArgs& args, std::ostream& out, std::ostream& err) {
    if (args.at_infinity && !args.at.empty()) {
        err << "series: --at-infinity and --at are mutually exclusive\n";
        return kUsage;
    }
    SeriesPoint point = SeriesPoint::infinity();
    if (!args.at.empty()) {
        try {
            point = SeriesPoint::finite(parse_rational(args.at));
        } catch (const FormatError& e) {
            err << "series: --at: " << e.what() << '\n';
            return kUsage;
        }
    }

    std::ifstream in(args.file);
    if (!in) {
        err << "series: cannot open " << args.file << '\n';
        return kUsage;
    }
    std::optional<PolySeries> series;
    try {
        series.emplace(read_series_json(in));
    } catch (const FormatError& e) {
        err << "series: " << args.file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const RankDeficientError& e) {
        err << "series: " << args.file << ": " << e.what() << '\n';
        return kMathPrecondition;
    } catch (const DomainError& e) {
        err << "series: " << args.file << ": " << e.what() << '\n';
        return kUsage;
    }

    const VanishingSequence seq = vanishing_sequence(*series, point);
    const auto relation = root_sum_relation(*series);
    const bool criterion = check_root_sum_criterion(*series);
    const std::string point_text = point.at_infinity ? "infinity" : format_rational(point.value);
    const std::string k_text = relation ? format_rational(relation->k) : "none";
    const bool degenerate = relation && relation->degenerate;

    switch (parse_format(args.format)) {
        case Format::Plain:
            out << "point: " << point_text << '\n';
            out << "vanishing sequence: (" << seq[0] << ", " << seq[1] << ", " << seq[2] << ")\n";
            out << "K: " << k_text << (degenerate ? " (degenerate: top coefficients vanish)" : "")
                << '\n';
            out << "criterion: " << (criterion ? "true" : "false") << '\n';
            break;
        case Format::Csv:
            print_csv(out, {{"point", "a0", "a1", "a2", "K", "degenerate", "criterion"},
                            {point_text, std::to_string(seq[0]), std::to_string(seq[1]),
                             std::to_string(seq[2]), k_text, degenerate ? "true" : "false",
                             criterion ? "true" : "false"}});
            break;
        case Format::Json: {
            Json doc;
            doc["point"] = point_text;
            doc["sequence"] = {seq[0], seq[1], seq[2]};
            doc["K"] = relation ? Json(k_text) : Json(nullptr);
            doc["degenerate"] = degenerate;
            doc["criterion"] = criterion;
            out << doc.dump() << '\n';
            break;
        }
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of rational and fixed-j elliptic plane curves, strata, and linear series"};
    app.name("gwcount");
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"plain", "json", "csv"});

    NdArgs nd;
    auto* nd_cmd = app.add_subcommand("nd", "Rational curve counts N_1..N_max");
    nd_cmd->add_option("--max", nd.max, "Highest degree")->required();
    nd_cmd->add_option("--limit", nd.limit, "Upper guard on --max")->capture_default_str();
    nd_cmd->add_option("--format", nd.format)->check(formats)->capture_default_str();
    nd_cmd->add_option("--cache", nd.cache, "Recursion cache file (read, extended, rewritten)");

    EdArgs ed;
    auto* ed_cmd = app.add_subcommand("ed", "Elliptic counts E_{d,j} and Z.T");
    ed_cmd->add_option("--d", ed.d, "Degree (>= 3)")->required();
    ed_cmd->add_option("--j", ed.j, "j-class")
        ->check(CLI::IsMember({"generic", "0", "1728", "all"}))
        ->capture_default_str();
    ed_cmd->add_option("--format", ed.format)->check(formats)->capture_default_str();

    StrataArgs st;
    auto* st_cmd = app.add_subcommand("strata", "Stable weighted trees and 1-circuit graphs");
    st_cmd->add_option("--d", st.d, "Degree (>= 3)")->required();
    st_cmd->add_option("--max-extra", st.max_extra, "Maximum non-distinguished vertices")
        ->capture_default_str();
    st_cmd->add_flag("--survivors-only", st.survivors_only,
                     "List only strata whose deformation bound reaches 6d-2");
    st_cmd->add_flag("--full", st.full, "Materialize every marking assignment");
    st_cmd->add_flag("--trees-only", st.trees_only, "Skip circuit graphs");
    st_cmd->add_option("--ceiling", st.ceiling, "Maximum number of emitted entries")
        ->capture_default_str();
    st_cmd->add_option("--format", st.format)->check(formats)->capture_default_str();

    SeriesArgs se;
    auto* se_cmd = app.add_subcommand("series", "Vanishing sequence and root-sum relation of a net");
    se_cmd->add_option("file", se.file, "Series JSON document")->required();
    se_cmd->add_flag("--at-infinity", se.at_infinity, "Evaluate at xi = infinity (default)");
    se_cmd->add_option("--at", se.at, "Evaluate at a finite rational point p or p/q");
    se_cmd->add_option("--format", se.format)->check(formats)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (nd_cmd->parsed()) return cmd_nd(nd, out, err);
        if (ed_cmd->parsed()) return cmd_ed(ed, out, err);
        if (st_cmd->parsed()) return cmd_strata(st, out, err);
        if (se_cmd->parsed()) return cmd_series(se, out, err);
    } catch (const std::exception& e) {
        err << "gwcount: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace gwcount::cli
