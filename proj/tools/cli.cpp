#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerian2/bfile.hpp"
#include "eulerian2/combinatorics.hpp"
#include "eulerian2/generating_functions.hpp"
#include "eulerian2/identities.hpp"
#include "eulerian2/report_io.hpp"

namespace eulerian2::cli {

namespace {

bool any_negative(const RunConfig& c)
{
    auto neg = [](const std::optional<Index>& v) { return v && *v < 0; };
    return neg(c.max_n) || neg(c.max_m) || neg(c.box_n) || neg(c.box_t);
}

SuiteBounds bounds_from(const RunConfig& c)
{
    SuiteBounds b;
    if (c.max_n) {
        b.explicit_n = b.stirling_n = b.tree_n = b.quad_n = *c.max_n;
    }
    if (c.max_m) {
        b.stirling_m = b.alternating_m = *c.max_m;
    }
    if (c.box_n) {
        b.gf_box_n = b.r_box = b.inverse_box = b.z_box = b.lagrange_box = *c.box_n;
    }
    if (c.box_t) {
        b.gf_box_t = *c.box_t;
    }
    return b;
}

}  // namespace

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (!config.max_n || *config.max_n < 1) {
        err << "table: --max-n must be >= 1\n";
        return kUsageError;
    }
    std::vector<std::vector<ExactInt>> rows;
    for (Index n = 1; n <= *config.max_n; ++n) {
        rows.push_back(triangle_row(n));
    }
    switch (config.format) {
    case Format::Json: {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) {
                r.push_back(v.get_str());
            }
            j.push_back(std::move(r));
        }
        out << j.dump() << '\n';
        break;
    }
    case Format::Csv:
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << row[i].get_str();
            }
            out << '\n';
        }
        break;
    case Format::Plain: {
        std::size_t width = 1;
        for (const auto& row : rows) {
            for (const auto& v : row) {
                width = std::max(width, v.get_str().size());
            }
        }
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? " " : "") << std::setw(static_cast<int>(width)) << row[i].get_str();
            }
            out << '\n';
        }
        break;
    }
    }
    return kVerified;
}

int cmd_check(const std::string& identity, const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::vector<IdentityId> ids;
    if (identity != "all") {
        const auto id = parse_identity(identity);
        if (!id) {
            err << "check: unknown identity '" << identity << "'\n";
            return kUsageError;
        }
        ids.push_back(*id);
    }
    if (any_negative(config)) {
        err << "check: bounds must be >= 0\n";
        return kUsageError;
    }
    const auto reports = run_all(bounds_from(config), eulerian2_rec, ids);
    int status = kVerified;
    if (config.format == Format::Csv) {
        out << "identity,status,cases,counterexample,lhs,rhs\n";
    }
    for (const auto& report : reports) {
        if (!report.passed() && !is_informational(report.id)) {
            status = kMismatch;
        }
        switch (config.format) {
        case Format::Json:
            out << to_json(report).dump() << '\n';
            break;
        case Format::Csv: {
            const char* state = is_informational(report.id) ? "info" : (report.passed() ? "pass" : "fail");
            out << identity_name(report.id) << ',' << state << ',' << report.cases << ',';
            if (report.counterexample) {
                const auto& cx = *report.counterexample;
                out << format_params(cx.params) << ',' << to_string(cx.lhs) << ',' << to_string(cx.rhs);
            } else {
                out << ",,";
            }
            out << '\n';
            break;
        }
        case Format::Plain:
            out << to_plain(report) << '\n';
            break;
        }
    }
    return status;
}

int cmd_gf(const RunConfig& config, bool compare, std::ostream& out, std::ostream& err)
{
    const Index box_n = config.box_n.value_or(12);
    const Index box_t = config.box_t.value_or(12);
    if (box_n < 0 || box_t < 0) {
        err << "gf: box dimensions must be >= 0\n";
        return kUsageError;
    }
    const auto gf = gf_rhs(box_n, box_t);
    int status = kVerified;

    nlohmann::json cells = nlohmann::json::array();
    for (Index n = 0; n <= box_n; ++n) {
        std::vector<std::string> line;
        for (Index m = 0; m <= box_t; ++m) {
            const ExactRat value = egf_coeff(gf, n, m);
            const ExactRat expected(eulerian2_rec(n, m));
            const bool match = value == expected;
            if (compare && !match) {
                status = kMismatch;
            }
            switch (config.format) {
            case Format::Json: {
                nlohmann::json cell = {{"n", n}, {"m", m}, {"egf", to_string(value)}};
                if (compare) {
                    cell["recurrence"] = to_string(expected);
                    cell["match"] = match;
                }
                cells.push_back(std::move(cell));
                break;
            }
            case Format::Csv:
                out << n << ',' << m << ',' << to_string(value);
                if (compare) {
                    out << ',' << to_string(expected) << ',' << (match ? "yes" : "no");
                }
                out << '\n';
                break;
            case Format::Plain:
                if (compare) {
                    out << n << ' ' << m << ' ' << to_string(value) << ' ' << to_string(expected) << ' '
                        << (match ? "ok" : "MISMATCH") << '\n';
                } else {
                    line.push_back(to_string(value));
                }
                break;
            }
        }
        if (config.format == Format::Plain && !compare) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                out << (i ? " " : "") << line[i];
            }
            out << '\n';
        }
    }
    if (config.format == Format::Json) {
        out << cells.dump() << '\n';
    }
    return status;
}

int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (!config.reference_path) {
        err << "oeis: --file is required\n";
        return kUsageError;
    }
    if (config.max_n && *config.max_n < 0) {
        err << "oeis: --max-rows must be >= 0\n";
        return kUsageError;
    }
    ReferenceData ref;
    try {
        ref = read_bfile(*config.reference_path);
    } catch (const BFileError& e) {
        err << "oeis: " << e.what() << '\n';
        return kUsageError;
    }
    const auto cmp = compare_with_triangle(ref, config.max_n);
    if (cmp.compared == 0) {
        err << "warning: 0 values compared\n";
    }
    if (cmp.divergence) {
        const auto& d = *cmp.divergence;
        out << "divergence at index " << d.position << " (row " << d.row << ", column " << d.column
            << "): reference " << d.expected.get_str() << ", computed " << d.actual.get_str() << '\n';
        return kMismatch;
    }
    out << ref.sequence_id << ": " << cmp.compared << " values compared, all match\n";
    return kVerified;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Second-order Eulerian numbers: triangle, generating function and identity checks"};
    app.require_subcommand(1);

    RunConfig config;
    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    auto* table = app.add_subcommand("table", "Print rows 1..K of the triangle");
    table->add_option("--max-n", config.max_n, "Number of rows")->required();
    add_format(table);

    std::string identity;
    auto* check = app.add_subcommand("check", "Verify identities");
    check->add_option("identity", identity, "Identity name or 'all'")->required();
    check->add_option("--max-n", config.max_n, "Bound on n for triangle sweeps");
    check->add_option("--max-m", config.max_m, "Bound on m for triangle sweeps");
    check->add_option("--box-n", config.box_n, "x-order of series boxes");
    check->add_option("--box-t", config.box_t, "t-order of the generating function box");
    add_format(check);

    bool compare = false;
    auto* gf = app.add_subcommand("gf", "Expand the Lambert-W generating function");
    gf->add_option("--box-n", config.box_n, "x-order");
    gf->add_option("--box-t", config.box_t, "t-order");
    gf->add_flag("--compare", compare, "Compare against the recurrence");
    add_format(gf);

    auto* oeis = app.add_subcommand("oeis", "Cross-check against an OEIS b-file");
    oeis->add_option("--file", config.reference_path, "b-file path")->required();
    oeis->add_option("--max-rows", config.max_n, "Compare at most K rows");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kVerified;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kVerified;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*table) {
            return cmd_table(config, out, err);
        }
        if (*check) {
            return cmd_check(identity, config, out, err);
        }
        if (*gf) {
            return cmd_gf(config, compare, out, err);
        }
        return cmd_oeis(config, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace eulerian2::cli
