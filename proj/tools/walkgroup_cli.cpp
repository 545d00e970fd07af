// Command-line front end: classify weight matrices, list the multiples of
// the base point, and scan weight spaces for prescribed group orders.
//
// Exit codes: 0 = successful classification (degenerate included),
//             1 = usage, parse or validation errors,
//             2 = I/O errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "walkgroup/walkgroup.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_io = 2;

struct InputOptions {
    std::string path;   // file path or "-" for stdin
    std::string grid;   // inline "a,b,c;d,e,f;g,h,i"
    bool normalize = false;
};

walkgroup::RawGrid parse_inline_grid(const std::string& text) {
    walkgroup::RawGrid grid;
    std::istringstream rows(text);
    std::string row;
    std::size_t r = 0;
    while (std::getline(rows, row, ';')) {
        if (r >= 3) throw walkgroup::walk_error(walkgroup::errc::parse_error,
                                                "inline grid needs exactly 3 rows");
        std::istringstream cells(row);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(cells, cell, ',')) {
            if (c >= 3) throw walkgroup::walk_error(walkgroup::errc::parse_error,
                                                    "inline grid rows need exactly 3 entries");
            grid[r][c++] = cell;
        }
        if (c != 3) throw walkgroup::walk_error(walkgroup::errc::parse_error,
                                                "inline grid rows need exactly 3 entries");
        ++r;
    }
    if (r != 3) throw walkgroup::walk_error(walkgroup::errc::parse_error,
                                            "inline grid needs exactly 3 rows");
    return grid;
}

walkgroup::WeightMatrix load_weights(const InputOptions& in) {
    walkgroup::RawGrid raw;
    if (!in.grid.empty()) {
        raw = parse_inline_grid(in.grid);
    } else if (in.path == "-") {
        raw = walkgroup::read_grid_json(std::cin);
    } else {
        std::ifstream file(in.path);
        if (!file) throw std::ios_base::failure("cannot open '" + in.path + "'");
        raw = walkgroup::read_grid_json(file);
    }
    return walkgroup::parse_weights(raw, in.normalize);
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "JSON weight file ('-' for stdin)");
    cmd->add_option("--grid", in.grid,
                    "inline grid 'a,b,c;d,e,f;g,h,i' (rows i=1,0,-1; cols j=1,0,-1)");
    cmd->add_flag("--normalize", in.normalize, "rescale weights to sum 1");
}

int run_classify(const InputOptions& in, const walkgroup::ReportOptions& ropts,
                 const std::string& format) {
    const walkgroup::WeightMatrix w = load_weights(in);
    const walkgroup::Report report = walkgroup::build_report(w, ropts);
    if (format == "json")
        std::cout << walkgroup::report_to_json(report).dump(2) << "\n";
    else
        std::cout << walkgroup::report_to_text(report);
    return exit_ok;
}

int run_orbit(const InputOptions& in) {
    const walkgroup::WeightMatrix w = load_weights(in);
    walkgroup::KernelData kernel = walkgroup::kernel_coefficients(w);
    const walkgroup::WeierstrassCurve curve = walkgroup::curve_from_kernel(kernel);
    const walkgroup::GenusResult genus =
        walkgroup::genus_gate(curve, kernel.delta1, kernel.delta2);
    if (!genus.one) {
        std::cerr << "orbit requires a genus-1 instance (disc = "
                  << walkgroup::to_string(curve.disc) << ")\n";
        return exit_usage;
    }
    const walkgroup::CurvePoint p = walkgroup::base_point(w);
    if (!walkgroup::on_curve(p, curve)) {
        std::cerr << "base point is not on the curve\n";
        return exit_usage;
    }
    walkgroup::CurvePoint acc = p;
    for (int n = 1; n <= walkgroup::mazur_max_order; ++n) {
        std::cout << n << "  ";
        if (acc.at_infinity) {
            std::cout << "O\n";
            break;
        }
        std::cout << "(" << walkgroup::to_string(acc.x) << ", "
                  << walkgroup::to_string(acc.y) << ")\n";
        if (n < walkgroup::mazur_max_order) acc = walkgroup::point_add(acc, p, curve);
    }
    return exit_ok;
}

int run_scan(const walkgroup::ScanOptions& sopts, const std::string& format) {
    const walkgroup::ScanOutcome outcome = walkgroup::run_scan(sopts);
    if (format == "json") {
        nlohmann::json j;
        j["space"] = outcome.space;
        j["enumerated"] = outcome.enumerated;
        j["sampled"] = outcome.sampled;
        j["histogram"] = outcome.histogram;
        nlohmann::json hits = nlohmann::json::array();
        for (const auto& hit : outcome.hits) {
            walkgroup::Report rep;
            rep.result = hit.result;
            rep.oracle = hit.oracle;
            nlohmann::json h;
            nlohmann::json raw = nlohmann::json::array();
            for (const auto& row : hit.raw) {
                nlohmann::json jr = nlohmann::json::array();
                for (const auto& v : row) jr.push_back(walkgroup::to_string(v));
                raw.push_back(std::move(jr));
            }
            h["raw"] = std::move(raw);
            h["report"] = walkgroup::report_to_json(rep);
            hits.push_back(std::move(h));
        }
        j["hits"] = std::move(hits);
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "space " << outcome.space << ", classified " << outcome.enumerated
              << (outcome.sampled ? " (sampled)" : " (exhaustive)") << "\n";
    for (const auto& [key, count] : outcome.histogram)
        std::cout << "  " << key << "  " << count << "\n";
    if (!outcome.hits.empty()) {
        std::cout << "hits (" << outcome.hits.size() << "):\n";
        for (const auto& hit : outcome.hits) {
            std::cout << "  raw";
            for (const auto& row : hit.raw)
                for (const auto& v : row) std::cout << " " << walkgroup::to_string(v);
            std::cout << "  -> |H| = " << *hit.result.group_order;
            if (hit.oracle) {
                std::cout << ", orbit closure ";
                if (hit.oracle->closure_order)
                    std::cout << *hit.oracle->closure_order;
                else
                    std::cout << "none";
            }
            std::cout << "\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois group classifier for weighted quarter-plane walks"};
    app.require_subcommand(1);

    InputOptions in;
    walkgroup::ReportOptions ropts;
    walkgroup::ScanOptions sopts;
    std::string format = "text";

    CLI::App* classify = app.add_subcommand("classify", "classify one weight matrix");
    add_input_options(classify, in);
    classify->add_flag("--oracle", ropts.oracle, "run the floating-point QRT cross-check");
    classify->add_flag("--yellowbook", ropts.yellowbook,
                       "include the verbatim order-8 cofactor determinant");
    classify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--seed", ropts.seed, "seed for the QRT oracle");

    CLI::App* orbit = app.add_subcommand("orbit", "print n*Omega3 for n = 1..12");
    add_input_options(orbit, in);

    CLI::App* scan = app.add_subcommand("scan", "classify a family of weight matrices");
    scan->add_option("--support", sopts.support,
                     "8-char mask over steps (1,1),(1,0),(1,-1),(0,1),(0,-1),(-1,1),(-1,0),(-1,-1)");
    scan->add_option("--denominator-max", sopts.denominator_max, "largest weight denominator")
        ->check(CLI::PositiveNumber);
    std::int64_t target = -1, limit = -1;
    scan->add_option("--target-order", target, "collect instances with this |H|");
    scan->add_option("--limit", limit, "max instances to classify (sampling above)");
    scan->add_option("--jobs", sopts.jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--seed", sopts.seed, "seed for sampled scans and oracle runs");
    scan->add_flag("--oracle", sopts.oracle_on_hits, "re-verify hits with the QRT oracle");
    scan->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(in, ropts, format);
        if (orbit->parsed()) return run_orbit(in);
        if (scan->parsed()) {
            if (target >= 0) sopts.target_order = static_cast<int>(target);
            if (limit >= 0) sopts.limit = static_cast<std::uint64_t>(limit);
            return run_scan(sopts, format);
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const walkgroup::walk_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
