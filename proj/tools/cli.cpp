#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "levelcover/bounds.hpp"
#include "levelcover/constructions.hpp"
#include "levelcover/domination.hpp"
#include "levelcover/family_io.hpp"
#include "levelcover/serialize.hpp"
#include "levelcover/solver.hpp"

namespace levelcover::cli {

namespace {

struct RunConfig {
    int n = 0, k = 0, l = 0;
    std::string method;
    std::string methods = "gk2";
    int s = kDefaultComponentThreshold;
    std::uint64_t node_limit = kDefaultNodeLimit;
    std::size_t cap = kDefaultViolationCap;
    std::string format = "json";
    std::string pair_path;
    std::string out_path;
    std::string cert_path;
    std::string alpha;
    std::string n_range;
    std::vector<int> n_list;
    bool cover_stats = false;
};

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw FormatError("cannot write " + path);
    os << text;
    if (!os) throw FormatError("write failed for " + path);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::vector<Method> parse_methods(const std::string& text) {
    std::vector<Method> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(parse_method(item));
    }
    return out;
}

// "a:b" or "a:b:step", inclusive; a > b yields no values.
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw std::invalid_argument("malformed --n-range \"" + text + "\"");
        parts.push_back(v);
    }
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("--n-range expects START:END[:STEP]");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw std::invalid_argument("--n-range step must be positive");
    std::vector<int> out;
    for (long long v = parts[0]; v <= parts[1]; v += step) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<std::string> report_header() {
    return {"n",         "k",          "l",        "method",         "lsets",       "ksets",  "size",
            "norm",      "normalized", "normalized_float", "coeff",  "target",      "residual",
            "residual_float", "cover_N", "cover_m", "blocks_chosen", "cover_ratio", "cover_ratio_float"};
}

std::vector<std::string> report_row(Method m, const Construction& c) {
    const auto& p = c.pair;
    const Rational size(static_cast<long long>(p.size()));
    std::string norm;
    Rational norm_value, coeff;
    switch (m) {
        case Method::gk1:
            norm = "1";
            norm_value = 1;
            coeff = p.n - p.k + 1;
            break;
        case Method::gk2:
            norm = "n^2";
            norm_value = Rational(BigInt(p.n) * p.n);
            coeff = coeff_gk2(p.k);
            break;
        case Method::g53:
            norm = "C(n,3)";
            norm_value = Rational(binomial(p.n, 3));
            coeff = Rational(1, 3);
            break;
        case Method::g43:
            norm = "C(n,3)";
            norm_value = Rational(binomial(p.n, 3));
            coeff = Rational(17, 27);
            break;
    }
    const Rational normalized = size / norm_value;
    const Rational target = coeff * norm_value;
    const Rational residual = size - target;
    std::vector<std::string> row = {std::to_string(p.n),
                                    std::to_string(p.k),
                                    std::to_string(p.l),
                                    to_string(m),
                                    std::to_string(p.lsets.size()),
                                    std::to_string(p.ksets.size()),
                                    std::to_string(p.size()),
                                    norm,
                                    rational_to_string(normalized),
                                    format_double(to_double(normalized)),
                                    rational_to_string(coeff),
                                    rational_to_string(target),
                                    rational_to_string(residual),
                                    format_double(to_double(residual))};
    if (c.cover) {
        row.push_back(std::to_string(c.cover->points));
        row.push_back(std::to_string(c.cover->design_size));
        row.push_back(std::to_string(c.cover->blocks_chosen));
        row.push_back(rational_to_string(c.cover->ratio));
        row.push_back(format_double(to_double(c.cover->ratio)));
    } else {
        row.insert(row.end(), 5, "");
    }
    return row;
}

int do_construct(const RunConfig& cfg, std::ostream& out) {
    const Construction c = construct(parse_method(cfg.method), cfg.n, cfg.k, cfg.l);
    const std::string text = dump(construction_to_json(c, cfg.cover_stats));
    if (cfg.out_path.empty())
        out << text;
    else
        write_file(cfg.out_path, text);
    return 0;
}

int do_check(const RunConfig& cfg, std::ostream& out) {
    const DominatingPair d = pair_from_json(read_json_file(cfg.pair_path));
    out << dump(verdict_to_json(d, check_domination(d, cfg.cap), condition_counts(d)));
    return 0;
}

int do_exact(const RunConfig& cfg, std::ostream& out) {
    const SolveResult r = exact_gamma(cfg.n, cfg.k, cfg.l, cfg.node_limit);
    if (!cfg.cert_path.empty()) {
        if (!r.certificate) throw std::invalid_argument("no certificate available at this size");
        write_file(cfg.cert_path, dump(pair_to_json(*r.certificate)));
    }
    out << dump(solve_to_json(r));
    return 0;
}

int do_turan(const RunConfig& cfg, std::ostream& out) {
    out << dump(turan_to_json(exact_turan_ex(cfg.n, cfg.k, cfg.l, cfg.node_limit), cfg.n));
    return 0;
}

int do_bounds(const RunConfig& cfg, std::ostream& out) {
    const DominatingPair d = pair_from_json(read_json_file(cfg.pair_path));
    std::optional<Rational> alpha;
    if (!cfg.alpha.empty()) alpha = parse_rational(cfg.alpha);
    const BoundReport r = bound_report(d, cfg.s, alpha);
    if (cfg.format == "csv")
        out << csv_line(bound_report_csv_header()) << csv_line(bound_report_csv_row(r));
    else
        out << dump(bound_report_to_json(r));
    return 0;
}

int do_report(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Method> methods = parse_methods(cfg.methods);
    std::vector<int> ns = cfg.n_list;
    if (!cfg.n_range.empty()) {
        const auto more = parse_range(cfg.n_range);
        ns.insert(ns.end(), more.begin(), more.end());
    }
    std::ostringstream buf;
    buf << csv_line(report_header());
    for (int n : ns) {
        for (Method m : methods) buf << csv_line(report_row(m, construct(m, n, cfg.k, cfg.l)));
    }
    out << buf.str();
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Two-sided covering of the level graphs G_{k,l}", "levelcover"};
    app.require_subcommand(1);

    auto levels = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "ground set size")->required();
        sub->add_option("--k", cfg.k, "upper level")->required();
        sub->add_option("--l", cfg.l, "lower level")->required();
    };

    auto* construct_cmd = app.add_subcommand("construct", "build a dominating pair");
    levels(construct_cmd);
    construct_cmd->add_option("--method", cfg.method, "gk1 | gk2 | g53 | g43")->required();
    construct_cmd->add_option("--out", cfg.out_path, "write the pair here instead of stdout");
    construct_cmd->add_flag("--emit-cover-stats", cfg.cover_stats, "include greedy cover statistics");

    auto* check_cmd = app.add_subcommand("check", "verify a dominating pair");
    check_cmd->add_option("--pair", cfg.pair_path, "pair JSON file")->required();
    check_cmd->add_option("--cap", cfg.cap, "maximum violations listed");

    auto* exact_cmd = app.add_subcommand("exact", "exact domination number");
    levels(exact_cmd);
    exact_cmd->add_option("--node-limit", cfg.node_limit, "search node budget");
    exact_cmd->add_option("--cert-out", cfg.cert_path, "write the certificate pair here");

    auto* turan_cmd = app.add_subcommand("turan", "exact Turan number of K_k^(l)");
    levels(turan_cmd);
    turan_cmd->add_option("--node-limit", cfg.node_limit, "search node budget");

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the lower-bound inequalities on a pair");
    bounds_cmd->add_option("--pair", cfg.pair_path, "pair JSON file")->required();
    bounds_cmd->add_option("--s", cfg.s, "component threshold")->check(CLI::Range(2, 1 << 30));
    bounds_cmd->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--alpha", cfg.alpha, "Turan density p/q (conjectural when l >= 3)");

    auto* report_cmd = app.add_subcommand("report", "CSV table of construction sizes");
    report_cmd->add_option("--k", cfg.k, "upper level")->required();
    report_cmd->add_option("--l", cfg.l, "lower level")->required();
    report_cmd->add_option("--methods", cfg.methods, "comma-separated methods");
    report_cmd->add_option("--n", cfg.n_list, "ground set sizes");
    report_cmd->add_option("--n-range", cfg.n_range, "START:END[:STEP], inclusive");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "levelcover: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*construct_cmd) return do_construct(cfg, out);
        if (*check_cmd) return do_check(cfg, out);
        if (*exact_cmd) return do_exact(cfg, out);
        if (*turan_cmd) return do_turan(cfg, out);
        if (*bounds_cmd) return do_bounds(cfg, out);
        if (*report_cmd) return do_report(cfg, out);
    } catch (const FormatError& e) {
        err << "levelcover: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "levelcover: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "levelcover: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace levelcover::cli
