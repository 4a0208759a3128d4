#include "levelcover/serialize.hpp"

#include <cstdio>
#include <stdexcept>

#include "levelcover/family_io.hpp"

namespace levelcover {

namespace {

Json members_json(const Family& f) {
    Json arr = Json::array();
    for (const auto& s : f) arr.push_back(std::vector<int>(s.begin(), s.end()));
    return arr;
}

Json big(const BigInt& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
    return x.str();
}

Json inequality_json(const InequalityCheck& c) { return {{"lhs", big(c.lhs)}, {"rhs", big(c.rhs)}, {"holds", c.holds}}; }

Json rational_json(const Rational& r) { return {{"exact", rational_to_string(r)}, {"approx", to_double(r)}}; }

Family family_field(const nlohmann::json& j, const char* key, int n, int rank) {
    if (!j.contains(key) || !j.at(key).is_array()) throw FormatError(std::string("pair JSON requires an array \"") + key + "\"");
    return family_from_json(nlohmann::json{{"n", n}, {"r", rank}, {"members", j.at(key)}}).family;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("-0123456789") != std::string::npos || part.find('-', 1) != std::string::npos)
            throw std::invalid_argument("malformed rational \"" + text + "\"");
        return BigInt(part);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    const BigInt num = parse_int(text.substr(0, slash));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Json pair_to_json(const DominatingPair& d) {
    return {{"schema", kSchema}, {"n", d.n},           {"k", d.k},
            {"l", d.l},          {"lsets", members_json(d.lsets)}, {"ksets", members_json(d.ksets)}};
}

DominatingPair pair_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw FormatError("pair JSON must be an object");
        if (j.contains("schema") && j.at("schema") != kSchema)
            throw FormatError("unsupported schema " + j.at("schema").dump());
        for (const char* key : {"n", "k", "l"}) {
            if (!j.contains(key) || !j.at(key).is_number_integer())
                throw FormatError(std::string("pair JSON requires an integer \"") + key + "\"");
        }
        const int n = j.at("n").get<int>(), k = j.at("k").get<int>(), l = j.at("l").get<int>();
        require_levels(n, k, l);
        return DominatingPair(n, k, l, family_field(j, "lsets", n, l), family_field(j, "ksets", n, k));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed pair JSON: ") + e.what());
    }
}

Json cover_stats_to_json(const CoverStats& s) {
    return {{"N", s.points},
            {"m", s.design_size},
            {"blocks_chosen", s.blocks_chosen},
            {"ratio", rational_to_string(s.ratio)},
            {"ratio_approx", to_double(s.ratio)}};
}

Json construction_to_json(const Construction& c, bool with_cover_stats) {
    Json j = pair_to_json(c.pair);
    j["size"] = c.pair.size();
    if (with_cover_stats) j["cover_stats"] = c.cover ? cover_stats_to_json(*c.cover) : Json(nullptr);
    return j;
}

Json verdict_to_json(const DominatingPair& d, const DominationVerdict& v, const ConditionCounts& counts) {
    Json violations = Json::array();
    for (const auto& x : v.violations) {
        violations.push_back({{"side", x.side == Side::lower ? "lower" : "upper"},
                              {"witness", std::vector<int>(x.witness.begin(), x.witness.end())}});
    }
    return {{"schema", kSchema},
            {"n", d.n},
            {"k", d.k},
            {"l", d.l},
            {"size", d.size()},
            {"dominating", v.dominating},
            {"lower_violations", v.lower_violations},
            {"upper_violations", v.upper_violations},
            {"violations", violations},
            {"ksets_via_lsets", counts.ksets_via_lsets},
            {"lsets_via_ksets", counts.lsets_via_ksets}};
}

Json solve_to_json(const SolveResult& r) {
    Json j = {{"schema", kSchema},
              {"status", to_string(r.status)},
              {"lower", r.lower},
              {"upper", r.upper},
              {"nodes", r.nodes}};
    if (r.certificate) {
        Json cert = pair_to_json(*r.certificate);
        cert.erase("schema");
        j["certificate"] = cert;
    }
    return j;
}

Json turan_to_json(const TuranResult& r, int n) {
    Json witness = family_to_json(r.witness, n);
    return {{"schema", kSchema}, {"status", to_string(r.status)}, {"lower", r.lower},
            {"upper", r.upper},  {"nodes", r.nodes},                {"witness", witness}};
}

Json bound_report_to_json(const BoundReport& r) {
    Json j = {{"schema", kSchema}, {"n", r.n},           {"k", r.k},
              {"l", r.l},          {"lsets", r.lsets},   {"ksets", r.ksets},
              {"size", r.lsets + r.ksets},
              {"ineq6", inequality_json(r.ineq6)},
              {"ineq7", inequality_json(r.ineq7)}};
    if (r.pairs) {
        const auto& p = *r.pairs;
        j["s"] = p.s;
        j["split"] = {{"k0", p.k0}, {"k1", p.k1}, {"k2", p.k2}};
        j["ineq11"] = {{"edges", p.ineq11.edges},        {"k0_term", big(p.ineq11.k0_term)},
                       {"k1_shadow", p.ineq11.k1_shadow}, {"k2_shadow", p.ineq11.k2_shadow},
                       {"lhs", big(p.ineq11.lhs)},        {"rhs", big(p.ineq11.rhs)},
                       {"holds", p.ineq11.holds}};
        j["lemma8"] = {{"lhs", p.lemma8.lhs}, {"rhs", rational_to_string(p.lemma8.rhs)}, {"holds", p.lemma8.holds}};
        j["critical"] = p.critical;
        j["hitting"] = p.hitting;
        Json turan = inequality_json(p.turan);
        turan["main_term"] = rational_json(p.turan_main_term);
        turan["residual"] = rational_json(p.turan_residual);
        j["turan"] = turan;
        j["new_edges"] = inequality_json(p.new_edges);
        j["fh_kcliques"] = p.fh_kcliques;
        j["size_over_n2"] = rational_json(p.size_over_n2);
        j["coeff_gk2"] = rational_json(p.coeff);
    }
    j["size_over_choose"] = rational_json(r.size_over_choose);
    j["alpha"] = r.alpha ? rational_json(*r.alpha) : Json(nullptr);
    j["alpha_conjectural"] = r.alpha_conjectural;
    j["theorem8_coeff"] = r.theorem8_coeff ? rational_json(*r.theorem8_coeff) : Json(nullptr);
    j["all_hold"] = r.all_hold();
    return j;
}

std::vector<std::string> bound_report_csv_header() {
    return {"n",           "k",           "l",           "E",           "K",
            "size",        "ineq6_lhs",   "ineq6_rhs",   "ineq6_holds", "ineq7_lhs",
            "ineq7_rhs",   "ineq7_holds", "s",           "k0",          "k1",
            "k2",          "ineq11_lhs",  "ineq11_rhs",  "ineq11_holds", "lemma8_lhs",
            "lemma8_rhs",  "lemma8_holds", "crit",       "H",           "turan_lhs",
            "turan_rhs",   "turan_holds", "turan_residual", "turan_residual_float", "eq16_lhs",
            "eq16_rhs",    "eq16_holds",  "fh_kcliques", "size_over_n2", "size_over_n2_float",
            "coeff",       "alpha",       "alpha_conjectural", "theorem8_coeff", "size_over_choose",
            "size_over_choose_float"};
}

std::vector<std::string> bound_report_csv_row(const BoundReport& r) {
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    auto u = [](auto x) { return std::to_string(x); };
    std::vector<std::string> row = {u(r.n),
                                    u(r.k),
                                    u(r.l),
                                    u(r.lsets),
                                    u(r.ksets),
                                    u(r.lsets + r.ksets),
                                    r.ineq6.lhs.str(),
                                    r.ineq6.rhs.str(),
                                    b(r.ineq6.holds),
                                    r.ineq7.lhs.str(),
                                    r.ineq7.rhs.str(),
                                    b(r.ineq7.holds)};
    if (r.pairs) {
        const auto& p = *r.pairs;
        const std::vector<std::string> extra = {u(p.s),
                                                u(p.k0),
                                                u(p.k1),
                                                u(p.k2),
                                                p.ineq11.lhs.str(),
                                                p.ineq11.rhs.str(),
                                                b(p.ineq11.holds),
                                                u(p.lemma8.lhs),
                                                rational_to_string(p.lemma8.rhs),
                                                b(p.lemma8.holds),
                                                u(p.critical),
                                                u(p.hitting),
                                                p.turan.lhs.str(),
                                                p.turan.rhs.str(),
                                                b(p.turan.holds),
                                                rational_to_string(p.turan_residual),
                                                format_double(to_double(p.turan_residual)),
                                                p.new_edges.lhs.str(),
                                                p.new_edges.rhs.str(),
                                                b(p.new_edges.holds),
                                                u(p.fh_kcliques),
                                                rational_to_string(p.size_over_n2),
                                                format_double(to_double(p.size_over_n2)),
                                                rational_to_string(p.coeff)};
        row.insert(row.end(), extra.begin(), extra.end());
    } else {
        row.insert(row.end(), 24, "");
    }
    row.push_back(r.alpha ? rational_to_string(*r.alpha) : "");
    row.push_back(b(r.alpha_conjectural));
    row.push_back(r.theorem8_coeff ? rational_to_string(*r.theorem8_coeff) : "");
    row.push_back(rational_to_string(r.size_over_choose));
    row.push_back(format_double(to_double(r.size_over_choose)));
    return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

}  // namespace levelcover
