#include "levelcover/family_io.hpp"

#include <sstream>

namespace levelcover {

void require_within(const Family& f, int n, const char* what) {
    for (const auto& m : f) {
        if (!m.empty() && m.back() > n)
            throw std::invalid_argument(std::string(what) + " member " + m.to_string() + " lies outside [1," +
                                        std::to_string(n) + "]");
    }
}

void write_family_text(std::ostream& os, const Family& f, int n) {
    os << "n " << n << " r " << f.rank() << '\n';
    for (const auto& m : f) {
        for (int i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[static_cast<std::size_t>(i)];
        os << '\n';
    }
}

std::string family_to_text(const Family& f, int n) {
    std::ostringstream os;
    write_family_text(os, f, n);
    return os.str();
}

GroundedFamily read_family_text(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw FormatError("family text: missing header line");
    std::istringstream header(line);
    std::string n_tag, r_tag;
    int n = -1, r = -1;
    if (!(header >> n_tag >> n >> r_tag >> r) || n_tag != "n" || r_tag != "r" || n < 0 || r < 0)
        throw FormatError("family text: header must read `n <n> r <r>`");
    std::vector<Subset> members;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<int> elems;
        int v;
        while (row >> v) elems.push_back(v);
        if (!row.eof()) throw FormatError("family text: non-integer token in line `" + line + "`");
        try {
            members.emplace_back(std::move(elems));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("family text: ") + e.what());
        }
    }
    Family f(r, std::move(members));
    require_within(f, n, "family");
    return {n, std::move(f)};
}

GroundedFamily family_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_family_text(is);
}

nlohmann::ordered_json family_to_json(const Family& f, int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["r"] = f.rank();
    auto members = nlohmann::ordered_json::array();
    for (const auto& m : f) members.push_back(std::vector<int>(m.begin(), m.end()));
    j["members"] = std::move(members);
    return j;
}

GroundedFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("members"))
        throw FormatError("family JSON requires keys n, r, members");
    int n = j.at("n").get<int>();
    int r = j.at("r").get<int>();
    std::vector<Subset> members;
    for (const auto& m : j.at("members")) members.push_back(Subset::from_unsorted(m.get<std::vector<int>>()));
    Family f(r, std::move(members));
    require_within(f, n, "family");
    return {n, std::move(f)};
}

}  // namespace levelcover
