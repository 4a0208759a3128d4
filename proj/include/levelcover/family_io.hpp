#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "levelcover/combinatorics.hpp"

namespace levelcover {

/// Raised for unreadable or malformed input; the CLI maps it to exit status 2.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A family together with the size of its ground set [n].
struct GroundedFamily {
    int n;
    Family family;
};

// Text form: a header line `n <n> r <r>`, then one member per line,
// ascending ids separated by single spaces, members in colex order.
void write_family_text(std::ostream& os, const Family& f, int n);
std::string family_to_text(const Family& f, int n);
/// Accepts members in any order; rejects members outside [1, n].
GroundedFamily read_family_text(std::istream& is);
GroundedFamily family_from_text(const std::string& text);

nlohmann::ordered_json family_to_json(const Family& f, int n);
GroundedFamily family_from_json(const nlohmann::json& j);

/// Throws std::invalid_argument if a member of `f` leaves [1, n].
void require_within(const Family& f, int n, const char* what);

}  // namespace levelcover
