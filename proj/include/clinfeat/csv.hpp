#ifndef CLINFEAT_CSV_HPP
#define CLINFEAT_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace clinfeat {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// RFC 4180 field quoting; returns the input unchanged when no quoting is needed.
std::string csv_quote(std::string_view field);

// RFC 4180 reader (quoted fields, "" escapes, LF or CRLF records).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace clinfeat

#endif
