#pragma once

#include "nonproper/polyring.hpp"

#include <stdexcept>
#include <string>

namespace nonproper {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// One polynomial in u, v.
Poly parse_poly(const std::string& text);
// Two lines "f1 = ..." and "f2 = ...". Blank lines and '#' comments are skipped.
PolyMap parse_map(const std::string& text);

std::string format_poly(const Poly& p);
std::string format_map(const PolyMap& f);

}  // namespace nonproper
