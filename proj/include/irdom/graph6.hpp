#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "irdom/graph.hpp"

namespace irdom {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Short-form graph6 only (1 <= n <= 62). Nonzero padding bits, trailing
/// bytes and the long-form '~' header are rejected.
auto parse_graph6(std::string_view text) -> Graph;
auto write_graph6(const Graph &g) -> std::string;

} // namespace irdom
