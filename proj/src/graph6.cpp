#include "irdom/graph6.hpp"

namespace irdom {

namespace {

constexpr int bias = 63;

} // namespace

auto parse_graph6(std::string_view text) -> Graph
{
    if (text.empty())
        throw Graph6Error("empty graph6 string");
    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw Graph6Error("long-form graph6 (n > 62) is not supported");
    if (header < bias + 1 || header > bias + Graph::max_order)
        throw Graph6Error("malformed graph6 header byte " + std::to_string(header));
    const int n = header - bias;

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() != 1 + groups)
        throw Graph6Error("graph6 body for n = " + std::to_string(n) + " needs " + std::to_string(groups) +
                          " bytes, got " + std::to_string(text.size() - 1));

    std::vector<Edge> edges;
    std::size_t p = 0;
    for (std::size_t g = 0; g < groups; ++g) {
        const int byte = static_cast<unsigned char>(text[1 + g]);
        if (byte < bias || byte > bias + 63)
            throw Graph6Error("byte " + std::to_string(byte) + " at offset " + std::to_string(1 + g) +
                              " outside the graph6 alphabet");
        const int value = byte - bias;
        for (int b = 5; b >= 0; --b, ++p) {
            if (((value >> b) & 1) == 0)
                continue;
            if (p >= bits)
                throw Graph6Error("nonzero padding bit in graph6 body");
            // Column-major upper triangle: p = j(j-1)/2 + i.
            int j = 1;
            while (static_cast<std::size_t>(j) * (j + 1) / 2 <= p)
                ++j;
            const int i = static_cast<int>(p - static_cast<std::size_t>(j) * (j - 1) / 2);
            edges.push_back({i, j});
        }
    }
    return Graph::from_edges(n, edges);
}

auto write_graph6(const Graph &g) -> std::string
{
    const int n = g.order();
    if (n < 1 || n > Graph::max_order)
        throw Graph6Error("short-form graph6 needs 1 <= n <= 62, got n = " + std::to_string(n));
    std::string out(1, static_cast<char>(n + bias));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + bias));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + bias));
    return out;
}

} // namespace irdom
