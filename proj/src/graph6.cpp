#include "spexlab/graph.hpp"

#include <stdexcept>

namespace spexlab {

namespace {
void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // 63 <= n <= 258047: '~' followed by three 6-bit groups
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
}
} // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    append_size(out, n);
    int bit = 0;
    unsigned cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = (cur << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + cur));
                bit = 0;
                cur = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(63 + (cur << (6 - bit))));
    return out;
}

Graph graph6_decode(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated string");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range");
        return c - 63u;
    };
    int n;
    if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        unsigned a = next(), b = next(), c = next();
        n = static_cast<int>((a << 12) | (b << 6) | c);
    } else {
        n = static_cast<int>(next());
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("graph6: order exceeds 64");
    Graph g(n);
    int bit = 0;
    unsigned cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bit == 0) { cur = next(); bit = 6; }
            --bit;
            if ((cur >> bit) & 1u) g.add_edge(row, col);
        }
    }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing characters");
    return g;
}

} // namespace spexlab
