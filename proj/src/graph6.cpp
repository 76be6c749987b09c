#include "psum/graph6.hpp"

#include "psum/bigint.hpp"

namespace psum {

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // extended prefix for 63 <= n <= 258047: '~' then 18 bits
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0, chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                bits = 0;
                chunk = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input");
    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() < 4) throw ParseError("graph6: truncated order prefix");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(text[static_cast<std::size_t>(k)]) - 63;
            if (c < 0 || c > 63) throw ParseError("graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(text[0]) - 63;
        if (n < 0 || n > 62) throw ParseError("graph6: bad order byte");
        pos = 1;
    }
    if (n > Graph::kMaxOrder)
        throw ParseError("graph6: order " + std::to_string(n) + " above limit " +
                         std::to_string(Graph::kMaxOrder));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != nbytes)
        throw ParseError("graph6: wrong payload length");
    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(bit / 6)]) - 63;
            if (c < 0 || c > 63) throw ParseError("graph6: bad payload byte");
            if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int c = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(nbytes - 1)]) - 63;
        int pad = static_cast<int>(6 - nbits % 6);
        if (c & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding");
    }
    return g;
}

} // namespace psum
