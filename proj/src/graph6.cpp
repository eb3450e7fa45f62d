#include <string>
#include <string_view>
#include <vector>

#include "reconkit/errors.hpp"
#include "reconkit/graph.hpp"

// graph6: one header byte n+63 (n <= 62), then the upper triangle of the
// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed big-endian six bits per byte, each byte offset by 63, zero padded.

namespace reconkit {

namespace {

constexpr int kMaxGraph6Order = 62;
constexpr std::string_view kOptionalHeader = ">>graph6<<";

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kOptionalHeader)) base = kOptionalHeader.size();
    std::string_view body = text.substr(base);
    if (body.ends_with('\n')) body.remove_suffix(1);
    if (body.ends_with('\r')) body.remove_suffix(1);

    if (body.empty()) throw ParseError("graph6: missing order byte", base);
    const auto head = static_cast<unsigned char>(body[0]);
    if (head == 126) throw UnsupportedError("graph6: orders above 62 are not supported");
    if (head < 63 || head > 126) throw ParseError("graph6: malformed order byte", base);
    const int n = head - 63;
    if (n > kMaxGraph6Order) throw UnsupportedError("graph6: orders above 62 are not supported");

    const std::size_t nbits = bit_count(n);
    const std::size_t nbytes = (nbits + 5) / 6;
    if (body.size() - 1 < nbytes) {
        throw ParseError("graph6: truncated adjacency data", base + body.size());
    }
    if (body.size() - 1 > nbytes) {
        throw ParseError("graph6: trailing characters", base + 1 + nbytes);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const auto c = static_cast<unsigned char>(body[1 + b]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range", base + 1 + b);
        const unsigned value = c - 63U;
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool set = (value >> bit) & 1U;
            if (k >= nbits) {
                if (set) throw ParseError("graph6: nonzero padding bits", base + 1 + b);
                continue;
            }
            if (set) {
                // Column order: k enumerates (i, j) with i < j, j increasing.
                int j = 1;
                std::size_t start = 0;
                while (start + static_cast<std::size_t>(j) <= k) {
                    start += static_cast<std::size_t>(j);
                    ++j;
                }
                const int i = static_cast<int>(k - start);
                edges.push_back({i, j});
            }
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) throw UnsupportedError("graph6: orders above 62 are not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

}  // namespace reconkit
