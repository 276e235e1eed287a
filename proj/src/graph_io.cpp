#include "kindep/graph_io.hpp"

#include <algorithm>
#include <limits>
#include <cstdint>
#include <sstream>
#include <vector>

#include "kindep/error.hpp"

namespace kindep {
namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kShortLimit = 62;
constexpr std::uint64_t kMediumLimit = 258047;

std::string_view strip_line_end(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6 input is truncated", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kBias + 63) {
        throw ParseError("graph6 byte value " + std::to_string(c) + " outside [63,126]", pos);
    }
    return c - kBias;
}

void append_size(std::string& out, std::uint64_t n) {
    if (n <= kShortLimit) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    int groups = 3;
    if (n <= kMediumLimit) {
        out.push_back(126);
    } else {
        out.append(2, static_cast<char>(126));
        groups = 6;
    }
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
    std::string_view text = strip_line_end(raw);
    if (text.starts_with(">>graph6<<")) throw ParseError("graph6 header lines are not supported", 0);
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (sextet(text, 0) != 63) {
        n = static_cast<std::uint64_t>(sextet(text, 0));
        pos = 1;
    } else if (text.size() > 1 && sextet(text, 1) != 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i));
        pos = 4;
    } else {
        if (text.size() > 2 && sextet(text, 2) == 63) throw ParseError("graph6 size header is invalid", 2);
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i));
        pos = 8;
    }
    if (n > static_cast<std::uint64_t>(std::numeric_limits<Vertex>::max())) {
        throw ParseError("graph6 vertex count too large", 0);
    }
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() != pos + bytes) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - std::min(text.size(), pos)) +
                             " bytes, expected " + std::to_string(bytes),
                         std::min(text.size(), pos + bytes));
    }
    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            const int byte = sextet(text, pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({u, v});
        }
    }
    // padding bits must be zero for the encoding to be canonical
    for (; bit < bytes * 6; ++bit) {
        if ((sextet(text, pos + bit / 6) >> (5 - bit % 6)) & 1) {
            throw ParseError("graph6 padding bits are not zero", pos + bit / 6);
        }
    }
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#') {
                return true;
            }
        }
        return false;
    };
    if (!next_line()) throw ParseError("edge list is empty", 0);
    long long n = -1;
    long long m = -1;
    {
        std::istringstream header(line);
        if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be \"n m\"", line_no);
    }
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("edge list ends before " + std::to_string(m) + " edges", line_no);
        std::istringstream row(line);
        long long u = 0;
        long long v = 0;
        if (!(row >> u >> v)) throw ParseError("edge line must be \"u v\"", line_no);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (next_line()) throw ParseError("trailing content after " + std::to_string(m) + " edges", line_no);
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_text(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("graph input is empty", 0);
    const auto line_end = text.find('\n', first);
    const auto first_line = text.substr(first, line_end == std::string_view::npos ? text.npos : line_end - first);
    if (first_line.find_first_of(" \t") != std::string_view::npos || first_line.starts_with('#')) {
        return parse_edge_list(text);
    }
    return parse_graph6(text.substr(first));
}

std::string to_dot(const Graph& g, const std::optional<std::map<Vertex, std::string>>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (labels) {
            if (auto it = labels->find(v); it != labels->end()) out << " [label=\"" << it->second << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace kindep
