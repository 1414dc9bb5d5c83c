#include "hypergraph_file.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <vector>

namespace hyperchrome::cli {

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::uint64_t number(std::string_view word, std::size_t line) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || end != word.data() + word.size())
        throw FormatError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    bool have_header = false;
    std::size_t k = 0, n = 0, m = 0;
    std::vector<std::vector<Vertex>> edges;
    std::set<std::vector<Vertex>> seen;

    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto words = split_words(line);
        if (words.empty() || words[0][0] == 'c') continue;

        if (words[0] == "p") {
            if (have_header) throw FormatError(line_no, "duplicate header");
            if (words.size() != 5 || words[1] != "h") throw FormatError(line_no, "header must be 'p h <k> <n> <m>'");
            k = number(words[2], line_no);
            n = number(words[3], line_no);
            m = number(words[4], line_no);
            if (k == 0) throw FormatError(line_no, "uniformity must be positive");
            if (n > std::numeric_limits<Vertex>::max()) throw FormatError(line_no, "too many vertices");
            have_header = true;
        } else if (words[0] == "e") {
            if (!have_header) throw FormatError(line_no, "edge before header");
            if (words.size() != k + 1)
                throw FormatError(line_no, "edge must list exactly " + std::to_string(k) + " vertices");
            std::vector<Vertex> edge;
            for (std::size_t i = 1; i < words.size(); ++i) {
                auto v = number(words[i], line_no);
                if (v < 1 || v > n) throw FormatError(line_no, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
                edge.push_back(static_cast<Vertex>(v - 1));
            }
            std::sort(edge.begin(), edge.end());
            if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
                throw FormatError(line_no, "repeated vertex in edge");
            if (!seen.insert(edge).second) throw FormatError(line_no, "duplicate edge");
            edges.push_back(std::move(edge));
        } else {
            throw FormatError(line_no, "unknown line type '" + std::string(words[0]) + "'");
        }
    }
    if (!have_header) throw FormatError(0, "missing 'p h' header");
    if (edges.size() != m)
        throw FormatError(0, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Hypergraph(n, k, edges);
}

std::string serialize_hypergraph(const Hypergraph& g) {
    std::string out = "p h " + std::to_string(g.uniformity()) + " " + std::to_string(g.num_vertices()) + " " +
                      std::to_string(g.num_edges()) + "\n";
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        out += 'e';
        for (Vertex v : g.edge(i)) out += " " + std::to_string(v + 1);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace hyperchrome::cli
