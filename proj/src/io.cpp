#include "ergo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace ergo {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_perfect_square(std::size_t v, std::size_t& root) {
    root = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(v))));
    return root * root == v;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
    std::vector<double> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tok(strip_comment(line));
        std::string word;
        while (tok >> word) {
            try {
                std::size_t used = 0;
                const double v = std::stod(word, &used);
                if (used != word.size()) throw std::invalid_argument(word);
                tokens.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("not a number: '" + word + "'");
            }
        }
    }
    if (tokens.empty()) throw ParseError("empty matrix input");

    // Header detection: a leading dimension n makes the count n^2 + 1,
    // which can never itself be a perfect square for n >= 1.
    std::size_t n = 0;
    const double first = tokens.front();
    const bool integral_first =
        first >= 1.0 && std::abs(first - std::round(first)) < 1e-9;
    if (integral_first &&
        tokens.size() ==
            static_cast<std::size_t>(std::llround(first)) *
                    static_cast<std::size_t>(std::llround(first)) +
                1) {
        n = static_cast<std::size_t>(std::llround(first));
        tokens.erase(tokens.begin());
    } else if (!is_perfect_square(tokens.size(), n)) {
        throw ParseError("token count " + std::to_string(tokens.size()) +
                         " does not form a square matrix");
    }
    return Matrix(n, std::move(tokens));
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_matrix(in);
}

Graph read_edge_list(std::istream& in, bool one_based) {
    std::vector<std::pair<long long, long long>> raw_edges;
    long long declared_n = -1;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tok(strip_comment(line));
        std::string first;
        if (!(tok >> first)) continue;
        if (first == "n") {
            if (!(tok >> declared_n) || declared_n < 1)
                throw ParseError("bad vertex-count header");
            continue;
        }
        long long u = 0, v = 0;
        try {
            u = std::stoll(first);
        } catch (const std::exception&) {
            throw ParseError("not a vertex id: '" + first + "'");
        }
        if (!(tok >> v)) throw ParseError("edge line needs two endpoints");
        std::string extra;
        if (tok >> extra) throw ParseError("trailing tokens on edge line");
        if (one_based) {
            --u;
            --v;
        }
        if (u < 0 || v < 0) throw ParseError("vertex id out of range");
        raw_edges.emplace_back(u, v);
    }

    long long n = declared_n;
    for (auto [u, v] : raw_edges) n = std::max({n, u + 1, v + 1});
    if (n < 1) throw ParseError("empty edge list and no vertex-count header");

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges)
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    try {
        return Graph(static_cast<std::size_t>(n), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Graph read_edge_list_file(const std::string& path, bool one_based) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in, one_based);
}

}  // namespace ergo
