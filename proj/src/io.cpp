#include "degstab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "degstab/error.hpp"

namespace degstab {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::uint64_t> values;
};

// Yields the non-blank lines, comments stripped, as unsigned integers.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    bool next(Line& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            out.number = line_;
            out.values.clear();
            std::istringstream ss(raw);
            std::string tok;
            while (ss >> tok) {
                std::uint64_t v = 0;
                auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc() || p != tok.data() + tok.size()) {
                    throw ParseError(ErrorKind::ParseError, line_, "not a nonnegative integer: '" + tok + "'");
                }
                out.values.push_back(v);
            }
            if (!out.values.empty()) return true;
        }
        return false;
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

struct Header {
    std::uint64_t a, b, m;
};

Header read_header(Reader& rd, const char* what) {
    Line ln;
    if (!rd.next(ln)) throw ParseError(ErrorKind::ParseError, rd.line() + 1, std::string("missing header '") + what + "'");
    if (ln.values.size() != 3) {
        throw ParseError(ErrorKind::ParseError, ln.number, std::string("header must be '") + what + "'");
    }
    return {ln.values[0], ln.values[1], ln.values[2]};
}

void check_trailing(Reader& rd) {
    Line ln;
    if (rd.next(ln)) throw ParseError(ErrorKind::ParseError, ln.number, "more edge lines than the header declares");
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    Reader rd(in);
    auto [r, n, m] = read_header(rd, "r n m");
    if (r < 2) throw ParseError(ErrorKind::ParseError, 1, "uniformity must be at least 2");
    if (n > 0xffffffffULL) throw ParseError(ErrorKind::ParseError, 1, "too many vertices");
    std::map<Edge, std::size_t> seen;
    std::vector<Vertex> flat;
    Line ln;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!rd.next(ln)) {
            throw ParseError(ErrorKind::ParseError, rd.line() + 1,
                             "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        if (ln.values.size() != r) {
            throw ParseError(ErrorKind::ParseError, ln.number,
                             "edge has " + std::to_string(ln.values.size()) + " entries, expected " + std::to_string(r));
        }
        Edge e;
        for (auto v : ln.values) {
            if (v >= n) {
                throw ParseError(ErrorKind::IndexOutOfRange, ln.number,
                                 "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
            }
            e.push_back(static_cast<Vertex>(v));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw ParseError(ErrorKind::ParseError, ln.number, "repeated vertex inside an edge");
        }
        auto [it, fresh] = seen.emplace(e, ln.number);
        if (!fresh) {
            throw ParseError(ErrorKind::DuplicateEdge, ln.number, "duplicate of the edge on line " + std::to_string(it->second));
        }
        flat.insert(flat.end(), ln.values.begin(), ln.values.end());
    }
    check_trailing(rd);
    return Hypergraph::from_flat(static_cast<int>(r), n, std::move(flat));
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string serialize(const Hypergraph& h) {
    std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.order()) + " " + std::to_string(h.size()) + "\n";
    for (std::size_t e = 0; e < h.size(); ++e) {
        auto ed = h.edge(e);
        for (std::size_t i = 0; i < ed.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(ed[i]);
        }
        out += '\n';
    }
    return out;
}

Pattern parse_pattern(std::istream& in) {
    Reader rd(in);
    auto [r, ell, m] = read_header(rd, "r l m");
    if (r < 2) throw ParseError(ErrorKind::ParseError, 1, "uniformity must be at least 2");
    if (ell < 1 || ell > 4096) throw ParseError(ErrorKind::ParseError, 1, "pattern vertex count out of range");
    std::map<Multiplicity, std::size_t> seen;
    std::vector<Multiplicity> edges;
    Line ln;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!rd.next(ln)) {
            throw ParseError(ErrorKind::ParseError, rd.line() + 1,
                             "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        if (ln.values.size() != r) {
            throw ParseError(ErrorKind::ParseError, ln.number,
                             "edge has " + std::to_string(ln.values.size()) + " entries, expected " + std::to_string(r));
        }
        Multiplicity e(ell, 0);
        for (auto v : ln.values) {
            if (v < 1 || v > ell) {
                throw ParseError(ErrorKind::IndexOutOfRange, ln.number,
                                 "label " + std::to_string(v) + " out of range [1, " + std::to_string(ell) + "]");
            }
            ++e[v - 1];
        }
        auto [it, fresh] = seen.emplace(e, ln.number);
        if (!fresh) {
            throw ParseError(ErrorKind::DuplicateEdge, ln.number, "duplicate of the edge on line " + std::to_string(it->second));
        }
        edges.push_back(std::move(e));
    }
    check_trailing(rd);
    return Pattern(static_cast<int>(r), static_cast<int>(ell), std::move(edges));
}

Pattern parse_pattern(const std::string& text) {
    std::istringstream in(text);
    return parse_pattern(in);
}

std::string serialize(const Pattern& p) {
    std::string out = std::to_string(p.uniformity()) + " " + std::to_string(p.vertex_count()) + " " +
                      std::to_string(p.size()) + "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto mem = p.members(i);
        for (std::size_t j = 0; j < mem.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(mem[j] + 1);
        }
        out += '\n';
    }
    return out;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    if (path == "-") return parse_hypergraph(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return parse_hypergraph(in);
}

Pattern read_pattern_file(const std::string& path) {
    if (path == "-") return parse_pattern(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return parse_pattern(in);
}

}  // namespace degstab
