// formats.cpp

#include "berge/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace berge {

namespace {

bool is_comment(const std::string& line) {
    const auto p = line.find_first_not_of(" \t");
    return p != std::string::npos && line[p] == '#';
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

class LineReader {
public:
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!is_comment(line)) lines_.push_back(line);
        }
    }

    /// Next non-blank line; the header.
    std::string header(const char* what) {
        while (pos_ < lines_.size() && is_blank(lines_[pos_])) ++pos_;
        if (pos_ == lines_.size()) throw FormatError(std::string(what) + ": missing header line");
        return lines_[pos_++];
    }

    /// Next line, blank or not.
    std::string row(const char* what) {
        if (pos_ == lines_.size()) throw FormatError(std::string(what) + ": unexpected end of input");
        return lines_[pos_++];
    }

    bool more_content() {
        while (pos_ < lines_.size() && is_blank(lines_[pos_])) ++pos_;
        return pos_ < lines_.size();
    }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int to_int(const std::string& tok, const char* what) {
    int v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw FormatError(std::string(what) + ": bad integer '" + tok + "'");
    return v;
}

std::vector<int> ints(const std::string& line, const char* what) {
    std::vector<int> out;
    for (const auto& t : tokens(line)) out.push_back(to_int(t, what));
    return out;
}

std::vector<int> ints_exact(const std::string& line, std::size_t count, const char* what) {
    auto v = ints(line, what);
    if (v.size() != count)
        throw FormatError(std::string(what) + ": expected " + std::to_string(count) + " integers in '" + line + "'");
    return v;
}

void expect_end(LineReader& r, const char* what) {
    if (r.more_content()) throw FormatError(std::string(what) + ": trailing content");
}

void append_ints(std::string& out, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    out += '\n';
}

}  // namespace

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) append_ints(out, e);
    return out;
}

Hypergraph parse_hypergraph(const std::string& text) {
    constexpr const char* what = "hypergraph";
    LineReader r(text);
    const auto head = ints_exact(r.header(what), 2, what);
    if (head[0] < 0 || head[1] < 0) throw FormatError("hypergraph: negative size in header");
    std::vector<VertexSet> edges;
    for (int i = 0; i < head[1]; ++i) {
        std::string line = r.row(what);
        while (is_blank(line)) line = r.row(what);
        auto e = ints(line, what);
        if (!std::is_sorted(e.begin(), e.end()))
            throw FormatError("hypergraph: edge " + std::to_string(i) + " is not ascending");
        edges.push_back(std::move(e));
    }
    expect_end(r, what);
    try {
        return Hypergraph(head[0], std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("hypergraph: ") + e.what());
    }
}

std::string serialize_bipartite(const BipartiteGraph& g) {
    std::string out = std::to_string(g.x_count()) + " " + std::to_string(g.y_count()) + "\n";
    for (int x = 0; x < g.x_count(); ++x) append_ints(out, g.x_neighbors(x));
    return out;
}

BipartiteGraph parse_bipartite(const std::string& text) {
    constexpr const char* what = "bipartite";
    LineReader r(text);
    const auto head = ints_exact(r.header(what), 2, what);
    if (head[0] < 0 || head[1] < 0) throw FormatError("bipartite: negative size in header");
    std::vector<std::vector<int>> rows;
    for (int x = 0; x < head[0]; ++x) {
        auto row = ints(r.row(what), what);
        if (!std::is_sorted(row.begin(), row.end()))
            throw FormatError("bipartite: row " + std::to_string(x) + " is not ascending");
        rows.push_back(std::move(row));
    }
    expect_end(r, what);
    try {
        return BipartiteGraph(head[1], std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bipartite: ") + e.what());
    }
}

std::string serialize_certificate(const BergeFactorCertificate& cert) {
    auto c = cert;
    c.normalize();
    std::string out = std::to_string(c.k) + " " + std::to_string(c.pairs.size()) + "\n";
    for (const auto& p : c.pairs) append_ints(out, {p.edge, p.u, p.v});
    return out;
}

BergeFactorCertificate parse_certificate(const std::string& text) {
    constexpr const char* what = "certificate";
    LineReader r(text);
    const auto head = ints_exact(r.header(what), 2, what);
    if (head[1] < 0) throw FormatError("certificate: negative pair count");
    BergeFactorCertificate cert;
    cert.k = head[0];
    for (int i = 0; i < head[1]; ++i) {
        std::string line = r.row(what);
        while (is_blank(line)) line = r.row(what);
        const auto v = ints_exact(line, 3, what);
        cert.pairs.push_back({v[0], v[1], v[2]});
    }
    expect_end(r, what);
    cert.normalize();
    return cert;
}

std::string serialize_barrier(const Barrier& b) {
    std::string out = std::to_string(b.delta) + " " + std::to_string(b.a.size()) + " " +
                      std::to_string(b.b.size()) + "\n";
    append_ints(out, b.a);
    append_ints(out, b.b);
    for (const auto& c : b.components) {
        out += c.cls == ComponentClass::odd ? "odd " : "even ";
        out += std::to_string(c.vertices.size());
        for (int v : c.vertices) out += " " + std::to_string(v);
        out += '\n';
    }
    return out;
}

Barrier parse_barrier(const std::string& text) {
    constexpr const char* what = "barrier";
    LineReader r(text);
    const auto head = ints_exact(r.header(what), 3, what);
    if (head[1] < 0 || head[2] < 0) throw FormatError("barrier: negative set size");
    Barrier b;
    b.delta = head[0];
    b.a = ints_exact(r.row(what), head[1], what);
    b.b = ints_exact(r.row(what), head[2], what);
    while (r.more_content()) {
        const auto toks = tokens(r.row(what));
        if (toks.size() < 2) throw FormatError("barrier: short component line");
        ClassifiedComponent c;
        if (toks[0] == "odd") c.cls = ComponentClass::odd;
        else if (toks[0] == "even") c.cls = ComponentClass::even;
        else throw FormatError("barrier: unknown component class '" + toks[0] + "'");
        const int size = to_int(toks[1], what);
        if (size < 0 || static_cast<std::size_t>(size) + 2 != toks.size())
            throw FormatError("barrier: component size does not match its vertex list");
        for (std::size_t i = 2; i < toks.size(); ++i) c.vertices.push_back(to_int(toks[i], what));
        if (c.cls == ComponentClass::odd) ++b.hw;
        b.components.push_back(std::move(c));
    }
    return b;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw FormatError("cannot write '" + path + "'");
}

}  // namespace berge
