#include "treepoisson/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace treepoisson {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

long parse_long(const std::string& tok) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
        throw DomainError("expected an integer, got '" + tok + "'");
    return v;
}

double parse_double(const std::string& tok) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw DomainError("expected a number, got '" + tok + "'");
    return v;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError(std::string("unexpected end of ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

Complex parse_complex_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return Complex{parse_double(text), 0.0};
    return Complex{parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

// ---------------------------------------------------------------------- tree

void write_tree(std::ostream& out, const Tree& tree) {
    out << "TREE " << tree.vertex_count() << ' ' << tree.depth_cap() << '\n';
    for (int v = 1; v < tree.vertex_count(); ++v) out << v << ' ' << tree.parent(v) << '\n';
}

Tree read_tree(std::istream& in) {
    const auto header = split_line(next_line(in, "tree file"));
    if (header.size() != 3 || header[0] != "TREE") throw DomainError("bad tree header");
    const long n = parse_long(header[1]);
    const long d = parse_long(header[2]);
    if (n < 1) throw DomainError("bad vertex count in tree header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (long v = 1; v < n; ++v) {
        const auto toks = split_line(next_line(in, "tree file"));
        if (toks.size() != 2) throw DomainError("bad tree line for vertex " + std::to_string(v));
        if (parse_long(toks[0]) != v)
            throw DomainError("tree lines must list child ids 1..n-1 in order");
        edges.emplace_back(static_cast<int>(v), static_cast<int>(parse_long(toks[1])));
    }
    Tree tree = Tree::from_parents(edges);
    if (tree.depth_cap() != d) throw DomainError("tree header depth does not match the structure");
    return tree;
}

// -------------------------------------------------------------------- measure

void write_measure(std::ostream& out, const BoundaryMeasure& mu) {
    const Tree& tree = mu.tree();
    out << "MEASURE " << tree.depth_cap() << '\n';
    std::vector<int> order = tree.leaves();
    std::sort(order.begin(), order.end());
    for (int leaf : order)
        out << leaf << ' ' << format_double(mu.mass(leaf).real()) << ' '
            << format_double(mu.mass(leaf).imag()) << '\n';
}

BoundaryMeasure read_measure(std::istream& in, const Tree& tree) {
    const auto header = split_line(next_line(in, "measure file"));
    if (header.size() != 2 || header[0] != "MEASURE") throw DomainError("bad measure header");
    if (parse_long(header[1]) != tree.depth_cap())
        throw DomainError("measure depth does not match the tree");
    std::vector<int> order = tree.leaves();
    std::sort(order.begin(), order.end());
    std::map<int, Complex> masses;
    for (int leaf : order) {
        const auto toks = split_line(next_line(in, "measure file"));
        if (toks.size() != 3) throw DomainError("bad measure line");
        if (parse_long(toks[0]) != leaf)
            throw DomainError("measure lines must list leaves in increasing id order");
        masses[leaf] = Complex{parse_double(toks[1]), parse_double(toks[2])};
    }
    return BoundaryMeasure::from_leaf_masses(tree, masses);
}

// ----------------------------------------------------------- vertex function

void write_vertex_function(std::ostream& out, const VertexFunction& f) {
    out << "VFUN " << f.size() << '\n';
    for (int v = 0; v < f.size(); ++v)
        out << v << ' ' << format_double(f[v].real()) << ' ' << format_double(f[v].imag())
            << '\n';
}

VertexFunction read_vertex_function(std::istream& in, const Tree& tree) {
    const auto header = split_line(next_line(in, "vfun file"));
    if (header.size() != 2 || header[0] != "VFUN") throw DomainError("bad vfun header");
    if (parse_long(header[1]) != tree.vertex_count())
        throw DomainError("vfun size does not match the tree");
    std::vector<Complex> vals(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) {
        const auto toks = split_line(next_line(in, "vfun file"));
        if (toks.size() != 3) throw DomainError("bad vfun line");
        if (parse_long(toks[0]) != v)
            throw DomainError("vfun lines must list vertices 0..n-1 in order");
        vals[v] = Complex{parse_double(toks[1]), parse_double(toks[2])};
    }
    return VertexFunction(tree, std::move(vals));
}

// ---------------------------------------------------------------- file layer

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return in;
}

}  // namespace

void write_text_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write '" + tmp + "'");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw DomainError("write failed for '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DomainError("cannot move output into place at '" + path + "'");
    }
}

Tree read_tree_file(const std::string& path) {
    auto in = open_input(path);
    return read_tree(in);
}

void write_tree_file(const std::string& path, const Tree& tree) {
    std::ostringstream out;
    write_tree(out, tree);
    write_text_file_atomic(path, out.str());
}

BoundaryMeasure read_measure_file(const std::string& path, const Tree& tree) {
    auto in = open_input(path);
    return read_measure(in, tree);
}

void write_measure_file(const std::string& path, const BoundaryMeasure& mu) {
    std::ostringstream out;
    write_measure(out, mu);
    write_text_file_atomic(path, out.str());
}

VertexFunction read_vertex_function_file(const std::string& path, const Tree& tree) {
    auto in = open_input(path);
    return read_vertex_function(in, tree);
}

void write_vertex_function_file(const std::string& path, const VertexFunction& f) {
    std::ostringstream out;
    write_vertex_function(out, f);
    write_text_file_atomic(path, out.str());
}

}  // namespace treepoisson
