#include "dmat/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace dmat {

namespace {

std::string_view trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Non-blank lines with surrounding whitespace removed.
std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

int parse_int(std::string_view s, const char* what) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError(std::string("expected an integer for ") + what + ", got '" + std::string(s) +
                         "'");
    return value;
}

std::string element_list(SubsetMask a) {
    if (a == 0)
        return "-";
    std::string out;
    for (int e = 0; a; ++e, a >>= 1)
        if (a & 1u) {
            if (!out.empty())
                out += ',';
            out += std::to_string(e);
        }
    return out;
}

}  // namespace

SetSystem parse_dm(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.size() < 2)
        throw InputError(".dm input needs a size line and a count line");
    int n = parse_int(lines[0], "ground set size");
    if (n < 0 || n > kMaxStructuralSize)
        throw InputError("ground set size " + std::to_string(n) + " is out of range");
    int k = parse_int(lines[1], "feasible set count");
    if (k <= 0)
        throw InputError("a delta-matroid file must list at least one feasible set");
    if (static_cast<int>(lines.size()) - 2 != k)
        throw InputError("expected " + std::to_string(k) + " feasible set lines, got " +
                         std::to_string(lines.size() - 2));

    std::vector<SubsetMask> fam;
    for (int i = 0; i < k; ++i) {
        std::string_view line = lines[2 + i];
        SubsetMask mask = 0;
        if (line != "-") {
            int prev = -1;
            while (true) {
                auto comma = line.find(',');
                int e = parse_int(line.substr(0, comma), "element index");
                if (e < 0 || e >= n)
                    throw InputError("element " + std::to_string(e) + " is outside the ground set of size " +
                                     std::to_string(n));
                if (e <= prev)
                    throw InputError("elements must be listed in strictly ascending order");
                prev = e;
                mask |= SubsetMask{1} << e;
                if (comma == std::string_view::npos)
                    break;
                line.remove_prefix(comma + 1);
            }
        }
        fam.push_back(mask);
    }
    return SetSystem(n, std::move(fam));
}

std::string format_dm(const SetSystem& s) {
    std::string out = std::to_string(s.size()) + "\n" + std::to_string(s.count()) + "\n";
    for (SubsetMask f : s.feasible())
        out += element_list(f) + "\n";
    return out;
}

SymMatrixGF2 parse_gf2(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw InputError(".gf2 input is empty");
    int n = parse_int(lines[0], "matrix dimension");
    if (n < 0 || n > kMaxStructuralSize)
        throw InputError("matrix dimension " + std::to_string(n) + " is out of range");
    if (static_cast<int>(lines.size()) - 1 != n)
        throw InputError("expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(lines.size() - 1));
    std::vector<SubsetMask> rows(n, 0);
    for (int u = 0; u < n; ++u) {
        std::string_view row = lines[1 + u];
        if (static_cast<int>(row.size()) != n)
            throw InputError("row " + std::to_string(u) + " must have " + std::to_string(n) + " entries");
        for (int v = 0; v < n; ++v) {
            if (row[v] == '1')
                rows[u] |= SubsetMask{1} << v;
            else if (row[v] != '0')
                throw InputError("matrix entries must be 0 or 1");
        }
    }
    return SymMatrixGF2(n, std::move(rows));
}

std::string format_gf2(const SymMatrixGF2& c) {
    std::string out = std::to_string(c.size()) + "\n";
    for (int u = 0; u < c.size(); ++u) {
        for (int v = 0; v < c.size(); ++v)
            out += c.get(u, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

IntersectionGraph parse_graph(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw InputError(".graph input is empty");
    int n = parse_int(lines[0], "vertex count");
    if (n < 0 || n > kMaxStructuralSize)
        throw InputError("vertex count " + std::to_string(n) + " is out of range");
    SymMatrixGF2 adj(n);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in{std::string(lines[i])};
        std::string a, b, extra;
        if (!(in >> a >> b) || (in >> extra))
            throw InputError("edge lines must have the form 'u v'");
        int u = parse_int(a, "vertex"), v = parse_int(b, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint outside 0.." + std::to_string(n - 1));
        if (!seen.insert(std::minmax(u, v)).second)
            throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj.set(u, v, true);
    }
    return {adj};
}

std::string format_graph(const IntersectionGraph& g) {
    const SymMatrixGF2& adj = g.adjacency;
    std::string out = std::to_string(adj.size()) + "\n";
    for (int u = 0; u < adj.size(); ++u)
        for (int v = u; v < adj.size(); ++v)
            if (adj.get(u, v))
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace dmat
