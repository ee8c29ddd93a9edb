#include "gsamp/edge_list.hpp"

#include "gsamp/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gsamp {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void parse_failure(std::size_t line_no, const std::string& what)
{
    fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(std::string_view field, std::size_t line_no)
{
    std::size_t value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        parse_failure(line_no, "expected a vertex index, got '" + std::string(field) + "'");
    }
    return value;
}

double parse_real(std::string_view field, std::size_t line_no)
{
    // std::from_chars for double is not available on every toolchain we target.
    const std::string text(field);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        parse_failure(line_no, "expected a number, got '" + text + "'");
    }
    if (text.empty() || consumed != text.size() || !std::isfinite(value)) {
        parse_failure(line_no, "expected a number, got '" + text + "'");
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::io_error, "cannot open " + path.string());
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in)
{
    std::map<std::pair<std::size_t, std::size_t>, double> edges;
    std::size_t declared_vertices = 0;
    std::size_t max_index = 0;
    bool any_edge = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            constexpr std::string_view key = "vertices=";
            if (const auto pos = line.find(key); pos != std::string_view::npos) {
                declared_vertices = parse_index(trim(line.substr(pos + key.size())), line_no);
            }
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            parse_failure(line_no, "expected 'src,dst,weight'");
        }
        const std::size_t src = parse_index(fields[0], line_no);
        const std::size_t dst = parse_index(fields[1], line_no);
        const double w = parse_real(fields[2], line_no);
        if (src == dst) {
            fail(ErrorKind::data_error, "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(src));
        }
        if (w < 0.0) {
            fail(ErrorKind::data_error, "line " + std::to_string(line_no) + ": negative weight");
        }
        const auto key = std::minmax(src, dst);
        if (auto it = edges.find(key); it != edges.end()) {
            if (it->second != w) {
                fail(ErrorKind::data_error, "line " + std::to_string(line_no) + ": edge (" + std::to_string(key.first) +
                                                "," + std::to_string(key.second) + ") repeated with a different weight");
            }
            continue;
        }
        edges.emplace(key, w);
        max_index = std::max(max_index, key.second);
        any_edge = true;
    }
    if (!any_edge && declared_vertices == 0) {
        fail(ErrorKind::data_error, "edge list is empty");
    }
    const std::size_t n = std::max(declared_vertices, any_edge ? max_index + 1 : 0);
    if (declared_vertices != 0 && max_index >= declared_vertices) {
        fail(ErrorKind::data_error, "vertex index exceeds declared vertex count");
    }

    const auto nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nn, nn);
    for (const auto& [key, w] : edges) {
        const auto i = static_cast<Eigen::Index>(key.first);
        const auto j = static_cast<Eigen::Index>(key.second);
        a(i, j) = w;
        a(j, i) = w;
    }
    return Graph(std::move(a));
}

Graph load_edge_list(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& graph, std::ostream& out)
{
    out << "# vertices=" << graph.size() << '\n';
    out.precision(17);
    const auto n = static_cast<Eigen::Index>(graph.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double w = graph.adjacency()(i, j);
            if (w > 0.0) {
                out << i << ',' << j << ',' << w << '\n';
            }
        }
    }
}

void save_edge_list(const Graph& graph, const std::filesystem::path& path)
{
    auto out = open_output(path);
    write_edge_list(graph, out);
    if (!out) {
        fail(ErrorKind::io_error, "write failed for " + path.string());
    }
}

Eigen::MatrixXd read_coordinates(std::istream& in, std::size_t vertex_count)
{
    const auto n = static_cast<Eigen::Index>(vertex_count);
    Eigen::MatrixXd xy = Eigen::MatrixXd::Zero(n, 2);
    std::vector<bool> seen(vertex_count, false);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            parse_failure(line_no, "expected 'vertex,x,y'");
        }
        const std::size_t v = parse_index(fields[0], line_no);
        if (v >= vertex_count || seen[v]) {
            fail(ErrorKind::data_error, "line " + std::to_string(line_no) + ": vertex out of range or repeated");
        }
        seen[v] = true;
        xy(static_cast<Eigen::Index>(v), 0) = parse_real(fields[1], line_no);
        xy(static_cast<Eigen::Index>(v), 1) = parse_real(fields[2], line_no);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        if (!seen[v]) {
            fail(ErrorKind::data_error, "missing coordinates for vertex " + std::to_string(v));
        }
    }
    return xy;
}

Eigen::MatrixXd load_coordinates(const std::filesystem::path& path, std::size_t vertex_count)
{
    auto in = open_input(path);
    return read_coordinates(in, vertex_count);
}

void save_coordinates(const Eigen::MatrixXd& coordinates, const std::filesystem::path& path)
{
    require(coordinates.cols() >= 2, "coordinates need two columns");
    auto out = open_output(path);
    out.precision(17);
    out << "# vertex,x,y\n";
    for (Eigen::Index v = 0; v < coordinates.rows(); ++v) {
        out << v << ',' << coordinates(v, 0) << ',' << coordinates(v, 1) << '\n';
    }
}

}  // namespace gsamp
