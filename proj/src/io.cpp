#include "ecc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ecc {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::vector<long long> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        if (std::isspace(static_cast<unsigned char>(*p))) { ++p; continue; }
        long long value = 0;
        auto [next, err] = std::from_chars(p, end, value);
        if (err != std::errc{} || (next != end && !std::isspace(static_cast<unsigned char>(*next))))
            throw ParseError(line_no, "expected integer, got '" +
                                          std::string(p, next == p ? next + 1 : next) + "'");
        out.push_back(value);
        p = next;
    }
    return out;
}

}  // namespace

EdgeColoredHypergraph read_hypergraph(std::istream& in) {
    std::string line;
    int line_no = 0;

    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_blank_or_comment(line)) return true;
        }
        return false;
    };

    if (!next_data_line()) throw ParseError(line_no, "missing header 'n m k'");
    auto header = parse_ints(line, line_no);
    if (header.size() != 3)
        throw ParseError(line_no, "header must be 'n m k', got " +
                                      std::to_string(header.size()) + " fields");
    const long long n = header[0], m = header[1], k = header[2];
    if (n < 0 || m < 0 || k < 0) throw ParseError(line_no, "negative header field");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<int> edge_line;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line())
            throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                          std::to_string(i));
        auto fields = parse_ints(line, line_no);
        if (fields.size() < 2)
            throw ParseError(line_no, "edge needs a color and at least one node");
        Edge e;
        e.color = static_cast<ColorId>(fields[0]);
        for (size_t j = 1; j < fields.size(); ++j)
            e.members.push_back(static_cast<NodeId>(fields[j]));
        edges.push_back(std::move(e));
        edge_line.push_back(line_no);
    }
    if (next_data_line()) throw ParseError(line_no, "unexpected data after last edge");

    try {
        return build_hypergraph(std::move(edges), static_cast<int>(n), static_cast<int>(k));
    } catch (const InvalidInstance& err) {
        // map "edge <i>: ..." back to the source line
        std::string msg = err.what();
        for (size_t i = 0; i < edge_line.size(); ++i) {
            const std::string tag = "edge " + std::to_string(i + 1) + ": ";
            if (msg.rfind(tag, 0) == 0) throw ParseError(edge_line[i], msg.substr(tag.size()));
        }
        throw ParseError(0, msg);
    }
}

EdgeColoredHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const EdgeColoredHypergraph& h) {
    out << h.num_nodes() << ' ' << h.num_edges() << ' ' << h.num_colors() << '\n';
    for (EdgeId e = 1; e <= h.num_edges(); ++e) {
        const Edge& edge = h.edge(e);
        out << edge.color;
        for (NodeId v : edge.members) out << ' ' << v;
        out << '\n';
    }
}

nlohmann::ordered_json assignment_json(const Variant& variant, const ColorAssignment& a,
                                       const EvaluationReport& report) {
    nlohmann::ordered_json j;
    j["variant"] = variant_name(variant.kind);
    j["budget"] = variant.budget;
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (NodeId v = 1; v <= a.num_nodes(); ++v) {
        if (a.is_deleted(v)) continue;
        colors[std::to_string(v)] = a.colors[v];
    }
    j["colors"] = std::move(colors);
    j["deleted"] = a.deleted;
    j["mistakes"] = report.mistakes;
    j["satisfied"] = report.satisfied;
    j["budget_used"] = report.budget_used;
    return j;
}

ColorAssignment assignment_from_json(const nlohmann::json& j, int num_nodes) {
    ColorAssignment a(num_nodes);
    for (const auto& [key, value] : j.at("colors").items()) {
        NodeId v = std::stoi(key);
        for (const auto& c : value) a.add_color(v, c.get<ColorId>());
    }
    for (const auto& v : j.at("deleted")) a.deleted.push_back(v.get<NodeId>());
    std::sort(a.deleted.begin(), a.deleted.end());
    return a;
}

}  // namespace ecc
