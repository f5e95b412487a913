#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricfan/building_set.hpp"
#include "toricfan/chern2.hpp"
#include "toricfan/criteria.hpp"
#include "toricfan/enumerate.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/polytope.hpp"
#include "toricfan/root_system.hpp"

namespace toricfan {

using Json = nlohmann::json;

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace detail {

inline bool looks_like_json(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

inline Json parse_json(const std::string& content) {
    try {
        return Json::parse(content);
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
}

inline std::vector<std::vector<Int>> number_lines(const std::string& content) {
    std::vector<std::vector<Int>> lines;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> nums;
        std::string tok;
        while (ls >> tok) {
            try {
                size_t used = 0;
                nums.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw IoError("expected a number, got '" + tok + "'");
            }
        }
        if (!nums.empty()) lines.push_back(std::move(nums));
    }
    return lines;
}

inline Mask mask_from_elements(const std::vector<Int>& elems) {
    Mask m = 0;
    for (Int e : elems) {
        if (e < 1 || e > kMaxGroundSize)
            throw IoError("element " + std::to_string(e) + " out of range");
        m |= Mask(1) << (e - 1);
    }
    return m;
}

inline std::vector<Int> elements_1based(Mask m) {
    std::vector<Int> out;
    for (int e : elements_of(m)) out.push_back(e + 1);
    return out;
}

template <class T>
T get_field(const Json& j, const char* name) {
    try {
        return j.at(name).get<T>();
    } catch (const Json::exception& e) {
        throw IoError(std::string("field '") + name + "': " + e.what());
    }
}

}  // namespace detail

// -- building sets ----------------------------------------------------------------

inline BuildingSet parse_building_set(const std::string& content) {
    std::vector<std::vector<Int>> raw;
    int ground_size = 0;
    if (detail::looks_like_json(content)) {
        Json j = detail::parse_json(content);
        ground_size = detail::get_field<int>(j, "ground_set");
        raw = detail::get_field<std::vector<std::vector<Int>>>(j, "sets");
    } else {
        raw = detail::number_lines(content);
        for (const auto& line : raw)
            for (Int e : line) ground_size = std::max<int>(ground_size, static_cast<int>(e));
    }
    if (ground_size < 1 || ground_size > kMaxGroundSize)
        throw IoError("ground set size " + std::to_string(ground_size) + " out of range");
    std::vector<Mask> family;
    for (const auto& line : raw) family.push_back(detail::mask_from_elements(line));
    return make_building_set(full_mask(ground_size), std::move(family));
}

inline Json building_set_to_json(const BuildingSet& b) {
    Json sets = Json::array();
    for (Mask m : b.sets) sets.push_back(detail::elements_1based(m));
    return Json{{"ground_set", popcount(b.ground)}, {"sets", sets}};
}

// -- graphs -----------------------------------------------------------------------

inline SimpleGraph parse_graph(const std::string& content) {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    if (detail::looks_like_json(content)) {
        Json j = detail::parse_json(content);
        nodes = detail::get_field<int>(j, "nodes");
        for (const auto& e : detail::get_field<std::vector<std::vector<Int>>>(j, "edges")) {
            if (e.size() != 2) throw IoError("edge must have two endpoints");
            edges.emplace_back(static_cast<int>(e[0]) - 1, static_cast<int>(e[1]) - 1);
        }
    } else {
        std::vector<std::vector<Int>> lines = detail::number_lines(content);
        size_t start = 0;
        if (!lines.empty() && lines[0].size() == 1) {
            nodes = static_cast<int>(lines[0][0]);
            start = 1;
        }
        for (size_t i = start; i < lines.size(); ++i) {
            if (lines[i].size() != 2) throw IoError("edge line must have two endpoints");
            edges.emplace_back(static_cast<int>(lines[i][0]) - 1,
                               static_cast<int>(lines[i][1]) - 1);
            nodes = std::max<int>(nodes, static_cast<int>(std::max(lines[i][0], lines[i][1])));
        }
    }
    if (nodes < 1) throw IoError("graph needs at least one node");
    return make_graph(nodes, edges);
}

inline Json graph_to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return Json{{"nodes", g.nodes}, {"edges", edges}};
}

// -- fans -------------------------------------------------------------------------

inline Json fan_to_json(const Fan& f) {
    Json j{{"dim", f.dim}, {"rays", f.rays}, {"max_cones", f.max_cones}};
    if (!f.labels.empty()) j["labels"] = f.labels;
    return j;
}

inline Fan parse_fan(const std::string& content) {
    if (!detail::looks_like_json(content)) throw IoError("fan input must be JSON");
    Json j = detail::parse_json(content);
    Fan f;
    f.dim = detail::get_field<int>(j, "dim");
    if (f.dim < 0 || f.dim > 32) throw IoError("fan dimension out of range");
    f.rays = detail::get_field<std::vector<Vec>>(j, "rays");
    f.max_cones = detail::get_field<std::vector<std::vector<int>>>(j, "max_cones");
    if (j.contains("labels")) f.labels = detail::get_field<std::vector<std::string>>(j, "labels");
    for (const Vec& r : f.rays)
        if (r.size() != static_cast<size_t>(f.dim))
            throw IoError("ray " + vec_to_string(r) + " does not match the fan dimension");
    for (auto& cone : f.max_cones) {
        for (int idx : cone)
            if (idx < 0 || idx >= static_cast<int>(f.rays.size()))
                throw IoError("cone ray index " + std::to_string(idx) + " out of range");
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            throw IoError("cone repeats a ray index");
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    if (!f.labels.empty() && f.labels.size() != f.rays.size())
        throw IoError("labels do not match the ray count");
    return f;
}

inline std::string fan_to_text(const Fan& f) {
    std::ostringstream out;
    out << "dim " << f.dim << "\n";
    for (size_t i = 0; i < f.rays.size(); ++i) {
        out << "ray " << i << " " << vec_to_string(f.rays[i]);
        if (i < f.labels.size()) out << " " << f.labels[i];
        out << "\n";
    }
    for (const auto& cone : f.max_cones) {
        out << "cone";
        for (int idx : cone) out << " " << idx;
        out << "\n";
    }
    return out.str();
}

// -- polytopes ---------------------------------------------------------------------

inline Json polytope_to_json(const LatticePolytope& p) {
    return Json{{"dim", p.dim}, {"vertices", p.vertices}};
}

inline LatticePolytope parse_polytope(const std::string& content) {
    if (!detail::looks_like_json(content)) throw IoError("polytope input must be JSON");
    Json j = detail::parse_json(content);
    int dim = detail::get_field<int>(j, "dim");
    std::vector<Vec> vertices = detail::get_field<std::vector<Vec>>(j, "vertices");
    for (const Vec& v : vertices)
        if (v.size() != static_cast<size_t>(dim))
            throw IoError("vertex " + vec_to_string(v) + " does not match the dimension");
    if (vertices.empty()) throw IoError("polytope needs at least one vertex");
    return hull(std::move(vertices));
}

// -- digraphs ----------------------------------------------------------------------

inline DirectedGraph parse_digraph(const std::string& content) {
    DirectedGraph g;
    if (detail::looks_like_json(content)) {
        Json j = detail::parse_json(content);
        g.nodes = detail::get_field<int>(j, "nodes");
        for (const auto& a : detail::get_field<std::vector<std::vector<Int>>>(j, "arrows")) {
            if (a.size() != 2) throw IoError("arrow must have two endpoints");
            g.arrows.emplace_back(static_cast<int>(a[0]) - 1, static_cast<int>(a[1]) - 1);
        }
    } else {
        std::vector<std::vector<Int>> lines = detail::number_lines(content);
        size_t start = 0;
        if (!lines.empty() && lines[0].size() == 1) {
            g.nodes = static_cast<int>(lines[0][0]);
            start = 1;
        }
        for (size_t i = start; i < lines.size(); ++i) {
            if (lines[i].size() != 2) throw IoError("arrow line must have two endpoints");
            g.arrows.emplace_back(static_cast<int>(lines[i][0]) - 1,
                                  static_cast<int>(lines[i][1]) - 1);
            g.nodes = std::max<int>(g.nodes, static_cast<int>(std::max(lines[i][0], lines[i][1])));
        }
    }
    if (g.nodes < 1) throw IoError("digraph needs at least one node");
    for (auto [a, b] : g.arrows)
        if (a < 0 || b < 0 || a >= g.nodes || b >= g.nodes || a == b)
            throw IoError("invalid arrow (" + std::to_string(a + 1) + "," +
                          std::to_string(b + 1) + ")");
    return g;
}

inline Json digraph_to_json(const DirectedGraph& g) {
    Json arrows = Json::array();
    for (auto [a, b] : g.arrows) arrows.push_back({a + 1, b + 1});
    return Json{{"nodes", g.nodes}, {"arrows", arrows}};
}

// -- root data ---------------------------------------------------------------------

inline RootDatum parse_root_datum(const std::string& content) {
    if (!detail::looks_like_json(content)) {
        std::string name;
        for (char c : content)
            if (!std::isspace(static_cast<unsigned char>(c))) name += c;
        return named_root_datum(name);
    }
    Json j = detail::parse_json(content);
    return root_datum_from_cartan(detail::get_field<IntMatrix>(j, "cartan"));
}

// -- classification and reports ------------------------------------------------------

inline Json classification_to_json(const Classification& c) {
    return Json{{"fano", c.fano}, {"weak_fano", c.weak_fano}, {"witness", c.witness}};
}

inline Json two_fano_to_json(const TwoFanoResult& r) {
    Json j{{"two_fano", r.two_fano}};
    if (r.has_witness) {
        j["witness_tau"] = r.witness_tau;
        Json labels = Json::array();
        for (int idx : r.witness_tau)
            if (static_cast<size_t>(idx) < r.scanned.labels.size())
                labels.push_back(r.scanned.labels[static_cast<size_t>(idx)]);
        j["witness_labels"] = labels;
        j["ch2_dot_s"] = r.ch2.to_string();
    }
    return j;
}

inline Json report_to_json(const EnumerationReport& r) {
    Json rows = Json::array();
    for (const ReportRow& row : r.rows)
        rows.push_back(Json{{"param", row.param}, {"total", row.total}, {"positive", row.positive}});
    return Json{{"rows", rows}};
}

inline std::string report_to_text(const EnumerationReport& r, const std::string& param_label,
                                  const std::string& total_label,
                                  const std::string& positive_label) {
    size_t width = std::max({param_label.size(), total_label.size(), positive_label.size()});
    std::ostringstream out;
    auto emit = [&](const std::string& label, auto value_of) {
        out << label << std::string(width - label.size(), ' ');
        for (const ReportRow& x : r.rows) {
            std::string v = std::to_string(value_of(x));
            out << std::string(v.size() >= 7 ? 1 : 7 - v.size(), ' ') << v;
        }
        out << "\n";
    };
    emit(param_label, [](const ReportRow& x) { return static_cast<long long>(x.param); });
    emit(total_label, [](const ReportRow& x) { return x.total; });
    emit(positive_label, [](const ReportRow& x) { return x.positive; });
    return out.str();
}

inline Json checkpoint_to_json(const Table2Checkpoint& c) {
    Json rows = Json::array();
    for (const ReportRow& row : c.rows_done)
        rows.push_back(Json{{"param", row.param}, {"total", row.total}, {"positive", row.positive}});
    return Json{{"rows_done", rows},
                {"current_dim", c.current_dim},
                {"combos_done", c.combos_done},
                {"forms", c.forms}};
}

inline Table2Checkpoint checkpoint_from_json(const Json& j) {
    Table2Checkpoint c;
    for (const Json& row : j.at("rows_done")) {
        ReportRow r;
        r.param = detail::get_field<int>(row, "param");
        r.total = detail::get_field<long long>(row, "total");
        r.positive = detail::get_field<long long>(row, "positive");
        c.rows_done.push_back(r);
    }
    c.current_dim = detail::get_field<int>(j, "current_dim");
    c.combos_done = detail::get_field<size_t>(j, "combos_done");
    c.forms = detail::get_field<std::vector<std::string>>(j, "forms");
    return c;
}

}  // namespace toricfan
