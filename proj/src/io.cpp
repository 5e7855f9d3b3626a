#include <gridbc/io.hpp>

#include <gridbc/theory.hpp>

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

using nlohmann::json;
using std::string;

namespace gridbc {

namespace {
    auto vertex_json(Vertex v) -> json { return json::array({v.col, v.row}); }

    auto edge_json(const Edge & e) -> json { return json::array({vertex_json(e.a), vertex_json(e.b)}); }

    auto edges_json(const Grid & grid, const EdgeSet & s) -> json
    {
        auto out = json::array();
        for (auto i = s.find_first(); i != EdgeSet::npos; i = s.find_next(i))
            out.push_back(edge_json(grid.edge_at(i)));
        return out;
    }

    auto parse_int(const json & j, const char * what) -> int
    {
        if (! j.is_number_integer())
            throw ParseError(string(what) + " must be an integer");
        auto v = j.get<long long>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw ParseError(string(what) + " out of range");
        return static_cast<int>(v);
    }

    auto parse_vertex(const json & j, const char * what) -> Vertex
    {
        if (! j.is_array() || j.size() != 2)
            throw ParseError(string(what) + " must be a [col, row] pair");
        return {parse_int(j[0], what), parse_int(j[1], what)};
    }

    auto field(const json & j, const char * key) -> const json &
    {
        auto it = j.find(key);
        if (it == j.end())
            throw ParseError(string("missing field \"") + key + "\"");
        return *it;
    }
}

auto cover_to_json(const Cover & cover) -> json
{
    auto elements = json::array();
    for (const auto & b : cover) {
        if (b.is_cycle()) {
            elements.push_back({{"kind", "cycle"}, {"anchor", vertex_json(b.anchor())}});
            continue;
        }
        auto leaves = json::array();
        for (auto v : b.leaves())
            leaves.push_back(vertex_json(v));
        elements.push_back({{"kind", "star"}, {"center", vertex_json(b.center())}, {"leaves", leaves}});
    }
    return {{"p", cover.dims().p}, {"q", cover.dims().q}, {"bicliques", elements}};
}

auto cover_from_json(const json & j) -> Cover
{
    if (! j.is_object())
        throw ParseError("cover must be a JSON object");
    GridDims dims{parse_int(field(j, "p"), "p"), parse_int(field(j, "q"), "q")};
    if (dims.p < 1 || dims.q < 1)
        throw ParseError("p and q must be positive");

    const auto & list = field(j, "bicliques");
    if (! list.is_array())
        throw ParseError("\"bicliques\" must be an array");

    std::vector<Biclique> elements;
    for (const auto & item : list) {
        if (! item.is_object())
            throw ParseError("biclique must be an object");
        const auto & kind = field(item, "kind");
        if (kind == "cycle")
            elements.push_back(Biclique::cycle(parse_vertex(field(item, "anchor"), "anchor")));
        else if (kind == "star") {
            const auto & leaves = field(item, "leaves");
            if (! leaves.is_array())
                throw ParseError("\"leaves\" must be an array");
            std::vector<Vertex> vs;
            for (const auto & l : leaves)
                vs.push_back(parse_vertex(l, "leaf"));
            try {
                elements.push_back(Biclique::star(parse_vertex(field(item, "center"), "center"), std::move(vs)));
            }
            catch (const std::invalid_argument & e) {
                throw ParseError(e.what());
            }
        }
        else
            throw ParseError("unknown biclique kind " + kind.dump());
    }
    try {
        return Cover(dims, std::move(elements));
    }
    catch (const std::invalid_argument & e) {
        throw ParseError(e.what());
    }
}

auto write_cover(const Cover & cover) -> string
{
    return cover_to_json(cover).dump(2) + "\n";
}

auto read_cover(const string & text) -> Cover
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw ParseError(e.what());
    }
    return cover_from_json(j);
}

auto load_cover_file(const string & path) -> Cover
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_cover(buf.str());
}

auto save_text_file(const string & path, const string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (! out)
        throw std::runtime_error("write failed: " + path);
}

auto report_to_json(const CoverReport & report) -> json
{
    auto uncovered = json::array();
    for (const auto & e : report.uncovered)
        uncovered.push_back(edge_json(e));
    auto invalid = json::array();
    for (const auto & bad : report.invalid_elements)
        invalid.push_back({{"index", bad.index}, {"reason", bad.reason}});
    auto mult = json::object();
    for (auto [i, count] : report.multiplicities)
        mult[std::to_string(i)] = count;
    return {{"valid", report.valid},
            {"dims_match", report.dims_match},
            {"size", report.size},
            {"num_edges", report.num_edges},
            {"waste", report.waste},
            {"tau", report.tau},
            {"multiplicities", mult},
            {"uncovered", uncovered},
            {"invalid_elements", invalid}};
}

auto analysis_to_json(const Grid & grid, const BoundaryAnalysis & a) -> json
{
    auto fences = json::array();
    for (const auto & f : a.fences) {
        auto anchors = json::array();
        for (const auto & c : f.cycles)
            anchors.push_back(vertex_json(c.anchor()));
        fences.push_back({{"size", f.size()}, {"anchors", anchors}, {"shared_edges", edges_json(grid, f.shared)}});
    }
    auto links = json::array();
    for (const auto & l : a.links)
        links.push_back({{"side", side_name(l.side)},
                         {"length", l.length()},
                         {"start", vertex_json(l.start)},
                         {"end", vertex_json(l.end)}});
    auto b = json::object();
    for (auto [i, count] : a.b)
        b[std::to_string(i)] = count;
    auto unlinked = json::array();
    for (const auto & e : a.unlinked_out_edges)
        unlinked.push_back(edge_json(e));
    return {{"boundary_stars", a.boundary_stars.size()},
            {"boundary_cycles", a.boundary_cycles.size()},
            {"fences", fences},
            {"links", links},
            {"b", b},
            {"beta", a.beta},
            {"c", a.c},
            {"N", a.N},
            {"unlinked_out_edges", unlinked}};
}

auto classification_to_json(const Grid & grid, const StaircaseClassification & cls) -> json
{
    auto staircases = json::array();
    for (std::size_t i = 0; i < cls.staircases.size(); ++i) {
        const auto & s = cls.staircases[i];
        staircases.push_back({{"side", side_name(s.link.side)},
                              {"length", s.length()},
                              {"depth", s.depth},
                              {"truncated", s.truncated},
                              {"thick_edges", edges_json(grid, cls.thick_in[i])}});
    }
    auto pyramids = json::array();
    for (const auto & py : cls.pyramids)
        pyramids.push_back({{"staircase", py.staircase}, {"tip", py.tip}});
    auto doubles = json::array();
    for (const auto & d : cls.doubles)
        doubles.push_back({{"staircases", json::array({d.first, d.second})},
                           {"thick_edge", edge_json(grid.edge_at(d.thick_edge))},
                           {"lengths_fit", d.lengths_fit}});
    return {{"staircases", staircases},
            {"pyramids", pyramids},
            {"doubles", doubles},
            {"unclassified", cls.unclassified},
            {"n", cls.n},
            {"m", cls.m}};
}

auto waste_identity_to_json(const WasteIdentity & w) -> json
{
    return {{"w", w.w},
            {"tau", w.tau},
            {"beta", w.beta},
            {"twice_beta_plus_tau", w.lhs2},
            {"twice_boundary_count", w.rhs2},
            {"b_N", w.b_N},
            {"identity_holds", w.identity_holds},
            {"inequality_holds", w.inequality_holds},
            {"beta_matches_fences", w.beta_matches_fences}};
}

auto bc_table_csv(int pmax, int qmax, bool mark_branch) -> string
{
    if (pmax < 1 || qmax < 1)
        throw std::invalid_argument("table bounds must be positive");
    string out;
    for (int p = 1; p <= pmax; ++p) {
        if (p > qmax)
            break;
        for (int q = p; q <= qmax; ++q) {
            if (q > p)
                out += ',';
            out += std::to_string(bc_value(p, q));
            if (mark_branch && drops_below_half(p, q))
                out += '*';
        }
        out += '\n';
    }
    return out;
}

namespace {
    constexpr int step = 32;
    constexpr int margin = 16;

    struct Canvas
    {
        int p;

        [[nodiscard]] auto x(Vertex v) const -> int { return margin + (v.col - 1) * step; }
        [[nodiscard]] auto y(Vertex v) const -> int { return margin + (p - v.row) * step; }
    };

    auto line(std::ostringstream & out, const Canvas & cv, Vertex a, Vertex b, const char * cls) -> void
    {
        out << "<line class=\"" << cls << "\" x1=\"" << cv.x(a) << "\" y1=\"" << cv.y(a) << "\" x2=\"" << cv.x(b)
            << "\" y2=\"" << cv.y(b) << "\"/>\n";
    }
}

auto render_svg(const Cover & cover) -> string
{
    const int p = cover.dims().p, q = cover.dims().q;
    Grid grid(cover.dims());
    Canvas cv{p};
    const int width = 2 * margin + (q - 1) * step;
    const int height = 2 * margin + (p - 1) * step;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<style>\n"
           ".grid{stroke:#d0d0d0;stroke-width:2}\n"
           ".cycle{fill:#6baed6;fill-opacity:0.45;stroke:#2171b5;stroke-width:2}\n"
           ".star line{stroke:#222222;stroke-width:4;stroke-linecap:round}\n"
           ".star circle{fill:#222222}\n"
           ".thick{stroke:#d62728;stroke-width:4}\n"
           "</style>\n";

    out << "<g id=\"grid\">\n";
    for (std::size_t i = 0; i < grid.num_edges(); ++i) {
        auto e = grid.edge_at(i);
        line(out, cv, e.a, e.b, "grid");
    }
    out << "</g>\n";

    for (const auto & b : cover) {
        if (! b.is_cycle() || validate(grid, b))
            continue;
        Vertex top_left{b.anchor().col, b.anchor().row + 1};
        out << "<rect class=\"cycle\" x=\"" << cv.x(top_left) << "\" y=\"" << cv.y(top_left) << "\" width=\"" << step
            << "\" height=\"" << step << "\"/>\n";
    }
    for (const auto & b : cover) {
        if (! b.is_star() || validate(grid, b))
            continue;
        out << "<g class=\"star\">\n";
        for (auto leaf : b.leaves())
            line(out, cv, b.center(), leaf, "arm");
        out << "<circle cx=\"" << cv.x(b.center()) << "\" cy=\"" << cv.y(b.center()) << "\" r=\"6\"/>\n</g>\n";
    }

    auto thick = thick_edges(grid, cover);
    for (auto i = thick.find_first(); i != EdgeSet::npos; i = thick.find_next(i)) {
        auto e = grid.edge_at(i);
        line(out, cv, e.a, e.b, "thick");
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace gridbc
