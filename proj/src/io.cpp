#include <dpcolor/io.hpp>

#include <dpcolor/error.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace dpcolor::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(const std::string& tok, const std::string& context) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        parse_fail("expected a nonnegative integer in " + context + ", got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        parse_fail("integer out of range in " + context);
    }
}

Hypergraph parse_json_hypergraph(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        parse_fail("hypergraph JSON needs fields \"n\" and \"edges\"");
    if (!j["n"].is_number_unsigned()) parse_fail("\"n\" must be a nonnegative integer");
    if (!j["edges"].is_array()) parse_fail("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array()) parse_fail("each edge must be an array of vertex ids");
        Edge edge;
        for (const Json& v : e) {
            if (!v.is_number_unsigned()) parse_fail("vertex ids must be nonnegative integers");
            edge.push_back(v.get<Vertex>());
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph::validate(j["n"].get<std::size_t>(), std::move(edges));
}

Hypergraph parse_terse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::string ctx = "line " + std::to_string(lineno);
        if (t.rfind("n=", 0) == 0) {
            if (n) parse_fail("duplicate n= at " + ctx);
            n = parse_uint(trim(t.substr(2)), ctx);
        } else if (t.rfind("e=", 0) == 0) {
            std::istringstream toks(t.substr(2));
            std::string tok;
            Edge e;
            while (toks >> tok) e.push_back(static_cast<Vertex>(parse_uint(tok, ctx)));
            edges.push_back(std::move(e));
        } else {
            parse_fail("unrecognized " + ctx + ": '" + t + "'");
        }
    }
    if (!n) parse_fail("missing n= line");
    return Hypergraph::validate(*n, std::move(edges));
}

Json big_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

std::vector<Color> perm_from_json(const Json& j, unsigned k) {
    if (!j.is_array() || j.size() != k) parse_fail("permutation must be an array of k entries");
    std::vector<Color> img;
    for (const Json& x : j) {
        if (!x.is_number_unsigned() || x.get<unsigned>() < 1 || x.get<unsigned>() > k)
            parse_fail("permutation entries must be colors in 1..k");
        img.push_back(x.get<unsigned>() - 1);
    }
    return img;
}

Json perm_to_json(const Permutation& p) {
    Json arr = Json::array();
    for (Color c : p.images()) arr.push_back(c + 1);
    return arr;
}

unsigned read_k(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_unsigned()) parse_fail("cover JSON needs \"k\"");
    return j["k"].get<unsigned>();
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    const std::string t = trim(text);
    if (t.empty()) parse_fail("empty hypergraph input");
    return t[0] == '{' ? parse_json_hypergraph(t) : parse_terse_hypergraph(t);
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_hypergraph(ss.str());
}

Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const Edge& e : h.edges()) edges.push_back(e);
    return Json{{"n", h.vertex_count()}, {"edges", edges}};
}

std::string to_terse(const Hypergraph& h) {
    std::string out = "n=" + std::to_string(h.vertex_count()) + "\n";
    for (const Edge& e : h.edges()) {
        out += "e=";
        for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i]);
        out += "\n";
    }
    return out;
}

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coeffs()) arr.push_back(big_json(c));
    return arr;
}

Json to_json(const BoundaryProfile& p) {
    Json counts = Json::object();
    for (const auto& [tuple, count] : p.counts) {
        std::string key;
        for (std::size_t i = 0; i < tuple.size(); ++i) key += (i ? "," : "") + std::to_string(tuple[i] + 1);
        counts[key] = count.str();
    }
    return Json{{"edge", p.edge}, {"k", p.k}, {"order", p.order}, {"counts", counts}};
}

Json to_json(const TwistCover& c) {
    Json edges = Json::array();
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
        const TwistEdge& te = c.edges[j];
        Json mu = Json::object();
        for (std::size_t i = 0; i < te.mu.size(); ++i)
            if (!te.mu[i].is_identity()) mu[std::to_string(te.order[i + 1])] = perm_to_json(te.mu[i]);
        edges.push_back(Json{{"edge", j}, {"anchor", te.anchor()}, {"mu", mu}});
    }
    return Json{{"k", c.k}, {"edges", edges}};
}

TwistCover twist_from_json(const Hypergraph& h, const Json& j) {
    const unsigned k = read_k(j);
    TwistCover c = natural_cover(h, k);
    if (!j.contains("edges")) return c;
    if (!j["edges"].is_array()) parse_fail("\"edges\" must be an array");
    std::vector<bool> seen(h.edge_count(), false);
    for (const Json& ej : j["edges"]) {
        if (!ej.is_object() || !ej.contains("edge") || !ej["edge"].is_number_unsigned())
            parse_fail("each cover edge needs an \"edge\" index");
        const EdgeIndex idx = ej["edge"].get<EdgeIndex>();
        if (idx >= h.edge_count()) throw Error(ErrorCode::InvalidCover, "cover refers to edge " + std::to_string(idx));
        if (seen[idx]) throw Error(ErrorCode::InvalidCover, "edge " + std::to_string(idx) + " described twice");
        seen[idx] = true;
        const Edge& e = h.edges()[idx];
        Vertex anchor = e.front();
        if (ej.contains("anchor")) {
            if (!ej["anchor"].is_number_unsigned()) parse_fail("\"anchor\" must be a vertex id");
            anchor = ej["anchor"].get<Vertex>();
            if (!std::binary_search(e.begin(), e.end(), anchor))
                throw Error(ErrorCode::InvalidCover, "anchor is not on edge " + std::to_string(idx));
        }
        TwistEdge te;
        te.order.push_back(anchor);
        for (Vertex v : e)
            if (v != anchor) te.order.push_back(v);
        te.mu.assign(te.order.size() - 1, Permutation::identity(k));
        if (ej.contains("mu")) {
            if (!ej["mu"].is_object()) parse_fail("\"mu\" must be an object keyed by vertex id");
            for (const auto& [key, val] : ej["mu"].items()) {
                const Vertex v = static_cast<Vertex>(parse_uint(key, "mu key"));
                const auto it = std::find(te.order.begin() + 1, te.order.end(), v);
                if (it == te.order.end())
                    throw Error(ErrorCode::InvalidCover, "mu given for vertex " + key + " which is not a non-anchor of the edge");
                te.mu[static_cast<std::size_t>(it - te.order.begin()) - 1] = Permutation(perm_from_json(val, k));
            }
        }
        c.edges[idx] = std::move(te);
    }
    return c;
}

Json to_json(const Hypergraph& h, const GeneralCover& f) {
    Json maps = Json::array();
    for (const PartialMap& pm : f.maps) {
        Json colors = Json::array();
        for (Color c : pm.colors) colors.push_back(c + 1);
        const Edge& domain = h.edge(pm.edge);
        maps.push_back(Json{{"domain", domain}, {"colors", colors}});
    }
    return Json{{"k", f.k}, {"maps", maps}};
}

GeneralCover general_from_json(const Hypergraph& h, const Json& j) {
    const unsigned k = read_k(j);
    std::vector<std::pair<std::vector<Vertex>, std::vector<Color>>> raw;
    if (j.contains("maps")) {
        if (!j["maps"].is_array()) parse_fail("\"maps\" must be an array");
        for (const Json& m : j["maps"]) {
            if (!m.is_object() || !m.contains("domain") || !m.contains("colors"))
                parse_fail("each map needs \"domain\" and \"colors\"");
            std::vector<Vertex> dom;
            std::vector<Color> cols;
            for (const Json& v : m["domain"]) {
                if (!v.is_number_unsigned()) parse_fail("domain entries must be vertex ids");
                dom.push_back(v.get<Vertex>());
            }
            for (const Json& c : m["colors"]) {
                if (!c.is_number_unsigned() || c.get<unsigned>() < 1) parse_fail("colors are 1-based integers");
                cols.push_back(c.get<unsigned>() - 1);
            }
            raw.emplace_back(std::move(dom), std::move(cols));
        }
    }
    return general_from_domains(h, k, raw);
}

Json to_json(const DpResult& r) {
    return Json{{"value", r.value.str()},
                {"witness", to_json(r.witness)},
                {"covers_examined", r.covers_examined},
                {"free_slots", r.free_slot_count}};
}

Json to_json(const StructureReport& r) {
    Json j{{"connected", r.connected},
           {"component_count", r.component_count},
           {"linear", r.linear},
           {"incidence_rank", r.incidence_rank},
           {"classification", std::string(to_string(r.classification))}};
    j["uniform_r"] = r.uniform_r ? Json(*r.uniform_r) : Json(nullptr);
    j["cycle_length"] = r.cycle_length ? Json(*r.cycle_length) : Json(nullptr);
    j["cycle_edges"] = r.cycle_edges ? Json(*r.cycle_edges) : Json(nullptr);
    return j;
}

Json to_json(const GenSpec& s) {
    return Json{{"family", std::string(to_string(s.family))}, {"r", s.r}, {"m", s.m},
                {"p", s.p}, {"n", s.n}, {"seed", s.seed}};
}

GenSpec genspec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        parse_fail("generator spec needs a \"family\" string");
    GenSpec s;
    s.family = family_from_string(j["family"].get<std::string>());
    auto field = [&](const char* name, auto& out) {
        if (!j.contains(name)) return;
        if (!j[name].is_number_unsigned()) parse_fail(std::string("\"") + name + "\" must be a nonnegative integer");
        out = j[name].get<std::decay_t<decltype(out)>>();
    };
    field("r", s.r);
    field("m", s.m);
    field("p", s.p);
    field("n", s.n);
    field("seed", s.seed);
    return s;
}

std::string gap_csv(const std::vector<GapRow>& rows) {
    std::string out = "k,P,P_DP,gap,normalized_gap\n";
    for (const GapRow& r : rows)
        out += std::to_string(r.k) + "," + r.p.str() + "," + r.p_dp.str() + "," + r.gap.str() + "," +
               to_fraction(r.normalized_gap) + "\n";
    return out;
}

Json to_json(const std::vector<GapRow>& rows) {
    Json arr = Json::array();
    for (const GapRow& r : rows)
        arr.push_back(Json{{"k", r.k},
                           {"P", r.p.str()},
                           {"P_DP", r.p_dp.str()},
                           {"gap", r.gap.str()},
                           {"normalized_gap", to_fraction(r.normalized_gap)}});
    return arr;
}

} // namespace dpcolor::io
