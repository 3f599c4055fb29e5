#include "netcode/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace netcode {

using nlohmann::json;

namespace {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (uint32_t c : p.coeffs()) arr.push_back(c);
    return arr;
}

Poly poly_from_json(const Field* f, const json& j) {
    std::vector<uint32_t> coeffs;
    for (const auto& c : j) {
        uint64_t v = c.get<uint64_t>();
        if (v >= f->size()) throw Error("coefficient out of field range");
        coeffs.push_back(uint32_t(v));
    }
    return Poly(f, std::move(coeffs));
}

json rat_to_json(const Rat& r) {
    return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

Rat rat_from_json(const Field* f, const json& j) {
    return Rat(poly_from_json(f, j.at("num")), poly_from_json(f, j.at("den")));
}

}  // namespace

Network network_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::string> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(n.get<std::string>());
    auto index_of = [&](const std::string& name) {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == name) return int(i);
        throw GraphError("edge references unknown node " + name);
    };
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("id").get<int>(), index_of(e.at("tail").get<std::string>()),
                         index_of(e.at("head").get<std::string>())});
    std::vector<Source> sources;
    for (const auto& s : j.at("sources"))
        sources.push_back({index_of(s.at("node").get<std::string>()), s.at("h").get<int>()});
    std::vector<SinkSpec> sinks;
    for (const auto& t : j.at("sinks")) {
        SinkSpec spec;
        spec.node = index_of(t.at("node").get<std::string>());
        for (const auto& d : t.at("demands")) spec.demands.push_back(d.get<int>());
        sinks.push_back(std::move(spec));
    }
    return Network(std::move(nodes), std::move(edges), std::move(sources),
                   std::move(sinks));
}

std::string network_to_json(const Network& n, bool pretty) {
    json j;
    j["nodes"] = n.node_names();
    j["edges"] = json::array();
    for (const Edge& e : n.edges())
        j["edges"].push_back({{"id", e.id},
                              {"tail", n.node_name(e.tail)},
                              {"head", n.node_name(e.head)}});
    j["sources"] = json::array();
    for (const Source& s : n.sources())
        j["sources"].push_back({{"node", n.node_name(s.node)}, {"h", s.h}});
    j["sinks"] = json::array();
    for (const SinkSpec& t : n.sinks())
        j["sinks"].push_back({{"node", n.node_name(t.node)}, {"demands", t.demands}});
    return pretty ? j.dump(2) : j.dump();
}

NetworkCode code_from_json(const std::string& text) {
    json j = json::parse(text);
    FieldPtr f = Field::parse(j.at("field").get<std::string>());
    NetworkCode c(parse_mode(j.at("mode").get<std::string>()), f.get());
    for (const auto& k : j.at("kernels"))
        c.set_kernel(k.at("edge").get<int>(), k.at("pred_edge").get<int>(),
                     rat_from_json(f.get(), k.at("kernel")));
    return c;
}

std::string code_to_json(const NetworkCode& c, bool pretty) {
    json j;
    j["mode"] = mode_name(c.mode());
    j["field"] = c.field()->name();
    j["kernels"] = json::array();
    for (const auto& [key, k] : c.kernels())
        j["kernels"].push_back(
            {{"edge", key.first}, {"pred_edge", key.second}, {"kernel", rat_to_json(k)}});
    return pretty ? j.dump(2) : j.dump();
}

DelayCodeScheme scheme_from_json(const std::string& text) {
    json j = json::parse(text);
    DelayCodeScheme s;
    s.discipline = parse_discipline(j.at("discipline").get<std::string>());
    s.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& e : j.at("entries"))
        s.set(e.at("edge").get<int>(), e.at("pred").get<int>(),
              e.at("m").get<uint32_t>(), e.at("delay").get<int>());
    return s;
}

std::string scheme_to_json(const DelayCodeScheme& s, bool pretty) {
    json j;
    j["discipline"] = discipline_name(s.discipline);
    j["mode"] = mode_name(s.mode);
    j["entries"] = json::array();
    for (const SchemeEntry& e : s.entries)
        j["entries"].push_back(
            {{"edge", e.edge}, {"pred", e.pred}, {"m", e.m}, {"delay", e.delay}});
    return pretty ? j.dump(2) : j.dump();
}

std::string report_to_json(const Network& n, const TransferReport& r, bool pretty) {
    json j = json::array();
    for (const SinkTransfer& st : r.sinks) {
        json s;
        s["sink"] = n.node_name(n.sinks()[size_t(st.sink)].node);
        s["demands"] = n.sinks()[size_t(st.sink)].demands;
        json m = json::array();
        for (size_t row = 0; row < st.M.rows(); ++row) {
            json rw = json::array();
            for (size_t col = 0; col < st.M.cols(); ++col)
                rw.push_back(st.M.at(row, col).str());
            m.push_back(rw);
        }
        s["M"] = m;
        s["det"] = st.det.str();
        s["invertible"] = st.invertible;
        s["interference_free"] = st.interference_free;
        j.push_back(s);
    }
    return pretty ? j.dump(2) : j.dump();
}

LoadedCode code_or_scheme_from_json(const Network& n, const std::string& text) {
    json j = json::parse(text);
    LoadedCode lc;
    if (j.contains("entries")) {
        lc.is_scheme = true;
        lc.scheme = scheme_from_json(text);
        lc.code = scheme_to_code(n, lc.scheme);
    } else {
        lc.code = code_from_json(text);
    }
    return lc;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace netcode
