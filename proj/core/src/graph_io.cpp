#include "qpt/graph_io.hpp"

#include <sstream>

#include <json.hpp>

#include "qpt/qp_io.hpp"

namespace qpt {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json heart_json(const Heart& h) {
    ordered_json j;
    j["key"] = h.key;
    j["simples"] = ordered_json::array();
    for (const auto& s : h.simples) {
        ordered_json js;
        if (s.representable) {
            js["dim"] = s.root;
            js["shift"] = s.shift;
        } else {
            js["opaque"] = s.provenance;
            js["class"] = s.kclass;
        }
        j["simples"].push_back(js);
    }
    j["quiver"] = ordered_json::parse(serialize_qp(h.qp));
    return j;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string exchange_graph_json(const ExchangeGraph& eg) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : eg.vertices) {
        ordered_json jv = heart_json(v.heart);
        jv["depth"] = v.depth;
        jv["frontier"] = !v.interior();
        j["vertices"].push_back(jv);
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : eg.edges) {
        ordered_json je;
        je["src"] = eg.vertices[e.src].heart.key;
        je["tgt"] = eg.vertices[e.tgt].heart.key;
        je["label"] = e.label.display;
        je["kind"] = "forward";
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string exchange_graph_dot(const ExchangeGraph& eg) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (std::size_t i = 0; i < eg.vertices.size(); ++i) {
        const auto& v = eg.vertices[i];
        os << "  n" << i << " [label=\"" << dot_escape(v.heart.key) << "\"";
        if (!v.interior()) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : eg.edges)
        os << "  n" << e.src << " -> n" << e.tgt << " [label=\"" << dot_escape(e.label.display)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string quotient_graph_json(const QuotientGraph& qg) {
    ordered_json j;
    j["subset"] = ordered_json::array();
    for (int i : qg.subset.members) j["subset"].push_back(i);
    j["classes"] = ordered_json::array();
    for (const auto& c : qg.classes) {
        ordered_json jc;
        jc["key"] = c.key;
        jc["interior"] = c.interior;
        jc["members"] = ordered_json::array();
        for (int m : c.members) jc["members"].push_back(qg.sub.vertices[m].heart.key);
        jc["quotient_simples"] = ordered_json::array();
        for (const auto& [proj, shift] : c.quotient_simples)
            jc["quotient_simples"].push_back(display_object(proj, shift));
        j["classes"].push_back(jc);
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : qg.edges) {
        ordered_json je;
        je["src"] = qg.classes[e.src].key;
        je["tgt"] = qg.classes[e.tgt].key;
        je["label"] = e.display;
        je["kind"] = "forward";
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string quotient_graph_dot(const QuotientGraph& qg) {
    std::ostringstream os;
    os << "digraph quotient {\n";
    for (std::size_t i = 0; i < qg.classes.size(); ++i) {
        const auto& c = qg.classes[i];
        std::string label;
        for (const auto& [proj, shift] : c.quotient_simples) {
            if (!label.empty()) label += " ";
            label += display_object(proj, shift);
        }
        os << "  c" << i << " [label=\"" << dot_escape(label) << "\"";
        if (!c.interior) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : qg.edges)
        os << "  c" << e.src << " -> c" << e.tgt << " [label=\"" << dot_escape(e.display)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string silting_graph_json(const SiltingGraph& sg) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : sg.vertices) {
        ordered_json jv;
        jv["g_matrix"] = ordered_json::array();
        for (const auto& col : v.g_cols) jv["g_matrix"].push_back(col);
        jv["heart"] = v.heart_key;
        jv["frontier"] = v.frontier;
        j["vertices"].push_back(jv);
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : sg.edges) {
        ordered_json je;
        je["src"] = e.src;
        je["tgt"] = e.tgt;
        je["label"] = e.label;
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string seg_bullet_json(const SegBulletResult& res) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& [heart, silt] : res.vertex_bijection) {
        ordered_json jv;
        jv["class"] = heart;
        jv["silting"] = silt;
        j["vertices"].push_back(jv);
    }
    j["verified_edges"] = res.verified_edges;
    j["skipped_classes"] = ordered_json::array();
    for (const auto& s : res.skipped_classes) j["skipped_classes"].push_back(s);
    j["skipped_edges"] = ordered_json::array();
    for (const auto& s : res.skipped_edges) j["skipped_edges"].push_back(s);
    ordered_json jg = ordered_json::parse(silting_graph_json(res.graph));
    j["graph"] = jg;
    return j.dump(2) + "\n";
}

} // namespace qpt
