#include "qpt/qp_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qpt {

using ordered_json = nlohmann::ordered_json;

QP parse_qp(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("expected a JSON object");

    QP qp;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("missing 'vertices' array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        qp.quiver.vertices.push_back(v.get<std::string>());
    }
    if (j.contains("arrows")) {
        for (const auto& a : j["arrows"]) {
            if (!a.contains("id") || !a.contains("src") || !a.contains("tgt"))
                throw ParseError("arrow needs id/src/tgt");
            int s = qp.quiver.vertex_index(a["src"].get<std::string>());
            int t = qp.quiver.vertex_index(a["tgt"].get<std::string>());
            if (s < 0 || t < 0)
                throw ParseError("arrow '" + a["id"].get<std::string>() + "' references an unknown vertex");
            qp.quiver.arrows.push_back({a["id"].get<std::string>(), s, t});
        }
    }
    if (j.contains("potential")) {
        for (const auto& t : j["potential"]) {
            if (!t.contains("coeff") || !t.contains("cycle"))
                throw ParseError("potential term needs coeff/cycle");
            Cycle c;
            try {
                c.coeff = Rat::parse(t["coeff"].get<std::string>());
            } catch (const std::exception&) {
                throw ParseError("bad coefficient '" + t["coeff"].get<std::string>() + "'");
            }
            for (const auto& id : t["cycle"]) {
                int ai = qp.quiver.arrow_index(id.get<std::string>());
                if (ai < 0) throw ParseError("potential references unknown arrow '" + id.get<std::string>() + "'");
                c.arrows.push_back(ai);
            }
            if (c.arrows.empty()) throw ParseError("potential term with empty cycle");
            qp.potential.terms.push_back(std::move(c));
        }
    }
    qp.potential.normalize();
    return qp;
}

namespace {

ordered_json qp_to_json(const QP& qp) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : qp.quiver.vertices) j["vertices"].push_back(v);
    j["arrows"] = ordered_json::array();
    for (const auto& a : qp.quiver.arrows) {
        ordered_json ja;
        ja["id"] = a.id;
        ja["src"] = qp.quiver.vertices[a.src];
        ja["tgt"] = qp.quiver.vertices[a.tgt];
        j["arrows"].push_back(ja);
    }
    j["potential"] = ordered_json::array();
    for (const auto& t : qp.potential.terms) {
        ordered_json jt;
        jt["coeff"] = t.coeff.str();
        jt["cycle"] = ordered_json::array();
        for (int ai : t.arrows) jt["cycle"].push_back(qp.quiver.arrows[ai].id);
        j["potential"].push_back(jt);
    }
    return j;
}

} // namespace

std::string serialize_qp(const QP& qp) { return qp_to_json(qp).dump(2) + "\n"; }

std::string serialize_qp_with_witnesses(const QP& qp, const std::vector<EjeArrowNote>& notes) {
    ordered_json j = qp_to_json(qp);
    for (std::size_t i = 0; i < notes.size() && i < j["arrows"].size(); ++i) {
        ordered_json w = ordered_json::array();
        for (const auto& step : notes[i].witness) w.push_back(step);
        j["arrows"][i]["witness"] = w;
    }
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

QP load_qp_file(const std::string& path) { return parse_qp(read_text_file(path)); }

void save_qp_file(const QP& qp, const std::string& path) {
    write_text_file(path, serialize_qp(qp));
}

} // namespace qpt
