#include "dynconf/export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dynconf/error.hpp"
#include "dynconf/labels.hpp"

namespace dynconf {

namespace {

bool has_labels(const TranslationQuiver& q) {
    if (!q.diagram || !q.diagram->is_classical()) return false;
    return !(q.diagram->kind == DynkinKind::A && q.diagram->rank < 2);
}

std::string sign_text(int sign) { return sign > 0 ? "+" : (sign < 0 ? "-" : ""); }

}  // namespace

std::string quiver_name(const TranslationQuiver& q) {
    std::string base = q.kind.empty() ? "Q" : q.kind;
    if (q.group) base += "/" + q.group->text();
    if (q.window)
        base += "[" + std::to_string(q.window->first) + "," +
                std::to_string(q.window->first + q.window->second) + ")";
    return base;
}

json quiver_to_json(const TranslationQuiver& q) {
    json j;
    j["kind"] = q.kind;
    j["rank"] = q.diagram ? json(q.diagram->rank) : json(nullptr);
    if (q.group)
        j["group"] = {{"shift", q.group->shift}, {"twist", q.group->twist}};
    else
        j["group"] = nullptr;
    if (q.window) j["window"] = {{"first_column", q.window->first}, {"columns", q.window->second}};
    const bool labelled = has_labels(q);
    json verts = json::array();
    for (const auto& v : q.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["column"] = v.column();
        jv["level"] = v.level;
        jv["diagram_vertex"] = v.node >= 0 ? json(v.node) : json(nullptr);
        if (labelled && v.node >= 0) {
            auto l = label_of(*q.diagram, v.slot());
            jv["label"] = VertexLabel{l.i, l.j, 0}.text();
            if (l.sign != 0) jv["sign"] = sign_text(l.sign);
        }
        if (v.attached >= 0) jv["attached_to"] = v.attached;
        if (q.projective[v.id]) jv["projective"] = true;
        if (q.injective[v.id]) jv["injective"] = true;
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"d", a.d}, {"dp", a.dp}});
    j["arrows"] = arrows;
    json tau = json::array();
    for (int v = 0; v < q.size(); ++v)
        if (q.tau[v] >= 0) tau.push_back({v, q.tau[v]});
    j["tau"] = tau;
    if (q.symmetrizer) j["symmetrizer"] = *q.symmetrizer;
    return j;
}

TranslationQuiver quiver_from_json(const json& j) {
    try {
        TranslationQuiver q;
        q.id = next_quiver_id();
        q.kind = j.value("kind", std::string());
        if (!q.kind.empty()) {
            try {
                q.diagram = build_dynkin(q.kind);
            } catch (const Error&) {
                q.diagram.reset();
            }
        }
        if (j.contains("group") && !j["group"].is_null())
            q.group = GroupSpec{j["group"].at("shift").get<int>(), j["group"].value("twist", false)};
        if (j.contains("window"))
            q.window = std::make_pair(j["window"].at("first_column").get<std::int64_t>(),
                                      j["window"].at("columns").get<int>());
        const auto& verts = j.at("vertices");
        for (std::size_t k = 0; k < verts.size(); ++k) {
            const auto& jv = verts[k];
            QuiverVertex v;
            v.id = jv.at("id").get<int>();
            if (v.id != static_cast<int>(k)) fail(ErrorCode::ParseError, "vertex ids must be 0..N-1 in order");
            v.node = jv.contains("diagram_vertex") && !jv["diagram_vertex"].is_null() ? jv["diagram_vertex"].get<int>() : -1;
            if (jv.contains("level"))
                v.level = jv["level"].get<std::int64_t>();
            else if (q.diagram && v.node >= 0 && v.node < q.diagram->rank)
                v.level = 2 * jv.at("column").get<std::int64_t>() + q.diagram->parity[v.node];
            else
                v.level = 2 * jv.value("column", std::int64_t{0});
            v.attached = jv.value("attached_to", -1);
            q.vertices.push_back(v);
        }
        const int n = q.size();
        for (const auto& ja : j.at("arrows")) {
            Arrow a{ja.at("src").get<int>(), ja.at("dst").get<int>(), ja.value("d", 1), ja.value("dp", 1)};
            if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n)
                fail(ErrorCode::ParseError, "arrow endpoint out of range");
            if (a.d < 1 || a.dp < 1) fail(ErrorCode::ParseError, "valuations must be positive");
            q.arrows.push_back(a);
        }
        q.tau.assign(n, -1);
        for (const auto& jt : j.value("tau", json::array())) {
            int s = jt.at(0).get<int>(), t = jt.at(1).get<int>();
            if (s < 0 || s >= n || t < 0 || t >= n) fail(ErrorCode::ParseError, "tau entry out of range");
            q.tau[s] = t;
        }
        if (q.group && !q.diagram) q.group.reset();
        q.finalize();
        for (int v = 0; v < n; ++v) {
            q.projective[v] = q.tau[v] < 0;
            q.injective[v] = q.tau_inv[v] < 0;
        }
        if (j.contains("symmetrizer")) q.symmetrizer = j["symmetrizer"].get<std::vector<int>>();
        return q;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("quiver JSON: ") + e.what());
    }
}

json configuration_to_json(const TranslationQuiver& q, const std::vector<int>& members) {
    json j;
    j["quiver"] = quiver_name(q);
    j["members"] = members;
    if (has_labels(q)) {
        json labels = json::array();
        for (int c : members) labels.push_back(label_of(q, c).text());
        j["labels"] = labels;
    }
    return j;
}

std::vector<int> configuration_from_json(const TranslationQuiver& q, const json& j) {
    try {
        std::vector<int> ids;
        LabelSet labels;
        for (const auto& m : j.at("members")) {
            if (m.is_number_integer()) {
                int v = m.get<int>();
                if (v < 0 || v >= q.size()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in quiver");
                ids.push_back(v);
            } else {
                labels.insert(VertexLabel::parse(m.get<std::string>()));
            }
        }
        if (!labels.empty()) {
            auto more = members_of(q, labels);
            ids.insert(ids.end(), more.begin(), more.end());
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("configuration JSON: ") + e.what());
    }
}

json configuration_list_to_json(const TranslationQuiver& q, const std::vector<Configuration>& configs) {
    json j;
    j["quiver"] = quiver_name(q);
    j["vertices"] = q.size();
    j["count"] = configs.size();
    json list = json::array();
    for (const auto& c : configs) list.push_back(c.members);
    j["configurations"] = list;
    return j;
}

json hom_table_to_json(const TranslationQuiver& q, const HomTable& t) {
    json j;
    j["quiver"] = quiver_name(q);
    j["base"] = t.base;
    j["m"] = t.m;
    j["omega"] = t.omega;
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& [v, c] : row.coefficients()) r.push_back({{"vertex", v}, {"coefficient", c}});
        rows.push_back(r);
    }
    j["rows"] = rows;
    json hv = json::array();
    for (const auto& [v, c] : t.totals) hv.push_back({{"vertex", v}, {"h", c}});
    j["h"] = hv;
    return j;
}

json cover_hom_to_json(const DynkinDiagram& dg, const CoverHom& t) {
    auto slot_json = [](const Slot& s) {
        return json{{"column", column_of(s)}, {"level", s.level}, {"diagram_vertex", s.node}};
    };
    json j;
    j["quiver"] = "Z" + dg.name();
    j["base"] = slot_json(t.base);
    j["m"] = t.m;
    j["omega"] = slot_json(t.omega);
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& [s, c] : row) {
            json e = slot_json(s);
            e["coefficient"] = c;
            r.push_back(e);
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    json hv = json::array();
    for (const auto& [s, c] : t.totals) {
        json e = slot_json(s);
        e["h"] = c;
        hv.push_back(e);
    }
    j["h"] = hv;
    return j;
}

json report_to_json(const ConfigurationReport& r) {
    json j;
    j["verdict"] = r.verdict;
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"condition", x.condition}, {"witnesses", x.witnesses}, {"detail", x.detail}});
    j["violations"] = v;
    return j;
}

json relation_to_json(const BrauerRelation& b) {
    return {{"family", family_name(b.family)}, {"num_points", b.num_points}, {"sigma", b.sigma}, {"classes", b.text()}};
}

std::string quiver_to_dot(const TranslationQuiver& q, const std::vector<int>& highlight) {
    std::ostringstream out;
    std::vector<bool> hl(q.size(), false);
    for (int c : highlight)
        if (c >= 0 && c < q.size()) hl[c] = true;
    const bool labelled = has_labels(q);
    out << "digraph \"" << quiver_name(q) << "\" {\n";
    out << "  rankdir=LR;\n  node [shape=plaintext];\n";
    for (const auto& v : q.vertices) {
        std::string text;
        if (v.node < 0)
            text = "p" + std::to_string(v.attached);
        else if (labelled)
            text = label_of(*q.diagram, v.slot()).text();
        else
            text = "(" + std::to_string(v.column()) + "," + std::to_string(v.node) + ")";
        out << "  v" << v.id << " [label=\"" << text << "\"";
        if (v.node < 0) out << ", shape=box";
        else if (hl[v.id]) out << ", shape=circle";
        out << "];\n";
    }
    for (const auto& a : q.arrows) {
        out << "  v" << a.src << " -> v" << a.dst;
        if (a.d != 1 || a.dp != 1) out << " [label=\"(" << a.d << "," << a.dp << ")\"]";
        out << ";\n";
    }
    for (int v = 0; v < q.size(); ++v)
        if (q.tau[v] >= 0)
            out << "  v" << v << " -> v" << q.tau[v] << " [style=dashed, constraint=false, arrowhead=none];\n";
    out << "}\n";
    return out.str();
}

namespace {

std::vector<int> row_order(const DynkinDiagram& dg) {
    std::vector<int> rows(dg.rank);
    for (int i = 0; i < dg.rank; ++i) rows[i] = i;
    // type A and D grids put node 0 on the bottom row; B and C put it on top
    if (dg.kind == DynkinKind::A || dg.kind == DynkinKind::D) std::reverse(rows.begin(), rows.end());
    return rows;
}

}  // namespace

std::string render_grid(const DynkinDiagram& dg, std::int64_t level_lo, std::int64_t level_hi, const CellFn& cell) {
    std::map<Slot, std::string> cells;
    std::size_t width = 1;
    for (std::int64_t x = level_lo; x < level_hi; ++x)
        for (int i = 0; i < dg.rank; ++i) {
            if (dg.parity[i] != floor_mod(x, 2)) continue;
            std::string c = cell({x, i});
            width = std::max(width, c.size());
            cells[{x, i}] = c;
        }
    std::ostringstream out;
    for (int i : row_order(dg)) {
        std::string line;
        for (std::int64_t x = level_lo; x < level_hi; ++x) {
            std::string c;
            auto it = cells.find({x, i});
            if (it != cells.end()) c = it->second;
            std::string padded(width + 1, ' ');
            padded.replace(0, c.size(), c);
            line += padded;
        }
        auto end = line.find_last_not_of(' ');
        out << (end == std::string::npos ? std::string() : line.substr(0, end + 1)) << "\n";
    }
    return out.str();
}

std::string compact_label(const DynkinDiagram& dg, const Slot& s) {
    auto l = label_of(dg, s);
    std::string t = label_period(dg) < 10 ? std::to_string(l.i) + std::to_string(l.j)
                                          : std::to_string(l.i) + "." + std::to_string(l.j);
    return t + sign_text(l.sign);
}

std::string render_quiver(const TranslationQuiver& q, const std::vector<int>& members) {
    if (!q.diagram) fail(ErrorCode::InvalidArgument, "grid rendering needs a Dynkin quiver");
    const auto& dg = *q.diagram;
    std::int64_t lo = 0, hi = 0;
    if (q.group) {
        hi = 2 * static_cast<std::int64_t>(q.group->shift);
    } else if (q.window) {
        lo = 2 * q.window->first;
        hi = 2 * (q.window->first + q.window->second);
    }
    std::set<int> in(members.begin(), members.end());
    const bool labelled = has_labels(q);
    return render_grid(dg, lo, hi, [&](const Slot& s) {
        int v = q.find(s);
        if (v < 0) return std::string();
        std::string t = labelled ? compact_label(dg, s) : std::to_string(v);
        return in.count(v) ? "[" + t + "]" : t;
    });
}

std::string render_hom(const DynkinDiagram& dg, const CoverHom& t) {
    std::int64_t lo = t.base.level, hi = t.base.level;
    for (const auto& [s, c] : t.totals) lo = std::min(lo, s.level);
    lo -= 2;
    hi += 3;
    return render_grid(dg, lo, hi, [&](const Slot& s) {
        std::string v = std::to_string(t.h(s));
        return s == t.base ? "(" + v + ")" : v;
    });
}

std::string render_hom(const TranslationQuiver& q, const HomTable& t) {
    if (!q.diagram || !q.group) fail(ErrorCode::InvalidArgument, "grid rendering needs a Dynkin quotient");
    return render_grid(*q.diagram, 0, 2 * static_cast<std::int64_t>(q.group->shift), [&](const Slot& s) {
        int v = q.find(s);
        if (v < 0) return std::string();
        std::string c = std::to_string(t.h(v));
        return v == t.base ? "(" + c + ")" : c;
    });
}

}  // namespace dynconf
