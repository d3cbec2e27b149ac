#include "dynconf/dynconf.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "dynconf/brauer.hpp"
#include "dynconf/configurations.hpp"
#include "dynconf/error.hpp"
#include "dynconf/exceptional.hpp"
#include "dynconf/export.hpp"
#include "dynconf/verify.hpp"

using namespace dynconf;

struct dc_quiver {
    std::shared_ptr<const TranslationQuiver> q;
};

struct dc_config_list {
    std::shared_ptr<const TranslationQuiver> q;
    std::vector<Configuration> configs;
};

namespace {

thread_local std::string last_error;

dc_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::Ok: return DC_OK;
    case ErrorCode::IllegalRank: return DC_ERR_ILLEGAL_RANK;
    case ErrorCode::IllegalGroup: return DC_ERR_ILLEGAL_GROUP;
    case ErrorCode::NotWeaklyAdmissible: return DC_ERR_NOT_WEAKLY_ADMISSIBLE;
    case ErrorCode::NotClassicalType: return DC_ERR_NOT_CLASSICAL_TYPE;
    case ErrorCode::InvalidConfiguration: return DC_ERR_INVALID_CONFIGURATION;
    case ErrorCode::NonTerminating: return DC_ERR_NON_TERMINATING;
    case ErrorCode::UnknownVertex: return DC_ERR_UNKNOWN_VERTEX;
    case ErrorCode::NotAConfiguration: return DC_ERR_NOT_A_CONFIGURATION;
    case ErrorCode::NotPlain: return DC_ERR_NOT_PLAIN;
    case ErrorCode::WrongClass: return DC_ERR_WRONG_CLASS;
    case ErrorCode::NotGStable: return DC_ERR_NOT_G_STABLE;
    case ErrorCode::CountMismatch: return DC_ERR_COUNT_MISMATCH;
    case ErrorCode::Clipped: return DC_ERR_CLIPPED;
    case ErrorCode::Overflow: return DC_ERR_OVERFLOW;
    case ErrorCode::ParseError: return DC_ERR_PARSE;
    case ErrorCode::IoError: return DC_ERR_IO;
    case ErrorCode::InvalidArgument: return DC_ERR_INVALID_ARGUMENT;
    case ErrorCode::TimeBudgetExceeded: return DC_ERR_TIME_BUDGET;
    }
    return DC_ERR_INTERNAL;
}

template <typename Fn>
dc_status guarded(Fn fn) {
    try {
        last_error.clear();
        fn();
        return DC_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return DC_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string("null argument: ") + what);
}

const TranslationQuiver& deref(const dc_quiver* q) {
    need(q, "quiver");
    return *q->q;
}

std::vector<int> member_vector(const int* members, size_t count) {
    if (count > 0) need(members, "members");
    return std::vector<int>(members, members + count);
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot write " + path.string());
    f << text;
    if (!f) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

extern "C" {

const char* dc_status_name(dc_status status) {
    switch (status) {
    case DC_OK: return "Ok";
    case DC_ERR_ILLEGAL_RANK: return "IllegalRank";
    case DC_ERR_ILLEGAL_GROUP: return "IllegalGroup";
    case DC_ERR_NOT_WEAKLY_ADMISSIBLE: return "NotWeaklyAdmissible";
    case DC_ERR_NOT_CLASSICAL_TYPE: return "NotClassicalType";
    case DC_ERR_INVALID_CONFIGURATION: return "InvalidConfiguration";
    case DC_ERR_NON_TERMINATING: return "NonTerminating";
    case DC_ERR_UNKNOWN_VERTEX: return "UnknownVertex";
    case DC_ERR_NOT_A_CONFIGURATION: return "NotAConfiguration";
    case DC_ERR_NOT_PLAIN: return "NotPlain";
    case DC_ERR_WRONG_CLASS: return "WrongClass";
    case DC_ERR_NOT_G_STABLE: return "NotGStable";
    case DC_ERR_COUNT_MISMATCH: return "CountMismatch";
    case DC_ERR_CLIPPED: return "Clipped";
    case DC_ERR_OVERFLOW: return "Overflow";
    case DC_ERR_PARSE: return "ParseError";
    case DC_ERR_IO: return "IoError";
    case DC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DC_ERR_TIME_BUDGET: return "TimeBudgetExceeded";
    case DC_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* dc_last_error(void) { return last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_status dc_dynkin_json(const char* type_name, char** out_json) {
    return guarded([&] {
        need(type_name, "type_name");
        need(out_json, "out_json");
        auto dg = build_dynkin(type_name);
        json j;
        j["kind"] = std::string(1, kind_letter(dg.kind));
        j["name"] = dg.name();
        j["rank"] = dg.rank;
        json edges = json::array();
        for (const auto& e : dg.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"d", e.d}, {"dp", e.dp}});
        j["edges"] = edges;
        j["parity"] = dg.parity;
        auto twist = diagram_twist(dg);
        j["twist"] = twist ? json(*twist) : json(nullptr);
        *out_json = dup(j.dump(2) + "\n");
    });
}

dc_status dc_quiver_quotient(const char* type_name, const char* group, dc_quiver** out) {
    return guarded([&] {
        need(type_name, "type_name");
        need(group, "group");
        need(out, "out");
        auto q = std::make_shared<TranslationQuiver>(build_quotient(build_dynkin(type_name), GroupSpec::parse(group)));
        *out = new dc_quiver{q};
    });
}

dc_status dc_quiver_window(const char* type_name, int64_t first_column, int columns, dc_quiver** out) {
    return guarded([&] {
        need(type_name, "type_name");
        need(out, "out");
        auto q = std::make_shared<TranslationQuiver>(build_z_window(build_dynkin(type_name), first_column, columns));
        *out = new dc_quiver{q};
    });
}

dc_status dc_quiver_from_json(const char* json_text, dc_quiver** out) {
    return guarded([&] {
        need(json_text, "json_text");
        need(out, "out");
        json j;
        try {
            j = json::parse(json_text);
        } catch (const json::exception& e) {
            fail(ErrorCode::ParseError, e.what());
        }
        *out = new dc_quiver{std::make_shared<TranslationQuiver>(quiver_from_json(j))};
    });
}

dc_status dc_quiver_attach(const dc_quiver* q, const int* members, size_t count, dc_quiver** out) {
    return guarded([&] {
        need(out, "out");
        auto r = std::make_shared<TranslationQuiver>(attach_validated(deref(q), member_vector(members, count)));
        *out = new dc_quiver{r};
    });
}

void dc_quiver_free(dc_quiver* q) { delete q; }

int dc_quiver_vertex_count(const dc_quiver* q) { return q ? q->q->size() : 0; }

dc_status dc_quiver_export(const dc_quiver* q, dc_format format, const int* highlight, size_t count, char** out) {
    return guarded([&] {
        need(out, "out");
        const auto& quiver = deref(q);
        auto hl = member_vector(highlight, count);
        switch (format) {
        case DC_FORMAT_JSON: *out = dup(quiver_to_json(quiver).dump(2) + "\n"); break;
        case DC_FORMAT_DOT: *out = dup(quiver_to_dot(quiver, hl)); break;
        case DC_FORMAT_ASCII: *out = dup(render_quiver(quiver, hl)); break;
        default: fail(ErrorCode::InvalidArgument, "unknown format");
        }
    });
}

dc_status dc_quiver_check_translation(const dc_quiver* q, int* ok, char** detail) {
    return guarded([&] {
        need(ok, "ok");
        auto v = check_translation_identity(deref(q));
        *ok = v ? 0 : 1;
        if (detail) *detail = dup(v ? *v : std::string());
    });
}

dc_status dc_quiver_find(const dc_quiver* q, int64_t column, int node, int* out_vertex) {
    return guarded([&] {
        need(out_vertex, "out_vertex");
        const auto& quiver = deref(q);
        if (!quiver.diagram) fail(ErrorCode::UnknownVertex, "quiver has no diagram coordinates");
        if (node < 0 || node >= quiver.diagram->rank) fail(ErrorCode::UnknownVertex, "no diagram vertex " + std::to_string(node));
        int v = quiver.find(slot_at(*quiver.diagram, column, node));
        if (v < 0) fail(ErrorCode::UnknownVertex, "no vertex at that position");
        *out_vertex = v;
    });
}

dc_status dc_quiver_find_label(const dc_quiver* q, const char* label, int* out_vertex) {
    return guarded([&] {
        need(label, "label");
        need(out_vertex, "out_vertex");
        auto members = members_of(deref(q), {VertexLabel::parse(label)});
        *out_vertex = members.front();
    });
}

dc_status dc_quiver_weakly_admissible(const char* type_name, const char* group, int* admissible, char** detail) {
    return guarded([&] {
        need(type_name, "type_name");
        need(group, "group");
        need(admissible, "admissible");
        auto r = check_weakly_admissible(build_dynkin(type_name), GroupSpec::parse(group));
        *admissible = r.admissible ? 1 : 0;
        if (detail) *detail = dup(r.reason);
    });
}

dc_status dc_h_value(const dc_quiver* q, int y, int x, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = h(deref(q), y, x);
    });
}

dc_status dc_h_table_json(const dc_quiver* q, int x, char** out_json) {
    return guarded([&] {
        need(out_json, "out_json");
        const auto& quiver = deref(q);
        auto t = global_hom_cache().get(quiver, x);
        *out_json = dup(hom_table_to_json(quiver, *t).dump(2) + "\n");
    });
}

dc_status dc_omega(const dc_quiver* q, int x, int* out_vertex, int* out_m) {
    return guarded([&] {
        need(out_vertex, "out_vertex");
        auto r = omega(deref(q), x);
        *out_vertex = r.vertex;
        if (out_m) *out_m = r.m;
    });
}

dc_status dc_h_render(const dc_quiver* q, int x, char** out_text) {
    return guarded([&] {
        need(out_text, "out_text");
        const auto& quiver = deref(q);
        auto t = global_hom_cache().get(quiver, x);
        auto name = [&](int v) {
            const auto& qv = quiver.vertices[v];
            return "(" + std::to_string(floor_div(qv.level, 2)) + "," + std::to_string(qv.node) + ")";
        };
        std::ostringstream s;
        for (std::size_t n = 0; n < t->rows.size(); ++n) {
            s << "theta_" << n << ":";
            for (const auto& [v, c] : t->rows[n].coefficients()) {
                s << " ";
                if (c != 1) s << c << "*";
                s << name(v);
            }
            s << "\n";
        }
        s << "m = " << t->m << ", omega = " << name(t->omega) << "\n\n";
        s << render_hom(quiver, *t);
        *out_text = dup(s.str());
    });
}

dc_status dc_sign_pattern(const dc_quiver* q, int x, int* ok) {
    return guarded([&] {
        need(ok, "ok");
        *ok = verify_sign_pattern(deref(q), x) ? 1 : 0;
    });
}

dc_status dc_cover_h(const char* type_name, int64_t column, int node, dc_format format, char** out) {
    return guarded([&] {
        need(type_name, "type_name");
        need(out, "out");
        auto dg = build_dynkin(type_name);
        if (node < 0 || node >= dg.rank) fail(ErrorCode::UnknownVertex, "no diagram vertex " + std::to_string(node));
        auto t = cover_h(dg, slot_at(dg, column, node));
        if (format == DC_FORMAT_JSON) {
            *out = dup(cover_hom_to_json(dg, t).dump(2) + "\n");
            return;
        }
        std::ostringstream s;
        for (std::size_t n = 0; n < t.rows.size(); ++n) {
            s << "theta_" << n << ":";
            for (const auto& [slot, c] : t.rows[n]) {
                s << " ";
                if (c != 1) s << c << "*";
                s << "(" << column_of(slot) << "," << slot.node << ")";
            }
            s << "\n";
        }
        s << "m = " << t.m << ", omega = (" << column_of(t.omega) << "," << t.omega.node << ")\n\n";
        s << render_hom(dg, t);
        *out = dup(s.str());
    });
}

dc_status dc_brauer_enumerate(dc_family family, int n, dc_format format, char** out) {
    return guarded([&] {
        need(out, "out");
        if (n < 0 || n > 14) fail(ErrorCode::InvalidArgument, "n must lie in 0..14");
        std::vector<BrauerRelation> rels;
        switch (family) {
        case DC_FAMILY_PLAIN: rels = enumerate_plain(n); break;
        case DC_FAMILY_SYMMETRIC: rels = enumerate_symmetric(n); break;
        case DC_FAMILY_CROSSING: rels = enumerate_crossing(n); break;
        default: fail(ErrorCode::InvalidArgument, "unknown family");
        }
        if (format == DC_FORMAT_JSON) {
            json j = json::array();
            for (const auto& b : rels) j.push_back(relation_to_json(b));
            *out = dup(j.dump(2) + "\n");
        } else if (format == DC_FORMAT_ASCII) {
            std::string s;
            for (std::size_t k = 0; k < rels.size(); ++k) s += "B" + std::to_string(k + 1) + "\n" + ascii_disk(rels[k]) + "\n";
            *out = dup(s);
        } else {
            std::string s;
            for (std::size_t k = 0; k < rels.size(); ++k) s += "B" + std::to_string(k + 1) + " " + rels[k].text() + "\n";
            *out = dup(s);
        }
    });
}

dc_status dc_brauer_count(dc_family family, int n, int closed_form, char** out_decimal) {
    return guarded([&] {
        need(out_decimal, "out_decimal");
        BigInt v;
        switch (family) {
        case DC_FAMILY_PLAIN: v = closed_form ? motzkin_closed(n) : motzkin(n); break;
        case DC_FAMILY_SYMMETRIC: v = closed_form ? m_sym_closed(n) : m_sym(n); break;
        case DC_FAMILY_CROSSING: v = closed_form ? m_cross_closed(n) : m_cross(n); break;
        default: fail(ErrorCode::InvalidArgument, "unknown family");
        }
        *out_decimal = dup(v.str());
    });
}

dc_status dc_config_check(const dc_quiver* q, const int* members, size_t count, int* verdict, char** report_json) {
    return guarded([&] {
        need(verdict, "verdict");
        auto r = is_configuration(deref(q), member_vector(members, count));
        *verdict = r.verdict ? 1 : 0;
        if (report_json) *report_json = dup(report_to_json(r).dump(2) + "\n");
    });
}

dc_status dc_config_parse(const dc_quiver* q, const char* json_text, int** members, size_t* count) {
    return guarded([&] {
        need(json_text, "json_text");
        need(members, "members");
        need(count, "count");
        json j;
        try {
            j = json::parse(json_text);
        } catch (const json::exception& e) {
            fail(ErrorCode::ParseError, e.what());
        }
        auto ids = configuration_from_json(deref(q), j);
        int* buf = static_cast<int*>(std::malloc(sizeof(int) * std::max<size_t>(ids.size(), 1)));
        if (!buf) throw std::bad_alloc();
        std::copy(ids.begin(), ids.end(), buf);
        *members = buf;
        *count = ids.size();
    });
}

void dc_int_array_free(int* members) { std::free(members); }

dc_status dc_config_enumerate(const dc_quiver* q, int workers, double time_budget_seconds, dc_config_list** out) {
    return guarded([&] {
        need(out, "out");
        const auto& quiver = deref(q);
        EnumerateOptions eo;
        eo.workers = std::max(1, workers);
        if (time_budget_seconds > 0)
            eo.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(time_budget_seconds));
        auto list = std::make_unique<dc_config_list>();
        list->q = q->q;
        list->configs = enumerate_configurations(quiver, eo);
        *out = list.release();
    });
}

void dc_config_list_free(dc_config_list* list) { delete list; }

size_t dc_config_list_size(const dc_config_list* list) { return list ? list->configs.size() : 0; }

dc_status dc_config_list_get(const dc_config_list* list, size_t index, const int** members, size_t* count) {
    return guarded([&] {
        need(list, "list");
        need(members, "members");
        need(count, "count");
        if (index >= list->configs.size()) fail(ErrorCode::InvalidArgument, "index out of range");
        *members = list->configs[index].members.data();
        *count = list->configs[index].members.size();
    });
}

dc_status dc_config_list_count_mod_tau(const dc_config_list* list, size_t* out) {
    return guarded([&] {
        need(list, "list");
        need(out, "out");
        *out = count_mod_tau(*list->q, list->configs);
    });
}

dc_status dc_config_list_json(const dc_config_list* list, char** out_json) {
    return guarded([&] {
        need(list, "list");
        need(out_json, "out_json");
        json j = configuration_list_to_json(*list->q, list->configs);
        if (list->q->diagram && list->q->diagram->is_classical() &&
            !(list->q->diagram->kind == DynkinKind::A && list->q->diagram->rank < 2)) {
            json labels = json::array();
            for (const auto& c : list->configs) {
                json row = json::array();
                for (const auto& l : labels_of(*list->q, c.members)) row.push_back(l.text());
                labels.push_back(row);
            }
            j["labels"] = labels;
        }
        *out_json = dup(j.dump(2) + "\n");
    });
}

dc_status dc_config_list_classes(const dc_config_list* list, char** out_json) {
    return guarded([&] {
        need(list, "list");
        need(out_json, "out_json");
        const auto& q = *list->q;
        if (!q.diagram || q.diagram->kind != DynkinKind::D)
            fail(ErrorCode::InvalidArgument, "configuration classes exist for type D only");
        const int n = label_n(*q.diagram);
        std::size_t k1 = 0, k2 = 0;
        for (const auto& c : list->configs) (d_class(labels_of(q, c.members), n) == 1 ? k1 : k2)++;
        *out_json = dup(json{{"class1", k1}, {"class2", k2}}.dump() + "\n");
    });
}

dc_status dc_bijection_report(const char* type_name, char** out_text, int* all_ok) {
    return guarded([&] {
        need(type_name, "type_name");
        need(out_text, "out_text");
        auto dg = build_dynkin(type_name);
        auto r = bijection_report(dg);
        std::string s = dg.name() + ": " + std::to_string(r.configurations) + " configurations, " +
                        std::to_string(r.relations) + " relations\n";
        for (const auto& line : r.lines) s += "  " + line + "\n";
        *out_text = dup(s);
        if (all_ok) *all_ok = r.ok ? 1 : 0;
    });
}

dc_status dc_exceptional_run(const char* only_csv, int workers, double time_budget_seconds, int dry_run,
                             const char* out_dir, char** table_text, int* all_match) {
    return guarded([&] {
        need(table_text, "table_text");
        RunOptions ro;
        ro.workers = std::max(1, workers);
        if (time_budget_seconds > 0) ro.time_budget_seconds = time_budget_seconds;
        ro.dry_run = dry_run != 0;
        auto only = split_csv(only_csv);
        for (const auto& k : only) exceptional_job(k);
        auto table = run_all(ro, only);
        if (out_dir && *out_dir && !ro.dry_run) {
            std::filesystem::path dir(out_dir);
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) fail(ErrorCode::IoError, "cannot create " + dir.string());
            json summary = json::array();
            for (const auto& c : table.columns) {
                summary.push_back({{"kind", c.job.kind},
                                   {"group", c.job.group.text()},
                                   {"vertices", c.vertices},
                                   {"completed", c.completed},
                                   {"total", c.total},
                                   {"mod_tau", c.mod_tau},
                                   {"expected_total", c.job.expected_total},
                                   {"expected_mod_tau", c.job.expected_mod_tau},
                                   {"match", c.matches()}});
                if (c.completed)
                    write_file(dir / (c.job.kind + ".configs.json"),
                               configuration_list_to_json(*c.quiver, c.configurations).dump(1) + "\n");
            }
            write_file(dir / "summary.json", summary.dump(2) + "\n");
        }
        *table_text = dup(table.render());
        if (all_match) *all_match = ro.dry_run || table.all_match() ? 1 : 0;
    });
}

dc_status dc_verify(const char* skip_csv, int inject_fault, int workers, double time_budget_seconds,
                    char** matrix_text, int* all_pass) {
    return guarded([&] {
        need(matrix_text, "matrix_text");
        VerifyOptions vo;
        for (const auto& s : split_csv(skip_csv)) vo.skip.insert(s);
        vo.inject_fault = inject_fault != 0;
        vo.workers = std::max(1, workers);
        if (time_budget_seconds > 0) vo.time_budget_seconds = time_budget_seconds;
        auto rows = verify_published_numbers(vo);
        *matrix_text = dup(render_verify_matrix(rows));
        if (all_pass) *all_pass = verify_all_pass(rows) ? 1 : 0;
    });
}

}  // extern "C"
