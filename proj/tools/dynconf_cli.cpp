// Command-line front end. Talks to the library through the C interface only.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dynconf/dynconf.h"

namespace {

struct Failure {
    dc_status status;
    std::string message;
};

void check(dc_status st) {
    if (st != DC_OK) throw Failure{st, dc_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    dc_string_free(s);
    return out;
}

struct Quiver {
    dc_quiver* q = nullptr;
    Quiver() = default;
    Quiver(const Quiver&) = delete;
    Quiver& operator=(const Quiver&) = delete;
    ~Quiver() { dc_quiver_free(q); }
};

struct ConfigList {
    dc_config_list* l = nullptr;
    ConfigList() = default;
    ConfigList(const ConfigList&) = delete;
    ConfigList& operator=(const ConfigList&) = delete;
    ~ConfigList() { dc_config_list_free(l); }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{DC_ERR_IO, "cannot read " + path};
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k];
    return s;
}

struct Globals {
    bool json = false;
    std::string out;
    double time_budget = 900.0;
    int workers = 0;
    bool seedless = true;

    int worker_count() const {
        if (workers > 0) return workers;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

Globals globals;

void emit(const std::string& text) {
    if (globals.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(globals.out, std::ios::binary);
    if (!f) throw Failure{DC_ERR_IO, "cannot write " + globals.out};
    f << text;
}

// "--type D --n 4" and "--type D4" both name D4.
struct TypeArgs {
    std::string type;
    int n = 0;

    std::string name() const {
        if (type.empty()) throw Failure{DC_ERR_INVALID_ARGUMENT, "--type is required"};
        bool has_digits = std::isdigit(static_cast<unsigned char>(type.back()));
        if (has_digits) return type;
        if (n <= 0) throw Failure{DC_ERR_INVALID_ARGUMENT, "--n is required with --type " + type};
        return type + std::to_string(n);
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--type", type, "Dynkin type letter, or a full name such as E6");
        cmd->add_option("--n", n, "rank of the Dynkin diagram");
    }
};

// Default group when none is given: the quotient whose configurations the
// classical bijections and the exceptional table describe.
std::string default_group(const std::string& name) {
    char kind = name[0];
    int rank = std::atoi(name.c_str() + 1);
    switch (kind) {
    case 'A': return "tau" + std::to_string(rank - 1);
    case 'B':
    case 'C': return "tau" + std::to_string(2 * (rank - 1));
    case 'D': return "tau" + std::to_string(2 * (rank - 2));
    case 'F': return "tau5";
    case 'G': return "tau2";
    case 'E': return rank == 6 ? "tau5rho" : rank == 7 ? "tau8" : "tau14";
    }
    throw Failure{DC_ERR_INVALID_ARGUMENT, "unknown type " + name};
}

void build_quotient(Quiver& q, const TypeArgs& t, const std::string& group) {
    std::string name = t.name();
    check(dc_quiver_quotient(name.c_str(), (group.empty() ? default_group(name) : group).c_str(), &q.q));
}

// Vertex given as "col,node", a label such as "[1 3]" or "[2 4]+", or a bare id.
int resolve_vertex(const dc_quiver* q, const std::string& text) {
    int v = -1;
    if (text.find('[') != std::string::npos) {
        check(dc_quiver_find_label(q, text.c_str(), &v));
    } else if (text.find(',') != std::string::npos) {
        auto parts = split(text, ',');
        if (parts.size() != 2) throw Failure{DC_ERR_PARSE, "expected column,node: " + text};
        check(dc_quiver_find(q, std::stoll(parts[0]), std::stoi(parts[1]), &v));
    } else {
        v = std::stoi(text);
        if (v < 0 || v >= dc_quiver_vertex_count(q)) throw Failure{DC_ERR_UNKNOWN_VERTEX, "no vertex " + text};
    }
    return v;
}

std::vector<int> parse_members(const dc_quiver* q, const std::string& path) {
    std::string text = read_file(path);
    int* members = nullptr;
    size_t count = 0;
    check(dc_config_parse(q, text.c_str(), &members, &count));
    std::vector<int> out(members, members + count);
    dc_int_array_free(members);
    return out;
}

int cmd_dynkin(const TypeArgs& t) {
    std::string name = t.name();
    char* out = nullptr;
    check(dc_dynkin_json(name.c_str(), &out));
    emit(take(out));
    return 0;
}

struct QuiverArgs {
    TypeArgs type;
    std::string group;
    std::string window;
    std::string config;
    bool dot = false;
    bool ascii = false;
    bool check_only = false;
};

int cmd_quiver(const QuiverArgs& a) {
    Quiver q;
    if (!a.window.empty()) {
        auto parts = split(a.window, ',');
        if (parts.size() != 2) throw Failure{DC_ERR_PARSE, "--window expects first,columns"};
        check(dc_quiver_window(a.type.name().c_str(), std::stoll(parts[0]), std::stoi(parts[1]), &q.q));
    } else {
        build_quotient(q, a.type, a.group);
    }
    if (a.check_only) {
        int ok = 0;
        char* detail = nullptr;
        check(dc_quiver_check_translation(q.q, &ok, &detail));
        std::string d = take(detail);
        emit(ok ? "translation identity holds\n" : "translation identity fails: " + d + "\n");
        return ok ? 0 : 1;
    }
    std::vector<int> members;
    if (!a.config.empty()) members = parse_members(q.q, a.config);
    dc_format fmt = globals.json ? DC_FORMAT_JSON : a.dot ? DC_FORMAT_DOT : DC_FORMAT_ASCII;
    Quiver attached;
    const dc_quiver* shown = q.q;
    if (fmt == DC_FORMAT_JSON && !members.empty()) {
        check(dc_quiver_attach(q.q, members.data(), members.size(), &attached.q));
        shown = attached.q;
        members.clear();
    }
    char* out = nullptr;
    check(dc_quiver_export(shown, fmt, members.data(), members.size(), &out));
    emit(take(out));
    return 0;
}

struct HArgs {
    TypeArgs type;
    std::string group;
    std::string base;
};

int cmd_h(const HArgs& a) {
    if (a.base.empty()) throw Failure{DC_ERR_INVALID_ARGUMENT, "--base is required"};
    char* out = nullptr;
    if (a.group.empty()) {
        auto parts = split(a.base, ',');
        if (parts.size() != 2)
            throw Failure{DC_ERR_INVALID_ARGUMENT, "on the infinite cover the base must be column,node"};
        check(dc_cover_h(a.type.name().c_str(), std::stoll(parts[0]), std::stoi(parts[1]),
                         globals.json ? DC_FORMAT_JSON : DC_FORMAT_ASCII, &out));
        emit(take(out));
        return 0;
    }
    Quiver q;
    build_quotient(q, a.type, a.group);
    int x = resolve_vertex(q.q, a.base);
    if (globals.json)
        check(dc_h_table_json(q.q, x, &out));
    else
        check(dc_h_render(q.q, x, &out));
    emit(take(out));
    return 0;
}

dc_family parse_family(const std::string& f) {
    if (f == "plain") return DC_FAMILY_PLAIN;
    if (f == "sym" || f == "symmetric") return DC_FAMILY_SYMMETRIC;
    if (f == "cross" || f == "crossing") return DC_FAMILY_CROSSING;
    throw Failure{DC_ERR_INVALID_ARGUMENT, "unknown family " + f};
}

int cmd_brauer_enum(const std::string& family, int n, bool disk) {
    char* out = nullptr;
    dc_format fmt = globals.json ? DC_FORMAT_JSON : disk ? DC_FORMAT_ASCII : DC_FORMAT_DOT;
    check(dc_brauer_enumerate(parse_family(family), n, fmt, &out));
    emit(take(out));
    return 0;
}

int cmd_brauer_count(int upto, bool closed) {
    const std::pair<const char*, dc_family> rows[] = {
        {"M", DC_FAMILY_PLAIN}, {"Ms", DC_FAMILY_SYMMETRIC}, {"Mc", DC_FAMILY_CROSSING}};
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"n"};
    for (int n = 0; n <= upto; ++n) header.push_back(std::to_string(n));
    cells.push_back(header);
    for (const auto& [name, fam] : rows) {
        std::vector<std::string> row{name};
        for (int n = 0; n <= upto; ++n) {
            char* out = nullptr;
            check(dc_brauer_count(fam, n, closed ? 1 : 0, &out));
            row.push_back(take(out));
        }
        cells.push_back(row);
    }
    if (globals.json) {
        std::string s = "{\n";
        for (std::size_t r = 1; r < cells.size(); ++r) {
            s += "  \"" + cells[r][0] + "\": [";
            for (std::size_t c = 1; c < cells[r].size(); ++c) s += (c > 1 ? ", " : "") + cells[r][c];
            s += r + 1 < cells.size() ? "],\n" : "]\n";
        }
        emit(s + "}\n");
        return 0;
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string s;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c == 0)
                cell.resize(width[c], ' ');
            else
                cell = std::string(width[c] - cell.size(), ' ') + cell;
            line += (c ? " " : "") + cell;
        }
        s += line + "\n";
    }
    emit(s);
    return 0;
}

struct ConfigEnumArgs {
    TypeArgs type;
    std::string group;
    bool mod_tau = false;
};

int cmd_config_enum(const ConfigEnumArgs& a) {
    Quiver q;
    build_quotient(q, a.type, a.group);
    ConfigList list;
    check(dc_config_enumerate(q.q, globals.worker_count(), globals.time_budget, &list.l));
    size_t mod = 0;
    check(dc_config_list_count_mod_tau(list.l, &mod));
    std::string classes;
    if (a.type.name()[0] == 'D') {
        char* out = nullptr;
        check(dc_config_list_classes(list.l, &out));
        classes = take(out);
    }
    if (globals.json) {
        char* out = nullptr;
        check(dc_config_list_json(list.l, &out));
        emit(take(out));
        return 0;
    }
    std::string s;
    const size_t total = dc_config_list_size(list.l);
    for (size_t k = 0; k < total; ++k) {
        const int* members = nullptr;
        size_t count = 0;
        check(dc_config_list_get(list.l, k, &members, &count));
        char* grid = nullptr;
        check(dc_quiver_export(q.q, DC_FORMAT_ASCII, members, count, &grid));
        s += "configuration " + std::to_string(k + 1) + "\n" + take(grid) + "\n";
    }
    s += "configurations: " + std::to_string(total) + "\n";
    if (a.mod_tau) s += "modulo tau: " + std::to_string(mod) + "\n";
    if (!classes.empty()) s += "classes: " + classes;
    emit(s);
    return 0;
}

struct ConfigCheckArgs {
    std::string quiver_file;
    std::string set_file;
};

int cmd_config_check(const ConfigCheckArgs& a) {
    Quiver q;
    std::string text = read_file(a.quiver_file);
    check(dc_quiver_from_json(text.c_str(), &q.q));
    auto members = parse_members(q.q, a.set_file);
    int verdict = 0;
    char* report = nullptr;
    check(dc_config_check(q.q, members.data(), members.size(), &verdict, &report));
    std::string r = take(report);
    emit(globals.json ? r : std::string(verdict ? "configuration\n" : "not a configuration\n") + r);
    return verdict ? 0 : 1;
}

int cmd_config_bijection(const TypeArgs& t, bool verify) {
    char* out = nullptr;
    int ok = 0;
    check(dc_bijection_report(t.name().c_str(), &out, &ok));
    std::string s = take(out);
    s += ok ? "round trips: identity\n" : "round trips: FAILED\n";
    emit(s);
    return verify && !ok ? 1 : 0;
}

struct ExceptionalArgs {
    std::vector<std::string> only;
    bool mod_tau = false;
    bool dry_run = false;
};

int cmd_exceptional(const ExceptionalArgs& a) {
    std::string dir = globals.out;
    if (dir.empty())
        if (const char* env = std::getenv("DYNCONF_OUT_DIR")) dir = env;
    std::vector<std::string> kinds;
    for (const auto& o : a.only)
        for (const auto& k : split(o, ',')) kinds.push_back(k);
    std::string only = join(kinds);
    char* table = nullptr;
    int all_match = 0;
    check(dc_exceptional_run(only.c_str(), globals.worker_count(), globals.time_budget, a.dry_run ? 1 : 0,
                             dir.empty() ? nullptr : dir.c_str(), &table, &all_match));
    std::string t = take(table);
    if (!a.mod_tau && !a.dry_run) {
        // drop the mod-tau row and the expectation row under it
        std::string kept;
        bool skip_next = false;
        for (const auto& line : split(t, '\n')) {
            auto first = line.find_first_not_of(' ');
            std::string head = first == std::string::npos ? "" : line.substr(first);
            if (head.rfind("mod tau", 0) == 0) {
                skip_next = true;
                continue;
            }
            if (skip_next && head.rfind("expected", 0) == 0) {
                skip_next = false;
                continue;
            }
            skip_next = false;
            kept += line + "\n";
        }
        t = kept;
    }
    std::cout << t;
    if (!dir.empty() && !a.dry_run) std::cout << "wrote " << dir << "\n";
    return all_match ? 0 : 1;
}

struct VerifyArgs {
    std::vector<std::string> skip;
    bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<std::string> skips;
    for (const auto& s : a.skip)
        for (const auto& k : split(s, ',')) skips.push_back(k);
    char* matrix = nullptr;
    int pass = 0;
    check(dc_verify(join(skips).c_str(), a.inject_fault ? 1 : 0, globals.worker_count(), globals.time_budget,
                    &matrix, &pass));
    emit(take(matrix));
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configurations of stable translation quivers of Dynkin type"};
    app.require_subcommand(1);
    // global flags may also follow the subcommand
    app.fallthrough();
    app.add_flag("--json", globals.json, "emit JSON");
    app.add_option("--out", globals.out, "output file (output directory for exceptional run)");
    app.add_option("--time-budget", globals.time_budget, "seconds allowed per enumeration")->check(CLI::PositiveNumber);
    app.add_option("--workers", globals.workers, "worker threads (default: hardware threads)");
    app.add_flag("--seedless-determinism", globals.seedless, "accepted for compatibility; output is always deterministic");

    int rc = 0;
    std::function<int()> action;

    TypeArgs dynkin_type;
    auto* dynkin = app.add_subcommand("dynkin", "print a Dynkin diagram as JSON");
    dynkin_type.add_to(dynkin);
    dynkin->callback([&] { action = [&] { return cmd_dynkin(dynkin_type); }; });

    QuiverArgs qa;
    auto* quiver = app.add_subcommand("quiver", "build a quotient or window of ZDelta and export it");
    qa.type.add_to(quiver);
    quiver->add_option("--group", qa.group, "tau^k or tau^k rho, e.g. tau5rho");
    quiver->add_option("--window", qa.window, "first,columns of a window of ZDelta");
    quiver->add_option("--config", qa.config, "configuration JSON to mark or attach");
    quiver->add_flag("--dot", qa.dot, "Graphviz output");
    quiver->add_flag("--ascii", qa.ascii, "grid output (default)");
    quiver->add_flag("--check", qa.check_only, "check the translation identity");
    quiver->callback([&] { action = [&] { return cmd_quiver(qa); }; });

    HArgs ha;
    auto* hcmd = app.add_subcommand("h", "hom-length h(-, base)");
    ha.type.add_to(hcmd);
    hcmd->add_option("--group", ha.group, "quotient group; omitted means the infinite cover");
    hcmd->add_option("--base", ha.base, "column,node | label | vertex id")->required();
    hcmd->callback([&] { action = [&] { return cmd_h(ha); }; });

    auto* brauer = app.add_subcommand("brauer", "2-Brauer relations");
    brauer->require_subcommand(1);
    std::string family = "plain";
    int bn = 0;
    bool disk = false;
    auto* benum = brauer->add_subcommand("enum", "list the relations of one family");
    benum->add_option("--family", family, "plain | sym | cross");
    benum->add_option("--n", bn, "rank")->required();
    benum->add_flag("--ascii-disk", disk, "draw each relation on a disk");
    benum->callback([&] { action = [&] { return cmd_brauer_enum(family, bn, disk); }; });
    int upto = 10;
    bool closed = false;
    auto* bcount = brauer->add_subcommand("count", "table of M, Ms, Mc");
    bcount->add_option("--upto", upto, "largest n");
    bcount->add_flag("--closed-form", closed, "evaluate the closed-form sums");
    bcount->callback([&] { action = [&] { return cmd_brauer_count(upto, closed); }; });

    auto* config = app.add_subcommand("config", "configurations");
    config->require_subcommand(1);
    ConfigEnumArgs ce;
    auto* cenum = config->add_subcommand("enum", "enumerate the configurations of a quotient");
    ce.type.add_to(cenum);
    cenum->add_option("--group", ce.group, "quotient group");
    cenum->add_flag("--mod-tau", ce.mod_tau, "also count tau-orbits");
    cenum->callback([&] { action = [&] { return cmd_config_enum(ce); }; });
    ConfigCheckArgs cc;
    auto* ccheck = config->add_subcommand("check", "validate a vertex set");
    ccheck->add_option("--quiver", cc.quiver_file, "quiver JSON")->required();
    ccheck->add_option("--set", cc.set_file, "configuration JSON")->required();
    ccheck->callback([&] { action = [&] { return cmd_config_check(cc); }; });
    TypeArgs bt;
    bool bverify = false;
    auto* cbij = config->add_subcommand("bijection", "round-trip configurations through Brauer relations");
    bt.add_to(cbij);
    cbij->add_flag("--verify", bverify, "exit nonzero unless every round trip is the identity");
    cbij->callback([&] { action = [&] { return cmd_config_bijection(bt, bverify); }; });

    auto* exc = app.add_subcommand("exceptional", "exceptional enumerations");
    exc->require_subcommand(1);
    ExceptionalArgs ea;
    auto* erun = exc->add_subcommand("run", "enumerate E6, E7, E8, F4, G2 and compare counts");
    erun->add_option("--only", ea.only, "kinds to run, e.g. F4 or E6,G2");
    erun->add_flag("--mod-tau", ea.mod_tau, "show the tau-orbit row");
    erun->add_flag("--dry-run", ea.dry_run, "only build the quotients");
    erun->callback([&] { action = [&] { return cmd_exceptional(ea); }; });

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify-paper", "recompute every published number");
    ver->add_option("--skip", va.skip, "check groups to skip (counts, brauer, A, B, C, D, E6, ...)");
    ver->add_flag("--inject-fault", va.inject_fault, "corrupt the G2 diagram to exercise the failure path");
    ver->callback([&] { action = [&] { return cmd_verify(va); }; });

    CLI11_PARSE(app, argc, argv);
    try {
        rc = action ? action() : 0;
    } catch (const Failure& f) {
        std::cerr << "error: " << dc_status_name(f.status) << ": " << f.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
