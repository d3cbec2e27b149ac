// Acceptance run: one PASS/FAIL line per criterion, each under its own time limit.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dynconf/brauer.hpp"
#include "dynconf/configurations.hpp"
#include "dynconf/exceptional.hpp"
#include "dynconf/export.hpp"
#include "oracles.hpp"

using namespace dynconf;

namespace {

struct Failures {
    std::vector<std::string> items;

    void expect(bool ok, const std::string& what) {
        if (!ok) items.push_back(what);
    }
};

std::string seq(BigInt (*f)(int), int lo, int hi) {
    std::string s;
    for (int n = lo; n <= hi; ++n) s += (n > lo ? "," : "") + f(n).str();
    return s;
}

std::string name_of(const TranslationQuiver& q) { return quiver_name(q); }

// Quotients whose configurations are counted in criteria 3 and 4.
std::vector<TranslationQuiver> counted_quotients() {
    std::vector<TranslationQuiver> out;
    for (int n = 1; n <= 6; ++n) out.push_back(build_quotient(build_dynkin(DynkinKind::A, n + 1), {n, false}));
    for (int n = 2; n <= 4; ++n) {
        out.push_back(build_quotient(build_dynkin(DynkinKind::B, n + 1), {2 * n, false}));
        out.push_back(build_quotient(build_dynkin(DynkinKind::C, n + 1), {2 * n, false}));
        out.push_back(build_quotient(build_dynkin(DynkinKind::D, n + 2), {2 * n, false}));
    }
    return out;
}

std::vector<Slot> base_slots(const DynkinDiagram& dg, int columns) {
    std::vector<Slot> out;
    for (std::int64_t c = 0; c < columns; ++c)
        for (int i = 0; i < dg.rank; ++i) out.push_back(slot_at(dg, c, i));
    return out;
}

void counting_tables(Failures& f) {
    f.expect(seq(motzkin, 0, 10) == "1,1,2,4,9,21,51,127,323,835,2188", "M(0..10)");
    f.expect(seq(m_sym, 0, 10) == "1,2,5,13,35,96,267,750,2123,6046,17303", "Ms(0..10)");
    f.expect(seq(m_cross, 0, 10) == "1,1,1,3,10,30,90,266,784,2304,6765", "Mc(0..10)");
    for (int n = 0; n <= 40; ++n) {
        f.expect(motzkin(n) == motzkin_closed(n), "M recursive vs closed at " + std::to_string(n));
        f.expect(m_sym(n) == m_sym_closed(n), "Ms recursive vs closed at " + std::to_string(n));
        f.expect(m_cross(n) == m_cross_closed(n), "Mc recursive vs closed at " + std::to_string(n));
    }
}

void brauer_enumeration(Failures& f) {
    for (int n = 0; n <= 12; ++n)
        f.expect(BigInt(enumerate_plain(n).size()) == motzkin(n), "|plain(" + std::to_string(n) + ")|");
    for (int n = 2; n <= 9; ++n) {
        auto sym = enumerate_symmetric(n);
        auto cross = enumerate_crossing(n);
        f.expect(BigInt(sym.size()) == m_sym(n), "|symmetric(" + std::to_string(n) + ")|");
        f.expect(BigInt(cross.size()) == m_cross(n), "|crossing(" + std::to_string(n) + ")|");
        for (const auto& b : sym) f.expect(is_noncrossing(b.sigma) && is_rotation_symmetric(b.sigma), b.text());
        for (const auto& b : cross)
            f.expect(is_rotation_symmetric(b.sigma) && crossing_pairs(b.sigma).size() == 1, b.text());
    }
    std::set<std::string> plain4;
    for (const auto& b : enumerate_plain(4)) plain4.insert(b.text());
    f.expect(plain4 == std::set<std::string>{"{1}{2}{3}{4}", "{1,2}{3}{4}", "{1}{2,3}{4}", "{1}{2}{3,4}", "{1,4}{2}{3}",
                                              "{1,3}{2}{4}", "{1}{2,4}{3}", "{1,2}{3,4}", "{1,4}{2,3}"},
             "rank-4 plain listing");
    f.expect(enumerate_symmetric(2).size() == 5, "rank-4 symmetric listing");
    auto c = enumerate_crossing(2);
    f.expect(c.size() == 1 && c[0].text() == "{1,3}{2,4}", "rank-4 crossing listing");
}

void type_a(Failures& f) {
    for (int n = 1; n <= 6; ++n) {
        auto q = build_quotient(build_dynkin(DynkinKind::A, n + 1), {n, false});
        auto hom = compute_quiver_hom(q);
        auto cs = enumerate_configurations(q, hom);
        f.expect(BigInt(cs.size()) == motzkin(n), name_of(q) + " count");
        for (const auto& c : cs) {
            auto l = labels_of(q, c.members);
            f.expect(psi_A(phi_A(l, n)) == l, name_of(q) + " psi(phi(C))");
        }
        for (const auto& b : enumerate_plain(n)) f.expect(phi_A(psi_A(b), n) == b, name_of(q) + " phi(psi(B))");
        if (n <= 4) {
            std::vector<std::vector<int>> fast;
            for (const auto& c : cs) fast.push_back(c.members);
            f.expect(fast == oracle::brute_force_configurations(q, hom), name_of(q) + " brute force");
        }
    }
}

void types_bcd(Failures& f) {
    for (int n = 2; n <= 4; ++n) {
        for (auto kind : {DynkinKind::B, DynkinKind::C}) {
            auto q = build_quotient(build_dynkin(kind, n + 1), {2 * n, false});
            f.expect(BigInt(enumerate_configurations(q).size()) == m_sym(n), name_of(q) + " count");
        }
        auto q = build_quotient(build_dynkin(DynkinKind::D, n + 2), {2 * n, false});
        std::size_t k1 = 0, k2 = 0;
        for (const auto& c : enumerate_configurations(q)) {
            auto l = labels_of(q, c.members);
            if (d_class(l, n) == 1) {
                ++k1;
                continue;
            }
            ++k2;
            auto s = involution_star(l);
            f.expect(s != l, name_of(q) + " star has a fixed point");
            f.expect(phi2_D(s, n) == phi2_D(l, n), name_of(q) + " phi2(C) != phi2(C*)");
        }
        f.expect(BigInt(k1) == m_sym(n), name_of(q) + " |C1|");
        f.expect(BigInt(k2) == 2 * m_cross(n), name_of(q) + " |C2|");
        if (n == 2) f.expect(k1 == 5 && k2 == 2, "D4 listing 5 + 2");
    }
}

void hom_oracles(Failures& f) {
    for (int rank = 2; rank <= 9; ++rank) {
        auto dg = build_dynkin(DynkinKind::A, rank);
        for (const auto& x : base_slots(dg, 1)) {
            auto t = cover_h(dg, x);
            for (std::int64_t lv = x.level - 2 * rank - 6; lv <= x.level + 6; ++lv)
                for (int i = 0; i < rank; ++i) {
                    if (dg.parity[i] != floor_mod(lv, 2)) continue;
                    Slot y{lv, i};
                    f.expect(t.h(y) == oracle::rectangle_h(dg, y, x), dg.name() + " rectangle rule");
                }
        }
    }
    auto shift = [](int v, int n) { return (v - 1 + n) % (2 * n) + 1; };
    for (int n = 1; n <= 8; ++n) {
        auto dg = build_dynkin(DynkinKind::A, n + 1);
        for (const auto& x : base_slots(dg, n)) {
            auto l = label_of(dg, x);
            auto w = label_of(dg, cover_h(dg, x).omega);
            f.expect(w.i == l.j && w.j == l.i, dg.name() + " omega label");
        }
    }
    for (int n = 2; n <= 6; ++n) {
        auto b = build_dynkin(DynkinKind::B, n + 1);
        for (const auto& x : base_slots(b, 2 * n)) {
            auto l = label_of(b, x);
            f.expect(label_of(b, cover_h(b, x).omega) == VertexLabel{shift(l.i, n), shift(l.j, n), 0},
                     b.name() + " omega label");
        }
        auto d = build_dynkin(DynkinKind::D, n + 2);
        for (const auto& x : base_slots(d, 2 * n)) {
            auto l = label_of(d, x);
            auto w = label_of(d, cover_h(d, x).omega);
            f.expect(l.sign != 0 ? w == VertexLabel{l.j, l.i, l.sign}
                                 : w == VertexLabel{shift(l.i, n), shift(l.j, n), 0},
                     d.name() + " omega label");
        }
    }
    for (const std::string t : {"A1", "A4", "A9", "B3", "B5", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
        auto dg = build_dynkin(t);
        for (const auto& x : base_slots(dg, 2)) {
            auto h = cover_h(dg, x);
            f.expect(h.h(h.omega) == 1, t + " h(omega x, x)");
            f.expect(h.h(x) >= 1, t + " h(x, x)");
        }
    }
    for (const auto& q : counted_quotients()) {
        for (int x = 0; x < q.size(); ++x) {
            auto cover = cover_h(*q.diagram, q.vertices[x].slot());
            std::map<int, std::int64_t> summed;
            for (const auto& [s, v] : cover.totals) summed[q.find(s)] += v;
            f.expect(summed == h_table(q, x).totals, name_of(q) + " quotient sum");
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void exceptional_counts(Failures& f) {
    RunOptions o;
    o.workers = 4;
    double small = 0.0;
    for (const auto& job : exceptional_jobs()) {
        auto r = run_exceptional(job.kind, o);
        f.expect(r.matches(), job.kind + " counts " + std::to_string(r.total) + " / " + std::to_string(r.mod_tau));
        if (job.kind == "E8")
            f.expect(r.seconds < 900.0, "E8 over 15 minutes");
        else
            small += r.seconds;
        auto golden = read_file(std::string(DYNCONF_SOURCE_DIR) + "/tests/golden/" + job.kind + ".configs.json");
        f.expect(!golden.empty() && configuration_list_to_json(*r.quiver, r.configurations) == json::parse(golden),
                 job.kind + " golden list");
    }
    f.expect(small < 120.0, "E6/E7/F4/G2 over 2 minutes");
}

void structural(Failures& f) {
    std::vector<TranslationQuiver> all = counted_quotients();
    for (const auto& job : exceptional_jobs()) all.push_back(build_quotient(build_dynkin(job.kind), job.group));
    for (const std::string t : {"A5", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"})
        all.push_back(build_z_window(build_dynkin(t), -2, 5));
    for (const auto& q : all) f.expect(!check_translation_identity(q), name_of(q) + " translation identity");

    for (const std::string t : {"A5", "B4", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        auto dg = build_dynkin(t);
        auto twist = diagram_twist(dg);
        for (const auto& x : base_slots(dg, 1)) {
            auto w = cover_h(dg, x).omega;
            f.expect(cover_h(dg, tau_slot(x)).omega == tau_slot(w), t + " omega and tau");
            if (twist)
                f.expect(cover_h(dg, Slot{x.level, (*twist)[x.node]}).omega == Slot{w.level, (*twist)[w.node]},
                         t + " omega and twist");
        }
    }

    for (const auto& q : all) {
        if (!q.group) continue;
        auto hom = compute_quiver_hom(q, 2);
        auto one = enumerate_configurations(q, hom, {1, {}});
        for (const auto& c : one) f.expect(is_configuration(q, hom, c.members).verdict, name_of(q) + " revalidation");
        for (int w : {2, 8}) {
            auto many = enumerate_configurations(q, hom, {w, {}});
            bool same = many.size() == one.size();
            for (std::size_t k = 0; same && k < one.size(); ++k) same = many[k].members == one[k].members;
            f.expect(same, name_of(q) + " determinism with " + std::to_string(w) + " workers");
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit;
        std::function<void(Failures&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "counting tables", 1.0, counting_tables},
        {2, "Brauer enumeration vs counts", 5.0, brauer_enumeration},
        {3, "type A pipeline", 30.0, type_a},
        {4, "types B, C, D", 120.0, types_bcd},
        {5, "hom-length oracles", 30.0, hom_oracles},
        {6, "exceptional counts", 1020.0, exceptional_counts},
        {7, "structural properties", 60.0, structural},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Failures f;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(f);
        } catch (const std::exception& e) {
            f.items.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit) f.items.push_back("took " + std::to_string(secs) + " s");
        bool pass = f.items.empty();
        all = all && pass;
        std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit);
        for (std::size_t k = 0; k < f.items.size() && k < 5; ++k) std::printf("    %s\n", f.items[k].c_str());
        if (f.items.size() > 5) std::printf("    ... %zu more\n", f.items.size() - 5);
    }
    return all ? 0 : 1;
}
