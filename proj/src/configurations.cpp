#include "dynconf/configurations.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "dynconf/error.hpp"

namespace dynconf {

int required_h(int d, int c, int omega_c) {
    if (d == c && c == omega_c) return 2;
    if (d == c) return 1;
    if (d == omega_c) return 1;
    return 0;
}

ConfigurationReport is_configuration(const TranslationQuiver& q, const std::vector<int>& members) {
    for (int c : members)
        if (c < 0 || c >= q.size())
            fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(c) + " is not in the quiver");
    return is_configuration(q, compute_quiver_hom(q), members);
}

ConfigurationReport is_configuration(const TranslationQuiver& q, const QuiverHom& hom,
                                     const std::vector<int>& members) {
    std::vector<int> cs = members;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (int c : cs)
        if (c < 0 || c >= q.size())
            fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(c) + " is not in the quiver");

    ConfigurationReport report;
    std::vector<bool> in(q.size(), false);
    for (int c : cs) in[c] = true;

    for (int c : cs) {
        int oc = hom.omega[c];
        if (!in[oc]) {
            report.violations.push_back(
                {"omega", {c, oc}, "omega(" + std::to_string(c) + ") = " + std::to_string(oc) + " is missing"});
            break;
        }
    }

    bool c2_done = false;
    for (int c : cs) {
        for (int d : cs) {
            std::int64_t want = required_h(d, c, hom.omega[c]);
            std::int64_t got = hom.h(d, c);
            if (got != want) {
                report.violations.push_back({"C2",
                                             {c, d},
                                             "h(" + std::to_string(d) + ", " + std::to_string(c) + ") = " +
                                                 std::to_string(got) + ", required " + std::to_string(want)});
                c2_done = true;
                break;
            }
        }
        if (c2_done) break;
    }

    std::vector<bool> covered(q.size(), false);
    for (int c : cs)
        for (const auto& [y, v] : hom.tables[c]->totals) covered[y] = true;
    for (int y = 0; y < q.size(); ++y) {
        if (!covered[y]) {
            report.violations.push_back({"C1", {y}, "vertex " + std::to_string(y) + " lies in no H(c)"});
            break;
        }
    }
    report.verdict = report.violations.empty();
    return report;
}

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        r &= o;
        return r;
    }

    // first index not set, or -1
    int first_clear() const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t inv = ~w_[k];
            if (inv) {
                int i = static_cast<int>(k * 64) + __builtin_ctzll(inv);
                return i < n_ ? i : -1;
            }
        }
        return -1;
    }
    // true when every bit below n is set in this | other
    bool covers_with(const Bits& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t v = w_[k] | other.w_[k];
            std::uint64_t mask = ~std::uint64_t{0};
            if (k + 1 == w_.size() && (n_ & 63)) mask = (std::uint64_t{1} << (n_ & 63)) - 1;
            if ((v & mask) != mask) return false;
        }
        return true;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                int b = __builtin_ctzll(x);
                fn(static_cast<int>(k * 64) + b);
                x &= x - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct SearchSpace {
    int n = 0;
    std::vector<std::vector<int>> atoms;  // omega-orbits, valid on their own
    std::vector<Bits> cover;              // vertices covered by the atom
    std::vector<Bits> compat;             // atoms pairwise compatible with it
    std::vector<Bits> covering;           // per vertex: atoms covering it
};

SearchSpace build_space(const TranslationQuiver& q, const QuiverHom& hom) {
    SearchSpace sp;
    sp.n = q.size();
    std::vector<bool> seen(sp.n, false);
    for (int c = 0; c < sp.n; ++c) {
        if (seen[c]) continue;
        std::vector<int> atom{c};
        seen[c] = true;
        for (int o = hom.omega[c]; !seen[o]; o = hom.omega[o]) {
            atom.push_back(o);
            seen[o] = true;
        }
        std::sort(atom.begin(), atom.end());
        bool ok = true;
        for (int x : atom)
            for (int y : atom)
                if (hom.h(y, x) != required_h(y, x, hom.omega[x])) ok = false;
        if (ok) sp.atoms.push_back(atom);
    }
    const int na = static_cast<int>(sp.atoms.size());
    sp.cover.assign(na, Bits(sp.n));
    sp.compat.assign(na, Bits(na));
    sp.covering.assign(sp.n, Bits(na));
    for (int a = 0; a < na; ++a) {
        for (int c : sp.atoms[a])
            for (const auto& [y, v] : hom.tables[c]->totals) sp.cover[a].set(y);
        sp.cover[a].for_each([&](int y) { sp.covering[y].set(a); });
    }
    for (int a = 0; a < na; ++a)
        for (int b = a + 1; b < na; ++b) {
            bool ok = true;
            for (int c : sp.atoms[a])
                for (int d : sp.atoms[b])
                    if (hom.h(d, c) != 0 || hom.h(c, d) != 0) ok = false;
            if (ok) {
                sp.compat[a].set(b);
                sp.compat[b].set(a);
            }
        }
    return sp;
}

class Searcher {
public:
    Searcher(const SearchSpace& sp, std::optional<std::chrono::steady_clock::time_point> deadline,
             std::atomic<bool>& stop)
        : sp_(sp), deadline_(deadline), stop_(stop) {}

    void run(std::vector<int>& chosen, const Bits& covered, const Bits& allowed) {
        if (stop_.load(std::memory_order_relaxed)) return;
        if (deadline_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            stop_ = true;
            return;
        }
        int y = covered.first_clear();
        if (y < 0) {
            record(chosen);
            return;
        }
        Bits cand = allowed & sp_.covering[y];
        if (!cand.any()) return;
        Bits coverable(sp_.n);
        allowed.for_each([&](int a) { coverable |= sp_.cover[a]; });
        if (!covered.covers_with(coverable)) return;

        Bits rest = allowed;
        cand.for_each([&](int a) {
            rest.reset(a);
            Bits next_cov = covered;
            next_cov |= sp_.cover[a];
            chosen.push_back(a);
            run(chosen, next_cov, rest & sp_.compat[a]);
            chosen.pop_back();
        });
    }

    std::vector<std::vector<int>> results;

private:
    void record(const std::vector<int>& chosen) {
        std::vector<int> members;
        for (int a : chosen) members.insert(members.end(), sp_.atoms[a].begin(), sp_.atoms[a].end());
        std::sort(members.begin(), members.end());
        results.push_back(std::move(members));
    }

    const SearchSpace& sp_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool>& stop_;
    std::uint64_t ticks_ = 0;
};

}  // namespace

std::vector<Configuration> enumerate_configurations(const TranslationQuiver& q, const EnumerateOptions& options) {
    return enumerate_configurations(q, compute_quiver_hom(q, options.workers), options);
}

std::vector<Configuration> enumerate_configurations(const TranslationQuiver& q, const QuiverHom& hom,
                                                    const EnumerateOptions& options) {
    if (!q.is_stable()) fail(ErrorCode::InvalidArgument, "enumeration needs a finite stable quiver");
    const SearchSpace sp = build_space(q, hom);
    const int na = static_cast<int>(sp.atoms.size());
    std::vector<std::vector<int>> all;
    std::atomic<bool> stop{false};

    Bits covered(sp.n);
    Bits allowed(na);
    for (int a = 0; a < na; ++a) allowed.set(a);

    int y0 = covered.first_clear();
    if (y0 < 0) {
        all.push_back({});
    } else {
        // First-level branches become independent tasks.
        struct Task {
            int atom;
            Bits allowed;
        };
        std::vector<Task> tasks;
        Bits rest = allowed;
        (allowed & sp.covering[y0]).for_each([&](int a) {
            rest.reset(a);
            tasks.push_back({a, rest & sp.compat[a]});
        });
        std::vector<std::vector<std::vector<int>>> per_task(tasks.size());
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> done{0};
        auto worker = [&] {
            Searcher s(sp, options.deadline, stop);
            while (true) {
                std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                std::vector<int> chosen{tasks[t].atom};
                Bits cov(sp.n);
                cov |= sp.cover[tasks[t].atom];
                s.results.clear();
                s.run(chosen, cov, tasks[t].allowed);
                per_task[t] = std::move(s.results);
                if (!stop) done.fetch_add(1);
            }
        };
        int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(tasks.size())));
        if (workers == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        std::size_t found = 0;
        for (auto& r : per_task) found += r.size();
        if (stop)
            fail(ErrorCode::TimeBudgetExceeded,
                 "enumeration stopped at the time budget after " + std::to_string(done.load()) + " of " +
                     std::to_string(tasks.size()) + " first-level branches, " + std::to_string(found) +
                     " configurations found so far");
        for (auto& r : per_task)
            for (auto& m : r) all.push_back(std::move(m));
    }
    std::sort(all.begin(), all.end());
    std::vector<Configuration> out;
    out.reserve(all.size());
    for (auto& m : all) out.push_back({q.id, std::move(m)});
    return out;
}

std::vector<int> tau_translate(const TranslationQuiver& q, const std::vector<int>& members) {
    std::vector<int> out;
    out.reserve(members.size());
    for (int c : members) {
        if (c < 0 || c >= q.size() || q.tau[c] < 0)
            fail(ErrorCode::UnknownVertex, "tau undefined at vertex " + std::to_string(c));
        out.push_back(q.tau[c]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_mod_tau(const TranslationQuiver& q, const std::vector<Configuration>& configs) {
    std::set<std::vector<int>> pending;
    for (const auto& c : configs) pending.insert(c.members);
    std::size_t orbits = 0;
    while (!pending.empty()) {
        std::vector<int> start = *pending.begin();
        ++orbits;
        std::vector<int> cur = start;
        do {
            pending.erase(cur);
            cur = tau_translate(q, cur);
        } while (cur != start);
    }
    return orbits;
}

TranslationQuiver attach_validated(const TranslationQuiver& q, const std::vector<int>& members) {
    auto report = is_configuration(q, members);
    if (!report.verdict) {
        const auto& v = report.violations.front();
        fail(ErrorCode::InvalidConfiguration, v.condition + ": " + v.detail);
    }
    return attach_configuration(q, members);
}

LabelSet labels_of(const TranslationQuiver& q, const std::vector<int>& members) {
    LabelSet out;
    for (int c : members) out.insert(label_of(q, c));
    return out;
}

std::vector<int> members_of(const TranslationQuiver& q, const LabelSet& labels) {
    std::vector<int> out;
    LabelSet hit;
    for (int v = 0; v < q.size(); ++v) {
        if (q.vertices[v].node < 0) continue;
        auto l = label_of(q, v);
        if (labels.count(l)) {
            out.push_back(v);
            hit.insert(l);
        }
    }
    for (const auto& l : labels)
        if (!hit.count(l)) fail(ErrorCode::UnknownVertex, "label " + l.text() + " names no vertex");
    return out;
}

namespace {

int mod1(int value, int p) { return static_cast<int>(floor_mod(value - 1, p)) + 1; }

// Relation generated by i ~ j over the (unsigned) labels; nullopt when some
// point would land in a class of size three or more.
std::optional<std::vector<int>> generated_relation(const LabelSet& c, int points) {
    std::vector<int> sigma(points);
    for (int k = 1; k <= points; ++k) sigma[k - 1] = k;
    for (const auto& l : c) {
        if (l.i < 1 || l.i > points || l.j < 1 || l.j > points) return std::nullopt;
        if (l.i == l.j) continue;
        int a = l.i, b = l.j;
        if (sigma[a - 1] == b) continue;
        if (sigma[a - 1] != a || sigma[b - 1] != b) return std::nullopt;
        sigma[a - 1] = b;
        sigma[b - 1] = a;
    }
    return sigma;
}

BrauerRelation relation_or_throw(const LabelSet& c, int points, BrauerFamily family) {
    auto sigma = generated_relation(c, points);
    if (!sigma) fail(ErrorCode::NotAConfiguration, "labels generate a class with more than two points");
    return {points, *sigma, family};
}

void require_family(const BrauerRelation& b, BrauerFamily family) {
    bool ok = is_involution(b.sigma);
    switch (family) {
    case BrauerFamily::Plain:
        ok = ok && is_noncrossing(b.sigma);
        break;
    case BrauerFamily::Symmetric:
        ok = ok && is_noncrossing(b.sigma) && is_rotation_symmetric(b.sigma);
        break;
    case BrauerFamily::Crossing: {
        ok = ok && is_rotation_symmetric(b.sigma);
        if (ok) {
            auto cr = crossing_pairs(b.sigma);
            const int n = b.num_points / 2;
            ok = cr.size() == 1 && cr[0].first.second - cr[0].first.first == n &&
                 cr[0].second.second - cr[0].second.first == n;
        }
        break;
    }
    }
    if (!ok)
        fail(ErrorCode::NotPlain, "relation " + b.text() + " is not a " + family_name(family) + " 2-Brauer relation");
}

// Labels {[k sigma(k)]} of a symmetric relation on 2n points that name
// vertices; diameters produce both signed copies when `signs` is set.
LabelSet symmetric_labels(const BrauerRelation& b, bool signs) {
    const int p = b.num_points;
    const int n = p / 2;
    LabelSet out;
    for (int k = 1; k <= p; ++k) {
        int t = b(k);
        int diff = static_cast<int>(floor_mod(t - k, p));
        if (diff == n && signs) {
            out.insert({k, t, 1});
            out.insert({k, t, -1});
        } else if (diff <= n) {
            out.insert({k, t, 0});
        }
    }
    return out;
}

LabelSet unsigned_part(const LabelSet& c) {
    LabelSet out;
    for (const auto& l : c) out.insert({l.i, l.j, 0});
    return out;
}

}  // namespace

BrauerRelation phi_A(const LabelSet& c, int n) {
    auto b = relation_or_throw(c, n, BrauerFamily::Plain);
    if (!is_noncrossing(b.sigma)) fail(ErrorCode::NotAConfiguration, "generated relation crosses");
    if (psi_A(b) != c) fail(ErrorCode::NotAConfiguration, "label set is not the image of a 2-Brauer relation");
    return b;
}

LabelSet psi_A(const BrauerRelation& b) {
    require_family(b, BrauerFamily::Plain);
    LabelSet out;
    for (int k = 1; k <= b.num_points; ++k) out.insert({k, b(k), 0});
    return out;
}

BrauerRelation phi_B(const LabelSet& c, int n) {
    auto b = relation_or_throw(c, 2 * n, BrauerFamily::Symmetric);
    if (!is_noncrossing(b.sigma) || !is_rotation_symmetric(b.sigma))
        fail(ErrorCode::NotAConfiguration, "generated relation is not symmetric and noncrossing");
    if (psi_B(b) != c) fail(ErrorCode::NotAConfiguration, "label set is not the image of a symmetric relation");
    return b;
}

LabelSet psi_B(const BrauerRelation& b) {
    require_family(b, BrauerFamily::Symmetric);
    return symmetric_labels(b, false);
}

BrauerRelation phi_C(const LabelSet& c, int n) { return phi_B(c, n); }
LabelSet psi_C(const BrauerRelation& b) { return psi_B(b); }

int d_class(const LabelSet& c, int n) {
    std::map<int, std::set<std::pair<int, int>>> by_index;  // index -> {(first coordinate, sign)}
    for (const auto& l : c)
        if (l.sign != 0) by_index[mod1(l.i, n)].insert({l.i, l.sign});
    if (by_index.empty()) return 1;
    if (by_index.size() == 1 && by_index.begin()->second.size() == 4) return 1;
    if (by_index.size() == 2) {
        std::set<int> signs;
        for (const auto& [idx, entries] : by_index) {
            std::set<int> s;
            for (auto [i, sg] : entries) s.insert(sg);
            if (s.size() != 1 || entries.size() != 2) fail(ErrorCode::NotAConfiguration, "signed vertices do not pair up");
            signs.insert(*s.begin());
        }
        if (signs.size() == 2) return 2;
    }
    fail(ErrorCode::NotAConfiguration, "signed vertices match neither configuration class");
}

BrauerRelation phi1_D(const LabelSet& c, int n) {
    if (d_class(c, n) != 1) fail(ErrorCode::WrongClass, "configuration is of the second class");
    auto b = relation_or_throw(unsigned_part(c), 2 * n, BrauerFamily::Symmetric);
    if (!is_noncrossing(b.sigma) || !is_rotation_symmetric(b.sigma))
        fail(ErrorCode::NotAConfiguration, "generated relation is not symmetric and noncrossing");
    if (psi1_D(b) != c) fail(ErrorCode::NotAConfiguration, "label set is not the image of a symmetric relation");
    return b;
}

LabelSet psi1_D(const BrauerRelation& b) {
    require_family(b, BrauerFamily::Symmetric);
    return symmetric_labels(b, true);
}

BrauerRelation phi2_D(const LabelSet& c, int n) {
    if (d_class(c, n) != 2) fail(ErrorCode::WrongClass, "configuration is of the first class");
    std::vector<int> sigma(2 * n);
    for (int k = 1; k <= 2 * n; ++k) sigma[k - 1] = k;
    for (const auto& l : c) {
        if (l.i == l.j) continue;
        int a = l.i, b = l.j;
        if (sigma[a - 1] == b) continue;
        if (sigma[a - 1] != a || sigma[b - 1] != b)
            fail(ErrorCode::NotAConfiguration, "labels generate a class with more than two points");
        sigma[a - 1] = b;
        sigma[b - 1] = a;
    }
    BrauerRelation b{2 * n, sigma, BrauerFamily::Crossing};
    require_family(b, BrauerFamily::Crossing);
    auto [first, second] = psi2_D(b);
    if (first != c && second != c) fail(ErrorCode::NotAConfiguration, "label set is not the image of a crossing relation");
    return b;
}

std::pair<LabelSet, LabelSet> psi2_D(const BrauerRelation& b) {
    require_family(b, BrauerFamily::Crossing);
    const int p = b.num_points;
    const int n = p / 2;
    LabelSet base;
    std::vector<int> diameters;
    for (int k = 1; k <= p; ++k) {
        int t = b(k);
        int diff = static_cast<int>(floor_mod(t - k, p));
        if (diff == n) {
            if (k <= n) diameters.push_back(k);
        } else if (diff < n) {
            base.insert({k, t, 0});
        }
    }
    const int s = diameters.at(0), t = diameters.at(1);
    LabelSet c = base;
    c.insert({s, s + n, 1});
    c.insert({s + n, s, 1});
    c.insert({t, t + n, -1});
    c.insert({t + n, t, -1});
    return {c, involution_star(c)};
}

LabelSet involution_star(const LabelSet& c) {
    LabelSet out;
    for (const auto& l : c) out.insert({l.i, l.j, -l.sign});
    return out;
}

std::vector<Slot> lift_configuration(const TranslationQuiver& window, const TranslationQuiver& quotient,
                                     const std::vector<int>& members) {
    if (!quotient.is_quotient()) fail(ErrorCode::InvalidArgument, "lift needs a quotient quiver");
    if (members.empty()) fail(ErrorCode::InvalidConfiguration, "the empty set covers nothing");
    std::set<int> in(members.begin(), members.end());
    std::vector<Slot> out;
    for (const auto& v : window.vertices)
        if (v.node >= 0 && in.count(quotient.find(v.slot()))) out.push_back(v.slot());
    return out;
}

std::vector<int> descend_configuration(const TranslationQuiver& window, const TranslationQuiver& quotient,
                                       const std::vector<Slot>& cover_members) {
    if (!quotient.is_quotient()) fail(ErrorCode::InvalidArgument, "descend needs a quotient quiver");
    std::set<Slot> in(cover_members.begin(), cover_members.end());
    std::set<int> images;
    for (const auto& s : cover_members) {
        if (window.find(s) < 0) fail(ErrorCode::UnknownVertex, "slot outside the window");
        images.insert(quotient.find(s));
    }
    for (const auto& v : window.vertices) {
        if (v.node < 0) continue;
        bool hit = images.count(quotient.find(v.slot())) > 0;
        if (hit != (in.count(v.slot()) > 0))
            fail(ErrorCode::NotGStable, "set is not stable under " + quotient.group->text() + " inside the window");
    }
    return {images.begin(), images.end()};
}

ConfigurationReport check_on_cover(const TranslationQuiver& quotient, const std::vector<int>& members) {
    if (!quotient.is_quotient()) fail(ErrorCode::InvalidArgument, "cover check needs a quotient quiver");
    const auto& dg = *quotient.diagram;
    const auto& g = *quotient.group;
    std::set<int> in(members.begin(), members.end());
    auto lifted = [&](const Slot& s) { return in.count(quotient.find(s)) > 0; };

    ConfigurationReport report;
    std::map<Slot, CoverHom> cache;
    auto hom_at = [&](const Slot& s) -> const CoverHom& {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, cover_h(dg, s)).first;
        return it->second;
    };

    std::int64_t span = 0;
    for (int c : members) {
        Slot s = quotient.vertices[c].slot();
        const CoverHom& hc = hom_at(s);
        std::set<Slot> meet;
        for (const auto& [y, v] : hc.totals) {
            span = std::max(span, s.level - y.level);
            if (lifted(y)) meet.insert(y);
        }
        std::set<Slot> want{s, hc.omega};
        if (meet != want && report.violations.empty())
            report.violations.push_back({"C2", {c}, "C meets H(c) outside {c, omega c} on the cover"});
    }

    const std::int64_t period = 2 * static_cast<std::int64_t>(g.shift);
    std::set<Slot> covered;
    for (std::int64_t j = 0; j * period <= span + period; ++j) {
        for (int c : members) {
            Slot s = apply_group(dg, g, quotient.vertices[c].slot(), -j);
            for (const auto& [y, v] : hom_at(s).totals) covered.insert(y);
        }
    }
    for (std::int64_t x = 0; x < period && report.violations.size() < 2; ++x)
        for (int i = 0; i < dg.rank; ++i) {
            if (dg.parity[i] != x % 2) continue;
            if (!covered.count({x, i})) {
                report.violations.push_back({"C1", {quotient.find({x, i})}, "slot not covered on the cover"});
                break;
            }
        }
    report.verdict = report.violations.empty();
    return report;
}

BijectionReport bijection_report(const DynkinDiagram& dg) {
    const int n = label_n(dg);
    const int shift = dg.kind == DynkinKind::A ? n : 2 * n;
    auto q = build_quotient(dg, {shift, false});
    auto configs = enumerate_configurations(q);
    BijectionReport rep;
    rep.configurations = configs.size();
    auto note = [&](bool good, const std::string& what) {
        if (!good) rep.ok = false;
        rep.lines.push_back(std::string(good ? "ok    " : "FAIL  ") + what);
    };

    std::set<std::vector<int>> config_set;
    for (const auto& c : configs) config_set.insert(c.members);

    std::size_t round_trips = 0, images_ok = 0;
    if (dg.kind == DynkinKind::A || dg.kind == DynkinKind::B || dg.kind == DynkinKind::C) {
        auto rels = dg.kind == DynkinKind::A ? enumerate_plain(n) : enumerate_symmetric(n);
        rep.relations = rels.size();
        for (const auto& c : configs) {
            auto labels = labels_of(q, c.members);
            auto b = dg.kind == DynkinKind::A ? phi_A(labels, n) : phi_B(labels, n);
            auto back = dg.kind == DynkinKind::A ? psi_A(b) : psi_B(b);
            if (back == labels) ++round_trips;
        }
        for (const auto& b : rels) {
            auto labels = dg.kind == DynkinKind::A ? psi_A(b) : psi_B(b);
            auto members = members_of(q, labels);
            bool good = config_set.count(members) > 0;
            auto again = dg.kind == DynkinKind::A ? phi_A(labels, n) : phi_B(labels, n);
            if (good && again == b) ++images_ok;
        }
        note(round_trips == configs.size(), "psi(phi(C)) = C for " + std::to_string(round_trips) + "/" +
                                                std::to_string(configs.size()) + " configurations");
        note(images_ok == rels.size(), "psi(B) is a configuration and phi(psi(B)) = B for " +
                                           std::to_string(images_ok) + "/" + std::to_string(rels.size()) + " relations");
        note(configs.size() == rels.size(), "cardinalities " + std::to_string(configs.size()) + " and " +
                                                std::to_string(rels.size()));
        return rep;
    }
    if (dg.kind != DynkinKind::D) fail(ErrorCode::NotClassicalType, "no bijection for " + dg.name());

    auto sym = enumerate_symmetric(n);
    auto cross = enumerate_crossing(n);
    rep.relations = sym.size() + cross.size();
    std::size_t k1 = 0, k2 = 0, star_ok = 0, rt1 = 0, rt2 = 0;
    for (const auto& c : configs) {
        auto labels = labels_of(q, c.members);
        if (d_class(labels, n) == 1) {
            ++k1;
            if (psi1_D(phi1_D(labels, n)) == labels) ++rt1;
        } else {
            ++k2;
            auto star = involution_star(labels);
            bool good = star != labels && involution_star(star) == labels &&
                        config_set.count(members_of(q, star)) > 0 && phi2_D(labels, n) == phi2_D(star, n);
            if (good) ++star_ok;
            auto [a, b] = psi2_D(phi2_D(labels, n));
            if (a == labels || b == labels) ++rt2;
        }
    }
    std::size_t img1 = 0, img2 = 0;
    for (const auto& b : sym) {
        auto labels = psi1_D(b);
        if (config_set.count(members_of(q, labels)) && phi1_D(labels, n) == b) ++img1;
    }
    for (const auto& b : cross) {
        auto [x, y] = psi2_D(b);
        if (config_set.count(members_of(q, x)) && config_set.count(members_of(q, y)) && phi2_D(x, n) == b &&
            phi2_D(y, n) == b)
            ++img2;
    }
    note(k1 == sym.size(), "class 1: " + std::to_string(k1) + " configurations, " + std::to_string(sym.size()) +
                               " symmetric relations");
    note(k2 == 2 * cross.size(), "class 2: " + std::to_string(k2) + " configurations, " +
                                     std::to_string(cross.size()) + " crossing relations (two-to-one)");
    note(rt1 == k1 && img1 == sym.size(), "class 1 round trips " + std::to_string(rt1) + "/" + std::to_string(k1) +
                                              ", relation images " + std::to_string(img1) + "/" +
                                              std::to_string(sym.size()));
    note(rt2 == k2 && img2 == cross.size(), "class 2 round trips " + std::to_string(rt2) + "/" +
                                                std::to_string(k2) + ", relation images " + std::to_string(img2) +
                                                "/" + std::to_string(cross.size()));
    note(star_ok == k2, "star is a fixed-point-free involution on class 2 with phi2(C) = phi2(C*) for " +
                            std::to_string(star_ok) + "/" + std::to_string(k2));
    return rep;
}

}  // namespace dynconf
