#include "dynconf/quiver.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <set>

#include "dynconf/error.hpp"

namespace dynconf {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

Slot slot_at(const DynkinDiagram& dg, std::int64_t column, int node) {
    return {2 * column + dg.parity.at(node), node};
}

std::uint64_t next_quiver_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

std::string GroupSpec::text() const {
    return "tau" + std::to_string(shift) + (twist ? "rho" : "");
}

GroupSpec GroupSpec::parse(const std::string& raw) {
    std::string s;
    for (char c : raw) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    GroupSpec g;
    std::size_t pos = 0;
    if (s.rfind("tau", 0) == 0) pos = 3;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(ErrorCode::InvalidArgument, "group '" + raw + "' has no shift");
    if (pos - start > 6) fail(ErrorCode::IllegalGroup, "shift too large in '" + raw + "'");
    g.shift = std::stoi(s.substr(start, pos - start));
    std::string rest = s.substr(pos);
    if (rest == "rho")
        g.twist = true;
    else if (!rest.empty())
        fail(ErrorCode::InvalidArgument, "cannot parse group '" + raw + "'");
    return g;
}

namespace {

int twist_node(const DynkinDiagram& dg, int node) {
    auto perm = diagram_twist(dg);
    if (!perm) fail(ErrorCode::IllegalGroup, "type " + dg.name() + " has no supported twist");
    return (*perm)[node];
}

}  // namespace

Slot apply_group(const DynkinDiagram& dg, const GroupSpec& g, const Slot& s, std::int64_t power) {
    Slot out{s.level - 2 * static_cast<std::int64_t>(g.shift) * power, s.node};
    if (g.twist && (power % 2 != 0)) out.node = twist_node(dg, s.node);
    return out;
}

Slot reduce_slot(const DynkinDiagram& dg, const GroupSpec& g, const Slot& s) {
    std::int64_t j = floor_div(s.level, 2 * static_cast<std::int64_t>(g.shift));
    return apply_group(dg, g, s, j);
}

bool TranslationQuiver::is_stable() const {
    for (int v = 0; v < size(); ++v)
        if (tau[v] < 0 || tau_inv[v] < 0 || projective[v] || injective[v]) return false;
    return true;
}

int TranslationQuiver::find(const Slot& s) const {
    Slot key = s;
    if (is_quotient()) {
        if (s.node < 0 || s.node >= diagram->rank) return -1;
        key = reduce_slot(*diagram, *group, s);
    }
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

void TranslationQuiver::finalize() {
    const int n = size();
    in_arrows.assign(n, {});
    out_arrows.assign(n, {});
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        out_arrows[arrows[a].src].push_back(a);
        in_arrows[arrows[a].dst].push_back(a);
    }
    if (tau.size() != static_cast<std::size_t>(n)) tau.assign(n, -1);
    tau_inv.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (tau[v] >= 0) tau_inv[tau[v]] = v;
    projective.resize(n, false);
    injective.resize(n, false);
    index_.clear();
    for (const auto& v : vertices)
        if (v.node >= 0) index_[v.slot()] = v.id;
}

TranslationQuiver build_z_window(const DynkinDiagram& dg, std::int64_t first_column,
                                 int num_columns) {
    if (num_columns < 1) fail(ErrorCode::InvalidArgument, "window needs at least one column");
    TranslationQuiver q;
    q.id = next_quiver_id();
    q.kind = dg.name();
    q.diagram = dg;
    q.window = {first_column, num_columns};

    std::map<Slot, int> at;
    for (std::int64_t p = first_column; p < first_column + num_columns; ++p) {
        for (int i = 0; i < dg.rank; ++i) {
            QuiverVertex v;
            v.id = q.size();
            v.level = 2 * p + dg.parity[i];
            v.node = i;
            at[v.slot()] = v.id;
            q.vertices.push_back(v);
        }
    }
    for (const auto& v : q.vertices) {
        for (const auto& [w, val] : dg.neighbours[v.node]) {
            auto it = at.find({v.level + 1, w});
            if (it != at.end()) q.arrows.push_back({v.id, it->second, val.d, val.dp});
        }
    }
    q.tau.assign(q.size(), -1);
    for (const auto& v : q.vertices) {
        auto it = at.find(tau_slot(v.slot()));
        if (it != at.end()) q.tau[v.id] = it->second;
    }
    q.finalize();
    for (int v = 0; v < q.size(); ++v) {
        q.projective[v] = q.tau[v] < 0;
        q.injective[v] = q.tau_inv[v] < 0;
    }
    return q;
}

AdmissibilityReport check_weakly_admissible(const DynkinDiagram& dg, const GroupSpec& g) {
    if (g.shift < 1) fail(ErrorCode::IllegalGroup, "shift must be at least 1");
    if (g.twist && !diagram_twist(dg))
        fail(ErrorCode::IllegalGroup, "type " + dg.name() + " has no supported twist");

    auto successors = [&](const Slot& s) {
        std::set<Slot> out;
        for (const auto& [w, val] : dg.neighbours[s.node]) out.insert({s.level + 1, w});
        return out;
    };

    AdmissibilityReport report;
    const std::int64_t width = 2 * static_cast<std::int64_t>(g.shift) + 2;
    // Powers beyond 2 only shift further; 1..3 covers twisted and untwisted parts.
    for (std::int64_t power = 1; power <= 3; ++power) {
        for (std::int64_t p = 0; p < width; ++p) {
            for (int i = 0; i < dg.rank; ++i) {
                Slot x = slot_at(dg, p, i);
                Slot gx = apply_group(dg, g, x, power);
                if (gx == x) {
                    report = {false, power, x, "g fixes a vertex"};
                    return report;
                }
                auto sx = successors(x);
                for (const auto& s : successors(gx)) {
                    if (sx.count(s)) {
                        report = {false, power, x, "x and gx share a direct successor"};
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

TranslationQuiver build_quotient(const DynkinDiagram& dg, const GroupSpec& g) {
    auto adm = check_weakly_admissible(dg, g);
    if (!adm.admissible) {
        std::string where;
        if (adm.witness)
            where = " at (level " + std::to_string(adm.witness->level) + ", node " +
                    std::to_string(adm.witness->node) + ")";
        fail(ErrorCode::NotWeaklyAdmissible, g.text() + " on " + dg.name() + ": " + adm.reason +
                                                 " for g^" + std::to_string(adm.witness_power) +
                                                 where);
    }

    TranslationQuiver q;
    q.id = next_quiver_id();
    q.kind = dg.name();
    q.diagram = dg;
    q.group = g;

    std::vector<Slot> reps;
    for (std::int64_t x = 0; x < 2 * static_cast<std::int64_t>(g.shift); ++x)
        for (int i = 0; i < dg.rank; ++i)
            if (dg.parity[i] == x % 2) reps.push_back({x, i});
    std::sort(reps.begin(), reps.end(), [](const Slot& a, const Slot& b) {
        return std::make_pair(column_of(a), a.node) < std::make_pair(column_of(b), b.node);
    });
    for (const auto& s : reps) {
        QuiverVertex v;
        v.id = q.size();
        v.level = s.level;
        v.node = s.node;
        q.vertices.push_back(v);
    }
    q.finalize();  // builds the slot index used by find()

    std::map<std::pair<int, int>, std::pair<int, int>> sums;
    for (const auto& v : q.vertices) {
        for (const auto& [w, val] : dg.neighbours[v.node]) {
            int dst = q.find({v.level + 1, w});
            auto& acc = sums[{v.id, dst}];
            acc.first += val.d;
            acc.second += val.dp;
        }
    }
    for (const auto& [key, val] : sums) q.arrows.push_back({key.first, key.second, val.first, val.second});
    q.tau.assign(q.size(), -1);
    for (const auto& v : q.vertices) q.tau[v.id] = q.find(tau_slot(v.slot()));
    q.finalize();
    return q;
}

TranslationQuiver attach_configuration(const TranslationQuiver& q, const std::vector<int>& members) {
    std::set<int> seen;
    for (int c : members) {
        if (c < 0 || c >= q.size())
            fail(ErrorCode::InvalidConfiguration, "vertex " + std::to_string(c) + " not in quiver");
        if (q.vertices[c].node < 0)
            fail(ErrorCode::InvalidConfiguration, "cannot attach to an attached vertex");
        if (!seen.insert(c).second)
            fail(ErrorCode::InvalidConfiguration, "vertex " + std::to_string(c) + " repeated");
    }
    TranslationQuiver out = q;
    out.id = next_quiver_id();
    for (int c : seen) {
        QuiverVertex p;
        p.id = out.size();
        p.level = q.vertices[c].level + 1;
        p.node = -1;
        p.attached = c;
        out.vertices.push_back(p);
        out.tau.push_back(-1);
        out.arrows.push_back({c, p.id, 1, 1});
        if (q.tau_inv[c] >= 0) out.arrows.push_back({p.id, q.tau_inv[c], 1, 1});
    }
    out.finalize();
    for (int v = 0; v < out.size(); ++v) {
        bool attached = out.vertices[v].node < 0;
        out.projective[v] = attached || (v < q.size() && q.projective[v]);
        out.injective[v] = attached || (v < q.size() && q.injective[v]);
    }
    return out;
}

std::optional<std::vector<int>> compute_symmetrizer(const TranslationQuiver& q) {
    // a_x d_xy = d'_xy a_y: propagate rationals as (num, den) then clear denominators.
    const int n = q.size();
    std::vector<std::int64_t> num(n, 0), den(n, 1);
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        num[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            auto visit = [&](int y, std::int64_t ny, std::int64_t dy) {
                if (!seen[y]) {
                    seen[y] = true;
                    num[y] = ny;
                    den[y] = dy;
                    stack.push_back(y);
                } else if (num[y] * dy != ny * den[y]) {
                    return false;
                }
                return true;
            };
            for (int a : q.out_arrows[x]) {
                const auto& ar = q.arrows[a];
                // a_y = a_x d / d'
                if (!visit(ar.dst, num[x] * ar.d, den[x] * ar.dp)) return std::nullopt;
            }
            for (int a : q.in_arrows[x]) {
                const auto& ar = q.arrows[a];
                // a_src d = d' a_x  =>  a_src = a_x d' / d
                if (!visit(ar.src, num[x] * ar.dp, den[x] * ar.d)) return std::nullopt;
            }
        }
    }
    std::int64_t lcm = 1;
    for (int v = 0; v < n; ++v) {
        std::int64_t g = std::gcd(num[v], den[v]);
        num[v] /= g;
        den[v] /= g;
        lcm = std::lcm(lcm, den[v]);
    }
    std::vector<int> a(n);
    std::int64_t g = 0;
    for (int v = 0; v < n; ++v) {
        std::int64_t value = num[v] * (lcm / den[v]);
        a[v] = static_cast<int>(value);
        g = std::gcd(g, value);
    }
    if (g > 1)
        for (auto& x : a) x = static_cast<int>(x / g);
    return a;
}

std::optional<std::string> check_translation_identity(const TranslationQuiver& q) {
    auto arrow_between = [&](int s, int t) -> const Arrow* {
        for (int a : q.out_arrows[s])
            if (q.arrows[a].dst == t) return &q.arrows[a];
        return nullptr;
    };
    for (int z = 0; z < q.size(); ++z) {
        int tz = q.tau[z];
        if (tz < 0) continue;
        std::set<int> preds;
        for (int a : q.in_arrows[z]) {
            const auto& ar = q.arrows[a];
            preds.insert(ar.src);
            const Arrow* back = arrow_between(tz, ar.src);
            if (!back)
                return "no arrow tau(" + std::to_string(z) + ") -> " + std::to_string(ar.src);
            if (back->dp != ar.d)
                return "d' from tau(" + std::to_string(z) + ") to " + std::to_string(ar.src) +
                       " is " + std::to_string(back->dp) + ", expected " + std::to_string(ar.d);
        }
        for (int a : q.out_arrows[tz])
            if (!preds.count(q.arrows[a].dst))
                return "arrow tau(" + std::to_string(z) + ") -> " + std::to_string(q.arrows[a].dst) +
                       " has no partner into " + std::to_string(z);
    }
    return std::nullopt;
}

}  // namespace dynconf
