#include "dynconf/hom_length.hpp"

#include <thread>

#include "dynconf/error.hpp"

namespace dynconf {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "coefficient overflow");
    return r;
}

using Signed = std::map<int, std::int64_t>;

Signed theta_signed(const TranslationQuiver& q, const VertexCombination& combo) {
    Signed out;
    for (const auto& [v, c] : combo.coefficients())
        for (int a : q.in_arrows[v]) {
            const auto& ar = q.arrows[a];
            out[ar.src] = checked_add(out[ar.src], checked_mul(ar.d, c));
        }
    return out;
}

bool is_window(const TranslationQuiver& q) { return q.window.has_value(); }

void check_clipping(const TranslationQuiver& q, const VertexCombination& combo) {
    if (!is_window(q)) return;
    for (const auto& [v, c] : combo.coefficients())
        if (q.tau[v] < 0)
            fail(ErrorCode::Clipped, "support reaches the window frontier at vertex " + std::to_string(v));
}

// h'_n = theta(row_{n-1}) - tau(row_{n-2}), unclamped.
Signed next_unclamped(const TranslationQuiver& q, const VertexCombination& prev1,
                      const VertexCombination& prev2) {
    Signed out = theta_signed(q, prev1);
    for (const auto& [v, c] : prev2.coefficients()) {
        int t = q.tau[v];
        if (t < 0) {
            if (is_window(q)) fail(ErrorCode::Clipped, "tau undefined inside the support");
            continue;
        }
        out[t] = checked_add(out[t], -c);
    }
    return out;
}

VertexCombination clamp(const Signed& s) {
    VertexCombination c;
    for (const auto& [v, k] : s)
        if (k > 0) c.add(v, k);
    return c;
}

}  // namespace

void VertexCombination::add(int vertex, std::int64_t amount) {
    if (amount == 0) return;
    auto it = coeffs_.find(vertex);
    if (it == coeffs_.end()) {
        if (amount < 0) fail(ErrorCode::InvalidArgument, "negative coefficient in combination");
        coeffs_.emplace(vertex, amount);
        return;
    }
    it->second = checked_add(it->second, amount);
    if (it->second < 0) fail(ErrorCode::InvalidArgument, "negative coefficient in combination");
    if (it->second == 0) coeffs_.erase(it);
}

std::int64_t VertexCombination::operator[](int vertex) const {
    auto it = coeffs_.find(vertex);
    return it == coeffs_.end() ? 0 : it->second;
}

std::vector<int> VertexCombination::support() const {
    std::vector<int> out;
    out.reserve(coeffs_.size());
    for (const auto& [v, c] : coeffs_) out.push_back(v);
    return out;
}

VertexCombination VertexCombination::clamped_minus(const VertexCombination& other) const {
    VertexCombination out;
    for (const auto& [v, c] : coeffs_) {
        std::int64_t r = c - other[v];
        if (r > 0) out.coeffs_.emplace(v, r);
    }
    return out;
}

VertexCombination theta(const TranslationQuiver& q, const VertexCombination& combo) {
    return clamp(theta_signed(q, combo));
}

VertexCombination apply_tau(const TranslationQuiver& q, const VertexCombination& combo) {
    VertexCombination out;
    for (const auto& [v, c] : combo.coefficients()) {
        if (q.tau[v] < 0) fail(ErrorCode::Clipped, "tau undefined at vertex " + std::to_string(v));
        out.add(q.tau[v], c);
    }
    return out;
}

std::vector<int> HomTable::support() const {
    std::vector<int> out;
    for (const auto& [v, c] : totals) out.push_back(v);
    return out;
}

int default_iteration_cap(const TranslationQuiver& q) { return 4 * q.size() + 8; }

HomTable h_table(const TranslationQuiver& q, int x, int cap) {
    if (x < 0 || x >= q.size()) fail(ErrorCode::UnknownVertex, "no vertex " + std::to_string(x));
    if (cap <= 0) cap = default_iteration_cap(q);

    HomTable t;
    t.quiver_id = q.id;
    t.base = x;
    VertexCombination prev2;
    VertexCombination prev1 = VertexCombination::unit(x);
    t.rows.push_back(prev1);
    while (true) {
        check_clipping(q, prev1);
        VertexCombination next = clamp(next_unclamped(q, prev1, prev2));
        if (next.empty()) break;
        t.rows.push_back(next);
        if (static_cast<int>(t.rows.size()) > cap)
            fail(ErrorCode::NonTerminating, "theta recursion exceeded " + std::to_string(cap) +
                                                " steps from vertex " + std::to_string(x));
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    t.m = static_cast<int>(t.rows.size());
    for (const auto& row : t.rows)
        for (const auto& [v, c] : row.coefficients()) t.totals[v] = checked_add(t.totals[v], c);
    const auto& last = t.rows.back();
    if (last.size() == 1 && last.coefficients().begin()->second == 1)
        t.omega = last.coefficients().begin()->first;
    return t;
}

VertexCombination theta_n(const TranslationQuiver& q, int x, int n) {
    if (n < 0) return {};
    auto table = global_hom_cache().get(q, x);
    if (n < static_cast<int>(table->rows.size())) return table->rows[n];
    return {};
}

std::int64_t h(const TranslationQuiver& q, int y, int x) {
    if (y < 0 || y >= q.size()) fail(ErrorCode::UnknownVertex, "no vertex " + std::to_string(y));
    return global_hom_cache().get(q, x)->h(y);
}

OmegaResult omega(const TranslationQuiver& q, int x) {
    auto table = global_hom_cache().get(q, x);
    if (table->omega < 0)
        fail(ErrorCode::NonTerminating,
             "last nonzero theta row of vertex " + std::to_string(x) + " is not a single vertex");
    return {table->omega, table->m};
}

bool verify_sign_pattern(const TranslationQuiver& q, int x) {
    HomTable t = h_table(q, x);
    auto row = [&](int k) -> VertexCombination {
        if (k < 0 || k >= t.m) return {};
        return t.rows[k];
    };
    for (int n = 1; n <= t.m + 1; ++n) {
        check_clipping(q, row(n - 1));
        Signed hp = next_unclamped(q, row(n - 1), row(n - 2));
        for (const auto& [v, c] : hp) {
            if (n < t.m && c < 0) return false;
            if (n >= t.m && c > 0) return false;
        }
    }
    return t.omega >= 0;
}

std::shared_ptr<const HomTable> HomCache::get(const TranslationQuiver& q, int x) {
    const auto key = std::make_pair(q.id, x);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const HomTable>(h_table(q, x));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = tables_.emplace(key, table);
    return it->second;
}

std::size_t HomCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return tables_.size();
}

HomCache& global_hom_cache() {
    static HomCache cache;
    return cache;
}

QuiverHom compute_quiver_hom(const TranslationQuiver& q, int workers) {
    QuiverHom out;
    out.n = q.size();
    out.tables.resize(out.n);
    out.omega.assign(out.n, -1);
    out.dense.assign(static_cast<std::size_t>(out.n) * out.n, 0);

    auto work = [&](int start, int step) {
        for (int x = start; x < out.n; x += step) out.tables[x] = global_hom_cache().get(q, x);
    };
    if (workers <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (int x = 0; x < out.n; ++x) {
        const auto& t = *out.tables[x];
        if (t.omega < 0)
            fail(ErrorCode::NonTerminating,
                 "last nonzero theta row of vertex " + std::to_string(x) + " is not a single vertex");
        out.omega[x] = t.omega;
        for (const auto& [y, c] : t.totals) out.dense[static_cast<std::size_t>(x) * out.n + y] = c;
    }
    return out;
}

namespace {

template <typename Fn>
auto with_growing_window(const DynkinDiagram& dg, const Slot& base, Fn fn) {
    int width = 2 * dg.rank + 4;
    const int limit = 64 * (dg.rank + 4);
    while (true) {
        const std::int64_t col = column_of(base);
        TranslationQuiver w = build_z_window(dg, col - width, width + 2);
        int x = w.find(base);
        try {
            return fn(w, x, width);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Clipped) throw;
        }
        width *= 2;
        if (width > limit)
            fail(ErrorCode::NonTerminating, "support of h keeps growing on Z" + dg.name());
    }
}

}  // namespace

CoverHom cover_h(const DynkinDiagram& dg, const Slot& base) {
    return with_growing_window(dg, base, [&](const TranslationQuiver& w, int x, int width) {
        HomTable t = h_table(w, x);
        CoverHom out;
        out.base = base;
        out.m = t.m;
        out.window_columns = width + 2;
        for (const auto& row : t.rows) {
            std::map<Slot, std::int64_t> r;
            for (const auto& [v, c] : row.coefficients()) r[w.vertices[v].slot()] = c;
            out.rows.push_back(std::move(r));
        }
        for (const auto& [v, c] : t.totals) out.totals[w.vertices[v].slot()] = c;
        if (t.omega < 0)
            fail(ErrorCode::NonTerminating, "last nonzero theta row is not a single vertex");
        out.omega = w.vertices[t.omega].slot();
        return out;
    });
}

bool cover_sign_pattern(const DynkinDiagram& dg, const Slot& base) {
    return with_growing_window(dg, base, [&](const TranslationQuiver& w, int x, int) {
        return verify_sign_pattern(w, x);
    });
}

}  // namespace dynconf
