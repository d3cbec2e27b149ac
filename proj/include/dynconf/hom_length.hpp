#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dynconf/quiver.hpp"

namespace dynconf {

// Finite N-linear combination of vertices; zero coefficients are never stored.
class VertexCombination {
public:
    VertexCombination() = default;
    static VertexCombination unit(int vertex) {
        VertexCombination c;
        c.add(vertex, 1);
        return c;
    }

    void add(int vertex, std::int64_t amount);
    std::int64_t operator[](int vertex) const;
    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    std::vector<int> support() const;
    const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }

    // (this - other)_+
    VertexCombination clamped_minus(const VertexCombination& other) const;

    bool operator==(const VertexCombination&) const = default;

private:
    std::map<int, std::int64_t> coeffs_;
};

// theta(P) = sum over arrows y -> x of d_yx * P[x] * y.
VertexCombination theta(const TranslationQuiver& q, const VertexCombination& combo);

// tau applied vertex-wise; throws Clipped when tau is undefined on the support.
VertexCombination apply_tau(const TranslationQuiver& q, const VertexCombination& combo);

struct HomTable {
    std::uint64_t quiver_id = 0;
    int base = 0;
    std::vector<VertexCombination> rows;  // theta_0 .. theta_{m-1}
    std::map<int, std::int64_t> totals;   // h(y, base) for y in H(base)
    int m = 0;
    int omega = -1;

    std::int64_t h(int y) const {
        auto it = totals.find(y);
        return it == totals.end() ? 0 : it->second;
    }
    std::vector<int> support() const;
};

// Iteration cap used when none is given: 4 * |Q_0| + 8.
int default_iteration_cap(const TranslationQuiver& q);

// Runs the clamped recursion until the first zero row. On a quiver with
// frontier vertices, touching the frontier throws Clipped.
HomTable h_table(const TranslationQuiver& q, int x, int cap = 0);
VertexCombination theta_n(const TranslationQuiver& q, int x, int n);
std::int64_t h(const TranslationQuiver& q, int y, int x);

struct OmegaResult {
    int vertex = -1;
    int m = 0;
};
OmegaResult omega(const TranslationQuiver& q, int x);

// h'_n >= 0 for n < m and h'_n <= 0 for n >= m.
bool verify_sign_pattern(const TranslationQuiver& q, int x);

// Memo of tables keyed by (quiver id, base); the first finished table wins.
class HomCache {
public:
    std::shared_ptr<const HomTable> get(const TranslationQuiver& q, int x);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const HomTable>> tables_;
};

HomCache& global_hom_cache();

// All tables of a finite stable quiver, with dense lookups.
struct QuiverHom {
    int n = 0;
    std::vector<std::shared_ptr<const HomTable>> tables;
    std::vector<int> omega;
    std::vector<std::int64_t> dense;  // dense[x * n + y] = h(y, x)

    std::int64_t h(int y, int x) const { return dense[static_cast<std::size_t>(x) * n + y]; }
};

QuiverHom compute_quiver_hom(const TranslationQuiver& q, int workers = 1);

// h on the infinite quiver Z(diagram) with a window grown until nothing is clipped.
struct CoverHom {
    Slot base;
    std::vector<std::map<Slot, std::int64_t>> rows;
    std::map<Slot, std::int64_t> totals;
    Slot omega;
    int m = 0;
    int window_columns = 0;

    std::int64_t h(const Slot& y) const {
        auto it = totals.find(y);
        return it == totals.end() ? 0 : it->second;
    }
};

CoverHom cover_h(const DynkinDiagram& dg, const Slot& base);
bool cover_sign_pattern(const DynkinDiagram& dg, const Slot& base);

}  // namespace dynconf
