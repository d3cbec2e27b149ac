#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "dynconf/dynkin.hpp"
#include "dynconf/quiver.hpp"

namespace dynconf {

// [i j] with i, j in 1..p; sign is +1 / -1 on the type-D tip rows, 0 elsewhere.
struct VertexLabel {
    int i = 0;
    int j = 0;
    int sign = 0;

    auto operator<=>(const VertexLabel&) const = default;
    std::string text() const;  // "[1 3]", "[2 4]+"
    static VertexLabel parse(const std::string& text);
};

// Label coordinates before reduction mod p; a and b are integers with the
// base slot (level 0, node 0) unwrapping to a = 0.
struct UnwrappedLabel {
    std::int64_t a = 0;
    std::int64_t b = 0;
    int sign = 0;
    auto operator<=>(const UnwrappedLabel&) const = default;
};

// Half-rank n of the label scheme: rank-1 for A and B/C, rank-2 for D.
int label_n(const DynkinDiagram& dg);
// Modulus of the label torus: n for A, 2n for B, C, D.
int label_period(const DynkinDiagram& dg);

UnwrappedLabel unwrapped_label(const DynkinDiagram& dg, const Slot& s);
VertexLabel label_of(const DynkinDiagram& dg, const Slot& s);
VertexLabel label_of(const TranslationQuiver& q, int vertex);

// The slot carrying the label with column in [column_hint, column_hint + period).
// In type A the two [i i] rows share a label; the lower-level slot is returned.
Slot vertex_of(const DynkinDiagram& dg, const VertexLabel& label, std::int64_t column_hint);

bool is_valid_label(const DynkinDiagram& dg, const VertexLabel& label);

}  // namespace dynconf
