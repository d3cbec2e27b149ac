#include "dynconf/labels.hpp"

#include <cctype>
#include <vector>

#include "dynconf/error.hpp"

namespace dynconf {

std::string VertexLabel::text() const {
    std::string s = "[" + std::to_string(i) + " " + std::to_string(j) + "]";
    if (sign > 0) s += "+";
    if (sign < 0) s += "-";
    return s;
}

VertexLabel VertexLabel::parse(const std::string& text) {
    std::vector<int> numbers;
    int sign = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) fail(ErrorCode::ParseError, "label value too large: " + text);
                ++pos;
            }
            numbers.push_back(value);
            continue;
        }
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else if (c != '[' && c != ']' && c != ' ' && c != ',')
            fail(ErrorCode::ParseError, "unexpected character in label '" + text + "'");
        ++pos;
    }
    if (numbers.size() != 2) fail(ErrorCode::ParseError, "label needs two coordinates: '" + text + "'");
    return {numbers[0], numbers[1], sign};
}

namespace {

void require_classical(const DynkinDiagram& dg) {
    if (!dg.is_classical())
        fail(ErrorCode::NotClassicalType, "labels exist only for types A, B, C, D; got " + dg.name());
    if (dg.kind == DynkinKind::A && dg.rank < 2)
        fail(ErrorCode::NotClassicalType, "A1 has no label torus");
}

}  // namespace

int label_n(const DynkinDiagram& dg) {
    require_classical(dg);
    return dg.kind == DynkinKind::D ? dg.rank - 2 : dg.rank - 1;
}

int label_period(const DynkinDiagram& dg) {
    int n = label_n(dg);
    return dg.kind == DynkinKind::A ? n : 2 * n;
}

UnwrappedLabel unwrapped_label(const DynkinDiagram& dg, const Slot& s) {
    const int n = label_n(dg);
    const std::int64_t x = s.level;
    const int i = s.node;
    UnwrappedLabel u;
    switch (dg.kind) {
    case DynkinKind::A:
        u.a = (x - i) / 2;
        u.b = (x + i) / 2;
        break;
    case DynkinKind::B:
    case DynkinKind::C:
        // node 0 is the valued end, drawn as the top row with b - a = n
        u.a = (x + i) / 2;
        u.b = (x - i) / 2 + n;
        break;
    case DynkinKind::D:
        if (i < n) {
            u.a = (x - i) / 2;
            u.b = (x + i) / 2;
        } else {
            u.a = floor_div(x - n, 2);
            u.b = u.a + n;
            bool even = floor_mod(u.a, 2) == 0;
            u.sign = (even == (i == n)) ? 1 : -1;
        }
        break;
    default:
        break;
    }
    return u;
}

VertexLabel label_of(const DynkinDiagram& dg, const Slot& s) {
    UnwrappedLabel u = unwrapped_label(dg, s);
    const int p = label_period(dg);
    return {static_cast<int>(floor_mod(u.a, p)) + 1, static_cast<int>(floor_mod(u.b, p)) + 1, u.sign};
}

VertexLabel label_of(const TranslationQuiver& q, int vertex) {
    if (!q.diagram) fail(ErrorCode::NotClassicalType, "quiver carries no diagram");
    if (vertex < 0 || vertex >= q.size() || q.vertices[vertex].node < 0)
        fail(ErrorCode::UnknownVertex, "no labelled vertex " + std::to_string(vertex));
    return label_of(*q.diagram, q.vertices[vertex].slot());
}

bool is_valid_label(const DynkinDiagram& dg, const VertexLabel& label) {
    const int p = label_period(dg);
    const int n = label_n(dg);
    if (label.i < 1 || label.i > p || label.j < 1 || label.j > p) return false;
    int diff = static_cast<int>(floor_mod(label.j - label.i, p));
    switch (dg.kind) {
    case DynkinKind::A:
        return label.sign == 0;
    case DynkinKind::B:
    case DynkinKind::C:
        return label.sign == 0 && diff <= n;
    case DynkinKind::D:
        if (diff > n) return false;
        return (diff == n) == (label.sign != 0);
    default:
        return false;
    }
}

Slot vertex_of(const DynkinDiagram& dg, const VertexLabel& label, std::int64_t column_hint) {
    if (!is_valid_label(dg, label))
        fail(ErrorCode::UnknownVertex, "label " + label.text() + " names no vertex of Z" + dg.name());
    const int p = label_period(dg);
    for (std::int64_t x = 2 * column_hint; x < 2 * (column_hint + p); ++x) {
        for (int i = 0; i < dg.rank; ++i) {
            if (dg.parity[i] != floor_mod(x, 2)) continue;
            Slot s{x, i};
            if (label_of(dg, s) == label) return s;
        }
    }
    fail(ErrorCode::UnknownVertex, "label " + label.text() + " not found");
}

}  // namespace dynconf
