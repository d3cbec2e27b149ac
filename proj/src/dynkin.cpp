#include "dynconf/dynkin.hpp"

#include <cctype>

#include "dynconf/error.hpp"

namespace dynconf {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::IllegalRank: return "IllegalRank";
    case ErrorCode::IllegalGroup: return "IllegalGroup";
    case ErrorCode::NotWeaklyAdmissible: return "NotWeaklyAdmissible";
    case ErrorCode::NotClassicalType: return "NotClassicalType";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAConfiguration: return "NotAConfiguration";
    case ErrorCode::NotPlain: return "NotPlain";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NotGStable: return "NotGStable";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::Clipped: return "Clipped";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TimeBudgetExceeded: return "TimeBudgetExceeded";
    }
    return "Unknown";
}

char kind_letter(DynkinKind kind) {
    static const char letters[] = "ABCDEFG";
    return letters[static_cast<int>(kind)];
}

DynkinKind parse_kind(const std::string& text) {
    if (text.size() != 1)
        fail(ErrorCode::InvalidArgument, "unknown Dynkin kind '" + text + "'");
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': return DynkinKind::A;
    case 'B': return DynkinKind::B;
    case 'C': return DynkinKind::C;
    case 'D': return DynkinKind::D;
    case 'E': return DynkinKind::E;
    case 'F': return DynkinKind::F;
    case 'G': return DynkinKind::G;
    }
    fail(ErrorCode::InvalidArgument, "unknown Dynkin kind '" + text + "'");
}

std::pair<DynkinKind, int> parse_type_name(const std::string& text) {
    if (text.size() < 2)
        fail(ErrorCode::InvalidArgument, "type name needs a kind and a rank: '" + text + "'");
    DynkinKind kind = parse_kind(text.substr(0, 1));
    std::size_t pos = 1;
    if (text[pos] == '_') ++pos;
    int rank = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            fail(ErrorCode::InvalidArgument, "bad rank in type name '" + text + "'");
        rank = rank * 10 + (text[pos] - '0');
        if (rank > 100000) fail(ErrorCode::IllegalRank, "rank too large in '" + text + "'");
    }
    return {kind, rank};
}

std::string DynkinDiagram::name() const {
    return std::string(1, kind_letter(kind)) + std::to_string(rank);
}

Valuation DynkinDiagram::valuation(int u, int v) const {
    for (const auto& [w, val] : neighbours.at(u))
        if (w == v) return val;
    return {0, 0};
}

bool DynkinDiagram::is_classical() const {
    return kind == DynkinKind::A || kind == DynkinKind::B || kind == DynkinKind::C ||
           kind == DynkinKind::D;
}

namespace {

void check_rank(DynkinKind kind, int rank) {
    bool ok = false;
    switch (kind) {
    case DynkinKind::A: ok = rank >= 1; break;
    case DynkinKind::B:
    case DynkinKind::C: ok = rank >= 2; break;
    case DynkinKind::D: ok = rank >= 4; break;
    case DynkinKind::E: ok = rank >= 6 && rank <= 8; break;
    case DynkinKind::F: ok = rank == 4; break;
    case DynkinKind::G: ok = rank == 2; break;
    }
    if (!ok)
        fail(ErrorCode::IllegalRank, std::string("rank ") + std::to_string(rank) +
                                         " is not legal for kind " + kind_letter(kind));
}

}  // namespace

DynkinDiagram build_dynkin(DynkinKind kind, int rank) {
    check_rank(kind, rank);
    DynkinDiagram dg;
    dg.kind = kind;
    dg.rank = rank;
    auto& e = dg.edges;

    switch (kind) {
    case DynkinKind::A:
        for (int i = 0; i + 1 < rank; ++i) e.push_back({i, i + 1, 1, 1});
        break;
    case DynkinKind::B:
    case DynkinKind::C:
        e.push_back(kind == DynkinKind::B ? DynkinEdge{0, 1, 1, 2} : DynkinEdge{0, 1, 2, 1});
        for (int i = 1; i + 1 < rank; ++i) e.push_back({i, i + 1, 1, 1});
        break;
    case DynkinKind::D:
        // spine 0..rank-3, tips rank-2 and rank-1 on the spine end
        for (int i = 0; i + 1 < rank - 2; ++i) e.push_back({i, i + 1, 1, 1});
        e.push_back({rank - 3, rank - 2, 1, 1});
        e.push_back({rank - 3, rank - 1, 1, 1});
        break;
    case DynkinKind::E:
        // spine 0..rank-2, branch vertex rank-1 on spine vertex 2
        for (int i = 0; i + 1 < rank - 1; ++i) e.push_back({i, i + 1, 1, 1});
        e.push_back({2, rank - 1, 1, 1});
        break;
    case DynkinKind::F:
        e.push_back({0, 1, 1, 1});
        e.push_back({1, 2, 1, 2});
        e.push_back({2, 3, 1, 1});
        break;
    case DynkinKind::G:
        e.push_back({0, 1, 1, 3});
        break;
    }

    dg.neighbours.assign(rank, {});
    for (const auto& edge : e) {
        dg.neighbours[edge.i].push_back({edge.j, {edge.d, edge.dp}});
        dg.neighbours[edge.j].push_back({edge.i, {edge.dp, edge.d}});
    }

    dg.parity.assign(rank, -1);
    dg.parity[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, val] : dg.neighbours[u]) {
            if (dg.parity[v] < 0) {
                dg.parity[v] = 1 - dg.parity[u];
                stack.push_back(v);
            }
        }
    }
    return dg;
}

DynkinDiagram build_dynkin(const std::string& type_name) {
    auto [kind, rank] = parse_type_name(type_name);
    return build_dynkin(kind, rank);
}

std::optional<std::vector<int>> diagram_twist(const DynkinDiagram& dg) {
    std::vector<int> perm(dg.rank);
    for (int i = 0; i < dg.rank; ++i) perm[i] = i;
    switch (dg.kind) {
    case DynkinKind::A:
        // odd rank only: for even rank the flip lifts to a glide, not an involution
        if (dg.rank < 3 || dg.rank % 2 == 0) return std::nullopt;
        for (int i = 0; i < dg.rank; ++i) perm[i] = dg.rank - 1 - i;
        return perm;
    case DynkinKind::D:
        std::swap(perm[dg.rank - 2], perm[dg.rank - 1]);
        return perm;
    case DynkinKind::E:
        if (dg.rank != 6) return std::nullopt;
        std::swap(perm[0], perm[4]);
        std::swap(perm[1], perm[3]);
        return perm;
    default:
        return std::nullopt;
    }
}

}  // namespace dynconf
