#include "dynconf/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "dynconf/error.hpp"

namespace dynconf {

const char* family_name(BrauerFamily f) {
    switch (f) {
    case BrauerFamily::Plain: return "plain";
    case BrauerFamily::Symmetric: return "symmetric";
    case BrauerFamily::Crossing: return "crossing";
    }
    return "?";
}

BrauerFamily parse_family(const std::string& text) {
    std::string s;
    for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "plain") return BrauerFamily::Plain;
    if (s == "sym" || s == "symmetric") return BrauerFamily::Symmetric;
    if (s == "cross" || s == "crossing") return BrauerFamily::Crossing;
    fail(ErrorCode::InvalidArgument, "unknown Brauer family '" + text + "'");
}

std::vector<std::pair<int, int>> BrauerRelation::chords() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= num_points; ++k)
        if ((*this)(k) > k) out.push_back({k, (*this)(k)});
    return out;
}

std::string BrauerRelation::text() const {
    std::string s;
    for (int k = 1; k <= num_points; ++k) {
        int t = (*this)(k);
        if (t < k) continue;
        s += "{" + std::to_string(k);
        if (t != k) s += "," + std::to_string(t);
        s += "}";
    }
    return s.empty() ? "{}" : s;
}

BrauerRelation identity_relation(int num_points, BrauerFamily family) {
    BrauerRelation b;
    b.num_points = num_points;
    b.family = family;
    for (int k = 1; k <= num_points; ++k) b.sigma.push_back(k);
    return b;
}

bool is_involution(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    for (int k = 1; k <= n; ++k) {
        int t = sigma[k - 1];
        if (t < 1 || t > n || sigma[t - 1] != k) return false;
    }
    return true;
}

namespace {

bool chords_cross(int i, int j, int r, int s) {
    // normalise i < j, r < s; interleaving test i < r < j < s or r < i < s < j
    if (i > j) std::swap(i, j);
    if (r > s) std::swap(r, s);
    return (i < r && r < j && j < s) || (r < i && i < s && s < j);
}

}  // namespace

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossing_pairs(const std::vector<int>& sigma) {
    std::vector<std::pair<int, int>> ch;
    for (int k = 1; k <= static_cast<int>(sigma.size()); ++k)
        if (sigma[k - 1] > k) ch.push_back({k, sigma[k - 1]});
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (std::size_t a = 0; a < ch.size(); ++a)
        for (std::size_t b = a + 1; b < ch.size(); ++b)
            if (chords_cross(ch[a].first, ch[a].second, ch[b].first, ch[b].second))
                out.push_back({ch[a], ch[b]});
    return out;
}

bool is_noncrossing(const std::vector<int>& sigma) { return crossing_pairs(sigma).empty(); }

bool is_rotation_symmetric(const std::vector<int>& sigma) {
    const int total = static_cast<int>(sigma.size());
    if (total % 2 != 0) return false;
    const int n = total / 2;
    auto rot = [&](int k) { return (k - 1 + n) % total + 1; };
    for (int k = 1; k <= total; ++k)
        if (sigma[rot(k) - 1] != rot(sigma[k - 1])) return false;
    return true;
}

namespace {

// Fills sigma point by point. `pairing` adds the partner assignments implied
// by the family (none for plain, the rotated chord for symmetric).
class Builder {
public:
    Builder(int points, bool symmetric, std::vector<std::pair<int, int>> fixed_crossing)
        : points_(points), symmetric_(symmetric), fixed_(std::move(fixed_crossing)), sigma_(points, 0) {
        for (auto [a, b] : fixed_) {
            sigma_[a - 1] = b;
            sigma_[b - 1] = a;
            chords_.push_back({a, b});
        }
    }

    void run(std::vector<std::vector<int>>& out) { step(1, out); }

private:
    int rot(int k) const { return (k - 1 + points_ / 2) % points_ + 1; }

    bool compatible(int a, int b) const {
        for (auto [r, s] : chords_)
            if (chords_cross(a, b, r, s)) return false;
        return true;
    }

    void step(int k, std::vector<std::vector<int>>& out) {
        while (k <= points_ && sigma_[k - 1] != 0) ++k;
        if (k > points_) {
            out.push_back(sigma_);
            return;
        }
        // k stays a singleton
        {
            std::vector<int> touched{k};
            sigma_[k - 1] = k;
            bool ok = true;
            if (symmetric_) {
                int rk = rot(k);
                if (sigma_[rk - 1] == 0) {
                    sigma_[rk - 1] = rk;
                    touched.push_back(rk);
                } else if (sigma_[rk - 1] != rk) {
                    ok = false;
                }
            }
            if (ok) step(k + 1, out);
            for (int t : touched) sigma_[t - 1] = 0;
        }
        for (int j = k + 1; j <= points_; ++j) {
            if (sigma_[j - 1] != 0 || !compatible(k, j)) continue;
            std::vector<int> touched{k, j};
            sigma_[k - 1] = j;
            sigma_[j - 1] = k;
            chords_.push_back({k, j});
            bool ok = true;
            bool added = false;
            if (symmetric_) {
                int rk = rot(k), rj = rot(j);
                if (rk == j) {
                    // diameter, already self-symmetric
                } else if (sigma_[rk - 1] == 0 && sigma_[rj - 1] == 0) {
                    if (compatible(rk, rj)) {
                        sigma_[rk - 1] = rj;
                        sigma_[rj - 1] = rk;
                        touched.push_back(rk);
                        touched.push_back(rj);
                        chords_.push_back({std::min(rk, rj), std::max(rk, rj)});
                        added = true;
                    } else {
                        ok = false;
                    }
                } else if (sigma_[rk - 1] != rj) {
                    ok = false;
                }
            }
            if (ok) step(k + 1, out);
            if (added) chords_.pop_back();
            chords_.pop_back();
            for (int t : touched) sigma_[t - 1] = 0;
        }
    }

    int points_;
    bool symmetric_;
    std::vector<std::pair<int, int>> fixed_;
    std::vector<int> sigma_;
    std::vector<std::pair<int, int>> chords_;
};

std::vector<BrauerRelation> wrap(std::vector<std::vector<int>> sigmas, int points, BrauerFamily family) {
    std::sort(sigmas.begin(), sigmas.end());
    std::vector<BrauerRelation> out;
    out.reserve(sigmas.size());
    for (auto& s : sigmas) out.push_back({points, std::move(s), family});
    return out;
}

}  // namespace

std::vector<BrauerRelation> enumerate_plain(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    std::vector<std::vector<int>> sigmas;
    Builder(n, false, {}).run(sigmas);
    return wrap(std::move(sigmas), n, BrauerFamily::Plain);
}

std::vector<BrauerRelation> enumerate_symmetric(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    std::vector<std::vector<int>> sigmas;
    Builder(2 * n, true, {}).run(sigmas);
    return wrap(std::move(sigmas), 2 * n, BrauerFamily::Symmetric);
}

std::vector<BrauerRelation> enumerate_crossing(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    std::vector<std::vector<int>> sigmas;
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) Builder(2 * n, true, {{s, s + n}, {t, t + n}}).run(sigmas);
    return wrap(std::move(sigmas), 2 * n, BrauerFamily::Crossing);
}

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

std::vector<BigInt> motzkin_table(int n) {
    std::vector<BigInt> m(std::max(n + 1, 2));
    m[0] = 1;
    m[1] = 1;
    for (int k = 2; k <= n; ++k) {
        BigInt s = m[k - 1];
        for (int i = 0; i <= k - 2; ++i) s += m[i] * m[k - 2 - i];
        m[k] = s;
    }
    return m;
}

}  // namespace

BigInt motzkin(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    return motzkin_table(n)[n];
}

BigInt motzkin_closed(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    BigInt s = 0;
    for (int k = 0; 2 * k <= n; ++k) s += factorial(n) / (factorial(n - 2 * k) * factorial(k + 1) * factorial(k));
    return s;
}

BigInt m_sym(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    auto m = motzkin_table(n);
    std::vector<BigInt> s(std::max(n + 1, 2));
    s[0] = 1;
    s[1] = 2;
    for (int k = 2; k <= n; ++k) {
        BigInt acc = 0;
        for (int i = 0; i <= k - 2; ++i) acc += m[i] * s[k - 2 - i];
        s[k] = s[k - 1] + m[k - 1] + 2 * acc;
    }
    return s[n];
}

BigInt m_sym_closed(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    BigInt s = 0;
    for (int k = 0; k <= (n + 1) / 2; ++k) s += binomial(n, k) * binomial(n + 1 - k, k);
    return s;
}

BigInt m_cross(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    if (n < 2) return 1;  // formal seeds of the recursion
    auto m = motzkin_table(n);
    BigInt s = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j) s += m[j - i - 1] * m[n + i - j - 1];
    return s;
}

BigInt m_cross_closed(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
    if (n < 2) return 1;  // the binomial sum is empty here; keep the recursion seeds
    BigInt s = 0;
    for (int k = 0; 2 * k <= n - 2; ++k)
        s += factorial(n) / (factorial(k) * factorial(k + 2) * factorial(n - 2 - 2 * k));
    return s;
}

std::string ascii_disk(const BrauerRelation& b) {
    const int n = b.num_points;
    const int radius = std::max(4, n);
    const int h = 2 * radius + 3;
    const int w = 4 * radius + 7;
    std::vector<std::string> grid(h, std::string(w, ' '));
    const double pi = std::acos(-1.0);
    auto pos = [&](int k) {
        // point 1 at twelve o'clock, clockwise
        double ang = pi / 2 - 2 * pi * (k - 1) / std::max(n, 1);
        int col = static_cast<int>(std::lround(w / 2.0 + 2 * radius * std::cos(ang)));
        int row = static_cast<int>(std::lround(h / 2.0 - radius * std::sin(ang)));
        return std::make_pair(row, col);
    };
    for (auto [s, t] : b.chords()) {
        auto [r0, c0] = pos(s);
        auto [r1, c1] = pos(t);
        int steps = std::max(std::abs(r1 - r0), std::abs(c1 - c0));
        for (int k = 1; k < steps; ++k) {
            int r = r0 + (r1 - r0) * k / steps;
            int c = c0 + (c1 - c0) * k / steps;
            if (r >= 0 && r < h && c >= 0 && c < w) grid[r][c] = '.';
        }
    }
    for (int k = 1; k <= n; ++k) {
        auto [r, c] = pos(k);
        std::string label = std::to_string(k);
        for (std::size_t i = 0; i < label.size(); ++i)
            if (c + static_cast<int>(i) < w) grid[r][c + i] = label[i];
    }
    std::string out;
    for (auto& line : grid) {
        auto end = line.find_last_not_of(' ');
        if (end == std::string::npos) continue;
        out += line.substr(0, end + 1) + "\n";
    }
    out += b.text() + "\n";
    return out;
}

}  // namespace dynconf
