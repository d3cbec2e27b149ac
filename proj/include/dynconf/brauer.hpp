#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynconf {

using BigInt = boost::multiprecision::cpp_int;

enum class BrauerFamily { Plain, Symmetric, Crossing };

const char* family_name(BrauerFamily f);
BrauerFamily parse_family(const std::string& text);  // plain | sym | symmetric | cross | crossing

// Involution on boundary points 1..num_points, numbered clockwise.
struct BrauerRelation {
    int num_points = 0;
    std::vector<int> sigma;  // sigma[k - 1] = sigma(k); fixed points are singleton classes
    BrauerFamily family = BrauerFamily::Plain;

    int operator()(int k) const { return sigma[k - 1]; }
    std::vector<std::pair<int, int>> chords() const;  // (i, sigma(i)) with i < sigma(i)
    std::string text() const;                        // "{1,3}{2}{4}"
    bool operator==(const BrauerRelation& o) const {
        return num_points == o.num_points && sigma == o.sigma && family == o.family;
    }
    bool operator<(const BrauerRelation& o) const { return sigma < o.sigma; }
};

BrauerRelation identity_relation(int num_points, BrauerFamily family = BrauerFamily::Plain);
bool is_involution(const std::vector<int>& sigma);
bool is_noncrossing(const std::vector<int>& sigma);
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossing_pairs(const std::vector<int>& sigma);
bool is_rotation_symmetric(const std::vector<int>& sigma);

std::vector<BrauerRelation> enumerate_plain(int n);
std::vector<BrauerRelation> enumerate_symmetric(int n);  // 2n points
std::vector<BrauerRelation> enumerate_crossing(int n);   // 2n points; empty for n < 2

BigInt motzkin(int n);
BigInt motzkin_closed(int n);
BigInt m_sym(int n);
BigInt m_sym_closed(int n);
BigInt m_cross(int n);
BigInt m_cross_closed(int n);

// Points on a circle with chords drawn as a text adjacency sketch.
std::string ascii_disk(const BrauerRelation& b);

}  // namespace dynconf
