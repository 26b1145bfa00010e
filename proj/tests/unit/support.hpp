#pragma once

#include "virmtc/io.hpp"

#include <doctest.h>

#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace testing {

inline const nlohmann::json& oracle() {
    static const nlohmann::json j = [] {
        std::ifstream in(VIRMTC_ORACLE);
        return nlohmann::json::parse(in);
    }();
    return j;
}

inline std::string key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

inline std::vector<std::pair<int, int>> coprime_pairs(int pmax, int qmax) {
    std::vector<std::pair<int, int>> v;
    for (int p = 2; p <= pmax; ++p)
        for (int q = p + 1; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) v.emplace_back(p, q);
    return v;
}

inline virmtc::Rational R(const char* s) { return virmtc::parse_rational(s); }
inline virmtc::Rational R(long num, long den) {
    virmtc::Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace testing
