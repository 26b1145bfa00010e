#include "support.hpp"

#include "virmtc/errors.hpp"
#include "virmtc/subcat.hpp"

#include <set>

using namespace virmtc;

namespace {

std::vector<std::string> names_of(const std::vector<Subcategory>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.name);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> modular_names(const MinimalCategory& C) {
    std::vector<std::string> out;
    for (const auto& s : nontrivial(enumerate_subcats(C), C.model.rank()))
        if (is_modular(C, s.members).modular) out.push_back(s.name);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("subcat") {
    TEST_CASE("closure enumeration equals brute force for rank <= 12") {
        int tested = 0;
        for (auto [p, q] : testing::coprime_pairs(13, 13)) {
            MinimalCategory C(p, q);
            if (C.model.rank() > 12) continue;
            ++tested;
            CHECK(enumerate_closed(C.ring) == brute_force_closed(C.ring));
        }
        CHECK(tested >= 15);
    }

    TEST_CASE("brute force refuses large rings") {
        MinimalCategory C(7, 8);
        CHECK_THROWS_AS(brute_force_closed(C.ring), ValidationError);
    }

    TEST_CASE("census, names, sizes and modular sets agree with the frozen oracle") {
        const auto& amb = testing::oracle()["ambient"];
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            const std::string k = testing::key(p, q);
            CAPTURE(k);
            MinimalCategory C(p, q);
            const auto subs = nontrivial(enumerate_subcats(C), C.model.rank());
            CHECK(static_cast<int>(subs.size()) == amb["census"][k].get<int>());
            CHECK(names_of(subs) == amb["names"][k].get<std::vector<std::string>>());
            for (const auto& s : subs)
                if (amb["sizes"][k].contains(s.name)) CHECK(static_cast<int>(s.members.size()) == amb["sizes"][k][s.name].get<int>());
            CHECK(modular_names(C) == amb["modular"][k].get<std::vector<std::string>>());
        }
    }

    TEST_CASE("every enumerated set is fusion closed and contains the unit") {
        for (auto [p, q] : testing::coprime_pairs(9, 11)) {
            MinimalCategory C(p, q);
            std::set<IndexSet> seen;
            for (const auto& s : enumerate_subcats(C)) {
                CHECK(is_fusion_closed(C.ring, s.members));
                CHECK(s.members.front() == C.ring.unit());
                CHECK(seen.insert(s.members).second);
                CHECK(ring_closure(C.ring, s.members) == s.members);
            }
        }
    }

    TEST_CASE("named patterns at (6,7)") {
        MinimalCategory C(6, 7);
        auto pat = named_patterns(C);
        CHECK(pat["C1"].size() == 6);
        CHECK(pat["C2"].size() == 3);
        CHECK(pat["C3"].size() == 5);
        CHECK(pat["C4"].size() == 3);
        CHECK(pat["C5"].size() == 2);
        CHECK(pat["C6"].size() == 9);
        CHECK(labels_of(C, pat["C5"]) == std::vector<std::string>{"1,1", "1,6"});
    }

    TEST_CASE("modular sets in the three parity classes") {
        for (auto [p, q] : {std::pair{4, 5}, {4, 7}, {6, 7}, {8, 9}})
            CHECK(modular_names(MinimalCategory(p, q)) == std::vector<std::string>{"C2", "C3"});
        for (auto [p, q] : {std::pair{5, 6}, {7, 8}, {9, 10}, {5, 8}})
            CHECK(modular_names(MinimalCategory(p, q)) == std::vector<std::string>{"C1", "C4"});
        for (auto [p, q] : {std::pair{5, 7}, {5, 9}, {7, 9}, {5, 11}})
            CHECK(modular_names(MinimalCategory(p, q)).size() == 6);
    }

    TEST_CASE("exact and float ranks agree on every modularity call") {
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            MinimalCategory C(p, q);
            for (const auto& s : enumerate_subcats(C)) {
                ModularityReport m = is_modular(C, s.members);
                CHECK(m.rank_exact == m.rank_float);
                CHECK(m.modular == (m.rank_exact == s.members.size()));
            }
        }
    }

    TEST_CASE("Deligne factorizations") {
        MinimalCategory A(5, 6);
        auto pa = named_patterns(A);
        DeligneReport r = deligne_factor_check(A, pa["C1"], pa["C4"]);
        CHECK(r.centralizer);
        CHECK(r.bijection);
        CHECK(r.fusion);
        CHECK(r.fpdim);

        MinimalCategory B(4, 5);
        auto pb = named_patterns(B);
        CHECK(deligne_factor_check(B, pb["C2"], pb["C3"]).ok());
        CHECK_FALSE(deligne_factor_check(B, pb["C1"], pb["C3"]).ok());

        MinimalCategory T(5, 7);
        auto pt = named_patterns(T);
        auto join = [&](const IndexSet& x, const IndexSet& y) { return ring_closure(T.ring, set_union(x, y)); };
        CHECK(deligne_factor_check(T, pt["C2"], join(pt["C4"], pt["C5"])).ok());
        CHECK(deligne_factor_check(T, pt["C4"], join(pt["C2"], pt["C5"])).ok());
        CHECK(deligne_factor_check(T, pt["C5"], pt["C6"]).ok());
        // pairwise inside a sub-ambient
        CHECK(deligne_factor_check(T, pt["C2"], pt["C5"], join(pt["C2"], pt["C5"])).ok());
        CHECK(deligne_factor_check(T, pt["C4"], pt["C5"], join(pt["C4"], pt["C5"])).ok());
    }

    TEST_CASE("FP dimensions multiply over the factorizations") {
        struct Case {
            int p, q;
            std::vector<std::string> parts;
        };
        for (const auto& c : {Case{5, 6, {"C1", "C4"}}, Case{4, 5, {"C2", "C3"}}, Case{5, 7, {"C2", "C4", "C5"}}}) {
            MinimalCategory C(c.p, c.q);
            auto pat = named_patterns(C);
            double prod = 1;
            for (const auto& n : c.parts) prod *= fpdim_of(C.dims, pat[n]);
            const double full = fpdim_of(C.dims, C.all());
            CHECK(std::abs(full - prod) < 1e-7 * full);
        }
    }

    TEST_CASE("FS exponents") {
        struct Case {
            int p, q;
            std::vector<std::string> parts;
        };
        for (const auto& c : {Case{5, 6, {"C1", "C4"}}, Case{4, 5, {"C2", "C3"}}, Case{5, 7, {"C2", "C4", "C5"}}}) {
            MinimalCategory C(c.p, c.q);
            auto pat = named_patterns(C);
            long long l = 1;
            for (const auto& n : c.parts) l = std::lcm(l, static_cast<long long>(C.data.fsexp(pat[n])));
            CHECK(C.data.fsexp(C.all()) == l);
        }
        for (auto [p, q] : testing::coprime_pairs(13, 13)) {
            MinimalCategory C(p, q);
            for (const auto& s : nontrivial(enumerate_subcats(C), C.model.rank()))
                if (is_modular(C, s.members).modular) CHECK(C.data.fsexp(s.members) != 2);
        }
    }

    TEST_CASE("primality") {
        MinimalCategory C(5, 6);
        auto pat = named_patterns(C);
        CHECK(is_prime(C, pat["C1"]));
        CHECK(is_prime(C, pat["C4"]));
        CHECK_FALSE(is_prime(C, C.all()));
    }

    TEST_CASE("closure from seed labels") {
        MinimalCategory C(5, 6);
        Subcategory s = closure(C, {{1, 2}});
        CHECK(s.name == "C1");
        CHECK(closure(C, {{1, 1}}).name == "TRIVIAL");
        CHECK(closure(C, {{2, 2}}).name == "FULL");
    }
}
