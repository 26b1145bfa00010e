#include "support.hpp"

#include "virmtc/errors.hpp"
#include "virmtc/gluing.hpp"

using namespace virmtc;
using testing::R;

namespace {

std::vector<GluingCandidate> glue(int p1, int q1, const char* n1, int p2, int q2, const char* n2) {
    MinimalCategory A(p1, q1), B(p2, q2);
    return gluing_candidates(A, named_subcategory(A, n1), B, named_subcategory(B, n2));
}

// the candidate sending (1,j) to (j,1)
const GluingCandidate* label_matching(const std::vector<GluingCandidate>& v, int p2, int q2) {
    MinimalModel M(p2, q2);
    for (const auto& g : v) {
        bool ok = true;
        for (const auto& [x, y] : g.labels) ok = ok && y == M.canonical({x.n, x.m});
        if (ok) return &g;
    }
    return nullptr;
}

}  // namespace

TEST_SUITE("gluing") {
    TEST_CASE("(4,5).C2 x (5,6).C4: one isomorphism, sums 0 and 2") {
        auto v = glue(4, 5, "C2", 5, 6, "C4");
        REQUIRE(v.size() == 1);
        MinimalModel M(5, 6);
        CHECK(v[0].labels[0] == std::pair<KacLabel, KacLabel>{{1, 1}, {1, 1}});
        CHECK(v[0].labels[1] == std::pair<KacLabel, KacLabel>{{1, 3}, M.canonical({3, 1})});
        CHECK(v[0].weight_sums == std::vector<Rational>{0, 2});
        CHECK(v[0].integral);
        CHECK(v[0].twist_inverse);
    }

    TEST_CASE("(5,6).C1 x (6,7).C3 along (1,j) -> (j,1) is not integral") {
        auto v = glue(5, 6, "C1", 6, 7, "C3");
        const GluingCandidate* g = label_matching(v, 6, 7);
        REQUIRE(g != nullptr);
        CHECK_FALSE(g->integral);
        CHECK_FALSE(g->twist_inverse);
        CHECK(g->weight_sums == std::vector<Rational>{0, R("1/2"), 2, R("9/2"), 8});
        // a second fusion isomorphism exists and happens to be integral
        CHECK(v.size() == 2);
    }

    TEST_CASE("(6,7).C2 x (7,8).C4: sums 0, 2, 8") {
        auto v = glue(6, 7, "C2", 7, 8, "C4");
        const GluingCandidate* g = label_matching(v, 7, 8);
        REQUIRE(g != nullptr);
        CHECK(g->weight_sums == std::vector<Rational>{0, 2, 8});
        CHECK(g->integral);
        MinimalModel M(7, 8);
        CHECK(g->labels[1].second == M.canonical({3, 1}));
        CHECK(g->labels[2].second == M.canonical({5, 1}));
    }

    TEST_CASE("integrality and the strict twist test coincide") {
        for (auto [a, b] : {std::pair{"C1", "C3"}, {"C2", "C4"}, {"C1", "C1"}, {"C3", "C3"}})
            for (const auto& g : glue(5, 6, a, 6, 7, b)) CHECK(g.integral == g.twist_inverse);
    }

    TEST_CASE("isomorphisms are re-verified and contain the identity on a ring with itself") {
        MinimalCategory C(7, 9);
        for (const char* n : {"C1", "C2", "C3", "C4", "C6"}) {
            Subcategory s = named_subcategory(C, n);
            auto isos = fusion_ring_isos(C.ring, C.dims, s.members, C.ring, C.dims, s.members);
            REQUIRE_FALSE(isos.empty());
            bool has_identity = false;
            for (const auto& f : isos) {
                CHECK(verify_iso(C.ring, C.ring, f));
                bool id = true;
                for (const auto& [x, y] : f) id = id && x == y;
                has_identity = has_identity || id;
            }
            CHECK(has_identity);
        }
    }

    TEST_CASE("rank mismatch gives no isomorphism, bad names are rejected") {
        CHECK(glue(5, 6, "C1", 5, 6, "C2").empty());
        MinimalCategory C(5, 6);
        CHECK_THROWS_AS(named_subcategory(C, "C9"), ValidationError);
        Bijection broken{{0, 0}, {1, 1}, {2, 1}};
        CHECK_FALSE(verify_iso(C.ring, C.ring, broken));
    }

    TEST_CASE("unitary chain scan") {
        auto rows = scan_unitary_chain(10);
        REQUIRE(rows.size() == 8);
        for (const auto& r : rows) {
            CAPTURE(r.n);
            CHECK(r.isos >= 1);
            const bool odd = (r.n + 2) % 2 == 1;
            CHECK(r.left_modular == odd);
            CHECK(r.right_modular == odd);
            CHECK(r.integral);
        }
        CHECK(rows[0].left == "(4,5).C2");
        CHECK(rows[0].right == "(5,6).C4");
        CHECK(rows[0].weight_sums == std::vector<Rational>{0, 2});
        CHECK(rows[2].weight_sums == std::vector<Rational>{0, 2, 8});
        auto again = scan_unitary_chain(10);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(again[i].isos == rows[i].isos);
            CHECK(again[i].left_modular == rows[i].left_modular);
            CHECK(again[i].weight_sums == rows[i].weight_sums);
        }
        CHECK_THROWS_AS(scan_unitary_chain(2), ValidationError);
    }
}
