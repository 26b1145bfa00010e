#include "support.hpp"

#include "virmtc/errors.hpp"
#include "virmtc/minimal_model.hpp"

using namespace virmtc;
using testing::R;

TEST_SUITE("minimal_model") {
    TEST_CASE("validation and normalization") {
        CHECK_THROWS_AS(MinimalModel(4, 6), ValidationError);
        CHECK_THROWS_AS(MinimalModel(1, 3), ValidationError);
        CHECK_THROWS_AS(MinimalModel(5, 5), ValidationError);
        MinimalModel M(6, 5);
        CHECK(M.p() == 5);
        CHECK(M.q() == 6);
        CHECK(M.field_order() == 60);
    }

    TEST_CASE("central charge") {
        CHECK(central_charge(MinimalModel(3, 4)) == R("1/2"));
        CHECK(central_charge(MinimalModel(2, 3)) == 0);
        CHECK(central_charge(MinimalModel(5, 6)) == R("4/5"));
        CHECK(central_charge(MinimalModel(2, 5)) == R("-22/5"));
    }

    TEST_CASE("Ising data") {
        MinimalModel M(3, 4);
        CHECK(M.simples() == std::vector<KacLabel>{{1, 1}, {1, 2}, {1, 3}});
        CHECK(conformal_weight(M, {1, 1}) == 0);
        CHECK(conformal_weight(M, {1, 2}) == R("1/16"));
        CHECK(conformal_weight(M, {1, 3}) == R("1/2"));
        const auto& w = testing::oracle()["ambient"]["ising_weights"];
        for (int a = 0; a < 3; ++a) CHECK(conformal_weight(M, M.simples()[a]) == parse_rational(w[a].get<std::string>()));
    }

    TEST_CASE("simple lists") {
        CHECK(list_simples(MinimalModel(2, 3)) == std::vector<KacLabel>{{1, 1}});
        CHECK(list_simples(MinimalModel(4, 5)).size() == 6);
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            MinimalModel M(p, q);
            CHECK(M.rank() == (p - 1) * (q - 1) / 2);
            CHECK(std::is_sorted(M.simples().begin(), M.simples().end()));
        }
    }

    TEST_CASE("weights are invariant under the Kac identification") {
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            MinimalModel M(p, q);
            for (int m = 1; m < p; ++m)
                for (int n = 1; n < q; ++n) {
                    KacLabel x{m, n}, y{p - m, q - n};
                    CHECK(conformal_weight(M, x) == conformal_weight(M, y));
                    KacLabel c = M.canonical(x);
                    CHECK(c == M.canonical(y));
                    CHECK(M.canonical(c) == c);
                    CHECK(c == std::min(x, y));
                }
            CHECK(conformal_weight(M, {1, q - 1}) == testing::R((p - 2) * (q - 2), 4));
        }
    }

    TEST_CASE("labels outside the rectangle are rejected") {
        MinimalModel M(4, 5);
        CHECK_THROWS_AS(conformal_weight(M, {4, 1}), ValidationError);
        CHECK_THROWS_AS(M.canonical({0, 2}), ValidationError);
        CHECK_THROWS_AS(M.index_of({1, 5}), ValidationError);
        CHECK_THROWS_AS(KacLabel::parse("1;2"), ValidationError);
        CHECK(KacLabel::parse("3,1") == KacLabel{3, 1});
    }

    TEST_CASE("twists") {
        MinimalModel M(5, 6);
        CHECK(twist(M, {1, 1}) == CycloNumber(1, Rational(1)));
        CHECK(twist(M, {1, 3}) == CycloNumber::zeta(3, 2));
        CHECK(conformal_weight(M, {1, 3}) - testing::R(2 * 5, 6) == -1);
        CHECK(twist(M, {1, 5}) == CycloNumber(1, Rational(1)));
        // h(3,1) = 2q/p - 1
        CHECK(conformal_weight(M, {3, 1}) == testing::R(2 * 6, 5) - 1);
    }

    TEST_CASE("simple current action") {
        MinimalModel M(5, 6);
        CHECK(simple_current_act(M, {1, 2}) == KacLabel{1, 4});
        CHECK(simple_current_act(MinimalModel(9, 10), {1, 5}) == KacLabel{1, 5});
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            MinimalModel N(p, q);
            CHECK(simple_current_act(N, {1, 1}) == N.simple_current());
            for (const auto& x : N.simples()) CHECK(simple_current_act(N, simple_current_act(N, x)) == x);
        }
    }

    TEST_CASE("theta(1,q-i) = theta(1,q-1) theta(1,i) iff (i-1)(p-2)/2 is an integer") {
        for (auto [p, q] : testing::coprime_pairs(12, 13)) {
            MinimalModel M(p, q);
            for (int i = 1; i < q; ++i) {
                const bool eq = twist(M, M.canonical({1, q - i})) ==
                                twist(M, M.canonical({1, q - 1})) * twist(M, M.canonical({1, i}));
                CHECK(eq == ((i - 1) * (p - 2) % 2 == 0));
            }
        }
    }
}
