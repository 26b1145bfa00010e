#include "support.hpp"

#include "virmtc/errors.hpp"
#include "virmtc/exact_matrix.hpp"
#include "virmtc/modular_data.hpp"
#include "virmtc/subcat.hpp"

#include <cmath>
#include <random>

using namespace virmtc;
using testing::R;

namespace {

CycloNumber random_cyclo(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> k(0, N - 1), num(-5, 5), den(1, 4), cnt(1, 4);
    std::vector<std::pair<long long, Rational>> t;
    for (int i = cnt(rng); i > 0; --i) t.emplace_back(k(rng), R(num(rng), den(rng)));
    return CycloNumber::from_terms(N, t);
}

}  // namespace

TEST_SUITE("exactmath") {
    TEST_CASE("rationals are stored reduced and print as num/den") {
        Rational a = R("6/8");
        CHECK(to_string(a) == "3/4");
        CHECK(to_string(Rational(0)) == "0/1");
        CHECK(to_string(Rational(2)) == "2/1");
        CHECK(to_string(R("1/6") + R("1/3")) == "1/2");
        CHECK(to_string(R("-4/6")) == "-2/3");
        CHECK(frac_part(R("-1/4")) == R("3/4"));
        CHECK(frac_part(R("9/2")) == R("1/2"));
        CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
        CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    }

    TEST_CASE("cyclotomic polynomials") {
        CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
        CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
        CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
        // Phi_105 is the first with a coefficient -2
        const auto phi = cyclotomic_polynomial(105);
        CHECK(phi.size() == 49);
        CHECK(*std::min_element(phi.begin(), phi.end()) == -2);
    }

    TEST_CASE("make_sin examples") {
        CHECK(make_sin(1, 6) == CycloNumber(12, R("1/2")));
        CHECK(make_sin(1, 2) == CycloNumber(4, Rational(1)));
        CHECK(std::abs(float_eval(make_sin(1, 5)).real() - std::sin(M_PI / 5)) < 1e-12);
        CHECK(std::abs(float_eval(make_sin(1, 4)).real() - std::sqrt(0.5)) < 1e-12);
        CHECK(cyclo_is_zero(make_sin(3, 3)));
        CHECK(cyclo_is_zero(make_sin(1, 6) - CycloNumber(12, R("1/2"))));
        CHECK(make_sin(-1, 5) == -make_sin(1, 5));
        CHECK(make_sin(11, 5) == make_sin(1, 5));
    }

    TEST_CASE("Pythagorean identity") {
        for (int b = 2; b <= 30; ++b)
            for (int a = 0; a < 2 * b; ++a) {
                CycloNumber s = make_sin(a, b);
                CycloNumber c = make_sin(2 * a + b, 2 * b);  // sin(x + pi/2)
                CHECK(cyclo_is_zero(s * s + c * c - CycloNumber(4, Rational(1))));
            }
    }

    TEST_CASE("float_eval of simple values") {
        auto z = float_eval(CycloNumber(1, R("1/2")));
        CHECK(z.real() == doctest::Approx(0.5));
        CHECK(z.imag() == doctest::Approx(0.0));
        auto w = float_eval(CycloNumber::zeta(8, 1));
        CHECK(std::abs(w - std::complex<double>(std::sqrt(0.5), std::sqrt(0.5))) < 1e-12);
    }

    TEST_CASE("ring laws, integral domain and the complex embedding") {
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<int> pickN(1, 120);
        for (int trial = 0; trial < 120; ++trial) {
            const int N = pickN(rng);
            CycloNumber x = random_cyclo(rng, N), y = random_cyclo(rng, N), z = random_cyclo(rng, N);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * y == y * x);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            if (!x.is_zero() && !y.is_zero()) CHECK_FALSE((x * y).is_zero());
            const auto fx = float_eval(x), fy = float_eval(y);
            if (std::abs(fx) <= 10 && std::abs(fy) <= 10) CHECK(std::abs(float_eval(x * y) - fx * fy) < 1e-10);
            CHECK(x.is_zero() == (std::abs(fx) < 1e-9));
        }
    }

    TEST_CASE("mixed moduli lift to a common field") {
        CycloNumber a = CycloNumber::zeta(3, 1), b = CycloNumber::zeta(4, 1);
        CycloNumber ab = a * b;
        CHECK(ab.modulus() == 12);
        CHECK(ab == CycloNumber::zeta(12, 7));
        CHECK(a.lift(12) == CycloNumber::zeta(12, 4));
    }

    TEST_CASE("exact_rank examples") {
        ExactMatrix I(3, 3, 4);
        for (int i = 0; i < 3; ++i) I.at(i, i) = CycloNumber(4, Rational(1));
        CHECK(exact_rank(I) == 3);

        ExactMatrix Z(2, 3, 5);
        CHECK(exact_rank(Z) == 0);

        // sign pattern {-1, (-1)^{p+q}; (-1)^{p+q}, (-1)^{pq+1}} at (3,4)
        ExactMatrix S(2, 2, 1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) S.at(i, j) = CycloNumber(1, Rational(-1));
        CHECK(exact_rank(S) == 1);

        MinimalCategory C(3, 8);
        IndexSet c6 = named_patterns(C).at("C6");
        CHECK(exact_rank(C.data.s_kernel(c6)) < c6.size());
    }

    TEST_CASE("rank is transpose invariant and matches the float rank on restricted S") {
        for (auto [p, q] : testing::coprime_pairs(12, 12)) {
            MinimalCategory C(p, q);
            for (const auto& s : enumerate_subcats(C)) {
                ExactMatrix K = C.data.s_kernel(s.members);
                const auto r = exact_rank(K);
                CHECK(r == exact_rank(K.transpose()));
                CHECK(r == float_rank(K, 1e-8));
            }
        }
    }

    TEST_CASE("a rank deficient matrix with a nontrivial kernel over the field") {
        // rows (1, z), (z, z^2) with z = zeta_7: rank 1, though no entry vanishes
        ExactMatrix M(2, 2, 7);
        M.at(0, 0) = CycloNumber(7, Rational(1));
        M.at(0, 1) = CycloNumber::zeta(7, 1);
        M.at(1, 0) = CycloNumber::zeta(7, 1);
        M.at(1, 1) = CycloNumber::zeta(7, 2);
        CHECK(exact_rank(M) == 1);
        M.at(1, 1) = CycloNumber::zeta(7, 3);
        CHECK(exact_rank(M) == 2);
    }
}
