#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "squeeze/conjugacy.hpp"
#include "squeeze/error.hpp"
#include "squeeze/lorentz.hpp"

using namespace squeeze;
using namespace squeeze::lorentz;
using squeeze::testing::Rng;

namespace {

const double kLn2 = std::log(2.0);
constexpr Generator kAll[] = {Generator::S1, Generator::S2, Generator::S3,
                              Generator::K1, Generator::K2, Generator::K3};

ComplexMatrix2 real_part(const RealMatrix2& m) { return {m.a, m.b, m.c, m.d}; }

} // namespace

TEST_CASE("minkowski_norm") {
    CHECK(minkowski_norm({0, 0, 1, 1}) == 0.0);
    CHECK(minkowski_norm({0, 0, 1.25, 0.75}) == 1.0);
    CHECK(minkowski_norm({1, 1, 0, 0}) == 2.0);
}

TEST_CASE("light-cone coordinates") {
    const LightConeEvent a = to_lightcone(1, 0);
    CHECK(a.u == 1.0);
    CHECK(a.v == 1.0);
    const LightConeEvent b = to_lightcone(0, 1);
    CHECK(b.u == 1.0);
    CHECK(b.v == -1.0);
    const ZT back = from_lightcone(to_lightcone(0.3, -0.7));
    CHECK(std::abs(back.z - 0.3) <= 1e-15);
    CHECK(std::abs(back.t + 0.7) <= 1e-15);
}

TEST_CASE("boost_lightcone") {
    const LightConeEvent e{0.4, -1.2};
    const LightConeEvent same = boost_lightcone(e, 0.0);
    CHECK(same.u == e.u);
    CHECK(same.v == e.v);

    const LightConeEvent squeezed = boost_lightcone({1, 1}, 2 * kLn2);
    CHECK(squeezed.u == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(squeezed.v == doctest::Approx(0.5).epsilon(1e-15));

    Rng rng(0x75763031);
    for (int k = 0; k < 200; ++k) {
        const LightConeEvent x{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const LightConeEvent y = boost_lightcone(x, rng.uniform(-10, 10));
        CHECK(std::abs(y.u * y.v - x.u * x.v) <= 1e-12 * std::max(1.0, std::abs(x.u * x.v)));
    }
    CHECK_THROWS_AS(boost_lightcone(e, 800.0), Error);
}

TEST_CASE("boost_zt") {
    const ZT b = boost_zt(1, 0, 2 * kLn2);
    CHECK(b.z == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(b.t == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(minkowski_norm({0, 0, b.z, b.t}) == doctest::Approx(1.0).epsilon(1e-15));

    const ZT id = boost_zt(0.3, -2.0, 0.0);
    CHECK(id.z == 0.3);
    CHECK(id.t == -2.0);

    const ZT far = boost_zt(0.6, 0.8, 3.0);
    CHECK(std::abs((far.z * far.z - far.t * far.t) - (0.36 - 0.64)) <= 1e-12);

    const FourVector p = boost({1.5, -2.5, 1.0, 0.0}, 2 * kLn2);
    CHECK(p.x == 1.5);
    CHECK(p.y == -2.5);
    CHECK(p.z == doctest::Approx(1.25).epsilon(1e-15));
}

// The interval is checked against the rounding scale of the boosted
// coordinates (max(1, z'^2, t'^2)): each output is only known to half an ulp.
TEST_CASE("property: boosts preserve the interval and compose additively") {
    Rng rng(0x6c6f7231);
    for (int k = 0; k < 1000; ++k) {
        const FourVector p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const double e1 = rng.uniform(-5, 5);
        const double e2 = rng.uniform(-5, 5);
        const double before = minkowski_norm(p);
        const FourVector q = boost(p, e1 + e2);
        const double scale = std::max({1.0, std::abs(q.z), std::abs(q.t)});
        CHECK(std::abs(minkowski_norm(q) - before) <= 1e-12 * scale * scale);

        const ZT twice = boost_zt(boost_zt(p.z, p.t, e2).z, boost_zt(p.z, p.t, e2).t, e1);
        CHECK(std::abs(twice.z - q.z) <= 1e-12 * scale);
        CHECK(std::abs(twice.t - q.t) <= 1e-12 * scale);

        const ZT via_cone = from_lightcone(boost_lightcone(to_lightcone(p.z, p.t), e1));
        const ZT direct = boost_zt(p.z, p.t, e1);
        const double s1 = std::max({1.0, std::abs(direct.z), std::abs(direct.t)});
        CHECK(std::abs(via_cone.z - direct.z) <= 1e-12 * s1);
        CHECK(std::abs(via_cone.t - direct.t) <= 1e-12 * s1);
    }
}

TEST_CASE("generators are hermitian / anti-hermitian and traceless") {
    const GeneratorSet set = generators();
    for (const auto* s : {&set.s1, &set.s2, &set.s3}) {
        CHECK(max_abs_diff(*s, conjugate_transpose(*s)) == 0.0);
        CHECK(std::abs(trace(*s)) == 0.0);
    }
    for (const auto* k : {&set.k1, &set.k2, &set.k3}) {
        CHECK(max_abs_diff(*k, -conjugate_transpose(*k)) == 0.0);
        CHECK(std::abs(trace(*k)) == 0.0);
    }
}

TEST_CASE("commutator examples") {
    const std::complex<double> i{0.0, 1.0};
    const GeneratorSet g = generators();
    CHECK(commutator(g.s1, g.s2) == g.s3 * i);
    CHECK(max_abs_diff(commutator(g.k1, g.k2), g.s3 * (-i)) <= 1e-15);
    CHECK(max_abs_diff(commutator(g.s3, g.k1), g.k2 * i) <= 1e-15);
}

TEST_CASE("exp_generator") {
    const ComplexMatrix2 quarter = exp_generator(Generator::S2, std::numbers::pi);
    CHECK(max_abs_diff(quarter, real_part(RealMatrix2{0, -1, 1, 0})) <= 1e-15);

    const ComplexMatrix2 boost_k3 = exp_generator(Generator::K3, 2 * kLn2);
    CHECK(max_abs_diff(boost_k3, real_part(RealMatrix2{2, 0, 0, 0.5})) <= 1e-15);
    CHECK(max_abs_diff(boost_k3, real_part(squeeze::squeeze(-2 * kLn2))) <= 1e-15);

    for (Generator which : kAll) {
        CHECK(exp_generator(which, 0.0) == ComplexMatrix2::identity());
    }
}

TEST_CASE("property: exp_generator is a one-parameter group") {
    Rng rng(0x65786731);
    for (int k = 0; k < 200; ++k) {
        for (Generator which : kAll) {
            const double a = rng.uniform(-3, 3);
            const double b = rng.uniform(-3, 3);
            const ComplexMatrix2 lhs = exp_generator(which, a) * exp_generator(which, b);
            CHECK(normalized_diff(lhs, exp_generator(which, a + b)) <= 1e-10);
        }
    }
}
