#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnc/oracle.hpp>
#include <braidnc/scalar.hpp>

using namespace braidnc;

namespace {

Scalar random_scalar(std::uint64_t& st) {
    Scalar s;
    int nterms = 1 + static_cast<int>(splitmix64(st) % 3);
    for (int t = 0; t < nterms; ++t) {
        int k = static_cast<int>(splitmix64(st) % 9) - 4;
        Rational a(static_cast<long>(splitmix64(st) % 7) - 3,
                   1 + static_cast<long>(splitmix64(st) % 4));
        Rational b(static_cast<long>(splitmix64(st) % 7) - 3, 1);
        Rational c(static_cast<long>(splitmix64(st) % 5) - 2, 1);
        Rational d(static_cast<long>(splitmix64(st) % 3) - 1, 2);
        s += Scalar::q_power(k, BaseNumber(a, b, c, d));
    }
    return s;
}

} // namespace

TEST_CASE("field relations in Q(i,sqrt2)") {
    BaseNumber i = BaseNumber::i();
    BaseNumber s2 = BaseNumber::sqrt2();
    CHECK(i * i == BaseNumber(-1));
    CHECK(s2 * s2 == BaseNumber(2));
    // (1 + i)(1 - i) = 2
    CHECK((BaseNumber(1) + i) * (BaseNumber(1) - i) == BaseNumber(2));
}

TEST_CASE("base number inverse") {
    std::uint64_t st = 17;
    for (int k = 0; k < 200; ++k) {
        Rational a(static_cast<long>(splitmix64(st) % 9) - 4, 1 + (splitmix64(st) % 3));
        Rational b(static_cast<long>(splitmix64(st) % 9) - 4, 1);
        Rational c(static_cast<long>(splitmix64(st) % 9) - 4, 2);
        Rational d(static_cast<long>(splitmix64(st) % 9) - 4, 3);
        BaseNumber v(a, b, c, d);
        if (v.is_zero()) continue;
        CHECK(v * v.inverse() == BaseNumber(1));
    }
}

TEST_CASE("laurent ring operations") {
    Scalar q = Scalar::q_power(1);
    Scalar s2 = Scalar::sqrt2();
    // (1 + sqrt2 q)(1 - sqrt2 q^-1) = -1 + sqrt2 q - sqrt2 q^-1
    Scalar lhs = (Scalar(1) + s2 * q) * (Scalar(1) - s2 * Scalar::q_power(-1));
    Scalar rhs = Scalar(-1) + s2 * q - s2 * Scalar::q_power(-1);
    CHECK(lhs == rhs);
    CHECK((s2 * s2) == Scalar(2));
}

TEST_CASE("conjugation is an involutive ring automorphism") {
    std::uint64_t st = 99;
    Scalar three_q2 = Scalar::q_power(2, BaseNumber(3));
    Scalar i_s2_qm1 = Scalar::q_power(-1, BaseNumber(Rational(0), Rational(0), Rational(0), Rational(1)));
    Scalar x0 = three_q2 + i_s2_qm1;
    Scalar expect = Scalar::q_power(-2, BaseNumber(3)) +
                    Scalar::q_power(1, BaseNumber(Rational(0), Rational(0), Rational(0), Rational(-1)));
    CHECK(x0.conj() == expect);
    CHECK(Scalar::q_power(1).conj() == Scalar::q_power(-1));
    for (int k = 0; k < 200; ++k) {
        Scalar x = random_scalar(st), y = random_scalar(st);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("ring axioms on random triples") {
    std::uint64_t st = 5;
    for (int k = 0; k < 150; ++k) {
        Scalar x = random_scalar(st), y = random_scalar(st), z = random_scalar(st);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("numeric evaluation") {
    // q^2 at theta = 1/2 is e^{i pi / 2} = i.
    auto v = Scalar::q_power(2).eval(0.5);
    CHECK(std::abs(v - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(Scalar::q_power(1).eval(0.0) - 1.0) < 1e-12);

    std::uint64_t st = 23;
    for (int k = 0; k < 100; ++k) {
        Scalar x = random_scalar(st), y = random_scalar(st);
        double theta = uniform01(st) * 4 - 2;
        auto prod = (x * y).eval(theta);
        auto sep = x.eval(theta) * y.eval(theta);
        CHECK(std::abs(prod - sep) < 1e-12);
        // conj then eval = complex-conjugate of eval
        CHECK(std::abs(x.conj().eval(theta) - std::conj(x.eval(theta))) < 1e-12);
    }
    for (int k = -6; k <= 6; ++k)
        for (double theta : {0.0, 0.3, 0.7, 1.9})
            CHECK(std::abs(std::abs(Scalar::q_power(k).eval(theta)) - 1.0) < 1e-12);
}

TEST_CASE("single-term inverse") {
    Scalar u = Scalar::q_power(3, BaseNumber(Rational(2), Rational(0), Rational(1), Rational(0)));
    CHECK(u * u.inverse_single() == Scalar(1));
}

TEST_CASE("rendering") {
    CHECK(Scalar(1).render() == "1");
    CHECK(Scalar::q_power(-4).render() == "q^-4");
    Scalar s = Scalar::q_power(2, BaseNumber(3)) + Scalar::q_power(-1, BaseNumber(Rational(3), Rational(0), Rational(0), Rational(0)) * BaseNumber::i() * BaseNumber::sqrt2());
    CHECK(Scalar(BaseNumber(Rational(3, 2))).render() == "3/2");
}
