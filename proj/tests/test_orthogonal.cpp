#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnc/orthogonal_suite.hpp>

using namespace braidnc;

namespace {
const OrthogonalInstance& O() { return orthogonal(); }
} // namespace

TEST_CASE("presentation shape") {
    CHECK(O().cl().num_generators() == 25);
    CHECK(O().tw().form().cl == -1);
    CHECK(O().tw().form().cr == 1);
    CHECK(O().rule_count() == 29);
    // Rule lhs monomials pairwise distinct and grade-homogeneous by builder.
    std::set<std::vector<std::uint8_t>> seen;
    for (auto& r : O().cl().rules()) CHECK(seen.insert(r.lhs.idx).second);
}

TEST_CASE("base column and star pairing") {
    CHECK(O().u1.star() == O().u1_s);
    CHECK(O().cl().star_of(OrthogonalInstance::idx(0, 1)) == OrthogonalInstance::idx(2, 3));
    // Commutation of base coordinates follows the restricted phase form.
    const Presentation& t = O().tw();
    auto g1 = t.grade_of_gen(OrthogonalInstance::idx(0, 4));
    auto g2 = t.grade_of_gen(OrthogonalInstance::idx(1, 4));
    CHECK(t.swap_phase(g1, g2) == -4);
}

TEST_CASE("base derivation values restrict as listed") {
    // E10(x) = -u1 and E-10(x) = u1* on the base column.
    CHECK(apply(OperatorExpr(O().E.at({1, 0})), O().xx) == -O().u1);
    CHECK(apply(OperatorExpr(O().E.at({-1, 0})), O().xx) == O().u1_s);
    CHECK(apply(OperatorExpr(O().E.at({1, 1})), O().u1_s) == O().u2);
}

TEST_CASE("deformed instance swaps phases by the cocycle") {
    // n12 against n21: lambda_12 lambda_12-type bookkeeping.
    const Presentation& t = O().tw();
    int a = OrthogonalInstance::idx(0, 1), b = OrthogonalInstance::idx(1, 0);
    int expect = -4 * wedge({1, 0}, {0, 1}) - 4 * wedge({1, 0}, {0, 1});
    CHECK(t.swap_phase(t.grade_of_gen(a), t.grade_of_gen(b)) == expect);
}

TEST_CASE("full orthogonal suite passes") {
    Report rep = run_orthogonal_suite();
    int fails = 0;
    for (auto& r : rep.records)
        if (!r.passed()) {
            ++fails;
            if (fails <= 10)
                MESSAGE(r.id, ": ", r.status, " [", r.path, "] ", r.detail, " lhs=", r.lhs_nf,
                        " rhs=", r.rhs_nf);
        }
    CHECK(fails == 0);
    CHECK(rep.records.size() > 100);
    for (auto& r : rep.records) CHECK(r.path != "numeric");
}
