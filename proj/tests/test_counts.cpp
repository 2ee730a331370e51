#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapenum/counts.hpp"

using namespace mapenum;

TEST_CASE("oracle: two trivalent vertices") {
    MatchingTally t = oracle_counts_regular(3, 2);
    CHECK(t.total == 15);
    CHECK(t.connected(0) == 12);
    CHECK(t.connected(1) == 3);
    CHECK(t.disconnected == 0);
}

TEST_CASE("oracle: four trivalent vertices") {
    MatchingTally t = oracle_counts_regular(3, 4);
    CHECK(t.total == 10395);
    CHECK(t.disconnected == 675);  // three 2+2 splits x 15^2
    CHECK(t.connected(0) == 5184);
    CHECK(t.connected(1) == 4536);
    CHECK(t.connected(2) == 0);
}

TEST_CASE("oracle: one quartic vertex and parity rejection") {
    MatchingTally t = oracle_counts_regular(4, 1);
    CHECK(t.total == 3);
    CHECK(t.connected(0) == 2);
    CHECK(t.connected(1) == 1);
    CHECK_THROWS(oracle_counts_regular(3, 1));  // 3 darts, no perfect matching
    CHECK_THROWS(oracle_counts_regular(3, 12, /*work_budget=*/1e6));  // over budget
}

TEST_CASE("oracle tallies are invariant under dart relabelling") {
    // same vertex blocks, rotations started at different offsets and one
    // rotation reversed: any consistent rotation system gives the same tallies
    std::vector<unsigned> val{3, 3, 4};
    std::vector<unsigned> sigma{1, 2, 0, /**/ 5, 3, 4, /**/ 7, 8, 9, 6};
    std::vector<unsigned> sigma2{2, 0, 1, /**/ 4, 5, 3, /**/ 9, 6, 7, 8};
    MatchingTally a = oracle_counts(val, &sigma);
    MatchingTally b = oracle_counts(val, &sigma2);
    MatchingTally c = oracle_counts(val);
    CHECK(a.by_components_genus == b.by_components_genus);
    CHECK(a.by_components_genus == c.by_components_genus);
}

TEST_CASE("closed-form counts: genus 0, trivalent, against oracle and table") {
    auto rows = kappa_closed(3, 0, 5);
    // table values are raw/(j * (2m)!)
    std::vector<Rat> table{Rat(2), Rat(72), Rat(4536), Rat(373248), Rat(180138816, 5)};
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(rows[m - 1].value / Rat(3) / Rat(factorial(2 * m)) == table[m - 1]);
    CHECK(rows[0].value == 12);    // oracle n=2
    CHECK(rows[1].value == 5184);  // oracle n=4
}

TEST_CASE("closed-form counts: genus 0, five-valent table") {
    auto rows = kappa_closed(5, 0, 5);
    std::vector<Rat> table{Rat(18), Rat(54000), Rat(345060000), Rat(3098250000000),
                           Rat(Int("33814409850000000"))};
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(rows[m - 1].value / Rat(5) / Rat(factorial(2 * m)) == table[m - 1]);
}

TEST_CASE("closed-form counts: genus 2 at j=3") {
    auto rows = kappa_closed(3, 2, 6);
    std::vector<Rat> table{Rat(0), Rat(0), Rat(2835, 2), Rat(739206), Rat(1301676156, 5),
                           Rat(77075478720)};
    for (unsigned m = 1; m <= 6; ++m)
        CHECK(rows[m - 1].value / Rat(3) / Rat(factorial(2 * m)) == table[m - 1]);
    CHECK_THROWS(kappa_closed(5, 2, 3));
}

TEST_CASE("residue mode: genus 1 reproduces the printed tables") {
    std::vector<Rat> t3{Rat(3, 2), Rat(135), Rat(16524), Rat(2291976), Rat(1701555984, 5)};
    for (unsigned m = 1; m <= 5; ++m) CHECK(kappa_residue_table(3, 1, m) == t3[m - 1]);
    std::vector<Rat> t5{Rat(90), Rat(1035000), Rat(15746400000), Rat(268824825000000),
                        Rat(Int("4889505205800000000"))};
    for (unsigned m = 1; m <= 5; ++m) CHECK(kappa_residue_table(5, 1, m) == t5[m - 1]);
}

TEST_CASE("residue mode equals closed form at genus 0") {
    for (unsigned j : {3u, 5u, 7u}) {
        auto rows = kappa_closed(j, 0, 4);
        for (unsigned m = 1; m <= 4; ++m) {
            CAPTURE(j);
            CAPTURE(m);
            CHECK(kappa_residue(j, 0, m) == rows[m - 1].value);
        }
    }
}

TEST_CASE("residue mode deviates from closed form at genus 1 exactly as documented") {
    auto rows_full = kappa_closed(3, 1, 3);
    // m=1: residue raw = 9, closed-form raw = 3 (the log z0 term's footprint)
    CHECK(kappa_residue(3, 1, 1) == 9);
    CHECK(rows_full[0].value == 3);
    CHECK(kappa_residue(3, 1, 2) == 9720);
    CHECK(rows_full[1].value == 4536);
}

TEST_CASE("genus-1 adjudication: full mode matches the oracle") {
    auto rep = adjudicate_genus1_trivalent();
    CHECK(rep.oracle_n2_g1 == 3);
    CHECK(rep.full_n2 == 3);
    CHECK(rep.table_n2 == 9);
    CHECK(rep.oracle_n4_g1 == 4536);
    CHECK(rep.full_n4 == 4536);
    CHECK(rep.table_n4 == 9720);
    CHECK(rep.winner == "full");
}

TEST_CASE("two-legged counts against the oracle") {
    // j=4, m=1, genus 0: one quartic vertex plus two legs
    MatchingTally t = oracle_counts_twolegged(4, 1);
    auto rows = twolegged_series(4, 0, 2);
    CHECK(rows[1].vertices == 1);
    CHECK(rows[1].value == Rat(Int(t.connected(0))));

    // j=3, genus 0, m = 2: the one-edge map count z0(0) = 1 at m=0 and the
    // 8-dart enumeration at m=2
    MatchingTally t32 = oracle_counts_twolegged(3, 2);
    auto rows3 = twolegged_series(3, 0, 3);
    CHECK(rows3[0].value == 1);
    CHECK(rows3[1].value == Rat(Int(t32.connected(0))));

    // j=3, genus 1, m = 2: zero (no genus-1 map exists on 8 darts), and the
    // series coefficient agrees
    auto rows31 = twolegged_series(3, 1, 3);
    CHECK(rows31[1].value == Rat(Int(t32.connected(1))));
    CHECK(rows31[1].value == 0);

    // j=3, genus 1, m = 4
    MatchingTally t34 = oracle_counts_twolegged(3, 4);
    auto rows314 = twolegged_series(3, 1, 5);
    CHECK(rows314[2].value == Rat(Int(t34.connected(1))));
}

TEST_CASE("two-legged genus-0 even series matches oracle with signs removed") {
    MatchingTally t = oracle_counts_twolegged(4, 2);
    auto rows = twolegged_series(4, 0, 3);
    CHECK(rows[2].value == Rat(Int(t.connected(0))));
}

TEST_CASE("exp/log consistency for trivalent maps up to six vertices") {
    auto rep = exp_log_consistency(3, 6);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
}

TEST_CASE("all closed-form counts are nonnegative; odd-vertex counts vanish") {
    for (unsigned genus : {0u, 1u}) {
        auto rows = kappa_closed(3, genus, 6);
        for (const auto& r : rows) CHECK(r.value >= 0);
    }
}
