#include "doctest.h"

#include <set>

#include "corpus.hpp"
#include "toric/fano.hpp"

using namespace toric;

namespace {

std::vector<BundleSpec> specs_in_small_range() {
    std::vector<BundleSpec> out;
    for (std::size_t m = 2; m <= 4; ++m) {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (auto& s : bundle_specs(m, n, 4)) out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("is_fano") {
    for (std::size_t d = 1; d <= 5; ++d) CHECK(is_fano(projective_space(d)).is_fano);
    CHECK(is_fano(hirzebruch(0)).is_fano);
    CHECK(is_fano(hirzebruch(1)).is_fano);

    const FanoCheck f2 = is_fano(hirzebruch(2));
    CHECK_FALSE(f2.is_fano);
    REQUIRE(f2.witness.has_value());
    CHECK(*f2.witness == Cone{1});
    CHECK(*f2.degree == 0);

    const FanoCheck f3 = is_fano(hirzebruch(3));
    CHECK(*f3.degree == -1);

    for (const auto& dp : del_pezzo_database()) CHECK(is_fano(dp.fan).is_fano);
}

TEST_CASE("lemma_filter") {
    CHECK(lemma_filter(projective_space(1)).pass);
    CHECK_FALSE(lemma_filter(projective_space(1)).value.has_value());
    CHECK(*lemma_filter(projective_space(4)).value == 125);
    const auto dp = del_pezzo_database();
    // c1^2 - 2 c2 = (9 - k) - 2 (3 + k) on P2 blown up in k points, 8 - 2 * 4 on P1xP1
    const std::map<std::string, int> expected{{"P2", 3}, {"P1xP1", 0}, {"Bl1P2", 0}, {"Bl2P2", -3}, {"Bl3P2", -6}};
    for (const auto& [name, fan] : dp) {
        CAPTURE(name);
        const LemmaCheck l = lemma_filter(fan);
        CHECK(*l.value == expected.at(name));
        CHECK(l.pass == (expected.at(name) >= 0));
    }
}

TEST_CASE("is_two_fano") {
    SUBCASE("curves") {
        const FanoReport r = is_two_fano(projective_space(1));
        CHECK(r.is_fano);
        CHECK(r.is_two_fano);
        CHECK(r.lemma_pass);
        CHECK(r.surfaces.empty());
    }
    SUBCASE("projective spaces") {
        for (std::size_t d = 2; d <= 5; ++d) {
            const FanoReport r = is_two_fano(projective_space(d));
            CHECK(r.is_two_fano);
            CHECK(r.surfaces_checked);
            CHECK(r.surfaces.size() == faces(projective_space(d), d - 2).size());
            CHECK(r.picard == 1);
        }
    }
    SUBCASE("del Pezzo surfaces") {
        const FanoReport bl1 = is_two_fano(del_pezzo_database()[2].fan);
        CHECK(bl1.is_two_fano);
        const FanoReport bl2 = is_two_fano(del_pezzo_database()[3].fan);
        CHECK(bl2.is_fano);
        CHECK_FALSE(bl2.is_two_fano);
        CHECK_FALSE(bl2.lemma_pass);
        CHECK(*bl2.lemma_value == -3);
        REQUIRE(bl2.two_fano_witness.has_value());
        CHECK(*bl2.two_fano_witness == Cone{});
        REQUIRE(bl2.surfaces.size() == 1);
        CHECK(bl2.surfaces[0].ch2 == Rational(-3, 2));
    }
    SUBCASE("fast mode stops early") {
        const FanoReport slow = is_two_fano(hirzebruch(2));
        CHECK_FALSE(slow.is_fano);
        CHECK_FALSE(slow.is_two_fano);
        CHECK(slow.surfaces_checked);
        const FanoReport fast = is_two_fano(hirzebruch(2), TwoFanoOptions{true});
        CHECK_FALSE(fast.is_two_fano);
        CHECK_FALSE(fast.surfaces_checked);
        CHECK(fast.surfaces.empty());
        CHECK(*fast.fano_witness == Cone{1});
    }
    SUBCASE("fast and full modes agree on verdicts") {
        for (const auto& [name, fan] : testing::full_corpus()) {
            CAPTURE(name);
            CHECK(is_two_fano(fan).is_two_fano == is_two_fano(fan, TwoFanoOptions{true}).is_two_fano);
        }
    }
}

TEST_CASE("property: 2-Fano implies the degree filter and Fano") {
    for (const auto& [name, fan] : testing::full_corpus()) {
        CAPTURE(name);
        const FanoReport r = is_two_fano(fan);
        if (r.is_two_fano) {
            CHECK(r.is_fano);
            CHECK(r.lemma_pass);
            CHECK(lemma_filter(fan).pass);
        }
        CHECK(r.euler == fan.max_cones().size());
    }
}

TEST_CASE("scan") {
    SUBCASE("empty database") {
        const ScanResult r = scan({});
        CHECK(r.records.empty());
        CHECK(r.counts.total == 0);
        CHECK(r.counts.fano == 0);
        CHECK(r.counts.two_fano == 0);
    }
    SUBCASE("del Pezzo surfaces and the line") {
        std::vector<DatabaseEntry> db;
        for (const auto& [name, fan] : del_pezzo_database()) db.push_back({name, db.size() + 1, fan, {}});
        for (unsigned jobs : {1u, 4u}) {
            const ScanResult r = scan(db, ScanOptions{false, jobs});
            CHECK(r.counts.total == 5);
            CHECK(r.counts.fano == 5);
            CHECK(r.counts.two_fano == 3);
            CHECK(r.counts.lemma_pass == 3);
        }
        const ScanResult line = scan({{"P1", 1, projective_space(1), {}}});
        CHECK(line.counts.fano == 1);
        CHECK(line.counts.two_fano == 1);
    }
    SUBCASE("invalid entries are counted and kept in order") {
        std::vector<DatabaseEntry> db;
        db.push_back({"P2", 1, projective_space(2), {}});
        db.push_back({"broken", 2, std::nullopt, "NonPrimitiveRay"});
        db.push_back({"F2", 3, hirzebruch(2), {}});
        const ScanResult r = scan(db);
        CHECK(r.counts.total == 3);
        CHECK(r.counts.invalid == 1);
        CHECK(r.counts.fano == 1);
        CHECK(r.records[1].name == "broken");
        CHECK_FALSE(r.records[1].report.has_value());
        CHECK(r.records[2].index == 2);
    }
}

TEST_CASE("bundled Fano threefolds") {
    const auto db = testing::fano3_database();
    REQUIRE(db.size() == 18);
    const std::vector<int> c1_cubed{64, 54, 54, 56, 62, 44, 46, 48, 48, 50, 50, 52, 40, 42, 44, 46, 36, 36};
    const std::vector<int> lemma{16, 6, 6, 8, 14, -4, -2, 0, 0, 2, 2, 4, -8, -6, -4, -2, -12, -12};
    // Mori-Mukai numbers of the 2-Fano entries
    const std::set<std::string> expected{"1-17", "2-34", "2-35", "2-36", "3-27", "3-28", "3-30", "3-31"};
    std::set<std::string> found;
    for (std::size_t i = 0; i < db.size(); ++i) {
        CAPTURE(db[i].name);
        REQUIRE(db[i].fan.has_value());
        const FanoReport r = is_two_fano(*db[i].fan);
        CHECK(r.dim == 3);
        CHECK(r.is_fano);
        CHECK(r.c1_top == c1_cubed[i]);
        CHECK(*r.lemma_value == lemma[i]);
        if (r.is_two_fano) found.insert(db[i].name.substr(0, 4));
    }
    CHECK(found == expected);

    const ScanResult r = scan(db, ScanOptions{true, 1});
    CHECK(r.counts.fano == 18);
    CHECK(r.counts.two_fano == 8);
    CHECK(r.counts.lemma_pass == 10);
}

TEST_CASE("rank two surface cones") {
    const RankTwoCones c = rank2_surface_cones({4, 4, {2, 1, 0}});
    // x ids 0..3, y ids 4..7
    CHECK(*c.s1 == Cone{0, 4, 5, 6});
    CHECK(c.s2 == Cone{0, 1, 4, 5});
    CHECK(*c.s3 == Cone{0, 1, 2, 4});
    const RankTwoCones m2 = rank2_surface_cones({2, 3, {1}});
    CHECK_FALSE(m2.s1.has_value());
    CHECK(m2.s2 == Cone{2});
    CHECK(*m2.s3 == Cone{0});
    const RankTwoCones n2 = rank2_surface_cones({3, 2, {1, 0}});
    CHECK(*n2.s1 == Cone{3});
    CHECK_FALSE(n2.s3.has_value());
}

TEST_CASE("rank two closed forms") {
    const RankTwoClosedForms a = rank2_closed_forms({2, 4, {2}});
    CHECK(a.fano);
    CHECK(a.ch2_s2 == 0);
    CHECK(a.two_fano);
    CHECK(a.basis.size() == 2);

    const RankTwoClosedForms b = rank2_closed_forms({3, 3, {1, 1}});
    CHECK(b.fano);
    CHECK(b.ch2_s2 == -1);
    CHECK_FALSE(b.two_fano);
    CHECK(b.basis.size() == 3);
    CHECK(b.basis.s2->ch2 == Rational(-1, 2));

    const RankTwoClosedForms c = rank2_closed_forms({3, 3, {0, 0}});
    CHECK(c.two_fano);
    CHECK(c.ch2_s2 == 0);

    CHECK_FALSE(rank2_closed_forms({2, 2, {2}}).fano);

    try {
        rank2_closed_forms({3, 3, {1, 2}});
        FAIL("expected InvalidBundle");
    } catch (const ToricError& e) {
        CHECK(e.kind() == ErrorKind::InvalidBundle);
    }
}

TEST_CASE("Fano criterion for bundles matches the constructed fans") {
    for (const auto& spec : specs_in_small_range()) {
        CAPTURE(spec.str());
        CHECK(is_fano(kleinschmidt_bundle(spec)).is_fano == (Integer(spec.n) > spec.twist_sum()));
    }
}

TEST_CASE("ch2 on the middle surface matches the closed form") {
    for (const auto& spec : specs_in_small_range()) {
        CAPTURE(spec.str());
        const Fan fan = kleinschmidt_bundle(spec);
        const Cone s2 = rank2_surface_cones(spec).s2;
        const Rational oracle = ch2_pair(class_polynomial(fan, s2));
        const Integer closed = Integer(spec.m) * spec.twists.back() - 2 * spec.twist_sum();
        // the closed form is sum_i D_i^2 . S2, twice the ch2 pairing
        CHECK(2 * oracle == Rational(closed));
        CHECK(rank2_closed_forms(spec).ch2_s2 == closed);
        CHECK(ch2_pair(surface_class_fast(fan, s2)) == oracle);
    }
}

TEST_CASE("closed-form 2-Fano verdict matches the full check") {
    for (const auto& spec : specs_in_small_range()) {
        CAPTURE(spec.str());
        CHECK(rank2_closed_forms(spec).two_fano == is_two_fano(kleinschmidt_bundle(spec)).is_two_fano);
    }
}

TEST_CASE("rank two sweeps") {
    const RankTwoSweep d2 = rank2_sweep(2, 2);
    CHECK(d2.discrepancies.empty());
    CHECK(d2.two_fano == std::vector<BundleSpec>{{2, 2, {0}}, {2, 2, {1}}});

    const RankTwoSweep d3 = rank2_sweep(3, 3);
    CHECK(d3.discrepancies.empty());
    CHECK(d3.two_fano == std::vector<BundleSpec>{{2, 3, {0}}, {2, 3, {1}}, {2, 3, {2}}});

    const RankTwoSweep d4 = rank2_sweep(4, 4, 2);
    CHECK(d4.discrepancies.empty());
    CHECK(d4.two_fano ==
          std::vector<BundleSpec>{{2, 4, {0}}, {2, 4, {1}}, {2, 4, {2}}, {2, 4, {3}}, {3, 3, {0, 0}}});

    const RankTwoSweep d5 = rank2_sweep(5, 5);
    CHECK(d5.discrepancies.empty());
    CHECK(d5.two_fano.size() == 6);
    CHECK(d5.fano_specs == 17);
}
