#include "doctest.h"

#include <set>

#include "corpus.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

RawFan p2_raw() {
    RawFan raw;
    raw.dim = 2;
    raw.rays = {{1, 0}, {0, 1}, {-1, -1}};
    raw.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return raw;
}

ErrorKind validation_error(const RawFan& raw) {
    try {
        Fan::validate(raw);
    } catch (const ToricError& e) {
        return e.kind();
    }
    FAIL("fan unexpectedly valid");
    return ErrorKind::MalformedInput;
}

// Brute force: size-l subsets of all rays that lie in some maximal cone.
std::size_t count_faces_brute(const Fan& fan, std::size_t l) {
    const std::size_t m = fan.ray_count();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<RayId> ids;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) ids.push_back(static_cast<RayId>(i));
        }
        if (ids.size() != l) continue;
        const Cone c(ids);
        for (const auto& mc : fan.max_cones()) {
            if (mc.contains(c)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("validate_fan accepts P2") {
    const Fan fan = validate_fan(p2_raw());
    CHECK(fan.dim() == 2);
    CHECK(fan.ray_count() == 3);
    CHECK(fan.picard_number() == 1);
    CHECK(fan.max_cones() == std::vector<Cone>{Cone{0, 1}, Cone{0, 2}, Cone{1, 2}});
}

TEST_CASE("validate_fan error paths") {
    SUBCASE("non-primitive ray") {
        RawFan raw = p2_raw();
        raw.rays[0] = {2, 0};
        CHECK(validation_error(raw) == ErrorKind::NonPrimitiveRay);
    }
    SUBCASE("zero ray") {
        RawFan raw = p2_raw();
        raw.rays[0] = {0, 0};
        CHECK(validation_error(raw) == ErrorKind::NonPrimitiveRay);
    }
    SUBCASE("missing cone leaves walls unpaired") {
        RawFan raw = p2_raw();
        raw.max_cones = {{0, 1}, {2, 0}};
        CHECK(validation_error(raw) == ErrorKind::UnpairedWall);
    }
    SUBCASE("duplicate ray") {
        RawFan raw = p2_raw();
        raw.rays.push_back({1, 0});
        raw.max_cones.push_back({3, 1});
        CHECK(validation_error(raw) == ErrorKind::DuplicateRay);
    }
    SUBCASE("non-unimodular cone") {
        RawFan raw = p2_raw();
        raw.rays[1] = {1, 2};
        CHECK(validation_error(raw) == ErrorKind::NonUnimodularCone);
    }
    SUBCASE("ray of wrong length") {
        RawFan raw = p2_raw();
        raw.rays[2] = {-1, -1, 0};
        CHECK(validation_error(raw) == ErrorKind::DimensionMismatch);
    }
    SUBCASE("cone of wrong size") {
        RawFan raw = p2_raw();
        raw.max_cones[0] = {0};
        CHECK(validation_error(raw) == ErrorKind::DimensionMismatch);
    }
    SUBCASE("cone index out of range") {
        RawFan raw = p2_raw();
        raw.max_cones[0] = {0, 7};
        CHECK(validation_error(raw) == ErrorKind::BadConeIndex);
    }
    SUBCASE("unused ray") {
        RawFan raw = p2_raw();
        raw.rays.push_back({1, 1});
        CHECK(validation_error(raw) == ErrorKind::UnusedRay);
    }
    SUBCASE("folded cones share a side of their wall") {
        RawFan raw;
        raw.dim = 2;
        raw.rays = {{1, 0}, {0, 1}, {1, 1}};
        raw.max_cones = {{0, 1}, {1, 2}, {2, 0}};
        CHECK(validation_error(raw) == ErrorKind::CoverageFailure);
    }
    SUBCASE("double cover of the plane passes the wall checks but not the probe") {
        RawFan raw;
        raw.dim = 2;
        raw.rays = {{1, 0},  {-3, 1}, {-1, 0}, {-3, -1}, {-2, -1}, {-3, -2},
                    {-1, -1}, {-2, -3}, {1, 1},  {0, 1},   {-1, -3}, {0, -1}};
        for (long long k = 0; k < 12; ++k) raw.max_cones.push_back({k, (k + 1) % 12});
        CHECK(validation_error(raw) == ErrorKind::CoverageFailure);
    }
}

TEST_CASE("faces") {
    const Fan p2 = projective_space(2);
    CHECK(faces(p2, 1).size() == 3);
    CHECK(faces(hirzebruch(2), 1).size() == 4);
    CHECK(faces(p2, 0) == std::vector<Cone>{Cone{}});
    CHECK(faces(p2, 2) == p2.max_cones());
    CHECK_THROWS_AS(faces(p2, 3), ToricError);

    // P3 has four rays, so six 2-cones; P4 has the ten 2-subsets of its five rays.
    const Fan p3 = projective_space(3);
    CHECK(faces(p3, 2).size() == count_faces_brute(p3, 2));
    CHECK(faces(p3, 2).size() == 6);
    const Fan p4 = projective_space(4);
    CHECK(faces(p4, 2).size() == count_faces_brute(p4, 2));
    CHECK(faces(p4, 2).size() == 10);

    for (const auto& [name, fan] : testing::full_corpus()) {
        CAPTURE(name);
        for (std::size_t l = 0; l <= fan.dim(); ++l) CHECK(faces(fan, l).size() == count_faces_brute(fan, l));
    }
}

TEST_CASE("walls") {
    CHECK(walls(projective_space(2)).size() == 3);
    CHECK(walls(hirzebruch(3)).size() == 4);
    CHECK(walls(product(projective_space(1), projective_space(1))).size() == 4);

    for (const auto& [name, fan] : testing::full_corpus()) {
        CAPTURE(name);
        const auto ws = walls(fan);
        CHECK(ws.size() == faces(fan, fan.dim() - 1).size());
        for (const auto& w : ws) {
            CHECK(w.max_cones[0] < w.max_cones[1]);
            CHECK(fan.max_cones()[w.max_cones[0]] == w.cone.with(w.opposite[0]));
            CHECK(fan.max_cones()[w.max_cones[1]] == w.cone.with(w.opposite[1]));
        }
    }
}

TEST_CASE("star fans") {
    SUBCASE("codimension-two cones of P^d have P2 stars") {
        for (std::size_t d = 2; d <= 5; ++d) {
            const Fan pd = projective_space(d);
            for (const auto& tau : faces(pd, d - 2)) {
                const StarFan star = star_fan(pd, tau);
                CHECK(star.image_rays.size() == 3);
                CHECK(star.quotient_max_cones.size() == 3);
                const Fan q = star.to_fan();
                CHECK(q.dim() == 2);
                LatticeVector total(2);
                for (const auto& [_, v] : star.image_rays) {
                    total[0] += v[0];
                    total[1] += v[1];
                }
                CHECK(is_zero(total));
            }
        }
    }
    SUBCASE("the zero cone of F2 gives F2 itself") {
        const Fan f2 = hirzebruch(2);
        const StarFan star = star_fan(f2, Cone{});
        CHECK(star.quotient_dim == 2);
        CHECK(star.to_fan() == f2);
    }
    SUBCASE("a ray of P3") {
        // Z^3 / Z e1: the other three rays map to (1,0), (0,1), (-1,-1)
        const StarFan star = star_fan(projective_space(3), Cone{0});
        CHECK(star.image_rays.size() == 3);
        CHECK(star.image_rays.at(1) == LatticeVector{1, 0});
        CHECK(star.image_rays.at(2) == LatticeVector{0, 1});
        CHECK(star.image_rays.at(3) == LatticeVector{-1, -1});
        CHECK(star.to_fan() == projective_space(2));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(star_fan(projective_space(2), Cone{0, 1, 2}), ToricError);
        try {
            star_fan(hirzebruch(1), Cone{0, 2});
            FAIL("expected ConeNotInFan");
        } catch (const ToricError& e) {
            CHECK(e.kind() == ErrorKind::ConeNotInFan);
        }
    }
    SUBCASE("star fans of the corpus are smooth complete fans") {
        for (const auto& [name, fan] : testing::full_corpus()) {
            CAPTURE(name);
            for (std::size_t l = 0; l < fan.dim(); ++l) {
                for (const auto& tau : faces(fan, l)) CHECK(star_fan(fan, tau).to_fan().dim() == fan.dim() - l);
            }
        }
    }
}

TEST_CASE("star subdivision") {
    const Fan p2 = projective_space(2);
    const Fan bl = star_subdivision(p2, Cone{0, 1});
    CHECK(bl.ray_count() == 4);
    CHECK(bl.max_cones().size() == 4);
    CHECK(bl.ray(3) == LatticeVector{1, 1});

    Fan hex = bl;
    hex = star_subdivision(hex, Cone{1, 2});
    hex = star_subdivision(hex, Cone{0, 2});
    CHECK(hex.ray_count() == 6);
    CHECK(hex.max_cones().size() == 6);

    // blow up a line in P3 and then a point
    const Fan p3 = projective_space(3);
    const Fan line = star_subdivision(p3, Cone{0, 1});
    CHECK(line.max_cones().size() == 6);
    const Fan both = star_subdivision(line, Cone{0, 2, 3});
    CHECK(both.max_cones().size() == 8);

    try {
        star_subdivision(p2, Cone{1});
        FAIL("expected DimensionTooSmall");
    } catch (const ToricError& e) {
        CHECK(e.kind() == ErrorKind::DimensionTooSmall);
    }
    try {
        star_subdivision(bl, Cone{0, 1});
        FAIL("expected ConeNotInFan");
    } catch (const ToricError& e) {
        CHECK(e.kind() == ErrorKind::ConeNotInFan);
    }
}

TEST_CASE("canonical form") {
    const Fan f = hirzebruch(2);
    const Fan c = f.canonical();
    CHECK(c.canonical() == c);
    CHECK(std::is_sorted(c.rays().begin(), c.rays().end()));
    CHECK(c.ray_count() == f.ray_count());

    RawFan shuffled = f.raw();
    std::swap(shuffled.rays[0], shuffled.rays[3]);
    for (auto& cone : shuffled.max_cones) {
        for (auto& id : cone) id = id == 0 ? 3 : id == 3 ? 0 : id;
    }
    const Fan g = Fan::validate(shuffled);
    CHECK_FALSE(g == f);
    CHECK(g.canonical() == c);
}
