#include <doctest.h>

#include "boundnet/field/field.hpp"
#include "boundnet/montecarlo/montecarlo.hpp"

using namespace boundnet::field;
using boundnet::geometry::BoundingBox;
using boundnet::geometry::Point2;
using boundnet::geometry::SensorLayout;
using boundnet::montecarlo::random_layout;

TEST_CASE("disk sampled at its center reads the inside value") {
    SensorLayout layout({Point2(0.5, 0.5), Point2(0.1, 0.1), Point2(0.9, 0.9)},
                        BoundingBox(Point2(0, 0), Point2(1, 1)));
    PhenomenonField f(Disk{Point2(0.5, 0.5), 0.2, 0.8, 0.1});
    const Readings r = sample(f, layout);
    CHECK(r[0] == 0.8);
    CHECK(r[1] == 0.1);
    CHECK(r[2] == 0.1);
}

TEST_CASE("scaled gray with brightness zero annihilates every reading") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(40, box, 2, 0);
    auto base = std::make_shared<PhenomenonField>(
        HalfPlane{Point2(0, 1), 0.4, 0.9, 0.3});
    PhenomenonField f(ScaledGray{base, 0.0});
    for (double v : sample(f, layout)) CHECK(v == 0.0);
}

TEST_CASE("half-plane readings partition exactly as the direct check") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(100, box, 99, 1);
    const HalfPlane hp{Point2(1, 0), 0.37, 0.9, 0.2};
    PhenomenonField f(hp);
    const Readings r = sample(f, layout);
    int inside = 0, outside = 0;
    for (int i = 0; i < layout.size(); ++i) {
        const Point2& p = layout.point(i);
        const bool in = hp.normal.x * p.x + hp.normal.y * p.y >= hp.offset;
        (in ? inside : outside)++;
        CHECK(r[static_cast<size_t>(i)] == (in ? 0.9 : 0.2));
    }
    CHECK(inside + outside == 100);
    CHECK(inside > 0);
    CHECK(outside > 0);
}

TEST_CASE("points exactly on the boundary take the inside value") {
    SensorLayout layout({Point2(0.5, 0.25), Point2(0.5, 0.75), Point2(0.1, 0.5)},
                        BoundingBox(Point2(0, 0), Point2(1, 1)));
    PhenomenonField hp(HalfPlane{Point2(1, 0), 0.5, 0.8, 0.1});
    const Readings rh = sample(hp, layout);
    CHECK(rh[0] == 0.8);
    CHECK(rh[1] == 0.8);

    PhenomenonField dk(Disk{Point2(0.5, 0.5), 0.25, 0.8, 0.1});
    const Readings rd = sample(dk, layout);
    CHECK(rd[0] == 0.8); // on the circle
    CHECK(rd[1] == 0.8);
    CHECK(rd[2] == 0.1);
}

TEST_CASE("monotone scaling: readings(s) = s * readings(1) elementwise") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(64, box, 7, 0);
    auto base = std::make_shared<PhenomenonField>(
        Disk{Point2(0.4, 0.6), 0.3, 0.77, 0.13});
    const Readings full = sample(PhenomenonField(ScaledGray{base, 1.0}), layout);
    for (double s : {0.0, 0.25, 0.3, 0.9}) {
        const Readings scaled = sample(PhenomenonField(ScaledGray{base, s}), layout);
        for (size_t i = 0; i < scaled.size(); ++i) {
            CHECK(scaled[i] == s * full[i]);
        }
    }
}

TEST_CASE("binary activation reads 1 exactly on the active set") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(20, box, 3, 0);
    PhenomenonField f(BinaryActivation{{3, 7, 7, 11}});
    const Readings r = sample(f, layout);
    for (int i = 0; i < 20; ++i) {
        const bool active = i == 3 || i == 7 || i == 11;
        CHECK(r[static_cast<size_t>(i)] == (active ? 1.0 : 0.0));
    }
}

TEST_CASE("sampled readings always lie in [0,1]") {
    const BoundingBox box(Point2(-2, -1), Point2(3, 4));
    const SensorLayout layout = random_layout(50, box, 17, 0);
    auto base = std::make_shared<PhenomenonField>(
        HalfPlane{Point2(0.6, 0.8), -0.3, 1.0, 0.0});
    const std::vector<PhenomenonField> fields = {
        PhenomenonField(HalfPlane{Point2(0.6, 0.8), 1.7, 0.55, 0.45}),
        PhenomenonField(Disk{Point2(0.0, 0.0), 2.0, 1.0, 0.0}),
        PhenomenonField(ScaledGray{base, 0.5}),
        PhenomenonField(BinaryActivation{{0, 49}}),
    };
    for (const auto& f : fields) {
        for (double v : sample(f, layout)) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(PhenomenonField(HalfPlane{Point2(2, 0), 0.0, 0.5, 0.5}),
                    boundnet::InvalidArgument); // non-unit normal
    CHECK_THROWS_AS(PhenomenonField(Disk{Point2(0, 0), -1.0, 0.5, 0.5}),
                    boundnet::InvalidArgument);
    CHECK_THROWS_AS(PhenomenonField(Disk{Point2(0, 0), 1.0, 1.5, 0.5}),
                    boundnet::InvalidArgument);
    CHECK_THROWS_AS(PhenomenonField(ScaledGray{nullptr, 0.5}),
                    boundnet::InvalidArgument);
    CHECK_THROWS_AS(PhenomenonField(BinaryActivation{{-1}}),
                    boundnet::InvalidNodeId);

    SensorLayout layout({Point2(0, 0), Point2(1, 0), Point2(0, 1)},
                        BoundingBox(Point2(-1, -1), Point2(2, 2)));
    PhenomenonField f(BinaryActivation{{0, 3}});
    CHECK_THROWS_AS(sample(f, layout), boundnet::InvalidNodeId);
}
