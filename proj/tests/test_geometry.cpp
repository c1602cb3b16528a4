#include "salemlab/geometry.hpp"

#include "salemlab/errors.hpp"
#include "salemlab/rng.hpp"

#include <doctest.h>

#include <set>

using namespace salemlab;

namespace {

Vector vec(const FieldPtr& f, std::initializer_list<std::int64_t> entries) {
    Vector v{f, {}};
    for (auto e : entries) v.entries.push_back(f->from_integer(e));
    return v;
}

}  // namespace

TEST_CASE("quadratic norm and dot product") {
    auto f5 = Field::make(5, 1);
    CHECK(quadratic_norm(vec(f5, {1, 2})).v == 0);  // 2 is sqrt(-1) in F_5
    CHECK(quadratic_norm(vec(f5, {0, 0})).v == 0);
    auto f7 = Field::make(7, 1);
    CHECK(quadratic_norm(vec(f7, {1, 1, 1})).v == 3);

    auto f3 = Field::make(3, 1);
    CHECK(dot(vec(f3, {1, 0, 1, 1}), vec(f3, {0, 1, 1, 2})).v == 0);
    CHECK(dot(vec(f5, {1, 2}), vec(f5, {0, 0})).v == 0);
    CHECK(dot(vec(f5, {1, 2}), vec(f5, {1, 2})) == quadratic_norm(vec(f5, {1, 2})));
    CHECK_THROWS_AS(dot(vec(f5, {1, 2}), vec(f5, {1, 2, 3})), Error);
}

TEST_CASE("incidence") {
    auto f3 = Field::make(3, 1);
    Sphere unit{vec(f3, {0, 0}), f3->one()};
    CHECK(incident(unit, vec(f3, {1, 0})));
    CHECK(!incident(unit, vec(f3, {1, 1})));
    Hyperplane h = make_hyperplane(vec(f3, {1, 0}), f3->zero());
    CHECK(incident(h, vec(f3, {0, 2})));
    CHECK_THROWS_AS(incident(unit, vec(f3, {1, 1, 1})), Error);
}

TEST_CASE("lift_set") {
    auto f5 = Field::make(5, 1);
    auto p = PointSet::from_vectors(f5, 2, {vec(f5, {1, 2})});
    auto lifted = lift_set(p);
    CHECK(lifted.dim() == 3);
    CHECK(lifted.size() == 1);
    CHECK(lifted.vector_at(0) == vec(f5, {1, 2, 0}));

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint64_t> enc;
        for (int i = 0; i < 12; ++i) enc.push_back(rng.below(25));
        auto set = PointSet::from_encodings(f5, 2, enc);
        CHECK(lift_set(set).size() == set.size());
    }
}

TEST_CASE("sphere_to_hyperplane") {
    auto f5 = Field::make(5, 1);
    auto h = sphere_to_hyperplane(Sphere{vec(f5, {1, 1}), f5->from_integer(2)});
    CHECK(h.normal == vec(f5, {3, 3, 1}));
    CHECK(h.offset.v == 0);
    CHECK(h.offset_class == OffsetClass::ZeroOffset);

    auto h2 = sphere_to_hyperplane(Sphere{vec(f5, {0, 0}), f5->one()});
    CHECK(h2.normal == vec(f5, {0, 0, 1}));
    CHECK(h2.offset.v == 1);
    CHECK(h2.offset_class == OffsetClass::NonzeroOffset);

    auto f3 = Field::make(3, 1);
    auto h3 = sphere_to_hyperplane(Sphere{vec(f3, {1, 0}), f3->zero()});
    CHECK(h3.normal == vec(f3, {1, 0, 1}));
    CHECK(h3.offset.v == 2);
    CHECK(h3.offset_class == OffsetClass::NonzeroOffset);
}

TEST_CASE("lifting identity: x on sphere iff lift on hyperplane") {
    for (auto spec : {"3", "5", "3^2"}) {
        auto f = Field::from_spec(spec);
        for (unsigned d : {1u, 2u}) {
            std::uint64_t grid = 1;
            for (unsigned j = 0; j < d; ++j) grid *= f->q();
            for (std::uint64_t c = 0; c < grid; ++c) {
                for (std::uint64_t r = 0; r < f->q(); ++r) {
                    Sphere sphere{Vector{f, decode_point(*f, d, c)}, Scalar{r}};
                    auto plane = sphere_to_hyperplane(sphere);
                    for (std::uint64_t x = 0; x < grid; ++x) {
                        Vector v{f, decode_point(*f, d, x)};
                        CHECK(incident(sphere, v) == incident(plane, lift_point(v)));
                    }
                }
            }
        }
    }
}

TEST_CASE("split_spheres") {
    auto f5 = Field::make(5, 1);
    std::vector<Sphere> spheres{
        Sphere{vec(f5, {1, 1}), f5->from_integer(2)},  // |a| = r = 2
        Sphere{vec(f5, {0, 0}), f5->one()},
    };
    auto [s1, s2] = split_spheres(spheres);
    CHECK(s1.size() == 1);
    CHECK(s2.size() == 1);
    CHECK(s2[0].center == vec(f5, {1, 1}));

    auto [e1, e2] = split_spheres({});
    CHECK(e1.empty());
    CHECK(e2.empty());
}

TEST_CASE("enumerate_object") {
    auto f5 = Field::make(5, 1);
    auto plane = make_hyperplane(vec(f5, {1, 2, 3}), f5->one());
    CHECK(enumerate_object(plane).size() == 25);  // q^(d-1)

    auto f3 = Field::make(3, 1);
    auto unit = enumerate_object(Sphere{vec(f3, {0, 0}), f3->one()});
    CHECK(unit.size() == 4);
    CHECK(unit.contains(encode_point(*f3, vec(f3, {1, 0}).entries)));
    CHECK(unit.contains(encode_point(*f3, vec(f3, {0, 2}).entries)));

    auto cone = enumerate_object(Sphere{vec(f5, {0, 0}), f5->zero()});
    CHECK(cone.size() == 9);  // the lines y = 2x and y = 3x
}

TEST_CASE("enumeration agrees with brute-force membership") {
    Rng rng(3);
    for (auto spec : {"3", "5", "7", "3^2"}) {
        auto f = Field::from_spec(spec);
        unsigned d = 2;
        std::uint64_t grid = f->q() * f->q();
        for (int trial = 0; trial < 10; ++trial) {
            GeomObject obj;
            if (trial % 2 == 0) {
                obj = Sphere{Vector{f, decode_point(*f, d, rng.below(grid))}, Scalar{rng.below(f->q())}};
            } else {
                Vector normal{f, decode_point(*f, d, 1 + rng.below(grid - 1))};
                obj = make_hyperplane(normal, Scalar{rng.below(f->q())});
            }
            auto enumerated = enumerate_object(obj);
            std::uint64_t direct = 0;
            for (std::uint64_t x = 0; x < grid; ++x) {
                Vector v{f, decode_point(*f, d, x)};
                if (incident(obj, v)) {
                    ++direct;
                    CHECK(enumerated.contains(x));
                }
            }
            CHECK(direct == enumerated.size());
        }
    }
}

TEST_CASE("hyperplane cardinality is q^(d-1)") {
    Rng rng(17);
    for (auto spec : {"3", "5", "7", "3^2"}) {
        auto f = Field::from_spec(spec);
        for (unsigned d : {2u, 3u}) {
            std::uint64_t grid = 1;
            for (unsigned j = 0; j < d; ++j) grid *= f->q();
            if (grid > 100000) continue;
            for (int i = 0; i < 25; ++i) {
                Vector normal{f, decode_point(*f, d, 1 + rng.below(grid - 1))};
                auto plane = make_hyperplane(normal, Scalar{rng.below(f->q())});
                CHECK(enumerate_object(GeomObject{plane}).size() == grid / f->q());
            }
        }
    }
}

TEST_CASE("sphere point counts are translation invariant") {
    Rng rng(23);
    for (auto spec : {"3", "5", "7"}) {
        auto f = Field::from_spec(spec);
        unsigned d = 2;
        std::uint64_t grid = f->q() * f->q();
        for (std::uint64_t r = 0; r < f->q(); ++r) {
            auto base = enumerate_object(Sphere{Vector{f, decode_point(*f, d, 0)}, Scalar{r}});
            for (int i = 0; i < 10; ++i) {
                Vector center{f, decode_point(*f, d, rng.below(grid))};
                CHECK(enumerate_object(Sphere{center, Scalar{r}}).size() == base.size());
            }
        }
    }
}

TEST_CASE("point sets deduplicate and sort") {
    auto f5 = Field::make(5, 1);
    auto set = PointSet::from_vectors(f5, 2, {vec(f5, {1, 2}), vec(f5, {0, 0}), vec(f5, {1, 2})});
    CHECK(set.size() == 2);
    CHECK(set.encodings().front() == 0);
    CHECK(set.encodings().back() == encode_point(*f5, vec(f5, {1, 2}).entries));
    CHECK_THROWS_AS(PointSet::from_vectors(f5, 2, {vec(f5, {1, 2, 3})}), Error);
}

TEST_CASE("vector literals") {
    auto f5 = Field::make(5, 1);
    auto v = parse_vector_literal(f5, "(1,-2)");
    CHECK(v == vec(f5, {1, 3}));
    CHECK(format_vector(v) == "(1,3)");
    auto list = parse_vector_list(f5, "(0,1),(2,3)");
    CHECK(list.size() == 2);
    auto sphere = parse_sphere_literal(f5, "(1,1);2");
    CHECK(sphere.radius.v == 2);
    CHECK(format_sphere(sphere) == "(1,1);2");
    CHECK_THROWS_AS(parse_vector_literal(f5, "1,2"), Error);
}

TEST_CASE("grid limit enforcement") {
    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(PointSet::full_grid(f5, 3, 100), Error);
    CHECK(PointSet::full_grid(f5, 2).size() == 25);
    Sphere s{vec(f5, {0, 0, 0}), f5->one()};
    CHECK_THROWS_AS(enumerate_object(GeomObject{s}, 100), Error);
}

TEST_CASE("encoded point add/sub match vector arithmetic") {
    for (auto spec : {"5", "3^2"}) {
        auto f = Field::from_spec(spec);
        unsigned d = 2;
        std::uint64_t grid = f->q() * f->q();
        Rng rng(5);
        for (int i = 0; i < 200; ++i) {
            std::uint64_t a = rng.below(grid), b = rng.below(grid);
            auto va = decode_point(*f, d, a);
            auto vb = decode_point(*f, d, b);
            std::vector<Scalar> sum(d), diff(d);
            for (unsigned j = 0; j < d; ++j) {
                sum[j] = f->add(va[j], vb[j]);
                diff[j] = f->sub(va[j], vb[j]);
            }
            CHECK(point_add(*f, d, a, b) == encode_point(*f, sum));
            CHECK(point_sub(*f, d, a, b) == encode_point(*f, diff));
        }
    }
}
