#pragma once

#include "salemlab/field.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace salemlab {

// Default ceiling for operations that walk all of F_q^d.
constexpr std::uint64_t kDefaultGridLimit = 1ULL << 26;

struct Vector {
    FieldPtr field;
    std::vector<Scalar> entries;

    unsigned dim() const { return static_cast<unsigned>(entries.size()); }
    bool is_zero() const;
    friend bool operator==(const Vector& a, const Vector& b) {
        return *a.field == *b.field && a.entries == b.entries;
    }
};

// q^d with an overflow/limit guard.
std::uint64_t grid_size_checked(const Field& field, unsigned dim, std::uint64_t limit);

// A point of F_q^d maps to sum(enc(x_j) * q^j); this fixes sorting,
// deduplication and output ordering. Valid while q^d <= 2^40.
std::uint64_t encode_point(const Field& field, std::span<const Scalar> entries);
std::vector<Scalar> decode_point(const Field& field, unsigned dim, std::uint64_t encoding);

// Coordinatewise sum/difference computed directly on encodings (base-p digits).
std::uint64_t point_add(const Field& field, unsigned dim, std::uint64_t a, std::uint64_t b);
std::uint64_t point_sub(const Field& field, unsigned dim, std::uint64_t a, std::uint64_t b);

// Deduplicated finite subset of F_q^d, iterated in encoding order.
class PointSet {
  public:
    PointSet(FieldPtr field, unsigned dim) : field_(std::move(field)), dim_(dim) {}

    static PointSet from_vectors(const FieldPtr& field, unsigned dim, const std::vector<Vector>& pts);
    static PointSet from_encodings(FieldPtr field, unsigned dim, std::vector<std::uint64_t> encodings);
    static PointSet full_grid(const FieldPtr& field, unsigned dim,
                              std::uint64_t grid_limit = kDefaultGridLimit);

    const FieldPtr& field() const { return field_; }
    unsigned dim() const { return dim_; }
    std::uint64_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<std::uint64_t>& encodings() const { return pts_; }
    bool contains(std::uint64_t encoding) const;
    Vector vector_at(std::size_t i) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return *a.field_ == *b.field_ && a.dim_ == b.dim_ && a.pts_ == b.pts_;
    }

  private:
    FieldPtr field_;
    unsigned dim_ = 0;
    std::vector<std::uint64_t> pts_;
};

struct Sphere {
    Vector center;
    Scalar radius;  // zero allowed; zero-radius spheres are first-class objects
};

enum class OffsetClass { NonzeroOffset, ZeroOffset };

struct Hyperplane {
    Vector normal;  // nonzero
    Scalar offset;
    OffsetClass offset_class;
};

Hyperplane make_hyperplane(Vector normal, Scalar offset);

using GeomObject = std::variant<Sphere, Hyperplane>;

Scalar quadratic_norm(const Vector& x);
Scalar dot(const Vector& x, const Vector& y);

bool incident(const Sphere& sphere, const Vector& x);
bool incident(const Hyperplane& plane, const Vector& x);
bool incident(const GeomObject& obj, const Vector& x);

Vector lift_point(const Vector& x);
PointSet lift_set(const PointSet& points);

// The sphere |x-a|=r in F_q^d as the hyperplane (-2a,1).(x,t) = r - |a| in
// F_q^(d+1); x lies on the sphere iff (x,|x|) lies on the hyperplane.
Hyperplane sphere_to_hyperplane(const Sphere& sphere);

// Partition by whether r - |center| vanishes (input order preserved).
std::pair<std::vector<Sphere>, std::vector<Sphere>> split_spheres(const std::vector<Sphere>& spheres);

// All points of F_q^d incident to the object.
PointSet enumerate_object(const GeomObject& obj, std::uint64_t grid_limit = kDefaultGridLimit);

// Textual literals: "(c1,...,cd)" with integer entries (residues on prime
// fields, polynomial encodings on extensions); spheres as "(c1,...,cd);r".
Vector parse_vector_literal(const FieldPtr& field, const std::string& text);
std::string format_vector(const Vector& v);
std::vector<Vector> parse_vector_list(const FieldPtr& field, const std::string& text);
Sphere parse_sphere_literal(const FieldPtr& field, const std::string& text);
std::string format_sphere(const Sphere& s);

}  // namespace salemlab
