#include "salemlab/geometry.hpp"

#include "salemlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace salemlab {

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
    if (!(a == b)) raise(ErrorCode::DimensionMismatch, std::string(what) + ": fields differ");
}

void require_dim(const Vector& v, unsigned dim, const char* what) {
    if (v.dim() != dim) raise(ErrorCode::DimensionMismatch, std::string(what) + ": dimension mismatch");
}

}  // namespace

bool Vector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](Scalar s) { return s.v == 0; });
}

std::uint64_t grid_size_checked(const Field& field, unsigned dim, std::uint64_t limit) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < dim; ++i) {
        if (size > limit / field.q())
            raise(ErrorCode::GridTooLarge,
                  "q^d exceeds the grid limit of " + std::to_string(limit));
        size *= field.q();
    }
    if (size > limit)
        raise(ErrorCode::GridTooLarge, "q^d exceeds the grid limit of " + std::to_string(limit));
    return size;
}

std::uint64_t encode_point(const Field& field, std::span<const Scalar> entries) {
    std::uint64_t enc = 0;
    for (std::size_t j = entries.size(); j-- > 0;) enc = enc * field.q() + entries[j].v;
    return enc;
}

std::vector<Scalar> decode_point(const Field& field, unsigned dim, std::uint64_t encoding) {
    std::vector<Scalar> out(dim);
    for (unsigned j = 0; j < dim; ++j) {
        out[j] = Scalar{encoding % field.q()};
        encoding /= field.q();
    }
    return out;
}

std::uint64_t point_add(const Field& field, unsigned dim, std::uint64_t a, std::uint64_t b) {
    // Coordinates are base-p digit blocks, so the whole point adds digitwise.
    const std::uint64_t p = field.p();
    std::uint64_t out = 0, place = 1;
    const unsigned digits = dim * field.n();
    for (unsigned i = 0; i < digits; ++i) {
        std::uint64_t s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * place;
        place *= p;
        a /= p;
        b /= p;
    }
    return out;
}

std::uint64_t point_sub(const Field& field, unsigned dim, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = field.p();
    std::uint64_t out = 0, place = 1;
    const unsigned digits = dim * field.n();
    for (unsigned i = 0; i < digits; ++i) {
        std::uint64_t s = a % p + p - b % p;
        if (s >= p) s -= p;
        out += s * place;
        place *= p;
        a /= p;
        b /= p;
    }
    return out;
}

PointSet PointSet::from_vectors(const FieldPtr& field, unsigned dim, const std::vector<Vector>& pts) {
    std::vector<std::uint64_t> encodings;
    encodings.reserve(pts.size());
    for (const auto& v : pts) {
        require_same_field(*field, *v.field, "PointSet");
        require_dim(v, dim, "PointSet");
        encodings.push_back(encode_point(*field, v.entries));
    }
    return from_encodings(field, dim, std::move(encodings));
}

PointSet PointSet::from_encodings(FieldPtr field, unsigned dim, std::vector<std::uint64_t> encodings) {
    PointSet set(std::move(field), dim);
    std::sort(encodings.begin(), encodings.end());
    encodings.erase(std::unique(encodings.begin(), encodings.end()), encodings.end());
    set.pts_ = std::move(encodings);
    return set;
}

PointSet PointSet::full_grid(const FieldPtr& field, unsigned dim, std::uint64_t grid_limit) {
    std::uint64_t size = grid_size_checked(*field, dim, grid_limit);
    std::vector<std::uint64_t> encodings(size);
    for (std::uint64_t i = 0; i < size; ++i) encodings[i] = i;
    PointSet set(field, dim);
    set.pts_ = std::move(encodings);
    return set;
}

bool PointSet::contains(std::uint64_t encoding) const {
    return std::binary_search(pts_.begin(), pts_.end(), encoding);
}

Vector PointSet::vector_at(std::size_t i) const {
    return Vector{field_, decode_point(*field_, dim_, pts_[i])};
}

Hyperplane make_hyperplane(Vector normal, Scalar offset) {
    if (normal.is_zero()) raise(ErrorCode::ZeroNormal, "hyperplane normal must be nonzero");
    OffsetClass cls = offset.v == 0 ? OffsetClass::ZeroOffset : OffsetClass::NonzeroOffset;
    return Hyperplane{std::move(normal), offset, cls};
}

Scalar quadratic_norm(const Vector& x) {
    const Field& f = *x.field;
    Scalar acc = f.zero();
    for (Scalar e : x.entries) acc = f.add(acc, f.mul(e, e));
    return acc;
}

Scalar dot(const Vector& x, const Vector& y) {
    require_same_field(*x.field, *y.field, "dot");
    if (x.dim() != y.dim()) raise(ErrorCode::DimensionMismatch, "dot: dimension mismatch");
    const Field& f = *x.field;
    Scalar acc = f.zero();
    for (unsigned j = 0; j < x.dim(); ++j) acc = f.add(acc, f.mul(x.entries[j], y.entries[j]));
    return acc;
}

bool incident(const Sphere& sphere, const Vector& x) {
    require_same_field(*sphere.center.field, *x.field, "incident");
    require_dim(x, sphere.center.dim(), "incident");
    const Field& f = *x.field;
    Scalar acc = f.zero();
    for (unsigned j = 0; j < x.dim(); ++j) {
        Scalar diff = f.sub(x.entries[j], sphere.center.entries[j]);
        acc = f.add(acc, f.mul(diff, diff));
    }
    return acc == sphere.radius;
}

bool incident(const Hyperplane& plane, const Vector& x) {
    return dot(plane.normal, x) == plane.offset;
}

bool incident(const GeomObject& obj, const Vector& x) {
    return std::visit([&](const auto& o) { return incident(o, x); }, obj);
}

Vector lift_point(const Vector& x) {
    Vector lifted = x;
    lifted.entries.push_back(quadratic_norm(x));
    return lifted;
}

PointSet lift_set(const PointSet& points) {
    const Field& f = *points.field();
    std::vector<std::uint64_t> lifted;
    lifted.reserve(points.size());
    std::uint64_t grid = 1;
    for (unsigned j = 0; j < points.dim(); ++j) grid *= f.q();
    for (std::uint64_t enc : points.encodings()) {
        Vector v{points.field(), decode_point(f, points.dim(), enc)};
        lifted.push_back(enc + quadratic_norm(v).v * grid);
    }
    return PointSet::from_encodings(points.field(), points.dim() + 1, std::move(lifted));
}

Hyperplane sphere_to_hyperplane(const Sphere& sphere) {
    const Field& f = *sphere.center.field;
    Scalar minus_two = f.neg(f.add(f.one(), f.one()));
    Vector normal{sphere.center.field, {}};
    normal.entries.reserve(sphere.center.dim() + 1);
    for (Scalar c : sphere.center.entries) normal.entries.push_back(f.mul(minus_two, c));
    normal.entries.push_back(f.one());
    Scalar offset = f.sub(sphere.radius, quadratic_norm(sphere.center));
    return make_hyperplane(std::move(normal), offset);
}

std::pair<std::vector<Sphere>, std::vector<Sphere>> split_spheres(const std::vector<Sphere>& spheres) {
    std::vector<Sphere> nonzero_offset, zero_offset;
    for (const auto& s : spheres) {
        if (quadratic_norm(s.center) == s.radius)
            zero_offset.push_back(s);
        else
            nonzero_offset.push_back(s);
    }
    return {std::move(nonzero_offset), std::move(zero_offset)};
}

namespace {

PointSet enumerate_sphere(const Sphere& sphere, std::uint64_t grid_limit) {
    const FieldPtr& field = sphere.center.field;
    const Field& f = *field;
    const unsigned d = sphere.center.dim();
    grid_size_checked(f, d, grid_limit);
    // Fix the trailing d-1 coordinates and solve the leading one by square
    // roots of r - |suffix - c_suffix|.
    std::uint64_t suffix_count = 1;
    for (unsigned j = 1; j < d; ++j) suffix_count *= f.q();
    std::vector<std::uint64_t> out;
    std::vector<Scalar> point(d);
    for (std::uint64_t suffix = 0; suffix < suffix_count; ++suffix) {
        std::uint64_t rest = suffix;
        Scalar acc = f.zero();
        for (unsigned j = 1; j < d; ++j) {
            point[j] = Scalar{rest % f.q()};
            rest /= f.q();
            Scalar diff = f.sub(point[j], sphere.center.entries[j]);
            acc = f.add(acc, f.mul(diff, diff));
        }
        Scalar want = f.sub(sphere.radius, acc);
        for (Scalar root : f.square_roots(want)) {
            point[0] = f.add(sphere.center.entries[0], root);
            out.push_back(encode_point(f, point));
            Scalar mirror = f.sub(sphere.center.entries[0], root);
            if (mirror != point[0]) {
                point[0] = mirror;
                out.push_back(encode_point(f, point));
            }
        }
    }
    return PointSet::from_encodings(field, d, std::move(out));
}

PointSet enumerate_hyperplane(const Hyperplane& plane, std::uint64_t grid_limit) {
    const FieldPtr& field = plane.normal.field;
    const Field& f = *field;
    const unsigned d = plane.normal.dim();
    grid_size_checked(f, d, grid_limit);
    unsigned pivot = 0;
    while (plane.normal.entries[pivot].v == 0) ++pivot;
    Scalar pivot_inv = f.inv(plane.normal.entries[pivot]);
    std::uint64_t rest_count = 1;
    for (unsigned j = 0; j < d; ++j)
        if (j != pivot) rest_count *= f.q();
    std::vector<std::uint64_t> out;
    out.reserve(rest_count);
    std::vector<Scalar> point(d);
    for (std::uint64_t rest = 0; rest < rest_count; ++rest) {
        std::uint64_t r = rest;
        Scalar acc = f.zero();
        for (unsigned j = 0; j < d; ++j) {
            if (j == pivot) continue;
            point[j] = Scalar{r % f.q()};
            r /= f.q();
            acc = f.add(acc, f.mul(plane.normal.entries[j], point[j]));
        }
        point[pivot] = f.mul(pivot_inv, f.sub(plane.offset, acc));
        out.push_back(encode_point(f, point));
    }
    return PointSet::from_encodings(field, d, std::move(out));
}

}  // namespace

PointSet enumerate_object(const GeomObject& obj, std::uint64_t grid_limit) {
    if (const auto* sphere = std::get_if<Sphere>(&obj)) return enumerate_sphere(*sphere, grid_limit);
    return enumerate_hyperplane(std::get<Hyperplane>(obj), grid_limit);
}

Vector parse_vector_literal(const FieldPtr& field, const std::string& text) {
    std::string body = text;
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        raise(ErrorCode::ParseError, "vector literal must look like \"(c1,...,cd)\": " + text);
    body = body.substr(1, body.size() - 2);
    Vector v{field, {}};
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.entries.push_back(field->from_integer(std::stoll(item)));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "bad vector entry '" + item + "'");
        }
    }
    if (v.entries.empty()) raise(ErrorCode::ParseError, "empty vector literal");
    return v;
}

std::string format_vector(const Vector& v) {
    std::string out = "(";
    for (unsigned j = 0; j < v.dim(); ++j) {
        if (j) out += ",";
        out += std::to_string(v.entries[j].v);
    }
    return out + ")";
}

std::vector<Vector> parse_vector_list(const FieldPtr& field, const std::string& text) {
    std::vector<Vector> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ',' || text[i] == ' ') {
            ++i;
            continue;
        }
        auto close = text.find(')', i);
        if (text[i] != '(' || close == std::string::npos)
            raise(ErrorCode::ParseError, "bad vector list near '" + text.substr(i) + "'");
        out.push_back(parse_vector_literal(field, text.substr(i, close - i + 1)));
        i = close + 1;
    }
    return out;
}

Sphere parse_sphere_literal(const FieldPtr& field, const std::string& text) {
    auto semi = text.rfind(';');
    if (semi == std::string::npos)
        raise(ErrorCode::ParseError, "sphere literal must look like \"(c1,...,cd);r\": " + text);
    Vector center = parse_vector_literal(field, text.substr(0, semi));
    Scalar radius;
    try {
        radius = field->from_integer(std::stoll(text.substr(semi + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "bad sphere radius in '" + text + "'");
    }
    return Sphere{std::move(center), radius};
}

std::string format_sphere(const Sphere& s) {
    return format_vector(s.center) + ";" + std::to_string(s.radius.v);
}

}  // namespace salemlab
