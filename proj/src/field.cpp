#include "salemlab/field.hpp"

#include "salemlab/errors.hpp"
#include "salemlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace salemlab {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1ULL << 40;
constexpr std::uint64_t kMulTableLimit = 1024;          // q*q table entries
constexpr std::uint64_t kScalarTableLimit = 1ULL << 22; // prime-field lookups
constexpr std::uint64_t kExtTableLimit = 1ULL << 16;    // extension-field lookups

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Dense polynomials over F_p, constant term first, for modulus validation and
// table-free extension arithmetic. Coefficients stay < p <= 2^20 here, so
// schoolbook products fit comfortably in 64 bits.
using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c %= p;
    poly_trim(out);
    return out;
}

// Remainder modulo a monic divisor.
Poly poly_rem(Poly f, const Poly& mod, std::uint64_t p) {
    poly_trim(f);
    const std::size_t m = mod.size() - 1;  // degree of modulus
    while (f.size() > m) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - 1 - m;
        if (lead != 0) {
            for (std::size_t i = 0; i < m; ++i) {
                std::uint64_t t = (lead * mod[i]) % p;
                f[shift + i] = (f[shift + i] + p - t) % p;
            }
        }
        f.pop_back();
        poly_trim(f);
    }
    return f;
}

Poly poly_powmod(Poly base, BigInt exp, const Poly& mod, std::uint64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), mod, p);
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = poly_rem(poly_mul(result, base, p), mod, p);
        base = poly_rem(poly_mul(base, base, p), mod, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    poly_trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // Make b monic so poly_rem applies.
        std::uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
        Poly monic = b;
        for (auto& c : monic) c = (c * lead_inv) % p;
        Poly r = poly_rem(a, monic, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint64_t p, unsigned n) {
    if (n == 1) return true;
    Poly f(coeffs.begin(), coeffs.end());
    // Root scan over F_p rules out linear factors; for degree 2 and 3 that is
    // the whole story.
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return false;
    }
    if (n <= 3) return true;
    // Frobenius criterion: x^(p^n) = x mod f, and x^(p^(n/r)) - x coprime to f
    // for every prime divisor r of n.
    Poly x{0, 1};
    Poly frob_n = poly_powmod(x, bigint_pow(BigInt(p), n), f, p);
    if (poly_sub(frob_n, x, p) != Poly{}) return false;
    std::vector<unsigned> prime_divisors;
    unsigned m = n;
    for (unsigned r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            prime_divisors.push_back(r);
            while (m % r == 0) m /= r;
        }
    }
    if (m > 1) prime_divisors.push_back(m);
    for (unsigned r : prime_divisors) {
        Poly g = poly_sub(poly_powmod(x, bigint_pow(BigInt(p), n / r), f, p), x, p);
        Poly gcd = poly_gcd(f, g, p);
        if (gcd.size() > 1) return false;
    }
    return true;
}

// Constant-first lexicographic enumeration of monic degree-n polynomials.
std::vector<std::uint32_t> default_modulus(std::uint64_t p, unsigned n) {
    std::vector<std::uint32_t> coeffs(n + 1, 0);
    coeffs[n] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= p;
    for (std::uint64_t m = 0; m < total; ++m) {
        std::uint64_t rem = m;
        for (unsigned i = 0; i < n; ++i) {
            std::uint64_t place = 1;
            for (unsigned j = 0; j + i + 1 < n; ++j) place *= p;
            coeffs[i] = static_cast<std::uint32_t>((rem / place) % p);
            rem %= place;
        }
        if (poly_irreducible(coeffs, p, n)) return coeffs;
    }
    raise(ErrorCode::ReducibleModulus, "no irreducible modulus found (unreachable)");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldPtr Field::make(std::uint64_t p, unsigned n,
                     const std::optional<std::vector<std::uint32_t>>& modulus) {
    if (p == 2) raise(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime_u64(p)) raise(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) raise(ErrorCode::ParseError, "extension degree must be >= 1");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->n_ = n;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > kMaxFieldOrder / p)
            raise(ErrorCode::GridTooLarge, "field order p^n exceeds the supported range");
        q *= p;
    }
    field->q_ = q;

    if (n > 1) {
        if (modulus.has_value()) {
            const auto& m = *modulus;
            if (m.size() != n + 1 || m[n] != 1)
                raise(ErrorCode::ReducibleModulus, "modulus must be monic of degree n");
            for (auto c : m)
                if (c >= p) raise(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
            if (!poly_irreducible(m, p, n))
                raise(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
            field->modulus_ = m;
        } else {
            field->modulus_ = default_modulus(p, n);
        }
    }
    field->build_tables();
    return field;
}

FieldPtr Field::from_spec(const std::string& spec) {
    std::string head = spec;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (auto slash = spec.find('/'); slash != std::string::npos) {
        head = spec.substr(0, slash);
        std::vector<std::uint32_t> coeffs;
        std::stringstream ss(spec.substr(slash + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                raise(ErrorCode::ParseError, "bad modulus coefficient '" + item + "'");
            }
        }
        modulus = std::move(coeffs);
    }
    std::uint64_t p = 0;
    unsigned n = 1;
    try {
        if (auto caret = head.find('^'); caret != std::string::npos) {
            p = std::stoull(head.substr(0, caret));
            n = static_cast<unsigned>(std::stoul(head.substr(caret + 1)));
        } else {
            p = std::stoull(head);
        }
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "bad field spec '" + spec + "'");
    }
    return make(p, n, modulus);
}

FieldPtr Field::from_order(std::uint64_t q) {
    if (q < 3) raise(ErrorCode::NonPrime, "field order must be an odd prime power >= 3");
    if (q % 2 == 0) raise(ErrorCode::EvenCharacteristic, "field order must be odd");
    if (is_prime_u64(q)) return make(q, 1);
    std::uint64_t p = 0;
    for (std::uint64_t c = 3; c * c <= q; c += 2) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    if (p == 0) raise(ErrorCode::NonPrime, std::to_string(q) + " is not an odd prime power");
    unsigned n = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) raise(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
    return make(p, n);
}

std::string Field::spec() const {
    if (n_ == 1) return std::to_string(p_);
    std::string base = std::to_string(p_) + "^" + std::to_string(n_);
    if (modulus_ == default_modulus(p_, n_)) return base;
    base += "/";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) base += ",";
        base += std::to_string(modulus_[i]);
    }
    return base;
}

void Field::build_tables() {
    if (n_ > 1 && q_ <= kMulTableLimit) {
        mul_table_.assign(q_ * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = a; b < q_; ++b) {
                std::uint32_t prod = static_cast<std::uint32_t>(mul_slow(Scalar{a}, Scalar{b}).v);
                mul_table_[a * q_ + b] = prod;
                mul_table_[b * q_ + a] = prod;
            }
        inv_table_.assign(q_, 0);
        for (std::uint64_t a = 1; a < q_; ++a)
            inv_table_[a] = static_cast<std::uint32_t>(pow(Scalar{a}, q_ - 2).v);
    }
    const bool scalar_tables = (n_ == 1) ? (q_ <= kScalarTableLimit) : (q_ <= kExtTableLimit);
    if (scalar_tables) {
        if (n_ > 1) {
            trace_table_.resize(q_);
            for (std::uint64_t x = 0; x < q_; ++x) {
                Scalar acc{x};
                Scalar term{x};
                for (unsigned i = 1; i < n_; ++i) {
                    term = pow(term, p_);
                    acc = add(acc, term);
                }
                // The trace of any element is a constant polynomial.
                trace_table_[x] = static_cast<std::uint32_t>(acc.v % p_);
            }
        }
        // Square-root lookup: counting sort of x -> x^2.
        std::vector<std::uint32_t> counts(q_ + 1, 0);
        for (std::uint64_t x = 0; x < q_; ++x) ++counts[mul(Scalar{x}, Scalar{x}).v + 1];
        sqrt_index_.assign(q_ + 1, 0);
        for (std::uint64_t e = 0; e < q_; ++e) sqrt_index_[e + 1] = sqrt_index_[e] + counts[e + 1];
        sqrt_data_.assign(q_, 0);
        std::vector<std::uint32_t> cursor(sqrt_index_.begin(), sqrt_index_.end() - 1);
        for (std::uint64_t x = 0; x < q_; ++x) {
            std::uint64_t e = mul(Scalar{x}, Scalar{x}).v;
            sqrt_data_[cursor[e]++] = static_cast<std::uint32_t>(x);
        }
    }
    if (p_ <= kScalarTableLimit) {
        unit_roots_.resize(p_);
        for (std::uint64_t j = 0; j < p_; ++j) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
            unit_roots_[j] = {std::cos(angle), std::sin(angle)};
        }
    }
}

Scalar Field::from_integer(std::int64_t value) const {
    if (n_ == 1) {
        std::int64_t m = value % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return {static_cast<std::uint64_t>(m)};
    }
    if (value < 0 || static_cast<std::uint64_t>(value) >= q_)
        raise(ErrorCode::ParseError, "extension-field encoding out of range");
    return {static_cast<std::uint64_t>(value)};
}

Scalar Field::from_encoding(std::uint64_t encoding) const {
    if (encoding >= q_) raise(ErrorCode::ParseError, "scalar encoding out of range");
    return {encoding};
}

std::vector<std::uint32_t> Field::coeffs(Scalar a) const {
    std::vector<std::uint32_t> out(n_);
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < n_; ++i) {
        out[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return out;
}

Scalar Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != n_) raise(ErrorCode::DimensionMismatch, "coefficient vector has wrong length");
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) raise(ErrorCode::ParseError, "coefficient out of range");
        v = v * p_ + coeffs[i];
    }
    return {v};
}

Scalar Field::add(Scalar a, Scalar b) const {
    if (n_ == 1) {
        std::uint64_t s = a.v + b.v;
        if (s >= p_) s -= p_;
        return {s};
    }
    std::uint64_t out = 0, place = 1, x = a.v, y = b.v;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return {out};
}

Scalar Field::sub(Scalar a, Scalar b) const {
    if (n_ == 1) {
        std::uint64_t s = a.v + p_ - b.v;
        if (s >= p_) s -= p_;
        return {s};
    }
    std::uint64_t out = 0, place = 1, x = a.v, y = b.v;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t s = x % p_ + p_ - y % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return {out};
}

Scalar Field::neg(Scalar a) const { return sub(zero(), a); }

Scalar Field::mul_slow(Scalar a, Scalar b) const {
    Poly fa(n_, 0), fb(n_, 0);
    std::uint64_t x = a.v, y = b.v;
    for (unsigned i = 0; i < n_; ++i) {
        fa[i] = x % p_;
        fb[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    Poly mod(modulus_.begin(), modulus_.end());
    Poly prod = poly_rem(poly_mul(fa, fb, p_), mod, p_);
    std::uint64_t out = 0;
    for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
    return {out};
}

Scalar Field::mul(Scalar a, Scalar b) const {
    if (n_ == 1) return {mulmod_u64(a.v, b.v, p_)};
    if (!mul_table_.empty()) return {mul_table_[a.v * q_ + b.v]};
    return mul_slow(a, b);
}

Scalar Field::inv(Scalar a) const {
    if (a.v == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (n_ == 1) return {powmod_u64(a.v, p_ - 2, p_)};
    if (!inv_table_.empty()) return {inv_table_[a.v]};
    return pow(a, q_ - 2);
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
    Scalar result = one();
    Scalar base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::trace(Scalar a) const {
    if (n_ == 1) return static_cast<std::uint32_t>(a.v);
    if (!trace_table_.empty()) return trace_table_[a.v];
    Scalar acc = a;
    Scalar term = a;
    for (unsigned i = 1; i < n_; ++i) {
        term = pow(term, p_);
        acc = add(acc, term);
    }
    return static_cast<std::uint32_t>(acc.v % p_);
}

std::complex<double> Field::character(Scalar a) const {
    std::uint32_t t = trace(a);
    if (!unit_roots_.empty()) return unit_roots_[t];
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p_);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<Scalar> Field::square_roots(Scalar a) const {
    if (sqrt_index_.empty())
        raise(ErrorCode::GridTooLarge, "square-root lookup unavailable for this field order");
    std::vector<Scalar> out;
    for (std::uint32_t i = sqrt_index_[a.v]; i < sqrt_index_[a.v + 1]; ++i)
        out.push_back(Scalar{sqrt_data_[i]});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Scalar> Field::sqrt_of_minus_one() const {
    if (q_ % 4 != 1) return std::nullopt;
    auto roots = square_roots(neg(one()));
    return roots.front();
}

std::pair<Scalar, Scalar> Field::two_squares_minus_one() const {
    Scalar minus_one = neg(one());
    for (std::uint64_t a = 0; a < q_; ++a) {
        Scalar sa{a};
        Scalar need = sub(minus_one, mul(sa, sa));
        auto roots = square_roots(need);
        if (!roots.empty()) return {sa, roots.front()};
    }
    raise(ErrorCode::InternalCheckFailed, "a^2+b^2=-1 has a solution in every odd field");
}

}  // namespace salemlab
