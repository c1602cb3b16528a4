#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemlab {

// Element of F_{p^n}, held as the integer encoding sum(c_i * p^i) of its
// coefficient vector (constant term first). Equality is coefficient-wise;
// there is no hidden normalization state.
struct Scalar {
    std::uint64_t v = 0;
    friend bool operator==(Scalar a, Scalar b) = default;
    friend auto operator<=>(Scalar a, Scalar b) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Description of F_{p^n} with p an odd prime. Immutable after construction;
// all operations are pure, so concurrent reads are safe.
class Field {
  public:
    // modulus: n+1 residues mod p, constant term first, monic, irreducible.
    // When absent and n > 1, the lexicographically smallest (constant-first)
    // monic irreducible of degree n is selected, so serialized experiments
    // reproduce across runs and machines.
    static FieldPtr make(std::uint64_t p, unsigned n,
                         const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

    // "p" | "p^n" | "p^n/c0,c1,...,cn" (explicit modulus, constant first).
    static FieldPtr from_spec(const std::string& spec);

    // q must be an odd prime power.
    static FieldPtr from_order(std::uint64_t q);

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string spec() const;

    Scalar zero() const { return {0}; }
    Scalar one() const { return {1}; }
    bool is_zero(Scalar a) const { return a.v == 0; }

    // Integer encoding round trip. from_integer reduces residues mod p on
    // prime fields; encodings must already be < q on extensions.
    Scalar from_integer(std::int64_t value) const;
    Scalar from_encoding(std::uint64_t encoding) const;
    std::vector<std::uint32_t> coeffs(Scalar a) const;
    Scalar from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const;
    Scalar pow(Scalar a, std::uint64_t e) const;

    // Absolute trace Tr(x) = x + x^p + ... + x^{p^(n-1)}, a residue mod p.
    std::uint32_t trace(Scalar a) const;

    // Canonical additive character chi(x) = exp(2*pi*i*Tr(x)/p).
    std::complex<double> character(Scalar a) const;

    // Square roots of a in this field (0, 1 or 2 values, ascending encoding).
    std::vector<Scalar> square_roots(Scalar a) const;

    // Element i of smallest encoding with i^2 = -1, when q = 1 (mod 4).
    std::optional<Scalar> sqrt_of_minus_one() const;

    // Lexicographically smallest (a, b) with a^2 + b^2 = -1.
    std::pair<Scalar, Scalar> two_squares_minus_one() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

  private:
    Field() = default;
    void build_tables();
    Scalar mul_slow(Scalar a, Scalar b) const;

    std::uint64_t p_ = 0;
    unsigned n_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // empty for prime fields

    // Precomputed when q is small enough; operations fall back to direct
    // polynomial arithmetic otherwise.
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> inv_table_;
    std::vector<std::uint32_t> trace_table_;
    std::vector<std::uint32_t> sqrt_data_;    // flattened roots
    std::vector<std::uint32_t> sqrt_index_;   // offsets into sqrt_data_, size q+1
    std::vector<std::complex<double>> unit_roots_;  // exp(2*pi*i*j/p)
};

// Trial-division-free primality for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace salemlab
