#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gss {

// Field element in integer encoding.  An element of GF(q^m) is the integer
// whose base-q digits are its power-basis coordinates over GF(q),
// little-endian (constant term first).  An element of GF(q = p^e) is likewise
// the integer whose base-p digits are its coordinates over GF(p).
using fe = std::uint32_t;

enum class Level : std::uint8_t { Mid, Top };

class Tower;

// A handle to one level of a tower: GF(q) (Mid) or GF(q^m) (Top).
struct Field {
    const Tower* tw = nullptr;
    Level lv = Level::Mid;

    std::uint32_t size() const;
    std::uint32_t characteristic() const;
    fe add(fe a, fe b) const;
    fe sub(fe a, fe b) const;
    fe neg(fe a) const;
    fe mul(fe a, fe b) const;
    fe inv(fe a) const;
    fe div(fe a, fe b) const;
    fe pow(fe a, long long n) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }
};

// GF(p) <= GF(q = p^e) <= GF(q^m), with a fixed coordinate basis for the top
// level over the middle one.  Immutable after construction.
class Tower {
public:
    // Empty modulus vectors select deterministic defaults: a fixed table for
    // GF(2^n) with n <= 12, otherwise the lexicographically smallest monic
    // irreducible (by integer value of the coefficient vector).  An empty
    // basis selects the power basis (1, alpha, ..., alpha^(m-1)).
    Tower(std::uint32_t p, std::uint32_t e, std::uint32_t m,
          std::vector<fe> mid_modulus = {},
          std::vector<fe> top_modulus = {},
          std::vector<fe> basis = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t top_size() const { return Q_; }

    Field mid() const { return {this, Level::Mid}; }
    Field top() const { return {this, Level::Top}; }

    // Class of x in the top field (the canonical generator over GF(q));
    // equals 1 in the degenerate m = 1 tower, where the modulus is x - 1.
    fe alpha() const { return m_ == 1 ? 1u : q_; }

    // Power-basis coordinates (base-q digits) and their inverse.
    std::vector<fe> digits(fe x) const;
    fe from_digits(const std::vector<fe>& d) const;

    // Coordinates in the tower's chosen basis, and their inverse.
    std::vector<fe> phi(fe x) const;
    fe phi_inv(const std::vector<fe>& coords) const;

    // GF(q) -> GF(q^m) as constant polynomials (same integer encoding).
    fe embed_mid(fe c) const;

    // T(x) = x + x^q + ... + x^(q^(m-1)), landing in GF(q).
    fe trace(fe x) const;

    const std::vector<fe>& mid_modulus() const { return mid_mod_; }
    const std::vector<fe>& top_modulus() const { return top_mod_; }
    const std::vector<fe>& basis() const { return basis_; }

    // Arithmetic backends used by Field.
    fe mid_add(fe a, fe b) const;
    fe mid_neg(fe a) const;
    fe mid_mul(fe a, fe b) const;
    fe mid_inv(fe a) const;
    fe top_add(fe a, fe b) const;
    fe top_neg(fe a) const;
    fe top_mul(fe a, fe b) const;
    fe top_inv(fe a) const;

private:
    std::uint32_t p_, e_, m_, q_, Q_;
    std::vector<fe> mid_mod_;   // degree e over GF(p), little-endian, monic
    std::vector<fe> top_mod_;   // degree m over GF(q), little-endian, monic
    std::vector<fe> basis_;     // m elements of GF(q^m)
    std::vector<fe> basis_fwd_; // row-major m x m over GF(q): row i = digits(basis[i])
    std::vector<fe> basis_inv_; // its inverse; empty when basis is the power basis
    std::vector<fe> mid_exp_, mid_log_;
    std::vector<fe> top_exp_, top_log_; // empty when top field too large to tabulate

    fe top_mul_poly(fe a, fe b) const;
    void build_mid_tables();
    void build_top_tables();
    void set_basis(std::vector<fe> basis);
};

// True when n is prime (used to validate p; n is tiny in practice).
bool is_prime(std::uint32_t n);

// Deterministic default modulus of the given degree: fixed table for GF(2^n),
// n <= 12; degree 1 is x - 1; otherwise smallest monic irreducible over GF(p).
std::vector<fe> default_prime_modulus(std::uint32_t p, std::uint32_t degree);

} // namespace gss
