#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace uhg {

enum class errc {
  characteristic_two,
  not_prime,
  modulus_too_large,
  redundant_extension,
  tower_too_deep,
  division_by_zero,
  mixed_fields,
  zero_triple,
  identical_points,
  identical_lines,
  dependent_vectors,
  not_on_join,
  not_null,
  equal_params,
  coincident_lines,
  null_side,
  null_vertex,
  null_argument,
  dual_couple,
  collinear_points,
  concurrent_lines,
  incident_pair,
  degenerate_configuration,
  degenerate_denominator,
  zero_spread,
  under_determined,
  over_determined,
  undefined_metric,
  unknown_theorem,
  incompatible_strategy,
  parse_error,
};

/// Exception carrying a stable error code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class Field;
class Scalar;
using FieldHandle = std::shared_ptr<const Field>;

/// Parsed description of a field. Grammar:
///   Q | Fp=<prime> | Q[sqrt=<int>{,<int>}] | Fp=<prime>[sqrt=<int>{,<int>}]
/// Square roots are adjoined left to right.
struct FieldSpec {
  enum class Kind { rationals, prime, extension };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;                    // prime modulus
  std::shared_ptr<FieldSpec> base;        // extension base
  long long d = 0;                        // extension radicand (integer literal)

  static FieldSpec rationals();
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec extension(FieldSpec base, long long d);
  static FieldSpec parse(std::string_view text);
  std::string str() const;
};

/// An element of a realized field. Values are immutable; arithmetic returns
/// fresh values. A Scalar references the Field it belongs to, which must
/// outlive it (Fields are shared singletons or caller-held handles).
class Scalar {
 public:
  Scalar() = delete;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // error: division_by_zero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;  // error: division_by_zero
  Scalar square() const { return *this * *this; }

  const Field& field() const { return *f_; }
  Scalar zero() const;  // additive identity of the same field
  Scalar one() const;   // multiplicative identity of the same field

  /// Deterministic total order (canonical representations); used for
  /// tie-breaking and stable output, not for any metric meaning.
  static int cmp(const Scalar& a, const Scalar& b);

  /// Sign of the leading base component; +1/0/-1. Over Fp, residues in
  /// [1,(p-1)/2] count as positive. Drives the canonical square-root choice.
  int lead_sign() const;

 private:
  friend class Field;
  friend struct ScalarOps;

  struct Ext {
    Scalar a, b;  // a + b*sqrt(d)
  };
  using Payload = std::variant<mpq_class, std::uint64_t, std::shared_ptr<const Ext>>;

  Scalar(const Field* f, Payload v) : f_(f), v_(std::move(v)) {}

  const Field* f_;
  Payload v_;
};

/// A realized field: exact rationals, an odd prime field, or a quadratic
/// extension tower. Immutable and thread-safe; all operations are pure.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { rationals, prime, extension };

  static FieldHandle rationals();
  static FieldHandle prime(std::uint64_t p);  // errors: characteristic_two, not_prime, modulus_too_large
  static FieldHandle extension(const FieldHandle& base, const Scalar& d,
                               int max_depth = 3);  // errors: redundant_extension, tower_too_deep
  static FieldHandle make(const FieldSpec& spec, int max_depth = 3);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return char_; }
  int depth() const { return depth_; }  // number of adjoined square roots
  const FieldHandle& base() const;      // extension only
  const Scalar& radicand() const;       // extension only

  /// Prime fields are the only exhaustively enumerable realization here.
  bool enumerable() const { return kind_ == Kind::prime; }
  std::uint64_t order() const;               // prime only
  Scalar element(std::uint64_t index) const;  // prime only: the residue `index`

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_mpz(const mpz_class& n) const;
  Scalar from_mpq(const mpq_class& q) const;
  Scalar make_ext(const Scalar& a, const Scalar& b) const;  // extension only; components in base

  bool is_square(const Scalar& x) const;
  /// Canonical square root (lead_sign >= 0); nullopt when no root exists in
  /// this field. Extension roots are found only within the same tower.
  std::optional<Scalar> sqrt(const Scalar& x) const;

  /// Draw one element. Rationals: reduced fraction with |num|, den <= bound.
  /// Prime field: uniform residue. Extension: componentwise.
  Scalar sample(unsigned bound, std::mt19937_64& rng) const;

  std::string str() const;  // spec string, e.g. "Q[sqrt=2,3]"

  bool same(const Field& o) const { return this == &o; }

 private:
  friend class Scalar;
  friend struct ScalarOps;
  struct Private {};

 public:
  explicit Field(Private) {}

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
  std::uint64_t char_ = 0;
  int depth_ = 0;
  FieldHandle base_;
  std::optional<Scalar> d_;
};

/// Uniform integer in [0, n) from a seeded generator; fixed algorithm so that
/// seeded runs are reproducible independent of the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace uhg
