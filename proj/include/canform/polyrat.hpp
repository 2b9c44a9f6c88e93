#ifndef CANFORM_POLYRAT_HPP
#define CANFORM_POLYRAT_HPP

// Exact rational functions whose denominators are products of the linear forms
// t_a, t_a - t_b and t_a - z_m.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace canform {

using Rational = mpq_class;

std::string to_string(const Rational &q);
Rational parse_rational(std::string_view text);

// A coordinate t^(i)_j, an anchor z_m, or the origin (the constant 0, used as
// the "other end" of t_a = 0 and as a substitution target). The key encodes the
// global order: origin < all z (by m) < all t (by (i, j)).
class Var {
public:
    constexpr Var() = default;

    static constexpr Var origin() { return Var(); }
    static Var t(int color, int index);
    static Var z(int anchor);

    bool is_origin() const { return key_ == 0; }
    bool is_z() const { return key_ != 0 && key_ < kTBase; }
    bool is_t() const { return key_ >= kTBase; }

    int color() const { return static_cast<int>((key_ - kTBase) >> 12); }
    int index() const { return static_cast<int>((key_ - kTBase) & 0xfffu); }
    int anchor() const { return static_cast<int>(key_); }
    std::uint32_t key() const { return key_; }

    friend constexpr auto operator<=>(Var, Var) = default;

    // "t:i:j", "z:m" or "0".
    std::string str() const;
    std::string latex() const;
    static Var parse(std::string_view text);

private:
    static constexpr std::uint32_t kTBase = 1u << 24;
    explicit constexpr Var(std::uint32_t key) : key_(key) {}
    std::uint32_t key_ = 0;
};

// k = (k_1, ..., k_r); colors are 1-based.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts);
    Weight(std::initializer_list<int> parts) : Weight(std::vector<int>(parts)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
    static Weight unit(int rank, int color);

    int rank() const { return static_cast<int>(parts_.size()); }
    int operator[](int color) const { return parts_.at(static_cast<std::size_t>(color - 1)); }
    int total() const;
    bool is_zero() const { return total() == 0; }
    const std::vector<int> &parts() const { return parts_; }

    // k - 1_i; throws DomainError when k_i = 0.
    Weight minus_unit(int color) const;
    Weight operator+(const Weight &other) const;
    Weight operator-(const Weight &other) const;
    bool fits_in(const Weight &other) const;

    friend auto operator<=>(const Weight &, const Weight &) = default;

    std::string str() const;
    static Weight parse(std::string_view text);

private:
    std::vector<int> parts_;
};

// hi - lo with hi > lo in the global order; lo may be the origin.
struct LinearForm {
    Var hi;
    Var lo;

    friend auto operator<=>(const LinearForm &, const LinearForm &) = default;

    // a - b = sign * form. Returns nullopt when a == b (identically zero).
    static std::optional<std::pair<LinearForm, int>> of_difference(Var a, Var b);

    bool involves(Var v) const { return hi == v || lo == v; }
    std::string str() const;
    std::string latex() const;
    static LinearForm parse(std::string_view text);
};

using Point = std::map<Var, Rational>;

// Sorted (Var, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<Var, int>>;

// Lexicographic order in the global variable order, leading (largest) monomial first.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational &c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(Var v);
    static Polynomial of(const LinearForm &form);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial &m, const Rational &c);
    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &mul_linear(const LinearForm &form);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    Polynomial substitute(Var v, Var target) const;
    Polynomial relabel(const std::function<Var(Var)> &map) const;
    Rational eval(const Point &point) const;
    // Exact quotient by the linear form, or nullopt when it does not divide.
    std::optional<Polynomial> divide_exact(const LinearForm &form) const;
    std::set<Var> variables() const;
    bool involves(Var v) const;

    std::string str() const;
    std::string latex() const;

private:
    Terms terms_;
};

// Normalized exact rational function num / prod(form^mult).
//
// Invariants: no denominator form divides the numerator; zero has an empty
// denominator. Normal forms are unique, so structural equality is equality.
class RatFun {
public:
    using Denominator = std::map<LinearForm, int>;

    RatFun() = default;
    RatFun(const Rational &c) : num_(c) {}
    RatFun(long c) : num_(c) {}
    explicit RatFun(Polynomial num) : num_(std::move(num)) {}
    RatFun(Polynomial num, Denominator den);

    // 1/(a - b)^power, and the polynomial a - b.
    static RatFun inverse_difference(Var a, Var b, int power = 1);
    static RatFun difference(Var a, Var b);

    const Polynomial &numerator() const { return num_; }
    const Denominator &denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    int multiplicity(const LinearForm &form) const;

    RatFun &operator+=(const RatFun &other);
    RatFun &operator-=(const RatFun &other);
    RatFun &operator*=(const RatFun &other);
    RatFun &operator*=(const Rational &c);
    friend RatFun operator+(RatFun a, const RatFun &b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun &b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun &b) { return a *= b; }
    friend RatFun operator*(RatFun a, const Rational &c) { return a *= c; }
    friend RatFun operator*(const Rational &c, RatFun a) { return a *= c; }
    // Division requires the divisor's numerator to split into arrangement forms.
    friend RatFun operator/(const RatFun &a, const RatFun &b);
    RatFun operator-() const;

    // Structural comparison of normal forms; see equals() for the checked version.
    friend bool operator==(const RatFun &, const RatFun &) = default;

    // Replace v by target (another Var, an anchor, or the origin). Throws PoleError
    // when a surviving denominator factor vanishes identically.
    RatFun substitute(Var v, Var target) const;
    // Rename variables. When `bijective` is set the caller guarantees an injective
    // map and cancellation is skipped.
    RatFun relabel(const std::function<Var(Var)> &map, bool bijective) const;
    // Multiply by form^power (power may be negative).
    RatFun times_form(const LinearForm &form, int power) const;
    Rational eval(const Point &point) const;
    std::set<Var> variables() const;

    // num/den with forms as "t:i:j-t:a:b"; human-readable, not a parse format.
    std::string str() const;

private:
    void normalize();
    void normalize_only(const std::vector<LinearForm> &candidates);

    Polynomial num_;
    Denominator den_;
};

// Sum of many terms: terms are grouped by denominator and combined over one
// common denominator before a single cancellation pass.
RatFun sum(std::span<const RatFun> terms);

// Seed for the randomized evaluation cross-check (default 1729).
void set_check_seed(std::uint64_t seed);
std::uint64_t check_seed();

// Deterministic evaluation point: every variable gets an integer in [10^3, 10^6]
// derived from (seed, variable, attempt).
Point random_point(const std::set<Var> &vars, std::uint64_t attempt);

// Canonical equality, cross-checked by evaluation at `points` deterministic random
// points. Throws NormalizationError if the two disagree.
bool equals(const RatFun &a, const RatFun &b, int points = 5);

} // namespace canform

#endif
