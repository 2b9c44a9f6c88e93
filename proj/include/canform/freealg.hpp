#ifndef CANFORM_FREEALG_HPP
#define CANFORM_FREEALG_HPP

// The free associative algebra U_r on f_1..f_r.
//
// A Word is an algebra monomial read left to right: {2, 1, 1} is f_2 f_1 f_1.
// The monomial attached to a multi-index J is f_{J(n)} ... f_{J(1)}, so
// monomial_of and multi_index_of reverse the sequence.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canform/polyrat.hpp"
#include "canform/symmetric.hpp"

namespace canform {

using Word = std::vector<int>;

Word monomial_of(const MultiIndex &J);
MultiIndex multi_index_of(const Word &w);

// All words of content k in lexicographic order.
std::vector<Word> words_of_content(const Weight &k);

class FreeElement {
public:
    using Terms = std::map<Word, Rational>;

    FreeElement() = default;
    static FreeElement word(Word w, const Rational &c = 1);
    static FreeElement generator(int i) { return word(Word{i}); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word &w) const;

    // Content of every word; throws DomainError when the element is not homogeneous.
    Weight content(int rank) const;

    void add(const Word &w, const Rational &c);
    FreeElement &operator+=(const FreeElement &other);
    FreeElement &operator-=(const FreeElement &other);
    FreeElement &operator*=(const Rational &c);
    friend FreeElement operator+(FreeElement a, const FreeElement &b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement &b) { return a -= b; }
    friend FreeElement operator*(FreeElement a, const Rational &c) { return a *= c; }
    // Concatenation product.
    friend FreeElement operator*(const FreeElement &a, const FreeElement &b);
    friend bool operator==(const FreeElement &, const FreeElement &) = default;

    // "f2 f1 - f1 f2" style text.
    std::string str() const;
    std::string latex() const;

private:
    Terms terms_;
};

FreeElement commutator(const FreeElement &a, const FreeElement &b);
FreeElement power(const FreeElement &a, int n);

// A generator or a bracket [left, right].
class BracketTree {
public:
    static BracketTree leaf(int generator);
    static BracketTree bracket(BracketTree left, BracketTree right);

    bool is_leaf() const { return generator_ != 0; }
    int generator() const { return generator_; }
    const BracketTree &left() const { return *left_; }
    const BracketTree &right() const { return *right_; }

    Weight content(int rank) const;
    // "[f2,f1]", "[[f1,f2],f2]".
    std::string str() const;

    friend bool operator==(const BracketTree &a, const BracketTree &b);

private:
    int generator_ = 0;
    std::shared_ptr<const BracketTree> left_, right_;
};

// [f_{s1}, [f_{s2}, [..., f_{sn}]]].
BracketTree nested_bracket(const std::vector<int> &seq);
FreeElement bracket_expand(const BracketTree &t);

// Delta(w) = sum over order-preserving splits of the letters into two legs.
using TensorElement = std::map<std::pair<Word, Word>, Rational>;
TensorElement coproduct(const Word &w);

// All J obtained by shuffling J1 and J2, with multiplicity
// (binomial(|J1| + |J2|, |J1|) entries).
std::vector<MultiIndex> shuffles(const MultiIndex &J1, const MultiIndex &J2);

// a_ij as a row-major matrix, indices 1-based in the API.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::vector<std::vector<int>> entries);
    int rank() const { return static_cast<int>(entries_.size()); }
    int operator()(int i, int j) const
    {
        return entries_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
    }
    const std::vector<std::vector<int>> &entries() const { return entries_; }

private:
    std::vector<std::vector<int>> entries_;
};

struct SerreRelation {
    int i;
    int j;
    FreeElement element; // ad(f_i)^{1 - a_ij}(f_j)
};

std::vector<SerreRelation> serre_relations(const CartanMatrix &cartan);

// Spanning set of the two-sided Serre ideal in degree k: every u * rel * v,
// deduplicated, in a deterministic order.
std::vector<FreeElement> serre_ideal_span(const CartanMatrix &cartan, const Weight &k);

// Exact solution of target = sum x_s spanners[s] over the word basis, free
// variables set to zero; nullopt when the target is outside the span.
std::optional<std::vector<Rational>> express_in_basis(const FreeElement &target,
                                                      const std::vector<FreeElement> &spanners);

// Coordinates with respect to a family `basis` modulo the span of `ideal`, for
// many targets at once. Gauss-Jordan over the rationals with the ideal columns
// eliminated first, so a basis column is a pivot exactly when it is independent
// of the ideal and the preceding basis elements.
class QuotientSolver {
public:
    QuotientSolver(std::vector<FreeElement> basis, std::vector<FreeElement> ideal);

    // basis + ideal span the whole degree (every word is reachable).
    bool spans() const { return spans_; }
    // The basis is independent modulo the ideal.
    bool independent() const { return independent_; }
    std::size_t ideal_rank() const { return ideal_rank_; }
    std::size_t word_count() const { return words_.size(); }

    // Basis coordinates of target modulo the ideal; nullopt when target lies
    // outside span(basis + ideal). Unique when independent().
    std::optional<std::vector<Rational>> coordinates(const FreeElement &target) const;

private:
    std::vector<Word> words_;
    std::map<Word, std::size_t> word_index_;
    std::size_t basis_size_ = 0;
    std::size_t ideal_size_ = 0;
    std::size_t ideal_rank_ = 0;
    // transform_ * (word coordinates) gives the reduced right-hand side.
    std::vector<std::vector<Rational>> transform_;
    // Pivot column of each of the first `rank` reduced rows (ideal columns first).
    std::vector<std::size_t> pivot_of_row_;
    bool spans_ = false;
    bool independent_ = false;
};

} // namespace canform

#endif
