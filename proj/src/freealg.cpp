#include "canform/freealg.hpp"

#include <algorithm>
#include <set>

#include "canform/errors.hpp"

namespace canform {

Word monomial_of(const MultiIndex &J) { return Word(J.rbegin(), J.rend()); }
MultiIndex multi_index_of(const Word &w) { return MultiIndex(w.rbegin(), w.rend()); }

std::vector<Word> words_of_content(const Weight &k) { return multi_indices(k); }

// ---------------------------------------------------------------- FreeElement

FreeElement FreeElement::word(Word w, const Rational &c)
{
    FreeElement e;
    e.add(w, c);
    return e;
}

Rational FreeElement::coefficient(const Word &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

Weight FreeElement::content(int rank) const
{
    if (terms_.empty())
        throw DomainError("the zero element has no content");
    Weight k = content_of(terms_.begin()->first, rank);
    for (const auto &[w, c] : terms_)
        if (content_of(w, rank) != k)
            throw DomainError("element is not homogeneous");
    return k;
}

void FreeElement::add(const Word &w, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FreeElement &FreeElement::operator+=(const FreeElement &other)
{
    for (const auto &[w, c] : other.terms_)
        add(w, c);
    return *this;
}

FreeElement &FreeElement::operator-=(const FreeElement &other)
{
    for (const auto &[w, c] : other.terms_)
        add(w, -c);
    return *this;
}

FreeElement &FreeElement::operator*=(const Rational &c)
{
    if (c == 0)
        terms_.clear();
    for (auto &[w, coef] : terms_)
        coef *= c;
    return *this;
}

FreeElement operator*(const FreeElement &a, const FreeElement &b)
{
    FreeElement out;
    for (const auto &[wa, ca] : a.terms_)
        for (const auto &[wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

namespace {

std::string render_element(const FreeElement &e, bool latex)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[w, c] : e.terms()) {
        Rational mag = abs(c);
        out += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        first = false;
        if (mag != 1 || w.empty())
            out += latex && mag.get_den() != 1
                       ? "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}"
                       : mag.get_str();
        // Group runs of equal letters into powers.
        for (std::size_t p = 0; p < w.size();) {
            std::size_t q = p;
            while (q < w.size() && w[q] == w[p])
                ++q;
            if (latex) {
                out += "\\tilde{f}_{" + std::to_string(w[p]) + "}";
                if (q - p > 1)
                    out += "^{" + std::to_string(q - p) + "}";
            } else {
                if (p > 0 || mag != 1)
                    out += " ";
                out += "f" + std::to_string(w[p]);
                if (q - p > 1)
                    out += "^" + std::to_string(q - p);
            }
            p = q;
        }
    }
    return out;
}

} // namespace

std::string FreeElement::str() const { return render_element(*this, false); }
std::string FreeElement::latex() const { return render_element(*this, true); }

FreeElement commutator(const FreeElement &a, const FreeElement &b) { return a * b - b * a; }

FreeElement power(const FreeElement &a, int n)
{
    FreeElement out = FreeElement::word(Word{});
    for (int i = 0; i < n; ++i)
        out = out * a;
    return out;
}

// ---------------------------------------------------------------- BracketTree

BracketTree BracketTree::leaf(int generator)
{
    if (generator < 1)
        throw DomainError("generator index must be positive");
    BracketTree t;
    t.generator_ = generator;
    return t;
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right)
{
    BracketTree t;
    t.left_ = std::make_shared<const BracketTree>(std::move(left));
    t.right_ = std::make_shared<const BracketTree>(std::move(right));
    return t;
}

Weight BracketTree::content(int rank) const
{
    if (is_leaf())
        return Weight::unit(rank, generator_);
    return left_->content(rank) + right_->content(rank);
}

std::string BracketTree::str() const
{
    if (is_leaf())
        return "f" + std::to_string(generator_);
    return "[" + left_->str() + "," + right_->str() + "]";
}

bool operator==(const BracketTree &a, const BracketTree &b)
{
    if (a.is_leaf() || b.is_leaf())
        return a.generator_ == b.generator_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

BracketTree nested_bracket(const std::vector<int> &seq)
{
    if (seq.empty())
        throw DomainError("nested bracket of an empty sequence");
    BracketTree t = BracketTree::leaf(seq.back());
    for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it)
        t = BracketTree::bracket(BracketTree::leaf(*it), t);
    return t;
}

FreeElement bracket_expand(const BracketTree &t)
{
    if (t.is_leaf())
        return FreeElement::generator(t.generator());
    return commutator(bracket_expand(t.left()), bracket_expand(t.right()));
}

// ---------------------------------------------------------------- coproduct, shuffles

TensorElement coproduct(const Word &w)
{
    if (w.size() > 24)
        throw DomainError("word too long for the coproduct");
    TensorElement out;
    const std::size_t n = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Word left, right;
        for (std::size_t p = 0; p < n; ++p)
            ((mask >> p) & 1 ? left : right).push_back(w[p]);
        out[{left, right}] += 1;
    }
    return out;
}

std::vector<MultiIndex> shuffles(const MultiIndex &J1, const MultiIndex &J2)
{
    const std::size_t n = J1.size() + J2.size();
    std::vector<bool> in_first(n, false);
    std::fill(in_first.begin(), in_first.begin() + static_cast<std::ptrdiff_t>(J1.size()), true);
    std::vector<MultiIndex> out;
    do {
        MultiIndex J;
        std::size_t a = 0, b = 0;
        for (std::size_t u = 0; u < n; ++u)
            J.push_back(in_first[u] ? J1[a++] : J2[b++]);
        out.push_back(std::move(J));
    } while (std::prev_permutation(in_first.begin(), in_first.end()));
    return out;
}

// ---------------------------------------------------------------- Serre relations

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries))
{
    const std::size_t r = entries_.size();
    if (r == 0)
        throw DomainError("empty Cartan matrix");
    for (std::size_t i = 0; i < r; ++i) {
        if (entries_[i].size() != r)
            throw DomainError("Cartan matrix is not square");
        if (entries_[i][i] != 2)
            throw DomainError("Cartan matrix diagonal must be 2");
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (i != j && (entries_[i][j] > 0 || (entries_[i][j] == 0) != (entries_[j][i] == 0)))
                throw DomainError("malformed Cartan matrix off-diagonal entry");
}

std::vector<SerreRelation> serre_relations(const CartanMatrix &cartan)
{
    std::vector<SerreRelation> out;
    for (int i = 1; i <= cartan.rank(); ++i)
        for (int j = 1; j <= cartan.rank(); ++j) {
            if (i == j)
                continue;
            std::vector<int> seq(static_cast<std::size_t>(1 - cartan(i, j)), i);
            seq.push_back(j);
            out.push_back({i, j, bracket_expand(nested_bracket(seq))});
        }
    return out;
}

std::vector<FreeElement> serre_ideal_span(const CartanMatrix &cartan, const Weight &k)
{
    if (k.rank() != cartan.rank())
        throw DomainError("weight rank does not match the Cartan matrix");
    std::set<FreeElement::Terms> seen;
    std::vector<FreeElement> out;
    for (const auto &rel : serre_relations(cartan)) {
        Weight c = rel.element.content(k.rank());
        if (!c.fits_in(k))
            continue;
        Weight rest = k - c;
        for (const Word &outer : words_of_content(rest)) {
            for (std::size_t split = 0; split <= outer.size(); ++split) {
                FreeElement u = FreeElement::word(Word(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(split)));
                FreeElement v = FreeElement::word(Word(outer.begin() + static_cast<std::ptrdiff_t>(split), outer.end()));
                FreeElement e = u * rel.element * v;
                if (seen.insert(e.terms()).second)
                    out.push_back(std::move(e));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- linear algebra

QuotientSolver::QuotientSolver(std::vector<FreeElement> basis, std::vector<FreeElement> ideal)
    : basis_size_(basis.size()), ideal_size_(ideal.size())
{
    std::vector<FreeElement> columns = std::move(ideal);
    columns.insert(columns.end(), std::make_move_iterator(basis.begin()), std::make_move_iterator(basis.end()));

    // The word basis: all words of the common content when the family is
    // homogeneous, otherwise the words that occur.
    std::optional<Weight> content;
    bool homogeneous = true;
    int rank = 0;
    for (const auto &col : columns)
        for (const auto &[w, c] : col.terms())
            for (int g : w)
                rank = std::max(rank, g);
    for (const auto &col : columns) {
        if (col.is_zero())
            continue;
        try {
            Weight k = col.content(rank);
            if (content && *content != k)
                homogeneous = false;
            content = k;
        } catch (const DomainError &) {
            homogeneous = false;
        }
    }
    if (homogeneous && content) {
        words_ = words_of_content(*content);
    } else {
        std::set<Word> all;
        for (const auto &col : columns)
            for (const auto &[w, c] : col.terms())
                all.insert(w);
        words_.assign(all.begin(), all.end());
    }
    for (std::size_t i = 0; i < words_.size(); ++i)
        word_index_[words_[i]] = i;

    const std::size_t n = words_.size();
    const std::size_t m = columns.size();
    // Augmented rows [A | I].
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m + n));
    for (std::size_t c = 0; c < m; ++c)
        for (const auto &[w, coef] : columns[c].terms())
            rows[word_index_.at(w)][c] = coef;
    for (std::size_t i = 0; i < n; ++i)
        rows[i][m + i] = 1;

    std::size_t rank_so_far = 0;
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c = 0; c < m && rank_so_far < n; ++c) {
        std::size_t p = rank_so_far;
        while (p < n && rows[p][c] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(rows[p], rows[rank_so_far]);
        auto &prow = rows[rank_so_far];
        Rational inv = 1 / prow[c];
        for (std::size_t x = c; x < m + n; ++x)
            if (prow[x] != 0)
                prow[x] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank_so_far || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t x = c; x < m + n; ++x)
                if (prow[x] != 0)
                    rows[i][x] -= f * prow[x];
        }
        pivot_of_row_.push_back(c);
        is_pivot[c] = true;
        if (c < ideal_size_)
            ++ideal_rank_;
        ++rank_so_far;
    }
    transform_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        transform_[i].assign(rows[i].begin() + static_cast<std::ptrdiff_t>(m), rows[i].end());
    spans_ = rank_so_far == n;
    independent_ = std::all_of(is_pivot.begin() + static_cast<std::ptrdiff_t>(ideal_size_), is_pivot.end(),
                               [](bool b) { return b; });
}

std::optional<std::vector<Rational>> QuotientSolver::coordinates(const FreeElement &target) const
{
    std::vector<std::pair<std::size_t, Rational>> b;
    for (const auto &[w, c] : target.terms()) {
        auto it = word_index_.find(w);
        if (it == word_index_.end())
            return std::nullopt;
        b.emplace_back(it->second, c);
    }
    const std::size_t n = words_.size();
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &[idx, c] : b)
            if (transform_[i][idx] != 0)
                y[i] += transform_[i][idx] * c;
    for (std::size_t i = pivot_of_row_.size(); i < n; ++i)
        if (y[i] != 0)
            return std::nullopt;
    std::vector<Rational> x(basis_size_);
    for (std::size_t i = 0; i < pivot_of_row_.size(); ++i)
        if (pivot_of_row_[i] >= ideal_size_)
            x[pivot_of_row_[i] - ideal_size_] = y[i];
    return x;
}

std::optional<std::vector<Rational>> express_in_basis(const FreeElement &target,
                                                      const std::vector<FreeElement> &spanners)
{
    QuotientSolver solver(spanners, {});
    return solver.coordinates(target);
}

} // namespace canform
