#ifndef REPCOL_LP_HPP
#define REPCOL_LP_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "repcol/formulation.hpp"
#include "repcol/rational.hpp"

namespace repcol {

/** Dense row a . x (sense) b. */
struct DenseRow
{
    std::vector<Rational> a;
    Sense sense = Sense::le;
    Rational b = 0;

    Rational dot(const std::vector<Rational>& x) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && x[i] != 0) s += a[i] * x[i];
        return s;
    }
    bool holds(const std::vector<Rational>& x) const { return compare(dot(x), sense, b); }
};

/** maximize c . x  subject to rows, x >= 0, and x <= 1 when `unit_box`. */
struct LinearProgram
{
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<DenseRow> rows;
    bool unit_box = true;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult
{
    LpStatus status = LpStatus::infeasible;
    Rational value = 0;
    std::vector<Rational> x;
};

namespace detail {

/**
 * Two-phase dense tableau simplex over exact rationals with Bland's rule, so
 * it cannot cycle. Column layout: structural, slack/surplus, artificial, rhs.
 */
class ExactSimplex
{
    public:
        explicit ExactSimplex(const LinearProgram& lp) : lp_(lp) {}

        LpResult solve()
        {
            build();
            LpResult res;
            if (num_art_ > 0) {
                // phase 1: maximize -sum(artificials)
                std::vector<Rational> c1(static_cast<std::size_t>(cols_), 0);
                for (int j = art_begin_; j < cols_; ++j) c1[static_cast<std::size_t>(j)] = -1;
                if (!optimize(c1, cols_)) return res;  // bounded by construction
                if (phase_value(c1) != 0) return res;  // infeasible
                drive_out_artificials();
            }
            std::vector<Rational> c2(static_cast<std::size_t>(cols_), 0);
            for (int j = 0; j < lp_.num_vars; ++j) c2[static_cast<std::size_t>(j)] = lp_.objective[static_cast<std::size_t>(j)];
            if (!optimize(c2, art_begin_)) {
                res.status = LpStatus::unbounded;
                return res;
            }
            res.status = LpStatus::optimal;
            res.x.assign(static_cast<std::size_t>(lp_.num_vars), 0);
            for (std::size_t i = 0; i < basis_.size(); ++i)
                if (basis_[i] < lp_.num_vars) res.x[static_cast<std::size_t>(basis_[i])] = rhs(i);
            for (int j = 0; j < lp_.num_vars; ++j) res.value += lp_.objective[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
            return res;
        }

    private:
        Rational& at(std::size_t i, int j) { return t_[i][static_cast<std::size_t>(j)]; }
        Rational& rhs(std::size_t i) { return t_[i].back(); }

        void build()
        {
            std::vector<DenseRow> rows = lp_.rows;
            if (lp_.unit_box)
                for (int j = 0; j < lp_.num_vars; ++j) {
                    DenseRow r;
                    r.a.assign(static_cast<std::size_t>(lp_.num_vars), 0);
                    r.a[static_cast<std::size_t>(j)] = 1;
                    r.sense = Sense::le;
                    r.b = 1;
                    rows.push_back(std::move(r));
                }
            for (DenseRow& r : rows) {
                if (r.b < 0) {
                    for (Rational& x : r.a) x = -x;
                    r.b = -r.b;
                    if (r.sense == Sense::le)
                        r.sense = Sense::ge;
                    else if (r.sense == Sense::ge)
                        r.sense = Sense::le;
                }
            }
            const int n = lp_.num_vars;
            int num_slack = 0;
            num_art_ = 0;
            for (const DenseRow& r : rows) {
                if (r.sense != Sense::eq) ++num_slack;
                if (r.sense != Sense::le) ++num_art_;
            }
            art_begin_ = n + num_slack;
            cols_ = art_begin_ + num_art_;
            t_.assign(rows.size(), std::vector<Rational>(static_cast<std::size_t>(cols_) + 1, Rational(0)));
            basis_.assign(rows.size(), -1);
            int slack = n, art = art_begin_;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const DenseRow& r = rows[i];
                for (int j = 0; j < n; ++j) at(i, j) = r.a[static_cast<std::size_t>(j)];
                rhs(i) = r.b;
                if (r.sense == Sense::le) {
                    at(i, slack) = 1;
                    basis_[i] = slack++;
                } else if (r.sense == Sense::ge) {
                    at(i, slack++) = -1;
                    at(i, art) = 1;
                    basis_[i] = art++;
                } else {
                    at(i, art) = 1;
                    basis_[i] = art++;
                }
            }
        }

        Rational phase_value(const std::vector<Rational>& c)
        {
            Rational v = 0;
            for (std::size_t i = 0; i < basis_.size(); ++i) v += c[static_cast<std::size_t>(basis_[i])] * rhs(i);
            return v;
        }

        void pivot(std::size_t row, int col)
        {
            Rational p = at(row, col);
            auto& pr = t_[row];
            for (Rational& x : pr)
                if (x != 0) x /= p;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (i == row) continue;
                Rational f = t_[i][static_cast<std::size_t>(col)];
                if (f == 0) continue;
                auto& ri = t_[i];
                for (std::size_t j = 0; j < pr.size(); ++j)
                    if (pr[j] != 0) ri[j] -= f * pr[j];
            }
            basis_[row] = col;
        }

        /** Maximizes c over columns [0, limit); returns false when unbounded. */
        bool optimize(const std::vector<Rational>& c, int limit)
        {
            std::vector<char> in_basis(static_cast<std::size_t>(cols_), 0);
            for (;;) {
                std::fill(in_basis.begin(), in_basis.end(), 0);
                for (int b : basis_) in_basis[static_cast<std::size_t>(b)] = 1;
                int enter = -1;
                for (int j = 0; j < limit && enter < 0; ++j) {
                    if (in_basis[static_cast<std::size_t>(j)]) continue;
                    Rational reduced = c[static_cast<std::size_t>(j)];
                    for (std::size_t i = 0; i < basis_.size(); ++i) {
                        const Rational& a = t_[i][static_cast<std::size_t>(j)];
                        if (a != 0) reduced -= c[static_cast<std::size_t>(basis_[i])] * a;
                    }
                    if (reduced > 0) enter = j;
                }
                if (enter < 0) return true;
                std::optional<std::size_t> leave;
                Rational best_ratio;
                for (std::size_t i = 0; i < t_.size(); ++i) {
                    const Rational& a = t_[i][static_cast<std::size_t>(enter)];
                    if (a <= 0) continue;
                    Rational ratio = rhs(i) / a;
                    if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
                if (!leave) return false;
                pivot(*leave, enter);
            }
        }

        void drive_out_artificials()
        {
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (basis_[i] < art_begin_) continue;
                int col = -1;
                for (int j = 0; j < art_begin_ && col < 0; ++j)
                    if (at(i, j) != 0) col = j;
                if (col >= 0) {
                    pivot(i, col);
                } else {
                    // redundant row: all non-artificial entries vanish
                    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                }
            }
        }

        const LinearProgram& lp_;
        std::vector<std::vector<Rational>> t_;
        std::vector<int> basis_;
        int num_art_ = 0;
        int art_begin_ = 0;
        int cols_ = 0;
};

}  // namespace detail

/** Exact optimum of a rational LP. */
inline LpResult solve_lp(const LinearProgram& lp)
{
    for (const DenseRow& r : lp.rows)
        if (static_cast<int>(r.a.size()) != lp.num_vars) throw InvalidInput("LP row width mismatch");
    if (static_cast<int>(lp.objective.size()) != lp.num_vars) throw InvalidInput("LP objective width mismatch");
    return detail::ExactSimplex(lp).solve();
}

/**
 * Same optimum as solve_lp, computed by row generation: start from the rows
 * the origin violates (plus equalities), solve, add every violated row, and
 * repeat. Exact, and much smaller tableaus on systems with many slack rows.
 */
inline LpResult solve_lp_lazy(const LinearProgram& lp)
{
    LinearProgram sub = lp;
    sub.rows.clear();
    std::vector<char> active(lp.rows.size(), 0);
    std::vector<Rational> origin(static_cast<std::size_t>(lp.num_vars), 0);
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        if (lp.rows[i].sense != Sense::le || !lp.rows[i].holds(origin)) {
            active[i] = 1;
            sub.rows.push_back(lp.rows[i]);
        }
    for (;;) {
        LpResult res = solve_lp(sub);
        if (res.status != LpStatus::optimal) return res;
        bool added = false;
        for (std::size_t i = 0; i < lp.rows.size(); ++i)
            if (!active[i] && !lp.rows[i].holds(res.x)) {
                active[i] = 1;
                sub.rows.push_back(lp.rows[i]);
                added = true;
            }
        if (!added) return res;
    }
}

}  // namespace repcol

#endif  // REPCOL_LP_HPP
