#include "tddel/lp.hpp"

#include "tddel/errors.hpp"

#include <limits>

namespace tddel::lp {

namespace {

// Dense simplex state over variables 0..n-1 (user) and n..n+m-1
// (artificials).  `tab` holds B^-1 A row-major; basic columns are unit
// vectors.  `value` holds the current values of the basic variables, which
// together with the nonbasic bound statuses defines the current point.
class Simplex {
public:
    explicit Simplex(const Problem& p)
        : n_(p.vars.size()), m_(p.rows.size()), total_(n_ + m_),
          tab_(m_ * total_, Rational(0)), value_(m_, Rational(0)),
          red_(total_, Rational(0)), lower_(total_, Rational(0)),
          upper_(total_), basis_(m_, -1), row_of_(total_, -1),
          at_upper_(total_, 0) {
        for (std::size_t j = 0; j < n_; ++j) {
            lower_[j] = p.vars[j].lower;
            upper_[j] = p.vars[j].upper;
            if (upper_[j] && *upper_[j] < lower_[j])
                throw InputError("variable with empty bound interval");
        }
        // Start with every user variable at its lower bound; artificials
        // absorb the residual of each row.
        for (std::size_t i = 0; i < m_; ++i) {
            Rational residual = p.rhs[i];
            for (const auto& [j, a] : p.rows[i]) {
                at(i, static_cast<std::size_t>(j)) += a;
                residual -= a * lower_[static_cast<std::size_t>(j)];
            }
            if (sgn(residual) < 0) {
                // Flip the row so the artificial starts nonnegative.
                for (std::size_t j = 0; j < n_; ++j) at(i, j) = -at(i, j);
                residual = -residual;
            }
            const std::size_t art = n_ + i;
            at(i, art) = 1;
            lower_[art] = 0;
            upper_[art] = std::nullopt; // tightened to 0 after phase 1
            basis_[i] = static_cast<int>(art);
            row_of_[art] = static_cast<int>(i);
            value_[i] = residual;
        }
    }

    // Minimize the sum of artificials.  Returns false when that minimum is
    // positive, i.e. the program is infeasible.
    bool phase1() {
        obj_ = 0;
        for (std::size_t i = 0; i < m_; ++i) obj_ += value_[i];
        // Reduced costs for cost vector (0..0, 1..1) with artificial basis.
        for (std::size_t j = 0; j < total_; ++j) {
            red_[j] = (j >= n_) ? Rational(1) : Rational(0);
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] >= static_cast<int>(n_)) red_[j] -= at(i, j);
        }
        iterate(std::nullopt);
        if (sgn(obj_) != 0) return false;
        drive_out_artificials();
        for (std::size_t j = n_; j < total_; ++j) upper_[j] = Rational(0);
        return true;
    }

    // Minimize the real objective; optionally stop once it sinks below the
    // target.  Returns TargetReached or Optimal.
    Status phase2(const Problem& p, const std::optional<Rational>& stop_below) {
        for (std::size_t j = 0; j < total_; ++j) {
            red_[j] = (j < n_) ? p.vars[j].objective : Rational(0);
            for (std::size_t i = 0; i < m_; ++i) {
                const auto b = static_cast<std::size_t>(basis_[i]);
                if (b < n_ && sgn(p.vars[b].objective) != 0)
                    red_[j] -= p.vars[b].objective * at(i, j);
            }
        }
        obj_ = 0;
        for (std::size_t j = 0; j < n_; ++j)
            if (sgn(p.vars[j].objective) != 0) obj_ += p.vars[j].objective * current_value(j);
        return iterate(stop_below);
    }

    std::vector<Rational> extract() const {
        std::vector<Rational> x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = current_value(j);
        return x;
    }

    const Rational& objective() const { return obj_; }

private:
    Rational& at(std::size_t row, std::size_t col) { return tab_[row * total_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return tab_[row * total_ + col]; }

    bool fixed(std::size_t j) const { return upper_[j] && *upper_[j] == lower_[j]; }

    Rational current_value(std::size_t j) const {
        if (row_of_[j] >= 0) return value_[static_cast<std::size_t>(row_of_[j])];
        return at_upper_[j] ? *upper_[j] : lower_[j];
    }

    // Bland's rule: the eligible nonbasic variable of smallest index.
    int pick_entering() const {
        for (std::size_t j = 0; j < total_; ++j) {
            if (row_of_[j] >= 0 || fixed(j)) continue;
            if (!at_upper_[j] && sgn(red_[j]) < 0) return static_cast<int>(j);
            if (at_upper_[j] && sgn(red_[j]) > 0) return static_cast<int>(j);
        }
        return -1;
    }

    Status iterate(const std::optional<Rational>& stop_below) {
        while (true) {
            if (stop_below && obj_ < *stop_below) return Status::TargetReached;
            const int entering = pick_entering();
            if (entering < 0) return Status::Optimal;
            const auto j = static_cast<std::size_t>(entering);
            const int direction = at_upper_[j] ? -1 : +1; // sign of dx_j

            // Ratio test: the entering variable moves by t >= 0; each basic
            // variable i changes by -direction * tab[i][j] * t.
            bool bounded_by_own_span = upper_[j].has_value();
            Rational best_t = bounded_by_own_span ? (*upper_[j] - lower_[j]) : Rational(0);
            int leaving_row = -1;
            int leaving_var = -1;
            bool leaving_at_upper = false;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& a = at(i, j);
                const int s = sgn(a) * direction; // basic var moves by -s*|a|*t
                if (s == 0) continue;
                const auto b = static_cast<std::size_t>(basis_[i]);
                Rational limit;
                bool hits_upper;
                if (s < 0) {
                    // basic variable increases
                    if (!upper_[b]) continue;
                    limit = (*upper_[b] - value_[i]) / (a * direction * -1);
                    hits_upper = true;
                } else {
                    // basic variable decreases toward its lower bound
                    limit = (value_[i] - lower_[b]) / (a * direction);
                    hits_upper = false;
                }
                if (leaving_row < 0 && !bounded_by_own_span) {
                    best_t = limit;
                    leaving_row = static_cast<int>(i);
                    leaving_var = basis_[i];
                    leaving_at_upper = hits_upper;
                    continue;
                }
                if (limit < best_t ||
                    (limit == best_t &&
                     (leaving_row < 0 || basis_[i] < leaving_var))) {
                    best_t = limit;
                    leaving_row = static_cast<int>(i);
                    leaving_var = basis_[i];
                    leaving_at_upper = hits_upper;
                }
            }
            if (leaving_row < 0 && !bounded_by_own_span)
                throw InternalError("linear program is unbounded");

            // Apply the move.
            if (sgn(best_t) != 0) {
                for (std::size_t i = 0; i < m_; ++i) {
                    const Rational& a = at(i, j);
                    if (sgn(a) != 0) value_[i] -= a * direction * best_t;
                }
                obj_ += red_[j] * direction * best_t;
            }

            if (leaving_row < 0) {
                // Pure bound flip.
                at_upper_[j] = !at_upper_[j];
                continue;
            }

            // Pivot: entering j becomes basic in leaving_row.
            const auto r = static_cast<std::size_t>(leaving_row);
            const auto lv = static_cast<std::size_t>(leaving_var);
            row_of_[lv] = -1;
            at_upper_[lv] = leaving_at_upper;
            const Rational entering_value = (direction > 0)
                                                ? Rational(lower_[j] + best_t)
                                                : Rational(*upper_[j] - best_t);
            basis_[r] = entering;
            row_of_[j] = leaving_row;
            value_[r] = entering_value;

            const Rational pivot = at(r, j);
            for (std::size_t c = 0; c < total_; ++c)
                if (sgn(at(r, c)) != 0) at(r, c) /= pivot;
            for (std::size_t i = 0; i < m_; ++i) {
                if (i == r) continue;
                const Rational factor = at(i, j);
                if (sgn(factor) == 0) continue;
                for (std::size_t c = 0; c < total_; ++c)
                    if (sgn(at(r, c)) != 0) at(i, c) -= factor * at(r, c);
            }
            const Rational red_factor = red_[j];
            if (sgn(red_factor) != 0)
                for (std::size_t c = 0; c < total_; ++c)
                    if (sgn(at(r, c)) != 0) red_[c] -= red_factor * at(r, c);
        }
    }

    // After phase 1, swap basic artificials for user columns where possible
    // (degenerate pivots; the point does not move).  Rows whose tableau is
    // zero on all user columns are redundant and keep their artificial.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_)) continue;
            std::size_t col = n_;
            for (std::size_t c = 0; c < n_; ++c)
                if (sgn(at(i, c)) != 0 && row_of_[c] < 0 && !fixed(c)) { col = c; break; }
            if (col == n_) continue;

            const auto art = static_cast<std::size_t>(basis_[i]);
            row_of_[art] = -1;
            at_upper_[art] = false;
            basis_[i] = static_cast<int>(col);
            row_of_[col] = static_cast<int>(i);
            // value_[i] is the artificial's value, which is 0 here, and the
            // entering column sits at a bound; the new basic value is that
            // bound.
            value_[i] = at_upper_[col] ? *upper_[col] : lower_[col];

            const Rational pivot = at(i, col);
            for (std::size_t c = 0; c < total_; ++c)
                if (sgn(at(i, c)) != 0) at(i, c) /= pivot;
            for (std::size_t k = 0; k < m_; ++k) {
                if (k == i) continue;
                const Rational factor = at(k, col);
                if (sgn(factor) == 0) continue;
                for (std::size_t c = 0; c < total_; ++c)
                    if (sgn(at(i, c)) != 0) at(k, c) -= factor * at(i, c);
            }
        }
    }

    std::size_t n_, m_, total_;
    std::vector<Rational> tab_;
    std::vector<Rational> value_;
    std::vector<Rational> red_;
    std::vector<Rational> lower_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<int> basis_;
    std::vector<int> row_of_;
    std::vector<char> at_upper_;
    Rational obj_ = 0;
};

} // namespace

Solution solve(const Problem& problem, const std::optional<Rational>& stop_below) {
    if (problem.rows.size() != problem.rhs.size())
        throw InputError("row/rhs size mismatch");
    for (const auto& row : problem.rows)
        for (const auto& [j, a] : row)
            if (j < 0 || j >= static_cast<int>(problem.vars.size()))
                throw InputError("row references an unknown variable");

    Simplex simplex(problem);
    if (!simplex.phase1()) return {Status::Infeasible, {}, 0};
    const Status status = simplex.phase2(problem, stop_below);
    return {status, simplex.extract(), simplex.objective()};
}

} // namespace tddel::lp
