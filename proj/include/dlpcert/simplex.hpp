#ifndef DLPCERT_SIMPLEX_HPP
#define DLPCERT_SIMPLEX_HPP

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace dlpcert {

// Exact rational LP in row form.  Variables are non-negative unless flagged
// free.  objective_constant is a fixed offset added to the reported optimum
// (several dual formulations carry a leading "1 +").
struct LpProblem {
    struct Row {
        std::string name;
        std::vector<Rational> coeffs;
        char rel = 'L'; // 'L' <=, 'E' =, 'G' >=
        Rational rhs = 0;
    };

    bool maximize = true;
    std::vector<Rational> objective;
    Rational objective_constant = 0;
    std::vector<Row> rows;
    std::vector<bool> free_var;
    std::vector<std::string> col_names;

    size_t num_cols() const { return objective.size(); }

    void set_cols(std::vector<std::string> names) {
        col_names = std::move(names);
        objective.assign(col_names.size(), Rational(0));
        free_var.assign(col_names.size(), false);
    }

    void add_row(std::string name, std::vector<Rational> coeffs, char rel, Rational rhs) {
        if (coeffs.size() != num_cols()) throw ShapeMismatch("LpProblem::add_row: width");
        rows.push_back({std::move(name), std::move(coeffs), rel, std::move(rhs)});
    }
};

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::optimal;
    std::vector<Rational> primal;
    std::vector<Rational> dual; // one multiplier per original row
    Rational objective = 0;
};

// Two-phase primal simplex with Bland's rule, dense exact tableau.
// B^{-1} is carried as an appended identity block so exact duals
// y = c_B B^{-1} come out of the final basis directly.
class Simplex {
public:
    explicit Simplex(const LpProblem& p) : p_(p) {}

    LpSolution solve() {
        build();
        LpSolution sol;
        if (!phase1()) {
            sol.status = LpSolution::Status::infeasible;
            return sol;
        }
        int st = phase2();
        if (st == 1) {
            sol.status = LpSolution::Status::unbounded;
            return sol;
        }
        sol.status = LpSolution::Status::optimal;
        extract(sol);
        return sol;
    }

private:
    const LpProblem& p_;
    size_t m_ = 0;           // rows
    size_t ncols_ = 0;       // structural + slack/surplus + artificial
    size_t art_begin_ = 0;   // first artificial column
    std::vector<std::vector<Rational>> T_; // m x (ncols + m [Binv] + 1 [rhs])
    std::vector<long> basis_;
    std::vector<Rational> cost_;   // phase-2 costs (internal min)
    std::vector<int> row_sign_;    // +1, or -1 when the row was negated
    // column mapping: original var j -> plus column, optional minus column
    std::vector<long> plus_col_, minus_col_;

    Rational& rhs(size_t i) { return T_[i][ncols_ + m_]; }
    Rational& binv(size_t i, size_t j) { return T_[i][ncols_ + j]; }

    void build() {
        m_ = p_.rows.size();
        size_t nc = p_.num_cols();
        if (nc > 3000 || m_ > 6000) throw BudgetExceeded("simplex: instance too large");
        plus_col_.assign(nc, -1);
        minus_col_.assign(nc, -1);
        std::vector<std::vector<Rational>> cols; // structural columns
        for (size_t j = 0; j < nc; ++j) {
            plus_col_[j] = (long)cols.size();
            cols.emplace_back();
            if (p_.free_var[j]) {
                minus_col_[j] = (long)cols.size();
                cols.emplace_back();
            }
        }
        size_t nstruct = cols.size();

        row_sign_.assign(m_, 1);
        std::vector<char> rel(m_);
        for (size_t i = 0; i < m_; ++i) {
            rel[i] = p_.rows[i].rel;
            if (p_.rows[i].rhs < 0) {
                row_sign_[i] = -1;
                rel[i] = rel[i] == 'L' ? 'G' : rel[i] == 'G' ? 'L' : 'E';
            }
        }
        size_t nslack = 0;
        for (size_t i = 0; i < m_; ++i)
            if (rel[i] == 'L' || rel[i] == 'G') ++nslack;
        size_t nart = 0;
        for (size_t i = 0; i < m_; ++i)
            if (rel[i] == 'G' || rel[i] == 'E') ++nart;

        ncols_ = nstruct + nslack + nart;
        art_begin_ = nstruct + nslack;
        T_.assign(m_, std::vector<Rational>(ncols_ + m_ + 1, Rational(0)));
        cost_.assign(ncols_, Rational(0));
        basis_.assign(m_, -1);

        for (size_t i = 0; i < m_; ++i) {
            const auto& r = p_.rows[i];
            for (size_t j = 0; j < nc; ++j) {
                Rational v = r.coeffs[j];
                if (row_sign_[i] < 0) v = -v;
                T_[i][plus_col_[j]] = v;
                if (minus_col_[j] >= 0) T_[i][minus_col_[j]] = -v;
            }
            rhs(i) = row_sign_[i] < 0 ? Rational(-r.rhs) : r.rhs;
            binv(i, i) = 1;
        }
        // internal objective: minimize
        for (size_t j = 0; j < nc; ++j) {
            Rational c = p_.objective[j];
            if (p_.maximize) c = -c;
            cost_[plus_col_[j]] = c;
            if (minus_col_[j] >= 0) cost_[minus_col_[j]] = -c;
        }
        // slack / surplus / artificial columns
        size_t scol = nstruct, acol = art_begin_;
        for (size_t i = 0; i < m_; ++i) {
            if (rel[i] == 'L') {
                T_[i][scol] = 1;
                basis_[i] = (long)scol;
                ++scol;
            } else if (rel[i] == 'G') {
                T_[i][scol] = -1;
                ++scol;
                T_[i][acol] = 1;
                basis_[i] = (long)acol;
                ++acol;
            } else {
                T_[i][acol] = 1;
                basis_[i] = (long)acol;
                ++acol;
            }
        }
    }

    void pivot(size_t pr, size_t pc) {
        Rational inv = 1 / T_[pr][pc];
        for (auto& v : T_[pr]) v *= inv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == pr) continue;
            Rational f = T_[i][pc];
            if (f == 0) continue;
            for (size_t j = 0; j < T_[i].size(); ++j) T_[i][j] -= f * T_[pr][j];
        }
        basis_[pr] = (long)pc;
    }

    // One simplex phase under costs c; returns 0 optimal, 1 unbounded.
    int run(const std::vector<Rational>& c, bool allow_artificial) {
        while (true) {
            // y = c_B B^{-1} applied to columns on the fly: reduced cost of j
            long enter = -1;
            for (size_t j = 0; j < ncols_; ++j) {
                if (!allow_artificial && j >= art_begin_) break;
                bool basic = false;
                for (size_t i = 0; i < m_; ++i)
                    if (basis_[i] == (long)j) { basic = true; break; }
                if (basic) continue;
                Rational red = c[j];
                for (size_t i = 0; i < m_; ++i) {
                    long b = basis_[i];
                    if (c[b] != 0 && T_[i][j] != 0) red -= c[b] * T_[i][j];
                }
                if (red < 0) { enter = (long)j; break; } // Bland: first improving index
            }
            if (enter < 0) return 0;
            long leave = -1;
            Rational best;
            for (size_t i = 0; i < m_; ++i) {
                if (T_[i][enter] <= 0) continue;
                Rational ratio = rhs(i) / T_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = (long)i;
                    best = ratio;
                }
            }
            if (leave < 0) return 1;
            pivot((size_t)leave, (size_t)enter);
        }
    }

    bool phase1() {
        bool any_art = art_begin_ < ncols_;
        if (!any_art) return true;
        std::vector<Rational> c(ncols_, Rational(0));
        for (size_t j = art_begin_; j < ncols_; ++j) c[j] = 1;
        int st = run(c, true);
        (void)st; // phase 1 is always bounded below by 0
        Rational obj = 0;
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] >= (long)art_begin_) obj += rhs(i);
        if (obj != 0) return false;
        // drive remaining zero-level artificials out of the basis
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < (long)art_begin_) continue;
            long pc = -1;
            for (size_t j = 0; j < art_begin_; ++j)
                if (T_[i][j] != 0) { pc = (long)j; break; }
            if (pc >= 0) pivot(i, (size_t)pc);
            // else: redundant row, artificial stays basic at level 0
        }
        return true;
    }

    int phase2() { return run(cost_, false); }

    void extract(LpSolution& sol) {
        size_t nc = p_.num_cols();
        sol.primal.assign(nc, Rational(0));
        std::vector<Rational> colval(ncols_, Rational(0));
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < (long)ncols_) colval[basis_[i]] = rhs(i);
        for (size_t j = 0; j < nc; ++j) {
            sol.primal[j] = colval[plus_col_[j]];
            if (minus_col_[j] >= 0) sol.primal[j] -= colval[minus_col_[j]];
        }
        Rational obj = 0;
        for (size_t j = 0; j < nc; ++j) obj += p_.objective[j] * sol.primal[j];
        sol.objective = obj + p_.objective_constant;

        // y = c_B B^{-1} (internal min form), mapped back through the row
        // sign flips and the max/min negation.
        sol.dual.assign(m_, Rational(0));
        for (size_t i = 0; i < m_; ++i) {
            Rational y = 0;
            for (size_t r = 0; r < m_; ++r) {
                long b = basis_[r];
                if (b >= 0 && cost_[b] != 0 && binv(r, i) != 0) y += cost_[b] * binv(r, i);
            }
            if (row_sign_[i] < 0) y = -y;
            if (p_.maximize) y = -y;
            sol.dual[i] = y;
        }

        // strong duality must hold exactly
        Rational dual_obj = 0;
        for (size_t i = 0; i < m_; ++i) dual_obj += sol.dual[i] * p_.rows[i].rhs;
        if (dual_obj + p_.objective_constant != sol.objective)
            throw std::logic_error("simplex: strong duality check failed");
    }
};

inline LpSolution solve(const LpProblem& p) { return Simplex(p).solve(); }

// --- plain-text LP serialization -------------------------------------------
//
//   dlpcert-lp 1
//   max|min
//   constant <rational>
//   cols <k> <name...>
//   free <name...>            (optional)
//   obj <c_1> ... <c_k>
//   row <name> <rel> <rhs> <a_1> ... <a_k>

inline void write_lp(std::ostream& os, const LpProblem& p) {
    os << "dlpcert-lp 1\n" << (p.maximize ? "max" : "min") << "\n";
    if (p.objective_constant != 0) os << "constant " << rat_to_string(p.objective_constant) << "\n";
    os << "cols " << p.num_cols();
    for (const auto& n : p.col_names) os << " " << n;
    os << "\n";
    bool any_free = false;
    for (bool f : p.free_var) any_free |= f;
    if (any_free) {
        os << "free";
        for (size_t j = 0; j < p.num_cols(); ++j)
            if (p.free_var[j]) os << " " << p.col_names[j];
        os << "\n";
    }
    os << "obj";
    for (const auto& c : p.objective) os << " " << rat_to_string(c);
    os << "\n";
    for (const auto& r : p.rows) {
        os << "row " << r.name << " " << (r.rel == 'L' ? "<=" : r.rel == 'E' ? "=" : ">=") << " "
           << rat_to_string(r.rhs);
        for (const auto& c : r.coeffs) os << " " << rat_to_string(c);
        os << "\n";
    }
}

inline LpProblem read_lp(std::istream& is) {
    LpProblem p;
    std::string line;
    if (!std::getline(is, line) || line.rfind("dlpcert-lp", 0) != 0)
        throw ParseError("read_lp: missing header");
    if (!std::getline(is, line)) throw ParseError("read_lp: missing sense");
    p.maximize = (line == "max");
    if (!p.maximize && line != "min") throw ParseError("read_lp: bad sense '" + line + "'");
    std::map<std::string, size_t> col_index;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "constant") {
            std::string v;
            ss >> v;
            p.objective_constant = rat_from_string(v);
        } else if (tok == "cols") {
            size_t k;
            ss >> k;
            std::vector<std::string> names(k);
            for (auto& n : names) ss >> n;
            p.set_cols(names);
            for (size_t j = 0; j < k; ++j) col_index[p.col_names[j]] = j;
        } else if (tok == "free") {
            std::string n;
            while (ss >> n) p.free_var.at(col_index.at(n)) = true;
        } else if (tok == "obj") {
            for (size_t j = 0; j < p.num_cols(); ++j) {
                std::string v;
                ss >> v;
                p.objective[j] = rat_from_string(v);
            }
        } else if (tok == "row") {
            std::string name, rel, rhs;
            ss >> name >> rel >> rhs;
            std::vector<Rational> coeffs(p.num_cols());
            for (size_t j = 0; j < p.num_cols(); ++j) {
                std::string v;
                ss >> v;
                coeffs[j] = rat_from_string(v);
            }
            char r = rel == "<=" ? 'L' : rel == "=" ? 'E' : 'G';
            p.add_row(name, std::move(coeffs), r, rat_from_string(rhs));
        } else {
            throw ParseError("read_lp: unknown directive '" + tok + "'");
        }
    }
    return p;
}

} // namespace dlpcert

#endif
