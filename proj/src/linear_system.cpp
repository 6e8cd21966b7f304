#include "montesinos/linear_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "montesinos/log.hpp"

namespace montesinos {

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::LE: return "<=";
        case Relation::LT: return "<";
        case Relation::GE: return ">=";
        case Relation::GT: return ">";
        case Relation::EQ: return "=";
    }
    return "?";
}

bool LinearConstraint::is_constant() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool LinearConstraint::is_contradiction() const {
    if (!is_constant()) return false;
    if (rel == Relation::LE) return rhs < Rational(0);
    if (rel == Relation::LT) return rhs <= Rational(0);
    return false;
}

std::size_t LinearSystem::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return i;
    throw std::out_of_range("no such variable: " + name);
}

void LinearSystem::add(std::vector<Rational> coeffs, Relation rel, Rational rhs,
                       std::string provenance) {
    if (coeffs.size() != variables.size())
        throw std::invalid_argument("constraint arity mismatch");
    LinearConstraint c;
    c.coeffs = std::move(coeffs);
    c.rel = rel;
    c.rhs = rhs;
    c.provenance = std::move(provenance);
    constraints.push_back(std::move(c));
}

std::string LinearSystem::render(const LinearConstraint& c) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        const Rational& a = c.coeffs[i];
        if (a.is_zero()) continue;
        if (first) {
            if (a.sign() < 0) out << "-";
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
        }
        Rational mag = a.abs();
        if (mag != Rational(1)) out << mag.str() << "*";
        out << variables[i];
        first = false;
    }
    if (first) out << "0";
    out << " " << relation_symbol(c.rel) << " " << c.rhs.str();
    return out.str();
}

namespace {

LinearConstraint as_le(const LinearConstraint& c) {
    LinearConstraint out = c;
    if (c.rel == Relation::GE || c.rel == Relation::GT) {
        for (auto& a : out.coeffs) a = -a;
        out.rhs = -out.rhs;
        out.rel = c.rel == Relation::GE ? Relation::LE : Relation::LT;
    }
    return out;
}

// Positive scale factor that makes parallel constraints comparable and
// keeps coefficients small.  Scales the origin multipliers identically so
// the row stays an exact combination of its sources.
void canonical_scale(LinearConstraint& c) {
    Rational pivot;
    for (const auto& a : c.coeffs)
        if (!a.is_zero()) { pivot = a.abs(); break; }
    if (pivot.is_zero()) pivot = c.rhs.abs();
    if (pivot.is_zero() || pivot == Rational(1)) return;
    for (auto& a : c.coeffs) a /= pivot;
    c.rhs /= pivot;
    for (auto& [idx, mult] : c.origin) mult /= pivot;
}

void seed_origin(LinearConstraint& c, std::size_t index) {
    if (c.origin.empty())
        c.origin = {{index, Rational(1)}};
}

std::vector<std::pair<std::size_t, Rational>> combine_origins(
        const std::vector<std::pair<std::size_t, Rational>>& a, const Rational& wa,
        const std::vector<std::pair<std::size_t, Rational>>& b, const Rational& wb) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [idx, mult] : a) acc[idx] += wa * mult;
    for (const auto& [idx, mult] : b) acc[idx] += wb * mult;
    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(acc.size());
    for (const auto& [idx, mult] : acc)
        if (!mult.is_zero()) out.emplace_back(idx, mult);
    return out;
}

// true iff `a` implies `b`, assuming identical canonical coefficient vectors.
bool dominates(const LinearConstraint& a, const LinearConstraint& b) {
    if (a.rhs < b.rhs) return true;
    if (a.rhs > b.rhs) return false;
    return a.rel == Relation::LT || b.rel == Relation::LE;
}

struct VecLess {
    bool operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
            if (x[i] < y[i]) return true;
            if (y[i] < x[i]) return false;
        }
        return x.size() < y.size();
    }
};

// Drops true constants, keeps only the tightest of each parallel group.
void append_pruned(std::vector<LinearConstraint>& out, LinearConstraint c,
                   std::map<std::vector<Rational>, std::size_t, VecLess>& best) {
    canonical_scale(c);
    if (c.is_constant() && !c.is_contradiction())
        return;
    auto it = best.find(c.coeffs);
    if (it == best.end()) {
        best.emplace(c.coeffs, out.size());
        out.push_back(std::move(c));
        return;
    }
    if (dominates(c, out[it->second]))
        out[it->second] = std::move(c);
}

} // namespace

LinearSystem normalized(const LinearSystem& system) {
    LinearSystem out;
    out.variables = system.variables;
    std::vector<LinearConstraint> tail;
    for (const auto& c : system.constraints) {
        if (c.rel == Relation::EQ) {
            LinearConstraint le = c;
            le.rel = Relation::LE;
            out.constraints.push_back(le);
            LinearConstraint ge = c;
            ge.rel = Relation::GE;
            ge.provenance += " (reversed)";
            tail.push_back(as_le(ge));
        } else {
            out.constraints.push_back(as_le(c));
        }
    }
    for (auto& c : tail)
        out.constraints.push_back(std::move(c));
    return out;
}

LinearSystem fm_eliminate(const LinearSystem& system, std::size_t var) {
    if (var >= system.variables.size())
        throw std::out_of_range("fm_eliminate: no such variable");

    LinearSystem norm = normalized(system);
    for (std::size_t i = 0; i < norm.constraints.size(); ++i)
        seed_origin(norm.constraints[i], i);

    LinearSystem out;
    for (std::size_t i = 0; i < system.variables.size(); ++i)
        if (i != var) out.variables.push_back(system.variables[i]);

    auto drop_var = [&](const LinearConstraint& c) {
        LinearConstraint r = c;
        r.coeffs.erase(r.coeffs.begin() + static_cast<std::ptrdiff_t>(var));
        return r;
    };

    std::vector<const LinearConstraint*> uppers, lowers;
    std::map<std::vector<Rational>, std::size_t, VecLess> best;
    for (const auto& c : norm.constraints) {
        const Rational& a = c.coeffs[var];
        if (a.is_zero())
            append_pruned(out.constraints, drop_var(c), best);
        else if (a.sign() > 0)
            uppers.push_back(&c);
        else
            lowers.push_back(&c);
    }

    for (const auto* lo : lowers) {
        for (const auto* up : uppers) {
            Rational w_lo = up->coeffs[var];         // > 0
            Rational w_up = -(lo->coeffs[var]);      // > 0
            LinearConstraint c;
            c.coeffs.reserve(out.variables.size());
            for (std::size_t i = 0; i < system.variables.size(); ++i) {
                if (i == var) continue;
                c.coeffs.push_back(w_lo * lo->coeffs[i] + w_up * up->coeffs[i]);
            }
            c.rhs = w_lo * lo->rhs + w_up * up->rhs;
            c.rel = (lo->rel == Relation::LT || up->rel == Relation::LT) ? Relation::LT
                                                                         : Relation::LE;
            c.provenance = "derived";
            c.origin = combine_origins(lo->origin, w_lo, up->origin, w_up);
            append_pruned(out.constraints, std::move(c), best);
        }
    }
    return out;
}

LinearSystem fm_eliminate(const LinearSystem& system, const std::string& var_name) {
    return fm_eliminate(system, system.var_index(var_name));
}

namespace {

const LinearConstraint* find_contradiction(const LinearSystem& system) {
    for (const auto& c : system.constraints)
        if (c.is_contradiction()) return &c;
    return nullptr;
}

struct Interval {
    std::optional<Rational> lower, upper;
    bool lower_strict = false, upper_strict = false;
};

Rational pick_value(const Interval& iv) {
    if (iv.lower && iv.upper) {
        if (!iv.lower_strict && !iv.upper_strict && *iv.lower == *iv.upper)
            return *iv.lower;
        if (*iv.upper < *iv.lower ||
            (*iv.upper == *iv.lower && (iv.lower_strict || iv.upper_strict)))
            throw std::logic_error("back-substitution hit an empty interval");
        return (*iv.lower + *iv.upper) / Rational(2);
    }
    if (iv.lower) return iv.lower_strict ? *iv.lower + Rational(1) : *iv.lower;
    if (iv.upper) return iv.upper_strict ? *iv.upper - Rational(1) : *iv.upper;
    return Rational(0);
}

} // namespace

SolveResult solve(const LinearSystem& system, std::vector<std::size_t> elimination_order) {
    std::vector<bool> listed(system.variables.size(), false);
    for (std::size_t v : elimination_order) {
        if (v >= system.variables.size())
            throw std::out_of_range("solve: elimination order names a missing variable");
        if (listed[v])
            throw std::invalid_argument("solve: duplicate variable in elimination order");
        listed[v] = true;
    }
    for (std::size_t i = 0; i < system.variables.size(); ++i)
        if (!listed[i]) elimination_order.push_back(i);

    LinearSystem base = normalized(system);
    for (std::size_t i = 0; i < base.constraints.size(); ++i)
        seed_origin(base.constraints[i], i);

    // stages[k] holds the system before eliminating elimination_order[k].
    std::vector<LinearSystem> stages;
    std::vector<std::string> order_names;
    stages.push_back(base);
    for (std::size_t k = 0; k < elimination_order.size(); ++k) {
        order_names.push_back(system.variables.at(elimination_order[k]));
        stages.push_back(fm_eliminate(stages.back(), order_names.back()));
        MONTESINOS_LOG_DEBUG("fm: after eliminating " << order_names.back() << ": "
                             << stages.back().constraints.size() << " constraints");
        if (const auto* bad = find_contradiction(stages.back())) {
            SolveResult res;
            res.feasible = false;
            res.farkas.multipliers = bad->origin;
            res.farkas.strict = bad->rel == Relation::LT;
            if (!check_farkas(system, res.farkas))
                throw std::logic_error("derived infeasibility witness failed verification");
            return res;
        }
    }
    if (const auto* bad = find_contradiction(stages.front())) {
        SolveResult res;
        res.feasible = false;
        res.farkas.multipliers = bad->origin;
        res.farkas.strict = bad->rel == Relation::LT;
        if (!check_farkas(system, res.farkas))
            throw std::logic_error("infeasibility witness failed verification");
        return res;
    }

    // Feasible: back-substitute, most recently eliminated variable first.
    std::vector<Rational> values(system.variables.size());
    std::vector<bool> assigned(system.variables.size(), false);
    for (std::size_t k = elimination_order.size(); k-- > 0;) {
        const LinearSystem& stage = stages[k];
        std::size_t local = stage.var_index(order_names[k]);
        Interval iv;
        for (const auto& c : stage.constraints) {
            const Rational& a = c.coeffs[local];
            if (a.is_zero()) continue;
            Rational rest;
            for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
                if (j == local || c.coeffs[j].is_zero()) continue;
                std::size_t g = system.var_index(stage.variables[j]);
                if (!assigned[g])
                    throw std::logic_error("back-substitution ordering broken");
                rest += c.coeffs[j] * values[g];
            }
            Rational bound = (c.rhs - rest) / a;
            bool strict = c.rel == Relation::LT;
            if (a.sign() > 0) {
                if (!iv.upper || bound < *iv.upper ||
                    (bound == *iv.upper && strict))
                    iv.upper = bound, iv.upper_strict = strict;
            } else {
                if (!iv.lower || bound > *iv.lower ||
                    (bound == *iv.lower && strict))
                    iv.lower = bound, iv.lower_strict = strict;
            }
        }
        std::size_t g = system.var_index(order_names[k]);
        values[g] = pick_value(iv);
        assigned[g] = true;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!assigned[i]) values[i] = Rational(0);

    SolveResult res;
    res.feasible = true;
    res.witness = values;
    if (!satisfies(system, res.witness))
        throw std::logic_error("feasibility witness failed verification");
    return res;
}

bool check_farkas(const LinearSystem& system, const FarkasWitness& witness) {
    LinearSystem norm = normalized(system);
    std::vector<Rational> combo(norm.variables.size());
    Rational rhs;
    bool strict = false;
    if (witness.multipliers.empty())
        return false;
    for (const auto& [idx, mult] : witness.multipliers) {
        if (idx >= norm.constraints.size()) return false;
        if (mult.sign() < 0) return false;
        if (mult.is_zero()) continue;
        const auto& c = norm.constraints[idx];
        for (std::size_t j = 0; j < combo.size(); ++j)
            combo[j] += mult * c.coeffs[j];
        rhs += mult * c.rhs;
        if (c.rel == Relation::LT) strict = true;
    }
    for (const auto& v : combo)
        if (!v.is_zero()) return false;
    if (strict != witness.strict) return false;
    return strict ? rhs <= Rational(0) : rhs < Rational(0);
}

std::vector<Violation> evaluate_point(const LinearSystem& system,
                                      const std::vector<Rational>& point) {
    if (point.size() != system.variables.size())
        throw std::invalid_argument("point arity mismatch");
    std::vector<Violation> out;
    for (std::size_t i = 0; i < system.constraints.size(); ++i) {
        const auto& c = system.constraints[i];
        Rational lhs;
        for (std::size_t j = 0; j < point.size(); ++j)
            lhs += c.coeffs[j] * point[j];
        Rational slack;
        bool strict = false, violated = false;
        switch (c.rel) {
            case Relation::LE: slack = c.rhs - lhs; violated = slack < Rational(0); break;
            case Relation::LT: slack = c.rhs - lhs; strict = true;
                               violated = slack <= Rational(0); break;
            case Relation::GE: slack = lhs - c.rhs; violated = slack < Rational(0); break;
            case Relation::GT: slack = lhs - c.rhs; strict = true;
                               violated = slack <= Rational(0); break;
            case Relation::EQ: slack = -((lhs - c.rhs).abs());
                               violated = lhs != c.rhs; break;
        }
        if (violated)
            out.push_back({i, c.provenance, system.render(c), slack, strict});
    }
    return out;
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point) {
    return evaluate_point(system, point).empty();
}

} // namespace montesinos
