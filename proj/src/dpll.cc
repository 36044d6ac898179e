#include <crumby/cnf.hh>
#include <crumby/solve.hh>

#include <cstdlib>
#include <vector>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::vector;

namespace
{
    constexpr signed char unset = -1;

    class Dpll
    {
        private:
            const CnfFormula & _f;
            SolveOptions _options;
            vector<signed char> _value;        // indexed by variable, 1-based
            vector<vector<int>> _occurs;       // clauses mentioning each variable
            vector<int> _trail;
            vector<int> _queue;
            bool _out_of_budget = false;

            auto literal_value(Literal lit) const -> signed char
            {
                auto v = _value[std::abs(lit)];
                if (v == unset)
                    return unset;
                return (lit > 0) == (v == 1) ? 1 : 0;
            }

            auto assign(Literal lit) -> void
            {
                int var = std::abs(lit);
                _value[var] = lit > 0 ? 1 : 0;
                _trail.push_back(var);
                _queue.push_back(var);
            }

            auto undo_to(std::size_t mark) -> void
            {
                while (_trail.size() > mark) {
                    _value[_trail.back()] = unset;
                    _trail.pop_back();
                }
                _queue.clear();
            }

            /// Returns false on a falsified clause.
            auto visit_clause(int index) -> bool
            {
                const auto & clause = _f.clauses[index];
                int open = 0;
                Literal unit = 0;
                for (auto lit : clause) {
                    auto val = literal_value(lit);
                    if (val == 1)
                        return true;
                    if (val == unset) {
                        ++open;
                        unit = lit;
                    }
                }
                if (open == 0)
                    return false;
                if (open == 1 && _options.propagate) {
                    ++stats.propagations;
                    assign(unit);
                }
                return true;
            }

            auto unit_propagate() -> bool
            {
                while (! _queue.empty()) {
                    int var = _queue.back();
                    _queue.pop_back();
                    for (auto c : _occurs[var])
                        if (! visit_clause(c))
                            return false;
                }
                return true;
            }

            /// Assigns every pure literal of the unsatisfied clauses; true if any was set.
            auto eliminate_pure() -> bool
            {
                vector<unsigned char> polarity(_f.variables + 1, 0);
                for (auto & clause : _f.clauses) {
                    bool satisfied = false;
                    for (auto lit : clause)
                        if (literal_value(lit) == 1) {
                            satisfied = true;
                            break;
                        }
                    if (satisfied)
                        continue;
                    for (auto lit : clause)
                        if (_value[std::abs(lit)] == unset)
                            polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
                }

                bool any = false;
                for (int var = 1 ; var <= _f.variables ; ++var)
                    if (_value[var] == unset && (polarity[var] == 1 || polarity[var] == 2)) {
                        ++stats.propagations;
                        assign(polarity[var] == 1 ? var : -var);
                        any = true;
                    }
                return any;
            }

            auto simplify() -> bool
            {
                if (! unit_propagate())
                    return false;
                while (_options.propagate && eliminate_pure())
                    if (! unit_propagate())
                        return false;
                return true;
            }

            auto all_satisfied() const -> bool
            {
                for (auto & clause : _f.clauses) {
                    bool sat = false;
                    for (auto lit : clause)
                        if (literal_value(lit) == 1) {
                            sat = true;
                            break;
                        }
                    if (! sat)
                        return false;
                }
                return true;
            }

            auto next_unassigned() const -> int
            {
                for (int var = 1 ; var <= _f.variables ; ++var)
                    if (_value[var] == unset)
                        return var;
                return 0;
            }

        public:
            SolveStats stats;

            Dpll(const CnfFormula & f, const SolveOptions & options) :
                _f(f),
                _options(options),
                _value(f.variables + 1, unset),
                _occurs(f.variables + 1)
            {
                for (std::size_t i = 0 ; i < f.clauses.size() ; ++i)
                    for (auto lit : f.clauses[i])
                        _occurs[std::abs(lit)].push_back(static_cast<int>(i));
            }

            auto out_of_budget() const -> bool { return _out_of_budget; }

            /// Clauses that are unit or empty before any decision.
            auto root() -> bool
            {
                for (std::size_t i = 0 ; i < _f.clauses.size() ; ++i)
                    if (! visit_clause(static_cast<int>(i)))
                        return false;
                return simplify();
            }

            auto search() -> bool
            {
                if (all_satisfied())
                    return true;
                int var = next_unassigned();
                if (var == 0)
                    return false;

                for (Literal lit : {var, -var}) {
                    if (_options.node_budget && stats.nodes >= _options.node_budget) {
                        _out_of_budget = true;
                        return false;
                    }
                    ++stats.nodes;
                    std::size_t mark = _trail.size();
                    assign(lit);
                    if (simplify() && search())
                        return true;
                    undo_to(mark);
                    if (_out_of_budget)
                        return false;
                }
                return false;
            }

            /// Unassigned variables are unconstrained once every clause holds; they go blue.
            auto model() const -> Coloring
            {
                Coloring c(_f.variables);
                for (int var = 1 ; var <= _f.variables ; ++var)
                    if (_value[var] == 1)
                        c.set(var - 1, Color::Red);
                return c;
            }
    };
}

auto crumby::dpll_solve(const Graph & g, const SolveOptions & options) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    auto formula = encode_cnf(g);

    SolveResult result;
    result.solver = "dpll";

    Dpll dpll(formula, options);
    bool found = dpll.root() && dpll.search();
    result.stats = dpll.stats;
    if (found) {
        result.status = SolveStatus::Sat;
        result.coloring = dpll.model();
    }
    else
        result.status = dpll.out_of_budget() ? SolveStatus::Indeterminate : SolveStatus::Unsat;

    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}
