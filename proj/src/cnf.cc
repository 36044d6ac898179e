#include <crumby/cnf.hh>
#include <crumby/structure.hh>

#include <algorithm>
#include <cstdlib>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::vector;

namespace
{
    auto by_variable(Literal a, Literal b) -> bool
    {
        return std::abs(a) < std::abs(b);
    }

    auto sort_unique(vector<Clause> & family) -> void
    {
        for (auto & clause : family)
            std::sort(clause.begin(), clause.end(), by_variable);
        std::sort(family.begin(), family.end(), [] (const Clause & a, const Clause & b) {
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [] (Literal x, Literal y) {
                        return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y; });
                });
        family.erase(std::unique(family.begin(), family.end()), family.end());
    }
}

auto crumby::encode_cnf(const Graph & g) -> CnfFormula
{
    auto var = [] (Vertex v) -> Literal { return v + 1; };

    vector<Clause> blue, support, p4;
    for (Vertex v = 0 ; v < g.size() ; ++v) {
        auto nbrs = g.neighbours(v);
        for (std::size_t i = 0 ; i < nbrs.size() ; ++i)
            for (std::size_t j = i + 1 ; j < nbrs.size() ; ++j)
                blue.push_back({var(v), var(nbrs[i]), var(nbrs[j])});

        Clause clause{-var(v)};
        for (auto u : nbrs)
            clause.push_back(var(u));
        std::sort(clause.begin(), clause.end(), by_variable);
        support.push_back(std::move(clause));
    }

    for (auto & w : enumerate_p4(g))
        p4.push_back({-var(w.path[0]), -var(w.path[1]), -var(w.path[2]), -var(w.path[3])});

    sort_unique(blue);
    sort_unique(p4);

    CnfFormula f;
    f.variables = g.size();
    f.family_sizes = {blue.size(), support.size(), p4.size()};
    for (auto * family : {&blue, &support, &p4})
        for (auto & clause : *family)
            f.clauses.push_back(std::move(clause));
    return f;
}

auto crumby::emit_dimacs(const CnfFormula & f) -> string
{
    string out = "p cnf " + to_string(f.variables) + " " + to_string(f.clauses.size()) + "\n";
    for (auto & clause : f.clauses) {
        for (auto lit : clause)
            out += to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

auto crumby::satisfies(const CnfFormula & f, const Coloring & c) -> bool
{
    for (auto & clause : f.clauses) {
        bool sat = false;
        for (auto lit : clause) {
            bool red = c.is_red(std::abs(lit) - 1);
            if ((lit > 0) == red) {
                sat = true;
                break;
            }
        }
        if (! sat)
            return false;
    }
    return true;
}
