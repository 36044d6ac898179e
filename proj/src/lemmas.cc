#include <crumby/gadgets.hh>
#include <crumby/lemmas.hh>
#include <crumby/solve.hh>
#include <crumby/structure.hh>

#include <algorithm>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::optional;
using std::string;
using std::vector;

auto BoundarySpec::add_boundary(Vertex v) -> BoundarySpec &
{
    if (! in_boundary(v))
        _boundary.push_back(v);
    return *this;
}

auto BoundarySpec::fix(Vertex v, Color c) -> BoundarySpec &
{
    if (auto existing = fixed_color(v)) {
        if (*existing != c)
            throw SpecError("vertex " + to_string(v) + " is fixed to both red and blue");
        return *this;
    }
    _fixed.emplace_back(v, c);
    return *this;
}

auto BoundarySpec::mark_outside_red(Vertex v) -> BoundarySpec &
{
    if (! in_boundary(v))
        throw SpecError("outside-red flag on vertex " + to_string(v) + ", which is not a boundary vertex");
    if (! has_outside_red(v))
        _outside_red.push_back(v);
    return *this;
}

auto BoundarySpec::in_boundary(Vertex v) const -> bool
{
    return std::find(_boundary.begin(), _boundary.end(), v) != _boundary.end();
}

auto BoundarySpec::has_outside_red(Vertex v) const -> bool
{
    return std::find(_outside_red.begin(), _outside_red.end(), v) != _outside_red.end();
}

auto BoundarySpec::fixed_color(Vertex v) const -> optional<Color>
{
    for (auto & [u, c] : _fixed)
        if (u == v)
            return c;
    return std::nullopt;
}

auto BoundarySpec::validate(const Graph & g) const -> void
{
    auto check = [&] (Vertex v) {
        if (v < 0 || v >= g.size())
            throw SpecError("boundary spec references vertex " + to_string(v) + " outside the gadget");
    };
    for (auto v : _boundary)
        check(v);
    for (auto & [v, _] : _fixed)
        check(v);
    for (auto v : _outside_red)
        check(v);
}

auto crumby::red_path_from(const Graph & g, const Coloring & c, Vertex v) -> optional<std::array<Vertex, 3>>
{
    if (! c.is_red(v))
        return std::nullopt;
    for (auto p : g.neighbours(v))
        if (c.is_red(p))
            for (auto q : g.neighbours(p))
                if (q != v && c.is_red(q))
                    return std::array<Vertex, 3>{v, p, q};
    return std::nullopt;
}

auto crumby::relaxed_feasible(const Graph & g, const BoundarySpec & spec, const Coloring & c) -> bool
{
    if (c.size() != g.size())
        throw std::invalid_argument("coloring length does not match gadget order");
    for (auto & [v, col] : spec.fixed())
        if (c[v] != col)
            throw SpecError("coloring contradicts the fixed color of vertex " + to_string(v));

    for (Vertex v = 0 ; v < g.size() ; ++v) {
        int same = 0;
        for (auto w : g.neighbours(v))
            same += (c[w] == c[v]);
        if (c.is_blue(v) && same > 1)
            return false;                                       // C1
        if (c.is_red(v) && same == 0 && ! spec.in_boundary(v))
            return false;                                       // C2
    }

    for (auto & p : enumerate_p4(g))
        if (c.is_red(p.path[0]) && c.is_red(p.path[1]) && c.is_red(p.path[2]) && c.is_red(p.path[3]))
            return false;                                       // C3

    for (auto v : spec.boundary())
        if (spec.has_outside_red(v) && c.is_red(v) && red_path_from(g, c, v))
            return false;                                       // C4

    return true;
}

namespace
{
    struct FreeVertices
    {
        vector<Vertex> free;
        Coloring base;

        FreeVertices(const Graph & g, const BoundarySpec & spec) :
            base(g.size())
        {
            if (g.size() > feasible_max_order)
                throw CapExceeded("feasible-set enumeration is capped at n = " + to_string(feasible_max_order));
            spec.validate(g);
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                if (auto c = spec.fixed_color(v))
                    base.set(v, *c);
                else
                    free.push_back(v);
            }
        }

        auto count() const -> std::uint64_t { return std::uint64_t{1} << free.size(); }

        /// Lexicographic: the first free vertex is the most significant bit.
        auto coloring(std::uint64_t index) const -> Coloring
        {
            Coloring c = base;
            int k = static_cast<int>(free.size());
            for (int i = 0 ; i < k ; ++i)
                if (index & (std::uint64_t{1} << (k - 1 - i)))
                    c.set(free[i], Color::Red);
            return c;
        }
    };
}

auto crumby::enumerate_feasible_serial(const Graph & g, const BoundarySpec & spec) -> vector<Coloring>
{
    FreeVertices fv(g, spec);
    vector<Coloring> result;
    for (std::uint64_t i = 0 ; i < fv.count() ; ++i) {
        auto c = fv.coloring(i);
        if (relaxed_feasible(g, spec, c))
            result.push_back(std::move(c));
    }
    return result;
}

auto crumby::enumerate_feasible(const Graph & g, const BoundarySpec & spec) -> vector<Coloring>
{
    FreeVertices fv(g, spec);
    const long long total = static_cast<long long>(fv.count());
    vector<unsigned char> keep(total, 0);

    #pragma omp parallel for schedule(static)
    for (long long i = 0 ; i < total ; ++i)
        keep[i] = relaxed_feasible(g, spec, fv.coloring(static_cast<std::uint64_t>(i)));

    vector<Coloring> result;
    for (long long i = 0 ; i < total ; ++i)
        if (keep[i])
            result.push_back(fv.coloring(static_cast<std::uint64_t>(i)));
    return result;
}

auto crumby::format_human(const LemmaReport & r) -> string
{
    string out = r.lemma + " [" + r.scenario + "]: " + (r.pass ? "PASS" : "FAIL")
        + " (" + to_string(r.feasible) + " feasible colorings)\n";
    if (r.counterexample)
        out += "  counterexample: " + to_string(*r.counterexample) + "\n";
    for (auto & note : r.notes)
        out += "  " + note + "\n";
    return out;
}

auto crumby::format_key_value(const LemmaReport & r) -> string
{
    string out = "lemma=" + r.lemma + " scenario=" + r.scenario + " feasible=" + to_string(r.feasible)
        + " result=" + (r.pass ? "pass" : "fail");
    if (r.counterexample) {
        string tokens = to_string(*r.counterexample);
        std::replace(tokens.begin(), tokens.end(), ' ', ',');
        out += " counterexample=" + tokens;
    }
    return out + "\n";
}

auto crumby::verify_rooted_blue(const Graph & f, Vertex x, Vertex r, const vector<Vertex> & extra_boundary) -> LemmaReport
{
    BoundarySpec spec;
    spec.add_boundary(x).add_boundary(r).fix(x, Color::Blue);
    for (auto v : extra_boundary)
        spec.add_boundary(v);

    LemmaReport report;
    report.lemma = "rooted-blue";
    report.scenario = "x=" + to_string(x) + " blue, r=" + to_string(r);
    if (! extra_boundary.empty()) {
        report.scenario += ", extra boundary";
        for (auto v : extra_boundary)
            report.scenario += " " + to_string(v);
    }

    auto feasible = enumerate_feasible(f, spec);
    report.feasible = feasible.size();
    report.pass = true;
    for (auto & c : feasible) {
        bool ok = c.is_red(r);
        for (auto w : f.neighbours(r))
            ok = ok && ! c.is_red(w);
        if (! ok) {
            report.pass = false;
            report.counterexample = c;
            break;
        }
    }
    return report;
}

auto crumby::verify_rooted_red(const Graph & f, Vertex x, Vertex a, Vertex b, Vertex partner, bool outside_red) -> LemmaReport
{
    BoundarySpec spec;
    spec.add_boundary(x).add_boundary(partner).fix(x, Color::Red);
    if (outside_red)
        spec.mark_outside_red(x);

    LemmaReport report;
    report.lemma = "rooted-red";
    report.scenario = "x=" + to_string(x) + " red, boundary partner " + to_string(partner)
        + (outside_red ? ", red outside neighbour" : ", no outside assumption");

    auto feasible = enumerate_feasible(f, spec);
    report.feasible = feasible.size();
    report.pass = true;
    for (auto & c : feasible)
        if (! c.is_red(a) && ! c.is_red(b)) {
            report.pass = false;
            report.counterexample = c;
            break;
        }
    return report;
}

auto crumby::verify_rich(const Graph & r, Vertex s, Vertex t, bool outside_red) -> LemmaReport
{
    BoundarySpec spec;
    spec.add_boundary(s).add_boundary(t).fix(s, Color::Red);
    if (outside_red)
        spec.mark_outside_red(s);

    LemmaReport report;
    report.lemma = "rich";
    report.scenario = "s=" + to_string(s) + " red" + string(outside_red ? ", red outside neighbour" : "");

    auto feasible = enumerate_feasible(r, spec);
    report.feasible = feasible.size();
    if (outside_red) {
        report.pass = feasible.empty();
        if (! feasible.empty())
            report.counterexample = feasible.front();
        return report;
    }

    report.pass = true;
    for (auto & c : feasible) {
        auto path = red_path_from(r, c, s);
        if (! path) {
            report.pass = false;
            report.counterexample = c;
            break;
        }
        report.notes.push_back(to_string(c) + " : " + to_string((*path)[0]) + "-" + to_string((*path)[1]) + "-" + to_string((*path)[2]));
    }
    return report;
}

namespace
{
    auto f_vertex(char role) -> Vertex
    {
        for (std::size_t i = 0 ; i < gadget_roles.size() ; ++i)
            if (gadget_roles[i].front() == role)
                return static_cast<Vertex>(i);
        throw std::invalid_argument(string("unknown gadget role ") + role);
    }
}

auto crumby::verify_lemma1_i(char root_neighbour) -> LemmaReport
{
    if (root_neighbour != 'a' && root_neighbour != 'b')
        throw std::invalid_argument("root neighbour must be a or b");
    auto report = verify_rooted_blue(build_F().graph, f_vertex('x'), f_vertex(root_neighbour));
    report.lemma = "lemma1.i";
    report.scenario = string("x blue, boundary {x,") + root_neighbour + "}";
    return report;
}

auto crumby::verify_lemma1_ii(char boundary_partner, bool outside_red) -> LemmaReport
{
    if (boundary_partner != 'a' && boundary_partner != 'b')
        throw std::invalid_argument("boundary partner must be a or b");
    auto report = verify_rooted_red(build_F().graph, f_vertex('x'), f_vertex('a'), f_vertex('b'), f_vertex(boundary_partner), outside_red);
    report.lemma = "lemma1.ii";
    report.scenario = string("x red, boundary {x,") + boundary_partner + "}, outside red neighbour "
        + (outside_red ? "yes" : "no");
    return report;
}

auto crumby::verify_lemma2(bool outside_red) -> LemmaReport
{
    auto report = verify_rich(build_R().graph, 0, 1, outside_red);
    report.lemma = "lemma2";
    report.scenario = string("s red, boundary {s,t}, outside red neighbour ") + (outside_red ? "yes" : "no");
    return report;
}

auto crumby::lemma1_i_automorphism_consistent() -> bool
{
    const vector<Vertex> swap{0, 2, 1, 4, 3, 6, 5, 7, 8};
    auto f = build_F().graph;
    if (f.relabelled(swap) != f)
        return false;

    auto spec_for = [] (Vertex r) {
        BoundarySpec s;
        s.add_boundary(0).add_boundary(r).fix(0, Color::Blue);
        return s;
    };
    auto with_a = enumerate_feasible(f, spec_for(1));
    auto with_b = enumerate_feasible(f, spec_for(2));

    vector<Coloring> mapped;
    for (auto & c : with_b) {
        Coloring m(c.size());
        for (Vertex v = 0 ; v < c.size() ; ++v)
            m.set(swap[v], c[v]);
        mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());

    auto ra = verify_lemma1_i('a'), rb = verify_lemma1_i('b');
    return mapped == with_a && ra.pass == rb.pass && ra.feasible == rb.feasible;
}

auto crumby::run_all_lemmas() -> vector<LemmaReport>
{
    return {
        verify_lemma1_i('a'),
        verify_lemma1_i('b'),
        verify_lemma1_ii('a', false),
        verify_lemma1_ii('a', true),
        verify_lemma1_ii('b', false),
        verify_lemma1_ii('b', true),
        verify_lemma2(false),
        verify_lemma2(true)
    };
}

auto crumby::compose_g18() -> CompositionReport
{
    CompositionReport report;
    auto f = build_F().graph;
    const Vertex x = 0, a = 1;

    // Blue root. In the 18-vertex graph a has no outside neighbours, so it
    // needs a red neighbour inside F, which the rooted-blue feasible set rules out.
    BoundarySpec blue;
    blue.add_boundary(x).add_boundary(a).fix(x, Color::Blue);
    for (auto & c : enumerate_feasible(f, blue)) {
        bool supported = false;
        for (auto w : f.neighbours(a))
            supported = supported || c.is_red(w);
        if (c.is_red(a) && supported)
            ++report.blue_root_supported;
        if (c.is_blue(a))
            ++report.blue_root_supported;
    }

    // Both roots red, each with the other as red outside neighbour.
    BoundarySpec red;
    red.add_boundary(x).add_boundary(a).fix(x, Color::Red).mark_outside_red(x);
    auto red_set = enumerate_feasible(f, red);
    report.red_root_colorings = red_set.size();

    auto g18 = build_G18().graph;
    for (auto & c1 : red_set)
        for (auto & c2 : red_set) {
            ++report.pairs_checked;
            Coloring joint(18);
            for (Vertex v = 0 ; v < 9 ; ++v) {
                joint.set(v, c1[v]);
                joint.set(v + 9, c2[v]);
            }
            auto verdict = verify_crumby(g18, joint);
            bool through_bridge = false;
            for (auto & viol : verdict.violations)
                if (auto * p4 = std::get_if<RedP4>(&viol)) {
                    auto & path = p4->witness.path;
                    if ((path[1] == 0 && path[2] == 9) || (path[1] == 9 && path[2] == 0))
                        through_bridge = true;
                }
            report.pairs_with_red_p4_through_bridge += through_bridge;
        }

    report.contradiction = report.blue_root_supported == 0
        && report.pairs_with_red_p4_through_bridge == report.pairs_checked;
    report.solver_unsat = exhaustive_solve(g18).status == SolveStatus::Unsat;
    return report;
}
