#include "octaflip/octagon.hpp"

#include "octaflip/errors.hpp"

namespace octaflip {

namespace {

// symbol slots: a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7 i=8 j=9 k=10,
// then l=11 m=12 n=13 o=14 p=15 q=16 r=17 s=18
enum : std::size_t { A, B, C, D, E, F, G, H, I, J, K, L_, M_, N_, O_, P_, Q_, R_, S_ };

constexpr std::size_t kSymbols = 19;

const SymbolTable& octagon_symbols() {
    static const SymbolTable table({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"});
    return table;
}

} // namespace

OctagonSteps OctagonSteps::standard() {
    OctagonSteps s;
    s.steps[0] = {L_, {{{A, J}, {B, K}, {C, H}}}, I};
    s.steps[1] = {M_, {{{C, F}, {D, K}, {E, L_}}}, J};
    s.steps[2] = {N_, {{{F, A}, {G, L_}, {H, M_}}}, K};
    s.steps[3] = {O_, {{{A, D}, {B, M_}, {C, N_}}}, L_};
#ifdef OCTAFLIP_OCTAGON_FAULT_INJECTION
    s.steps[4] = {P_, {{{E, H}, {F, I}, {G, K}}}, K};
#else
    s.steps[4] = {P_, {{{E, H}, {F, I}, {G, J}}}, K};
#endif
    s.steps[5] = {Q_, {{{H, O_}, {A, P_}, {B, G}}}, N_};
    s.steps[6] = {R_, {{{B, E}, {C, P_}, {D, Q_}}}, O_};
    s.steps[7] = {S_, {{{E, H}, {F, Q_}, {G, R_}}}, P_};
    return s;
}

OctagonSteps OctagonSteps::corrupted_fifth() {
    OctagonSteps s = standard();
    s.steps[4] = {P_, {{{E, H}, {F, I}, {G, K}}}, K};
    return s;
}

namespace {

SemifieldElement product(const std::vector<SemifieldElement>& values,
                         std::initializer_list<std::size_t> factors) {
    auto it = factors.begin();
    SemifieldElement acc = values[*it++];
    for (; it != factors.end(); ++it) acc = sf_otimes(acc, values[*it]);
    return acc;
}

SemifieldElement expansion(const std::vector<SemifieldElement>& v,
                           std::initializer_list<std::initializer_list<std::size_t>> terms,
                           std::initializer_list<std::size_t> divisor) {
    auto term = terms.begin();
    SemifieldElement num = product(v, *term++);
    for (; term != terms.end(); ++term) num = sf_oplus(num, product(v, *term));
    return sf_oslash(num, product(v, divisor));
}

} // namespace

OctagonReport run_octagon(Backend backend, const OctagonSteps& steps) {
    const std::size_t gens = octagon_symbols().size();
    std::vector<SemifieldElement> v(kSymbols, SemifieldElement::unit(backend, gens));
    for (std::size_t g = 0; g < gens; ++g)
        v[g] = SemifieldElement::generator(backend, gens, g);

    for (const auto& step : steps.steps) {
        SemifieldElement num = sf_otimes(v[step.pairs[0][0]], v[step.pairs[0][1]]);
        for (int m = 1; m < 3; ++m)
            num = sf_oplus(num, sf_otimes(v[step.pairs[m][0]], v[step.pairs[m][1]]));
        v[step.out] = sf_oslash(num, v[step.divisor]);
    }

    const SemifieldElement m_expected =
        expansion(v, {{C, F, I}, {D, K, I}, {E, A, J}, {E, B, K}, {E, C, H}}, {I, J});
    const SemifieldElement n_expected = expansion(v,
                                                  {{F, A, I, J},
                                                   {G, A, J, J},
                                                   {G, B, K, J},
                                                   {G, C, H, J},
                                                   {H, C, F, I},
                                                   {H, D, K, I},
                                                   {H, E, A, J},
                                                   {H, E, B, K},
                                                   {E, C, H, H}},
                                                  {I, J, K});
    const SemifieldElement o_expected =
        expansion(v, {{B, E, K}, {D, I, K}, {C, G, J}, {C, F, I}, {C, E, H}}, {J, K});

    OctagonReport report;
    report.backend = backend;
    report.ok = true;
    auto check = [&](const std::string& name, const SemifieldElement& got,
                     const SemifieldElement& expected) {
        OctagonIdentity id;
        id.name = name;
        id.lhs = serialize(got, octagon_symbols());
        id.rhs = serialize(expected, octagon_symbols());
        id.ok = sf_equals(got, expected);
        // Classical canonical forms of both routes must also agree textually.
        if (id.ok && backend == Backend::Classical && id.lhs != id.rhs) id.ok = false;
        report.ok = report.ok && id.ok;
        report.identities.push_back(std::move(id));
    };

    check("m", v[M_], m_expected);
    check("n", v[N_], n_expected);
    check("o", v[O_], o_expected);
    check("q = i", v[Q_], v[I]);
    check("r = j", v[R_], v[J]);
    check("s = k", v[S_], v[K]);
    return report;
}

OctagonReport verify_octagon(Backend backend) {
    OctagonReport report = run_octagon(backend);
    for (const auto& id : report.identities)
        if (!id.ok) throw RelationFailed(id.name, id.lhs, id.rhs);
    return report;
}

} // namespace octaflip
