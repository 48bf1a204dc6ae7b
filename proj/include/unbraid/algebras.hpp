#pragma once

#include "unbraid/rewrite.hpp"
#include "unbraid/rmat.hpp"

#include <memory>

namespace unbraid {

enum class SpaceKind { Euclidean, Sphere, Heisenberg, Fuzzy };

struct AlgebraError : std::runtime_error {
    enum Kind { CasimirMismatch, Unsupported };
    Kind kind;
    AlgebraError(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

// A module-algebra family member presented as a confluent rewrite system.
struct SpacePresentation {
    SpaceKind kind = SpaceKind::Euclidean;
    IndexScheme scheme;
    int epsilon = 1;   // Heisenberg exponent in the derivative-coordinate rule
    int level = 0;     // fuzzy sphere level N
    Coeff radius;      // fuzzy R
    std::shared_ptr<RewriteSystem> rw;
    BraidData braid;

    std::vector<GenId> coords;  // position order; fuzzy: e-, K, K', e+
    std::vector<GenId> derivs;  // Heisenberg only
    std::map<std::string, GenId> scale;      // adjoined generators by name
    std::map<std::string, Coeff> lambdas;    // oracle-derived commutation scalars (diagnostics)
    std::map<std::string, Element> defined;  // named elements: r^2 (Euclidean),
                                             // Lambda^-2 (Heisenberg), fuzzy x_i, ...

    GenId coord(int index_value) const { return coords.at(scheme.pos(index_value)); }
    GenId deriv(int index_value) const { return derivs.at(scheme.pos(index_value)); }
    const Element& named(const std::string& n) const { return defined.at(n); }
};

// U_q so(N)-covariant quantum Euclidean space R_q^N (sphere: quotient r = 1).
// with_extension adjoins r_a, r_a^{-1} (all partial radii), (x^0)^{-1} for odd
// N, and the Cartan pair of Eq-style q-commuting aux generators for even N.
SpacePresentation quantum_euclidean(const CoeffField& f, int N, bool with_extension,
                                    bool sphere = false);

// Covariant deformed Heisenberg algebra D_{eps,g}. Builders accept any (g, N);
// the scaling extension (Lambda etc.) is adjoined for (sl,2) and (so,3).
SpacePresentation heisenberg(const CoeffField& f, Series series, int N, int epsilon);

// q-deformed fuzzy sphere at cutoff level N, presented on enveloping
// generators (e-, K, K', e+); coordinates are defined elements. The session
// field must carry the surd s^2 = [N]_q [N+2]_q.
SpacePresentation fuzzy_sphere(const CoeffField& f, int level, const Coeff& radius);

// Spin-1 Clebsch-Gordan coefficients eps^{ij}_k of the fuzzy relations;
// indices in {-1,0,1}, zero when not listed.
Coeff fuzzy_epsilon(const CoeffField& f, int i, int j, int k);

// Invariant metric of the fuzzy relations: g^{i,-i} with alternating signs
// (g^{00} = 1, g^{+1,-1} = -q^{1/2}, g^{-1,+1} = -q^{-1/2}); validated
// against the matrix irreducibles.
Coeff fuzzy_metric(const CoeffField& f, int i, int j);

// Presentation dump (JSON) per the external-interface schema.
std::string dump_presentation(const SpacePresentation& sp);

} // namespace unbraid
