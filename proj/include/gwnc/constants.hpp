#pragma once

#include <vector>

#include "gwnc/completion.hpp"
#include "gwnc/graph.hpp"
#include "gwnc/symmat.hpp"

namespace gwnc {

// All normalising constants C_G(delta, D) are integrals of
//   det(K)^((delta - 2) / 2) exp(-tr(K D) / 2)
// over PD matrices K with zeros on the non-edges of G.

/// log Gamma_p(a) = p(p-1)/4 log(pi) + sum_{j=1..p} log Gamma(a - (j-1)/2).
double log_multigamma(int p, double a);

/// Complete graph on p vertices:
///   2^(p a) Gamma_p(a) det(D)^(-a),  a = (delta + p - 1) / 2.
LogScalar complete_constant(int p, double delta, const SymmetricMatrix& scale);

/// Analytic continuation of complete_constant to a complex symmetric scale
/// with PD real part.  Returns the logarithm on the branch continuous from the
/// real scale.
cdouble complete_constant_log(double delta, const ComplexSymmetricMatrix& scale);

/// Clique/separator factorisation for a chordal graph.  Throws InputError for
/// non-chordal g.  The second overload uses the supplied elimination ordering.
LogScalar chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale);
LogScalar chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale,
                           const std::vector<int>& peo);

/// chordal_constant evaluated at scale + i t E (E the indicator of p.edge),
/// as a continuous-branch complex logarithm.
cdouble complex_chordal_log(const Graph& g, double delta, const SymmetricMatrix& scale,
                            const PerturbationEdge& p);
LogScalar complex_chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale,
                                   const PerturbationEdge& p);

/// Identity-scale closed forms for the path v1-v2-v3-v4 and the 4-cycle.
LogScalar path4_identity(double delta);
LogScalar cycle4_identity(double delta);

/// C_path4(delta, I) / C_cycle4(delta, I).
double true_ratio_c4(double delta);

/// Gamma((delta+s)/2) / (2 sqrt(pi) Gamma((delta+s+1)/2)): the estimate of
/// C_G(delta, I) / C_G*(delta, I) when G = G* minus an edge whose endpoints
/// have s common neighbours.
double approx_ratio(double delta, int s);

/// approx_ratio(delta, 0) / true_ratio_c4(delta) - 1.
double stirling_rel_error(double delta);

/// Closed-form estimate of C_G(delta, D) from C_G(delta, I) conjectured by
/// Roverato:
///   2^(n/2) det(Iss_G(D^G))^(-1/2) det(D^G)^(-(delta-2)/2) C_G(delta, I).
/// Exact for chordal g.
LogScalar roverato_estimate(const Graph& g, double delta, const SymmetricMatrix& scale,
                            const LogScalar& c_identity, const CompletionOptions& opts = {});

/// The same estimate through the complementary Isserlis block:
///   det(Iss((D^G)^-1)[non-edges])^(-1/2) det(D^G)^(-(delta-2)/2 - (n+1)/2) C_G(delta, I).
/// Falls back to roverato_estimate for complete g.
LogScalar roverato_estimate_eq2(const Graph& g, double delta, const SymmetricMatrix& scale,
                                const LogScalar& c_identity, const CompletionOptions& opts = {});

}  // namespace gwnc
