#pragma once

// The cyclic operator on C(G)-cochains (with delta the counit), the cocyclic
// identities, and cyclic cohomology.

#include <cstddef>

#include "mhc/cochain.hpp"
#include "mhc/kernels.hpp"
#include "mhc/report.hpp"

namespace mhc {

/// (tau_n F)(g_1..g_n) = F((g_1...g_n)^-1, g_1, ..., g_{n-1}) sigma(g_n);
/// tau_0 is the identity.
Cochain tau(const Cochain& f, const Character& sigma);

/// (-1)^n tau_n F = F.
bool is_cyclic_cochain(const Cochain& f, const Character& sigma);

/// P = (1/(n+1)) sum_{k=0}^{n} ((-1)^n tau_n)^k.
Cochain cyclic_projector(const Cochain& f, const Character& sigma);

/// Full-basis checks for every degree n <= n_max, with codegeneracies
/// indexed from 0 (sigma_p inserts e in front of the (p+1)-th argument):
///   tau_coface[p]:       tau_{n+1} delta_p = delta_{p-1} tau_n,   1 <= p <= n + 1
///   tau_coface0:         tau_{n+1} delta_0 = delta_{n+1}
///   tau_codegeneracy[p]: tau_n sigma_p = sigma_{p-1} tau_{n+1}, 1 <= p <= n
///   tau_codegeneracy0:   tau_n sigma_0 = sigma_n tau_{n+1}^2
///   tau_cyclic:          tau_n^{n+1} = id
/// Entries carry the degree n; failures carry the first offending tuple.
/// `tau_builder` replaces tau_operator, for negative controls.
Report verify_cocyclic_identities(const GroupPtr& g, const Character& sigma, std::size_t n_max,
                                  const TauBuilder& tau_builder = tau_operator,
                                  std::size_t cap = kDefaultCochainCap);

/// dim ker / dim im of b restricted to cyclic cochains. Verifies on a spanning
/// set that b maps cyclic cochains to cyclic cochains and throws
/// CyclicityError otherwise. Throws CapacityError when |G|^{n+1} > cap.
CohomologyResult cyclic_cohomology_dim(const GroupPtr& g, const Character& sigma, std::size_t n,
                                       std::size_t cap = kDefaultCochainCap);

namespace serial {

/// Same checks as mhc::verify_cocyclic_identities, evaluated by applying the
/// cochain-level operations to each basis cochain.
Report verify_cocyclic_identities(const GroupPtr& g, const Character& sigma, std::size_t n_max);

}  // namespace serial
}  // namespace mhc
