#pragma once

#include <map>
#include <tuple>

#include "cmprob/json_io.hpp"
#include "cmprob/verify.hpp"

namespace cmprob {

using QMatrix = Matrix<Rational>;

// A generator is named by its expanded matrix, axis and merge position.
// Horizontal: Delta from contract(n, H, k) to n; Vertical: mu from n to
// contract(n, V, k).
using GeneratorKey = std::tuple<ContingencyMatrix, Axis, std::size_t>;

// Spaces and generator matrices on the weight-n objects.
struct Representation {
  int n = 0;
  std::map<ContingencyMatrix, std::size_t> spaces;
  std::map<GeneratorKey, QMatrix> generators;

  // Throws IncompleteData when absent.
  std::size_t dim(const ContingencyMatrix& m) const;
  const QMatrix& generator(const ContingencyMatrix& expanded, Axis axis,
                           std::size_t k) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

// Every generator of weight n, in canonical order.
std::vector<GeneratorKey> generator_keys(int n);
std::pair<ContingencyMatrix, ContingencyMatrix> generator_ends(const GeneratorKey& g);

// Well-definedness of chain composites, every base change instance, and
// invertibility of the anodyne generators. Throws IncompleteData when a
// space or generator is missing; shape mismatches are report failures.
Report check_representation(const Representation& rep);

// The composite along the canonical chain between comparable m and n.
QMatrix rep_chain_map(const Representation& rep, const ContingencyMatrix& m,
                      const ContingencyMatrix& n, Axis axis);

// Restriction of the evaluation functor of an oracle with numeric q.
Representation representation_from_oracle(const BialgebraOracle& oracle, int n);

// Spaces Phi, Psi with a : Phi -> Psi and b : Psi -> Phi.
struct PhiPsiDiagram {
  std::size_t phi = 0;
  std::size_t psi = 0;
  QMatrix a;  // psi x phi
  QMatrix b;  // phi x psi

  friend bool operator==(const PhiPsiDiagram&, const PhiPsiDiagram&) = default;
};

// Id_Psi - a b.
QMatrix t_psi(const PhiPsiDiagram& d);

// [[2]] carries Phi and the four matrices with entries (1, 1) carry Psi.
// Delta at [[1,1]] is a, mu at the column is b, the generators through the
// identity matrix are identities, Delta at the antidiagonal is the identity
// and mu at the antidiagonal is a b - Id. Throws SingularT when Id - a b is
// not invertible.
Representation from_phi_psi(const PhiPsiDiagram& d);

// Identifies the Psi-type spaces with the column's space through the
// generators at the identity matrix. Throws CheckFailed unless the
// representation has weight 2 and passes check_representation.
PhiPsiDiagram to_phi_psi(const Representation& rep);

Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);
Json to_json(const PhiPsiDiagram& d);
PhiPsiDiagram phi_psi_from_json(const Json& j);

}  // namespace cmprob
