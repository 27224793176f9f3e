#pragma once

#include <optional>
#include <string_view>

#include "eprod/measure.hpp"

namespace eprod {

// Named operator families with closed-form entanglement production.
enum class Family {
  epr,               // (|01> + sign |10>)/sqrt(2) on two qubits
  bell,              // (|00> + sign |11>)/sqrt(2) on two qubits
  ghz,               // (|0...0> + sign |1...1>)/sqrt(2) on N qubits
  multicat,          // c1 |0...0> + c2 |1...1> on N qubits
  multimode,         // sum_n c_n |n...n> on N parts of m modes each
  hartree_fock,      // (anti)symmetrized placement of N particles in N modes
  hf_reduced,        // partial trace of the hartree_fock projector onto p parts
  mixed_multimode,   // diagonal mixture sum_n w_n |n...n><n...n| on p parts
  separable_example  // (|00><00| + |11><11|)/2, separable yet entangling
};

enum class Statistics { bose, fermi };

const char* family_name(Family f);
const char* statistics_name(Statistics s);
std::optional<Family> family_from_name(std::string_view name);
std::optional<Statistics> statistics_from_name(std::string_view name);

// True for families whose density operator is a pure-state projector.
bool pure_family(Family f);

struct FamilySpec {
  Family family = Family::epr;
  int n = 2;       // partite / particle count N
  int p = 1;       // reduction order (hf_reduced, mixed_multimode)
  int sign = +1;   // superposition sign for epr / bell / ghz
  std::vector<cx> coeffs;       // c_n for multicat (2 entries) / multimode (m)
  std::vector<double> weights;  // w_n for mixed_multimode (m entries)
  Statistics statistics = Statistics::fermi;  // hartree_fock / hf_reduced
  bool unit_trace = false;  // mixed_multimode: renormalize trace to 1
};

// Unit-normalized state vector of a pure family. hartree_fock places N
// particles in N distinct modes (every partite dimension = N), symmetrized
// for bosons and antisymmetrized with permutation signs for fermions;
// N > 8 is rejected (N! * N^N growth).
Ket make_ket(const FamilySpec& spec);

// Density operator of any family. Pure families give |psi><psi| (unit
// trace). mixed_multimode carries trace N!/(N-p)! by default (the reduced
// density matrix convention), or unit trace when spec.unit_trace is set.
MultipartiteOperator make_density(const FamilySpec& spec);

// Partial trace of the Hartree-Fock projector keeping the first p of N
// partites. Requires 1 <= p <= N-1 and N <= 8. For fermions the D-norm of
// the result is (N-p)!/N! exactly.
MultipartiteOperator hf_reduced(int n, int p, Statistics statistics = Statistics::fermi);

// Closed-form entanglement production of the family's density operator:
//   epr / bell / separable_example -> log 2
//   ghz                            -> (N-1) log 2
//   multicat / multimode           -> (1-N) log sup_n |c_n|^2
//   hartree_fock fermi             -> log(N^N / N!)
//   hartree_fock bose              -> log N!   (the symmetrized overlap
//                                     optimum differs from the fermionic one)
//   hf_reduced fermi               -> log[(N-p)! N^p / N!]
//   mixed_multimode                -> (1-p) log sup_n w_n
// Families/statistics without a closed form raise SpecError.
double expected_epsilon(const FamilySpec& spec, LogBase base = LogBase::natural);

}  // namespace eprod
