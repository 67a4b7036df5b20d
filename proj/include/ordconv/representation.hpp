#pragma once

#include <map>
#include <vector>

#include "ordconv/points.hpp"

namespace ordconv {

inline constexpr int kAntichainSearchCap = 1 << 20;
inline constexpr long long kFactorCap = 1'000'000;
inline constexpr int kDivisorCountCap = 64;

/// c(K) = c(ex_c K) in the given context.
bool has_kmp(const EnrichedContext& ctx, Subset k);

enum class GenDir { sup, inf };

/// SupGen: every x of k is a sup of ↓x ∩ a (infs for InfGen); a must sit
/// inside k.
bool generates(const Qoset& q, Subset a, Subset k, GenDir dir);

struct RepWitness {
  bool ok = false;
  Subset base;                  // the generating set found
  std::vector<Subset> witness;  // per element of S: ↑x ∩ base (↓ for dual uses)
};

/// Inf-generation of S by its relatively-maximal elements, where the filters
/// carving the complements range over the ambient qoset and maximality is
/// taken inside S. Bounds are taken in the ambient qoset.
RepWitness rep1(const Qoset& q, Subset s);
/// Same with principal filters only.
RepWitness rep2(const Qoset& q, Subset s);

struct RepresentationResult {
  Subset kit_set;
  bool kit_closed_ok = false;  // kit set fixed by the up-convolution
  bool kmp_holds = false;      // kit = c↑(ex_{c↑} kit)
  Subset extreme_set;          // ex_{c↑} kit
  std::map<int, std::vector<int>> antichains;  // kit point -> Y_x, in copoint order
  bool antichain_ok = false;
  bool membership_ok = false;  // x ∈ c(Y_x) ∩ Y_x↑ for every kit point
  bool uniqueness_ok = false;
  bool separating = false;
  bool sup_ok = false;  // x ∈ Y_x∨ whenever the operator separates points
};

/// Kit-point analysis and per-point compact antichains; requires an
/// idempotent operator that is right-absorbing over the primary order.
RepresentationResult rep3(const EnrichedContext& ctx);

struct FactorResult {
  long long m = 0;
  std::vector<long long> divisors;
  RepresentationResult rep;
  std::vector<long long> top_antichain;  // Y_m as divisor values
  bool top_matches_trial_division = false;
};

/// Div(m) with the Dedekind-MacNeille operator, run through rep3; the top
/// antichain is cross-checked against plain trial-division factorization.
FactorResult factor_divisor_lattice(long long m);

struct TransferReport {
  bool hypothesis = false;   // every K∖V has the c-KMp
  bool conclusion = false;   // every K has the (c * <.>_V)-KMp
  bool implication_ok = false;
  std::uint64_t pairs_checked = 0;
};

/// Checks the KMp transfer implication for a family of generators and a
/// collection of test sets; the family's members must be order-saturated.
TransferReport transfer_check(const EnrichedContext& ctx, const std::vector<Subset>& family,
                              const std::vector<Subset>& kcoll);

}  // namespace ordconv
