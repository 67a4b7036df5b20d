#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordconv/convolution.hpp"
#include "ordconv/points.hpp"
#include "ordconv/preclosure.hpp"
#include "ordconv/qoset.hpp"

namespace ordconv {

// --- named fixtures -------------------------------------------------------

Qoset chain(int n);
Qoset antichain_qoset(int n);
/// Four-element poset with two bottoms below two tops.
Qoset p4();
/// Diamond: bot < a, b < top.
Qoset diamond();
/// Pentagon: bot < a < top and bot < b < c < top.
Qoset pentagon();
/// Two order-equivalent elements.
Qoset equiv_pair();
/// Finite stage of the double-ladder poset: y_i below x_1..x_i, with y_1
/// below every x.
Qoset hd_truncation(int k);

/// The eight builtin operators over q, in a fixed order.
std::vector<PreclosureOp> builtin_catalog(const Qoset& q);

// --- enumeration ----------------------------------------------------------

/// All labeled posets on n elements (n <= 5), ascending by relation encoding.
std::vector<Qoset> enum_posets(int n);

/// Independent count of labeled posets: a raw scan over every n x n relation
/// matrix, sharing no code with enum_posets.
std::uint64_t count_posets_brute(int n);

/// All intersection-closed families containing the full carrier (n <= 4).
std::vector<std::vector<Subset>> enum_moore(int n);

/// Independent count of Moore families via extensive-monotone-idempotent
/// operator tables (n <= 3).
std::uint64_t count_moore_brute(int n);

/// Seeded monotone-repair table: c(A) = A ∪ ⋃_{B ⊆ A} raw(B); n <= 6.
PreclosureOp random_preclosure(int n, std::uint64_t seed);

// --- law suite ------------------------------------------------------------

struct LawConfig {
  std::uint64_t seed = 1;
  int random_n = 4;
  int random_ops = 60;      // seeded operator tables fed into the algebra laws
  int assoc_triples = 40;   // convolution associativity sample size
  int poset_scan_n = 3;     // exhaustive poset laws run up to this size
  int transfer_n = 3;
  int galois_samples = 8;
  bool check_enumeration_counts = true;
};

struct LawReport {
  std::string law;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string first_counterexample;
};

std::vector<LawReport> law_suite(const LawConfig& cfg);

// --- Galois embeddings ----------------------------------------------------

struct GaloisReport {
  bool preconditions_ok = false;
  std::string failed_precondition;
  bool compact_transfer_ok = false;
  bool extreme_transfer_ok = false;
  bool pullback_convolution_ok = false;
  bool ok() const {
    return preconditions_ok && compact_transfer_ok && extreme_transfer_ok &&
           pullback_convolution_ok;
  }
};

/// Verifies the compact/extreme point transfer along a Galois embedding
/// (emb, retr), plus the pullback-convolution identity for injective maps.
GaloisReport galois_check(const Qoset& e, const PreclosureOp& c, const Qoset& e2,
                          const PreclosureOp& c2, const std::vector<int>& emb,
                          const std::vector<int>& retr);

/// A ↦ emb⁻¹(op2(emb(A))).
PreclosureOp pullback(const PreclosureOp& op2, int n, const std::vector<int>& emb);

struct GaloisSample {
  Qoset e;
  PreclosureOp c;
  Qoset e2;
  PreclosureOp c2;
  std::vector<int> emb;
  std::vector<int> retr;
};

/// Seeded random Galois embeddings: a kernel retraction of an enumerated
/// poset onto a sub-poset carrying a pulled-back absorbing operator. Every
/// returned sample satisfies the embedding preconditions.
std::vector<GaloisSample> galois_samples(int count, std::uint64_t seed);

// --- counterexample hunting ------------------------------------------------

struct HuntResult {
  int n = 0;
  std::uint64_t poset_index = 0;
  std::string detail;
};

std::vector<std::string> hunt_properties();

/// Deterministic scan of the labeled posets up to n_max for the first
/// witness of the named property; nullopt when the property never occurs.
std::optional<HuntResult> counterexample_search(const std::string& property, int n_max);

}  // namespace ordconv
