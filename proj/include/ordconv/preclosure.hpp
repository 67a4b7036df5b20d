#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordconv/qoset.hpp"

namespace ordconv {

inline constexpr int kTableCap = 16;
inline constexpr int kClosedSetCap = 4096;

enum class BuiltinKind {
  down,
  up,
  dm,
  inf_closed,        // generated by the inf-closed subsets
  upper_inf_closed,  // generated by the upper inf-closed subsets
  filter_generated,  // generated by the filters
  ranzato_p,
  ranzato_q
};

const char* builtin_name(BuiltinKind k);
BuiltinKind builtin_kind(const std::string& name);

struct ValidationFlags {
  bool is_preclosure = false;
  bool is_untied = false;
  bool is_idempotent = false;
  bool is_cech = false;
  bool is_topological = false;
  bool is_finitary = false;
};

struct EnrichmentFlags {
  bool compatible = false;
  bool right_absorbing = false;
  bool absorbing = false;
};

enum class SepDir { forward, dual };

/// A set-to-set map on subsets of a fixed carrier, held by value. Extensivity
/// and monotonicity are invariants of everything this library constructs, but
/// raw tables may violate them; validate() reports the facts.
class PreclosureOp {
 public:
  struct Model {
    int n = 0;
    nlohmann::json desc;
    std::function<Subset(Subset)> eval;
    // Structural facts known at construction time (never guessed).
    bool lower_valued = false;   // image is always a lower set of *base
    bool upper_valued = false;   // image is always an upper set of *base
    bool known_idempotent = false;
    bool equiv_enriched = false;  // order-convolution result; context order must be ~
    std::shared_ptr<const Qoset> base;
    std::string builtin;  // builtin kind name, "" otherwise
  };

  PreclosureOp() = default;
  explicit PreclosureOp(std::shared_ptr<const Model> m) : m_(std::move(m)) {}

  int carrier_size() const { return m_->n; }
  Subset operator()(Subset a) const { return m_->eval(a); }
  const nlohmann::json& descriptor() const { return m_->desc; }
  bool lower_valued() const { return m_->lower_valued; }
  bool upper_valued() const { return m_->upper_valued; }
  bool known_idempotent() const { return m_->known_idempotent; }
  bool equiv_enriched() const { return m_->equiv_enriched; }
  const Qoset* base_qoset() const { return m_->base.get(); }
  const std::string& builtin() const { return m_->builtin; }

  /// Explicit table; images.size() must be 2^n for some n <= kTableCap.
  static PreclosureOp table(std::vector<Subset> images);
  /// Closure generated by a family of subsets: <A> = intersection of the
  /// members containing A, empty intersection = E.
  static PreclosureOp generated(int n, std::vector<Subset> family);
  static PreclosureOp builtin_op(BuiltinKind k, const Qoset& q);
  /// A -> E.
  static PreclosureOp top(int n);
  /// Convolution identity: empty set to empty set, everything else to E.
  static PreclosureOp neutral(int n);
  /// Same but with the empty set mapped to b.
  static PreclosureOp neutral_over(int n, Subset b);
  /// Convolution absorber at level b: A -> A ∪ b.
  static PreclosureOp adjoin(int n, Subset b);
  /// Arbitrary function; not serializable back through the JSON loader.
  static PreclosureOp from_function(int n, std::string name, std::function<Subset(Subset)> f);

 private:
  std::shared_ptr<const Model> m_;
};

/// Table form of any operator (n <= kTableCap).
PreclosureOp materialize(const PreclosureOp& op);

ValidationFlags validate(const PreclosureOp& op);

/// All closed sets of op (equivalently of its idempotent hull), in lectic
/// order. Never scans the power set: enumeration is closure-driven, with a
/// guard on the family size.
std::vector<Subset> closed_sets(const PreclosureOp& op, int max_count = kClosedSetCap);

/// c°: identity on a finite carrier, kept for contract completeness.
PreclosureOp finitary_part(const PreclosureOp& op);

/// Least closure operator above op; evaluation iterates op to its fixpoint
/// (at most n proper steps).
PreclosureOp idempotent_hull(const PreclosureOp& op);

EnrichmentFlags enrichment_check(const Qoset& q, const PreclosureOp& op);

/// forward: c(↓x) = ↓x for all x; dual: the same on dual(q).
bool separates_points(const Qoset& q, const PreclosureOp& op, SepDir dir);

/// Smallest intersection-closed family containing the given one and E.
std::vector<Subset> moore_completion(int n, std::vector<Subset> family);

}  // namespace ordconv
