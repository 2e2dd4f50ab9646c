#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prodone/factorization.hpp"
#include "prodone/group.hpp"
#include "prodone/product_table.hpp"
#include "prodone/sequence.hpp"

namespace prodone {

/// A bijection between two groups, extended termwise to sequences.
struct BasisBijection {
  GroupMap map;
  /// Product-one preservation has been confirmed for all |S| <= this.
  std::size_t verified_bound = 0;

  friend bool operator==(BasisBijection const&, BasisBijection const&) = default;
};

enum class Classification { isomorphism, anti_isomorphism, neither };
enum class Status { pass, vacuous, fail };

struct AssertionResult {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  /// Elements of the source group witnessing a failure.
  std::vector<Element> counterexample;

  friend bool operator==(AssertionResult const&, AssertionResult const&) = default;
};

struct AssertionReport {
  std::string source;
  std::string target;
  std::vector<Element> images;
  std::size_t verified_bound = 0;
  /// A1..A7 in order.
  std::vector<AssertionResult> assertions;
  bool homomorphism = false;
  bool anti_homomorphism = false;
  Classification classification = Classification::neither;

  bool all_pass() const;
  friend bool operator==(AssertionReport const&, AssertionReport const&) = default;
};

struct TheoremVerdict {
  std::string group1;
  std::string group2;
  std::size_t bound = 0;
  std::size_t bijections_found = 0;
  std::size_t isomorphisms = 0;
  std::size_t anti_isomorphisms = 0;
  std::size_t assertion_failures = 0;
  bool all_classified = true;
  bool groups_isomorphic = false;
  bool consistent = false;
  /// False when a budget was exhausted; `note` carries the reason.
  bool complete = true;
  std::string note;

  friend bool operator==(TheoremVerdict const&, TheoremVerdict const&) = default;
};

enum class InvariantVerdict { distinguishes, matches, inconclusive };

struct InvariantRow {
  std::string name;
  InvariantVerdict verdict = InvariantVerdict::inconclusive;
  std::string left;
  std::string right;
  friend bool operator==(InvariantRow const&, InvariantRow const&) = default;
};

struct InvariantReport {
  std::string group1;
  std::string group2;
  std::size_t bound = 0;
  std::vector<InvariantRow> rows;

  InvariantRow const* find(std::string const& name) const;
  friend bool operator==(InvariantReport const&, InvariantReport const&) = default;
};

char const* to_string(Classification c);
char const* to_string(Status s);
char const* to_string(InvariantVerdict v);

/// First S with |S| <= bound (shortest, then by colex rank) on which
/// product-one membership of S and its image differ.
std::optional<Sequence> preservation_violation(GroupMap const& m, std::size_t bound,
                                               Workspace& ws);

/// Confirms that S is product-one iff its image is, for all |S| <= bound.
/// Updates b.verified_bound to the longest fully confirmed length; throws
/// ResourceError (after confirming what the budget allows) if tables for
/// `bound` do not fit.
bool verify_preserving(BasisBijection& b, std::size_t bound, Workspace& ws);
bool verify_preserving(BasisBijection& b, std::size_t bound);

/// All product-one preserving bijections G1 -> G2 at `bound`, sorted by
/// image tuple.
std::vector<BasisBijection> search_bijections(Group const& g1, Group const& g2,
                                              std::size_t bound, Workspace& ws);
std::vector<BasisBijection> search_bijections(Group const& g1, Group const& g2,
                                              std::size_t bound);

/// Direct exhaustive checks of the seven structural assertions and the
/// iso / anti-iso classification. Requires preservation through length 3.
AssertionReport check_assertions(BasisBijection b, Workspace& ws);
AssertionReport check_assertions(BasisBijection const& b);

TheoremVerdict verify_theorem(Group const& g1, Group const& g2, Workspace& ws);
TheoremVerdict verify_theorem(Group const& g1, Group const& g2);

/// Same images, viewed into the opposite of the target group.
BasisBijection opposite_transport(BasisBijection const& b);

InvariantReport compare_invariants(Group const& g1, Group const& g2, std::size_t bound,
                                   Workspace& ws);
InvariantReport compare_invariants(Group const& g1, Group const& g2, std::size_t bound);

}  // namespace prodone
