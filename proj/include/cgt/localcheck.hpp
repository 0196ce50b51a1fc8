#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/subgroups.hpp"

namespace cgt {

enum class CheckMode { exact, order_p_only, certificate };

std::string to_string(CheckMode m);
std::string to_string(Tri t);

struct LocalWitness {
  Subgroup subgroup;
  BigInt normalizer_order;
};

/// Evidence behind a coprime-counting certificate: every class of
/// elements x of order q has p'-centralizer, and p^k stays away from
/// 1 mod q for every k up to the p-valuation of |G|.  Together these
/// forbid an order-q element from normalizing any nontrivial p-subgroup,
/// so a valid certificate soundly implies the exact hypothesis.
struct CertificateTrace {
  bool vacuous = false; // no elements of order q at all
  std::vector<std::pair<std::size_t, BigInt>> order_q_classes; // (class, |C_G(x)|)
  unsigned p_valuation = 0;
  std::uint64_t p_mult_order_mod_q = 0;
  bool centralizers_p_free = false;
  bool no_small_power_hits = false;
};

/// Outcome of the local hypothesis check "q divides no |N_G(R)| over the
/// selected inventory of p-subgroups R > 1".
struct LocalVerdict {
  std::uint64_t p = 0, q = 0;
  CheckMode mode = CheckMode::exact;
  Tri holds = Tri::unknown;
  std::optional<LocalWitness> witness; // present whenever holds == no
  std::optional<CertificateTrace> certificate;

  std::string to_json() const;
};

/// Sound coprime-counting certificate; present iff both conditions hold
/// (or vacuously when q does not divide |G|).  Absence is inconclusive.
std::optional<CertificateTrace> local_certificate(const GroupPtr& g, const ClassList& cl,
                                                  std::uint64_t p, std::uint64_t q);

/// The hypothesis check in one of three explicitly labelled modes:
///   exact        - every conjugacy class of p-subgroups R > 1 (cap-guarded)
///   order_p_only - only subgroups of order p (equivalent to exact when
///                  q divides p-1)
///   certificate  - the sound counting certificate; holds=unknown when absent
LocalVerdict local_hypothesis(const GroupPtr& g, std::uint64_t p, std::uint64_t q, CheckMode mode,
                              const ClassListPtr& cl = nullptr,
                              const AllPSubgroupOptions& opt = {});

/// A q-group acting on a p-group by automorphisms, given by images of the
/// P-generators under each Q-generator.
struct ActionSpec {
  GroupPtr p_group;
  GroupPtr q_group;
  std::vector<std::vector<Permutation>> action; // [q gen][p gen] -> image

  static ActionSpec parse_json(const std::string& text);
};

/// Exhaustive search for an element x of P of order p whose cyclic group
/// is normalized by a nontrivial element of Q.  The action is verified
/// (bijective, multiplicative across the full Cayley graph of P, and
/// consistent with Q's multiplication) before searching; a bad action is
/// an error, an absent witness is a normal outcome.
std::optional<Permutation> lemma_same_search(const ActionSpec& spec);

} // namespace cgt
