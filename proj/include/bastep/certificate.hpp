#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bastep/condition.hpp"
#include "bastep/encoding.hpp"
#include "bastep/oracles.hpp"

namespace bastep {

enum class DenseTag { Da, Ei, Def, Eef };

std::string_view tag_name(DenseTag t);

/// One dense-set request: which set to extend the chain bottom into.
struct DenseRequest {
  DenseTag tag = DenseTag::Da;
  IntervalSet a;      // Da
  BigNat i;           // Ei
  IntervalSet e, f;   // Def / Eef

  static DenseRequest da(IntervalSet a);
  static DenseRequest ei(BigNat i);
  static DenseRequest def(IntervalSet e, IntervalSet f);
  static DenseRequest eef(IntervalSet e, IntervalSet f);

  /// Canonical text, also the idempotence key, e.g. "Def [0/1,1/2) {}".
  std::string key() const;
  static DenseRequest parse(std::string_view line);
};

/// Proof that `result` lies in the requested dense set: the satisfied
/// defining clause plus every finite witness the clause mentions, all
/// re-checkable from the kernel operations alone.
struct Certificate {
  DenseTag dense_set = DenseTag::Da;
  DenseRequest request;
  int clause = 1;
  bool mirrored = false;

  std::vector<std::uint32_t> cover;       // Def clause 3: covering piece indexes
  std::optional<std::uint32_t> head;      // Def clause 2: absorbed piece
  std::vector<std::uint32_t> rest;        // Def clause 2: its companions
  std::optional<std::uint32_t> idx_i;     // Eef clause 2/3
  std::optional<std::uint32_t> idx_j;     // Eef clause 2
  IntervalSet added0, added1;             // Da: split cells; Ei: the decided cell
  std::optional<Dyadic> w0, w1;           // Da: points of q0\a and q1\a

  ConditionPtr input;
  ConditionPtr result;

  nlohmann::json to_json() const;
};

}  // namespace bastep
