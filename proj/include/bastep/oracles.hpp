#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bastep/interval_set.hpp"

namespace bastep {

struct OracleError : Error {
  using Error::Error;
};

/// Answer to "how does a relate to the ideal-independent family X":
/// Cover — a lies below the union of the listed pieces;
/// Absorb — the head piece lies below a joined with the rest pieces.
/// Either way X ∪ {a} is not ideal-independent (for a outside X).
struct IdealOracleAnswer {
  enum Kind { Cover, Absorb } kind = Cover;
  std::vector<std::uint32_t> pieces;  // Cover
  std::uint32_t head = 0;             // Absorb
  std::vector<std::uint32_t> rest;    // Absorb

  nlohmann::json to_json() const;
};

/// Answer to "how does a relate to the decreasing free sequence C":
/// Avoid(i) — a ⊆ complement(c_i);
/// Between(i,j) — c_i \ c_j ⊆ a (i < j);
/// CoversTop — complement(c_0) ⊆ a.
struct FreeOracleAnswer {
  enum Kind { Avoid, Between, CoversTop } kind = Avoid;
  std::uint32_t i = 0;
  std::uint32_t j = 0;  // Between only

  nlohmann::json to_json() const;
};

/// An infinite indexed family of pieces with a total answer strategy. The
/// canonical instance is the dyadic annuli X_n = [2^-(n+1), 2^-n), whose
/// strategy is closed-form; custom families may omit the strategy, in which
/// case the oracle fails with a diagnostic.
class IdealFamily {
 public:
  using PieceFn = std::function<IntervalSet(std::uint32_t)>;
  using AnswerFn = std::function<IdealOracleAnswer(const IntervalSet&)>;

  static IdealFamily canonical();
  IdealFamily(std::string id, PieceFn piece, AnswerFn answer = nullptr);

  const std::string& id() const { return id_; }
  IntervalSet piece(std::uint32_t n) const { return piece_(n); }
  bool has_answer() const { return static_cast<bool>(answer_); }
  IdealOracleAnswer answer(const IntervalSet& a) const;

 private:
  std::string id_;
  PieceFn piece_;
  AnswerFn answer_;
};

/// An infinite strictly decreasing sequence with a total answer strategy.
/// Canonical instance: c_i = [0, 2^-(i+1)).
class FreeSeq {
 public:
  using TermFn = std::function<IntervalSet(std::uint32_t)>;
  using AnswerFn = std::function<FreeOracleAnswer(const IntervalSet&)>;

  static FreeSeq canonical();
  FreeSeq(std::string id, TermFn term, AnswerFn answer = nullptr);

  const std::string& id() const { return id_; }
  IntervalSet term(std::uint32_t i) const { return term_(i); }
  bool has_answer() const { return static_cast<bool>(answer_); }
  FreeOracleAnswer answer(const IntervalSet& a) const;

 private:
  std::string id_;
  TermFn term_;
  AnswerFn answer_;
};

/// Total, boundary-verified oracles: the returned answer's inclusion is
/// re-checked with is_subset before it is handed out; an unverifiable or
/// missing answer raises OracleError.
IdealOracleAnswer ideal_oracle(const IntervalSet& a, const IdealFamily& X);
FreeOracleAnswer free_oracle(const IntervalSet& a, const FreeSeq& C);

/// The inclusion an answer claims, spelled out for re-checking.
bool ideal_answer_holds(const IntervalSet& a, const IdealFamily& X, const IdealOracleAnswer&);
bool free_answer_holds(const IntervalSet& a, const FreeSeq& C, const FreeOracleAnswer&);

}  // namespace bastep
