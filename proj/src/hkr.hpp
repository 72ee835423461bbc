// Comparison of the invariant twisted product ring with a presented
// resolution ring: graded dimension matching, and solving for the rescalings
// of a proposed basis matching that make it a ring homomorphism. Matchings
// may mark pairs as scalable; the solver determines the squares of the
// scaling factors (the factors themselves may live in a quadratic extension)
// or reports a multiplicative inconsistency with a witness.
#pragma once

#include "report.hpp"
#include "stringy.hpp"

#include <map>
#include <optional>
#include <string>

namespace orb {

// Invariant-space dimensions by (p + age, n); throws when an invariant basis
// vector is not homogeneous.
std::map<std::pair<Rat, int>, int> stringy_graded_dims(const StringySpace& sp);
std::map<std::pair<Rat, int>, int> resolution_graded_dims(const Resolution& res);

CheckReport compare_graded_dims(const StringySpace& sp, const Resolution& res);

enum class ScalingStatus { consistent, inconsistent };

struct ScalingResult {
  ScalingStatus status = ScalingStatus::consistent;
  std::string witness; // set when inconsistent
  // Scalable orb label -> square of its scaling factor, when determined.
  std::map<std::string, std::optional<Rat>> squares;
};

ScalingResult solve_scalings(const StringySpace& sp, Theory t, const Resolution& res, const Skeleton& sk);

// Structural checks plus the scaling solve: matched labels resolve and are
// bijective, matched vectors are invariant and span the invariant subspace,
// zero products correspond, the scaling system is consistent, and graded
// dimensions agree.
std::vector<CheckReport> check_iso(const StringySpace& sp, Theory t, const Resolution& res, const Skeleton& sk);

} // namespace orb
