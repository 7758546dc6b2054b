#pragma once

#include <stdexcept>
#include <string>

namespace torideform {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input document problems (bad syntax, bad fields, non-vertex points).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input: at least one vertex is required") {}
};

struct NotAVertex : Error {
  int index;
  NotAVertex(int idx, const std::string& why)
      : Error("vertex " + std::to_string(idx) + " is not a vertex: " + why), index(idx) {}
};

// Stage prerequisites.
struct NotPointed : Error {
  explicit NotPointed(const std::string& what) : Error("cone is not pointed: " + what) {}
};

struct NotLowerBounded : Error {
  explicit NotLowerBounded(const std::string& what)
      : Error("functional unbounded below on the polyhedron: " + what) {}
};

struct NotInMonoid : Error {
  explicit NotInMonoid(const std::string& what) : Error("element outside monoid: " + what) {}
};

struct NotPositivelyGraded : Error {
  explicit NotPositivelyGraded(const std::string& what)
      : Error("semigroup is not positively graded: " + what) {}
};

struct NotDegreeOneGenerated : Error {
  std::string witness;
  explicit NotDegreeOneGenerated(const std::string& w)
      : Error("monoid not generated in degree 1; witness: " + w), witness(w) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& what) : Error("not homogeneous: " + what) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

struct OpenPath : Error {
  explicit OpenPath(const std::string& what) : Error("path is not closed: " + what) {}
};

struct UnrepresentableFactor : Error {
  explicit UnrepresentableFactor(const std::string& what)
      : Error("factor has no representation over the generators: " + what) {}
};

struct HypothesisViolated : Error {
  std::string witness;
  explicit HypothesisViolated(const std::string& w)
      : Error("degree-1 generation hypothesis violated; witness: " + w), witness(w) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what)
      : Error("solution set is not a full-rank lattice: " + what) {}
};

}  // namespace torideform
