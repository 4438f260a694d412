#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace locus {

enum class ErrorKind {
  ShapeMismatch,
  ModulusMismatch,
  NotSubspace,
  NotPrime,
  AlgebraMismatch,
  SourceTargetMismatch,
  NotComposable,
  LF2CompletionMissing,
  CalculusFails,
  NonStabilized,
  EnumerationBudget,
  NotThick,
  NotCohomological,
  MultiplicativeSystemFails,
  NotIdempotent,
  CapsTooSmall,
  CapTooSmall,
  NoWeakKernels,
  AmbientMismatch,
  NotLocalization,
  ParseError,
  InvalidInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotSubspace: return "NotSubspace";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::LF2CompletionMissing: return "LF2CompletionMissing";
    case ErrorKind::CalculusFails: return "CalculusFails";
    case ErrorKind::NonStabilized: return "NonStabilized";
    case ErrorKind::EnumerationBudget: return "EnumerationBudget";
    case ErrorKind::NotThick: return "NotThick";
    case ErrorKind::NotCohomological: return "NotCohomological";
    case ErrorKind::MultiplicativeSystemFails: return "MultiplicativeSystemFails";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::CapsTooSmall: return "CapsTooSmall";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::NoWeakKernels: return "NoWeakKernels";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotLocalization: return "NotLocalization";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

/// Plain union-find; all closure computations allocate a private instance.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as the representative so id-order minimality
  // of class representatives is automatic.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  bool same(std::size_t a, std::size_t b) const { return find(a) == find(b); }

 private:
  mutable std::vector<std::size_t> parent_;
};

/// xorshift-based deterministic generator; identical streams on every
/// platform, unlike the std distributions.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }
  /// Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL;
    std::uint64_t limit = mask - mask % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace locus
