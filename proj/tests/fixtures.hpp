#pragma once

// Shared finite-category fixtures for the test suites.

#include <memory>

#include "locus/fincat.hpp"

namespace fixtures {

using locus::FinCategory;
using locus::preorder_category;

/// Interval poset: X -> Y.
inline FinCategory interval() {
  return preorder_category({"X", "Y"}, {{1, 1}, {0, 1}});
}

/// Chain poset X -> Y -> Z (with composite).
inline FinCategory chain3() {
  return preorder_category({"X", "Y", "Z"}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
}

/// Chain poset on four objects.
inline FinCategory chain4() {
  return preorder_category({"X", "Y", "Z", "W"},
                           {{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

/// Span: Y <- X -> Z (no cocone).
inline FinCategory span() {
  return preorder_category({"X", "Y", "Z"}, {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
}

/// Cospan: Y -> X <- Z.
inline FinCategory cospan() {
  return preorder_category({"Y", "Z", "X"}, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
}

/// Diamond poset: X -> Y, X -> Z, Y -> W, Z -> W.
inline FinCategory diamond() {
  return preorder_category({"X", "Y", "Z", "W"},
                           {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

/// Two parallel arrows X => Y (not a poset).
inline FinCategory parallel_pair() {
  locus::CategoryBuilder b;
  int x = b.add_object("X"), y = b.add_object("Y");
  b.add_identity(x);
  b.add_identity(y);
  b.add_mor("s1", x, y);
  b.add_mor("s2", x, y);
  return b.finish();
}

/// Morphism id by name; asserts existence.
inline int mor(const FinCategory& c, const std::string& name) {
  for (int m = 0; m < c.num_mors(); ++m)
    if (c.mors[m].name == name) return m;
  throw std::runtime_error("no morphism named " + name);
}

inline int obj(const FinCategory& c, const std::string& name) {
  for (int o = 0; o < c.num_objects(); ++o)
    if (c.objects[o] == name) return o;
  throw std::runtime_error("no object named " + name);
}

inline std::shared_ptr<const FinCategory> shared(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

}  // namespace fixtures
