#pragma once

#include <stdexcept>
#include <string>

namespace conic {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimitiveRay : Error {
  explicit NonPrimitiveRay(const std::string& w) : Error(w) {}
};
struct NotFullDimensional : Error {
  explicit NotFullDimensional(const std::string& w) : Error(w) {}
};
struct NotPointed : Error {
  explicit NotPointed(const std::string& w) : Error(w) {}
};
struct PointOutsideZonotope : Error {
  explicit PointOutsideZonotope(const std::string& w) : Error(w) {}
};
struct SelfSubstitution : Error {
  explicit SelfSubstitution(const std::string& w) : Error(w) {}
};
struct EmptySet : Error {
  explicit EmptySet(const std::string& w) : Error(w) {}
};
struct ZeroBetaUnsupported : Error {
  explicit ZeroBetaUnsupported(const std::string& w) : Error(w) {}
};
struct NotRankOne : Error {
  explicit NotRankOne(const std::string& w) : Error(w) {}
};
struct CapExceeded : Error {
  CapExceeded(const std::string& w, unsigned long long examined) : Error(w), subsets_examined(examined) {}
  unsigned long long subsets_examined;
};

}  // namespace conic
