#pragma once

#include <stdexcept>
#include <string>

namespace histo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
  using Error::Error;
};
struct EmptyMesh : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InvalidMesh : Error {
  using Error::Error;
};
struct AttributionNotInjective : Error {
  using Error::Error;
};
struct PointUnassigned : Error {
  using Error::Error;
};
struct RankDeficient : Error {
  using Error::Error;
};
struct RankDeficientConstraints : RankDeficient {
  using RankDeficient::RankDeficient;
};
struct RankDeficientDesign : RankDeficient {
  using RankDeficient::RankDeficient;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct SingularKKT : SingularSystem {
  using SingularSystem::SingularSystem;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

}  // namespace histo
