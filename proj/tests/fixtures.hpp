#pragma once

#include "oracles.hpp"

#include "hgforge/cube.hpp"

namespace fixtures {

using hgforge::Rational;
using hgforge::RawCube;
using oracle::q;

// a[1][1]=(3/4,1/4), a[1][2]=a[2][1]=(1/4,3/4), a[2][2]=(3/4,1/4)
inline RawCube<Rational> z2_derived() {
  return {{{q(3, 4), q(1, 4)}, {q(1, 4), q(3, 4)}}, {{q(1, 4), q(3, 4)}, {q(3, 4), q(1, 4)}}};
}

// a[1][1]=a[1][2]=a[2][1]=(1,0), a[2][2]=(0,1)
inline RawCube<Rational> semilattice() {
  return {{{q(1), q(0)}, {q(1), q(0)}}, {{q(1), q(0)}, {q(0), q(1)}}};
}

// a[1][1]=(0,1), a[1][2]=a[2][1]=(1,0), a[2][2]=(1,0)
inline RawCube<Rational> nonassociative() {
  return {{{q(0), q(1)}, {q(1), q(0)}}, {{q(1), q(0)}, {q(1), q(0)}}};
}

// a[1][2]=(1,0), a[2][1]=(0,1)
inline RawCube<Rational> noncommutative() {
  return {{{q(1), q(0)}, {q(1), q(0)}}, {{q(0), q(1)}, {q(0), q(1)}}};
}

inline hgforge::StructureCube<Rational> cube(const RawCube<Rational>& raw) { return hgforge::make_cube(raw); }

inline hgforge::Measure<Rational> measure(std::vector<Rational> v) {
  hgforge::Vector<Rational> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = v[k];
  return hgforge::Measure<Rational>(std::move(out));
}

inline hgforge::Matrix<Rational> matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  hgforge::Matrix<Rational> m(static_cast<Eigen::Index>(rows.size()),
                              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace fixtures
