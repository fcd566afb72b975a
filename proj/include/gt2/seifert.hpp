#ifndef GT2_SEIFERT_HPP
#define GT2_SEIFERT_HPP

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "gt2/presentation.hpp"

namespace gt2 {

using Rational = boost::rational<long long>;

// Seifert invariant (p, alpha) of one exceptional fiber; p >= 2, gcd(p, alpha) = 1.
struct SeifertInvariant {
  int p = 2;
  int alpha = 1;

  friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
};

// A Seifert fibered piece: base surface, exceptional fibers, Euler term.
// For a non-orientable base, base_genus counts crosscaps (>= 1).
struct SeifertData {
  int base_genus = 0;
  bool base_orientable = true;
  int boundary_count = 0;
  std::vector<SeifertInvariant> fibers;
  int euler_b = 0;

  void validate() const;
  int num_fibers() const { return static_cast<int>(fibers.size()); }
  bool has_even_fiber() const;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// Generator layout of the fundamental group presentation, in order:
// a1 b1 ... ag bg (orientable) or v1 ... vg (non-orientable), then
// c1 ... cn, then d1 ... dk, then h.
struct SeifertGenerators {
  int num_base = 0;  // 2g or g
  int num_fibers = 0;
  int boundary_count = 0;

  int base_gen(int idx) const { return idx; }
  int fiber_gen(int idx) const { return num_base + idx; }
  int boundary_gen(int idx) const { return num_base + num_fibers + idx; }
  int h_gen() const { return num_base + num_fibers + boundary_count; }
};

SeifertGenerators seifert_generators(const SeifertData& d);

// The standard presentation: h commutes with every base and boundary
// generator (crosscap generators invert it instead), c_i^{p_i} = h^{alpha_i},
// and the long relator [a1,b1]...[ag,bg] c1...cn d1...dk = h^b, with
// v1^2...vg^2 replacing the commutator block over a non-orientable base.
Presentation seifert_presentation(const SeifertData& d);

// Exactly chi(B) = sum(1 - 1/alpha_i), evaluated in exact rationals.
bool check_horizontal_cover(int base_euler_char, const std::vector<int>& cone_orders);

struct HorizontalBase {
  int crosscaps = 0;  // 1 = projective plane, 2 = Klein bottle
  std::vector<int> cone_orders;

  std::string name() const;
  friend bool operator==(const HorizontalBase&, const HorizontalBase&) = default;
};

// All closed non-orientable bases admitting a horizontal Klein bottle cover:
// enumerates cone multisets for n = 0, 1, 2 (n > 2 is impossible because
// sum(1 - 1/alpha_i) >= n/2 exceeds chi <= 1).
std::vector<HorizontalBase> horizontal_base_solutions();

struct RGroupPieceConditions {
  bool has_exceptional = false;
  bool nonorientable_base = false;
};

RGroupPieceConditions r_group_piece_conditions(const SeifertData& d);

// chi(B) - sum(1 - 1/p_i)
Rational orbifold_euler_characteristic(const SeifertData& d);

int base_euler_characteristic(const SeifertData& d);

// Degenerate shapes whose groups violate the torsion-free/infinite input
// contract: lens spaces (genus 0 orientable, closed, n <= 2) and solid tori
// (genus 0 orientable, one boundary, n <= 1).
bool is_lens_space_shape(const SeifertData& d);
bool is_solid_torus_shape(const SeifertData& d);

}  // namespace gt2

#endif
