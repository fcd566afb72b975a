#include "gt2/seifert.hpp"

#include <numeric>

namespace gt2 {

void SeifertData::validate() const {
  if (base_genus < 0) throw InputError("negative base genus");
  if (boundary_count < 0) throw InputError("negative boundary count");
  if (!base_orientable && base_genus < 1)
    throw InputError("non-orientable base needs at least one crosscap");
  for (const auto& f : fibers) {
    if (f.p < 2) throw InputError("exceptional fiber index must be >= 2");
    if (std::gcd(f.p, f.alpha) != 1)
      throw InputError("Seifert invariant (p, alpha) must be coprime");
  }
}

bool SeifertData::has_even_fiber() const {
  for (const auto& f : fibers)
    if (f.p % 2 == 0) return true;
  return false;
}

SeifertGenerators seifert_generators(const SeifertData& d) {
  SeifertGenerators g;
  g.num_base = d.base_orientable ? 2 * d.base_genus : d.base_genus;
  g.num_fibers = d.num_fibers();
  g.boundary_count = d.boundary_count;
  return g;
}

namespace {

Word commutator(int x, int y) {
  return free_reduce({{x, -1}, {y, -1}, {x, 1}, {y, 1}});
}

}  // namespace

Presentation seifert_presentation(const SeifertData& d) {
  d.validate();
  SeifertGenerators lay = seifert_generators(d);

  Presentation p;
  if (d.base_orientable) {
    for (int i = 1; i <= d.base_genus; ++i) {
      p.add_generator("a" + std::to_string(i));
      p.add_generator("b" + std::to_string(i));
    }
  } else {
    for (int i = 1; i <= d.base_genus; ++i) p.add_generator("v" + std::to_string(i));
  }
  for (int i = 1; i <= lay.num_fibers; ++i) p.add_generator("c" + std::to_string(i));
  for (int i = 1; i <= d.boundary_count; ++i) p.add_generator("d" + std::to_string(i));
  const int h = p.add_generator("h");

  // Fiber behaviour of the base generators.
  if (d.base_orientable) {
    for (int i = 0; i < lay.num_base; ++i) p.add_relator(commutator(lay.base_gen(i), h));
  } else {
    for (int i = 0; i < lay.num_base; ++i) {
      int v = lay.base_gen(i);
      // v h v^-1 h
      p.add_relator(free_reduce({{v, 1}, {h, 1}, {v, -1}, {h, 1}}));
    }
  }
  for (int i = 0; i < lay.num_fibers; ++i) p.add_relator(commutator(lay.fiber_gen(i), h));
  for (int i = 0; i < d.boundary_count; ++i) p.add_relator(commutator(lay.boundary_gen(i), h));

  // c_i^{p_i} h^{-alpha_i}
  for (int i = 0; i < lay.num_fibers; ++i) {
    const auto& f = d.fibers[static_cast<std::size_t>(i)];
    p.add_relator(free_reduce({{lay.fiber_gen(i), f.p}, {h, -f.alpha}}));
  }

  // Long relator.
  std::vector<Letter> lr;
  if (d.base_orientable) {
    for (int i = 0; i < d.base_genus; ++i) {
      int a = lay.base_gen(2 * i), b = lay.base_gen(2 * i + 1);
      lr.insert(lr.end(), {{a, -1}, {b, -1}, {a, 1}, {b, 1}});
    }
  } else {
    for (int i = 0; i < d.base_genus; ++i) lr.push_back({lay.base_gen(i), 2});
  }
  for (int i = 0; i < lay.num_fibers; ++i) lr.push_back({lay.fiber_gen(i), 1});
  for (int i = 0; i < d.boundary_count; ++i) lr.push_back({lay.boundary_gen(i), 1});
  lr.push_back({h, -d.euler_b});
  p.add_relator(free_reduce(lr));

  return p;
}

bool check_horizontal_cover(int base_euler_char, const std::vector<int>& cone_orders) {
  Rational sum(0);
  for (int a : cone_orders) {
    if (a < 2) throw InputError("cone order must be >= 2");
    sum += Rational(1) - Rational(1, a);
  }
  return Rational(base_euler_char) == sum;
}

std::string HorizontalBase::name() const {
  return crosscaps == 1 ? "RP2" : crosscaps == 2 ? "KleinBottle" : "N" + std::to_string(crosscaps);
}

std::vector<HorizontalBase> horizontal_base_solutions() {
  std::vector<HorizontalBase> out;
  // Closed non-orientable base: chi = 2 - crosscaps, and the identity
  // needs chi >= 0, so only the Klein bottle (chi 0) and the projective
  // plane (chi 1) can occur.
  for (int crosscaps = 2; crosscaps >= 1; --crosscaps) {
    int chi = 2 - crosscaps;

    if (check_horizontal_cover(chi, {})) out.push_back({crosscaps, {}});

    // n = 1: 1 - 1/a is never an integer for a >= 2.
    for (int a = 2; a <= 2 * (chi + 1); ++a)
      if (check_horizontal_cover(chi, {a})) out.push_back({crosscaps, {a}});

    // n = 2: a solution of 1/a1 + 1/a2 = 2 - chi with a1 <= a2 forces
    // 1/a1 >= (2 - chi)/2 and 1/a2 >= (2 - chi) - 1/2, so a1 <= 2 and
    // a2 <= 2 whenever chi <= 1; the scan below is a superset.
    for (int a1 = 2; a1 <= 4; ++a1)
      for (int a2 = a1; a2 <= 2 * a1; ++a2)
        if (check_horizontal_cover(chi, {a1, a2})) out.push_back({crosscaps, {a1, a2}});
  }
  return out;
}

RGroupPieceConditions r_group_piece_conditions(const SeifertData& d) {
  return RGroupPieceConditions{d.num_fibers() >= 1, !d.base_orientable};
}

int base_euler_characteristic(const SeifertData& d) {
  int closed = d.base_orientable ? 2 - 2 * d.base_genus : 2 - d.base_genus;
  return closed - d.boundary_count;
}

Rational orbifold_euler_characteristic(const SeifertData& d) {
  d.validate();
  Rational chi(base_euler_characteristic(d));
  for (const auto& f : d.fibers) chi -= Rational(1) - Rational(1, f.p);
  return chi;
}

bool is_lens_space_shape(const SeifertData& d) {
  return d.base_orientable && d.base_genus == 0 && d.boundary_count == 0 &&
         d.num_fibers() <= 2;
}

bool is_solid_torus_shape(const SeifertData& d) {
  return d.base_orientable && d.base_genus == 0 && d.boundary_count == 1 &&
         d.num_fibers() <= 1;
}

}  // namespace gt2
