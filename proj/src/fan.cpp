#include "vgit/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vgit/linalg.hpp"

namespace vgit {

namespace {

// Side of a hyperplane a full-dimensional region lies on: +1 / -1 when the
// region is contained in the closed halfspace, 0 when the normal genuinely
// cuts it.
int region_side(const Cone& region, const RatVec& h) {
  for (const RatVec& l : region.lineality())
    if (sgn(dot(h, l)) != 0) return 0;
  bool pos = false, neg = false;
  for (const RatVec& r : region.rays()) {
    int s = sgn(dot(h, r));
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && neg) return 0;
  if (neg) return -1;
  return 1;  // also for regions contained in the hyperplane
}

Cone cut_halfspace(const Cone& region, const RatVec& h) {
  std::vector<RatVec> ineqs = region.facets();
  ineqs.push_back(h);
  return cone_from_inequalities(ineqs, region.span_equations(),
                                region.ambient_dim());
}

Character sample_character(const Cone& C) {
  return int_vec(C.relint_point());
}

struct ClassKeyLess {
  bool operator()(const GitClass& a, const GitClass& b) const {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() > b.cone.dim();
    return canonical_key(a.cone) < canonical_key(b.cone);
  }
};

}  // namespace

const GitClass* GitFan::class_of(const Character& theta) const {
  for (const GitClass& c : chambers)
    if (contains(c.cone, rat_vec(theta), Containment::Relint)) return &c;
  for (const GitClass& c : walls)
    if (contains(c.cone, rat_vec(theta), Containment::Relint)) return &c;
  return nullptr;
}

std::vector<const GitClass*> GitFan::all_classes() const {
  std::vector<const GitClass*> out;
  for (const GitClass& c : chambers) out.push_back(&c);
  for (const GitClass& c : walls) out.push_back(&c);
  return out;
}

GitFan git_fan(const ChargeMatrix& charge, int cap) {
  if (charge.coord_count() > cap)
    throw SizeCapError("git_fan: n = " + std::to_string(charge.coord_count()) +
                       " exceeds enumeration cap " + std::to_string(cap));
  const Index k = charge.torus_rank();
  const Index n = charge.coord_count();

  GitFan fan{charge, effective_cone(charge), {}, {}};
  const Cone& E = fan.effective;
  const Index edim = E.dim();
  std::vector<RatVec> espan = kernel_basis(E.span_equations(), k);

  auto vanishes_on_span = [&espan](const RatVec& h) {
    for (const RatVec& b : espan)
      if (sgn(dot(h, b)) != 0) return false;
    return true;
  };

  // Hyperplane arrangement: facet normals of full-dimensional weight cones;
  // for weight cones of lower dimension, the hyperplanes cutting out their
  // span, so that no region interior meets a degenerate weight cone.
  std::set<std::string> seen_normals;
  std::vector<RatVec> normals;
  auto add_normal = [&](const RatVec& h) {
    RatVec c = primitive_signed(h);
    if (is_zero(c) || vanishes_on_span(c)) return;
    std::string key = to_string(c);
    if (seen_normals.insert(key).second) normals.push_back(std::move(c));
  };
  for (std::uint32_t m = 1; m < (std::uint32_t(1) << n); ++m) {
    Cone K = weight_cone(charge, Support{m});
    if (K.dim() == edim) {
      for (const RatVec& f : K.facets()) add_normal(f);
    } else {
      for (const RatVec& e : K.span_equations()) add_normal(e);
    }
  }

  // Slice the effective cone into full-dimensional regions.
  std::vector<Cone> regions{E};
  for (const RatVec& h : normals) {
    std::vector<Cone> next;
    for (const Cone& P : regions) {
      int side = region_side(P, h);
      if (side != 0) {
        next.push_back(P);
        continue;
      }
      Cone plus = cut_halfspace(P, h);
      Cone minus = cut_halfspace(P, RatVec(-h));
      if (plus.dim() == edim) next.push_back(std::move(plus));
      if (minus.dim() == edim) next.push_back(std::move(minus));
    }
    regions = std::move(next);
  }

  // One chamber per region; regions may subdivide a chamber, so dedupe.
  std::set<std::string> chamber_keys;
  std::vector<GitClass> chambers;
  for (const Cone& P : regions) {
    Character theta = sample_character(P);
    SupportFamily fam = semistable_supports(charge, theta, cap);
    Cone C = c_cone(charge, theta, cap);
    if (C.dim() != edim)
      throw std::logic_error("git_fan: region sample gave a thin class");
    if (chamber_keys.insert(canonical_key(C)).second)
      chambers.push_back(GitClass{std::move(C), std::move(fam)});
  }

  // Lower-dimensional classes live on chamber faces. Faces are determined
  // by their sets of incident rays, which form the meet-closure of the
  // facet incidence masks.
  std::set<std::string> wall_keys;
  std::vector<GitClass> walls;
  using RayMask = std::vector<std::uint64_t>;
  for (const GitClass& ch : chambers) {
    const auto& rays = ch.cone.rays();
    const size_t blocks = rays.size() / 64 + 1;
    std::vector<RayMask> facet_masks;
    for (const RatVec& f : ch.cone.facets()) {
      RayMask m(blocks, 0);
      for (size_t r = 0; r < rays.size(); ++r)
        if (sgn(dot(f, rays[r])) == 0) m[r / 64] |= std::uint64_t(1) << (r % 64);
      facet_masks.push_back(std::move(m));
    }
    RayMask all(blocks, 0);
    for (size_t r = 0; r < rays.size(); ++r)
      all[r / 64] |= std::uint64_t(1) << (r % 64);
    std::set<RayMask> face_masks{all};
    std::vector<RayMask> queue{all};
    while (!queue.empty()) {
      RayMask m = queue.back();
      queue.pop_back();
      for (const RayMask& fm : facet_masks) {
        RayMask mm(blocks);
        for (size_t b = 0; b < blocks; ++b) mm[b] = m[b] & fm[b];
        if (face_masks.insert(mm).second) queue.push_back(std::move(mm));
      }
    }
    face_masks.erase(all);  // the chamber itself
    for (const RayMask& m : face_masks) {
      std::vector<RatVec> gens;
      for (size_t r = 0; r < rays.size(); ++r)
        if ((m[r / 64] >> (r % 64)) & 1) gens.push_back(rays[r]);
      Cone face = make_cone(gens, ch.cone.lineality(), k);
      Character theta = sample_character(face);
      SupportFamily fam = semistable_supports(charge, theta, cap);
      Cone C = c_cone(charge, theta, cap);
      if (C.dim() == edim)
        throw std::logic_error("git_fan: face sample gave a full class");
      std::string key = canonical_key(C);
      if (!wall_keys.contains(key) && !chamber_keys.contains(key)) {
        wall_keys.insert(key);
        walls.push_back(GitClass{std::move(C), std::move(fam)});
      }
    }
  }

  std::sort(chambers.begin(), chambers.end(), ClassKeyLess{});
  std::sort(walls.begin(), walls.end(), ClassKeyLess{});
  fan.chambers = std::move(chambers);
  fan.walls = std::move(walls);
  return fan;
}

}  // namespace vgit
