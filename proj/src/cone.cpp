#include "vgit/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "vgit/linalg.hpp"

namespace vgit {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(size_t nbits) { return Mask((nbits + 63) / 64, 0); }

void set_bit(Mask& m, size_t i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }

Mask mask_and(const Mask& a, const Mask& b) {
  Mask r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool mask_subset(const Mask& a, const Mask& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

struct DDRay {
  RatVec v;
  Mask zero;  // processed halfspaces tight at this ray
};

struct DDResult {
  std::vector<RatVec> rays;
  std::vector<RatVec> lineality;
};

// Incremental double description: extreme rays and lineality basis of
// {x : h.x >= 0 for all h in rows}. Representatives are primitive but not
// otherwise canonicalized.
DDResult double_description(std::vector<RatVec> rows, Index d) {
  // Primitive and deduplicated halfspaces keep the arithmetic small.
  for (RatVec& h : rows) h = primitive(h);
  std::vector<RatVec> kept;
  for (const RatVec& h : rows) {
    if (is_zero(h)) continue;
    bool dup = false;
    for (const RatVec& g : kept)
      if (compare(g, h) == 0) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(h);
  }
  rows = std::move(kept);

  std::vector<RatVec> lin;
  for (Index i = 0; i < d; ++i) {
    RatVec e = RatVec::Zero(d);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<DDRay> rays;
  const size_t total = rows.size();

  for (size_t idx = 0; idx < total; ++idx) {
    const RatVec& h = rows[idx];

    // If the current lineality is not contained in the hyperplane, one
    // lineality direction becomes a ray and the rest are folded into h-perp.
    Index b0 = -1;
    for (size_t i = 0; i < lin.size(); ++i) {
      if (sgn(dot(h, lin[i])) != 0) {
        b0 = static_cast<Index>(i);
        break;
      }
    }
    if (b0 >= 0) {
      RatVec bb = lin[b0];
      Rational s0 = dot(h, bb);
      if (sgn(s0) < 0) {
        bb = -bb;
        s0 = -s0;
      }
      std::vector<RatVec> nlin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<Index>(i) == b0) continue;
        Rational t = dot(h, lin[i]) / s0;
        nlin.push_back(primitive(lin[i] - t * bb));
      }
      for (DDRay& r : rays) {
        Rational t = dot(h, r.v) / s0;
        r.v = primitive(r.v - t * bb);
        set_bit(r.zero, idx);  // adjusted rays are tight at h
      }
      DDRay nr{primitive(bb), make_mask(total)};
      for (size_t j = 0; j < idx; ++j) set_bit(nr.zero, j);
      rays.push_back(std::move(nr));
      lin = std::move(nlin);
      continue;
    }

    std::vector<size_t> pos, zer, neg;
    std::vector<Rational> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zer.push_back(i);
    }
    if (neg.empty()) {
      for (size_t i : zer) set_bit(rays[i].zero, idx);
      continue;
    }

    std::vector<DDRay> combos;
    for (size_t p : pos) {
      for (size_t n : neg) {
        Mask common = mask_and(rays[p].zero, rays[n].zero);
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (mask_subset(common, rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec w = primitive(val[p] * rays[n].v - val[n] * rays[p].v);
        if (is_zero(w)) throw std::logic_error("dd: zero combination");
        set_bit(common, idx);
        combos.push_back(DDRay{std::move(w), std::move(common)});
      }
    }
    std::vector<DDRay> next;
    for (size_t i : pos) next.push_back(std::move(rays[i]));
    for (size_t i : zer) {
      set_bit(rays[i].zero, idx);
      next.push_back(std::move(rays[i]));
    }
    for (DDRay& c : combos) next.push_back(std::move(c));
    rays = std::move(next);
  }

  DDResult out;
  for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

void check_dims(const std::vector<RatVec>& vs, Index d, const char* what) {
  for (const RatVec& v : vs)
    if (v.size() != d)
      throw DimensionError(std::string(what) + ": vector of length " +
                           std::to_string(v.size()) + " in ambient dimension " +
                           std::to_string(d));
}

std::vector<RatVec> sorted(std::vector<RatVec> vs) {
  std::sort(vs.begin(), vs.end(), [](const RatVec& a, const RatVec& b) {
    return lex_less(a, b);
  });
  return vs;
}

}  // namespace

std::vector<RatVec> Cone::inequalities() const {
  std::vector<RatVec> out = facets_;
  for (const RatVec& e : equations_) {
    out.push_back(e);
    out.push_back(-e);
  }
  return sorted(std::move(out));
}

RatVec Cone::relint_point() const {
  RatVec p = RatVec::Zero(ambient_dim_);
  for (const RatVec& r : rays_) p += r;
  return p;
}

Cone make_cone(const std::vector<RatVec>& generators,
               const std::vector<RatVec>& lineality_gens, Index ambient_dim) {
  if (ambient_dim < 1) throw DimensionError("make_cone: ambient_dim < 1");
  check_dims(generators, ambient_dim, "make_cone");
  check_dims(lineality_gens, ambient_dim, "make_cone");

  // Dual side first: the dual cone {f : f.g >= 0, f.l = 0} yields the facet
  // normals (its extreme rays) and the span equations (its lineality).
  std::vector<RatVec> dual_rows;
  for (const RatVec& g : generators)
    if (!is_zero(g)) dual_rows.push_back(g);
  for (const RatVec& l : lineality_gens) {
    if (is_zero(l)) continue;
    dual_rows.push_back(l);
    dual_rows.push_back(-l);
  }
  DDResult dual = double_description(dual_rows, ambient_dim);

  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.equations_ = rref_rows(dual.lineality, ambient_dim);
  std::vector<RatVec> span = kernel_basis(c.equations_, ambient_dim);
  std::vector<RatVec> fac;
  for (const RatVec& r : dual.rays) {
    RatVec f = primitive(c.equations_.empty() ? r
                                              : project_onto_rowspan(r, span));
    if (is_zero(f)) throw std::logic_error("make_cone: null facet normal");
    fac.push_back(std::move(f));
  }
  c.facets_ = sorted(std::move(fac));

  // Primal side from the canonical halfspace description.
  std::vector<RatVec> primal_rows = c.facets_;
  for (const RatVec& e : c.equations_) {
    primal_rows.push_back(e);
    primal_rows.push_back(-e);
  }
  DDResult primal = double_description(primal_rows, ambient_dim);
  c.lineality_ = rref_rows(primal.lineality, ambient_dim);
  std::vector<RatVec> rr;
  for (const RatVec& r : primal.rays) {
    RatVec v = primitive(
        c.lineality_.empty()
            ? r
            : RatVec(r - project_onto_rowspan(r, c.lineality_)));
    if (is_zero(v)) throw std::logic_error("make_cone: null extreme ray");
    rr.push_back(std::move(v));
  }
  c.rays_ = sorted(std::move(rr));
  return c;
}

Cone cone_from_inequalities(const std::vector<RatVec>& ineqs,
                            const std::vector<RatVec>& equations,
                            Index ambient_dim) {
  if (ambient_dim < 1)
    throw DimensionError("cone_from_inequalities: ambient_dim < 1");
  check_dims(ineqs, ambient_dim, "cone_from_inequalities");
  check_dims(equations, ambient_dim, "cone_from_inequalities");
  std::vector<RatVec> rows = ineqs;
  for (const RatVec& e : equations) {
    rows.push_back(e);
    rows.push_back(-e);
  }
  DDResult gen = double_description(rows, ambient_dim);
  return make_cone(gen.rays, gen.lineality, ambient_dim);
}

Cone dual_cone(const Cone& C) {
  return make_cone(C.facets(), C.span_equations(), C.ambient_dim());
}

Cone intersect(const Cone& A, const Cone& B) {
  if (A.ambient_dim() != B.ambient_dim())
    throw DimensionError("intersect: ambient dimensions differ");
  std::vector<RatVec> ineqs = A.facets();
  ineqs.insert(ineqs.end(), B.facets().begin(), B.facets().end());
  std::vector<RatVec> eqs = A.span_equations();
  eqs.insert(eqs.end(), B.span_equations().begin(), B.span_equations().end());
  return cone_from_inequalities(ineqs, eqs, A.ambient_dim());
}

Cone conic_hull(const std::vector<Cone>& cones) {
  if (cones.empty())
    throw Error("conic_hull: empty list (ambient dimension unknown)");
  Index d = cones.front().ambient_dim();
  std::vector<RatVec> gens, lins;
  for (const Cone& c : cones) {
    if (c.ambient_dim() != d)
      throw DimensionError("conic_hull: ambient dimensions differ");
    gens.insert(gens.end(), c.rays().begin(), c.rays().end());
    lins.insert(lins.end(), c.lineality().begin(), c.lineality().end());
  }
  return make_cone(gens, lins, d);
}

bool contains(const Cone& C, const RatVec& v, Containment mode) {
  if (v.size() != C.ambient_dim())
    throw DimensionError("contains: vector length mismatch");
  for (const RatVec& e : C.span_equations())
    if (sgn(dot(e, v)) != 0) return false;
  for (const RatVec& f : C.facets()) {
    int s = sgn(dot(f, v));
    if (s < 0) return false;
    if (mode == Containment::Relint && s == 0) return false;
  }
  return true;
}

bool cones_equal(const Cone& A, const Cone& B) {
  if (A.ambient_dim() != B.ambient_dim())
    throw DimensionError("cones_equal: ambient dimensions differ");
  return A == B;
}

bool is_subset(const Cone& A, const Cone& B) {
  for (const RatVec& r : A.rays())
    if (!contains(B, r, Containment::Boundary)) return false;
  for (const RatVec& l : A.lineality()) {
    if (!contains(B, l, Containment::Boundary)) return false;
    if (!contains(B, RatVec(-l), Containment::Boundary)) return false;
  }
  return true;
}

std::string canonical_key(const Cone& C) {
  std::string key = "d" + std::to_string(C.ambient_dim());
  auto append = [&key](const char* tag, const std::vector<RatVec>& vs) {
    key += tag;
    for (const RatVec& v : vs) key += to_string(v);
  };
  append("|r", C.rays());
  append("|l", C.lineality());
  append("|f", C.facets());
  append("|e", C.span_equations());
  return key;
}

}  // namespace vgit
