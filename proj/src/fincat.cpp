#include "chu/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace chu {

int FinCat::compose(int g, int f) const {
  if (f < 0 || g < 0 || f >= n_arrows() || g >= n_arrows())
    throw std::invalid_argument("compose: arrow out of range");
  if (arrows[f].tgt != arrows[g].src)
    throw std::invalid_argument("compose: arrows not composable");
  int r = comp[g][f];
  if (r < 0) throw std::logic_error("compose: table hole");
  return r;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int i = 0; i < n_arrows(); ++i)
    if (arrows[i].src == a && arrows[i].tgt == b) out.push_back(i);
  return out;
}

std::optional<int> FinCat::inverse_of(int f) const {
  const Arrow& fa = arrows[f];
  for (int g : hom(fa.tgt, fa.src)) {
    if (comp[g][f] == identity[fa.src] && comp[f][g] == identity[fa.tgt]) return g;
  }
  return std::nullopt;
}

std::vector<std::string> FinCat::validate() const {
  std::vector<std::string> bad;
  if (static_cast<int>(identity.size()) != n_objects()) {
    bad.push_back("identity table size mismatch");
    return bad;
  }
  if (static_cast<int>(comp.size()) != n_arrows()) {
    bad.push_back("composition table size mismatch");
    return bad;
  }
  for (const auto& row : comp)
    if (static_cast<int>(row.size()) != n_arrows()) {
      bad.push_back("composition table row size mismatch");
      return bad;
    }
  for (int o = 0; o < n_objects(); ++o) {
    int id = identity[o];
    if (id < 0 || id >= n_arrows() || arrows[id].src != o || arrows[id].tgt != o)
      bad.push_back("identity of object " + objects[o] + " is malformed");
  }
  for (int f = 0; f < n_arrows(); ++f) {
    for (int g = 0; g < n_arrows(); ++g) {
      bool composable = arrows[f].tgt == arrows[g].src;
      int r = comp[g][f];
      if (!composable) {
        if (r != -1) bad.push_back("table entry on non-composable pair");
        continue;
      }
      if (r < 0 || r >= n_arrows()) {
        bad.push_back("missing composite " + arrows[g].name + " o " + arrows[f].name);
        continue;
      }
      if (arrows[r].src != arrows[f].src || arrows[r].tgt != arrows[g].tgt)
        bad.push_back("composite has wrong boundary: " + arrows[g].name + " o " +
                      arrows[f].name);
    }
  }
  if (!bad.empty()) return bad;
  for (int f = 0; f < n_arrows(); ++f) {
    if (comp[f][identity[arrows[f].src]] != f || comp[identity[arrows[f].tgt]][f] != f)
      bad.push_back("identity is not neutral on " + arrows[f].name);
  }
  for (int f = 0; f < n_arrows(); ++f)
    for (int g = 0; g < n_arrows(); ++g) {
      if (arrows[f].tgt != arrows[g].src) continue;
      for (int h = 0; h < n_arrows(); ++h) {
        if (arrows[g].tgt != arrows[h].src) continue;
        if (comp[h][comp[g][f]] != comp[comp[h][g]][f])
          bad.push_back("associativity fails on (" + arrows[h].name + "," +
                        arrows[g].name + "," + arrows[f].name + ")");
      }
    }
  return bad;
}

void FinCat::check_valid() const {
  auto bad = validate();
  if (!bad.empty()) throw std::logic_error("invalid category: " + bad.front());
}

std::vector<std::string> FinFunctor::validate() const {
  std::vector<std::string> bad;
  if (!src || !tgt) return {"functor missing categories"};
  if (static_cast<int>(obj_map.size()) != src->n_objects() ||
      static_cast<int>(arr_map.size()) != src->n_arrows())
    return {"functor table size mismatch"};
  for (int f = 0; f < src->n_arrows(); ++f) {
    const auto& fa = src->arrows[f];
    const auto& ga = tgt->arrows[arr_map[f]];
    if (ga.src != obj_map[fa.src] || ga.tgt != obj_map[fa.tgt])
      bad.push_back("functor breaks boundaries on " + fa.name);
  }
  for (int o = 0; o < src->n_objects(); ++o)
    if (arr_map[src->identity[o]] != tgt->identity[obj_map[o]])
      bad.push_back("functor breaks identity of " + src->objects[o]);
  for (int f = 0; f < src->n_arrows(); ++f)
    for (int g = 0; g < src->n_arrows(); ++g) {
      if (src->arrows[f].tgt != src->arrows[g].src) continue;
      if (arr_map[src->comp[g][f]] != tgt->comp[arr_map[g]][arr_map[f]])
        bad.push_back("functor breaks composition on (" + src->arrows[g].name + "," +
                      src->arrows[f].name + ")");
    }
  return bad;
}

void FinFunctor::check_valid() const {
  auto bad = validate();
  if (!bad.empty()) throw std::logic_error("invalid functor: " + bad.front());
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.src = f.tgt = c;
  f.obj_map.resize(c->n_objects());
  f.arr_map.resize(c->n_arrows());
  for (int i = 0; i < c->n_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->n_arrows(); ++i) f.arr_map[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.tgt != g.src) throw std::invalid_argument("functor composition mismatch");
  FinFunctor out;
  out.src = f.src;
  out.tgt = g.tgt;
  out.obj_map.resize(f.obj_map.size());
  out.arr_map.resize(f.arr_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) out.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.arr_map.size(); ++i) out.arr_map[i] = g.arr_map[f.arr_map[i]];
  return out;
}

bool functors_equal(const FinFunctor& a, const FinFunctor& b) {
  return a.src == b.src && a.tgt == b.tgt && a.obj_map == b.obj_map &&
         a.arr_map == b.arr_map;
}

bool is_fully_faithful(const FinFunctor& f) {
  for (int a = 0; a < f.src->n_objects(); ++a)
    for (int b = 0; b < f.src->n_objects(); ++b) {
      std::vector<int> dom = f.src->hom(a, b);
      std::vector<int> cod = f.tgt->hom(f.obj_map[a], f.obj_map[b]);
      std::set<int> image;
      for (int h : dom) image.insert(f.arr_map[h]);
      if (image.size() != dom.size()) return false;  // not faithful
      if (image.size() != cod.size()) return false;  // not full
    }
  return true;
}

std::vector<std::string> NatTrans::validate() const {
  if (from.src != to.src || from.tgt != to.tgt) return {"nat trans between misaligned functors"};
  if (static_cast<int>(component.size()) != from.src->n_objects())
    return {"component count mismatch"};
  std::vector<std::string> bad;
  const FinCat& c = *from.tgt;
  for (int o = 0; o < from.src->n_objects(); ++o) {
    int comp_arrow = component[o];
    if (comp_arrow < 0 || comp_arrow >= c.n_arrows() ||
        c.arrows[comp_arrow].src != from.obj_map[o] ||
        c.arrows[comp_arrow].tgt != to.obj_map[o])
      bad.push_back("component at " + from.src->objects[o] + " has wrong boundary");
  }
  if (!bad.empty()) return bad;
  for (int f = 0; f < from.src->n_arrows(); ++f) {
    const auto& fa = from.src->arrows[f];
    int lhs = c.compose(to.arr_map[f], component[fa.src]);
    int rhs = c.compose(component[fa.tgt], from.arr_map[f]);
    if (lhs != rhs) bad.push_back("naturality fails at " + fa.name);
  }
  return bad;
}

void NatTrans::check_valid() const {
  auto bad = validate();
  if (!bad.empty()) throw std::logic_error("invalid natural transformation: " + bad.front());
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans n;
  n.from = n.to = f;
  n.component.resize(f.src->n_objects());
  for (int o = 0; o < f.src->n_objects(); ++o)
    n.component[o] = f.tgt->identity[f.obj_map[o]];
  return n;
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& eta) {
  if (eta.from.tgt != h.src) throw std::invalid_argument("whisker_left mismatch");
  NatTrans out;
  out.from = compose_functors(h, eta.from);
  out.to = compose_functors(h, eta.to);
  out.component.resize(eta.component.size());
  for (size_t o = 0; o < eta.component.size(); ++o)
    out.component[o] = h.arr_map[eta.component[o]];
  return out;
}

NatTrans whisker_right(const NatTrans& eta, const FinFunctor& h) {
  if (h.tgt != eta.from.src) throw std::invalid_argument("whisker_right mismatch");
  NatTrans out;
  out.from = compose_functors(eta.from, h);
  out.to = compose_functors(eta.to, h);
  out.component.resize(h.src->n_objects());
  for (int o = 0; o < h.src->n_objects(); ++o)
    out.component[o] = eta.component[h.obj_map[o]];
  return out;
}

NatTrans vcompose(const NatTrans& later, const NatTrans& earlier) {
  if (!functors_equal(earlier.to, later.from))
    throw std::invalid_argument("vertical composition mismatch");
  NatTrans out;
  out.from = earlier.from;
  out.to = later.to;
  out.component.resize(earlier.component.size());
  for (size_t o = 0; o < earlier.component.size(); ++o)
    out.component[o] =
        earlier.from.tgt->compose(later.component[o], earlier.component[o]);
  return out;
}

bool is_iso_nat(const NatTrans& eta) {
  for (int c : eta.component)
    if (!eta.from.tgt->is_iso(c)) return false;
  return true;
}

std::vector<std::string> Adjunction::validate() const {
  std::vector<std::string> bad;
  for (auto& m : left.validate()) bad.push_back("left: " + m);
  for (auto& m : right.validate()) bad.push_back("right: " + m);
  if (left.src != right.tgt || left.tgt != right.src)
    bad.push_back("adjoint pair categories misaligned");
  if (!bad.empty()) return bad;
  if (!functors_equal(unit.from, identity_functor(left.src)) ||
      !functors_equal(unit.to, compose_functors(right, left)))
    bad.push_back("unit boundary mismatch");
  if (!functors_equal(counit.from, compose_functors(left, right)) ||
      !functors_equal(counit.to, identity_functor(left.tgt)))
    bad.push_back("counit boundary mismatch");
  for (auto& m : unit.validate()) bad.push_back("unit: " + m);
  for (auto& m : counit.validate()) bad.push_back("counit: " + m);
  if (!bad.empty()) return bad;
  // triangle identities
  const FinCat& bcat = *left.tgt;
  const FinCat& acat = *left.src;
  for (int a = 0; a < acat.n_objects(); ++a) {
    int t1 = bcat.compose(counit.component[left.obj_map[a]],
                          left.arr_map[unit.component[a]]);
    if (t1 != bcat.identity[left.obj_map[a]])
      bad.push_back("triangle (counit F)(F unit) fails at " + acat.objects[a]);
  }
  for (int b = 0; b < bcat.n_objects(); ++b) {
    int t2 = acat.compose(right.arr_map[counit.component[b]],
                          unit.component[right.obj_map[b]]);
    if (t2 != acat.identity[right.obj_map[b]])
      bad.push_back("triangle (G counit)(unit G) fails at " + bcat.objects[b]);
  }
  return bad;
}

std::vector<std::string> validate_instance(const SituationData& s) {
  std::vector<std::string> bad;
  for (auto& m : s.c->validate()) bad.push_back("C: " + m);
  for (auto& m : s.b->validate()) bad.push_back("B: " + m);
  for (auto& m : s.d->validate()) bad.push_back("D: " + m);
  if (!bad.empty()) return bad;
  for (auto& m : s.i.validate()) bad.push_back("I: " + m);
  for (auto& m : s.j.validate()) bad.push_back("J: " + m);
  for (auto& m : s.s.validate()) bad.push_back("S: " + m);
  for (auto& m : s.t.validate()) bad.push_back("T: " + m);
  if (!bad.empty()) return bad;
  if (!is_fully_faithful(s.i)) bad.push_back("I is not fully faithful");
  if (!is_fully_faithful(s.j)) bad.push_back("J is not fully faithful");
  Adjunction si{s.s, s.i, s.alpha, s.beta};
  for (auto& m : si.validate()) bad.push_back("S -| I: " + m);
  Adjunction jt{s.j, s.t, s.delta, s.eps};
  for (auto& m : jt.validate()) bad.push_back("J -| T: " + m);
  if (!bad.empty()) return bad;
  if (!is_iso_nat(s.beta)) bad.push_back("beta is not an isomorphism");
  if (!is_iso_nat(s.delta)) bad.push_back("delta is not an isomorphism");
  // theorem hypotheses: IS(eps) and JT(alpha) componentwise iso
  FinFunctor is_f = compose_functors(s.i, s.s);
  FinFunctor jt_f = compose_functors(s.j, s.t);
  for (int c = 0; c < s.c->n_objects(); ++c) {
    if (!s.c->is_iso(is_f.arr_map[s.eps.component[c]]))
      bad.push_back("IS(eps) not iso at " + s.c->objects[c]);
    if (!s.c->is_iso(jt_f.arr_map[s.alpha.component[c]]))
      bad.push_back("JT(alpha) not iso at " + s.c->objects[c]);
  }
  return bad;
}

int mu(const SituationData& s, int c_obj, int f) {
  FinFunctor is_f = compose_functors(s.i, s.s);
  const FinCat& c = *s.c;
  int a = s.alpha.component[c_obj];                        // C -> ISC
  int ise = is_f.arr_map[s.eps.component[c_obj]];          // ISJTC -> ISC
  auto inv = c.inverse_of(ise);
  if (!inv) throw std::logic_error("mu: IS(eps) not invertible");
  int isf = is_f.arr_map[f];                               // ISJTC -> ISC'
  return c.compose(isf, c.compose(*inv, a));
}

int nu(const SituationData& s, int c_prime_obj, int g) {
  FinFunctor jt_f = compose_functors(s.j, s.t);
  const FinCat& c = *s.c;
  int jtg = jt_f.arr_map[g];                                   // JTC -> JTISC'
  int jta = jt_f.arr_map[s.alpha.component[c_prime_obj]];      // JTC' -> JTISC'
  auto inv = c.inverse_of(jta);
  if (!inv) throw std::logic_error("nu: JT(alpha) not invertible");
  int e = s.eps.component[c_prime_obj];                        // JTC' -> C'
  return c.compose(e, c.compose(*inv, jtg));
}

TheoremReport check_theorem(const SituationData& s) {
  TheoremReport rep;
  FinFunctor is_f = compose_functors(s.i, s.s);
  FinFunctor jt_f = compose_functors(s.j, s.t);
  const FinCat& c = *s.c;
  for (int x = 0; x < c.n_objects(); ++x) {
    for (int y = 0; y < c.n_objects(); ++y) {
      auto fs = c.hom(jt_f.obj_map[x], y);
      auto gs = c.hom(x, is_f.obj_map[y]);
      if (fs.size() != gs.size()) {
        rep.ok = false;
        rep.failures.push_back("hom sizes differ at (" + c.objects[x] + "," +
                               c.objects[y] + ")");
      }
      for (int f : fs) {
        if (nu(s, y, mu(s, x, f)) != f) {
          rep.ok = false;
          rep.failures.push_back("nu(mu(f)) != f for " + c.arrows[f].name);
        }
      }
      for (int g : gs) {
        if (mu(s, x, nu(s, y, g)) != g) {
          rep.ok = false;
          rep.failures.push_back("mu(nu(g)) != g for " + c.arrows[g].name);
        }
      }
      rep.hom_pairs_checked += static_cast<int>(fs.size() + gs.size());
    }
  }
  return rep;
}

std::vector<std::string> TripleAdjunction::validate() const {
  std::vector<std::string> bad;
  for (auto& m : lf.validate()) bad.push_back("L -| F: " + m);
  for (auto& m : fr.validate()) bad.push_back("F -| R: " + m);
  if (bad.empty() && !functors_equal(lf.right, fr.left))
    bad.push_back("middle functors of the two adjunctions differ");
  return bad;
}

TwoAdjReport check_2adj(const TripleAdjunction& t) {
  TwoAdjReport rep;
  auto bad = t.validate();
  if (!bad.empty()) {
    rep.ok = false;
    rep.detail = bad.front();
    return rep;
  }
  rep.left_ff = is_fully_faithful(t.lf.left);
  rep.right_ff = is_fully_faithful(t.fr.right);
  rep.ok = rep.left_ff == rep.right_ff;
  rep.detail = std::string("ff(L)=") + (rep.left_ff ? "yes" : "no") + " ff(R)=" +
               (rep.right_ff ? "yes" : "no");
  return rep;
}

namespace {

std::optional<int> preimage_arrow(const FinFunctor& f, int src_obj, int tgt_obj,
                                  int arrow_in_tgt) {
  for (int h : f.src->hom(src_obj, tgt_obj))
    if (f.arr_map[h] == arrow_in_tgt) return h;
  return std::nullopt;
}

}  // namespace

CorollaryReport check_corollaries(const SituationData& s) {
  CorollaryReport rep;
  auto fail = [&](std::string m) {
    rep.ok = false;
    rep.failures.push_back(std::move(m));
  };

  FinFunctor jti = compose_functors(s.j, compose_functors(s.t, s.i));
  FinFunctor isj = compose_functors(s.i, compose_functors(s.s, s.j));
  FinFunctor ti = compose_functors(s.t, s.i);
  FinFunctor sj = compose_functors(s.s, s.j);

  // (a) JTI -| S : Hom_C(JTIb, c) <-> Hom_B(b, Sc)
  for (int b = 0; b < s.b->n_objects(); ++b) {
    for (int c = 0; c < s.c->n_objects(); ++c) {
      auto lhs = s.c->hom(jti.obj_map[b], c);
      auto rhs = s.b->hom(b, s.s.obj_map[c]);
      if (lhs.size() != rhs.size())
        fail("JTI -| S hom sizes differ at (" + s.b->objects[b] + "," + s.c->objects[c] + ")");
      for (int f : lhs) {
        int m = mu(s, s.i.obj_map[b], f);  // Ib -> ISc
        auto pre = preimage_arrow(s.i, b, s.s.obj_map[c], m);
        if (!pre) {
          fail("JTI -| S: mu image not in the subcategory");
          continue;
        }
        int back = nu(s, c, s.i.arr_map[*pre]);
        if (back != f) fail("JTI -| S: roundtrip fails on " + s.c->arrows[f].name);
      }
      for (int g : rhs) {
        int n = nu(s, c, s.i.arr_map[g]);  // JTIb -> c
        int m = mu(s, s.i.obj_map[b], n);
        auto pre = preimage_arrow(s.i, b, s.s.obj_map[c], m);
        if (!pre || *pre != g) fail("JTI -| S: reverse roundtrip fails");
      }
    }
  }

  // (b) T -| ISJ : Hom_D(Tc, d) <-> Hom_C(c, ISJd)
  for (int c = 0; c < s.c->n_objects(); ++c) {
    for (int d = 0; d < s.d->n_objects(); ++d) {
      auto lhs = s.d->hom(s.t.obj_map[c], d);
      auto rhs = s.c->hom(c, isj.obj_map[d]);
      if (lhs.size() != rhs.size())
        fail("T -| ISJ hom sizes differ at (" + s.c->objects[c] + "," + s.d->objects[d] + ")");
      for (int f : lhs) {
        int m = mu(s, c, s.j.arr_map[f]);  // c -> ISJd
        int back_n = nu(s, s.j.obj_map[d], m);
        auto back = preimage_arrow(s.j, s.t.obj_map[c], d, back_n);
        if (!back || *back != f) fail("T -| ISJ: roundtrip fails on " + s.d->arrows[f].name);
      }
      for (int g : rhs) {
        int n = nu(s, s.j.obj_map[d], g);  // JTc -> Jd
        auto pre = preimage_arrow(s.j, s.t.obj_map[c], d, n);
        if (!pre) {
          fail("T -| ISJ: nu image not in the subcategory");
          continue;
        }
        if (mu(s, c, s.j.arr_map[*pre]) != g) fail("T -| ISJ: reverse roundtrip fails");
      }
    }
  }

  // (c) JTI and ISJ are fully faithful
  if (!is_fully_faithful(jti)) fail("JTI is not fully faithful");
  if (!is_fully_faithful(isj)) fail("ISJ is not fully faithful");

  // (d) TI -| SJ with iso unit and counit: the adjoint equivalence
  NatTrans unit, counit;
  unit.from = identity_functor(s.b);
  unit.to = compose_functors(sj, ti);
  unit.component.resize(s.b->n_objects());
  bool constructed = true;
  for (int b = 0; b < s.b->n_objects(); ++b) {
    int tib = ti.obj_map[b];
    int id_tib = s.d->identity[tib];
    int m = mu(s, s.i.obj_map[b], s.j.arr_map[id_tib]);  // Ib -> ISJTIb
    auto pre = preimage_arrow(s.i, b, sj.obj_map[tib], m);
    if (!pre) {
      fail("TI -| SJ: unit component escapes B at " + s.b->objects[b]);
      constructed = false;
      break;
    }
    unit.component[b] = *pre;
  }
  counit.from = compose_functors(ti, sj);
  counit.to = identity_functor(s.d);
  counit.component.resize(s.d->n_objects());
  for (int d = 0; d < s.d->n_objects() && constructed; ++d) {
    int sjd = sj.obj_map[d];
    int id_sjd = s.b->identity[sjd];
    int n = nu(s, s.j.obj_map[d], s.i.arr_map[id_sjd]);  // JTISJd -> Jd
    auto pre = preimage_arrow(s.j, ti.obj_map[sjd], d, n);
    if (!pre) {
      fail("TI -| SJ: counit component escapes D at " + s.d->objects[d]);
      constructed = false;
      break;
    }
    counit.component[d] = *pre;
  }
  if (constructed) {
    Adjunction tisj{ti, sj, unit, counit};
    for (auto& m : tisj.validate()) fail("TI -| SJ: " + m);
    if (!is_iso_nat(unit)) fail("TI -| SJ unit is not a componentwise iso");
    if (!is_iso_nat(counit)) fail("TI -| SJ counit is not a componentwise iso");
  }
  return rep;
}

SquareInversion invert_square(const FinCat& cat, int f, int g, int h, int k) {
  // f : A->B, g : B->D, h : A->C, k : C->D with g o f = k o h
  const auto& fa = cat.arrows[f];
  const auto& ga = cat.arrows[g];
  const auto& ha = cat.arrows[h];
  const auto& ka = cat.arrows[k];
  if (fa.src != ha.src || fa.tgt != ga.src || ha.tgt != ka.src || ga.tgt != ka.tgt)
    throw std::invalid_argument("invert_square: boundaries do not form a square");
  if (cat.compose(g, f) != cat.compose(k, h)) throw NotCommuting();
  auto fi = cat.inverse_of(f);
  auto ki = cat.inverse_of(k);
  if (!fi || !ki) throw NotIso();
  SquareInversion out;
  out.f_inv = *fi;
  out.k_inv = *ki;
  out.half_commutes = cat.compose(h, *fi) == cat.compose(*ki, g);
  auto gi = cat.inverse_of(g);
  auto hi = cat.inverse_of(h);
  if (gi && hi) {
    out.g_inv = *gi;
    out.h_inv = *hi;
    out.full_commutes = cat.compose(*fi, *gi) == cat.compose(*hi, *ki);
  }
  return out;
}

TripleAdjunction triple_from_situation(const SituationData& s) {
  FinFunctor jti = compose_functors(s.j, compose_functors(s.t, s.i));
  FinFunctor ti = compose_functors(s.t, s.i);
  FinFunctor sj = compose_functors(s.s, s.j);

  NatTrans unit;  // 1_B -> S(JTI)
  unit.from = identity_functor(s.b);
  unit.to = compose_functors(s.s, jti);
  unit.component.resize(s.b->n_objects());
  for (int b = 0; b < s.b->n_objects(); ++b) {
    int tib = ti.obj_map[b];
    int m = mu(s, s.i.obj_map[b], s.j.arr_map[s.d->identity[tib]]);
    auto pre = preimage_arrow(s.i, b, sj.obj_map[tib], m);
    if (!pre) throw std::logic_error("triple_from_situation: unit escapes B");
    unit.component[b] = *pre;
  }
  NatTrans counit;  // (JTI)S -> 1_C
  counit.from = compose_functors(jti, s.s);
  counit.to = identity_functor(s.c);
  counit.component.resize(s.c->n_objects());
  for (int c = 0; c < s.c->n_objects(); ++c) {
    int isc = compose_functors(s.i, s.s).obj_map[c];
    counit.component[c] = nu(s, c, s.c->identity[isc]);
  }

  TripleAdjunction t;
  t.lf = Adjunction{jti, s.s, unit, counit};
  t.fr = Adjunction{s.s, s.i, s.alpha, s.beta};
  t.name = s.name + ":JTI-|S-|I";
  auto bad = t.validate();
  if (!bad.empty())
    throw std::logic_error("triple_from_situation: " + bad.front());
  return t;
}

namespace {

// Builds the composition table from a name-level composition rule.
CatPtr build_cat(std::vector<std::string> objects,
                 std::vector<FinCat::Arrow> arrows,
                 const std::function<std::string(const std::string&, const std::string&)>& rule,
                 std::vector<std::string> identities) {
  auto cat = std::make_shared<FinCat>();
  cat->objects = std::move(objects);
  cat->arrows = std::move(arrows);
  std::map<std::string, int> by_name;
  for (int i = 0; i < cat->n_arrows(); ++i) by_name[cat->arrows[i].name] = i;
  cat->identity.resize(cat->n_objects());
  for (int o = 0; o < cat->n_objects(); ++o) cat->identity[o] = by_name.at(identities[o]);
  cat->comp.assign(cat->n_arrows(), std::vector<int>(cat->n_arrows(), -1));
  for (int f = 0; f < cat->n_arrows(); ++f)
    for (int g = 0; g < cat->n_arrows(); ++g) {
      if (cat->arrows[f].tgt != cat->arrows[g].src) continue;
      cat->comp[g][f] = by_name.at(rule(cat->arrows[g].name, cat->arrows[f].name));
    }
  cat->check_valid();
  return cat;
}

CatPtr one_object_cat(const std::string& obj, const std::string& id_name) {
  return build_cat({obj}, {{0, 0, id_name}},
                   [&](const std::string&, const std::string&) { return id_name; },
                   {id_name});
}

}  // namespace

SituationData situation_trivial() {
  CatPtr c = one_object_cat("*", "id");
  SituationData s;
  s.c = c;
  s.b = c;
  s.d = c;
  s.i = identity_functor(c);
  s.j = identity_functor(c);
  s.s = identity_functor(c);
  s.t = identity_functor(c);
  s.alpha = identity_nat(s.i);
  s.beta = identity_nat(s.i);
  s.delta = identity_nat(s.j);
  s.eps = identity_nat(s.j);
  s.name = "trivial";
  auto bad = validate_instance(s);
  if (!bad.empty()) throw std::logic_error("situation_trivial: " + bad.front());
  return s;
}

SituationData situation_poset2() {
  // the 2-chain 0 <= 1; B = {1} reflective, D = {0} coreflective
  auto rule = [](const std::string& g, const std::string& f) -> std::string {
    if (f.rfind("id", 0) == 0) return g;
    if (g.rfind("id", 0) == 0) return f;
    throw std::logic_error("poset2: unexpected composite");
  };
  CatPtr c = build_cat({"0", "1"},
                       {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "a"}},
                       rule, {"id0", "id1"});
  CatPtr b = one_object_cat("1", "id1");
  CatPtr d = one_object_cat("0", "id0");

  SituationData s;
  s.c = c;
  s.b = b;
  s.d = d;
  s.i = FinFunctor{b, c, {1}, {1}};
  s.j = FinFunctor{d, c, {0}, {0}};
  s.s = FinFunctor{c, b, {0, 0}, {0, 0, 0}};
  s.t = FinFunctor{c, d, {0, 0}, {0, 0, 0}};
  s.alpha = NatTrans{identity_functor(c), compose_functors(s.i, s.s), {2, 1}};
  s.beta = NatTrans{compose_functors(s.s, s.i), identity_functor(b), {0}};
  s.delta = NatTrans{identity_functor(d), compose_functors(s.t, s.j), {0}};
  s.eps = NatTrans{compose_functors(s.j, s.t), identity_functor(c), {0, 2}};
  s.name = "poset2";
  auto bad = validate_instance(s);
  if (!bad.empty()) throw std::logic_error("situation_poset2: " + bad.front());
  return s;
}

namespace {

// Traversal words over e : X->X, u : X->Y, v : Y->X modulo
// ee = e, uv = empty (at X), vu = empty (at Y).
std::string reduce_word(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      std::string two = w.substr(i, 2);
      if (two == "ee") {
        w.erase(i, 1);
        changed = true;
        break;
      }
      if (two == "uv" || two == "vu") {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

SituationData situation_nonthin() {
  // two isomorphic objects X ~= Y, an idempotent e on X, and its transport
  // uev to Y; Hom(X,Y) = {u, ue} is a genuine parallel pair
  struct W {
    std::string word;  // traversal order: leftmost letter applies first
    int src, tgt;
    std::string name;
  };
  std::vector<W> words = {
      {"", 0, 0, "id_X"},   {"e", 0, 0, "e"},    {"u", 0, 1, "u"},
      {"eu", 0, 1, "ue"},   {"v", 1, 0, "v"},    {"ve", 1, 0, "ev"},
      {"", 1, 1, "id_Y"},   {"veu", 1, 1, "uev"}};
  auto find_name = [&](int src, int tgt, const std::string& word) -> std::string {
    for (const auto& w : words)
      if (w.src == src && w.tgt == tgt && w.word == word) return w.name;
    throw std::logic_error("nonthin: word not in normal form table: " + word);
  };
  auto word_of = [&](const std::string& name) -> const W& {
    for (const auto& w : words)
      if (w.name == name) return w;
    throw std::logic_error("nonthin: unknown arrow " + name);
  };
  auto rule = [&](const std::string& g, const std::string& f) -> std::string {
    const W& wf = word_of(f);
    const W& wg = word_of(g);
    return find_name(wf.src, wg.tgt, reduce_word(wf.word + wg.word));
  };
  std::vector<FinCat::Arrow> arrows;
  for (const auto& w : words) arrows.push_back({w.src, w.tgt, w.name});
  CatPtr c = build_cat({"X", "Y"}, arrows, rule, {"id_X", "id_Y"});

  CatPtr b = build_cat({"X"}, {{0, 0, "id_X"}, {0, 0, "e"}},
                       [](const std::string& g, const std::string& f) {
                         return (f == "e" || g == "e") ? "e" : "id_X";
                       },
                       {"id_X"});
  CatPtr d = build_cat({"Y"}, {{0, 0, "id_Y"}, {0, 0, "uev"}},
                       [](const std::string& g, const std::string& f) {
                         return (f == "uev" || g == "uev") ? "uev" : "id_Y";
                       },
                       {"id_Y"});

  auto c_index = [&](const std::string& name) {
    for (int i = 0; i < c->n_arrows(); ++i)
      if (c->arrows[i].name == name) return i;
    throw std::logic_error("nonthin: missing arrow " + name);
  };

  // conjugation by the iso u/v, pushed through the word calculus
  auto functor_by_words = [&](int target_obj, const std::string& pre_x,
                              const std::string& pre_y, const std::string& post_x,
                              const std::string& post_y, CatPtr tgt_cat,
                              auto&& arrow_to_tgt) {
    FinFunctor f;
    f.src = c;
    f.tgt = tgt_cat;
    f.obj_map = {target_obj, target_obj};
    f.arr_map.resize(c->n_arrows());
    for (int a = 0; a < c->n_arrows(); ++a) {
      const W& w = word_of(c->arrows[a].name);
      const std::string& pre = w.src == 0 ? pre_x : pre_y;
      const std::string& post = w.tgt == 0 ? post_x : post_y;
      f.arr_map[a] = arrow_to_tgt(reduce_word(pre + w.word + post));
    }
    return f;
  };

  FinFunctor s_f = functor_by_words(
      0, /*pre_x=*/"", /*pre_y=*/"u", /*post_x=*/"", /*post_y=*/"v", b,
      [&](const std::string& word) { return word == "e" ? 1 : 0; });
  FinFunctor t_f = functor_by_words(
      0, /*pre_x=*/"v", /*pre_y=*/"", /*post_x=*/"u", /*post_y=*/"", d,
      [&](const std::string& word) { return word == "veu" ? 1 : 0; });

  SituationData s;
  s.c = c;
  s.b = b;
  s.d = d;
  s.i = FinFunctor{b, c, {0}, {c_index("id_X"), c_index("e")}};
  s.j = FinFunctor{d, c, {1}, {c_index("id_Y"), c_index("uev")}};
  s.s = s_f;
  s.t = t_f;
  s.alpha = NatTrans{identity_functor(c), compose_functors(s.i, s.s),
                     {c_index("id_X"), c_index("v")}};
  s.beta = NatTrans{compose_functors(s.s, s.i), identity_functor(b), {0}};
  s.delta = NatTrans{identity_functor(d), compose_functors(s.t, s.j), {0}};
  s.eps = NatTrans{compose_functors(s.j, s.t), identity_functor(c),
                   {c_index("v"), c_index("id_Y")}};
  s.name = "nonthin";
  auto bad = validate_instance(s);
  if (!bad.empty()) throw std::logic_error("situation_nonthin: " + bad.front());
  return s;
}

TripleAdjunction triple_identity() {
  CatPtr c = one_object_cat("*", "id");
  FinFunctor id = identity_functor(c);
  TripleAdjunction t;
  t.lf = Adjunction{id, id, identity_nat(id), identity_nat(id)};
  t.fr = Adjunction{id, id, identity_nat(id), identity_nat(id)};
  t.name = "identity";
  auto bad = t.validate();
  if (!bad.empty()) throw std::logic_error("triple_identity: " + bad.front());
  return t;
}

TripleAdjunction triple_zero_object() {
  CatPtr a = one_object_cat("*", "id*");
  // small enough to write the table directly
  auto b = std::make_shared<FinCat>();
  b->objects = {"z", "w"};
  b->arrows = {{0, 0, "id_z"}, {1, 1, "id_w"}, {0, 1, "i"}, {1, 0, "p"}, {1, 1, "ip"}};
  b->identity = {0, 1};
  b->comp.assign(5, std::vector<int>(5, -1));
  auto set = [&](int g, int f, int r) { b->comp[g][f] = r; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);   // i o id_z
  set(1, 2, 2);   // id_w o i
  set(3, 1, 3);   // p o id_w
  set(0, 3, 3);   // id_z o p
  set(4, 1, 4);   // ip o id_w
  set(1, 4, 4);   // id_w o ip
  set(3, 2, 0);   // p o i = id_z
  set(2, 3, 4);   // i o p = ip
  set(4, 4, 4);   // ip o ip
  set(4, 2, 2);   // ip o i = i
  set(3, 4, 3);   // p o ip = p
  b->check_valid();
  CatPtr bp = b;

  FinFunctor f{a, bp, {0}, {0}};
  FinFunctor l{bp, a, {0, 0}, {0, 0, 0, 0, 0}};
  FinFunctor r = l;

  NatTrans lf_unit{identity_functor(bp), compose_functors(f, l), {0, 3}};
  NatTrans lf_counit{compose_functors(l, f), identity_functor(a), {0}};
  NatTrans fr_unit{identity_functor(a), compose_functors(r, f), {0}};
  NatTrans fr_counit{compose_functors(f, r), identity_functor(bp), {0, 2}};

  TripleAdjunction t;
  t.lf = Adjunction{l, f, lf_unit, lf_counit};
  t.fr = Adjunction{f, r, fr_unit, fr_counit};
  t.name = "zero-object";
  auto bad = t.validate();
  if (!bad.empty()) throw std::logic_error("triple_zero_object: " + bad.front());
  return t;
}

}  // namespace chu
