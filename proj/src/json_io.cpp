#include "chu/json_io.hpp"

namespace chu {

namespace {

json entries_json(const Matrix& m) {
  json a = json::array();
  for (i64 v : m.entries()) a.push_back(v);
  return a;
}

Matrix matrix_from_entries(FieldSpec f, int rows, int cols, const json& entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j].get<i64>());
  return m;
}

}  // namespace

json to_json(const Matrix& m) {
  return json{{"p", m.field().p},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", entries_json(m)}};
}

Matrix matrix_from_json(const json& j) {
  FieldSpec f(j.at("p").get<i64>());
  return matrix_from_entries(f, j.at("rows").get<int>(), j.at("cols").get<int>(),
                             j.at("entries"));
}

json to_json(const ChuObject& o) {
  return json{{"p", o.field.p},
              {"dimA", o.dim_a},
              {"dimX", o.dim_x},
              {"P", entries_json(o.pairing)}};
}

ChuObject chu_from_json(const json& j) {
  FieldSpec f(j.at("p").get<i64>());
  int a = j.at("dimA").get<int>();
  int x = j.at("dimX").get<int>();
  return {f, a, x, matrix_from_entries(f, a, x, j.at("P"))};
}

json to_json(const ChuMorphism& m) {
  return json{{"source", to_json(m.source)},
              {"target", to_json(m.target)},
              {"F", entries_json(m.f)},
              {"G", entries_json(m.g)}};
}

ChuMorphism chu_morphism_from_json(const json& j) {
  ChuObject s = chu_from_json(j.at("source"));
  ChuObject t = chu_from_json(j.at("target"));
  Matrix f = matrix_from_entries(s.field, t.dim_a, s.dim_a, j.at("F"));
  Matrix g = matrix_from_entries(s.field, s.dim_x, t.dim_x, j.at("G"));
  return {s, t, f, g};
}

json to_json(const PresentedSpace& v) {
  json basis = json::array();
  for (int r = 0; r < v.sub.dim(); ++r) {
    json row = json::array();
    for (i64 x : v.sub.basis().row(r)) row.push_back(x);
    basis.push_back(row);
  }
  return json{{"p", v.field.p}, {"factors", v.factors}, {"basis", basis}};
}

PresentedSpace presented_from_json(const json& j) {
  FieldSpec f(j.at("p").get<i64>());
  std::vector<int> factors = j.at("factors").get<std::vector<int>>();
  std::vector<Vec> gens;
  for (const auto& row : j.at("basis")) gens.push_back(row.get<Vec>());
  return make_presented(f, factors, gens);
}

json to_json(const NilModule& m) {
  return json{{"p", m.ring.k.p},
              {"n", m.ring.n},
              {"dim", m.dim},
              {"X", entries_json(m.x_action)}};
}

NilModule nilmodule_from_json(const json& j) {
  RingSpec ring(FieldSpec(j.at("p").get<i64>()), j.at("n").get<int>());
  int d = j.at("dim").get<int>();
  return make_module(ring, matrix_from_entries(ring.k, d, d, j.at("X")));
}

json to_json(const ChuKObject& o) {
  json p = json::array();
  for (const auto& pt : o.p) p.push_back(entries_json(pt));
  return json{{"M", to_json(o.m)}, {"N", to_json(o.n_mod)}, {"P", p}};
}

ChuKObject chuk_from_json(const json& j) {
  NilModule m = nilmodule_from_json(j.at("M"));
  NilModule n = nilmodule_from_json(j.at("N"));
  std::vector<Matrix> p;
  for (const auto& pt : j.at("P"))
    p.push_back(matrix_from_entries(m.ring.k, m.dim, n.dim, pt));
  ChuKObject o{m, n, p};
  chuK_validate(o);
  return o;
}

json to_json(const Counterexample& c) {
  json objs = json::array();
  for (const auto& o : c.objects) objs.push_back(to_json(o));
  return json{{"law", law_name(c.law)},
              {"trial", c.trial},
              {"objects", objs},
              {"detail", c.detail}};
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample c;
  c.law = law_from_name(j.at("law").get<std::string>());
  c.trial = j.value("trial", 0);
  for (const auto& o : j.at("objects")) c.objects.push_back(chu_from_json(o));
  c.detail = j.value("detail", "");
  return c;
}

json to_json(const LawReport& r) {
  json failures = json::array();
  for (const auto& c : r.failures) failures.push_back(to_json(c));
  return json{{"law", law_name(r.law)},
              {"trials", r.trials},
              {"failures", failures},
              {"seed", r.seed}};
}

json to_json(const FinCat& c) {
  json arrows = json::array();
  for (int i = 0; i < c.n_arrows(); ++i)
    arrows.push_back(json{{"id", i},
                          {"src", c.arrows[i].src},
                          {"tgt", c.arrows[i].tgt},
                          {"name", c.arrows[i].name}});
  json table = json::array();
  for (int g = 0; g < c.n_arrows(); ++g)
    for (int f = 0; f < c.n_arrows(); ++f)
      if (c.comp[g][f] >= 0) table.push_back(json::array({g, f, c.comp[g][f]}));
  return json{{"objects", c.objects},
              {"arrows", arrows},
              {"identity", c.identity},
              {"composition", table}};
}

CatPtr fincat_from_json(const json& j) {
  auto c = std::make_shared<FinCat>();
  c->objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& a : j.at("arrows"))
    c->arrows.push_back(
        {a.at("src").get<int>(), a.at("tgt").get<int>(), a.at("name").get<std::string>()});
  c->identity = j.at("identity").get<std::vector<int>>();
  c->comp.assign(c->n_arrows(), std::vector<int>(c->n_arrows(), -1));
  for (const auto& t : j.at("composition"))
    c->comp[t[0].get<int>()][t[1].get<int>()] = t[2].get<int>();
  c->check_valid();
  return c;
}

json to_json(const FinFunctor& f) {
  return json{{"obj_map", f.obj_map}, {"arr_map", f.arr_map}};
}

json to_json(const NatTrans& n) { return json{{"component", n.component}}; }

json to_json(const SituationData& s) {
  return json{{"name", s.name},
              {"C", to_json(*s.c)},
              {"B", to_json(*s.b)},
              {"D", to_json(*s.d)},
              {"I", to_json(s.i)},
              {"J", to_json(s.j)},
              {"S", to_json(s.s)},
              {"T", to_json(s.t)},
              {"alpha", to_json(s.alpha)},
              {"beta", to_json(s.beta)},
              {"delta", to_json(s.delta)},
              {"eps", to_json(s.eps)}};
}

SituationData situation_from_json(const json& j) {
  SituationData s;
  s.name = j.value("name", "");
  s.c = fincat_from_json(j.at("C"));
  s.b = fincat_from_json(j.at("B"));
  s.d = fincat_from_json(j.at("D"));
  auto functor = [&](const char* key, CatPtr src, CatPtr tgt) {
    FinFunctor f;
    f.src = src;
    f.tgt = tgt;
    f.obj_map = j.at(key).at("obj_map").get<std::vector<int>>();
    f.arr_map = j.at(key).at("arr_map").get<std::vector<int>>();
    f.check_valid();
    return f;
  };
  s.i = functor("I", s.b, s.c);
  s.j = functor("J", s.d, s.c);
  s.s = functor("S", s.c, s.b);
  s.t = functor("T", s.c, s.d);
  auto nat = [&](const char* key, FinFunctor from, FinFunctor to) {
    NatTrans n;
    n.from = std::move(from);
    n.to = std::move(to);
    n.component = j.at(key).at("component").get<std::vector<int>>();
    n.check_valid();
    return n;
  };
  s.alpha = nat("alpha", identity_functor(s.c), compose_functors(s.i, s.s));
  s.beta = nat("beta", compose_functors(s.s, s.i), identity_functor(s.b));
  s.delta = nat("delta", identity_functor(s.d), compose_functors(s.t, s.j));
  s.eps = nat("eps", compose_functors(s.j, s.t), identity_functor(s.c));
  return s;
}

}  // namespace chu
