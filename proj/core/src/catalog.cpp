#include "collar/catalog.hpp"

#include "collar/algebras.hpp"
#include "collar/octonion.hpp"

#include <algorithm>
#include <regex>

namespace collar {

const char* to_string(ExpectedKind k) {
  switch (k) {
    case ExpectedKind::CertifiedBracketIntersection: return "CertifiedBracketIntersection";
    case ExpectedKind::CertifiedCurvatureBound: return "CertifiedCurvatureBound";
    case ExpectedKind::ViolationWitness: return "ViolationWitness";
    case ExpectedKind::SequenceViolation: return "SequenceViolation";
    case ExpectedKind::SphereAction: return "SphereAction";
    case ExpectedKind::Metadata: return "Metadata";
    case ExpectedKind::Unrealizable: return "Unrealizable";
  }
  return "Unrealizable";
}

namespace {

int so_dim(int n) { return n * (n - 1) / 2; }
int su_dim(int n) { return n * n - 1; }
int sp_dim(int n) { return n * (2 * n + 1); }

ComplexMatrix pad(const ComplexMatrix& a, int n, int offset = 0) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  out.block(offset, offset, a.rows(), a.cols()) = a;
  return out;
}

Subspace realified_span(const std::vector<ComplexMatrix>& gens, int n, int offset = 0) {
  std::vector<Element> els;
  for (const auto& a : gens) els.push_back(Element(complex_to_real(pad(a, n, offset))));
  return Subspace::span(els);
}

ComplexMatrix diag_i_minus_i(int n) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  a(0, 0) = {0.0, 1.0};
  a(1, 1) = {0.0, -1.0};
  return a;
}

Element quat_slot(const Quaternion& q, int slots, int slot) {
  return embed(Element(quat_left(q)), 4 * slots, 4 * slot);
}

Quaternion qi() { return {0.0, 1.0, 0.0, 0.0}; }

Triple make_triple(std::string name, Subspace g, Subspace k, Subspace h) {
  return {std::move(name), std::move(g), std::move(k), std::move(h), std::nullopt};
}

// --- builders --------------------------------------------------------------

Triple spin7_so8(int p) {
  const int n = 9 + p;
  return make_triple("spin7+ < so(8) < so(" + std::to_string(n) + ")", so_block(n, n, 0), so_block(8, n, 0),
                     embed(triality_frame().so7_plus, n, 0));
}

Triple g2_so0(int n) {
  const auto& t = triality_frame();
  return make_triple("g2 < spin7_0 < so(" + std::to_string(n) + ")", so_block(n, n, 0), embed(t.so7_0, n, 0),
                     embed(t.g2, n, 0));
}

Triple g2_spin7_sign(int p, bool plus) {
  const int n = 9 + p;
  const auto& t = triality_frame();
  return make_triple(std::string("g2 < spin7") + (plus ? "+" : "-") + " < so(" + std::to_string(n) + ")",
                     so_block(n, n, 0), embed(plus ? t.so7_plus : t.so7_minus, n, 0), embed(t.g2, n, 0));
}

Triple su3_su4_spin7() {
  return make_triple("su(3) < su(4)=so(6) < so(7)", so_block(7, 7, 0), so_block(6, 7, 0),
                     embed(realization_by_name("su(3)<so(6)").space, 7, 0));
}

Triple sp2_su4_su5() {
  return make_triple("sp(2) < su(4) < su(5)", make_su(5).space, realified_span(su_basis(4), 5),
                     realified_span(sp2_in_su4_basis(), 5));
}

Subspace sp_slots(int p, int total, int first) { return embed(make_sp(p).space, 4 * total, 4 * first); }

Triple sp_rank4(int p) {
  const int n = p + 1;
  return make_triple("sp(" + std::to_string(p) + ") < sp(1)+sp(" + std::to_string(p) + ") < sp(" +
                         std::to_string(n) + ")",
                     make_sp(n).space, sum(sp_slots(1, n, 0), sp_slots(p, n, 1)), sp_slots(p, n, 1));
}

Triple sp_rank3(int p) {
  const int n = p + 1;
  const Subspace circle = Subspace::span({quat_slot(qi(), n, 0)});
  return make_triple("s1.sp(" + std::to_string(p) + ") < sp(1)+sp(" + std::to_string(p) + ") < sp(" +
                         std::to_string(n) + ")",
                     make_sp(n).space, sum(sp_slots(1, n, 0), sp_slots(p, n, 1)), sum(circle, sp_slots(p, n, 1)));
}

Triple g2_so4(bool rank3) {
  const auto& f = g2_octonion_frame();
  Subspace h = rank3 ? sum(f.su2_1, Subspace::span({f.e0})) : f.su2_1;
  return make_triple(rank3 ? "su(2)_1.s1 < so(4) < g2" : "su(2)_1 < so(4) < g2", f.g2, f.so4, std::move(h));
}

Triple sp1_sp2_spn(int p) {
  const int n = p + 2;
  return make_triple("sp(1) < sp(2) < sp(" + std::to_string(n) + ")", make_sp(n).space, sp_slots(2, n, 0),
                     sp_slots(1, n, 1));
}

Triple su3_su4_sun(int p) {
  const int n = p + 4;
  return make_triple("su(3) < su(4) < su(" + std::to_string(n) + ")", make_su(n).space,
                     realified_span(su_basis(4), n), realified_span(su_basis(3), n));
}

Triple sp2_su4_sun(int p) {
  const int n = p + 4;
  return make_triple("sp(2) < su(4) < su(" + std::to_string(n) + ")", make_su(n).space,
                     realified_span(su_basis(4), n), realified_span(sp2_in_su4_basis(), n));
}

Triple t_su2_sun(int p) {
  const int n = p + 2;
  return make_triple("t < su(2) < su(" + std::to_string(n) + ")", make_su(n).space, realified_span(su_basis(2), n),
                     realified_span({diag_i_minus_i(2)}, n));
}

Triple t_su2_so(int p) {
  const int n = p + 4;
  return make_triple("t < su(2) < so(" + std::to_string(n) + ")", so_block(n, n, 0),
                     embed(make_su(2).space, n, 0), embed(Subspace::span({Element(complex_to_real(diag_i_minus_i(2)))}), n, 0));
}

Triple t_su2_g2() {
  std::vector<Element> su2;
  for (const auto& a : su_basis(2)) su2.push_back(su3_to_g2(pad(a, 3)));
  return make_triple("t < su(2)_1 < g2", g2_octonion_frame().g2, Subspace::span(su2),
                     Subspace::span({su3_to_g2(diag_i_minus_i(3))}));
}

Triple g2_diagonal() {
  const auto& f = g2_octonion_frame();
  const int n = 14;
  std::vector<Element> diag;
  for (const auto& x : f.su2_1.elements()) diag.push_back(embed(x, n, 0) + embed(x, n, 7));
  const Subspace h = Subspace::span(diag);
  return make_triple("diag su(2) < diag su(2) + su(2)_3 < g2 + su(2)", sum(embed(f.g2, n, 0), embed(f.su2_1, n, 7)),
                     sum(h, embed(f.su2_3, n, 0)), h);
}

// Transitive sphere actions, realized as h0 ⊂ k0 = g.
Triple sphere_so(int n) {
  const Subspace k = so_block(n + 1, n + 1, 0);
  return make_triple("so(" + std::to_string(n) + ") < so(" + std::to_string(n + 1) + ")", k, k,
                     so_block(n, n + 1, 1));
}

Triple sphere_su(int m) {
  const Subspace k = make_su(m + 1).space;
  return make_triple("su(" + std::to_string(m) + ") < su(" + std::to_string(m + 1) + ")", k, k,
                     realified_span(su_basis(m), m + 1, 1));
}

Triple sphere_sp(int m) {
  const Subspace k = make_sp(m + 1).space;
  return make_triple("sp(" + std::to_string(m) + ") < sp(" + std::to_string(m + 1) + ")", k, k,
                     sp_slots(m, m + 1, 1));
}

Triple sphere_sp_circle(int m) {
  const int n = m + 1;
  const Element circle = quat_right_diag(qi(), n);
  const Subspace k = sum(make_sp(n).space, Subspace::span({circle}));
  const Element fixed = quat_slot(qi(), n, 0) - circle;
  return make_triple("t.sp(" + std::to_string(m) + ") < t.sp(" + std::to_string(n) + ")", k, k,
                     sum(sp_slots(m, n, 1), Subspace::span({fixed})));
}

Triple sphere_g2() {
  const Subspace g = g2_octonion_frame().g2;
  return make_triple("su(3) < g2", g, g, su3_in_g2());
}

Triple sphere_spin7() {
  const auto& t = triality_frame();
  return make_triple("g2 < spin7+", t.so7_plus, t.so7_plus, t.g2);
}

Triple sphere_spin9() {
  const Subspace k = so_block(9, 9, 0);
  Triple t = make_triple("spin7+ < so(9)", k, k, embed(triality_frame().so7_plus, 9, 0));
  t.h1_override = so_block(8, 9, 0);
  return t;
}

// --- table -----------------------------------------------------------------

CatalogEntry entry(std::string id, std::string description, std::string origin, ExpectedKind expected) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.origin = std::move(origin);
  e.expected = expected;
  return e;
}

CatalogEntry realizable(CatalogEntry e, int p_min, int p_max, std::function<Triple(int)> builder,
                        std::function<ExpectedDims(int)> dims) {
  e.realizable = true;
  e.p_min = p_min;
  e.p_max = p_max;
  e.p_default = p_min;
  e.builder = std::move(builder);
  e.dims = std::move(dims);
  return e;
}

ExpectedDims dims_hms(int h, int m, int s, int m1) {
  ExpectedDims d;
  d.h = h;
  d.m = m;
  d.s = s;
  d.m1 = m1;
  return d;
}

ExpectedDims dims_sphere(int k0, int h0, int h1, int m1) {
  ExpectedDims d;
  d.k0 = k0;
  d.h0 = h0;
  d.h1 = h1;
  d.m1 = m1;
  d.h = h0;
  d.m = k0 - h0;
  d.s = 0;
  return d;
}

std::vector<CatalogEntry> make_catalog() {
  using E = ExpectedKind;
  std::vector<CatalogEntry> c;
  const std::string certified = "bracket-intersection list";
  const std::string rank34 = "rank three and four constructions";
  const std::string octo = "octonionic obstructions";
  const std::string longroot = "long-root su(3) obstructions";
  const std::string sym = "spin-type symmetric spaces";
  const std::string sphere = "transitive sphere actions";
  const std::string bundles = "bundle classification";

  // certified cores
  {
    auto e = realizable(entry("spin7-so8-so9p", "spin7+ < so(8) < so(9+p), spin representation on R^8", certified,
                              E::CertifiedBracketIntersection),
                        0, 2, spin7_so8, [](int p) { return dims_hms(21, 7, so_dim(9 + p) - 28, 7); });
    e.rank = 8;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("g2-so0-7-so8p", "g2 < spin7_0 < so(8+p)", certified, E::CertifiedBracketIntersection),
                        0, 1, [](int p) { return g2_so0(8 + p); },
                        [](int p) { return dims_hms(14, 7, so_dim(8 + p) - 21, 7); });
    e.rank = 8;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("su3-su4-spin7", "su(3) < su(4) = so(6) < so(7)", certified,
                              E::CertifiedBracketIntersection),
                        0, 0, [](int) { return su3_su4_spin7(); }, [](int) { return dims_hms(8, 7, 6, 6); });
    e.rank = 8;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("sp2-su4-su5", "sp(2) < su(4) < su(5), su(4) = spin(6) on R^6", certified,
                              E::CertifiedBracketIntersection),
                        0, 0, [](int) { return sp2_su4_su5(); }, [](int) { return dims_hms(10, 5, 9, 5); });
    e.rank = 6;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("sp-rank4", "sp(p) < sp(1)+sp(p) < sp(p+1)", rank34, E::CertifiedCurvatureBound), 1, -1,
                        sp_rank4, [](int p) { return dims_hms(sp_dim(p), 3, 4 * p, 0); });
    e.rank = 4;
    e.sphere_flag = true;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("sp-series", "s1.sp(p) < sp(1)+sp(p) < sp(p+1)", rank34, E::CertifiedCurvatureBound), 1,
                        -1, sp_rank3, [](int p) { return dims_hms(sp_dim(p) + 1, 2, 4 * p, 2); });
    e.rank = 3;
    e.sphere_flag = true;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("g2-so4-rank4", "su(2)_1 < so(4) < g2", rank34, E::CertifiedBracketIntersection), 0, 0,
                        [](int) { return g2_so4(false); }, [](int) { return dims_hms(3, 3, 8, 0); });
    e.rank = 4;
    c.push_back(e);
  }
  {
    auto e = realizable(entry("g2-so4-rank3", "su(2)_1.s1 < so(4) < g2", rank34, E::CertifiedBracketIntersection), 0,
                        0, [](int) { return g2_so4(true); }, [](int) { return dims_hms(4, 2, 8, 2); });
    e.rank = 3;
    c.push_back(e);
  }

  // obstructions with explicit commuting pairs
  auto witness = [&](std::string id, std::string desc, std::string origin, int lo, int hi,
                     std::function<Triple(int)> b, std::function<ExpectedDims(int)> d) {
    auto e = realizable(entry(id, std::move(desc), std::move(origin), E::ViolationWitness), lo, hi, std::move(b),
                        std::move(d));
    e.witness_family = id;
    c.push_back(e);
  };
  witness("spin-octonion-case1", "g2 < spin7+ < so(9+p)", octo, 0, -1, [](int p) { return g2_spin7_sign(p, true); },
          [](int p) { return dims_hms(14, 7, so_dim(9 + p) - 21, 7); });
  witness("spin-octonion-case1-minus", "g2 < spin7- < so(9+p)", octo, 0, -1,
          [](int p) { return g2_spin7_sign(p, false); }, [](int p) { return dims_hms(14, 7, so_dim(9 + p) - 21, 7); });
  witness("spin-octonion-case2", "g2 < spin7_0 < so(9+p)", octo, 1, -1, [](int p) { return g2_so0(9 + p); },
          [](int p) { return dims_hms(14, 7, so_dim(9 + p) - 21, 7); });
  witness("spin-octonion-case4", "spin7+ < so(8) < so(9+p)", octo, 3, -1, spin7_so8,
          [](int p) { return dims_hms(21, 7, so_dim(9 + p) - 28, 7); });
  witness("su3-long-root", "sp(1) < sp(2) < sp(p+2), sp(2) acting on S^7", longroot, 1, -1, sp1_sp2_spn,
          [](int p) { return dims_hms(3, 7, sp_dim(p + 2) - 10, 4); });
  witness("su3-su4-sup4", "su(3) < su(4) < su(p+4)", longroot, 1, -1, su3_su4_sun,
          [](int p) { return dims_hms(8, 7, su_dim(p + 4) - 15, 6); });
  witness("su(p+4)-su3-pair", "sp(2) < su(4) < su(p+4), paired su(3)+su(3)", longroot, 2, -1, sp2_su4_sun,
          [](int p) { return dims_hms(10, 5, su_dim(p + 4) - 15, 5); });
  witness("su2-long-root-sun", "t < su(2) < su(p+2)", longroot, 1, -1, t_su2_sun,
          [](int p) { return dims_hms(1, 2, su_dim(p + 2) - 3, 2); });
  witness("su2-long-root-sop", "t < su(2) < so(p+4), su(2) a factor of so(4)", longroot, 2, -1, t_su2_so,
          [](int p) { return dims_hms(1, 2, so_dim(p + 4) - 3, 2); });
  witness("su2-long-root-g2", "t < su(2)_1 < g2", longroot, 0, 0, [](int) { return t_su2_g2(); },
          [](int) { return dims_hms(1, 2, 11, 2); });
  {
    auto e = realizable(entry("g2-su2-diagonal", "diag su(2) < diag su(2) + su(2)_3 < g2 + su(2)", rank34,
                              E::SequenceViolation),
                        0, 0, [](int) { return g2_diagonal(); }, [](int) { return dims_hms(3, 3, 11, 0); });
    c.push_back(e);
  }

  // transitive sphere actions
  auto sph = [&](std::string id, std::string desc, int lo, int hi, std::function<Triple(int)> b,
                 std::function<ExpectedDims(int)> d) {
    c.push_back(realizable(entry(std::move(id), std::move(desc), sphere, E::SphereAction), lo, hi, std::move(b),
                           std::move(d)));
  };
  sph("sphere-so", "SO(n+1)/SO(n) = S^n", 2, -1, sphere_so,
      [](int n) { return dims_sphere(so_dim(n + 1), so_dim(n), so_dim(n), n); });
  sph("sphere-su", "SU(m+1)/SU(m) = S^(2m+1)", 2, -1, sphere_su,
      [](int m) { return dims_sphere(su_dim(m + 1), su_dim(m), m * m, 2 * m); });
  sph("sphere-sp", "Sp(m+1)/Sp(m) = S^(4m+3), torus factor trivial", 1, -1, sphere_sp,
      [](int m) { return dims_sphere(sp_dim(m + 1), sp_dim(m), sp_dim(m) + 3, 4 * m); });
  sph("sphere-sp-circle", "T.Sp(m+1)/T.Sp(m) = S^(4m+3), T the right circle", 1, -1, sphere_sp_circle,
      [](int m) { return dims_sphere(sp_dim(m + 1) + 1, sp_dim(m) + 1, sp_dim(m) + 2, 4 * m + 2); });
  sph("sphere-g2", "G2/SU(3) = S^6", 0, 0, [](int) { return sphere_g2(); },
      [](int) { return dims_sphere(14, 8, 8, 6); });
  sph("sphere-spin7", "Spin(7)/G2 = S^7", 0, 0, [](int) { return sphere_spin7(); },
      [](int) { return dims_sphere(21, 14, 14, 7); });
  sph("sphere-spin9", "Spin(9)/Spin(7) = S^15", 0, 0, [](int) { return sphere_spin9(); },
      [](int) { return dims_sphere(36, 21, 28, 8); });

  // out of scope: exceptional ambients
  auto unreal = [&](std::string id, std::string desc, std::string origin) {
    c.push_back(entry(std::move(id), std::move(desc), std::move(origin), E::Unrealizable));
  };
  unreal("f4-case", "g2 < spin7_0 < f4", octo);
  unreal("symmetric-f4-su2-sp3", "F4/(SU(2).Sp(3)), long-root su(2)", sym);
  unreal("symmetric-e6-su2-su6", "E6/(SU(2).SU(6)), long-root su(2)", sym);
  unreal("symmetric-e7-su2-spin12", "E7/(SU(2).Spin(12)), long-root su(2)", sym);
  unreal("symmetric-e8-su2-e7", "E8/(SU(2).E7), long-root su(2)", sym);
  unreal("symmetric-f4-spin9", "F4/Spin(9), spin representation", sym);
  unreal("symmetric-e6-spin10", "E6/(Spin(10).U(1)), half-spin representation", sym);
  unreal("symmetric-e7-spin12", "E7/(Spin(12).SU(2)), half-spin representation", sym);
  unreal("symmetric-e8-spin16", "E8/Spin(16), half-spin representation", sym);

  // bundle lists, reduced to their core triples
  auto meta = [&](std::string id, std::string desc, int rank, std::string core) {
    auto e = entry(std::move(id), std::move(desc), bundles, E::Metadata);
    e.rank = rank;
    e.reduces_to = std::move(core);
    c.push_back(e);
  };
  meta("bundle-rank8-spin9p", "Spin(p+9) x_Spin(8) R^8, p in {0,1,2}", 8, "spin7-so8-so9p");
  meta("bundle-rank8-spin8p", "Spin(p+8) x_Spin(7) R^8, p in {0,1}", 8, "g2-so0-7-so8p");
  meta("bundle-rank8-spin7", "Spin(7) x_Spin(6) C^4", 8, "su3-su4-spin7");
  meta("bundle-rank8-quotient-spin9p", "(Spin(p+9).G') x_(Spin(8).H') R^8, p in {1,2}", 8, "spin7-so8-so9p");
  meta("bundle-rank8-quotient-spin9", "(Spin(9).G') x_(Spin(7).H') R^8", 8, "g2-so0-7-so8p");
  meta("bundle-rank8-quotient-spin7", "(Spin(7).G') x_(Spin(6).S1.H') C^4", 8, "su3-su4-spin7");
  meta("bundle-rank6-su5", "SU(5) x_SU(4) R^6", 6, "sp2-su4-su5");
  meta("bundle-rank6-quotient-su5", "(SU(5).G') x_(SU(4).H') R^6", 6, "sp2-su4-su5");
  meta("bundle-rank3-g2", "G2 x_SO(4) su(2)_3", 3, "g2-so4-rank3");
  meta("bundle-rank3-sp", "(Sp(p+1).G') x_(Sp(1).H') sp(1)", 3, "sp-series");
  meta("bundle-rank4-g2", "G2 x_SO(4) (H/+-1)", 4, "g2-so4-rank4");
  meta("bundle-rank4-quotient-g2", "(G2 x G') x_(SO(4) x SU(2)') (H/+-1)", 4, "g2-so4-rank4");
  meta("bundle-rank4-sp", "Sp(p+1) x_(Sp(1) x Sp(p)) H", 4, "sp-rank4");
  meta("bundle-rank4-quotient-sp", "(Sp(p+1) x G') x_(Sp(1) x Sp(p) x Sp(1)') H", 4, "sp-rank4");
  return c;
}

const std::map<std::string, std::pair<std::string, int>>& aliases() {
  static const std::map<std::string, std::pair<std::string, int>> a{
      {"g2-so0-7-in-so8", {"g2-so0-7-so8p", 0}},
  };
  return a;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

const CatalogEntry& find_entry(const std::string& id) {
  std::string key = id;
  if (auto it = aliases().find(id); it != aliases().end()) key = it->second.first;
  for (const auto& e : catalog())
    if (e.id == key) return e;
  throw PreconditionError("unknown catalog entry: " + id);
}

EntryRef parse_entry(const std::string& text) {
  static const std::regex grammar(R"(([A-Za-z0-9_+()\-]+)(?::p=(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar)) throw PreconditionError("malformed entry reference: " + text);
  EntryRef ref;
  ref.id = m[1].str();
  if (auto it = aliases().find(ref.id); it != aliases().end()) {
    ref.id = it->second.first;
    ref.p = it->second.second;
    ref.p_given = true;
    if (m[2].matched && std::stoi(m[2].str()) != ref.p)
      throw PreconditionError("alias " + m[1].str() + " fixes p=" + std::to_string(ref.p));
    return ref;
  }
  const auto& e = find_entry(ref.id);
  ref.p = e.p_default;
  if (m[2].matched) {
    ref.p = std::stoi(m[2].str());
    ref.p_given = true;
  }
  return ref;
}

std::vector<const CatalogEntry*> list_entries(const std::map<std::string, std::string>& filter) {
  static const std::map<std::string, ExpectedKind> kinds{
      {"certified", ExpectedKind::CertifiedBracketIntersection},
      {"violation", ExpectedKind::ViolationWitness},
      {"sequence", ExpectedKind::SequenceViolation},
      {"sphere", ExpectedKind::SphereAction},
      {"metadata", ExpectedKind::Metadata},
      {"unrealizable", ExpectedKind::Unrealizable},
  };
  for (const auto& [key, value] : filter) {
    if (key != "rank" && key != "realizable" && key != "expected") throw PreconditionError("unknown filter tag: " + key);
    if (key == "expected" && !kinds.count(value)) throw PreconditionError("unknown expected verdict: " + value);
    if (key == "realizable" && value != "true" && value != "false")
      throw PreconditionError("realizable filter takes true or false");
  }
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    bool keep = true;
    if (auto it = filter.find("rank"); it != filter.end()) keep &= e.rank == std::stoi(it->second);
    if (auto it = filter.find("realizable"); it != filter.end()) keep &= e.realizable == (it->second == "true");
    if (auto it = filter.find("expected"); it != filter.end()) {
      const ExpectedKind k = kinds.at(it->second);
      keep &= k == ExpectedKind::CertifiedBracketIntersection
                  ? (e.expected == k || e.expected == ExpectedKind::CertifiedCurvatureBound)
                  : e.expected == k;
    }
    if (keep) out.push_back(&e);
  }
  return out;
}

Triple build(const std::string& id, int p) {
  const auto& e = find_entry(id);
  if (!e.realizable) {
    if (e.expected == ExpectedKind::Metadata)
      throw UnrealizableFamily(e.id + " is recorded as metadata; build its core entry " + e.reduces_to);
    throw UnrealizableFamily(e.id + " needs an exceptional ambient algebra (" + e.description + "); out of scope");
  }
  if (!e.p_in_range(p))
    throw PreconditionError("p=" + std::to_string(p) + " outside the range of " + e.id);
  Triple t = e.builder(p);
  if (!t.name.empty()) t.name = e.id + ":p=" + std::to_string(p) + " (" + t.name + ")";
  return t;
}

Triple build(const EntryRef& ref) { return build(ref.id, ref.p); }

}  // namespace collar
