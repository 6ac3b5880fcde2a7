#include "isurf/catalog.hpp"

#include "isurf/adjacency.hpp"
#include "isurf/builders.hpp"

#include <algorithm>

namespace isurf {

namespace {

std::string sig(std::size_t p, std::size_t n, std::size_t z) { return to_string(Signature{p, n, z}); }

SingularityGerm c(std::vector<Int> es) { return normalize_cusp(es); }
SingularityGerm se(Int m) { return SingularityGerm::simple_elliptic(m); }

bool direct_contains(const SingularityGerm& from, const GermMultiset& target) {
  const auto t = direct_adjacencies(from);
  return std::find(t.begin(), t.end(), target) != t.end();
}

// P^2 blown up at nine points, exceptional curves E1..E9.
SurfaceModel p2_nine_points() {
  auto s = projective_plane();
  for (int i = 1; i <= 9; ++i) s = blowup(s, {}, "E" + std::to_string(i));
  return s;
}

std::string stratum_citation(Stratum s, Realization r) {
  if (r != Realization::Generic) return "Prop 6.9";
  switch (s) {
    case Stratum::Empty: return "Thm 1.3";
    case Stratum::N1: return "Thm 2.11(ii)";
    case Stratum::N2: return "Thm 2.11(iii)";
    case Stratum::N11E: return "Thm 2.11(iv)";
    case Stratum::N22: return "Prop 6.3";
    case Stratum::N21: return "Example 6.10";
    case Stratum::N11R: return "Sec 6.3";
    case Stratum::N211: return "Sec 8.1";
    case Stratum::N111: return "Sec 8.2";
  }
  return "Thm 1.3";
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string id, std::string cite, std::string summary, std::function<Report(const std::string&)> f) {
    out.push_back({id, cite, std::move(summary), [f, cite] { return f(cite); }});
  };

  // lattices
  add("lemma5.2:lambda0-3", "Lemma 5.2", "signature of Lambda0(3)", [](const std::string& ct) {
    Report r;
    r.expect("signature", ct, sig(1, 3, 0), to_string(signature(make_named_lattice(LatticeFamily::Lambda0, 3))));
    r.expect("negative definite", ct, false, is_negative_definite(make_named_lattice(LatticeFamily::Lambda0, 3)));
    return r;
  });
  add("lemma5.2:lambda2-2-2", "Lemma 5.2", "signature of Lambda2(2,2)", [](const std::string& ct) {
    Report r;
    r.expect("signature", ct, sig(1, 5, 0), to_string(signature(make_named_lattice(LatticeFamily::Lambda2, 2, 2))));
    return r;
  });
  add("lemma5.2:lambda0-range", "Lemma 5.2", "Lambda0(n) for n <= 20", [](const std::string& ct) {
    Report r;
    for (Int n = 1; n <= 20; ++n)
      r.expect("n=" + std::to_string(n), ct, sig(1, n, 0),
               to_string(signature(make_named_lattice(LatticeFamily::Lambda0, n))));
    return r;
  });
  add("lemma5.2:lambda12-range", "Lemma 5.2", "Lambda1, Lambda2 for n, m <= 12", [](const std::string& ct) {
    Report r;
    std::size_t good = 0, total = 0;
    for (Int n = 1; n <= 12; ++n)
      for (Int m = 1; m <= 12; ++m)
        for (auto fam : {LatticeFamily::Lambda1, LatticeFamily::Lambda2}) {
          ++total;
          good += signature(make_named_lattice(fam, n, m)) == Signature{1, static_cast<std::size_t>(n + m + 1), 0};
        }
    r.expect("matching signatures", ct, static_cast<Int>(total), static_cast<Int>(good));
    return r;
  });
  add("def5.1:lambda0-2", "Def 5.1", "Gram matrix of Lambda0(2)", [](const std::string& ct) {
    Report r;
    const auto lat = make_named_lattice(LatticeFamily::Lambda0, 2);
    r.expect("e0^2", ct, Int{0}, lat.at(0, 0));
    r.expect("e1^2", ct, Int{-2}, lat.at(1, 1));
    r.expect("e2^2", ct, Int{-2}, lat.at(2, 2));
    r.expect("e0.e1", ct, Int{1}, lat.at(0, 1));
    r.expect("e1.e2", ct, Int{1}, lat.at(1, 2));
    r.expect("e2.e0", ct, Int{1}, lat.at(2, 0));
    return r;
  });
  add("sec5.5:scaled", "Sec 5.5", "Lambda2(2,2)(2) keeps its signature", [](const std::string& ct) {
    Report r;
    const auto lat = make_named_lattice(LatticeFamily::Lambda2, 2, 2, 2);
    r.expect("signature", ct, sig(1, 5, 0), to_string(signature(lat)));
    r.expect("e0.f0", ct, Int{2}, lat.at(*lat.index_of("e0"), *lat.index_of("f0")));
    return r;
  });
  add("remark2.11:cusp-3232", "Remark 2.11", "cusp (3,2,3,2) is contractible", [](const std::string& ct) {
    Report r;
    r.expect("negative definite", ct, true, is_negative_definite(resolution_lattice(c({3, 2, 3, 2}))));
    return r;
  });

  // germs
  add("lemma1.3:mult-422", "Lemma 1.3(ii)", "multiplicity of (4,2,2)", [](const std::string& ct) {
    Report r;
    r.expect("m", ct, Int{2}, multiplicity(c({4, 2, 2})));
    return r;
  });
  add("thm1.6:mult-33", "Thm 1.6(iv)(b)", "multiplicity of (3,3)", [](const std::string& ct) {
    Report r;
    r.expect("m", ct, Int{2}, multiplicity(c({3, 3})));
    return r;
  });
  add("thm1.6:mult-1", "Thm 1.6(ii)", "multiplicity of the nodal cusp (1)", [](const std::string& ct) {
    Report r;
    r.expect("m", ct, Int{1}, multiplicity(c({1})));
    return r;
  });
  add("def1.1:normal-form", "Def 1.1", "dihedral orbit of (3,2,2)", [](const std::string& ct) {
    Report r;
    r.expect("(2,2,3)", ct, to_string(c({3, 2, 2})), to_string(c({2, 2, 3})));
    r.expect("(2,3,2)", ct, to_string(c({3, 2, 2})), to_string(c({2, 3, 2})));
    r.expect("(2,3,2,4)", ct, std::string("c:2,3,2,4"), to_string(c({4, 2, 3, 2})));
    return r;
  });
  add("def1.1:resolution-33", "Def 1.1", "two-cycle Gram of (3,3)", [](const std::string& ct) {
    Report r;
    const auto lat = resolution_lattice(c({3, 3}));
    r.expect("E1^2", ct, Int{-3}, lat.at(0, 0));
    r.expect("E1.E2", ct, Int{2}, lat.at(0, 1));
    r.expect("negative definite", ct, true, is_negative_definite(lat));
    return r;
  });
  add("lemma1.3:enum-m1", "Lemma 1.3(i)", "multiplicity-1 types up to length 4", [](const std::string& ct) {
    Report r;
    std::string got;
    for (const auto& g : enumerate_types(1, 4)) got += (got.empty() ? "" : " ") + to_string(g);
    std::vector<SingularityGerm> want = {c({1}), c({3, 2}), c({3, 2, 2}), c({3, 2, 2, 2}), se(1)};
    std::sort(want.begin(), want.end());
    std::string exp;
    for (const auto& g : want) exp += (exp.empty() ? "" : " ") + to_string(g);
    r.expect("types", ct, exp, got);
    return r;
  });
  add("lemma1.3:enum-m2", "Lemma 1.3(ii)", "multiplicity-2 types up to length 2", [](const std::string& ct) {
    Report r;
    const auto all = enumerate_types(2, 2);
    for (const auto& g : {c({2}), c({4, 2}), c({3, 3}), se(2)})
      r.expect("contains " + to_string(g), ct, true, std::find(all.begin(), all.end(), g) != all.end());
    return r;
  });
  add("lemma1.3:count-m2", "Lemma 1.3(ii)", "number of multiplicity-2 cycles per length", [](const std::string& ct) {
    Report r;
    const auto all = enumerate_types(2, 10);
    for (Int len = 2; len <= 10; ++len) {
      const auto n = std::count_if(all.begin(), all.end(), [&](const SingularityGerm& g) {
        return g.kind == GermKind::Cusp && static_cast<Int>(g.es.size()) == len && multiplicity(g) == 2;
      });
      r.expect("r=" + std::to_string(len), ct, 1 + ((len - 2) / 2 + 1), static_cast<Int>(n));
    }
    return r;
  });

  // adjacencies
  add("thm1.6:iii-b-r2", "Thm 1.6(iii)(b)", "(4,2) is adjacent to SE(1)", [](const std::string& ct) {
    Report r;
    r.expect("direct", ct, true, direct_contains(c({4, 2}), {se(1)}));
    r.expect("closure", ct, true, is_adjacent(c({4, 2}), se(1)));
    return r;
  });
  add("thm1.6:iii-b-r3", "Thm 1.6(iii)(b)", "(4,2,2) is adjacent to SE(1) and (1)", [](const std::string& ct) {
    Report r;
    r.expect("to SE(1)", ct, true, direct_contains(c({4, 2, 2}), {se(1)}));
    r.expect("to (1)", ct, true, direct_contains(c({4, 2, 2}), {c({1})}));
    return r;
  });
  add("thm1.6:iii-b-r5", "Thm 1.6(iii)(b)", "(4,2,2,2,2) reaches (3,2)", [](const std::string& ct) {
    Report r;
    r.expect("to (3,2,2)", ct, true, direct_contains(c({4, 2, 2, 2, 2}), {c({3, 2, 2})}));
    r.expect("to (3,2)", ct, true, is_adjacent(c({4, 2, 2, 2, 2}), c({3, 2})));
    return r;
  });
  add("thm1.6:iv-b", "Thm 1.6(iv)(b)", "(3,3) is adjacent to (2) and SE(2)", [](const std::string& ct) {
    Report r;
    r.expect("to (2)", ct, true, direct_contains(c({3, 3}), {c({2})}));
    r.expect("to SE(2)", ct, true, direct_contains(c({3, 3}), {se(2)}));
    return r;
  });
  add("thm1.6:i", "Thm 1.6(i)", "simple elliptic germs only smooth out", [](const std::string& ct) {
    Report r;
    const auto t = direct_adjacencies(se(2));
    r.expect("targets of SE(2)", ct, Int{3}, static_cast<Int>(t.size()));
    r.expect("SE(2) to SE(1)", ct, false, is_adjacent(se(2), se(1)));
    r.expect("SE(1) to SE(2)", ct, false, is_adjacent(se(1), se(2)));
    return r;
  });
  add("thm1.6:ii", "Thm 1.6(ii)", "(3,2,2) shrinks and reaches SE(1) and (1)", [](const std::string& ct) {
    Report r;
    r.expect("to (3,2)", ct, true, direct_contains(c({3, 2, 2}), {c({3, 2})}));
    r.expect("to SE(1)", ct, true, direct_contains(c({3, 2, 2}), {se(1)}));
    r.expect("to (1)", ct, true, direct_contains(c({3, 2, 2}), {c({1})}));
    r.expect("to (4,2)", ct, false, is_adjacent(c({3, 2, 2}), c({4, 2})));
    return r;
  });
  add("def1.4:transitive", "Def 1.4", "closure is reflexive and transitive", [](const std::string& ct) {
    Report r;
    r.expect("reflexive", ct, true, is_adjacent(c({3, 2, 3}), c({3, 2, 3})));
    r.expect("(3,2,3) to SE(1)", ct, true, is_adjacent(c({3, 2, 3}), se(1)));
    return r;
  });

  // strata
  auto edge_entry = [&](std::string id, std::string cite, Stratum from, Stratum to, EdgeSource want) {
    add(std::move(id), cite, stratum_info(from).name + " to " + stratum_info(to).name,
        [from, to, want](const std::string& ct) {
          Report r;
          const auto g = build_strata_graph();
          std::string src = "absent";
          for (const auto& e : g.edges)
            if (e.from == from && e.to == to) src = to_string(e.source);
          r.expect("edge", ct, to_string(want), src);
          return r;
        });
  };
  edge_entry("intro:n1-n2", "Introduction", Stratum::N1, Stratum::N2, EdgeSource::Exotic);
  edge_entry("remark6.8:n21-n22", "Remark 6.8", Stratum::N21, Stratum::N22, EdgeSource::Exotic);
  edge_entry("prop6.16:n11r-n21", "Prop 6.16", Stratum::N11R, Stratum::N21, EdgeSource::Exotic);
  edge_entry("thm8.3:v-r", "Thm 8.3(v)", Stratum::N11R, Stratum::N111, EdgeSource::Paper);
  edge_entry("thm8.3:v-e", "Thm 8.3(v)", Stratum::N11E, Stratum::N111, EdgeSource::Paper);
  edge_entry("thm8.3:iv-e", "Thm 8.3(iv)", Stratum::N11E, Stratum::N211, EdgeSource::Paper);
  edge_entry("thm8.3:iv-21", "Thm 8.3(iv)", Stratum::N21, Stratum::N211, EdgeSource::Paper);
  add("thm1.3:strata-graph", "Thm 1.3", "nine strata, every asserted edge explained", [](const std::string& ct) {
    Report r;
    const auto g = build_strata_graph();
    r.expect("nodes", ct, Int{9}, static_cast<Int>(g.nodes.size()));
    r.expect("unexplained", ct, Int{0}, static_cast<Int>(g.unexplained().size()));
    r.expect("self loops", ct, false,
             std::any_of(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.from == e.to; }));
    return r;
  });

  // per-stratum identities
  add("thm2.11:n2-table", "Thm 2.11(iii)", "pairing table of the K3 stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N2);
    const auto D = s.curve("D1"), C = s.curve("C");
    r.expect("D^2", ct, Int{-2}, pair(D, D));
    r.expect("C^2", ct, Int{-1}, pair(C, C));
    r.expect("C.D", ct, Int{2}, pair(C, D));
    r.expect("K = C", ct, true, s.canonical() == C);
    r.expect("L = D + C", ct, true, s.L() == D + C);
    r.expect("L^2", ct, Int{1}, pair(s.L(), s.L()));
    r.expect("chi", ct, Int{2}, s.chiO);
    return r;
  });
  add("prop6.1:node-blowup", "Prop 6.1", "blowing up a node drops the square by 4", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N2);
    const auto pre = DivisorClass::basis(s.lattice, "D1");
    const auto D = s.curve("D1");
    r.expect("D1 = Gamma - 2C", ct, true, D == pre - 2 * s.curve("C"));
    r.expect("D1^2 - Gamma^2", ct, Int{-4}, pair(D, D) - pair(pre, pre));
    r.expect("genus drop", ct, Int{1}, adjunction_genus(pre, s) - adjunction_genus(D, s));
    return r;
  });
  add("thm2.11:n1-L", "Thm 2.11(ii)", "L = F + D on the elliptic stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N1);
    const auto L = s.curve("F") + s.curve("D1");
    r.expect("L = F + D", ct, true, L == s.L());
    r.expect("L^2", ct, Int{1}, pair(L, L));
    return r;
  });
  add("thm2.13:rr-nM", "Thm 2.13", "chi(nM) = 2 when M^2 = 0 and chi(O) = 2", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N1);
    const auto M = s.M(0);
    r.expect("M^2", ct, Int{0}, pair(M, M));
    for (Int n = 1; n <= 5; ++n) r.expect("n=" + std::to_string(n), ct, Rational(2), riemann_roch_chi(n * M, s));
    return r;
  });
  add("prop6.3:L", "Prop 6.3", "L = C1 + D1 = C2 + D2 on the (2,2) stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N22);
    const auto a = s.parse("C1 + D1"), b = s.parse("C2 + D2");
    r.expect("C1+D1 vs C2+D2", ct, true, class_expressions_agree(a, b, s));
    r.expect("C1+D1 vs L", ct, true, class_expressions_agree(a, s.L(), s));
    r.expect("C1 vs C2", ct, false, class_expressions_agree(s.curve("C1"), s.curve("C2"), s));
    r.expect("C1.D1", ct, Int{2}, pair(s.curve("C1"), s.curve("D1")));
    r.expect("C2.D1", ct, Int{0}, pair(s.curve("C2"), s.curve("D1")));
    return r;
  });
  add("lemma2.10:n22-M", "Lemma 2.10(iii)", "M identities on the (2,2) stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N22);
    r.expect("M1.M2", ct, Int{1}, pair(s.M(0), s.M(1)));
    r.expect("M1^2", ct, Int{-1}, pair(s.M(0), s.M(0)));
    return r;
  });
  add("ex6.10:L", "Example 6.10", "L = E + D1 = F + D2 on the (2,1) stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N21);
    r.expect("E + D1 vs L", ct, true, class_expressions_agree(s.parse("E + D1"), s.L(), s));
    r.expect("F + D2 vs L", ct, true, class_expressions_agree(s.parse("F + D2"), s.L(), s));
    return r;
  });
  add("ex6.10:nef-M2", "Example 6.10", "M2 = F is nef on the declared curves", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N21);
    r.expect("M2 vs F", ct, true, class_expressions_agree(s.M(1), s.curve("F"), s));
    r.expect("nef", ct, true, nef_check(s.M(1), s).nef);
    return r;
  });
  add("ex6.10:rr-E+F", "Example 6.10", "chi(E + F) on the rational elliptic surface", [](const std::string& ct) {
    Report r;
    const auto s = rational_elliptic_with_half_fiber();
    const auto EF = s.parse("E + F");
    r.expect("(E+F)^2", ct, Int{1}, pair(EF, EF));
    r.expect("chi", ct, Rational(2), riemann_roch_chi(EF, s));
    return r;
  });
  add("ex6.18:sextic", "Example 6.18", "sextic through nine points", [](const std::string& ct) {
    Report r;
    const auto s = p2_nine_points();
    const auto G = s.parse("6H - E1 - 2E2 - 2E3 - 2E4 - 2E5 - 2E6 - 2E7 - 2E8 - 2E9");
    const auto F = s.parse("3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9");
    const auto sixH = s.parse("6H");
    Int doubled = 0;
    for (int i = 2; i <= 9; ++i) {
      const auto e = s.parse("2E" + std::to_string(i));
      doubled += pair(e, e);
    }
    r.expect("d^2", ct, Int{36}, pair(sixH, sixH));
    r.expect("E1^2", ct, Int{-1}, pair(s.curve("E1"), s.curve("E1")));
    r.expect("sum (2Ei)^2", ct, Int{-32}, doubled);
    r.expect("Gamma^2", ct, Int{3}, pair(G, G));
    r.expect("3d", ct, Int{18}, pair(sixH, s.parse("3H")));
    r.expect("Gamma.F", ct, Int{1}, pair(G, F));
    return r;
  });
  add("lemma6.12:genus-2", "Lemma 6.12(iv)", "Gamma^2 = 3 and K.Gamma = -1 give genus 2", [](const std::string& ct) {
    Report r;
    const auto s = p2_nine_points();
    const auto G = s.parse("6H - E1 - 2E2 - 2E3 - 2E4 - 2E5 - 2E6 - 2E7 - 2E8 - 2E9");
    r.expect("K.Gamma", ct, Int{-1}, pair(s.canonical(), G));
    r.expect("p_a", ct, Int{2}, adjunction_genus(G, s));
    return r;
  });
  add("sec6.3:L", "Sec 6.3", "the (1,1) rational stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N11R);
    const auto D2 = s.parse("E + 2F - 2C");
    const auto L = s.parse("3F + E - 2C");
    r.expect("D2 = E + 2F - 2C", ct, true, D2 == s.curve("D2"));
    r.expect("D2^2", ct, Int{-1}, pair(D2, D2));
    r.expect("L = 3F + E - 2C", ct, true, class_expressions_agree(L, s.L(), s));
    r.expect("L^2", ct, Int{1}, pair(L, L));
    return r;
  });
  add("sec8.1:M1", "Sec 8.1", "M1 = f - C1 on the (2,1,1) stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N211);
    const auto M1 = s.parse("f - C1");
    r.expect("M1 = f - C1", ct, true, M1 == s.M(0));
    r.expect("M1.D1", ct, Int{2}, pair(M1, s.curve("D1")));
    r.expect("Gamma.f", ct, Int{2}, pair(s.parse("2sigma - f"), s.parse("f")));
    const auto nef = nef_check(M1, s);
    r.expect("nef on declared curves", ct, false, nef.nef);
    r.expect("violated by", ct, std::string("f1"), nef.violated_by.empty() ? "" : nef.violated_by.front());
    return r;
  });
  add("sec8.1:L", "Sec 8.1", "L = 2 sigma - C1 - C2 - C3", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N211);
    const auto L = s.parse("2sigma - C1 - C2 - C3");
    r.expect("L", ct, true, L == s.L());
    r.expect("L^2", ct, Int{1}, pair(L, L));
    return r;
  });
  add("sec8.2:L", "Sec 8.2", "L^2 = 9 - 6 - 1 - 1 on the (1,1,1) stratum", [](const std::string& ct) {
    Report r;
    const auto s = build_stratum(Stratum::N111);
    const auto L = s.parse("3sigma - f - C1 - C2");
    const auto a = s.parse("3sigma"), f = s.parse("f");
    r.expect("L", ct, true, L == s.L());
    r.expect("(3 sigma)^2", ct, Int{9}, pair(a, a));
    r.expect("2 (3 sigma).(-f)", ct, Int{-6}, 2 * pair(a, -f));
    r.expect("C1^2", ct, Int{-1}, pair(s.curve("C1"), s.curve("C1")));
    r.expect("C2^2", ct, Int{-1}, pair(s.curve("C2"), s.curve("C2")));
    r.expect("L^2", ct, Int{1}, pair(L, L));
    return r;
  });
  add("sec7:x1", "Sec 7.3", "Num relations on X1", [](const std::string& ct) {
    Report r;
    const auto s = ruled_surface_x1();
    const auto Gq = s.parse("2sigma - f"), sigma = s.parse("sigma");
    r.expect("Gamma_q^2", ct, Int{0}, pair(Gq, Gq));
    r.expect("Gamma_q.sigma", ct, Int{1}, pair(Gq, sigma));
    r.expect("K = -2 sigma + f", ct, true, s.canonical() == s.parse("-2sigma + f"));
    r.expect("K^2", ct, Int{0}, pair(s.canonical(), s.canonical()));
    r.expect("p_a(Gamma_q)", ct, Int{1}, adjunction_genus(Gq, s));
    return r;
  });
  add("sec7:x0", "Sec 7.1", "Num relations on X0", [](const std::string& ct) {
    Report r;
    const auto s = rational_elliptic_with_half_fiber();
    r.expect("E.F", ct, Int{1}, pair(s.curve("E"), s.curve("F")));
    r.expect("K.E", ct, Int{-1}, pair(s.canonical(), s.curve("E")));
    r.expect("K^2", ct, Int{0}, pair(s.canonical(), s.canonical()));
    return r;
  });
  add("lemma2.3:chi", "Lemma 2.3", "chi(O) = 3 - k for every stratum", [](const std::string& ct) {
    Report r;
    for (const auto& st : all_strata()) {
      const auto s = build_stratum(st.id);
      r.expect(st.name, ct, 3 - static_cast<Int>(s.k()), s.chiO);
    }
    return r;
  });
  add("def2.6:K2", "Def 2.6", "K^2 = 1 - m for every stratum", [](const std::string& ct) {
    Report r;
    for (const auto& st : all_strata()) {
      const auto s = build_stratum(st.id);
      Int m = 0;
      for (Int x : st.mults) m += x;
      r.expect(st.name, ct, 1 - m, pair(s.canonical(), s.canonical()));
    }
    return r;
  });
  add("lemma2.12:dichotomy", "Lemma 2.12", "rational means k = 2, elliptic ruled means k = 3", [](const std::string& ct) {
    Report r;
    for (const auto& st : all_strata()) {
      if (st.birational == BirationalClass::Rational) r.expect(st.name, ct, Int{2}, static_cast<Int>(st.mults.size()));
      if (st.birational == BirationalClass::EllipticRuled)
        r.expect(st.name, ct, Int{3}, static_cast<Int>(st.mults.size()));
    }
    return r;
  });
  add("thm2.4:k-bound", "Thm 2.4", "k <= p_g + 1", [](const std::string& ct) {
    Report r;
    Int kmax = 0;
    for (const auto& st : all_strata()) kmax = std::max<Int>(kmax, static_cast<Int>(st.mults.size()));
    r.expect("max k", ct, Int{3}, kmax);
    return r;
  });
  add("prop2.14:refusal", "Prop 2.14", "(2,2,1) on an elliptic ruled surface is refused", [](const std::string& ct) {
    Report r;
    bool refused = false;
    try {
      build_stratum(Stratum::N211, {{se(2), se(2), se(1)}});
    } catch (const BuilderError&) {
      refused = true;
    }
    r.expect("refused", ct, true, refused);
    return r;
  });

  for (const auto& v : builder_variants()) {
    add("build:" + v.id, stratum_citation(v.stratum, v.options.realization),
        "all I-surface identities for " + v.id, [v](const std::string&) {
          return verify_I_surface(build_stratum(v.stratum, v.options));
        });
  }

  // double covers
  add("sec3.2:n1-k3", "Sec 3.2", "double cover data at N = 1, k = 3", [](const std::string& ct) {
    Report r;
    const auto dc = build_double_cover(1, 3);
    const auto B = dc.cls(dc.B);
    const auto& s = dc.base;
    r.expect("B.f", ct, Int{4}, pair(B, s.parse("f")));
    r.expect("B.e", ct, Int{4}, pair(B, s.parse("e")));
    r.expect("B.sigma0", ct, Int{4}, pair(B, s.parse("sigma0")));
    r.expect("B0", ct, std::string("4sigma0 + 5f + 2d2"), format_class(dc.cls(dc.B0)));
    r.expect("p_g", ct, Int{1}, dc.p_g);
    r.expect("Sigma^2", ct, Int{-1}, dc.sigma_sq);
    return r;
  });
  add("sec3.2:n2-k4", "Sec 3.2", "double cover data at N = 2, k = 4", [](const std::string& ct) {
    Report r;
    const auto dc = build_double_cover(2, 4);
    r.expect("p_g", ct, Int{1}, dc.p_g);
    r.expect("Sigma^2", ct, Int{-3}, dc.sigma_sq);
    r.expect("p_a(Sigma)", ct, Int{0}, dc.pa_sigma);
    return r;
  });
  add("sec3.2:d1", "Sec 3.2", "pairings of d1 = f - 2e - d2", [](const std::string& ct) {
    Report r;
    const auto dc = build_double_cover(1, 3);
    const auto d1 = dc.cls(dc.d1);
    r.expect("d1^2", ct, Int{-2}, pair(d1, d1));
    r.expect("d1.d2", ct, Int{0}, pair(d1, dc.base.parse("d2")));
    r.expect("d1.e", ct, Int{1}, pair(d1, dc.base.parse("e")));
    r.expect("B = B0 + d1 + d2", ct, true, dc.cls(dc.B) == dc.cls(dc.B0) + d1 + dc.base.parse("d2"));
    return r;
  });
  add("sec3.2:cover", "Sec 3.2", "pairings on the double cover", [](const std::string& ct) {
    Report r;
    for (Int N = 1; N <= 3; ++N) {
      const auto dc = build_double_cover(N, 2 * N);
      const std::string n = "N=" + std::to_string(N) + " ";
      r.expect(n + "e1^2", ct, Int{-1}, cover_pairing("e1", "e1", dc));
      r.expect(n + "e2^2", ct, Int{-1}, cover_pairing("e2", "e2", dc));
      r.expect(n + "(2e1)^2", ct, Int{-4}, cover_pairing("2e1", "2e1", dc));
      r.expect(n + "Sigma~^2", ct, -2 * N, cover_pairing("Sigma~", "Sigma~", dc));
      r.expect(n + "(nu*f)^2", ct, Int{0}, cover_pairing("nu*f", "nu*f", dc));
    }
    return r;
  });
  add("sec3.2:canonical", "Sec 3.2", "K + B/2 = (k - N - 1) f - e", [](const std::string& ct) {
    Report r;
    for (Int N = 1; N <= 5; ++N)
      for (Int k = 2 * N; k <= 2 * N + 6; ++k) {
        const auto dc = build_double_cover(N, k);
        const auto lhs = dc.cls(dc.K) + dc.cls(dc.half_B);
        const auto rhs = (k - N - 1) * dc.base.parse("f") - dc.base.parse("e");
        r.expect("N=" + std::to_string(N) + ",k=" + std::to_string(k), ct, true, lhs == rhs);
      }
    return r;
  });

  // lengths
  add("thm3.1:pg1", "Thm 3.1", "l(Z) = 24 at p_g = 1", [](const std::string& ct) {
    Report r;
    r.expect("l(Z)", ct, Int{24}, c2_length_counts(1).lZ);
    return r;
  });
  add("thm3.1:pg0", "Thm 3.1", "l(Z) = 12 at p_g = 0", [](const std::string& ct) {
    Report r;
    r.expect("l(Z)", ct, Int{12}, c2_length_counts(0).lZ);
    return r;
  });
  add("thm3.2:r4", "Thm 3.2", "l(W) = 25 - r at p_g = 1", [](const std::string& ct) {
    Report r;
    for (Int len = 1; len <= 16; ++len)
      r.expect("r=" + std::to_string(len), ct, 25 - len, *c2_length_counts(1, len).lW);
    return r;
  });

  // vanishing theorems
  auto vanishing = [&](std::string id, std::string cite, std::string prefix, std::vector<Int> lengths) {
    add(id, cite, "pairing and length threshold", [prefix, lengths](const std::string&) {
      Report r;
      for (Int len : lengths) {
        const auto all = vanishing_bound_checks(len);
        for (const auto& e : all.entries())
          if (e.id.rfind(prefix + " ", 0) == 0 && !r.find(e.id)) r.add(e);
      }
      return r;
    });
  };
  vanishing("thm4.3", "Thm 4.3", "thm4.3", {14});
  vanishing("thm4.5", "Thm 4.5", "thm4.5", {4, 14, 15});
  vanishing("prop6.9", "Prop 6.9", "prop6.9", {14});
  vanishing("prop6.17", "Prop 6.17", "prop6.17", {14});

  // canonical bundle formula
  add("thm2.11:cbf", "Thm 2.11(ii)", "one double fiber over P^1 with chi = 2", [](const std::string& ct) {
    Report r;
    const auto cb = canonical_bundle_coeffs({0, 2, {2}});
    r.expect("fiber coefficient", ct, Int{0}, cb.fiber_coefficient);
    r.expect("multiple fiber coefficient", ct, Int{1}, cb.multiple_fiber_coefficients.at(0));
    return r;
  });
  add("thm2.13:indicator", "Thm 2.13", "three double fibers with chi = 0", [](const std::string& ct) {
    Report r;
    const auto cb = canonical_bundle_coeffs({0, 0, {2, 2, 2}});
    r.expect("indicator", ct, Rational(-1, 2), cb.kodaira_indicator);
    r.expect("negative", ct, true, cb.kodaira_indicator < 0);
    return r;
  });
  add("thm2.13:trivial", "Thm 2.13", "elliptic base with chi = 0", [](const std::string& ct) {
    Report r;
    const auto cb = canonical_bundle_coeffs({1, 0, {}});
    r.expect("fiber coefficient", ct, Int{0}, cb.fiber_coefficient);
    r.expect("no multiple fibers", ct, Int{0}, static_cast<Int>(cb.multiple_fiber_coefficients.size()));
    return r;
  });

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& replication_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

std::vector<const CatalogEntry*> select_entries(const std::string& only) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : replication_catalog())
    if (only.empty() || e.id == only || e.id.rfind(only + ":", 0) == 0) out.push_back(&e);
  return out;
}

Report run_catalog(const std::string& only) {
  Report rep("replication suite");
  for (const auto* e : select_entries(only)) {
    Report part;
    try {
      part = e->run();
    } catch (const std::exception& ex) {
      part.require("exception", e->citation, false, ex.what());
    }
    if (part.entries().empty()) part.require("no checks", e->citation, false);
    rep.append(part, e->id + "/");
  }
  rep.note("Thm 2.13(ii): only the class arithmetic of each named case is checked, not the exclusion of the others");
  return rep;
}

}  // namespace isurf
