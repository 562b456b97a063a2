#include <chrono>
#include <iostream>

#include "hopfforms/theta.hpp"

using namespace hopfforms;

static int failures = 0;
#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      ++failures;                                                 \
      std::cout << "FAIL " << #cond << " @" << __LINE__ << "\n"; \
    }                                                             \
  } while (0)

static double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
  auto t0 = std::chrono::steady_clock::now();

  // --- C3 over trivial C2 extension: the quadratic-fixed form ---
  {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup c3 = FiniteGroup::cyclic(3);
    const GaloisAlgebra l = trivial_extension(c2);
    // nontrivial element acts by inversion on C3
    const std::vector<std::vector<int>> embed = {{0, 1, 2}, {0, 2, 1}};
    const FixedRing h = theta(l, c3, embed);
    CHECK(h.dim_ok && h.fixed_ok && h.form_ok);
    CHECK(h.basis.size() == 3);
    auto axioms = verify_hopf_axioms(h.hopf);
    CHECK(axioms.all());
    auto gls = grouplikes(h.hopf);
    CHECK(gls.size() == 3);
    auto gg = grouplike_group(h.hopf);
    CHECK(gg.group.size() == 3 && gg.group.order_of(1) == 3);
    // expected basis: 1, e1 s + eg s^2, eg s + e1 s^2  (ld=2, e1=idx0, eg=idx1)
    QVec one(6), x(6), y(6);
    one[0] = one[1] = Rat(1);  // 1 = e1 + eg at eta=0
    x[2] = Rat(1);             // e1 * s
    x[5] = Rat(1);             // eg * s^2
    y[3] = Rat(1);             // eg * s
    y[4] = Rat(1);             // e1 * s^2
    LinSolver memb(6);
    for (auto& b : h.basis) memb.add(b);
    CHECK(memb.express(one).has_value());
    CHECK(memb.express(x).has_value());
    CHECK(memb.express(y).has_value());
    // all three are group-like
    LinSolver gl(6);
    for (auto& g : gls) gl.add(h.to_ambient(g));
    CHECK(gl.express(one).has_value() && gl.express(x).has_value() && gl.express(y).has_value());
    std::cout << "C3 form ok (" << ms_since(t0) << " ms); labels:";
    for (auto& s : h.hopf.basis_labels) std::cout << " [" << s << "]";
    std::cout << "\n";
  }

  // --- trivial extension sanity: theta(Map(N,Q), N) = Q[N]-like with |N| grouplikes ---
  {
    const FiniteGroup c4 = FiniteGroup::cyclic(4);
    const GaloisAlgebra l = trivial_extension(FiniteGroup::units_mod(5));
    // no, simpler: trivial group acting
    const FiniteGroup c1 = FiniteGroup::cyclic(1);
    const GaloisAlgebra lt = trivial_extension(c1);
    const FixedRing h = theta(lt, c4, {{0, 1, 2, 3}});
    CHECK(h.dim_ok && h.fixed_ok && h.form_ok);
    CHECK(grouplikes(h.hopf).size() == 4);
    CHECK(matches_group_algebra(h.hopf, c4).has_value());
  }

  // --- biquadratic descend: lambda(G) -> Q[C2xC2]; N_c4 -> 4-dim; j rank 16 ---
  auto tb = std::chrono::steady_clock::now();
  {
    const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
    const auto subs = enumerate_regular_subgroups(e.group);
    std::cout << "biquad regular subgroups: " << subs.size() << " (";
    for (auto& s : subs) std::cout << s.type << " ";
    std::cout << ")\n";
    int c4_count = 0;
    for (auto& s : subs)
      if (s.type == "C4") ++c4_count;
    CHECK(c4_count == 3);
    for (auto& s : subs) {
      const FixedRing h = descend(e, s);
      CHECK(h.dim_ok && h.fixed_ok && h.form_ok);
      CHECK(verify_hopf_axioms(h.hopf).all());
      const auto hc = hopf_action(h, s);
      CHECK(hc.unit_acts_as_identity && hc.counit_on_one && hc.measures_products);
      CHECK(hc.j_bijective && hc.j_rank == 16);
      if (s.type == "C2xC2" && grouplikes(h.hopf).size() == 4)
        CHECK(matches_group_algebra(h.hopf, FiniteGroup::elementary_abelian(2, 2)).has_value());
    }
    std::cout << "biquad descends ok (" << ms_since(tb) << " ms)\n";
  }

  // --- biquad preimage: W = {1, (12)(34)-ish}, E^W = Q(sqrt2), basis change ok ---
  auto tp = std::chrono::steady_clock::now();
  {
    const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
    const auto subs = enumerate_regular_subgroups(e.group);
    for (auto& s : subs) {
      if (s.type != "C4") continue;
      const PreimageResult pr = theta_preimage(e, s);
      CHECK(pr.w.size() == 2);
      CHECK(pr.ew_galois.ok);
      CHECK(pr.preimage_exists);  // |G/W| = 2 = |Aut(C4)|
      CHECK(pr.h_quotient.dim_ok && pr.h_quotient.form_ok);
      CHECK(pr.h_descent.dim_ok && pr.h_descent.form_ok);
      CHECK(pr.basis_change_ok);
    }
    std::cout << "biquad preimages ok (" << ms_since(tp) << " ms)\n";
  }

  // --- sextic: C6 descend -> (Q[C6])*, grouplikes 2, blocks six Q's ---
  auto ts = std::chrono::steady_clock::now();
  {
    const GaloisAlgebra e = sextic_s3();
    const auto subs = enumerate_regular_subgroups(e.group);
    std::cout << "sextic regular subgroups: " << subs.size() << " (";
    for (auto& s : subs) std::cout << s.type << " ";
    std::cout << ")\n";
    int c6 = 0;
    for (auto& s : subs) {
      if (s.type != "C6") continue;
      ++c6;
      const PreimageResult pr = theta_preimage(e, s);
      CHECK(pr.w.size() == 3);
      CHECK(pr.preimage_exists);
      CHECK(pr.basis_change_ok);
      const FixedRing& h = pr.h_descent;
      CHECK(verify_hopf_axioms(h.hopf).all());
      CHECK(grouplikes(h.hopf).size() == 2);
      CHECK(matches_dual_cyclic(h.hopf));
      const auto dec = wedderburn_decompose(h.hopf.algebra());
      CHECK(dec.semisimple && dec.blocks.size() == 6 && dec.absolutely_semisimple);
      const auto rec = hopf_invariants(h);
      std::cout << "sextic C6 form: " << invariant_summary(rec) << "\n";
    }
    CHECK(c6 == 3);
    std::cout << "sextic ok (" << ms_since(ts) << " ms)\n";
  }

  // --- Q8 proper-certificate via trivial extension ---
  auto tq = std::chrono::steady_clock::now();
  {
    const FiniteGroup q8 = FiniteGroup::quaternion8();
    const GaloisAlgebra e = trivial_extension(q8);
    EnumerateOptions opts;
    opts.type_filter = "C8";
    const auto subs = enumerate_regular_subgroups(q8, opts);
    std::cout << "q8 C8 regular subgroups: " << subs.size() << "\n";
    CHECK(subs.size() == 6);
    for (auto& s : subs) {
      const PreimageResult pr = theta_preimage(e, s);
      CHECK(!pr.preimage_exists);
      CHECK(pr.ca.quotient.group.size() == 2 && pr.ca.aut_order == 4);
      CHECK(pr.basis_change_ok);  // quotient presentation still matches
    }
    std::cout << "q8 proper certificates ok (" << ms_since(tq) << " ms)\n";
  }

  // --- q8_c8_preimage: d=2 and d=3 records ---
  auto tf = std::chrono::steady_clock::now();
  {
    const Q8C8Preimage p2 = q8_c8_preimage("i", 2);
    CHECK(p2.w_match && p2.quotient_proper);
    CHECK(p2.l.comp_count == 2);
    CHECK(p2.theta_side.dim_ok && p2.theta_side.fixed_ok && p2.theta_side.form_ok);
    CHECK(p2.descent_side.dim_ok && p2.descent_side.form_ok);
    CHECK(p2.normalized_fixed && p2.normalized_spans);
    CHECK(p2.idempotent_diff_square_one);
    CHECK(p2.psi_in_descent && p2.psi_multiplicative && p2.psi_hopf_compatible);
    CHECK(verify_hopf_axioms(p2.h_normalized).all());
    std::cout << "d=2 record: " << invariant_summary(p2.record) << "\n";
    CHECK(p2.record.grouplike_count == 2);
    CHECK(p2.record.block_count == 5);
    CHECK(p2.record.quadratic_square_classes ==
          (std::vector<std::string>{"-2", "-2", "-2"}));
    for (auto& lbl : p2.normalized_labels) std::cout << "  basis: " << lbl << "\n";

    const Q8C8Preimage p3 = q8_c8_preimage("j", 3);
    CHECK(p3.w_match && p3.quotient_proper);
    CHECK(p3.psi_in_descent && p3.psi_multiplicative && p3.psi_hopf_compatible);
    std::cout << "d=3 record: " << invariant_summary(p3.record) << "\n";
    CHECK(p3.record.grouplike_count == 2);
    CHECK(p3.record.block_count == 4);
    CHECK(p3.record.quadratic_square_classes == (std::vector<std::string>{"-3"}));
    CHECK(!(p2.record == p3.record));

    const Q8C8Preimage p2k = q8_c8_preimage("k", 2);
    CHECK(p2k.record == p2.record);
    std::cout << "q8 c8 family ok (" << ms_since(tf) << " ms)\n";
  }

  // --- Greither form ---
  auto tg = std::chrono::steady_clock::now();
  {
    const GreitherForm g = greither_form();
    CHECK(g.form.dim_ok && g.form.fixed_ok && g.form.form_ok);
    CHECK(verify_hopf_axioms(g.form.hopf).all());
    CHECK(g.basis_in_form);
    CHECK(g.relations_ok);
    CHECK(g.nilpotent_ok);
    std::cout << "greither blocks:";
    for (auto& b : g.decomposition.blocks) std::cout << " " << b.label;
    std::cout << "\n";
    CHECK(g.decomposition.semisimple);
    CHECK(g.decomposition.blocks.size() == 5);
    CHECK(g.abss.verdict);
    std::cout << "greither form ok (" << ms_since(tg) << " ms)\n";
  }

  // --- Greither preimage: 12-component L, theta reproduces the form ---
  auto tgl = std::chrono::steady_clock::now();
  {
    const GreitherPreimage gp = theta_preimage_greither();
    CHECK(gp.components == 12);
    CHECK(gp.theta_of_l.dim_ok && gp.theta_of_l.fixed_ok && gp.theta_of_l.form_ok);
    CHECK(gp.matches_form);
    std::cout << "greither preimage ok (" << ms_since(tgl) << " ms)\n";
  }

  std::cout << (failures ? "SMOKE FAILURES: " : "SMOKE ALL OK, failures: ") << failures
            << "  total " << ms_since(t0) << " ms\n";
  return failures ? 1 : 0;
}
