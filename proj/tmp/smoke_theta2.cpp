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

int main(int argc, char**) {
  auto t0 = std::chrono::steady_clock::now();

  // --- cyclotomic theta for Kohl pairs: Theta(Q(zeta_n)) iso (Q[C_n])* ---
  for (int n : {3, 5, 7, 9}) {
    auto t = std::chrono::steady_clock::now();
    const GaloisAlgebra l = cyclotomic_galois(n);
    const FiniteGroup cn = FiniteGroup::cyclic(n);
    const FixedRing h = theta(l, cn, residue_embed(l.group, n));
    CHECK(h.dim_ok && h.fixed_ok && h.form_ok);
    CHECK(verify_hopf_axioms(h.hopf).all());
    CHECK(matches_dual_cyclic(h.hopf));
    const auto dec = wedderburn_decompose(h.hopf.algebra());
    CHECK(dec.semisimple && static_cast<int>(dec.blocks.size()) == n);
    bool all_q = true;
    for (auto& b : dec.blocks) all_q = all_q && b.label == "Q";
    CHECK(all_q);
    std::cout << "cyclotomic n=" << n << " ok (" << ms_since(t) << " ms)\n";
  }

  // --- GL2(F3): Theta(Q(zeta_3)^24) = Q^9 ---
  {
    auto t = std::chrono::steady_clock::now();
    const FiniteGroup c3sq = FiniteGroup::elementary_abelian(3, 2);
    const AutomorphismGroup aut = automorphism_group(c3sq);
    CHECK(aut.group.size() == 48);
    // U = scalars {I, 2I}: find the automorphism x -> x+x
    std::vector<int> dbl(9);
    for (int x = 0; x < 9; ++x) dbl[x] = c3sq.mult(x, x);
    int di = -1;
    for (size_t i = 0; i < aut.maps.size(); ++i)
      if (aut.maps[i] == dbl) di = static_cast<int>(i);
    CHECK(di > 0);
    const GaloisAlgebra l =
        build_F_galois(aut.group, {0, di}, cyclotomic_field_with_units(3, {1, 2}));
    CHECK(l.comp_count == 24);
    const FixedRing h = theta(l, c3sq, aut.maps);
    CHECK(h.dim_ok && h.fixed_ok && h.form_ok);
    CHECK(verify_hopf_axioms(h.hopf).all());
    const auto cert = is_absolutely_semisimple(h.hopf.algebra(), c3sq);
    CHECK(cert.verdict);
    CHECK(cert.decomposition.blocks.size() == 9);
    bool all_q = true;
    for (auto& b : cert.decomposition.blocks) all_q = all_q && b.label == "Q";
    CHECK(all_q);
    std::cout << "gl2f3 -> Q^9 ok (" << ms_since(t) << " ms)\n";
  }

  // --- complete case S4: N = lambda(S4), W = 1, L = E, Theta(E) = H_lambda ---
  {
    auto t = std::chrono::steady_clock::now();
    const FiniteGroup s4 = FiniteGroup::symmetric(4);
    const GaloisAlgebra e = trivial_extension(s4);
    std::vector<Perm> lam = left_regular_rep(s4);
    const RegularSubgroup n = make_regular_subgroup(lam, s4);
    std::cout << "  [setup " << ms_since(t) << " ms]\n";
    const PreimageResult pr = theta_preimage(e, n);
    CHECK(pr.w.size() == 1);
    CHECK(pr.preimage_exists);
    CHECK(pr.ew.algebra.alg.dim == 24);
    CHECK(pr.h_quotient.dim_ok && pr.h_quotient.fixed_ok && pr.h_quotient.form_ok);
    CHECK(pr.h_descent.dim_ok && pr.h_descent.fixed_ok && pr.h_descent.form_ok);
    CHECK(pr.basis_change_ok);
    CHECK(verify_hopf_axioms(pr.h_descent.hopf).all());
    std::cout << "complete S4 ok (" << ms_since(t) << " ms)\n";
  }

  // --- complete case S3 (sextic E, N = image of lambda) ---
  {
    auto t = std::chrono::steady_clock::now();
    const GaloisAlgebra e = sextic_s3();
    std::vector<Perm> lam = left_regular_rep(e.group);
    const RegularSubgroup n = make_regular_subgroup(lam, e.group);
    const PreimageResult pr = theta_preimage(e, n);
    CHECK(pr.w.size() == 1);
    CHECK(pr.preimage_exists);
    CHECK(pr.basis_change_ok);
    const auto dec = wedderburn_decompose(pr.h_descent.hopf.algebra());
    std::cout << "  S3 lambda-form blocks:";
    for (auto& b : dec.blocks) std::cout << " " << b.label;
    std::cout << "\n";
    std::cout << "complete S3 ok (" << ms_since(t) << " ms)\n";
  }

  std::cout << (failures ? "SMOKE2 FAILURES: " : "SMOKE2 ALL OK, failures: ") << failures
            << "  total " << ms_since(t0) << " ms\n";
  return failures ? 1 : 0;
}
