// Acceptance gate: one PASS/FAIL line per criterion, exit code = #failures.
// Time limits are pinned here, next to the checks they bound.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfforms/cert.hpp"
#include "hopfforms/theta.hpp"

using namespace hopfforms;
using json = nlohmann::ordered_json;

namespace {

constexpr double kTripleFormSeconds = 1.0;    // criterion 1: CLI round trip
constexpr double kIdempotentSeconds = 5.0;    // criterion 2: all four (p, m)
constexpr double kQ8SearchSeconds = 60.0;     // criterion 3: Q8 enumeration, 1 worker
constexpr double kMatrixBlockSeconds = 120.0; // criterion 7: form + 12-component preimage

int g_failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!why.empty()) why += "; ";
      why += what;
    }
  }
  ~Criterion() {
    if (ok) {
      std::cout << "PASS " << name << "\n";
    } else {
      std::cout << "FAIL " << name << " (" << why << ")\n";
      ++g_failures;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliResult {
  int code = -1;
  std::string out;
  double seconds = 0;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(HOPFCLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.seconds = seconds_since(t0);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cycle_display(const Perm& p) {
  const auto& img = p.images();
  std::vector<bool> seen(img.size(), false);
  std::string s;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i] || img[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(img[j]);
    }
    s += ")";
  }
  return s.empty() ? "(1)" : s;
}

std::set<std::string> cycle_set(const RegularSubgroup& n) {
  std::set<std::string> out;
  for (const Perm& p : n.elements) out.insert(cycle_display(p));
  return out;
}

std::vector<std::string> block_labels(const WedderburnDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& b : d.blocks) out.push_back(b.label);
  return out;
}

GaloisAlgebra build_gl2f3() {
  const FiniteGroup c3sq = FiniteGroup::elementary_abelian(3, 2);
  const AutomorphismGroup aut = automorphism_group(c3sq);
  std::vector<int> dbl(9);
  for (int x = 0; x < 9; ++x) dbl[x] = c3sq.mult(x, x);
  int di = -1;
  for (size_t i = 0; i < aut.maps.size(); ++i)
    if (aut.maps[i] == dbl) di = static_cast<int>(i);
  return build_F_galois(aut.group, {0, di}, cyclotomic_field_with_units(3, {1, 2}));
}

GaloisAlgebra build_greither12() {
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  const AutomorphismGroup aut = automorphism_group(q8);
  const std::vector<int> conj_k = {0, 1, 3, 2, 5, 4, 6, 7};
  int ck = -1;
  for (size_t i = 0; i < aut.maps.size(); ++i)
    if (aut.maps[i] == conj_k) ck = static_cast<int>(i);
  return build_F_galois(aut.group, {0, ck}, cyclotomic_field_with_units(4, {1, 3}));
}

// every Hopf presentation produced during the run, re-checked in criterion 10
std::vector<std::pair<std::string, HopfAlgebra>> g_presentations;
void note(const std::string& name, const HopfAlgebra& h) { g_presentations.emplace_back(name, h); }

}  // namespace

static void criterion_1() {
  Criterion c{"01 quadratic-split form of Q[C3]: three group-likes, cyclic of order 3"};
  const CliResult r = run_cli("theta --L trivial:C2 --N C3");
  c.expect(r.code == 0, "CLI exit " + std::to_string(r.code));
  c.expect(r.seconds < kTripleFormSeconds,
           "took " + std::to_string(r.seconds) + "s (limit 1s)");
  if (r.code == 0) {
    const json j = json::parse(r.out);
    c.expect(j["grouplike_count"] == 3, "group-like count != 3");
    c.expect(j["grouplike_group_type"] == "C3", "group-like group is not C3");
  }

  // ambient identification, up to relabeling: {1, e1 s + eg s^2, eg s + e1 s^2}
  const FixedRing h =
      theta(trivial_extension(FiniteGroup::cyclic(2)), FiniteGroup::cyclic(3),
            {{0, 1, 2}, {0, 2, 1}});
  QVec one = qvec_zero(6), x = qvec_zero(6), y = qvec_zero(6);
  one[0] = one[1] = Rat(1);
  x[2] = x[5] = Rat(1);
  y[3] = y[4] = Rat(1);
  const auto gls = grouplikes(h.hopf);
  c.expect(gls.size() == 3, "library group-like count != 3");
  std::vector<QVec> ambient;
  for (const QVec& g : gls) ambient.push_back(h.to_ambient(g));
  for (const QVec& expected : {one, x, y})
    c.expect(std::count(ambient.begin(), ambient.end(), expected) == 1,
             "expected group-like missing in ambient coordinates");
  c.expect(is_isomorphic(grouplike_group(h.hopf).group, FiniteGroup::cyclic(3)),
           "group-likes not cyclic of order 3");
  note("c3-triple-form", h.hopf);
}

static void criterion_2() {
  Criterion c{"02 prime-power idempotents for (3,1) (5,1) (7,1) (3,2), theta splits"};
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const KohlIdempotents k = kohl_idempotents(p, m);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(m) + ")";
    c.expect(k.orthogonal_idempotents, tag + " idempotents not orthogonal");
    c.expect(k.sum_is_one, tag + " idempotents do not sum to 1");
    c.expect(k.fixed_under_units, tag + " idempotents not unit-fixed");

    const GaloisAlgebra l = cyclotomic_galois(k.n);
    const FixedRing h = theta(l, FiniteGroup::cyclic(k.n), residue_embed(l.group, k.n));
    c.expect(h.dim_ok && h.fixed_ok && h.form_ok, tag + " fixed ring flags");
    const auto dec = wedderburn_decompose(h.hopf.algebra());
    bool split = dec.blocks.size() == static_cast<size_t>(k.n);
    for (const auto& b : dec.blocks) split = split && b.label == "Q";
    c.expect(split, tag + " theta is not Q^" + std::to_string(k.n));
    c.expect(matches_dual_cyclic(h.hopf), tag + " theta not the dual cyclic presentation");
    note("cyclotomic-" + std::to_string(k.n), h.hopf);
  }
  const double took = seconds_since(t0);
  c.expect(took < kIdempotentSeconds, "took " + std::to_string(took) + "s (limit 5s)");
}

static void criterion_3() {
  Criterion c{"03 structure counts 3/3/6 and the displayed cycle sets"};
  const FiniteGroup v4 = FiniteGroup::elementary_abelian(2, 2);
  const auto v4subs = enumerate_regular_subgroups(v4);
  int c4 = 0;
  for (const auto& s : v4subs) c4 += s.type == "C4";
  c.expect(c4 == 3, "(C2xC2, C4) count != 3");

  const std::set<std::string> lambda_display = {"(1)", "(1,2)(3,4)", "(1,3)(2,4)",
                                                "(1,4)(2,3)"};
  c.expect(cycle_set(make_regular_subgroup(left_regular_rep(v4), v4)) == lambda_display,
           "lambda(C2xC2) cycle display mismatch");
  const std::set<std::string> n_display = {"(1)", "(1,3,2,4)", "(1,2)(3,4)", "(1,4,2,3)"};
  bool displayed = false;
  for (const auto& s : v4subs) displayed = displayed || cycle_set(s) == n_display;
  c.expect(displayed, "no C4 subgroup shows the displayed cycle set");

  const auto s3subs = enumerate_regular_subgroups(FiniteGroup::symmetric(3));
  int c6 = 0;
  for (const auto& s : s3subs) c6 += s.type == "C6";
  c.expect(c6 == 3, "(S3, C6) count != 3");

  const auto t0 = std::chrono::steady_clock::now();
  EnumerateOptions one_worker;
  one_worker.workers = 1;
  const auto q8subs = enumerate_regular_subgroups(FiniteGroup::quaternion8(), one_worker);
  const double took = seconds_since(t0);
  int c8 = 0;
  for (const auto& s : q8subs) c8 += s.type == "C8";
  c.expect(c8 == 6, "(Q8, C8) count != 6");
  c.expect(took < kQ8SearchSeconds, "Q8 search took " + std::to_string(took) + "s (limit 60s)");
}

static void criterion_4() {
  Criterion c{"04 fixed fields Q(sqrt2) and Q(zeta3); the C6 descent is the dual of Q[C6]"};
  const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
  QVec one4 = qvec_zero(4), sqrt2 = qvec_zero(4);
  one4[0] = Rat(1);
  sqrt2[1] = Rat(1);
  bool found_sqrt2_case = false;
  for (const auto& s : enumerate_regular_subgroups(e.group)) {
    if (s.type != "C4") continue;
    const PreimageResult pr = theta_preimage(e, s);
    if (pr.w != std::vector<int>{0, 1}) continue;  // W = {1, sigma}
    found_sqrt2_case = true;
    c.expect(pr.ca.onto_aut && pr.ca.quotient.group.size() == 2 && pr.ca.aut_order == 2,
             "lambda(G)/W is not Aut(C4)");
    c.expect(pr.ew.basis.size() == 2 && pr.ew.basis[0] == one4 && pr.ew.basis[1] == sqrt2,
             "E^W is not Q(sqrt2)");
    c.expect(pr.ew_galois.ok, "E^W not Galois over the quotient");
    c.expect(pr.basis_change_ok, "quotient presentation does not match the descent");
    note("biquad-c4-descent", pr.h_descent.hopf);
  }
  c.expect(found_sqrt2_case, "no C4 subgroup with W = {1, sigma}");

  const GaloisAlgebra s = sextic_s3();
  QVec one6 = qvec_zero(6), w = qvec_zero(6);
  one6[0] = Rat(1);
  w[3] = Rat(1);
  // pinned to the presentation itself: the dual of Q[C6] carries exactly
  // these group-likes, and the descent must agree with it
  const size_t dual_c6_grouplikes = grouplikes(dual_cyclic(6)).size();
  c.expect(dual_c6_grouplikes == 2, "dual cyclic 6 group-like count changed");
  for (const auto& n : enumerate_regular_subgroups(s.group)) {
    if (n.type != "C6") continue;
    const PreimageResult pr = theta_preimage(s, n);
    bool w_is_c3 = pr.w.size() == 3;
    for (int g : pr.w) w_is_c3 = w_is_c3 && (g == 0 || s.group.order_of(g) == 3);
    c.expect(w_is_c3, "W is not the rotation C3");
    c.expect(pr.ew.basis.size() == 2 && pr.ew.basis[0] == one6 && pr.ew.basis[1] == w,
             "E^W is not Q(zeta3)");
    c.expect(pr.preimage_exists, "G/W misses Aut(C6)");
    c.expect(pr.basis_change_ok, "quotient presentation mismatch");
    const InvariantRecord rec = hopf_invariants(pr.h_descent);
    c.expect(rec.block_labels == std::vector<std::string>(6, "Q"),
             "C6 descent does not split into six rational blocks");
    c.expect(rec.grouplike_count == static_cast<int>(dual_c6_grouplikes),
             "C6 descent group-like count != dual cyclic count");
    c.expect(matches_dual_cyclic(pr.h_descent.hopf), "C6 descent is not the dual of Q[C6]");
    note("sextic-c6-descent", pr.h_descent.hopf);
  }
}

static void criterion_5() {
  Criterion c{"05 the Galois-descent action map j is bijective (rank 16)"};
  const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
  for (const auto& s : enumerate_regular_subgroups(e.group)) {
    if (s.type != "C4") continue;
    const FixedRing h = descend(e, s);
    const HopfActionCheck hc = hopf_action(h, s);
    c.expect(hc.j_rank == 16, "j rank " + std::to_string(hc.j_rank) + " != 16");
    c.expect(hc.j_bijective, "j not bijective");
    c.expect(hc.unit_acts_as_identity && hc.counit_on_one && hc.measures_products,
             "module-algebra identities failed");
  }
}

static void criterion_6() {
  Criterion c{"06 cyclic-C8 family: beta^2 = d checks, psi multiplicative, records by d"};
  const Q8C8Preimage pi2 = q8_c8_preimage("i", 2);
  const Q8C8Preimage pj2 = q8_c8_preimage("j", 2);
  const Q8C8Preimage pk2 = q8_c8_preimage("k", 2);
  const Q8C8Preimage pi3 = q8_c8_preimage("i", 3);
  for (const Q8C8Preimage* p : {&pi2, &pj2, &pk2, &pi3}) {
    const std::string tag = p->t_choice + ",d=" + std::to_string(p->d);
    c.expect(p->w_match, tag + ": pair W mismatch");
    c.expect(p->quotient_proper, tag + ": quotient not proper in Aut(C8)");
    c.expect(p->normalized_fixed && p->normalized_spans, tag + ": fixed-ring basis checks");
    c.expect(p->idempotent_diff_square_one, tag + ": (f2 - f1)^2 != 1");
    c.expect(p->psi_in_descent && p->psi_multiplicative, tag + ": psi fails");
    c.expect(p->psi_hopf_compatible, tag + ": psi not a Hopf match");
    note("q8-c8-" + tag, p->h_normalized);
  }
  c.expect(pi2.record == pj2.record && pi2.record == pk2.record,
           "records differ across t at d = 2");
  c.expect(pi2.record.quadratic_square_classes == std::vector<std::string>{"-2", "-2", "-2"},
           "d = 2 square classes");
  c.expect(pi3.record.quadratic_square_classes == std::vector<std::string>{"-3"},
           "d = 3 square classes");
  c.expect(!(pi2.record == pi3.record), "d = 2 and d = 3 records agree");
}

static void criterion_7() {
  Criterion c{"07 matrix-block form over Q8 and its 12-component preimage"};
  const auto t0 = std::chrono::steady_clock::now();
  const GreitherForm g = greither_form();
  c.expect(g.form.dim_ok && g.form.fixed_ok && g.form.form_ok, "form flags");
  c.expect(g.basis_in_form, "quaternion-part basis not inside the form");
  c.expect(g.relations_ok, "basis relations failed");
  c.expect(g.nilpotent_ok, "(zeta u - w)^2 != 0");
  c.expect(block_labels(g.decomposition) ==
               std::vector<std::string>{"Q", "Q", "Q", "Q", "Mat2(Q)"},
           "block profile is not Q^4 x Mat2(Q)");
  c.expect(g.abss.verdict, "form not absolutely semisimple");
  note("greither-form", g.form.hopf);

  const GreitherPreimage gp = theta_preimage_greither();
  c.expect(gp.components == 12, "preimage does not have 12 components");
  c.expect(gp.matches_form, "theta of the preimage does not reproduce the form");
  const double took = seconds_since(t0);
  c.expect(took < kMatrixBlockSeconds, "took " + std::to_string(took) + "s (limit 120s)");
}

static void criterion_8() {
  Criterion c{"08 split-semisimplicity verdicts across the catalog"};
  const auto verdict = [](const AssocAlgebra& a, const FiniteGroup& n) {
    return is_absolutely_semisimple(a, n).verdict;
  };
  c.expect(verdict(group_algebra(FiniteGroup::dihedral(3)).algebra(), FiniteGroup::dihedral(3)),
           "Q[D3] should be split");
  c.expect(verdict(group_algebra(FiniteGroup::dihedral(4)).algebra(), FiniteGroup::dihedral(4)),
           "Q[D4] should be split");
  c.expect(!verdict(group_algebra(FiniteGroup::quaternion8()).algebra(),
                    FiniteGroup::quaternion8()),
           "Q[Q8] must not be split");
  for (int n = 2; n <= 12; ++n)
    c.expect(verdict(dual_of_group_algebra(FiniteGroup::cyclic(n)).algebra(),
                     FiniteGroup::cyclic(n)),
             "(Q[C" + std::to_string(n) + "])* should be split");
  const FiniteGroup c3sq = FiniteGroup::elementary_abelian(3, 2);
  const GaloisAlgebra l = build_gl2f3();
  const FixedRing h = theta(l, c3sq, automorphism_group(c3sq).maps);
  const AbsSemisimpleCertificate cert = is_absolutely_semisimple(h.hopf.algebra(), c3sq);
  c.expect(cert.verdict && cert.decomposition.blocks.size() == 9,
           "theta over the full affine group is not Q^9");
  note("gl2f3-form", h.hopf);
}

static void criterion_9() {
  Criterion c{"09 automorphism groups and holomorphs of the catalog groups"};
  c.expect(is_isomorphic(automorphism_group(FiniteGroup::dihedral(3)).group,
                         FiniteGroup::dihedral(3)),
           "Aut(D3) != D3");
  c.expect(is_isomorphic(automorphism_group(FiniteGroup::dihedral(4)).group,
                         FiniteGroup::dihedral(4)),
           "Aut(D4) != D4");
  const AutomorphismGroup aq8 = automorphism_group(FiniteGroup::quaternion8());
  c.expect(aq8.group.size() == 24, "|Aut(Q8)| != 24");
  c.expect(is_isomorphic(aq8.group, FiniteGroup::symmetric(4)), "Aut(Q8) != S4");
  c.expect(automorphism_group(FiniteGroup::elementary_abelian(3, 2)).group.size() == 48,
           "|Aut(C3xC3)| != 48");
  c.expect(is_isomorphic(FiniteGroup::holomorph_cyclic(3), FiniteGroup::dihedral(3)),
           "Hol(C3) != D3");
  c.expect(is_isomorphic(FiniteGroup::holomorph_cyclic(4), FiniteGroup::dihedral(4)),
           "Hol(C4) != D4");
}

static void criterion_10() {
  Criterion c{"10 axioms everywhere, reciprocity, Galois bijectivity, deterministic gallery"};
  for (const auto& [name, h] : g_presentations)
    c.expect(verify_hopf_axioms(h).all(), "axioms failed for " + name);
  for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::elementary_abelian(2, 2),
                               FiniteGroup::dihedral(4), FiniteGroup::quaternion8(),
                               FiniteGroup::symmetric(3)}) {
    c.expect(verify_hopf_axioms(group_algebra(g)).all(), "axioms failed for Q[" + g.name() + "]");
    c.expect(verify_hopf_axioms(dual_of_group_algebra(g)).all(),
             "axioms failed for (Q[" + g.name() + "])*");
  }

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> pick(-30, 30);
  const std::vector<long> places = {0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  int tested = 0, balanced = 0;
  while (tested < 50) {
    const long a = pick(rng), b = pick(rng);
    if (a == 0 || b == 0) continue;
    ++tested;
    int prod = 1;
    for (long p : places) prod *= hilbert_symbol(Rat(a), Rat(b), p);
    balanced += prod == 1;
  }
  c.expect(balanced == 50, "reciprocity failed on " + std::to_string(50 - balanced) + " pairs");

  int idx = 0;
  for (const GaloisAlgebra& l :
       {trivial_extension(FiniteGroup::cyclic(2)), cyclotomic_galois(3), cyclotomic_galois(5),
        cyclotomic_galois(7), cyclotomic_galois(9),
        build_F_galois(FiniteGroup::units_mod(8), {0, 1}, quadratic_field_with_negation(2)),
        build_F_galois(FiniteGroup::units_mod(8), {0, 1}, quadratic_field_with_negation(3)),
        biquadratic_sqrt2_sqrt3(), sextic_s3(), build_gl2f3(), build_greither12()}) {
    c.expect(verify_galois(l).ok, "Galois map not bijective for catalog entry #" +
                                      std::to_string(idx));
    ++idx;
  }

  const CliResult a = run_cli("gallery");
  const CliResult b = run_cli("gallery");
  c.expect(a.code == 0, "gallery exit " + std::to_string(a.code));
  c.expect(!a.out.empty() && a.out == b.out, "gallery runs are not byte-identical");
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (10 - g_failures) << "/10)\n";
  return g_failures;
}
