#include "hopfforms/cert.hpp"

#include <stdexcept>

namespace hopfforms::cert {

json rat_json(const Rat& r) {
  if (r.is_integer()) return r.num().get_str();
  return r.num().get_str() + "/" + r.den().get_str();
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("certificate: rational must be a string");
  return Rat::parse(j.get<std::string>());
}

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_json(r));
  return a;
}

QVec qvec_from_json(const json& j) {
  QVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json poly_json(const QPoly& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(rat_json(c));
  return a;
}

json cyc_json(const CycElem& e) {
  return json{{"conductor", e.conductor()}, {"coords", qvec_json(e.coords())}};
}

json perm_json(const Perm& p) { return json(p.images()); }

json group_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.size();
  j["table"] = g.table();
  j["preset"] = g.name();
  json labels = json::array();
  for (int a = 0; a < g.size(); ++a) labels.push_back(g.label(a));
  j["labels"] = labels;
  return j;
}

json subgroup_json(const RegularSubgroup& n) {
  json j;
  j["type"] = n.type;
  json elems = json::array();
  for (const Perm& p : n.elements) elems.push_back(perm_json(p));
  j["elements"] = elems;
  j["model"] = group_json(n.model);
  return j;
}

json conjugation_json(const ConjugationAction& ca) {
  json j;
  j["quotient_order"] = ca.quotient.group.size();
  j["action"] = ca.action;
  j["faithful"] = ca.faithful;
  j["onto_aut"] = ca.onto_aut;
  j["aut_order"] = ca.aut_order;
  return j;
}

namespace {

json sparse_mult_json(const std::vector<std::vector<QVec>>& mult) {
  json a = json::array();
  for (size_t i = 0; i < mult.size(); ++i)
    for (size_t j = 0; j < mult[i].size(); ++j)
      for (size_t k = 0; k < mult[i][j].size(); ++k)
        if (!mult[i][j][k].is_zero())
          a.push_back(json::array({i, j, k, rat_json(mult[i][j][k])}));
  return a;
}

json sparse_action_json(const std::vector<std::vector<QVec>>& action) {
  // One sparse table per acting element: [column, row, coefficient].
  json per_elem = json::array();
  for (const auto& cols : action) {
    json t = json::array();
    for (size_t col = 0; col < cols.size(); ++col)
      for (size_t row = 0; row < cols[col].size(); ++row)
        if (!cols[col][row].is_zero())
          t.push_back(json::array({col, row, rat_json(cols[col][row])}));
    per_elem.push_back(t);
  }
  return per_elem;
}

}  // namespace

json galois_json(const GaloisAlgebra& l) {
  json j;
  j["desc"] = l.desc;
  j["dim"] = l.alg.dim;
  j["components"] = l.comp_count;
  j["field"] = json{{"dim", l.comp_dim()}};
  j["group"] = group_json(l.group);
  j["mult"] = sparse_mult_json(l.alg.mult);
  j["one"] = qvec_json(l.alg.one);
  j["action"] = sparse_action_json(l.action);
  j["labels"] = l.basis_labels;
  return j;
}

json galois_check_json(const GaloisCheck& c) {
  json j;
  j["ok"] = c.ok;
  j["dim_ok"] = c.dim_ok;
  j["bijective"] = c.bijective;
  j["deficiency"] = c.deficiency;
  j["detail"] = c.detail;
  return j;
}

json hopf_json(const HopfAlgebra& h) {
  json j;
  j["dim"] = h.dim;
  j["mult"] = sparse_mult_json(h.mult);
  j["unit"] = qvec_json(h.unit);
  json cm = json::array();
  for (size_t i = 0; i < h.comult.size(); ++i)
    for (const auto& [a, b, c] : h.comult[i])
      if (!c.is_zero()) cm.push_back(json::array({i, a, b, rat_json(c)}));
  j["comult"] = cm;
  j["counit"] = qvec_json(h.counit);
  json s = json::array();
  for (const QVec& col : h.antipode) s.push_back(qvec_json(col));
  j["antipode"] = s;
  j["labels"] = h.basis_labels;
  j["desc"] = h.desc;
  return j;
}

HopfAlgebra hopf_from_json(const json& j) {
  HopfAlgebra h;
  h.dim = j.at("dim").get<int>();
  h.mult.assign(h.dim, std::vector<QVec>(h.dim, QVec(h.dim)));
  for (const auto& t : j.at("mult"))
    h.mult[t[0].get<int>()][t[1].get<int>()][t[2].get<int>()] = rat_from_json(t[3]);
  h.unit = qvec_from_json(j.at("unit"));
  h.comult.assign(h.dim, {});
  for (const auto& t : j.at("comult"))
    h.comult[t[0].get<int>()].emplace_back(t[1].get<int>(), t[2].get<int>(), rat_from_json(t[3]));
  h.counit = qvec_from_json(j.at("counit"));
  for (const auto& col : j.at("antipode")) h.antipode.push_back(qvec_from_json(col));
  if (j.contains("labels")) h.basis_labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("desc")) h.desc = j.at("desc").get<std::string>();
  return h;
}

json wedderburn_json(const WedderburnDecomposition& d) {
  json j;
  json blocks = json::array();
  json idems = json::array();
  for (const auto& b : d.blocks) {
    json bj;
    bj["k"] = b.division ? b.matrix_size / 2 : b.matrix_size;
    bj["center"] = b.center_degree == 1 ? "Q" : b.label;
    bj["dim"] = b.dim;
    bj["matrix_size"] = b.matrix_size;
    bj["center_degree"] = b.center_degree;
    bj["center_min_poly"] = poly_json(b.center_min_poly);
    bj["division"] = b.division;
    if (b.quaternion_symbols) {
      bj["quaternion_symbols"] = json::array(
          {rat_json(b.quaternion_symbols->first), rat_json(b.quaternion_symbols->second)});
      bj["ramified_places"] = b.ramified_places;
    }
    bj["label"] = b.label;
    blocks.push_back(bj);
    idems.push_back(qvec_json(b.idempotent));
  }
  j["blocks"] = blocks;
  j["witnesses"] = json{{"central_idempotents", idems}, {"total_block_dim", d.total_block_dim},
                        {"trace_form_rank", d.trace_form_rank}};
  j["verdict"] = d.semisimple;
  j["semisimple"] = d.semisimple;
  j["absolutely_semisimple"] = d.absolutely_semisimple;
  return j;
}

json abss_json(const AbsSemisimpleCertificate& c) {
  json j;
  j["dim_match"] = c.dim_match;
  j["split"] = c.split;
  j["algebra_profile"] = c.algebra_profile;
  j["group_profile"] = c.group_profile;
  j["profile_match"] = c.profile_match;
  j["verdict"] = c.verdict;
  j["decomposition"] = wedderburn_json(c.decomposition);
  return j;
}

json fixed_ring_json(const FixedRing& h) {
  json j;
  j["desc"] = h.desc;
  j["group"] = group_json(h.n);
  j["acting_group_order"] = h.base.group.size();
  j["ambient_dim"] = h.n.size() * h.base.alg.dim;
  j["dim"] = static_cast<int>(h.basis.size());
  j["dim_ok"] = h.dim_ok;
  j["fixed_ok"] = h.fixed_ok;
  j["form_rank"] = h.form_rank;
  j["form_ok"] = h.form_ok;
  json basis = json::array();
  for (const QVec& b : h.basis) basis.push_back(qvec_json(b));
  j["basis"] = basis;
  if (h.dim_ok && h.fixed_ok && h.form_ok) j["hopf"] = hopf_json(h.hopf);
  return j;
}

json invariant_json(const InvariantRecord& r) {
  json j;
  j["blocks"] = r.block_labels;
  j["block_count"] = r.block_count;
  j["grouplike_count"] = r.grouplike_count;
  j["quadratic_square_classes"] = r.quadratic_square_classes;
  j["min_split_field"] = r.min_split_field;
  return j;
}

json hopf_action_json(const HopfActionCheck& c) {
  json j;
  j["unit_acts_as_identity"] = c.unit_acts_as_identity;
  j["counit_on_one"] = c.counit_on_one;
  j["measures_products"] = c.measures_products;
  j["j_rank"] = c.j_rank;
  j["j_bijective"] = c.j_bijective;
  return j;
}

json preimage_json(const PreimageResult& p) {
  json j;
  j["w"] = p.w;
  j["w_order"] = static_cast<int>(p.w.size());
  j["conjugation"] = conjugation_json(p.ca);
  j["preimage_exists"] = p.preimage_exists;
  j["fixed_field"] = json{{"desc", p.ew.algebra.desc}, {"dim", p.ew.algebra.alg.dim},
                          {"galois", galois_check_json(p.ew_galois)}};
  j["quotient_form"] = fixed_ring_json(p.h_quotient);
  j["descent_form"] = fixed_ring_json(p.h_descent);
  j["basis_change_ok"] = p.basis_change_ok;
  return j;
}

json q8c8_json(const Q8C8Preimage& p) {
  json j;
  j["t"] = p.t_choice;
  j["d"] = static_cast<int>(p.d);
  j["pair"] = json::array({subgroup_json(p.pair_a), subgroup_json(p.pair_b)});
  j["w"] = p.w;
  j["w_match"] = p.w_match;
  j["quotient_proper"] = p.quotient_proper;
  j["theta_form"] = fixed_ring_json(p.theta_side);
  j["descent_form"] = fixed_ring_json(p.descent_side);
  json nb = json::array();
  for (const QVec& u : p.normalized_basis) nb.push_back(qvec_json(u));
  j["normalized_basis"] = nb;
  j["normalized_labels"] = p.normalized_labels;
  j["normalized_hopf"] = hopf_json(p.h_normalized);
  j["normalized_spans"] = p.normalized_spans;
  j["normalized_fixed"] = p.normalized_fixed;
  j["idempotent_diff_square_one"] = p.idempotent_diff_square_one;
  j["psi_in_descent"] = p.psi_in_descent;
  j["psi_multiplicative"] = p.psi_multiplicative;
  j["psi_hopf_compatible"] = p.psi_hopf_compatible;
  j["record"] = invariant_json(p.record);
  return j;
}

json greither_json(const GreitherForm& g) {
  json j;
  j["form"] = fixed_ring_json(g.form);
  j["block_unit"] = qvec_json(g.block_unit);
  j["basis_in_form"] = g.basis_in_form;
  j["relations_ok"] = g.relations_ok;
  j["nilpotent_ok"] = g.nilpotent_ok;
  j["decomposition"] = wedderburn_json(g.decomposition);
  j["abss"] = abss_json(g.abss);
  return j;
}

json greither_preimage_json(const GreitherPreimage& g) {
  json j;
  j["components"] = g.components;
  j["theta_form"] = fixed_ring_json(g.theta_of_l);
  j["profile"] = wedderburn_json(g.profile);
  j["matches_form"] = g.matches_form;
  j["form"] = greither_json(g.form);
  return j;
}

namespace {

bool all_bools_true(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j)
      if (!all_bools_true(v)) return false;
  }
  return true;
}

bool looks_like_hopf(const json& j) {
  return j.is_object() && j.contains("dim") && j.contains("mult") && j.contains("unit") &&
         j.contains("comult") && j.contains("counit") && j.contains("antipode");
}

void collect_hopf(const json& j, std::vector<const json*>& out) {
  if (looks_like_hopf(j)) {
    out.push_back(&j);
    return;
  }
  if (j.is_object() || j.is_array())
    for (const auto& v : j) collect_hopf(v, out);
}

}  // namespace

bool all_flags_true(const json& j) {
  if (j.is_object() && j.contains("flags")) return all_bools_true(j.at("flags"));
  return all_bools_true(j);
}

bool reverify_hopf(const json& cert) {
  std::vector<const json*> found;
  collect_hopf(cert, found);
  if (found.empty()) return false;
  for (const json* j : found) {
    const HopfAlgebra h = hopf_from_json(*j);
    if (!verify_hopf_axioms(h).all()) return false;
  }
  return true;
}

std::string dump_certificate(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hopfforms::cert
