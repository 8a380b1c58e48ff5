#include "rootbalance/json_io.hpp"

#include "rootbalance/errors.hpp"

namespace rootbalance {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

const Json& sub(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json verified_field(std::optional<bool> v) { return v ? Json(*v) : Json(nullptr); }

Json functional_json(const ParityFunctional& f) {
  return Json{{"numerator", f.numerator}, {"denominator", f.denominator}};
}

ParityFunctional functional_from(const Json& j) {
  ParityFunctional f;
  f.numerator = field<std::vector<long long>>(j, "numerator");
  f.denominator = field<long long>(j, "denominator");
  if (f.denominator == 0) throw FormatError("zero denominator");
  return f;
}

Json indices_json(const SubsetSelection& s) { return Json(s.indices); }

SubsetSelection indices_from(const Json& j) {
  SubsetSelection s;
  try {
    s.indices = j.get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad index list: ") + e.what());
  }
  return s;
}

SOSizeMethod so_method_from(std::string_view name) {
  for (auto m : {SOSizeMethod::Enumeration, SOSizeMethod::SupportPacking})
    if (to_string(m) == name) return m;
  throw FormatError("unknown method '" + std::string(name) + "'");
}

SORefinement refinement_from(std::string_view name) {
  for (auto r : {SORefinement::None, SORefinement::EvenCoordinateParity, SORefinement::OddCoordinateParity,
                 SORefinement::LongRootExclusion})
    if (to_string(r) == name) return r;
  throw FormatError("unknown refinement '" + std::string(name) + "'");
}

Json payload_json(const WitnessPayload& p) { return to_json(p.certificate); }

Json payload_json(const CoordinateParityPayload& p) {
  return Json{{"odd_counts", p.odd_counts},
              {"odd_coordinates", p.odd_coordinates},
              {"max_odd_entries_per_root", p.max_odd_entries_per_root}};
}

Json payload_json(const PairCountPayload& p) {
  return Json{{"functional", functional_json(p.functional)},
              {"term_count", p.term_count},
              {"coordinate_evenness", p.coordinate_evenness},
              {"coordinate_counts", p.coordinate_counts}};
}

Json payload_json(const E7PairScanPayload& p) {
  Json pairs = Json::array();
  for (const auto& e : p.pairs) pairs.push_back(Json::array({e.first, e.second, e.beta, e.orthogonal}));
  return Json{{"v_dot_two_rho", p.v_dot_two_rho},
              {"single_root_beta", p.single_root_beta},
              {"pairs", pairs},
              {"orthogonal_pairs", p.orthogonal_pairs},
              {"surviving_pairs", p.surviving_pairs}};
}

Json payload_json(const SOSizePayload& p) {
  return Json{{"method", to_string(p.method)},
              {"so_max", p.so_max},
              {"attaining", indices_json(p.attaining)},
              {"refinement", to_string(p.refinement)},
              {"exclusion_functional", functional_json(p.exclusion_functional)}};
}

Json payload_json(const LatticeParityPayload& p) {
  return Json{{"subset", indices_json(p.subset)},
              {"functional", functional_json(p.functional)},
              {"odd_total", p.odd_total}};
}

Json payload_json(const ExhaustiveSearchPayload& p) {
  Json sizes = Json::array();
  for (const auto& [size, count] : p.refuted_sizes) sizes.push_back(Json::array({size, count}));
  return Json{{"quantity", to_string(p.quantity)}, {"refuted_sizes", sizes}, {"so_max", p.so_max}};
}

Json payload_json(const TrivialBoundPayload&) { return Json::object(); }

CertificatePayload payload_from(CertificateKind kind, const Json& j) {
  switch (kind) {
  case CertificateKind::Witness: return WitnessPayload{wellbalanced_from_json(j)};
  case CertificateKind::CoordinateParity: {
    CoordinateParityPayload p;
    p.odd_counts = field<std::vector<std::size_t>>(j, "odd_counts");
    p.odd_coordinates = field<std::vector<std::size_t>>(j, "odd_coordinates");
    p.max_odd_entries_per_root = field<std::size_t>(j, "max_odd_entries_per_root");
    return p;
  }
  case CertificateKind::PairCountParity: {
    PairCountPayload p;
    p.functional = functional_from(sub(j, "functional"));
    p.term_count = field<long long>(j, "term_count");
    p.coordinate_evenness = field<bool>(j, "coordinate_evenness");
    p.coordinate_counts = field<std::vector<std::size_t>>(j, "coordinate_counts");
    return p;
  }
  case CertificateKind::E7PairScan: {
    E7PairScanPayload p;
    p.v_dot_two_rho = field<long long>(j, "v_dot_two_rho");
    p.single_root_beta = field<std::vector<std::size_t>>(j, "single_root_beta");
    for (const auto& e : sub(j, "pairs")) {
      if (!e.is_array() || e.size() != 4) throw FormatError("pair entry must have four fields");
      p.pairs.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(),
                         e[3].get<bool>()});
    }
    p.orthogonal_pairs = field<std::size_t>(j, "orthogonal_pairs");
    p.surviving_pairs = field<std::size_t>(j, "surviving_pairs");
    return p;
  }
  case CertificateKind::SOSizeBound: {
    SOSizePayload p;
    p.method = so_method_from(field<std::string>(j, "method"));
    p.so_max = field<std::size_t>(j, "so_max");
    p.attaining = indices_from(sub(j, "attaining"));
    p.refinement = refinement_from(field<std::string>(j, "refinement"));
    p.exclusion_functional = functional_from(sub(j, "exclusion_functional"));
    return p;
  }
  case CertificateKind::LatticeParity: {
    LatticeParityPayload p;
    p.subset = indices_from(sub(j, "subset"));
    p.functional = functional_from(sub(j, "functional"));
    p.odd_total = field<long long>(j, "odd_total");
    return p;
  }
  case CertificateKind::ExhaustiveSearch: {
    ExhaustiveSearchPayload p;
    p.quantity = quantity_from_string(field<std::string>(j, "quantity"));
    for (const auto& e : sub(j, "refuted_sizes")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("refuted size entry must have two fields");
      p.refuted_sizes.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    p.so_max = field<std::size_t>(j, "so_max");
    return p;
  }
  case CertificateKind::TrivialBound: return TrivialBoundPayload{};
  }
  throw FormatError("unknown certificate kind");
}

} // namespace

Json label_json(const DynkinLabel& label) {
  return Json{{"family", std::string(1, static_cast<char>(label.family))}, {"rank", label.rank}};
}

DynkinLabel label_from_json(const Json& j) {
  try {
    return DynkinLabel::parse(field<std::string>(j, "family"), field<int>(j, "rank"));
  } catch (const InadmissibleRank& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(Json(std::vector<int>(r.doubled().begin(), r.doubled().end())));
  Json j = label_json(rs.label());
  j["ambient_dim"] = rs.ambient_dim();
  j["scale"] = 2;
  j["positive_roots"] = roots;
  return j;
}

RootSystem root_system_from_json(const Json& j) {
  RootSystem rs(label_from_json(j));
  if (field<std::size_t>(j, "ambient_dim") != rs.ambient_dim()) throw FormatError("ambient_dim mismatch");
  if (field<int>(j, "scale") != 2) throw FormatError("unsupported coordinate scale");
  const auto roots = field<std::vector<std::vector<int>>>(j, "positive_roots");
  if (roots.size() != rs.size()) throw FormatError("positive root count mismatch");
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (CoordVector(roots[i]) != rs.root(i))
      throw FormatError("positive root " + std::to_string(i) + " differs from the canonical list");
  return rs;
}

Json to_json(const DynkinLabel& system, const SubsetSelection& s) {
  return Json{{"system", label_json(system)}, {"indices", indices_json(s)}};
}

SubsetSelection subset_from_json(const Json& j, const RootSystem& rs) {
  if (label_from_json(sub(j, "system")) != rs.label()) throw FormatError("subset belongs to another system");
  try {
    return SubsetSelection::of(rs, indices_from(sub(j, "indices")).indices);
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const SignedCombination& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(Json::array({t.index, t.sign}));
  return Json{{"system", label_json(s.system)}, {"terms", terms}};
}

SignedCombination signed_combination_from_json(const Json& j) {
  SignedCombination s;
  s.system = label_from_json(sub(j, "system"));
  for (const auto& t : sub(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw FormatError("term must be [index, sign]");
    const int sign = t[1].get<int>();
    if (sign != 1 && sign != -1) throw FormatError("sign must be +1 or -1");
    s.terms.push_back({t[0].get<std::size_t>(), sign});
  }
  return s;
}

Json to_json(const WellBalancedCertificate& wb) {
  return Json{{"system", label_json(wb.system)},
              {"subset", indices_json(wb.subset)},
              {"witness", to_json(wb.witness)},
              {"complement", indices_json(wb.complement)},
              {"complement_strongly_orthogonal", wb.complement_strongly_orthogonal},
              {"cocardinality", wb.cocardinality}};
}

WellBalancedCertificate wellbalanced_from_json(const Json& j) {
  WellBalancedCertificate wb;
  wb.system = label_from_json(sub(j, "system"));
  wb.subset = indices_from(sub(j, "subset"));
  wb.witness = signed_combination_from_json(sub(j, "witness"));
  wb.complement = indices_from(sub(j, "complement"));
  wb.complement_strongly_orthogonal = field<bool>(j, "complement_strongly_orthogonal");
  wb.cocardinality = field<std::size_t>(j, "cocardinality");
  return wb;
}

Json to_json(const Certificate& c, std::optional<bool> verified) {
  return Json{{"kind", to_string(c.kind())},
              {"system", label_json(c.system)},
              {"value", c.value},
              {"payload", std::visit([](const auto& p) { return payload_json(p); }, c.payload)},
              {"verified", verified_field(verified)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const auto kind = certificate_kind_from_string(field<std::string>(j, "kind"));
  c.system = label_from_json(sub(j, "system"));
  c.value = field<int>(j, "value");
  c.payload = payload_from(kind, sub(j, "payload"));
  return c;
}

Json to_json(const ExtremalReport& r, std::optional<bool> lower_verified, std::optional<bool> upper_verified) {
  return Json{{"label", label_json(r.label)},
              {"quantity", to_string(r.quantity)},
              {"value", r.value},
              {"method", to_string(r.method)},
              {"lower_certificate", to_json(r.lower_certificate, lower_verified)},
              {"upper_certificate", to_json(r.upper_certificate, upper_verified)}};
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json certs = Json::array();
    for (std::size_t i = 0; i < row.certificates.size(); ++i)
      certs.push_back(to_json(row.certificates[i],
                              i < row.verified.size() ? std::optional<bool>(row.verified[i]) : std::nullopt));
    Json jr{{"label", row.label.to_string()},
            {"quantity", row.quantity},
            {"table_value", row.table_value},
            {"computed_value", row.computed_value},
            {"method", row.method},
            {"pass", row.pass}};
    if (!row.detail.empty()) jr["detail"] = row.detail;
    jr["certificates"] = certs;
    rows.push_back(jr);
  }
  return Json{{"rows", rows}, {"ab_tables_agree", r.ab_tables_agree}, {"all_pass", r.all_pass()}};
}

Json to_json(const C5RemarkReport& r) {
  Json singles = Json::array();
  for (const auto& c : r.single_removals) singles.push_back(to_json(c, r.single_removals_ok));
  return Json{{"spliced", to_json(r.spliced)},
              {"spliced_terms", r.spliced.witness.terms.size()},
              {"spliced_ok", r.spliced_ok},
              {"odd_e5_roots", r.odd_e5_roots},
              {"single_removals", singles},
              {"single_removals_ok", r.single_removals_ok},
              {"full_set", to_json(r.full_set, r.full_set_ok)},
              {"full_set_ok", r.full_set_ok},
              {"ok", r.ok()}};
}

} // namespace rootbalance
