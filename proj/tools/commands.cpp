#include "commands.hpp"

#include <sstream>

#include "agroup/classify.hpp"
#include "agroup/number_theory.hpp"
#include "agroup/steinitz.hpp"
#include "agroup/subgroup_algorithms.hpp"
#include "group_expr.hpp"

namespace agroup::cli {
namespace {

Json params_json(const FamilyParams& p) {
  return Json{{"p", p.p}, {"q", p.q}, {"r", p.r}, {"a", p.a}, {"b", p.b}};
}

Json trace_json(const APrimeTrace& t) {
  Json j{{"result", t.result}, {"rule", to_string(t.rule)}, {"order", t.order},
         {"detail", t.detail}};
  if (!t.attempts.empty()) j["attempts"] = t.attempts;
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(trace_json(c));
  j["children"] = std::move(children);
  return j;
}

Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::LatticeCapExceeded: return kExitResourceCap;
    case ErrorCode::NotAGroup:
    case ErrorCode::TooManyPrimes:
    case ErrorCode::DecompositionInvariantFailed: return kExitCheckFailed;
    default: return kExitInvalidInput;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

// ---------------------------------------------------------------------------
// verify

Json verify_report(const FamilyParams& params, const Limits& limits) {
  const FiniteGroup g = build_family_group(params, limits);
  Json report;
  report["params"] = params_json(params);
  report["order"] = g.order();

  const StructureReport s = structure_report(g);
  Json factorization = Json::array();
  for (auto [ell, e] : s.factorization) factorization.push_back({{"prime", ell}, {"exponent", e}});
  const bool a_group = std::all_of(s.sylows.begin(), s.sylows.end(),
                                   [](const SylowInfo& i) { return i.abelian; });
  report["structure"] = {{"factorization", factorization},
                         {"abelian", s.abelian},
                         {"solvable", s.solvable},
                         {"derived_length", s.derived_length},
                         {"derived_orders", s.derived_orders},
                         {"metabelian", s.metabelian},
                         {"is_a_group", a_group}};

  const auto exponents = sylow_exponent_report(g);
  Json sylow = Json::array();
  for (std::size_t i = 0; i < s.sylows.size(); ++i) {
    const auto& info = s.sylows[i];
    sylow.push_back({{"prime", info.prime},
                     {"order", info.order},
                     {"abelian", info.abelian},
                     {"normal", info.normal},
                     {"exponent", exponents[i].exponent}});
  }
  report["sylow"] = sylow;

  const auto lattice = normal_subgroups(g, limits);
  Json lattice_orders = Json::array();
  for (const auto& n : lattice) lattice_orders.push_back(n.size());
  Json pairs = Json::array();
  for (const auto& [n1, n2] : direct_factor_pairs(g, limits)) {
    pairs.push_back(Json::array({n1.size(), n2.size()}));
  }
  const auto primes = prime_divisors(g.order());
  Json halls = Json::array();
  for (std::uint32_t mask = 1; mask + 1 < (1u << primes.size()); ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) pi.push_back(primes[i]);
    }
    const auto hall = normal_hall(g, pi);
    halls.push_back({{"primes", pi},
                     {"order", hall ? Json(hall->size()) : Json(nullptr)},
                     {"abelian", hall ? Json(is_abelian(*hall)) : Json(nullptr)}});
  }
  const FamilyProjection proj = family_projection(g);
  const Subgroup cent = centralizer(proj.c_r);
  report["factorizations"] = {
      {"normal_subgroup_count", lattice.size()},
      {"normal_subgroup_orders", lattice_orders},
      {"direct_factor_pairs", pairs},
      {"normal_hall", halls},
      {"centralizer_cr",
       {{"order", cent.size()},
        {"expected", params.p * params.q * params.r},
        {"equals_coordinate_set", cent == proj.gamma}}}};

  const APrimeTrace trace = is_a_prime_group(g, limits);
  report["a_prime"] = {{"is_a_prime", trace.result}, {"trace", trace_json(trace)}};

  const SteinitzReport st = steinitz_report(g);
  Json st_exponents = Json::array();
  for (const auto& e : st.sylow_exponents) {
    st_exponents.push_back({{"prime", e.prime}, {"exponent", e.exponent}});
  }
  Json counts = Json::array();
  for (const auto& c : st.counts) {
    counts.push_back(
        {{"ell", c.ell}, {"elements", c.total}, {"case_a", c.case_a}, {"case_b", c.case_b}});
  }
  Json classes = Json::array();
  for (const auto& row : st.classes) {
    classes.push_back({{"ell", row.ell},
                       {"representative", row.representative},
                       {"size", row.size},
                       {"case", std::string(1, row.case_tag)},
                       {"normalizer_equals_centralizer", optional_json(row.normalizer_equals_centralizer)},
                       {"inside_h", optional_json(row.inside_h)},
                       {"exponent_times_two", row.exponent_times_two},
                       {"exponent", optional_json(row.exponent)},
                       {"absorbed", row.absorbed}});
  }
  report["steinitz"] = {{"parity_caveat", st.parity_caveat},
                        {"h_order", proj.h.size()},
                        {"gamma_order", proj.gamma.size()},
                        {"sylow_exponents", st_exponents},
                        {"counts", counts},
                        {"classes", classes},
                        {"all_checks_pass", st.all_checks_pass}};
  return report;
}

namespace {

struct NamedCheck {
  std::string name;
  bool ok;
};

std::vector<NamedCheck> verify_checks(const Json& r) {
  const Json& s = r.at("structure");
  const Json& f = r.at("factorizations");
  bool none_normal = true;
  for (const auto& row : r.at("sylow")) none_normal = none_normal && !row.at("normal").get<bool>();
  const Json& cent = f.at("centralizer_cr");
  return {
      {"A-group (all Sylow subgroups abelian)", s.at("is_a_group").get<bool>()},
      {"metabelian, derived length 2", s.at("metabelian").get<bool>() &&
                                           s.at("derived_length").get<std::size_t>() == 2},
      {"no Sylow subgroup is normal", none_normal},
      {"no direct factorization", f.at("direct_factor_pairs").empty()},
      {"not an A'-group", !r.at("a_prime").at("is_a_prime").get<bool>()},
      {"centralizer of C_r is C_p x C_q x C_r",
       cent.at("order") == cent.at("expected") && cent.at("equals_coordinate_set").get<bool>()},
      {"Steinitz group-theoretic checks", r.at("steinitz").at("all_checks_pass").get<bool>()},
  };
}

}  // namespace

int verify_exit_code(const Json& report) {
  for (const auto& c : verify_checks(report)) {
    if (!c.ok) return kExitCheckFailed;
  }
  return kExitOk;
}

std::string render_verify_text(const Json& r) {
  std::ostringstream os;
  const Json& p = r.at("params");
  os << "family group (p,q,r;a,b) = (" << p.at("p") << "," << p.at("q") << "," << p.at("r") << ";"
     << p.at("a") << "," << p.at("b") << ")\n";
  os << "order: " << r.at("order") << "\n";
  const Json& s = r.at("structure");
  os << "derived series orders:";
  for (const auto& o : s.at("derived_orders")) os << " " << o;
  os << "\n";
  os << "sylow subgroups:\n";
  for (const auto& row : r.at("sylow")) {
    os << "  " << row.at("prime") << ": order " << row.at("order")
       << ", abelian " << yes_no(row.at("abelian").get<bool>())
       << ", normal " << yes_no(row.at("normal").get<bool>())
       << ", exponent " << row.at("exponent") << "\n";
  }
  const Json& f = r.at("factorizations");
  os << "normal subgroups: " << f.at("normal_subgroup_count") << "\n";
  os << "direct factorizations: " << f.at("direct_factor_pairs").size() << "\n";
  os << "centralizer of C_r: order " << f.at("centralizer_cr").at("order") << "\n";
  os << "A'-group: " << yes_no(r.at("a_prime").at("is_a_prime").get<bool>()) << "\n";
  const Json& st = r.at("steinitz");
  os << "order-l classes (l, elements, case a, case b):\n";
  for (const auto& c : st.at("counts")) {
    os << "  " << c.at("ell") << ": " << c.at("elements") << ", " << c.at("case_a") << ", "
       << c.at("case_b") << "\n";
  }
  if (st.at("parity_caveat").get<bool>()) {
    os << "note: some prime equals 2; the odd-order Steinitz setting does not apply\n";
  }
  os << "checks:\n";
  for (const auto& c : verify_checks(r)) {
    os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// search

Json search_report(std::uint64_t max_order) {
  Json rows = Json::array();
  for (const auto& e : search_family(max_order)) {
    const bool minimal = multiplicative_order(e.params.p, e.params.q * e.params.r) == e.params.a &&
                         multiplicative_order(e.params.q, e.params.p * e.params.r) == e.params.b;
    rows.push_back({{"params", params_json(e.params)},
                    {"text", e.params.to_string()},
                    {"order", e.order},
                    {"minimal", minimal}});
  }
  return Json{{"max_order", max_order}, {"results", rows}};
}

std::string render_search_text(const Json& report) {
  std::ostringstream os;
  for (const auto& row : report.at("results")) {
    os << row.at("order").get<std::uint64_t>() << "\t" << row.at("text").get<std::string>()
       << (row.at("minimal").get<bool>() ? "" : "\t(non-minimal a,b)") << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// decompose

Json decompose_report(const std::string& spec, const Limits& limits) {
  const FiniteGroup g = parse_group(spec, limits);
  const TwoPrimeDecomposition d = two_prime_decompose(g);
  auto component_json = [](const PrimeComponent& c) {
    return Json{{"prime", c.prime},
                {"order", c.k.size()},
                {"derived_sylow_order", c.derived_sylow_order},
                {"quotient_order", c.quotient_order},
                {"quotient_sylow_order", c.quotient_sylow_order},
                {"quotient_derived_order", c.quotient_derived_order},
                {"fixed_point_order", c.fixed_point_order}};
  };
  return Json{{"spec", spec},
              {"order", g.order()},
              {"primes", prime_divisors(g.order())},
              {"components", Json::array({component_json(d.first), component_json(d.second)})},
              {"certificate", d.certificate}};
}

std::string render_decompose_text(const Json& report) {
  std::ostringstream os;
  os << "group: " << report.at("spec").get<std::string>() << " (order " << report.at("order")
     << ")\n";
  for (const auto& c : report.at("components")) {
    os << "K_" << c.at("prime") << ": order " << c.at("order") << "\n";
  }
  os << "certificate (" << report.at("certificate").size() << " checks passed):\n";
  for (const auto& line : report.at("certificate")) {
    os << "  " << line.get<std::string>() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// commands

CommandResult run_verify(const std::string& params_text, const CommandOptions& options) {
  CommandResult result;
  try {
    const FamilyParams params = FamilyParams::parse(params_text);
    const Json report = verify_report(params, options.limits);
    result.exit_code = verify_exit_code(report);
    result.output = options.json ? report.dump(2) + "\n" : render_verify_text(report);
  } catch (const Error& e) {
    result.exit_code = e.code() == ErrorCode::SizeCapExceeded ||
                               e.code() == ErrorCode::LatticeCapExceeded
                           ? kExitResourceCap
                           : kExitInvalidInput;
    result.error = e.what();
  }
  return result;
}

CommandResult run_search(std::uint64_t max_order, const CommandOptions& options) {
  CommandResult result;
  if (max_order < 1) {
    result.exit_code = kExitInvalidInput;
    result.error = "--max-order must be at least 1";
    return result;
  }
  const Json report = search_report(max_order);
  result.output = options.json ? report.dump(2) + "\n" : render_search_text(report);
  return result;
}

CommandResult run_decompose(const std::string& spec, const CommandOptions& options) {
  CommandResult result;
  try {
    const Json report = decompose_report(spec, options.limits);
    result.output = options.json ? report.dump(2) + "\n" : render_decompose_text(report);
  } catch (const Error& e) {
    result.exit_code = exit_for(e);
    result.error = e.what();
  }
  return result;
}

}  // namespace agroup::cli
