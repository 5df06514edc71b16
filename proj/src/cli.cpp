#include "quiddity/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "quiddity/json_io.hpp"

namespace quiddity::cli {

namespace {

const char* const kUpperBoundSource =
    "upper bound |SL2(A)|/(2|A|) + 2, or |SL2(A)|/|A| + 2 in characteristic 2: published result, "
    "used as the stopping rule and not re-proved";
const char* const kLowerBoundSource =
    "lower bound max(4, char A), or 4 in characteristic 2: published result, checked against the computed value";

struct Options {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string ring;
  std::string tuple;
  std::size_t size = 0;
  bool raw = false;
  bool timing = false;
  std::uint64_t height = 2;
  std::uint64_t degree = 2;
  std::string name;
  std::vector<std::string> params;
  bool verify = false;
};

struct Result {
  std::string status = "ok";
  Json payload = Json::object();
  Json provenance = Json::array();
  std::vector<std::string> lines;  // tsv form
  int code = kOk;
};

class Refusal : public std::runtime_error {
 public:
  Refusal(const std::string& what, Json payload) : std::runtime_error(what), payload_(std::move(payload)) {}
  const Json& payload() const { return payload_; }

 private:
  Json payload_;
};

std::string tsv_entries(const Ring& ring, std::span<const Element> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += ring.format(t[i]);
  }
  return s;
}

RingPtr finite_ring(const Options& o, const char* what) {
  RingPtr r = Ring::parse(o.ring);
  if (!r->is_finite()) {
    throw Refusal(std::string(what) + " needs a finite ring; " + r->expression() + " is infinite",
                  {{"ring", r->expression()}, {"reason", "infinite ring"}});
  }
  if (*r->cardinality() > FiniteRing::kMaxSize) {
    throw Refusal(r->expression() + " has more than " + std::to_string(FiniteRing::kMaxSize) + " elements",
                  {{"ring", r->expression()}, {"reason", "ring too large for exhaustive enumeration"}});
  }
  return r;
}

QuiddityTuple parse_quiddity(const RingPtr& r, const std::string& text) {
  Tuple entries = r->parse_tuple(text);
  if (auto q = QuiddityTuple::verify(r, entries)) return std::move(*q);
  return QuiddityTuple(r, std::move(entries));
}

Result cmd_check(const Options& o) {
  const RingPtr r = Ring::parse(o.ring);
  const QuiddityTuple t = parse_quiddity(r, o.tuple);
  Result res;
  res.payload = tuple_json(t);
  res.payload["quiddity"] = t.verified();
  const std::string entries = tsv_entries(*r, t.entries());
  if (t.verified()) {
    res.lines.push_back(entries + "\t" + std::to_string(t.sign()->value));
  } else {
    res.status = "no";
    res.code = kNo;
    res.lines.push_back(entries + "\tnot a λ-quiddity");
  }
  return res;
}

Result cmd_irr(const Options& o) {
  const RingPtr r = Ring::parse(o.ring);
  const QuiddityTuple t = parse_quiddity(r, o.tuple);
  Result res;
  res.payload = tuple_json(t);
  const std::string entries = tsv_entries(*r, t.entries());
  if (!t.verified()) {
    res.status = "error";
    res.code = kNotQuiddity;
    res.payload["verdict"] = nullptr;
    res.payload["reason"] = "not a λ-quiddity";
    res.lines.push_back(entries + "\tnot a λ-quiddity");
    return res;
  }
  const auto result = is_irreducible(t);
  res.payload["verdict"] = to_string(result.verdict);
  std::string line = entries + "\t" + to_string(result.verdict);
  switch (result.verdict) {
    case Verdict::Irreducible:
      break;
    case Verdict::Reducible:
      res.status = "no";
      res.code = kNo;
      res.payload["certificate"] = certificate_json(*r, *result.certificate);
      line += "\tb=" + tsv_entries(*r, result.certificate->b) + "\ta=" + tsv_entries(*r, result.certificate->a);
      break;
    case Verdict::Excluded:
      res.status = "no";
      res.code = kExcluded;
      res.payload["reason"] = "size at most 2";
      break;
  }
  res.lines.push_back(std::move(line));
  return res;
}

Result cmd_enumerate(const Options& o) {
  if (o.size == 0) throw std::invalid_argument("--size must be at least 1");
  const RingPtr parsed = Ring::parse(o.ring);
  Result res;
  if (!parsed->is_finite()) {
    if (o.raw) {
      throw Refusal("raw enumeration needs a finite ring", {{"ring", parsed->expression()}, {"reason", "infinite ring"}});
    }
    const SearchBox box{o.size, o.height, o.degree};
    BoundedSearchResult found;
    try {
      found = bounded_search(parsed, o.size, box, o.budget);
    } catch (const BudgetExceeded& e) {
      throw Refusal(e.what(), {{"ring", parsed->expression()}, {"candidates", e.candidates()}, {"budget", e.budget()}});
    }
    res.payload = bounded_search_json(parsed, o.size, box, found);
    for (const auto& q : found.irreducibles) res.lines.push_back(tsv_entries(*parsed, q.entries()));
    return res;
  }
  const RingPtr r = finite_ring(o, "enumerate");
  const Enumerator e(r, o.size);
  const bool irreducible = !o.raw && o.size >= 3;
  std::vector<QuiddityTuple> tuples =
      o.raw ? e.quiddities(o.size, false, o.jobs) : irreducible ? e.irreducibles(o.size, o.jobs)
                                                                : e.quiddities(o.size, true, o.jobs);
  Json list = Json::array();
  for (const auto& q : tuples) {
    list.push_back(entries_json(*r, q.entries()));
    res.lines.push_back(tsv_entries(*r, q.entries()));
  }
  res.payload = {{"ring", r->expression()},
                 {"size", o.size},
                 {"mode", o.raw ? "raw" : irreducible ? "irreducible" : "canonical"},
                 {"count", tuples.size()},
                 {"tuples", std::move(list)}};
  return res;
}

Result cmd_ell(const Options& o) {
  const RingPtr r = finite_ring(o, "ell");
  const EllReport rep = compute_ell(r, o.jobs);
  Result res;
  res.payload = ell_report_json(rep, o.timing);
  res.provenance = {kUpperBoundSource, kLowerBoundSource};
  res.lines.push_back("# ell=" + std::to_string(rep.ell) + " lower_bound=" + std::to_string(rep.lower_bound) +
                      " upper_bound=" + std::to_string(rep.upper_bound) + " sl2_order=" + std::to_string(rep.sl2_order));
  for (const auto& [n, list] : rep.irreducibles_by_size) {
    for (const auto& q : list) res.lines.push_back(std::to_string(n) + "\t" + tsv_entries(*r, q.entries()));
  }
  return res;
}

Result cmd_sl2(const Options& o) {
  const RingPtr r = finite_ring(o, "sl2-order");
  Result res;
  const auto order = sl2_order(r);
  res.payload = {{"ring", r->expression()},
                 {"sl2_order", order},
                 {"ell_upper_bound", ell_upper_bound(r)},
                 {"ell_lower_bound", ell_lower_bound(r)}};
  res.provenance = {kUpperBoundSource, kLowerBoundSource};
  res.lines.push_back(std::to_string(order));
  return res;
}

Result cmd_family(const Options& o) {
  FamilySpec spec{o.name, {}};
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects k=v, got '" + p + "'");
    spec.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const FamilyResult f = generate_family(spec);
  Result res;
  res.payload = family_json(f);
  res.provenance.push_back("tuple shapes and irreducibility claims are published; every member is re-verified here");
  if (o.verify) {
    Json checks = Json::array();
    for (const auto& m : f.members) {
      const auto ir = is_irreducible(m.tuple);
      Json c{{"label", m.label}, {"quiddity", m.tuple.recheck()}, {"verdict", to_string(ir.verdict)}};
      if (ir.certificate) c["certificate_ok"] = verify_certificate(*ir.certificate, m.tuple).ok;
      checks.push_back(std::move(c));
    }
    res.payload["verification"] = std::move(checks);
  }
  for (const auto& m : f.members) {
    res.lines.push_back(m.label + "\t" + tsv_entries(*f.ring, m.tuple.entries()) + "\t" + to_string(m.verdict));
  }
  return res;
}

Result cmd_criteria(const Options& o) {
  const RingPtr r = Ring::parse(o.ring);
  const CriteriaReport rep = unboundedness_criteria(r);
  Result res;
  res.payload = criteria_json(rep);
  if (rep.unbounded_claim) res.provenance.push_back(*rep.unbounded_claim);
  if (rep.conclusion == Conclusion::BoundedKnown) res.provenance.push_back(rep.reason);
  for (const auto& f : res.payload["flags"]) res.lines.push_back("flag\t" + f["flag"].get<std::string>());
  res.lines.push_back("conclusion\t" + to_string(rep.conclusion));
  return res;
}

void emit(const std::string& command, const Options& o, const Result& r, std::ostream& out) {
  if (o.format == "tsv") {
    for (const auto& l : r.lines) out << l << "\n";
    return;
  }
  Json j{{"command", command}, {"status", r.status}, {"payload", r.payload}, {"provenance", r.provenance}};
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact λ-quiddity computations over commutative rings", "quiddity"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", o.budget, "Candidate budget for bounded searches");

  auto* check = app.add_subcommand("check", "Is the tuple a λ-quiddity, and with which sign");
  auto* irr = app.add_subcommand("irr", "Irreducibility verdict with a reduction certificate");
  auto* enumerate = app.add_subcommand("enumerate", "Irreducible (default), canonical or raw quiddities of one size");
  auto* ell = app.add_subcommand("ell", "Exact maximal size of an irreducible quiddity over a finite ring");
  auto* family = app.add_subcommand("family", "Generate and verify a named family");
  auto* criteria = app.add_subcommand("criteria", "Unboundedness criteria for the polynomial ring over A");
  auto* sl2 = app.add_subcommand("sl2-order", "Order of SL2 over a finite ring");

  for (auto* sc : {check, irr, enumerate, ell, criteria, sl2}) sc->add_option("--ring", o.ring, "Ring expression")->required();
  for (auto* sc : {check, irr}) sc->add_option("--tuple", o.tuple, "Comma-separated entries")->required();
  enumerate->add_option("--size", o.size, "Tuple size")->required();
  enumerate->add_flag("--raw", o.raw, "Every quiddity, not one per class");
  enumerate->add_option("--height", o.height, "Coefficient bound for infinite rings");
  enumerate->add_option("--degree", o.degree, "Degree bound for infinite rings");
  ell->add_flag("--timing", o.timing, "Include wall-clock time in the report");
  family->add_option("--name", o.name, "irr_Z, irr_ZX, irr_ZkX, q_field or zeta8")->required();
  family->add_option("--param", o.params, "Parameter k=v (repeatable)");
  family->add_flag("--verify", o.verify, "Re-check every member and certificate");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Result res;
  try {
    if (command == "check") res = cmd_check(o);
    else if (command == "irr") res = cmd_irr(o);
    else if (command == "enumerate") res = cmd_enumerate(o);
    else if (command == "ell") res = cmd_ell(o);
    else if (command == "family") res = cmd_family(o);
    else if (command == "criteria") res = cmd_criteria(o);
    else res = cmd_sl2(o);
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    res = Result{"refused", e.payload(), Json::array(), {}, kRefused};
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    res = Result{"error", {{"error", e.detail()}, {"position", e.position()}}, Json::array(), {}, kUsage};
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    res = Result{"error", {{"error", e.what()}}, Json::array(), {}, kUsage};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    res = Result{"error", {{"error", e.what()}}, Json::array(), {}, kUsage};
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    res = Result{"error", {{"error", e.what()}}, Json::array(), {}, kInternal};
  }
  emit(command, o, res, out);
  return res.code;
}

}  // namespace quiddity::cli
