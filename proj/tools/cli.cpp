#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfold/blocking.hpp"
#include "tfold/error.hpp"
#include "tfold/extremal.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"
#include "tfold/point_set.hpp"
#include "tfold/search.hpp"

namespace tfold::cli {
namespace {

using Json = nlohmann::ordered_json;

// Keeps every number exact and inside 64 bits.
constexpr std::uint64_t kMaxCliOrder = std::uint64_t{1} << 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string output;
  unsigned workers = 1;
  std::uint64_t budget = 1'000'000'000;
};

Json number(const BigInt& v) { return to_int64(v); }

Json optional_number(const std::optional<BigInt>& v) { return v ? number(*v) : Json(nullptr); }

Json spectrum_json(const Spectrum& spec) {
  Json j = Json::object();
  for (std::size_t size : spec.support()) j[std::to_string(size)] = spec.count(size);
  return j;
}

PrimePower require_prime_power(std::uint64_t q, const char* what) {
  const auto pp = as_prime_power(q);
  if (!pp) throw UsageError(std::string(what) + ": " + std::to_string(q) + " is not a prime power");
  return *pp;
}

PlanePtr desarguesian(std::uint64_t q) {
  const PrimePower pp = require_prime_power(q, "plane order");
  if (q > kMaxDesarguesianOrder) {
    throw UsageError("plane order " + std::to_string(q) + " exceeds " + std::to_string(kMaxDesarguesianOrder));
  }
  return build_desarguesian_plane(make_field(pp.p, pp.k));
}

void check_order(std::uint64_t n) {
  if (n < 2 || n > kMaxCliOrder) throw UsageError("order must be in 2.." + std::to_string(kMaxCliOrder));
}

Json class_entry(const BigInt& t, const BigInt& b, const BigInt& bound, FamilyLabel family,
                 const std::optional<ProofCase>& proof_case) {
  Json j;
  j["t"] = number(t);
  j["b"] = number(b);
  j["bound"] = number(bound);
  j["family"] = std::string(to_string(family));
  j["case"] = proof_case ? Json(std::string(to_string(*proof_case))) : Json(nullptr);
  return j;
}

std::string trace_text(const CaseTrace& tr) {
  std::ostringstream s;
  s << "case=" << to_string(tr.proof_case) << " alpha=" << tr.alpha << " l=" << tr.l << " h=" << tr.h
    << " beta=" << (tr.beta ? tr.beta->str() : std::string("none")) << " consistent=" << std::boolalpha
    << tr.consistent;
  return s.str();
}

// --- subcommands --------------------------------------------------------------

int cmd_bound(const Common& c, std::uint64_t n, std::uint64_t t, std::ostream& out) {
  check_order(n);
  if (t < 1 || t > n) throw UsageError("t must be in 1.." + std::to_string(n));
  const BoundValue v = max_size_bound(n, t);
  if (c.json) {
    Json j;
    j["n"] = n;
    j["t"] = t;
    j["discriminant"] = number(v.discriminant);
    j["attainable"] = v.attainable;
    j["bound"] = optional_number(v.bound);
    j["b"] = optional_number(v.b);
    if (!v.attainable) {
      j["twice_bound"] = Json{{"sqrt_coefficient", number(v.sqrt_coefficient)},
                              {"radicand", number(v.discriminant)},
                              {"rational", number(v.rational_part)}};
    }
    out << j.dump() << '\n';
  } else if (v.attainable) {
    out << "bound=" << *v.bound << " b=" << *v.b << " attainable=true\n";
  } else {
    out << "bound=(" << v.sqrt_coefficient << "*sqrt(" << v.discriminant << ")+" << v.rational_part
        << ")/2 b=none attainable=false\n";
  }
  return kExitOk;
}

int cmd_classify(const Common& c, std::uint64_t q, std::ostream& out) {
  check_order(q);
  const auto pp = as_prime_power(q);
  if (!pp) {
    throw UsageError("classify: " + std::to_string(q) +
                     " is not a prime power; use 'candidates' for necessary conditions at general orders");
  }
  Json arr = Json::array();
  for (const auto& e : classify_prime_power(*pp)) {
    const CaseTrace tr = case_trace(*pp, e.t, e.b);
    if (c.json) {
      arr.push_back(class_entry(e.t, e.b, e.bound, e.family, tr.proof_case));
    } else {
      out << "t=" << e.t << " b=" << e.b << " bound=" << e.bound << " family=" << to_string(e.family) << ' '
          << trace_text(tr) << '\n';
    }
  }
  if (c.json) out << arr.dump() << '\n';
  return kExitOk;
}

int cmd_candidates(const Common& c, std::uint64_t n, std::ostream& out) {
  check_order(n);
  const auto pp = as_prime_power(n);
  Json arr = Json::array();
  if (!pp && !c.json) out << "# " << n << " is not a prime power: necessary conditions only\n";
  for (const auto& e : equality_candidates(n)) {
    std::optional<ProofCase> pc;
    FamilyLabel family = FamilyLabel::Unclassified;
    std::string detail;
    if (pp) {
      const CaseTrace tr = case_trace(*pp, e.t, e.b);
      pc = tr.proof_case;
      family = tr.family;
      detail = ' ' + trace_text(tr);
    }
    if (c.json) {
      arr.push_back(class_entry(e.t, e.b, e.bound, family, pc));
    } else {
      out << "t=" << e.t << " b=" << e.b << " bound=" << e.bound << " family=" << to_string(family) << detail
          << '\n';
    }
  }
  if (c.json) out << arr.dump() << '\n';
  return kExitOk;
}

int cmd_construct(const std::string& kind, std::uint64_t n, std::uint64_t point, std::ostream& out) {
  const PlanePtr plane = desarguesian(n);
  if (kind == "minus-point") {
    if (point >= plane->point_count()) throw UsageError("--point out of range");
    write_point_set(plane_minus_point(plane, static_cast<PointIndex>(point)), out);
    return kExitOk;
  }
  if (plane->field().degree() % 2 != 0) throw UsageError(kind + " needs a square plane order");
  if (kind == "unital") {
    write_point_set(hermitian_unital(plane), out);
  } else if (kind == "baer") {
    write_point_set(baer_subplane(plane), out);
  } else {
    write_point_set(baer_complement(plane), out);
  }
  return kExitOk;
}

int cmd_plane(std::uint64_t q, std::ostream& out) {
  write_plane(*desarguesian(q), out);
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& plane_path, const std::string& set_path, std::uint64_t t,
               std::ostream& out) {
  const PlanePtr plane = load_plane(plane_path);
  const PointSet s = load_point_set(set_path, plane);
  const std::uint64_t n = plane->order();
  if (t < 1 || t > n + 1) throw UsageError("t must be in 1.." + std::to_string(n + 1));

  const Spectrum spec = spectrum(*plane, s);
  const bool blocking = is_t_fold_blocking(*plane, s, t);
  const auto deficient = first_line_below(*plane, s, t);
  std::optional<bool> minimal;
  std::optional<PointIndex> untouched;
  if (blocking) {
    minimal = is_minimal(*plane, s, t);
    untouched = first_point_without_tangent(*plane, s, t);
  }
  std::optional<BoundValue> bound;
  if (t <= n) bound = max_size_bound(n, t);
  const bool attainable = bound && bound->attainable;
  const bool extremal = attainable && BigInt(s.size()) == *bound->bound;
  const bool two_valued = attainable && is_two_valued(spec, t, static_cast<std::uint64_t>(*bound->b));
  const FamilyLabel family = characterize(*plane, s, t);
  const bool passed = blocking && minimal.value_or(false);

  if (c.json) {
    Json j;
    j["size"] = s.size();
    j["t"] = t;
    j["spectrum"] = spectrum_json(spec);
    j["t_fold_blocking"] = blocking;
    j["minimal"] = minimal ? Json(*minimal) : Json(nullptr);
    j["first_deficient_line"] = deficient ? Json(*deficient) : Json(nullptr);
    j["point_without_tangent"] = untouched ? Json(*untouched) : Json(nullptr);
    j["bound"] = bound ? optional_number(bound->bound) : Json(nullptr);
    j["extremal"] = extremal;
    j["two_valued"] = two_valued;
    j["family"] = std::string(to_string(family));
    j["passed"] = passed;
    out << j.dump() << '\n';
  } else {
    out << "size=" << s.size() << '\n';
    out << "spectrum=" << spectrum_json(spec).dump() << '\n';
    out << "t_fold_blocking=" << std::boolalpha << blocking << '\n';
    if (deficient) {
      out << "first deficient line: " << *deficient << " meets the set in "
          << plane->line_mask(*deficient).intersection_count(s.mask()) << " < " << t << " points\n";
    } else if (!blocking) {
      out << "no line meets the set in exactly " << t << " points\n";
    }
    if (minimal) out << "minimal=" << *minimal << '\n';
    if (untouched) out << "point " << *untouched << " lies on no line meeting the set in exactly " << t << " points\n";
    if (bound) {
      out << "bound=" << (bound->bound ? bound->bound->str() : std::string("none")) << " extremal=" << extremal
          << " two_valued=" << two_valued << '\n';
    }
    out << "family=" << to_string(family) << '\n';
    out << "result=" << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

int cmd_spectrum(const Common& c, const std::string& plane_path, const std::string& set_path, std::ostream& out) {
  const PlanePtr plane = load_plane(plane_path);
  const PointSet s = load_point_set(set_path, plane);
  const Spectrum spec = spectrum(*plane, s);
  if (c.json) {
    out << spectrum_json(spec).dump() << '\n';
  } else {
    for (std::size_t size : spec.support()) out << size << ": " << spec.count(size) << '\n';
  }
  return kExitOk;
}

std::vector<std::vector<PointIndex>> load_permutations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open symmetry file " + path);
  std::vector<std::vector<PointIndex>> perms;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty() || text[0] == '#') continue;
    std::istringstream tokens(text);
    std::vector<PointIndex> perm;
    long long v = 0;
    while (tokens >> v) {
      if (v < 0) throw FormatError(line_no, "negative point index");
      perm.push_back(static_cast<PointIndex>(v));
    }
    if (!tokens.eof()) throw FormatError(line_no, "malformed permutation");
    perms.push_back(std::move(perm));
  }
  return perms;
}

Json families_json(const std::map<FamilyLabel, std::size_t>& counts) {
  Json j = Json::object();
  for (const auto& [label, count] : counts) j[std::string(to_string(label))] = count;
  return j;
}

int cmd_search(const Common& c, const std::string& plane_path, std::uint64_t t, std::optional<std::uint64_t> size,
               bool no_prune, const std::string& symmetry_path, std::ostream& out) {
  const PlanePtr plane = load_plane(plane_path);
  if (t < 1 || t > plane->order()) throw UsageError("t must be in 1.." + std::to_string(plane->order()));
  SearchOptions opts;
  opts.pruning = !no_prune;
  opts.workers = c.workers;
  opts.node_budget = c.budget;
  if (!symmetry_path.empty()) {
    opts.symmetry = true;
    opts.permutations = load_permutations(symmetry_path);
  }
  const SearchTask task = make_search_task(plane, t, opts);
  if (size && (!task.size || *size != *task.size)) {
    throw UsageError("--size must equal the attainable bound" +
                     (task.size ? " (" + std::to_string(*task.size) + ")" : std::string(" (none for this t)")));
  }
  const SearchResult r = exhaustive_extremal_search(task);

  std::map<FamilyLabel, std::size_t> families;
  for (const auto& s : r.sets) ++families[characterize(*plane, s, t)];

  Json summary;
  summary["t"] = t;
  summary["size"] = task.size ? Json(*task.size) : Json(nullptr);
  summary["found"] = r.sets.size();
  summary["complete"] = r.complete;
  summary["families"] = families_json(families);

  if (!c.output.empty()) {
    const std::filesystem::path dir(c.output);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < r.sets.size(); ++i) {
      std::ostringstream name;
      name << "set_" << std::setw(6) << std::setfill('0') << i << ".txt";
      save_point_set(r.sets[i], dir / name.str());
    }
    std::ofstream f(dir / "summary.json");
    f << summary.dump() << '\n';
  }
  out << summary.dump() << '\n';
  return r.anomalies.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_certify(const Common& c, std::uint64_t q, std::ostream& out) {
  if (q > 9) throw UsageError("certify is limited to plane orders up to 9");
  const PlanePtr plane = desarguesian(q);
  SearchOptions opts;
  opts.workers = c.workers;
  opts.node_budget = c.budget;
  const CertificationReport rep = certify_no_other_t(plane, 1, q, opts);

  if (c.json) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      Json j;
      j["t"] = e.t;
      j["attainable"] = e.attainable;
      j["bound"] = optional_number(e.bound);
      j["b"] = optional_number(e.b);
      j["found"] = e.found;
      j["families"] = families_json(e.families);
      j["complete"] = e.complete;
      j["expected"] = e.expected ? Json(*e.expected) : Json(nullptr);
      j["matches"] = e.matches;
      entries.push_back(std::move(j));
    }
    Json j;
    j["order"] = q;
    j["passed"] = rep.passed;
    j["entries"] = std::move(entries);
    out << j.dump() << '\n';
  } else {
    for (const auto& e : rep.entries) {
      out << "t=" << e.t << " attainable=" << std::boolalpha << e.attainable;
      if (e.bound) out << " bound=" << *e.bound;
      out << " found=" << e.found << " families=" << families_json(e.families).dump()
          << " complete=" << e.complete << " expected=" << (e.expected ? (*e.expected ? "true" : "false") : "n/a")
          << (e.matches ? " ok" : " MISMATCH") << '\n';
    }
    out << "certified=" << rep.passed << '\n';
  }
  return rep.passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tfold: extremal minimal t-fold blocking sets in finite projective planes", "tfold"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.json, "Emit JSON");
  app.add_option("--output,-o", common.output, "Write output to this file (search: directory)");
  app.add_option("--workers", common.workers, "Search worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", common.budget, "Search node budget")->check(CLI::PositiveNumber);

  std::uint64_t n = 0, t = 0, q = 0, point = 0;
  std::string kind, plane_path, set_path, symmetry_path;
  std::optional<std::uint64_t> size;
  bool no_prune = false;

  auto* bound = app.add_subcommand("bound", "Exact size bound for minimal t-fold blocking sets");
  bound->add_option("n", n, "Plane order")->required();
  bound->add_option("t", t, "Multiplicity")->required();

  auto* classify = app.add_subcommand("classify", "Closed-form extremal t values for a prime power order");
  classify->add_option("q", q, "Plane order")->required();

  auto* candidates = app.add_subcommand("candidates", "Brute-force equality candidates for any order");
  candidates->add_option("n", n, "Plane order")->required();

  auto* construct = app.add_subcommand("construct", "Write an extremal family member as a point-set file");
  construct->add_option("kind", kind, "unital | baer | baer-complement | minus-point")
      ->required()
      ->check(CLI::IsMember({"unital", "baer", "baer-complement", "minus-point"}));
  construct->add_option("q", q, "Plane order")->required();
  construct->add_option("--point", point, "Removed point for minus-point");

  auto* plane_cmd = app.add_subcommand("plane", "Write PG(2,q) as a plane file");
  plane_cmd->add_option("q", q, "Plane order")->required();

  auto* verify = app.add_subcommand("verify", "Check blocking, minimality and spectrum of a point set");
  verify->add_option("--plane", plane_path)->required();
  verify->add_option("--set", set_path)->required();
  verify->add_option("--t", t)->required();

  auto* spec_cmd = app.add_subcommand("spectrum", "Line intersection spectrum of a point set");
  spec_cmd->add_option("--plane", plane_path)->required();
  spec_cmd->add_option("--set", set_path)->required();

  auto* search = app.add_subcommand("search", "Exhaustive search for extremal minimal t-fold blocking sets");
  search->add_option("--plane", plane_path)->required();
  search->add_option("--t", t)->required();
  search->add_option("--size", size, "Must equal the attainable bound");
  search->add_flag("--no-prune", no_prune, "Enumerate all subsets of the target size");
  search->add_option("--symmetry", symmetry_path, "File of collineations, one permutation per line");

  auto* certify = app.add_subcommand("certify", "Search every t in PG(2,q) and compare with the classification");
  certify->add_option("q", q, "Plane order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const bool to_file = !common.output.empty() && !search->parsed();
    std::ostringstream buffer;
    std::ostream& sink = to_file ? static_cast<std::ostream&>(buffer) : out;
    int code = kExitOk;
    if (bound->parsed()) code = cmd_bound(common, n, t, sink);
    else if (classify->parsed()) code = cmd_classify(common, q, sink);
    else if (candidates->parsed()) code = cmd_candidates(common, n, sink);
    else if (construct->parsed()) code = cmd_construct(kind, q, point, sink);
    else if (plane_cmd->parsed()) code = cmd_plane(q, sink);
    else if (verify->parsed()) code = cmd_verify(common, plane_path, set_path, t, sink);
    else if (spec_cmd->parsed()) code = cmd_spectrum(common, plane_path, set_path, sink);
    else if (search->parsed()) code = cmd_search(common, plane_path, t, size, no_prune, symmetry_path, sink);
    else if (certify->parsed()) code = cmd_certify(common, q, sink);
    if (to_file) {
      std::ofstream f(common.output);
      if (!f) throw std::runtime_error("cannot write " + common.output);
      f << buffer.str();
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tfold::cli
