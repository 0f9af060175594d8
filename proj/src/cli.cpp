#include "downsets/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "downsets/bounds.hpp"
#include "downsets/duality.hpp"
#include "downsets/errors.hpp"
#include "downsets/facecount.hpp"
#include "downsets/family_io.hpp"

namespace downsets::cli {

namespace {

using Json = nlohmann::ordered_json;

// Integers of any size are carried through the JSON tree as tagged strings
// and spliced back in as bare numbers when the document is written.
constexpr char kBigTag = '\x01';

Json big(const BigInt& value) { return std::string(1, kBigTag) + value.str(); }

Json big_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(big(v));
  return out;
}

Json polynomial_json(const IntPolynomial& p) {
  return Json{{"coefficients", big_array(p.coefficients())}, {"text", p.to_string()}};
}

Json face_json(const Face& face) {
  Json out = Json::array();
  for (auto e : face.elements()) out.push_back(e);
  return out;
}

Json family_json(const Antichain& family) {
  Json out = Json::array();
  for (const auto& face : family) out.push_back(face_json(face));
  return out;
}

std::string dump_json(const Json& doc) {
  static const std::regex tagged(R"re("\\u0001(-?[0-9]+)")re");
  return std::regex_replace(doc.dump(2), tagged, "$1");
}

std::string render_scalar(const Json& value) {
  if (value.is_string()) {
    auto s = value.get<std::string>();
    if (!s.empty() && s.front() == kBigTag) s.erase(0, 1);
    return s;
  }
  if (value.is_array()) {
    const bool family = !value.empty() && std::all_of(value.begin(), value.end(),
                                                      [](const Json& v) { return v.is_array(); });
    std::string out = family ? "{" : "[";
    bool first = true;
    for (const auto& v : value) {
      if (!first) out += ", ";
      first = false;
      if (family) {
        out += "{";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + render_scalar(v[i]);
        out += "}";
      } else {
        out += render_scalar(v);
      }
    }
    if (value.empty()) return "[]";
    return out + (family ? "}" : "]");
  }
  return value.dump();
}

void render_human(const Json& node, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : node.items()) {
    const auto label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      if (value.contains("text")) {
        out << label << ": " << render_scalar(value["text"]) << '\n';
      } else {
        render_human(value, label, out);
      }
    } else {
      out << label << ": " << render_scalar(value) << '\n';
    }
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string facets_path;
  std::string blockers_path;
  bool json = false;
  std::size_t term_cap = Limits{}.term_cap;
  std::size_t oracle_cap = Limits{}.oracle_n_max;
  unsigned threads = 1;
  std::string route;
  std::string direction;
  std::size_t degree = 0;
  std::string x;
  std::string y;
};

// Loaded families plus the bookkeeping that goes into the result document.
class Session {
 public:
  Session(std::string command, const Options& options, std::ostream& err)
      : command_(std::move(command)), err_(err) {
    limits_.term_cap = options.term_cap;
    limits_.oracle_n_max = options.oracle_cap;
    limits_.threads = std::max(1U, options.threads);
    if (!options.facets_path.empty()) facets_ = load(options.facets_path, "facets");
    if (!options.blockers_path.empty()) blockers_ = load(options.blockers_path, "blockers");
    if (!facets_ && !blockers_) throw UsageError("give --facets FILE and/or --blockers FILE");
    if (facets_ && blockers_ && facets_->ground_size() != blockers_->ground_size()) {
      throw GroundSizeMismatch("facets file has n=" + std::to_string(facets_->ground_size()) +
                               ", blockers file has n=" + std::to_string(blockers_->ground_size()));
    }
  }

  const Limits& limits() const { return limits_; }
  std::size_t n() const { return facets_ ? facets_->ground_size() : blockers_->ground_size(); }
  bool has_facets() const { return facets_.has_value(); }
  bool has_blockers() const { return blockers_.has_value(); }

  const Antichain& facets() {
    if (!facets_) facets_ = facets_from_blockers(*blockers_, limits_);
    return *facets_;
  }
  const Antichain& blockers() {
    if (!blockers_) blockers_ = blockers_from_facets(*facets_, limits_);
    return *blockers_;
  }

  /// Verified when both families were supplied, derived otherwise.
  DualPair pair() {
    if (facets_ && blockers_) return DualPair(*facets_, *blockers_, limits_);
    if (facets_) return DualPair::from_facets(*facets_, limits_);
    return DualPair::from_blockers(*blockers_, limits_);
  }

  void note(std::string message) {
    err_ << "note: " << message << '\n';
    diagnostics_.push_back(std::move(message));
  }

  Json document(Json result) const {
    return Json{{"command", command_},
                {"n", n()},
                {"inputs", inputs_},
                {"result", std::move(result)},
                {"diagnostics", diagnostics_}};
  }

 private:
  Antichain load(const std::string& path, const std::string& role) {
    const auto text = read_file(path);
    auto parsed = parse_family(text, limits_);
    for (auto& d : parsed.diagnostics) note(path + ": " + d);
    auto family = role == "facets" ? max_antichain(parsed.family) : min_antichain(parsed.family);
    if (family.size() != parsed.family.size()) {
      note(path + ": kept " + std::to_string(family.size()) + " of " +
           std::to_string(parsed.family.size()) + " sets as " +
           (role == "facets" ? "maximal" : "minimal") + " elements");
    }
    inputs_.push_back(Json{{"role", role},
                           {"path", path},
                           {"sha256", sha256_hex(text)},
                           {"n", family.ground_size()},
                           {"sets", family_json(family)}});
    return family;
  }

  std::string command_;
  std::ostream& err_;
  Limits limits_;
  std::optional<Antichain> facets_;
  std::optional<Antichain> blockers_;
  Json inputs_ = Json::array();
  std::vector<std::string> diagnostics_;
};

struct Outcome {
  Outcome(Json r, int c = kSuccess, std::optional<std::string> human = std::nullopt)
      : result(std::move(r)), code(c), human_override(std::move(human)) {}

  Json result;
  int code;
  /// Human-mode output replacing the generic rendering (family files).
  std::optional<std::string> human_override;
};

Json counts_json(const FaceCountVector& counts) { return big_array(counts.counts()); }

Outcome cmd_fvector(Session& s, const Options& o) {
  const auto route = o.route.empty() ? (s.has_facets() ? "facets" : "blockers") : o.route;
  FaceCountVector counts;
  if (route == "facets") {
    counts = counts_from_facets(s.facets(), s.limits());
  } else if (route == "blockers") {
    counts = counts_from_blockers(s.blockers(), s.limits());
  } else if (route == "brute") {
    counts = counts_bruteforce(s.facets(), s.limits());
  } else {
    throw UsageError("unknown route '" + route + "' (facets|blockers|brute)");
  }
  return {Json{{"route", route},
               {"counts", counts_json(counts)},
               {"faces", big(counts.total())},
               {"f_polynomial", polynomial_json(f_polynomial(counts))}}};
}

Outcome cmd_kpoly(Session& s, const Options& o) {
  const auto route = o.route.empty() ? (s.has_blockers() ? "blockers" : "counts") : o.route;
  IntPolynomial k;
  if (route == "blockers") {
    k = k_polynomial_from_blockers(s.blockers(), s.limits());
  } else if (route == "counts") {
    k = k_polynomial_from_counts(counts_from_facets(s.facets(), s.limits()));
  } else {
    throw UsageError("unknown route '" + route + "' (blockers|counts)");
  }
  return {Json{{"route", route}, {"k_polynomial", polynomial_json(k)}}};
}

Outcome cmd_hilbert(Session& s, const Options& o) {
  return {Json{{"degree", o.degree},
               {"dimension", big(hilbert_dimension(s.blockers(), o.degree, s.limits()))},
               {"k_polynomial", polynomial_json(k_polynomial_from_blockers(s.blockers(), s.limits()))}}};
}

Outcome cmd_euler(Session& s, const Options& o) {
  const auto route = o.route.empty() ? (s.has_facets() ? "facets" : "blockers") : o.route;
  if (route != "all") {
    BigInt value;
    if (route == "brute") {
      value = euler_bruteforce(counts_bruteforce(s.facets(), s.limits()));
    } else if (route == "facets") {
      value = euler_from_facets(s.facets(), s.limits());
    } else if (route == "blockers") {
      value = euler_from_blockers(s.blockers(), s.limits());
    } else {
      throw UsageError("unknown route '" + route + "' (brute|facets|blockers|all)");
    }
    return {Json{{"route", route}, {"euler", big(value)}}};
  }
  Json values = Json::object();
  std::vector<BigInt> seen;
  if (s.n() <= std::min(s.limits().oracle_n_max, kOracleHardCeiling)) {
    seen.push_back(euler_bruteforce(counts_bruteforce(s.facets(), s.limits())));
    values["brute"] = big(seen.back());
  } else {
    s.note("brute route skipped: n exceeds the oracle cap");
  }
  seen.push_back(euler_from_facets(s.facets(), s.limits()));
  values["facets"] = big(seen.back());
  seen.push_back(euler_from_blockers(s.blockers(), s.limits()));
  values["blockers"] = big(seen.back());
  const bool agree = std::all_of(seen.begin(), seen.end(), [&](const BigInt& v) { return v == seen.front(); });
  return {Json{{"route", "all"}, {"values", values}, {"euler", big(seen.front())}, {"agree", agree}},
          agree ? kSuccess : kCheckFailed};
}

Outcome cmd_dualize(Session& s, const Options& o) {
  auto direction = o.direction;
  if (direction.empty()) {
    if (s.has_facets() == s.has_blockers()) {
      throw UsageError("dualize needs exactly one input, or --direction f2m|m2f");
    }
    direction = s.has_facets() ? "f2m" : "m2f";
  }
  Antichain output;
  if (direction == "f2m") {
    if (!s.has_facets()) throw UsageError("--direction f2m needs --facets");
    output = blockers_from_facets(s.facets(), s.limits());
  } else if (direction == "m2f") {
    if (!s.has_blockers()) throw UsageError("--direction m2f needs --blockers");
    output = facets_from_blockers(s.blockers(), s.limits());
  } else {
    throw UsageError("unknown direction '" + direction + "' (f2m|m2f)");
  }
  const std::string role = direction == "f2m" ? "blockers" : "facets";
  return {Json{{"direction", direction}, {role, family_json(output)}}, kSuccess,
          "# " + role + "\n" + write_family(output.family())};
}

Outcome cmd_check_dual(Session& s, const Options&) {
  if (!s.has_facets() || !s.has_blockers()) throw UsageError("check-dual needs --facets and --blockers");
  const auto& facets = s.facets();
  const auto& blockers = s.blockers();
  const auto verdict = is_dual_pair(facets, blockers, s.limits());
  Json result{{"dual", verdict.dual},
              {"reason", to_string(verdict.reason)},
              {"joint_size",
               Json{{"complemented_facets_sum", verdict.joint_size.complemented_facets_sum.to_string()},
                    {"blockers_sum", verdict.joint_size.blockers_sum.to_string()},
                    {"total", verdict.joint_size.total().to_string()}}}};
  if (verdict.offending_pair) {
    result["offending_pair"] = Json{{"blocker", face_json(verdict.offending_pair->first)},
                                    {"facet", face_json(verdict.offending_pair->second)}};
  }
  if (verdict.witness) {
    result["witness"] = Json{{"face", face_json(*verdict.witness)},
                             {"face_by_facets", member_by_facets(*verdict.witness, facets)},
                             {"face_by_blockers", member_by_blockers(*verdict.witness, blockers)}};
  }
  return {result, verdict.dual ? kSuccess : kCheckFailed};
}

Outcome cmd_alexander(Session& s, const Options&) {
  const auto pair = s.pair();
  const auto dual = alexander_dual(pair);
  return {Json{{"facets", family_json(pair.facets())},
               {"blockers", family_json(pair.blockers())},
               {"dual_facets", family_json(dual.facets())},
               {"dual_blockers", family_json(dual.blockers())}}};
}

Outcome cmd_prop2(Session& s, const Options&) {
  const auto report = check_prop2(s.pair(), s.limits());
  return {Json{{"counts", counts_json(report.counts)},
               {"dual_counts", counts_json(report.dual_counts)},
               {"binomials", big_array(report.binomials)},
               {"holds", report.holds}},
          report.holds ? kSuccess : kCheckFailed};
}

Outcome cmd_bound(Session& s, const Options& o) {
  if (o.x.empty() || o.y.empty()) throw UsageError("bound needs --x and --y");
  const auto x = Dyadic::parse(o.x);
  const auto y = Dyadic::parse(o.y);
  const auto bound = union_bound_check(s.facets(), x, y, s.limits());
  return {Json{{"x", x.to_string()},
               {"y", y.to_string()},
               {"lhs", bound.lhs.to_string()},
               {"rhs", bound.rhs.to_string()},
               {"holds", bound.holds()}},
          bound.holds() ? kSuccess : kCheckFailed};
}

Outcome cmd_joint_size(Session& s, const Options&) {
  const auto sums = joint_size_inequality(s.pair());
  return {Json{{"complemented_facets_sum", sums.complemented_facets_sum.to_string()},
               {"blockers_sum", sums.blockers_sum.to_string()},
               {"total", sums.total().to_string()},
               {"at_least_one", sums.at_least_one()}},
          sums.at_least_one() ? kSuccess : kCheckFailed};
}

Outcome cmd_deviation(Session& s, const Options&) {
  const auto identity = deviation_identity(s.pair(), s.limits());
  return {Json{{"dual_sum", identity.dual_sum.to_string()},
               {"primal_sum", identity.primal_sum.to_string()},
               {"total", identity.total().to_string()},
               {"holds", identity.holds()}},
          identity.holds() ? kSuccess : kCheckFailed};
}

Outcome cmd_enumerate(Session& s, const Options&) {
  const auto faces = enumerate_downset(s.facets(), s.limits());
  Json list = Json::array();
  for (const auto& f : faces) list.push_back(face_json(f));
  return {Json{{"count", faces.size()}, {"faces", list}}};
}

using Handler = Outcome (*)(Session&, const Options&);

struct Command {
  const char* name;
  const char* description;
  Handler handler;
};

constexpr Command kCommands[] = {
    {"fvector", "face-count vector and f-polynomial", cmd_fvector},
    {"kpoly", "K-polynomial", cmd_kpoly},
    {"hilbert", "Hilbert-function value of the Stanley-Reisner quotient", cmd_hilbert},
    {"euler", "reduced Euler characteristic f(-1)", cmd_euler},
    {"dualize", "convert facets to blockers or back", cmd_dualize},
    {"check-dual", "decide whether facets and blockers describe one down-set", cmd_check_dual},
    {"alexander", "Alexander dual", cmd_alexander},
    {"prop2", "check a_l(D) + a_{n-l}(D*) = C(n, l)", cmd_prop2},
    {"bound", "union bound on H(x, y)", cmd_bound},
    {"joint-size", "sum of 2^-|M*| plus sum of 2^-|M|", cmd_joint_size},
    {"deviation", "alternating dyadic sums over both blocker families", cmd_deviation},
    {"enumerate", "list every face", cmd_enumerate},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Face numbers, K-polynomials and duality for down-sets given by facets or blockers",
               "downsets"};
  app.require_subcommand(1);

  for (const auto& command : kCommands) {
    auto* sub = app.add_subcommand(command.name, command.description);
    sub->add_option("--facets", options.facets_path, "family file of maximal faces");
    sub->add_option("--blockers", options.blockers_path, "family file of minimal non-faces");
    sub->add_flag("--json", options.json, "machine-readable output");
    sub->add_option("--term-cap", options.term_cap, "subset-term / table-entry budget")
        ->capture_default_str();
    sub->add_option("--oracle-cap", options.oracle_cap, "largest n for 2^n enumeration")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{0}, kOracleHardCeiling));
    sub->add_option("--threads", options.threads, "worker threads for subset enumeration")
        ->capture_default_str()
        ->check(CLI::Range(1U, 256U));
    const std::string name = command.name;
    if (name == "fvector" || name == "kpoly" || name == "euler") {
      sub->add_option("--route", options.route, "computation route");
    }
    if (name == "hilbert") sub->add_option("--degree,-d", options.degree, "degree d")->required();
    if (name == "dualize") sub->add_option("--direction", options.direction, "f2m or m2f");
    if (name == "bound") {
      sub->add_option("--x", options.x, "dyadic a/2^k, x >= 0");
      sub->add_option("--y", options.y, "dyadic b/2^k, y >= 0");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kDomainError;
  }

  const Command* chosen = nullptr;
  for (const auto& command : kCommands) {
    if (app.got_subcommand(command.name)) chosen = &command;
  }

  try {
    Session session(chosen->name, options, err);
    const auto outcome = chosen->handler(session, options);
    if (options.json) {
      out << dump_json(session.document(outcome.result)) << '\n';
    } else if (outcome.human_override) {
      out << *outcome.human_override;
    } else {
      render_human(outcome.result, "", out);
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace downsets::cli
