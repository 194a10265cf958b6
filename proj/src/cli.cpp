#include "mhc/cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "mhc/cochain.hpp"
#include "mhc/cocyclic.hpp"
#include "mhc/crossed.hpp"
#include "mhc/error.hpp"
#include "mhc/mha.hpp"
#include "mhc/modpair.hpp"
#include "mhc/zline.hpp"

namespace mhc::cli {

using nlohmann::ordered_json;

Character parse_sigma(const GroupPtr& g, std::string_view text) {
  if (text == "trivial") return trivial_character(g);
  std::vector<long> exps;
  if (text.rfind("char:", 0) == 0) {
    std::stringstream ss{std::string(text.substr(5))};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        exps.push_back(std::stol(item, &used));
        if (used != item.size()) throw ParseError("trailing characters");
      } catch (const std::exception&) {
        throw ParseError("sigma exponent '" + item + "' is not an integer");
      }
    }
  } else if (!text.empty() && text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("sigma JSON list: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("sigma JSON must be a list of integers");
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("sigma JSON must be a list of integers");
      exps.push_back(v.get<long>());
    }
  } else {
    throw ParseError("unknown sigma '" + std::string(text) + "' (expected trivial, char:k1,k2,... or a JSON list)");
  }
  if (exps.size() != g->generators().size())
    throw ParseError("sigma needs " + std::to_string(g->generators().size()) + " exponent(s), one per generator");
  return character_from_exponents(g, exps);
}

ordered_json scalar_json(const CycloScalar& value) {
  ordered_json j;
  j["N"] = value.order();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string cache_key(std::string_view canonical_input) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_input) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct Options {
  std::string group;
  std::string group_file;
  std::string sigma = "trivial";
  std::size_t degree = 0;
  std::size_t max_degree = 2;
  std::string lambda;
  long window = kDefaultZWindow;
  std::string q;
  unsigned modulus = 0;
  std::string classify;
  std::string format = "json";
  std::string cache;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GroupInput {
  GroupPtr group;
  ordered_json canonical;  // descriptor string or the table itself
  std::string label;
};

GroupInput load_group(const Options& o) {
  if (!o.group.empty() && !o.group_file.empty()) throw ParseError("give either --group or --group-file, not both");
  if (o.group.empty() && o.group_file.empty()) throw ParseError("--group or --group-file is required");
  if (!o.group.empty()) return {build_group(o.group), o.group, o.group};
  GroupPtr g = group_from_json(read_file(o.group_file));
  ordered_json table;
  table["names"] = g->names();
  ordered_json mul = ordered_json::array();
  for (std::size_t a = 0; a < g->order(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t b = 0; b < g->order(); ++b) row.push_back(g->multiply(a, b));
    mul.push_back(std::move(row));
  }
  table["mul"] = std::move(mul);
  return {g, table, "custom"};
}

ordered_json exponents_json(const Character& chi) { return chi.exponents(); }

ordered_json report_json(const Report& r) { return to_json(r); }

// A computed result: the JSON document and, where the result is tabular, its CSV projection.
struct Output {
  ordered_json json;
  std::function<std::string(const ordered_json&)> csv;
};

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string join(const ordered_json& list, char sep) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += sep;
    out += list[i].is_string() ? list[i].get<std::string>() : list[i].dump();
  }
  return out;
}

std::string scalar_text(const ordered_json& s) { return join(s["coeffs"], ' '); }

Output run_verify(const Options& o) {
  const GroupInput gi = load_group(o);
  const Character sigma = parse_sigma(gi.group, o.sigma);

  const Report mha = verify_mha_axioms(*gi.group);
  const Report cos = verify_cosimplicial_identities(gi.group, sigma, o.max_degree);
  const Report cyc = verify_cocyclic_identities(gi.group, sigma, o.max_degree);
  ordered_json j;
  j["group"] = gi.label;
  j["sigma"] = exponents_json(sigma);
  j["max_degree"] = o.max_degree;
  j["all_pass"] = all_pass(mha) && all_pass(cos) && all_pass(cyc);
  j["checks"]["mha"] = report_json(mha);
  j["checks"]["cosimplicial"] = report_json(cos);
  j["checks"]["cocyclic"] = report_json(cyc);
  return {j, [](const ordered_json& j) {
            std::string s = "suite,check,degree,pass\n";
            for (const auto& [suite, entries] : j["checks"].items())
              for (const auto& e : entries)
                s += suite + "," + e["check"].get<std::string>() + "," +
                     (e.contains("degree") ? e["degree"].dump() : "") + "," + csv_bool(e["pass"]) + "\n";
            return s;
          }};
}

Output run_characters(const Options& o) {
  const GroupInput gi = load_group(o);
  ordered_json j;
  j["group"] = gi.label;
  j["exponent"] = gi.group->exponent();
  j["elements"] = gi.group->names();
  ordered_json generators = ordered_json::array();
  for (std::size_t gen : gi.group->generators()) generators.push_back(gi.group->name(gen));
  j["generators"] = std::move(generators);
  ordered_json chars = ordered_json::array();
  for (const auto& chi : enumerate_characters(gi.group)) {
    ordered_json c;
    c["exponents"] = exponents_json(chi);
    c["trivial"] = chi.is_trivial();
    ordered_json values = ordered_json::array();
    for (const auto& v : chi.values) values.push_back(scalar_json(v));
    c["values"] = std::move(values);
    chars.push_back(std::move(c));
  }
  j["characters"] = std::move(chars);
  return {j, [](const ordered_json& j) {
            std::string s = "exponents";
            for (const auto& name : j["elements"]) s += "," + name.get<std::string>();
            s += "\n";
            for (const auto& c : j["characters"]) {
              s += join(c["exponents"], ' ');
              for (const auto& v : c["values"]) s += "," + scalar_text(v);
              s += "\n";
            }
            return s;
          }};
}

Output run_mpi(const Options& o) {
  const GroupInput gi = load_group(o);
  const auto chars = enumerate_characters(gi.group);
  ordered_json pairs = ordered_json::array();
  for (std::size_t g = 0; g < gi.group->order(); ++g)
    for (const auto& chi : chars) {
      ordered_json p;
      p["g"] = gi.group->name(g);
      p["sigma"] = exponents_json(chi);
      p["mpi"] = is_mpi(*gi.group, g, chi);
      pairs.push_back(std::move(p));
    }
  ordered_json j;
  j["group"] = gi.label;
  j["pairs"] = std::move(pairs);
  return {j, [](const ordered_json& j) {
            std::string s = "g,sigma,mpi\n";
            for (const auto& p : j["pairs"])
              s += p["g"].get<std::string>() + "," + join(p["sigma"], ' ') + "," + csv_bool(p["mpi"]) + "\n";
            return s;
          }};
}

ordered_json cohomology_json(const CohomologyResult& r) {
  ordered_json j;
  j["degree"] = r.degree;
  j["dim_kernel"] = r.dim_kernel;
  j["dim_image_prev"] = r.dim_image_prev;
  j["dim"] = r.dim;
  return j;
}

std::string cohomology_csv(const ordered_json& j) {
  return "degree,dim_kernel,dim_image_prev,dim\n" + j["degree"].dump() + "," + j["dim_kernel"].dump() + "," +
         j["dim_image_prev"].dump() + "," + j["dim"].dump() + "\n";
}

Output run_cohomology(const Options& o, bool cyclic) {
  const GroupInput gi = load_group(o);
  const Character sigma = parse_sigma(gi.group, o.sigma);
  const CohomologyResult r =
      cyclic ? cyclic_cohomology_dim(gi.group, sigma, o.degree) : hochschild_dim(gi.group, sigma, o.degree);
  return {cohomology_json(r), cohomology_csv};
}

Output run_zline(const Options& o) {
  if (o.lambda.empty()) throw ParseError("zline requires --lambda");
  const CycloScalar lambda = parse_lambda(o.lambda);
  ordered_json j;
  j["lambda"] = scalar_json(lambda);
  j["window"] = o.window;
  if (!o.q.empty()) {
    const EscapeResult e = tau2_escape_check(parse_zfunction(o.q, lambda), lambda, o.window);
    j["q"] = o.q;
    j["escapes"] = e.escapes;
    if (e.escapes) {
      j["slice"]["varying"] = e.axis;
      j["slice"]["fixed"] = e.fixed;
    }
    j["witness"] = e.witness;
    return {j, nullptr};
  }
  const HH1Result r = hh1_z_dim(lambda, o.window);
  j["cocycle_dim"] = r.cocycle_dim;
  j["coboundary_dim"] = r.coboundary_dim;
  j["dim"] = r.dim;
  j["cocycles_are_coboundaries"] = r.cocycles_are_coboundaries;
  return {j, [](const ordered_json& j) {
            return "window,cocycle_dim,coboundary_dim,dim\n" + j["window"].dump() + "," + j["cocycle_dim"].dump() +
                   "," + j["coboundary_dim"].dump() + "," + j["dim"].dump() + "\n";
          }};
}

Output run_crossed(const Options& o) {
  if (o.modulus == 0) throw ParseError("crossed requires --N");
  ordered_json j;
  j["N"] = o.modulus;
  j["classify"] = o.classify;
  ordered_json rows = ordered_json::array();
  if (o.classify == "grouplike") {
    for (const auto& r : classify_grouplike(o.modulus)) {
      ordered_json row;
      row["f"] = r.f;
      row["h"] = r.h;
      row["grouplike"] = r.grouplike;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return {j, [](const ordered_json& j) {
              std::string s = "f,h,grouplike\n";
              for (const auto& r : j["rows"])
                s += r["f"].get<std::string>() + "," + r["h"].get<std::string>() + "," + csv_bool(r["grouplike"]) + "\n";
              return s;
            }};
  }
  if (o.classify == "mpi") {
    for (const auto& r : classify_mpi(o.modulus)) {
      ordered_json row;
      row["base"] = {r.base[0], r.base[1]};
      row["eps_x"] = r.eps_x;
      row["sigma"] = {r.a, r.b};
      row["mpi"] = r.mpi;
      row["mpi_closed_form"] = r.mpi_closed_form;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return {j, [](const ordered_json& j) {
              std::string s = "base,eps_x,sigma,mpi,mpi_closed_form\n";
              for (const auto& r : j["rows"])
                s += join(r["base"], ' ') + "," + r["eps_x"].dump() + "," + join(r["sigma"], ' ') + "," +
                     csv_bool(r["mpi"]) + "," + csv_bool(r["mpi_closed_form"]) + "\n";
              return s;
            }};
  }
  throw ParseError("--classify must be grouplike or mpi");
}

// Serializes writers and readers of one cache directory.
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::filesystem::path& dir) {
    fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~DirectoryLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  int fd_ = -1;
};

std::string render(const Output& result, const std::string& format) {
  if (format == "json") return result.json.dump() + "\n";
  if (!result.csv) throw ParseError("csv output is not available for this result");
  return result.csv(result.json);
}

std::string execute(const std::string& verb, const Options& o) {
  if (o.format != "json" && o.format != "csv") throw ParseError("--format must be json or csv");
  Output result;
  if (verb == "verify")
    result = run_verify(o);
  else if (verb == "characters")
    result = run_characters(o);
  else if (verb == "mpi")
    result = run_mpi(o);
  else if (verb == "hochschild")
    result = run_cohomology(o, false);
  else if (verb == "cyclic")
    result = run_cohomology(o, true);
  else if (verb == "zline")
    result = run_zline(o);
  else
    result = run_crossed(o);
  return render(result, o.format);
}

// The cache stores rendered text keyed by a hash of the canonical input.
std::string execute_cached(const std::string& verb, const Options& o) {
  if (o.cache.empty()) return execute(verb, o);
  // Canonical input: the argument values that affect the output. Group and
  // sigma are normalized (descriptor or table, exponent list) so equivalent
  // spellings share an entry.
  ordered_json input;
  input["verb"] = verb;
  if (verb != "zline" && verb != "crossed") {
    const GroupInput gi = load_group(o);
    input["group"] = gi.canonical;
    if (verb == "verify" || verb == "hochschild" || verb == "cyclic")
      input["sigma"] = exponents_json(parse_sigma(gi.group, o.sigma));
  }
  if (verb == "verify") input["max_degree"] = o.max_degree;
  if (verb == "hochschild" || verb == "cyclic") input["degree"] = o.degree;
  if (verb == "zline") {
    input["lambda"] = scalar_json(parse_lambda(o.lambda));
    input["window"] = o.window;
    input["q"] = o.q;
  }
  if (verb == "crossed") {
    input["N"] = o.modulus;
    input["classify"] = o.classify;
  }
  input["format"] = o.format;

  const std::filesystem::path dir(o.cache);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create cache directory '" + o.cache + "'");
  const std::string canonical = input.dump();
  const std::filesystem::path file = dir / (cache_key(canonical) + ".json");

  DirectoryLock lock(dir);
  if (std::ifstream in{file}) {
    try {
      const ordered_json stored = ordered_json::parse(in);
      if (stored.at("version") == kSchemaVersion && stored.at("input") == input) {
        const auto& out = stored.at("output");
        return out.is_string() ? out.get<std::string>() : out.dump() + "\n";
      }
    } catch (const nlohmann::json::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  const std::string text = execute(verb, o);
  ordered_json entry;
  entry["input"] = input;
  entry["output"] = o.format == "json" ? ordered_json::parse(text) : ordered_json(text);
  entry["version"] = kSchemaVersion;
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream outf(tmp);
    outf << entry.dump() << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
  return text;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;
  CLI::App app{"Exact Hochschild and cyclic cohomology of function algebras on finite groups", "mhc"};
  app.require_subcommand(1);
  Options o;

  const auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group descriptor: Z<n>, S3, D4, Q8, products with x");
    sub->add_option("--group-file", o.group_file, "JSON file with {\"order\", \"mul\", \"names\"?}");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json (default) or csv");
    sub->add_option("--cache", o.cache, "Directory for cached results");
  };
  const auto add_sigma = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "trivial | char:k1,k2,... | JSON exponent list");
  };

  auto* verify = app.add_subcommand("verify", "Run the axiom and identity suites");
  add_group(verify);
  add_sigma(verify);
  verify->add_option("--max-degree", o.max_degree, "Highest cochain degree checked (default 2)");
  add_common(verify);

  auto* characters = app.add_subcommand("characters", "List the characters of a group");
  add_group(characters);
  add_common(characters);

  auto* mpi = app.add_subcommand("mpi", "Modular pair in involution status for every (g, sigma)");
  add_group(mpi);
  add_common(mpi);

  auto* hochschild = app.add_subcommand("hochschild", "Hochschild cohomology dimension");
  add_group(hochschild);
  add_sigma(hochschild);
  hochschild->add_option("--degree", o.degree, "Cochain degree")->required();
  add_common(hochschild);

  auto* cyclic = app.add_subcommand("cyclic", "Cyclic cohomology dimension");
  add_group(cyclic);
  add_sigma(cyclic);
  cyclic->add_option("--degree", o.degree, "Cochain degree")->required();
  add_common(cyclic);

  auto* zline = app.add_subcommand("zline", "Windowed computations over the integers");
  zline->add_option("--lambda", o.lambda, "p/q or zeta:N:k")->required();
  zline->add_option("--window", o.window, "Half-width W of the window [-W, W] (default 12)");
  zline->add_option("--q", o.q, "step | finite:<json> | geom:a,b; selects the tau_2 escape test");
  add_common(zline);

  auto* crossed = app.add_subcommand("crossed", "Crossed product C(Z_N^2) x Z_2 classifications");
  crossed->add_option("--N", o.modulus, "Modulus N")->required();
  crossed->add_option("--classify", o.classify, "grouplike or mpi")->required();
  add_common(crossed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.code = code == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    result.out = execute_cached(verb, o);
    result.code = 0;
  } catch (const ParseError& e) {
    result.code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const ValidationError& e) {
    result.code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const CapacityError& e) {
    result.code = 1;
    result.err = std::string("capacity error: ") + e.what() + "\n";
  } catch (const CyclicityError& e) {
    result.code = 1;
    result.err = std::string("cyclicity error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.code = 1;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace mhc::cli
