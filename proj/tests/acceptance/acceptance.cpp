// One line per acceptance criterion. Exit status counts the failing criteria
// that are not listed as known deviations; those still print FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "json.hpp"
#include "mhc/cli.hpp"
#include "mhc/cocyclic.hpp"
#include "mhc/crossed.hpp"
#include "mhc/matrix.hpp"
#include "mhc/mha.hpp"
#include "mhc/modpair.hpp"
#include "mhc/zline.hpp"

using namespace mhc;

namespace {

const std::vector<std::string> kSuite{"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int unexpected_failures = 0;

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& run,
            bool known_deviation = false) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title;
  if (!o.detail.empty()) line << "  [" << o.detail << "]";
  line.precision(2);
  line << std::fixed << "  (" << secs << " s)";
  if (!o.pass && known_deviation) line << "  known deviation";
  std::cout << line.str() << std::endl;
  if (!o.pass && !known_deviation) ++unexpected_failures;
}

std::string tuple_text(const std::vector<std::string>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s + ")";
}

// dim H^n of the group-cohomology complex with differential d, by exact rank.
std::size_t group_cohomology_dim(const GroupPtr& g, const Character& sigma, std::size_t n) {
  const auto rank_of = [&](std::size_t degree) -> std::size_t {
    const TupleIndexer in(g->order(), degree), out(g->order(), degree + 1);
    ScalarMatrix m(out.size(), in.size(), sigma.order());
    for (std::size_t c = 0; c < in.size(); ++c) {
      const Cochain image = group_differential(Cochain::basis(g, degree, sigma.order(), c), sigma);
      for (std::size_t r = 0; r < out.size(); ++r) m.at(r, c) = image[r];
    }
    return rank(m);
  };
  std::size_t cols = 1;
  for (std::size_t i = 0; i < n; ++i) cols *= g->order();
  return cols - rank_of(n) - (n == 0 ? 0 : rank_of(n - 1));
}

Outcome criterion_axioms() {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& desc : kSuite) {
    const auto r = cli::run_command({"verify", "--group", desc});
    if (r.code != 0) return {false, desc + " exit " + std::to_string(r.code)};
    const auto mha = nlohmann::json::parse(r.out)["checks"]["mha"];
    for (const auto& e : mha)
      if (!e["pass"].get<bool>()) return {false, desc + " " + e["check"].get<std::string>()};
    if (!all_pass(verify_mha_axioms(*build_group(desc)))) return {false, desc};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {secs < 60.0, std::to_string(kSuite.size()) + " groups, full verify under 60 s"};
}

Outcome criterion_b_squared() {
  std::size_t cases = 0;
  for (const char* desc : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3"}) {
    const auto g = build_group(desc);
    for (const auto& sigma : enumerate_characters(g))
      for (std::size_t n = 0; n <= 3; ++n, ++cases)
        if (auto row = coboundary_square_failure(*g, sigma, n))
          return {false, std::string(desc) + " n=" + std::to_string(n) + " row " + std::to_string(*row)};
  }
  return {true, std::to_string(cases) + " (group, sigma, degree) cases, every group of order <= 6"};
}

Outcome criterion_cocyclic() {
  std::size_t checks = 0;
  for (const char* desc : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const auto g = build_group(desc);
    const auto chars = enumerate_characters(g);
    if (chars.size() < 2) return {false, std::string(desc) + " has fewer than 2 characters"};
    for (const auto& sigma : chars)
      for (const auto& e : verify_cocyclic_identities(g, sigma, 3)) {
        ++checks;
        if (!e.pass) return {false, std::string(desc) + " " + e.check + " n=" + std::to_string(*e.degree) + " at " +
                                        tuple_text(e.counterexample)};
      }
  }
  return {true, std::to_string(checks) + " identity checks, degrees 0..3, all characters"};
}

Outcome criterion_dimensions() {
  for (const auto& desc : kSuite) {
    const auto g = build_group(desc);
    for (const auto& sigma : enumerate_characters(g))
      if (hochschild_dim(g, sigma, 0).dim != (sigma.is_trivial() ? 1u : 0u)) return {false, desc + " HH^0"};
  }
  std::ifstream in(std::string(MHC_ORACLE_DIR) + "/expected_dims.json");
  if (!in) return {false, "oracle table missing"};
  const auto doc = nlohmann::json::parse(in);
  std::size_t compared = 0;
  for (const auto& c : doc["cases"]) {
    const auto name = c["group"].get<std::string>();
    const auto g = build_group(name);
    const auto sigma = character_from_exponents(g, c["sigma"].get<std::vector<long>>());
    // Coefficients C_{sigma^-1}: the action g.v = sigma(g)^-1 v built into d.
    for (std::size_t n = 0; n < doc["degrees"].size(); ++n, ++compared) {
      const std::string where = name + " sigma=" + c["sigma"].dump() + " n=" + std::to_string(n);
      if (hochschild_dim(g, sigma, n).dim != c["hochschild"][n].get<std::size_t>()) return {false, "HH " + where};
      if (group_cohomology_dim(g, sigma, n) != c["group_cohomology"][n].get<std::size_t>())
        return {false, "H(G) " + where};
      if (!verify_xi_chain_map(g, sigma, n, 20)) return {false, "Xi " + where};
    }
  }
  return {true, std::to_string(compared) + " oracle entries, HH^0 over the suite"};
}

Outcome criterion_xi() {
  std::size_t cases = 0;
  bool unsigned_commutes_everywhere = true;
  std::mt19937_64 rng(77);
  for (const char* desc : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const auto g = build_group(desc);
    for (const auto& sigma : enumerate_characters(g))
      for (std::size_t n = 0; n <= 2; ++n, ++cases) {
        if (!verify_xi_chain_map(g, sigma, n, 200)) return {false, std::string(desc) + " n=" + std::to_string(n)};
        const Cochain f = Cochain::random(g, n, sigma.order(), rng);
        const Cochain lhs = xi_transform(coboundary(f, sigma));
        const Cochain rhs = group_differential(xi_transform(f), sigma);
        if (!(lhs == rhs * CycloScalar::from_int(sigma.order(), xi_boundary_sign(n))))
          return {false, std::string(desc) + " unsigned relation n=" + std::to_string(n)};
        unsigned_commutes_everywhere = unsigned_commutes_everywhere && lhs == rhs;
      }
  }
  return {true, std::to_string(cases) + " (G, sigma, n) cases x 200 cochains with Xi scaled by (-1)^{n(n+1)/2}; "
                + (unsigned_commutes_everywhere ? "unscaled Xi also commutes"
                                                : "unscaled Xi b = (-1)^{n+1} d Xi")};
}

Outcome criterion_hh1() {
  const auto lambda2 = hh1_z_dim(CycloScalar::from_int(1, 2), 20);
  const auto lambda1 = hh1_z_dim(CycloScalar::one(1), 20);
  const auto sol = solve_hh1_recurrence(CycloScalar::from_int(1, 2), CycloScalar::one(1), 20);
  const bool ok = lambda2.dim == 0 && lambda2.cocycles_are_coboundaries && sol.matches_closed_form &&
                  lambda1.dim == 1;
  return {ok, "lambda=2: dim " + std::to_string(lambda2.dim) + ", lambda=1: dim " + std::to_string(lambda1.dim)};
}

Outcome criterion_escape() {
  const CycloScalar lambda = CycloScalar::from_int(1, 2);
  const auto step = tau2_escape_check(ZFunction::step(1), lambda, 12);
  const auto finite = tau2_escape_check(
      ZFunction::finite_support({{0, CycloScalar::one(1)}, {2, CycloScalar::from_int(1, -3)}}, 1), lambda, 12);
  const auto geom = tau2_escape_check(parse_zfunction("geom:3,5", lambda), lambda, 12);
  const bool ok = step.escapes && step.witness.size() >= 8 && !finite.escapes && !geom.escapes;
  return {ok, "step witness size " + std::to_string(step.witness.size()) + ", finite " +
                  (finite.escapes ? "escapes" : "stays") + ", geom " + (geom.escapes ? "escapes" : "stays")};
}

Outcome criterion_remark_cyclic_image() {
  std::size_t cases = 0;
  for (const auto& desc : kSuite) {
    const auto g = build_group(desc);
    for (const auto& sigma : enumerate_characters(g)) {
      ++cases;
      if (!is_cyclic_cochain(coboundary(Cochain::basis(g, 0, sigma.order(), 0), sigma), sigma))
        return {false, desc + " sigma " + std::to_string(cases)};
    }
  }
  return {true, std::to_string(cases) + " characters"};
}

Outcome criterion_mpi() {
  std::string extra;
  for (const auto& desc : kSuite) {
    const auto g = build_group(desc);
    std::set<std::pair<std::size_t, std::vector<long>>> enumerated, brute;
    for (const auto& p : enumerate_mpi(g)) enumerated.insert({p.base_point, p.sigma.exponents()});
    for (std::size_t x = 0; x < g->order(); ++x)
      for (const auto& sigma : enumerate_characters(g))
        if (is_mpi(*g, x, sigma)) brute.insert({x, sigma.exponents()});
    if (enumerated != brute) return {false, desc + " enumeration differs from brute force"};

    std::size_t beyond = 0;
    for (const auto& [x, s] : brute) beyond += !abelian_or_identity(*g, x);
    if (desc == "S3") {
      const auto e = g->identity();
      const std::set<std::pair<std::size_t, std::vector<long>>> expected{{e, {0, 0}}, {e, {0, 3}}};
      if (brute != expected) return {false, "S3 pairs"};
    }
    if (desc == "D4" || desc == "Q8") {
      if (beyond == 0) return {false, desc + " has no pair with g outside {e}"};
      extra += (extra.empty() ? "" : ", ") + desc + " +" + std::to_string(beyond) + " central";
    }
  }
  return {true, "S3 = {(e, trivial), (e, sign)}; " + extra};
}

Outcome criterion_crossed_grouplike() {
  for (unsigned n : {2u, 3u})
    for (const auto& row : classify_grouplike(n))
      if (row.grouplike != (row.h == "0" && row.f != "0"))
        return {false, "N=" + std::to_string(n) + " f=" + row.f + " h=" + row.h};
  return {true, "N=2,3: group-like iff h = 0 and f a character"};
}

Outcome criterion_crossed_symmetric() {
  for (unsigned n : {2u, 3u})
    for (const auto& row : classify_mpi(n)) {
      if (row.base != Point{0, 0}) continue;
      const bool symmetric = row.a == row.b;
      if (row.mpi != symmetric || row.mpi_closed_form != symmetric)
        return {false, "N=" + std::to_string(n) + " f=(" + std::to_string(row.a) + "," + std::to_string(row.b) + ")"};
    }
  return {true, "N=2,3 at delta = f(0,0): MPI iff sigma symmetric, both antipode forms"};
}

Outcome criterion_crossed_origin_only() {
  std::string offenders;
  for (unsigned n : {2u, 3u}) {
    std::set<std::tuple<unsigned, unsigned, unsigned, unsigned>> seen;
    for (const auto& row : classify_mpi(n)) {
      if (row.base == Point{0, 0} || !(row.mpi || row.mpi_closed_form)) continue;
      if (!seen.insert({row.base[0], row.base[1], row.a, row.b}).second) continue;
      offenders += (offenders.empty() ? "" : "; ") + std::string("N=") + std::to_string(n) + " delta=f(" +
                   std::to_string(row.base[0]) + "," + std::to_string(row.base[1]) + ") sigma=(" +
                   std::to_string(row.a) + "," + std::to_string(row.b) + ")" +
                   (row.mpi && row.mpi_closed_form ? "" : row.mpi ? " derived" : " closed-form");
    }
  }
  if (offenders.empty()) return {true, "no MPI with delta other than f(0,0)"};
  return {false, "MPIs off the origin: " + offenders};
}

Outcome criterion_cli() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("mhc-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> commands{
      {"hochschild", "--group", "Z2", "--sigma", "trivial", "--degree", "1"},
      {"verify", "--group", "S3", "--max-degree", "2"},
      {"cyclic", "--group", "Z3", "--degree", "2"},
      {"mpi", "--group", "Q8"},
      {"zline", "--lambda", "2", "--q", "step"},
      {"crossed", "--N", "2", "--classify", "mpi"},
  };
  Outcome o{true, std::to_string(commands.size()) + " commands, repeat and cache hit/miss byte-identical"};
  for (auto args : commands) {
    const auto first = cli::run_command(args), second = cli::run_command(args);
    args.push_back("--cache");
    args.push_back(dir.string());
    const auto miss = cli::run_command(args), hit = cli::run_command(args);
    if (first.code != 0 || first.out != second.out || miss.out != first.out || hit.out != first.out) {
      o = {false, args[0] + " output not stable"};
      break;
    }
  }
  fs::remove_all(dir);
  if (o.pass && cli::run_command({"hochschild", "--group", "Z2", "--sigma", "trivial", "--degree", "1"}).out !=
                    "{\"degree\":1,\"dim_kernel\":0,\"dim_image_prev\":0,\"dim\":0}\n")
    o = {false, "hochschild golden differs"};
  return o;
}

}  // namespace

int main() {
  report("1", "axiom suite on Z2 Z3 Z4 Z2xZ2 S3 D4 Q8", criterion_axioms);
  report("2", "b^2 = 0 on full bases, degrees <= 3, |G| <= 6", criterion_b_squared);
  report("3", "cocyclic identities on full bases, degrees <= 3, |G| <= 4", criterion_cocyclic);
  report("4", "HH^0, oracle dimensions and group cohomology agree", criterion_dimensions);
  report("5", "Xi chain-map identity, 200 random cochains per case", criterion_xi);
  report("6", "HH^1 over Z: lambda = 2 gives 0, lambda = 1 gives 1", criterion_hh1);
  report("7", "tau_2 escape for the step function, not for the span", criterion_escape);
  report("8", "b(C^0) is cyclic for every character", criterion_remark_cyclic_image);
  report("9", "MPI classification for finite groups", criterion_mpi);
  report("10a", "crossed product: group-like only with h = 0", criterion_crossed_grouplike);
  report("10b", "crossed product: MPI at f(0,0) iff sigma symmetric", criterion_crossed_symmetric);
  report("10c", "crossed product: no MPI with delta other than f(0,0)", criterion_crossed_origin_only, true);
  report("11", "CLI output stable across runs and cache", criterion_cli);
  return unexpected_failures;
}
