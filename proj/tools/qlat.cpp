// Command-line front end: evaluates lattice expressions and exposes the
// library operations as subcommands.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlat/catalog.hpp"
#include "qlat/claims.hpp"
#include "qlat/errors.hpp"
#include "qlat/expr.hpp"
#include "qlat/short_vectors.hpp"

using namespace qlat;

namespace {

constexpr int kOk = 0, kClaimFailed = 1, kUsage = 2, kBudget = 3;

std::string rows_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::ordered_json props_json(const Lattice& l, const SearchOptions& o) {
  nlohmann::ordered_json p;
  p["rank"] = l.rank();
  p["disc"] = to_string(discriminant(l));
  p["scale"] = to_string(scale(l));
  p["integral"] = is_integral(l);
  EnumerationOptions e;
  e.node_budget = o.node_budget;
  p["min"] = to_string(minimum(l, e));
  p["dual_min"] = to_string(dual_minimum(l, e));
  if (is_integral(l)) p["roots"] = roots(l, e).size();
  p["names"] = identify(l, o);
  return p;
}

struct Globals {
  std::uint64_t budget = 100'000'000;
  std::size_t threads = 1;
  bool seedless = false;
  SearchOptions search() const {
    SearchOptions s;
    s.node_budget = budget;
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for integral lattices"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("QLAT_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: QLAT_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_option("--budget", g.budget, "search node budget (also QLAT_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads for claim runs")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", g.seedless, "reserved; rejected (nothing here is random)");

  std::string e1, e2;
  bool props = false, json = false, primitive = false, witness = false;
  std::string qmax, bound;
  std::size_t rank = 0;
  long diag_bound = 0;
  std::string claim_prefix;
  bool list_claims = false;

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", e1)->required();
  eval->add_flag("--props", props, "rank, disc, min, dual min, root count, known names");
  eval->add_flag("--json", json, "emit the lattice as JSON");

  auto* rep = app.add_subcommand("rep", "is the first lattice represented by the second");
  rep->add_option("source", e1)->required();
  rep->add_option("target", e2)->required();
  rep->add_flag("--primitive", primitive, "print a primitive witness");
  rep->add_flag("--witness", witness, "print the embedding matrix");

  auto* isom = app.add_subcommand("isom", "isometry test with witness");
  isom->add_option("first", e1)->required();
  isom->add_option("second", e2)->required();

  auto* decompose = app.add_subcommand("decompose", "orthogonal decomposition");
  decompose->add_option("expr", e1)->required();

  auto* extensions = app.add_subcommand("extensions", "primitive extensions one rank up");
  extensions->add_option("expr", e1)->required();
  extensions->add_option("--qmax", qmax, "bound on the complement norm")->required();

  auto* shortvec = app.add_subcommand("shortvec", "vectors of norm at most a bound");
  shortvec->add_option("expr", e1)->required();
  shortvec->add_option("--bound", bound, "norm bound (rational)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "isometry classes of rank <= 3 as JSON lines");
  enumerate->add_option("--rank", rank)->required();
  enumerate->add_option("--bound", diag_bound, "bound on the successive minima")->required();

  auto* exceptional = app.add_subcommand("exceptional", "enumerated classes not represented");
  exceptional->add_option("expr", e1)->required();
  exceptional->add_option("--rank", rank)->required();
  exceptional->add_option("--bound", diag_bound)->required();

  auto* verify = app.add_subcommand("verify-claims", "run the registered claim suite");
  verify->alias("verify-paper");
  verify->add_option("--claim", claim_prefix, "only ids with this prefix");
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--list", list_claims, "list the registry without running");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (g.seedless) {
    std::cerr << "error: --seedless is reserved; nothing in this tool uses randomness\n";
    return kUsage;
  }
  const SearchOptions so = g.search();
  EnumerationOptions eo;
  eo.node_budget = g.budget;

  try {
    if (*eval) {
      Lattice l = evaluate(e1);
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(lattice_to_json(l));
        if (props) j["props"] = props_json(l, so);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "lattice: " << (l.label().empty() ? e1 : l.label()) << "\n"
                  << "rank: " << l.rank() << "\n"
                  << "disc: " << to_string(discriminant(l)) << "\n"
                  << "gram: " << to_string(l.gram()) << "\n";
        if (props) {
          auto p = props_json(l, so);
          std::cout << "scale: " << p["scale"].get<std::string>() << "\n"
                    << "integral: " << yes_no(p["integral"].get<bool>()) << "\n"
                    << "min: " << p["min"].get<std::string>() << "\n"
                    << "dual-min: " << p["dual_min"].get<std::string>() << "\n";
          if (p.contains("roots")) std::cout << "roots: " << p["roots"].get<std::size_t>() << "\n";
          std::string names;
          for (const auto& n : p["names"]) names += (names.empty() ? "" : ", ") + n.get<std::string>();
          std::cout << "isometric to: " << (names.empty() ? "-" : names) << "\n";
        }
      }
    } else if (*rep) {
      Lattice m = evaluate(e1), l = evaluate(e2);
      auto any = representation(m, l, so);
      auto prim = any ? primitive_representation(m, l, so) : std::nullopt;
      std::cout << "represents: " << yes_no(any.has_value()) << ", primitive: " << yes_no(prim.has_value()) << "\n";
      const auto& shown = primitive ? prim : any;
      if (witness && shown) std::cout << "witness:\n" << rows_string(shown->transform);
    } else if (*isom) {
      Lattice a = evaluate(e1), b = evaluate(e2);
      auto w = isometry(a, b, so);
      std::cout << "isometric: " << yes_no(w.has_value()) << "\n";
      if (w) std::cout << "witness:\n" << rows_string(w->transform);
    } else if (*decompose) {
      Lattice l = evaluate(e1);
      auto parts = orthogonal_decomposition(l, so);
      std::cout << "components: " << parts.size() << "\n";
      for (const auto& c : parts) {
        auto names = identify(c.lattice, so);
        std::cout << "- rank " << c.lattice.rank() << ", disc " << to_string(discriminant(c.lattice)) << ", gram "
                  << to_string(c.lattice.gram());
        if (!names.empty()) std::cout << " (" << names.front() << ")";
        std::cout << "\n";
      }
    } else if (*extensions) {
      Lattice l = evaluate(e1);
      auto q = parse_rat(qmax);
      if (!q || *q < 1) {
        std::cerr << "error: --qmax must be a rational >= 1\n";
        return kUsage;
      }
      const Int qm = q->get_num() / q->get_den();
      auto ext = primitive_extensions(l, qm);
      for (const auto& e : ext) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(lattice_to_json(e.lattice));
        j["disc"] = to_string(discriminant(e.lattice));
        j["complement_norm"] = e.complement_norm.get_str();
        j["coset_order"] = e.coset_order.get_str();
        std::cout << j.dump() << "\n";
      }
    } else if (*shortvec) {
      Lattice l = evaluate(e1);
      auto b = parse_rat(bound);
      if (!b) {
        std::cerr << "error: --bound must be a rational\n";
        return kUsage;
      }
      for (const auto& v : short_vectors(l, *b, eo)) {
        std::cout << to_string(v.norm) << " [";
        for (std::size_t i = 0; i < v.coords.size(); ++i) std::cout << (i ? ", " : "") << v.coords[i];
        std::cout << "]\n";
      }
    } else if (*enumerate) {
      for (const auto& f : enumerate_lattices(rank, diag_bound, so)) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(lattice_to_json(f.lattice()));
        j["diag_bound"] = f.diag_bound;
        std::cout << j.dump() << "\n";
      }
    } else if (*exceptional) {
      Lattice l = evaluate(e1);
      auto ex = truncated_exceptional_set(l, rank, diag_bound, so);
      for (const auto& f : ex.members) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(lattice_to_json(f.lattice()));
        j["diag_bound"] = f.diag_bound;
        std::cout << j.dump() << "\n";
      }
      std::cerr << ex.members.size() << " classes of rank " << rank << " with minima <= " << diag_bound
                << " not represented\n";
    } else if (*verify) {
      if (list_claims) {
        for (const auto& c : claim_manifest()) std::cout << c.id << "  (" << c.cost << ")  " << c.statement << "\n";
        return kOk;
      }
      RunOptions ro;
      ro.threads = g.threads;
      ro.node_budget = g.budget;
      auto reports = run_claims(claim_prefix, ro);
      std::cout << (json ? reports_to_json(reports) + "\n" : reports_to_table(reports));
      return all_passed(reports) ? kOk : kClaimFailed;
    }
  } catch (const NonIntegralError& e) {
    std::cerr << "error: " << e.what() << " (Q = " << to_string(e.norm()) << ")\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    if (e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::BoundTooLargeForBudget) return kBudget;
    return kUsage;
  }
  return kOk;
}
