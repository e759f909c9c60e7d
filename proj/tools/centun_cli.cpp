// Command-line front end: build root systems and irreps, compute
// generalized exponents, run the central-element construction and the
// counterexample pipeline, and manage the irrep cache.
//
// Exit codes: 0 success, 1 a verification flag failed, 2 usage error,
// 3 size cap exceeded, 4 request not applicable (e.g. d = 1).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "centun/construct.hpp"
#include "centun/envelope.hpp"
#include "centun/errors.hpp"
#include "centun/irrep.hpp"
#include "centun/multiplicity.hpp"
#include "centun/root_system.hpp"

namespace fs = std::filesystem;
using namespace centun;

namespace {

struct JobConfig {
  std::string family = "A";
  int rank = 1;
  std::string weight;
  long size_cap = kDefaultSizeCap;
  int height_bound = kDefaultHeightBound;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool expensive_invariants = false;
};

RootSystem build_rs(const JobConfig& cfg) {
  if (cfg.family.size() != 1) throw UsageError("family must be one letter");
  if (cfg.size_cap < 1) throw UsageError("size cap must be >= 1");
  return RootSystem::build(family_from_char(cfg.family[0]), cfg.rank);
}

// Weights are entered in fundamental coordinates ("1,1"), or as the
// word "adjoint" for the highest root.
Weight parse_weight(const RootSystem& rs, const std::string& s) {
  if (s == "adjoint") return rs.highest_root();
  RatVec f;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw UsageError("malformed weight '" + s + "'");
      try {
        f.push_back(parse_rat(cur));
      } catch (const std::invalid_argument&) {
        throw UsageError("malformed weight '" + s + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (static_cast<int>(f.size()) != rs.rank())
    throw UsageError("weight needs " + std::to_string(rs.rank()) +
                     " fundamental coordinates");
  return rs.weight_from_fund(std::move(f));
}

fs::path cache_path(const JobConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("CENTUN_CACHE_DIR")) return env;
  return "centun-cache";
}

Irrep obtain_irrep(const RootSystem& rs, const Weight& lambda,
                   const JobConfig& cfg) {
  if (cfg.no_cache) return Irrep::build(rs, lambda, cfg.size_cap);
  fs::path dir = cache_path(cfg);
  fs::path file = dir / (Irrep::cache_key_for(rs, lambda) + ".irrep");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    Irrep V = Irrep::from_cache_text(rs, buf.str());
    if (V.highest_weight() == lambda) {
      std::cerr << "cache hit " << file.string() << "\n";
      return V;
    }
  }
  Irrep V = Irrep::build(rs, lambda, cfg.size_cap);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    // write-then-rename keeps concurrent readers off partial files
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    std::ofstream out(tmp);
    out << V.to_cache_text();
    out.close();
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  }
  return V;
}

int cmd_roots(const JobConfig& cfg) {
  RootSystem rs = build_rs(cfg);
  if (cfg.format == "structured") {
    std::ostringstream os;
    os << "{\"type\":\"" << rs.datum().name() << "\",\"positive_roots\":[";
    for (int g = 0; g < rs.num_positive(); ++g) {
      if (g) os << ",";
      os << "[";
      for (int j = 0; j < rs.rank(); ++j) {
        if (j) os << ",";
        os << rs.positive_roots()[g][j];
      }
      os << "]";
    }
    os << "],\"heights\":[";
    for (int g = 0; g < rs.num_positive(); ++g)
      os << (g ? "," : "") << rs.height(g);
    os << "],\"weyl_order\":" << rs.weyl_group().size()
       << ",\"invariant_degrees\":[";
    for (size_t i = 0; i < rs.invariant_degrees().size(); ++i)
      os << (i ? "," : "") << rs.invariant_degrees()[i];
    os << "],\"structure_constants\":[";
    bool first = true;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        long n = rs.struct_const(a + 1, b + 1);
        if (n == 0) continue;
        if (!first) os << ",";
        first = false;
        os << "[" << a << "," << b << "," << n << "]";
      }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << rs.to_text();
  }
  return 0;
}

int cmd_irrep(const JobConfig& cfg) {
  RootSystem rs = build_rs(cfg);
  Weight lambda = parse_weight(rs, cfg.weight);
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw UsageError("lambda must be dominant integral");
  Irrep V = obtain_irrep(rs, lambda, cfg);
  if (cfg.format == "structured") {
    std::ostringstream os;
    os << "{\"type\":\"" << rs.datum().name() << "\",\"lambda\":\""
       << lambda.fund_str() << "\",\"dimension\":" << V.dim()
       << ",\"weight_spaces\":[";
    for (int k = 0; k < V.num_weight_spaces(); ++k) {
      if (k) os << ",";
      os << "{\"mu\":\"" << V.weight_space(k).mu.fund_str()
         << "\",\"dim\":" << V.weight_space(k).dim << "}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << "irrep " << rs.datum().name() << " lambda "
              << lambda.fund_str() << "\n";
    std::cout << "dimension " << V.dim() << "\n";
    std::cout << "weight-spaces " << V.num_weight_spaces() << "\n";
    for (int k = 0; k < V.num_weight_spaces(); ++k)
      std::cout << "mu " << V.weight_space(k).mu.fund_str() << " dim "
                << V.weight_space(k).dim << "\n";
  }
  return 0;
}

int cmd_genexp(const JobConfig& cfg) {
  RootSystem rs = build_rs(cfg);
  Weight lambda = parse_weight(rs, cfg.weight);
  ExponentPolynomial ep = generalized_exponents(rs, lambda, cfg.height_bound);
  if (cfg.format == "structured") {
    std::ostringstream os;
    os << "{\"type\":\"" << rs.datum().name() << "\",\"lambda\":\""
       << lambda.fund_str() << "\",\"exponents\":{";
    bool first = true;
    for (const auto& [d, m] : ep.coeffs) {
      if (!first) os << ",";
      first = false;
      os << "\"" << d << "\":" << m;
    }
    os << "},\"min\":" << ep.min_degree() << ",\"max\":" << ep.max_degree()
       << ",\"total\":" << ep.total() << "}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << "generalized-exponents " << rs.datum().name() << " lambda "
              << lambda.fund_str() << "\n";
    for (const auto& [d, m] : ep.coeffs)
      std::cout << "degree " << d << " multiplicity " << m << "\n";
    std::cout << "min " << ep.min_degree() << " max " << ep.max_degree()
              << " total " << ep.total() << "\n";
  }
  return 0;
}

int cmd_construct(const JobConfig& cfg) {
  RootSystem rs = build_rs(cfg);
  Weight nu = parse_weight(rs, cfg.weight);
  if (!nu.is_integral() || !nu.is_dominant() || nu.is_zero())
    throw UsageError("nu must be nonzero dominant integral");
  Irrep V = obtain_irrep(rs, nu, cfg);
  ConstructionReport rep =
      lipsman_wolf_element(rs, V, cfg.expensive_invariants);
  std::cout << (cfg.format == "structured" ? rep.to_structured(rs) + "\n"
                                           : rep.to_text(rs));
  return rep.all_ok() ? 0 : 1;
}

int cmd_counterexample(const JobConfig& cfg) {
  RootSystem rs = build_rs(cfg);
  Weight xi = parse_weight(rs, cfg.weight);
  if (!xi.is_integral() || !xi.is_dominant())
    throw UsageError("xi must be dominant integral");
  Weight nu = xi + rs.dual_weight(xi);
  // the d = 1 rejection comes first so no module is built for it
  if (max_weight_multiplicity(rs, xi) <= 1)
    throw NotApplicableError(
        "every weight multiplicity of V_xi is 1; no counterexample in this "
        "type");
  Irrep V = obtain_irrep(rs, nu, cfg);
  CounterexampleReport rep = counterexample_check(rs, xi, V);
  std::cout << (cfg.format == "structured" ? rep.to_structured(rs) + "\n"
                                           : rep.to_text(rs));
  return rep.valid() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions in the nilradical enveloping algebra"};
  app.require_subcommand(1);

  JobConfig cfg;
  auto add_common = [&](CLI::App* sub, bool with_weight,
                        const std::string& weight_flag) {
    sub->add_option("--type", cfg.family, "family letter A-G")->required();
    sub->add_option("--rank", cfg.rank, "rank")->required();
    if (with_weight)
      sub->add_option(weight_flag, cfg.weight,
                      "fundamental coordinates, e.g. 1,1 (or 'adjoint')")
          ->required();
    sub->add_option("--size-cap", cfg.size_cap,
                    "largest module dimension to build");
    sub->add_option("--format", cfg.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "irrep cache directory (default $CENTUN_CACHE_DIR or "
                    "./centun-cache)");
    sub->add_flag("--no-cache", cfg.no_cache, "build without touching the cache");
  };

  auto* roots = app.add_subcommand("roots", "positive roots and structure constants");
  add_common(roots, false, "");
  auto* irrep = app.add_subcommand("irrep", "build an irreducible module");
  add_common(irrep, true, "--lambda");
  auto* genexp = app.add_subcommand("genexp", "generalized exponents of lambda");
  add_common(genexp, true, "--lambda");
  genexp->add_option("--height-bound", cfg.height_bound,
                     "largest admissible height of lambda");
  auto* construct = app.add_subcommand(
      "construct", "central-element construction with verification flags");
  add_common(construct, true, "--nu");
  construct->add_flag("--expensive-invariants", cfg.expensive_invariants,
                      "allow invariant trace powers above degree 5");
  auto* cex = app.add_subcommand(
      "counterexample", "inhomogeneous naive element certificate");
  add_common(cex, true, "--xi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(cfg);
    if (irrep->parsed()) return cmd_irrep(cfg);
    if (genexp->parsed()) return cmd_genexp(cfg);
    if (construct->parsed()) return cmd_construct(cfg);
    if (cex->parsed()) return cmd_counterexample(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 3;
  } catch (const NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
