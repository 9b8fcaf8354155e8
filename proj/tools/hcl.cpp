// Command-line front end: normal forms, products, structure maps, the
// cocycle table and the verification suites.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcl/session.hpp"
#include "hcl/spin_weyl.hpp"
#include "hcl/suites.hpp"

using namespace hcl;
using nlohmann::json;

namespace {

std::optional<Cyc8> parse_parameter(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument(std::string("--") + name + " expects a rational, got " + text);
  q.canonicalize();
  return Cyc8(q);
}

std::string word_text(const WeylGroup& g, uint32_t w) {
  std::string r;
  for (int i : g.word(w)) r += (r.empty() ? "s" : "*s") + std::to_string(i);
  return r.empty() ? "1" : r;
}

json config_json(const SessionConfig& cfg) {
  json j = {{"algebra", algebra_id(cfg.algebra)}, {"type", to_string(cfg.type).substr(0, 1)}, {"rank", cfg.type.n}};
  if (cfg.u) j["u"] = render_scalar(*cfg.u);
  if (cfg.v) j["v"] = render_scalar(*cfg.v);
  return j;
}

void emit(bool as_json, const SessionConfig& cfg, json fields, const std::string& text) {
  if (!as_json) {
    std::cout << text << "\n";
    return;
  }
  fields["params"] = config_json(cfg);
  fields["result"] = text;
  std::cout << fields.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms and property suites for Hecke-Clifford, spin and covering affine Hecke algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string family = "A", algebra = "ahc", u_text, v_text;
  int rank = 2;
  bool as_json = false;
  CLI::Option* type_opt = app.add_option("--type", family, "Weyl type")->check(CLI::IsMember({"A", "B", "D"}));
  CLI::Option* rank_opt = app.add_option("--rank", rank, "rank n (number of coordinates)")->check(CLI::Range(1, 8));
  app.add_option("--algebra", algebra, "algebra id")
      ->check(CLI::IsMember({"ahc", "spin", "cover", "lusztig", "finite-spin", "clifford", "semidirect",
                             "tensor-fin", "tensor-spin"}));
  app.add_option("--u", u_text, "substitute a rational for u on output");
  app.add_option("--v", v_text, "substitute a rational for v on output");
  app.add_flag("--json", as_json, "machine-readable output");

  std::string expr, expr2, map_name;
  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr, "expression")->required();
  CLI::App* mul = app.add_subcommand("mul", "normal form of a product");
  mul->add_option("left", expr, "left factor")->required();
  mul->add_option("right", expr2, "right factor")->required();
  CLI::App* map = app.add_subcommand("map", "apply a structure map");
  map->add_option("name", map_name, "map")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "phi-fin", "psi-fin", "omega", "tau1", "tau2", "sigma", "up", "um"}));
  map->add_option("expr", expr, "expression in the domain of the map")->required();
  CLI::App* table = app.add_subcommand("cocycle-table", "the spin cocycle mu(a, b) on all pairs");
  std::string suite_id, verify_family;
  int verify_rank = 0;
  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite_id, "suite id (default: all)");
  CLI::Option* vtype_opt =
      verify->add_option("--type", verify_family, "restrict to a family")->check(CLI::IsMember({"A", "B", "D"}));
  CLI::Option* vrank_opt = verify->add_option("--rank", verify_rank, "restrict to a rank")->check(CLI::Range(1, 8));
  CLI::App* list = app.add_subcommand("list-suites", "list suite ids");

  CLI11_PARSE(app, argc, argv);

  try {
    SessionConfig cfg;
    cfg.algebra = parse_algebra(algebra);
    cfg.u = parse_parameter(u_text, "u");
    cfg.v = parse_parameter(v_text, "v");

    if (*list) {
      json out = json::array();
      for (const Suite& s : suite_registry()) {
        std::string types;
        for (const WeylType& t : s.default_types) types += (types.empty() ? "" : ",") + to_string(t);
        if (as_json)
          out.push_back({{"id", s.id}, {"description", s.description}, {"types", types}});
        else
          std::cout << s.id << "  " << s.description << "  [" << types << "]\n";
      }
      if (as_json) std::cout << out.dump() << "\n";
      return 0;
    }

    if (*verify) {
      const bool have_family = vtype_opt->count() > 0 || type_opt->count() > 0;
      const bool have_rank = vrank_opt->count() > 0 || rank_opt->count() > 0;
      const std::string fam = vtype_opt->count() ? verify_family : family;
      const int n = vrank_opt->count() ? verify_rank : rank;
      std::vector<const Suite*> suites;
      if (suite_id.empty())
        for (const Suite& s : suite_registry()) suites.push_back(&s);
      else
        suites.push_back(&find_suite(suite_id));
      std::vector<Report> reports;
      for (const Suite* s : suites) {
        std::vector<WeylType> types;
        if (have_family && have_rank) {
          types.push_back(parse_type(fam, n, true));
        } else {
          for (const WeylType& t : s->default_types) {
            const std::string f = to_string(t).substr(0, 1);
            if ((!have_family || f == fam) && (!have_rank || t.n == n)) types.push_back(t);
          }
        }
        for (const WeylType& t : types) {
          if (!s->accepts(t)) {
            if (!suite_id.empty()) throw std::invalid_argument("suite " + s->id + " does not accept " + to_string(t));
            continue;
          }
          reports.push_back(run_suite(*s, t, cfg.u, cfg.v));
          if (!as_json) std::cout << report_line(reports.back()) << std::endl;
        }
      }
      if (reports.empty()) throw std::invalid_argument("no suite matches the requested type and rank");
      size_t failed = 0;
      for (const Report& r : reports) failed += r.ok() ? 0 : 1;
      if (as_json) {
        json out = json::array();
        for (const Report& r : reports) out.push_back(json::parse(report_json(r)));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "verify: " << reports.size() << " reports, " << failed << " failed\n";
      }
      return failed == 0 ? 0 : 1;
    }

    cfg.type = parse_type(family, rank);

    if (*table) {
      const WeylGroup& g = WeylGroup::get(cfg.type);
      const SpinWeyl& sw = SpinWeyl::get(g);
      if (as_json) {
        json words = json::array(), rows = json::array();
        for (uint32_t a = 0; a < g.size(); ++a) {
          words.push_back(word_text(g, a));
          json row = json::array();
          for (uint32_t b = 0; b < g.size(); ++b) row.push_back(sw.cocycle(a, b));
          rows.push_back(row);
        }
        std::cout << json{{"params", config_json(cfg)}, {"elements", words}, {"table", rows}}.dump() << "\n";
        return 0;
      }
      for (uint32_t a = 0; a < g.size(); ++a) std::cout << a << " " << word_text(g, a) << "\n";
      for (uint32_t a = 0; a < g.size(); ++a) {
        std::string row;
        for (uint32_t b = 0; b < g.size(); ++b) row += sw.cocycle(a, b) > 0 ? '+' : '-';
        std::cout << row << "\n";
      }
      return 0;
    }

    if (*nf) {
      emit(as_json, cfg, {{"input", expr}}, normal_form(expr, cfg));
      return 0;
    }
    if (*mul) {
      const Value p = multiply(eval(expr, cfg), eval(expr2, cfg));
      emit(as_json, cfg, {{"left", expr}, {"right", expr2}}, render(p, cfg));
      return 0;
    }
    if (*map) {
      const MapKind m = parse_map(map_name);
      SessionConfig domain = cfg;
      domain.algebra = map_domain(m, cfg.algebra);
      const Value image = apply_map(m, eval(expr, domain));
      SessionConfig target = cfg;
      target.algebra = algebra_of(image);
      emit(as_json, target, {{"map", map_name}, {"input", expr}}, render(image, target));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
