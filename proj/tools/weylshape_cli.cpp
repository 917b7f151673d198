// weylshape: command-line front end.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "weylshape/bracket.hpp"
#include "weylshape/error.hpp"
#include "weylshape/parse.hpp"
#include "weylshape/props/suites.hpp"
#include "weylshape/render.hpp"
#include "weylshape/shape_checker.hpp"

namespace {

using namespace weylshape;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUnresolved = 2;
constexpr int kUsage = 64;
constexpr int kBadInput = 65;

constexpr std::uint64_t kDefaultSeed = 0xD1C3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used, 0);
  if (used != text.size()) throw UsageError("bad seed '" + text + "'");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEYLSHAPE_SEED"); env != nullptr && *env != '\0') return parse_seed(env);
  return kDefaultSeed;
}

Direction need_direction(const std::optional<std::string>& text, const std::string& show) {
  if (!text) throw UsageError("--show " + show + " needs --dir");
  return Direction::parse(*text);
}

std::string join_directions(const std::vector<Direction>& dirs) {
  std::string out = "[";
  for (std::size_t i = 0; i < dirs.size(); ++i) out += (i ? ", " : "") + dirs[i].to_string();
  return out + "]";
}

struct CheckBoundArgs {
  std::int64_t max_sum = 15;
  std::string format = "md";
  unsigned jobs = 1;
};

int cmd_check_bound(const CheckBoundArgs& a) {
  const BoundResult r = check_bound(a.max_sum, a.jobs);
  std::cout << emit_table(r.reports, a.format);
  // Keep machine-readable output clean; the summary goes to stderr there.
  std::ostream& summary = a.format == "md" ? std::cout : std::cerr;
  if (a.format == "md") summary << "\n";
  summary << emit_summary(r.summary);
  return r.summary.unresolved == 0 ? kOk : kUnresolved;
}

struct EvalArgs {
  std::string expr;
  std::optional<std::string> dir;
  std::string show = "supp";
};

int cmd_eval(const EvalArgs& a) {
  const WeylElement p = parse_weyl(a.expr);
  if (a.show == "supp") {
    TermMap unit;
    for (const auto& [pt, c] : p.terms()) unit.emplace(pt, Rational(1));
    std::cout << format(WeylElement(p.level(), std::move(unit))) << "\n";
  } else if (a.show == "dirs") {
    std::cout << join_directions(directions(p)) << "\n";
  } else {
    const Direction d = need_direction(a.dir, a.show);
    if (a.show == "leading") std::cout << format(leading(p, d)) << "\n";
    if (a.show == "st") std::cout << st(p, d).to_string() << "\n";
    if (a.show == "en") std::cout << en(p, d).to_string() << "\n";
    if (a.show == "fpoly") std::cout << f_poly(p, d).to_string() << "\n";
  }
  return kOk;
}

struct BracketArgs {
  std::string p;
  std::string q;
  std::string dir;
};

int cmd_bracket(const BracketArgs& a) {
  const BracketOutcome b = bracket(parse_weyl(a.p), parse_weyl(a.q), Direction::parse(a.dir));
  std::cout << (b.proportional ? std::string("0 (proportional)") : format(b.value)) << "\n";
  return kOk;
}

struct PolygonArgs {
  std::string expr;
  std::optional<std::string> out;
  std::optional<std::string> dir;
  bool ascii = false;
};

int cmd_polygon(const PolygonArgs& a) {
  const LaurentElement p = psi(parse_weyl(a.expr));
  std::optional<Direction> d;
  if (a.dir) d = Direction::parse(*a.dir);
  const std::string text = a.ascii ? render_ascii(p, d) : render_svg(p, d);
  if (!a.out) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(*a.out, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + *a.out);
  return kOk;
}

struct SelftestArgs {
  std::optional<std::string> seed;
  std::size_t cases = 500;
  std::string only;
};

int cmd_selftest(const SelftestArgs& a) {
  const std::uint64_t seed = a.seed ? parse_seed(*a.seed) : default_seed();
  std::cout << "seed " << seed << ", " << a.cases << " cases per suite\n";
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const props::SuiteInfo& s : props::all_suites()) {
    const std::string id = std::string(s.module) + "/" + s.name;
    if (!a.only.empty() && id.find(a.only) == std::string::npos) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const props::SuiteResult r = s.run(seed, a.cases);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << id << "  " << r.cases - r.failures << "/" << r.cases << "  ("
              << ms << " ms)\n";
    if (!r.ok()) std::cout << "     first failure: " << r.first_failure << "\n";
    if (r.flagged > 0) std::cout << "     note: " << r.flagged << " flagged, e.g. " << r.first_flag << "\n";
    (r.ok() ? passed : failed)++;
  }
  std::cout << passed << " suites passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Weyl algebra and the corner-shape search."};
  app.require_subcommand(1);

  CheckBoundArgs cb;
  auto* check = app.add_subcommand("check-bound", "enumerate and refute corner candidates up to a sum bound");
  check->add_option("--max-sum", cb.max_sum, "bound on u + v")->check(CLI::Range(std::int64_t{5}, std::int64_t{1} << 20));
  check->add_option("--format", cb.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  check->add_option("--jobs", cb.jobs, "worker threads")->check(CLI::Range(1U, 256U));

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a quantity attached to an element");
  eval->add_option("--expr", ev.expr, "element, e.g. X^2*Y + 3*X^(1/2)")->required();
  eval->add_option("--dir", ev.dir, "direction rho,sigma");
  eval->add_option("--show", ev.show, "supp, leading, st, en, fpoly or dirs")
      ->check(CLI::IsMember({"supp", "leading", "st", "en", "fpoly", "dirs"}));

  BracketArgs br;
  auto* brk = app.add_subcommand("bracket", "the (rho,sigma)-bracket of two elements");
  brk->add_option("--p", br.p, "first element")->required();
  brk->add_option("--q", br.q, "second element")->required();
  brk->add_option("--dir", br.dir, "direction rho,sigma")->required();

  PolygonArgs pg;
  auto* poly = app.add_subcommand("polygon", "draw the support as SVG (or text)");
  poly->add_option("--expr", pg.expr, "element")->required();
  poly->add_option("--out", pg.out, "output file; stdout when absent");
  poly->add_option("--dir", pg.dir, "mark st and en for this direction");
  poly->add_flag("--ascii", pg.ascii, "text grid instead of SVG");

  SelftestArgs sf;
  auto* self = app.add_subcommand("selftest", "run the seeded property suites");
  self->add_option("--seed", sf.seed, "64-bit seed (default 0xD1C3 or $WEYLSHAPE_SEED)");
  self->add_option("--cases", sf.cases, "cases per suite")->check(CLI::PositiveNumber);
  self->add_option("--only", sf.only, "run suites whose module/name contains this text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check_bound(cb);
    if (*eval) return cmd_eval(ev);
    if (*brk) return cmd_bracket(br);
    if (*poly) return cmd_polygon(pg);
    if (*self) return cmd_selftest(sf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
