#include "weylshape/shape_checker.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "weylshape/error.hpp"

namespace weylshape {

namespace {

Rational r64(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string c2_text(const CutAnalysis& cut, const Direction& dir) {
  const auto& [x, y] = *cut.c2;
  if (cut.forbidden) return "(" + y.to_string() + "-1/" + std::to_string(dir.rho) + "," + y.to_string() + ")";
  return "(" + x.to_string() + "," + y.to_string() + ")";
}

template <class F>
std::string join_cuts(const CandidateReport& r, F&& cell) {
  std::string out;
  for (std::size_t i = 0; i < r.cuts.size(); ++i) {
    if (i > 0) out += "; ";
    out += cell(r.cuts[i]);
  }
  return out;
}

struct Cells {
  std::string c0, f, dir, c1, d, gamma, c2;
};

Cells cells(const CandidateReport& r) {
  const CornerCandidate& c = r.candidate;
  Cells out{pair_text(c.u, c.v), pair_text(c.f1, c.f2), c.dir.to_string(), "×", "", "", ""};
  if (c.c1.empty()) return out;
  out.c1 = join_cuts(r, [](const CutAnalysis& k) { return pair_text(k.c1.first, k.c1.second); });
  out.d = std::to_string(c.d);
  if (c.d == 1) {
    out.gamma = join_cuts(r, [](const CutAnalysis& k) { return k.gamma->to_string(); });
    out.c2 = join_cuts(r, [&](const CutAnalysis& k) { return c2_text(k, c.dir); });
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string emit_md(const std::vector<CandidateReport>& reports) {
  std::ostringstream os;
  os << "| C0 | (f1,f2) | (rho,sigma) | C1 | d | gamma | C2 |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    const Cells c = cells(r);
    os << "| " << c.c0 << " | " << c.f << " | " << c.dir << " | " << c.c1 << " | " << c.d << " | " << c.gamma
       << " | " << c.c2 << " |\n";
  }
  return os.str();
}

std::string emit_csv(const std::vector<CandidateReport>& reports) {
  std::ostringstream os;
  os << "C0,F,dir,C1,d,gamma,C2,verdict\n";
  for (const auto& r : reports) {
    const Cells c = cells(r);
    for (const std::string& field : {c.c0, c.f, c.dir, c.c1, c.d, c.gamma, c.c2}) os << csv_field(field) << ",";
    os << to_string(r.verdict) << "\n";
  }
  return os.str();
}

std::string emit_json(const std::vector<CandidateReport>& reports) {
  using json = nlohmann::ordered_json;
  json rows = json::array();
  for (const auto& r : reports) {
    const CornerCandidate& c = r.candidate;
    json row;
    row["C0"] = {c.u, c.v};
    row["F"] = {c.f1, c.f2};
    row["dir"] = {c.dir.rho, c.dir.sigma};
    json c1 = json::array();
    for (const auto& [rr, ss] : c.c1) c1.push_back({rr, ss});
    row["C1"] = c1;
    row["d"] = c.d;
    const CutAnalysis* first = r.cuts.empty() ? nullptr : &r.cuts.front();
    row["gamma"] = first && first->gamma ? json(first->gamma->to_string()) : json(nullptr);
    row["C2"] = first && first->c2 ? json{first->c2->first.to_string(), first->c2->second.to_string()} : json(nullptr);
    row["verdict"] = to_string(r.verdict);
    json cuts = json::array();
    for (const auto& k : r.cuts) {
      json cut;
      cut["C1"] = {k.c1.first, k.c1.second};
      cut["gamma"] = k.gamma ? json(k.gamma->to_string()) : json(nullptr);
      cut["C2"] = k.c2 ? json{k.c2->first.to_string(), k.c2->second.to_string()} : json(nullptr);
      cut["forbidden"] = k.forbidden;
      cuts.push_back(cut);
    }
    row["cuts"] = cuts;
    rows.push_back(row);
  }
  return rows.dump(2) + "\n";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::RefutedNoC1:
      return "refuted:no-C1";
    case Verdict::RefutedCondition6:
      return "refuted:condition-6";
    case Verdict::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::vector<CornerCandidate> enumerate_candidates(std::int64_t max_sum) {
  if (max_sum < 5) throw Error(ErrorCode::PreconditionViolated, "max_sum must be at least 5");
  std::vector<CornerCandidate> out;
  for (std::int64_t u = 3; 2 * u + 1 <= max_sum; ++u) {
    for (std::int64_t v = u + 1; u + v <= max_sum; ++v) {
      const std::int64_t g = std::gcd(u, v);
      if (g == 1) continue;
      for (std::int64_t t = 1; t < g; ++t) {
        CornerCandidate c;
        c.u = u;
        c.v = v;
        c.f1 = t * u / g;
        c.f2 = t * v / g;
        if (c.f1 < 2) continue;
        c.dir = dir_of(SupportPoint{r64(c.f1 - 1), c.f2 - 1});
        if (c.dir.sigma >= 0) continue;
        c.d = std::gcd(c.f1 - 1, c.f2 - 1);
        const std::int64_t target = c.dir.rho * u + c.dir.sigma * v;
        for (std::int64_t r = 1; r < u; ++r)
          for (std::int64_t s = 0; s < r; ++s)
            if (c.dir.rho * r + c.dir.sigma * s == target) c.c1.emplace_back(r, s);
        out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CornerCandidate& a, const CornerCandidate& b) {
    return std::tie(a.u, a.v, a.f1) < std::tie(b.u, b.v, b.f1);
  });
  return out;
}

CandidateReport refute(const CornerCandidate& c) {
  CandidateReport report{c, {}, Verdict::RefutedNoC1};
  if (c.c1.empty()) return report;

  bool all_forbidden = c.d == 1;
  const Rational rho = r64(c.dir.rho);
  const Rational step_x = r64(-c.dir.sigma) / rho;
  for (const auto& [r, s] : c.c1) {
    CutAnalysis cut{{r, s}, std::nullopt, std::nullopt, false};
    if (c.d == 1) {
      const Rational gamma = r64(c.v - s) / rho;
      const Rational t = gamma - r64(s);
      const Rational x = r64(r) + t * step_x;
      const Rational y = r64(s) + t;
      cut.gamma = gamma;
      cut.c2 = std::make_pair(x, y);
      cut.forbidden = y >= Rational(2) && x == y - Rational(1) / rho;
      all_forbidden = all_forbidden && cut.forbidden;
    }
    report.cuts.push_back(std::move(cut));
  }
  report.verdict = all_forbidden ? Verdict::RefutedCondition6 : Verdict::Unresolved;
  return report;
}

std::optional<std::string> BoundSummary::conclusion() const {
  if (unresolved > 0) return std::nullopt;
  return "B > " + std::to_string(max_sum);
}

BoundResult check_bound(std::int64_t max_sum, unsigned jobs) {
  const std::vector<CornerCandidate> candidates = enumerate_candidates(max_sum);
  BoundResult result;
  result.reports.resize(candidates.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, candidates.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) result.reports[i] = refute(candidates[i]);
  } else {
    // strided split; every slot is written by exactly one thread
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < candidates.size(); i += workers) result.reports[i] = refute(candidates[i]);
      });
    for (auto& th : pool) th.join();
  }
  result.summary.max_sum = max_sum;
  result.summary.candidates = candidates.size();
  for (const auto& r : result.reports) {
    if (r.verdict == Verdict::Unresolved) {
      ++result.summary.unresolved;
    } else {
      ++result.summary.refuted;
    }
  }
  return result;
}

std::string emit_table(const std::vector<CandidateReport>& reports, const std::string& format) {
  if (format == "md") return emit_md(reports);
  if (format == "csv") return emit_csv(reports);
  if (format == "json") return emit_json(reports);
  throw Error(ErrorCode::UnknownFormat, "unknown table format \"" + format + "\" (md, csv, json)");
}

std::string emit_summary(const BoundSummary& summary) {
  std::ostringstream os;
  os << "candidates: " << summary.candidates << "\n";
  os << "refuted: " << summary.refuted << "\n";
  os << "unresolved: " << summary.unresolved << "\n";
  os << "conclusion: " << summary.conclusion().value_or("no bound claim") << "\n";
  return os.str();
}

}  // namespace weylshape
