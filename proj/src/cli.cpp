#include "schub/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "schub/bp.hpp"
#include "schub/classify.hpp"
#include "schub/json.hpp"
#include "schub/sweep.hpp"
#include "schub/weyl.hpp"

namespace schub::cli {

namespace {

struct RawOptions {
  int n = 0;
  int d = 0;
  std::string parabolic;
  std::string w;
  std::string levi;
  std::string k;
  std::string format = "json";
  int max_n = 6;
  int max_m = 1000;
  std::string check = "all";
  int rank_limit = kDefaultRankLimit;
};

ParabolicSet parse_set(int n, const std::string& text, const char* what) {
  try {
    return ParabolicSet::parse(n, text);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}


void emit(std::ostream& out, Format format, const Json& j) {
  if (format == Format::json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

Json analyze_report(const AnalysisRequest& req) {
  const Permutation& w = *req.w;
  const ParabolicSet& J = req.parabolic;
  const ParabolicSet lmax = l_max(w, J);
  const ParabolicSet I = req.levi.value_or(lmax);
  const bool stable = is_stable(w, J, I);
  const HeadReport heads = heads_below(w, J, I);

  Json j;
  j["n"] = req.n;
  j["parabolic"] = to_json(J);
  j["w"] = to_json(w);
  j["length"] = length(w);
  j["l_max"] = to_json(lmax);
  j["levi"] = to_json(levi_blocks(I));
  j["stable"] = stable;
  j["minimal_head"] = to_json(minimal_head(J, I));
  j["heads"] = to_json(heads);
  j["boundary"] = Json(nullptr);
  if (stable) {
    Json b = Json::array();
    for (const auto& p : heads.maximal_proper_heads) b.push_back(to_json(p));
    j["boundary"] = std::move(b);
  }
  j["poincare"] = to_json(poincare_polynomial(w, J));
  j["grassmann"] = Json(nullptr);
  if (req.d) {
    const GrassmannSchubert x(*req.d, w);
    Json g;
    g["d"] = *req.d;
    Json rs = Json::array();
    for (const auto& r : runs(x)) rs.push_back(Json::array({r.start, r.extra}));
    g["runs"] = std::move(rs);
    g["dimension"] = dimension(x);
    Json divs = Json::array();
    if (!x.is_identity())
      for (const auto& div : schubert_divisors(x)) divs.push_back(to_json(div.permutation()));
    g["divisors"] = std::move(divs);
    const auto form = smooth_form(x);
    g["smooth_form"] = form ? Json{{"p", form->p}, {"m", form->m}} : Json(nullptr);
    j["grassmann"] = std::move(g);
  }
  return j;
}

Json heads_report(const AnalysisRequest& req) {
  const Permutation& w = *req.w;
  const ParabolicSet I = req.levi.value_or(l_max(w, req.parabolic));
  Json j;
  j["w"] = to_json(w);
  j["parabolic"] = to_json(req.parabolic);
  j["levi"] = to_json(I);
  j.update(to_json(heads_below(w, req.parabolic, I)));
  j["contains_l_orbit"] = !j["heads"].empty();
  return j;
}

Json bp_report(const AnalysisRequest& req) {
  const BPDecomposition bp = bp_decompose(*req.w, req.parabolic, *req.k);
  Json j = to_json(bp);
  const auto complement = req.k->complement();
  if (req.levi && complement.size() == 1) {
    const auto transport = toroidal_transport(*req.w, req.parabolic, complement.indices()[0], *req.levi);
    j["transport"] = to_json(transport);
  }
  return j;
}

int run_sweeps(const AnalysisRequest& req, std::ostream& out) {
  std::vector<std::string> checks;
  if (req.check == "all")
    checks = sweep_checks();
  else
    checks.push_back(req.check);

  long long disagreements = 0;
  for (const auto& name : checks) {
    InstanceSink sink;
    if (req.format == Format::json) sink = [&](const Json& line) { out << line.dump() << '\n'; };
    const SweepSummary summary = run_sweep(name, req.max_n, sink);
    disagreements += summary.disagreements;
    if (req.format == Format::json)
      out << to_json(summary).dump() << '\n';
    else
      out << summary.check << " (n <= " << summary.max_n << "): " << summary.instances << " instances, "
          << summary.disagreements << " disagreements\n";
  }
  return disagreements == 0 ? kExitOk : kExitViolation;
}

int run_classify(const AnalysisRequest& req, std::ostream& out) {
  const CodimSweep sweep = sweep_codim(req.max_m);
  if (req.format == Format::json) {
    for (const auto& family : pasquier_cases()) out << to_json(family).dump() << '\n';
    out << Json{{"sweep", "codim_at_least_two"},
                {"max_m", sweep.max_m},
                {"cases", sweep.cases_checked},
                {"failures", sweep.failures}}
               .dump()
        << '\n';
  } else {
    for (const auto& family : pasquier_cases())
      out << "(" << to_string(family.tag) << ") " << family.triple << ", " << family.constraint << " -> "
          << family.space << '\n';
    out << "codim_at_least_two (m <= " << sweep.max_m << "): " << sweep.cases_checked << " cases, "
        << sweep.failures << " failures\n";
  }
  return sweep.failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

AnalysisRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Levi actions on type-A Schubert varieties", "schub"};
  app.require_subcommand(1);
  RawOptions raw;

  auto add_instance_options = [&](CLI::App* sub, bool needs_w) {
    sub->add_option("--n", raw.n, "rank n of GL_n")->required();
    auto* w = sub->add_option("--w", raw.w, "permutation in one-line notation, e.g. 3,4,1,2");
    if (needs_w) w->required();
    auto* d = sub->add_option("--d", raw.d, "shorthand for the maximal parabolic omitting alpha_d");
    sub->add_option("--parabolic", raw.parabolic, "simple roots of the parabolic, e.g. 1,3,4")->excludes(d);
    sub->add_option("--levi", raw.levi, "simple roots of the Levi subgroup (default: L_max)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* analyze = app.add_subcommand("analyze", "stability, heads, boundary and Poincare data of X_wQ");
  add_instance_options(analyze, true);
  add_format(analyze);
  auto* heads = app.add_subcommand("heads", "degree-1 heads below w");
  add_instance_options(heads, true);
  add_format(heads);
  auto* toroidal = app.add_subcommand("toroidal", "toroidal necessary conditions for a Grassmann Schubert variety");
  add_instance_options(toroidal, true);
  add_format(toroidal);
  auto* bp = app.add_subcommand("bp", "parabolic decomposition and BP characterizations");
  add_instance_options(bp, true);
  bp->add_option("--k", raw.k, "simple roots of the coarser parabolic K")->required();
  add_format(bp);
  auto* sweep = app.add_subcommand("sweep", "exhaustive verification sweeps");
  sweep->add_option("--max-n", raw.max_n, "largest rank to sweep");
  sweep->add_option("--check", raw.check, "check name or 'all'");
  sweep->add_option("--rank-limit", raw.rank_limit, "hard cap on enumerated ranks");
  add_format(sweep);
  auto* classify = app.add_subcommand("classify", "horospherical Picard-number-one data and inequality sweep");
  classify->add_option("--max-m", raw.max_m, "largest m for the inequality sweep");
  add_format(classify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  AnalysisRequest req;
  req.format = raw.format == "text" ? Format::text : Format::json;
  req.max_n = raw.max_n;
  req.max_m = raw.max_m;
  req.check = raw.check;
  req.rank_limit = raw.rank_limit;

  if (*sweep) {
    req.command = Command::sweep;
    require(raw.max_n >= 2, "--max-n must be at least 2");
    require(raw.rank_limit >= 2, "--rank-limit must be at least 2");
    require(req.check == "all" ||
                std::find(sweep_checks().begin(), sweep_checks().end(), req.check) != sweep_checks().end(),
            "unknown check '" + req.check + "'");
    return req;
  }
  if (*classify) {
    req.command = Command::classify;
    require(raw.max_m >= 2, "--max-m must be at least 2");
    return req;
  }

  if (*analyze) req.command = Command::analyze;
  if (*heads) req.command = Command::heads;
  if (*toroidal) req.command = Command::toroidal;
  if (*bp) req.command = Command::bp;
  CLI::App* sub = app.get_subcommands().front();

  require(raw.n >= 1, "--n must be positive");
  req.n = raw.n;
  try {
    req.w = Permutation::parse(raw.w);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
  require(req.w->size() == raw.n, "--w has " + std::to_string(req.w->size()) + " entries but --n is " + std::to_string(raw.n));

  if (sub->count("--d")) {
    require(raw.d >= 1 && raw.d < raw.n, "--d must satisfy 1 <= d < n");
    req.d = raw.d;
    req.parabolic = ParabolicSet::maximal(raw.n, raw.d);
  } else {
    req.parabolic = parse_set(raw.n, raw.parabolic, "parabolic");
    // A maximal parabolic given explicitly still gets the Grassmannian view.
    const auto complement = req.parabolic.complement();
    if (complement.size() == 1) req.d = complement.indices()[0];
  }
  if (sub->count("--levi")) req.levi = parse_set(raw.n, raw.levi, "levi");
  if (*bp) {
    req.k = parse_set(raw.n, raw.k, "k");
    require(req.parabolic.is_subset_of(*req.k), "--parabolic must be contained in --k");
  }
  require(in_quotient(*req.w, req.parabolic),
          req.w->to_string() + " is not a minimal coset representative for the parabolic {" +
              req.parabolic.to_string() + "}");
  if (*toroidal) require(req.d.has_value(), "toroidal needs a maximal parabolic (--d)");
  return req;
}

int run(const AnalysisRequest& req, std::ostream& out) {
  set_rank_limit(req.rank_limit);
  if (req.n > 0) check_rank_limit(req.n);
  switch (req.command) {
    case Command::analyze:
      emit(out, req.format, analyze_report(req));
      return kExitOk;
    case Command::heads:
      emit(out, req.format, heads_report(req));
      return kExitOk;
    case Command::toroidal: {
      const GrassmannSchubert x(*req.d, *req.w);
      const ParabolicSet I = req.levi.value_or(l_max(*req.w, req.parabolic));
      emit(out, req.format, to_json(toroidal_necessary(x, I)));
      return kExitOk;
    }
    case Command::bp:
      emit(out, req.format, bp_report(req));
      return kExitOk;
    case Command::sweep:
      return run_sweeps(req, out);
    case Command::classify:
      return run_classify(req, out);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_request(args), out);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankLimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  }
}

}  // namespace schub::cli
