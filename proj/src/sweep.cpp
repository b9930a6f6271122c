#include "schub/sweep.hpp"

#include <algorithm>

#include "schub/errors.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

class Recorder {
 public:
  Recorder(SweepSummary& summary, const InstanceSink& sink) : summary_(summary), sink_(sink) {}

  void operator()(Json instance, bool ok) {
    ++summary_.instances;
    if (!ok) ++summary_.disagreements;
    if (sink_) {
      Json line;
      line["check"] = summary_.check;
      for (auto& [key, value] : instance.items()) line[key] = value;
      line["ok"] = ok;
      sink_(line);
    }
  }

 private:
  SweepSummary& summary_;
  const InstanceSink& sink_;
};

void head_oracle(int n, Recorder& rec) {
  for (int d = 1; d < n; ++d)
    for (const auto& I : ParabolicSet::all_subsets(n))
      for (const auto& x : grassmann_elements(n, d)) {
        const bool criterion = is_degree1_head(x, I);
        const bool oracle = is_stable(x.permutation(), x.parabolic(), I);
        rec({{"n", n}, {"d", d}, {"levi", to_json(I)}, {"w", to_json(x.permutation())},
             {"criterion", criterion}, {"oracle", oracle}},
            criterion == oracle);
      }
}

void divisor_stability_check(int n, Recorder& rec) {
  for (int d = 1; d < n; ++d)
    for (const auto& I : ParabolicSet::all_subsets(n))
      for (const auto& x : grassmann_elements(n, d)) {
        if (x.is_identity() || !is_stable(x.permutation(), x.parabolic(), I)) continue;
        for (const auto& entry : divisor_stability(x, I)) {
          const bool oracle = is_stable(entry.divisor.permutation(), x.parabolic(), I);
          rec({{"n", n}, {"d", d}, {"levi", to_json(I)}, {"w", to_json(x.permutation())},
               {"divisor", to_json(entry.divisor.permutation())}, {"predicted", entry.stable}, {"oracle", oracle}},
              entry.stable == oracle);
        }
      }
}

void smooth_unique(int n, Recorder& rec) {
  for (int d = 1; d < n; ++d)
    for (const auto& x : grassmann_elements(n, d)) {
      if (!smooth_form(x)) continue;
      const ParabolicSet J = x.parabolic();
      const bool unique = lmax_unique_head_check(x);
      const bool empty_boundary = boundary(x.permutation(), J, l_max(x.permutation(), J)).empty();
      rec({{"n", n}, {"d", d}, {"w", to_json(x.permutation())}, {"unique_head", unique},
           {"empty_boundary", empty_boundary}},
          unique && empty_boundary);
    }
}

void singular_divisor(int n, Recorder& rec) {
  for (int d = 1; d < n; ++d)
    for (const auto& x : grassmann_elements(n, d)) {
      if (smooth_form(x)) continue;
      rec({{"n", n}, {"d", d}, {"w", to_json(x.permutation())}}, no_stable_divisor_check(x));
    }
}

void smooth_palindrome(int n, Recorder& rec) {
  for (int d = 1; d < n; ++d)
    for (const auto& x : grassmann_elements(n, d)) {
      const bool smooth = smooth_form(x).has_value();
      const bool palindromic = poincare_polynomial(x.permutation(), x.parabolic()).is_palindromic();
      rec({{"n", n}, {"d", d}, {"w", to_json(x.permutation())}, {"smooth_form", smooth},
           {"palindromic", palindromic}},
          smooth == palindromic);
    }
}

template <typename Visit>
void for_each_decomposition(int n, Visit&& visit) {
  const auto subsets = ParabolicSet::all_subsets(n);
  const auto perms = all_permutations(n);
  for (const auto& jp : subsets)
    for (const auto& k : subsets) {
      if (!jp.is_subset_of(k)) continue;
      for (const auto& w : perms)
        if (in_quotient(w, jp)) visit(w, jp, k);
    }
}

void bp_equivalence(int n, Recorder& rec) {
  for_each_decomposition(n, [&](const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
    const auto bp = bp_decompose(w, jp, k);
    Json inst{{"n", n}, {"w", to_json(w)}, {"parabolic", to_json(jp)}, {"k", to_json(k)}};
    inst.update(to_json(bp));
    rec(std::move(inst), bp.characterizations_agree());
  });
}

void divisor_projection(int n, Recorder& rec) {
  const ParabolicSet none = ParabolicSet::none(n);
  for (const auto& k : ParabolicSet::all_subsets(n))
    for (const auto& w : all_permutations(n)) {
      if (!poincare_factorizes(w, none, k)) continue;
      for (const auto& tau : lower_covers(w, none)) {
        const auto proj = project_divisor(tau, w, none, k);
        const bool ok = proj.kind != ProjectionKind::neither &&
                        !(proj.right_simple_outside_k && proj.kind == ProjectionKind::onto);
        Json inst{{"n", n}, {"w", to_json(w)}, {"k", to_json(k)}, {"divisor", to_json(tau)}};
        inst.update(to_json(proj));
        rec(std::move(inst), ok);
      }
    }
}

void bp_chain(int n, Recorder& rec) {
  for (const auto& jp : ParabolicSet::all_subsets(n))
    for (const auto& w : quotient_elements(jp)) {
      const bool chain = rationally_smooth_by_bp_chain(w, jp);
      const bool palindromic = poincare_polynomial(w, jp).is_palindromic();
      rec({{"n", n}, {"w", to_json(w)}, {"parabolic", to_json(jp)}, {"chain", chain}, {"palindromic", palindromic}},
          chain == palindromic);
    }
}

void minimal_head_check(int n, Recorder& rec) {
  const auto subsets = ParabolicSet::all_subsets(n);
  for (const auto& J : subsets)
    for (const auto& w : quotient_elements(J))
      for (const auto& I : subsets) {
        if (!is_stable(w, J, I)) continue;
        const auto report = heads_below(w, J, I);
        const Permutation expected = minimal_head(J, I);
        const bool ok = report.minimal_head && *report.minimal_head == expected;
        rec({{"n", n}, {"w", to_json(w)}, {"parabolic", to_json(J)}, {"levi", to_json(I)},
             {"minimal_head", to_json(expected)}},
            ok);
      }
}

using CheckFn = void (*)(int, Recorder&);

struct CheckEntry {
  const char* name;
  CheckFn fn;
};

constexpr CheckEntry kChecks[] = {
    {"head-oracle", head_oracle},
    {"divisor-stability", divisor_stability_check},
    {"smooth-unique", smooth_unique},
    {"singular-divisor", singular_divisor},
    {"smooth-palindrome", smooth_palindrome},
    {"bp-equivalence", bp_equivalence},
    {"divisor-projection", divisor_projection},
    {"bp-chain", bp_chain},
    {"minimal-head", minimal_head_check},
};

}  // namespace

const std::vector<std::string>& sweep_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

SweepSummary run_sweep(std::string_view check, int max_n, const InstanceSink& sink) {
  auto it = std::find_if(std::begin(kChecks), std::end(kChecks),
                         [&](const CheckEntry& c) { return check == c.name; });
  if (it == std::end(kChecks)) throw PreconditionError("unknown check '" + std::string(check) + "'");
  check_rank_limit(max_n);
  SweepSummary summary{std::string(check), max_n};
  Recorder rec(summary, sink);
  for (int n = 2; n <= max_n; ++n) it->fn(n, rec);
  return summary;
}

Json to_json(const SweepSummary& summary) {
  Json j;
  j["check"] = summary.check;
  j["max_n"] = summary.max_n;
  j["instances"] = summary.instances;
  j["disagreements"] = summary.disagreements;
  return j;
}

}  // namespace schub
