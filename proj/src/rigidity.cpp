#include "rigiditykit/rigidity.hpp"

#include <algorithm>
#include <sstream>

#include "linear.hpp"
#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Rigid: return "Rigid";
    case Verdict::SemiRigid: return "SemiRigid";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool Certificate::all_checks_passed() const {
  return std::all_of(checked.begin(), checked.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

Rat zero_sum_threshold(std::size_t m) { return Rat(1, static_cast<std::int64_t>(m) - 2); }

std::set<VarName> ring_or_form(const MTermForm& form, const std::optional<std::set<VarName>>& ring) {
  const auto vs = form.variables();
  std::set<VarName> out(vs.begin(), vs.end());
  if (ring) out.insert(ring->begin(), ring->end());
  return out;
}

std::string join(const std::vector<VarName>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i];
  return out;
}

}  // namespace

MlContainment ml_containment(const MTermForm& form, const std::optional<std::set<VarName>>& ring) {
  const Rat sum = exponent_sum(form);
  const Rat threshold = zero_sum_threshold(form.m());
  if (sum > threshold) {
    throw Error(ErrorCode::NotApplicable,
                "exponent sum " + sum.str() + " exceeds " + threshold.str() + "; no ML containment is certified");
  }
  MlContainment out;
  out.generators = form.variables();
  std::sort(out.generators.begin(), out.generators.end());
  out.sml_all = ring_or_form(form, ring).size() == out.generators.size();
  return out;
}

Certificate certify_rigidity(const MTermForm& form, bool assume_prime, const std::optional<std::set<VarName>>& ring) {
  Certificate cert;
  const Rat sum = exponent_sum(form);
  const Rat threshold = zero_sum_threshold(form.m());
  const bool criterion = sum <= threshold;

  cert.checked.push_back({"variable-disjoint m-term form", true});
  cert.checked.push_back({"exponent sum <= 1/(m-2)", criterion});
  cert.checked.push_back({"monomials pairwise relatively prime in the quotient (distinct generators)", true});
  cert.exponent_sums.push_back({sum, threshold});
  cert.assumptions.push_back(assume_prime ? "F prime (asserted)" : "F prime (not asserted)");

  std::ostringstream notes;
  notes << "m = " << form.m() << "; verdict does not depend on the coefficients a_i";
  if (!criterion) {
    notes << "; exponent criterion fails, which is sufficient but not necessary, so no non-rigidity is claimed";
  } else if (!assume_prime) {
    notes << "; primality of F is not decided and was not asserted";
  }

  if (criterion && assume_prime) {
    cert.verdict = Verdict::Rigid;
    const auto ml = ml_containment(form, ring);
    cert.ml_generators = ml.generators;
    cert.sml_all = ml.sml_all;
    if (ml.sml_all) {
      notes << "; every generator lies in ML, so SML(X) = K[X]";
    } else {
      notes << "; the ring has generators outside the form, which are not certified";
    }
  }
  cert.notes = notes.str();
  return cert;
}

Certificate detect_semirigid(const MPoly& f, const std::optional<std::map<VarName, MPoly>>& subst, bool assume_prime,
                             const std::optional<std::set<VarName>>& ring) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "F must be nonzero");

  std::set<VarName> generators = ring ? *ring : f.vars();
  for (const auto& v : f.vars()) {
    if (!generators.contains(v)) throw Error(ErrorCode::UnknownVariable, "'" + v + "' is not a ring generator");
  }
  MPoly g = f;
  if (subst && !subst->empty()) {
    const auto affine = detail::as_affine(*subst);
    if (!affine) throw Error(ErrorCode::BadSubstitution, "substitution is not affine");
    if (affine->sources.size() != affine->targets.size() || !detail::invert(affine->linear)) {
      throw Error(ErrorCode::BadSubstitution, "substitution is not an invertible change of variables");
    }
    for (const auto& src : affine->sources) generators.erase(src);
    for (const auto& tgt : affine->targets) {
      if (generators.contains(tgt)) {
        throw Error(ErrorCode::BadSubstitution, "new variable '" + tgt + "' collides with a kept generator");
      }
    }
    generators.insert(affine->targets.begin(), affine->targets.end());
    g = substitute(f, *subst);
  }

  const auto used = g.vars();
  std::vector<VarName> free_vars;
  for (const auto& v : generators) {
    if (!used.contains(v)) free_vars.push_back(v);
  }

  Certificate cert;
  cert.checked.push_back({"ring has a generator unused by F", !free_vars.empty()});
  cert.checked.push_back({"exactly one free generator", free_vars.size() == 1});
  if (free_vars.size() != 1) {
    cert.notes = free_vars.empty() ? "no unused generator; no split found"
                                   : "more than one unused generator (" + join(free_vars) +
                                         "); A[y1, y2, ...] is not semi-rigid by this argument";
    return cert;
  }

  MTermForm core_form;
  try {
    core_form = validate_mterm(g);
  } catch (const Error& e) {
    cert.checked.push_back({"core is a variable-disjoint m-term form", false});
    cert.notes = std::string("core is not certifiable: ") + e.what();
    return cert;
  }
  const Certificate core = certify_rigidity(core_form, assume_prime);
  cert.checked.insert(cert.checked.end(), core.checked.begin(), core.checked.end());
  cert.assumptions = core.assumptions;
  cert.exponent_sums = core.exponent_sums;

  SemiRigidSplit split;
  split.core = g;
  split.core_variables.assign(used.begin(), used.end());
  split.free_variables = free_vars;
  cert.split = std::move(split);

  if (core.verdict == Verdict::Rigid) {
    cert.verdict = Verdict::SemiRigid;
    cert.ml_generators = core.ml_generators;
    cert.notes = "rigid core in " + join(cert.split->core_variables) + " with free variable " + free_vars.front() +
                 "; ML(B) is the core algebra";
  } else {
    cert.notes = "core is not certified rigid: " + core.notes;
  }
  return cert;
}

}  // namespace rigiditykit
