#include "idealgraph/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace idealgraph {

namespace {

// Prime labels in the statements below are up to relabeling: a condition like
// "n = p1, m = p1^a1 * p2" means "some prime carries all of n and the other
// has exponent 1", regardless of which of m's primes that is.

std::uint64_t product_alpha_plus_one(const ModulePair& pair) {
  std::uint64_t out = 1;
  for (std::uint32_t a : pair.alpha()) out *= a + 1;
  return out;
}

std::uint64_t product_alpha_minus_beta_plus_one(const ModulePair& pair) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < pair.prime_count(); ++i) {
    out *= pair.alpha()[i] - pair.beta[i] + 1;
  }
  return out;
}

// Index of the single prime dividing n when s' == 1, otherwise npos.
std::size_t single_module_prime(const ModulePair& pair) {
  std::size_t idx = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < pair.beta.size(); ++i) {
    if (pair.beta[i] != 0) {
      if (idx != static_cast<std::size_t>(-1)) return static_cast<std::size_t>(-1);
      idx = i;
    }
  }
  return idx;
}

// n = p1*p2 and m = p1^a1 * p2 with a1 >= 2 (the exceptional family where the
// graph is K_a1 together with a1 isolated vertices).  Returns a1, or 0.
std::uint32_t exceptional_exponent(const ModulePair& pair) {
  if (pair.prime_count() != 2 || !pair.module_is_radical()) return 0;
  const std::uint32_t a0 = pair.alpha()[0];
  const std::uint32_t a1 = pair.alpha()[1];
  if (a0 >= 2 && a1 == 1) return a0;
  if (a1 >= 2 && a0 == 1) return a1;
  return 0;
}

bool is_two_cliques_shape(const ModulePair& pair) {
  return pair.prime_count() == 2 && pair.module_is_radical() &&
         pair.alpha()[0] >= 2 && pair.alpha()[1] >= 2;
}

}  // namespace

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Empty: return "EMPTY";
    case CaseTag::NullGraph: return "NULL_GRAPH";
    case CaseTag::ExceptionalCliquePlusNull: return "EXCEPTIONAL_K_A_UNION_NULL";
    case CaseTag::TwoCliques: return "TWO_CLIQUES";
    case CaseTag::Radical: return "RADICAL";
    case CaseTag::PrimePowerModule: return "PRIME_POWER_MODULE";
    case CaseTag::General: return "GENERAL";
  }
  return "?";
}

const char* edge_color_class_name(EdgeColorClass cls) {
  return cls == EdgeColorClass::Class1 ? "CLASS1" : "CLASS2";
}

const char* diameter_note_name(DiameterNote note) {
  switch (note) {
    case DiameterNote::Degenerate: return "DEGENERATE";
    case DiameterNote::Clique: return "CLIQUE";
    case DiameterNote::BoundLe2: return "BOUND_LE_2";
    case DiameterNote::BoundLe4: return "BOUND_LE_4";
    case DiameterNote::DisconnectedTwoCliques: return "DISCONNECTED_TWO_CLIQUES";
  }
  return "?";
}

std::uint64_t predicted_vertex_count(const ModulePair& pair) {
  return product_alpha_plus_one(pair) - 2;
}

bool predicted_is_null(const ModulePair& pair) {
  const std::size_t s = pair.prime_count();
  if (s == 1) {
    // n = p1 or n = p1^2 over m = p1^a1.
    return pair.beta[0] <= 2;
  }
  if (s == 2) {
    // n = m = p1*p2.
    if (pair.module_is_radical() && pair.alpha()[0] == 1 && pair.alpha()[1] == 1) return true;
    // n = p1 and m = p1^a1 * p2.
    for (std::size_t i = 0; i < 2; ++i) {
      const std::size_t j = 1 - i;
      if (pair.beta[i] == 1 && pair.beta[j] == 0 && pair.alpha()[j] == 1) return true;
    }
  }
  return false;
}

CaseTag classify(const ModulePair& pair) {
  if (predicted_vertex_count(pair) == 0) return CaseTag::Empty;
  if (predicted_is_null(pair)) return CaseTag::NullGraph;
  if (exceptional_exponent(pair) != 0) return CaseTag::ExceptionalCliquePlusNull;
  if (is_two_cliques_shape(pair)) return CaseTag::TwoCliques;
  if (pair.module_is_radical()) return CaseTag::Radical;
  if (pair.module_support_size() == 1) return CaseTag::PrimePowerModule;
  return CaseTag::General;
}

std::uint64_t predicted_degree(const ModulePair& pair, const DivisorVector& d) {
  if (n_divides(pair, d)) return 0;
  std::uint64_t excluded = 1;
  for (std::size_t i = 0; i < pair.prime_count(); ++i) {
    if (d.r[i] < pair.beta[i]) {
      excluded *= pair.alpha()[i] - pair.beta[i] + 1;
    } else {
      excluded *= pair.alpha()[i] + 1;
    }
  }
  return product_alpha_plus_one(pair) - 2 - excluded;
}

std::uint64_t predicted_edge_count(const ModulePair& pair) {
  const auto divisors = enumerate_divisors(pair);
  std::uint64_t degree_sum = 0;
  for (std::size_t i = 1; i + 1 < divisors.size(); ++i) {
    degree_sum += predicted_degree(pair, divisors[i]);
  }
  return degree_sum / 2;
}

std::uint64_t predicted_isolated_count(const ModulePair& pair) {
  switch (classify(pair)) {
    case CaseTag::Empty:
    case CaseTag::NullGraph:
      return predicted_vertex_count(pair);
    case CaseTag::ExceptionalCliquePlusNull:
      return exceptional_exponent(pair);
    default:
      return product_alpha_minus_beta_plus_one(pair) - 1;
  }
}

bool predicted_is_forest(const ModulePair& pair) {
  const std::size_t s = pair.prime_count();
  if (s == 1) return pair.beta[0] <= 3;
  if (s != 2) return false;
  // n = p1*p2 with a1, a2 <= 2.
  if (pair.module_is_radical()) return pair.alpha()[0] <= 2 && pair.alpha()[1] <= 2;
  // n = p1 with the other exponent <= 2 (no constraint on a1).
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    if (pair.beta[i] == 1 && pair.beta[j] == 0 && pair.alpha()[j] <= 2) return true;
  }
  return false;
}

bool predicted_is_tree(const ModulePair& pair) {
  if (pair.prime_count() != 1) return false;
  const std::uint32_t a = pair.alpha()[0];
  const std::uint32_t b = pair.beta[0];
  return (a == 2 && b == 2) || (a == 3 && b == 3) || (a == 2 && b == 1);
}

bool predicted_is_star(const ModulePair& pair) { return predicted_is_tree(pair); }

std::optional<std::uint64_t> predicted_girth(const ModulePair& pair) {
  if (predicted_is_forest(pair)) return std::nullopt;
  return 3;
}

std::uint64_t predicted_max_degree(const ModulePair& pair) {
  const CaseTag tag = classify(pair);
  if (tag == CaseTag::Empty || tag == CaseTag::NullGraph) return 0;
  if (pair.module_is_radical()) {
    // Sort a copy of the exponents descending; vertex order stays untouched.
    std::vector<std::uint32_t> sorted(pair.alpha());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::uint64_t tail = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) tail *= sorted[i];
    return product_alpha_plus_one(pair) - 2 - (std::uint64_t{sorted[0]} + 1) * tail;
  }
  return product_alpha_plus_one(pair) - 2 - product_alpha_minus_beta_plus_one(pair);
}

std::uint64_t predicted_independence_number(const ModulePair& pair) {
  switch (classify(pair)) {
    case CaseTag::Empty:
    case CaseTag::NullGraph:
      return predicted_vertex_count(pair);
    case CaseTag::ExceptionalCliquePlusNull:
      return std::uint64_t{exceptional_exponent(pair)} + 1;
    default:
      return product_alpha_minus_beta_plus_one(pair) - 1 + pair.module_support_size();
  }
}

std::uint64_t predicted_domination_number(const ModulePair& pair) {
  const CaseTag tag = classify(pair);
  if (tag == CaseTag::Empty || tag == CaseTag::NullGraph) {
    // Degenerate: every vertex is its own dominator.
    return predicted_vertex_count(pair);
  }
  const std::uint64_t isolated = predicted_isolated_count(pair);
  if (tag == CaseTag::ExceptionalCliquePlusNull) return isolated + 1;
  if (!pair.module_is_radical()) return isolated + 1;
  return isolated + 2;
}

bool predicted_universal_vertex(const ModulePair& pair) {
  if (pair.n_value != pair.m_value) return false;
  return std::any_of(pair.alpha().begin(), pair.alpha().end(),
                     [](std::uint32_t a) { return a >= 2; });
}

bool predicted_is_complete(const ModulePair& pair) {
  return pair.n_value == pair.m_value && pair.prime_count() == 1 && pair.alpha()[0] >= 2;
}

bool predicted_no_isolated(const ModulePair& pair) {
  if (pair.n_value != pair.m_value) return false;
  const std::size_t s = pair.prime_count();
  if (s == 1 && pair.alpha()[0] <= 2) return false;                       // p1, p1^2
  if (s == 2 && pair.alpha()[0] == 1 && pair.alpha()[1] == 1) return false;  // p1*p2
  return true;
}

ChromaticIndex predicted_chromatic_index(const ModulePair& pair) {
  ChromaticIndex out;
  out.max_degree = predicted_max_degree(pair);
  const CaseTag tag = classify(pair);
  if (tag == CaseTag::Empty || tag == CaseTag::NullGraph) return out;

  bool class2 = false;
  const std::size_t j = single_module_prime(pair);
  if (j != static_cast<std::size_t>(-1)) {
    // n = pj^bj: G \ A is complete of order bj * prod_{i != j}(ai + 1) - 1.
    std::uint64_t order_plus_one = pair.beta[j];
    for (std::size_t i = 0; i < pair.prime_count(); ++i) {
      if (i != j) order_plus_one *= pair.alpha()[i] + 1;
    }
    class2 = order_plus_one % 2 == 0;
  } else if (pair.prime_count() == 2 && pair.module_is_radical()) {
    class2 = std::max(pair.alpha()[0], pair.alpha()[1]) % 2 == 1;
  }
  out.cls = class2 ? EdgeColorClass::Class2 : EdgeColorClass::Class1;
  return out;
}

bool predicted_eulerian_nonisolated(const ModulePair& pair) {
  const CaseTag tag = classify(pair);
  if (tag == CaseTag::Empty || tag == CaseTag::NullGraph) {
    return true;  // vacuous, flagged degenerate by callers
  }
  const auto& alpha = pair.alpha();
  const auto& beta = pair.beta;
  const std::size_t s = pair.prime_count();

  bool all_even = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (alpha[i] % 2 != 0 || beta[i] % 2 != 0) all_even = false;
    if (alpha[i] % 2 == 1 && beta[i] % 2 == 0) return true;  // clause (ii)
  }
  if (all_even) return true;  // clause (i)
  if (pair.module_is_radical()) {
    const bool all_alpha_odd =
        std::all_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a % 2 == 1; });
    if (all_alpha_odd && s >= 3) return true;  // clause (iii)
    if (s == 2) {                              // clause (iv)
      for (std::size_t i = 0; i < 2; ++i) {
        const std::size_t k = 1 - i;
        if (alpha[i] > 1 && alpha[i] % 2 == 1 && alpha[k] == 1) return true;
      }
    }
  }
  return false;
}

DiameterNote predicted_diameter_note(const ModulePair& pair) {
  switch (classify(pair)) {
    case CaseTag::Empty:
    case CaseTag::NullGraph:
      return DiameterNote::Degenerate;
    case CaseTag::TwoCliques:
      return DiameterNote::DisconnectedTwoCliques;
    case CaseTag::ExceptionalCliquePlusNull:
      return DiameterNote::Clique;
    case CaseTag::Radical:
      return DiameterNote::BoundLe4;
    default:
      return DiameterNote::BoundLe2;
  }
}

PredictedInvariants predict_invariants(const ModulePair& pair) {
  PredictedInvariants out;
  out.tag = classify(pair);
  out.degenerate = out.tag == CaseTag::Empty || out.tag == CaseTag::NullGraph;
  out.vertex_count = predicted_vertex_count(pair);
  out.edge_count = predicted_edge_count(pair);
  out.is_null = predicted_is_null(pair);
  out.isolated_count = predicted_isolated_count(pair);
  out.girth = predicted_girth(pair);
  out.max_degree = predicted_max_degree(pair);
  out.independence_number = predicted_independence_number(pair);
  out.domination_number = predicted_domination_number(pair);
  out.is_forest = predicted_is_forest(pair);
  out.is_tree = predicted_is_tree(pair);
  out.is_star = predicted_is_star(pair);
  out.is_complete = predicted_is_complete(pair);
  out.has_universal_vertex = predicted_universal_vertex(pair);
  out.no_isolated_vertex = predicted_no_isolated(pair);
  const ChromaticIndex chrom = predicted_chromatic_index(pair);
  out.chromatic_index = out.degenerate ? 0 : chrom.value();
  out.chromatic_class = chrom.cls;
  out.eulerian_nonisolated = predicted_eulerian_nonisolated(pair);
  out.diameter_note = predicted_diameter_note(pair);
  return out;
}

namespace {

// Which forest clause fired, as a stable identifier ("forest-i" ... "forest-iii").
std::string forest_clause(const ModulePair& pair) {
  if (!predicted_is_forest(pair)) return "forest-none";
  const std::size_t s = pair.prime_count();
  if (s == 1) return "forest-iii";
  return pair.module_is_radical() ? "forest-i" : "forest-ii";
}

std::string tree_clause(const ModulePair& pair) {
  if (!predicted_is_tree(pair)) return "tree-none";
  const std::uint32_t a = pair.alpha()[0];
  const std::uint32_t b = pair.beta[0];
  if (a == 2 && b == 2) return "tree-i";
  if (a == 3 && b == 3) return "tree-ii";
  return "tree-iii";
}

std::string null_clause(const ModulePair& pair) {
  if (!predicted_is_null(pair)) return "null-none";
  const std::size_t s = pair.prime_count();
  if (s == 1) return pair.beta[0] == 1 ? "null-ii" : "null-iii";
  if (pair.module_is_radical()) return "null-iv";
  return "null-i";
}

std::string eulerian_clause(const ModulePair& pair) {
  const auto& alpha = pair.alpha();
  const auto& beta = pair.beta;
  const std::size_t s = pair.prime_count();
  bool all_even = true;
  bool clause_ii = false;
  for (std::size_t i = 0; i < s; ++i) {
    if (alpha[i] % 2 != 0 || beta[i] % 2 != 0) all_even = false;
    if (alpha[i] % 2 == 1 && beta[i] % 2 == 0) clause_ii = true;
  }
  if (all_even) return "eulerian-i";
  if (clause_ii) return "eulerian-ii";
  if (pair.module_is_radical()) {
    const bool all_alpha_odd =
        std::all_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a % 2 == 1; });
    if (all_alpha_odd && s >= 3) return "eulerian-iii";
    if (s == 2) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (alpha[i] > 1 && alpha[i] % 2 == 1 && alpha[1 - i] == 1) return "eulerian-iv";
      }
    }
  }
  return "eulerian-none";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<ExplainEntry> explain_pair(const ModulePair& pair) {
  const PredictedInvariants inv = predict_invariants(pair);
  const CaseTag tag = inv.tag;
  const bool degenerate = inv.degenerate;
  std::vector<ExplainEntry> out;

  out.push_back({"case", case_tag_name(tag), "case-split",
                 "classification precedence EMPTY > NULL_GRAPH > EXCEPTIONAL > TWO_CLIQUES > "
                 "RADICAL > PRIME_POWER_MODULE > GENERAL"});
  out.push_back({"vertex_count", std::to_string(inv.vertex_count), "vertex-count",
                 "prod(alpha_i + 1) - 2 proper nonzero ideals"});

  {
    std::string clause = "isolated-general";
    std::string detail = "vertices with n | d: prod(alpha_i - beta_i + 1) - 1";
    if (degenerate) {
      clause = "isolated-null";
      detail = "every vertex of a null graph is isolated";
    } else if (tag == CaseTag::ExceptionalCliquePlusNull) {
      clause = "isolated-exceptional";
      detail = "graph is K_{a1} u comp(K_{a1}) with a1 = " +
               std::to_string(exceptional_exponent(pair)) + ", so |A| = a1";
    }
    out.push_back({"isolated_count", std::to_string(inv.isolated_count), clause, detail});
  }

  out.push_back({"girth", inv.girth ? std::to_string(*inv.girth) : "inf",
                 inv.girth ? "girth-theorem" : forest_clause(pair),
                 inv.girth ? "girth is always 3 once any cycle exists"
                           : "acyclic: the forest characterization applies"});
  out.push_back({"is_forest", bool_str(inv.is_forest), forest_clause(pair),
                 "forest iff one of the three listed shapes holds"});
  out.push_back({"is_tree", bool_str(inv.is_tree), tree_clause(pair),
                 "tree iff star; only the three single-prime shapes qualify"});
  out.push_back({"is_null", bool_str(inv.is_null), null_clause(pair),
                 "edgeless iff one of the four listed shapes holds"});

  {
    std::string clause = degenerate ? "delta-null"
                         : pair.module_is_radical() ? "delta-radical"
                                                    : "delta-general";
    std::string detail =
        degenerate ? "null graph, maximum degree 0"
        : pair.module_is_radical()
            ? "n is squarefree: subtract (a1 + 1) * prod a_i with exponents sorted descending"
            : "some vertex meets every non-isolated vertex: subtract prod(a_i - b_i + 1)";
    out.push_back({"max_degree", std::to_string(inv.max_degree), clause, detail});
  }

  {
    std::string clause = degenerate ? "independence-null"
                         : tag == CaseTag::ExceptionalCliquePlusNull
                             ? "independence-exceptional"
                             : "independence-general";
    std::string detail = degenerate ? "all vertices are pairwise non-adjacent"
                         : tag == CaseTag::ExceptionalCliquePlusNull
                             ? "a1 isolated vertices plus one clique vertex"
                             : "|A| + s' = prod(a_i - b_i + 1) - 1 + s'";
    out.push_back(
        {"independence_number", std::to_string(inv.independence_number), clause, detail});
  }

  {
    std::string clause;
    std::string detail;
    if (degenerate) {
      clause = "domination-null";
      detail = "degenerate: every vertex must dominate itself";
    } else if (tag == CaseTag::ExceptionalCliquePlusNull) {
      clause = "domination-exceptional";
      detail = "|A| + 1: one clique vertex dominates K_{a1}";
    } else if (!pair.module_is_radical()) {
      clause = "domination-nonradical";
      detail = "|A| + 1: a vertex adjacent to every non-isolated vertex exists";
    } else {
      clause = "domination-radical";
      detail = "|A| + 2: no single vertex dominates the non-isolated part";
    }
    out.push_back({"domination_number", std::to_string(inv.domination_number), clause, detail});
  }

  out.push_back({"universal_vertex", bool_str(inv.has_universal_vertex), "universal-vertex",
                 "a vertex adjacent to all others exists iff n = m and some a_j >= 2"});
  out.push_back({"is_complete", bool_str(inv.is_complete), "complete-corollary",
                 "complete iff n = m = p1^a1 with a1 >= 2"});
  out.push_back({"no_isolated_vertex", bool_str(inv.no_isolated_vertex), "no-isolated-corollary",
                 "no isolated vertex iff n = m and m is not p1, p1^2 or p1*p2"});

  {
    std::string clause;
    std::string detail;
    if (degenerate) {
      clause = "chromatic-null";
      detail = "no edges to color";
    } else if (single_module_prime(pair) != static_cast<std::size_t>(-1)) {
      clause = "chromatic-prime-power";
      detail = "G \\ A is complete; class 2 iff b1 * prod_{i>=2}(a_i + 1) is even";
    } else if (pair.prime_count() == 2 && pair.module_is_radical()) {
      clause = "chromatic-two-prime";
      detail = "disjoint cliques; class 2 iff max{a1, a2} is odd";
    } else if (pair.module_is_radical()) {
      clause = "chromatic-radical-s3";
      detail = "n squarefree with s >= 3 is always class 1";
    } else {
      clause = "chromatic-nonradical";
      detail = "n not squarefree with s >= 2 is always class 1";
    }
    std::ostringstream value;
    value << inv.chromatic_index << " (" << edge_color_class_name(inv.chromatic_class) << ")";
    out.push_back({"chromatic_index", value.str(), clause, detail});
  }

  {
    const std::string clause = degenerate ? "eulerian-null" : eulerian_clause(pair);
    out.push_back({"eulerian_nonisolated", bool_str(inv.eulerian_nonisolated), clause,
                   degenerate ? "G \\ A is empty; vacuously Eulerian"
                              : "clauses (i)-(iv) checked as a plain disjunction"});
  }

  {
    std::string clause;
    std::string detail;
    switch (inv.diameter_note) {
      case DiameterNote::Degenerate:
        clause = "diameter-null";
        detail = "nothing to bound";
        break;
      case DiameterNote::DisconnectedTwoCliques:
        clause = "diameter-two-cliques";
        detail = "G \\ A = K_{a1} u K_{a2}, disconnected";
        break;
      case DiameterNote::Clique:
        clause = "diameter-clique";
        detail = "G \\ A is a clique, diameter <= 1";
        break;
      case DiameterNote::BoundLe2:
        clause = "diameter-le2";
        detail = "n not squarefree: diameter of G \\ A is at most 2";
        break;
      case DiameterNote::BoundLe4:
        clause = "diameter-le4";
        detail = "diameter of G \\ A is at most 4";
        break;
    }
    out.push_back({"diameter", diameter_note_name(inv.diameter_note), clause, detail});
  }

  return out;
}

}  // namespace idealgraph
