#include "gtlab/report/registry.hpp"

#include <algorithm>

namespace gtlab {

const std::vector<EquationEntry>& equation_registry() {
  using S = SuiteName;
  static const std::vector<EquationEntry> table = {
      // 2 x 2 case
      {"Eq.1", "gt_gap", S::inequalities},
      {"Eq.AB", "PauliVector::matrix", S::inequalities},
      {"Eq.1a", "pauli_reduce", S::inequalities},
      {"Eq.1aA", "pauli_reduce (law of cosines)", S::inequalities},
      {"Eq.1b", "oscillator_bound", S::inequalities},
      {"EpsExpansion", "equality_order_scan (leading order)", S::inequalities},
      // Dyson's route
      {"Lemma1", "cauchy_trace_check", S::inequalities},
      {"Lemma2", "word_trace_bound", S::inequalities},
      {"Lemma3", "lemma3_check", S::inequalities},
      {"Eq.u1", "word_trace_bound (X = AB)", S::inequalities},
      {"Eq.LT", "lie_trotter_product", S::inequalities},
      // majorization
      {"Eq.2.6", "weyl_polya_check", S::inequalities},
      {"Eq.H", "weyl_power_chain", S::inequalities},
      {"Eq.W2", "trace_power_check", S::inequalities},
      {"ALT", "norm_variant_gap (alt)", S::inequalities},
      {"Lemma5", "karamata_check", S::inequalities},
      {"Eq.i1", "MajorizationPair", S::inequalities},
      // generalizations
      {"Eq.4", "phi_power_check", S::inequalities},
      {"Eq.4.2", "phi_power_check (top-k)", S::inequalities},
      {"Eq.4.1", "phi_exp_check", S::inequalities},
      {"WeakMaj", "norm_variant_gap (weak majorization)", S::inequalities},
      {"Eq.5", "norm_variant_gap (schatten)", S::inequalities},
      {"Eq.5a", "norm_variant_gap (symmetrized)", S::inequalities},
      {"Eq.Sn", "norm_variant_gap (log metric)", S::inequalities},
      {"Eq.Sn1", "norm_variant_gap (log metric, Frobenius)", S::inequalities},
      {"Eq.4.1a", "nonhermitian_bound", S::inequalities},
      {"Eq.4.1b", "hermitian_part_bound", S::inequalities},
      {"Eq.4.1c", "lieb_triple_bound", S::inequalities},
      {"EqualityCondition", "equality_order_scan", S::inequalities},
      // counter-examples
      {"Eq.4.1d", "counterexample_search (triple)", S::counterexamples},
      {"ABC", "counterexample_search (abc trace)", S::counterexamples},
      // concentration
      {"Eq.S", "covariance", S::concentration},
      {"Eq.S3", "covariance_rank_one", S::concentration},
      {"Eq.SP", "operator_norm", S::concentration},
      {"Eq.C", "scalar_chernoff", S::concentration},
      {"Eq.rf", "empirical_tail (union bound)", S::concentration},
      {"Eq.rf1", "empirical_tail (upper Chebyshev)", S::concentration},
      {"Eq.rf2", "empirical_tail (lower Chebyshev)", S::concentration},
      {"Eq.J", "empirical_tail (per-trial trace bound)", S::concentration},
      {"Eq.GTE", "aw_mgf_lemma_check", S::concentration},
      {"Eq.4.29", "trace_norm_step", S::concentration},
      {"Eq.RU", "aw_domination", S::concentration},
      {"Eq.OB", "oliveira_mgf_check", S::concentration},
      {"Eq.OB-AW", "oliveira_vs_aw", S::concentration},
      {"Eq.DD", "oliveira_recursion (endpoints)", S::concentration},
      {"Eq.DD3", "oliveira_recursion (one step)", S::concentration},
      {"Eq.DD1", "mgf_factor_check", S::concentration},
      {"Eq.DDN", "oliveira_recursion (monotone)", S::concentration},
      // studies
      {"Eq.R", "pauli_ratio_mc / pauli_ratio_quadrature", S::studies},
      {"Sqrt2", "hermitization_ratio", S::studies},
  };
  return table;
}

const EquationEntry* find_equation(const std::string& tag) {
  const auto& t = equation_registry();
  const auto it = std::find_if(t.begin(), t.end(), [&](const EquationEntry& e) { return e.tag == tag; });
  return it == t.end() ? nullptr : &*it;
}

}  // namespace gtlab
