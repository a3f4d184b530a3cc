#pragma once

#include "qlr/verify/report.hpp"

namespace qlr {

// Exhaustive theorem checks over small ranges.
Report check_charge_axioms(int max_len, int max_letter);
Report check_overlap_lemma(int max_total);
Report check_two_row_dual(int max_total);
Report check_fitting(int max_total);
Report check_evacuation_theorem(int max_total);

Report check_cyclage_posets(int max_size);
Report check_cyc_image(int max_n);
Report check_row_col_cat(int max_n);
Report check_standard_cocharge(int max_n);
Report check_theta_lemmas(int max_n);
Report check_theta_embeddings(int max_n, unsigned seed);

Report check_stembridge(int max_n);
Report check_column_kostka(int max_n);
Report check_hook_catabolizable(int max_n, int max_size);

// Weakly increasing words of each length up to max_len over [1, letters].
std::vector<std::vector<Word>> increasing_word_sequences(int num_words, int max_total, int letters);

}  // namespace qlr
