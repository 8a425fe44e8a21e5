full # unused method (cdlab/linalg.py:122)
lattice # unused function (cdlab/linalg.py:290)
arith # unused function (cdlab/scalar.py:219)
galois_conjugate # unused method (cdlab/scalar.py:88)
_scalar # unused function (cdlab/codec.py:69)
_element # unused function (cdlab/codec.py:74)
_complex # unused function (cdlab/codec.py:79)
_subspace # unused function (cdlab/codec.py:84)
_ann_report # unused function (cdlab/codec.py:93)
_bracket # unused function (cdlab/codec.py:103)
_dlocus_report # unused function (cdlab/codec.py:108)
_zm_family # unused function (cdlab/codec.py:123)
_lambda_pair # unused function (cdlab/codec.py:134)
_probe_sample # unused function (cdlab/codec.py:151)
_probe_report # unused function (cdlab/codec.py:163)
_degenerate_search # unused function (cdlab/codec.py:178)
_verify_result # unused function (cdlab/verify.py:213)
_field_axioms # unused function (cdlab/verify.py:350)
_table_soundness # unused function (cdlab/verify.py:369)
_raw_agreement # unused function (cdlab/verify.py:387)
_classical # unused function (cdlab/verify.py:404)
_alternative # unused function (cdlab/verify.py:430)
_real_inner_dot # unused function (cdlab/verify.py:449)
_herm_symmetry # unused function (cdlab/verify.py:467)
_c_vector_space # unused function (cdlab/verify.py:478)
_imaginary_square # unused function (cdlab/verify.py:490)
_anti_commute # unused function (cdlab/verify.py:500)
_norm_conj # unused function (cdlab/verify.py:514)
_c_scale_norm # unused function (cdlab/verify.py:525)
_ortho1 # unused function (cdlab/verify.py:536)
_c_conj_linear # unused function (cdlab/verify.py:552)
_bi_conj # unused function (cdlab/verify.py:571)
_bi_conj2 # unused function (cdlab/verify.py:590)
_proj_multiply # unused function (cdlab/verify.py:607)
_c_proj # unused function (cdlab/verify.py:633)
_proj_c_linear # unused function (cdlab/verify.py:649)
_tilde # unused function (cdlab/verify.py:668)
_rank_nullity # unused function (cdlab/verify.py:684)
_canonical # unused function (cdlab/verify.py:720)
_projection_split # unused function (cdlab/verify.py:738)
_four_dim # unused function (cdlab/verify.py:765)
_ann_im # unused function (cdlab/verify.py:781)
_zd_c_perp # unused function (cdlab/verify.py:795)
_top_half # unused function (cdlab/verify.py:809)
_c_multiply # unused function (cdlab/verify.py:826)
_frac_perp # unused function (cdlab/verify.py:847)
_eig2_form # unused function (cdlab/verify.py:876)
_convert # unused function (cdlab/verify.py:916)
_convert_norm # unused function (cdlab/verify.py:930)
_c_action # unused function (cdlab/verify.py:944)
_prop_bracket_multiply # unused function (cdlab/verify.py:960)
_parallel # unused function (cdlab/verify.py:980)
_parallel_cor # unused function (cdlab/verify.py:996)
_thm_bracket_multiply # unused function (cdlab/verify.py:1024)
_last_multiply # unused function (cdlab/verify.py:1046)
_bracket_inner # unused function (cdlab/verify.py:1065)
_bracket_inner_real # unused function (cdlab/verify.py:1080)
_bracket_zd # unused function (cdlab/verify.py:1108)
_lambda_step # unused function (cdlab/verify.py:1130)
_lambda_algebra # unused function (cdlab/verify.py:1151)
_dichotomy # unused function (cdlab/verify.py:1191)
_off_dlocus # unused function (cdlab/verify.py:1207)
_ann_dlocus # unused function (cdlab/verify.py:1222)
_vanish # unused function (cdlab/verify.py:1249)
_intersect_h_perp # unused function (cdlab/verify.py:1264)
_images # unused function (cdlab/verify.py:1281)
_bracket_bound # unused function (cdlab/verify.py:1299)
_dlocus_independent # unused function (cdlab/verify.py:1314)
_special # unused function (cdlab/verify.py:1331)
_cor_d5 # unused function (cdlab/verify.py:1348)
_prop_d5 # unused function (cdlab/verify.py:1377)
_d5_lemma1 # unused function (cdlab/verify.py:1409)
_d5_lemma2 # unused function (cdlab/verify.py:1444)
_cor_zm # unused function (cdlab/verify.py:1479)
_lem_zm # unused function (cdlab/verify.py:1492)
_degenerate # unused function (cdlab/verify.py:1514)
_degenerate_search # unused function (cdlab/verify.py:1527)
_top_dim # unused function (cdlab/verify.py:1545)
_top_element # unused function (cdlab/verify.py:1561)
_dugger # unused function (cdlab/verify.py:1576)
_stability # unused function (cdlab/verify.py:1607)
_not_stable # unused function (cdlab/verify.py:1617)
_stable_dim # unused function (cdlab/verify.py:1630)
_sixteen # unused function (cdlab/verify.py:1645)
_scale # unused function (cdlab/verify.py:1667)
