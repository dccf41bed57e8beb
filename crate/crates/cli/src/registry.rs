/// One subcommand and the core operations it exposes.
#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub module: &'static str,
    pub op: &'static str,
    pub core: &'static [&'static str],
}

const fn e(module: &'static str, op: &'static str, core: &'static [&'static str]) -> Entry {
    Entry { module, op, core }
}

pub const REGISTRY: &[Entry] = &[
    e("lie", "orbit", &["lie::weyl_orbit"]),
    e("lie", "rho", &["lie::rho"]),
    e("lie", "dominantize", &["lie::dominantize"]),
    e("lie", "group", &["lie::weyl_group"]),
    e("char", "weyl", &["characters::weyl_character"]),
    e("char", "dim", &["characters::weyl_dimension"]),
    e("char", "su2", &["characters::su2_character"]),
    e("char", "tensor", &["characters::tensor_decompose"]),
    e("char", "invariants", &["characters::invariant_dim", "characters::invariant_dim_su2"]),
    e("char", "bwb", &["characters::bwb_cohomology", "characters::bwb_su2"]),
    e("puzzles", "count", &["puzzles::count_puzzles", "puzzles::count_puzzles_jobs", "puzzles::list_puzzles"]),
    e("puzzles", "lr", &["puzzles::lr_coefficient", "puzzles::lr_coefficient_oracle"]),
    e("puzzles", "assoc", &["puzzles::associativity_check"]),
    e("horn", "generate", &["horn::generate_horn_system"]),
    e("horn", "check", &["horn::check_triple", "horn::check_zero_sum"]),
    e("horn", "sample", &["horn::sample_hermitian_validate"]),
    e("horn", "polygon", &["horn::polygon_nonempty"]),
    e("horn", "sl2", &["horn::sl2_config_semistable"]),
    e("stability", "moment", &["torus_git::moment_map"]),
    e("stability", "polytope", &["torus_git::orbit_moment_polytope"]),
    e("stability", "classify", &["torus_git::classify_stability"]),
    e("stability", "slope", &["torus_git::hm_slope"]),
    e("stability", "destabilize", &["torus_git::max_destabilizing"]),
    e("stability", "kempf-ness", &["torus_git::kempf_ness"]),
    e("stability", "flow", &["torus_git::minimize_kempf_ness"]),
    e("stability", "graded", &["torus_git::associated_graded"]),
    e("stability", "jh-cone", &["torus_git::jordan_holder_cone"]),
    e("stability", "types", &["torus_git::critical_types", "torus_git::nearest_point"]),
    e("stability", "product", &["torus_git::product"]),
    e("polytope", "hull", &["polytopes::hull"]),
    e("polytope", "kostant", &["polytopes::kostant_polytope"]),
    e("polytope", "lattice", &["polytopes::lattice_points", "polytopes::lattice_points_coset"]),
    e("polytope", "delzant", &["polytopes::is_delzant"]),
    e("polytope", "cut", &["polytopes::symplectic_cut"]),
    e("polytope", "fan", &["polytopes::normal_fan"]),
    e("polytope", "brianchon-gram", &["polytopes::brianchon_gram_check", "polytopes::brianchon_gram_at"]),
    e(
        "localize",
        "toric",
        &["localization::vertex_sum", "localization::ConeSeries::evaluate", "localization::lattice_sum"],
    ),
    e("localize", "expand", &["localization::ConeSeries::expand_in_box_jobs", "localization::default_box"]),
    e("localize", "p2", &["localization::p2_series"]),
    e("localize", "p1-bundle", &["localization::p1_line_bundle"]),
    e("localize", "p1", &["localization::p1_kn_identity"]),
    e("localize", "blowup", &["localization::blowup_chi", "localization::blowup_literal_value"]),
    e("localize", "weyl", &["localization::weyl_via_localization", "localization::weyl_series"]),
];

/// Public core functions that are building blocks rather than operations.
pub const HELPERS: &[&str] = &[
    "lie::is_half_integer",
    "characters::positive_roots",
    "characters::weyl_numerator",
    "characters::su2_highest_weight",
    "puzzles::subset_to_partition",
    "puzzles::partition_to_subset",
    "puzzles::subsets",
    "horn::max_violation_f64",
    "horn::random_hermitian",
    "horn::to_zero_sum",
    "horn::zero_sum_triple",
    "horn::symmetric_eigenvalues",
    "polytopes::transform",
    "polytopes::content",
    "localization::generic_direction",
    "localization::blowup_literal",
    "localization::blowup_series",
];
