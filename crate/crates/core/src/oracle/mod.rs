//! Brute-force permutation-group engine for small degrees.
//!
//! Groups are full element lists and every count is obtained by direct search, so these
//! routines serve as ground truth for the character formulas.

mod action;
mod group;
mod perm;
mod pgl;
mod search;
mod spec;

pub use action::{
    act_on_subsets, act_on_subsets_bounded, act_on_uniform_partitions, act_on_uniform_partitions_bounded,
    product_action_wreath, product_action_wreath_bounded, product_action_wreath_with_top, InducedAction,
    DEFAULT_MAX_INDUCED_DEGREE,
};
pub use group::{
    alternating_generators, alternating_group, symmetric_generators, symmetric_group, LabeledGroup,
    DEFAULT_MAX_ORDER,
};
pub use perm::Perm;
pub use pgl::{mobius, pgl2, pgl2_generators};
pub use search::{
    base_size_bruteforce, count_tuple_orbits, count_tuple_orbits_bounded, distinguishing_number,
    distinguishing_number_bounded, is_base_controlling, is_base_controlling_bounded, orbit_counts_bruteforce,
    orbits, regular_orbits_on_tuples, Controlling, TupleOrbits, DEFAULT_MAX_CONTROLLING_DEGREE,
    DEFAULT_MAX_DISTINGUISHING_DEGREE, DEFAULT_MAX_NODES,
};
pub use spec::{ActionSuffix, BaseGroup, GroupSpec, LabelChoice};
