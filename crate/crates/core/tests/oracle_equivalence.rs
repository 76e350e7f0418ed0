use basesize::basecount::{
    base_size_partitions_action, base_size_subsets, base_size_wreath_subsets, large_base_bounds, regular_orbit_count,
    subsets_character, PartitionsOptions,
};
use basesize::characters::{inner_product, orbit_counts, sign_vector, Phi};
use basesize::oracle::{
    act_on_subsets, act_on_uniform_partitions, base_size_bruteforce, distinguishing_number, is_base_controlling,
    orbit_counts_bruteforce, pgl2, product_action_wreath, regular_orbits_on_tuples, symmetric_group, Controlling,
    InducedAction,
};
use basesize::{Int, Sign};

fn subsets_action(n: usize, k: usize) -> InducedAction {
    act_on_subsets(&symmetric_group(n).unwrap(), k).unwrap()
}

#[test]
fn formula_base_size_matches_oracle_for_small_subset_actions() {
    for n in 3..=7 {
        for k in 1..=(n - 1) / 2 {
            let formula = base_size_subsets::<Int>(n, k, None).unwrap();
            let oracle = base_size_bruteforce(&subsets_action(n, k)).unwrap();
            assert_eq!(formula.base_size, Some(oracle), "S_{n} on {k}-subsets");
        }
    }
}

#[test]
fn regular_orbits_and_orbit_counts_match_oracle() {
    for (n, k) in [(4, 1), (5, 1), (5, 2), (6, 2)] {
        let action = subsets_action(n, k);
        let chi = subsets_character::<Int>(n, k).unwrap();
        let sgn = sign_vector(n).unwrap();
        let b = base_size_bruteforce(&action).unwrap();
        for l in 0..=b + 1 {
            let formula = inner_product(Phi::Signs(&sgn), &chi, l).unwrap();
            assert_eq!(formula, regular_orbits_on_tuples(&action, l).unwrap(), "n={n} k={k} l={l}");
            assert_eq!(formula, regular_orbit_count::<Int>(n, k, l).unwrap());
            let oc = orbit_counts(&chi, l).unwrap();
            let (o, o_k) = orbit_counts_bruteforce(&action, l).unwrap();
            assert_eq!((oc.o.clone(), oc.o_k.clone()), (o.clone(), o_k.clone()));
            assert_eq!(&o_k - &o, formula);
            assert!(o <= o_k && o_k <= Int::from(2) * &o);
        }
    }
}

#[test]
fn pgl2_7_is_sharply_three_transitive_and_controlled() {
    let g = pgl2(7).unwrap();
    assert_eq!(g.order(), 336);
    let a = InducedAction::natural(&g);
    assert_eq!(is_base_controlling(&a).unwrap(), Controlling::Yes);
    assert_eq!(base_size_bruteforce(&a).unwrap(), 3);
    let counts: Vec<Int> = (1..=3).map(|l| regular_orbits_on_tuples(&a, l).unwrap()).collect();
    assert_eq!(counts, vec![Int::from(0), Int::from(0), Int::from(1)]);
    // orbit difference reproduces the regular-orbit count for a non-symmetric group too
    for l in 0..=4 {
        let (o, o_k) = orbit_counts_bruteforce(&a, l).unwrap();
        assert_eq!(o_k - o, regular_orbits_on_tuples(&a, l).unwrap());
    }
}

#[test]
fn wreath_formula_matches_oracle() {
    for (n, r) in [(3, 2), (4, 2), (3, 3)] {
        let d = distinguishing_number(&symmetric_group(r).unwrap()).unwrap();
        assert_eq!(d, r);
        let formula = base_size_wreath_subsets::<Int>(n, 1, d, None).unwrap();
        let w = product_action_wreath(&subsets_action(n, 1), r).unwrap();
        assert_eq!(formula.base_size, base_size_bruteforce(&w).unwrap(), "S_{n} wr S_{r}");
    }
    let w = product_action_wreath(&subsets_action(5, 2), 2).unwrap();
    let formula = base_size_wreath_subsets::<Int>(5, 2, 2, None).unwrap();
    assert_eq!(formula.base_size, base_size_bruteforce(&w).unwrap());
}

#[test]
fn large_base_upper_counts_match_oracle() {
    let b = large_base_bounds::<Int>(5, 1, 2, None).unwrap();
    assert_eq!((b.lower, b.upper), (3, 5));
    let s5 = subsets_action(5, 1);
    assert_eq!(regular_orbits_on_tuples(&s5, 4).unwrap(), Int::from(1));
    assert_eq!(regular_orbits_on_tuples(&s5, 5).unwrap(), Int::from(11));
    assert_eq!(base_size_bruteforce(&subsets_action(4, 1)).unwrap(), 3);
    assert_eq!(base_size_bruteforce(&subsets_action(5, 1)).unwrap(), 4);
}

#[test]
fn six_points_into_three_pairs() {
    let (chi, report) = base_size_partitions_action::<Int>(6, 3, 2, &PartitionsOptions::default()).unwrap();
    let action = act_on_uniform_partitions(&symmetric_group(6).unwrap(), 3, 2).unwrap();
    // the character agrees with fixed-point counts of explicit elements
    let s6 = symmetric_group(6).unwrap();
    let sgn = sign_vector(6).unwrap();
    for l in 0..=4 {
        let formula = inner_product(Phi::Signs(&sgn), &chi, l).unwrap();
        let (o, o_k) = orbit_counts_bruteforce(&action, l).unwrap();
        assert_eq!(o_k - o, formula, "l={l}");
    }
    let oracle_b = base_size_bruteforce(&action).unwrap();
    let controlling = is_base_controlling(&action).unwrap();
    // the formula is exact precisely when sgn controls bases
    if controlling.holds() {
        assert_eq!(report.base_size, Some(oracle_b));
    }
    assert!(report.base_size.unwrap() <= oracle_b);
    assert_eq!(s6.labels().unwrap().iter().filter(|s| **s == Sign::Minus).count(), 360);
}

#[test]
fn two_block_partition_actions_have_no_even_two_point_orbits() {
    // with r*r < n cells, some cell of any pair holds two points and its transposition
    // fixes the pair, so <sgn, chi^2> vanishes
    for (r, s) in [(2, 3), (2, 4)] {
        let n = r * s;
        let (chi, _) = base_size_partitions_action::<Int>(n, r, s, &PartitionsOptions::default()).unwrap();
        let sgn = sign_vector(n).unwrap();
        let action = act_on_uniform_partitions(&symmetric_group(n).unwrap(), r, s).unwrap();
        for l in 1..=2 {
            let (o, o_k) = orbit_counts_bruteforce(&action, l).unwrap();
            assert_eq!(o_k - o, Int::from(0));
            assert_eq!(inner_product(Phi::Signs(&sgn), &chi, l).unwrap(), Int::from(0));
        }
    }
}
