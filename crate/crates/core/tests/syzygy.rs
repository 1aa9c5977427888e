use proptest::prelude::*;
use syzlift::battery::syzygy_dimensions_match;
use syzlift::curve::DEFAULT_SEED;
use syzlift::fixtures;
use syzlift::scroll::{scroll_syzygy_basis, second_level};
use syzlift::syzygy::{decompose, hilbert_burch_check, syzygy_space};

#[test]
fn corpus_hilbert_burch_and_dimensions() {
    for (name, c) in fixtures::corpus(DEFAULT_SEED) {
        let mu = c.mu_basis().unwrap();
        let lambda = hilbert_burch_check(c.forms(), mu).unwrap();
        assert!(!num_traits::Zero::is_zero(&lambda), "{name}");
        assert!(syzygy_dimensions_match(&c).unwrap(), "{name}");
    }
}

#[test]
fn octic_syzygy_dimensions() {
    let c = fixtures::octic();
    let dims: Vec<usize> = (0..=6).map(|n| syzygy_space(c.forms(), n).len()).collect();
    // max(0, n - 2) + max(0, n - 4)
    assert_eq!(dims, [0, 0, 0, 1, 2, 4, 6]);
}

#[test]
fn every_syzygy_decomposes_in_the_mu_basis() {
    let c = fixtures::random_curve(7, DEFAULT_SEED);
    let mu = c.mu_basis().unwrap();
    for n in 0..=9 {
        for syz in syzygy_space(c.forms(), n) {
            let parts = decompose(&syz, &mu.p, &mu.q).unwrap();
            assert_eq!(parts.lambda.map(|l| l.degree()), n.checked_sub(mu.k));
            assert_eq!(parts.mu.map(|m| m.degree()), n.checked_sub(c.degree() - mu.k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_curves_satisfy_the_resolution_shape(d in 3usize..=7, seed in 0u64..1000) {
        let c = fixtures::random_curve(d, seed);
        let mu = c.mu_basis().unwrap();
        prop_assert!(2 * mu.k <= d);
        prop_assert!(syzygy_dimensions_match(&c).unwrap());
        prop_assert!(!num_traits::Zero::is_zero(&hilbert_burch_check(c.forms(), mu).unwrap()));
    }

    #[test]
    fn level_two_decomposition(d in 4usize..=8, seed in 0u64..1000) {
        let c = fixtures::random_curve(d, seed);
        let s = second_level(&c).unwrap();
        prop_assert!(2 * s.h <= s.k);
        prop_assert_eq!(s.e, s.k - 2 * s.h);
        prop_assert_eq!(s.ascenzi, s.alpha_dependent);
        let alpha = c.mu_basis().unwrap().p.comps().clone();
        for a in scroll_syzygy_basis(&alpha).unwrap() {
            let parts = decompose(&a, &s.gamma, &s.delta);
            prop_assert!(parts.is_some());
            let parts = parts.unwrap();
            prop_assert_eq!(parts.lambda.map(|l| l.degree()), Some(s.k - s.h));
            prop_assert_eq!(parts.mu.map(|m| m.degree()), Some(s.h));
        }
    }
}
