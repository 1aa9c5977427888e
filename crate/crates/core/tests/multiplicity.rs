use proptest::prelude::*;
use syzlift::arith::int;
use syzlift::curve::ascenzi_interval;
use syzlift::fixtures::plant_multiplicity;
use syzlift::scroll::{lift, lift_diagnostics, second_level};

fn planted() -> impl Strategy<Value = (usize, usize, u64)> {
    (3usize..=9).prop_flat_map(|d| (Just(d), 1..d, 0u64..500))
}

#[test]
fn interval_endpoints() {
    assert_eq!(ascenzi_interval(8, 2), (2, 4));
    assert_eq!(ascenzi_interval(8, 5), (3, 3));
    assert_eq!(ascenzi_interval(9, 4), (4, 4));
}

#[test]
fn balanced_heavy_point_has_a_dependent_syzygy_in_the_pencil() {
    let c = plant_multiplicity(8, 4, 0);
    let mu = c.mu_basis().unwrap();
    assert!(mu.balanced);
    let pencil = syzlift::syzygy::syzygy_space(c.forms(), 4);
    assert_eq!(pencil.len(), 2);
    // Some combination x p + y q has linearly dependent components: the 3x10
    // coefficient matrix of the combination drops rank for a rational (x : y)
    // found by scanning small ratios.
    let found = (-20i64..=20).flat_map(|x| (-20i64..=20).map(move |y| (x, y))).any(|(x, y)| {
        if (x, y) == (0, 0) {
            return false;
        }
        let comb: [syzlift::arith::BinaryForm; 3] = std::array::from_fn(|i| {
            &pencil[0].comp(i).scale(&int(x)) + &pencil[1].comp(i).scale(&int(y))
        });
        syzlift::syzygy::coefficient_rank(&comb) < 3
    });
    assert!(found);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn splitting_respects_the_multiplicity_bounds((d, m, seed) in planted()) {
        let c = plant_multiplicity(d, m, seed);
        let apex = [int(0), int(0), int(1)];
        prop_assert_eq!(c.multiplicity_at_point(&apex), m);
        let v = c.ascenzi_bounds_check(m).unwrap();
        prop_assert!(v.consistent, "a = {} outside [{}, {}]", v.a, v.lower, v.upper);
        if 2 * m + 1 >= d {
            prop_assert_eq!(v.a, m.min(d - m));
        }
    }

    #[test]
    fn heavy_points_give_cones((d, m, seed) in planted()) {
        // With 2m = d the splitting is balanced and h depends on which
        // member of the pencil of degree-d/2 syzygies is taken as p.
        prop_assume!(2 * m > d);
        let c = plant_multiplicity(d, m, seed);
        let s = second_level(&c).unwrap();
        prop_assert_eq!(s.k, d - m);
        prop_assert!(s.ascenzi);
        let diag = lift_diagnostics(&lift(&c).unwrap(), &s);
        prop_assert_eq!(diag.vertex_preimage_degree, Some(m));
        prop_assert!(diag.passed);
    }
}
