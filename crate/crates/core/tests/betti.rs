mod common;

use common::{ideal_strategy, squarefree_strategy};
use lcmlat::betti::{build_i1, first_betti_degrees, gpw_betti, has_d_linear_resolution, koszul_betti_oracle};
use lcmlat::homology::Field;
use lcmlat::lattice::LcmLattice;
use lcmlat::{Budget, Search};
use proptest::prelude::*;

const FIELDS: [Field; 2] = [Field::Rationals, Field::Prime(2)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn lattice_formula_matches_koszul_oracle(i in ideal_strategy(4, 2, 6)) {
        for f in FIELDS {
            let t = gpw_betti(&i, f).unwrap();
            prop_assert_eq!(&t, &koszul_betti_oracle(&i, f).unwrap());
            // β_0 lists exactly the minimal generators
            prop_assert_eq!(t.multidegrees(0), i.generators().to_vec());
            // every multidegree lies in the lcm-lattice
            let l = LcmLattice::build(&i).unwrap();
            prop_assert!(t.nonzero().all(|(_, m, _)| l.index_of(m).is_some()));
            // alternating sum of total Betti numbers of I is 1
            let alt: i64 = t.totals().iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            prop_assert_eq!(alt, 1);
        }
    }

    #[test]
    fn linear_quotients_give_linear_resolutions(i in ideal_strategy(4, 2, 6)) {
        if let (Some(d), Search::Found(_)) = (i.is_equigenerated(), i.find_linear_quotients_order(Budget::default()).unwrap()) {
            for f in FIELDS {
                prop_assert_eq!(has_d_linear_resolution(&i, f).unwrap(), Some(d));
            }
        }
    }

    #[test]
    fn linear_resolutions_pass_to_i1(i in squarefree_strategy(6, 6)) {
        for f in FIELDS {
            if let Some(d) = has_d_linear_resolution(&i, f).unwrap() {
                let l = LcmLattice::build(&i).unwrap();
                prop_assert!(l.is_d_degree_graded(d));
                let supers: Vec<_> = l.super_atoms().into_iter().map(|a| l.element(a).clone()).collect();
                let first = first_betti_degrees(&i, f).unwrap();
                let mut sorted = supers.clone();
                sorted.sort();
                prop_assert_eq!(&sorted, &first);
                prop_assert!(first.iter().all(|m| m.degree() == d + 1));
                if !first.is_empty() {
                    prop_assert_eq!(has_d_linear_resolution(&build_i1(&i, f).unwrap(), f).unwrap(), Some(d + 1));
                }
            }
        }
    }

    #[test]
    fn linearity_survives_polarization(i in ideal_strategy(3, 3, 5)) {
        let j = i.polarize().unwrap();
        for f in FIELDS {
            prop_assert_eq!(has_d_linear_resolution(&i, f).unwrap(), has_d_linear_resolution(&j, f).unwrap());
        }
    }
}
