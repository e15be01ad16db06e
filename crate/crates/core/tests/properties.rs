//! Invariants as properties over generated instances.

mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcalc::cli::corpus::{random_distributor, CorpusSpec, Family, MAX_LATTICE};
use qcalc::cli::workspace::{parse_workspace, serialize_workspace, Workspace};
use qcalc::morita::cauchy_completion;
use qcalc::presheaf::{enumerate_copresheaves, enumerate_presheaves};
use qcalc::qcat::QCategory;
use qcalc::qdist::{compose, left_imp, right_imp};
use qcalc::realline::{check_sample, ExtendedRational};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Frames), Just(Family::Chains), Just(Family::RandomTables), Just(Family::Mixed)]
}

fn instance() -> impl Strategy<Value = Arc<QCategory>> {
    (any::<u64>(), 0usize..64, family()).prop_map(|(seed, i, fam)| {
        let mut spec = CorpusSpec::new(seed, i + 1);
        spec.family = fam;
        spec.instance(i)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_instances_are_valid_and_small(a in instance()) {
        let q = a.base();
        prop_assert!(q.validate().is_valid());
        prop_assert!(a.validate().is_valid());
        prop_assert!(a.len() <= 3);
        let n = q.len();
        for x in 0..n {
            for y in 0..n {
                prop_assert!(q.hom(x, y).len() <= MAX_LATTICE);
            }
        }
    }

    #[test]
    fn composition_is_residuated(a in instance()) {
        let q = a.base();
        let n = q.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for f in 0..q.hom(x, y).len() {
                        for g in 0..q.hom(y, z).len() {
                            for h in 0..q.hom(x, z).len() {
                                let below = q.hom(x, z).leq(q.comp(x, y, z, g, f), h);
                                prop_assert_eq!(below, q.hom(y, z).leq(g, q.limp(x, y, z, h, f)));
                                prop_assert_eq!(below, q.hom(x, y).leq(f, q.rimp(x, y, z, g, h)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn distributor_composition_is_residuated(a in instance(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_distributor(&mut rng, &a, &a, "φ");
        let psi = random_distributor(&mut rng, &a, &a, "ψ");
        let eta = random_distributor(&mut rng, &a, &a, "η");
        prop_assert!(phi.is_valid() && psi.is_valid() && eta.is_valid());
        let below = compose(&psi, &phi).unwrap().leq(&eta).unwrap();
        prop_assert_eq!(below, phi.leq(&right_imp(&psi, &eta).unwrap()).unwrap());
        prop_assert_eq!(below, psi.leq(&left_imp(&eta, &phi).unwrap()).unwrap());
    }

    #[test]
    fn enumeration_matches_brute_force(a in instance()) {
        for x in 0..a.base().len() {
            prop_assert_eq!(enumerate_presheaves(&a, x).unwrap(), common::brute_presheaves(&a, x));
            prop_assert_eq!(enumerate_copresheaves(&a, x).unwrap(), common::brute_copresheaves(&a, x));
        }
    }

    #[test]
    fn cauchy_members_match_copresheaf_witnesses(a in instance()) {
        let cc = cauchy_completion(a.clone()).unwrap();
        let mut found: Vec<(usize, Vec<usize>)> =
            cc.members.iter().map(|&i| { let m = cc.presheaves.member(i); (m.ty, m.values.clone()) }).collect();
        let mut oracle: Vec<(usize, Vec<usize>)> = (0..a.base().len())
            .flat_map(|x| common::copresheaf_witness_members(&a, x).into_iter().map(move |v| (x, v)))
            .collect();
        found.sort();
        oracle.sort();
        prop_assert_eq!(found, oracle);
    }

    #[test]
    fn workspace_text_round_trips(a in instance()) {
        let ws = Workspace::of_category(&a);
        let text = serialize_workspace(&ws);
        let back = parse_workspace(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert!(ws.same_as(&back), "{}", text);
        prop_assert_eq!(serialize_workspace(&back), text);
    }

    #[test]
    fn finite_real_samples_pass(n in -1000i64..1000, d in 1i64..50) {
        let s = check_sample(&ExtendedRational::ratio(n, d));
        prop_assert!(s.presheaf_valid && s.rows_match() && s.unit_holds);
    }
}
