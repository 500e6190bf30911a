use markov_core::conjectures::{theorem1_check_real, TheoremPart};
use markov_core::norm::{certify_triangle, norm_real, stable_norm, TriangleCertificate};
use markov_core::triples::{reduce_to_root, replay, MarkovTriple, OrderedTriple};
use markov_core::{Error, LatticeVector, NormInterval};
use proptest::prelude::*;

/// Tightest enclosure on offer; large norms stop short of 1e-12 absolute.
fn interval(v: LatticeVector) -> NormInterval {
    match norm_real(v.a as f64, v.b as f64, 1e-12) {
        Ok(i) | Err(Error::AccuracyLimit { interval: i, .. }) => i,
        Err(e) => panic!("{v}: {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn strict_triangle_inequality(a in -60i64..60, b in -60i64..60, c in -60i64..60, d in -60i64..60) {
        let (u, w) = (LatticeVector::new(a, b), LatticeVector::new(c, d));
        prop_assume!(u.cross(&w) != 0);
        let c = certify_triangle(u, w).unwrap();
        prop_assert!(c != TriangleCertificate::Violated, "{u} {w}");
    }

    #[test]
    fn lattice_point_intervals_hold_the_exact_norm(a in -300i64..300, b in -300i64..300) {
        let u = LatticeVector::new(a, b);
        prop_assume!(!u.is_zero());
        let exact = stable_norm(u).unwrap();
        let i = interval(u);
        prop_assert!(i.contains(exact), "{u}: {i:?} {exact}");
    }

    #[test]
    fn theorem_certifies_random_reals(q in 0.0f64..50.0, p in 0.0f64..50.0, i in 0.001f64..20.0) {
        for part in TheoremPart::ALL {
            if part == TheoremPart::Diagonal && !(p < q && p - i >= 0.0) {
                continue;
            }
            let c = theorem1_check_real(q, p, i, part, 1e-9, false).unwrap();
            prop_assert!(c.is_certified(), "{part:?} ({q}, {p}, {i}): {c:?}");
        }
    }

    #[test]
    fn flip_paths_replay(path in proptest::collection::vec(any::<bool>(), 0..40)) {
        let mut t = OrderedTriple::root();
        for (k, right) in path.iter().enumerate() {
            let kids = markov_core::triples::children(&t).to_vec();
            t = kids[if k < 2 { 0 } else { *right as usize }].clone();
        }
        let m: MarkovTriple = t.to_markov();
        let back = reduce_to_root(&m).unwrap();
        prop_assert_eq!(replay(&back), t);
    }
}
