use serredual::algebra::{RepMap, Representation};
use serredual::complexes::*;
use serredual::exactla::{ExactMatrix, Field};
use serredual::fixtures::{a2, dual_numbers};

fn a2_p(v: usize) -> Representation {
    Representation::projective(&a2(), v).unwrap()
}

/// The nonzero map `P2 -> P1` over A2, as a two-term complex in degrees -1, 0.
fn s1_model() -> BoundedComplex {
    let (p1, p2) = (a2_p(0), a2_p(1));
    let f = p2.hom(&p1).unwrap().basis()[0].clone();
    BoundedComplex::two_term(&f, &p2, &p1, -1).unwrap()
}

#[test]
fn shift_moves_degrees_and_signs() {
    let x = s1_model();
    assert_eq!(x.shift(0), x);
    assert_eq!(x.shift(1).range(), Some((-2, -1)));
    assert_eq!(x.shift(1).diff(-2), x.diff(-1).neg());
    assert_eq!(x.shift(3).shift(-3), x);
    let st = BoundedComplex::stalk(&a2_p(0), 0);
    assert_eq!(st.shift(1).range(), Some((-1, -1)));
}

#[test]
fn invalid_complexes_are_rejected() {
    let a = dual_numbers();
    let r = Representation::regular(&a);
    let x = r.hom(&r).unwrap().basis();
    // multiplication by x squares to zero, multiplication by 1 does not
    let mult_x = x.iter().find(|m| !m.is_iso()).unwrap().clone();
    let ok = BoundedComplex::new(
        &a,
        0,
        vec![r.clone(), r.clone(), r.clone()],
        vec![mult_x.clone(), mult_x],
    );
    assert!(ok.is_ok());
    let id = r.identity();
    let bad = BoundedComplex::new(
        &a,
        0,
        vec![r.clone(), r.clone(), r.clone()],
        vec![id.clone(), id],
    );
    assert!(matches!(bad, Err(serredual::Error::InvalidComplex(m)) if m.contains("degree 0")));
}

#[test]
fn khom_of_stalks_matches_module_hom() {
    let (p1, p2) = (a2_p(0), a2_p(1));
    let s1 = BoundedComplex::stalk(&p1, 0);
    let s2 = BoundedComplex::stalk(&p2, 0);
    assert_eq!(khom(&s1, &s2).unwrap().dim(), p1.hom(&p2).unwrap().dim());
    assert_eq!(khom(&s2, &s1).unwrap().dim(), 1);
    assert_eq!(khom(&s2, &s1.shift(2)).unwrap().dim(), 0);
    assert_eq!(khom(&s2, &s1.shift(-1)).unwrap().dim(), 0);
    let e = khom(&s1, &s1).unwrap();
    assert_eq!(e.project(&s1.identity()), vec![Field::Rationals.one()]);
}

#[test]
fn cone_of_identity_is_contractible() {
    let x = s1_model();
    let c = cone(&x.identity());
    assert!(c.cone.diff(-2).mats.len() == 2);
    assert!(is_zero_in_k(&c.cone).unwrap());
    assert!(c.cone.is_acyclic());
    assert!(!is_zero_in_k(&x).unwrap());
}

#[test]
fn cone_structure_maps_are_chain_maps() {
    let x = BoundedComplex::stalk(&a2_p(0), 0);
    let y = s1_model();
    let f = khom(&x, &y).unwrap().basis()[0].clone();
    let c = cone(&f);
    assert!(c.inj.is_chain_map());
    assert!(c.proj.is_chain_map());
    // consecutive maps of the triangle compose to null-homotopic maps
    assert!(khom(&x, &c.cone)
        .unwrap()
        .is_nullhomotopic(&c.inj.compose(&f)));
}

#[test]
fn cone_of_zero_is_sum() {
    let x = BoundedComplex::stalk(&a2_p(1), 0);
    let y = s1_model();
    let c = cone(&ChainMap::zero(&x, &y));
    let sum = BoundedComplex::direct_sum(&[&y, &x.shift(1)]).unwrap();
    assert!(iso_in_k(&c.cone, &sum).unwrap());
    assert_eq!(decompose_complex(&c.cone, 0).unwrap().len(), 2);
}

#[test]
fn cone_of_projective_into_injective_is_simple() {
    let a = a2();
    let p2 = a2_p(1);
    let i2 = Representation::injective(&a, 1).unwrap();
    let w = p2.hom(&i2).unwrap().basis()[0].clone();
    let x = BoundedComplex::stalk(&p2, 0);
    let y = BoundedComplex::stalk(&i2, 0);
    let f = ChainMap::new(&x, &y, 0, vec![w]).unwrap();
    let c = cone(&f).cone;
    assert_eq!(c.range(), Some((-1, 0)));
    let s1 = Representation::simple(&a, 0).unwrap();
    assert!(c.cohomology(0).is_isomorphic(&s1).unwrap());
    assert!(c.cohomology(-1).is_zero());
    // explicit quasi-isomorphism onto the stalk S1
    let q = i2.hom(&s1).unwrap().basis()[0].clone();
    let to_s1 = ChainMap::new(
        &c,
        &BoundedComplex::stalk(&s1, 0),
        0,
        vec![RepMap::from_blocks(
            Field::Rationals,
            &[vec![RepMap::zero(&Representation::zero(&a), &s1), q]],
        )],
    )
    .unwrap();
    assert!(to_s1.is_quasi_iso());
    assert!(iso_in_d(&c, &BoundedComplex::stalk(&s1, 0), 4).unwrap());
}

#[test]
fn cohomology_of_two_term_complex() {
    let x = s1_model();
    let s1 = Representation::simple(&a2(), 0).unwrap();
    assert!(x.cohomology(0).is_isomorphic(&s1).unwrap());
    assert!(x.cohomology(-1).is_zero());
    let st = BoundedComplex::stalk(&a2_p(0), 0);
    assert_eq!(st.cohomology(0), a2_p(0));
    assert!(st.cohomology(1).is_zero());
}

#[test]
fn resolution_of_a2_simple() {
    let s1 = Representation::simple(&a2(), 0).unwrap();
    let x = BoundedComplex::stalk(&s1, 0);
    let r = proj_resolution(&x, 5);
    assert!(r.terminated);
    assert_eq!(r.length, Dimension::Finite(1));
    assert_eq!(r.resolution.range(), Some((-1, 0)));
    assert!(r.resolution.term(0).is_isomorphic(&a2_p(0)).unwrap());
    assert!(r.resolution.term(-1).is_isomorphic(&a2_p(1)).unwrap());
    assert!(r.quasi_iso.is_chain_map());
    assert!(r.quasi_iso.is_quasi_iso());
    assert!(iso_in_k(&r.resolution, &s1_model()).unwrap());
}

#[test]
fn resolution_of_projective_complex_is_itself() {
    let x = s1_model();
    let r = proj_resolution(&x, 3);
    assert!(r.terminated);
    assert_eq!(r.length, Dimension::Finite(0));
    assert_eq!(r.resolution.range(), x.range());
    assert!(r.quasi_iso.is_iso());
}

#[test]
fn dual_numbers_simple_never_terminates() {
    let a = dual_numbers();
    let s = Representation::simple(&a, 0).unwrap();
    let x = BoundedComplex::stalk(&s, 0);
    let r = proj_resolution(&x, 10);
    assert!(!r.terminated);
    assert_eq!(r.length, Dimension::ExceedsCap(10));
    let reg = Representation::regular(&a);
    for i in -10..=0 {
        assert!(r.resolution.term(i).is_isomorphic(&reg).unwrap());
    }
    // the truncated resolution is exact everywhere except at its bottom term
    assert!(r.quasi_iso.is_quasi_iso_in(-10, 1));
    assert!(!r.quasi_iso.is_quasi_iso());
    assert_eq!(fpd(&x, 10), Dimension::ExceedsCap(10));
    assert_eq!(fid(&x, 10), Dimension::ExceedsCap(10));
}

#[test]
fn injective_coresolution_of_a2_simple() {
    let a = a2();
    let s2 = Representation::simple(&a, 1).unwrap();
    let x = BoundedComplex::stalk(&s2, 0);
    let r = inj_resolution(&x, 4);
    assert!(r.terminated);
    assert_eq!(r.length, Dimension::Finite(1));
    assert!(r.resolution.is_injective_complex());
    assert!(r.quasi_iso.is_chain_map());
    assert!(r.quasi_iso.is_quasi_iso());
}

#[test]
fn fpd_is_monotone_in_cap() {
    let s1 = Representation::simple(&a2(), 0).unwrap();
    let x = BoundedComplex::stalk(&s1, 2);
    for cap in 1..5 {
        assert_eq!(fpd(&x, cap), Dimension::Finite(1));
    }
}

#[test]
fn brutal_truncation() {
    let x = s1_model();
    let (t, incl) = brutal_truncate(&x, 5);
    assert_eq!(t, x);
    assert!(incl.is_iso());
    let (t0, incl0) = brutal_truncate(&x, 0);
    assert_eq!(t0.range(), Some((0, 0)));
    assert!(incl0.is_chain_map());
}

#[test]
fn decomposition_of_sums_and_shifts() {
    let x = s1_model();
    let y = BoundedComplex::direct_sum(&[&x, &x.shift(1)]).unwrap();
    let parts = decompose_complex(&y, 0).unwrap();
    assert_eq!(parts.len(), 2);
    for p in &parts {
        assert!(p.embed.is_chain_map() && p.project.is_chain_map());
    }
    assert_eq!(decompose_complex(&x, 0).unwrap().len(), 1);
    let (e, end) = end_algebra_k(&x).unwrap();
    assert_eq!(e.dim(), 1);
    assert_eq!(end.dim(), 1);
    assert!(!iso_in_k(&x, &x.shift(1)).unwrap());
    assert!(iso_in_k(&y, &BoundedComplex::direct_sum(&[&x.shift(1), &x]).unwrap()).unwrap());
}

#[test]
fn dualize_twice_is_identity() {
    let x = s1_model();
    let dd = x.dualize().dualize();
    assert_eq!(dd.range(), x.range());
    for i in -1..=0 {
        assert_eq!(dd.term(i).dims(), x.term(i).dims());
        assert_eq!(dd.diff(i).mats, x.diff(i).mats);
    }
    let _ = ExactMatrix::zeros(Field::Rationals, 0, 0);
}

mod properties {
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use serredual::complexes::*;
    use serredual::fixtures::{a2, dual_numbers};
    use serredual::random::{random_chain_map, random_complex, Limits};

    fn euler_terms(x: &BoundedComplex) -> i64 {
        x.range().map_or(0, |(lo, hi)| {
            (lo..=hi)
                .map(|i| (-1i64).pow(i.rem_euclid(2) as u32) * x.term(i).dim() as i64)
                .sum()
        })
    }

    fn euler_cohomology(x: &BoundedComplex) -> i64 {
        x.range().map_or(0, |(lo, hi)| {
            (lo..=hi)
                .map(|i| (-1i64).pow(i.rem_euclid(2) as u32) * x.cohomology(i).dim() as i64)
                .sum()
        })
    }

    fn pair(seed: u64, dual: bool) -> (BoundedComplex, BoundedComplex, ChainMap) {
        let alg = if dual { dual_numbers() } else { a2() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let limits = Limits {
            max_terms: 3,
            max_term_dim: 3,
            degree_spread: 1,
        };
        let x = random_complex(&alg, limits, &mut rng).unwrap();
        let y = random_complex(&alg, limits, &mut rng).unwrap();
        let f = random_chain_map(&x, &y, &mut rng).unwrap();
        (x, y, f)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn euler_characteristic_of_cohomology_matches_terms(seed in any::<u64>(), dual in any::<bool>()) {
            let (x, _, _) = pair(seed, dual);
            prop_assert_eq!(euler_cohomology(&x), euler_terms(&x));
        }

        #[test]
        fn cone_is_additive_on_euler_characteristic(seed in any::<u64>(), dual in any::<bool>()) {
            let (x, y, f) = pair(seed, dual);
            prop_assert!(f.is_chain_map());
            let c = cone(&f).cone;
            prop_assert_eq!(euler_terms(&c), euler_terms(&y) - euler_terms(&x));
            prop_assert_eq!(euler_cohomology(&c), euler_cohomology(&y) - euler_cohomology(&x));
        }

        #[test]
        fn shift_moves_cohomology(seed in any::<u64>(), n in -2i64..=2) {
            let (x, _, _) = pair(seed, false);
            let (lo, hi) = x.range().unwrap();
            let xs = x.shift(n);
            for i in lo..=hi {
                prop_assert_eq!(xs.cohomology(i - n).dims().to_vec(), x.cohomology(i).dims().to_vec());
            }
        }

        #[test]
        fn cone_of_identity_is_contractible(seed in any::<u64>(), dual in any::<bool>()) {
            let (x, _, _) = pair(seed, dual);
            let c = cone(&x.identity()).cone;
            prop_assert!(c.is_acyclic());
            prop_assert_eq!(khom(&c, &c).unwrap().dim(), 0);
        }
    }
}
