use super::*;
use crate::field::ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn qq() -> FieldSpec {
    FieldSpec::rationals()
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn mci(field: FieldSpec, exps: &[usize]) -> GradedAlgebra {
    GradedAlgebra::monomial_complete_intersection(field, exps).unwrap()
}

/// Coefficient list of a polynomial product of Hilbert functions.
fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn gegen_ambient(field: FieldSpec) -> GradedAlgebra {
    mci(field, &[4, 4, 4, 4, 2])
}

#[test]
fn trivial_algebra() {
    for field in [qq(), gf(7)] {
        let k = GradedAlgebra::trivial(field);
        assert_eq!(k.hilbert_function(), vec![1]);
        assert_eq!(k.sigma(), 0);
        assert_eq!(k.multiplicity(), 1);
    }
}

#[test]
fn extension_dimensions() {
    assert_eq!(mci(qq(), &[3]).hilbert_function(), vec![1, 1, 1]);
    assert_eq!(mci(qq(), &[2, 3]).hilbert_function(), vec![1, 2, 2, 1]);

    let a = gegen_ambient(qq());
    assert_eq!(a.multiplicity(), 512);
    assert_eq!(a.sigma(), 13);
    assert_eq!(a.dim(1), 5);
    // (1+t+t^2+t^3)^4 (1+t)
    let mut expected = vec![1];
    for _ in 0..4 {
        expected = convolve(&expected, &[1, 1, 1, 1]);
    }
    expected = convolve(&expected, &[1, 1]);
    assert_eq!(expected, vec![1, 5, 14, 30, 51, 71, 84, 84, 71, 51, 30, 14, 5, 1]);
    assert_eq!(a.hilbert_function(), expected);
}

#[test]
fn extension_rejects_bad_coefficients() {
    let a = mci(qq(), &[3]);
    let x = a.variable(0).unwrap();
    let f = MonicExtensionPoly::new("y", vec![a.zero(1), x.clone()]);
    assert!(matches!(a.extend_monic(&f), Err(Error::DegreeMismatch(_))));
    let other = mci(qq(), &[3]);
    let f = MonicExtensionPoly::new("y", vec![other.variable(0).unwrap()]);
    assert_eq!(a.extend_monic(&f).unwrap_err(), Error::AlgebraMismatch);
}

#[test]
fn quotient_examples() {
    let a = mci(qq(), &[2, 2]);
    let xy = a.multiply(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    assert_eq!(a.quotient_by_form(&xy).unwrap().hilbert_function(), vec![1, 2]);

    let a = mci(qq(), &[4]);
    let x2 = a.pow(&a.variable(0).unwrap(), 2).unwrap();
    assert_eq!(a.quotient_by_form(&x2).unwrap().hilbert_function(), vec![1, 1]);

    assert_eq!(a.quotient_by_form(&a.zero(2)).unwrap_err(), Error::ZeroForm);
}

#[test]
fn gegen_quotient_hilbert_function() {
    let a = gegen_ambient(gf(32003));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = a.random_homogeneous(8, &mut rng).unwrap();
    let b = a.quotient_by_form(&f).unwrap();
    assert_eq!(
        b.hilbert_function(),
        vec![1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16]
    );
}

#[test]
fn multiplication_examples() {
    let a = mci(qq(), &[2, 2]);
    let l = a.add(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    let sq = a.multiply(&l, &l).unwrap();
    assert_eq!(sq.coeffs(), &[Scalar::from_i64(qq(), 2)]);
    assert_eq!(a.format_element(&sq), "2*x1*x2");

    let a = mci(qq(), &[3]);
    let x = a.variable(0).unwrap();
    let x2 = a.multiply(&x, &x).unwrap();
    let x3 = a.multiply(&x, &x2).unwrap();
    assert_eq!(x3.degree(), 3);
    assert!(x3.is_zero() && x3.coeffs().is_empty());

    let a = mci(gf(2), &[2, 2]);
    let l = a.add(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    assert!(a.multiply(&l, &l).unwrap().is_zero());
}

#[test]
fn multiplication_rejects_foreign_elements() {
    let a = mci(qq(), &[2]);
    let b = mci(qq(), &[2]);
    assert_eq!(
        a.multiply(&a.variable(0).unwrap(), &b.variable(0).unwrap()),
        Err(Error::AlgebraMismatch)
    );
}

#[test]
fn monic_relation_is_satisfied() {
    // B = K[u]/(u^4) [x] / (x^2 + u x + u^2)
    let a = mci(qq(), &[4]);
    let u = a.variable(0).unwrap();
    let u2 = a.pow(&u, 2).unwrap();
    let b = a
        .extend_monic(&MonicExtensionPoly::new("x", vec![u.clone(), u2.clone()]))
        .unwrap();
    assert_eq!(b.hilbert_function(), vec![1, 2, 2, 2, 1]);
    let x = b.variable(1).unwrap();
    let bu = b.include(&u).unwrap();
    let lhs = b.multiply(&x, &x).unwrap();
    let ux = b.multiply(&bu, &x).unwrap();
    let uu = b.include(&u2).unwrap();
    let f = b.add(&b.add(&lhs, &ux).unwrap(), &uu).unwrap();
    assert!(f.is_zero());
    // u^4 = 0 still holds after extension.
    assert!(b.pow(&bu, 4).unwrap().is_zero());
    assert!(!b.pow(&bu, 3).unwrap().is_zero());
}

#[test]
fn extending_a_quotient_keeps_its_relations() {
    let a = mci(qq(), &[2, 2]);
    let xy = a.multiply(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    let q = a.quotient_by_form(&xy).unwrap();
    let b = q
        .extend_monic(&MonicExtensionPoly::pure_power(&q, "z", 2))
        .unwrap();
    assert_eq!(b.hilbert_function(), vec![1, 3, 2]);
    let prod = b.multiply(&b.variable(0).unwrap(), &b.variable(1).unwrap()).unwrap();
    assert!(prod.is_zero());
    assert!(!b.is_pure_tower());
    assert_eq!(b.base().unwrap().id(), q.id());
}

#[test]
fn mult_map_examples() {
    let a = mci(qq(), &[2, 2]);
    let l = a.add(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    let m = a.mult_map_matrix(&l, 1).unwrap();
    assert_eq!((m.rows(), m.cols()), (1, 2));
    assert_eq!(m.rank(), 1);

    let a = mci(qq(), &[3]);
    let m = a.mult_map_matrix(&a.variable(0).unwrap(), 0).unwrap();
    assert_eq!(m, DenseMatrix::identity(qq(), 1));

    let a = mci(qq(), &[3, 2]);
    for i in 0..=a.sigma() + 1 {
        let m = a.mult_map_matrix(&a.zero(2), i).unwrap();
        assert!(m.is_zero());
        assert_eq!((m.rows(), m.cols()), (a.dim(i + 2), a.dim(i)));
    }
}

#[test]
fn hilbert_examples() {
    assert_eq!(mci(qq(), &[2, 2]).hilbert_function(), vec![1, 2, 1]);
    assert_eq!(
        gegen_ambient(qq()).hilbert_function(),
        vec![1, 5, 14, 30, 51, 71, 84, 84, 71, 51, 30, 14, 5, 1]
    );
}

#[test]
fn socle_examples() {
    let a = mci(qq(), &[2, 2]);
    assert_eq!(a.socle_dimension(), (vec![0, 0, 1], true));
    let xy = a.multiply(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap();
    let q = a.quotient_by_form(&xy).unwrap();
    assert_eq!(q.socle_dimension(), (vec![0, 2], false));
    for exps in [vec![3], vec![2, 3, 2], vec![4, 4]] {
        assert!(mci(qq(), &exps).socle_dimension().1);
    }
}

#[test]
fn random_forms() {
    let a = gegen_ambient(gf(32003));
    let f1 = a.random_homogeneous(3, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
    let f2 = a.random_homogeneous(3, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
    assert_eq!(f1, f2);
    let l = a.random_homogeneous(1, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
    assert_eq!(l.coeffs().len(), 5);
    assert_eq!(
        a.random_homogeneous(14, &mut ChaCha8Rng::seed_from_u64(9)),
        Err(Error::EmptyDegree(14))
    );
    let a = mci(qq(), &[3, 3]);
    let f = a.random_homogeneous(2, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
    for c in f.coeffs() {
        let q = c.as_rational().unwrap();
        assert!(q.is_integer() && *q >= ratio(-10, 1) && *q <= ratio(10, 1));
    }
}

#[test]
fn symmetric_unimodal_examples() {
    assert_eq!(check_symmetric_unimodal(&[1, 2, 1]), (true, true));
    assert_eq!(
        check_symmetric_unimodal(&[1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16]),
        (false, true)
    );
    assert_eq!(check_symmetric_unimodal(&[1, 3, 2, 3, 1]), (true, false));
    assert_eq!(check_symmetric_unimodal(&[1]), (true, true));
}

#[test]
fn projection_is_left_inverse_of_section() {
    let a = mci(qq(), &[3, 3, 2]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = a.random_homogeneous(2, &mut rng).unwrap();
    let b = a.quotient_by_form(&g).unwrap();
    let h = b.random_homogeneous(1, &mut rng).unwrap();
    let c = b.quotient_by_form(&b.pow(&h, 2).unwrap()).unwrap();
    for alg in [&b, &c] {
        for t in 0..=alg.sigma() {
            let (pi, iota) = alg.quotient_maps(t).unwrap();
            assert_eq!(pi.mul(&iota).unwrap(), DenseMatrix::identity(qq(), alg.dim(t)));
        }
    }
}

/// A random tower of depth 1..=3 with small degrees and random lower coefficients.
fn random_tower(field: FieldSpec, seed: u64) -> GradedAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = rng.random_range(1..=3);
    let mut alg = GradedAlgebra::trivial(field);
    for v in 0..depth {
        let d = rng.random_range(1..=4usize);
        let lower = (1..=d)
            .map(|i| {
                if alg.dim(i) > 0 && rng.random_bool(0.7) {
                    alg.random_homogeneous(i, &mut rng).unwrap()
                } else {
                    alg.zero(i)
                }
            })
            .collect();
        alg = alg
            .extend_monic(&MonicExtensionPoly::new(format!("x{v}"), lower))
            .unwrap();
    }
    alg
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn extension_convolves_hilbert_functions(seed in any::<u64>(), d in 1usize..5) {
        let a = random_tower(qq(), seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let lower = (1..=d)
            .map(|i| if a.dim(i) > 0 { a.random_homogeneous(i, &mut rng).unwrap() } else { a.zero(i) })
            .collect();
        let b = a.extend_monic(&MonicExtensionPoly::new("y", lower)).unwrap();
        prop_assert_eq!(b.hilbert_function(), convolve(&a.hilbert_function(), &vec![1; d]));
        prop_assert_eq!(b.sigma(), a.sigma() + d - 1);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(seed in any::<u64>()) {
        let a = random_tower(qq(), seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let degs: Vec<usize> = (0..3).map(|_| rng.random_range(0..=a.sigma().min(2))).collect();
        let [u, v, w] = [0, 1, 2].map(|k| {
            if a.dim(degs[k]) > 0 { a.random_homogeneous(degs[k], &mut rng).unwrap() } else { a.zero(degs[k]) }
        });
        prop_assert_eq!(a.multiply(&u, &v).unwrap(), a.multiply(&v, &u).unwrap());
        let left = a.multiply(&a.multiply(&u, &v).unwrap(), &w).unwrap();
        let right = a.multiply(&u, &a.multiply(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn power_map_is_composition(seed in any::<u64>(), r in 1u32..5) {
        let a = random_tower(qq(), seed);
        prop_assume!(a.dim(1) > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = a.random_homogeneous(1, &mut rng).unwrap();
        let wr = a.pow(&w, r).unwrap();
        for i in 0..=a.sigma() {
            let mut composed = DenseMatrix::identity(qq(), a.dim(i));
            for step in 0..r as usize {
                composed = a.mult_map_matrix(&w, i + step).unwrap().mul(&composed).unwrap();
            }
            prop_assert_eq!(a.mult_map_matrix(&wr, i).unwrap(), composed);
        }
    }

    #[test]
    fn pure_towers_are_gorenstein_and_symmetric(seed in any::<u64>()) {
        let a = random_tower(qq(), seed);
        let (_, gorenstein) = a.socle_dimension();
        prop_assert!(gorenstein);
        let (symmetric, unimodal) = check_symmetric_unimodal(&a.hilbert_function());
        prop_assert!(symmetric && unimodal);
    }

    #[test]
    fn quotient_dimension_formula(seed in any::<u64>(), d in 1usize..4) {
        let a = random_tower(qq(), seed);
        prop_assume!(a.dim(d) > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = a.random_homogeneous(d, &mut rng).unwrap();
        prop_assume!(!g.is_zero());
        let b = a.quotient_by_form(&g).unwrap();
        for t in 0..=a.sigma() {
            let rank = if t >= d { a.mult_map_matrix(&g, t - d).unwrap().rank() } else { 0 };
            prop_assert_eq!(b.dim(t) + rank, a.dim(t));
        }
        for t in 0..=b.sigma() {
            let (pi, iota) = b.quotient_maps(t).unwrap();
            prop_assert_eq!(pi.mul(&iota).unwrap(), DenseMatrix::identity(qq(), b.dim(t)));
        }
    }
}
