use std::sync::OnceLock;

use proptest::prelude::*;

use althecke::alternating::{alt_spanning_set, HashOperator};
use althecke::hecke::{AlgElement, RegularRep};
use althecke::scalars::{quantum_int, sqrt_conventional};
use althecke::seminormal::{ariki_p, CoefficientSystem};
use althecke::tableaux::{enum_multipartitions, enum_std_tableaux, StdTableau};
use althecke::{AlgebraParams, Execution, Scalar, Xi};

fn xi_strategy() -> impl Strategy<Value = Xi> {
    prop_oneof![
        Just(Xi::One),
        (3u32..12, 1u32..12).prop_filter_map("primitive", |(e, j)| {
            let g = (1..=e).rev().find(|d| e % d == 0 && j % d == 0).unwrap_or(1);
            (j < e && g == 1).then_some(Xi::Root { e, j })
        }),
    ]
}

fn all_tableaux(n: usize, level: usize) -> Vec<StdTableau> {
    enum_multipartitions(n, level).iter().flat_map(enum_std_tableaux).collect()
}

struct Fixture {
    rep: RegularRep,
    hash: HashOperator,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let p = AlgebraParams::new(3, Xi::Root { e: 7, j: 2 }, vec![2, -2]).unwrap();
        let rep = RegularRep::build(&CoefficientSystem::alternating(&p).unwrap(), Execution::default()).unwrap();
        let hash = HashOperator::new(&rep).unwrap();
        Fixture { rep, hash }
    })
}

fn element(rep: &RegularRep, coords: &[(f64, f64)]) -> AlgElement {
    let v: Vec<Scalar> = coords.iter().map(|&(a, b)| Scalar::new(a, b)).collect();
    AlgElement::from_vector(&rep.dims(), &v)
}

fn coords(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn negative_quantum_integers(k in -20i64..20, xi in xi_strategy()) {
        let z = xi.value();
        let lhs = quantum_int(-k, z);
        let rhs = -z.powi(-k as i32) * quantum_int(k, z);
        prop_assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn conventional_roots_square_back(h in -15i64..15, xi in xi_strategy()) {
        let q = quantum_int(h, xi.value());
        match sqrt_conventional(h, xi, 1e-9) {
            Ok(r) => prop_assert!((r * r - q).norm() < 1e-9),
            Err(_) => prop_assert!(q.norm() < 1e-9),
        }
    }

    #[test]
    fn conjugation_reverses_dominance(n in 0usize..6, level in 1usize..3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let shapes = enum_multipartitions(n, level);
        let (a, b) = (&shapes[i.index(shapes.len())], &shapes[j.index(shapes.len())]);
        prop_assert_eq!(a.dominates(b), b.conjugate().dominates(&a.conjugate()));
        let ts = all_tableaux(n, level);
        let (s, t) = (&ts[i.index(ts.len())], &ts[j.index(ts.len())]);
        prop_assert_eq!(s.dominates(t), t.conjugate().dominates(&s.conjugate()));
        prop_assert_eq!(&s.conjugate().conjugate(), s);
    }

    #[test]
    fn separation_matches_semisimplicity(n in 1usize..5, kappa in prop::collection::vec(-4i64..5, 1..3), xi in xi_strategy()) {
        let p = AlgebraParams::new(n, xi, kappa).unwrap();
        let ts = all_tableaux(n, p.level);
        let mut seqs: Vec<_> = ts.iter().map(|t| t.residue_seq(&p)).collect();
        seqs.sort();
        seqs.dedup();
        let separated = seqs.len() == ts.len();
        let semisimple = ariki_p(&p).norm() > 1e-9;
        prop_assert_eq!(separated, semisimple);
    }

    #[test]
    fn axial_distances_flip_under_conjugation(n in 2usize..6, a in 0i64..4, r in 1usize..5, i in any::<prop::sample::Index>()) {
        let kappa = vec![a, -a];
        let ts = all_tableaux(n, 2);
        let t = &ts[i.index(ts.len())];
        let r = 1 + (r - 1) % (n - 1);
        prop_assert_eq!(t.axial_distance(r, &kappa), -t.conjugate().axial_distance(r, &kappa));
    }

    #[test]
    fn alternating_coefficients_are_antisymmetric(r in 1usize..4, i in any::<prop::sample::Index>()) {
        let rep = &fixture().rep;
        let cs = rep.coefficients();
        let ts: Vec<_> = rep.tableaux().cloned().collect();
        let t = &ts[i.index(ts.len())];
        let r = 1 + (r - 1) % (rep.params().n - 1);
        let sum = cs.alpha(t, r).unwrap() + cs.alpha(&t.conjugate(), r).unwrap();
        prop_assert!(sum.norm() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hash_is_a_multiplicative_involution(x in coords(48), y in coords(48), s in (-2.0f64..2.0, -2.0f64..2.0)) {
        let f = fixture();
        prop_assert_eq!(f.rep.algebra_dim(), 48);
        let (x, y) = (element(&f.rep, &x), element(&f.rep, &y));
        let s = Scalar::new(s.0, s.1);
        let hx = f.hash.apply(&x);
        let hy = f.hash.apply(&y);
        prop_assert!(f.hash.apply(&x.mul(&y)).residual(&hx.mul(&hy)) < 1e-8);
        prop_assert!(f.hash.apply(&x.add(&y.scale(s))).residual(&hx.add(&hy.scale(s))) < 1e-8);
        prop_assert!(f.hash.apply(&hx).residual(&x) < 1e-8);
        prop_assert!(f.hash.apply(&f.rep.identity()).residual(&f.rep.identity()) < 1e-8);
    }

    #[test]
    fn symmetrised_elements_are_fixed(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let f = fixture();
        let span = alt_spanning_set(&f.hash);
        let (a, b) = (&span[i.index(span.len())], &span[j.index(span.len())]);
        let prod = a.mul(b);
        prop_assert!(f.hash.apply(&prod).residual(&prod) < 1e-8);
        prop_assert!(f.hash.apply(a).residual(a) < 1e-8);
    }
}

#[test]
fn sequential_and_parallel_builds_agree() {
    let p = AlgebraParams::new(4, Xi::Root { e: 7, j: 1 }, vec![0]).unwrap();
    let cs = CoefficientSystem::alternating(&p).unwrap();
    let a = RegularRep::build(&cs, Execution::Sequential).unwrap();
    let b = RegularRep::build(&cs, Execution::Parallel).unwrap();
    assert_eq!(a.generators().t.len(), b.generators().t.len());
    for (x, y) in a.generators().t.iter().zip(&b.generators().t) {
        assert_eq!(x, y);
    }
}
