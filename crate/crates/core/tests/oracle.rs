use althecke::alternating::{classify, hash_images, HashOperator, alt_dimension, epsilon_element, all_idempotents};
use althecke::hecke::{ak_basis, RegularRep};
use althecke::scalars::{c, quantum_int, sqrt_conventional, I};
use althecke::seminormal::{ariki_p, gamma_table, specht_block, CoefficientSystem};
use althecke::tableaux::{enum_multipartitions, enum_std_tableaux, std_plus, Multipartition, StdTableau};
use althecke::{AlgebraParams, Execution, Scalar, Xi};

const TOL: f64 = 1e-12;

fn close(a: Scalar, b: Scalar) -> bool {
    (a - b).norm() < TOL
}

fn mp(s: &str) -> Multipartition {
    Multipartition::parse(s).unwrap()
}

fn tableau(shape: &str, name: &str) -> StdTableau {
    enum_std_tableaux(&mp(shape)).into_iter().find(|t| t.to_string() == name).unwrap()
}

fn s3_one() -> AlgebraParams {
    AlgebraParams::new(3, Xi::One, vec![0]).unwrap()
}

fn e7(n: usize, kappa: Vec<i64>) -> AlgebraParams {
    AlgebraParams::new(n, Xi::Root { e: 7, j: 1 }, kappa).unwrap()
}

#[test]
fn quantum_integers() {
    let z5 = Xi::Root { e: 5, j: 1 }.value();
    assert!(close(quantum_int(0, z5), c(0.0)));
    assert!(close(quantum_int(3, c(1.0)), c(3.0)));
    assert!(close(quantum_int(2, z5), c(1.0) + z5));
    assert!(close(sqrt_conventional(3, Xi::One, 1e-8).unwrap(), c(3f64.sqrt())));
    assert!(close(sqrt_conventional(-3, Xi::One, 1e-8).unwrap(), I * 3f64.sqrt()));
}

#[test]
fn combinatorics() {
    assert_eq!(enum_multipartitions(2, 2).len(), 5);
    assert_eq!(enum_multipartitions(0, 3).len(), 1);
    assert_eq!(enum_std_tableaux(&mp("1|1")).len(), 2);
    assert_eq!(std_plus(&mp("3,2,1")).unwrap().len(), 8);
    let t = tableau("2,1", "12/3");
    assert_eq!(t.content_seq(&[0]), vec![0, 1, -1]);
    assert_eq!(t.axial_distance(2, &[0]), 2);
    assert_eq!(t.conjugate().to_string(), "13/2");
}

#[test]
fn coefficients_and_gammas() {
    let p = s3_one();
    let s = tableau("2,1", "12/3");
    let t = tableau("2,1", "13/2");
    let james = CoefficientSystem::james(&p);
    assert!(close(james.alpha(&s, 2).unwrap(), c(1.5)));
    assert!(close(james.alpha(&t, 2).unwrap(), c(0.5)));
    let alt = CoefficientSystem::alternating(&p).unwrap();
    let h = 3f64.sqrt() / 2.0;
    assert!(close(alt.alpha(&s, 2).unwrap(), I * h));
    assert!(close(alt.alpha(&t, 2).unwrap(), -I * h));
    assert!(close(gamma_table(&alt).unwrap().get(&t), c(-1.0)));
    assert!(close(gamma_table(&james).unwrap().get(&t), c(1.0 / 3.0)));
}

#[test]
fn specht_matrices_of_two_one() {
    let p = s3_one();
    let b = specht_block(&mp("2,1"), &CoefficientSystem::alternating(&p).unwrap()).unwrap();
    let h = 3f64.sqrt() / 2.0;
    let t1 = [[c(1.0), c(0.0)], [c(0.0), c(-1.0)]];
    let t2 = [[c(-0.5), -I * h], [I * h, c(0.5)]];
    for i in 0..2 {
        for j in 0..2 {
            assert!(close(b.t[0][(i, j)], t1[i][j]));
            assert!(close(b.t[1][(i, j)], t2[i][j]));
        }
    }
}

#[test]
fn ariki_polynomial() {
    assert!(close(ariki_p(&s3_one()), c(6.0)));
    let p = AlgebraParams::new(3, Xi::Root { e: 3, j: 1 }, vec![0]).unwrap();
    assert!(ariki_p(&p).norm() < 1e-9);
    assert!(ariki_p(&e7(2, vec![1, -1])).norm() > 1e-3);
}

#[test]
fn algebra_and_alternating_dimensions() {
    for (p, full, half) in [(s3_one(), 6, 3), (e7(2, vec![1, -1]), 8, 4), (e7(4, vec![0]), 24, 12)] {
        let rep = RegularRep::build(&CoefficientSystem::alternating(&p).unwrap(), Execution::Sequential).unwrap();
        assert_eq!(rep.algebra_dim(), full);
        assert_eq!(ak_basis(&rep).unwrap().1.rank, full);
        let hash = HashOperator::new(&rep).unwrap();
        let d = alt_dimension(&rep, &hash).unwrap();
        assert_eq!((d.span_rank, d.fixed_dim), (half, half));
    }
}

#[test]
fn epsilon_at_n2() {
    let p = AlgebraParams::new(2, Xi::Root { e: 5, j: 1 }, vec![0]).unwrap();
    let rep = RegularRep::build(&CoefficientSystem::alternating(&p).unwrap(), Execution::Sequential).unwrap();
    let fs = all_idempotents(&rep).unwrap();
    let eps = epsilon_element(&rep, &fs).unwrap();
    assert!(eps.mul(&eps).residual(&rep.identity()) < 1e-10);
    let hash = HashOperator::new(&rep).unwrap();
    assert!(hash.apply(&eps).residual(&eps.scale(c(-1.0))) < 1e-10);
    let row = &fs[&tableau("2", "12")];
    assert!(eps.residual(&row.sub(&fs[&tableau("1,1", "1/2")])) < 1e-10);
}

#[test]
fn hash_of_t1_at_one() {
    let rep = RegularRep::build(&CoefficientSystem::alternating(&s3_one()).unwrap(), Execution::Sequential).unwrap();
    let h = hash_images(&rep).unwrap();
    assert!(h.t[0].residual(&rep.generators().t[0].scale(c(-1.0))) < 1e-12);
}

#[test]
fn classifications() {
    let cases: [(AlgebraParams, Vec<usize>); 3] = [
        (s3_one(), vec![1, 1, 1]),
        (e7(4, vec![0]), vec![1, 3, 1, 1]),
        (e7(3, vec![2, -2]), vec![]),
    ];
    for (p, dims) in cases {
        let rep = RegularRep::build(&CoefficientSystem::alternating(&p).unwrap(), Execution::Sequential).unwrap();
        let (cls, _) = classify(&rep).unwrap();
        assert!(cls.passes());
        let target = (p.algebra_dim() / 2) as usize;
        assert_eq!(cls.checks.sum_squares, (target, target));
        if !dims.is_empty() {
            let mut got: Vec<usize> = cls.irreps.iter().map(|r| r.dim).collect();
            let mut want = dims.clone();
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }
}
