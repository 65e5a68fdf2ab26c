//! The block-diagonal model `⊕_λ End(S^λ)` of a semisimple cyclotomic Hecke
//! algebra, its Ariki–Koike basis and the defining relations.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{max_abs, rank_of_vectors, relative_residual, Matrix, RankInfo};
use crate::scalars::{c, AlgebraParams, Scalar};
use crate::seminormal::{gamma_table, require_semisimple, specht_block, CoefficientSystem, GammaTable, SpechtBlock};
use crate::tableaux::{enum_multipartitions, Multipartition, StdTableau};

/// An element of the algebra, stored as its diagonal blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgElement {
    pub blocks: Vec<Matrix>,
}

impl AlgElement {
    pub fn zero(dims: &[usize]) -> Self {
        AlgElement { blocks: dims.iter().map(|&d| Matrix::zeros(d, d)).collect() }
    }

    pub fn identity(dims: &[usize]) -> Self {
        AlgElement { blocks: dims.iter().map(|&d| Matrix::identity(d, d)).collect() }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::nrows).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Self {
        assert_eq!(self.blocks.len(), other.blocks.len(), "block structures differ");
        AlgElement { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Scalar) -> Self {
        AlgElement { blocks: self.blocks.iter().map(|m| m * s).collect() }
    }

    /// `self + s · 1`.
    pub fn add_scalar(&self, s: Scalar) -> Self {
        AlgElement {
            blocks: self
                .blocks
                .iter()
                .map(|m| {
                    let d = m.nrows();
                    m + Matrix::identity(d, d) * s
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = AlgElement::identity(&self.dims());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (b, m) in self.blocks.iter().enumerate() {
            let inv = m.clone().try_inverse().ok_or_else(|| Error::Singular(format!("block {b} is not invertible")))?;
            let d = m.nrows();
            if relative_residual(&(m * &inv), &Matrix::identity(d, d)) > tol {
                return Err(Error::Singular(format!("block {b} is numerically singular")));
            }
            blocks.push(inv);
        }
        Ok(AlgElement { blocks })
    }

    /// Column-major entries of every block, concatenated.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|m| m.as_slice().iter().copied()).collect()
    }

    pub fn from_vector(dims: &[usize], v: &[Scalar]) -> Self {
        let mut at = 0;
        let blocks = dims
            .iter()
            .map(|&d| {
                let m = Matrix::from_column_slice(d, d, &v[at..at + d * d]);
                at += d * d;
                m
            })
            .collect();
        AlgElement { blocks }
    }

    pub fn max_abs(&self) -> f64 {
        self.blocks.iter().map(max_abs).fold(0.0, f64::max)
    }

    /// `max|a − b| / max(1, max|a|, max|b|)` over all blocks together.
    pub fn residual(&self, other: &Self) -> f64 {
        let diff = self.sub(other).max_abs();
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }

    pub fn trace(&self) -> Scalar {
        self.blocks.iter().map(|m| m.trace()).sum()
    }
}

/// Images of `L_1, …, L_n` and `T_1, …, T_{n−1}`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub l: Vec<AlgElement>,
    pub t: Vec<AlgElement>,
}

impl Generators {
    fn from_blocks(blocks: &[SpechtBlock], n: usize) -> Self {
        let l = (0..n).map(|k| AlgElement { blocks: blocks.iter().map(|b| b.l[k].clone()).collect() }).collect();
        let t = (0..n.saturating_sub(1))
            .map(|r| AlgElement { blocks: blocks.iter().map(|b| b.t[r].clone()).collect() })
            .collect();
        Generators { l, t }
    }

    /// `T_{i_1} ⋯ T_{i_k}` for the word `[i_1, …, i_k]`.
    pub fn t_product(&self, word: &[usize], dims: &[usize]) -> AlgElement {
        let mut out = AlgElement::identity(dims);
        for &i in word {
            out = out.mul(&self.t[i - 1]);
        }
        out
    }

    /// `L̃_k = (ξ − 1) L_k + 1`.
    pub fn affine_l(&self, k: usize, xi: Scalar) -> AlgElement {
        self.l[k - 1].scale(xi - 1.0).add_scalar(c(1.0))
    }
}

/// The semisimple algebra as `⊕_λ End(S^λ)`, blocks in multipartition order.
#[derive(Clone, Debug)]
pub struct RegularRep {
    params: AlgebraParams,
    cs: CoefficientSystem,
    gammas: GammaTable,
    blocks: Vec<SpechtBlock>,
    offsets: Vec<usize>,
    position: HashMap<StdTableau, (usize, usize)>,
    gens: Generators,
    eigenvalues: Vec<Vec<Scalar>>,
    exec: Execution,
}

pub fn regular_rep(cs: &CoefficientSystem) -> Result<RegularRep> {
    RegularRep::build(cs, Execution::default())
}

impl RegularRep {
    pub fn build(cs: &CoefficientSystem, exec: Execution) -> Result<Self> {
        let params = cs.params().clone();
        require_semisimple(&params)?;
        let gammas = gamma_table(cs)?;
        let shapes = enum_multipartitions(params.n, params.level);
        let blocks = exec.try_map(&shapes, |s| specht_block(s, cs))?;
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut position = HashMap::new();
        let mut at = 0;
        for (b, block) in blocks.iter().enumerate() {
            offsets.push(at);
            at += block.dim();
            for (i, t) in block.basis.iter().enumerate() {
                position.insert(t.clone(), (b, i));
            }
        }
        let gens = Generators::from_blocks(&blocks, params.n);
        let eigenvalues = (1..=params.n)
            .map(|k| {
                let mut seen: Vec<Scalar> = Vec::new();
                for block in &blocks {
                    for t in &block.basis {
                        let v = params.q(t.content(k, &params.kappa));
                        if !seen.iter().any(|&s| params.approx_eq(s, v)) {
                            seen.push(v);
                        }
                    }
                }
                seen
            })
            .collect();
        Ok(RegularRep { params, cs: cs.clone(), gammas, blocks, offsets, position, gens, eigenvalues, exec })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn coefficients(&self) -> &CoefficientSystem {
        &self.cs
    }

    pub fn gammas(&self) -> &GammaTable {
        &self.gammas
    }

    pub fn gamma(&self, t: &StdTableau) -> Scalar {
        self.gammas.get(t)
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn blocks(&self) -> &[SpechtBlock] {
        &self.blocks
    }

    pub fn exec(&self) -> Execution {
        self.exec
    }

    pub fn block_index(&self, shape: &Multipartition) -> Option<usize> {
        self.blocks.iter().position(|b| &b.shape == shape)
    }

    /// Block and in-block index of a tableau.
    pub fn position(&self, t: &StdTableau) -> (usize, usize) {
        self.position[t]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(SpechtBlock::dim).collect()
    }

    /// `D = Σ_λ |Std(λ)|`, the size of the representation.
    pub fn total_dim(&self) -> usize {
        self.blocks.iter().map(SpechtBlock::dim).sum()
    }

    /// `Σ_λ |Std(λ)|²`, the dimension of the algebra.
    pub fn algebra_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim() * b.dim()).sum()
    }

    pub fn tableaux(&self) -> impl Iterator<Item = &StdTableau> {
        self.blocks.iter().flat_map(|b| b.basis.iter())
    }

    pub fn identity(&self) -> AlgElement {
        AlgElement::identity(&self.dims())
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement::zero(&self.dims())
    }

    /// The element acting as `E_st` on `S^λ` and as zero elsewhere.
    pub fn matrix_unit(&self, s: &StdTableau, t: &StdTableau) -> AlgElement {
        let (bs, i) = self.position(s);
        let (bt, j) = self.position(t);
        assert_eq!(bs, bt, "{s} and {t} lie in different blocks");
        let mut out = self.zero();
        out.blocks[bs][(i, j)] = c(1.0);
        out
    }

    /// Distinct eigenvalues of `L_k` over every standard tableau.
    pub fn jm_eigenvalues(&self, k: usize) -> &[Scalar] {
        &self.eigenvalues[k - 1]
    }

    pub fn t_word(&self, perm: &[usize]) -> AlgElement {
        self.gens.t_product(&reduced_word(perm, DescentChoice::Leftmost), &self.dims())
    }
}

/// Which descent the bubble sort removes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentChoice {
    Leftmost,
    Rightmost,
}

/// A reduced word `[i_1, …, i_k]` with `ω = s_{i_1} ⋯ s_{i_k}`.
///
/// `perm` is one-line notation on `1..=n`. Right multiplication by `s_i`
/// swaps positions `i` and `i + 1`; sorting by removing descents records a
/// word for `ω^{-1}` read backwards, so the recorded list is reversed.
pub fn reduced_word(perm: &[usize], choice: DescentChoice) -> Vec<usize> {
    let mut w = perm.to_vec();
    let mut recorded = Vec::new();
    loop {
        let descents = (1..w.len()).filter(|&i| w[i - 1] > w[i]);
        let next = match choice {
            DescentChoice::Leftmost => descents.min(),
            DescentChoice::Rightmost => descents.max(),
        };
        let Some(i) = next else { break };
        w.swap(i - 1, i);
        recorded.push(i);
    }
    recorded.reverse();
    recorded
}

/// Number of inversions, the length of every reduced word.
pub fn inversions(perm: &[usize]) -> usize {
    (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Labels `(γ, ω)` of the Ariki–Koike basis `L_1^{γ_1} ⋯ L_n^{γ_n} T_ω`,
/// exponents `0 ≤ γ_i < ℓ` in lexicographic order, then permutations.
pub fn ak_labels(n: usize, level: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let perms = permutations(n);
    let mut exps: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        exps = exps.into_iter().flat_map(|e| (0..level).map(move |g| [e.clone(), vec![g]].concat())).collect();
    }
    exps.into_iter().flat_map(|e| perms.iter().map(move |p| (e.clone(), p.clone()))).collect()
}

/// One Ariki–Koike basis element built from a generator set, with `T_ω`
/// read along the leftmost-descent reduced word.
pub fn ak_element(gens: &Generators, dims: &[usize], exps: &[usize], perm: &[usize]) -> AlgElement {
    let mut out = AlgElement::identity(dims);
    for (k, &g) in exps.iter().enumerate() {
        out = out.mul(&gens.l[k].pow(g));
    }
    out.mul(&gens.t_product(&reduced_word(perm, DescentChoice::Leftmost), dims))
}

/// The elements `L^γ T_ω` for all labels, sharing the `T_ω` and monomials.
pub fn ak_elements_with(gens: &Generators, dims: &[usize], n: usize, level: usize, exec: Execution) -> Vec<AlgElement> {
    let perms = permutations(n);
    let t_words = exec.map(&perms, |p| gens.t_product(&reduced_word(p, DescentChoice::Leftmost), dims));
    let labels = ak_labels(n, level);
    let per_mono = perms.len().max(1);
    let monos: Vec<Vec<usize>> = labels.iter().step_by(per_mono).map(|(e, _)| e.clone()).collect();
    let mono_elts = exec.map(&monos, |e| {
        let mut out = AlgElement::identity(dims);
        for (k, &g) in e.iter().enumerate() {
            out = out.mul(&gens.l[k].pow(g));
        }
        out
    });
    exec.map_range(labels.len(), |i| mono_elts[i / per_mono].mul(&t_words[i % per_mono]))
}

pub fn ak_elements(rep: &RegularRep) -> Vec<AlgElement> {
    let p = rep.params();
    ak_elements_with(rep.generators(), &rep.dims(), p.n, p.level, rep.exec())
}

pub fn rank_of_span(elements: &[AlgElement], tol: f64) -> RankInfo {
    let vs: Vec<Vec<Scalar>> = elements.iter().map(AlgElement::vectorize).collect();
    rank_of_vectors(&vs, tol)
}

/// The Ariki–Koike basis, after checking that it has full rank `ℓⁿ n!`.
pub fn ak_basis(rep: &RegularRep) -> Result<(Vec<AlgElement>, RankInfo)> {
    let elts = ak_elements(rep);
    let info = rank_of_span(&elts, rep.params().tol);
    let expected = rep.params().algebra_dim() as usize;
    if info.rank != expected || elts.len() != expected {
        return Err(Error::RankDeficient { expected, got: info.rank });
    }
    Ok((elts, info))
}

/// Largest residual of each relation family.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub cyclotomic: f64,
    pub quadratic: f64,
    pub jm_commute: f64,
    pub far_commute: f64,
    pub braid: f64,
    pub t_l_commute: f64,
    pub mixed: f64,
    /// `L̃_k = ξ^{1−k} T_{k−1} ⋯ T_1 L̃_1 T_1 ⋯ T_{k−1}`; absent when `ξ = 1`.
    pub affine_jm: Option<f64>,
}

impl RelationReport {
    pub fn families(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("cyclotomic", self.cyclotomic),
            ("quadratic", self.quadratic),
            ("jm_commute", self.jm_commute),
            ("far_commute", self.far_commute),
            ("braid", self.braid),
            ("t_l_commute", self.t_l_commute),
            ("mixed", self.mixed),
        ];
        if let Some(a) = self.affine_jm {
            out.push(("affine_jm", a));
        }
        out
    }

    pub fn max_residual(&self) -> f64 {
        self.families().into_iter().map(|(_, r)| r).fold(0.0, f64::max)
    }
}

/// Check the defining relations on a set of generator images, with
/// cyclotomic parameters `[κ_i]` from `kappa`.
pub fn verify_relations_on(gens: &Generators, params: &AlgebraParams, kappa: &[i64]) -> RelationReport {
    let n = params.n;
    let xi = params.xi_value();
    let mut rep = RelationReport::default();
    if n == 0 {
        return rep;
    }
    let dims = gens.l[0].dims();
    let zero = AlgElement::zero(&dims);
    let mut cyc = AlgElement::identity(&dims);
    for &k in kappa {
        cyc = cyc.mul(&gens.l[0].add_scalar(-params.q(k)));
    }
    rep.cyclotomic = cyc.residual(&zero);
    for t in &gens.t {
        rep.quadratic = rep.quadratic.max(t.add_scalar(c(1.0)).mul(&t.add_scalar(-xi)).residual(&zero));
    }
    for a in 0..n {
        for b in a + 1..n {
            rep.jm_commute = rep.jm_commute.max(gens.l[a].mul(&gens.l[b]).residual(&gens.l[b].mul(&gens.l[a])));
        }
    }
    for r in 1..n {
        let tr = &gens.t[r - 1];
        for s in r + 2..n {
            let ts = &gens.t[s - 1];
            rep.far_commute = rep.far_commute.max(tr.mul(ts).residual(&ts.mul(tr)));
        }
        if r + 1 < n {
            let tn = &gens.t[r];
            rep.braid = rep.braid.max(tr.mul(tn).mul(tr).residual(&tn.mul(tr).mul(tn)));
        }
        for s in (1..=n).filter(|&s| s != r && s != r + 1) {
            let ls = &gens.l[s - 1];
            rep.t_l_commute = rep.t_l_commute.max(tr.mul(ls).residual(&ls.mul(tr)));
        }
        let lhs = gens.l[r].mul(&tr.add_scalar(c(1.0) - xi));
        let rhs = tr.mul(&gens.l[r - 1]).add_scalar(c(1.0));
        rep.mixed = rep.mixed.max(lhs.residual(&rhs));
    }
    if !params.xi.is_one() {
        let mut worst: f64 = 0.0;
        let base = gens.affine_l(1, xi);
        for k in 2..=n {
            let mut x = base.clone();
            for r in 1..k {
                x = gens.t[r - 1].mul(&x).mul(&gens.t[r - 1]);
            }
            x = x.scale(xi.powi(1 - k as i32));
            worst = worst.max(x.residual(&gens.affine_l(k, xi)));
        }
        rep.affine_jm = Some(worst);
    }
    rep
}

pub fn verify_relations(rep: &RegularRep) -> RelationReport {
    verify_relations_on(rep.generators(), rep.params(), &rep.params().kappa)
}
