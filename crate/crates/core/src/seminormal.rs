//! Seminormal coefficient systems, γ-coefficients, Specht module matrices,
//! seminormal basis elements and the primitive idempotents.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{AlgElement, RegularRep};
use crate::linalg::{relative_residual, Matrix};
use crate::scalars::{c, quantum_int, sqrt_conventional, AlgebraParams, Scalar, I};
use crate::tableaux::{enum_multipartitions, enum_std_tableaux, initial_tableau, Multipartition, StdTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientKind {
    /// `α_r(t) = [1 + ρ] / [ρ]`.
    James,
    /// The system with `α_r(t') = −α_r(t)`.
    Alternating,
}

fn relative(lhs: Scalar, rhs: Scalar) -> f64 {
    (lhs - rhs).norm() / 1f64.max(lhs.norm()).max(rhs.norm())
}

fn require_swap(t: &StdTableau, r: usize) -> Result<()> {
    if t.apply_transposition(r).is_none() {
        return Err(Error::Precondition(format!("s_{r} applied to {t} is not standard")));
    }
    Ok(())
}

fn q_nonzero(params: &AlgebraParams, k: i64) -> Result<Scalar> {
    let q = params.q(k);
    if params.approx_zero(q) {
        return Err(Error::SingularAxialDistance { rho: k });
    }
    Ok(q)
}

pub fn alpha_james(t: &StdTableau, r: usize, params: &AlgebraParams) -> Result<Scalar> {
    require_swap(t, r)?;
    let rho = t.axial_distance(r, &params.kappa);
    Ok(params.q(1 + rho) / q_nonzero(params, rho)?)
}

/// `α_r(t) = sgn(ρ) · √−1 · √ξ · √[|ρ|+1] · √[|ρ|−1] / [|ρ|]` with `ρ = ρ_r(t)`.
///
/// The value depends only on `ρ` and is odd in it, so `α_r(t') = −α_r(t)`
/// whenever contents negate under conjugation, and
/// `α_r(t) α_r(s_r t) = −α(|ρ|)² = [1+ρ][1−ρ] / ([ρ][−ρ])`.
pub fn alpha_alternating(t: &StdTableau, r: usize, params: &AlgebraParams) -> Result<Scalar> {
    require_swap(t, r)?;
    let rho = t.axial_distance(r, &params.kappa);
    let m = rho.abs();
    if m <= 1 {
        return Err(Error::Domain(format!("axial distance {rho} admits no alternating coefficient")));
    }
    let up = sqrt_conventional(m + 1, params.xi, params.tol)?;
    let down = sqrt_conventional(m - 1, params.xi, params.tol)?;
    let value = I * params.xi.sqrt() * up * down / q_nonzero(params, m)?;
    Ok(if rho > 0 { value } else { -value })
}

/// A seminormal coefficient system for one algebra.
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    params: AlgebraParams,
    kind: CoefficientKind,
    overrides: HashMap<(StdTableau, usize), Scalar>,
}

impl CoefficientSystem {
    pub fn james(params: &AlgebraParams) -> Self {
        CoefficientSystem { params: params.clone(), kind: CoefficientKind::James, overrides: HashMap::new() }
    }

    pub fn alternating(params: &AlgebraParams) -> Result<Self> {
        if !params.has_symmetric_kappa() {
            return Err(Error::Precondition(format!(
                "alternating coefficients need a symmetric multicharge, got {:?}",
                params.kappa
            )));
        }
        Ok(CoefficientSystem { params: params.clone(), kind: CoefficientKind::Alternating, overrides: HashMap::new() })
    }

    pub fn new(params: &AlgebraParams, kind: CoefficientKind) -> Result<Self> {
        match kind {
            CoefficientKind::James => Ok(Self::james(params)),
            CoefficientKind::Alternating => Self::alternating(params),
        }
    }

    /// Replace one coefficient. Used to exercise the axiom checks.
    pub fn with_override(mut self, t: StdTableau, r: usize, value: Scalar) -> Self {
        self.overrides.insert((t, r), value);
        self
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn kind(&self) -> CoefficientKind {
        self.kind
    }

    /// `α_r(t)`, zero when `s_r · t` is not standard.
    pub fn alpha(&self, t: &StdTableau, r: usize) -> Result<Scalar> {
        if t.apply_transposition(r).is_none() {
            return Ok(c(0.0));
        }
        if let Some(v) = self.overrides.get(&(t.clone(), r)) {
            return Ok(*v);
        }
        match self.kind {
            CoefficientKind::James => alpha_james(t, r, &self.params),
            CoefficientKind::Alternating => alpha_alternating(t, r, &self.params),
        }
    }

    fn alpha_opt(&self, t: Option<&StdTableau>, r: usize) -> Result<Scalar> {
        match t {
            Some(t) => self.alpha(t, r),
            None => Ok(c(0.0)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub kind: CoefficientKind,
    pub tableaux: usize,
    /// Commuting-index identity `α_k(t) α_m(s_k t) = α_m(t) α_k(s_m t)`.
    pub far_commutation: f64,
    /// Braid-triple identity along the two paths to `s_r s_{r+1} s_r t`.
    pub braid_triple: f64,
    /// `α_r(t) α_r(v) = [1+ρ_r(t)][1+ρ_r(v)] / ([ρ_r(t)][ρ_r(v)])`.
    pub pair_product: f64,
    /// `α_r(t) + α_r(t')`; absent for systems that are not alternating.
    pub antisymmetry: Option<f64>,
    pub tol: f64,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn max_violation(&self) -> f64 {
        [self.far_commutation, self.braid_triple, self.pair_product, self.antisymmetry.unwrap_or(0.0)]
            .into_iter()
            .fold(0.0, f64::max)
    }

    pub fn passes(&self) -> bool {
        self.max_violation() <= self.tol
    }
}

/// Check the three coefficient axioms over every standard tableau of every
/// shape, plus antisymmetry for an alternating system.
pub fn verify_coefficient_axioms(cs: &CoefficientSystem) -> Result<AxiomReport> {
    let p = cs.params();
    let n = p.n;
    let tol = p.tol;
    let mut report = AxiomReport {
        kind: cs.kind(),
        tableaux: 0,
        far_commutation: 0.0,
        braid_triple: 0.0,
        pair_product: 0.0,
        antisymmetry: (cs.kind() == CoefficientKind::Alternating).then_some(0.0),
        tol,
        failures: Vec::new(),
    };
    let note = |report: &mut AxiomReport, what: String, res: f64| {
        if res > tol && report.failures.len() < 20 {
            report.failures.push(format!("{what}: residual {res:.3e}"));
        }
    };
    for shape in enum_multipartitions(n, p.level) {
        for t in enum_std_tableaux(&shape) {
            report.tableaux += 1;
            for k in 1..n {
                for m in 1..n {
                    if k.abs_diff(m) <= 1 {
                        continue;
                    }
                    let lhs = cs.alpha(&t, k)? * cs.alpha_opt(t.apply_transposition(k).as_ref(), m)?;
                    let rhs = cs.alpha(&t, m)? * cs.alpha_opt(t.apply_transposition(m).as_ref(), k)?;
                    let res = relative(lhs, rhs);
                    report.far_commutation = report.far_commutation.max(res);
                    note(&mut report, format!("far commutation t={t} k={k} m={m}"), res);
                }
            }
            for r in 1..n.saturating_sub(1) {
                let a = t.apply_transposition(r);
                let ba = a.as_ref().and_then(|x| x.apply_transposition(r + 1));
                let lhs = cs.alpha(&t, r)? * cs.alpha_opt(a.as_ref(), r + 1)? * cs.alpha_opt(ba.as_ref(), r)?;
                let b = t.apply_transposition(r + 1);
                let ab = b.as_ref().and_then(|x| x.apply_transposition(r));
                let rhs = cs.alpha(&t, r + 1)? * cs.alpha_opt(b.as_ref(), r)? * cs.alpha_opt(ab.as_ref(), r + 1)?;
                let res = relative(lhs, rhs);
                report.braid_triple = report.braid_triple.max(res);
                note(&mut report, format!("braid triple t={t} r={r}"), res);
            }
            for r in 1..n {
                if let Some(v) = t.apply_transposition(r) {
                    let rt = t.axial_distance(r, &p.kappa);
                    let rv = v.axial_distance(r, &p.kappa);
                    let want = p.q(1 + rt) * p.q(1 + rv) / (q_nonzero(p, rt)? * q_nonzero(p, rv)?);
                    let res = relative(cs.alpha(&t, r)? * cs.alpha(&v, r)?, want);
                    report.pair_product = report.pair_product.max(res);
                    note(&mut report, format!("pair product t={t} r={r}"), res);
                }
                if let Some(anti) = report.antisymmetry {
                    let res = relative(cs.alpha(&t, r)?, -cs.alpha(&t.conjugate(), r)?);
                    report.antisymmetry = Some(anti.max(res));
                    note(&mut report, format!("antisymmetry t={t} r={r}"), res);
                }
            }
        }
    }
    Ok(report)
}

/// The scalars `γ_t`, normalised by `γ_{t^λ} = 1` and propagated by
/// `γ_u = γ_t · α_r(u) / α_r(t)` for `u = s_r t`.
#[derive(Clone, Debug)]
pub struct GammaTable {
    values: HashMap<StdTableau, Scalar>,
    /// Largest disagreement between two propagation paths.
    pub path_residual: f64,
}

impl GammaTable {
    pub fn get(&self, t: &StdTableau) -> Scalar {
        self.values[t]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// γ-coefficients for the tableaux of one shape, with the largest
/// disagreement between propagation paths.
fn gamma_for_shape(cs: &CoefficientSystem, shape: &Multipartition) -> Result<(HashMap<StdTableau, Scalar>, f64)> {
    let n = shape.size();
    let tol = cs.params().tol;
    let start = initial_tableau(shape);
    let mut values = HashMap::new();
    values.insert(start.clone(), c(1.0));
    let mut residual: f64 = 0.0;
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        let gt = values[&t];
        for r in 1..n {
            let Some(u) = t.apply_transposition(r) else { continue };
            let at = cs.alpha(&t, r)?;
            if at.norm() <= tol {
                return Err(Error::NotSemisimple(format!("α_{r}({t}) vanishes")));
            }
            let gu = gt * cs.alpha(&u, r)? / at;
            match values.get(&u) {
                Some(&existing) => residual = residual.max(relative(existing, gu)),
                None => {
                    values.insert(u.clone(), gu);
                    queue.push_back(u);
                }
            }
        }
    }
    Ok((values, residual))
}

pub fn gamma_table(cs: &CoefficientSystem) -> Result<GammaTable> {
    let p = cs.params();
    let mut values = HashMap::new();
    let mut path_residual: f64 = 0.0;
    for shape in enum_multipartitions(p.n, p.level) {
        let (v, res) = gamma_for_shape(cs, &shape)?;
        path_residual = path_residual.max(res);
        values.extend(v);
    }
    if path_residual > p.tol {
        return Err(Error::GammaInconsistent { residual: path_residual });
    }
    if let Some((t, _)) = values.iter().find(|(_, g)| g.norm() <= p.tol) {
        return Err(Error::NotSemisimple(format!("γ_{t} vanishes")));
    }
    Ok(GammaTable { values, path_residual })
}

/// The Specht module `S^λ` in the basis `{f_t}`; column `j` of each matrix
/// is the image of the `j`-th basis vector.
#[derive(Clone, Debug)]
pub struct SpechtBlock {
    pub shape: Multipartition,
    pub basis: Vec<StdTableau>,
    index: HashMap<StdTableau, usize>,
    /// `l[k - 1]` is the matrix of `L_k`.
    pub l: Vec<Matrix>,
    /// `t[r - 1]` is the matrix of `T_r`.
    pub t: Vec<Matrix>,
}

impl SpechtBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, t: &StdTableau) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// `L_k f_t = [c_k(t)] f_t` and `T_r f_t = α_r(t) f_{s_r t} − f_t / [ρ_r(t)]`.
pub fn specht_block(shape: &Multipartition, cs: &CoefficientSystem) -> Result<SpechtBlock> {
    let p = cs.params();
    let n = p.n;
    let basis = enum_std_tableaux(shape);
    let d = basis.len();
    let index: HashMap<StdTableau, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let l = (1..=n)
        .map(|k| {
            let mut m = Matrix::zeros(d, d);
            for (j, t) in basis.iter().enumerate() {
                m[(j, j)] = p.q(t.content(k, &p.kappa));
            }
            m
        })
        .collect();
    let mut tr = Vec::with_capacity(n.saturating_sub(1));
    for r in 1..n {
        let mut m = Matrix::zeros(d, d);
        for (j, t) in basis.iter().enumerate() {
            let rho = t.axial_distance(r, &p.kappa);
            m[(j, j)] = -c(1.0) / q_nonzero(p, rho)?;
            if let Some(u) = t.apply_transposition(r) {
                m[(index[&u], j)] = cs.alpha(t, r)?;
            }
        }
        tr.push(m);
    }
    Ok(SpechtBlock { shape: shape.clone(), basis, index, l, t: tr })
}

/// One factor of Ariki's semisimplicity polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct ArikiFactor {
    pub label: String,
    pub k: i64,
    pub value: Scalar,
}

pub fn ariki_factors(params: &AlgebraParams) -> Vec<ArikiFactor> {
    let xi = params.xi_value();
    let n = params.n as i64;
    let mut out: Vec<ArikiFactor> =
        (1..=n).map(|k| ArikiFactor { label: format!("[{k}]"), k, value: quantum_int(k, xi) }).collect();
    for r in 0..params.level {
        for s in r + 1..params.level {
            for d in (1 - n)..n {
                let k = params.kappa[r] + d - params.kappa[s];
                out.push(ArikiFactor {
                    label: format!("[κ_{} + ({d}) − κ_{}]", r + 1, s + 1),
                    k,
                    value: quantum_int(k, xi),
                });
            }
        }
    }
    out
}

/// `P_H = [1][2]⋯[n] · Π_{r<s} Π_{−n<d<n} [κ_r + d − κ_s]`.
pub fn ariki_p(params: &AlgebraParams) -> Scalar {
    ariki_factors(params).iter().map(|f| f.value).product()
}

/// Vanishing factors of `P_H`; empty exactly when the algebra is semisimple.
pub fn vanishing_factors(params: &AlgebraParams) -> Vec<ArikiFactor> {
    ariki_factors(params).into_iter().filter(|f| params.approx_zero(f.value)).collect()
}

pub fn require_semisimple(params: &AlgebraParams) -> Result<()> {
    let bad = vanishing_factors(params);
    if bad.is_empty() {
        Ok(())
    } else {
        let labels: Vec<String> = bad.iter().map(|f| format!("{} = [{}]", f.label, f.k)).collect();
        Err(Error::NotSemisimple(format!("P_H has vanishing factors {}", labels.join(", "))))
    }
}

/// Transposition steps `r_1, …, r_k` with `s_{r_k} ⋯ s_{r_1} t^λ = t`, every
/// intermediate tableau standard.
pub fn path_from_initial(t: &StdTableau) -> Vec<usize> {
    let start = initial_tableau(t.shape());
    let mut parent: HashMap<StdTableau, (StdTableau, usize)> = HashMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    let mut seen = std::collections::HashSet::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        if &x == t {
            break;
        }
        for r in 1..x.n() {
            if let Some(u) = x.apply_transposition(r) {
                if seen.insert(u.clone()) {
                    parent.insert(u.clone(), (x.clone(), r));
                    queue.push_back(u);
                }
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while cur != start {
        let (prev, r) = parent.remove(&cur).expect("every standard tableau is reachable from t^λ");
        steps.push(r);
        cur = prev;
    }
    steps.reverse();
    steps
}

/// `f_st` built from `f_{t^λ t^λ} = F_{t^λ}` by the recursions
/// `f_{ut} = (T_r + 1/[ρ_r(s)]) f_{st} / α_r(s)` on the left and
/// `f_{sv} = f_{sw} (T_r + 1/[ρ_r(w)]) / α_r(w)` on the right, where
/// `F_{t^λ}` comes from the Jucys–Murphy product formula.
pub fn f_matrix(rep: &RegularRep, s: &StdTableau, t: &StdTableau) -> Result<AlgElement> {
    if s.shape() != t.shape() {
        return Err(Error::Precondition(format!("{s} and {t} have different shapes")));
    }
    let p = rep.params();
    let cs = rep.coefficients();
    let gens = rep.generators();
    let start = initial_tableau(s.shape());
    let mut f = idempotent_product(rep, &start)?.scale(rep.gamma(&start));
    let shift = |x: &StdTableau, r: usize| -> Result<AlgElement> {
        let rho = x.axial_distance(r, &p.kappa);
        Ok(gens.t[r - 1].add_scalar(c(1.0) / q_nonzero(p, rho)?))
    };
    let mut cur = start.clone();
    for r in path_from_initial(s) {
        let a = cs.alpha(&cur, r)?;
        f = shift(&cur, r)?.mul(&f).scale(c(1.0) / a);
        cur = cur.apply_transposition(r).expect("path steps are standard");
    }
    let mut cur = start;
    for r in path_from_initial(t) {
        let a = cs.alpha(&cur, r)?;
        f = f.mul(&shift(&cur, r)?).scale(c(1.0) / a);
        cur = cur.apply_transposition(r).expect("path steps are standard");
    }
    Ok(f)
}

/// `F_t = Π_k Π_c (L_k − c) / ([c_k(t)] − c)`, with `c` running over the
/// distinct eigenvalues of `L_k` other than `[c_k(t)]` (over all standard
/// tableaux of all shapes).
pub fn idempotent_product(rep: &RegularRep, t: &StdTableau) -> Result<AlgElement> {
    let p = rep.params();
    let gens = rep.generators();
    let mut out = rep.identity();
    for k in 1..=p.n {
        let own = p.q(t.content(k, &p.kappa));
        for &ev in rep.jm_eigenvalues(k) {
            if p.approx_eq(ev, own) {
                continue;
            }
            out = out.mul(&gens.l[k - 1].add_scalar(-ev)).scale(c(1.0) / (own - ev));
        }
    }
    Ok(out)
}

/// Both constructions of `F_t` and their agreement.
#[derive(Clone, Debug)]
pub struct IdempotentF {
    pub product: AlgElement,
    pub seminormal: AlgElement,
    pub residual: f64,
}

pub fn idempotent_f(rep: &RegularRep, t: &StdTableau) -> Result<IdempotentF> {
    let product = idempotent_product(rep, t)?;
    let seminormal = f_matrix(rep, t, t)?.scale(c(1.0) / rep.gamma(t));
    let residual = product.residual(&seminormal);
    Ok(IdempotentF { product, seminormal, residual })
}

/// Residuals of the idempotent identities over all standard tableaux.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentReport {
    pub tableaux: usize,
    /// Product formula against `f_tt / γ_t`.
    pub formula_agreement: f64,
    pub idempotence: f64,
    pub orthogonality: f64,
    /// `Σ_t F_t` against the identity.
    pub completeness: f64,
}

impl IdempotentReport {
    pub fn max_residual(&self) -> f64 {
        self.formula_agreement.max(self.idempotence).max(self.orthogonality).max(self.completeness)
    }
}

pub fn verify_idempotents(rep: &RegularRep) -> Result<IdempotentReport> {
    let tabs: Vec<StdTableau> = rep.tableaux().cloned().collect();
    let fs = rep.exec().try_map(&tabs, |t| idempotent_f(rep, t))?;
    let mut report = IdempotentReport {
        tableaux: tabs.len(),
        formula_agreement: 0.0,
        idempotence: 0.0,
        orthogonality: 0.0,
        completeness: 0.0,
    };
    let mut sum = rep.zero();
    for f in &fs {
        report.formula_agreement = report.formula_agreement.max(f.residual);
        report.idempotence = report.idempotence.max(f.product.mul(&f.product).residual(&f.product));
        sum = sum.add(&f.product);
    }
    let zero = rep.zero();
    let orth = rep.exec().map_range(fs.len(), |i| {
        fs.iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| fs[i].product.mul(&g.product).residual(&zero))
            .fold(0.0, f64::max)
    });
    report.orthogonality = orth.into_iter().fold(0.0, f64::max);
    report.completeness = sum.residual(&rep.identity());
    Ok(report)
}

/// Checks `f_st f_uv = δ_tu γ_t f_sv` and `ρ(f_st) = γ_t E_st` inside one
/// block, for every quadruple of tableaux of that shape.
pub fn verify_structure_constants(rep: &RegularRep, shape: &Multipartition) -> Result<(f64, f64)> {
    let basis = enum_std_tableaux(shape);
    let mut fs = HashMap::new();
    let mut unit_res: f64 = 0.0;
    for s in &basis {
        for t in &basis {
            let f = f_matrix(rep, s, t)?;
            unit_res = unit_res.max(f.residual(&rep.matrix_unit(s, t).scale(rep.gamma(t))));
            fs.insert((s.clone(), t.clone()), f);
        }
    }
    let zero = rep.zero();
    let mut res: f64 = 0.0;
    for s in &basis {
        for t in &basis {
            for u in &basis {
                for v in &basis {
                    let lhs = fs[&(s.clone(), t.clone())].mul(&fs[&(u.clone(), v.clone())]);
                    let rhs = if t == u { fs[&(s.clone(), v.clone())].scale(rep.gamma(t)) } else { zero.clone() };
                    res = res.max(lhs.residual(&rhs));
                }
            }
        }
    }
    Ok((unit_res, res))
}

/// `ρ(g) = G^{-1} ρ(g)^T G` for every generator on every block, with
/// `G = diag(γ_t)`. Returns the largest residual.
pub fn verify_star_transpose(rep: &RegularRep) -> f64 {
    let mut worst: f64 = 0.0;
    for block in rep.blocks() {
        let g: Vec<Scalar> = block.basis.iter().map(|t| rep.gamma(t)).collect();
        let d = block.dim();
        for m in block.l.iter().chain(&block.t) {
            let conj = Matrix::from_fn(d, d, |i, j| m[(j, i)] * g[j] / g[i]);
            worst = worst.max(relative_residual(m, &conj));
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{approx_eq, Xi};
    use crate::tableaux::final_tableau;
    use crate::hecke::RegularRep;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    fn s3() -> AlgebraParams {
        AlgebraParams::new(3, Xi::One, vec![0]).unwrap()
    }

    #[test]
    fn james_examples() {
        let p = s3();
        let t = initial_tableau(&mp("2,1"));
        let u = final_tableau(&mp("2,1"));
        let a = alpha_james(&t, 2, &p).unwrap();
        let b = alpha_james(&u, 2, &p).unwrap();
        assert!(approx_eq(a, c(1.5), 1e-14));
        assert!(approx_eq(b, c(0.5), 1e-14));
        assert!(approx_eq(a * b, c(0.75), 1e-14));
        assert!(alpha_james(&t, 1, &p).is_err());
    }

    #[test]
    fn alternating_examples() {
        let p = s3();
        let t = initial_tableau(&mp("2,1"));
        let u = final_tableau(&mp("2,1"));
        let root3 = 3f64.sqrt();
        assert!(approx_eq(alpha_alternating(&t, 2, &p).unwrap(), I * root3 / 2.0, 1e-14));
        assert!(approx_eq(alpha_alternating(&u, 2, &p).unwrap(), -I * root3 / 2.0, 1e-14));
    }

    #[test]
    fn alternating_pair_product() {
        for xi in [Xi::One, Xi::Root { e: 7, j: 1 }, Xi::Root { e: 11, j: 3 }] {
            let p = AlgebraParams::new(5, xi, vec![0]).unwrap();
            for shape in enum_multipartitions(5, 1) {
                for t in enum_std_tableaux(&shape) {
                    for r in 1..5 {
                        if let Some(u) = t.apply_transposition(r) {
                            let rho = t.axial_distance(r, &p.kappa);
                            let exact = p.q(1 + rho) * p.q(1 - rho) / (p.q(rho) * p.q(-rho));
                            let got = alpha_alternating(&t, r, &p).unwrap() * alpha_alternating(&u, r, &p).unwrap();
                            assert!(approx_eq(got, exact, 1e-10));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_hold_for_both_systems() {
        let p = AlgebraParams::new(4, Xi::One, vec![0]).unwrap();
        let james = verify_coefficient_axioms(&CoefficientSystem::james(&p)).unwrap();
        assert!(james.max_violation() < 1e-10, "{james:?}");
        assert!(james.antisymmetry.is_none());
        let alt = verify_coefficient_axioms(&CoefficientSystem::alternating(&p).unwrap()).unwrap();
        assert!(alt.passes(), "{alt:?}");
        let p = AlgebraParams::new(3, Xi::Root { e: 7, j: 1 }, vec![2, -2]).unwrap();
        for cs in [CoefficientSystem::james(&p), CoefficientSystem::alternating(&p).unwrap()] {
            let rep = verify_coefficient_axioms(&cs).unwrap();
            assert!(rep.passes(), "{rep:?}");
        }
    }

    #[test]
    fn corrupted_system_is_flagged() {
        let p = AlgebraParams::new(4, Xi::One, vec![0]).unwrap();
        let t = initial_tableau(&mp("3,1"));
        let cs = CoefficientSystem::alternating(&p).unwrap();
        let good = cs.alpha(&t, 3).unwrap();
        let bad = cs.with_override(t, 3, -good);
        let report = verify_coefficient_axioms(&bad).unwrap();
        assert!(!report.passes());
        assert!(report.pair_product > 1e-3 || report.braid_triple > 1e-3);
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn alternating_needs_symmetric_multicharge() {
        let p = AlgebraParams::new(2, Xi::One, vec![0, 1]).unwrap();
        assert!(CoefficientSystem::alternating(&p).is_err());
    }

    #[test]
    fn gamma_examples() {
        let p = s3();
        let u = final_tableau(&mp("2,1"));
        let alt = gamma_table(&CoefficientSystem::alternating(&p).unwrap()).unwrap();
        assert!(approx_eq(alt.get(&initial_tableau(&mp("2,1"))), c(1.0), 1e-14));
        assert!(approx_eq(alt.get(&u), c(-1.0), 1e-12));
        let james = gamma_table(&CoefficientSystem::james(&p)).unwrap();
        assert!(approx_eq(james.get(&u), c(1.0 / 3.0), 1e-12));
    }

    #[test]
    fn gamma_is_path_independent() {
        let p = AlgebraParams::new(5, Xi::Root { e: 7, j: 2 }, vec![0]).unwrap();
        for cs in [CoefficientSystem::james(&p), CoefficientSystem::alternating(&p).unwrap()] {
            let g = gamma_table(&cs).unwrap();
            assert!(g.path_residual < 1e-10);
            assert_eq!(g.len(), 26);
        }
    }

    #[test]
    fn specht_block_examples() {
        let p = s3();
        let cs = CoefficientSystem::alternating(&p).unwrap();
        let b = specht_block(&mp("2,1"), &cs).unwrap();
        let t1 = Matrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
        let h = 3f64.sqrt() / 2.0;
        let t2 = Matrix::from_row_slice(2, 2, &[c(-0.5), -I * h, I * h, c(0.5)]);
        assert!(relative_residual(&b.t[0], &t1) < 1e-14);
        assert!(relative_residual(&b.t[1], &t2) < 1e-14);
        // one row: every T_r acts by ξ
        let p = AlgebraParams::new(3, Xi::Root { e: 7, j: 1 }, vec![0]).unwrap();
        let b = specht_block(&mp("3"), &CoefficientSystem::james(&p)).unwrap();
        for m in &b.t {
            assert_eq!(m.shape(), (1, 1));
            assert!(approx_eq(m[(0, 0)], p.xi_value(), 1e-12));
        }
    }

    #[test]
    fn specht_quadratic_relation() {
        let p = AlgebraParams::new(4, Xi::Root { e: 7, j: 3 }, vec![0]).unwrap();
        let cs = CoefficientSystem::alternating(&p).unwrap();
        let xi = p.xi_value();
        for shape in enum_multipartitions(4, 1) {
            let b = specht_block(&shape, &cs).unwrap();
            let d = b.dim();
            let id = Matrix::identity(d, d);
            for m in &b.t {
                let q = (m + &id) * (m - &id * xi);
                assert!(crate::linalg::max_abs(&q) < 1e-10);
            }
        }
    }

    #[test]
    fn ariki_examples() {
        assert!(approx_eq(ariki_p(&s3()), c(6.0), 1e-12));
        let p = AlgebraParams::new(3, Xi::Root { e: 3, j: 1 }, vec![0]).unwrap();
        assert!(ariki_p(&p).norm() < 1e-12);
        assert!(require_semisimple(&p).is_err());
        let p = AlgebraParams::new(2, Xi::Root { e: 7, j: 1 }, vec![1, -1]).unwrap();
        assert!(ariki_p(&p).norm() > 1e-3);
        assert!(require_semisimple(&p).is_ok());
        // κ = (1, −1) at n = 3 contains the factor [1 − 2 + 1] = [0]
        let p = AlgebraParams::new(3, Xi::Root { e: 7, j: 1 }, vec![1, -1]).unwrap();
        assert!(require_semisimple(&p).is_err());
    }

    #[test]
    fn paths_reach_every_tableau() {
        for shape in enum_multipartitions(4, 2) {
            for t in enum_std_tableaux(&shape) {
                let mut cur = initial_tableau(&shape);
                for r in path_from_initial(&t) {
                    cur = cur.apply_transposition(r).unwrap();
                }
                assert_eq!(cur, t);
            }
        }
    }

    fn rep(n: usize, xi: Xi, kappa: Vec<i64>, kind: CoefficientKind) -> RegularRep {
        let p = AlgebraParams::new(n, xi, kappa).unwrap();
        crate::hecke::regular_rep(&CoefficientSystem::new(&p, kind).unwrap()).unwrap()
    }

    #[test]
    fn f_matrix_examples() {
        let r = rep(3, Xi::One, vec![0], CoefficientKind::Alternating);
        let t = initial_tableau(&mp("2,1"));
        let u = final_tableau(&mp("2,1"));
        let f = f_matrix(&r, &t, &t).unwrap();
        assert!(f.residual(&r.matrix_unit(&t, &t)) < 1e-12);
        let f = f_matrix(&r, &u, &u).unwrap();
        assert!(f.residual(&r.matrix_unit(&u, &u).scale(c(-1.0))) < 1e-12);
        let (units, products) = verify_structure_constants(&r, &mp("2,1")).unwrap();
        assert!(units < 1e-12 && products < 1e-12);
    }

    #[test]
    fn structure_constants_at_level_two() {
        let r = rep(3, Xi::Root { e: 7, j: 1 }, vec![2, -2], CoefficientKind::James);
        for shape in enum_multipartitions(3, 2) {
            let (units, products) = verify_structure_constants(&r, &shape).unwrap();
            assert!(units < 1e-9 && products < 1e-9, "{shape}");
        }
    }

    #[test]
    fn idempotents_decompose_the_identity() {
        let r = rep(1, Xi::One, vec![0], CoefficientKind::James);
        let t = initial_tableau(&mp("1"));
        assert!(idempotent_product(&r, &t).unwrap().residual(&r.identity()) < 1e-15);
        for r in [
            rep(2, Xi::One, vec![0], CoefficientKind::Alternating),
            rep(3, Xi::One, vec![0], CoefficientKind::Alternating),
            rep(4, Xi::Root { e: 7, j: 1 }, vec![0], CoefficientKind::James),
            rep(3, Xi::Root { e: 7, j: 1 }, vec![2, -2], CoefficientKind::Alternating),
        ] {
            let report = verify_idempotents(&r).unwrap();
            assert!(report.max_residual() < 1e-9, "{report:?}");
        }
    }

    #[test]
    fn star_transpose_holds() {
        for kind in [CoefficientKind::James, CoefficientKind::Alternating] {
            let r = rep(4, Xi::Root { e: 7, j: 3 }, vec![0], kind);
            assert!(verify_star_transpose(&r) < 1e-10);
        }
    }
}
