//! The hash involution, the alternating subalgebra `H_n^#` and its
//! irreducible modules.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{ak_elements, ak_elements_with, ak_labels, verify_relations_on, AlgElement, Generators, RegularRep, RelationReport};
use crate::linalg::{commutant_dim, fixed_subspace_dim, numerical_rank, relative_residual, Matrix, RankInfo};
use crate::scalars::{c, AlgebraParams, Scalar};
use crate::seminormal::{f_matrix, idempotent_product, CoefficientKind};
use crate::tableaux::{classes_of_sequences, enum_std_tableaux, mp_classes, std_plus, Multipartition, ResidueSeq, StdTableau};

fn require_symmetric(params: &AlgebraParams) -> Result<()> {
    if params.has_symmetric_kappa() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("the hash involution needs a symmetric multicharge, got {:?}", params.kappa)))
    }
}

/// Images of the generators under `#`:
/// `T_i ↦ −ξ T_i^{−1}`; `L_1 ↦ −L_1` when `ξ = 1`, otherwise
/// `L̃_1 ↦ L̃_1^{−1}`; and `L_{r+1}^# = ξ^{−1}(T_r^# L_r^# T_r^# + T_r^#)`.
pub fn hash_generators_of(gens: &Generators, params: &AlgebraParams) -> Result<Generators> {
    let n = params.n;
    let xi = params.xi_value();
    let tol = params.tol;
    let t = gens.t.iter().map(|x| Ok(x.inverse(tol)?.scale(-xi))).collect::<Result<Vec<_>>>()?;
    let mut l = Vec::with_capacity(n);
    if n > 0 {
        let l1 = if params.xi.is_one() {
            gens.l[0].scale(c(-1.0))
        } else {
            gens.affine_l(1, xi).inverse(tol)?.add_scalar(c(-1.0)).scale(c(1.0) / (xi - 1.0))
        };
        l.push(l1);
        for r in 1..n {
            let tr: &AlgElement = &t[r - 1];
            let next = tr.mul(&l[r - 1]).mul(tr).add(tr).scale(c(1.0) / xi);
            l.push(next);
        }
    }
    Ok(Generators { l, t })
}

pub fn hash_images(rep: &RegularRep) -> Result<Generators> {
    require_symmetric(rep.params())?;
    hash_generators_of(rep.generators(), rep.params())
}

/// The hash map on the whole algebra, as a linear map in vectorised
/// coordinates: `x ↦ A^# A^{−1} vec(x)`, where the columns of `A` are the
/// Ariki–Koike basis and those of `A^#` are their images.
#[derive(Clone, Debug)]
pub struct HashOperator {
    dims: Vec<usize>,
    basis: Matrix,
    hashed: Matrix,
    inverse: Matrix,
    map: Matrix,
    tol: f64,
    /// `max|A A^{−1} − I|`.
    pub inverse_residual: f64,
    pub gens: Generators,
}

fn columns(elts: &[AlgElement]) -> Matrix {
    let vs: Vec<Vec<Scalar>> = elts.iter().map(AlgElement::vectorize).collect();
    let rows = vs.first().map_or(0, Vec::len);
    Matrix::from_fn(rows, vs.len(), |i, j| vs[j][i])
}

impl HashOperator {
    pub fn new(rep: &RegularRep) -> Result<Self> {
        let params = rep.params();
        let gens = hash_images(rep)?;
        let dims = rep.dims();
        let basis = columns(&ak_elements(rep));
        let hashed = columns(&ak_elements_with(&gens, &dims, params.n, params.level, rep.exec()));
        let size = basis.nrows();
        if basis.ncols() != size {
            return Err(Error::RankDeficient { expected: size, got: basis.ncols() });
        }
        let inverse = basis
            .clone()
            .lu()
            .try_inverse()
            .ok_or_else(|| Error::Singular("the Ariki–Koike basis matrix is singular".into()))?;
        let inverse_residual = relative_residual(&(&basis * &inverse), &Matrix::identity(size, size));
        if inverse_residual > params.tol {
            return Err(Error::Singular(format!("Ariki–Koike basis inverse residual {inverse_residual:e}")));
        }
        let map = &hashed * &inverse;
        Ok(HashOperator { dims, basis, hashed, inverse, map, tol: params.tol, inverse_residual, gens })
    }

    pub fn len(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coefficients of `x` over the Ariki–Koike basis.
    pub fn coords(&self, x: &AlgElement) -> Result<Vec<Scalar>> {
        let v = nalgebra::DVector::from_vec(x.vectorize());
        let coeffs = &self.inverse * &v;
        let back = &self.basis * &coeffs;
        let scale = v.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let residual = (back - &v).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale;
        if residual > self.tol {
            return Err(Error::NotInSpan { residual });
        }
        Ok(coeffs.iter().copied().collect())
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        let v = nalgebra::DVector::from_vec(x.vectorize());
        let out = &self.map * v;
        AlgElement::from_vector(&self.dims, out.as_slice())
    }

    /// `Σ coeff_b · b^#`.
    pub fn apply_coords(&self, coeffs: &[Scalar]) -> AlgElement {
        let v = nalgebra::DVector::from_column_slice(coeffs);
        let out = &self.hashed * v;
        AlgElement::from_vector(&self.dims, out.as_slice())
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        AlgElement::from_vector(&self.dims, self.basis.column(i).as_slice())
    }

    pub fn hashed_element(&self, i: usize) -> AlgElement {
        AlgElement::from_vector(&self.dims, self.hashed.column(i).as_slice())
    }

    /// The matrix of `#` in the Ariki–Koike basis, `A^{−1} A^#`.
    pub fn in_basis(&self) -> Matrix {
        &self.inverse * &self.hashed
    }

    pub fn map_matrix(&self) -> &Matrix {
        &self.map
    }

    /// Columns `vec(b + b^#)` for every basis element `b`.
    pub fn symmetrised(&self) -> Matrix {
        &self.basis + &self.hashed
    }
}

/// `F_t` from the product formula, for every tableau, in block order.
pub fn all_idempotents(rep: &RegularRep) -> Result<HashMap<StdTableau, AlgElement>> {
    let tabs: Vec<StdTableau> = rep.tableaux().cloned().collect();
    let fs = rep.exec().try_map(&tabs, |t| idempotent_product(rep, t))?;
    Ok(tabs.into_iter().zip(fs).collect())
}

/// `f_i = Σ_{res(t) = i} F_t`.
pub fn residue_idempotent(rep: &RegularRep, fs: &HashMap<StdTableau, AlgElement>, i: &ResidueSeq) -> AlgElement {
    let mut out = rep.zero();
    for t in rep.tableaux() {
        if &t.residue_seq(rep.params()) == i {
            out = out.add(&fs[t]);
        }
    }
    out
}

/// Residue sequences of standard tableaux, sorted.
pub fn occurring_residues(rep: &RegularRep) -> Vec<ResidueSeq> {
    let mut seqs: Vec<ResidueSeq> = rep.tableaux().map(|t| t.residue_seq(rep.params())).collect();
    seqs.sort();
    seqs.dedup();
    seqs
}

/// Number of multicharge entries congruent to zero.
pub fn zero_charges(params: &AlgebraParams) -> usize {
    params.kappa.iter().filter(|&&k| params.residue(k) == 0).count()
}

/// `|{j : κ_j ≡ 0}| < n`.
pub fn dimension_hypothesis(params: &AlgebraParams) -> bool {
    zero_charges(params) < params.n
}

/// `ε = Σ_{|[i]| = 2} (f_{i^+} − f_{−i^+})` over the occurring sequences.
pub fn epsilon_element(rep: &RegularRep, fs: &HashMap<StdTableau, AlgElement>) -> Result<AlgElement> {
    let e = rep.params().e();
    let classes = classes_of_sequences(occurring_residues(rep), e);
    let offending: Vec<Vec<i64>> = classes.iter().filter(|c| c.size() == 1).map(|c| c.rep.0.clone()).collect();
    if !offending.is_empty() {
        return Err(Error::HypothesisViolation { offending });
    }
    let mut out = rep.zero();
    for class in &classes {
        out = out.add(&residue_idempotent(rep, fs, &class.rep));
        if let Some(p) = &class.partner {
            out = out.sub(&residue_idempotent(rep, fs, p));
        }
    }
    Ok(out)
}

/// Largest residual of each hash identity.
#[derive(Clone, Debug, Serialize)]
pub struct HashCalculusReport {
    /// Relations of the hashed generators, for the conjugate multicharge.
    pub hashed_relations: RelationReport,
    pub double_hash: f64,
    /// The linear hash map against the hashed generators.
    pub operator_consistency: f64,
    /// `# ∘ #` against the identity map.
    pub involution: f64,
    /// `L_k^# f_ss = [c_k(s')] f_ss`.
    pub lf_hash: f64,
    /// `F_s^# = F_{s'}`.
    pub f_hash: f64,
    /// `f_ss^# = (γ_s / γ_{s'}) f_{s's'}`.
    pub ftt_hash: f64,
    /// `f_i^# = f_{−i}`.
    pub e_hash: f64,
    /// `f_us^# = −(α_r(s') γ_s)/(α_r(s) γ_{s'}) f_{u's'}`.
    pub fut_hash: f64,
    /// `T_r f_st^# = −α_r(s) f_ut^# − f_st^# / [ρ_r(s')]`.
    pub negated_action: f64,
    /// `f_st^# f_uv^# = δ_tu γ_t f_sv^#`.
    pub negated_products: f64,
}

impl HashCalculusReport {
    pub fn families(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("hashed_relations", self.hashed_relations.max_residual()),
            ("double_hash", self.double_hash),
            ("operator_consistency", self.operator_consistency),
            ("involution", self.involution),
            ("lf_hash", self.lf_hash),
            ("f_hash", self.f_hash),
            ("ftt_hash", self.ftt_hash),
            ("e_hash", self.e_hash),
            ("fut_hash", self.fut_hash),
            ("negated_action", self.negated_action),
            ("negated_products", self.negated_products),
        ]
    }

    pub fn max_residual(&self) -> f64 {
        self.families().into_iter().map(|(_, r)| r).fold(0.0, f64::max)
    }
}

fn generators_residual(a: &Generators, b: &Generators) -> f64 {
    a.l.iter().zip(&b.l).chain(a.t.iter().zip(&b.t)).map(|(x, y)| x.residual(y)).fold(0.0, f64::max)
}

pub fn check_hash_calculus(rep: &RegularRep, hash: &HashOperator) -> Result<HashCalculusReport> {
    let p = rep.params();
    let cs = rep.coefficients();
    let gens = rep.generators();
    let hashed = &hash.gens;
    let kappa_conj = p.conjugate_kappa();
    let hashed_relations = verify_relations_on(hashed, p, &kappa_conj);
    let double_hash = generators_residual(&hash_generators_of(hashed, p)?, gens);
    let mut operator_consistency: f64 = 0.0;
    for (x, y) in gens.l.iter().zip(&hashed.l).chain(gens.t.iter().zip(&hashed.t)) {
        operator_consistency = operator_consistency.max(hash.apply(x).residual(y));
    }
    let size = hash.len();
    let h = hash.map_matrix();
    let involution = relative_residual(&(h * h), &Matrix::identity(size, size));

    let fs = all_idempotents(rep)?;
    let tabs: Vec<StdTableau> = rep.tableaux().cloned().collect();
    let per_tableau = rep.exec().try_map(&tabs, |s| -> Result<[f64; 3]> {
        let sc = s.conjugate();
        let fss = f_matrix(rep, s, s)?;
        let mut lf: f64 = 0.0;
        for k in 1..=p.n {
            let lhs = hashed.l[k - 1].mul(&fss);
            lf = lf.max(lhs.residual(&fss.scale(p.q(sc.content(k, &p.kappa)))));
        }
        let fh = hash.apply(&fs[s]).residual(&fs[&sc]);
        let ratio = rep.gamma(s) / rep.gamma(&sc);
        let ftt = hash.apply(&fss).residual(&f_matrix(rep, &sc, &sc)?.scale(ratio));
        Ok([lf, fh, ftt])
    })?;
    let pick = |i: usize| per_tableau.iter().map(|r| r[i]).fold(0.0, f64::max);

    let mut e_hash: f64 = 0.0;
    for i in occurring_residues(rep) {
        let lhs = hash.apply(&residue_idempotent(rep, &fs, &i));
        e_hash = e_hash.max(lhs.residual(&residue_idempotent(rep, &fs, &i.negate(p.e()))));
    }

    let mut fut_hash: f64 = 0.0;
    for s in &tabs {
        for r in 1..p.n {
            let Some(u) = s.apply_transposition(r) else { continue };
            let sc = s.conjugate();
            let coeff = -(cs.alpha(&sc, r)? * rep.gamma(s)) / (cs.alpha(s, r)? * rep.gamma(&sc));
            let lhs = hash.apply(&f_matrix(rep, &u, s)?);
            fut_hash = fut_hash.max(lhs.residual(&f_matrix(rep, &u.conjugate(), &sc)?.scale(coeff)));
        }
    }

    let mut negated_action: f64 = 0.0;
    let mut negated_products: f64 = 0.0;
    for block in rep.blocks() {
        let basis = &block.basis;
        let mut fh: HashMap<(usize, usize), AlgElement> = HashMap::new();
        for (i, s) in basis.iter().enumerate() {
            for (j, t) in basis.iter().enumerate() {
                fh.insert((i, j), hash.apply(&f_matrix(rep, s, t)?));
            }
        }
        for (i, s) in basis.iter().enumerate() {
            for j in 0..basis.len() {
                for r in 1..p.n {
                    let rho = s.axial_distance(r, &p.kappa);
                    let mut rhs = fh[&(i, j)].scale(-c(1.0) / p.q(-rho));
                    if let Some(u) = s.apply_transposition(r) {
                        let ui = block.index_of(&u).expect("same shape");
                        rhs = rhs.add(&fh[&(ui, j)].scale(-cs.alpha(s, r)?));
                    }
                    negated_action = negated_action.max(gens.t[r - 1].mul(&fh[&(i, j)]).residual(&rhs));
                }
            }
        }
        let d = basis.len();
        let zero = rep.zero();
        for si in 0..d {
            for ti in 0..d {
                for ui in 0..d {
                    for vi in 0..d {
                        let lhs = fh[&(si, ti)].mul(&fh[&(ui, vi)]);
                        let rhs = if ti == ui { fh[&(si, vi)].scale(rep.gamma(&basis[ti])) } else { zero.clone() };
                        negated_products = negated_products.max(lhs.residual(&rhs));
                    }
                }
            }
        }
    }

    Ok(HashCalculusReport {
        hashed_relations,
        double_hash,
        operator_consistency,
        involution,
        lf_hash: pick(0),
        f_hash: pick(1),
        ftt_hash: pick(2),
        e_hash,
        fut_hash,
        negated_action,
        negated_products,
    })
}

/// The computed dimension of `H_n^#` and its cross-checks.
#[derive(Clone, Debug, Serialize)]
pub struct AltDimension {
    /// Rank of `{b + b^#}`.
    pub span_rank: usize,
    /// Dimension of the `+1` eigenspace of `#` on the algebra.
    pub fixed_dim: usize,
    pub expected: usize,
    pub hypothesis: bool,
    pub rank_info: RankInfo,
    /// `ε² − 1` and `ε^# + ε`, when `ε` exists.
    pub epsilon_square: Option<f64>,
    pub epsilon_hash: Option<f64>,
    pub epsilon_error: Option<String>,
}

impl AltDimension {
    pub fn matches(&self) -> bool {
        self.span_rank == self.expected && self.fixed_dim == self.expected
    }
}

/// Dimension of `H_n^#`; errors with both numbers when the hypothesis
/// holds and the computed dimension is not `ℓⁿ n!/2`.
pub fn alt_dimension(rep: &RegularRep, hash: &HashOperator) -> Result<AltDimension> {
    let p = rep.params();
    let rank_info = numerical_rank(&hash.symmetrised(), p.tol);
    let fixed_dim = fixed_subspace_dim(&hash.in_basis(), p.tol);
    let expected = hash.len() / 2;
    let hypothesis = dimension_hypothesis(p);
    let fs = all_idempotents(rep)?;
    let (epsilon_square, epsilon_hash, epsilon_error) = match epsilon_element(rep, &fs) {
        Ok(eps) => (
            Some(eps.mul(&eps).residual(&rep.identity())),
            Some(hash.apply(&eps).residual(&eps.scale(c(-1.0)))),
            None,
        ),
        Err(e) => (None, None, Some(e.to_string())),
    };
    let out = AltDimension {
        span_rank: rank_info.rank,
        fixed_dim,
        expected,
        hypothesis,
        rank_info,
        epsilon_square,
        epsilon_hash,
        epsilon_error,
    };
    if hypothesis && !out.matches() {
        return Err(Error::DimensionMismatch { computed: out.span_rank.min(out.fixed_dim), expected });
    }
    Ok(out)
}

/// `{b + b^# : b}` over the Ariki–Koike basis.
pub fn alt_spanning_set(hash: &HashOperator) -> Vec<AlgElement> {
    (0..hash.len()).map(|i| hash.basis_element(i).add(&hash.hashed_element(i))).collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrrepKind {
    /// `S^[λ]`, the restriction of `S^λ` with `λ ≠ λ'`.
    Restricted { partner: String },
    /// `S^λ_±` for `λ = λ'`.
    Split { sign: i8 },
}

/// One irreducible `H_n^#`-module with its certificates.
#[derive(Clone, Debug)]
pub struct AltIrrep {
    pub label: String,
    pub shape: Multipartition,
    pub kind: IrrepKind,
    pub dim: usize,
    /// Matrices of the spanning set, in spanning-set order.
    pub matrices: Vec<Matrix>,
    pub commutant_dim: usize,
    /// `τ` intertwining residual, or leakage out of the split subspace.
    pub certificate: f64,
    /// Orbit-element spot check.
    pub orbit: f64,
}

impl AltIrrep {
    pub fn traces(&self) -> Vec<Scalar> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }
}

fn block_of<'a>(rep: &RegularRep, x: &'a AlgElement, shape: &Multipartition) -> &'a Matrix {
    &x.blocks[rep.block_index(shape).expect("shape of this algebra")]
}

/// `(F_u T_r + F_{u'} T_r^#) v_t = α_r(t) v_u` on `S^λ`, and the signed
/// version on `S^λ_±`, for each standard `u = s_r t` with `u ≠ t'`.
fn orbit_check(rep: &RegularRep, hash: &HashOperator, fs: &HashMap<StdTableau, AlgElement>, shape: &Multipartition, sign: Option<f64>) -> Result<f64> {
    let p = rep.params();
    let b = rep.block_index(shape).expect("shape of this algebra");
    let block = &rep.blocks()[b];
    let d = block.dim();
    let cs = rep.coefficients();
    let mut worst: f64 = 0.0;
    for (ti, t) in block.basis.iter().enumerate() {
        for r in 1..p.n {
            let Some(u) = t.apply_transposition(r) else { continue };
            if u == t.conjugate() {
                continue;
            }
            let elt = fs[&u].mul(&rep.generators().t[r - 1]).add(&fs[&u.conjugate()].mul(&hash.gens.t[r - 1]));
            let m = &elt.blocks[b];
            let ui = block.index_of(&u).expect("same shape");
            let mut v = nalgebra::DVector::<Scalar>::zeros(d);
            let mut want = nalgebra::DVector::<Scalar>::zeros(d);
            let a = cs.alpha(t, r)?;
            v[ti] += c(1.0);
            want[ui] += a;
            if let Some(sg) = sign {
                v[block.index_of(&t.conjugate()).expect("self-conjugate shape")] += c(sg);
                want[block.index_of(&u.conjugate()).expect("self-conjugate shape")] += a * sg;
            }
            let got = m * v;
            let scale = 1f64.max(a.norm());
            worst = worst.max((got - want).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale);
        }
    }
    Ok(worst)
}

/// `S^[λ]` for `λ ≠ λ'`, with the `τ: v_t ↦ v_{t'}` certificate against `S^{λ'}`.
pub fn restricted_module(
    rep: &RegularRep,
    hash: &HashOperator,
    span: &[AlgElement],
    fs: &HashMap<StdTableau, AlgElement>,
    shape: &Multipartition,
) -> Result<AltIrrep> {
    let conj = shape.conjugate();
    if &conj == shape {
        return Err(Error::Precondition(format!("{shape} is self-conjugate")));
    }
    let basis = enum_std_tableaux(shape);
    let conj_block = &rep.blocks()[rep.block_index(&conj).expect("conjugate shape")];
    let perm: Vec<usize> = basis.iter().map(|t| conj_block.index_of(&t.conjugate()).expect("conjugate tableau")).collect();
    let d = basis.len();
    let mut certificate: f64 = 0.0;
    let mut matrices = Vec::with_capacity(span.len());
    for x in span {
        let m = block_of(rep, x, shape).clone();
        let mc = block_of(rep, x, &conj);
        let moved = Matrix::from_fn(d, d, |i, j| mc[(perm[i], perm[j])]);
        certificate = certificate.max(relative_residual(&m, &moved));
        matrices.push(m);
    }
    let commutant = commutant_dim(&matrices, rep.params().tol);
    let orbit = orbit_check(rep, hash, fs, shape, None)?;
    Ok(AltIrrep {
        label: format!("[{shape}]"),
        shape: shape.clone(),
        kind: IrrepKind::Restricted { partner: conj.to_string() },
        dim: d,
        matrices,
        commutant_dim: commutant,
        certificate,
        orbit,
    })
}

/// `S^λ_+` and `S^λ_−` for `λ = λ'`, in the bases `½(f_t ± f_{t'})`,
/// `t ∈ Std(λ)^+`.
pub fn split_modules(
    rep: &RegularRep,
    hash: &HashOperator,
    span: &[AlgElement],
    fs: &HashMap<StdTableau, AlgElement>,
    shape: &Multipartition,
) -> Result<(AltIrrep, AltIrrep)> {
    if !shape.is_self_conjugate() {
        return Err(Error::Precondition(format!("{shape} is not self-conjugate")));
    }
    if rep.coefficients().kind() != CoefficientKind::Alternating {
        return Err(Error::Precondition("split modules need the alternating coefficient system".into()));
    }
    let plus = std_plus(shape)?;
    let b = rep.block_index(shape).expect("shape of this algebra");
    let block = &rep.blocks()[b];
    let d = block.dim();
    let half = plus.len();
    let tol = rep.params().tol;
    let mut out = Vec::with_capacity(2);
    for sign in [1.0, -1.0] {
        let basis = Matrix::from_fn(d, half, |i, j| {
            let t = &plus[j];
            let mut v = c(0.0);
            if block.index_of(t) == Some(i) {
                v += c(0.5);
            }
            if block.index_of(&t.conjugate()) == Some(i) {
                v += c(0.5 * sign);
            }
            v
        });
        let coords = basis.adjoint() * c(2.0);
        let mut leakage: f64 = 0.0;
        let mut matrices = Vec::with_capacity(span.len());
        for x in span {
            let m = &x.blocks[b];
            let image = m * &basis;
            let small = &coords * &image;
            leakage = leakage.max(relative_residual(&image, &(&basis * &small)));
            matrices.push(small);
        }
        if leakage > tol {
            return Err(Error::InvarianceFailure { leakage });
        }
        let commutant = commutant_dim(&matrices, tol);
        let orbit = orbit_check(rep, hash, fs, shape, Some(sign))?;
        let symbol = if sign > 0.0 { '+' } else { '-' };
        out.push(AltIrrep {
            label: format!("{shape}{symbol}"),
            shape: shape.clone(),
            kind: IrrepKind::Split { sign: sign as i8 },
            dim: half,
            matrices,
            commutant_dim: commutant,
            certificate: leakage,
            orbit,
        });
    }
    let minus = out.pop().expect("two signs");
    let plus = out.pop().expect("two signs");
    Ok((plus, minus))
}

/// A named hash-invariant element whose trace is reported per irreducible.
#[derive(Clone, Debug)]
pub struct NamedElement {
    pub name: String,
    pub element: AlgElement,
}

/// `1`, `T_1 + T_1^#` and, when it is hash-invariant, `T_1 T_2`.
pub fn named_elements(rep: &RegularRep, hash: &HashOperator) -> Vec<NamedElement> {
    let gens = rep.generators();
    let mut out = vec![NamedElement { name: "1".into(), element: rep.identity() }];
    if rep.params().n >= 2 {
        out.push(NamedElement { name: "T1+T1#".into(), element: gens.t[0].add(&hash.gens.t[0]) });
    }
    if rep.params().n >= 3 {
        let x = gens.t[0].mul(&gens.t[1]);
        if hash.apply(&x).residual(&x) <= rep.params().tol {
            out.push(NamedElement { name: "T1T2".into(), element: x });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepSummary {
    pub label: String,
    pub kind: IrrepKind,
    pub dim: usize,
    /// Traces of the named hash-invariant elements, as `[re, im]`.
    pub traces: BTreeMap<String, [f64; 2]>,
    pub commutant_dim: usize,
    pub certificate: f64,
    pub orbit: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationChecks {
    /// Computed `dim H_n^#` against `ℓⁿ n!/2`.
    pub dim_formula: AltDimension,
    /// `Σ dim²` as an exact integer, and its target.
    pub sum_squares: (usize, usize),
    pub commutants: bool,
    pub pairwise_distinct: bool,
    /// Smallest distance between two trace vectors.
    pub min_trace_separation: f64,
    pub certificates: bool,
    pub max_certificate: f64,
    pub max_orbit: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub params: AlgebraParams,
    pub irreps: Vec<IrrepSummary>,
    pub checks: ClassificationChecks,
}

impl Classification {
    pub fn passes(&self) -> bool {
        let c = &self.checks;
        c.dim_formula.matches() && c.sum_squares.0 == c.sum_squares.1 && c.commutants && c.pairwise_distinct && c.certificates
    }
}

fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// The irreducible `H_n^#`-modules: one `S^[λ]` per conjugate pair and
/// `S^λ_±` per self-conjugate `λ`, with their certificates.
pub fn classify(rep: &RegularRep) -> Result<(Classification, Vec<AltIrrep>)> {
    let p = rep.params();
    if p.n < 2 {
        return Err(Error::Precondition("classification needs n ≥ 2".into()));
    }
    if rep.coefficients().kind() != CoefficientKind::Alternating {
        return Err(Error::Precondition("classification needs the alternating coefficient system".into()));
    }
    let hash = HashOperator::new(rep)?;
    let dim_formula = alt_dimension(rep, &hash)?;
    let span = alt_spanning_set(&hash);
    let fs = all_idempotents(rep)?;
    let shapes: Vec<Multipartition> = rep.blocks().iter().map(|b| b.shape.clone()).collect();
    let classes = mp_classes(&shapes);
    let built = rep.exec().try_map(&classes, |class| -> Result<Vec<AltIrrep>> {
        if class.size() == 2 {
            Ok(vec![restricted_module(rep, &hash, &span, &fs, &class.rep)?])
        } else {
            let (a, b) = split_modules(rep, &hash, &span, &fs, &class.rep)?;
            Ok(vec![a, b])
        }
    })?;
    let irreps: Vec<AltIrrep> = built.into_iter().flatten().collect();

    let tol = p.tol;
    let traces: Vec<Vec<Scalar>> = irreps.iter().map(AltIrrep::traces).collect();
    let mut min_sep = f64::INFINITY;
    for i in 0..traces.len() {
        for j in i + 1..traces.len() {
            let scale = traces[i].iter().chain(&traces[j]).map(|z| z.norm()).fold(1.0, f64::max);
            let sep = traces[i].iter().zip(&traces[j]).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale;
            min_sep = min_sep.min(sep);
        }
    }
    let sum_squares: usize = irreps.iter().map(|x| x.dim * x.dim).sum();
    let target = (p.algebra_dim() / 2) as usize;
    let max_certificate = irreps.iter().map(|x| x.certificate).fold(0.0, f64::max);
    let max_orbit = irreps.iter().map(|x| x.orbit).fold(0.0, f64::max);
    let checks = ClassificationChecks {
        dim_formula,
        sum_squares: (sum_squares, target),
        commutants: irreps.iter().all(|x| x.commutant_dim == 1),
        pairwise_distinct: min_sep > tol,
        min_trace_separation: if min_sep.is_finite() { clean(min_sep) } else { 0.0 },
        certificates: max_certificate <= tol && max_orbit <= tol,
        max_certificate,
        max_orbit,
    };

    let named = named_elements(rep, &hash);
    let summaries = irreps
        .iter()
        .map(|x| {
            let mut traces = BTreeMap::new();
            for ne in &named {
                let tr = match &x.kind {
                    IrrepKind::Restricted { .. } => block_of(rep, &ne.element, &x.shape).trace(),
                    IrrepKind::Split { sign } => {
                        let b = rep.block_index(&x.shape).expect("shape");
                        let block = &rep.blocks()[b];
                        let m = &ne.element.blocks[b];
                        // trace over the ± subspace: Σ_{t ∈ Std⁺} (m_tt ± m_{t t'})
                        std_plus(&x.shape)
                            .expect("self-conjugate")
                            .iter()
                            .map(|t| {
                                let i = block.index_of(t).expect("tableau");
                                let j = block.index_of(&t.conjugate()).expect("tableau");
                                m[(i, i)] + m[(i, j)] * c(*sign as f64)
                            })
                            .sum()
                    }
                };
                traces.insert(ne.name.clone(), [clean(tr.re), clean(tr.im)]);
            }
            IrrepSummary {
                label: x.label.clone(),
                kind: x.kind.clone(),
                dim: x.dim,
                traces,
                commutant_dim: x.commutant_dim,
                certificate: x.certificate,
                orbit: x.orbit,
            }
        })
        .collect();
    Ok((Classification { params: p.clone(), irreps: summaries, checks }, irreps))
}

/// Number of Ariki–Koike basis elements, used by callers sizing the work.
pub fn ak_size(params: &AlgebraParams) -> usize {
    ak_labels(params.n, params.level).len()
}
