//! Multipartitions, standard multitableaux and the combinatorics built on
//! them: dominance, conjugation, contents, residues and the two conjugation
//! class structures.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::AlgebraParams;

/// An `ℓ`-tuple of partitions. Components are stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParams("a multipartition needs at least one component".into()));
        }
        let mut cleaned = Vec::with_capacity(components.len());
        for mut comp in components {
            while comp.last() == Some(&0) {
                comp.pop();
            }
            if comp.contains(&0) || comp.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidParams(format!("{comp:?} is not a partition")));
            }
            cleaned.push(comp);
        }
        Ok(Multipartition { components: cleaned })
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn conjugate(&self) -> Multipartition {
        let components = self.components.iter().rev().map(|p| conjugate_partition(p)).collect();
        Multipartition { components }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Dominance `self ⊵ other`, comparing the running box counts taken
    /// component by component and row by row.
    pub fn dominates(&self, other: &Multipartition) -> bool {
        assert_eq!(self.level(), other.level(), "dominance needs equal levels");
        let rows = self
            .components
            .iter()
            .chain(other.components.iter())
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .max(1);
        let (mut before_a, mut before_b) = (0usize, 0usize);
        for (pa, pb) in self.components.iter().zip(&other.components) {
            let (mut sa, mut sb) = (before_a, before_b);
            for i in 0..rows {
                sa += pa.get(i).copied().unwrap_or(0);
                sb += pb.get(i).copied().unwrap_or(0);
                if sa < sb {
                    return false;
                }
            }
            before_a += pa.iter().sum::<usize>();
            before_b += pb.iter().sum::<usize>();
        }
        true
    }

    /// Parse `"2,1"`, `"2,1|1"`, `"|1,1"` (empty components allowed) or a
    /// JSON nested list such as `[[2,1],[1]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let comps: Vec<Vec<usize>> = serde_json::from_str(s)
                .map_err(|e| Error::InvalidParams(format!("bad multipartition {s:?}: {e}")))?;
            return Multipartition::new(comps);
        }
        let comps = s
            .split('|')
            .map(|part| {
                let part = part.trim().trim_matches(|c| c == '(' || c == ')');
                if part.is_empty() || part == "∅" {
                    return Ok(Vec::new());
                }
                part.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::InvalidParams(format!("bad part {x:?} in {s:?}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "∅".to_string()
                } else {
                    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

pub fn conjugate_partition(p: &[usize]) -> Vec<usize> {
    let width = p.first().copied().unwrap_or(0);
    (1..=width).map(|j| p.iter().filter(|&&x| x >= j).count()).collect()
}

/// Partitions of `m` in reverse lexicographic order: `(m)` first, `(1^m)` last.
pub fn enum_partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// All `ℓ`-multipartitions of `n`.
///
/// Ordered by the vector of component sizes, larger first components first,
/// and then component by component in reverse lexicographic order. For
/// `ℓ = 1` this is `(n), …, (1^n)`.
pub fn enum_multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    assert!(level >= 1, "level must be positive");
    fn rec(rem: usize, left: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Multipartition>) {
        if left == 1 {
            for p in enum_partitions(rem) {
                cur.push(p);
                out.push(Multipartition { components: cur.clone() });
                cur.pop();
            }
            return;
        }
        for size in (0..=rem).rev() {
            for p in enum_partitions(size) {
                cur.push(p);
                rec(rem - size, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, level, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

/// A standard filling of a multipartition, stored as the cell of each entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StdTableau {
    shape: Multipartition,
    /// `cells[k - 1]` holds entry `k`.
    cells: Vec<Cell>,
}

impl StdTableau {
    /// Build from a filling given as component → row → entries. Entries must
    /// be exactly `1..=n` and increase along rows and down columns.
    pub fn from_filling(filling: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape = Multipartition::new(
            filling.iter().map(|comp| comp.iter().map(Vec::len).collect()).collect(),
        )?;
        let n = shape.size();
        let mut cells = vec![None; n];
        for (c, comp) in filling.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (j, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || cells[k - 1].is_some() {
                        return Err(Error::InvalidParams(format!("filling {filling:?} is not a bijection onto 1..={n}")));
                    }
                    let right_ok = j == 0 || row[j - 1] < k;
                    let down_ok = r == 0 || comp[r - 1][j] < k;
                    if !(right_ok && down_ok) {
                        return Err(Error::InvalidParams(format!("filling {filling:?} is not standard")));
                    }
                    cells[k - 1] = Some(Cell { comp: c, row: r, col: j });
                }
            }
        }
        let cells = cells.into_iter().map(|c| c.expect("bijection checked")).collect();
        Ok(StdTableau { shape, cells })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Cell of entry `k` (1-based).
    pub fn cell(&self, k: usize) -> Cell {
        self.cells[k - 1]
    }

    pub fn filling(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = self
            .shape
            .components()
            .iter()
            .map(|p| p.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (i, cell) in self.cells.iter().enumerate() {
            out[cell.comp][cell.row][cell.col] = i + 1;
        }
        out
    }

    /// Entries read component by component, row by row, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.filling().into_iter().flatten().flatten().collect()
    }

    pub fn conjugate(&self) -> StdTableau {
        let level = self.shape.level();
        let cells = self
            .cells
            .iter()
            .map(|c| Cell { comp: level - 1 - c.comp, row: c.col, col: c.row })
            .collect();
        StdTableau { shape: self.shape.conjugate(), cells }
    }

    /// Shape of the subtableau holding `1..=m`.
    pub fn restricted_shape(&self, m: usize) -> Multipartition {
        let mut comps = vec![Vec::<usize>::new(); self.shape.level()];
        for cell in &self.cells[..m] {
            let comp = &mut comps[cell.comp];
            if comp.len() <= cell.row {
                comp.resize(cell.row + 1, 0);
            }
            comp[cell.row] += 1;
        }
        Multipartition { components: comps }
    }

    /// Dominance of tableaux: every restriction of `self` dominates the
    /// corresponding restriction of `other`.
    pub fn dominates(&self, other: &StdTableau) -> bool {
        assert_eq!(self.n(), other.n());
        (1..=self.n()).all(|m| self.restricted_shape(m).dominates(&other.restricted_shape(m)))
    }

    /// `c_t(k) = κ_l + column − row`.
    pub fn content(&self, k: usize, kappa: &[i64]) -> i64 {
        let cell = self.cell(k);
        kappa[cell.comp] + cell.col as i64 - cell.row as i64
    }

    pub fn content_seq(&self, kappa: &[i64]) -> Vec<i64> {
        (1..=self.n()).map(|k| self.content(k, kappa)).collect()
    }

    pub fn residue_seq(&self, params: &AlgebraParams) -> ResidueSeq {
        ResidueSeq(self.content_seq(&params.kappa).into_iter().map(|c| params.residue(c)).collect())
    }

    /// Axial distance `ρ_r(t) = c_r(t) − c_{r+1}(t)`.
    pub fn axial_distance(&self, r: usize, kappa: &[i64]) -> i64 {
        self.content(r, kappa) - self.content(r + 1, kappa)
    }

    /// `s_r · t`: the filling with `r` and `r + 1` exchanged, or `None` when
    /// that filling is not standard (the two entries share a row or column).
    pub fn apply_transposition(&self, r: usize) -> Option<StdTableau> {
        assert!(r >= 1 && r < self.n(), "transposition index out of range");
        let (a, b) = (self.cells[r - 1], self.cells[r]);
        if a.comp == b.comp && (a.row == b.row || a.col == b.col) {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(r - 1, r);
        Some(StdTableau { shape: self.shape.clone(), cells })
    }

    pub fn cmp_reading_word(&self, other: &StdTableau) -> Ordering {
        self.reading_word().cmp(&other.reading_word())
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() >= 10;
        let comps: Vec<String> = self
            .filling()
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    return "∅".to_string();
                }
                comp.iter()
                    .map(|row| {
                        let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        items.join(if wide { "," } else { "" })
                    })
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

impl Serialize for StdTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let filling = self.filling();
        let mut seq = serializer.serialize_seq(Some(filling.len()))?;
        for comp in &filling {
            seq.serialize_element(comp)?;
        }
        seq.end()
    }
}

/// All standard `λ`-tableaux sorted by row reading word, so the initial
/// tableau comes first and the final tableau last.
pub fn enum_std_tableaux(shape: &Multipartition) -> Vec<StdTableau> {
    fn rec(
        shape: &Multipartition,
        filled: &mut Vec<Vec<usize>>,
        cells: &mut Vec<Cell>,
        n: usize,
        out: &mut Vec<StdTableau>,
    ) {
        if cells.len() == n {
            out.push(StdTableau { shape: shape.clone(), cells: cells.clone() });
            return;
        }
        for (c, comp) in shape.components().iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                let cur = filled[c][r];
                if cur < len && (r == 0 || filled[c][r - 1] > cur) {
                    filled[c][r] += 1;
                    cells.push(Cell { comp: c, row: r, col: cur });
                    rec(shape, filled, cells, n, out);
                    cells.pop();
                    filled[c][r] -= 1;
                }
            }
        }
    }
    let mut filled: Vec<Vec<usize>> = shape.components().iter().map(|p| vec![0; p.len()]).collect();
    let mut out = Vec::new();
    rec(shape, &mut filled, &mut Vec::new(), shape.size(), &mut out);
    out.sort_by_cached_key(StdTableau::reading_word);
    out
}

/// `t^λ`: entries `1..n` along rows, starting from the first component.
pub fn initial_tableau(shape: &Multipartition) -> StdTableau {
    let mut cells = Vec::with_capacity(shape.size());
    for (c, comp) in shape.components().iter().enumerate() {
        for (r, &len) in comp.iter().enumerate() {
            cells.extend((0..len).map(|col| Cell { comp: c, row: r, col }));
        }
    }
    StdTableau { shape: shape.clone(), cells }
}

/// `t_λ`: entries `1..n` down columns, starting from the last component.
pub fn final_tableau(shape: &Multipartition) -> StdTableau {
    let mut cells = Vec::with_capacity(shape.size());
    for (c, comp) in shape.components().iter().enumerate().rev() {
        for (col, &height) in conjugate_partition(comp).iter().enumerate() {
            cells.extend((0..height).map(|row| Cell { comp: c, row, col }));
        }
    }
    StdTableau { shape: shape.clone(), cells }
}

/// `Std(λ)^+`: one tableau from each pair `{t, t'}` of a self-conjugate
/// shape, choosing the smaller row reading word.
pub fn std_plus(shape: &Multipartition) -> Result<Vec<StdTableau>> {
    if !shape.is_self_conjugate() {
        return Err(Error::Precondition(format!("{shape} is not self-conjugate")));
    }
    let all = enum_std_tableaux(shape);
    let mut out = Vec::with_capacity(all.len() / 2);
    for t in &all {
        let tc = t.conjugate();
        match t.cmp_reading_word(&tc) {
            Ordering::Less => out.push(t.clone()),
            Ordering::Greater => {}
            Ordering::Equal => {
                return Err(Error::Domain(format!("tableau {t} equals its own conjugate")));
            }
        }
    }
    Ok(out)
}

/// A residue sequence in `(Z/eZ)^n`, or a content sequence when `e` is
/// infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueSeq(pub Vec<i64>);

impl ResidueSeq {
    /// `−i`, reduced mod `e` when `e` is finite.
    pub fn negate(&self, e: Option<u32>) -> ResidueSeq {
        ResidueSeq(
            self.0
                .iter()
                .map(|&x| match e {
                    Some(e) => (-x).rem_euclid(e as i64),
                    None => -x,
                })
                .collect(),
        )
    }
}

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// A class `{x, x'}` under an involution; `partner` is `None` for a fixed
/// point. `rep` is the canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Class<T> {
    pub rep: T,
    pub partner: Option<T>,
}

impl<T> Class<T> {
    pub fn size(&self) -> usize {
        if self.partner.is_some() {
            2
        } else {
            1
        }
    }
}

/// Classes `[i] = {i, −i}` of the given sequences, representatives being the
/// lexicographically smaller member. The input need not be closed under
/// negation; partners are computed, not looked up.
pub fn classes_of_sequences<I>(seqs: I, e: Option<u32>) -> Vec<Class<ResidueSeq>>
where
    I: IntoIterator<Item = ResidueSeq>,
{
    let mut classes = BTreeMap::new();
    for s in seqs {
        let neg = s.negate(e);
        let (rep, partner) = if neg == s {
            (s, None)
        } else if s < neg {
            (s, Some(neg))
        } else {
            (neg, Some(s))
        };
        classes.entry(rep.clone()).or_insert(Class { rep, partner });
    }
    classes.into_values().collect()
}

/// The partition of all of `(Z/eZ)^n` into classes `{i, −i}`.
pub fn residue_classes(n: usize, e: u32) -> Result<Vec<Class<ResidueSeq>>> {
    if e <= 2 {
        return Err(Error::InvalidParams(format!("residue classes need e > 2, got {e}")));
    }
    let total = (e as u128).checked_pow(n as u32).filter(|t| *t <= 10_000_000).ok_or_else(|| {
        Error::InvalidParams(format!("{e}^{n} residue sequences is too many to enumerate"))
    })?;
    let seqs = (0..total).map(|mut idx| {
        let mut s = vec![0i64; n];
        for slot in s.iter_mut().rev() {
            *slot = (idx % e as u128) as i64;
            idx /= e as u128;
        }
        ResidueSeq(s)
    });
    Ok(classes_of_sequences(seqs, Some(e)))
}

/// Classes `[λ] = {λ, λ'}` of the given multipartitions. The representative
/// is whichever member comes first in the input order.
pub fn mp_classes(shapes: &[Multipartition]) -> Vec<Class<Multipartition>> {
    let position: HashMap<&Multipartition, usize> = shapes.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut out = Vec::new();
    for (i, s) in shapes.iter().enumerate() {
        let conj = s.conjugate();
        if conj == *s {
            out.push(Class { rep: s.clone(), partner: None });
        } else if position.get(&conj).is_none_or(|&j| j > i) {
            out.push(Class { rep: s.clone(), partner: Some(conj) });
        }
    }
    out
}
