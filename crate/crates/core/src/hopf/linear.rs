//! Sparse vectors and exact elimination over the cyclotomic field.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

/// A sparse vector indexed by basis position; absent entries are zero.
pub type LinearCombo = BTreeMap<usize, Cyclotomic>;

/// A sparse element of `H ⊗ H`.
pub type Tensor2 = BTreeMap<(usize, usize), Cyclotomic>;

/// A sparse element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Cyclotomic>;

/// `acc[k] += c` keeping the map free of zeros.
pub fn add_entry<K: Ord + Copy>(acc: &mut BTreeMap<K, Cyclotomic>, k: K, c: &Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(v) => {
            *v = &*v + c;
            if v.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, c.clone());
        }
    }
}

/// `acc += c · v`.
pub fn axpy<K: Ord + Copy>(acc: &mut BTreeMap<K, Cyclotomic>, c: &Cyclotomic, v: &BTreeMap<K, Cyclotomic>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_entry(acc, *k, &(c * x));
    }
}

pub fn scaled<K: Ord + Copy>(c: &Cyclotomic, v: &BTreeMap<K, Cyclotomic>) -> BTreeMap<K, Cyclotomic> {
    let mut out = BTreeMap::new();
    axpy(&mut out, c, v);
    out
}

/// Incremental row echelon form over sparse vectors, remembering how each stored row was
/// built from the inputs so that linear dependencies can be read back.
pub struct Echelon {
    rows: Vec<(usize, LinearCombo, LinearCombo)>,
    inputs: usize,
    conductor: u64,
}

impl Echelon {
    pub fn new(conductor: u64) -> Self {
        Echelon { rows: Vec::new(), inputs: 0, conductor }
    }

    /// Adds the next input vector. Returns `Some(c)` with `v = Σ c_j v_j` over earlier inputs
    /// when `v` is dependent; otherwise stores it and returns `None`.
    pub fn push(&mut self, v: &LinearCombo) -> Option<LinearCombo> {
        let idx = self.inputs;
        self.inputs += 1;
        let mut r = v.clone();
        let mut combo: LinearCombo = BTreeMap::new();
        add_entry(&mut combo, idx, &Cyclotomic::one(self.conductor));
        for (p, row, rc) in &self.rows {
            if let Some(c) = r.get(p).cloned() {
                let neg = -&c;
                axpy(&mut r, &neg, row);
                axpy(&mut combo, &neg, rc);
            }
        }
        match r.iter().next() {
            None => {
                // 0 = v_idx + Σ combo_j v_j  ⇒  v_idx = −Σ combo_j v_j
                combo.remove(&idx);
                Some(combo.into_iter().map(|(k, c)| (k, -c)).collect())
            }
            Some((&p, c)) => {
                let inv = c.inv().expect("nonzero pivot");
                let row = scaled(&inv, &r);
                let rc = scaled(&inv, &combo);
                // keep the stored rows fully reduced in column p
                for (_, other, oc) in self.rows.iter_mut() {
                    if let Some(c) = other.get(&p).cloned() {
                        let neg = -&c;
                        axpy(other, &neg, &row);
                        axpy(oc, &neg, &rc);
                    }
                }
                self.rows.push((p, row, rc));
                None
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Solves `Σ_k rows[e][k] x_k = rhs[e]` exactly. Errors when inconsistent or when the
/// solution is not unique.
pub fn solve_unique(rows: &[(LinearCombo, Cyclotomic)], nvars: usize, conductor: u64) -> Result<Vec<Cyclotomic>> {
    // augmented column `nvars` carries the right-hand side
    let mut pivots: Vec<(usize, LinearCombo)> = Vec::new();
    for (row, rhs) in rows {
        let mut r = row.clone();
        add_entry(&mut r, nvars, rhs);
        for (p, prow) in &pivots {
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &(-&c), prow);
            }
        }
        match r.iter().next() {
            None => continue,
            Some((&p, _)) if p == nvars => {
                return Err(Error::NoAntipode("linear system is inconsistent".into()));
            }
            Some((&p, c)) => {
                let inv = c.inv().expect("nonzero pivot");
                let r = scaled(&inv, &r);
                for (_, other) in pivots.iter_mut() {
                    if let Some(c) = other.get(&p).cloned() {
                        axpy(other, &(-&c), &r);
                    }
                }
                pivots.push((p, r));
            }
        }
    }
    if pivots.len() < nvars {
        return Err(Error::NoAntipode(format!(
            "solution not unique: rank {} < {nvars}",
            pivots.len()
        )));
    }
    let mut x = vec![Cyclotomic::zero(conductor); nvars];
    for (p, r) in pivots {
        x[p] = r.get(&nvars).cloned().unwrap_or_else(|| Cyclotomic::zero(conductor));
    }
    Ok(x)
}

/// Inverse of a square matrix given by columns (`cols[j]` = image of basis vector `j`).
pub fn invert_columns(cols: &[LinearCombo], conductor: u64) -> Result<Vec<LinearCombo>> {
    let n = cols.len();
    // solve A X = I column by column through one elimination on the row form of A
    let mut rows: Vec<LinearCombo> = vec![BTreeMap::new(); n];
    for (j, c) in cols.iter().enumerate() {
        for (&i, v) in c {
            rows[i].insert(j, v.clone());
        }
    }
    // augment with identity in columns n..2n
    for (i, r) in rows.iter_mut().enumerate() {
        r.insert(n + i, Cyclotomic::one(conductor));
    }
    let mut done: Vec<(usize, LinearCombo)> = Vec::new();
    for mut r in rows {
        for (p, prow) in &done {
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &(-&c), prow);
            }
        }
        match r.iter().next() {
            Some((&p, c)) if p < n => {
                let inv = c.inv().expect("nonzero pivot");
                let r = scaled(&inv, &r);
                for (_, other) in done.iter_mut() {
                    if let Some(c) = other.get(&p).cloned() {
                        axpy(other, &(-&c), &r);
                    }
                }
                done.push((p, r));
            }
            _ => return Err(Error::Invalid("matrix is singular".into())),
        }
    }
    // row with pivot p reads: x_p = Σ_i r[n+i] e_i, i.e. (A^{-1})[p][i]
    let mut inv_cols: Vec<LinearCombo> = vec![BTreeMap::new(); n];
    for (p, r) in done {
        for (&k, v) in r.range(n..) {
            inv_cols[k - n].insert(p, v.clone());
        }
    }
    Ok(inv_cols)
}
