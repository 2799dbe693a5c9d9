use std::collections::BTreeMap;

use super::linear::{add_entry, LinearCombo, Tensor2};
use super::structure::StructBialgebra;
use crate::error::{Error, Result};
use crate::groups::Element;

/// Index of `b_i # e_g` in the bosonization basis.

/// The ordinary bialgebra `H # kG` built from a color bialgebra graded by `G`.
///
/// Product `(x#e_g)(y#e_h) = β(g,|y|)·xy#e_{gh}`, coproduct
/// `Δ(c#e_g) = Σ c₁#e_{|c₂|g} ⊗ c₂#e_g`. The result has no grading.
pub fn bosonize(h: &StructBialgebra) -> Result<StructBialgebra> {
    let gr = h.grading.as_ref().ok_or_else(|| Error::Invalid("bosonization needs a grading".into()))?;
    let grp = gr.group();
    let els = grp.elements();
    let m = els.len();
    let n = h.dim;
    let dim = n * m;
    let idx = |i: usize, g: &Element| i * m + grp.index(g);

    let mut mult = vec![BTreeMap::new(); dim * dim];
    for i in 0..n {
        for (gi, g) in els.iter().enumerate() {
            for j in 0..n {
                let coef = h.root(gr.beta.eval(g, &gr.degrees[j]));
                for (hi, hh) in els.iter().enumerate() {
                    let gh = grp.op(g, hh);
                    let slot = &mut mult[(i * m + gi) * dim + j * m + hi];
                    for (&k, c) in h.mul_basis(i, j) {
                        add_entry(slot, idx(k, &gh), &(c * &coef));
                    }
                }
            }
        }
    }
    let mut comult = vec![BTreeMap::new(); dim];
    for i in 0..n {
        for (gi, g) in els.iter().enumerate() {
            let slot: &mut Tensor2 = &mut comult[i * m + gi];
            for (&(a, b), c) in &h.comult[i] {
                let shifted = grp.op(&gr.degrees[b], g);
                add_entry(slot, (idx(a, &shifted), b * m + gi), c);
            }
        }
    }
    let unit: LinearCombo = h.unit.iter().map(|(&k, c)| (k * m, c.clone())).collect();
    let counit = (0..dim).map(|k| h.counit[k / m].clone()).collect();
    StructBialgebra::new(dim, mult, comult, unit, counit, None)
}

/// Closed-form antipode of `H # kG` from the antipode `s` of `H`:
/// `S(x#e_g) = β(g⁻¹|x|⁻¹, |x|)·S(x)#e_{g⁻¹|x|⁻¹}`.
pub fn bosonized_antipode(h: &StructBialgebra, s: &[LinearCombo]) -> Result<Vec<LinearCombo>> {
    let gr = h.grading.as_ref().ok_or_else(|| Error::Invalid("bosonization needs a grading".into()))?;
    let grp = gr.group();
    let els = grp.elements();
    let m = els.len();
    let mut out = Vec::with_capacity(h.dim * m);
    for i in 0..h.dim {
        let d = &gr.degrees[i];
        for g in &els {
            let target = grp.inv(&grp.op(g, d));
            let coef = h.root(gr.beta.eval(&target, d));
            let t = grp.index(&target);
            out.push(s[i].iter().map(|(&k, c)| (k * m + t, c * &coef)).collect());
        }
    }
    Ok(out)
}
