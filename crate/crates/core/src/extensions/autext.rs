use serde::Serialize;

use super::finite_group::FiniteGroup;
use super::matched::{basis_index, build_bicrossed, MatchedPair, Sigma, Tau};
use super::monomial::MonomialMap;
use crate::error::{Error, Result};
use crate::hopf::is_bialgebra_automorphism;
use crate::scalars::Rational01;

/// Largest group order accepted by [`enumerate_aut_ext`].
pub const MAX_ENUMERATION_ORDER: usize = 12;

/// Largest number of solutions returned for one `(g, h)`.
pub const MAX_SOLUTIONS: usize = 1 << 16;

/// An automorphism of `k^L # kΓ` preserving `k^L`:
/// `δ_l e_γ ↦ f̃_γ(g(l))·δ_{g(l)} e_{h(γ)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtAutomorphism {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
    /// `ftilde[γ][l] = f̃_γ(l)`.
    pub ftilde: Vec<Vec<Rational01>>,
}

impl ExtAutomorphism {
    pub fn to_map(&self, mp: &MatchedPair) -> MonomialMap {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        let mut perm = vec![0; nl * ng];
        let mut coef = vec![Rational01::ZERO; nl * ng];
        for l in 0..nl {
            for x in 0..ng {
                let gl = self.g[l];
                perm[basis_index(mp, l, x)] = basis_index(mp, gl, self.h[x]);
                coef[basis_index(mp, l, x)] = self.ftilde[x][gl];
            }
        }
        MonomialMap { perm, coef }
    }

    /// Reads `(g, h, f̃)` back from a monomial map; errors if the map does not have that shape.
    pub fn from_map(mp: &MatchedPair, f: &MonomialMap) -> Result<Self> {
        let (nl, ng) = (mp.l.order(), mp.gamma.order());
        if f.dim() != nl * ng {
            return Err(Error::DimensionMismatch("map dimension differs from |L|·|Γ|".into()));
        }
        let mut g = vec![usize::MAX; nl];
        let mut h = vec![usize::MAX; ng];
        let mut ftilde = vec![vec![Rational01::ZERO; nl]; ng];
        let bad = || Error::Invalid("map does not preserve k^L".into());
        for l in 0..nl {
            for x in 0..ng {
                let k = basis_index(mp, l, x);
                let (gl, hx) = (f.perm[k] / ng, f.perm[k] % ng);
                for (slot, v) in [(&mut g[l], gl), (&mut h[x], hx)] {
                    if *slot != usize::MAX && *slot != v {
                        return Err(bad());
                    }
                    *slot = v;
                }
                ftilde[x][gl] = f.coef[k];
            }
        }
        Ok(ExtAutomorphism { g, h, ftilde })
    }
}

/// `g(l)◁h(γ) = g(l◁γ)` and `g(l)▷h(γ) = h(l▷γ)` for all `l`, `γ`.
pub fn condition_i(mp: &MatchedPair, g: &[usize], h: &[usize]) -> bool {
    (0..mp.l.order()).all(|l| {
        (0..mp.gamma.order())
            .all(|x| mp.la(g[l], h[x]) == g[mp.la(l, x)] && mp.ra(g[l], h[x]) == h[mp.ra(l, x)])
    })
}

/// The smallest root bound that can hold every solution value: `lcm(exp L, exp Γ, |L|)`.
pub fn default_root_bound(mp: &MatchedPair) -> u64 {
    [mp.l.exponent(), mp.gamma.exponent(), mp.l.order() as u64].into_iter().fold(1, num_integer::lcm)
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifiedAutomorphism {
    #[serde(flatten)]
    pub automorphism: ExtAutomorphism,
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutExtSolution {
    pub root_bound: u64,
    pub condition_i: bool,
    pub solutions: Vec<CertifiedAutomorphism>,
    /// Set when the root bound is below [`default_root_bound`], so the list may be incomplete.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub advisory: Option<String>,
}

/// `v[a] = v[b] + v[c]` over `Z/N`, or `v[a] = 0` when `b` and `c` are absent.
#[derive(Clone, Copy, Debug)]
struct Relation {
    a: usize,
    b: Option<usize>,
    c: Option<usize>,
}

impl Relation {
    /// Variables with their net coefficients in `v_a − v_b − v_c = 0`.
    fn terms(&self) -> Vec<(usize, i64)> {
        let mut t: Vec<(usize, i64)> = vec![(self.a, 1)];
        for v in [self.b, self.c].into_iter().flatten() {
            match t.iter_mut().find(|(x, _)| *x == v) {
                Some(e) => e.1 -= 1,
                None => t.push((v, -1)),
            }
        }
        t.retain(|&(_, k)| k != 0);
        t
    }
}

/// Propagates single unknowns with coefficient ±1; returns false on contradiction.
fn propagate(rels: &[Vec<(usize, i64)>], vals: &mut [Option<u64>], n: u64) -> bool {
    let ni = n as i64;
    loop {
        let mut changed = false;
        for terms in rels {
            let mut sum = 0i64;
            let mut unknown = None;
            let mut count = 0;
            for &(v, k) in terms {
                match vals[v] {
                    Some(x) => sum += k * x as i64,
                    None => {
                        count += 1;
                        unknown = Some((v, k));
                    }
                }
            }
            match (count, unknown) {
                (0, _) if sum.rem_euclid(ni) != 0 => return false,
                (1, Some((v, k))) if k == 1 || k == -1 => {
                    vals[v] = Some((-k * sum).rem_euclid(ni) as u64);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(rels: &[Vec<(usize, i64)>], vals: Vec<Option<u64>>, n: u64, out: &mut Vec<Vec<u64>>) -> Result<()> {
    let mut vals = vals;
    if !propagate(rels, &mut vals, n) {
        return Ok(());
    }
    match vals.iter().position(|v| v.is_none()) {
        None => {
            if out.len() >= MAX_SOLUTIONS {
                return Err(Error::SizeLimit(format!("more than {MAX_SOLUTIONS} solutions")));
            }
            out.push(vals.into_iter().map(|v| v.unwrap()).collect());
            Ok(())
        }
        Some(i) => {
            for x in 0..n {
                let mut next = vals.clone();
                next[i] = Some(x);
                search(rels, next, n, out)?;
            }
            Ok(())
        }
    }
}

/// All `f̃` with values in `μ_N` satisfying the four cocycle conditions for `(g, h)`, each
/// certified as a bialgebra automorphism of `k^L # kΓ`.
pub fn aut_ext_solve(mp: &MatchedPair, g: &[usize], h: &[usize], n: u64) -> Result<AutExtSolution> {
    if !mp.l.is_automorphism(g) || !mp.gamma.is_automorphism(h) {
        return Err(Error::Invalid("(g, h) must be automorphisms of L and Γ".into()));
    }
    if n == 0 {
        return Err(Error::Domain("root bound must be positive".into()));
    }
    let min = default_root_bound(mp);
    let advisory = (n < min).then(|| format!("root bound {n} is below {min}; solutions may be missing"));
    if !condition_i(mp, g, h) {
        return Ok(AutExtSolution { root_bound: n, condition_i: false, solutions: Vec::new(), advisory });
    }
    let (lg, gg) = (&mp.l, &mp.gamma);
    let (nl, ng) = (lg.order(), gg.order());
    let var = |x: usize, l: usize| x * nl + l;
    let ginv = FiniteGroup::inverse_permutation(g);
    let mut rels = Vec::new();
    for x in 0..ng {
        rels.push(Relation { a: var(x, lg.identity()), b: None, c: None });
    }
    for l in 0..nl {
        rels.push(Relation { a: var(gg.identity(), l), b: None, c: None });
    }
    for x in 0..ng {
        for y in 0..ng {
            for l in 0..nl {
                rels.push(Relation {
                    a: var(gg.op(x, y), l),
                    b: Some(var(x, l)),
                    c: Some(var(y, mp.la(l, h[x]))),
                });
            }
        }
    }
    for x in 0..ng {
        for l in 0..nl {
            for t in 0..nl {
                rels.push(Relation {
                    a: var(x, lg.op(l, t)),
                    b: Some(var(mp.ra(ginv[t], x), l)),
                    c: Some(var(x, t)),
                });
            }
        }
    }
    let terms: Vec<Vec<(usize, i64)>> = rels.iter().map(Relation::terms).collect();
    let mut raw = Vec::new();
    search(&terms, vec![None; nl * ng], n, &mut raw)?;

    let h_alg = build_bicrossed(mp, &Sigma::trivial(mp), &Tau::trivial(mp), None)?.algebra;
    let solutions = raw
        .into_iter()
        .map(|vals| {
            let ftilde =
                (0..ng).map(|x| (0..nl).map(|l| Rational01::new(vals[var(x, l)] as i64, n)).collect()).collect();
            let automorphism = ExtAutomorphism { g: g.to_vec(), h: h.to_vec(), ftilde };
            let certified = is_bialgebra_automorphism(&h_alg, &automorphism.to_map(mp).to_columns());
            CertifiedAutomorphism { automorphism, certified }
        })
        .collect();
    Ok(AutExtSolution { root_bound: n, condition_i: true, solutions, advisory })
}

#[derive(Clone, Debug, Serialize)]
pub struct AutExtEntry {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
    #[serde(flatten)]
    pub solution: AutExtSolution,
}

/// Runs the solver over every pair in `Aut L × Aut Γ` satisfying condition (i).
pub fn enumerate_aut_ext(mp: &MatchedPair, n: u64) -> Result<Vec<AutExtEntry>> {
    if mp.l.order() > MAX_ENUMERATION_ORDER || mp.gamma.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit(format!("enumeration needs |L|, |Γ| ≤ {MAX_ENUMERATION_ORDER}")));
    }
    let mut out = Vec::new();
    for g in mp.l.automorphisms() {
        for h in mp.gamma.automorphisms() {
            if condition_i(mp, &g, &h) {
                let solution = aut_ext_solve(mp, &g, &h, n)?;
                out.push(AutExtEntry { g: g.clone(), h, solution });
            }
        }
    }
    Ok(out)
}
