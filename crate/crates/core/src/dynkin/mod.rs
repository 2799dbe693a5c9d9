//! Generalized and colored Dynkin diagrams, their isomorphism test, and renderers.
//!
//! A generalized diagram has one vertex per index labeled `q_ii` and an edge `i — j`
//! labeled `q_ij q_ji` whenever that product is not 1. A colored diagram reads the twisted
//! matrix instead, carries the degree `t_i` on each vertex, and adds an unlabeled edge where
//! the twisted product is 1 but `β(t_i, t_j)β(t_j, t_i)` is not.

mod dot;
mod text;

use serde::Serialize;

use crate::datum::{Datum, ScalarMatrix};
use crate::error::{Error, Result};
use crate::groups::{Element, FinAbGroup};
use crate::scalars::Scalar;

pub use dot::{emit_dot, parse_dot};
pub use text::{glyph_legend, render_text};

/// Largest rank accepted by [`isomorphic`].
pub const MAX_ISO_RANK: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Generalized,
    Colored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub label: Scalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<Element>,
}

/// An edge `i — j` with `i < j`; `label == None` marks an unlabeled (color-only) edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub label: Option<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub kind: DiagramKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<FinAbGroup>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl Diagram {
    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    /// `adj[i][j]`: `None` for no edge, `Some(label)` otherwise.
    fn adjacency(&self) -> Vec<Vec<Option<Option<Scalar>>>> {
        let n = self.rank();
        let mut adj = vec![vec![None; n]; n];
        for e in &self.edges {
            adj[e.i][e.j] = Some(e.label.clone());
            adj[e.j][e.i] = Some(e.label.clone());
        }
        adj
    }

    /// Applies a map to every vertex degree.
    pub fn map_degrees(&self, f: impl Fn(&Element) -> Element) -> Diagram {
        let mut d = self.clone();
        for v in &mut d.vertices {
            v.degree = v.degree.as_ref().map(&f);
        }
        d
    }
}

/// Diagram of a braiding matrix.
pub fn generalized_diagram(q: &ScalarMatrix) -> Diagram {
    let n = q.rank();
    let vertices = (0..n)
        .map(|i| Vertex { label: q.get(i, i).clone(), degree: None })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let prod = q.get(i, j) * q.get(j, i);
            if !prod.is_one() {
                edges.push(Edge { i, j, label: Some(prod) });
            }
        }
    }
    Diagram { kind: DiagramKind::Generalized, group: None, vertices, edges }
}

/// Colored diagram of a datum, read from the twisted matrix and the degrees.
pub fn colored_diagram(d: &Datum) -> Diagram {
    let n = d.rank();
    let qt = d.qt();
    let t = d.t();
    let vertices = (0..n)
        .map(|i| Vertex { label: qt.get(i, i).clone(), degree: Some(t[i].clone()) })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let prod = qt.get(i, j) * qt.get(j, i);
            if !prod.is_one() {
                edges.push(Edge { i, j, label: Some(prod) });
            } else if !(d.beta().eval(&t[i], &t[j]) + d.beta().eval(&t[j], &t[i])).is_zero() {
                edges.push(Edge { i, j, label: None });
            }
        }
    }
    Diagram { kind: DiagramKind::Colored, group: Some(d.group().clone()), vertices, edges }
}

/// Label-preserving graph isomorphism, by backtracking over vertex bijections.
pub fn isomorphic(a: &Diagram, b: &Diagram) -> Result<bool> {
    if a.rank() > MAX_ISO_RANK || b.rank() > MAX_ISO_RANK {
        return Err(Error::SizeLimit(format!("isomorphism test limited to rank {MAX_ISO_RANK}")));
    }
    if a.kind != b.kind || a.rank() != b.rank() || a.edges.len() != b.edges.len() {
        return Ok(false);
    }
    let (aa, ab) = (a.adjacency(), b.adjacency());
    let mut map = vec![usize::MAX; a.rank()];
    let mut used = vec![false; b.rank()];
    Ok(extend(a, b, &aa, &ab, &mut map, &mut used, 0))
}

fn extend(
    a: &Diagram,
    b: &Diagram,
    aa: &[Vec<Option<Option<Scalar>>>],
    ab: &[Vec<Option<Option<Scalar>>>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    if k == a.rank() {
        return true;
    }
    for c in 0..b.rank() {
        if used[c] || a.vertices[k] != b.vertices[c] {
            continue;
        }
        if (0..k).any(|m| aa[k][m] != ab[c][map[m]]) {
            continue;
        }
        map[k] = c;
        used[c] = true;
        if extend(a, b, aa, ab, map, used, k + 1) {
            return true;
        }
        used[c] = false;
    }
    false
}

/// Isomorphism after relabeling degrees by some automorphism in `autos` (generator images).
pub fn isomorphic_modulo(a: &Diagram, b: &Diagram, autos: &[Vec<Element>]) -> Result<bool> {
    let Some(g) = a.group.as_ref() else {
        return isomorphic(a, b);
    };
    for imgs in autos {
        if isomorphic(&a.map_degrees(|x| g.apply_hom(imgs, x)), b)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Groups orbit nodes whose (generalized, colored) diagram pairs are isomorphic after a
/// degree relabeling by one of `autos`. Returns the member lists, in order of first node.
pub fn diagram_classes(nodes: &[Datum], autos: &[Vec<Element>]) -> Result<Vec<Vec<usize>>> {
    let mut reps: Vec<(Diagram, Diagram)> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (k, d) in nodes.iter().enumerate() {
        let gd = generalized_diagram(d.q());
        let cd = colored_diagram(d);
        for (c, (rg, rc)) in reps.iter().enumerate() {
            if isomorphic(&gd, rg)? && isomorphic_modulo(&cd, rc, autos)? {
                classes[c].push(k);
                continue 'outer;
            }
        }
        reps.push((gd, cd));
        classes.push(vec![k]);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Bicharacter;
    use crate::scalars::Rational01;

    fn klein_datum() -> Datum {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let (h, z) = (Rational01::HALF, Rational01::ZERO);
        let beta = Bicharacter::new(g.clone(), vec![vec![h, h], vec![z, h]]).unwrap();
        let q = ScalarMatrix::parse(&[
            &["q", "q^-1", "1", "1"],
            &["1", "-1", "-1", "1"],
            &["1", "1", "-1", "-1*q"],
            &["1", "1", "1", "-1*q^-1"],
        ])
        .unwrap();
        let t = vec![g.identity(), g.generator(0), g.generator(1), g.generator(0)];
        Datum::new(q, beta, t).unwrap()
    }

    #[test]
    fn colored_diagram_has_unlabeled_edge() {
        let d = klein_datum();
        let cd = colored_diagram(&d);
        let labels: Vec<String> = cd.vertices.iter().map(|v| v.label.to_string()).collect();
        assert_eq!(labels, ["q", "1", "1", "q^-1"]);
        assert_eq!(cd.edges.len(), 3);
        assert_eq!(cd.edges[1], Edge { i: 1, j: 2, label: None });
        assert_eq!(cd.edges[2].label.as_ref().unwrap().to_string(), "q");
        let gd = generalized_diagram(d.q());
        assert_eq!(gd.edges.iter().map(|e| e.label.clone().unwrap().to_string()).collect::<Vec<_>>(), ["q^-1", "-1", "-1*q"]);
    }

    #[test]
    fn isomorphism_sees_through_relabeling() {
        let q = ScalarMatrix::parse(&[&["q", "q^-1", "1"], &["1", "-1", "1"], &["1", "-1", "r"]]).unwrap();
        let p = ScalarMatrix::parse(&[&["r", "1", "-1"], &["1", "q", "q^-1"], &["1", "1", "-1"]]).unwrap();
        assert!(isomorphic(&generalized_diagram(&q), &generalized_diagram(&p)).unwrap());
        let p2 = ScalarMatrix::parse(&[&["r", "1", "1"], &["1", "q", "q^-1"], &["-1", "1", "-1"]]).unwrap();
        assert!(isomorphic(&generalized_diagram(&q), &generalized_diagram(&p2)).unwrap());
        let p3 = ScalarMatrix::parse(&[&["r", "q", "1"], &["1", "q", "q^-1"], &["-1", "1", "-1"]]).unwrap();
        assert!(!isomorphic(&generalized_diagram(&q), &generalized_diagram(&p3)).unwrap());
    }

    #[test]
    fn size_limit() {
        let rows: Vec<Vec<Scalar>> = (0..11)
            .map(|i| (0..11).map(|j| if i == j { Scalar::minus_one() } else { Scalar::one() }).collect())
            .collect();
        let d = generalized_diagram(&ScalarMatrix::new(rows).unwrap());
        assert!(matches!(isomorphic(&d, &d), Err(Error::SizeLimit(_))));
    }
}

#[cfg(test)]
mod render_tests {
    use super::*;
    use crate::groups::Bicharacter;
    use crate::scalars::Rational01;

    fn c3_datum() -> Datum {
        let g = FinAbGroup::cyclic(3);
        let beta = Bicharacter::new(g.clone(), vec![vec![Rational01::new(1, 3)]]).unwrap();
        let qt = ScalarMatrix::parse(&[&["1", "q^-1"], &["1", "q"]]).unwrap();
        Datum::from_twisted(&qt, beta, vec![g.generator(0), g.identity()]).unwrap()
    }

    #[test]
    fn chain_text() {
        let d = c3_datum();
        assert_eq!(render_text(&generalized_diagram(d.q())), "○^ω —q^-1— ○^q");
        assert_eq!(
            render_text(&colored_diagram(&d)),
            "●^1 —q^-1— ○^q\nlegend: ○=(0) ●=(1) ⊗=(2)"
        );
    }

    #[test]
    fn dot_round_trip() {
        let d = c3_datum();
        for dia in [generalized_diagram(d.q()), colored_diagram(&d)] {
            let txt = emit_dot(&dia);
            assert_eq!(parse_dot(&txt).unwrap(), dia);
            assert_eq!(emit_dot(&parse_dot(&txt).unwrap()), txt);
        }
    }
}
