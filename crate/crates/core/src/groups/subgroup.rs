use std::collections::BTreeSet;

use super::finab::Projection;
use super::{Element, FinAbGroup};

/// A subgroup, stored as its full element set (sorted by group index).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    group: FinAbGroup,
    elements: Vec<Element>,
}

impl Subgroup {
    pub(crate) fn from_elements(group: FinAbGroup, mut elements: Vec<Element>) -> Self {
        elements.sort_by_key(|e| group.index(e));
        elements.dedup();
        Subgroup { group, elements }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &FinAbGroup, gens: &[Element]) -> Self {
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        let mut frontier = vec![group.identity()];
        seen.insert(group.identity());
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = group.op(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Subgroup::from_elements(group.clone(), seen.into_iter().collect())
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        Subgroup::from_elements(group.clone(), group.elements())
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search_by_key(&self.group.index(e), |x| self.group.index(x)).is_ok()
    }

    pub fn is_subset_of(&self, o: &Subgroup) -> bool {
        self.elements.iter().all(|e| o.contains(e))
    }

    /// Annihilator in the character group: `{χ : χ(s) = 1 for all s}`.
    pub fn perp(&self) -> Subgroup {
        let elems = self
            .group
            .elements()
            .into_iter()
            .filter(|chi| self.elements.iter().all(|s| self.group.char_eval(chi, s).is_zero()))
            .collect();
        Subgroup::from_elements(self.group.clone(), elems)
    }

    /// `G / self` in invariant-factor form with the canonical projection.
    pub fn quotient(&self) -> Projection {
        let r = self.group.rank();
        let mut rel: Vec<Vec<i128>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { self.group.orders()[i] as i128 } else { 0 }).collect())
            .collect();
        for e in &self.elements {
            rel.push(e.0.iter().map(|&x| x as i128).collect());
        }
        Projection::from_relations(r, &rel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_c2_c4() {
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let s = Subgroup::generated(&g, &[g.element(&[1, 2]).unwrap()]);
        assert_eq!(s.order(), 2);
        let p = s.quotient();
        assert_eq!(p.target().order(), 4);
        for a in s.elements() {
            assert!(p.target().is_identity(&p.apply(a)));
        }
        // projection is a homomorphism onto the quotient
        let imgs: BTreeSet<Element> = g.elements().iter().map(|x| p.apply(x)).collect();
        assert_eq!(imgs.len(), 4);
        assert_eq!(s.perp().order(), 4);
    }
}
