use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FinAbGroup;

/// A finite group given by its Cayley table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("Cayley table must be square with entries below its size".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!("table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Invalid("table has no identity".into()))?;
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid("table has an element without inverse".into()))?;
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic table is a group")
    }

    /// The Cayley table of an abelian group, elements in its index order.
    pub fn from_abelian(g: &FinAbGroup) -> Self {
        let els = g.elements();
        let table = els.iter().map(|a| els.iter().map(|b| g.index(&g.op(a, b))).collect()).collect();
        FiniteGroup::from_table(table).expect("abelian table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.op(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// A generating set, chosen greedily by index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.span(&gens);
        while let Some(a) = (0..self.order()).find(|&a| !span[a]) {
            gens.push(a);
            span = self.span(&gens);
        }
        gens
    }

    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism into `target`, if it is one.
    /// `gens` must generate this group.
    pub fn extend_hom(&self, gens: &[usize], images: &[usize], target: &FiniteGroup) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = target.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = target.op(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        // consistency on every Cayley-graph edge makes the map a homomorphism
        map.iter().all(|&m| m != usize::MAX).then_some(map)
    }

    pub fn is_hom_to(&self, map: &[usize], target: &FiniteGroup) -> bool {
        let n = self.order();
        map.len() == n
            && map.iter().all(|&m| m < target.order())
            && (0..n).all(|a| (0..n).all(|b| map[self.op(a, b)] == target.op(map[a], map[b])))
    }

    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let mut seen = vec![false; self.order()];
        self.is_hom_to(map, self) && map.iter().all(|&m| !std::mem::replace(&mut seen[m], true))
    }

    /// All automorphisms as permutations, in lexicographic order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let k = self.element_order(g);
                (0..self.order()).filter(|&x| self.element_order(x) == k).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; gens.len()];
        loop {
            let images: Vec<usize> = pick.iter().zip(&candidates).map(|(&p, c)| c[p]).collect();
            if let Some(map) = self.extend_hom(&gens, &images, self) {
                if self.is_automorphism(&map) {
                    out.push(map);
                }
            }
            // mixed-radix increment
            let mut i = 0;
            loop {
                if i == pick.len() {
                    out.sort();
                    return out;
                }
                pick[i] += 1;
                if pick[i] < candidates[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    pub fn inverse_permutation(map: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; map.len()];
        for (i, &m) in map.iter().enumerate() {
            inv[m] = i;
        }
        inv
    }
}

/// Wire format: `{"cyclic": n}`, `{"abelian": [n_0, …]}` or `{"table": [[…]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Cyclic { cyclic: usize },
    Abelian { abelian: Vec<u64> },
    Table { table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { cyclic } if *cyclic > 0 => Ok(FiniteGroup::cyclic(*cyclic)),
            GroupSpec::Cyclic { .. } => Err(Error::Domain("cyclic group of order 0".into())),
            GroupSpec::Abelian { abelian } => Ok(FiniteGroup::from_abelian(&FinAbGroup::new(abelian.clone())?)),
            GroupSpec::Table { table } => FiniteGroup::from_table(table.clone()),
        }
    }
}
