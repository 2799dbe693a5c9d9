//! Smith normal form over the integers, tracking column operations.

/// Returns `(diag, v)` with `u·a·v = diag(d_0 | d_1 | …)` for some unimodular `u`.
///
/// `a` has `m` rows and `c` columns; `v` is `c × c`. Entries of `diag` are non-negative,
/// one per column (zero past the rank).
pub fn smith_columns(a: &[Vec<i128>], c: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let mut a: Vec<Vec<i128>> = a.to_vec();
    let m = a.len();
    let mut v: Vec<Vec<i128>> = (0..c).map(|i| (0..c).map(|j| (i == j) as i128).collect()).collect();
    let col_swap = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in v.iter_mut() {
            row.swap(x, y);
        }
    };
    let col_axpy = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in a.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    for t in 0..m.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..c {
                    if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            col_swap(&mut a, &mut v, t, bj);
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(pivot_row) {
                        *x -= q * y;
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..c {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    col_axpy(&mut a, &mut v, j, t, q);
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..c).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if t < m && a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    let diag = (0..c).map(|t| if t < m { a[t][t] } else { 0 }).collect();
    (diag, v)
}
