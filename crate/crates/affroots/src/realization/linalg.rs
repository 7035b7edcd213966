//! Row reduction over [`Gq`].

use super::gq::Gq;

/// Reduced row echelon form of the span of `rows`; returns the nonzero
/// rows and their pivot columns.
pub fn rref(rows: &[Vec<Gq>]) -> (Vec<Vec<Gq>>, Vec<usize>) {
    let mut m: Vec<Vec<Gq>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    let mut top = 0;
    for col in 0..width {
        let Some(piv) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, piv);
        let inv = m[top][col].inv();
        for x in m[top].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != top && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    (m, pivots)
}

/// Basis of `{v : M v = 0}` for `M` given by rows of width `n`.
pub fn kernel(m: &[Vec<Gq>], n: usize) -> Vec<Vec<Gq>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Gq::zero(); n];
            v[f] = Gq::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in a basis given in reduced echelon form.
pub fn coords(basis: &[Vec<Gq>], pivots: &[usize], v: &[Gq]) -> Option<Vec<Gq>> {
    let c: Vec<Gq> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut rest = v.to_vec();
    for (b, x) in basis.iter().zip(&c) {
        for (r, y) in rest.iter_mut().zip(b) {
            if !y.is_zero() {
                *r = &*r - &(x * y);
            }
        }
    }
    rest.iter().all(Gq::is_zero).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Gq> {
        x.iter().map(|a| Gq::int(*a)).collect()
    }

    #[test]
    fn kernel_and_coords() {
        let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6])];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let dot = x
                .iter()
                .zip(&m[0])
                .fold(Gq::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
        let (b, p) = rref(&[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        assert_eq!(coords(&b, &p, &v(&[1, 2, 1])).unwrap().len(), 2);
        assert!(coords(&b, &p, &v(&[1, 0, 0])).is_none());
    }
}
