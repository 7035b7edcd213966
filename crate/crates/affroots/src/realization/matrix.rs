//! Dense matrices over [`Gq`], the `(p|q)`-graded square ones, the super
//! bracket and the `♦` maps.

use super::gq::Gq;
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A plain rectangular block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Gq>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Gq::zero(); rows * cols],
        }
    }

    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Mat {
            rows,
            cols,
            data: v.iter().map(|x| Gq::int(*x)).collect(),
        }
    }

    /// 0-based access.
    pub fn at(&self, r: usize, c: usize) -> &Gq {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn trace(&self) -> Gq {
        let mut t = Gq::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.at(i, i);
        }
        t
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

fn sgn(i: i64) -> i64 {
    (i > 0) as i64
}

fn minus_one(e: i64) -> Gq {
    if e.rem_euclid(2) == 0 {
        Gq::one()
    } else {
        Gq::int(-1)
    }
}

/// The sign factor of variant `v` at 1-based `(r, s)`.
fn sign(v: u8, r: i64, s: i64, k: i64, l: i64) -> Gq {
    let mid = l + 1;
    let dr = (r == mid) as i64;
    let ds = (s == mid) as i64;
    let two = |r: i64| minus_one(sgn(r - mid) + mid * dr) * Gq::i_pow(dr);
    let three = |s: i64| minus_one(sgn(s - mid) + mid * ds) * Gq::i_pow(-ds);
    match v {
        1 => Gq::one(),
        2 => two(r),
        3 => three(s),
        4 => two(r) * three(s),
        5 => minus_one(sgn(k + 1 - r)),
        6 => minus_one(sgn(k + 1 - s)),
        7 => minus_one(sgn(k + 1 - r) + sgn(k + 1 - s)),
        _ => unreachable!("variant checked by caller"),
    }
}

/// `(A^♦v)_{r,s} = (-1)^{r+s} σ_v(r,s) A_{m+1-s, n+1-r}` for an `m × n`
/// block `A`; the result is `n × m`.
pub fn diamond(a: &Mat, v: u8, k: usize, l: usize) -> Result<Mat> {
    let (m, n) = (a.rows, a.cols);
    let ok = match v {
        1 => true,
        2 => n == 2 * l + 1,
        3 => m == 2 * l + 1,
        4 => m == n && n == 2 * l + 1,
        5 => n == 2 * k,
        6 => m == 2 * k,
        7 => m == n && n == 2 * k,
        _ => return Err(Error::Shape(format!("no variant ♦{v}"))),
    };
    if !ok {
        return Err(Error::Shape(format!(
            "♦{v} on a {m}x{n} block with k={k}, l={l}"
        )));
    }
    let mut out = Mat::zeros(n, m);
    for r in 1..=n {
        for s in 1..=m {
            let src = a.at(m - s, n - r);
            if src.is_zero() {
                continue;
            }
            let f = minus_one((r + s) as i64) * sign(v, r as i64, s as i64, k as i64, l as i64);
            out.set(r - 1, s - 1, &f * src);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Even,
    Odd,
    Inhomogeneous,
}

impl Grading {
    pub fn bit(self) -> Option<u8> {
        match self {
            Grading::Even => Some(0),
            Grading::Odd => Some(1),
            Grading::Inhomogeneous => None,
        }
    }
}

/// Square matrix of size `p + q` with even part the two diagonal blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedMatrix {
    pub p: usize,
    pub q: usize,
    pub data: Vec<Gq>,
}

impl GradedMatrix {
    pub fn zeros(p: usize, q: usize) -> Self {
        let n = p + q;
        GradedMatrix {
            p,
            q,
            data: vec![Gq::zero(); n * n],
        }
    }

    /// The unit `e_{ab}`, 0-based.
    pub fn unit(p: usize, q: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(p, q);
        m.set(a, b, Gq::one());
        m
    }

    pub fn identity(p: usize, q: usize) -> Self {
        let mut m = Self::zeros(p, q);
        for a in 0..p + q {
            m.set(a, a, Gq::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    pub fn at(&self, r: usize, c: usize) -> &Gq {
        &self.data[r * self.size() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gq) {
        let n = self.size();
        self.data[r * n + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gq::is_zero)
    }

    fn odd_slot(&self, r: usize, c: usize) -> bool {
        (r < self.p) != (c < self.p)
    }

    /// Zero counts as even.
    pub fn grading(&self) -> Grading {
        let n = self.size();
        let (mut ev, mut od) = (false, false);
        for r in 0..n {
            for c in 0..n {
                if !self.at(r, c).is_zero() {
                    if self.odd_slot(r, c) {
                        od = true;
                    } else {
                        ev = true;
                    }
                }
            }
        }
        match (ev, od) {
            (_, false) => Grading::Even,
            (false, true) => Grading::Odd,
            (true, true) => Grading::Inhomogeneous,
        }
    }

    /// The even and odd parts.
    pub fn split(&self) -> (GradedMatrix, GradedMatrix) {
        let (mut e, mut o) = (self.clone(), self.clone());
        let n = self.size();
        for r in 0..n {
            for c in 0..n {
                if self.odd_slot(r, c) {
                    e.set(r, c, Gq::zero());
                } else {
                    o.set(r, c, Gq::zero());
                }
            }
        }
        (e, o)
    }

    fn same_shape(&self, o: &GradedMatrix) -> Result<()> {
        if (self.p, self.q) != (o.p, o.q) {
            return Err(Error::SizeMismatch(self.size(), o.size()));
        }
        Ok(())
    }

    pub fn add(&self, o: &GradedMatrix) -> GradedMatrix {
        GradedMatrix {
            p: self.p,
            q: self.q,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &GradedMatrix) -> GradedMatrix {
        GradedMatrix {
            p: self.p,
            q: self.q,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Gq) -> GradedMatrix {
        GradedMatrix {
            p: self.p,
            q: self.q,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    pub fn mul(&self, o: &GradedMatrix) -> GradedMatrix {
        let n = self.size();
        let mut out = GradedMatrix::zeros(self.p, self.q);
        for r in 0..n {
            for t in 0..n {
                let a = self.at(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = o.at(t, c);
                    if !b.is_zero() {
                        out.data[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> GradedMatrix {
        (0..e).fold(GradedMatrix::identity(self.p, self.q), |acc, _| {
            acc.mul(self)
        })
    }

    /// `tr(top-left) - tr(bottom-right)`.
    pub fn supertrace(&self) -> Gq {
        let mut t = Gq::zero();
        for a in 0..self.size() {
            if a < self.p {
                t += self.at(a, a);
            } else {
                t = &t - self.at(a, a);
            }
        }
        t
    }

    /// Rectangular block with 0-based corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.at(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn put(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.at(r, c).clone());
            }
        }
    }

    /// `(A, B, C, D)` for the `(p|q)` split.
    pub fn blocks(&self) -> (Mat, Mat, Mat, Mat) {
        let (p, q) = (self.p, self.q);
        (
            self.block(0, 0, p, p),
            self.block(0, p, p, q),
            self.block(p, 0, q, p),
            self.block(p, p, q, q),
        )
    }

    pub fn from_blocks(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> GradedMatrix {
        let (p, q) = (a.rows, d.rows);
        let mut m = GradedMatrix::zeros(p, q);
        m.put(0, 0, a);
        m.put(0, p, b);
        m.put(p, 0, c);
        m.put(p, p, d);
        m
    }
}

fn homogeneous_bracket(x: &GradedMatrix, px: u8, y: &GradedMatrix, py: u8) -> GradedMatrix {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if px * py == 1 {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// `XY - (-1)^{|X||Y|} YX` on homogeneous parts, extended bilinearly.
pub fn super_bracket(x: &GradedMatrix, y: &GradedMatrix) -> Result<GradedMatrix> {
    x.same_shape(y)?;
    let (x0, x1) = x.split();
    let (y0, y1) = y.split();
    let mut out = GradedMatrix::zeros(x.p, x.q);
    for (a, pa) in [(&x0, 0u8), (&x1, 1)] {
        if a.is_zero() {
            continue;
        }
        for (b, pb) in [(&y0, 0u8), (&y1, 1)] {
            if !b.is_zero() {
                out = out.add(&homogeneous_bracket(a, pa, b, pb));
            }
        }
    }
    Ok(out)
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        for r in 0..n {
            let row: Vec<String> = (0..n).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(n: usize) -> Mat {
        let v: Vec<i64> = (0..n * n).map(|i| (i as i64 * 7 + 3) % 11 - 5).collect();
        Mat::from_ints(n, n, &v)
    }

    #[test]
    fn diamond_orders() {
        let a = generic(3);
        let twice = diamond(&diamond(&a, 1, 1, 1).unwrap(), 1, 1, 1).unwrap();
        assert_eq!(twice, a);
        let mut b = a.clone();
        for _ in 0..4 {
            b = diamond(&b, 4, 1, 1).unwrap();
        }
        assert_eq!(b, a);
        assert_ne!(diamond(&diamond(&a, 4, 1, 1).unwrap(), 4, 1, 1).unwrap(), a);
        let c = generic(4);
        assert_eq!(diamond(&diamond(&c, 7, 2, 1).unwrap(), 7, 2, 1).unwrap(), c);
    }

    #[test]
    fn diamond_traces() {
        for n in [3, 5] {
            let a = generic(n);
            let l = (n - 1) / 2;
            assert_eq!(diamond(&a, 1, 1, l).unwrap().trace(), a.trace());
            assert_eq!(diamond(&a, 4, 1, l).unwrap().trace(), a.trace());
        }
    }

    #[test]
    fn diamond_middle_unit() {
        let mut a = Mat::zeros(3, 3);
        a.set(1, 1, Gq::one());
        let d = diamond(&a, 4, 1, 1).unwrap();
        assert_eq!(d.at(1, 1), &Gq::one());
    }

    #[test]
    fn diamond_shapes() {
        assert!(diamond(&Mat::zeros(2, 3), 2, 1, 1).is_ok());
        assert!(matches!(
            diamond(&Mat::zeros(2, 2), 2, 1, 1),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            diamond(&Mat::zeros(3, 3), 5, 1, 1),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn bracket_basics() {
        let x = GradedMatrix::unit(1, 1, 0, 1).add(&GradedMatrix::unit(1, 1, 1, 0));
        let xx = super_bracket(&x, &x).unwrap();
        assert_eq!(xx, x.mul(&x).scale(&Gq::int(2)));
        let y = GradedMatrix::unit(1, 1, 0, 0);
        let a = super_bracket(&x, &y).unwrap();
        let b = super_bracket(&y, &x).unwrap();
        assert_eq!(a, b.scale(&Gq::int(-1)));
        assert!(super_bracket(&x, &GradedMatrix::zeros(2, 1)).is_err());
    }
}
