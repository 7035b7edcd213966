//! The lattice spanned by `δ, ε_1..ε_k, δ_1..δ_l`, its form, and linear
//! functionals on it.

use crate::error::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = num_rational::Rational64;

/// Integer coordinates in the basis `(δ; ε_1..ε_k; δ_1..δ_l)`.
///
/// The derived ordering is lexicographic on `(d, e, f)`, which is the
/// enumeration order used everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    pub d: i64,
    pub e: Vec<i64>,
    pub f: Vec<i64>,
}

impl RootVec {
    pub fn new(d: i64, e: Vec<i64>, f: Vec<i64>) -> Self {
        RootVec { d, e, f }
    }

    pub fn zero(k: usize, l: usize) -> Self {
        RootVec {
            d: 0,
            e: vec![0; k],
            f: vec![0; l],
        }
    }

    /// `m·δ`.
    pub fn delta(k: usize, l: usize, m: i64) -> Self {
        RootVec {
            d: m,
            ..Self::zero(k, l)
        }
    }

    /// `c·ε_i`, zero-based `i`.
    pub fn eps(k: usize, l: usize, i: usize, c: i64) -> Self {
        let mut v = Self::zero(k, l);
        v.e[i] = c;
        v
    }

    /// `c·δ_j`, zero-based `j`.
    pub fn del(k: usize, l: usize, j: usize, c: i64) -> Self {
        let mut v = Self::zero(k, l);
        v.f[j] = c;
        v
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.e.len(), self.f.len())
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.is_in_z_delta()
    }

    /// True when the finite part vanishes, i.e. the vector lies in `ℤδ`.
    pub fn is_in_z_delta(&self) -> bool {
        self.e.iter().all(|&x| x == 0) && self.f.iter().all(|&x| x == 0)
    }

    /// The image in the quotient by `ℤδ`.
    pub fn gradient(&self) -> RootVec {
        RootVec {
            d: 0,
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }

    pub fn at_level(&self, d: i64) -> RootVec {
        RootVec {
            d,
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }

    pub fn shifted(&self, m: i64) -> RootVec {
        self.at_level(self.d + m)
    }

    pub fn scaled(&self, c: i64) -> RootVec {
        RootVec {
            d: c * self.d,
            e: self.e.iter().map(|x| c * x).collect(),
            f: self.f.iter().map(|x| c * x).collect(),
        }
    }

    /// Finite-part norm `(x, x)`.
    pub fn norm(&self) -> i64 {
        self.e.iter().map(|x| x * x).sum::<i64>() - self.f.iter().map(|x| x * x).sum::<i64>()
    }

    /// All coordinates in a flat list `(d, e.., f..)`.
    pub fn coords(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(1 + self.e.len() + self.f.len());
        v.push(self.d);
        v.extend_from_slice(&self.e);
        v.extend_from_slice(&self.f);
        v
    }

    pub fn from_coords(k: usize, l: usize, c: &[i64]) -> RootVec {
        assert_eq!(c.len(), 1 + k + l);
        RootVec {
            d: c[0],
            e: c[1..1 + k].to_vec(),
            f: c[1 + k..].to_vec(),
        }
    }

    fn check(&self, other: &RootVec) -> Result<()> {
        let (k, l) = self.ambient();
        let (k2, l2) = other.ambient();
        if (k, l) != (k2, l2) {
            return Err(Error::AmbientMismatch(k, l, k2, l2));
        }
        Ok(())
    }
}

fn zip_with(a: &[i64], b: &[i64], op: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    assert_eq!(a.len(), b.len(), "ambient mismatch");
    a.iter().zip(b).map(|(x, y)| op(*x, *y)).collect()
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, o: &RootVec) -> RootVec {
        RootVec {
            d: self.d + o.d,
            e: zip_with(&self.e, &o.e, |x, y| x + y),
            f: zip_with(&self.f, &o.f, |x, y| x + y),
        }
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, o: &RootVec) -> RootVec {
        RootVec {
            d: self.d - o.d,
            e: zip_with(&self.e, &o.e, |x, y| x - y),
            f: zip_with(&self.f, &o.f, |x, y| x - y),
        }
    }
}

impl Add for RootVec {
    type Output = RootVec;
    fn add(self, o: RootVec) -> RootVec {
        &self + &o
    }
}

impl Sub for RootVec {
    type Output = RootVec;
    fn sub(self, o: RootVec) -> RootVec {
        &self - &o
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        self.scaled(-1)
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        self.scaled(-1)
    }
}

impl Mul<&RootVec> for i64 {
    type Output = RootVec;
    fn mul(self, v: &RootVec) -> RootVec {
        v.scaled(self)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (i, &c) in self.e.iter().enumerate() {
            terms.push((c, format!("ε{}", i + 1)));
        }
        for (j, &c) in self.f.iter().enumerate() {
            terms.push((c, format!("δ{}", j + 1)));
        }
        terms.push((self.d, "δ".to_string()));
        let mut out = String::new();
        for (c, name) in terms.into_iter().filter(|(c, _)| *c != 0) {
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                out.push_str(&format!("{sign}{name}"));
            } else {
                out.push_str(&format!("{sign}{mag}{name}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `(ε_i, ε_j) = δ_ij`, `(δ_p, δ_q) = -δ_pq`, everything else zero.
pub fn bilinear(x: &RootVec, y: &RootVec) -> Result<i64> {
    x.check(y)?;
    Ok(form(x, y))
}

/// Unchecked form; panics on ambient mismatch.
pub fn form(x: &RootVec, y: &RootVec) -> i64 {
    assert_eq!(x.ambient(), y.ambient(), "ambient mismatch");
    let a: i64 = x.e.iter().zip(&y.e).map(|(p, q)| p * q).sum();
    let b: i64 = x.f.iter().zip(&y.f).map(|(p, q)| p * q).sum();
    a - b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    Zero,
    Real,
    Imaginary,
    Nonsingular,
}

impl RootClass {
    pub fn tag(self) -> &'static str {
        match self {
            RootClass::Zero => "zero",
            RootClass::Real => "re",
            RootClass::Imaginary => "im",
            RootClass::Nonsingular => "ns",
        }
    }
}

/// Something that knows which vectors are roots and can hand out a set of
/// roots spanning the same space as the whole root system.
pub trait RootSet {
    fn has(&self, x: &RootVec) -> bool;
    fn spanning(&self) -> &[RootVec];
}

pub fn classify(x: &RootVec, roots: &impl RootSet) -> Result<RootClass> {
    if x.is_zero() {
        return Ok(RootClass::Zero);
    }
    if !roots.has(x) {
        return Err(Error::NotARoot(x.clone()));
    }
    for b in roots.spanning() {
        x.check(b)?;
    }
    if form(x, x) != 0 {
        return Ok(RootClass::Real);
    }
    if roots.spanning().iter().all(|b| form(x, b) == 0) {
        Ok(RootClass::Imaginary)
    } else {
        Ok(RootClass::Nonsingular)
    }
}

/// `r_α(λ) = λ - 2(λ,α)/(α,α)·α`.
pub fn reflect(lam: &RootVec, alpha: &RootVec) -> Result<RootVec> {
    lam.check(alpha)?;
    let q = form(alpha, alpha);
    if q == 0 {
        return Err(Error::IsotropicReflection(alpha.clone()));
    }
    let n = 2 * form(lam, alpha);
    if n % q != 0 {
        return Err(Error::NonIntegralReflection(lam.clone(), alpha.clone()));
    }
    Ok(lam - &alpha.scaled(n / q))
}

/// Serialize a rational as `"p/q"` (or `"p"`).
pub fn ser_q<S: serde::Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_qs<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// A rational linear functional, given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunctional {
    #[serde(serialize_with = "ser_q")]
    pub z_d: Q,
    #[serde(serialize_with = "ser_qs")]
    pub z_e: Vec<Q>,
    #[serde(serialize_with = "ser_qs")]
    pub z_f: Vec<Q>,
}

impl RationalFunctional {
    pub fn zero(k: usize, l: usize) -> Self {
        RationalFunctional {
            z_d: Q::zero(),
            z_e: vec![Q::zero(); k],
            z_f: vec![Q::zero(); l],
        }
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.z_e.len(), self.z_f.len())
    }

    pub fn from_coords(k: usize, l: usize, c: &[Q]) -> Self {
        assert_eq!(c.len(), 1 + k + l);
        RationalFunctional {
            z_d: c[0],
            z_e: c[1..1 + k].to_vec(),
            z_f: c[1 + k..].to_vec(),
        }
    }

    pub fn evaluate(&self, x: &RootVec) -> Result<Q> {
        let (k, l) = self.ambient();
        let (k2, l2) = x.ambient();
        if (k, l) != (k2, l2) {
            return Err(Error::AmbientMismatch(k, l, k2, l2));
        }
        Ok(self.eval(x))
    }

    /// Unchecked evaluation.
    pub fn eval(&self, x: &RootVec) -> Q {
        let mut acc = self.z_d * x.d;
        for (z, c) in self.z_e.iter().zip(&x.e) {
            acc += *z * *c;
        }
        for (z, c) in self.z_f.iter().zip(&x.f) {
            acc += *z * *c;
        }
        acc
    }

    pub fn negated(&self) -> Self {
        RationalFunctional {
            z_d: -self.z_d,
            z_e: self.z_e.iter().map(|z| -*z).collect(),
            z_f: self.z_f.iter().map(|z| -*z).collect(),
        }
    }
}

pub fn evaluate(zeta: &RationalFunctional, x: &RootVec) -> Result<Q> {
    zeta.evaluate(x)
}

impl fmt::Display for RationalFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Q]| {
            v.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "ζ(δ)={}; ζ(ε)=[{}]; ζ(δ_j)=[{}]",
            self.z_d,
            show(&self.z_e),
            show(&self.z_f)
        )
    }
}

/// Solve `A x = b` over `Q` for square nonsingular `A` (row-major).
pub(crate) fn solve_q(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = b.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &r)| {
            let mut row = row.clone();
            row.push(r);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_values() {
        let e1 = RootVec::eps(2, 1, 0, 1);
        let d1 = RootVec::del(2, 1, 0, 1);
        assert_eq!(bilinear(&e1, &e1).unwrap(), 1);
        assert_eq!(bilinear(&d1, &d1).unwrap(), -1);
        let ns = &e1 + &d1;
        assert_eq!(bilinear(&ns, &ns).unwrap(), 0);
        assert_eq!(bilinear(&RootVec::delta(2, 1, 1), &ns).unwrap(), 0);
        assert!(bilinear(&e1, &RootVec::zero(1, 1)).is_err());
    }

    #[test]
    fn reflections() {
        let e1 = RootVec::eps(2, 0, 0, 1);
        let e2 = RootVec::eps(2, 0, 1, 1);
        assert_eq!(reflect(&e1, &(&e1 - &e2)).unwrap(), e2);
        let delta = RootVec::delta(2, 0, 1);
        assert_eq!(reflect(&delta, &e1).unwrap(), delta);
        let ns = RootVec::new(0, vec![1, 0], vec![1]);
        assert!(matches!(
            reflect(&ns, &ns),
            Err(Error::IsotropicReflection(_))
        ));
    }

    #[test]
    fn functional_eval() {
        let mut z = RationalFunctional::zero(1, 1);
        let x = RootVec::new(3, vec![1], vec![0]);
        assert_eq!(z.evaluate(&x).unwrap(), Q::from(0));
        z.z_d = Q::from(1);
        assert_eq!(z.evaluate(&x).unwrap(), Q::from(3));
    }

    #[test]
    fn display() {
        let x = RootVec::new(3, vec![1, -2], vec![0, 1]);
        assert_eq!(x.to_string(), "ε1-2ε2+δ2+3δ");
        assert_eq!(RootVec::zero(1, 1).to_string(), "0");
    }

    #[test]
    fn small_solve() {
        let a = vec![vec![Q::from(2), Q::from(1)], vec![Q::from(1), Q::from(3)]];
        let x = solve_q(&a, &[Q::from(3), Q::from(4)]).unwrap();
        assert_eq!(x, vec![Q::from(1), Q::from(1)]);
    }
}
