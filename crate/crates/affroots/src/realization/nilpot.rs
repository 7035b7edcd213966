//! The operator identities for powers of an odd element, and the scalar
//! `r_m(ν)` checked in the adjoint action of an `osp(1,2)` inside a model.

use super::{super_bracket, Decomposition, Gq, GradedMatrix, Grading};
use crate::error::{Error, Result};
use crate::lattice::{RootClass, RootVec, Q};
use crate::rootsys::{class_of, contains};
use num_bigint::BigInt;
use serde::Serialize;

/// Row `n` of `b_0^n = b_{2n}^n = 1`, `b_{2i}^n = b_{2i}^{n-1} + b_{2i-2}^{n-1}`.
pub fn b_coefficients(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for m in 1..=n {
        let mut next = vec![BigInt::from(1); m + 1];
        for i in 1..m {
            next[i] = &row[i] + &row[i - 1];
        }
        row = next;
    }
    row
}

fn big(c: &BigInt) -> Gq {
    Gq::new(
        num_rational::BigRational::from_integer(c.clone()),
        num_rational::BigRational::from_integer(0.into()),
    )
}

fn ad_pow(y: &GradedMatrix, x: &GradedMatrix, j: usize) -> GradedMatrix {
    (0..j).fold(x.clone(), |acc, _| {
        super_bracket(y, &acc).expect("same model")
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NilpotReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl NilpotReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both odd-`y` expansions for `n ≤ n_max`, then the binomial expansion
/// for the even element `y²`, all as matrix products.
pub fn verify_nilpot_identity(
    x: &GradedMatrix,
    y: &GradedMatrix,
    n_max: usize,
) -> Result<NilpotReport> {
    let px = x.grading().bit().ok_or(Error::Inhomogeneous)?;
    if y.grading() != Grading::Odd || y.is_zero() {
        return Err(Error::Inhomogeneous);
    }
    if (x.p, x.q) != (y.p, y.q) {
        return Err(Error::SizeMismatch(x.size(), y.size()));
    }
    let sx = if px == 1 { Gq::int(-1) } else { Gq::one() };
    let mut out = NilpotReport {
        checked: 0,
        failures: vec![],
    };
    for n in 0..=n_max {
        let b = b_coefficients(n);
        let lhs = y.pow(2 * n).mul(x);
        let mut rhs = GradedMatrix::zeros(x.p, x.q);
        for (i, bi) in b.iter().enumerate() {
            rhs = rhs.add(
                &ad_pow(y, x, 2 * i)
                    .mul(&y.pow(2 * n - 2 * i))
                    .scale(&big(bi)),
            );
        }
        out.checked += 1;
        if lhs != rhs {
            out.failures.push(format!("even expansion fails at n={n}"));
        }
        let lhs = y.pow(2 * n + 1).mul(x);
        let mut rhs = GradedMatrix::zeros(x.p, x.q);
        for (i, bi) in b.iter().enumerate() {
            let a = ad_pow(y, x, 2 * i)
                .mul(&y.pow(2 * n + 1 - 2 * i))
                .scale(&sx);
            let c = ad_pow(y, x, 2 * i + 1).mul(&y.pow(2 * n - 2 * i));
            rhs = rhs.add(&a.add(&c).scale(&big(bi)));
        }
        out.checked += 1;
        if lhs != rhs {
            out.failures.push(format!("odd expansion fails at n={n}"));
        }
    }
    let z = y.mul(y);
    for n in 0..=2 * n_max {
        let lhs = z.pow(n).mul(x);
        let mut rhs = GradedMatrix::zeros(x.p, x.q);
        let mut binom = BigInt::from(1);
        for i in 0..=n {
            rhs = rhs.add(&ad_pow(&z, x, i).mul(&z.pow(n - i)).scale(&big(&binom)));
            binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        out.checked += 1;
        if lhs != rhs {
            out.failures
                .push(format!("binomial expansion fails at n={n}"));
        }
    }
    Ok(out)
}

/// `r_m(ν)` from `ν(h)`.
pub fn eval_r_m(m: usize, nu_h: Q) -> Q {
    assert!(m >= 1, "m is positive");
    let n = (m / 2) as i64;
    let mut r = Q::from(1);
    for i in 0..n {
        r *= Q::from(-2 * (n - i));
    }
    let start = if m.is_multiple_of(2) { 1 } else { 0 };
    for i in start..=n {
        r *= nu_h - Q::from(2 * (n - i));
    }
    r
}

/// `x ∈ 𝔤^α`, `y ∈ 𝔤^{-α}` odd with `h = [x,y]`, `α(h) = 2`, and
/// `e = [x,x] ≠ 0`, `f = [y,y]`.
#[derive(Debug, Clone)]
pub struct Osp12 {
    pub alpha: RootVec,
    pub x: GradedMatrix,
    pub y: GradedMatrix,
    pub h: GradedMatrix,
    pub e: GradedMatrix,
    pub f: GradedMatrix,
}

/// The first odd real root `α` in the model whose double is a root.
pub fn osp12_in(dec: &Decomposition) -> Result<Osp12> {
    let m = &dec.model;
    for s in dec.spaces.iter().filter(|s| s.odd && s.basis.len() == 1) {
        let alpha = s.weight.at_level(s.k);
        if !contains(&m.ty, &alpha) || class_of(&alpha) != RootClass::Real {
            continue;
        }
        let Some(ys) = dec.find(&-&s.weight, true, -s.k) else {
            continue;
        };
        let x = &s.basis[0];
        let e = super_bracket(x, x)?;
        if e.is_zero() {
            continue;
        }
        let h0 = super_bracket(x, &ys.basis[0])?;
        let c = m.pair(&s.weight, &h0);
        if c.is_zero() {
            continue;
        }
        let y = ys.basis[0].scale(&(&Gq::int(2) / &c));
        let h = super_bracket(x, &y)?;
        let f = super_bracket(&y, &y)?;
        return Ok(Osp12 {
            alpha,
            x: x.clone(),
            y,
            h,
            e,
            f,
        });
    }
    Err(Error::NoSuchRoot(m.ty.zero()))
}

#[derive(Debug, Clone, Serialize)]
pub struct RmCheck {
    pub m: usize,
    pub nu_h: String,
    pub expected: String,
    pub passed: bool,
}

/// `x^m y^m w = r_m(ν) w` in the adjoint action with `w = [x,x]`.
pub fn r_m_adjoint(o: &Osp12, m: usize) -> RmCheck {
    let w = &o.e;
    let hw = super_bracket(&o.h, w).expect("same model");
    let (r, c) = (0..w.size() * w.size())
        .map(|i| (i / w.size(), i % w.size()))
        .find(|&(r, c)| !w.at(r, c).is_zero())
        .unwrap();
    let nu = hw.at(r, c) / w.at(r, c);
    let nu_q = nu.as_real().map(|q| {
        use num_traits::ToPrimitive;
        Q::new(q.numer().to_i64().unwrap(), q.denom().to_i64().unwrap())
    });
    let eigen = hw == w.scale(&nu);
    let Some(nu_q) = nu_q.filter(|_| eigen) else {
        return RmCheck {
            m,
            nu_h: nu.to_string(),
            expected: "-".into(),
            passed: false,
        };
    };
    let want = eval_r_m(m, nu_q);
    let got = ad_pow(&o.x, &ad_pow(&o.y, w, m), m);
    let target = w.scale(&Gq::ratio(*want.numer(), *want.denom()));
    RmCheck {
        m,
        nu_h: nu_q.to_string(),
        expected: want.to_string(),
        passed: got == target,
    }
}

#[cfg(test)]
mod tests {
    use super::super::Model;
    use super::*;
    use crate::rootsys::{AlgebraType, Family};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn coefficient_rows() {
        assert_eq!(b_coefficients(2), vec![1.into(), 2.into(), BigInt::from(1)]);
        assert_eq!(b_coefficients(0), vec![BigInt::from(1)]);
    }

    #[test]
    fn r_m_values() {
        let nu = Q::from(4);
        assert_eq!(eval_r_m(1, nu), nu);
        assert_eq!(eval_r_m(2, nu), Q::from(-8));
        assert_eq!(eval_r_m(3, nu), Q::from(-16));
        assert_eq!(eval_r_m(4, nu), Q::from(64));
    }

    #[test]
    fn identities_in_a22() {
        let t = AlgebraType::new(Family::AEvenEven, 1, 1).unwrap();
        let m = Model::new(&t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let ox = rand::Rng::gen_bool(&mut rng, 0.5);
            let x = m.random_element(&mut rng, ox);
            let y = m.random_element(&mut rng, true);
            assert!(verify_nilpot_identity(&x, &y, 2).unwrap().passed());
        }
        let even = m.random_element(&mut rng, false);
        assert!(matches!(
            verify_nilpot_identity(&even, &even, 1),
            Err(Error::Inhomogeneous)
        ));
    }

    #[test]
    fn adjoint_r_m() {
        let t = AlgebraType::new(Family::AEvenEven, 1, 1).unwrap();
        let dec = Decomposition::new(Model::new(&t).unwrap()).unwrap();
        let o = osp12_in(&dec).unwrap();
        for m in 1..=3 {
            let c = r_m_adjoint(&o, m);
            assert!(c.passed, "{c:?}");
            assert_eq!(c.nu_h, "4");
        }
    }
}
