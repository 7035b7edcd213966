//! Gaussian rationals `a + bi` with `a, b ∈ Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gq {
    pub re: BigRational,
    pub im: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Gq {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gq { re, im }
    }

    pub fn int(n: i64) -> Self {
        Gq {
            re: rat(n),
            im: BigRational::zero(),
        }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Gq {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Gq::int(0)
    }

    pub fn one() -> Self {
        Gq::int(1)
    }

    pub fn i() -> Self {
        Gq {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Gq::one(),
            1 => Gq::i(),
            2 => Gq::int(-1),
            _ => -Gq::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gq {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "division by zero");
        Gq {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    /// The real part as an exact rational, if the value is real.
    pub fn as_real(&self) -> Option<&BigRational> {
        self.im.is_zero().then_some(&self.re)
    }
}

impl Add for &Gq {
    type Output = Gq;
    fn add(self, o: &Gq) -> Gq {
        Gq {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &Gq {
    type Output = Gq;
    fn sub(self, o: &Gq) -> Gq {
        Gq {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &Gq {
    type Output = Gq;
    fn mul(self, o: &Gq) -> Gq {
        if self.im.is_zero() && o.im.is_zero() {
            return Gq {
                re: &self.re * &o.re,
                im: BigRational::zero(),
            };
        }
        Gq {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &Gq {
    type Output = Gq;
    fn div(self, o: &Gq) -> Gq {
        self * &o.inv()
    }
}

impl Neg for &Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Gq {
            type Output = Gq;
            fn $f(self, o: Gq) -> Gq {
                (&self).$f(&o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        -&self
    }
}

impl AddAssign<&Gq> for Gq {
    fn add_assign(&mut self, o: &Gq) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl fmt::Display for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{sign}{}i", self.re, self.im.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let i = Gq::i();
        assert_eq!(&i * &i, Gq::int(-1));
        let z = Gq::int(3) + Gq::i();
        assert_eq!(&z * &z.inv(), Gq::one());
        assert_eq!(Gq::i_pow(-1), -Gq::i());
        assert_eq!(z.to_string(), "3+1i");
        assert_eq!(Gq::ratio(1, 2).to_string(), "1/2");
    }
}
