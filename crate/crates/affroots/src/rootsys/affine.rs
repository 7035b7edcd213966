//! The even subsystems `ℜ_1`, `ℜ_2` and their affine bases.

use super::{
    shape_of, shape_vectors, AlgebraType, Family, Parity, Progression, RootEntry, RootSystemView,
    Shape, Window,
};
use crate::error::{Error, Result};
use crate::lattice::{solve_q, RootClass, RootVec, Q};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

const Z: Progression = Progression::arith(1, 0);
const EVEN: Progression = Progression::arith(2, 0);
const ODD: Progression = Progression::arith(2, 1);
const FOUR: Progression = Progression::arith(4, 0);
const FOUR_2: Progression = Progression::arith(4, 2);

/// Which row of the θ table applies to `ℜ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AffineKind {
    Untwisted,
    /// Type `A_{2p}^{(2)}`
    TwistedA2p,
    Twisted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    pub ty: AlgebraType,
    pub i: usize,
    /// `ℜ_i ∩ ℤδ = sℤδ`
    pub s: i64,
    rows: Vec<(Shape, Progression)>,
}

fn real_rows(family: Family, i: usize) -> &'static [(Shape, Progression)] {
    use Shape::*;
    match (family, i) {
        (Family::AEvenOdd, 1) => &[(E, Z), (EE, Z), (TwoE, ODD)],
        (Family::AOddOdd, 1) => &[(EE, Z), (TwoE, ODD)],
        (Family::AEvenOdd | Family::AOddOdd, _) => &[(TwoD, EVEN), (DD, Z)],
        (Family::AEvenEven, 1) => &[(E, EVEN), (EE, EVEN), (TwoE, FOUR_2)],
        (Family::AEvenEven, _) => &[(TwoD, FOUR), (DD, EVEN), (D, ODD)],
        (Family::D, 1) => &[(E, Z), (EE, EVEN)],
        (Family::D, _) => &[(DD, EVEN), (TwoD, EVEN)],
    }
}

/// `ℜ_i` for `i ∈ {1, 2}`.
pub fn subsystem_data(ty: &AlgebraType, i: usize) -> Subsystem {
    assert!(i == 1 || i == 2, "subsystem index must be 1 or 2");
    let rows: Vec<(Shape, Progression)> = real_rows(ty.family, i)
        .iter()
        .copied()
        .filter(|(sh, _)| !shape_vectors(ty.k, ty.l, *sh).is_empty())
        .collect();
    let s = rows
        .iter()
        .filter_map(|(_, p)| p.step())
        .fold(0i64, |a, b| a.gcd(&b));
    Subsystem {
        ty: *ty,
        i,
        s,
        rows,
    }
}

impl Subsystem {
    /// Levels of the string through a gradient, `∅` outside `ℜ_i`.
    pub fn levels(&self, g: &RootVec) -> Progression {
        match shape_of(g) {
            Some(Shape::Zero) => Progression::arith(self.s, 0),
            Some(sh) => self
                .rows
                .iter()
                .find(|(r, _)| *r == sh)
                .map(|(_, p)| *p)
                .unwrap_or(Progression::Empty),
            None => Progression::Empty,
        }
    }

    pub fn contains(&self, x: &RootVec) -> bool {
        x.ambient() == (self.ty.k, self.ty.l) && self.levels(&x.gradient()).contains(x.d)
    }

    pub fn gradients(&self) -> Vec<RootVec> {
        let mut out: Vec<RootVec> = self
            .rows
            .iter()
            .flat_map(|(sh, _)| shape_vectors(self.ty.k, self.ty.l, *sh))
            .collect();
        out.sort();
        out
    }

    /// Side coordinates: `e` for `ℜ_1`, `f` for `ℜ_2`.
    pub fn side<'a>(&self, x: &'a RootVec) -> &'a [i64] {
        if self.i == 1 {
            &x.e
        } else {
            &x.f
        }
    }

    pub fn rank(&self) -> usize {
        if self.i == 1 {
            self.ty.k
        } else {
            self.ty.l
        }
    }

    pub fn kind(&self) -> AffineKind {
        if self.rows.iter().all(|(_, p)| p.step() == Some(self.s)) {
            return AffineKind::Untwisted;
        }
        let g = self.gradients();
        if g.iter().any(|v| g.contains(&v.scaled(2))) {
            AffineKind::TwistedA2p
        } else {
            AffineKind::Twisted
        }
    }

    pub fn view(&self, w: Window) -> RootSystemView {
        let mut dirs = self.gradients();
        dirs.push(self.ty.zero());
        let mut entries = vec![];
        for g in &dirs {
            for d in self.levels(g).levels(-w.n, w.n) {
                let root = g.at_level(d);
                let (class, parity) = if g.is_zero() {
                    (
                        if d == 0 {
                            RootClass::Zero
                        } else {
                            RootClass::Imaginary
                        },
                        Parity::Imaginary,
                    )
                } else {
                    (RootClass::Real, Parity::Even)
                };
                entries.push(RootEntry {
                    root,
                    class,
                    parity,
                });
            }
        }
        RootSystemView::from_entries(self.ty, w, entries)
    }
}

/// The roots of `ℜ_i` within a window.
pub fn subsystem(ty: &AlgebraType, i: usize, w: Window) -> RootSystemView {
    subsystem_data(ty, i).view(w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseData {
    pub i: usize,
    pub s: i64,
    pub kind: AffineKind,
    /// `B_i`, in descending lexicographic order.
    pub finite_base: Vec<RootVec>,
    pub theta: RootVec,
    /// `B_i ∪ {sδ − θ}`
    pub affine_base: Vec<RootVec>,
}

/// `d > 0`, or `d = 0` and the first nonzero finite coordinate is positive.
pub fn canonical_positive(x: &RootVec) -> bool {
    x.d > 0
        || (x.d == 0
            && x.e
                .iter()
                .chain(x.f.iter())
                .find(|c| **c != 0)
                .map(|c| *c > 0)
                .unwrap_or(false))
}

const LEVEL_SCAN: i64 = 64;

fn coords_of(sub: &Subsystem, x: &RootVec) -> Vec<Q> {
    std::iter::once(x.d)
        .chain(sub.side(x).iter().copied())
        .map(Q::from)
        .collect()
}

/// Express `x` in the given vectors, which must form a basis of the
/// `(d, side)` coordinates.
pub(crate) fn expand(sub: &Subsystem, basis: &[RootVec], x: &RootVec) -> Option<Vec<Q>> {
    let cols: Vec<Vec<Q>> = basis.iter().map(|b| coords_of(sub, b)).collect();
    let n = cols.len();
    let a: Vec<Vec<Q>> = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect();
    solve_q(&a, &coords_of(sub, x))
}

/// Affine base of `ℜ_i` for the positive system cut out by `positive`.
///
/// `positive` must select one of `±α` for every real `α ∈ ℜ_i`, and be
/// stable under adding `s δ`.
pub fn affine_base_with(sub: &Subsystem, positive: &dyn Fn(&RootVec) -> bool) -> Result<BaseData> {
    let grads = sub.gradients();
    let low = |g: &RootVec| -> Option<i64> {
        sub.levels(g)
            .levels(-LEVEL_SCAN, LEVEL_SCAN)
            .into_iter()
            .find(|&d| positive(&g.at_level(d)))
    };
    let lows: Vec<Option<i64>> = grads.iter().map(low).collect();
    let is_pos = |v: &RootVec| sub.contains(v) && positive(v);

    let mut simple = vec![];
    for (g, lo) in grads.iter().zip(&lows) {
        let Some(d) = *lo else {
            return Err(Error::NoBase(format!("no positive level for {g}")));
        };
        let alpha = g.at_level(d);
        let decomposable = grads.iter().zip(&lows).any(|(b, lb)| {
            let c = g - b;
            if c.is_zero() || sub.levels(&c).is_empty() {
                return false;
            }
            let (Some(lb), Some(lc)) = (*lb, low(&c)) else {
                return false;
            };
            (lb..=d - lc).any(|e| is_pos(&b.at_level(e)) && is_pos(&c.at_level(d - e)))
        });
        if !decomposable {
            simple.push(alpha);
        }
    }
    if simple.len() != sub.rank() + 1 {
        return Err(Error::NoBase(format!(
            "found {} simple roots, expected {}",
            simple.len(),
            sub.rank() + 1
        )));
    }
    let sdelta = sub.ty.delta(sub.s);
    let marks = expand(sub, &simple, &sdelta)
        .ok_or_else(|| Error::NoBase("simple roots are dependent".into()))?;

    let mut candidates: Vec<usize> = (0..simple.len())
        .filter(|&j| marks[j] == Q::one())
        .collect();
    candidates.sort_by(|&a, &b| {
        simple[b]
            .d
            .cmp(&simple[a].d)
            .then(simple[a].cmp(&simple[b]))
    });

    for j0 in candidates {
        let alpha0 = simple[j0].clone();
        let mut finite: Vec<RootVec> = simple
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != j0)
            .map(|(_, v)| v.clone())
            .collect();
        finite.sort_by(|a, b| b.cmp(a));
        if let Some(theta) = finite_theta(sub, &simple, j0) {
            if theta == &sdelta - &alpha0 {
                let mut affine_base = finite.clone();
                affine_base.push(alpha0);
                return Ok(BaseData {
                    i: sub.i,
                    s: sub.s,
                    kind: sub.kind(),
                    finite_base: finite,
                    theta,
                    affine_base,
                });
            }
        }
    }
    Err(Error::NoBase(
        "no simple root of mark 1 completes a finite base".into(),
    ))
}

/// The θ prescribed by the kind of `ℜ_i`, for the finite system spanned by
/// `Π ∖ {α_0}`. `None` if that set is not a base of the finite part.
fn finite_theta(sub: &Subsystem, simple: &[RootVec], j0: usize) -> Option<RootVec> {
    let kind = sub.kind();
    let grads = sub.gradients();
    let half = |g: &RootVec| {
        RootVec::new(
            0,
            g.e.iter().map(|c| c / 2).collect(),
            g.f.iter().map(|c| c / 2).collect(),
        )
    };
    let mut roots: Vec<(RootVec, Q)> = vec![];
    for g in &grads {
        let c = expand(sub, simple, g)?;
        let shift = -Q::from(sub.s) * c[j0];
        if !shift.is_integer() {
            return None;
        }
        let x = g.at_level(shift.to_integer());
        if !sub.contains(&x) {
            // The finite part of an A_{2p}^{(2)} base is reduced.
            if kind == AffineKind::TwistedA2p
                && g.e.iter().chain(&g.f).all(|c| c % 2 == 0)
                && grads.contains(&half(g))
            {
                continue;
            }
            return None;
        }
        let mut cf = expand(sub, simple, &x)?;
        cf.remove(j0);
        if cf.iter().any(|q| !q.is_integer()) {
            return None;
        }
        if !(cf.iter().all(|q| !q.is_negative()) || cf.iter().all(|q| !q.is_positive())) {
            return None;
        }
        let height: Q = cf.iter().copied().sum();
        roots.push((x, height));
    }
    let highest = |pool: &[&(RootVec, Q)]| -> Option<RootVec> {
        let top = pool.iter().map(|(_, h)| *h).max()?;
        let best: Vec<&RootVec> = pool
            .iter()
            .filter(|(_, h)| *h == top)
            .map(|(r, _)| r)
            .collect();
        (best.len() == 1).then(|| best[0].clone())
    };
    let all: Vec<&(RootVec, Q)> = roots.iter().collect();
    let short_norm = roots.iter().map(|(r, _)| r.norm().abs()).min()?;
    let short: Vec<&(RootVec, Q)> = roots
        .iter()
        .filter(|(r, _)| r.norm().abs() == short_norm)
        .collect();
    match kind {
        AffineKind::Untwisted => highest(&all),
        AffineKind::TwistedA2p => highest(&short).map(|r| r.scaled(2)),
        AffineKind::Twisted => highest(&short),
    }
}

/// Coefficients of θ in the finite base, in `finite_base` order.
pub fn theta_coefficients(sub: &Subsystem, base: &BaseData) -> Option<Vec<Q>> {
    let mut c = expand(sub, &base.affine_base, &base.theta)?;
    let last = c.pop()?;
    (last == Q::from(0)).then_some(c)
}

/// Base of `ℜ_i` for the canonical positive system.
pub fn base_and_theta(ty: &AlgebraType, i: usize) -> Result<BaseData> {
    affine_base_with(&subsystem_data(ty, i), &canonical_positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, k: usize, l: usize) -> AlgebraType {
        AlgebraType::new(f, k, l).unwrap()
    }

    #[test]
    fn d_second_base() {
        for l in 1..=3 {
            let t = ty(Family::D, 1, l);
            let b = base_and_theta(&t, 2).unwrap();
            assert_eq!(b.s, 2);
            assert_eq!(b.kind, AffineKind::Untwisted);
            assert_eq!(b.theta, t.del(0, 2));
            let mut want: Vec<RootVec> = (0..l - 1)
                .map(|j| &t.del(j, 1) - &t.del(j + 1, 1))
                .collect();
            want.push(t.del(l - 1, 2));
            want.sort_by(|a, b| b.cmp(a));
            assert_eq!(b.finite_base, want);
        }
    }

    #[test]
    fn s_values() {
        let s = |f, k, l, i| subsystem_data(&ty(f, k, l), i).s;
        assert_eq!(s(Family::AEvenEven, 2, 2, 1), 2);
        assert_eq!(s(Family::AEvenEven, 2, 2, 2), 2);
        assert_eq!(s(Family::AEvenOdd, 2, 2, 2), 1);
        assert_eq!(s(Family::AEvenOdd, 2, 1, 2), 2);
        assert_eq!(s(Family::AOddOdd, 1, 2, 1), 2);
        assert_eq!(s(Family::AOddOdd, 2, 2, 1), 1);
        assert_eq!(s(Family::D, 2, 2, 1), 1);
        assert_eq!(s(Family::D, 2, 2, 2), 2);
    }

    #[test]
    fn a2p_theta_is_twice_short() {
        let t = ty(Family::AEvenEven, 2, 1);
        let b = base_and_theta(&t, 1).unwrap();
        assert_eq!(b.kind, AffineKind::TwistedA2p);
        assert_eq!(b.theta.scaled(1).e.iter().filter(|c| **c != 0).count(), 1);
        assert_eq!(b.theta.norm().abs(), 4);
    }

    #[test]
    fn four_level_string() {
        let t = ty(Family::AEvenEven, 1, 1);
        let v = subsystem(&t, 1, Window::new(8));
        for e in &v.entries {
            if shape_of(&e.root) == Some(Shape::TwoE) {
                assert_eq!(e.root.d.rem_euclid(4), 2);
            }
        }
        assert!(v.find(&RootVec::new(2, vec![2], vec![0])).is_some());
    }

    #[test]
    fn every_type_has_bases() {
        for f in Family::ALL {
            for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
                let Ok(t) = AlgebraType::new(f, k, l) else {
                    continue;
                };
                for i in 1..=2 {
                    let b = base_and_theta(&t, i).unwrap_or_else(|e| panic!("{t} i={i}: {e}"));
                    let sub = subsystem_data(&t, i);
                    assert!(sub.contains(&b.affine_base[b.affine_base.len() - 1]));
                    assert_eq!(b.affine_base.len(), sub.rank() + 1);
                }
            }
        }
    }
}
