//! Root systems of the four twisted families: membership, parity,
//! enumeration over δ-windows, the quotient by `ℤδ`, extension sets and
//! the even subsystems `ℜ_1`, `ℜ_2` with their affine bases.

mod affine;
pub mod checks;
pub mod tables;

pub use affine::{
    affine_base_with, base_and_theta, canonical_positive, subsystem, subsystem_data,
    theta_coefficients, AffineKind, BaseData, Subsystem,
};

use crate::error::{Error, Result};
use crate::lattice::{classify, RootClass, RootSet, RootVec};
use crate::par;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `A(2k, 2l-1)^(2)`
    AEvenOdd,
    /// `A(2k-1, 2l-1)^(2)`, `(k,l) != (1,1)`
    AOddOdd,
    /// `A(2k, 2l)^(4)`
    AEvenEven,
    /// `D(k+1, l)^(2)`
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::AEvenOdd,
        Family::AOddOdd,
        Family::AEvenEven,
        Family::D,
    ];

    /// Order of the twisting automorphism.
    pub fn twist(self) -> i64 {
        match self {
            Family::AEvenEven => 4,
            _ => 2,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Family::AEvenOdd => "A-2k-2l-1-tw2",
            Family::AOddOdd => "A-2k-1-2l-1-tw2",
            Family::AEvenEven => "A-2k-2l-tw4",
            Family::D => "D-tw2",
        }
    }

    pub fn from_cli_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.cli_name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraType {
    pub family: Family,
    pub k: usize,
    pub l: usize,
}

impl AlgebraType {
    pub fn new(family: Family, k: usize, l: usize) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidType(format!(
                "k and l must be positive, got ({k},{l})"
            )));
        }
        if family == Family::AOddOdd && (k, l) == (1, 1) {
            return Err(Error::InvalidType(
                "A(2k-1,2l-1)^(2) needs (k,l) != (1,1)".into(),
            ));
        }
        Ok(AlgebraType { family, k, l })
    }

    pub fn zero(&self) -> RootVec {
        RootVec::zero(self.k, self.l)
    }

    pub fn delta(&self, m: i64) -> RootVec {
        RootVec::delta(self.k, self.l, m)
    }

    pub fn eps(&self, i: usize, c: i64) -> RootVec {
        RootVec::eps(self.k, self.l, i, c)
    }

    pub fn del(&self, j: usize, c: i64) -> RootVec {
        RootVec::del(self.k, self.l, j, c)
    }

    fn fits(&self, x: &RootVec) -> bool {
        x.ambient() == (self.k, self.l)
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, l) = (self.k, self.l);
        match self.family {
            Family::AEvenOdd => write!(f, "A({},{})^(2)", 2 * k, 2 * l - 1),
            Family::AOddOdd => write!(f, "A({},{})^(2)", 2 * k - 1, 2 * l - 1),
            Family::AEvenEven => write!(f, "A({},{})^(4)", 2 * k, 2 * l),
            Family::D => write!(f, "D({},{})^(2)", k + 1, l),
        }
    }
}

/// Bound `|d| ≤ n` on the δ-coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub n: i64,
}

impl Window {
    pub fn new(n: i64) -> Self {
        assert!(n >= 0, "window must be nonnegative");
        Window { n }
    }

    pub fn holds(&self, x: &RootVec) -> bool {
        x.d.abs() <= self.n
    }

    pub fn widened(&self, margin: i64) -> Window {
        Window { n: self.n + margin }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
    Imaginary,
}

impl Parity {
    pub fn tag(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Imaginary => "im",
        }
    }
}

/// `(rℤ + k0)δ`, or nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Progression {
    Empty,
    Arith { r: i64, k0: i64 },
}

impl Progression {
    pub const fn arith(r: i64, k0: i64) -> Self {
        Progression::Arith { r, k0 }
    }

    pub fn contains(&self, d: i64) -> bool {
        match *self {
            Progression::Empty => false,
            Progression::Arith { r, k0 } => (d - k0).rem_euclid(r) == 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Progression::Empty)
    }

    pub fn step(&self) -> Option<i64> {
        match *self {
            Progression::Empty => None,
            Progression::Arith { r, .. } => Some(r),
        }
    }

    /// Smallest member `≥ x`.
    pub fn first_at_least(&self, x: i64) -> Option<i64> {
        match *self {
            Progression::Empty => None,
            Progression::Arith { r, k0 } => Some(x + (k0 - x).rem_euclid(r)),
        }
    }

    /// Members in `[lo, hi]`.
    pub fn levels(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut out = vec![];
        if let Some(mut d) = self.first_at_least(lo) {
            let r = self.step().unwrap();
            while d <= hi {
                out.push(d);
                d += r;
            }
        }
        out
    }

    /// Recover the progression from membership flags on the contiguous
    /// window starting at `lo`. The window must hold at least two periods
    /// of every candidate step.
    pub fn certify(lo: i64, flags: &[bool]) -> Result<Progression> {
        if !flags.iter().any(|&b| b) {
            return Ok(Progression::Empty);
        }
        let len = flags.len() as i64;
        for r in 1..=len / 2 {
            for k0 in 0..r {
                let p = Progression::arith(r, k0);
                if flags
                    .iter()
                    .enumerate()
                    .all(|(i, &b)| p.contains(lo + i as i64) == b)
                {
                    return Ok(p);
                }
            }
        }
        Err(Error::NotAProgression)
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Progression::Empty => f.write_str("∅"),
            Progression::Arith { r: 1, .. } => f.write_str("ℤδ"),
            Progression::Arith { r, k0: 0 } => write!(f, "{r}ℤδ"),
            Progression::Arith { r, k0 } => write!(f, "({r}ℤ+{k0})δ"),
        }
    }
}

/// Support pattern of the finite part of a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Zero,
    /// `±ε_i`
    E,
    /// `±2ε_i`
    TwoE,
    /// `±δ_j`
    D,
    /// `±2δ_j`
    TwoD,
    /// `±ε_i±ε_r`, `i ≠ r`
    EE,
    /// `±δ_j±δ_s`, `j ≠ s`
    DD,
    /// `±ε_i±δ_j`
    ED,
}

impl Shape {
    pub const ALL: [Shape; 8] = [
        Shape::Zero,
        Shape::E,
        Shape::TwoE,
        Shape::D,
        Shape::TwoD,
        Shape::EE,
        Shape::DD,
        Shape::ED,
    ];
}

pub fn shape_of(x: &RootVec) -> Option<Shape> {
    let ne: Vec<i64> = x.e.iter().filter(|c| **c != 0).map(|c| c.abs()).collect();
    let nf: Vec<i64> = x.f.iter().filter(|c| **c != 0).map(|c| c.abs()).collect();
    match (ne.as_slice(), nf.as_slice()) {
        ([], []) => Some(Shape::Zero),
        ([1], []) => Some(Shape::E),
        ([2], []) => Some(Shape::TwoE),
        ([], [1]) => Some(Shape::D),
        ([], [2]) => Some(Shape::TwoD),
        ([1, 1], []) => Some(Shape::EE),
        ([], [1, 1]) => Some(Shape::DD),
        ([1], [1]) => Some(Shape::ED),
        _ => None,
    }
}

/// All level-0 vectors of a given shape.
pub fn shape_vectors(k: usize, l: usize, shape: Shape) -> Vec<RootVec> {
    let mut out = vec![];
    let signs = [1i64, -1];
    match shape {
        Shape::Zero => out.push(RootVec::zero(k, l)),
        Shape::E | Shape::TwoE => {
            let c = if shape == Shape::E { 1 } else { 2 };
            for i in 0..k {
                for s in signs {
                    out.push(RootVec::eps(k, l, i, s * c));
                }
            }
        }
        Shape::D | Shape::TwoD => {
            let c = if shape == Shape::D { 1 } else { 2 };
            for j in 0..l {
                for s in signs {
                    out.push(RootVec::del(k, l, j, s * c));
                }
            }
        }
        Shape::EE => {
            for i in 0..k {
                for r in i + 1..k {
                    for s in signs {
                        for t in signs {
                            let mut v = RootVec::zero(k, l);
                            v.e[i] = s;
                            v.e[r] = t;
                            out.push(v);
                        }
                    }
                }
            }
        }
        Shape::DD => {
            for j in 0..l {
                for q in j + 1..l {
                    for s in signs {
                        for t in signs {
                            let mut v = RootVec::zero(k, l);
                            v.f[j] = s;
                            v.f[q] = t;
                            out.push(v);
                        }
                    }
                }
            }
        }
        Shape::ED => {
            for i in 0..k {
                for j in 0..l {
                    for s in signs {
                        for t in signs {
                            let mut v = RootVec::zero(k, l);
                            v.e[i] = s;
                            v.f[j] = t;
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Levels of the δ-string through a shape in `R`.
pub fn root_levels(ty: &AlgebraType, shape: Shape) -> Progression {
    tables::lookup(tables::root_rows(ty.family), shape)
}

/// Levels of the δ-string through a shape in `R_0`.
pub fn even_levels(ty: &AlgebraType, shape: Shape) -> Progression {
    tables::lookup(tables::even_rows(ty.family), shape)
}

pub fn contains(ty: &AlgebraType, x: &RootVec) -> bool {
    ty.fits(x)
        && shape_of(x)
            .map(|s| root_levels(ty, s).contains(x.d))
            .unwrap_or(false)
}

pub fn parity(ty: &AlgebraType, x: &RootVec) -> Result<Parity> {
    if !contains(ty, x) {
        return Err(Error::NotARoot(x.clone()));
    }
    let shape = shape_of(x).expect("roots have a shape");
    if shape == Shape::Zero {
        return Ok(Parity::Imaginary);
    }
    Ok(if even_levels(ty, shape).contains(x.d) {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// Classification that reads the tag off the shape and norm. Agrees with
/// [`classify`] on roots; used on hot paths.
pub fn class_of(x: &RootVec) -> RootClass {
    if x.is_zero() {
        RootClass::Zero
    } else if x.is_in_z_delta() {
        RootClass::Imaginary
    } else if x.norm() != 0 {
        RootClass::Real
    } else {
        RootClass::Nonsingular
    }
}

/// Nonzero level-0 gradients `α̇` with `(α̇ + ℤδ) ∩ R ≠ ∅`.
pub fn directions(ty: &AlgebraType) -> Vec<RootVec> {
    let mut out: Vec<RootVec> = Shape::ALL
        .into_iter()
        .filter(|s| *s != Shape::Zero && !root_levels(ty, *s).is_empty())
        .flat_map(|s| shape_vectors(ty.k, ty.l, s))
        .collect();
    out.sort();
    out
}

/// All of `R`, as a [`RootSet`] for [`classify`].
#[derive(Debug, Clone)]
pub struct TypeRoots {
    pub ty: AlgebraType,
    spanning: Vec<RootVec>,
}

impl TypeRoots {
    pub fn new(ty: AlgebraType) -> Self {
        let mut spanning: Vec<RootVec> = directions(&ty)
            .into_iter()
            .map(|g| {
                let p = root_levels(&ty, shape_of(&g).unwrap());
                g.at_level(p.first_at_least(0).unwrap())
            })
            .collect();
        spanning.push(ty.delta(1));
        TypeRoots { ty, spanning }
    }
}

impl RootSet for TypeRoots {
    fn has(&self, x: &RootVec) -> bool {
        contains(&self.ty, x)
    }
    fn spanning(&self) -> &[RootVec] {
        &self.spanning
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: RootVec,
    pub class: RootClass,
    pub parity: Parity,
}

/// A window of a root system, sorted by `(d, e, f)`.
#[derive(Debug, Clone)]
pub struct RootSystemView {
    pub ty: AlgebraType,
    pub window: Window,
    pub entries: Vec<RootEntry>,
    spanning: Vec<RootVec>,
}

impl RootSystemView {
    pub(crate) fn from_entries(
        ty: AlgebraType,
        window: Window,
        mut entries: Vec<RootEntry>,
    ) -> Self {
        entries.sort_by(|a, b| a.root.cmp(&b.root));
        entries.dedup_by(|a, b| a.root == b.root);
        let spanning = TypeRoots::new(ty).spanning;
        RootSystemView {
            ty,
            window,
            entries,
            spanning,
        }
    }

    pub fn find(&self, x: &RootVec) -> Option<&RootEntry> {
        self.entries
            .binary_search_by(|e| e.root.cmp(x))
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn roots(&self) -> impl Iterator<Item = &RootVec> {
        self.entries.iter().map(|e| &e.root)
    }

    pub fn real(&self) -> Vec<RootVec> {
        self.entries
            .iter()
            .filter(|e| e.class == RootClass::Real)
            .map(|e| e.root.clone())
            .collect()
    }

    pub fn with_class(&self, class: RootClass) -> Vec<RootVec> {
        self.entries
            .iter()
            .filter(|e| e.class == class)
            .map(|e| e.root.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl RootSet for RootSystemView {
    fn has(&self, x: &RootVec) -> bool {
        self.find(x).is_some()
    }
    fn spanning(&self) -> &[RootVec] {
        &self.spanning
    }
}

/// Every root with `|d| ≤ N`, with class and parity.
pub fn enumerate(ty: &AlgebraType, w: Window) -> RootSystemView {
    let full = TypeRoots::new(*ty);
    let mut dirs = directions(ty);
    dirs.push(ty.zero());
    let entries = par::flat_map(&dirs, |g| {
        let shape = shape_of(g).unwrap();
        root_levels(ty, shape)
            .levels(-w.n, w.n)
            .into_iter()
            .map(|d| {
                let root = g.at_level(d);
                let class = classify(&root, &full).expect("enumerated vector is a root");
                let parity = parity(ty, &root).expect("enumerated vector is a root");
                RootEntry {
                    root,
                    class,
                    parity,
                }
            })
            .collect()
    });
    RootSystemView::from_entries(*ty, w, entries)
}

/// Half-width of the internal scan used to recover progressions.
const SCAN: i64 = 16;

/// `S_α̇` and `T_α̇` for a level-0 direction.
pub fn extension_sets(ty: &AlgebraType, adot: &RootVec) -> Result<(Progression, Progression)> {
    if !ty.fits(adot) || adot.d != 0 {
        return Err(Error::NotADirection(adot.clone()));
    }
    match shape_of(adot) {
        None | Some(Shape::Zero) => return Err(Error::NotADirection(adot.clone())),
        Some(_) => {}
    }
    let levels: Vec<i64> = (-SCAN..=SCAN).collect();
    let in_r: Vec<bool> = levels
        .iter()
        .map(|&d| contains(ty, &adot.at_level(d)))
        .collect();
    let in_r0: Vec<bool> = levels
        .iter()
        .map(|&d| {
            parity(ty, &adot.at_level(d))
                .map(|p| p == Parity::Even)
                .unwrap_or(false)
        })
        .collect();
    Ok((
        Progression::certify(-SCAN, &in_r)?,
        Progression::certify(-SCAN, &in_r0)?,
    ))
}

/// Least `r > 0` with `R_0 + rℤδ ⊆ R_0` and `R_1 + rℤδ ⊆ R_1`, by scanning
/// every direction over a window of several periods.
pub fn min_period(ty: &AlgebraType) -> i64 {
    let dirs = directions(ty);
    let label = |x: &RootVec| parity(ty, x).ok();
    (1..=8)
        .find(|&r| {
            dirs.iter().all(|g| {
                (-SCAN..=SCAN - r).all(|d| label(&g.at_level(d)) == label(&g.at_level(d + r)))
            })
        })
        .expect("a period at most 8")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthClass {
    Short,
    Long,
    ExtraLong,
}

/// `R` modulo `ℤδ`.
#[derive(Debug, Clone)]
pub struct DotQuotient {
    /// `Ṙ ∖ {0}`
    pub all: Vec<RootVec>,
    /// `Ṙ_re^×`
    pub real: Vec<RootVec>,
    /// `Ṙ_ns^×`
    pub ns: Vec<RootVec>,
    /// Real part supported on the ε coordinates.
    pub side1: Vec<RootVec>,
    /// Real part supported on the δ_j coordinates.
    pub side2: Vec<RootVec>,
    pub length: BTreeMap<RootVec, LengthClass>,
}

impl DotQuotient {
    pub fn of_length(&self, c: LengthClass) -> Vec<RootVec> {
        self.length
            .iter()
            .filter(|(_, v)| **v == c)
            .map(|(k, _)| k.clone())
            .collect()
    }
}

fn length_classes(side: &[RootVec], out: &mut BTreeMap<RootVec, LengthClass>) {
    if side.is_empty() {
        return;
    }
    let mut norms: Vec<i64> = side.iter().map(|v| v.norm().abs()).collect();
    norms.sort();
    norms.dedup();
    let nonreduced = side.iter().any(|v| side.contains(&v.scaled(2)));
    for v in side {
        let n = v.norm().abs();
        let c = if n == norms[0] {
            LengthClass::Short
        } else if nonreduced && n == *norms.last().unwrap() {
            LengthClass::ExtraLong
        } else {
            LengthClass::Long
        };
        out.insert(v.clone(), c);
    }
}

pub fn dot_quotient(ty: &AlgebraType) -> DotQuotient {
    let all = directions(ty);
    let real: Vec<RootVec> = all.iter().filter(|v| v.norm() != 0).cloned().collect();
    let ns: Vec<RootVec> = all.iter().filter(|v| v.norm() == 0).cloned().collect();
    let side1: Vec<RootVec> = real
        .iter()
        .filter(|v| v.f.iter().all(|&c| c == 0))
        .cloned()
        .collect();
    let side2: Vec<RootVec> = real
        .iter()
        .filter(|v| v.e.iter().all(|&c| c == 0))
        .cloned()
        .collect();
    let mut length = BTreeMap::new();
    length_classes(&side1, &mut length);
    length_classes(&side2, &mut length);
    DotQuotient {
        all,
        real,
        ns,
        side1,
        side2,
        length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, k: usize, l: usize) -> AlgebraType {
        AlgebraType::new(f, k, l).unwrap()
    }

    #[test]
    fn membership_examples() {
        let a = ty(Family::AEvenOdd, 1, 1);
        assert!(!contains(&a, &RootVec::new(2, vec![2], vec![0])));
        assert!(contains(&a, &RootVec::new(3, vec![2], vec![0])));
        let d = ty(Family::D, 1, 1);
        assert!(!contains(&d, &RootVec::new(1, vec![1], vec![1])));
        assert!(contains(&d, &RootVec::new(2, vec![1], vec![1])));
        let a4 = ty(Family::AEvenEven, 1, 1);
        assert!(contains(&a4, &RootVec::new(5, vec![0], vec![1])));
    }

    #[test]
    fn parity_examples() {
        let a4 = ty(Family::AEvenEven, 1, 1);
        assert_eq!(
            parity(&a4, &RootVec::new(5, vec![0], vec![1])).unwrap(),
            Parity::Even
        );
        assert_eq!(
            parity(&a4, &RootVec::new(4, vec![0], vec![1])).unwrap(),
            Parity::Odd
        );
        assert_eq!(parity(&a4, &a4.delta(3)).unwrap(), Parity::Imaginary);
        assert!(parity(&a4, &RootVec::new(1, vec![2], vec![0])).is_err());
    }

    #[test]
    fn small_enumeration() {
        let a = ty(Family::AEvenOdd, 1, 1);
        let v = enumerate(&a, Window::new(0));
        assert_eq!(v.len(), 11);
        assert_eq!(v.entries.iter().filter(|e| !e.root.is_zero()).count(), 10);
        let v3 = enumerate(&a, Window::new(3));
        assert!(v3.find(&RootVec::new(3, vec![2], vec![0])).is_some());
        assert!(v3.find(&RootVec::new(3, vec![-2], vec![0])).is_some());
    }

    #[test]
    fn classify_examples() {
        let a = ty(Family::AEvenOdd, 2, 1);
        let full = TypeRoots::new(a);
        assert_eq!(classify(&a.delta(1), &full).unwrap(), RootClass::Imaginary);
        assert_eq!(
            classify(&RootVec::new(3, vec![1, 0], vec![1]), &full).unwrap(),
            RootClass::Nonsingular
        );
        assert_eq!(
            classify(&RootVec::new(0, vec![1, -1], vec![0]), &full).unwrap(),
            RootClass::Real
        );
        assert_eq!(classify(&a.zero(), &full).unwrap(), RootClass::Zero);
        assert!(classify(&RootVec::new(0, vec![3, 0], vec![0]), &full).is_err());
    }

    #[test]
    fn extension_examples() {
        let a4 = ty(Family::AEvenEven, 1, 1);
        assert_eq!(
            extension_sets(&a4, &a4.del(0, 1)).unwrap(),
            (Progression::arith(1, 0), Progression::arith(2, 1))
        );
        let d = ty(Family::D, 1, 1);
        assert_eq!(
            extension_sets(&d, &d.eps(0, 2)).unwrap().0,
            Progression::Empty
        );
        let a2 = ty(Family::AOddOdd, 2, 1);
        assert_eq!(
            extension_sets(&a2, &a2.eps(0, 1)).unwrap().0,
            Progression::Empty
        );
        assert!(extension_sets(&a2, &a2.eps(0, 3)).is_err());
        assert!(extension_sets(&a2, &a2.zero()).is_err());
    }

    #[test]
    fn periods() {
        assert_eq!(min_period(&ty(Family::AEvenEven, 1, 1)), 4);
        assert_eq!(min_period(&ty(Family::AEvenOdd, 1, 1)), 2);
        assert_eq!(min_period(&ty(Family::AOddOdd, 2, 1)), 2);
        assert_eq!(min_period(&ty(Family::D, 1, 1)), 2);
    }

    #[test]
    fn quotient_examples() {
        let a = ty(Family::AOddOdd, 2, 2);
        let q = dot_quotient(&a);
        assert!(!q.all.contains(&a.eps(0, 1)));
        for v in &q.ns {
            assert_eq!(shape_of(v), Some(Shape::ED));
        }
        assert_eq!(q.ns.len(), 16);
        for v in &q.real {
            assert!(q.side1.contains(v) ^ q.side2.contains(v));
        }
    }

    #[test]
    fn progression_certify() {
        let flags: Vec<bool> = (-8..=8).map(|d: i64| d.rem_euclid(4) == 2).collect();
        assert_eq!(
            Progression::certify(-8, &flags).unwrap(),
            Progression::arith(4, 2)
        );
        assert_eq!(
            Progression::certify(0, &[false; 6]).unwrap(),
            Progression::Empty
        );
        assert!(Progression::certify(0, &[true, true, false, true, false, false]).is_err());
    }
}
